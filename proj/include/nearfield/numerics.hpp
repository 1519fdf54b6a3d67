#pragma once

#include "nearfield/numerics/fourier.hpp"
#include "nearfield/numerics/pairing.hpp"
#include "nearfield/numerics/power_law.hpp"
#include "nearfield/numerics/quadrature.hpp"
#include "nearfield/numerics/special_functions.hpp"
