#include <catch_amalgamated.hpp>

#include <cmath>

#include "nearfield/errors.hpp"
#include "nearfield/interactions.hpp"
#include "nearfield/numerics.hpp"

using namespace nearfield;
using namespace nearfield::interactions;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const AtomModel atom{1.0, 0.01, 1.0};
}

TEST_CASE("atom model validation", "[interactions]") {
  CHECK_THROWS_AS((AtomModel{1.0, 0.2, 1.0}).validate(), DomainError);
  CHECK_THROWS_AS((AtomModel{-1.0, 0.01, 1.0}).validate(), DomainError);
  const auto a = AtomModel::from_oscillator_strength(2.0, 0.01, 1.0);
  CHECK_THAT(a.dipole * a.dipole, WithinRel(0.25, 1e-15));
}

TEST_CASE("two-level polarizability", "[interactions]") {
  CHECK_THAT(polarizability({1.0, 1e-12, 1.0}, 0.0).real(), WithinRel(2.0, 1e-12));
  const complex res = polarizability(atom, atom.omega0);
  CHECK_THAT(res.imag(), WithinRel(1.0 / atom.linewidth, 1e-3));
  for (double w : {0.3, 0.99, 2.5}) {
    CHECK(std::abs(polarizability(atom, -w) - polarizability(atom, w)) < 1e-14);
  }
  // real on the imaginary axis in the lossless limit
  CHECK(std::abs(polarizability({1.0, 1e-12, 1.0}, complex(0, 0.7)).imag()) < 1e-11);
}

TEST_CASE("causal propagator", "[interactions]") {
  CHECK_THAT(std::abs(causal_propagator(3.0, 2.0)), WithinRel(1.0 / (8 * pi), 1e-15));
  CHECK(causal_propagator(-3.0, 2.0) == causal_propagator(3.0, 2.0));
  CHECK_THROWS_AS(causal_propagator(1.0, 0.0), DomainError);
}

TEST_CASE("nonresonant potential", "[interactions]") {
  const AtomModel other{1.0, 0.005, 0.7};
  const double u12 = nonresonant_potential(atom, other, 5e-3).value;
  const double u21 = nonresonant_potential(other, atom, 5e-3).value;
  CHECK(u12 < 0.0);
  CHECK_THAT(u12, WithinRel(u21, 1e-12));
  AtomModel big1 = atom, big2 = other;
  big1.dipole *= 2;
  big2.dipole *= 2;
  CHECK_THAT(nonresonant_potential(big1, big2, 5e-3).value, WithinRel(16.0 * u12, 1e-12));
  CHECK_FALSE(nonresonant_potential(atom, other, 5e-3).regime_warning);
  CHECK(nonresonant_potential(atom, other, 1.0).regime_warning);
}

TEST_CASE("static limit of the nonresonant potential", "[interactions][oracle]") {
  // for u R << 1 over the atomic band the integral is int a(iu)^2 du
  const AtomModel a{1.0, 1e-12, 1.0};
  const double R = 1e-4;
  auto f = [&](double u) { return std::norm(polarizability(a, complex(0.0, u))); };
  // a(iu) = 2 w0 / (w0^2 + u^2); int_0^inf 4/(1+u^2)^2 du = pi
  CHECK_THAT(numerics::integrate(f, 0.0, INFINITY, {}).value, WithinRel(pi, 1e-10));
  const double expected = -(1.0 / (2 * pi)) * 6.0 / (16 * pi * pi * std::pow(R, 6)) * pi;
  CHECK_THAT(nonresonant_potential(a, a, R).value, WithinRel(expected, 1e-3));
}

TEST_CASE("nonresonant potential is real in the lossless limit", "[interactions]") {
  const AtomModel a{1.0, 1e-12, 1.0};
  const auto u = nonresonant_potential(a, a, 3e-3);
  CHECK(std::abs(u.imaginary_residue) < 1e-10 * std::abs(u.value));
  const auto full = nonresonant_potential(a, a, 3e-3, PropagatorBlocks::full);
  CHECK(std::isfinite(full.value));
}

TEST_CASE("resonant potential", "[interactions]") {
  const double u = resonant_potential(atom, 5e-3).value;
  AtomModel twice = atom;
  twice.dipole *= std::sqrt(2.0);
  CHECK_THAT(resonant_potential(twice, 5e-3).value, WithinRel(2.0 * u, 1e-12));
  AtomModel flipped = atom;
  flipped.dipole = -atom.dipole;
  CHECK(resonant_potential(flipped, 5e-3).value == u);
  const auto literal = resonant_potential(atom, 5e-3, ResonantContraction::real_part_of_alpha);
  CHECK(std::isfinite(literal.value));
  const AtomModel lossless{1.0, 1e-12, 1.0};
  const auto r = resonant_potential(lossless, 5e-3);
  CHECK(std::abs(r.imaginary_residue) < 1e-10 * std::abs(r.value));
}

TEST_CASE("near-zone power laws", "[interactions]") {
  std::vector<std::pair<double, double>> nr, rs, w;
  for (int i = 0; i < 8; ++i) {
    const double R = std::pow(10.0, -3.0 + i / 7.0);
    nr.emplace_back(R, std::abs(nonresonant_potential(atom, atom, R).value));
    rs.emplace_back(R, std::abs(resonant_potential(atom, R).value));
    w.emplace_back(R, transfer_probability(atom, atom, R).rate);
  }
  CHECK_THAT(numerics::fit_power_law(nr).slope, WithinAbs(-6.0, 0.02));
  CHECK_THAT(numerics::fit_power_law(rs).slope, WithinAbs(-3.0, 0.02));
  CHECK_THAT(numerics::fit_power_law(w).slope, WithinAbs(-6.0, 0.02));
}

TEST_CASE("scattering duration", "[interactions]") {
  CHECK_THAT(scattering_duration(atom, atom.omega0), WithinRel(2.0 / atom.linewidth, 1e-15));
  auto f = [](double w) { return scattering_duration(atom, w); };
  const std::array<double, 5> pts = {-INFINITY, 0.9, 1.0, 1.1, INFINITY};
  CHECK_THAT(numerics::integrate_pieces(f, pts, {}).value, WithinRel(pi, 1e-10));
  const double half = 0.5 * scattering_duration(atom, atom.omega0);
  CHECK_THAT(scattering_duration(atom, atom.omega0 + atom.linewidth / 2), WithinRel(half, 1e-12));
  CHECK_THAT(scattering_duration(atom, atom.omega0 - atom.linewidth / 2), WithinRel(half, 1e-12));
}

TEST_CASE("excitation transfer", "[interactions]") {
  const auto t = transfer_probability(atom, atom, 4e-3);
  const auto at_r0 = transfer_probability(atom, atom, t.forster_radius);
  CHECK_THAT(at_r0.rate * atom.linewidth, WithinRel(1.0, 1e-10));
  AtomModel strong = atom;
  strong.dipole *= 2.0;  // |d|^2 x 4
  CHECK_THAT(transfer_probability(strong, atom, 4e-3).forster_radius / t.forster_radius,
             WithinRel(std::pow(4.0, 1.0 / 6.0), 1e-12));
  const auto exact = transfer_probability(atom, atom, 4e-3, TauTreatment::exact_delta);
  CHECK_THAT(t.rate, WithinRel(exact.rate, 1e-9));
  CHECK_THROWS_AS(transfer_probability(atom, AtomModel{2.0, 0.01, 1.0}, 1e-3), DomainError);
}

TEST_CASE("transfer split", "[interactions]") {
  const auto s = transfer_split(1.0, 2.0);
  CHECK_THAT(s.superluminal, WithinRel(0.25, 1e-15));
  CHECK_THAT(s.subluminal + s.superluminal, WithinRel(1.0, 1e-15));
  CHECK(transfer_split(1.0, 1.0 + 1e-9).superluminal > 0.999999);
}
