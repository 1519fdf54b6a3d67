"""Near-field electrodynamics toolkit (Python bindings of the C++ core)."""

from ._core import (
    ConvergenceError,
    DomainError,
    NearfieldError,
    OverflowError,
    ValidationError,
    __version__,
    charge_field_mixed,
    charge_field_time,
    nonresonant_potential,
    propagator_mixed,
    quantities,
    render,
    scan,
    schwinger_dn,
    self_energy,
    superluminal_fraction,
    switching_freq,
    switching_time,
    targets,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
