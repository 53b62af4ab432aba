"""Varieties over finite fields: point counts, closed-point spectra and zeta series."""

from .ffield import ExtensionField, make_extension
from .parse import ParseError, parse_polynomial
from .variety import (
    BUILTINS, VarietySpec, builtin, count_points, count_sequence, cubic_curve, hypersurface,
    parse_variety_spec, rational_points, read_variety_spec,
)
from .wardlaw import euler_check_wardlaw, poly_quotient
from .zeta import (
    CYCLE_FUNCTIONS, VARIETY_IDENTITIES, ClosedPointSpectrum, CycleMonoid, InvalidCountsError,
    cycle_series, frobenius_orbit_count, spectrum, verify_variety, verify_variety_identity, zeta_series,
)
