"""Exact enumeration of Dyck paths with flaws.

Paths may dip below the x-axis; an up step starting at negative height
is a flaw.  The package enumerates paths, tabulates the peak, valley,
double-ascent and double-descent statistics per flaw class, evaluates
the matching closed forms and recurrence, applies the three
flaw-transport bijections, and verifies the generating-function
identities with an exact truncated-series kernel.  Everything is
cross-checked against brute-force enumeration.
"""

from .bijections import (
    BijectionDomainError,
    CfDecomposition,
    NoFlawError,
    NoPositiveExcursionError,
    cf_decompose_forward,
    cf_step,
    cf_step_inverse,
    complement,
    reverse_complement,
)
from .enumeration import CountTable, StatKind, count_table, enumerate_paths, table_polynomial
from .formulas import (
    NonIntegralError,
    catalan,
    central_peak,
    narayana_ascent,
    narayana_peak,
    one_flaw_peak,
    peak_pair_sum,
    recurrence_peak_poly,
)
from .paths import (
    InvalidCharacterError,
    InvalidPathError,
    OddLengthError,
    Path,
    StatVector,
    Step,
    UnbalancedError,
    height_profile,
    is_catalan,
    parse_path,
    render_path,
    stats,
)
from .polynomials import IntPolynomial, format_poly
from .series import (
    IdentityReport,
    SeriesDomainError,
    XYPoly,
    ZSeries,
    catalan_double_ascent_series,
    catalan_peak_series,
    catalan_valley_series,
    flawed_double_ascent_series,
    flawed_peak_series,
    run_identity_suite,
)

__all__ = [
    "BijectionDomainError",
    "CfDecomposition",
    "CountTable",
    "IdentityReport",
    "IntPolynomial",
    "InvalidCharacterError",
    "InvalidPathError",
    "NoFlawError",
    "NonIntegralError",
    "NoPositiveExcursionError",
    "OddLengthError",
    "Path",
    "SeriesDomainError",
    "StatKind",
    "StatVector",
    "Step",
    "UnbalancedError",
    "XYPoly",
    "ZSeries",
    "catalan",
    "catalan_double_ascent_series",
    "catalan_peak_series",
    "catalan_valley_series",
    "central_peak",
    "cf_decompose_forward",
    "cf_step",
    "cf_step_inverse",
    "complement",
    "count_table",
    "enumerate_paths",
    "flawed_double_ascent_series",
    "flawed_peak_series",
    "format_poly",
    "height_profile",
    "is_catalan",
    "narayana_ascent",
    "narayana_peak",
    "one_flaw_peak",
    "parse_path",
    "peak_pair_sum",
    "recurrence_peak_poly",
    "render_path",
    "reverse_complement",
    "run_identity_suite",
    "stats",
    "table_polynomial",
]

__version__ = "0.1.0"
