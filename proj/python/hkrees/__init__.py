"""Exact Hilbert-Kunz computations over Z/p.

Thin Python surface over the C++ core: Groebner bases, local lengths,
Lucas-type Frobenius coefficients, and Hilbert-Kunz tables for the
Rees-quotient family R(I)_{a,b}.
"""

from ._core import (
    ConfigError,
    EngineError,
    gb_dump,
    hk_table,
    local_length,
    lucas_pair,
    normal_form,
    oracle_check,
    reduced_groebner,
    report_csv,
    report_json,
    second_coeff,
    __version__,
)

__all__ = [
    "ConfigError",
    "EngineError",
    "gb_dump",
    "hk_table",
    "local_length",
    "lucas_pair",
    "normal_form",
    "oracle_check",
    "reduced_groebner",
    "report_csv",
    "report_json",
    "second_coeff",
    "__version__",
]
