"""Taylor complexes of monomial ideals in exact arithmetic.

Construction and minimality of the Taylor complex, linear-quotients
orderings, Betti numbers by a closed formula and an independent homology
oracle, structural recognizers (stable, squarefree stable, matroidal,
staircase and scaled-variables shapes) and exhaustive verification over
enumerated ideal families.
"""

from ._core import (
    EnvelopeError,
    Monomial,
    MonomialIdeal,
    ParseError,
    betti_formula,
    betti_oracle,
    binomial,
    check_names,
    check_order,
    classify,
    colon,
    divides,
    enumerate_ideals,
    find_order,
    gcd,
    betti_oracle_multigraded,
    has_linear_resolution,
    is_matroidal,
    is_minimal,
    is_squarefree_stable,
    is_stable,
    lcm,
    m_stats,
    make_staircase_ideal,
    minimalize,
    parse_ideal,
    run_checks,
    scaled_variables_form,
    staircase_form,
    taylor_summary,
)

__version__ = "0.1.0"

__all__ = [
    "EnvelopeError",
    "Monomial",
    "MonomialIdeal",
    "ParseError",
    "betti_formula",
    "betti_oracle",
    "binomial",
    "check_names",
    "check_order",
    "classify",
    "colon",
    "divides",
    "enumerate_ideals",
    "find_order",
    "gcd",
    "betti_oracle_multigraded",
    "has_linear_resolution",
    "is_matroidal",
    "is_minimal",
    "is_squarefree_stable",
    "is_stable",
    "lcm",
    "m_stats",
    "make_staircase_ideal",
    "minimalize",
    "parse_ideal",
    "run_checks",
    "scaled_variables_form",
    "staircase_form",
    "taylor_summary",
]
