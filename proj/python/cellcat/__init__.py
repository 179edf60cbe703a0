"""Temperley-Lieb diagrams, cellular category verification and sl2 canonical bases.

Diagrams and morphisms are the JSON objects used by the command-line tool, e.g.
``{"n": 2, "m": 2, "pairs": [[1, 2], [3, 4]]}``.  Commands that run checks return a
``Report`` with ``passed``, ``text`` and ``body`` (the JSON report as Python data).
"""

from ._core import (
    LaurentPoly,
    Report,
    Sl2Error,
    act,
    bar_involution,
    canonical_basis,
    coinvariants,
    compare_bases,
    compose,
    conventions,
    enumerate_diagrams,
    invariants,
    star,
    tensor,
    tl_dim,
    tl_gram,
    tl_relations,
    verify,
)

__all__ = [
    "LaurentPoly",
    "Report",
    "Sl2Error",
    "act",
    "bar_involution",
    "canonical_basis",
    "coinvariants",
    "compare_bases",
    "compose",
    "conventions",
    "enumerate_diagrams",
    "invariants",
    "star",
    "tensor",
    "tl_dim",
    "tl_gram",
    "tl_relations",
    "verify",
]
