"""Annihilation properties of finitely presented and finite groups.

Presentations are strings such as ``"< a, b | a^2, b^2, [a,b] >"``; finite
groups are catalog specs such as ``"S 4"``, ``"CxC 2 4"`` or ``"prod(Q8, C 3)"``.
"""

import json

from . import _core
from ._core import FinannError

__all__ = [
    "FinannError",
    "analyze",
    "abelian_invariants",
    "smith_normal_form",
    "finite",
    "weight",
    "verify_group",
    "witness",
    "quotient",
    "scan",
    "catalog_names",
]


def analyze(presentation, hint="none", nfa=0):
    """Verdict on F-A (and n-F-A when ``nfa`` > 0) for a presentation."""
    return json.loads(_core.analyze(presentation, hint, nfa))


def abelian_invariants(presentation):
    """``{"free_rank": r, "factors": [d1, d2, ...]}`` of the abelianisation."""
    return json.loads(_core.abelian_invariants(presentation))


def smith_normal_form(rows):
    """Returns ``(d, u, v)`` as lists of int rows with ``u @ rows @ v == d``."""
    out = json.loads(_core.smith_normal_form([list(map(int, r)) for r in rows]))
    return tuple([[int(x) for x in row] for row in out[k]] for k in ("d", "u", "v"))


def finite(spec, n=1):
    """Covering report for a finite group: F-A for n = 1, n-F-A otherwise."""
    return json.loads(_core.finite(spec, n))


def weight(spec):
    """Minimal number of normal generators, by exhaustive search."""
    return json.loads(_core.weight(spec))


def verify_group(spec):
    """Cross-checks the finite characterisations on one group."""
    return json.loads(_core.verify_group(spec))


def witness(presentation, word, bound):
    """A verified finite quotient of order <= bound killing ``word``, or None."""
    return json.loads(_core.witness(presentation, word, bound))


def quotient(presentation, bound):
    """A nontrivial finite quotient of order <= bound, or None."""
    return json.loads(_core.quotient(presentation, bound))


def scan(presentation, length, bound):
    """Searches a witness for every freely reduced word up to ``length``."""
    return json.loads(_core.scan(presentation, length, bound))


def catalog_names(spec=""):
    """Group names produced by a catalog spec (the default catalog if empty)."""
    return list(_core.catalog_names(spec))
