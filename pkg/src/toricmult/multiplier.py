"""Multiplier ideals of monomial ideals on Q-Gorenstein toric rings.

J(a) is generated by the monomials whose exponent, shifted by the canonical
point u0, lands in the interior of the Newton polyhedron of a. The shift u0
pairs to exactly 1 with every sigma ray, integrally so on Gorenstein rings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotQGorenstein, ZeroIdeal
from .geometry import MembershipReport, NewtonPolyhedron, RatPoint, membership
from .ideals import MonomialIdeal, newton_polyhedron, region_minimal_generators
from .linalg import vadd
from .rings import require_exponent


@dataclass(frozen=True)
class MultiplierResult:
    """Multiplier ideal together with the data that produced it."""

    ideal: MonomialIdeal
    shift: RatPoint
    region: NewtonPolyhedron


def _canonical_shift(a: MonomialIdeal) -> RatPoint:
    u0 = a.ring.canonical_shift()
    if u0 is None:
        raise NotQGorenstein("ring has no canonical point; multiplier ideals are undefined")
    return u0


def multiplier_ideal(a: MonomialIdeal) -> MultiplierResult:
    """The multiplier ideal J(a), by enumeration of the shifted interior region."""
    u0 = _canonical_shift(a)
    if a.is_zero:
        raise ZeroIdeal("the multiplier ideal of the zero ideal is undefined")
    poly = newton_polyhedron(a)
    gens = region_minimal_generators(a.ring, poly, shift=u0)
    return MultiplierResult(MonomialIdeal(a.ring, gens), u0, poly)


def multiplier_membership(a: MonomialIdeal, w: Sequence[int]) -> MembershipReport:
    """Does x^w belong to J(a)? Reports the exact pairing against every facet."""
    u0 = _canonical_shift(a)
    if a.is_zero:
        raise ZeroIdeal("the multiplier ideal of the zero ideal is undefined")
    p = require_exponent(a.ring, w)
    return membership(newton_polyhedron(a), vadd(p, u0), relative_interior=True)
