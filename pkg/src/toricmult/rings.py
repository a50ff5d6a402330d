"""Normal toric rings presented by the cone of their monomial exponents.

A ring is the semigroup algebra of M ∩ C where C is a full-dimensional
pointed rational cone (the dual of the defining cone sigma). The primitive
generators of sigma are the facet normals of C; pairing against them is the
grading used everywhere else in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, NotInSemigroup
from .geometry import LatticePoint, PolyCone, RatPoint, _extreme_rays, as_lattice_point
from .linalg import adjugate_int, dot, kernel_basis, primitivize


@dataclass(frozen=True)
class SemigroupReport:
    """Membership outcome for a lattice point against the exponent cone."""

    contained: bool
    point: LatticePoint
    violated_ray: LatticePoint | None

    def __bool__(self) -> bool:
        return self.contained


@dataclass(frozen=True)
class ToricRing:
    """Semigroup ring of the lattice points of a cone.

    dual_rays generate the exponent cone (the dual of sigma); sigma_rays are
    the primitive generators of sigma itself. q_gorenstein is (w0, r) with
    <w0, n> = r for every sigma ray n, w0 primitive and r >= 1 minimal, or
    None when no such lattice point exists.
    """

    dim: int
    cone: PolyCone
    q_gorenstein: tuple[LatticePoint, int] | None

    @property
    def dual_rays(self) -> tuple[LatticePoint, ...]:
        return self.cone.rays

    @property
    def sigma_rays(self) -> tuple[LatticePoint, ...]:
        return self.cone.facet_normals

    @property
    def is_gorenstein(self) -> bool:
        return self.q_gorenstein is not None and self.q_gorenstein[1] == 1

    def gorenstein_point(self) -> LatticePoint | None:
        """The lattice point pairing to 1 with every sigma ray, if it exists."""
        if self.is_gorenstein:
            return self.q_gorenstein[0]
        return None

    def canonical_shift(self) -> RatPoint | None:
        """u0 = w0 / r as an exact rational point, or None if not Q-Gorenstein."""
        if self.q_gorenstein is None:
            return None
        w0, r = self.q_gorenstein
        return tuple(Fraction(a, r) for a in w0)

    def pairings(self, w: Sequence) -> tuple:
        return tuple(dot(w, n) for n in self.sigma_rays)


def ring_from_dual_rays(rays: Iterable[Sequence[int]]) -> ToricRing:
    """Build the ring whose exponent cone is generated by the given rays.

    Raises NotFullDimensional / NotPointed when the cone is degenerate.
    """
    cone = PolyCone.from_rays(rays)
    return ToricRing(cone.dim, cone, _q_gorenstein_datum(cone))


def _q_gorenstein_datum(cone: PolyCone) -> tuple[LatticePoint, int] | None:
    ns = cone.facet_normals
    diffs = [tuple(a - b for a, b in zip(n, ns[0])) for n in ns[1:]]
    if diffs:
        basis = kernel_basis(diffs)
    else:
        basis = kernel_basis([(0,) * cone.dim])
    # sigma spans the ambient space, so the solution space is a line at most
    if not basis:
        return None
    assert len(basis) == 1
    w0 = primitivize(basis[0])
    r = dot(w0, ns[0])
    if r < 0:
        w0 = tuple(-a for a in w0)
        r = -r
    assert r > 0
    return w0, int(r)


def gorenstein_point(ring: ToricRing) -> LatticePoint | None:
    return ring.gorenstein_point()


def q_gorenstein_data(ring: ToricRing) -> tuple[LatticePoint, int] | None:
    return ring.q_gorenstein


def semigroup_contains(ring: ToricRing, w: Sequence[int]) -> SemigroupReport:
    """Is x^w a monomial of the ring, i.e. does w pair >= 0 with every sigma ray?"""
    p = as_lattice_point(w)
    if len(p) != ring.dim:
        raise DimensionMismatch(f"point of dimension {len(p)} in ring of dimension {ring.dim}")
    for n in ring.sigma_rays:
        if dot(p, n) < 0:
            return SemigroupReport(False, p, n)
    return SemigroupReport(True, p, None)


def require_exponent(ring: ToricRing, w: Sequence[int]) -> LatticePoint:
    rep = semigroup_contains(ring, w)
    if not rep:
        raise NotInSemigroup(
            f"{rep.point} pairs {dot(rep.point, rep.violated_ray)} with sigma ray {rep.violated_ray}"
        )
    return rep.point


# ---------------------------------------------------------------------------
# Lattice enumeration in sigma-coordinates
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _sigma_solver(ring: ToricRing):
    """For simplicial sigma: (det, adj) with w = adj @ t / det for t = pairings(w)."""
    mat = ring.sigma_rays
    det, adj = adjugate_int(mat)
    return det, adj


def lattice_points_in_box(ring: ToricRing, bounds: Sequence[int]) -> Iterator[tuple[LatticePoint, tuple[int, ...]]]:
    """All lattice w with 0 <= <w, n_i> <= bounds[i] for every sigma ray n_i.

    Yields (w, pairings) pairs. When sigma is simplicial the box is walked in
    sigma-coordinates and inverted exactly; otherwise integer points of the
    bounding primal box are enumerated and filtered against all constraints.
    Deterministic lexicographic order in either coordinate system.
    """
    ns = ring.sigma_rays
    if len(bounds) != len(ns):
        raise ValueError("one bound per sigma ray is required")
    if any(b < 0 for b in bounds):
        return
    if len(ns) == ring.dim:
        det, adj = _sigma_solver(ring)
        d = ring.dim
        for t in itertools.product(*(range(b + 1) for b in bounds)):
            nums = [sum(adj[i][j] * t[j] for j in range(d)) for i in range(d)]
            if all(n % det == 0 for n in nums):
                yield tuple(n // det for n in nums), t
    else:
        for w in _primal_box_points(ring, tuple(bounds)):
            t = ring.pairings(w)
            if all(0 <= ti <= bi for ti, bi in zip(t, bounds)):
                yield w, t


def _primal_box_points(ring: ToricRing, bounds: tuple[int, ...]) -> Iterator[LatticePoint]:
    d = ring.dim
    rows = [n + (0,) for n in ring.sigma_rays]
    rows += [tuple(-a for a in n) + (b,) for n, b in zip(ring.sigma_rays, bounds)]
    rows.append((0,) * d + (1,))
    rays = _extreme_rays(rows, d + 1)
    verts = [tuple(Fraction(a, r[d]) for a in r[:d]) for r in rays if r[d] > 0]
    assert all(r[d] > 0 for r in rays), "constraint region must be bounded"
    los = [min(floor(v[j]) for v in verts) for j in range(d)]
    his = [max(ceil(v[j]) for v in verts) for j in range(d)]
    yield from itertools.product(*(range(lo, hi + 1) for lo, hi in zip(los, his)))


def semigroup_points(ring: ToricRing, bound: int) -> list[LatticePoint]:
    """Lattice points of the exponent cone with every sigma pairing <= bound."""
    return [w for w, _ in lattice_points_in_box(ring, (bound,) * len(ring.sigma_rays))]
