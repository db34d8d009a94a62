"""Univariate Hilbert series of graded affine semigroups.

Series are stored as ``N(t) / prod(1 - t^d)`` with a Laurent numerator.
They are computed from a half-open placing triangulation: each half-open
simplicial cone contributes ``sum t^deg(box point) / prod(1 - t^deg(ray))``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .polyhedral.cone import ConePresentation, LatticeDescription, _grading, _prepare, count_by_degree
from .polyhedral.intlinalg import dot, solve_integral, transpose
from .polyhedral.simplicial import box_points, open_markings, placing_triangulation

Poly = dict[int, int]


def _clean(p: Mapping[int, int]) -> Poly:
    return {e: c for e, c in p.items() if c}


def _times_factors(p: Mapping[int, int], degrees: Iterable[int]) -> Poly:
    out = dict(p)
    for d in degrees:
        nxt = dict(out)
        for e, c in out.items():
            nxt[e + d] = nxt.get(e + d, 0) - c
        out = _clean(nxt)
    return out


def _divide_factor(p: Mapping[int, int], d: int) -> Optional[Poly]:
    """``p / (1 - t^d)`` when exact, else ``None``."""
    if not p:
        return {}
    lo, hi = min(p), max(p)
    q: Poly = {}
    for e in range(lo, hi - d + 1):
        v = p.get(e, 0) + q.get(e - d, 0)
        if v:
            q[e] = v
    return q if _times_factors(q, [d]) == _clean(p) else None


@dataclass(frozen=True, eq=False)
class RationalSeries:
    """``sum c_e t^e / prod_i (1 - t^{d_i})``."""

    numerator: tuple[tuple[int, int], ...]
    denominator: tuple[int, ...]

    @classmethod
    def make(cls, numerator: Mapping[int, int], denominator: Iterable[int]) -> "RationalSeries":
        den = tuple(sorted(int(d) for d in denominator))
        if any(d <= 0 for d in den):
            raise ValueError("denominator degrees must be positive")
        return cls(tuple(sorted(_clean(numerator).items())), den)

    @property
    def num(self) -> Poly:
        return dict(self.numerator)

    def _cross(self, other: "RationalSeries") -> tuple[Poly, Poly]:
        return _times_factors(self.num, other.denominator), _times_factors(other.num, self.denominator)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        a, b = self._cross(other)
        return a == b

    __hash__ = None

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        ca, cb = Counter(self.denominator), Counter(other.denominator)
        common = ca | cb
        na = _times_factors(self.num, (cb - ca).elements())
        nb = _times_factors(other.num, (ca - cb).elements())
        total = dict(na)
        for e, c in nb.items():
            total[e] = total.get(e, 0) + c
        return RationalSeries.make(total, common.elements())

    def reduced(self) -> "RationalSeries":
        """Cancel whole ``(1 - t^d)`` factors that divide the numerator."""
        num = self.num
        den = list(self.denominator)
        changed = True
        while changed and num:
            changed = False
            for d in sorted(set(den), reverse=True):
                q = _divide_factor(num, d)
                if q is not None:
                    num = q
                    den.remove(d)
                    changed = True
                    break
        return RationalSeries.make(num, den)

    def coefficients(self, upto: int) -> list[int]:
        """Taylor coefficients of degrees ``0..upto`` (numerator must have no negative powers)."""
        if self.numerator and self.numerator[0][0] < 0:
            raise ValueError("series has negative exponents")
        c = [0] * (upto + 1)
        for e, v in self.numerator:
            if e <= upto:
                c[e] += v
        for d in self.denominator:
            for i in range(d, upto + 1):
                c[i] += c[i - d]
        return c

    def __str__(self) -> str:
        terms = []
        for e, c in self.numerator:
            if e == 0:
                terms.append(f"{c}")
            else:
                mono = "t" if e == 1 else f"t^{e}"
                terms.append(mono if c == 1 else f"{c} {mono}")
        num = " + ".join(terms) if terms else "0"
        den = "".join(f"(1-t^{d})" if d != 1 else "(1-t)" for d in self.denominator) or "1"
        return f"num: {num}; den: {den}"

    def to_dict(self) -> dict:
        return {"numerator": [[e, c] for e, c in self.numerator], "denominator": list(self.denominator)}


@dataclass(frozen=True)
class HalfOpenSimplex:
    rays: tuple[tuple[int, ...], ...]
    opened: tuple[int, ...]  # positions into ``rays`` whose opposite facet is excluded


def triangulate(rays: Sequence[Sequence[int]], order: Optional[Sequence[int]] = None) -> list[HalfOpenSimplex]:
    """Half-open placing triangulation of a pointed full-dimensional cone given by its rays."""
    rays = [tuple(int(v) for v in r) for r in rays]
    simplices = placing_triangulation(rays, order)
    marks = open_markings(rays, simplices)
    out = []
    for sig, mark in zip(simplices, marks):
        out.append(HalfOpenSimplex(tuple(rays[j] for j in sig), tuple(p for p, j in enumerate(sig) if j in mark)))
    return out


def simplicial_series(
    simplex: HalfOpenSimplex,
    grading: Sequence[int],
    lattice: Optional[LatticeDescription] = None,
) -> RationalSeries:
    """Series of the lattice points of one half-open simplicial cone."""
    rays = [list(r) for r in simplex.rays]
    g = [Fraction(v) for v in grading]
    if lattice is not None and not lattice.is_full:
        B = lattice.basis_matrix()
        rays = [solve_integral(B, r) for r in rays]
        if any(r is None for r in rays):
            raise ValueError("ray is not in the lattice")
        g = [sum(gi * B[i][j] for i, gi in enumerate(g)) for j in range(len(B[0]))]
    degs = [dot(g, r) for r in rays]
    if any(d <= 0 for d in degs):
        raise ValueError("grading not positive")
    num: Poly = {}
    for p in box_points(rays, simplex.opened):
        e = dot(g, p)
        if Fraction(e).denominator != 1:
            raise ValueError("grading is not integral on the lattice")
        num[int(e)] = num.get(int(e), 0) + 1
    if any(Fraction(d).denominator != 1 for d in degs):
        raise ValueError("grading is not integral on the lattice")
    return RationalSeries.make(num, [int(d) for d in degs])


def hilbert_series(
    c: ConePresentation,
    grading: Sequence,
    validate_to: int = 4,
    order: Optional[Sequence[int]] = None,
) -> RationalSeries:
    """Hilbert series of the semigroup under a positive grading.

    The result is checked against direct enumeration in degrees
    ``0..validate_to`` (skip with a negative bound).
    """
    prep = _prepare(c)
    if not prep.pointed:
        raise ValueError("cone not pointed")
    G, q = _grading(prep, grading)
    if prep.s == 0:
        return RationalSeries.make({0: 1}, [])
    Wcols = transpose([list(r) for r in prep.W])
    gz = [dot(G, col) // q for col in Wcols]
    rz = list(prep.rays_z)
    if any(dot(gz, r) <= 0 for r in rz):
        raise ValueError("grading not positive")
    groups: dict[tuple[int, ...], Poly] = {}
    for simplex in triangulate(rz, order):
        part = simplicial_series(simplex, gz)
        acc = groups.setdefault(part.denominator, {})
        for e, v in part.numerator:
            acc[e] = acc.get(e, 0) + v
    total = RationalSeries.make({}, [])
    for den, num in sorted(groups.items()):
        total = total + RationalSeries.make(num, den)
    series = total.reduced()
    if validate_to >= 0:
        expected = count_by_degree(c, grading, validate_to)
        got = series.coefficients(validate_to)
        if got != expected:
            raise RuntimeError(f"Hilbert series {got} disagrees with enumeration {expected}")
    return series


def stanley_symmetry(h: RationalSeries, d: int) -> Optional[int]:
    """The integer ``w`` with ``H(1/t) = (-1)^d t^w H(t)``, or ``None``."""
    num = h.num
    if not num:
        return None
    k = len(h.denominator)
    A = sum(h.denominator)
    lo, hi = min(num), max(num)
    sign = 1 if (k - d) % 2 == 0 else -1
    for e, c in num.items():
        if num.get(hi + lo - e, 0) != sign * c:
            return None
    return A - hi - lo


__all__ = [
    "HalfOpenSimplex",
    "RationalSeries",
    "hilbert_series",
    "simplicial_series",
    "stanley_symmetry",
    "triangulate",
]
