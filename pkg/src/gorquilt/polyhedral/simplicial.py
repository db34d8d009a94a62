"""Placing triangulations, half-open markings and fundamental parallelepipeds.

Everything here works in full-dimensional integer coordinates: rays are
primitive vectors of ``Z^s`` spanning ``R^s`` and the lattice is ``Z^s``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import floor
from typing import Optional, Sequence

from .intlinalg import dot, inverse, rank, rational_nullspace, smith_normal_form


def _facet_normal(vectors: Sequence[Sequence[int]], dim: int) -> tuple[int, ...]:
    ns = rational_nullspace([list(v) for v in vectors], dim)
    if len(ns) != 1:
        raise ValueError("facet vectors are not independent")
    return ns[0]


def placing_triangulation(rays: Sequence[Sequence[int]], order: Optional[Sequence[int]] = None) -> list[tuple[int, ...]]:
    """Simplices (as sorted ray-index tuples) of the placing triangulation.

    Rays are inserted in ``order`` (default: the given order); each new ray is
    coned over the boundary facets it sees strictly.
    """
    if not rays:
        return []
    dim = len(rays[0])
    seq = list(order) if order is not None else list(range(len(rays)))
    chosen: list[int] = []
    for i in seq:
        if rank([rays[j] for j in chosen + [i]]) == len(chosen) + 1:
            chosen.append(i)
        if len(chosen) == dim:
            break
    if len(chosen) < dim:
        raise ValueError("rays do not span a full-dimensional cone")
    simplices = [tuple(sorted(chosen))]
    normals: dict[frozenset, tuple[int, ...]] = {}
    for i in seq:
        if i in chosen:
            continue
        counts: dict[frozenset, list] = {}
        for sig in simplices:
            for opp in sig:
                F = frozenset(sig) - {opp}
                counts.setdefault(F, []).append(opp)
        new = []
        for F, opps in counts.items():
            if len(opps) != 1:
                continue
            n = normals.get(F)
            if n is None:
                n = _facet_normal([rays[j] for j in sorted(F)], dim)
                normals[F] = n
            sgn = dot(n, rays[opps[0]])
            side = dot(n, rays[i])
            if (sgn > 0 and side < 0) or (sgn < 0 and side > 0):
                new.append(tuple(sorted(F | {i})))
        if not new:
            raise ValueError("ray lies inside the current cone; rays must be extreme")
        simplices.extend(new)
    return simplices


def open_markings(rays: Sequence[Sequence[int]], simplices: Sequence[Sequence[int]]) -> list[frozenset]:
    """For each simplex, the ray indices whose opposite facet is excluded.

    A facet is excluded when a symbolically perturbed interior reference
    point lies strictly on its far side; this makes the half-open simplices
    partition the cone.
    """
    dim = len(rays[0])
    q0 = [sum(r[k] for r in rays) for k in range(dim)]
    out = []
    for sig in simplices:
        cols = [rays[j] for j in sig]
        R = [[cols[c][r] for c in range(dim)] for r in range(dim)]
        Rinv = inverse(R)
        lam0 = [dot(row, q0) for row in Rinv]
        opened = set()
        for pos, j in enumerate(sig):
            s = lam0[pos]
            if s == 0:
                # perturbation q0 + eps e_0 + eps^2 e_1 + ...
                s = next((Rinv[pos][c] for c in range(dim) if Rinv[pos][c] != 0), 0)
            if s < 0:
                opened.add(j)
        out.append(frozenset(opened))
    return out


def box_points(cols: Sequence[Sequence[int]], opened: Sequence[int] = ()) -> list[tuple[int, ...]]:
    """Lattice points ``sum l_i r_i`` with ``l_i in [0,1)``, or ``(0,1]`` for opened positions.

    ``cols`` lists the simplex rays; ``opened`` lists positions into ``cols``.
    Coset representatives of ``Z^s / R Z^s`` come from the Smith form of the
    ray matrix ``R``.
    """
    dim = len(cols)
    R = [[cols[c][r] for c in range(dim)] for r in range(dim)]
    U, D, _ = smith_normal_form(R)
    Uinv = [[int(v) for v in row] for row in inverse(U)]
    Rinv = inverse(R)
    diag = [D[i][i] for i in range(dim)]
    opened = set(opened)
    pts = []
    for k in product(*[range(d) for d in diag]):
        z = [sum(Uinv[r][c] * k[c] for c in range(dim)) for r in range(dim)]
        lam = [dot(row, z) for row in Rinv]
        frac = [l - floor(l) for l in lam]
        for pos in opened:
            if frac[pos] == 0:
                frac[pos] = Fraction(1)
        p = [sum(cols[c][r] * frac[c] for c in range(dim)) for r in range(dim)]
        pts.append(tuple(int(v) for v in p))
    return sorted(pts)
