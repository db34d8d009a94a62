"""Double description: generators of ``{z : A z >= 0}`` over the integers.

Rays carry their zero sets as bitmasks over the constraints processed so
far; adjacency is decided combinatorially.  All vectors stay primitive
integer vectors, so no rationals appear.
"""

from __future__ import annotations

from typing import Sequence

from .intlinalg import dot, primitive


def _combine(p, ap, n, an):
    # (ap * n - an * p) with ap > 0 > an lands on the hyperplane
    return primitive([ap * y - an * x for x, y in zip(p, n)])


def double_description(A: Sequence[Sequence[int]], dim: int):
    """Return ``(rays, lines)`` generating the cone ``{z in R^dim : A z >= 0}``.

    ``lines`` spans the lineality space; ``rays`` are the extreme rays of the
    cone modulo that space, each a primitive integer tuple, sorted.
    """
    lines: list[tuple[int, ...]] = [tuple(1 if i == j else 0 for i in range(dim)) for j in range(dim)]
    rays: list[tuple[tuple[int, ...], int]] = []
    for idx, a in enumerate(A):
        a = [int(v) for v in a]
        bit = 1 << idx
        pivot = None
        for li, line in enumerate(lines):
            if dot(a, line) != 0:
                pivot = li
                break
        if pivot is not None:
            piv = lines[pivot]
            v = dot(a, piv)
            if v < 0:
                piv = tuple(-x for x in piv)
                v = -v
            new_lines = []
            for li, line in enumerate(lines):
                if li == pivot:
                    continue
                w = dot(a, line)
                new_lines.append(primitive([v * x - w * y for x, y in zip(line, piv)]) if w else line)
            new_rays = []
            for r, z in rays:
                w = dot(a, r)
                nr = primitive([v * x - w * y for x, y in zip(r, piv)]) if w else r
                new_rays.append((nr, z | bit))
            prev_bits = bit - 1
            new_rays.append((piv, prev_bits))
            lines = new_lines
            rays = new_rays
            continue
        pos, zero, neg = [], [], []
        for r, z in rays:
            w = dot(a, r)
            if w > 0:
                pos.append((r, z, w))
            elif w < 0:
                neg.append((r, z, w))
            else:
                zero.append((r, z | bit))
        if not neg:
            rays = [(r, z) for r, z, _ in pos] + zero
            continue
        pointed_dim = dim - len(lines)
        need = pointed_dim - 2
        all_masks = [z for _, z in rays]
        created = []
        for p, zp, wp in pos:
            for q, zq, wq in neg:
                common = zp & zq
                if bin(common).count("1") < need:
                    continue
                adjacent = True
                for zr in all_masks:
                    if zr != zp and zr != zq and (zr & common) == common:
                        adjacent = False
                        break
                if adjacent:
                    created.append((_combine(p, wp, q, wq), common | bit))
        rays = [(r, z) for r, z, _ in pos] + zero + created
    out_rays = sorted(set(r for r, _ in rays))
    return out_rays, [tuple(l) for l in lines]
