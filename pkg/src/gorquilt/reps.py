"""Tensor-product multiplicities for SL_m, computed two independent ways.

* Littlewood-Richardson tableaux (``lr_coefficient``), the primary method.
* Schur polynomials expanded into monomials in ``m`` variables, multiplied,
  and decomposed back by unitriangularity of Kostka numbers.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Mapping, Sequence

Partition = tuple[int, ...]


def normalize(p: Sequence[int]) -> Partition:
    p = tuple(int(v) for v in p)
    if any(v < 0 for v in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{p} is not a partition")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def weight_to_partition(m: int, lam: Sequence[int]) -> Partition:
    lam = [int(v) for v in lam]
    if len(lam) != m - 1:
        raise ValueError(f"weight must have {m - 1} coordinates")
    if any(v < 0 for v in lam):
        raise ValueError("weight is not dominant")
    parts = [sum(lam[i:]) for i in range(m - 1)]
    return normalize(parts)


def partition_to_weight(m: int, p: Sequence[int]) -> tuple[int, ...]:
    """Inverse of ``weight_to_partition``; full columns of height ``m`` are dropped."""
    p = normalize(p)
    if len(p) > m:
        raise ValueError("too many rows")
    padded = list(p) + [0] * (m - len(p))
    return tuple(padded[i] - padded[i + 1] for i in range(m - 1))


def _pad(p: Partition, m: int) -> list[int]:
    if len(p) > m:
        raise ValueError("too many rows")
    return list(p) + [0] * (m - len(p))


# --------------------------------------------------------------------------
# Littlewood-Richardson tableaux


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Number of LR tableaux of shape ``nu / lam`` and content ``mu``."""
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    rows = len(nu)
    lp = list(lam) + [0] * (rows - len(lam))
    if len(lam) > rows or any(a > b for a, b in zip(lp, nu)):
        return 0
    if not mu:
        return 1
    k = len(mu)

    def fill(r: int, above: list[int], counts: list[int]) -> int:
        # above: entries of row r-1 indexed by column (0 where the cell is in lam or absent)
        if r == rows:
            return 1 if counts == list(mu) else 0
        start, stop = lp[r], nu[r]
        width = stop - start
        total = 0
        # row entries are weakly increasing; choose how many of each value 1..min(k, r+1)
        top = min(k, r + 1)
        for combo in _row_compositions(width, top):
            new = counts[:]
            ok = True
            for v in range(top, 0, -1):
                new[v - 1] += combo[v - 1]
                if new[v - 1] > mu[v - 1]:
                    ok = False
                    break
                if v >= 2 and new[v - 1] > counts[v - 2]:
                    ok = False
                    break
            if not ok:
                continue
            row = []
            for v in range(1, top + 1):
                row.extend([v] * combo[v - 1])
            cur = [0] * (stop)
            for i, v in enumerate(row):
                c = start + i
                if c < len(above) and above[c] and v <= above[c]:
                    ok = False
                    break
                cur[c] = v
            if ok:
                total += fill(r + 1, cur, new)
        return total

    return fill(0, [], [0] * k)


@lru_cache(maxsize=None)
def _row_compositions(width: int, parts: int) -> tuple[tuple[int, ...], ...]:
    if parts == 0:
        return ((),) if width == 0 else ()
    out = []
    for first in range(width + 1):
        for rest in _row_compositions(width - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


def dual_partition(m: int, nu: Partition) -> Partition:
    """Highest weight of the dual representation: ``nu_1 - nu_{m+1-i}``."""
    p = _pad(normalize(nu), m)
    return normalize([p[0] - p[m - 1 - i] for i in range(m)])


def _target(m: int, lam: Partition, mu: Partition, nu: Partition):
    nd = _pad(dual_partition(m, nu), m)
    diff = sum(lam) + sum(mu) - sum(nd)
    if diff < 0 or diff % m:
        return None
    d = diff // m
    return normalize([v + d for v in nd])


def triple_invariant_dim(m: int, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``dim (V(lam) x V(mu) x V(nu))^{SL_m}`` for weights in fundamental coordinates."""
    a, b, c = (weight_to_partition(m, w) for w in (lam, mu, nu))
    kappa = _target(m, a, b, c)
    if kappa is None or len(kappa) > m:
        return 0
    return lr_coefficient(a, b, kappa)


# --------------------------------------------------------------------------
# Schur polynomials


@lru_cache(maxsize=None)
def schur_monomials(m: int, lam: Partition) -> Mapping[tuple[int, ...], int]:
    """Monomial expansion of ``s_lam(x_1..x_m)`` via Gelfand-Tsetlin branching."""
    lam = normalize(lam)
    if len(lam) > m:
        return {}
    if m == 1:
        return {(lam[0] if lam else 0,): 1}
    full = _pad(lam, m)
    out: dict[tuple[int, ...], int] = {}
    # mu interlaces: full[i+1] <= mu[i] <= full[i]
    ranges = [range(full[i + 1], full[i] + 1) for i in range(m - 1)]
    for mu in product(*ranges):
        e = sum(full) - sum(mu)
        for mono, c in schur_monomials(m - 1, normalize(mu)).items():
            key = mono + (e,)
            out[key] = out.get(key, 0) + c
    return out


def _partitions(n: int, parts: int, cap: int | None = None) -> list[Partition]:
    cap = n if cap is None else cap
    if n == 0:
        return [()]
    if parts == 0:
        return []
    out = []
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, parts - 1, first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def schur_product(m: int, lam: Partition, mu: Partition) -> Mapping[Partition, int]:
    """Coefficients of ``s_lam * s_mu`` in the Schur basis of ``m`` variables."""
    A = schur_monomials(m, normalize(lam))
    B = schur_monomials(m, normalize(mu))
    n = sum(lam) + sum(mu)
    shapes = _partitions(n, m)  # lexicographically decreasing
    coeff: dict[Partition, int] = {}
    for beta in shapes:
        b = tuple(_pad(beta, m))
        val = 0
        for alpha, ca in A.items():
            rest = tuple(x - y for x, y in zip(b, alpha))
            if min(rest) >= 0:
                val += ca * B.get(rest, 0)
        for kappa, ck in coeff.items():
            val -= ck * schur_monomials(m, kappa).get(b, 0)
        if val:
            coeff[beta] = val
    return coeff


def schur_triple_dim(m: int, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Same quantity as ``triple_invariant_dim`` via Schur polynomial arithmetic."""
    a, b, c = (weight_to_partition(m, w) for w in (lam, mu, nu))
    kappa = _target(m, a, b, c)
    if kappa is None or len(kappa) > m:
        return 0
    return schur_product(m, a, b).get(kappa, 0)


# --------------------------------------------------------------------------
# trees


def _dual(m: int, w: Sequence[int]) -> tuple[int, ...]:
    return tuple(w)[::-1]


def _weights_up_to(m: int, total: int) -> list[tuple[int, ...]]:
    out = []
    for w in product(range(total + 1), repeat=m - 1):
        if sum(w) <= total:
            out.append(w)
    return out


def tree_invariant_dim(m: int, edges: Sequence[tuple], leaf_weights: Mapping) -> int:
    """Invariants of ``V(l_1) x ... x V(l_n)`` contracted along a trivalent tree.

    ``edges`` lists node pairs; degree-1 nodes are leaves and must appear in
    ``leaf_weights``.  The result does not depend on the tree chosen.
    """
    adj: dict = {}
    for u, v in edges:
        if u == v:
            raise ValueError("not a tree")
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    nodes = list(adj)
    if len(edges) != len(nodes) - 1 or not nodes:
        raise ValueError("not a tree")
    seen = {nodes[0]}
    stack = [nodes[0]]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(nodes):
        raise ValueError("not a tree")
    if any(len(adj[v]) not in (1, 3) for v in nodes):
        raise ValueError("not trivalent")
    leaves = [v for v in nodes if len(adj[v]) == 1]
    if set(leaves) != set(leaf_weights):
        raise ValueError("leaf weights must be given for exactly the leaves")
    lw = {v: tuple(int(x) for x in leaf_weights[v]) for v in leaves}
    internal = [v for v in nodes if len(adj[v]) == 3]
    if not internal:
        a, b = leaves
        return int(lw[a] == _dual(m, lw[b]))

    def below(node, parent) -> dict[tuple[int, ...], int]:
        """Multiplicities of irreducibles in the tensor product of leaves under ``node``."""
        if len(adj[node]) == 1:
            return {lw[node]: 1}
        kids = [w for w in adj[node] if w != parent]
        f1, f2 = below(kids[0], node), below(kids[1], node)
        out: dict[tuple[int, ...], int] = {}
        for a, ca in f1.items():
            for b, cb in f2.items():
                for mu in _weights_up_to(m, sum(a) + sum(b)):
                    c = triple_invariant_dim(m, a, b, _dual(m, mu))
                    if c:
                        out[mu] = out.get(mu, 0) + ca * cb * c
        return out

    root = internal[0]
    f = [below(w, root) for w in adj[root]]
    total = 0
    for a, ca in f[0].items():
        for b, cb in f[1].items():
            for c, cc in f[2].items():
                total += ca * cb * cc * triple_invariant_dim(m, a, b, c)
    return total
