"""Hot loops: enumerating integer points of bounded polyhedra.

Every lattice-point question in the package (fibers of the weight map,
graded pieces of a semigroup, interior points up to a degree) is reduced to
one shape of problem::

    eq @ x == rhs,   lo <= x <= hi,   cong @ x == 0 (mod mods)

with finite integer bounds.  The search visits variables in a fixed order;
at each step every equation touching the current variable narrows its range
using the static bounds of the variables still unassigned, so a variable
that is the last free one in some equation is pinned to a single value.

Two interchangeable implementations exist: a depth-first search compiled
with numba and a breadth-first numpy version that expands whole frontiers at
once.  ``GORQUILT_KERNEL`` picks the default (see ``_accel``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ._accel import njit, resolve_backend

INT = np.int64
_NUMPY_CHUNK = 50_000


@dataclass(frozen=True)
class IntegerSystem:
    eq: np.ndarray
    rhs: np.ndarray
    lo: np.ndarray
    hi: np.ndarray
    cong: np.ndarray
    mods: np.ndarray

    @classmethod
    def build(cls, eq, rhs, lo, hi, cong=None, mods=None) -> "IntegerSystem":
        eq = np.asarray(eq, dtype=INT).reshape(len(eq), -1) if len(eq) else np.zeros((0, len(lo)), INT)
        n = len(lo)
        if cong is None or len(cong) == 0:
            cong = np.zeros((0, n), INT)
            mods = np.zeros(0, INT)
        return cls(
            eq=eq,
            rhs=np.asarray(rhs, dtype=INT).reshape(-1),
            lo=np.asarray(lo, dtype=INT),
            hi=np.asarray(hi, dtype=INT),
            cong=np.asarray(cong, dtype=INT).reshape(len(cong), n),
            mods=np.asarray(mods, dtype=INT).reshape(-1),
        )

    @property
    def nvars(self) -> int:
        return len(self.lo)


def tighten_bounds(eq, rhs, lo, hi, rounds: Optional[int] = None):
    """Interval propagation over ``eq @ x == rhs``.

    ``lo``/``hi`` are lists whose entries may be ``None`` (unbounded).
    Returns new lists, or ``None`` when the system is visibly infeasible.
    """
    lo = list(lo)
    hi = list(hi)
    n = len(lo)
    rows = [[(j, int(c)) for j, c in enumerate(row) if c] for row in eq]
    rounds = rounds if rounds is not None else 4 * n + 8
    for _ in range(rounds):
        changed = False
        for row, b in zip(rows, rhs):
            b = int(b)
            # contribution ranges; None means infinite in that direction
            mins = []
            maxs = []
            for j, c in row:
                if c > 0:
                    mins.append(None if lo[j] is None else c * lo[j])
                    maxs.append(None if hi[j] is None else c * hi[j])
                else:
                    mins.append(None if hi[j] is None else c * hi[j])
                    maxs.append(None if lo[j] is None else c * lo[j])
            inf_min = sum(1 for v in mins if v is None)
            inf_max = sum(1 for v in maxs if v is None)
            tot_min = sum(v for v in mins if v is not None)
            tot_max = sum(v for v in maxs if v is not None)
            for idx, (j, c) in enumerate(row):
                # rest = b - c x_j, rest in [rest_min, rest_max]
                if mins[idx] is None:
                    rmin = None if inf_min > 1 else tot_min
                else:
                    rmin = None if inf_min > 0 else tot_min - mins[idx]
                if maxs[idx] is None:
                    rmax = None if inf_max > 1 else tot_max
                else:
                    rmax = None if inf_max > 0 else tot_max - maxs[idx]
                # c x_j in [b - rmax, b - rmin]
                lo_cx = None if rmax is None else b - rmax
                hi_cx = None if rmin is None else b - rmin
                if c > 0:
                    new_lo = None if lo_cx is None else -((-lo_cx) // c)
                    new_hi = None if hi_cx is None else hi_cx // c
                else:
                    new_lo = None if hi_cx is None else -((-hi_cx) // c)
                    new_hi = None if lo_cx is None else lo_cx // c
                if new_lo is not None and (lo[j] is None or new_lo > lo[j]):
                    lo[j] = new_lo
                    changed = True
                if new_hi is not None and (hi[j] is None or new_hi < hi[j]):
                    hi[j] = new_hi
                    changed = True
                if lo[j] is not None and hi[j] is not None and lo[j] > hi[j]:
                    return None
        if not changed:
            break
    return lo, hi


@dataclass(frozen=True)
class Plan:
    """Variable order and incidence tables, independent of rhs and bounds."""

    order: np.ndarray
    step_ptr: np.ndarray
    step_eq: np.ndarray
    step_coef: np.ndarray
    cg_ptr: np.ndarray
    cg_idx: np.ndarray
    cg_coef: np.ndarray
    done_ptr: np.ndarray
    done_idx: np.ndarray
    zero_rows: np.ndarray


def compile_plan(eq: np.ndarray, cong: np.ndarray) -> Plan:
    E, n = eq.shape
    support = [set(np.nonzero(eq[e])[0].tolist()) for e in range(E)]
    assigned: set[int] = set()
    order: list[int] = []
    remaining = [set(s) for s in support]
    var_eqs = [[e for e in range(E) if eq[e, v]] for v in range(n)]
    while len(order) < n:
        best = None
        best_key = None
        for v in range(n):
            if v in assigned:
                continue
            sizes = [len(remaining[e]) for e in var_eqs[v]]
            key = (min(sizes) if sizes else n + 1, -len(sizes), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        order.append(best)
        assigned.add(best)
        for e in var_eqs[best]:
            remaining[e].discard(best)

    step_ptr = [0]
    step_eq: list[int] = []
    step_coef: list[int] = []
    for v in order:
        for e in var_eqs[v]:
            step_eq.append(e)
            step_coef.append(int(eq[e, v]))
        step_ptr.append(len(step_eq))

    C = cong.shape[0]
    pos = {v: k for k, v in enumerate(order)}
    cg_ptr = [0]
    cg_idx: list[int] = []
    cg_coef: list[int] = []
    for v in order:
        for j in range(C):
            if cong[j, v]:
                cg_idx.append(j)
                cg_coef.append(int(cong[j, v]))
        cg_ptr.append(len(cg_idx))
    last = [-1] * C
    for j in range(C):
        sup = np.nonzero(cong[j])[0]
        last[j] = max((pos[int(v)] for v in sup), default=-1)
    done_ptr = [0]
    done_idx: list[int] = []
    for k in range(n):
        for j in range(C):
            if last[j] == k:
                done_idx.append(j)
        done_ptr.append(len(done_idx))
    zero_rows = [j for j in range(C) if last[j] == -1]
    zero_eq = [e for e in range(E) if not support[e]]

    def arr(x):
        return np.asarray(x, dtype=INT)

    return Plan(
        order=arr(order),
        step_ptr=arr(step_ptr),
        step_eq=arr(step_eq),
        step_coef=arr(step_coef),
        cg_ptr=arr(cg_ptr),
        cg_idx=arr(cg_idx),
        cg_coef=arr(cg_coef),
        done_ptr=arr(done_ptr),
        done_idx=arr(done_idx),
        zero_rows=arr(zero_eq),
    )


def _rest_tables(plan: Plan, system: IntegerSystem):
    """rest_min[k, e] / rest_max[k, e]: range of eq row e over variables after step k."""
    eq = system.eq
    E, n = eq.shape
    lo = system.lo
    hi = system.hi
    cmin = np.minimum(eq * lo[None, :], eq * hi[None, :])
    cmax = np.maximum(eq * lo[None, :], eq * hi[None, :])
    ordered_min = cmin[:, plan.order]
    ordered_max = cmax[:, plan.order]
    # suffix sums excluding the current step
    suf_min = np.zeros((n, E), INT)
    suf_max = np.zeros((n, E), INT)
    if n:
        cs_min = np.cumsum(ordered_min[:, ::-1], axis=1)[:, ::-1]
        cs_max = np.cumsum(ordered_max[:, ::-1], axis=1)[:, ::-1]
        suf_min[:-1] = cs_min[:, 1:].T
        suf_max[:-1] = cs_max[:, 1:].T
    return suf_min, suf_max


@njit(cache=True)
def _dfs_kernel(order, step_ptr, step_eq, step_coef, cg_ptr, cg_idx, cg_coef,
                done_ptr, done_idx, rest_min, rest_max, rhs, lo, hi, mods, out):
    n = order.shape[0]
    E = rhs.shape[0]
    C = mods.shape[0]
    x = np.zeros(n, np.int64)
    ub = np.zeros(n, np.int64)
    partial = np.zeros(E, np.int64)
    cpart = np.zeros(C, np.int64)
    cap = out.shape[0]
    count = 0
    k = 0
    descend = True
    while k >= 0:
        if descend:
            if k == n:
                if count < cap:
                    for j in range(n):
                        out[count, order[j]] = x[j]
                count += 1
                k -= 1
                descend = False
                continue
            v = order[k]
            a = lo[v]
            b = hi[v]
            for p in range(step_ptr[k], step_ptr[k + 1]):
                e = step_eq[p]
                c = step_coef[p]
                r = rhs[e] - partial[e]
                low = r - rest_max[k, e]
                high = r - rest_min[k, e]
                if c > 0:
                    la = -((-low) // c)
                    hb = high // c
                else:
                    la = -((-high) // c)
                    hb = low // c
                if la > a:
                    a = la
                if hb < b:
                    b = hb
            if a > b:
                k -= 1
                descend = False
                continue
            x[k] = a
            ub[k] = b
            for p in range(step_ptr[k], step_ptr[k + 1]):
                partial[step_eq[p]] += step_coef[p] * a
            for p in range(cg_ptr[k], cg_ptr[k + 1]):
                cpart[cg_idx[p]] += cg_coef[p] * a
        else:
            if x[k] >= ub[k]:
                val = x[k]
                for p in range(step_ptr[k], step_ptr[k + 1]):
                    partial[step_eq[p]] -= step_coef[p] * val
                for p in range(cg_ptr[k], cg_ptr[k + 1]):
                    cpart[cg_idx[p]] -= cg_coef[p] * val
                k -= 1
                continue
            x[k] += 1
            for p in range(step_ptr[k], step_ptr[k + 1]):
                partial[step_eq[p]] += step_coef[p]
            for p in range(cg_ptr[k], cg_ptr[k + 1]):
                cpart[cg_idx[p]] += cg_coef[p]
        ok = True
        for p in range(done_ptr[k], done_ptr[k + 1]):
            j = done_idx[p]
            if cpart[j] % mods[j] != 0:
                ok = False
                break
        if ok:
            k += 1
            descend = True
        else:
            descend = False
    return count


def _frontier_numpy(plan: Plan, system: IntegerSystem, rest_min, rest_max, collect: bool):
    order = plan.order
    n = len(order)
    eq = system.eq
    cong = system.cong
    mods = system.mods
    rhs = system.rhs
    E = eq.shape[0]
    C = cong.shape[0]
    found = []
    total = 0

    def expand(X, P, CP, k):
        nonlocal total
        if X.shape[0] == 0:
            return
        if k == n:
            total += X.shape[0]
            if collect:
                sol = np.empty_like(X)
                sol[:, order] = X
                found.append(sol)
            return
        v = order[k]
        rows = X.shape[0]
        a = np.full(rows, system.lo[v], INT)
        b = np.full(rows, system.hi[v], INT)
        for p in range(plan.step_ptr[k], plan.step_ptr[k + 1]):
            e = plan.step_eq[p]
            c = plan.step_coef[p]
            r = rhs[e] - P[:, e]
            low = r - rest_max[k, e]
            high = r - rest_min[k, e]
            if c > 0:
                la, hb = -((-low) // c), high // c
            else:
                la, hb = -((-high) // c), low // c
            np.maximum(a, la, out=a)
            np.minimum(b, hb, out=b)
        cnt = np.clip(b - a + 1, 0, None)
        m = int(cnt.sum())
        if m == 0:
            return
        src = np.repeat(np.arange(rows), cnt)
        offs = np.arange(m, dtype=INT) - np.repeat(np.cumsum(cnt) - cnt, cnt)
        vals = a[src] + offs
        newX = np.empty((m, k + 1), INT)
        newX[:, :k] = X[src]
        newX[:, k] = vals
        newP = P[src] + vals[:, None] * eq[:, v][None, :]
        newCP = CP[src] + vals[:, None] * cong[:, v][None, :] if C else CP[src]
        d0, d1 = plan.done_ptr[k], plan.done_ptr[k + 1]
        if d1 > d0:
            idx = plan.done_idx[d0:d1]
            keep = np.all(newCP[:, idx] % mods[idx] == 0, axis=1)
            newX, newP, newCP = newX[keep], newP[keep], newCP[keep]
        for s in range(0, newX.shape[0], _NUMPY_CHUNK):
            expand(newX[s:s + _NUMPY_CHUNK], newP[s:s + _NUMPY_CHUNK], newCP[s:s + _NUMPY_CHUNK], k + 1)

    if n == 0:
        return 1, [np.zeros((1, 0), INT)] if collect else []
    expand(np.zeros((1, 0), INT), np.zeros((1, E), INT), np.zeros((1, C), INT), 0)
    return total, found


def _prechecks(plan: Plan, system: IntegerSystem) -> bool:
    if np.any(system.lo > system.hi):
        return False
    if len(plan.zero_rows) and np.any(system.rhs[plan.zero_rows] != 0):
        return False
    return True


def _run(system: IntegerSystem, plan: Optional[Plan], backend, collect: bool):
    backend = resolve_backend(backend)
    if plan is None:
        plan = compile_plan(system.eq, system.cong)
    n = system.nvars
    if not _prechecks(plan, system):
        return 0, np.zeros((0, n), INT)
    rest_min, rest_max = _rest_tables(plan, system)
    if backend == "numba":
        args = (plan.order, plan.step_ptr, plan.step_eq, plan.step_coef, plan.cg_ptr,
                plan.cg_idx, plan.cg_coef, plan.done_ptr, plan.done_idx,
                rest_min, rest_max, system.rhs, system.lo, system.hi, system.mods)
        if not collect:
            return int(_dfs_kernel(*args, np.zeros((0, n), INT))), None
        cap = 1024
        while True:
            out = np.zeros((cap, n), INT)
            cnt = int(_dfs_kernel(*args, out))
            if cnt <= cap:
                return cnt, out[:cnt]
            cap = cnt
    total, found = _frontier_numpy(plan, system, rest_min, rest_max, collect)
    if not collect:
        return total, None
    pts = np.concatenate(found, axis=0) if found else np.zeros((0, n), INT)
    # match the lexicographic-in-plan-order output of the DFS
    if len(pts):
        keys = pts[:, plan.order[::-1]].T
        pts = pts[np.lexsort(keys)]
    return total, pts


def count_points(system: IntegerSystem, plan: Optional[Plan] = None, backend=None) -> int:
    """Number of integer points of ``system``."""
    return _run(system, plan, backend, collect=False)[0]


def enumerate_points(system: IntegerSystem, plan: Optional[Plan] = None, backend=None) -> np.ndarray:
    """All integer points of ``system`` as rows of an ``(count, nvars)`` array."""
    return _run(system, plan, backend, collect=True)[1]


def finite_bounds(lo: Sequence, hi: Sequence) -> bool:
    return all(v is not None for v in lo) and all(v is not None for v in hi)
