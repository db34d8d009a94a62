"""Root data of simple and semisimple groups, and isogeny bookkeeping.

Cartan matrices use ``a_ij = <alpha_i^vee, alpha_j>`` with Bourbaki node
numbering, so column ``j`` lists the fundamental-weight coordinates of the
simple root ``alpha_j``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .groups import FinAbGroup
from .polyhedral.intlinalg import hermite_columns, integer_kernel, inverse, matmul, solve_integral

Weight = tuple[int, ...]

_RANK_OK = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 4,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        fam = str(self.family).upper()
        object.__setattr__(self, "family", fam)
        if fam not in _RANK_OK:
            raise ValueError(f"unknown family {self.family!r}")
        if not _RANK_OK[fam](self.rank):
            raise ValueError(f"rank {self.rank} is not allowed for type {fam}")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _chain(n: int) -> list[list[int]]:
    C = [[0] * n for _ in range(n)]
    for i in range(n):
        C[i][i] = 2
        if i + 1 < n:
            C[i][i + 1] = C[i + 1][i] = -1
    return C


def cartan_matrix(t: SimpleType) -> list[list[int]]:
    n, fam = t.rank, t.family
    if fam == "A":
        return _chain(n)
    if fam == "B":
        C = _chain(n)
        C[n - 1][n - 2] = -2
        return C
    if fam == "C":
        C = _chain(n)
        C[n - 2][n - 1] = -2
        return C
    if fam == "D":
        C = _chain(n)
        C[n - 2][n - 1] = C[n - 1][n - 2] = 0
        C[n - 3][n - 1] = C[n - 1][n - 3] = -1
        return C
    if fam == "E":
        C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)] + [(k, k + 1) for k in range(6, n)]
        for a, b in edges:
            C[a - 1][b - 1] = C[b - 1][a - 1] = -1
        return C
    if fam == "F":
        C = _chain(4)
        C[2][1] = -2
        return C
    # G2: alpha_1 short
    return [[2, -3], [-1, 2]]


def center_group(t: SimpleType) -> FinAbGroup:
    """Weight lattice modulo root lattice."""
    return FinAbGroup.cokernel_of(cartan_matrix(t))


def check_weight(t: SimpleType, lam: Sequence[int]) -> Weight:
    lam = tuple(int(v) for v in lam)
    if len(lam) != t.rank:
        raise ValueError(f"weight {lam} has length {len(lam)}, expected {t.rank} for {t}")
    if any(v < 0 for v in lam):
        raise ValueError(f"weight {lam} is not dominant")
    return lam


def dual_weight(t: SimpleType, lam: Sequence[int]) -> Weight:
    """``-w_0 lambda`` via the diagram involution."""
    lam = check_weight(t, lam)
    if t.family == "A":
        return lam[::-1]
    if t.family == "D" and t.rank % 2 == 1:
        return lam[:-2] + (lam[-1], lam[-2])
    if t.family == "E" and t.rank == 6:
        a1, a2, a3, a4, a5, a6 = lam
        return (a6, a2, a5, a4, a3, a1)
    return lam


def in_root_lattice(t: SimpleType, lam: Sequence[int]) -> bool:
    lam = tuple(int(v) for v in lam)
    if len(lam) != t.rank:
        raise ValueError(f"weight {lam} has length {len(lam)}, expected {t.rank} for {t}")
    return solve_integral(cartan_matrix(t), list(lam)) is not None


def is_self_dual(t: SimpleType, lam: Sequence[int]) -> bool:
    return dual_weight(t, lam) == tuple(lam)


def rho(t: SimpleType) -> Weight:
    return (1,) * t.rank


# --------------------------------------------------------------------------
# isogenies


def _block_cartan(types: Sequence[SimpleType]) -> list[list[int]]:
    r = sum(t.rank for t in types)
    M = [[0] * r for _ in range(r)]
    off = 0
    for t in types:
        C = cartan_matrix(t)
        for i in range(t.rank):
            for j in range(t.rank):
                M[off + i][off + j] = C[i][j]
        off += t.rank
    return M


@dataclass(frozen=True)
class IsogenyDescriptor:
    """``G = (G_ss x Z) / K`` with ``K`` given by generators.

    Each generator pairs a weight-coordinate vector (its class in the
    weight lattice modulo the root lattice of ``G_ss``) with a torus
    element written as rationals modulo 1.
    """

    semisimple: tuple[SimpleType, ...]
    kernel: tuple[tuple[Weight, tuple[Fraction, ...]], ...] = ()
    torus_rank: int = 0
    name: str = field(default="", compare=False)

    def __post_init__(self):
        types = tuple(self.semisimple)
        object.__setattr__(self, "semisimple", types)
        r = sum(t.rank for t in types)
        gens = []
        for z, tor in self.kernel:
            z = tuple(int(v) for v in z)
            tor = tuple(Fraction(v) % 1 for v in tor)
            if len(z) != r:
                raise ValueError(f"invalid center element {z}: expected {r} weight coordinates")
            if len(tor) != self.torus_rank:
                raise ValueError(f"invalid center element: torus part must have {self.torus_rank} entries")
            gens.append((z, tor))
        object.__setattr__(self, "kernel", tuple(gens))

    @property
    def ss_rank(self) -> int:
        return sum(t.rank for t in self.semisimple)

    def center(self) -> FinAbGroup:
        return FinAbGroup.cokernel_of(_block_cartan(self.semisimple))


def simply_connected(*types: SimpleType, torus_rank: int = 0, name: str = "") -> IsogenyDescriptor:
    return IsogenyDescriptor(tuple(types), (), torus_rank, name)


def adjoint(*types: SimpleType, name: str = "") -> IsogenyDescriptor:
    """Quotient by the full center: the fundamental weights generate it."""
    r = sum(t.rank for t in types)
    gens = tuple((tuple(1 if i == j else 0 for i in range(r)), ()) for j in range(r))
    return IsogenyDescriptor(tuple(types), gens, 0, name)


def _subgroup_of_center(types: Sequence[SimpleType], gens: Sequence[Sequence[int]]) -> FinAbGroup:
    C = _block_cartan(types)
    r = len(C)
    if r == 0:
        return FinAbGroup()
    cols = [list(g) for g in gens] + [[C[i][j] for i in range(r)] for j in range(r)]
    big = hermite_columns([[col[i] for col in cols] for i in range(r)])
    # express the root lattice in the basis of the generated lattice
    X = matmul(inverse(big), C)
    X = [[int(v) for v in row] for row in X]
    return FinAbGroup.cokernel_of(X)


def pi1_derived_group(d: IsogenyDescriptor) -> FinAbGroup:
    """Fundamental group of the derived subgroup: ``K`` meets ``Z(G_ss) x {1}``."""
    gens = list(d.kernel)
    if not gens:
        return FinAbGroup()
    k = len(gens)
    if d.torus_rank:
        N = lcm(*[v.denominator for _, tor in gens for v in tor]) if gens else 1
        # integer combinations n with sum n_i t_i = 0 in (Q/Z)^r
        T = [[int(tor[j] * N) for _, tor in gens] for j in range(d.torus_rank)]
        M = [row + [N if i == j else 0 for i in range(d.torus_rank)] for j, row in enumerate(T)]
        K = integer_kernel(M, k + d.torus_rank)
        combos = [[K[i][c] for i in range(k)] for c in range(len(K[0]) if K and K[0] else 0)]
    else:
        combos = [[1 if i == j else 0 for i in range(k)] for j in range(k)]
    r = d.ss_rank
    elems = [[sum(n[i] * gens[i][0][a] for i in range(k)) for a in range(r)] for n in combos]
    return _subgroup_of_center(d.semisimple, elems)


@dataclass(frozen=True)
class Prediction:
    factorial_guaranteed: bool
    gorenstein: bool
    picard_trivial_guaranteed: bool

    def to_dict(self) -> dict:
        return {
            "factorial_guaranteed": self.factorial_guaranteed,
            "gorenstein": self.gorenstein,
            "picard_trivial_guaranteed": self.picard_trivial_guaranteed,
        }


def predict_properties(d: IsogenyDescriptor) -> Prediction:
    sc = pi1_derived_group(d).is_trivial
    return Prediction(sc, True, sc)


# --------------------------------------------------------------------------
# named groups


def named_group(name: str) -> IsogenyDescriptor:
    """Descriptors for common groups: SLn, GLn, PSLn, PGLn, SOn, Spn, SpinN."""
    m = re.fullmatch(r"\s*(SL|GL|PSL|PGL|SO|Sp|SP|Spin|SPIN)\s*(\d+)\s*", name)
    if not m:
        raise ValueError(f"unknown group name {name!r}")
    kind, n = m.group(1).upper(), int(m.group(2))
    if kind == "SL":
        return simply_connected(SimpleType("A", n - 1), name=name)
    if kind in ("PSL", "PGL"):
        return adjoint(SimpleType("A", n - 1), name=name)
    if kind == "GL":
        # center of SL_n glued diagonally to the torus: (zeta, zeta^-1)
        gen = (tuple([1] + [0] * (n - 2)), (Fraction(1, n),))
        return IsogenyDescriptor((SimpleType("A", n - 1),), (gen,), 1, name)
    if kind == "SP":
        if n % 2:
            raise ValueError("Sp needs an even size")
        r = n // 2
        return simply_connected(SimpleType("A", 1) if r == 1 else SimpleType("C", r), name=name)
    if kind in ("SO", "SPIN"):
        spin = kind == "SPIN"
        if n == 3:
            t = (SimpleType("A", 1),)
            return simply_connected(*t, name=name) if spin else adjoint(*t, name=name)
        if n == 4:
            t = (SimpleType("A", 1), SimpleType("A", 1))
            return simply_connected(*t, name=name) if spin else IsogenyDescriptor(t, (((1, 1), ()),), 0, name)
        if n == 6:
            t = (SimpleType("A", 3),)
            return simply_connected(*t, name=name) if spin else IsogenyDescriptor(t, (((0, 1, 0), ()),), 0, name)
        if n % 2:
            t = SimpleType("B", (n - 1) // 2)
            return simply_connected(t, name=name) if spin else IsogenyDescriptor((t,), ((tuple([0] * (t.rank - 1) + [1]), ()),), 0, name)
        t = SimpleType("D", n // 2)
        # the central element acting trivially on the vector representation
        if spin:
            return simply_connected(t, name=name)
        return IsogenyDescriptor((t,), ((tuple([1] + [0] * (t.rank - 1)), ()),), 0, name)
    raise ValueError(f"unknown group name {name!r}")
