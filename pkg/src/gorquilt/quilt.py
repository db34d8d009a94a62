"""Quilts: BZ triangles glued along a trivalent graph.

Every trivalent vertex carries one BZ triangle; its three sides are the
half-edges at that vertex.  Two half-edges forming an edge are glued by
requiring the weight read on one side to be the dual (reversed) weight of
the other.  In tree mode, edges ending at a leaf have a single half-edge
whose weight stays free.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Mapping, Optional, Sequence

from .bz import bz_layout
from .hilbert import RationalSeries, hilbert_series, stanley_symmetry
from .kernels import IntegerSystem, count_points, tighten_bounds
from .polyhedral.cone import (
    ConePresentation,
    GorensteinCertificate,
    LatticeDescription,
    _prepare,
    class_group,
    contains,
    degree,
    dimension,
    gorenstein_bruteforce,
    gorenstein_facet_test,
    is_interior,
)
from .reps import triple_invariant_dim

HalfEdge = tuple[int, int]  # (trinode index, side)


@dataclass(frozen=True)
class TrivalentGraph:
    vertices: tuple
    edges: tuple[tuple, ...]
    leaves: tuple = ()

    @property
    def tree_mode(self) -> bool:
        return bool(self.leaves)

    def degree(self, v) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def validate(self) -> "TrivalentGraph":
        vs = set(self.vertices)
        if any(a not in vs or b not in vs for a, b in self.edges):
            raise ValueError("edge refers to an unknown vertex")
        leaves = set(self.leaves)
        for v in self.vertices:
            d = self.degree(v)
            want = 1 if v in leaves else 3
            if d != want:
                raise ValueError(f"degree {d} != {want} at vertex {v}")
        comps = _components(self.vertices, self.edges)
        beta1 = len(self.edges) - len(self.vertices) + comps
        if self.tree_mode:
            if comps != 1 or beta1 != 0:
                raise ValueError("tree mode needs a connected acyclic graph")
        elif beta1 < 2:
            raise ValueError("a closed trivalent graph needs first Betti number at least 2")
        return self

    @property
    def genus(self) -> int:
        return len(self.edges) - len(self.vertices) + _components(self.vertices, self.edges)

    def canonical_text(self) -> str:
        lines = [f"edge {a} {b}" for a, b in self.edges] + [f"leaf {v}" for v in self.leaves]
        return "\n".join(lines) + "\n"

    @property
    def hash(self) -> str:
        return hashlib.sha256(self.canonical_text().encode()).hexdigest()[:12]


def _components(vertices, edges) -> int:
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(v) for v in vertices})


def make_graph(edges: Sequence[tuple], leaves: Sequence = ()) -> TrivalentGraph:
    verts: list = []
    for a, b in edges:
        for v in (a, b):
            if v not in verts:
                verts.append(v)
    return TrivalentGraph(tuple(verts), tuple((a, b) for a, b in edges), tuple(leaves)).validate()


BUILTIN_GRAPHS = {
    "theta": lambda: make_graph([("u", "v")] * 3),
    "dumbbell": lambda: make_graph([("u", "u"), ("v", "v"), ("u", "v")]),
    "tree3": lambda: make_graph([("t", "a"), ("t", "b"), ("t", "c")], leaves=["a", "b", "c"]),
    "tree4": lambda: make_graph([("s", "a"), ("s", "b"), ("s", "t"), ("t", "c"), ("t", "d")], leaves=["a", "b", "c", "d"]),
}


def parse_graph(text: str) -> TrivalentGraph:
    """Lines ``edge u v`` (loops as ``u = v``) and ``leaf v``; ``#`` starts a comment."""
    edges, leaves = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "edge" and len(parts) == 3:
            edges.append((parts[1], parts[2]))
        elif parts[0] == "leaf" and len(parts) == 2:
            leaves.append(parts[1])
        else:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}")
    if not edges:
        raise ValueError("graph has no edges")
    return make_graph(edges, leaves)


def load_graph(name_or_path: str) -> TrivalentGraph:
    if name_or_path in BUILTIN_GRAPHS:
        return BUILTIN_GRAPHS[name_or_path]()
    stem = name_or_path.rsplit("/", 1)[-1].split(".", 1)[0]
    try:
        with open(name_or_path) as fh:
            return parse_graph(fh.read())
    except FileNotFoundError:
        if stem in BUILTIN_GRAPHS:
            return BUILTIN_GRAPHS[stem]()
        raise


# --------------------------------------------------------------------------
# split forest


@dataclass(frozen=True)
class SplitForest:
    trinodes: tuple  # graph vertices of degree 3, in order
    half_edges: tuple[tuple[HalfEdge, ...], ...]  # per edge: 2 half-edges (1 for leaf edges)

    def psi(self) -> dict[HalfEdge, int]:
        return {h: e for e, hs in enumerate(self.half_edges) for h in hs}


def split_graph(g: TrivalentGraph) -> SplitForest:
    leaves = set(g.leaves)
    trinodes = tuple(v for v in g.vertices if v not in leaves)
    index = {v: i for i, v in enumerate(trinodes)}
    used = {v: 0 for v in trinodes}
    halves = []
    for a, b in g.edges:
        hs = []
        for v in (a, b):
            if v in leaves:
                continue
            hs.append((index[v], used[v]))
            used[v] += 1
        halves.append(tuple(hs))
    if any(k != 3 for k in used.values()):
        raise ValueError("degree != 3 at a trinode")
    return SplitForest(trinodes, tuple(halves))


# --------------------------------------------------------------------------
# compiled cones


LATTICES = ("sl", "psl")


def _lattice_modulus(m: int, lattice) -> int:
    if lattice in (None, "sl"):
        return 1
    if lattice == "psl":
        return m
    d = int(lattice)
    if d < 1 or m % d:
        raise ValueError(f"center quotient order {d} must divide m={m}")
    return d


@dataclass(frozen=True)
class QuiltSpec:
    graph: TrivalentGraph
    m: int
    modulus: int
    forest: SplitForest
    compiled: ConePresentation

    @property
    def block(self) -> int:
        return bz_layout(self.m).size

    def side_pairs(self, h: HalfEdge) -> list[tuple[int, int]]:
        v, side = h
        off = v * self.block
        return [(off + p, off + q) for p, q in bz_layout(self.m).side_pairs(side)]

    def weight_rows(self, h: HalfEdge) -> list[list[int]]:
        """Rows of linear forms giving the weight read at half-edge ``h``."""
        rows = []
        for p, q in self.side_pairs(h):
            row = [0] * self.compiled.ambient_dim
            row[p] += 1
            row[q] += 1
            rows.append(row)
        return rows

    def edge_weight(self, x: Sequence[int], e: int) -> tuple[int, ...]:
        h = self.forest.half_edges[e][0]
        return tuple(x[p] + x[q] for p, q in self.side_pairs(h))

    @property
    def lattice_name(self) -> str:
        return "sl" if self.modulus == 1 else ("psl" if self.modulus == self.m else f"quotient-{self.modulus}")


def _gluing_rows(spec_m: int, block: int, forest: SplitForest, N: int) -> list[tuple[int, ...]]:
    L = bz_layout(spec_m)
    rows = []
    for hs in forest.half_edges:
        if len(hs) != 2:
            continue
        (v, i), (w, j) = hs
        pi = L.side_pairs(i)
        pj = L.side_pairs(j)
        for k in range(spec_m - 1):
            row = [0] * N
            p, q = pi[k]
            r, s = pj[spec_m - 2 - k]
            row[v * block + p] += 1
            row[v * block + q] += 1
            row[w * block + r] -= 1
            row[w * block + s] -= 1
            if any(row):
                rows.append(tuple(row))
    return rows


@lru_cache(maxsize=64)
def quilt_cone(g: TrivalentGraph, m: int, lattice="sl") -> QuiltSpec:
    """Product of per-vertex BZ cones cut by the duality gluing equations."""
    if m < 2:
        raise ValueError("m must be at least 2")
    forest = split_graph(g)
    L = bz_layout(m)
    B = L.size
    N = B * len(forest.trinodes)
    eqs: list[tuple[int, ...]] = []
    for v in range(len(forest.trinodes)):
        for row in L.hexagon_equations():
            eqs.append(tuple([0] * (v * B) + list(row) + [0] * (N - (v + 1) * B)))
    eqs.extend(_gluing_rows(m, B, forest, N))
    ineqs = tuple(tuple(1 if i == j else 0 for i in range(N)) for j in range(N))
    d = _lattice_modulus(m, lattice)
    lat = None
    if d > 1:
        cong = []
        for hs in forest.half_edges:
            v, side = hs[0]
            row = [0] * N
            for k, (p, q) in enumerate(L.side_pairs(side)):
                row[v * B + p] += k + 1
                row[v * B + q] += k + 1
            cong.append((tuple(row), d))
        lat = LatticeDescription(N, congruences=tuple(cong))
    cone = ConePresentation(N, tuple(eqs), ineqs, lat)
    return QuiltSpec(g, m, d, forest, cone)


def omega_quilt(spec: QuiltSpec) -> tuple[int, ...]:
    w = (1,) * spec.compiled.ambient_dim
    if not contains(spec.compiled, w) or not is_interior(spec.compiled, w):
        raise AssertionError("the all-ones quilt is not an interior point; layout bug")
    return w


def default_grading(spec: QuiltSpec) -> tuple[Fraction, ...]:
    """Total entry sum, scaled so that it takes coprime values on the lattice."""
    prep = _prepare(spec.compiled)
    vals = [sum(prep.W[i][j] for i in range(prep.n)) for j in range(prep.s)]
    g = 0
    for v in vals:
        g = gcd(g, v)
    g = g or 1
    return tuple(Fraction(1, g) for _ in range(prep.n))


def certify_gorenstein(spec: QuiltSpec, D: Optional[int] = None, max_vertices: int = 4, max_m: int = 3) -> GorensteinCertificate:
    """Facet-test certificate, confirmed by brute force to degree ``D``.

    ``D`` defaults to three times the degree of the generator under the
    default grading.
    """
    if len(spec.forest.trinodes) > max_vertices or spec.m > max_m:
        raise ValueError(f"instance exceeds the cap (m <= {max_m}, at most {max_vertices} trinodes)")
    cert = gorenstein_facet_test(spec.compiled)
    if not cert.is_gorenstein:
        return cert
    omega = omega_quilt(spec)
    if cert.omega != omega:
        raise RuntimeError("facet-test generator differs from the all-ones quilt")
    grading = default_grading(spec)
    bound = D if D is not None else 3 * degree(grading, omega)
    bf = gorenstein_bruteforce(spec.compiled, omega, grading, bound)
    if not bf.confirmed:
        raise RuntimeError(f"brute force found {bf.counterexample} outside omega + P")
    return GorensteinCertificate(cert.verdict, cert.method, cert.omega, cert.facet_values, bound)


def graded_dim(spec: QuiltSpec, edge_weights: Mapping[int, Sequence[int]], backend=None) -> int:
    """Number of quilt points with prescribed weights on the given edges.

    The weight of edge ``e`` is read at its first half-edge; edges not in
    ``edge_weights`` are summed over.
    """
    m = spec.m
    c = spec.compiled
    N = c.ambient_dim
    rows = [list(e) for e in c.equations]
    rhs = [0] * len(rows)
    for e, w in sorted(edge_weights.items()):
        w = [int(v) for v in w]
        if len(w) != m - 1:
            raise ValueError(f"edge weights must have {m - 1} coordinates")
        if any(v < 0 for v in w):
            return 0
        rows.extend(spec.weight_rows(spec.forest.half_edges[e][0]))
        rhs.extend(w)
    if spec.modulus > 1:
        # the lattice condition is read off the fixed weights
        for e, w in edge_weights.items():
            if sum((k + 1) * v for k, v in enumerate(w)) % spec.modulus:
                return 0
        free = [e for e in range(len(spec.forest.half_edges)) if e not in edge_weights]
        if free:
            raise ValueError("graded_dim with a quotient lattice needs every edge weight fixed")
    b = tighten_bounds(rows, rhs, [0] * N, [None] * N)
    if b is None:
        return 0
    lo, hi = b
    if any(v is None for v in hi):
        raise ValueError("fiber is not bounded; fix more edge weights")
    return count_points(IntegerSystem.build(rows, rhs, lo, hi), backend=backend)


def vertex_weights(spec: QuiltSpec, edge_weights: Mapping[int, Sequence[int]]) -> list[tuple]:
    """Weights read on the three sides of every trinode (dual on second half-edges)."""
    per: dict[HalfEdge, tuple[int, ...]] = {}
    for e, hs in enumerate(spec.forest.half_edges):
        w = tuple(int(v) for v in edge_weights[e])
        per[hs[0]] = w
        if len(hs) == 2:
            per[hs[1]] = w[::-1]
    return [tuple(per[(v, s)] for s in range(3)) for v in range(len(spec.forest.trinodes))]


def product_of_triples(spec: QuiltSpec, edge_weights: Mapping[int, Sequence[int]]) -> int:
    total = 1
    for a, b, c in vertex_weights(spec, edge_weights):
        total *= triple_invariant_dim(spec.m, a, b, c)
        if not total:
            break
    return total


def quilt_hilbert_series(spec: QuiltSpec, grading: Optional[Sequence] = None, validate_to: int = 4) -> tuple[RationalSeries, Optional[int]]:
    grading = default_grading(spec) if grading is None else grading
    h = hilbert_series(spec.compiled, grading, validate_to=validate_to)
    return h, stanley_symmetry(h, dimension(spec.compiled))


def class_group_of_degeneration(spec: QuiltSpec):
    return class_group(spec.compiled)
