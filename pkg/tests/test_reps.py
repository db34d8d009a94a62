import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gorquilt.cli import caterpillar
from gorquilt.reps import (
    dual_partition,
    lr_coefficient,
    partition_to_weight,
    schur_monomials,
    schur_product,
    schur_triple_dim,
    tree_invariant_dim,
    triple_invariant_dim,
    weight_to_partition,
)


def clebsch_gordan(a: int, b: int) -> list[int]:
    return list(range(abs(a - b), a + b + 1, 2))


def sl2_invariants(weights) -> int:
    """Iterate V_a x V_b = sum V_c over the leaves and count trivial summands."""
    mult = {0: 1}
    for w in weights:
        nxt: dict[int, int] = {}
        for a, c in mult.items():
            for k in clebsch_gordan(a, w):
                nxt[k] = nxt.get(k, 0) + c
        mult = nxt
    return mult.get(0, 0)


def test_partition_conversions():
    assert weight_to_partition(3, (1, 1)) == (2, 1)
    assert weight_to_partition(2, (3,)) == (3,)
    assert weight_to_partition(3, (2, 0)) == (2,)
    assert partition_to_weight(3, (2, 1)) == (1, 1)
    assert partition_to_weight(3, (2, 2, 2)) == (0, 0)


def test_lr_examples():
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((1,), (1,), (3,)) == 0
    assert lr_coefficient((2, 1), (1,), (2, 1, 1)) == 1


def test_lr_symmetry_and_dimension_count():
    # sum over nu of c * f^nu equals binomial * f^lam f^mu; check symmetry instead
    for lam, mu in itertools.product([(1,), (2,), (1, 1), (2, 1), (3, 1)], repeat=2):
        n = sum(lam) + sum(mu)
        for nu in _parts(n):
            assert lr_coefficient(lam, mu, nu) == lr_coefficient(mu, lam, nu)


def _parts(n, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for k in range(min(n, cap), 0, -1):
        for rest in _parts(n - k, k):
            yield (k,) + rest


def test_schur_monomials():
    assert dict(schur_monomials(2, (1,))) == {(1, 0): 1, (0, 1): 1}
    assert sum(schur_monomials(3, (2, 1)).values()) == 8  # dim of the adjoint
    assert dict(schur_product(2, (1,), (1,))) == {(2,): 1, (1, 1): 1}


def test_triple_examples():
    assert triple_invariant_dim(2, (2,), (2,), (2,)) == 1
    assert triple_invariant_dim(3, (1, 1), (1, 1), (1, 1)) == 2
    assert triple_invariant_dim(2, (1,), (1,), (1,)) == 0
    assert triple_invariant_dim(2, (1,), (1,), (2,)) == 1


@settings(max_examples=120, deadline=None)
@given(st.tuples(*[st.integers(0, 5)] * 3))
def test_sl2_triple_matches_clebsch_gordan(w):
    a, b, c = w
    assert triple_invariant_dim(2, (a,), (b,), (c,)) == sl2_invariants([a, b, c])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=3, max_size=3))
def test_sl3_lr_matches_schur(ws):
    assert triple_invariant_dim(3, *ws) == schur_triple_dim(3, *ws)


def test_triple_is_symmetric_and_dual_invariant():
    for ws in itertools.product(itertools.product(range(2), repeat=3), repeat=3):
        v = triple_invariant_dim(4, *ws)
        assert v == triple_invariant_dim(4, ws[1], ws[2], ws[0])
        assert v == triple_invariant_dim(4, *(w[::-1] for w in ws))


def test_dual_partition():
    assert dual_partition(3, (1,)) == (1, 1)
    assert dual_partition(3, (2, 1)) == (2, 1)


def test_tree_examples():
    edges, leaves = caterpillar(4)
    lw = lambda ws: dict(zip(leaves, ws))
    assert tree_invariant_dim(2, edges, lw([(1,), (1,), (1,), (1,)])) == 2
    # total weight 5 is odd, so no invariant exists
    assert tree_invariant_dim(2, edges, lw([(1,), (1,), (1,), (2,)])) == 0
    assert tree_invariant_dim(2, edges, lw([(1,), (1,), (2,), (2,)])) == 2
    e3, l3 = caterpillar(3)
    for ws in itertools.product([(0, 1), (1, 1), (2, 0)], repeat=3):
        assert tree_invariant_dim(3, e3, dict(zip(l3, ws))) == triple_invariant_dim(3, *ws)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=4, max_size=5))
def test_tree_matches_iterated_clebsch_gordan(ws):
    edges, leaves = caterpillar(len(ws))
    assert tree_invariant_dim(2, edges, {l: (w,) for l, w in zip(leaves, ws)}) == sl2_invariants(ws)


def test_tree_errors():
    with pytest.raises(ValueError, match="not a tree"):
        tree_invariant_dim(2, [("a", "b"), ("b", "c"), ("c", "a")], {})
    with pytest.raises(ValueError, match="not trivalent"):
        tree_invariant_dim(2, [("s", "a"), ("s", "b")], {"a": (1,), "b": (1,)})
