import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gorquilt import _accel, bz
from gorquilt.kernels import IntegerSystem, count_points, enumerate_points, tighten_bounds

BACKENDS = ["numba", "numpy"]


def brute(eq, rhs, lo, hi, cong, mods):
    out = []
    for x in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        if any(sum(c * v for c, v in zip(row, x)) != r for row, r in zip(eq, rhs)):
            continue
        if any(sum(c * v for c, v in zip(row, x)) % m for row, m in zip(cong, mods)):
            continue
        out.append(x)
    return sorted(out)


@st.composite
def systems(draw):
    n = draw(st.integers(1, 4))
    lo = draw(st.lists(st.integers(-2, 1), min_size=n, max_size=n))
    hi = [a + draw(st.integers(0, 3)) for a in lo]
    E = draw(st.integers(0, 2))
    eq = [draw(st.lists(st.integers(-2, 2), min_size=n, max_size=n)) for _ in range(E)]
    rhs = draw(st.lists(st.integers(-3, 3), min_size=E, max_size=E))
    C = draw(st.integers(0, 1))
    cong = [draw(st.lists(st.integers(0, 3), min_size=n, max_size=n)) for _ in range(C)]
    mods = draw(st.lists(st.integers(2, 3), min_size=C, max_size=C))
    return eq, rhs, lo, hi, cong, mods


@settings(max_examples=200, deadline=None)
@given(systems())
def test_backends_match_brute_force(sys_):
    eq, rhs, lo, hi, cong, mods = sys_
    expected = brute(*sys_)
    system = IntegerSystem.build(eq, rhs, lo, hi, cong, mods)
    for backend in BACKENDS:
        assert count_points(system, backend=backend) == len(expected)
        pts = enumerate_points(system, backend=backend)
        assert sorted(tuple(r) for r in pts.tolist()) == expected


@pytest.mark.parametrize("m,w", [(3, (2, 2)), (4, (1, 0, 1)), (4, (2, 0, 2))])
def test_backends_agree_on_bz_fibers(m, w):
    counts = {b: bz.count_fiber(m, w, w, w[::-1], backend=b) for b in BACKENDS}
    assert counts["numba"] == counts["numpy"] > 0
    pts = {b: bz.fiber_points(m, w, w, w[::-1], backend=b) for b in BACKENDS}
    assert pts["numba"] == pts["numpy"]


def test_tighten_bounds_detects_infeasibility_and_closes_bounds():
    assert tighten_bounds([[1, 1]], [-1], [0, 0], [None, None]) is None
    lo, hi = tighten_bounds([[1, 1]], [5], [0, 0], [None, None])
    assert (lo, hi) == ([0, 0], [5, 5])


def test_backend_selection(monkeypatch):
    monkeypatch.setenv("GORQUILT_KERNEL", "numpy")
    assert _accel.default_backend() == "numpy"
    monkeypatch.setenv("GORQUILT_KERNEL", "bogus")
    with pytest.raises(ValueError):
        _accel.default_backend()
    monkeypatch.delenv("GORQUILT_KERNEL")
    assert _accel.default_backend() in _accel.BACKENDS
    with pytest.raises(ValueError):
        _accel.resolve_backend("fortran")


def test_empty_system_counts_single_point():
    system = IntegerSystem.build([], [], [0, 0], [0, 0])
    assert count_points(system) == 1
    assert np.array_equal(enumerate_points(system), np.zeros((1, 2), dtype=np.int64))
