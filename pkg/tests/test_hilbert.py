from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gorquilt.hilbert import RationalSeries, hilbert_series, stanley_symmetry, triangulate
from gorquilt.polyhedral import cone as pc

ORTHANT = pc.ConePresentation(3, (), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
PARITY = pc.restrict_lattice(ORTHANT, pc.LatticeDescription(3, congruences=(((1, -1, 0), 2), ((0, 1, -1), 2))))
R13 = pc.cone_from_rays([(1, 0), (1, 3)])


def test_triangulation_examples():
    simp = triangulate([(1, 0), (1, 3)])
    assert len(simp) == 1 and not simp[0].opened
    three = triangulate([(1, 0), (1, 1), (1, 2)])
    assert len(three) == 2
    assert sum(len(s.opened) for s in three) == 1
    assert len(triangulate([(1, 0, 0), (0, 1, 0), (0, 0, 1)])) == 1


def test_series_examples():
    assert hilbert_series(ORTHANT, (1, 1, 1)) == RationalSeries.make({0: 1}, [1, 1, 1])
    assert hilbert_series(PARITY, (1, 1, 1)) == RationalSeries.make({0: 1, 3: 1}, [2, 2, 2])
    assert hilbert_series(R13, (1, 0)) == RationalSeries.make({0: 1, 1: 2}, [1, 1])
    assert hilbert_series(R13, (1, 0)).coefficients(4) == [1, 4, 7, 10, 13]


def test_series_text():
    assert str(hilbert_series(PARITY, (1, 1, 1))) == "num: 1 + t^3; den: (1-t^2)(1-t^2)(1-t^2)"


def test_stanley_examples():
    assert stanley_symmetry(RationalSeries.make({0: 1}, [1, 1, 1]), 3) == 3
    assert stanley_symmetry(RationalSeries.make({0: 1, 3: 1}, [2, 2, 2]), 3) == 3
    assert stanley_symmetry(RationalSeries.make({0: 1, 1: 2}, [1, 1]), 2) is None


def test_rational_series_arithmetic():
    a = RationalSeries.make({0: 1}, [1])
    b = RationalSeries.make({0: 1, 1: 1}, [2])
    assert a == b
    assert (a + a).coefficients(3) == [2, 2, 2, 2]


@settings(max_examples=30, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 3), st.integers(0, 3), st.integers(0, 3)), min_size=3, max_size=5, unique=True))
def test_series_matches_enumeration(gens):
    c = pc.cone_from_rays(gens)
    if pc.dimension(c) != 3:
        return
    g = (1, 0, 0)
    h = hilbert_series(c, g, validate_to=0)
    assert h.coefficients(5) == pc.count_by_degree(c, g, 5)


def test_triangulation_order_does_not_matter():
    c = pc.cone_from_rays([(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1), (1, 2, 1)])
    rays = pc.rays(c)
    a = hilbert_series(c, (1, 0, 0))
    b = hilbert_series(c, (1, 0, 0), order=list(reversed(range(len(rays)))))
    assert a == b


def test_rational_grading():
    even = pc.restrict_lattice(ORTHANT, pc.LatticeDescription(3, congruences=(((1, 1, 1), 2),)))
    h = hilbert_series(even, (Fraction(1, 2),) * 3, validate_to=6)
    assert h == RationalSeries.make({0: 1, 1: 3}, [1, 1, 1])
    assert stanley_symmetry(h, 3) is None
    with pytest.raises(ValueError, match="not integral"):
        hilbert_series(PARITY, (Fraction(1, 2),) * 3)


def test_mismatch_is_reported(monkeypatch):
    import gorquilt.hilbert as hs

    monkeypatch.setattr(hs, "count_by_degree", lambda *a, **k: [0] * 10)
    with pytest.raises(RuntimeError):
        hs.hilbert_series(ORTHANT, (1, 1, 1))
