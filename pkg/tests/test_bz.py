import itertools

import pytest

from gorquilt import bz
from gorquilt.polyhedral import cone as pc
from gorquilt.reps import triple_invariant_dim


def test_layout_sizes():
    assert bz.bz_cone(2).equations == () and bz.bz_cone(2).ambient_dim == 3
    L3 = bz.bz_layout(3)
    assert L3.size == 9 and len(L3.hexagons) == 1 and len(bz.bz_cone(3).equations) == 3
    L5 = bz.bz_layout(5)
    assert L5.size == 30 and len(L5.hexagons) == 6


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_dimension(m):
    assert pc.dimension(bz.bz_cone(m)) == (m - 1) * (m + 4) // 2


def test_corners_lie_on_two_sides():
    for m in (2, 3, 4, 5):
        L = bz.bz_layout(m)
        seen = [v for side in L.side_readings for v in side]
        twice = {v for v in seen if seen.count(v) == 2}
        assert len(seen) == 6 * (m - 1) and len(twice) == 3
        assert all(seen.count(v) <= 2 for v in seen)
        corners = {L.index(0, 0, 1), L.index(0, m - 2, 2), L.index(m - 2, 0, 3)}
        assert twice == corners


def test_pi3_examples():
    assert bz.pi3(2, (1, 2, 3)) == ((3,), (5,), (4,))
    assert bz.pi3(2, (1, 1, 1)) == ((2,), (2,), (2,))
    assert bz.pi3(3, (1,) * 9) == ((2, 2), (2, 2), (2, 2))


def test_check_point_rejects_bad_triangles():
    with pytest.raises(ValueError, match="hexagon"):
        bz.check_point(3, (0, 0, 1, 0, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        bz.check_point(3, (1,) * 8)


def test_omega_examples():
    assert bz.omega_bz(2) == (1, 1, 1)
    assert bz.omega_bz(3) == (1,) * 9
    cert = pc.gorenstein_facet_test(bz.bz_cone(4))
    assert set(cert.facet_values) == {1} and cert.omega == (1,) * 18


def test_count_examples():
    assert bz.count_fiber(2, (1,), (1,), (2,)) == 1
    assert bz.count_fiber(2, (1,), (1,), (1,)) == 0
    assert bz.count_fiber(3, (1, 1), (1, 1), (1, 1)) == 2


def test_fiber_points_have_the_right_boundary():
    for pt in bz.fiber_points(3, (2, 1), (1, 2), (1, 1)):
        assert bz.pi3(3, pt) == ((2, 1), (1, 2), (1, 1))


def test_counts_match_oracle_on_a_sample():
    ws = list(itertools.product(range(2), repeat=3))
    for a, b, c in itertools.product(ws, repeat=3):
        assert bz.count_fiber(4, a, b, c) == triple_invariant_dim(4, a, b, c)


def test_gorenstein_examples():
    assert bz.bz_gorenstein(2).omega == (1, 1, 1)
    cert = bz.bz_gorenstein(3, check_degree=9)
    assert cert.is_gorenstein and cert.checked_degree_bound == 9
    assert bz.bz_gorenstein(4).is_gorenstein
    with pytest.raises(ValueError):
        bz.bz_gorenstein(6)


def test_format_point_is_triangular():
    text = bz.format_point(3, range(9))
    assert text.count("[") == 3 and len(text.splitlines()) == 2
