from fractions import Fraction

import pytest

from gorquilt.groups import FinAbGroup
from gorquilt.polyhedral.intlinalg import determinant
from gorquilt.rootdatum import (
    IsogenyDescriptor,
    SimpleType,
    adjoint,
    cartan_matrix,
    center_group,
    dual_weight,
    in_root_lattice,
    is_self_dual,
    named_group,
    pi1_derived_group,
    predict_properties,
    rho,
    simply_connected,
)

ALL_TYPES = (
    [SimpleType("A", r) for r in range(1, 9)]
    + [SimpleType("B", r) for r in range(2, 9)]
    + [SimpleType("C", r) for r in range(2, 9)]
    + [SimpleType("D", r) for r in range(4, 9)]
    + [SimpleType(e, r) for e, r in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2))]
)

# |P/Q| from the classification
CENTER_ORDER = {"A": lambda r: r + 1, "B": lambda r: 2, "C": lambda r: 2, "D": lambda r: 4,
                "E": lambda r: {6: 3, 7: 2, 8: 1}[r], "F": lambda r: 1, "G": lambda r: 1}


def test_cartan_examples():
    assert cartan_matrix(SimpleType("A", 1)) == [[2]]
    assert cartan_matrix(SimpleType.parse("A2")) == [[2, -1], [-1, 2]]
    assert determinant(cartan_matrix(SimpleType("G", 2))) == 1


def test_bad_types():
    for text in ("D3", "E5", "X2", "B1"):
        with pytest.raises(ValueError):
            SimpleType.parse(text)


@pytest.mark.parametrize("t", ALL_TYPES, ids=str)
def test_center_order(t):
    Z = center_group(t)
    assert Z.order == abs(determinant(cartan_matrix(t))) == CENTER_ORDER[t.family](t.rank)


def test_center_examples():
    for n in range(2, 7):
        assert center_group(SimpleType("A", n - 1)).invariant_factors == (n,)
    assert center_group(SimpleType("E", 8)).is_trivial
    assert center_group(SimpleType("D", 4)).invariant_factors == (2, 2)
    assert center_group(SimpleType("D", 5)).invariant_factors == (4,)


def test_pi1_examples():
    assert pi1_derived_group(named_group("SL4")).is_trivial
    assert str(pi1_derived_group(named_group("PSL2"))) == "Z/2"
    assert str(pi1_derived_group(named_group("SO4"))) == "Z/2"
    assert str(pi1_derived_group(adjoint(SimpleType("A", 2)))) == "Z/3"
    assert pi1_derived_group(named_group("GL3")).is_trivial
    assert str(pi1_derived_group(named_group("SO6"))) == "Z/2"
    assert str(pi1_derived_group(named_group("SO8"))) == "Z/2"
    assert pi1_derived_group(named_group("Spin8")).is_trivial


def test_torus_quotient_can_leave_pi1():
    # (SL2 x Gm) / <(-1, 1)>: the kernel lies in the semisimple part
    d = IsogenyDescriptor((SimpleType("A", 1),), (((1,), (Fraction(0),)),), 1)
    assert str(pi1_derived_group(d)) == "Z/2"
    # (SL4 x Gm) / <(i, i)> only meets the center in <-1>
    d = IsogenyDescriptor((SimpleType("A", 3),), (((1, 0, 0), (Fraction(1, 2),)),), 1)
    assert str(pi1_derived_group(d)) == "Z/2"


def test_invalid_center_element():
    with pytest.raises(ValueError, match="invalid center element"):
        IsogenyDescriptor((SimpleType("A", 2),), (((1,), ()),))


def test_predictions():
    assert predict_properties(named_group("SL3")).to_dict() == {
        "factorial_guaranteed": True, "gorenstein": True, "picard_trivial_guaranteed": True}
    assert predict_properties(named_group("PSL2")).to_dict() == {
        "factorial_guaranteed": False, "gorenstein": True, "picard_trivial_guaranteed": False}
    assert predict_properties(named_group("GL4")).factorial_guaranteed


def test_dual_weight_examples():
    assert dual_weight(SimpleType("A", 2), (1, 0)) == (0, 1)
    assert dual_weight(SimpleType("A", 3), (2, 0, 1)) == (1, 0, 2)
    assert dual_weight(SimpleType("B", 2), (1, 2)) == (1, 2)
    assert dual_weight(SimpleType("D", 5), (1, 2, 3, 4, 5)) == (1, 2, 3, 5, 4)


def test_root_lattice_examples():
    A1 = SimpleType("A", 1)
    assert in_root_lattice(A1, (2,)) and not in_root_lattice(A1, (1,))
    for t in ALL_TYPES:
        assert in_root_lattice(t, tuple(2 * v for v in rho(t)))


def test_self_duality_examples():
    assert is_self_dual(SimpleType("A", 2), (2, 2))
    assert not is_self_dual(SimpleType("A", 2), (1, 0))
    assert all(is_self_dual(SimpleType("A", 1), (k,)) for k in range(5))


def test_group_text():
    assert str(FinAbGroup()) == "0"
    assert str(FinAbGroup((), 2)) == "Z^2"
    assert str(simply_connected(SimpleType("A", 1), SimpleType("A", 1)).center()) == "Z/2 x Z/2"
