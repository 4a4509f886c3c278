"""Finite bilinear/quadratic forms and isometry search."""

from fractions import Fraction

import pytest

from latconf.errors import DimensionError
from latconf.finite_forms import (
    FiniteForm,
    apply_images,
    finite_form_automorphisms,
    finite_form_isometric,
    trivial_form,
)
from latconf.lattices import Dn, Dpq, Zpq
from latconf.matrices import Matrix


def test_construction_validation():
    with pytest.raises(DimensionError):
        FiniteForm((2, 3), Matrix.zeros(2, 2))  # 3 does not divide by 2
    with pytest.raises(DimensionError):
        FiniteForm((2,), Matrix.zeros(2, 2))


def test_group_structure():
    f = Dn(6).discriminant_form()
    assert f.orders == (2, 2)
    assert f.group_order() == 4
    assert len(f.elements()) == 4
    assert f.add((1, 0), (1, 1)) == (0, 1)
    assert f.element_order((1, 1)) == 2
    assert len(f.subgroup([(1, 0)])) == 2
    assert len(f.all_subgroups()) == 5  # trivial, three Z/2, full


def test_polarization_identity():
    f = Zpq(2, 4).rescale(2).discriminant_form()
    els = f.elements()
    for x in els[:8]:
        for y in els[:8]:
            lhs = (f.q(f.add(x, y)) - f.q(x) - f.q(y)) % 2
            assert lhs == (2 * f.b(x, y)) % 2


def test_d6_quadratic_values():
    f = Dn(6).discriminant_form()
    values = sorted(f.q(e) for e in f.elements() if e != f.zero())
    # the three nonzero classes of the D6 discriminant form
    assert values == [Fraction(1), Fraction(3, 2), Fraction(3, 2)]


def test_isometric_reflexive_symmetric():
    forms = [
        Dn(6).discriminant_form(),
        Dpq(2, 4).discriminant_form(),
        Zpq(2, 0).rescale(2).discriminant_form(),
    ]
    for f in forms:
        compare = "quadratic" if f.quadratic is not None else "bilinear"
        assert finite_form_isometric(f, f, compare) is not None
    a, b = forms[0], forms[1]
    assert (finite_form_isometric(a, b, "quadratic") is None) == (
        finite_form_isometric(b, a, "quadratic") is None
    )


def test_d6_vs_index2_sublattices():
    d6 = Dn(6).discriminant_form()
    # quadratic forms of D6 and D(2,4) coincide
    assert finite_form_isometric(d6, Dpq(2, 4).discriminant_form(),
                                 "quadratic") is not None
    # bilinear forms of D6 and D(2,2) do not
    assert finite_form_isometric(d6, Dpq(2, 2).discriminant_form(),
                                 "bilinear") is None


def test_witness_preserves_form():
    a = Dn(6).discriminant_form()
    images = finite_form_isometric(a, a, "quadratic")
    for x in a.elements():
        for y in a.elements():
            assert a.b(apply_images(a, images, x),
                       apply_images(a, images, y)) == a.b(x, y)


def test_automorphism_count_small():
    f = Dn(6).discriminant_form()
    autos = list(finite_form_automorphisms(f, compare="quadratic"))
    # the two order-2 elements of value 1 may be exchanged
    assert len(autos) == 2


def test_trivial_form_and_json():
    t = trivial_form(True)
    assert t.group_order() == 1
    f = Dpq(2, 4).discriminant_form()
    assert FiniteForm.from_json(f.to_json()) == f
