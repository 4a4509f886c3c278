"""The 7-dimensional quadratic F2 space."""

from hypothesis import given, settings
from hypothesis import strategies as st

from latconf import f2space

bits = st.lists(st.integers(min_value=0, max_value=1), min_size=7,
                max_size=7).map(tuple)


def test_census():
    assert f2space.census() == {7: 1, 5: 7, 3: 21, 1: 35}


def test_isotropy_rule():
    from itertools import product

    for x in product((0, 1), repeat=7):
        assert f2space.is_isotropic(x) == (sum(x) in (0, 3, 4, 7))


@settings(max_examples=60, deadline=None)
@given(bits, bits)
def test_polarization(x, y):
    lhs = (f2space.q(f2space.add(x, y)) + f2space.q(x) + f2space.q(y)) % 2
    assert lhs == f2space.b(x, y)


@settings(max_examples=60, deadline=None)
@given(bits)
def test_weight_shared_with_complement(x):
    ones = (1,) * 7
    assert f2space.weight(x) == f2space.weight(f2space.add(x, ones))
    assert f2space.b(x, ones) == 0  # all-ones spans the radical


def test_g_totally_isotropic():
    assert f2space.g_is_totally_isotropic()
    assert len(f2space.g_elements()) == 8


def test_characters_of_columns():
    assert [f2space.character_of_column(i) for i in range(7)] == [
        1, 2, 3, 4, 5, 6, 7
    ]


def test_character_bases():
    bases = f2space.character_bases()
    assert len(bases) == 28
    census = f2space.character_basis_census()
    assert census == {k: 4 for k in range(1, 8)}
    for base in bases:
        a, b, c = tuple(base)
        assert a ^ b ^ c != 0
