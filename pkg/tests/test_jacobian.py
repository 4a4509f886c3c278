"""Jacobian-ring graded pieces and the period-map first approximation."""

import random
from fractions import Fraction

import pytest

from latconf.configs import smoothness
from latconf.errors import DimensionError, SmoothnessRequired
from latconf.jacobian import (
    AMBIENT,
    _slot,
    deformed_system,
    invariant_deformations,
    kappa_rows,
    kappa_sum_bases,
    kappa_target,
    kernel_family_vectors,
    monomial_labels,
    period_map,
    squarefree_triples,
)
from latconf.matrices import Matrix


def _smooth_system(rng):
    while True:
        q = Matrix([[rng.randint(-9, 9) for _ in range(7)]
                    for _ in range(4)])
        if q.rank() == 4 and smoothness(q)[0]:
            return q


def test_monomial_labels_and_slots():
    labels = monomial_labels()
    assert len(labels) == AMBIENT == 28
    for i in range(1, 8):
        for j in range(4):
            assert labels[_slot(i, j)] == (i, j + 1)


def test_system_validation():
    with pytest.raises(DimensionError):
        invariant_deformations(Matrix([[1, 2], [3, 4]]))


def test_dimensions_on_smooth_systems():
    rng = random.Random(17)
    for _ in range(3):
        q = _smooth_system(rng)
        inv = invariant_deformations(q)
        assert inv.dimension == 6
        for kappa in range(1, 8):
            first, second = kappa_target(q, kappa)
            assert (first.dimension, second.dimension) == (4, 2)
            data = period_map(q, kappa)
            assert data.rank == 4
            assert data.kernel.rows == 2
            assert data.to_json() == {
                "dim_R10": 6,
                "dim_target": [4, 2],
                "rank": 4,
                "kernel_dim": 2,
            }


def test_relation_counts():
    rng = random.Random(18)
    q = _smooth_system(rng)
    inv = invariant_deformations(q)
    # 16 quadric rows + 7 jacobian rows with a single overlap
    assert inv.relation_matrix.rows == 16 + 7
    assert inv.relation_matrix.rank() == 22
    first, _ = kappa_target(q, 1)
    assert first.relation_matrix.rows == 16 + 7 + 6
    assert first.relation_matrix.rank() == 24


def test_kappa_sum_bases_and_squarefree_triples():
    for kappa in range(1, 8):
        bases = kappa_sum_bases(kappa)
        assert len(bases) == 4
        for t in bases:
            assert kappa not in t
            assert t[0] ^ t[1] ^ t[2] == kappa
        assert squarefree_triples(kappa) == bases[:2]
    assert kappa_sum_bases(7) == [(1, 2, 4), (1, 3, 5), (2, 3, 6), (4, 5, 6)]


def test_kernel_family_maps_to_zero():
    rng = random.Random(19)
    q = _smooth_system(rng)
    for kappa in (2, 5):
        first, _ = kappa_target(q, kappa)
        data = period_map(q, kappa)
        for vec in kernel_family_vectors(q, kappa):
            assert all(x == 0 for x in first.reduce_vector(vec))
            coords = data.source.reduce_vector(vec)
            image = data.matrix * Matrix.from_columns([coords])
            assert image.is_zero()


def test_degenerate_system_requires_flag():
    rng = random.Random(23)
    kappa = 3
    while True:
        q = _smooth_system(rng)
        cols = [list(q.column(j)) for j in range(7)]
        cols[kappa - 1] = cols[0]
        bad = Matrix.from_columns(cols)
        if bad.rank() == 4 and not smoothness(bad)[0]:
            break
    with pytest.raises(SmoothnessRequired):
        kappa_target(bad, kappa)
    first, _ = kappa_target(bad, kappa, require_smooth=False)
    assert first.dimension != 4


def test_deformed_system_identity_and_linearity():
    rng = random.Random(29)
    q = _smooth_system(rng)
    direction = [Fraction(rng.randint(-5, 5)) for _ in range(AMBIENT)]
    assert deformed_system(q, direction, 0) == q
    d1 = deformed_system(q, direction, 1)
    d2 = deformed_system(q, direction, 2)
    assert d2 - d1 == d1 - q
    for i in range(1, 8):
        for j in range(4):
            assert (d1.entry(j, i - 1) - q.entry(j, i - 1)
                    == direction[_slot(i, j)])


def test_kappa_rows_shape():
    rng = random.Random(31)
    q = _smooth_system(rng)
    rows = kappa_rows(q, 4)
    assert len(rows) == 6
    assert all(len(r) == AMBIENT for r in rows)
