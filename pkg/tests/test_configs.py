"""Line configurations: stability, canonical forms, Cremona, groups."""

import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latconf.configs import (
    CHAR_LABELS,
    PAIR_LABELS,
    ConfigMatrix,
    act_gl3f2,
    act_s4,
    act_torus,
    act_wreath,
    canonical_form,
    complete_quadrangle,
    cremona,
    drop_line,
    drop_pairs,
    equivalent,
    etale_slice,
    gl3f2_elements,
    node_report,
    plucker,
    quadrangle_classes,
    quadrangle_slice,
    s4_to_wreath,
    seven_line_config,
    smoothness,
    stability,
    triple_points,
    wreath_elements,
    wreath_signature,
)
from latconf.errors import DimensionError, LabelError, VerticesCollinear
from latconf.matrices import Matrix

GENERIC = ConfigMatrix([[1, 0, 0, 1, 2, 3], [0, 1, 0, 1, 5, 7],
                        [0, 0, 1, 1, 11, 13]])


def test_config_validation():
    with pytest.raises(DimensionError):
        ConfigMatrix([[1, 0], [0, 1]])
    with pytest.raises(DimensionError):
        ConfigMatrix([[1, 0, 0, 1, 2, 0], [0, 1, 0, 1, 5, 0],
                      [0, 0, 1, 1, 11, 0]])  # zero column
    with pytest.raises(LabelError):
        ConfigMatrix(GENERIC.matrix, (0, 0, 0, 1, 1, 2))


def test_json_round_trip():
    assert ConfigMatrix.from_json(GENERIC.to_json()).matrix == GENERIC.matrix


def test_plucker_values():
    coords = plucker(GENERIC)
    assert len(coords) == 20
    assert coords[(0, 1, 2)] == 1
    assert coords[(0, 1, 3)] == 1


def test_stability_strata_witnesses():
    cases = [
        (GENERIC, "Stable", "411"),
        (complete_quadrangle(), "Stable", "321"),
        (ConfigMatrix([[1, 0, 1, 1, 1, 0], [0, 1, 1, 2, 3, 0],
                       [0, 0, 0, 0, 0, 1]]), "Unstable", "141"),
        (ConfigMatrix([[1, 1, 1, 0, 1, 0], [0, 0, 0, 1, 1, 0],
                       [0, 0, 0, 0, 0, 1]]), "Unstable", "213"),
        (ConfigMatrix([[1, 1, 0, 0, 1, 1], [0, 0, 1, 1, 1, 1],
                       [0, 0, 0, 0, 1, 1]]), "Polystable", "222"),
        (ConfigMatrix([[1, 0, 1, 1, 0, 0], [0, 1, 1, 2, 0, 0],
                       [0, 0, 0, 0, 1, 1]]), "Polystable", "231"),
        (ConfigMatrix([[1, 0, 1, 1, 0, 1], [0, 1, 1, 2, 0, 0],
                       [0, 0, 0, 0, 1, 1]]), "StrictlySemistable", "231"),
        (ConfigMatrix([[1, 0, 0, 1, 2, 2], [0, 1, 0, 1, 3, 3],
                       [0, 0, 1, 1, 1, 1]]), "StrictlySemistable", "312"),
        (ConfigMatrix([[1, 1, 1, 1, 0, 1], [0, 0, 1, 2, 0, 0],
                       [0, 0, 0, 0, 1, 1]]), "StrictlySemistable", "222"),
    ]
    for config, status, stratum in cases:
        report = stability(config)
        assert (report.status, report.stratum) == (status, stratum)


def test_stable_configs_have_at_most_four_triple_points():
    rng = random.Random(2)
    found = 0
    while found < 25:
        try:
            c = ConfigMatrix([[rng.randint(-9, 9) for _ in range(6)]
                              for _ in range(3)])
        except DimensionError:
            continue
        if stability(c).status != "Stable":
            continue
        found += 1
        assert len(triple_points(c)) <= 4


def test_quadrangle():
    quad = complete_quadrangle()
    assert stability(quad).status == "Stable"
    assert len(triple_points(quad)) == 4
    trivial, even, full = quadrangle_classes()
    assert (len(trivial), len(even), len(full)) == (2, 2, 1)


small_frac = st.integers(min_value=-7, max_value=7)


@settings(max_examples=25, deadline=None)
@given(st.lists(small_frac, min_size=9, max_size=9),
       st.lists(st.integers(min_value=1, max_value=7), min_size=6,
                max_size=6))
def test_canonical_form_invariance(entries, scalars):
    g = Matrix([entries[0:3], entries[3:6], entries[6:9]])
    if g.det() == 0:
        return
    base, frame = canonical_form(GENERIC)
    moved = act_torus(scalars, GENERIC.with_matrix(g * GENERIC.matrix))
    again, frame2 = canonical_form(moved)
    assert frame == frame2
    assert base.matrix == again.matrix


def test_canonical_form_idempotent():
    base, _ = canonical_form(GENERIC)
    again, _ = canonical_form(base)
    assert base.matrix == again.matrix


def test_cremona_involution_samples():
    rng = random.Random(3)
    done = 0
    while done < 10:
        try:
            c = ConfigMatrix([[rng.randint(-9, 9) for _ in range(6)]
                              for _ in range(3)])
        except DimensionError:
            continue
        if stability(c).status != "Stable":
            continue
        try:
            back = cremona(cremona(c))
        except VerticesCollinear:
            continue
        assert equivalent(back, c)
        done += 1


def test_cremona_collinear_vertices_raise():
    # the three pair-lines all pass through (0:0:1), so the pair
    # vertices are collinear and the involution is undefined
    bad = ConfigMatrix([[1, 2, 1, 3, 1, 4], [1, 2, 2, 6, 3, 12],
                        [0, 0, 0, 0, 0, 0]])
    with pytest.raises((VerticesCollinear, DimensionError)):
        cremona(bad)


def test_etale_slice_identity():
    rng = random.Random(5)
    done = 0
    while done < 10:
        t = Fraction(rng.randint(2, 9))
        a, b, c, d = (Fraction(rng.randint(1, 9)) for _ in range(4))
        try:
            lhs = cremona(etale_slice(t, a, b, c, d))
        except VerticesCollinear:
            continue
        rhs = etale_slice(t, c, d, a, b).permute_columns([3, 2, 1, 0, 4, 5])
        assert equivalent(lhs, ConfigMatrix(rhs.matrix, PAIR_LABELS))
        done += 1


def test_family_minors_symbolic_pattern():
    for a, b, c, d in [(2, 3, 5, 7),
                       (Fraction(1, 2), Fraction(-1, 3), Fraction(2, 5), 4)]:
        m = plucker(quadrangle_slice(a, b, c, d))
        assert m[(0, 2, 4)] == 4 * Fraction(b)
        assert m[(1, 3, 4)] == -4 * Fraction(a)
        assert m[(0, 3, 5)] == 4 * Fraction(d)
        assert m[(1, 2, 5)] == -4 * Fraction(c)


def _smooth_system(rng):
    while True:
        q = Matrix([[rng.randint(-9, 9) for _ in range(7)]
                    for _ in range(4)])
        if q.rank() == 4 and smoothness(q)[0]:
            return q


def test_seven_line_config_and_drop():
    rng = random.Random(8)
    q = _smooth_system(rng)
    config = seven_line_config(q)
    assert config.labels == CHAR_LABELS
    assert (q * config.matrix.transpose()).is_zero()
    for kappa in (1, 3, 5, 7):
        dropped = drop_line(config, kappa)
        assert dropped.labels == PAIR_LABELS
        pairs = drop_pairs(kappa)
        assert len(pairs) == 3
        for chi, other in pairs:
            assert chi ^ other == kappa


def test_node_report_kinds():
    # engineered system whose kernel configuration has the concurrent
    # triple of characters {5, 6, 7}
    rng = random.Random(21)
    while True:
        rows = [[rng.randint(-5, 5) for _ in range(7)] for _ in range(3)]
        rows.append([0, 0, 0, 0, 1, 1, 1])
        q = Matrix(rows)
        if q.rank() != 4:
            continue
        config = seven_line_config(q)
        try:
            triples = triple_points(config)
        except DimensionError:
            continue
        if [t for t, _ in triples] == [(4, 5, 6)]:
            break
    assert node_report(config, 4)["counts"]["ExtraFixedNode"] == 1
    assert node_report(config, 5)["counts"]["OnBranch"] == 1
    assert node_report(config, 3)["counts"]["PairFixed"] == 1


def test_wreath_group():
    els = wreath_elements()
    assert len(els) == 48
    assert sum(1 for el in els if wreath_signature(el) == 0) == 24
    moved = act_wreath(((1, 0, 0), (1, 2, 0)), GENERIC)
    assert moved.labels == PAIR_LABELS
    # identity acts trivially
    assert act_wreath(((0, 0, 0), (0, 1, 2)), GENERIC).matrix == GENERIC.matrix


def test_s4_embedding():
    images = set()
    for sigma in permutations(range(1, 5)):
        el = s4_to_wreath(sigma)
        assert wreath_signature(el) == 0
        images.add(el)
    assert len(images) == 24


def test_gl3f2_action():
    els = gl3f2_elements()
    assert len(els) == 168
    rng = random.Random(9)
    q = _smooth_system(rng)
    config = seven_line_config(q)
    g = els[17]
    moved = act_gl3f2(g, config)
    assert sorted(moved.labels) == sorted(config.labels)


def test_smoothness_witness():
    rng = random.Random(10)
    q = _smooth_system(rng)
    assert smoothness(q) == (True, None)
    cols = [list(q.column(j)) for j in range(7)]
    cols[3] = [cols[0][i] + cols[1][i] + cols[2][i] for i in range(4)]
    q2 = Matrix.from_columns(cols)
    if q2.rank() == 4:
        smooth, witness = smoothness(q2)
        assert not smooth
        assert witness == (0, 1, 2, 3)
