"""Configurations of labeled lines in the projective plane.

A configuration is a 3 x n rational matrix (n = 6 or 7) whose columns
are line coefficients, together with labels: for n = 6 the six columns
come in three ordered pairs occupying pair slots 0, 1, 2 (labels
(0,0,1,1,2,2)); for n = 7 the labels are the seven nonzero characters
1..7 of a rank-3 group over F2, encoded as integers read in binary.

Provided operations: Plücker coordinates, the GIT stability
stratification for six lines, triple points, a canonical form that is
a complete invariant for the GL3 x torus action with fixed labels,
the Cremona involution based at the three pair vertices, the 7-line
configuration attached to a system of four diagonal quadrics, line
dropping with pair regrouping, node classification, and the finite
group actions (wreath product on pair slots, S4 on quadrangle
vertices, GL3(F2) on characters, torus scalings).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product

from .errors import (
    DimensionError,
    LabelError,
    NoFrame,
    VerticesCollinear,
)
from .matrices import Matrix, frac_to_str, str_to_frac

PAIR_LABELS = (0, 0, 1, 1, 2, 2)
CHAR_LABELS = (1, 2, 3, 4, 5, 6, 7)


def _as_fraction_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


@dataclass(frozen=True)
class ConfigMatrix:
    """A labeled 3 x n line configuration."""

    matrix: Matrix
    labels: tuple

    def __init__(self, matrix, labels=None):
        if not isinstance(matrix, Matrix):
            matrix = Matrix(_as_fraction_rows(matrix))
        if matrix.rows != 3 or matrix.cols not in (6, 7):
            raise DimensionError("configuration must be 3 x 6 or 3 x 7")
        if labels is None:
            labels = PAIR_LABELS if matrix.cols == 6 else CHAR_LABELS
        labels = tuple(labels)
        if len(labels) != matrix.cols:
            raise LabelError("one label per column required")
        if matrix.cols == 6 and sorted(labels) != [0, 0, 1, 1, 2, 2]:
            raise LabelError("six-line labels must be pair slots 0,0,1,1,2,2")
        if matrix.cols == 7 and sorted(labels) != list(range(1, 8)):
            raise LabelError("seven-line labels must be the characters 1..7")
        for j in range(matrix.cols):
            if all(matrix.entry(i, j) == 0 for i in range(3)):
                raise DimensionError(f"column {j} is zero: not a line")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.matrix.cols

    def column(self, j):
        return self.matrix.column(j)

    def with_matrix(self, matrix: Matrix) -> "ConfigMatrix":
        return ConfigMatrix(matrix, self.labels)

    def permute_columns(self, perm) -> "ConfigMatrix":
        """Column j of the result is column perm[j] of self."""
        cols = [list(self.matrix.column(p)) for p in perm]
        return ConfigMatrix(
            Matrix.from_columns(cols), tuple(self.labels[p] for p in perm)
        )

    def to_json(self):
        return {
            "matrix": self.matrix.to_json(),
            "labels": list(self.labels),
        }

    @staticmethod
    def from_json(data) -> "ConfigMatrix":
        return ConfigMatrix(
            Matrix.from_json(data["matrix"]), tuple(data["labels"])
        )


# ---------------------------------------------------------------------------
# Plücker coordinates
# ---------------------------------------------------------------------------


def _minor(m: Matrix, i: int, j: int, k: int) -> Fraction:
    a, b, c = m.column(i), m.column(j), m.column(k)
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def plucker(c: ConfigMatrix) -> dict:
    """All C(n,3) maximal minors m_{ijk}, keyed by column triples."""
    return {
        (i, j, k): _minor(c.matrix, i, j, k)
        for i, j, k in combinations(range(c.n), 3)
    }


# ---------------------------------------------------------------------------
# GIT stability for six lines
# ---------------------------------------------------------------------------


def _proportional(u, v) -> bool:
    return all(
        u[i] * v[j] == u[j] * v[i] for i in range(3) for j in range(i + 1, 3)
    )


@dataclass(frozen=True)
class StabilityReport:
    status: str  # Stable | StrictlySemistable | Polystable | Unstable
    stratum: str
    coincident_pairs: tuple
    concurrent_triples: tuple

    def to_json(self):
        return {
            "status": self.status,
            "stratum": self.stratum,
            "coincident_pairs": [list(p) for p in self.coincident_pairs],
            "concurrent_triples": [list(t) for t in self.concurrent_triples],
        }


def _coincidence_groups(c: ConfigMatrix):
    """Partition of columns into groups of mutually proportional lines."""
    groups = []
    for j in range(c.n):
        col = c.column(j)
        for g in groups:
            if _proportional(col, c.column(g[0])):
                g.append(j)
                break
        else:
            groups.append([j])
    return groups


def _max_rank2_count(c: ConfigMatrix) -> int:
    """Largest number of columns (with multiplicity) in a 2-dim subspace."""
    best = 2
    for i, j in combinations(range(c.n), 2):
        if _proportional(c.column(i), c.column(j)):
            continue
        count = sum(
            1
            for k in range(c.n)
            if _minor(c.matrix, *sorted((i, j, k))) == 0 or k in (i, j)
        )
        best = max(best, count)
    return best


def stability(c: ConfigMatrix) -> StabilityReport:
    """Classify a six-line configuration per the GIT stratification.

    Instability is tested against the one-parameter subgroups with
    weights (2,-1,-1) and (1,1,-2): a configuration is unstable iff
    some point lies on at least five lines (counted with multiplicity)
    or at least three lines coincide; it is non-stable iff some point
    lies on at least four lines or two lines coincide.
    """
    if c.n != 6:
        raise DimensionError("stability is defined for six lines")
    groups = _coincidence_groups(c)
    mult = max(len(g) for g in groups)
    pairs = tuple(
        (g[a], g[b])
        for g in groups
        for a in range(len(g))
        for b in range(a + 1, len(g))
    )
    triples = tuple(
        (i, j, k)
        for i, j, k in combinations(range(6), 3)
        if _minor(c.matrix, i, j, k) == 0
        and not _proportional(c.column(i), c.column(j))
        and not _proportional(c.column(i), c.column(k))
        and not _proportional(c.column(j), c.column(k))
    )
    conc = _max_rank2_count(c)
    if mult >= 3:
        return StabilityReport("Unstable", "213", pairs, triples)
    if conc >= 5:
        return StabilityReport("Unstable", "141", pairs, triples)
    if mult == 1 and conc <= 3:
        stratum = "321" if triples else "411"
        return StabilityReport("Stable", stratum, pairs, triples)
    # Non-stable boundary: decide polystable versus strictly semistable.
    doubled = [g for g in groups if len(g) == 2]
    if len(doubled) == 3:
        return StabilityReport("Polystable", "222", pairs, triples)
    if len(doubled) == 1 and len(groups) == 5:
        rest = [g[0] for g in groups if len(g) == 1]
        i, j = rest[0], rest[1]
        if not _proportional(c.column(i), c.column(j)):
            rest_concurrent = all(
                _minor(c.matrix, *sorted((i, j, k))) == 0 for k in rest[2:]
            )
            double_outside = _minor(
                c.matrix, *sorted((i, j, doubled[0][0]))
            ) != 0
            if rest_concurrent and double_outside:
                return StabilityReport("Polystable", "231", pairs, triples)
    if mult >= 2 and conc >= 4:
        return StabilityReport("StrictlySemistable", "222", pairs, triples)
    if mult >= 2:
        return StabilityReport("StrictlySemistable", "312", pairs, triples)
    return StabilityReport("StrictlySemistable", "231", pairs, triples)


# ---------------------------------------------------------------------------
# Triple points
# ---------------------------------------------------------------------------


def triple_points(c: ConfigMatrix):
    """All concurrent triples of pairwise-distinct lines, with points.

    Each entry is (triple of column indices, common point) where the
    point is scaled so its first nonzero coordinate is 1.
    """
    for i, j in combinations(range(c.n), 2):
        if _proportional(c.column(i), c.column(j)):
            raise DimensionError(f"columns {i} and {j} are the same line")
    out = []
    for t in combinations(range(c.n), 3):
        if _minor(c.matrix, *t) != 0:
            continue
        rows = Matrix([list(c.column(k)) for k in t])
        kern = rows.kernel_basis()
        point = list(kern.data[0])
        lead = next(x for x in point if x != 0)
        out.append((t, tuple(x / lead for x in point)))
    return out


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------


def _scale_columns(m: Matrix) -> Matrix:
    cols = []
    for j in range(m.cols):
        col = list(m.column(j))
        lead = next(x for x in col if x != 0)
        cols.append([x / lead for x in col])
    return Matrix.from_columns(cols)


def canonical_form(c: ConfigMatrix):
    """Normalize under GL3 and column scalings; labels kept in place.

    The lexicographically first 4-subset of columns whose four maximal
    minors are all nonzero is mapped to the standard projective frame
    (e1, e2, e3, (1,1,1)); every column is then scaled so its first
    nonzero entry is 1.  Two configurations with the same labels are
    GL3 x torus equivalent iff their canonical forms are equal.

    Returns (normalized ConfigMatrix, frame column subset).
    """
    frame = None
    for s in combinations(range(c.n), 4):
        if all(_minor(c.matrix, *t) != 0 for t in combinations(s, 3)):
            frame = s
            break
    if frame is None:
        raise NoFrame("no four columns form a projective frame")
    a = Matrix.from_columns([list(c.column(j)) for j in frame[:3]])
    w = a.inverse() * Matrix([[x] for x in c.column(frame[3])])
    g = (a * Matrix.diagonal([w.entry(i, 0) for i in range(3)])).inverse()
    return c.with_matrix(_scale_columns(g * c.matrix)), frame


def equivalent(a: ConfigMatrix, b: ConfigMatrix) -> bool:
    """GL3 x torus equivalence with fixed labels, via canonical forms."""
    if a.labels != b.labels:
        return False
    ca, fa = canonical_form(a)
    cb, fb = canonical_form(b)
    return fa == fb and ca.matrix == cb.matrix


# ---------------------------------------------------------------------------
# Cremona involution
# ---------------------------------------------------------------------------


def _cross(u, v):
    return [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]


def cremona(c: ConfigMatrix) -> ConfigMatrix:
    """The Cremona involution based at the three pair vertices.

    Build N whose rows are the pair vertices M1^M2, M3^M4, M5^M6,
    form N*M (which vanishes at row j//2 of column j), and swap the
    two remaining entries of each column.  Defined up to GL3 and
    column scaling, so equality claims go through canonical_form.
    """
    if c.n != 6:
        raise DimensionError("the Cremona involution acts on six lines")
    n = Matrix(
        [
            _cross(c.column(0), c.column(1)),
            _cross(c.column(2), c.column(3)),
            _cross(c.column(4), c.column(5)),
        ]
    )
    if n.det() == 0:
        raise VerticesCollinear("the three pair vertices are collinear")
    p = n * c.matrix
    cols = []
    for j in range(6):
        col = list(p.column(j))
        others = [i for i in range(3) if i != j // 2]
        col[others[0]], col[others[1]] = col[others[1]], col[others[0]]
        cols.append(col)
    return c.with_matrix(Matrix.from_columns(cols))


def etale_slice(t, a, b, c, d) -> ConfigMatrix:
    """The five-parameter family around the four-concurrent stratum."""
    t, a, b, c, d = (Fraction(x) for x in (t, a, b, c, d))
    return ConfigMatrix(
        [[1, 0, 1, 1, 0, c], [0, 1, 1, t, 0, d], [0, 0, a, b, 1, 1]]
    )


def quadrangle_slice(a, b, c, d) -> ConfigMatrix:
    """The four-parameter family around the complete quadrangle.

    At a = b = c = d = 0 the columns are the six sides of the complete
    quadrangle; the minors m135, m245, m146, m236 equal 4b, -4a, 4d,
    -4c.
    """
    a, b, c, d = (Fraction(x) for x in (a, b, c, d))
    return ConfigMatrix(
        [
            [1, 1, 1, 1, a + b, 1],
            [1, 1, -1, -1, 1, c + d],
            [1, -1, 1, -1, a - b, c - d],
        ]
    )


# ---------------------------------------------------------------------------
# Seven lines from a quadric system
# ---------------------------------------------------------------------------


def seven_line_config(q: Matrix) -> ConfigMatrix:
    """Line configuration attached to a rank-4 system of 7 diagonal
    quadrics (rows = quadrics, columns = the 7 squared coordinates).

    The configuration matrix is the deterministic echelon kernel basis
    of q, one line per character column.
    """
    if q.rows != 4 or q.cols != 7:
        raise DimensionError("quadric system must be 4 x 7")
    if q.rank() != 4:
        raise DimensionError("quadric system must have rank 4")
    kern = q.kernel_basis()
    return ConfigMatrix(kern, CHAR_LABELS)


def smoothness(q: Matrix):
    """(True, None) iff every 4-subset of quadric-system columns is
    independent; otherwise (False, first dependent 4-subset)."""
    if q.rows != 4 or q.cols != 7:
        raise DimensionError("quadric system must be 4 x 7")
    if q.rank() != 4:
        raise DimensionError("quadric system must have rank 4")
    for s in combinations(range(7), 4):
        sub = Matrix.from_columns([list(q.column(j)) for j in s])
        if sub.det() == 0:
            return False, s
    return True, None


def drop_pairs(kappa: int):
    """The three pairs {chi, chi + kappa} of surviving characters,
    sorted by smallest member, each pair sorted ascending."""
    if kappa not in range(1, 8):
        raise LabelError("kappa must be a nonzero character 1..7")
    pairs = []
    seen = set()
    for chi in range(1, 8):
        if chi == kappa or chi in seen:
            continue
        other = chi ^ kappa
        seen.update((chi, other))
        pairs.append((chi, other) if chi < other else (other, chi))
    pairs.sort()
    return pairs


def drop_line(c: ConfigMatrix, kappa: int) -> ConfigMatrix:
    """Remove the line labeled kappa and regroup the rest into pairs.

    The six remaining lines are reordered so the pair slots hold the
    character pairs {chi, chi + kappa} sorted by smallest member.
    """
    if c.n != 7:
        raise DimensionError("drop_line expects a seven-line configuration")
    if kappa not in c.labels:
        raise LabelError(f"no column labeled {kappa}")
    position = {lab: j for j, lab in enumerate(c.labels)}
    cols = []
    for chi, other in drop_pairs(kappa):
        cols.append(list(c.column(position[chi])))
        cols.append(list(c.column(position[other])))
    return ConfigMatrix(Matrix.from_columns(cols), PAIR_LABELS)


# ---------------------------------------------------------------------------
# Node classification
# ---------------------------------------------------------------------------


def node_report(c: ConfigMatrix, kappa: int):
    """Classify each concurrent triple of a seven-line configuration
    relative to the character kappa.

    A triple with labels summing (XOR) to zero is Degenerate: the
    labels do not generate the character group.  Otherwise the labels
    form a basis and kappa is a sum of a nonempty subset of them:
    OnBranch for a singleton, PairFixed for a pair, ExtraFixedNode
    when the full sum equals kappa.
    """
    if c.n != 7:
        raise DimensionError("node_report expects a seven-line configuration")
    if kappa not in range(1, 8):
        raise LabelError("kappa must be a nonzero character 1..7")
    entries = []
    counts = {
        "Degenerate": 0,
        "OnBranch": 0,
        "PairFixed": 0,
        "ExtraFixedNode": 0,
    }
    for t, _point in triple_points(c):
        labels = tuple(c.labels[j] for j in t)
        k1, k2, k3 = labels
        total = k1 ^ k2 ^ k3
        if total == 0:
            kind = "Degenerate"
        elif kappa in labels:
            kind = "OnBranch"
        elif kappa in (k1 ^ k2, k1 ^ k3, k2 ^ k3):
            kind = "PairFixed"
        elif total == kappa:
            kind = "ExtraFixedNode"
        else:  # unreachable: kappa is a combination of any basis
            raise LabelError(f"unclassifiable triple {labels}")
        counts[kind] += 1
        entries.append({"triple": t, "labels": labels, "kind": kind})
    return {"counts": counts, "triples": entries}


# ---------------------------------------------------------------------------
# Group actions
# ---------------------------------------------------------------------------


def wreath_elements():
    """All 48 elements of Z/2 wr S3: (swap bits, pair permutation)."""
    return [
        (bits, perm)
        for bits in product((0, 1), repeat=3)
        for perm in permutations(range(3))
    ]


def wreath_signature(element) -> int:
    """The quotient map to Z/2: parity of the number of pair swaps."""
    bits, _perm = element
    return sum(bits) % 2


def act_wreath(element, c: ConfigMatrix) -> ConfigMatrix:
    """Swap within pairs, then send pair i to slot perm[i].

    Column order encodes the pair slots, so the input must carry the
    standard labels and the output does too.
    """
    if c.n != 6:
        raise DimensionError("the wreath product acts on six lines")
    if c.labels != PAIR_LABELS:
        raise LabelError("wreath action expects standard pair-slot order")
    bits, perm = element
    source = [0] * 6
    for i in range(3):
        lo, hi = 2 * i, 2 * i + 1
        if bits[i]:
            lo, hi = hi, lo
        source[2 * perm[i]] = lo
        source[2 * perm[i] + 1] = hi
    cols = [list(c.column(source[j])) for j in range(6)]
    return ConfigMatrix(Matrix.from_columns(cols), PAIR_LABELS)


#: The six sides of the quadrangle on vertices 1..4, as vertex pairs,
#: opposite sides sharing a pair slot.
QUADRANGLE_SIDES = (
    frozenset((1, 2)),
    frozenset((3, 4)),
    frozenset((1, 3)),
    frozenset((2, 4)),
    frozenset((1, 4)),
    frozenset((2, 3)),
)


def s4_to_wreath(sigma):
    """Embed a permutation of the four quadrangle vertices into the
    wreath product via its action on the six sides."""
    sigma = tuple(sigma)
    if sorted(sigma) != [1, 2, 3, 4]:
        raise LabelError("expected a permutation of (1,2,3,4)")
    move = dict(zip((1, 2, 3, 4), sigma))
    images = [
        QUADRANGLE_SIDES.index(frozenset(move[v] for v in side))
        for side in QUADRANGLE_SIDES
    ]
    # images is a permutation of column slots preserving pair slots
    perm = [0, 0, 0]
    bits = [0, 0, 0]
    for i in range(3):
        target = images[2 * i]
        perm[i] = target // 2
        bits[i] = target % 2
    # translate: column 2i goes to slot images[2i]; in act_wreath terms
    # a swap happens when the first member of pair i lands second.
    return (tuple(bits), tuple(perm))


def act_s4(sigma, c: ConfigMatrix) -> ConfigMatrix:
    return act_wreath(s4_to_wreath(sigma), c)


def _char_matrix_apply(g, chi: int) -> int:
    """Apply a 3x3 F2 matrix (rows of bit tuples) to a character."""
    bits = ((chi >> 2) & 1, (chi >> 1) & 1, chi & 1)
    out = 0
    for i in range(3):
        val = sum(g[i][k] * bits[k] for k in range(3)) % 2
        out = (out << 1) | val
    return out


def gl3f2_elements():
    """All 168 invertible 3x3 matrices over F2 (rows of bit tuples)."""
    vecs = [v for v in product((0, 1), repeat=3) if any(v)]
    out = []
    for r0 in vecs:
        for r1 in vecs:
            for r2 in vecs:
                g = (r0, r1, r2)
                imgs = {_char_matrix_apply(g, chi) for chi in range(1, 8)}
                if len(imgs) == 7:
                    out.append(g)
    return out


def act_gl3f2(g, c: ConfigMatrix) -> ConfigMatrix:
    """Relabel characters by g: the column at label position chi of
    the result is the column labeled g^{-1}(chi)."""
    if c.n != 7:
        raise DimensionError("GL3(F2) acts on seven-line configurations")
    image = {_char_matrix_apply(g, chi): chi for chi in range(1, 8)}
    if len(image) != 7:
        raise LabelError("matrix is not invertible over F2")
    position = {lab: j for j, lab in enumerate(c.labels)}
    cols = [list(c.column(position[image[chi]])) for chi in range(1, 8)]
    return ConfigMatrix(Matrix.from_columns(cols), CHAR_LABELS)


def act_torus(scalars, c: ConfigMatrix) -> ConfigMatrix:
    if len(scalars) != c.n:
        raise DimensionError("one scalar per column")
    scalars = [Fraction(s) for s in scalars]
    if any(s == 0 for s in scalars):
        raise DimensionError("torus scalars must be nonzero")
    cols = [
        [x * scalars[j] for x in c.column(j)] for j in range(c.n)
    ]
    return c.with_matrix(Matrix.from_columns(cols))


def orbit(items, elements, action):
    """Partition configurations into classes under the group action
    combined with GL3 x torus equivalence.

    ``items`` is a list of ConfigMatrix; ``elements`` the group
    elements; ``action(element, config)`` the action map.  Returns a
    list of lists of indices into ``items``.
    """
    keys = []
    for item in items:
        norm, frame = canonical_form(item)
        keys.append((item.labels, frame, norm.matrix))
    classes = []
    assigned = {}
    for idx, item in enumerate(items):
        if idx in assigned:
            continue
        cls = [idx]
        assigned[idx] = len(classes)
        reach = set()
        for el in elements:
            moved = action(el, item)
            norm, frame = canonical_form(moved)
            reach.add((moved.labels, frame, norm.matrix))
        for jdx in range(idx + 1, len(items)):
            if jdx in assigned:
                continue
            if keys[jdx] in reach:
                cls.append(jdx)
                assigned[jdx] = len(classes)
        classes.append(cls)
    return classes


# ---------------------------------------------------------------------------
# The complete quadrangle
# ---------------------------------------------------------------------------


def quadrangle_vertices():
    return (
        (Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(0), Fraction(1), Fraction(0)),
        (Fraction(0), Fraction(0), Fraction(1)),
        (Fraction(1), Fraction(1), Fraction(1)),
    )


def complete_quadrangle(assignment=None) -> ConfigMatrix:
    """The six sides of the standard complete quadrangle.

    ``assignment`` optionally reorders the columns by a wreath element
    applied to the standard side order (opposite sides paired).
    """
    verts = quadrangle_vertices()
    cols = []
    for side in QUADRANGLE_SIDES:
        i, j = sorted(side)
        cols.append(_cross(verts[i - 1], verts[j - 1]))
    config = ConfigMatrix(Matrix.from_columns(cols), PAIR_LABELS)
    if assignment is not None:
        config = act_wreath(assignment, config)
    return config


def quadrangle_classes():
    """Equivalence classes of the 48 labeled complete quadrangles.

    Returns (classes under GL3 x torus only, classes under the even
    wreath subgroup, classes under the full wreath product).
    """
    variants = [complete_quadrangle(el) for el in wreath_elements()]
    trivial = orbit(variants, [((0, 0, 0), (0, 1, 2))], act_wreath)
    even = orbit(
        variants,
        [el for el in wreath_elements() if wreath_signature(el) == 0],
        act_wreath,
    )
    full = orbit(variants, wreath_elements(), act_wreath)
    return trivial, even, full
