"""Finite abelian groups with Q/Z bilinear (and Q/2Z quadratic) forms.

A :class:`FiniteForm` is the discriminant-form object: a finite abelian
group presented by generator orders (invariant factors, each dividing
the next), a symmetric matrix of bilinear values in Q/Z on the
generators, and optionally a vector of quadratic values in Q/2Z (present
exactly when the source lattice is even).

Isometry testing and automorphism enumeration are exhaustive
backtracking searches over generator images, bounded at group order
2**10.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd, lcm

from .errors import DimensionError, GroupTooLarge
from .matrices import Matrix, frac_to_str, str_to_frac

SEARCH_BOUND = 2**10


def _mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def _mod2(x: Fraction) -> Fraction:
    f = Fraction(x, 2)
    return 2 * (f - (f.numerator // f.denominator))


class FiniteForm:
    """Finite bilinear/quadratic form module on canonical generators."""

    __slots__ = ("orders", "bilinear", "quadratic")

    def __init__(self, orders, bilinear, quadratic=None):
        orders = tuple(int(n) for n in orders)
        if any(n <= 1 for n in orders):
            raise DimensionError("generator orders must be > 1")
        for a, b in zip(orders, orders[1:]):
            if b % a != 0:
                raise DimensionError("orders must form a divisibility chain")
        bilinear = Matrix(bilinear.data if isinstance(bilinear, Matrix) else bilinear)
        if bilinear.rows != len(orders) or bilinear.cols != len(orders):
            raise DimensionError("bilinear matrix size mismatch")
        bilinear = Matrix([[_mod1(x) for x in row] for row in bilinear.data])
        if not bilinear.is_symmetric():
            raise DimensionError("bilinear matrix must be symmetric")
        if quadratic is not None:
            quadratic = tuple(_mod2(Fraction(x)) for x in quadratic)
            if len(quadratic) != len(orders):
                raise DimensionError("quadratic vector size mismatch")
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "bilinear", bilinear)
        object.__setattr__(self, "quadratic", quadratic)

    def __setattr__(self, *_):
        raise AttributeError("FiniteForm is immutable")

    # -- group structure ----------------------------------------------

    @property
    def ngens(self) -> int:
        return len(self.orders)

    def group_order(self) -> int:
        n = 1
        for o in self.orders:
            n *= o
        return n

    def reduce(self, x):
        """Reduce a coefficient tuple modulo the generator orders."""
        return tuple(int(c) % n for c, n in zip(x, self.orders))

    def zero(self):
        return (0,) * self.ngens

    def add(self, x, y):
        return tuple((a + b) % n for a, b, n in zip(x, y, self.orders))

    def neg(self, x):
        return tuple((-a) % n for a, n in zip(x, self.orders))

    def smul(self, t, x):
        return tuple((t * a) % n for a, n in zip(x, self.orders))

    def elements(self):
        """All group elements as coefficient tuples, lexicographic order."""
        return [t for t in product(*(range(n) for n in self.orders))]

    def element_order(self, x) -> int:
        o = 1
        for c, n in zip(x, self.orders):
            o = lcm(o, n // gcd(n, c))
        return o

    def subgroup(self, gens):
        """The subgroup generated by the given coefficient tuples."""
        gens = [self.reduce(g) for g in gens]
        span = {self.zero()}
        for g in gens:
            new = set()
            for t in range(self.element_order(g)):
                tg = self.smul(t, g)
                new.update(self.add(s, tg) for s in span)
            span = new
        return frozenset(span)

    def all_subgroups(self):
        """Every subgroup, as a sorted list of frozensets of elements."""
        if self.group_order() > SEARCH_BOUND:
            raise GroupTooLarge("discriminant group exceeds the search bound")
        elements = self.elements()
        seen = {frozenset([self.zero()])}
        frontier = list(seen)
        while frontier:
            nxt = []
            for sub in frontier:
                for g in elements:
                    if g in sub:
                        continue
                    bigger = set(sub)
                    for t in range(1, self.element_order(g)):
                        tg = self.smul(t, g)
                        bigger.update(self.add(s, tg) for s in sub)
                    bigger = frozenset(bigger)
                    if bigger not in seen:
                        seen.add(bigger)
                        nxt.append(bigger)
            frontier = nxt
        return sorted(seen, key=lambda s: (len(s), sorted(s)))

    # -- form values --------------------------------------------------

    def b(self, x, y) -> Fraction:
        """Bilinear value in Q/Z, represented in [0, 1)."""
        x, y = self.reduce(x), self.reduce(y)
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                row = self.bilinear.data[i]
                for j, yj in enumerate(y):
                    if yj:
                        total += xi * yj * row[j]
        return _mod1(total)

    def q(self, x) -> Fraction:
        """Quadratic value in Q/2Z, represented in [0, 2)."""
        if self.quadratic is None:
            raise DimensionError("no quadratic refinement on this form")
        x = self.reduce(x)
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                total += xi * xi * self.quadratic[i]
                row = self.bilinear.data[i]
                for j in range(i + 1, self.ngens):
                    if x[j]:
                        total += 2 * xi * x[j] * row[j]
        return _mod2(total)

    def is_isotropic_subgroup(self, gens, use_quadratic=None):
        """Check isotropy of the subgroup generated by ``gens``.

        Bilinear isotropy (b integral on all pairs of generators) is
        always required; quadratic isotropy (q even on generators) is
        additionally required when ``use_quadratic`` is true, defaulting
        to whether a quadratic refinement exists.  Returns
        ``(ok, offending pair or None)``.
        """
        if use_quadratic is None:
            use_quadratic = self.quadratic is not None
        gens = [self.reduce(g) for g in gens]
        for i, g in enumerate(gens):
            for h in gens[: i + 1]:
                if self.b(g, h) != 0:
                    return False, (g, h)
            if use_quadratic and self.q(g) != 0:
                return False, (g, g)
        return True, None

    # -- serialization / equality -------------------------------------

    def to_json(self):
        obj = {
            "orders": list(self.orders),
            "bilinear": [[frac_to_str(x) for x in row] for row in self.bilinear.data],
        }
        if self.quadratic is not None:
            obj["quadratic"] = [frac_to_str(x) for x in self.quadratic]
        return obj

    @classmethod
    def from_json(cls, obj):
        quad = obj.get("quadratic")
        return cls(
            obj["orders"],
            [[str_to_frac(x) for x in row] for row in obj["bilinear"]],
            None if quad is None else [str_to_frac(x) for x in quad],
        )

    def __eq__(self, other):
        return (
            isinstance(other, FiniteForm)
            and self.orders == other.orders
            and self.bilinear == other.bilinear
            and self.quadratic == other.quadratic
        )

    def __hash__(self):
        return hash((self.orders, self.bilinear, self.quadratic))

    def __repr__(self):
        return f"FiniteForm(orders={self.orders})"


TRIVIAL_FORM_JSON = {"orders": [], "bilinear": []}


def trivial_form(quadratic: bool):
    """The finite form on the trivial group."""
    return FiniteForm((), Matrix.zeros(0, 0), () if quadratic else None)


# ---------------------------------------------------------------------------
# Backtracking isometry search
# ---------------------------------------------------------------------------


def _scaled_tables(f: FiniteForm, scale: int):
    """Integer pairing table and quadratic vector for all elements.

    Returns ``(elements, P, Q)`` where ``P[i][j] = scale*b(x_i,x_j)
    mod scale`` and ``Q[i] = scale*q(x_i) mod 2*scale`` (``None``
    without a quadratic refinement).  Returns ``None`` when the form
    values do not scale to integers.
    """
    import numpy as np

    k = f.ngens
    bs = [[Fraction(x) * scale for x in row] for row in f.bilinear.data]
    if any(x.denominator != 1 for row in bs for x in row):
        return None
    bs_int = np.array([[int(x) for x in row] for row in bs], dtype=np.int64)
    elements = f.elements()
    coeff = np.array(elements, dtype=np.int64).reshape(len(elements), k)
    raw = coeff @ bs_int @ coeff.T
    pair = raw % scale
    quad = None
    if f.quadratic is not None:
        qs = [Fraction(x) * scale for x in f.quadratic]
        if any(x.denominator != 1 for x in qs):
            return None
        qs_int = np.array([int(x) for x in qs], dtype=np.int64)
        diag_b = np.diagonal(bs_int)
        quad = (np.diagonal(raw) + (coeff * coeff) @ (qs_int - diag_b)) % (2 * scale)
    return elements, pair, quad


def _is_nondegenerate(pair) -> bool:
    """No nonzero element pairs trivially with everything."""
    import numpy as np

    degenerate_rows = np.nonzero(~pair.any(axis=1))[0]
    return list(degenerate_rows) == [0]  # only the zero element (index 0)


def _search_fast(a: FiniteForm, b: FiniteForm, use_quadratic: bool):
    """Table-driven backtracking for nondegenerate forms.

    For a nondegenerate target bilinear form, any order-respecting
    generator assignment that preserves b is automatically injective
    (its kernel pairs trivially with everything), hence bijective; no
    surjectivity tracking is needed.  Returns None when the fast path
    does not apply.
    """
    import numpy as np

    scale = 1
    for o in a.orders:
        scale = lcm(scale, o)
    scale *= scale  # denominators divide products of two orders
    ta = _scaled_tables(a, scale)
    tb = _scaled_tables(b, scale) if b is not a else ta
    if ta is None or tb is None:
        return None
    elements_a, pair_a, quad_a = ta
    elements_b, pair_b, quad_b = tb
    if not (_is_nondegenerate(pair_a) and _is_nondegenerate(pair_b)):
        return None
    index_a = {x: i for i, x in enumerate(elements_a)}
    k = a.ngens
    gens = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
    gidx = [index_a[g] for g in gens]
    cross = pair_a[np.ix_(gidx, gidx)]
    order_b = np.array([b.element_order(x) for x in elements_b], dtype=np.int64)

    pools = []
    for i, n in enumerate(a.orders):
        mask = (n % order_b) == 0
        mask &= pair_b[np.arange(len(elements_b)), np.arange(len(elements_b))] == cross[i, i]
        if use_quadratic:
            mask &= quad_b == quad_a[gidx[i]]
        pools.append(np.nonzero(mask)[0])

    def rec(i, pools_i, chosen):
        if i == k:
            yield tuple(elements_b[j] for j in chosen)
            return
        for x in pools_i[0]:
            nxt = []
            ok = True
            for off, pool in enumerate(pools_i[1:], start=i + 1):
                filtered = pool[pair_b[pool, x] == cross[off, i]]
                if filtered.size == 0 and off <= k - 1:
                    ok = False
                    break
                nxt.append(filtered)
            if not ok:
                continue
            chosen.append(int(x))
            yield from rec(i + 1, nxt, chosen)
            chosen.pop()

    return rec(0, pools, [])


def _search(a: FiniteForm, b: FiniteForm, use_quadratic: bool):
    """Backtrack over generator images; yield witness image tuples.

    A witness is a tuple of elements of ``b`` (one per generator of
    ``a``) defining a group isomorphism ``a -> b`` preserving the
    bilinear form (and quadratic form when requested) on generators —
    hence, by (bi)linearity, everywhere.
    """
    if a.group_order() > SEARCH_BOUND or b.group_order() > SEARCH_BOUND:
        raise GroupTooLarge("finite form exceeds the backtracking bound")
    if use_quadratic and (a.quadratic is None or b.quadratic is None):
        raise DimensionError("quadratic comparison requires quadratic refinements")
    if a.group_order() != b.group_order() or a.orders != b.orders:
        return
    if a.ngens == 0:
        yield ()
        return

    fast = _search_fast(a, b, use_quadratic)
    if fast is not None:
        yield from fast
        return

    elements = b.elements()
    b_orders = {x: b.element_order(x) for x in elements}
    # precandidates per generator: matching order divisor + self values
    precand = []
    for i, n in enumerate(a.orders):
        gi = tuple(1 if j == i else 0 for j in range(a.ngens))
        want_b = a.b(gi, gi)
        want_q = a.q(gi) if use_quadratic else None
        pool = [
            x
            for x in elements
            if n % b_orders[x] == 0
            and b.b(x, x) == want_b
            and (not use_quadratic or b.q(x) == want_q)
        ]
        precand.append(pool)

    gens_a = [
        tuple(1 if j == i else 0 for j in range(a.ngens)) for i in range(a.ngens)
    ]
    cross = [[a.b(gens_a[i], gens_a[j]) for j in range(i)] for i in range(a.ngens)]
    total = a.group_order()

    images: list = []
    spans = [frozenset([b.zero()])]

    def extend_span(span, g):
        new = set(span)
        for t in range(1, b_orders[g]):
            tg = b.smul(t, g)
            new.update(b.add(s, tg) for s in span)
        return frozenset(new)

    def rec(i):
        if i == a.ngens:
            if len(spans[-1]) == total:
                yield tuple(images)
            return
        for x in precand[i]:
            ok = True
            for j in range(i):
                if b.b(x, images[j]) != cross[i][j]:
                    ok = False
                    break
            if not ok:
                continue
            span = extend_span(spans[-1], x)
            # partial injectivity: the images so far must generate a
            # subgroup of full partial order
            expected = 1
            for j in range(i + 1):
                expected *= a.orders[j]
            if len(span) != expected:
                continue
            images.append(x)
            spans.append(span)
            yield from rec(i + 1)
            spans.pop()
            images.pop()

    yield from rec(0)


def finite_form_isometric(a: FiniteForm, b: FiniteForm, compare="quadratic"):
    """Decide isometry of two finite forms.

    Args:
        compare: ``"quadratic"`` to require matching quadratic values,
            ``"bilinear"`` for the bilinear form only.

    Returns:
        A witness tuple of generator images (an explicit isomorphism
        ``a -> b``) if the forms are isometric, else ``None``.
    """
    use_quadratic = compare == "quadratic"
    for witness in _search(a, b, use_quadratic):
        return witness
    return None


def finite_form_automorphisms(f: FiniteForm, compare="bilinear"):
    """Iterate over all form automorphisms of ``f`` as image tuples."""
    return _search(f, f, compare == "quadratic")


def apply_images(f: FiniteForm, images, x):
    """Apply the homomorphism defined by generator ``images`` to ``x``."""
    out = f.zero()
    for c, img in zip(f.reduce(x), images):
        out = f.add(out, f.smul(c, img))
    return out
