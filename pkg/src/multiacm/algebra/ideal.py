"""Ideals with cached reduced Groebner bases, and the standard ideal operations."""

from ..errors import InexactDivisionError
from .groebner import buchberger, from_keys, groebner_keys, normal_form, to_keys
from .monomials import degrevlex, elimination
from .poly import Polynomial


class Ideal:
    """An ideal of ``ring`` given by generators.

    Reduced Groebner bases are computed on demand and cached per monomial order;
    two ideals are equal iff their reduced bases in the default order agree.
    """

    def __init__(self, ring, gens=()):
        self.ring = ring
        gens = [g for g in gens if g.terms]
        for g in gens:
            ring.check_same(g.ring)
        self.gens = tuple(gens)
        self._gb = {}

    @classmethod
    def from_gb(cls, ring, gb, order=None):
        I = cls(ring, gb)
        I._gb[order or ring.order] = tuple(gb)
        return I

    @classmethod
    def unit(cls, ring):
        return cls.from_gb(ring, [ring.one()])

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens) or '0'})"

    def gb(self, order=None):
        order = order or self.ring.order
        cached = self._gb.get(order)
        if cached is None:
            if self.gens:
                cached = tuple(buchberger(self.gens, order, self.ring))
            else:
                cached = ()
            self._gb[order] = cached
        return cached

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        gb = self.gb()
        return len(gb) == 1 and gb[0].total_degree() == 0

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.gens)

    def is_multihomogeneous(self):
        return all(g.is_multihomogeneous() for g in self.gens)

    def leading_monomials(self, order=None):
        order = order or self.ring.order
        return [g.leading_term(order)[0] for g in self.gb(order)]

    def contains(self, f):
        return normal_form(f, self.gb()).is_zero()

    def __contains__(self, f):
        return self.contains(f)

    def issubset(self, other):
        return all(other.contains(g) for g in self.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return set(self.gb()) == set(other.gb())

    __hash__ = None

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)


def _as_ideal(ring, x):
    if isinstance(x, Ideal):
        return x
    if isinstance(x, Polynomial):
        return Ideal(ring, [x])
    return Ideal(ring, list(x))


def ideal_sum(I, J):
    I.ring.check_same(J.ring)
    return Ideal(I.ring, I.gens + J.gens)


def ideal_product(I, J):
    I.ring.check_same(J.ring)
    return Ideal(I.ring, [f * g for f in I.gens for g in J.gens])


def ideal_intersection(I, J):
    """I cap J as (t*I + (1-t)*J) cap R, using a leading elimination block for t."""
    ring = I.ring
    ring.check_same(J.ring)
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    big = ring.with_aux(1)
    t = ring.nvars
    var_map = list(range(ring.nvars))
    order = elimination(big.nvars, (t,))
    tvar = big.var(t)
    one_minus_t = big.one() - tvar
    gens = [tvar * f.embed(big, var_map) for f in I.gb()]
    gens += [one_minus_t * g.embed(big, var_map) for g in J.gb()]
    gb = groebner_keys([to_keys(g, order) for g in gens], order, ring.field)
    kept = []
    for g in gb:
        if all(order.exponent(k, t) == 0 for k in g):
            kept.append(from_keys(big, g, order))
    back = [g.embed(ring, var_map) for g in kept]
    result = Ideal(ring, back)
    restricted = _restricted_order(ring, order, t)
    if restricted is not None:
        result._gb[restricted] = tuple(back)
    return result


def _restricted_order(ring, order, t):
    # the block order restricted to the remaining variables is the ring's default
    # order exactly when the ring has no auxiliary variables
    if ring.naux == 0 and order.blocks[1] == tuple(range(ring.nvars)):
        return ring.order
    return None


def intersect_all(ideals):
    """Balanced pairwise intersection."""
    ideals = list(ideals)
    if not ideals:
        raise ValueError("empty intersection")
    while len(ideals) > 1:
        nxt = []
        for k in range(0, len(ideals) - 1, 2):
            nxt.append(ideal_intersection(ideals[k], ideals[k + 1]))
        if len(ideals) % 2:
            nxt.append(ideals[-1])
        ideals = nxt
    return ideals[0]


def ideal_quotient(I, f):
    """(I : f) for a polynomial f, or (I : J) for an ideal J."""
    ring = I.ring
    if isinstance(f, Ideal):
        if f.is_zero():
            return Ideal.unit(ring)
        return intersect_all([ideal_quotient(I, g) for g in f.gens])
    if f.is_zero():
        raise ZeroDivisionError("quotient by the zero polynomial")
    ring.check_same(f.ring)
    if f.total_degree() == 0:
        return I
    K = ideal_intersection(I, Ideal(ring, [f]))
    out = []
    for h in K.gb():
        q = h.exact_div(f)
        if q.is_zero():
            raise InexactDivisionError("zero quotient from a nonzero element")
        out.append(q)
    return Ideal(ring, out)


def _single_variable(f):
    if len(f.terms) != 1:
        return None
    (e, _), = f.terms.items()
    vs = [v for v, k in enumerate(e) if k]
    if len(vs) == 1 and e[vs[0]] == 1:
        return vs[0]
    return None


def saturation(I, f):
    """I : f^infinity.

    For a single variable on a homogeneous ideal the revlex trick is used (divide
    each basis element, computed with that variable last, by its highest power of
    the variable); otherwise quotients are iterated to a fixpoint.
    """
    ring = I.ring
    v = _single_variable(f) if isinstance(f, Polynomial) else None
    if v is not None and ring.naux == 0 and I.is_homogeneous():
        return saturate_variable(I, v)
    return saturation_by_quotients(I, f)


def saturation_by_quotients(I, f):
    current = I
    while True:
        nxt = ideal_quotient(current, f)
        if nxt == current:
            return current
        current = nxt


def saturate_variable(I, v):
    ring = I.ring
    order = degrevlex(ring.nvars, last=v)
    out = []
    for g in I.gb(order):
        k = min(e[v] for e in g.terms)
        if k:
            shift = [0] * ring.nvars
            shift[v] = k
            g = Polynomial(
                ring,
                {tuple(a - b for a, b in zip(e, shift)): c for e, c in g.terms.items()},
                _clean=True,
            )
        out.append(g)
    return Ideal(ring, out)


def saturation_ideal(I, J):
    """I : J^infinity = intersection over generators g of J of (I : g^infinity)."""
    return intersect_all([saturation(I, g) for g in J.gens])


def saturation_irrelevant(I):
    """Saturation by the multigraded irrelevant ideal m_1 * ... * m_n."""
    ring = I.ring
    current = I
    for i in range(1, ring.nfactors + 1):
        m = Ideal(ring, [ring.x(i, j) for j in range(ring.dims[i - 1] + 1)])
        current = saturation_ideal(current, m)
    return current


def saturation_maximal(I):
    """Saturation by the homogeneous maximal ideal (all variables)."""
    ring = I.ring
    m = Ideal(ring, ring.gens())
    return saturation_ideal(I, m)


def is_saturated(I):
    return saturation_irrelevant(I) == I
