"""Buchberger's algorithm over GF(p) or Q on integer-encoded monomials.

Internally a polynomial is a dict ``{key: coeff}`` where keys come from a
:class:`~multiacm.algebra.monomials.MonomialOrder`.  Pairs are selected by the
sugar strategy and filtered with the Gebauer-Moeller update, which implements
both Buchberger criteria (coprime leading terms and the chain criterion).
"""

from heapq import heapify, heappop, heappush

from .poly import Polynomial


class _Elem:
    __slots__ = ("lead", "low", "tail", "sugar")

    def __init__(self, lead, low, tail, sugar):
        self.lead = lead
        self.low = low
        self.tail = tail
        self.sugar = sugar


def _make_elem(f, order, field, sugar):
    """Monic basis element from a nonzero key dict."""
    lead = max(f)
    lc = f[lead]
    p = field.p
    if lc != 1:
        inv = field.inv(lc)
        if p:
            tail = [(k, c * inv % p) for k, c in f.items() if k != lead]
        else:
            tail = [(k, c * inv) for k, c in f.items() if k != lead]
    else:
        tail = [(k, c) for k, c in f.items() if k != lead]
    tail.sort(reverse=True)
    return _Elem(lead, lead & order.low, tail, sugar)


def reduce_keys(f, basis, order, p, full=True):
    """Normal form of ``f`` (consumed) modulo monic ``basis`` elements.

    With ``full=False`` only the leading terms are reduced.
    """
    if not f:
        return f
    low = order.low
    h = order.guard
    heap = [-k for k in f]
    heapify(heap)
    out = {}
    while heap:
        k = -heappop(heap)
        c = f.pop(k, None)
        if c is None:
            continue
        kl = k & low
        for g in basis:
            if ((g.low - kl + h) & h) == h:
                break
        else:
            out[k] = c
            if not full:
                out.update(f)
                return out
            continue
        shift = k - g.lead
        get = f.get
        if p:
            for tk, tc in g.tail:
                nk = tk + shift
                old = get(nk)
                if old is None:
                    f[nk] = (-c * tc) % p
                    heappush(heap, -nk)
                else:
                    v = (old - c * tc) % p
                    if v:
                        f[nk] = v
                    else:
                        del f[nk]
        else:
            for tk, tc in g.tail:
                nk = tk + shift
                old = get(nk)
                if old is None:
                    f[nk] = -c * tc
                    heappush(heap, -nk)
                else:
                    v = old - c * tc
                    if v:
                        f[nk] = v
                    else:
                        del f[nk]
    return out


def _spoly(gi, gj, lcm_key):
    si = lcm_key - gi.lead
    sj = lcm_key - gj.lead
    f = {}
    for k, c in gi.tail:
        f[k + si] = c
    for k, c in gj.tail:
        nk = k + sj
        f[nk] = f.get(nk, 0) - c
    return f


def _clean(f, p):
    if p:
        return {k: c % p for k, c in f.items() if c % p}
    return {k: c for k, c in f.items() if c}


def groebner_keys(polys, order, field):
    """Reduced Groebner basis of key dicts; returns monic dicts sorted by leading key."""
    p = field.p
    divides = order.divides
    degree = order.degree
    G = []
    active = []
    pairs = []
    lcm_cache = {}

    def lcm(a, b):
        key = (a, b) if a < b else (b, a)
        v = lcm_cache.get(key)
        if v is None:
            v = order.lcm(a, b)
            lcm_cache[key] = v
        return v

    def update(hi):
        nonlocal pairs, active
        h = G[hi]
        cands = [(gi, lcm(G[gi].lead, h.lead)) for gi in active]
        D = []
        for idx, (gi, l) in enumerate(cands):
            if order.coprime(G[gi].lead, h.lead):
                D.append((gi, l, True))
                continue
            if any(divides(l2, l) for _, l2 in cands[idx + 1:]) or any(
                divides(l2, l) for _, l2, _ in D
            ):
                continue
            D.append((gi, l, False))
        kept = []
        for item in pairs:
            _, l, i, j = item
            if (
                divides(h.lead, l)
                and lcm(G[i].lead, h.lead) != l
                and lcm(G[j].lead, h.lead) != l
            ):
                continue
            kept.append(item)
        for gi, l, cop in D:
            if cop:
                continue
            g = G[gi]
            dl = degree(l)
            sugar = max(g.sugar - degree(g.lead), h.sugar - degree(h.lead)) + dl
            kept.append((sugar, l, gi, hi))
        heapify(kept)
        pairs = kept
        active = [gi for gi in active if not divides(h.lead, G[gi].lead)] + [hi]

    def basis():
        return [G[i] for i in active]

    inputs = []
    for f in polys:
        f = _clean(f, p)
        if f:
            sugar = max(degree(k) for k in f)
            inputs.append((sugar, max(f), f))
    inputs.sort(key=lambda t: (t[0], t[1]))
    for sugar, _, f in inputs:
        r = reduce_keys(dict(f), basis(), order, p)
        if r:
            if len(r) == 1 and degree(max(r)) == 0:
                return [{order.one: 1}]
            G.append(_make_elem(r, order, field, sugar))
            update(len(G) - 1)

    while pairs:
        sugar, l, i, j = heappop(pairs)
        s = _spoly(G[i], G[j], l)
        r = reduce_keys(_clean(s, p), basis(), order, p)
        if r:
            lead = max(r)
            if degree(lead) == 0:
                return [{order.one: 1}]
            G.append(_make_elem(r, order, field, sugar))
            update(len(G) - 1)

    # interreduce
    elems = sorted(basis(), key=lambda g: g.lead)
    out = []
    for idx, g in enumerate(elems):
        others = elems[:idx] + elems[idx + 1:]
        tail = reduce_keys(dict(g.tail), others, order, p)
        tail[g.lead] = 1
        out.append(tail)
    return out


def to_keys(poly, order):
    enc = order.encode
    return {enc(e): c for e, c in poly.terms.items()}


def from_keys(ring, f, order):
    dec = order.decode
    return Polynomial(ring, {dec(k): c for k, c in f.items()}, _clean=True)


def buchberger(polys, order=None, ring=None):
    """Reduced Groebner basis (monic, sorted by ascending leading term)."""
    polys = list(polys)
    if ring is None:
        if not polys:
            raise ValueError("ring required for an empty generator list")
        ring = polys[0].ring
    order = order or ring.order
    for f in polys:
        ring.check_same(f.ring)
    gb = groebner_keys([to_keys(f, order) for f in polys], order, ring.field)
    return [from_keys(ring, g, order) for g in gb]


def normal_form(f, G, order=None):
    """Remainder of ``f`` on division by the Groebner basis ``G``."""
    ring = f.ring
    order = order or ring.order
    field = ring.field
    elems = []
    for g in G:
        ring.check_same(g.ring)
        if g.terms:
            elems.append(_make_elem(to_keys(g, order), order, field, 0))
    r = reduce_keys(to_keys(f, order), elems, order, field.p)
    return from_keys(ring, r, order)
