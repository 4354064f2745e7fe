"""Hilbert functions by standard-monomial counting, h-vectors, minimal generators."""

from dataclasses import dataclass
from itertools import product
from math import comb

from .linalg import SparseEchelon, rank


def monomials_of_degree(nvars, d):
    """All exponent tuples of total degree d in nvars variables."""
    if nvars == 0:
        if d == 0:
            yield ()
        return
    if nvars == 1:
        yield (d,)
        return
    for k in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - k):
            yield (k,) + rest


def monomials_of_multidegree(ring, d):
    per_factor = [list(monomials_of_degree(a + 1, di)) for a, di in zip(ring.dims, d)]
    tail = (0,) * ring.naux
    for combo in product(*per_factor):
        out = ()
        for part in combo:
            out += part
        yield out + tail


def _divisible(e, lead):
    return all(a >= b for a, b in zip(e, lead))


def _standard(e, leads):
    for lead in leads:
        if _divisible(e, lead):
            return False
    return True


def hilbert_multi(I, d):
    """dim_k (R/I)_d for a multihomogeneous ideal, by counting standard monomials."""
    ring = I.ring
    if any(x < 0 for x in d):
        return 0
    leads = I.leading_monomials()
    return sum(1 for e in monomials_of_multidegree(ring, d) if _standard(e, leads))


def hilbert_std(I, t):
    """Standard-grading Hilbert function dim_k (R/I)_t."""
    if t < 0:
        return 0
    leads = I.leading_monomials()
    return sum(1 for e in monomials_of_degree(I.ring.nvars, t) if _standard(e, leads))


def graded_piece_dim_from_generators(I, d):
    """dim_k I_d computed by linear algebra on products (monomial * generator)."""
    ring = I.ring
    ech = SparseEchelon(ring.field)
    index = {e: k for k, e in enumerate(monomials_of_multidegree(ring, d))}
    for g in I.gens:
        gd = g.multidegree()
        shift = tuple(a - b for a, b in zip(d, gd))
        if min(shift) < 0:
            continue
        for m in monomials_of_multidegree(ring, shift):
            vec = {}
            for e, c in g.terms.items():
                vec[index[tuple(a + b for a, b in zip(e, m))]] = c
            ech.add(vec)
    return len(ech)


# points in a single projective space ---------------------------------------

def evaluation_rank(points, degree, field):
    """Rank of the evaluation matrix of degree-``degree`` monomials at the points."""
    if not points:
        return 0
    m1 = len(points[0].coords)
    monos = list(monomials_of_degree(m1, degree))
    rows = []
    for P in points:
        row = []
        for e in monos:
            v = 1
            for c, k in zip(P.coords, e):
                if k:
                    v = v * c ** k
            row.append(field(v))
        rows.append(row)
    return rank(rows, field)


def hilbert_points(points, i, field):
    """H_Z(i) for distinct ProjPoints Z, via the ideal's standard monomials."""
    from ..points import projective_points_ideal

    if i < 0:
        return 0
    I = projective_points_ideal(points, field)
    return hilbert_std(I, i)


def h_vector(points, field):
    """First difference of H_Z, truncated after its last positive entry."""
    if not points:
        raise ValueError("h-vector of an empty point set")
    from ..points import projective_points_ideal

    I = projective_points_ideal(points, field)
    n = len(set(points))
    h = []
    prev = 0
    i = 0
    while True:
        H = hilbert_std(I, i)
        h.append(H - prev)
        if H == n:
            break
        prev = H
        i += 1
    while h and h[-1] == 0:
        h.pop()
    return h


def generic_hf_value(m, npoints, i):
    return min(comb(i + m, m), npoints)


def is_generic_hf(points, field):
    """H_Z(i) = min(C(i+m, m), #Z) for all i (checked at the two decisive degrees)."""
    pts = list(dict.fromkeys(points))
    if not pts:
        raise ValueError("empty point set")
    m = pts[0].dim
    z = len(pts)
    i0 = 0
    while comb(i0 + 1 + m, m) <= z:
        i0 += 1
    if evaluation_rank(pts, i0, field) != comb(i0 + m, m):
        return False
    return evaluation_rank(pts, i0 + 1, field) == z


# minimal generators ---------------------------------------------------------

@dataclass
class MinimalGenerators:
    counts: dict  # multidegree -> number of minimal generators
    generators: list  # representative polynomials

    def by_degree(self):
        return sorted(self.counts.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def total(self):
        return sum(self.counts.values())


def select_minimal(ring, candidates):
    """Choose a minimal generating subset of the ideal spanned by multihomogeneous candidates.

    Candidates are processed by increasing total degree; one is kept when it is
    not in the span of (monomials * kept generators) in its multidegree.
    """
    cands = sorted(
        (g for g in candidates if g.terms), key=lambda g: (sum(g.multidegree()), g.multidegree())
    )
    kept = []
    counts = {}
    spans = {}
    for g in cands:
        d = g.multidegree()
        ech = spans.get(d)
        if ech is None:
            ech = SparseEchelon(ring.field)
            index = _index_for(ring, d)
            for h in kept:
                hd = h.multidegree()
                shift = tuple(a - b for a, b in zip(d, hd))
                if min(shift) < 0:
                    continue
                for m in monomials_of_multidegree(ring, shift):
                    ech.add(_vector(h, m, index))
            spans[d] = ech
        if ech.add(_vector(g, (0,) * ring.nvars, _index_for(ring, d))):
            kept.append(g)
            counts[d] = counts.get(d, 0) + 1
            # products of g land in higher multidegrees; drop their cached spans
            for dd in list(spans):
                if dd != d and all(a >= b for a, b in zip(dd, d)):
                    del spans[dd]
    return MinimalGenerators(counts, kept)


_INDEX_CACHE = {}


def _index_for(ring, d):
    key = (ring.dims, ring.naux, d)
    idx = _INDEX_CACHE.get(key)
    if idx is None:
        idx = {e: k for k, e in enumerate(monomials_of_multidegree(ring, d))}
        _INDEX_CACHE[key] = idx
    return idx


def _vector(h, m, index):
    return {index[tuple(a + b for a, b in zip(e, m))]: c for e, c in h.terms.items()}


def min_gens(I):
    """Minimal multihomogeneous generators, chosen from the reduced Groebner basis."""
    return select_minimal(I.ring, I.gb())
