"""Deciding the ACM property, combinatorial shortcuts, and the saturation claim in P^1 x P^n.

The decision reduces R/I_X modulo n random linear forms (n = number of factors,
the Krull dimension). If the quotient is Artinian the forms are a system of
parameters, and its length is at least the multiplicity #X with equality exactly
when R/I_X is Cohen-Macaulay; in that case the forms form a regular sequence.
"""

import random
from dataclasses import dataclass, field as dc_field
from math import comb

from .algebra.hilbert import hilbert_std, monomials_of_degree
from .algebra.ideal import Ideal, ideal_quotient, is_saturated, saturation_maximal
from .algebra.linalg import inverse, row_echelon_from_right
from .algebra.poly import Polynomial
from .algebra.ring import RingSpec
from .config import (
    ab_partition,
    d_membership,
    has_inclusion,
    has_star,
    thm47_hypotheses,
)
from .errors import PreconditionError
from .points import config_ideal, config_ring, point_ideal

__all__ = [
    "AcmVerdict",
    "MonteCarloFailure",
    "RegularSequenceWitness",
    "acm_decide",
    "acm_fast_paths",
    "artinian_reduction",
    "is_saturated",
    "thm48_saturation_claim",
    "verify_witness",
]

DEFAULT_TRIALS = 3
MAX_DRAWS = 16  # draws per trial before giving up on finding a system of parameters


@dataclass
class RegularSequenceWitness:
    forms: list  # linear Polynomials in the configuration's ring
    length: int  # length of the Artinian reduction (equals #X)
    verified: bool = None  # result of the literal colon checks, None if not run

    kind = "regular-sequence"


@dataclass
class MonteCarloFailure:
    trials: int
    mismatches: list  # per trial: degrees where the Artinian HF exceeds the CM prediction
    lengths: list  # per trial: Artinian length (always > #X)
    bound_c: int
    prime: int

    kind = "monte-carlo"

    @property
    def confidence(self):
        if self.prime is None:
            return 1.0
        return 1.0 - (self.bound_c / self.prime) ** self.trials


@dataclass
class TheoremCertificate:
    theorem: str

    kind = "theorem"


@dataclass
class AcmVerdict:
    decision: str  # "ACM", "NotACM" or "undecided"
    certificate: object = None
    fast_path: str = None
    notes: list = dc_field(default_factory=list)

    @property
    def is_acm(self):
        return self.decision == "ACM"

    @property
    def decided(self):
        return self.decision in ("ACM", "NotACM")

    @property
    def certificate_kind(self):
        return self.certificate.kind if self.certificate is not None else "none"


# Artinian reduction ---------------------------------------------------------

@dataclass
class ArtinianReduction:
    artinian: bool
    length: int = None
    hf: list = None  # Hilbert function of the Artinian quotient by degree


def _random_forms(ring, count, rng):
    field = ring.field
    return [[field.random(rng) for _ in range(ring.nvars)] for _ in range(count)]


def _forms_as_polys(ring, rows):
    return [Polynomial.linear(ring, {v: c for v, c in enumerate(row) if c}) for row in rows]


def artinian_reduction(I, rows):
    """Quotient of R/I by the linear forms with coefficient vectors ``rows``.

    The forms are solved for pivot variables (taken from the right), which are
    substituted away; the result lives in the remaining variables.
    """
    ring = I.ring
    field = ring.field
    pivots, red = row_echelon_from_right(rows, field)
    if len(pivots) < len(rows):
        return ArtinianReduction(False)
    free = [v for v in range(ring.nvars) if v not in pivots]
    k = len(free)
    # k >= 1 always; pad to two variables so the target is a valid P^m ring
    target = RingSpec((max(k - 1, 1),), field)
    pos = {v: idx for idx, v in enumerate(free)}
    images = [None] * ring.nvars
    for v in free:
        images[v] = target.var(pos[v])
    for p, row in zip(pivots, red):
        images[p] = Polynomial.linear(target, {pos[c]: field(-row[c]) for c in free if row[c]})
    gens = [g.substitute(target, images) for g in I.gb()]
    if k == 1:
        gens.append(target.var(1))
    J = Ideal(target, gens)
    leads = J.leading_monomials()
    for v in range(target.nvars):
        if not any(sum(e) == e[v] and e[v] > 0 for e in leads):
            return ArtinianReduction(False)
    hf = []
    t = 0
    while True:
        count = 0
        for e in monomials_of_degree(target.nvars, t):
            if not any(all(a >= b for a, b in zip(e, L)) for L in leads):
                count += 1
        if count == 0:
            break
        hf.append(count)
        t += 1
    return ArtinianReduction(True, sum(hf), hf)


def _cm_prediction(I, n, upto):
    """n-th difference of the standard Hilbert function of R/I, degrees 0..upto."""
    H = [hilbert_std(I, t) for t in range(upto + 1)]
    out = []
    for t in range(upto + 1):
        out.append(sum((-1) ** k * comb(n, k) * H[t - k] for k in range(n + 1) if t - k >= 0))
    return out


def verify_witness(X, forms):
    """Literal regular-sequence check: (J_{k-1} : l_k) = J_{k-1} for each k, J_0 = I_X."""
    J = config_ideal(X)
    for ell in forms:
        if ideal_quotient(J, ell) != J:
            return False
        J = J + Ideal(J.ring, [ell])
    return True


def acm_decide(X, trials=DEFAULT_TRIALS, seed=0, verify=True):
    """Decide whether R/I_X is Cohen-Macaulay.

    Each trial draws fresh random linear forms until they cut R/I_X down to an
    Artinian ring (at most MAX_DRAWS attempts). The first trial whose length
    equals #X yields an ACM verdict with the forms as witness; otherwise all
    trials are recorded as failures.
    """
    if not len(X):
        raise ValueError("empty configuration")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    ring = config_ring(X)
    I = config_ideal(X)
    n = X.shape.n
    npts = len(X)
    failures = []
    lengths = []
    for trial in range(trials):
        red = None
        rows = None
        for draw in range(MAX_DRAWS):
            rng = random.Random(f"acm:{seed}:{trial}:{draw}")
            rows = _random_forms(ring, n, rng)
            red = artinian_reduction(I, rows)
            if red.artinian:
                break
        if not red.artinian:
            return AcmVerdict("undecided", notes=[f"trial {trial}: no system of parameters in {MAX_DRAWS} draws"])
        if red.length == npts:
            forms = _forms_as_polys(ring, rows)
            witness = RegularSequenceWitness(forms, red.length)
            if verify:
                witness.verified = verify_witness(X, forms)
                if not witness.verified:
                    raise AssertionError("Artinian length matched #X but the colon checks failed")
            return AcmVerdict("ACM", witness)
        if red.length < npts:
            raise AssertionError(f"Artinian length {red.length} below the multiplicity {npts}")
        predicted = _cm_prediction(I, n, len(red.hf))
        actual = red.hf + [0]
        failures.append([t for t, (a, b) in enumerate(zip(actual, predicted)) if a != b])
        lengths.append(red.length)
    cert = MonteCarloFailure(trials, failures, lengths, n * npts, ring.field.p)
    return AcmVerdict("NotACM", cert)


# combinatorial shortcuts ----------------------------------------------------

def _is_p1_pn(X):
    return X.shape.n == 2 and X.shape.dims[0] == 1 and X.shape.dims[1] >= 2


def acm_fast_paths(X, partial=True, acm=None, trust=False):
    """Verdict from the combinatorial criteria, or None when none applies.

    Paths tried in order: "star" (two factors with the star property),
    "inclusion" (first factor P^1 with the inclusion property), "thm-4.8"
    (P^1 x P^n, certified genericity, N1 in D) and "thm-4.7" (additionally
    Y_i cap Y_j in B_Y for i != j, N1 not in D: not ACM).

    With ``partial`` false an undecided result raises instead of returning None.
    ``trust`` labels the certificate as a theorem; otherwise callers are expected
    to confirm with acm_decide.
    """
    if acm is None:
        acm = lambda Y: acm_decide(Y).is_acm

    def verdict(decision, path):
        cert = TheoremCertificate(path) if trust else None
        return AcmVerdict(decision, cert, fast_path=path)

    n = X.shape.n
    if n == 2 and has_star(X):
        return verdict("ACM", "star")
    if X.shape.dims[0] == 1 and n >= 2 and has_inclusion(X, 1, acm=acm):
        return verdict("ACM", "inclusion")
    if _is_p1_pn(X):
        ab = ab_partition(X)
        if len(ab.levels) >= 2 and ab.n0 >= 2:
            member, _ = d_membership(ab.n0, ab.n1, X.shape.dims[1])
            hyp = thm47_hypotheses(X)
            if hyp.generic and hyp.no_inclusion:
                if member:
                    return verdict("ACM", "thm-4.8")
                if hyp.pairwise_in_b:
                    return verdict("NotACM", "thm-4.7")
    if not partial:
        raise ValueError("no combinatorial criterion applies")
    return None


# saturation claim -----------------------------------------------------------

@dataclass
class SaturationClaimReport:
    holds: bool
    s: int
    r: int
    saturated: Ideal
    expected: Ideal
    transformed: object  # (X', P) after the change of coordinates


def _basis_change_to_last(Q, field):
    """Invertible matrix sending the point Q to [0:...:0:1]."""
    m = len(Q.coords)
    k = max(j for j, c in enumerate(Q.coords) if c)
    # columns: unit vectors except column k, then Q as the last column
    cols = [[1 if r == j else 0 for r in range(m)] for j in range(m) if j != k] + [list(Q.coords)]
    B = [[cols[c][r] for c in range(m)] for r in range(m)]
    return inverse(B, field)


def thm48_saturation_claim(X, P, acm=None):
    """Check (I_X + I_P)^sat = (x_0, y_0..y_{n-1}, x_1^s y_n^r) after moving P to [0:1] x e_n.

    X is an ACM configuration in P^1 x P^n and P = P_0 x Q_0 a new point with Q_0
    an A-column of X and P_0 a level of X. s counts the points of X in column
    Q_0 and r is the initial degree of the ideal of the columns in row P_0.
    Saturation is taken with respect to the maximal ideal (the lines in P^{n+2}).
    """
    if not _is_p1_pn(X):
        raise PreconditionError("shape", f"expected P^1 x P^n with n >= 2, got {X.shape}")
    if P in X:
        raise PreconditionError("new-point", "P already lies in X")
    P0, Q0 = P.parts
    ab = ab_partition(X)
    if Q0 not in set(ab.a_y):
        raise PreconditionError("column-in-A", "second factor of P is not a column of A_X")
    if P0 not in {Pj for Pj, _ in ab.levels} or not len(ab.b_part):
        raise PreconditionError("row-in-B", "first factor of P is not a level meeting B_X")
    if acm is None:
        acm = lambda Y: acm_decide(Y).is_acm
    if not acm(X):
        raise PreconditionError("acm", "X is not ACM")
    field = X.field
    M1 = _basis_change_to_last(P0, field)
    M2 = _basis_change_to_last(Q0, field)
    Xt = X.transform([M1, M2])
    Pt = X.subset([P]).transform([M1, M2]).points[0]
    ring = config_ring(Xt)
    n = X.shape.dims[1]
    row = [Q.parts[1] for Q in Xt.points if Q.parts[0] == Pt.parts[0]]
    s = sum(1 for Q in Xt.points if Q.parts[1] == Pt.parts[1])
    from .points import projective_points_ideal

    r = min(g.total_degree() for g in projective_points_ideal(row, field).gb())
    total = config_ideal(Xt) + point_ideal(Pt, ring)
    sat = saturation_maximal(total)
    gens = [ring.x(1, 0)] + [ring.x(2, j) for j in range(n)]
    gens.append(ring.x(1, 1) ** s * ring.x(2, n) ** r)
    expected = Ideal(ring, gens)
    return SaturationClaimReport(sat == expected, s, r, sat, expected, (Xt, Pt))
