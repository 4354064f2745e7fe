"""Defining ideals of points and subvarieties, and the explicit decompositions."""

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations

from .algebra.hilbert import min_gens, select_minimal
from .algebra.ideal import Ideal, intersect_all
from .algebra.poly import Polynomial
from .algebra.ring import RingSpec
from .config import eta, level_sets, pi, single_factor, vz_chains
from .errors import ChainError, InexactDivisionError, ShapeError


@lru_cache(maxsize=None)
def ring_for(dims, field):
    return RingSpec(tuple(dims), field)


def config_ring(config):
    return ring_for(config.shape.dims, config.field)


def factor_linear_forms(Q, ring, i):
    """The a_i independent linear forms in factor ``i`` vanishing at the ProjPoint Q.

    With k the pivot (first nonzero, normalized to 1) these are x_{i,j} - Q_j x_{i,k}.
    """
    k = Q.pivot()
    field = ring.field
    forms = []
    for j, c in enumerate(Q.coords):
        if j == k:
            continue
        coeffs = {ring.var_index(i, j): 1}
        if c:
            coeffs[ring.var_index(i, k)] = field(-c)
        forms.append(Polynomial.linear(ring, coeffs))
    return forms


def point_ideal(P, ring):
    if len(P.parts) != ring.nfactors:
        raise ShapeError("point and ring have different numbers of factors")
    gens = []
    for i, Q in enumerate(P.parts, start=1):
        gens.extend(factor_linear_forms(Q, ring, i))
    return Ideal(ring, gens)


@lru_cache(maxsize=4096)
def config_ideal(config):
    """I_X as the intersection of the point ideals (balanced pairwise)."""
    if not len(config):
        raise ValueError("empty configuration")
    ring = config_ring(config)
    return intersect_all([point_ideal(P, ring) for P in config.points])


def projective_points_ideal(points, field):
    """Ideal of distinct points of a single P^m, in its own ring k[x_0..x_m]."""
    points = tuple(dict.fromkeys(points))
    if not points:
        raise ValueError("empty point set")
    return config_ideal(single_factor(points, points[0].dim, field))


def embed_factors(I, ring, first_factor):
    """Extend an ideal on consecutive factors ``first_factor, first_factor+1, ...`` of ``ring``."""
    src = I.ring
    offset = ring.factor_vars[first_factor - 1][0]
    var_map = [v + offset for v in range(src.nvars)]
    if src.dims != ring.dims[first_factor - 1 : first_factor - 1 + len(src.dims)]:
        raise ShapeError(f"cannot place {src.dims} at factor {first_factor} of {ring.dims}")
    return Ideal(ring, [g.embed(ring, var_map) for g in I.gb()])


def subset_ideal(S, i, ring):
    """Ideal of {Q in S} x (other factors), generated in the factor-i variables."""
    S = tuple(S)
    if not S:
        raise ValueError("empty point set")
    a = ring.dims[i - 1]
    if any(Q.dim != a for Q in S):
        raise ShapeError(f"points do not lie in P^{a}")
    return embed_factors(projective_points_ideal(S, ring.field), ring, i)


def trailing_ideal(Y, ring):
    """Ideal of a configuration Y in factors 2..n, extended to ``ring``."""
    return embed_factors(config_ideal(Y), ring, 2)


def level_form(P, ring, i=1):
    """Linear form of degree e_i vanishing exactly at the point P of P^1 (factor i)."""
    if P.dim != 1:
        raise ShapeError("level forms need a P^1 factor")
    p0, p1 = P.coords
    field = ring.field
    return Polynomial.linear(ring, {ring.var_index(i, 0): p1, ring.var_index(i, 1): field(-p0)})


def bdl_ideal(levels, forms, ring):
    """I_{Y_1} + L_1 I_{Y_2} + ... + L_1...L_{t-1} I_{Y_t} + (L_1...L_t).

    ``levels`` is a weakly decreasing chain Y_1 >= Y_2 >= ... of configurations in
    the trailing factors, ``forms`` the matching level forms.
    """
    levels = list(levels)
    if len(levels) != len(forms) or not levels:
        raise ValueError("need one form per level")
    for a, b in zip(levels, levels[1:]):
        if not b._set <= a._set:
            raise ChainError("level images are not nested")
    gens = []
    prefix = ring.one()
    for Y, L in zip(levels, forms):
        for g in trailing_ideal(Y, ring).gens:
            gens.append(prefix * g)
        prefix = prefix * L
    gens.append(prefix)
    return Ideal(ring, gens)


def inclusion_chain(config):
    """Level points and images sorted so the images decrease (requires inclusion)."""
    ls = level_sets(config, 1)
    pairs = [(Pj, pi(Xj, 1)) for Pj, Xj in ls.classes]
    pairs.sort(key=lambda t: -len(t[1]))
    return pairs


def bdl_ideal_for(config):
    ring = config_ring(config)
    chain = inclusion_chain(config)
    return bdl_ideal([Y for _, Y in chain], [level_form(P, ring) for P, _ in chain], ring)


def staircase_ideal(st, ring):
    """I_{V_1} + I_{V_2} I_{Z_1} + ... + I_{V_t} I_{Z_{t-1}} + I_{Z_t}."""
    V, Z = vz_chains(st)
    IV = [subset_ideal(v, 1, ring) for v in V]
    IZ = [subset_ideal(z, 2, ring) for z in Z]
    total = IV[0]
    for k in range(1, len(V)):
        total = total + IV[k] * IZ[k - 1]
    return total + IZ[-1]


# generator factorization in P^1 x P^n --------------------------------------

@dataclass
class FactoredGenerator:
    generator: Polynomial
    level_indices: tuple  # which level forms make up F'
    residual: Polynomial  # F'', y-only
    residual_ok: bool  # F'' vanishes on pi_1 of the unused levels


@dataclass
class FactorizationReport:
    minimal_ok: list = dc_field(default_factory=list)  # per engine minimal generator: FactoredGenerator or None
    factored_set: list = dc_field(default_factory=list)  # FactoredGenerator list
    generates: bool = False
    residual_ok: bool = False

    @property
    def success(self):
        return self.generates and self.residual_ok

    @property
    def minimal_all_factor(self):
        return all(f is not None for f in self.minimal_ok)


def _x_degree(f):
    return f.multidegree()[0]


def _factor_by_levels(F, forms):
    """Divide out level forms until no x-variable remains; backtracks over choices."""

    def rec(G, start, used):
        if _x_degree(G) == 0:
            return G, used
        for u in range(start, len(forms)):
            try:
                Q = G.exact_div(forms[u])
            except InexactDivisionError:
                continue
            got = rec(Q, u + 1, used + (u,))
            if got is not None:
                return got
        return None

    return rec(F, 0, ())


def _vanishes_on(f, points, ring):
    """Evaluate a y-only polynomial at second-factor points."""
    ys = ring.factor_vars[1]
    for Q in points:
        vals = [0] * ring.nvars
        for v, c in zip(ys, Q.coords):
            vals[v] = c
        if f.evaluate(vals):
            return False
    return True


def generator_factorization_check(config, acm_required=True, acm=None):
    """Check that I_X has generators F' * F'' with F' a product of level forms.

    Engine minimal generators are tried first (greedy division with backtracking).
    Then a generating set built from products prod_{u in D} L_u * I_{Y_D},
    Y_D = union of the level images outside D, is reduced to a minimal one and
    compared with I_X.
    """
    if config.shape.n != 2 or config.shape.dims[0] != 1:
        raise ShapeError("generator factorization is stated for P^1 x P^n")
    if acm_required:
        if acm is None:
            from .oracle import acm_decide

            acm = lambda X: acm_decide(X).is_acm
        if not acm(config):
            raise ValueError("configuration is not ACM")
    ring = config_ring(config)
    ls = level_sets(config, 1)
    forms = [level_form(Pj, ring) for Pj, _ in ls.classes]
    images = [eta(Xj, 2) for _, Xj in ls.classes]
    I = config_ideal(config)
    report = FactorizationReport()

    def residual_vanishes(used, residual):
        rest = [Q for u, Y in enumerate(images) if u not in used for Q in Y]
        return _vanishes_on(residual, list(dict.fromkeys(rest)), ring)

    for F in min_gens(I).generators:
        got = _factor_by_levels(F, forms)
        if got is None:
            report.minimal_ok.append(None)
        else:
            residual, used = got
            report.minimal_ok.append(FactoredGenerator(F, used, residual, residual_vanishes(used, residual)))

    t = len(forms)
    candidates = []
    meta = {}
    for size in range(t + 1):
        for D in combinations(range(t), size):
            prod = ring.one()
            for u in D:
                prod = prod * forms[u]
            rest = list(dict.fromkeys(Q for u, Y in enumerate(images) if u not in D for Q in Y))
            if rest:
                ys = subset_ideal(rest, 2, ring)
                residuals = min_gens(ys).generators
            else:
                residuals = [ring.one()]
            for r in residuals:
                g = prod * r
                candidates.append(g)
                meta.setdefault(g, (D, r))
    chosen = select_minimal(ring, candidates).generators
    for g in chosen:
        D, r = meta[g]
        report.factored_set.append(FactoredGenerator(g, D, r, residual_vanishes(D, r)))
    report.generates = Ideal(ring, chosen) == I
    report.residual_ok = all(f.residual_ok for f in report.factored_set)
    return report
