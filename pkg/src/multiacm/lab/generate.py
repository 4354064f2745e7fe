"""Deterministic random configurations with prescribed combinatorics.

Coordinates are small integers so that a configuration can be re-read over Q
for exact-rational rechecks.
"""

import random
from dataclasses import dataclass
from itertools import product

from ..algebra.field import PrimeField
from ..config import Configuration, FactorShape, ab_partition, genericity_subsets, has_inclusion
from ..errors import RetryExhausted, ShapeError
from .genericity import certify_genericity

PATTERNS = ("random", "star", "inclusion", "ab")
COORD_BOUND = 99
MAX_RETRIES = 32

# A staircase with five corners (rows, columns indexed from 0).
FIVE_CORNERS = ((5, 0), (4, 1), (3, 2), (1, 3), (0, 4))


@dataclass(frozen=True)
class GenSpec:
    shape: tuple
    pattern: str = "random"
    budget: int = 10  # maximum number of points
    seed: object = 0
    n0: int = None  # ab pattern
    n1: int = None
    levels: int = None  # number of level sets (ab, inclusion)
    intersect_allowed: bool = False
    corners: tuple = None  # star pattern: explicit corner list
    nest: str = "staircase"  # inclusion pattern with two trailing factors: "staircase" or "random"
    prime: int = None

    def __post_init__(self):
        object.__setattr__(self, "shape", FactorShape(tuple(self.shape)).dims)
        if self.pattern not in PATTERNS:
            raise ValueError(f"unknown pattern {self.pattern!r}; choose from {PATTERNS}")


@dataclass
class Generated:
    """A configuration together with the integer coordinates it was built from."""

    config: Configuration
    coords: list
    attempts: int

    @property
    def dims(self):
        return self.config.shape.dims


def random_point(rng, a):
    while True:
        v = [rng.randint(-COORD_BOUND, COORD_BOUND) for _ in range(a + 1)]
        if any(v):
            return v


def _normalized_key(v, field):
    lead = next(c for c in v if field(c))
    inv = field.inv(field(lead))
    return tuple(field(c * inv) for c in v)


def distinct_points(rng, a, count, field):
    """``count`` projectively distinct integer points of P^a (distinct mod p)."""
    out, seen = [], set()
    while len(out) < count:
        v = random_point(rng, a)
        if not any(field(c) for c in v):
            continue
        key = _normalized_key(v, field)
        if key not in seen:
            seen.add(key)
            out.append(v)
    return out


def _rng(spec, attempt):
    return random.Random(f"gen:{spec.pattern}:{spec.shape}:{spec.seed}:{attempt}")


def _gen_random(spec, rng, field):
    dims = spec.shape
    pools = [distinct_points(rng, a, rng.randint(1, min(4, spec.budget)), field) for a in dims]
    cells = list(product(*[range(len(p)) for p in pools]))
    m = rng.randint(1, min(spec.budget, len(cells)))
    chosen = rng.sample(cells, m)
    return [[pools[i][k] for i, k in enumerate(c)] for c in chosen]


def random_row_lengths(rng, budget, max_rows=4, max_cols=4):
    """Weakly decreasing positive row lengths with total at most ``budget``."""
    rows = rng.randint(1, min(max_rows, budget))
    lengths = []
    cap = rng.randint(1, max(1, min(max_cols, budget - rows + 1)))
    left = budget
    for r in range(rows):
        room = left - (rows - r - 1)
        top = min(cap, room)
        if top < 1:
            break
        L = rng.randint(1, top)
        lengths.append(L)
        cap = L
        left -= L
    return lengths


def lengths_from_corners(corners):
    rows = max(i for i, _ in corners) + 1
    return [max(j for i, j in corners if i >= r) + 1 for r in range(rows)]


def staircase_cells(lengths):
    return [(i, j) for i, L in enumerate(lengths) for j in range(L)]


def _gen_star(spec, rng, field):
    if len(spec.shape) != 2:
        raise ShapeError("star pattern needs two factors")
    a1, a2 = spec.shape
    lengths = lengths_from_corners(spec.corners) if spec.corners else random_row_lengths(rng, spec.budget)
    rows = distinct_points(rng, a1, len(lengths), field)
    cols = distinct_points(rng, a2, max(lengths), field)
    cells = staircase_cells(lengths)
    rng.shuffle(cells)
    return [[rows[i], cols[j]] for i, j in cells]


def _shrink(rng, lengths):
    """Componentwise smaller weakly decreasing lengths (a sub-staircase)."""
    out = []
    cap = lengths[0]
    for L in lengths:
        v = rng.randint(1, min(L, cap))
        out.append(v)
        cap = v
    keep = rng.randint(1, len(out))
    return out[:keep]


def _trailing_chain(spec, rng, field, t, acm):
    """Nested point lists Y_1 >= ... >= Y_t in the trailing factors (each ACM)."""
    dims = spec.shape[1:]
    per_level = max(1, spec.budget // t)
    if len(dims) == 1:
        pool = distinct_points(rng, dims[0], rng.randint(1, per_level), field)
        sizes = sorted((rng.randint(1, len(pool)) for _ in range(t)), reverse=True)
        return [[[q] for q in pool[:s]] for s in sizes]
    if len(dims) == 2 and spec.nest == "staircase":
        lengths = random_row_lengths(rng, per_level, max_rows=3, max_cols=3)
        rows = distinct_points(rng, dims[0], len(lengths), field)
        cols = distinct_points(rng, dims[1], max(lengths), field)
        chain = [lengths]
        for _ in range(t - 1):
            chain.append(_shrink(rng, chain[-1]))
        return [[[rows[i], cols[j]] for i, j in staircase_cells(L)] for L in chain]
    # random nesting, filtered by the ACM oracle
    if acm is None:
        raise ValueError("random nesting needs an ACM oracle")
    sub = GenSpec(dims, "random", per_level, seed=f"{spec.seed}:trail:{rng.random()}", prime=spec.prime)
    base = _gen_random(sub, rng, field)
    sizes = sorted((rng.randint(1, len(base)) for _ in range(t)), reverse=True)
    chain = [base[:s] for s in sizes]
    for Y in chain:
        if not acm(Configuration.from_coords(dims, Y, field)):
            return None
    return chain


def _gen_inclusion(spec, rng, field, acm):
    if len(spec.shape) < 2:
        raise ShapeError("inclusion pattern needs at least two factors")
    t = spec.levels or rng.randint(1, 3)
    chain = _trailing_chain(spec, rng, field, t, acm)
    if chain is None:
        return None
    levels = distinct_points(rng, spec.shape[0], t, field)
    rng.shuffle(chain)
    pts = [[P] + y for P, Y in zip(levels, chain) for y in Y]
    return pts


def _gen_ab(spec, rng, field):
    if len(spec.shape) != 2 or spec.shape[0] != 1 or spec.shape[1] < 2:
        raise ShapeError("ab pattern needs shape (1, n) with n >= 2")
    n = spec.shape[1]
    t = spec.levels or 2
    n0, n1 = spec.n0, spec.n1
    if n0 is None or n1 is None:
        raise ValueError("ab pattern needs n0 and n1")
    if t < 2 or n0 < 2 or n1 < 0:
        raise ValueError("ab pattern needs t >= 2 and N0 >= 2")
    rows = [[1, i] for i in range(1, t + 1)]
    cols = distinct_points(rng, n, n0 + n1, field)
    a_cols, b_cols = cols[:n0], cols[n0:]
    usage = []
    for k in range(n0):
        if not spec.intersect_allowed:
            # the first two A-columns sit on different rows so the inclusion property fails
            usage.append({k} if k < 2 else {rng.randrange(t)})
        else:
            size = rng.randint(1, t - 1)
            usage.append(set(rng.sample(range(t), size)))
    pts = []
    for r in range(t):
        for k in range(n0):
            if r in usage[k]:
                pts.append([rows[r], a_cols[k]])
        for q in b_cols:
            pts.append([rows[r], q])
    return pts


def generate_coords(spec, acm=None):
    """Integer coordinates for a configuration matching ``spec``.

    Patterns "ab" are regenerated until the genericity certificate holds;
    "inclusion" with random nesting until every level image is ACM.
    """
    field = PrimeField(spec.prime)
    for attempt in range(MAX_RETRIES):
        rng = _rng(spec, attempt)
        if spec.pattern == "random":
            pts = _gen_random(spec, rng, field)
        elif spec.pattern == "star":
            pts = _gen_star(spec, rng, field)
        elif spec.pattern == "inclusion":
            pts = _gen_inclusion(spec, rng, field, acm)
        else:
            pts = _gen_ab(spec, rng, field)
        if pts is None:
            continue
        config = Configuration.from_coords(spec.shape, pts, field)
        if len(config) != len(pts):
            continue
        if spec.pattern == "ab":
            S, extras = genericity_subsets(config)
            if not certify_genericity(S, extras, field):
                continue
            if has_inclusion(config, 1):
                continue
            ab = ab_partition(config)
            if (ab.n0, ab.n1, len(ab.levels)) != (spec.n0, spec.n1, spec.levels or 2):
                # an empty row or a column that ended up in every row changes the invariants
                continue
        return Generated(config, pts, attempt + 1)
    raise RetryExhausted(f"no valid configuration for {spec} after {MAX_RETRIES} attempts")


def generate(spec, acm=None):
    return generate_coords(spec, acm).config
