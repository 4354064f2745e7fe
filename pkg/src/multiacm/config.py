"""Finite point configurations in P^{a_1} x ... x P^{a_n} and their combinatorics.

Factor indices in this module are 1-based, matching the usual x_{i,j} notation.
"""

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb

from .algebra.field import PrimeField
from .errors import DuplicatePointError, InvalidPointError, NotStarError, ShapeError


@dataclass(frozen=True)
class FactorShape:
    dims: tuple

    def __post_init__(self):
        dims = tuple(int(a) for a in self.dims)
        if not dims or any(a < 1 for a in dims):
            raise ShapeError(f"factor dimensions must be positive integers, got {self.dims}")
        object.__setattr__(self, "dims", dims)

    @property
    def n(self):
        return len(self.dims)

    @property
    def nvars(self):
        return sum(a + 1 for a in self.dims)

    def __str__(self):
        return " x ".join(f"P^{a}" for a in self.dims)


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^a, normalized so that its first nonzero coordinate is 1."""

    coords: tuple

    @property
    def dim(self):
        return len(self.coords) - 1

    @classmethod
    def make(cls, coords, field):
        vals = [field(c) for c in coords]
        if len(vals) < 2:
            raise InvalidPointError(f"need at least 2 coordinates, got {len(vals)}")
        lead = next((c for c in vals if c), None)
        if lead is None:
            raise InvalidPointError("all coordinates are zero")
        inv = field.inv(lead)
        return cls(tuple(field(c * inv) for c in vals))

    def pivot(self):
        """Index of the first nonzero coordinate (which equals 1)."""
        return next(k for k, c in enumerate(self.coords) if c)

    def __str__(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class MultiPoint:
    parts: tuple

    def __str__(self):
        return "x".join(str(p) for p in self.parts)

    def omit(self, i):
        return MultiPoint(self.parts[: i - 1] + self.parts[i:])


class Configuration:
    """A finite set of distinct points of a multiprojective space over ``field``.

    Points keep their input order (used for deterministic tie-breaking); equality
    and hashing are set-based.
    """

    __slots__ = ("shape", "points", "field", "_set", "_hash")

    def __init__(self, shape, points, field=None, check=True):
        if not isinstance(shape, FactorShape):
            shape = FactorShape(tuple(shape))
        self.shape = shape
        self.field = field if field is not None else PrimeField()
        ordered = []
        seen = set()
        for P in points:
            if check:
                if len(P.parts) != shape.n:
                    raise InvalidPointError(f"point {P} has {len(P.parts)} factors, expected {shape.n}")
                for part, a in zip(P.parts, shape.dims):
                    if part.dim != a:
                        raise InvalidPointError(f"factor point {part} does not lie in P^{a}")
            if P not in seen:
                seen.add(P)
                ordered.append(P)
        self.points = tuple(ordered)
        self._set = frozenset(ordered)
        self._hash = None

    @classmethod
    def from_coords(cls, dims, points, field=None, allow_duplicates=True):
        """Build from nested coordinate lists: ``points[k][i]`` is the i-th factor of point k."""
        field = field if field is not None else PrimeField()
        shape = FactorShape(tuple(dims))
        mps = []
        seen = set()
        for k, pt in enumerate(points):
            if len(pt) != shape.n:
                raise InvalidPointError(f"point {k}: expected {shape.n} factors, got {len(pt)}")
            parts = []
            for coords, a in zip(pt, shape.dims):
                if len(coords) != a + 1:
                    raise InvalidPointError(
                        f"point {k}: coordinate tuple {tuple(coords)} has length {len(coords)}, expected {a + 1}"
                    )
                parts.append(ProjPoint.make(coords, field))
            mp = MultiPoint(tuple(parts))
            if mp in seen and not allow_duplicates:
                raise DuplicatePointError(f"point {k} duplicates an earlier point")
            seen.add(mp)
            mps.append(mp)
        return cls(shape, mps, field)

    def subset(self, points):
        return Configuration(self.shape, points, self.field, check=False)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, P):
        return P in self._set

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.shape == other.shape and self.field == other.field and self._set == other._set

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.field, self._set))
        return self._hash

    def __repr__(self):
        return f"Configuration({self.shape}, {len(self)} points)"

    def coords(self):
        return [[list(part.coords) for part in P.parts] for P in self.points]

    def transform(self, matrices):
        """Apply an invertible linear map to each factor (``matrices[i]`` acts on factor i+1)."""
        field = self.field
        out = []
        for P in self.points:
            parts = []
            for part, M in zip(P.parts, matrices):
                v = [sum(M[r][c] * part.coords[c] for c in range(len(part.coords))) for r in range(len(M))]
                parts.append(ProjPoint.make(v, field))
            out.append(MultiPoint(tuple(parts)))
        return Configuration(self.shape, out, field)

    def transpose(self):
        """Swap the two factors of a two-factor configuration."""
        if self.shape.n != 2:
            raise ShapeError("transpose needs exactly two factors")
        shape = FactorShape((self.shape.dims[1], self.shape.dims[0]))
        return Configuration(shape, [MultiPoint((P.parts[1], P.parts[0])) for P in self.points], self.field)

    def with_field(self, field):
        """Reinterpret the (integer) coordinates over another field."""
        return Configuration.from_coords(self.shape.dims, self.coords(), field)


def _check_factor(config, i):
    if not 1 <= i <= config.shape.n:
        raise ShapeError(f"factor index {i} out of range 1..{config.shape.n}")


def _require_two_factors(config):
    if config.shape.n != 2:
        raise ShapeError(f"expected two factors, got shape {config.shape}")


def eta(config, i):
    """Distinct i-th factor points, in order of first occurrence."""
    _check_factor(config, i)
    seen = {}
    for P in config.points:
        seen.setdefault(P.parts[i - 1], None)
    return tuple(seen)


def pi(config, i):
    """Project away the i-th factor."""
    _check_factor(config, i)
    if config.shape.n == 1:
        raise ShapeError("cannot omit the only factor")
    dims = config.shape.dims[: i - 1] + config.shape.dims[i:]
    return Configuration(FactorShape(dims), [P.omit(i) for P in config.points], config.field, check=False)


def points_of(config):
    """Points of a one-factor configuration, as ProjPoints."""
    if config.shape.n != 1:
        raise ShapeError("expected a configuration in a single projective space")
    return tuple(P.parts[0] for P in config.points)


def single_factor(points, dim, field):
    """Wrap ProjPoints of P^dim as a one-factor configuration."""
    return Configuration(FactorShape((dim,)), [MultiPoint((Q,)) for Q in points], field, check=False)


@dataclass(frozen=True)
class LevelDecomposition:
    factor: int
    classes: tuple  # of (ProjPoint, Configuration)

    def __len__(self):
        return len(self.classes)

    def images(self, config=None):
        """pi_factor of each class."""
        return [pi(X_j, self.factor) for _, X_j in self.classes]


def level_sets(config, i=1):
    _check_factor(config, i)
    if not len(config):
        raise ValueError("empty configuration")
    groups = {}
    for P in config.points:
        groups.setdefault(P.parts[i - 1], []).append(P)
    classes = tuple((Pj, config.subset(pts)) for Pj, pts in groups.items())
    return LevelDecomposition(i, classes)


def has_star(config):
    """For all (P1,Q1), (P2,Q2) in X: (P1,Q2) in X or (P2,Q1) in X."""
    _require_two_factors(config)
    pts = config.points
    for A, B in combinations(pts, 2):
        P1, Q1 = A.parts
        P2, Q2 = B.parts
        if MultiPoint((P1, Q2)) not in config and MultiPoint((P2, Q1)) not in config:
            return False
    return True


def _totally_ordered(sets):
    ordered = sorted(sets, key=len)
    return all(a <= b for a, b in zip(ordered, ordered[1:]))


def has_inclusion(config, i=1, acm=None):
    """Level-set images under pi_i are a chain and each is ACM.

    With two factors the images live in a single projective space and are always
    ACM, so ``acm`` is not consulted.  Otherwise ``acm`` must be a callable
    deciding ACM-ness of a configuration in the smaller product.
    A single level set counts as a chain.
    """
    ls = level_sets(config, i)
    images = ls.images()
    if not _totally_ordered([im._set for im in images]):
        return False
    if config.shape.n == 2:
        return True
    if acm is None:
        raise ValueError("an ACM oracle is required for three or more factors")
    return all(acm(im) for im in images)


@dataclass(frozen=True)
class Staircase:
    """Corner description of a (star) configuration; indices start at 0."""

    corners: tuple
    row_points: tuple
    col_points: tuple

    def cells(self):
        out = []
        for i in range(len(self.row_points)):
            for j in range(len(self.col_points)):
                if any(i <= ik and j <= jk for ik, jk in self.corners):
                    out.append((i, j))
        return out

    def points(self):
        return [MultiPoint((self.row_points[i], self.col_points[j])) for i, j in self.cells()]

    def to_configuration(self, dims, field):
        return Configuration(FactorShape(tuple(dims)), self.points(), field)


def staircase(config):
    """Relabel a (star) configuration as a union of nested rectangles.

    Rows (first factor points) are sorted by decreasing fiber size, columns by
    decreasing number of rows containing them; ties keep input order.
    """
    if not has_star(config):
        raise NotStarError("configuration does not have the (star) property")
    ls = level_sets(config, 1)
    rows = []
    for idx, (Pj, Xj) in enumerate(ls.classes):
        rows.append((-len(Xj), idx, Pj, {P.parts[1] for P in Xj.points}))
    rows.sort(key=lambda r: (r[0], r[1]))
    row_points = tuple(r[2] for r in rows)
    cols = eta(config, 2)
    count = {Q: sum(Q in r[3] for r in rows) for Q in cols}
    col_points = tuple(sorted(cols, key=lambda Q: (-count[Q], cols.index(Q))))
    lengths = [len(r[3]) for r in rows]
    corners = []
    for i, L in enumerate(lengths):
        if i == len(lengths) - 1 or lengths[i + 1] < L:
            corners.append((i, L - 1))
    corners.sort(key=lambda c: -c[0])
    return Staircase(tuple(corners), row_points, col_points)


def vz_chains(st):
    """V_k = rows 0..i_k (descending chain), Z_k = columns 0..j_k (ascending)."""
    V = [st.row_points[: ik + 1] for ik, _ in st.corners]
    Z = [st.col_points[: jk + 1] for _, jk in st.corners]
    return V, Z


@dataclass(frozen=True)
class ABPartition:
    a_part: Configuration
    b_part: Configuration
    n0: int
    n1: int
    b_y: tuple
    levels: tuple = dc_field(default=())  # (P_i, Y_i) per level set
    a_levels: tuple = dc_field(default=())  # A_i(X)
    b_levels: tuple = dc_field(default=())  # B_i(X)

    @property
    def a_y(self):
        return eta(self.a_part, 2) if len(self.a_part) else ()


def ab_partition(config):
    """Split X in P^1 x P^n into A_X and B_X (columns common to every level)."""
    _require_two_factors(config)
    if config.shape.dims[0] != 1:
        raise ShapeError(f"A/B partition is defined for P^1 x P^n, got {config.shape}")
    ls = level_sets(config, 1)
    levels = []
    for Pj, Xj in ls.classes:
        levels.append((Pj, tuple(P.parts[1] for P in Xj.points)))
    common = set(levels[0][1])
    for _, Y in levels[1:]:
        common &= set(Y)
    a_pts = [P for P in config.points if P.parts[1] not in common]
    b_pts = [P for P in config.points if P.parts[1] in common]
    A = config.subset(a_pts)
    B = config.subset(b_pts)
    b_y = tuple(Q for Q in eta(config, 2) if Q in common)
    n0 = len({P.parts[1] for P in a_pts})
    a_levels = tuple(Xj.subset([P for P in Xj.points if P.parts[1] not in common]) for _, Xj in ls.classes)
    b_levels = tuple(Xj.subset([P for P in Xj.points if P.parts[1] in common]) for _, Xj in ls.classes)
    return ABPartition(A, B, n0, len(b_y), b_y, tuple(levels), a_levels, b_levels)


def d_intervals(n0, n, upto):
    """The intervals [C(n0+i, n), C(n0+i+1, n) - n0] (nonempty ones) with lower end <= upto."""
    out = []
    m = n - 1  # for smaller m every interval is empty
    while comb(m, n) <= upto:
        lo = comb(m, n)
        hi = comb(m + 1, n) - n0
        if hi >= lo:
            out.append((m - n0, lo, hi))
        m += 1
    return out


def d_membership(n0, n1, n):
    """Is n1 in D = union_i {C(n0+i, n), ..., C(n0+i+1, n) - n0}?  Returns (member, i)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if n0 < 2:
        raise ValueError("N0 must be at least 2")
    if n1 < 0:
        return False, None
    for i, lo, hi in d_intervals(n0, n, n1):
        if lo <= n1 <= hi:
            return True, i
    return False, None


@dataclass(frozen=True)
class Thm47Report:
    pairwise_in_b: bool
    generic: bool
    no_inclusion: bool

    @property
    def applies(self):
        return self.pairwise_in_b and self.generic and self.no_inclusion


def genericity_subsets(config, ab=None):
    """(S, extra subsets) whose generic Hilbert functions the P^1 x P^n theorems consume."""
    ab = ab or ab_partition(config)
    a_y = ab.a_y
    S = tuple(a_y) + tuple(ab.b_y)
    extras = [tuple(ab.b_y)] + [Y for _, Y in ab.levels] + [eta(config, 2)]
    return S, extras


def thm47_hypotheses(config):
    from .lab.genericity import certify_genericity

    ab = ab_partition(config)
    Ys = [set(Y) for _, Y in ab.levels]
    BY = set(ab.b_y)
    pairwise = all((Ya & Yb) <= BY for Ya, Yb in combinations(Ys, 2))
    S, extras = genericity_subsets(config, ab)
    generic = certify_genericity(S, extras, config.field)
    no_inclusion = not has_inclusion(config, 1)
    return Thm47Report(pairwise, generic, no_inclusion)
