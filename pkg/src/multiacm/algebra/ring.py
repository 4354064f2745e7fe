"""Multigraded polynomial rings k[x_{i,j}] for a product of projective spaces."""

from math import comb

from ..errors import RingMismatchError, ShapeError
from .field import PrimeField
from .monomials import degrevlex, elimination


class RingSpec:
    """Coordinate ring of P^{a_1} x ... x P^{a_n}, optionally with auxiliary variables.

    Variables are numbered factor-major: x_{1,0..a_1}, x_{2,0..a_2}, ... and the
    auxiliary variables (degree zero in the multigrading) come last.  The default
    order is degrevlex on the factor variables, with the auxiliary variables in a
    leading elimination block when present.
    """

    def __init__(self, dims, field=None, naux=0):
        dims = tuple(int(a) for a in dims)
        if not dims or any(a < 1 for a in dims):
            raise ShapeError(f"factor dimensions must be positive, got {dims}")
        self.dims = dims
        self.field = field if field is not None else PrimeField()
        self.naux = naux
        self.nmain = sum(a + 1 for a in dims)
        self.nvars = self.nmain + naux
        fv = []
        start = 0
        for a in dims:
            fv.append(tuple(range(start, start + a + 1)))
            start += a + 1
        self.factor_vars = tuple(fv)
        self.aux_vars = tuple(range(self.nmain, self.nvars))
        self._var_factor = {}
        for i, vs in enumerate(fv):
            for v in vs:
                self._var_factor[v] = i
        if naux:
            self.order = elimination(self.nvars, self.aux_vars)
        else:
            self.order = degrevlex(self.nvars)

    @property
    def nfactors(self):
        return len(self.dims)

    def __eq__(self, other):
        return (
            isinstance(other, RingSpec)
            and other.dims == self.dims
            and other.naux == self.naux
            and other.field == self.field
        )

    def __hash__(self):
        return hash((self.dims, self.naux, self.field))

    def __repr__(self):
        extra = f", naux={self.naux}" if self.naux else ""
        return f"RingSpec({self.dims}, {self.field!r}{extra})"

    def check_same(self, other):
        if self != other:
            raise RingMismatchError(f"{self!r} vs {other!r}")

    def with_aux(self, k=1):
        return RingSpec(self.dims, self.field, self.naux + k)

    def without_aux(self):
        return RingSpec(self.dims, self.field, 0)

    def var_name(self, v):
        if v >= self.nmain:
            return f"t{v - self.nmain}"
        i = self._var_factor[v]
        return f"x{i + 1}_{v - self.factor_vars[i][0]}"

    def var_index(self, i, j):
        """Index of x_{i,j}; ``i`` is the 1-based factor, ``j`` the 0-based coordinate."""
        if not 1 <= i <= len(self.dims):
            raise ShapeError(f"factor index {i} out of range 1..{len(self.dims)}")
        if not 0 <= j <= self.dims[i - 1]:
            raise ShapeError(f"coordinate index {j} out of range for P^{self.dims[i - 1]}")
        return self.factor_vars[i - 1][j]

    def var(self, v):
        from .poly import Polynomial

        e = [0] * self.nvars
        e[v] = 1
        return Polynomial(self, {tuple(e): 1})

    def x(self, i, j):
        return self.var(self.var_index(i, j))

    def aux(self, k=0):
        return self.var(self.nmain + k)

    def gens(self):
        return [self.var(v) for v in range(self.nvars)]

    def one(self):
        from .poly import Polynomial

        return Polynomial(self, {(0,) * self.nvars: 1})

    def zero(self):
        from .poly import Polynomial

        return Polynomial(self, {})

    def multidegree(self, exps):
        return tuple(sum(exps[v] for v in vs) for vs in self.factor_vars)

    def dim_graded_piece(self, d):
        """dim R_d = prod C(d_i + a_i, a_i) (factor variables only)."""
        out = 1
        for di, a in zip(d, self.dims):
            if di < 0:
                return 0
            out *= comb(di + a, a)
        return out
