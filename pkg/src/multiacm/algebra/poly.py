"""Sparse polynomials with exponent-tuple keys."""

from ..errors import InexactDivisionError


class Polynomial:
    """Immutable sparse polynomial over ``ring.field``.

    ``terms`` maps exponent tuples to nonzero field elements.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms=None, _clean=False):
        self.ring = ring
        if terms is None:
            terms = {}
        if not _clean:
            field = ring.field
            cleaned = {}
            for e, c in terms.items():
                c = field(c)
                if c:
                    cleaned[tuple(e)] = c
            terms = cleaned
        self.terms = terms
        self._hash = None

    # construction helpers -------------------------------------------------
    @classmethod
    def constant(cls, ring, c):
        return cls(ring, {(0,) * ring.nvars: c})

    @classmethod
    def linear(cls, ring, coeffs):
        """Linear form sum(coeffs[v] * var_v)."""
        terms = {}
        for v, c in coeffs.items():
            e = [0] * ring.nvars
            e[v] = 1
            terms[tuple(e)] = c
        return cls(ring, terms)

    # basic queries ----------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def multidegrees(self):
        md = self.ring.multidegree
        return {md(e) for e in self.terms}

    def is_multihomogeneous(self):
        return len(self.multidegrees()) <= 1

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def multidegree(self):
        mds = self.multidegrees()
        if len(mds) != 1:
            raise ValueError("polynomial is zero or not multihomogeneous")
        return next(iter(mds))

    def variables(self):
        out = set()
        for e in self.terms:
            out.update(v for v, k in enumerate(e) if k)
        return out

    def sorted_terms(self, order=None):
        order = order or self.ring.order
        enc = order.encode
        return sorted(self.terms.items(), key=lambda t: enc(t[0]), reverse=True)

    def leading_term(self, order=None):
        order = order or self.ring.order
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.encode)
        return e, self.terms[e]

    def monic(self, order=None):
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.ring.field.inv(c))

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self.ring.check_same(other.ring)
            return other
        return Polynomial.constant(self.ring, other)

    def __add__(self, other):
        other = self._coerce(other)
        field = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = field(out.get(e, 0) + c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        field = self.ring.field
        return Polynomial(self.ring, {e: field(-c) for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        field = self.ring.field
        c = field(c)
        if not c:
            return Polynomial(self.ring, {}, _clean=True)
        return Polynomial(self.ring, {e: field(v * c) for e, v in self.terms.items()}, _clean=True)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self.ring.check_same(other.ring)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        result = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, exps, c=1):
        field = self.ring.field
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): field(v * c) for e, v in self.terms.items()},
            _clean=True,
        )

    def exact_div(self, divisor, order=None):
        """Quotient q with self == q * divisor; raises if the division is not exact."""
        order = order or self.ring.order
        field = self.ring.field
        if not divisor.terms:
            raise ZeroDivisionError("division by zero polynomial")
        le, lc = divisor.leading_term(order)
        inv = field.inv(lc)
        rem = self
        quot = {}
        while rem.terms:
            e, c = rem.leading_term(order)
            shift = tuple(a - b for a, b in zip(e, le))
            if min(shift) < 0:
                raise InexactDivisionError("division left a nonzero remainder")
            q = field(c * inv)
            quot[shift] = q
            rem = rem - divisor.mul_monomial(shift, q)
        return Polynomial(self.ring, quot, _clean=True)

    def divides_exactly(self, other):
        try:
            other.exact_div(self)
        except InexactDivisionError:
            return False
        return True

    # evaluation and substitution -------------------------------------------
    def evaluate(self, values):
        """Evaluate at a full assignment of field values to all ring variables."""
        field = self.ring.field
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, k in enumerate(e):
                if k:
                    t = t * values[v] ** k
            total += t
        return field(total)

    def substitute(self, target_ring, images):
        """Ring map sending variable v to ``images[v]`` (polynomials in target_ring)."""
        result = {}
        field = target_ring.field
        power_cache = {}

        def power(v, k):
            key = (v, k)
            if key not in power_cache:
                power_cache[key] = images[v] ** k
            return power_cache[key]

        for e, c in self.terms.items():
            term = Polynomial.constant(target_ring, c)
            for v, k in enumerate(e):
                if k:
                    term = term * power(v, k)
            for te, tc in term.terms.items():
                result[te] = result.get(te, 0) + tc
        return Polynomial(target_ring, {e: field(c) for e, c in result.items()})

    def embed(self, target_ring, var_map):
        """Rename variables: v -> var_map[v]; no arithmetic."""
        n = target_ring.nvars
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for v, k in enumerate(e):
                if k:
                    ne[var_map[v]] = k
            out[tuple(ne)] = c
        return Polynomial(target_ring, out, _clean=True)

    # printing ---------------------------------------------------------------
    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        field = self.ring.field
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                self.ring.var_name(v) + (f"^{k}" if k > 1 else "") for v, k in enumerate(e) if k
            )
            cs = _signed(c, field)
            if mono:
                if cs == "1":
                    parts.append(mono)
                elif cs == "-1":
                    parts.append("-" + mono)
                else:
                    parts.append(f"{cs}*{mono}")
            else:
                parts.append(cs)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def _signed(c, field):
    """Symmetric representative for GF(p) coefficients, for readability."""
    if field.p is not None and c > field.p // 2:
        return str(c - field.p)
    return str(c)
