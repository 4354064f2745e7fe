"""Integer encodings of monomials for block degree-reverse-lexicographic orders.

A monomial is encoded as a single Python int whose natural integer order is
the monomial order.  Each block of variables occupies a run of W-bit fields:
one field per variable holding the complemented exponent ``FMAX - e``
(the last variable of the block in the most significant field), followed by a
field holding the total degree of the block.  Blocks are stacked with the most
significant block on top, which gives the lexicographic block product of
degrevlex orders.

With this layout

* ``key(a*b) == key(a) + key(b) - key(1)`` (products are additions), and
* ``a | b`` iff ``((low(a) - low(b) + H) & H) == H``, where ``low`` masks out
  the degree fields and ``H`` holds the top bit of every exponent field.

Exponents must stay below ``2**(W-1)`` and block degrees below ``2**W``.
"""

from functools import lru_cache

W = 10
FMAX = (1 << W) - 1
EXP_LIMIT = 1 << (W - 1)


class MonomialOrder:
    def __init__(self, nvars, blocks):
        blocks = tuple(tuple(b) for b in blocks)
        flat = sorted(v for b in blocks for v in b)
        if flat != list(range(nvars)):
            raise ValueError(f"blocks {blocks} are not a partition of {nvars} variables")
        self.nvars = nvars
        self.blocks = blocks
        shifts = [0] * nvars
        deg_shifts = []
        base = 0
        # least significant block first
        for block in reversed(blocks):
            for r, v in enumerate(block):
                shifts[v] = base + r * W
            deg_shifts.append(base + len(block) * W)
            base += (len(block) + 1) * W
        deg_shifts.reverse()
        self.shifts = tuple(shifts)
        self.deg_shifts = tuple(deg_shifts)
        self.one = sum(FMAX << s for s in shifts)
        self.low = self.one
        self.guard = sum(EXP_LIMIT << s for s in shifts)
        self._block_members = blocks

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.blocks == self.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"MonomialOrder({self.nvars}, {self.blocks})"

    def encode(self, exps):
        key = 0
        for block, ds in zip(self.blocks, self.deg_shifts):
            d = 0
            for v in block:
                e = exps[v]
                if e >= EXP_LIMIT:
                    raise OverflowError(f"exponent {e} exceeds encoding limit")
                d += e
                key |= (FMAX - e) << self.shifts[v]
            key |= d << ds
        return key

    def decode(self, key):
        return tuple(FMAX - ((key >> s) & FMAX) for s in self.shifts)

    def degree(self, key):
        """Total degree (sum over all blocks)."""
        d = 0
        for ds in self.deg_shifts[1:]:
            d += (key >> ds) & FMAX
        top = self.deg_shifts[0]
        return d + (key >> top)

    def divides(self, a, b):
        low = self.low
        h = self.guard
        return (((a & low) - (b & low) + h) & h) == h

    def lcm(self, a, b):
        ea, eb = self.decode(a), self.decode(b)
        return self.encode(tuple(max(x, y) for x, y in zip(ea, eb)))

    def coprime(self, a, b):
        for s in self.shifts:
            if ((a >> s) & FMAX) != FMAX and ((b >> s) & FMAX) != FMAX:
                return False
        return True

    def exponent(self, key, v):
        return FMAX - ((key >> self.shifts[v]) & FMAX)


@lru_cache(maxsize=None)
def degrevlex(nvars, last=None):
    """Degrevlex on all variables; ``last`` optionally names the smallest variable."""
    order = list(range(nvars))
    if last is not None:
        order.remove(last)
        order.append(last)
    return MonomialOrder(nvars, (tuple(order),))


@lru_cache(maxsize=None)
def elimination(nvars, eliminate):
    """Block order with the variables in ``eliminate`` forming the leading block."""
    eliminate = tuple(eliminate)
    rest = tuple(v for v in range(nvars) if v not in eliminate)
    return MonomialOrder(nvars, (eliminate, rest))
