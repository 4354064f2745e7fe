"""Coefficient fields: GF(p) for production, Q for cross-checks."""

import os
from fractions import Fraction

DEFAULT_PRIME = 32003
PRIME_ENV_VAR = "MULTIACM_PRIME"


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def default_prime():
    value = os.environ.get(PRIME_ENV_VAR)
    return int(value) if value else DEFAULT_PRIME


class PrimeField:
    """GF(p) with elements stored as ints in [0, p)."""

    exact_rational = False

    def __init__(self, p=None):
        p = default_prime() if p is None else int(p)
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p <= 10**4:
            raise ValueError(f"prime {p} too small for randomized soundness (need p > 10^4)")
        self.p = p

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return pow(a, -1, self.p)

    def random(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        return rng.randrange(lo, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class RationalField:
    """Exact rationals. Slow; meant for re-checking verdicts, not for scans."""

    exact_rational = True
    p = None

    def __call__(self, x):
        return Fraction(x)

    def inv(self, a):
        return 1 / Fraction(a)

    def random(self, rng, nonzero=False, bound=50):
        while True:
            v = rng.randint(-bound, bound)
            if v or not nonzero:
                return Fraction(v)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"
