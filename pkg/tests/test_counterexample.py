"""An ACM configuration in P^1 x P^2 with N1 outside D, checked independently with sympy over Q.

Levels [1,1]: {a, q}, [1,2]: {b, q}, [1,3]: {a, b, c, q}; B_Y = {q}, N0 = 3, N1 = 1.
The third level contains every other level image, so the configuration is a basic
double link of the first two levels and stays ACM while N0 grows.
"""

import random
from itertools import product

import sympy as sp

from multiacm import Configuration, ab_partition, d_membership, thm47_hypotheses
from multiacm.algebra import RationalField
from multiacm.oracle import acm_decide

A = [52, -22, -86]
B = [-30, -29, -56]
C = [41, -47, -46]
Qb = [-53, 48, -51]
LEVELS = {1: [A, Qb], 2: [B, Qb], 3: [A, B, C, Qb]}
COORDS = [[[1, i], Y] for i, Ys in LEVELS.items() for Y in Ys]

X0, X1, Y0, Y1, Y2 = VARS = sp.symbols("x0 x1 y0 y1 y2")


def bimonomials(d1, d2):
    xs = [X0**i * X1 ** (d1 - i) for i in range(d1 + 1)]
    ys = [Y0**i * Y1**j * Y2 ** (d2 - i - j) for i in range(d2 + 1) for j in range(d2 + 1 - i)]
    return [u * v for u in xs for v in ys]


def kernel_ideal(coords, top=3):
    """Forms of bidegree <= (top, top) vanishing on the points, from evaluation kernels."""
    gens = []
    for d1, d2 in product(range(top + 1), repeat=2):
        monos = bimonomials(d1, d2)
        rows = []
        for p, q in coords:
            sub = dict(zip(VARS, list(p) + list(q)))
            rows.append([m.subs(sub) for m in monos])
        for v in sp.Matrix(rows).nullspace():
            gens.append(sp.expand(sum(c * m for c, m in zip(v, monos))))
    return gens


def artinian_length(gens, seed=5):
    rng = random.Random(seed)
    forms = [sum(rng.randint(-9, 9) * v for v in VARS) for _ in range(2)]
    G = sp.groebner(gens + forms, *VARS, order="grevlex")
    leads = [sp.Poly(g, *VARS).monoms(order="grevlex")[0] for g in G.exprs]
    count = 0
    for deg in range(12):
        for e in product(range(deg + 1), repeat=5):
            if sum(e) != deg:
                continue
            if not any(all(a >= b for a, b in zip(e, L)) for L in leads):
                count += 1
    return count


def test_combinatorics_fall_outside_d():
    X = Configuration.from_coords((1, 2), COORDS, RationalField())
    ab = ab_partition(X)
    assert (ab.n0, ab.n1, len(ab.levels)) == (3, 1, 3)
    assert not d_membership(3, 1, 2)[0]
    hyp = thm47_hypotheses(X)
    assert hyp.generic and hyp.no_inclusion and not hyp.pairwise_in_b


def test_sympy_confirms_acm():
    # Artinian length == #X forces the truncated kernel ideal to be Cohen-Macaulay,
    # hence unmixed and equal to I_X.
    assert artinian_length(kernel_ideal(COORDS)) == len(COORDS) == 8


def test_engine_agrees():
    X = Configuration.from_coords((1, 2), COORDS, RationalField())
    assert acm_decide(X).is_acm
