"""Verification suites: randomized checks of the structural results, case by case.

Every case is a pure function of (suite, seed, case index); a failing case can be
replayed with ``run_case``.
"""

import random
import time
from dataclasses import dataclass, field as dc_field

from ..algebra.field import PrimeField
from ..config import (
    Configuration,
    MultiPoint,
    ProjPoint,
    ab_partition,
    d_membership,
    has_inclusion,
    has_star,
    staircase,
    thm47_hypotheses,
)
from ..oracle import acm_decide, thm48_saturation_claim, verify_witness
from ..points import bdl_ideal_for, config_ideal, config_ring, generator_factorization_check, staircase_ideal
from .generate import GenSpec, distinct_points, generate
from .genericity import certify_genericity

SUITES = (
    "lemma-3.4",
    "prop-3.2",
    "thm-decomposition",
    "thm-star-acm",
    "lemma-4.5",
    "thm-4.7",
    "thm-4.8",
    "examples",
)

D_TABLE_N0 = 4
D_TABLE_RANGE = 36


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    passed: int = 0
    failed: int = 0
    failures: list = dc_field(default_factory=list)  # (case index, case seed, detail)
    wall_time: float = 0.0
    findings: list = dc_field(default_factory=list)  # noteworthy but non-failing observations
    seed: object = 0

    @property
    def ok(self):
        return self.failed == 0

    def record(self, idx, case_seed, ok, detail=""):
        self.cases += 1
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append((idx, case_seed, detail))


def _acm(Y):
    return acm_decide(Y).is_acm


def case_seed(suite, seed, idx):
    return f"{suite}:{seed}:{idx}"


# individual suites: each returns a list of (ok, detail) checks for one case

def _case_star_vs_inclusion(rng, cs):
    dims = (rng.randint(1, 3), rng.randint(1, 3))
    pattern = rng.choice(["random", "random", "star"])
    X = generate(GenSpec(dims, pattern, budget=10, seed=cs))
    s, i = has_star(X), has_inclusion(X, 1)
    return [(s == i, f"dims={dims} star={s} inclusion={i} points={len(X)}")]


def _case_inclusion_bdl(rng, cs):
    dims = rng.choice([(1, 2), (1, 1, 2)])
    X = generate(GenSpec(dims, "inclusion", budget=9, seed=cs, levels=rng.randint(1, 3)))
    out = [(has_inclusion(X, 1, acm=_acm), f"dims={dims}: generated configuration lacks inclusion")]
    out.append((bdl_ideal_for(X) == config_ideal(X), f"dims={dims}: BDL ideal differs from I_X"))
    out.append((_acm(X), f"dims={dims}: not ACM"))
    return out


def _star_case(rng, cs):
    dims = (rng.randint(1, 3), rng.randint(1, 3))
    return dims, generate(GenSpec(dims, "star", budget=10, seed=cs))


def _case_decomposition(rng, cs):
    dims, X = _star_case(rng, cs)
    st = staircase(X)
    same = staircase_ideal(st, config_ring(X)) == config_ideal(X)
    return [(same, f"dims={dims} corners={st.corners}: staircase ideal differs from I_X")]


def _case_star_acm(rng, cs):
    dims, X = _star_case(rng, cs)
    return [(_acm(X), f"dims={dims} points={len(X)}: star configuration not ACM")]


def _random_acm_p1pn(rng, cs):
    """An ACM configuration in P^1 x P^n from one of the ACM-producing families."""
    kind = rng.choice(["inclusion", "ab"])
    if kind == "inclusion":
        return generate(GenSpec((1, 2), "inclusion", budget=8, seed=cs, levels=rng.randint(1, 3)))
    n0 = rng.randint(2, 3)
    member = [v for v in range(0, 4) if d_membership(n0, v, 2)[0]]
    return generate(GenSpec((1, 2), "ab", seed=cs, n0=n0, n1=rng.choice(member), levels=2))


def _case_factored_generators(rng, cs, report):
    X = _random_acm_p1pn(rng, cs)
    rep = generator_factorization_check(X, acm_required=True, acm=_acm)
    if not rep.minimal_all_factor:
        bad = sum(1 for f in rep.minimal_ok if f is None)
        report.findings.append(f"{cs}: {bad} engine minimal generator(s) do not factor; factored set generates={rep.generates}")
    return [(rep.success, f"points={len(X)} generates={rep.generates} residual={rep.residual_ok}")]


def _params_pairwise(rng):
    n = rng.choice([2, 2, 3])
    n0 = rng.randint(2, 4)
    t = rng.randint(2, min(3, n0))
    want_member = rng.random() < 0.5
    pool = [v for v in range(0, 5) if d_membership(n0, v, n)[0] == want_member]
    if not pool:
        pool = list(range(0, 5))
    n1 = rng.choice(pool)
    # keep the instance at desk scale
    while n0 + t * n1 > 12 and n1 > 0:
        n1 -= 1
    return n, n0, n1, t


def _case_ab_pairwise(rng, cs):
    n, n0, n1, t = _params_pairwise(rng)
    X = generate(GenSpec((1, n), "ab", seed=cs, n0=n0, n1=n1, levels=t))
    hyp = thm47_hypotheses(X)
    member, _ = d_membership(n0, n1, n)
    decision = _acm(X)
    label = f"n={n} N0={n0} N1={n1} t={t} member={member} acm={decision}"
    return [(hyp.applies, label + ": hypotheses not certified"), (decision == member, label)]


def _params_intersecting(rng):
    n0 = rng.randint(2, 3)
    t = 3
    member = [v for v in range(0, 5) if d_membership(n0, v, 2)[0]]
    return 2, n0, rng.choice(member), t


def _claim_instance(rng, cs):
    """(X', P) with X' ACM, P a new point in an A-column and a row of X'."""
    n, n0, n1, t = _params_intersecting(rng)
    Xp = generate(GenSpec((1, n), "ab", seed=cs + ":claim", n0=n0, n1=n1, levels=t, intersect_allowed=True))
    ab = ab_partition(Xp)
    options = []
    for Pj, Y in ab.levels:
        for Q in ab.a_y:
            if Q not in Y:
                options.append((Pj, Q))
    Pj, Q = rng.choice(options)
    return Xp, MultiPoint((Pj, Q))


def _case_ab_intersecting(rng, cs, idx):
    n, n0, n1, t = _params_intersecting(rng)
    X = generate(GenSpec((1, n), "ab", seed=cs, n0=n0, n1=n1, levels=t, intersect_allowed=True))
    hyp = thm47_hypotheses(X)
    label = f"N0={n0} N1={n1} t={t}"
    out = [(hyp.generic and hyp.no_inclusion, label + ": hypotheses not certified"), (_acm(X), label + ": not ACM")]
    if idx % 3 == 0:
        Xp, P = _claim_instance(rng, cs)
        rep = thm48_saturation_claim(Xp, P, acm=_acm)
        out.append((rep.holds, f"claim s={rep.s} r={rep.r}: saturation differs"))
        out.append((_acm(Xp.subset(Xp.points + (P,))), "X' + P not ACM"))
    return out


def example_configurations(rng, field=None):
    """Two-level configurations in P^1 x P^2 on rows [1, 1], [1, 2] over certified generic columns Q_1..Q_5.

    Returns (4 points: no star property but ACM, 6 points: not ACM, 8 points: ACM).
    """
    field = field or PrimeField()
    for _ in range(32):
        Q = distinct_points(rng, 2, 5, field)
        pts = [ProjPoint.make(q, field) for q in Q]
        if certify_genericity(pts, [pts[:3], pts[:4]], field):
            break
    else:
        raise RuntimeError("could not certify generic points")
    P = [[1, 1], [1, 2]]

    def mk(pairs):
        return Configuration.from_coords((1, 2), [[P[a], Q[b]] for a, b in pairs], field)

    four_points = mk([(0, 0), (1, 1), (0, 2), (1, 2)])
    base = [(0, 0), (1, 1), (0, 2), (1, 2), (0, 3), (1, 3)]
    x1 = mk(base)
    x2 = mk(base + [(0, 4), (1, 4)])
    return four_points, x1, x2


def d_table(n0=D_TABLE_N0, n=2, upto=D_TABLE_RANGE):
    return [v for v in range(upto) if d_membership(n0, v, n)[0]]


D_TABLE_EXPECTED = [6, 10, 11, 15, 16, 17, 21, 22, 23, 24, 28, 29, 30, 31, 32]


def _case_examples(rng, cs):
    four_points, x1, x2 = example_configurations(rng)
    v_four = acm_decide(four_points)
    ok_four = (not has_star(four_points)) and v_four.is_acm and verify_witness(four_points, v_four.certificate.forms)
    v1, v2 = acm_decide(x1), acm_decide(x2)
    ok_six_eight = v1.decision == "NotACM" and v1.certificate.trials == 3 and v2.is_acm
    return [
        (ok_four, "four points: expected no star property and ACM"),
        (ok_six_eight, f"six points {v1.decision}, eight points {v2.decision}"),
        (d_table() == D_TABLE_EXPECTED, "D membership table mismatch"),
    ]


def run_case(suite, seed, idx, report=None):
    """Checks for one case: list of (ok, detail)."""
    cs = case_seed(suite, seed, idx)
    rng = random.Random(cs)
    report = report if report is not None else SuiteReport(suite)
    if suite == "lemma-3.4":
        return _case_star_vs_inclusion(rng, cs)
    if suite == "prop-3.2":
        return _case_inclusion_bdl(rng, cs)
    if suite == "thm-decomposition":
        return _case_decomposition(random.Random(case_seed("star", seed, idx)), case_seed("star", seed, idx))
    if suite == "thm-star-acm":
        return _case_star_acm(random.Random(case_seed("star", seed, idx)), case_seed("star", seed, idx))
    if suite == "lemma-4.5":
        return _case_factored_generators(rng, cs, report)
    if suite == "thm-4.7":
        return _case_ab_pairwise(rng, cs)
    if suite == "thm-4.8":
        return _case_ab_intersecting(rng, cs, idx)
    if suite == "examples":
        return _case_examples(rng, cs)
    raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")


def verify(suite, cases=10, seed=0):
    """Run ``cases`` cases of a suite. The examples suite counts each example as a case."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    report = SuiteReport(suite, seed=seed)
    start = time.perf_counter()
    for idx in range(cases):
        cs = case_seed(suite, seed, idx)
        try:
            checks = run_case(suite, seed, idx, report)
        except Exception as exc:  # a crash is a failed case, with its seed kept for replay
            checks = [(False, f"{type(exc).__name__}: {exc}")]
        if suite == "examples":
            for ok, detail in checks:
                report.record(idx, cs, ok, detail)
        else:
            bad = [d for ok, d in checks if not ok]
            report.record(idx, cs, not bad, "; ".join(bad))
    report.wall_time = time.perf_counter() - start
    return report
