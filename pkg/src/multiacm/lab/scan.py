"""Counterexample searches for the two open conjectures.

A case becomes a candidate when the prime-field verdict contradicts the
conjecture. It is only reported as a failure after regenerating it from its seed
gives identical coordinates and the verdict survives over Q.
"""

import random
import time
from dataclasses import dataclass

from ..algebra.field import RationalField
from ..config import Configuration, d_membership, has_inclusion, thm47_hypotheses
from ..oracle import acm_decide
from .generate import GenSpec, generate_coords
from .suites import SuiteReport, case_seed

SCANS = ("conj-3.9", "conj-4.10")
MAX_POINTS = 12
MAX_VARS = 9


@dataclass
class Candidate:
    scan: str
    case_seed: str
    spec: GenSpec
    coords: list
    prime_verdict: str
    rational_verdict: str = None
    replays: bool = None

    @property
    def confirmed(self):
        return self.replays and self.rational_verdict == self.prime_verdict


def _acm(Y):
    return acm_decide(Y).is_acm


def inclusion_shapes(max_vars=MAX_VARS):
    """Shapes with at least three factors, a_1 >= 2, and at most ``max_vars`` variables."""
    out = []

    def extend(prefix):
        total = sum(a + 1 for a in prefix)
        if len(prefix) >= 3:
            out.append(tuple(prefix))
        for a in (1, 2, 3):
            if total + a + 1 <= max_vars:
                extend(prefix + [a])

    for a1 in (2, 3):
        extend([a1])
    return out


def _spec_conj39(rng, cs, max_points, max_vars):
    dims = rng.choice(inclusion_shapes(max_vars))
    nest = "staircase" if len(dims) == 3 and rng.random() < 0.5 else "random"
    return GenSpec(dims, "inclusion", budget=max_points, seed=cs, levels=rng.randint(1, 3), nest=nest)


def _spec_conj410(rng, cs, max_points, max_vars):
    n = 2 if max_vars < 6 or rng.random() < 0.75 else 3
    n0 = rng.randint(2, 3)
    t = 3
    outside = [v for v in range(0, 6) if not d_membership(n0, v, n)[0] and n0 * (t - 1) + t * v <= max_points]
    return GenSpec((1, n), "ab", seed=cs, n0=n0, n1=rng.choice(outside), levels=t, intersect_allowed=True)


def _conj39_holds(X):
    return has_inclusion(X, 1, acm=_acm), _acm(X)


def _check_candidate(cand, rational_check):
    replay = generate_coords(cand.spec, acm=_acm)
    cand.replays = replay.coords == cand.coords
    XQ = Configuration.from_coords(cand.spec.shape, cand.coords, RationalField())
    cand.rational_verdict = rational_check(XQ)
    return cand


def scan(conj, budget=30, seed=0, max_points=MAX_POINTS, max_vars=MAX_VARS):
    """Search ``budget`` cases; failures are confirmed counterexample candidates."""
    if conj not in SCANS:
        raise ValueError(f"unknown scan {conj!r}; choose from {SCANS}")
    report = SuiteReport(conj, seed=seed)
    report.candidates = []
    start = time.perf_counter()
    for idx in range(budget):
        cs = case_seed(conj, seed, idx)
        rng = random.Random(cs)
        try:
            if conj == "conj-3.9":
                spec = _spec_conj39(rng, cs, max_points, max_vars)
                gen = generate_coords(spec, acm=_acm)
                X = gen.config
                inclusion = has_inclusion(X, 1, acm=_acm)
                if not inclusion:
                    report.record(idx, cs, False, f"generator produced no inclusion property for {spec.shape}")
                    continue
                verdict = acm_decide(X)
                contradicts = not verdict.is_acm

                def rational_check(XQ):
                    if not has_inclusion(XQ, 1, acm=_acm):
                        return "no-inclusion"
                    return acm_decide(XQ).decision

            else:
                spec = _spec_conj410(rng, cs, max_points, max_vars)
                gen = generate_coords(spec)
                X = gen.config
                hyp = thm47_hypotheses(X)
                if not (hyp.generic and hyp.no_inclusion):
                    report.record(idx, cs, False, "generated instance misses the hypotheses")
                    continue
                verdict = acm_decide(X)
                contradicts = verdict.is_acm

                def rational_check(XQ):
                    return acm_decide(XQ).decision

        except Exception as exc:
            report.record(idx, cs, False, f"{type(exc).__name__}: {exc}")
            continue
        if not contradicts:
            report.record(idx, cs, True)
            continue
        cand = _check_candidate(Candidate(conj, cs, spec, gen.coords, verdict.decision), rational_check)
        report.candidates.append(cand)
        if cand.confirmed:
            report.record(idx, cs, False, f"counterexample candidate: shape={spec.shape} coords={gen.coords}")
        else:
            report.record(idx, cs, True)
            report.findings.append(
                f"{cs}: prime-field verdict {cand.prime_verdict} not confirmed "
                f"(rational={cand.rational_verdict}, replays={cand.replays})"
            )
    report.wall_time = time.perf_counter() - start
    return report
