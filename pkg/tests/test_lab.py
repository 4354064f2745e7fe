import pytest
from hypothesis import given, settings, strategies as st

from multiacm import ProjPoint, ab_partition, has_inclusion, has_star, thm47_hypotheses
from multiacm.algebra import h_vector, is_generic_hf
from multiacm.errors import RetryExhausted
from multiacm.lab.generate import FIVE_CORNERS, GenSpec, generate, generate_coords
from multiacm.lab.genericity import certify_genericity
from multiacm.lab.scan import SCANS, inclusion_shapes, scan
from multiacm.lab.suites import SUITES, run_case, verify
from multiacm.oracle import acm_decide


def pts(rows, field):
    return [ProjPoint.make(r, field) for r in rows]


def test_h_vector_and_generic_hf(field):
    line = pts([[1, 0, 0], [0, 1, 0], [1, 1, 0]], field)
    general = pts([[1, 0, 0], [0, 1, 0], [0, 0, 1]], field)
    assert h_vector(line, field) == [1, 1, 1]
    assert h_vector(general, field) == [1, 2]
    assert not is_generic_hf(line, field)
    assert is_generic_hf(general, field)


def test_certify_genericity_checks_every_subset(field):
    S = pts([[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]], field)
    assert certify_genericity(S, [S[:3]], field)
    bad = pts([[1, 0, 0], [0, 1, 0], [1, 1, 0]], field)
    assert not certify_genericity(S, [bad], field)


@pytest.mark.parametrize(
    "spec",
    [
        GenSpec((2, 1), "random", budget=6, seed=3),
        GenSpec((1, 2), "star", budget=9, seed="x"),
        GenSpec((1, 1, 2), "inclusion", budget=9, seed=5, levels=2),
        GenSpec((1, 2), "ab", seed=1, n0=3, n1=3, levels=2),
    ],
)
def test_generation_is_deterministic(spec):
    assert generate_coords(spec, acm=lambda Y: acm_decide(Y).is_acm).coords == generate_coords(
        spec, acm=lambda Y: acm_decide(Y).is_acm
    ).coords


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 3), st.integers(0, 3), st.booleans())
def test_ab_generator_contract(seed, n0, n1, intersect):
    spec = GenSpec((1, 2), "ab", seed=seed, n0=n0, n1=n1, levels=3 if intersect else 2, intersect_allowed=intersect)
    X = generate(spec)
    ab = ab_partition(X)
    assert (ab.n0, ab.n1) == (n0, n1)
    hyp = thm47_hypotheses(X)
    assert hyp.generic and hyp.no_inclusion
    if not intersect:
        assert hyp.pairwise_in_b


def test_star_generator_with_five_corners():
    X = generate(GenSpec((1, 2), "star", seed=0, corners=FIVE_CORNERS, budget=30))
    assert has_star(X) and len(X) == 18


def test_inclusion_generator():
    X = generate(GenSpec((1, 2), "inclusion", budget=9, seed=2, levels=3))
    assert has_inclusion(X)


def test_retry_exhausted():
    # N0 = 2 columns cannot be spread over 4 levels without some empty level
    with pytest.raises(RetryExhausted):
        generate(GenSpec((1, 2), "ab", seed=0, n0=2, n1=0, levels=4))


def test_unknown_pattern():
    with pytest.raises(ValueError):
        GenSpec((1, 1), "spiral")


def test_inclusion_shapes_respect_caps():
    shapes = inclusion_shapes()
    assert shapes and all(len(s) >= 3 and s[0] >= 2 and sum(a + 1 for a in s) <= 9 for s in shapes)


@pytest.mark.parametrize("suite", SUITES)
def test_suites_run_small(suite):
    report = verify(suite, cases=2, seed=11)
    assert report.failed == 0, report.failures
    assert report.cases == (6 if suite == "examples" else 2)


def test_suite_cases_replay():
    a = run_case("thm-4.7", 4, 2)
    b = run_case("thm-4.7", 4, 2)
    assert a == b


def test_unknown_suite():
    with pytest.raises(ValueError):
        verify("lemma-9.9")
    with pytest.raises(ValueError):
        scan("conj-0")


def test_conj39_scan_small():
    report = scan("conj-3.9", budget=4, seed=2)
    assert report.cases == 4 and report.failed == 0


def test_candidates_replay_and_are_rechecked():
    report = scan("conj-4.10", budget=2, seed=0)
    assert report.candidates
    cand = report.candidates[0]
    assert cand.replays and cand.rational_verdict == "ACM"
    assert cand.confirmed and report.failures[0][1] == cand.case_seed
    assert set(SCANS) == {"conj-3.9", "conj-4.10"}
