import subprocess
import sys

import pytest

from multiacm.cli import load_config, main, parse_config_text, parse_report
from multiacm.lab.generate import GenSpec, generate_coords

FOUR_POINTS = """\
factors: [1, 2]
points:
  - [[1, 1], [1, 2, 3]]
  - [[1, 2], [2, -1, 5]]
  - [[1, 1], [3, 7, -4]]
  - [[1, 2], [3, 7, -4]]
"""


def write(tmp_path, text, name="x.yaml"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, dict(parse_report(out.out.splitlines())), out


def test_check_example_43(tmp_path, capsys):
    code, kv, _ = run(["check", write(tmp_path, FOUR_POINTS)], capsys)
    assert code == 0
    assert (kv["star"], kv["acm-fast-path"], kv["n0"], kv["n1"], kv["d_member"]) == ("false", "thm-4.8", "2", "1", "true")


def test_check_full_grid(tmp_path, capsys):
    text = "factors: [1, 1]\npoints:\n" + "".join(f"  - [[1, {i}], [1, {j}]]\n" for i in range(3) for j in range(2))
    code, kv, _ = run(["check", write(tmp_path, text)], capsys)
    assert code == 0 and kv["star"] == "true"


@pytest.mark.parametrize(
    "text, line",
    [
        ("factors: [1, 2]\npoints:\n  - [[1, 1], [1, 2, 3]]\n  - [[1, 2], [2, -1]]\n", 4),
        ("factors: [1, 2]\npoints:\n  - [[1, 1], [0, 0, 0]]\n", 3),
        ("factors: [1, 2]\npoints:\n  - [[1, 1], [1, 2, 3]]\n  - [[2, 2], [2, 4, 6]]\n", 4),
        ("factors: [1, 2]\npoints:\n  - [[1, 1]]\n", 3),
    ],
)
def test_invariant_violations_exit_3(tmp_path, capsys, text, line):
    code, _, out = run(["check", write(tmp_path, text)], capsys)
    assert code == 3
    assert f"line {line}:" in out.err


@pytest.mark.parametrize(
    "text",
    ["factors: [1, 2\n", "points: []\n", "factors: [1]\npoints:\n  - [[a, 1]]\n", "- 1\n- 2\n", "factors: [1]\npoints: []\nextra: 1\n"],
)
def test_parse_errors_exit_2(tmp_path, capsys, text):
    code, _, _ = run(["check", write(tmp_path, text)], capsys)
    assert code == 2


def test_missing_file_exit_2(tmp_path, capsys):
    code, _, _ = run(["check", str(tmp_path / "nope.yaml")], capsys)
    assert code == 2


def test_bad_prime_exit_3(tmp_path, capsys):
    code, _, _ = run(["--prime", "101", "check", write(tmp_path, FOUR_POINTS)], capsys)
    assert code == 3


def test_json_accepted():
    X, meta = parse_config_text('{"factors": [1, 1], "points": [[[1, 0], [0, 1]]], "seed": 4}')
    assert len(X) == 1 and meta["seed"] == 4


def test_ideal_command(tmp_path, capsys):
    code, kv, _ = run(["ideal", write(tmp_path, FOUR_POINTS), "--hilbert", "5", "5"], capsys)
    assert code == 0 and kv["hilbert[5,5]"] == "4"
    one = write(tmp_path, "factors: [1, 2]\npoints:\n  - [[1, 0], [1, 0, 0]]\n", "one.yaml")
    code, kv, _ = run(["ideal", one, "--min-gens"], capsys)
    assert kv["min-gens[1,0]"] == "1" and kv["min-gens[0,1]"] == "2" and kv["min-gens-total"] == "3"


def test_ideal_groebner_of_grid(tmp_path, capsys):
    text = "factors: [1, 1]\npoints:\n" + "".join(f"  - [[1, {i}], [1, {j}]]\n" for i in range(2) for j in range(2))
    code, _, out = run(["ideal", write(tmp_path, text), "--groebner"], capsys)
    gb = [v for k, v in parse_report(out.out.splitlines()) if k == "gb"]
    assert code == 0 and len(gb) == 2 and all(("x1" in g) != ("x2" in g) for g in gb)


def test_acm_command(tmp_path, capsys):
    code, kv, _ = run(["acm", write(tmp_path, FOUR_POINTS)], capsys)
    assert code == 0 and kv["acm"] == "true" and kv["certificate"] == "regular-sequence"
    x1 = FOUR_POINTS + "  - [[1, 1], [5, -3, 2]]\n  - [[1, 2], [5, -3, 2]]\n"
    code, kv, _ = run(["acm", write(tmp_path, x1, "x1.yaml"), "--trials", "3"], capsys)
    assert kv["acm"] == "false" and kv["certificate"] == "monte-carlo" and kv["trials"] == "3"
    x2 = x1 + "  - [[1, 1], [4, 1, -7]]\n  - [[1, 2], [4, 1, -7]]\n"
    code, kv, _ = run(["acm", write(tmp_path, x2, "x2.yaml")], capsys)
    assert kv["acm"] == "true"


def test_acm_trust_theorems(tmp_path, capsys):
    code, kv, _ = run(["acm", write(tmp_path, FOUR_POINTS), "--trust-theorems"], capsys)
    assert code == 0 and kv["certificate"] == "theorem" and kv["acm-fast-path"] == "thm-4.8"


def test_undecided_exit_4(tmp_path, capsys, monkeypatch):
    import multiacm.oracle as oracle
    from multiacm.oracle import ArtinianReduction

    monkeypatch.setattr(oracle, "artinian_reduction", lambda I, rows: ArtinianReduction(False))
    code, kv, _ = run(["acm", write(tmp_path, FOUR_POINTS)], capsys)
    assert code == 4 and kv["acm"] == "none"


def test_verify_examples(capsys):
    code, kv, _ = run(["verify", "examples"], capsys)
    assert code == 0 and (kv["pass"], kv["fail"]) == ("3", "0")


def test_generate_roundtrip(tmp_path, capsys):
    out = str(tmp_path / "g.yaml")
    code, _, _ = run(["generate", "--pattern", "ab", "--n0", "2", "--n1", "1", "--levels", "2", "--out", out], capsys)
    assert code == 0
    X, _ = load_config(out)
    gen = generate_coords(GenSpec((1, 2), "ab", seed=0, n0=2, n1=1, levels=2))
    assert X == gen.config
    code, kv, _ = run(["check", out], capsys)
    assert (kv["n0"], kv["n1"], kv["star"], kv["d_member"]) == ("2", "1", "false", "true")


def test_generate_to_stdout(capsys):
    assert main(["generate", "--pattern", "star", "--factors", "2", "1", "--seed", "3"]) == 0
    X, _ = parse_config_text(capsys.readouterr().out)
    assert X.shape.dims == (2, 1)


def test_machine_lines_are_stable(tmp_path, capsys):
    path = write(tmp_path, FOUR_POINTS)
    first = run(["acm", path, "--seed", "2"], capsys)[2].out
    second = run(["acm", path, "--seed", "2"], capsys)[2].out
    machine = lambda s: [l for l in s.splitlines() if not l.startswith("#")]
    assert machine(first) == machine(second)


def test_scan_command(capsys):
    code, kv, _ = run(["scan", "conj-3.9", "--budget", "2"], capsys)
    assert code == 0 and kv["suite"] == "conj-3.9" and kv["fail"] == "0"


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "multiacm", "check", write(tmp_path, FOUR_POINTS)], capture_output=True, text=True)
    assert res.returncode == 0 and "n0=2" in res.stdout
