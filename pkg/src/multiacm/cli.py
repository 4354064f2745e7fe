"""Command-line front end.

Reports are written as "# " prefixed human lines followed by key=value lines.
Exit codes: 0 success, 2 unreadable input, 3 invalid configuration, 4 undecided.
"""

import argparse
import sys

import yaml

from .algebra.field import PrimeField
from .algebra.hilbert import hilbert_multi, min_gens
from .config import (
    Configuration,
    ab_partition,
    d_membership,
    has_inclusion,
    has_star,
    level_sets,
    staircase,
    thm47_hypotheses,
)
from .errors import DuplicatePointError, InvalidPointError, MultiAcmError, ShapeError

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_UNDECIDED = 4


class ConfigFileError(Exception):
    def __init__(self, message, line=None, code=EXIT_PARSE):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.code = code


# configuration files ----------------------------------------------------------

def _line(node):
    return node.start_mark.line + 1


def _int(node, what):
    if not isinstance(node, yaml.ScalarNode):
        raise ConfigFileError(f"{what} must be an integer", _line(node))
    try:
        value = yaml.safe_load(node.value) if node.tag.endswith(":int") else int(node.value)
        return int(value)
    except (TypeError, ValueError):
        raise ConfigFileError(f"{what} must be an integer, got {node.value!r}", _line(node)) from None


def _seq(node, what):
    if not isinstance(node, yaml.SequenceNode):
        raise ConfigFileError(f"{what} must be a list", _line(node))
    return node.value


def parse_config_text(text, prime=None):
    """Parse a configuration document. Returns (Configuration, metadata dict)."""
    try:
        root = yaml.compose(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        raise ConfigFileError(f"not valid YAML: {exc}", mark.line + 1 if mark else None) from None
    if not isinstance(root, yaml.MappingNode):
        raise ConfigFileError("top level must be a mapping with 'factors' and 'points'", _line(root) if root else None)
    fields = {}
    for k, v in root.value:
        fields[k.value] = v
    for key in ("factors", "points"):
        if key not in fields:
            raise ConfigFileError(f"missing key {key!r}", _line(root))
    unknown = set(fields) - {"factors", "points", "prime", "seed", "labels"}
    if unknown:
        raise ConfigFileError(f"unknown keys {sorted(unknown)}", _line(root))
    dims = [_int(n, "factor dimension") for n in _seq(fields["factors"], "factors")]
    if not dims or any(a < 1 for a in dims):
        raise ConfigFileError("factors must be a nonempty list of positive integers", _line(fields["factors"]), EXIT_INVALID)
    meta = {}
    if "prime" in fields:
        meta["prime"] = _int(fields["prime"], "prime")
    if "seed" in fields:
        meta["seed"] = yaml.safe_load(yaml.serialize(fields["seed"]))
    if "labels" in fields:
        meta["labels"] = [str(n.value) for n in _seq(fields["labels"], "labels")]
    p = prime if prime is not None else meta.get("prime")
    try:
        field = PrimeField(p)
    except ValueError as exc:
        raise ConfigFileError(str(exc), _line(fields.get("prime", root)), EXIT_INVALID) from None
    coords = []
    lines = []
    for pnode in _seq(fields["points"], "points"):
        parts = _seq(pnode, "a point")
        if len(parts) != len(dims):
            raise ConfigFileError(f"point has {len(parts)} factors, expected {len(dims)}", _line(pnode), EXIT_INVALID)
        pt = []
        for tnode, a in zip(parts, dims):
            vals = [_int(n, "coordinate") for n in _seq(tnode, "a coordinate tuple")]
            if len(vals) != a + 1:
                raise ConfigFileError(
                    f"coordinate tuple {vals} has length {len(vals)}, expected {a + 1}", _line(tnode), EXIT_INVALID
                )
            if not any(field(v) for v in vals):
                raise ConfigFileError(f"coordinate tuple {vals} is zero mod {field.p}", _line(tnode), EXIT_INVALID)
            pt.append(vals)
        coords.append(pt)
        lines.append(_line(pnode))
    if not coords:
        raise ConfigFileError("no points given", _line(fields["points"]), EXIT_INVALID)
    try:
        config = Configuration.from_coords(dims, coords, field, allow_duplicates=False)
    except DuplicatePointError as exc:
        k = int(str(exc).split()[1])
        raise ConfigFileError("point duplicates an earlier point after normalization", lines[k], EXIT_INVALID) from None
    except (InvalidPointError, ShapeError) as exc:
        raise ConfigFileError(str(exc), None, EXIT_INVALID) from None
    meta["coords"] = coords
    return config, meta


def load_config(path, prime=None):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigFileError(f"cannot read {path}: {exc.strerror}") from None
    return parse_config_text(text, prime)


def dump_config(dims, coords, prime=None, seed=None):
    doc = {"factors": list(dims)}
    if prime is not None:
        doc["prime"] = prime
    if seed is not None:
        doc["seed"] = seed
    doc["points"] = [[list(t) for t in pt] for pt in coords]
    return yaml.safe_dump(doc, default_flow_style=None, sort_keys=False)


# reports -------------------------------------------------------------------------

def fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, (tuple, list)):
        return ",".join(fmt(v) for v in value)
    return str(value)


class Report:
    def __init__(self):
        self.human = []
        self.machine = []

    def note(self, text):
        self.human.append(text)

    def put(self, key, value):
        self.machine.append((key, fmt(value)))

    def lines(self):
        return [f"# {h}" for h in self.human] + [f"{k}={v}" for k, v in self.machine]

    def emit(self, out=None):
        out = out or sys.stdout
        for line in self.lines():
            print(line, file=out)


def parse_report(lines):
    """Machine lines of a report as an ordered list of (key, value)."""
    out = []
    for line in lines:
        line = line.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        out.append((key, value))
    return out


# commands ------------------------------------------------------------------------

def _acm_oracle(args):
    from .oracle import acm_decide

    return lambda Y: acm_decide(Y, seed=getattr(args, "seed", 0) or 0).is_acm


def cmd_check(args):
    X, _ = load_config(args.file, args.prime)
    from .oracle import acm_fast_paths

    rep = Report()
    n = X.shape.n
    rep.note(f"shape {X.shape}, {len(X)} points")
    rep.put("shape", X.shape.dims)
    rep.put("points", len(X))
    for i in range(1, n + 1):
        ls = level_sets(X, i)
        rep.note(f"factor {i}: {len(ls)} level sets of sizes {[len(c) for _, c in ls.classes]}")
        rep.put(f"levels-{i}", [len(c) for _, c in ls.classes])
    star = has_star(X) if n == 2 else None
    if n == 2:
        rep.put("star", star)
    inclusion = has_inclusion(X, 1, acm=_acm_oracle(args)) if n >= 2 else None
    rep.put("inclusion", inclusion)
    if star:
        st = staircase(X)
        rep.note(f"staircase corners {list(st.corners)}")
        rep.put("corners", [f"{i}:{j}" for i, j in st.corners])
    if n == 2 and X.shape.dims[0] == 1:
        ab = ab_partition(X)
        rep.note(f"A_X has {len(ab.a_part)} points, B_X has {len(ab.b_part)} points")
        rep.put("a-points", len(ab.a_part))
        rep.put("b-points", len(ab.b_part))
        rep.put("n0", ab.n0)
        rep.put("n1", ab.n1)
        if X.shape.dims[1] >= 2 and ab.n0 >= 2:
            member, i = d_membership(ab.n0, ab.n1, X.shape.dims[1])
            rep.put("d_member", member)
            rep.put("d_witness", i)
        else:
            rep.put("d_member", None)
        if X.shape.dims[1] >= 2 and not inclusion and len(ab.levels) >= 2:
            hyp = thm47_hypotheses(X)
            rep.put("thm47-pairwise", hyp.pairwise_in_b)
            rep.put("thm47-generic", hyp.generic)
            rep.put("thm47-no-inclusion", hyp.no_inclusion)
    fast = acm_fast_paths(X, acm=_acm_oracle(args)) if n >= 2 else None
    rep.put("acm-fast-path", fast.fast_path if fast else None)
    rep.emit()
    return EXIT_OK


def cmd_ideal(args):
    from .points import config_ideal

    X, _ = load_config(args.file, args.prime)
    I = config_ideal(X)
    rep = Report()
    rep.note(f"ideal of {len(X)} points in {X.shape}")
    if args.groebner:
        gb = I.gb()
        rep.put("gb-size", len(gb))
        for g in gb:
            rep.put("gb", str(g))
    for d in args.hilbert or []:
        if len(d) != X.shape.n:
            raise ConfigFileError(f"--hilbert needs {X.shape.n} integers", code=EXIT_INVALID)
        rep.put(f"hilbert[{fmt(d)}]", hilbert_multi(I, tuple(d)))
    if args.min_gens:
        mg = min_gens(I)
        for deg, count in mg.by_degree():
            rep.put(f"min-gens[{fmt(deg)}]", count)
        rep.put("min-gens-total", mg.total())
    rep.emit()
    return EXIT_OK


def cmd_acm(args):
    from .oracle import acm_decide, acm_fast_paths

    X, meta = load_config(args.file, args.prime)
    seed = args.seed if args.seed is not None else meta.get("seed", 0)
    rep = Report()
    oracle = lambda Y: acm_decide(Y, trials=args.trials, seed=seed).is_acm
    fast = acm_fast_paths(X, acm=oracle, trust=args.trust_theorems) if X.shape.n >= 2 else None
    if fast is not None and args.trust_theorems:
        verdict = fast
    else:
        verdict = acm_decide(X, trials=args.trials, seed=seed)
        if fast is not None:
            verdict.fast_path = fast.fast_path
            if fast.decision != verdict.decision:
                rep.note(f"fast path {fast.fast_path} says {fast.decision}, the algebra says {verdict.decision}")
                rep.put("fast-path-agrees", False)
    rep.note(f"{len(X)} points in {X.shape}: {verdict.decision}")
    if not verdict.decided:
        for note in verdict.notes:
            rep.note(note)
        rep.put("acm", None)
        rep.put("certificate", "none")
        rep.put("seed", seed)
        rep.emit()
        return EXIT_UNDECIDED
    cert = verdict.certificate
    rep.put("acm", verdict.is_acm)
    rep.put("certificate", verdict.certificate_kind)
    rep.put("acm-fast-path", verdict.fast_path)
    if verdict.certificate_kind == "regular-sequence":
        for k, ell in enumerate(cert.forms, start=1):
            rep.note(f"l_{k} = {ell}")
        rep.put("witness-verified", cert.verified)
    elif verdict.certificate_kind == "monte-carlo":
        rep.note(f"Artinian lengths {cert.lengths} exceed #X = {len(X)}; confidence >= {cert.confidence:.12f}")
        rep.put("trials", cert.trials)
        rep.put("mismatch-degrees", ["/".join(str(d) for d in m) for m in cert.mismatches])
    rep.put("seed", seed)
    rep.emit()
    return EXIT_OK


def _suite_report(rep, report, key):
    rep.note(f"{report.cases} cases in {report.wall_time:.2f}s")
    for f in report.findings:
        rep.note(f)
    rep.put(key, report.suite)
    rep.put("cases", report.cases)
    rep.put("pass", report.passed)
    rep.put("fail", report.failed)
    rep.put("seed", report.seed)
    for idx, cs, detail in report.failures:
        rep.note(f"case {idx} ({cs}): {detail}")
        rep.put("failure", cs)


def cmd_verify(args):
    from .lab.suites import verify

    cases = args.cases if args.cases is not None else (1 if args.suite == "examples" else 10)
    report = verify(args.suite, cases, args.seed)
    rep = Report()
    _suite_report(rep, report, "suite")
    rep.emit()
    return EXIT_OK


def cmd_scan(args):
    from .lab.scan import scan

    report = scan(args.conjecture, args.budget, args.seed)
    rep = Report()
    _suite_report(rep, report, "suite")
    rep.put("candidates", len(report.candidates))
    rep.emit()
    return EXIT_OK


def cmd_generate(args):
    from .lab.generate import GenSpec, generate_coords
    from .oracle import acm_decide

    corners = None
    if args.corners:
        corners = tuple(tuple(int(v) for v in c.split(",")) for c in args.corners)
    spec = GenSpec(
        tuple(args.factors),
        args.pattern,
        budget=args.budget,
        seed=args.seed,
        n0=args.n0,
        n1=args.n1,
        levels=args.levels,
        intersect_allowed=args.intersect,
        corners=corners,
        prime=args.prime,
    )
    gen = generate_coords(spec, acm=lambda Y: acm_decide(Y).is_acm)
    text = dump_config(gen.dims, gen.coords, prime=args.prime, seed=args.seed)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        rep = Report()
        rep.note(f"wrote {len(gen.config)} points to {args.out}")
        rep.put("points", len(gen.config))
        rep.put("seed", args.seed)
        rep.emit()
    else:
        sys.stdout.write(text)
    return EXIT_OK


# argument parsing -------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="multiacm", description="ACM property of points in multiprojective space")
    parser.add_argument("--prime", type=int, default=None, help="prime for coefficient arithmetic (default 32003 or $MULTIACM_PRIME)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="combinatorial invariants of a configuration")
    p.add_argument("file")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ideal", help="Groebner basis, Hilbert values and minimal generators of I_X")
    p.add_argument("file")
    p.add_argument("--groebner", action="store_true")
    p.add_argument("--hilbert", type=int, nargs="+", action="append", metavar="D")
    p.add_argument("--min-gens", action="store_true")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("acm", help="decide the ACM property")
    p.add_argument("file")
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--trust-theorems", action="store_true", help="accept combinatorial verdicts without algebra")
    p.set_defaults(func=cmd_acm)

    from .lab.scan import SCANS
    from .lab.suites import SUITES

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--cases", type=int, default=None, help="number of cases (default 10; 1 for examples)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="search for conjecture counterexamples")
    p.add_argument("conjecture", choices=SCANS)
    p.add_argument("--budget", type=int, default=30)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("generate", help="write a random configuration file")
    p.add_argument("--pattern", choices=("random", "star", "inclusion", "ab"), default="random")
    p.add_argument("--factors", type=int, nargs="+", default=None)
    p.add_argument("--budget", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n0", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--levels", type=int)
    p.add_argument("--intersect", action="store_true", help="ab pattern: let A-columns meet several levels")
    p.add_argument("--corners", nargs="+", metavar="I,J", help="star pattern: explicit corner list")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "factors", "unset") is None:
        args.factors = [1, 2] if args.pattern == "ab" else [1, 1] if args.pattern == "star" else [1, 2]
    try:
        return args.func(args)
    except ConfigFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (MultiAcmError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
