"""Command-line front end: build, verify, classify, orbit, oracle, selftest.

Output files are byte-deterministic: JSON with sorted keys, compact
separators and a trailing newline, written in binary mode, with every
list (spreads, lines, points) in ascending order.  Exit codes are fixed
for scripting: 0 success, 2 bad input or malformed file, 3 verification
failure, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys

from . import oracle, packing
from .field import FieldContext, make_context
from .geometry import (
    Line,
    canonical_point,
    enumerate_lines,
    enumerate_points,
    line_count,
    line_through,
    spread_line_count,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERIFY = 3
EXIT_IO = 4

FORMAT_NAME = "pgpack-packing"
FORMAT_VERSION = 1

# sampled commands draw from a fixed seed so reruns are reproducible
SAMPLE_SEED = 0


class FileFormatError(ValueError):
    """A packing file failed structural validation."""


def _fail(code: int, msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


# ---------------------------------------------------------------------------
# packing file I/O
# ---------------------------------------------------------------------------

def packing_to_obj(ctx: FieldContext, p: packing.Packing) -> dict:
    return {
        "header": {
            "format": FORMAT_NAME,
            "version": FORMAT_VERSION,
            "k": ctx.k,
            "n": ctx.n,
            "q": ctx.q,
            "m": ctx.m,
            "modulus": ctx.modulus,
        },
        "spreads": [
            {"alpha": s.alpha,
             "lines": [[[x, x0] for x, x0 in line] for line in s.lines]}
            for _, s in sorted(p.spreads.items())
        ],
    }


def serialize_packing(ctx: FieldContext, p: packing.Packing) -> bytes:
    text = json.dumps(packing_to_obj(ctx, p), sort_keys=True,
                      separators=(",", ":"))
    return (text + "\n").encode("ascii")


def _parse_point(ctx: FieldContext, sub: set, pair) -> tuple[int, int]:
    if (not isinstance(pair, list) or len(pair) != 2
            or not all(isinstance(v, int) for v in pair)):
        raise FileFormatError("each point must be a pair [x, x0] of integers")
    x, x0 = pair
    if not 0 <= x < ctx.size:
        raise FileFormatError(f"x encoding {x} out of range 0..{ctx.size - 1}")
    if x0 not in sub:
        raise FileFormatError(f"x0 encoding {x0} is not a subfield element")
    pt = (x, x0)
    if pt == (0, 0):
        raise FileFormatError("the zero vector is not a point")
    if canonical_point(ctx, pt) != pt:
        raise FileFormatError(f"point {pt} is not in canonical form")
    return pt


def _parse_line(ctx: FieldContext, sub: set, obj) -> Line:
    if not isinstance(obj, list) or len(obj) != ctx.q + 1:
        raise FileFormatError(f"a line must list exactly {ctx.q + 1} points")
    pts = [_parse_point(ctx, sub, pair) for pair in obj]
    if pts != sorted(pts):
        raise FileFormatError("points within a line must be sorted")
    line = tuple(pts)
    if len(set(line)) != len(line):
        raise FileFormatError(f"repeated point in line {line}")
    if line_through(ctx, line[0], line[1]) != line:
        raise FileFormatError(f"points do not form a line: {line}")
    return line


def read_packing(path: str) -> tuple[FieldContext, packing.Packing]:
    """Parse and structurally validate a packing file.

    Raises FileFormatError for anything malformed (including a modulus
    header that does not match the derived field) and OSError for I/O
    trouble.  Verification proper is left to the caller: a structurally
    valid file may still fail coverage or multiplicity checks.
    """
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise FileFormatError("top level must be an object")
    header = obj.get("header")
    spreads_obj = obj.get("spreads")
    if not isinstance(header, dict) or not isinstance(spreads_obj, list):
        raise FileFormatError("expected a 'header' object and a 'spreads' list")
    if (header.get("format") != FORMAT_NAME
            or header.get("version") != FORMAT_VERSION):
        raise FileFormatError("unknown format name or version in header")
    k, n = header.get("k"), header.get("n")
    if not isinstance(k, int) or not isinstance(n, int):
        raise FileFormatError("header fields k and n must be integers")
    try:
        ctx = make_context(k, n)
    except ValueError as exc:
        raise FileFormatError(str(exc)) from None
    for key, want in (("q", ctx.q), ("m", ctx.m), ("modulus", ctx.modulus)):
        if header.get(key) != want:
            raise FileFormatError(
                f"header {key}={header.get(key)} does not match derived {want}")
    sub = set(ctx.subfield)
    built: dict[int, packing.Spread] = {}
    prev = 0
    for entry in spreads_obj:
        if not isinstance(entry, dict):
            raise FileFormatError("each spread must be an object")
        alpha = entry.get("alpha")
        lines_obj = entry.get("lines")
        if not isinstance(alpha, int) or alpha < 1:
            raise FileFormatError("spread alpha must be a positive integer")
        if alpha <= prev:
            raise FileFormatError("spread alphas must be strictly increasing")
        prev = alpha
        if not isinstance(lines_obj, list):
            raise FileFormatError(f"spread {alpha} must carry a 'lines' list")
        lines = [_parse_line(ctx, sub, lo) for lo in lines_obj]
        if lines != sorted(lines):
            raise FileFormatError(f"lines of spread {alpha} are not sorted")
        built[alpha] = packing.Spread(alpha=alpha, lines=tuple(lines))
    if not built:
        raise FileFormatError("file contains no spreads")
    return ctx, packing.Packing(spreads=built)


def write_json(ctx: FieldContext, p: packing.Packing, path: str) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize_packing(ctx, p))


def write_csv(ctx: FieldContext, p: packing.Packing, path: str) -> None:
    """Flat export: one row per (spread, line) incidence."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        head = ["alpha", "line_index"]
        for i in range(1, ctx.q + 2):
            head += [f"x{i}", f"x0{i}"]
        w.writerow(head)
        for alpha, s in sorted(p.spreads.items()):
            for idx, line in enumerate(s.lines):
                row = [alpha, idx]
                for x, x0 in line:
                    row += [x, x0]
                w.writerow(row)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _print_violations(report: packing.VerificationReport, limit: int = 5) -> None:
    for kind, detail in report.violations[:limit]:
        print(f"  {kind}: {detail}")
    extra = len(report.violations) - limit
    if extra > 0:
        print(f"  ... {extra} more violations")


def cmd_build(args: argparse.Namespace) -> int:
    try:
        ctx = make_context(args.k, args.n)
    except ValueError as exc:
        return _fail(EXIT_INPUT, str(exc))
    try:
        p = packing.build_packing(ctx)
    except packing.ConstructionError as exc:
        return _fail(EXIT_VERIFY, str(exc))
    for _, s in sorted(p.spreads.items()):
        report = packing.verify_spread(ctx, s)
        if not report.passed:
            print(f"spread B_{s.alpha} failed point-coverage verification")
            _print_violations(report)
            return EXIT_VERIFY
    lines = enumerate_lines(ctx)
    report = packing.verify_packing(ctx, lines, p, ctx.q - 1)
    if not report.passed:
        print(f"packing failed the {ctx.q - 1}-fold multiplicity verification")
        _print_violations(report)
        return EXIT_VERIFY
    try:
        if args.format == "json":
            write_json(ctx, p, args.output)
        else:
            write_csv(ctx, p, args.output)
    except OSError as exc:
        return _fail(EXIT_IO, f"cannot write {args.output}: {exc}")
    print(f"built {len(p.spreads)} spreads of {spread_line_count(ctx)} lines "
          f"for k={ctx.k} n={ctx.n} (q={ctx.q})")
    t = ctx.q - 1
    print(f"verified: every point once per spread, every one of {len(lines)} "
          f"lines in exactly {t} spread" + ("s" if t != 1 else ""))
    print(f"wrote {args.output} ({args.format})")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        ctx, p = read_packing(args.input)
    except FileFormatError as exc:
        return _fail(EXIT_INPUT, f"malformed packing file: {exc}")
    except OSError as exc:
        return _fail(EXIT_IO, f"cannot read {args.input}: {exc}")
    print(f"packing: k={ctx.k} n={ctx.n} q={ctx.q} spreads={len(p.spreads)}")
    ok = True
    for _, s in sorted(p.spreads.items()):
        report = packing.verify_spread(ctx, s)
        if not report.passed:
            ok = False
            print(f"spread B_{s.alpha}: FAILED")
            _print_violations(report)
    if ok:
        print(f"spreads verified: {len(p.spreads)} ok")
    t = args.t if args.t is not None else packing.infer_multiplicity(p)
    lines = enumerate_lines(ctx)
    report = packing.verify_packing(ctx, lines, p, t)
    if report.passed:
        print(f"multiplicity: t={t} exact over {len(lines)} lines")
    else:
        ok = False
        print(f"multiplicity: t={t} FAILED")
        _print_violations(report)
    if not ok:
        return EXIT_VERIFY
    print("ok")
    return EXIT_OK


def _parse_line_spec(ctx: FieldContext, spec: str) -> tuple:
    halves = spec.split(";")
    if len(halves) != 2:
        raise ValueError("line spec must look like 'x1,x01;x2,x02'")
    pts = []
    sub = set(ctx.subfield)
    for half in halves:
        nums = half.split(",")
        if len(nums) != 2:
            raise ValueError(f"bad point spec {half!r}: expected 'x,x0'")
        try:
            x, x0 = int(nums[0]), int(nums[1])
        except ValueError:
            raise ValueError(f"bad point spec {half!r}: not integers") from None
        if not 0 <= x < ctx.size:
            raise ValueError(f"x encoding {x} out of range 0..{ctx.size - 1}")
        if x0 not in sub:
            raise ValueError(f"x0 encoding {x0} is not a subfield element")
        if (x, x0) == (0, 0):
            raise ValueError("the zero vector is not a point")
        pts.append((x, x0))
    return pts[0], pts[1]


def cmd_classify(args: argparse.Namespace) -> int:
    try:
        ctx = make_context(args.k, args.n)
        p1, p2 = _parse_line_spec(ctx, args.line)
    except ValueError as exc:
        return _fail(EXIT_INPUT, str(exc))
    if canonical_point(ctx, p1) == canonical_point(ctx, p2):
        return _fail(EXIT_INPUT, f"dependent points {p1} and {p2}")
    line = line_through(ctx, p1, p2)
    alphas = sorted(packing.alpha_set(ctx, line))
    print("line: " + " ".join(f"({x},{x0})" for x, x0 in line))
    print("alpha set: {" + ", ".join(str(a) for a in alphas) + "}")
    print("spreads containing it: " + " ".join(f"B_{a}" for a in alphas))
    return EXIT_OK


def cmd_orbit(args: argparse.Namespace) -> int:
    try:
        ctx = make_context(args.k, args.n)
    except ValueError as exc:
        return _fail(EXIT_INPUT, str(exc))
    beta = args.beta
    if not 0 < beta < ctx.size:
        return _fail(EXIT_INPUT,
                     f"beta must be a nonzero field element, got {beta}")
    gamma = ctx.mul(ctx.frobenius_q(beta), beta)
    try:
        p = packing.build_packing(ctx)
    except packing.ConstructionError as exc:
        return _fail(EXIT_VERIFY, str(exc))
    mismatches = []
    for alpha, s in sorted(p.spreads.items()):
        target = ctx.mul(alpha, gamma)
        image = tuple(sorted(packing.apply_beta(ctx, l, beta) for l in s.lines))
        if image != p.spreads[target].lines:
            mismatches.append((alpha, target))
    order, g = 1, gamma
    while g != 1:
        g = ctx.mul(g, gamma)
        order += 1
    print(f"beta={beta}  gamma=beta^(q+1)={gamma}")
    if len(p.spreads) <= 31:
        for alpha in sorted(p.spreads):
            print(f"  B_{alpha} -> B_{ctx.mul(alpha, gamma)}")
    if mismatches:
        alpha, target = mismatches[0]
        print(f"action FAILED: image of B_{alpha} is not B_{target}")
        return EXIT_VERIFY
    print(f"action verified: B_alpha -> B_(alpha*{gamma}) "
          f"for all {len(p.spreads)} spreads")
    print(f"orbit of B_1 under repeated beta-action: size {order}")
    return EXIT_OK


def _sample_lines(ctx: FieldContext, count: int,
                  rng: random.Random) -> list[Line]:
    pts = enumerate_points(ctx)
    seen = set()
    out = []
    while len(out) < count:
        p1, p2 = rng.sample(pts, 2)
        line = line_through(ctx, p1, p2)
        if line not in seen:
            seen.add(line)
            out.append(line)
    return out


def cmd_oracle(args: argparse.Namespace) -> int:
    try:
        ctx = make_context(args.k, args.n)
    except ValueError as exc:
        return _fail(EXIT_INPUT, str(exc))
    if args.sample < 1:
        return _fail(EXIT_INPUT, "--sample must be at least 1")
    rng = random.Random(SAMPLE_SEED)
    if line_count(ctx) <= 1000:
        lines = list(enumerate_lines(ctx))
        scope = f"all {len(lines)}"
    else:
        lines = _sample_lines(ctx, args.sample, rng)
        scope = f"{len(lines)} sampled"
    for line in lines:
        fast = packing.alpha_set(ctx, line)
        slow = oracle.classify_bruteforce(ctx, line)
        if fast != slow:
            print(f"disagreement on line {line}:")
            print(f"  fast alpha set  {sorted(fast)}")
            print(f"  brute force     {sorted(slow)}")
            return EXIT_VERIFY
    if ctx.size <= 64:
        pairs = [(u, a) for u in range(1, ctx.size)
                 for a in range(1, ctx.size)]
        lscope = f"all {len(pairs)}"
    else:
        pairs = [(rng.randrange(1, ctx.size), rng.randrange(1, ctx.size))
                 for _ in range(args.sample)]
        lscope = f"{len(pairs)} sampled"
    for u, a in pairs:
        slow = oracle.lambda_bruteforce(ctx, u, a)
        fast = [packing.unique_lambda(ctx, u, a)]
        if slow != fast:
            print(f"disagreement on lambda for u={u} alpha={a}: "
                  f"brute force {slow}, closed form {fast}")
            return EXIT_VERIFY
    print(f"oracle agreement: alpha sets on {scope} lines, "
          f"lambda on {lscope} (u, alpha) pairs")
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    failures = 0
    total = 0

    def run(name, fn):
        nonlocal failures, total
        total += 1
        try:
            detail = fn()
            print(f"PASS {name}" + (f" ({detail})" if detail else ""))
        except Exception as exc:
            failures += 1
            print(f"FAIL {name}: {exc}")

    def check(cond, msg):
        if not cond:
            raise AssertionError(msg)

    ctxs: dict[tuple[int, int], FieldContext] = {}

    def get_ctx(k, n):
        if (k, n) not in ctxs:
            ctxs[(k, n)] = make_context(k, n)
        return ctxs[(k, n)]

    def t_field():
        for k, n in ((1, 3), (1, 5), (3, 3)):
            get_ctx(k, n)
        return "construction self-checks for (1,3) (1,5) (3,3)"

    def t_partition():
        ctx = get_ctx(1, 3)
        p = packing.build_packing(ctx)
        for s in p.spreads.values():
            check(packing.verify_spread(ctx, s).passed,
                  f"B_{s.alpha} is not a spread")
        check(packing.verify_packing(ctx, enumerate_lines(ctx), p, 1).passed,
              "not a 1-fold packing")
        counts = oracle.packing_count_naive(p)
        check(all(c == 1 for c in counts.values()), "recount found a repeat")
        return "7 spreads partition the 35 lines"

    def t_transitive():
        ctx = get_ctx(1, 3)
        p = packing.build_packing(ctx)
        check(packing.verify_transitivity(ctx, p).passed,
              "multiplicative action not transitive")
        return "orbit of B_1 covers all 7 spreads"

    def t_classify():
        ctx = get_ctx(1, 3)
        for line in enumerate_lines(ctx):
            check(packing.alpha_set(ctx, line)
                  == oracle.classify_bruteforce(ctx, line),
                  f"alpha set mismatch on {line}")
        return "alpha sets agree with brute force on all 35 lines"

    def t_lambda():
        ctx = get_ctx(1, 3)
        for u in range(1, ctx.size):
            for a in range(1, ctx.size):
                check(oracle.lambda_bruteforce(ctx, u, a)
                      == [packing.unique_lambda(ctx, u, a)],
                      f"lambda mismatch at u={u} alpha={a}")
        return "unique lambda confirmed on all 49 pairs"

    def t_bigger():
        ctx = get_ctx(1, 5)
        p = packing.build_packing(ctx)
        for s in p.spreads.values():
            check(packing.verify_spread(ctx, s).passed,
                  f"B_{s.alpha} is not a spread")
        check(packing.verify_packing(ctx, enumerate_lines(ctx), p, 1).passed,
              "not a 1-fold packing")
        return "31 spreads partition the 651 lines"

    def t_q8():
        ctx = get_ctx(3, 3)
        s = packing.build_spread(ctx, 1)
        check(packing.verify_spread(ctx, s).passed, "B_1 is not a spread")
        return "B_1 of PG(3,8) covers all 585 points once"

    run("field contexts", t_field)
    run("spread partition q=2 n=3", t_partition)
    run("transitive action q=2 n=3", t_transitive)
    run("alpha sets vs brute force", t_classify)
    run("lambda closed form vs scan", t_lambda)
    run("spread partition q=2 n=5", t_bigger)
    run("single spread q=8 n=3", t_q8)

    print(f"selftest: {total - failures} of {total} checks passed")
    return EXIT_OK if failures == 0 else EXIT_VERIFY


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_kn(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("-k", type=int, required=True,
                     help="field exponent: q = 2^k, k odd")
    sub.add_argument("-n", type=int, required=True,
                     help="projective dimension, odd and at least 3")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pgpack",
        description="Transitive multifold line packings of PG(n, 2^k).")
    cmds = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    b = cmds.add_parser("build",
                        help="construct, verify and write a full packing")
    _add_kn(b)
    b.add_argument("-o", "--output", required=True, help="output file path")
    b.add_argument("--format", choices=("json", "csv"), default="json",
                   help="output format (default json)")
    b.set_defaults(func=cmd_build)

    v = cmds.add_parser("verify", help="re-verify a packing file from scratch")
    v.add_argument("-i", "--input", required=True, help="packing file path")
    v.add_argument("--t", type=int, default=None,
                   help="expected line multiplicity; inferred when omitted")
    v.set_defaults(func=cmd_verify)

    c = cmds.add_parser("classify",
                        help="alpha set of the line through two points")
    _add_kn(c)
    c.add_argument("--line", required=True, metavar="SPEC",
                   help="two points as 'x1,x01;x2,x02' in integer encoding")
    c.set_defaults(func=cmd_classify)

    o = cmds.add_parser("orbit",
                        help="check how multiplication by beta permutes the spreads")
    _add_kn(o)
    o.add_argument("--beta", type=int, required=True,
                   help="nonzero field element acting by (x, x0) -> (beta*x, x0)")
    o.set_defaults(func=cmd_orbit)

    r = cmds.add_parser("oracle",
                        help="compare fast paths against brute-force references")
    _add_kn(r)
    r.add_argument("--sample", type=int, default=100,
                   help="sample size for large geometries (default 100)")
    r.set_defaults(func=cmd_oracle)

    s = cmds.add_parser("selftest", help="run the built-in check battery")
    s.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
