"""Spreads B_alpha and the (q-1)-fold packing of PG(n,q), q = 2^k.

A line with basis x + x0*w, y + y0*w (both with nonzero F_{q^n}-part) is
assigned the value

    x*y^q + x^q*y + (x*y0 + x0*y)^(q+1).

The value is never 0, is unchanged under determinant-1 changes of basis,
and under basis scalings sweeps out a set of exactly q-1 nonzero values:
the alpha set of the line.  B_alpha is the set of lines whose alpha set
contains alpha; it is a spread (every point lies on exactly one member
line), and the family of all B_alpha for nonzero alpha is a (q-1)-fold
packing: every line of PG(n,q) lies in exactly q-1 of the spreads.  The
multiplicative group of F_{q^n}, acting by (x, x0) -> (beta*x, x0), sends
B_alpha to B_{alpha*beta^(q+1)} and so permutes the spreads transitively.

Spreads are built constructively, one closed-form line per uncovered
point; alpha sets give an independent membership test and the verify_*
functions recount everything from scratch.  Any failure inside a builder
would contradict a verified property of the construction and is raised as
ConstructionError, never silently absorbed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .field import FieldContext
from .geometry import (
    Line,
    Vec,
    basis_nonzero_U,
    canonical_point,
    enumerate_points,
    line_through,
    point_count,
    spread_line_count,
)


class ConstructionError(RuntimeError):
    """A construction step contradicted a property the builder relies on."""


@dataclass(frozen=True)
class Spread:
    """The spread B_alpha: lines partitioning the point set, sorted."""
    alpha: int
    lines: tuple[Line, ...]


@dataclass(frozen=True)
class Packing:
    """Spreads keyed by alpha, in increasing encoding order."""
    spreads: dict[int, Spread]


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a verifier: passed iff violations is empty."""
    passed: bool
    violations: tuple[tuple[str, object], ...]


def _report(violations: list) -> VerificationReport:
    return VerificationReport(passed=not violations, violations=tuple(violations))


# ---------------------------------------------------------------------------
# the line form and alpha sets
# ---------------------------------------------------------------------------

def _form_parts(ctx: FieldContext, v1: Vec, v2: Vec) -> tuple[int, int]:
    x, x0 = v1
    y, y0 = v2
    mul = ctx.mul
    d1 = mul(x, ctx.frobenius_q(y)) ^ mul(ctx.frobenius_q(x), y)
    d2 = mul(x, y0) ^ mul(x0, y)
    return d1, d2


def eval_form(ctx: FieldContext, v1: Vec, v2: Vec) -> int:
    """Value of the line form on a basis pair; always nonzero.

    Both vectors must have nonzero F_{q^n}-part and be F_q-independent.
    """
    if v1[0] == 0 or v2[0] == 0:
        raise ValueError("basis vectors must have nonzero F_{q^n}-part")
    if canonical_point(ctx, v1) == canonical_point(ctx, v2):
        raise ValueError(f"dependent vectors {v1}, {v2}")
    d1, d2 = _form_parts(ctx, v1, v2)
    val = d1 ^ ctx.mul(ctx.frobenius_q(d2), d2)  # d2^(q+1)
    if val == 0:
        raise ConstructionError(
            f"line form vanished on basis {v1}, {v2}; "
            "contradicts the nonzero-value property")
    return val


def alpha_set(ctx: FieldContext, line: Line) -> frozenset[int]:
    """The q-1 values the form takes over all bases of the line.

    Computed from one basis: a determinant-1 change of basis fixes the
    value, and scaling one basis vector by lam multiplies the two parts by
    lam and lam^2, so the diagonal orbit {lam*d1 + lam^2*d2^(q+1)}
    already sweeps every basis value.
    """
    v1, v2 = basis_nonzero_U(line)
    d1, d2 = _form_parts(ctx, v1, v2)
    t = ctx.mul(ctx.frobenius_q(d2), d2)
    mul = ctx.mul
    vals = frozenset(mul(lam, d1) ^ mul(mul(lam, lam), t)
                     for lam in ctx.subfield[1:])
    if len(vals) != ctx.q - 1 or 0 in vals:
        raise ConstructionError(
            f"alpha set of {line!r} is {sorted(vals)}; "
            "contradicts the q-1 multiplicity property")
    return vals


# ---------------------------------------------------------------------------
# closed-form line builders
# ---------------------------------------------------------------------------

def unique_lambda(ctx: FieldContext, u: int, alpha: int) -> int:
    """The unique lam in F_q making u*x^q + u^q*x + lam*u^(q+1) + alpha solvable.

    Dividing through by u^(q+1) reduces the question to whether
    lam + alpha*u^-(q+1) lies in the image of x -> x^q + x, i.e. has zero
    relative trace; since n is odd the trace of lam is lam itself, which
    pins lam = rel_trace(alpha*u^-(q+1)).
    """
    if u == 0 or alpha == 0:
        raise ValueError("u and alpha must both be nonzero")
    uq1 = ctx.mul(ctx.frobenius_q(u), u)
    return ctx.rel_trace(ctx.mul(alpha, ctx.inv(uq1)))


def line_through_U_point(ctx: FieldContext, u: int, alpha: int) -> Line:
    """The unique member of B_alpha through the point (u, 0), u nonzero."""
    lam = unique_lambda(ctx, u, alpha)
    y0 = ctx.subfield_sqrt(lam)
    uq1 = ctx.mul(ctx.frobenius_q(u), u)
    sols = ctx.solve_semilinear(u, alpha ^ ctx.mul(uq1, lam))
    if not sols:
        raise ConstructionError(
            f"no line of B_{alpha} through ({u}, 0): the semilinear solve came "
            "back empty; contradicts unique coverage of F_{q^n}-points")
    # any solution works: they differ by F_q * u, which lies on the line
    return line_through(ctx, (u, 0), (sols[0], y0))


def line_through_affine_point(ctx: FieldContext, u: int, alpha: int) -> Line:
    """The unique member of B_alpha through the point (u, 1); u may be 0."""
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    uq1 = ctx.mul(ctx.frobenius_q(u), u)
    y = ctx.qplus1_root(uq1 ^ alpha) ^ u
    if y == 0:
        raise ConstructionError(
            f"degenerate partner for ({u}, 1) in B_{alpha}; "
            "contradicts unique coverage of affine points")
    return line_through(ctx, (u, 1), (y, 0))


# ---------------------------------------------------------------------------
# spreads and the packing
# ---------------------------------------------------------------------------

def build_spread(ctx: FieldContext, alpha: int) -> Spread:
    """Construct B_alpha by covering every point with its closed-form line."""
    if not 0 < alpha < ctx.size:
        raise ValueError(f"alpha must be a nonzero field element, got {alpha}")
    covered: set = set()
    lines: list[Line] = []

    def take(line: Line) -> None:
        for p in line:
            if p in covered:
                raise ConstructionError(
                    f"point {p} covered twice while building B_{alpha}; "
                    "contradicts unique line coverage")
            covered.add(p)
        lines.append(line)

    for u in range(ctx.size):
        if canonical_point(ctx, (u, 1)) not in covered:
            take(line_through_affine_point(ctx, u, alpha))
    for u in range(1, ctx.size):
        if canonical_point(ctx, (u, 0)) not in covered:
            take(line_through_U_point(ctx, u, alpha))

    if len(covered) != point_count(ctx) or len(lines) != spread_line_count(ctx):
        raise ConstructionError(
            f"B_{alpha} closed with {len(lines)} lines covering {len(covered)} "
            f"points; expected {spread_line_count(ctx)} and {point_count(ctx)}")
    lines.sort()
    return Spread(alpha=alpha, lines=tuple(lines))


def build_packing(ctx: FieldContext) -> Packing:
    """All q^n - 1 spreads B_alpha, keyed and ordered by enc(alpha)."""
    return Packing(spreads={a: build_spread(ctx, a) for a in range(1, ctx.size)})


def apply_beta(ctx: FieldContext, line: Line, beta: int) -> Line:
    """Image of a line under (x, x0) -> (beta*x, x0), re-canonicalized."""
    if beta == 0:
        raise ValueError("beta must be nonzero")
    mul = ctx.mul
    return tuple(sorted(canonical_point(ctx, (mul(beta, x), x0))
                        for x, x0 in line))


# ---------------------------------------------------------------------------
# verifiers (recount everything, report witnesses, never raise)
# ---------------------------------------------------------------------------

def verify_spread(ctx: FieldContext, s: Spread) -> VerificationReport:
    """Check that the lines of s cover every point exactly once."""
    violations: list = []
    counts: Counter = Counter()
    for line in s.lines:
        counts.update(line)
    universe = enumerate_points(ctx)
    for p in universe:
        c = counts.get(p, 0)
        if c != 1:
            violations.append(("point-coverage", (s.alpha, p, c)))
    alien = set(counts) - set(universe)
    for p in sorted(alien):
        violations.append(("unknown-point", (s.alpha, p)))
    if len(s.lines) != spread_line_count(ctx):
        violations.append(
            ("line-count", (s.alpha, len(s.lines), spread_line_count(ctx))))
    if len(set(s.lines)) != len(s.lines):
        dup = sorted(l for l, c in Counter(s.lines).items() if c > 1)
        violations.append(("duplicate-line", (s.alpha, dup)))
    return _report(violations)


def multiplicities(p: Packing) -> Counter:
    """How often each line occurs across the spreads of p."""
    counts: Counter = Counter()
    for s in p.spreads.values():
        counts.update(s.lines)
    return counts


def infer_multiplicity(p: Packing) -> int:
    """Most common line multiplicity in p (smallest on a tie); 0 if empty."""
    counts = multiplicities(p)
    if not counts:
        return 0
    freq = Counter(counts.values())
    best = max(freq.values())
    return min(t for t, f in freq.items() if f == best)


def verify_packing(ctx: FieldContext, lines: tuple[Line, ...], p: Packing,
                   t: int) -> VerificationReport:
    """Check that every line in `lines` occurs in exactly t spreads of p."""
    violations: list = []
    counts = multiplicities(p)
    universe = set(lines)
    for line in lines:
        c = counts.get(line, 0)
        if c != t:
            violations.append(("line-multiplicity", (line, c, t)))
    for line in sorted(set(counts) - universe):
        violations.append(("unknown-line", line))
    return _report(violations)


def verify_transitivity(ctx: FieldContext, p: Packing) -> VerificationReport:
    """Check the multiplicative action is transitive on the spreads of p.

    For every nonzero beta the image of B_1 must equal B_{beta^(q+1)} as a
    line set, and beta -> beta^(q+1) must reach every spread index.
    """
    violations: list = []
    base = p.spreads.get(1)
    if base is None:
        return _report([("missing-spread", 1)])
    base_lines = base.lines
    reached = set()
    for beta in range(1, ctx.size):
        gamma = ctx.mul(ctx.frobenius_q(beta), beta)
        reached.add(gamma)
        target = p.spreads.get(gamma)
        if target is None:
            violations.append(("missing-spread", gamma))
            continue
        image = sorted(apply_beta(ctx, l, beta) for l in base_lines)
        if image != sorted(target.lines):
            violations.append(("orbit-mismatch", (beta, gamma)))
    missing = set(range(1, ctx.size)) - reached
    if missing:
        violations.append(("orbit-not-full", tuple(sorted(missing))))
    return _report(violations)
