"""Brute-force reference paths for cross-checking the fast code.

Everything here is deliberately naive: alpha sets by evaluating the line
form on every ordered basis pair, lambda by scanning the whole field for
roots, multiplicities by flat recounting.  The only machinery shared with
the fast paths is raw field add/mul; q-th powers are recomputed by
repeated squaring so that a bug in the Frobenius matrices or the trace
shortcuts cannot hide in both paths at once.
"""

from __future__ import annotations

from .field import FieldContext
from .geometry import Line


def _pow_q(ctx: FieldContext, x: int) -> int:
    for _ in range(ctx.k):
        x = ctx.mul(x, x)
    return x


def classify_bruteforce(ctx: FieldContext, line: Line) -> frozenset[int]:
    """Alpha set of a line from all its ordered bases, no shortcuts.

    Runs over all (q^2 - 1)(q^2 - q) ordered independent pairs in the
    span, skips pairs containing a vector with zero F_{q^n}-part, and
    collects the value of x*y^q + x^q*y + (x*y0 + x0*y)^(q+1).
    """
    mul = ctx.mul
    sub = ctx.subfield
    (x1, x01), (x2, x02) = line[0], line[1]
    vals = set()
    for s1 in sub:
        for t1 in sub:
            wx = mul(s1, x1) ^ mul(t1, x2)
            if wx == 0:
                continue
            w0 = mul(s1, x01) ^ mul(t1, x02)
            wxq = _pow_q(ctx, wx)
            for s2 in sub:
                for t2 in sub:
                    if mul(s1, t2) ^ mul(s2, t1) == 0:
                        continue
                    vx = mul(s2, x1) ^ mul(t2, x2)
                    if vx == 0:
                        continue
                    v0 = mul(s2, x01) ^ mul(t2, x02)
                    d1 = mul(wx, _pow_q(ctx, vx)) ^ mul(wxq, vx)
                    d2 = mul(wx, v0) ^ mul(w0, vx)
                    vals.add(d1 ^ mul(_pow_q(ctx, d2), d2))
    return frozenset(vals)


def lambda_bruteforce(ctx: FieldContext, u: int, alpha: int) -> list[int]:
    """All lam in F_q for which u*x^q + u^q*x + lam*u^(q+1) + alpha has a root.

    Scans every x in F_{q^n} for every lam; the closed-form claim is that
    exactly one lam survives.
    """
    if u == 0 or alpha == 0:
        raise ValueError("u and alpha must both be nonzero")
    mul = ctx.mul
    uq = _pow_q(ctx, u)
    uq1 = mul(uq, u)
    lhs = [mul(u, _pow_q(ctx, x)) ^ mul(uq, x) for x in range(ctx.size)]
    out = []
    for lam in ctx.subfield:
        target = mul(lam, uq1) ^ alpha
        for v in lhs:
            if v == target:
                out.append(lam)
                break
    return out


def packing_count_naive(p) -> dict[Line, int]:
    """Multiset count of every line across all spreads, by flat recount."""
    counts: dict[Line, int] = {}
    for s in p.spreads.values():
        for line in s.lines:
            key = tuple(sorted(line))
            counts[key] = counts.get(key, 0) + 1
    return counts
