"""Points and lines of PG(n,q) on the space V = F_{q^n} x F_q.

A vector is a pair (x, x0): x an element of F_{q^n} and x0 an element of
the embedded subfield F_q (the coefficient of the distinguished direction
w = (0, 1)).  A projective point is the canonical representative of the
F_q^x-scaling class of a nonzero vector: the pair (enc(lam*x), enc(lam*x0))
that is lexicographically smallest over lam in F_q^x.  A line is the sorted
tuple of the q+1 canonical points of a 2-dimensional F_q-subspace.

Tuples are used throughout so that points and lines hash and sort without
ceremony; every enumeration is returned in sorted order, which makes file
output and comparisons deterministic.
"""

from __future__ import annotations

import weakref

from .field import FieldContext

Vec = tuple[int, int]
Point = tuple[int, int]
Line = tuple[Point, ...]

# per-context memo tables; pure-function results only
_CACHES: "weakref.WeakKeyDictionary[FieldContext, dict]" = weakref.WeakKeyDictionary()


def _cache(ctx: FieldContext) -> dict:
    c = _CACHES.get(ctx)
    if c is None:
        c = {"canon": {}}
        _CACHES[ctx] = c
    return c


def point_count(ctx: FieldContext) -> int:
    """Number of points of PG(n,q): (q^(n+1) - 1) / (q - 1)."""
    return (ctx.q ** (ctx.n + 1) - 1) // (ctx.q - 1)


def line_count(ctx: FieldContext) -> int:
    """Number of lines of PG(n,q), the Gaussian binomial [n+1 choose 2]_q."""
    q = ctx.q
    return ((q ** (ctx.n + 1) - 1) * (q ** ctx.n - 1)) // ((q * q - 1) * (q - 1))


def spread_line_count(ctx: FieldContext) -> int:
    """Lines in a spread: points divided by q+1."""
    return (ctx.q ** (ctx.n + 1) - 1) // (ctx.q * ctx.q - 1)


def canonical_point(ctx: FieldContext, v: Vec) -> Point:
    """Canonical representative of the scaling class of a nonzero vector."""
    x, x0 = v
    if x == 0 and x0 == 0:
        raise ValueError("the zero vector does not represent a projective point")
    canon = _cache(ctx)["canon"]
    p = canon.get(v)
    if p is None:
        mul = ctx.mul
        p = min((mul(lam, x), mul(lam, x0)) for lam in ctx.subfield[1:])
        canon[v] = p
    return p


def line_through(ctx: FieldContext, p1: Vec, p2: Vec) -> Line:
    """The line spanned by two distinct points, as its sorted point tuple."""
    a1 = canonical_point(ctx, p1)
    a2 = canonical_point(ctx, p2)
    if a1 == a2:
        raise ValueError(f"coincident points {a1} do not span a line")
    mul = ctx.mul
    x1, y1 = a1
    x2, y2 = a2
    pts = [a2]
    for t in ctx.subfield:
        pts.append(canonical_point(ctx, (x1 ^ mul(t, x2), y1 ^ mul(t, y2))))
    pts.sort()
    return tuple(pts)


def enumerate_points(ctx: FieldContext) -> tuple[Point, ...]:
    """All points of PG(n,q), each exactly once, sorted."""
    cache = _cache(ctx)
    pts = cache.get("points")
    if pts is None:
        out = set()
        for u in range(ctx.size):
            out.add(canonical_point(ctx, (u, 1)))
            if u:
                out.add(canonical_point(ctx, (u, 0)))
        pts = tuple(sorted(out))
        if len(pts) != point_count(ctx):
            raise RuntimeError(
                f"enumerated {len(pts)} points, expected {point_count(ctx)}")
        cache["points"] = pts
    return pts


def enumerate_lines(ctx: FieldContext) -> tuple[Line, ...]:
    """All lines of PG(n,q), each exactly once, sorted.

    Lines are generated from their two smallest points: walking point pairs
    in sorted order, a pair that already lies on a generated line is
    skipped, so line_through runs exactly once per line.
    """
    cache = _cache(ctx)
    lines = cache.get("lines")
    if lines is None:
        points = enumerate_points(ctx)
        index = {p: i for i, p in enumerate(points)}
        npts = len(points)
        done = [0] * npts  # done[i] bit j set: pair (i, j) already on a line
        out = []
        for i in range(npts):
            for j in range(i + 1, npts):
                if (done[i] >> j) & 1:
                    continue
                l = line_through(ctx, points[i], points[j])
                out.append(l)
                idxs = [index[p] for p in l]
                for a in range(len(idxs)):
                    for b in range(a + 1, len(idxs)):
                        done[idxs[a]] |= 1 << idxs[b]
        out.sort()
        lines = tuple(out)
        if len(lines) != line_count(ctx):
            raise RuntimeError(
                f"enumerated {len(lines)} lines, expected {line_count(ctx)}")
        cache["lines"] = lines
    return lines


def enumerate_lines_naive(ctx: FieldContext) -> tuple[Line, ...]:
    """Reference enumeration: line through every point pair, deduplicated."""
    points = enumerate_points(ctx)
    out = set()
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            out.add(line_through(ctx, points[i], points[j]))
    return tuple(sorted(out))


def basis_nonzero_U(line: Line) -> tuple[Vec, Vec]:
    """First two points of the line with nonzero F_{q^n}-part.

    At most one point of any line lies in the w-direction, so two such
    points always exist, and any two distinct points span the line.
    """
    first = None
    for p in line:
        if p[0] == 0:
            continue
        if first is None:
            first = p
        else:
            return first, p
    raise ValueError(f"not a line of PG(n,q): {line!r}")
