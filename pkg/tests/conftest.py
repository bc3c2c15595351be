"""Shared fixtures and exhaustive table-check helpers.

The three supported desk-scale contexts are session fixtures so the
packings are built once.  The numpy helpers materialize full operation
tables and sweep every (a, b, c) triple; they are only usable up to
m = 9 (134 million triples) and that is exactly where they are used.
"""

import numpy as np
import pytest

from pgpack import build_packing, make_context


@pytest.fixture(scope="session")
def ctx13():
    return make_context(1, 3)


@pytest.fixture(scope="session")
def ctx15():
    return make_context(1, 5)


@pytest.fixture(scope="session")
def ctx33():
    return make_context(3, 3)


@pytest.fixture(scope="session")
def packing13(ctx13):
    return build_packing(ctx13)


@pytest.fixture(scope="session")
def packing15(ctx15):
    return build_packing(ctx15)


@pytest.fixture(scope="session")
def packing33(ctx33):
    return build_packing(ctx33)


def mul_table(ctx):
    size = ctx.size
    t = np.empty((size, size), dtype=np.uint32)
    for a in range(size):
        t[a] = [ctx.mul(a, b) for b in range(size)]
    return t


def check_field_axioms(ctx, M=None):
    """Every field axiom over every element pair and triple, via tables."""
    size = ctx.size
    if M is None:
        M = mul_table(ctx)
    idx = np.arange(size, dtype=np.uint32)
    X = np.bitwise_xor.outer(idx, idx)
    assert (X < size).all()                       # additive closure
    assert (M < size).all()                       # multiplicative closure
    assert (X == X.T).all()                       # a + b = b + a
    assert (X[0] == idx).all()                    # 0 + a = a
    assert (X.diagonal() == 0).all()              # a + a = 0
    assert (M == M.T).all()                       # a * b = b * a
    assert (M[1] == idx).all()                    # 1 * a = a
    assert (M[0] == 0).all()                      # 0 * a = 0
    inv = np.array([0] + [ctx.inv(a) for a in range(1, size)], dtype=np.uint32)
    assert (M[idx[1:], inv[1:]] == 1).all()       # a * a^-1 = 1
    for a in range(size):
        assert (X[X[a]] == X[a][X]).all()         # (a+b)+c = a+(b+c)
        assert (M[M[a]] == M[a][M]).all()         # (a*b)*c = a*(b*c)
        assert (M[a][X] == np.bitwise_xor.outer(M[a], M[a])).all()  # a*(b+c)

def check_frobenius_and_roots(ctx, M=None):
    """x -> x^q is a field automorphism and x -> x^(q+1) inverts exactly."""
    size = ctx.size
    if M is None:
        M = mul_table(ctx)
    idx = np.arange(size, dtype=np.uint32)
    F = np.array([ctx.frobenius_q(a) for a in range(size)], dtype=np.uint32)
    assert len(set(F.tolist())) == size           # bijective
    for a in range(size):
        assert (F[np.bitwise_xor(a, idx)]
                == np.bitwise_xor(F[a], F)).all()  # (a+b)^q = a^q + b^q
        assert (F[M[a]] == M[F[a]][F]).all()       # (a*b)^q = a^q * b^q
    P = np.array([ctx.pow(a, ctx.q + 1) for a in range(size)], dtype=np.uint32)
    R = np.array([ctx.qplus1_root(a) for a in range(size)], dtype=np.uint32)
    assert (P[R] == idx).all()
    assert (R[P] == idx).all()
