"""Exact arithmetic in F_{2^m} with an embedded copy of F_q, q = 2^k, m = k*n.

An element of F_{2^m} is an m-bit integer: bit i is the coefficient of z^i
in the polynomial basis F_2[z] / (modulus).  The modulus is always the
irreducible degree-m polynomial with the smallest integer encoding, so the
encoding of every element is reproducible across runs and machines.

The subfield F_q is not a separate tower field: it is the set of the 2^k
elements fixed by the q-power Frobenius x -> x^q, computed once by linear
algebra over F_2 and kept as a sorted tuple.  The construction requires k
and n odd with n >= 3; this forces m odd (so the absolute trace of 1 is 1)
and gcd(q+1, q^n - 1) = 1 (so (q+1)-st roots are unique).  Both facts are
checked when a context is built and several operations rely on them.
"""

from __future__ import annotations

from math import gcd

# exp/log tables are built when the field has at most this many elements
_TABLE_LIMIT = 1 << 16


# ---------------------------------------------------------------------------
# polynomial arithmetic over F_2, on plain integers
# ---------------------------------------------------------------------------

def _pdeg(p: int) -> int:
    return p.bit_length() - 1


def _pmulmod(a: int, b: int, mod: int) -> int:
    """Carry-less product of a and b, reduced mod the given polynomial."""
    m = _pdeg(mod)
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
    while r.bit_length() - 1 >= m:
        r ^= mod << (r.bit_length() - 1 - m)
    return r


def _pmod(a: int, mod: int) -> int:
    d = _pdeg(mod)
    while a.bit_length() - 1 >= d:
        a ^= mod << (a.bit_length() - 1 - d)
    return a


def _pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _pmod(a, b)
    return a


def _is_irreducible(f: int) -> bool:
    """Irreducibility of f over F_2 via gcd(x^(2^i) - x, f) for i <= deg/2.

    x^(2^i) - x is the product of all irreducibles of degree dividing i, so
    f of degree d is irreducible iff all these gcds are trivial for
    i = 1 .. d//2.
    """
    d = _pdeg(f)
    if d < 1 or not f & 1:  # constant, or divisible by x
        return False
    t = 2  # x
    for _ in range(d // 2):
        t = _pmulmod(t, t, f)  # t = x^(2^i) mod f
        if _pgcd(t ^ 2, f) != 1:
            return False
    return True


def _smallest_irreducible(m: int) -> int:
    # constant term must be 1, so only odd encodings can qualify
    for enc in range((1 << m) + 1, 1 << (m + 1), 2):
        if _is_irreducible(enc):
            return enc
    raise RuntimeError(f"no irreducible polynomial of degree {m} found")


# ---------------------------------------------------------------------------
# linear algebra over F_2 (columns and vectors are bit-packed integers)
# ---------------------------------------------------------------------------

def _solve_affine_f2(cols: list[int], rhs: int, nrows: int):
    """Solve sum_i y_i * cols[i] = rhs over F_2.

    Returns (particular_solution, kernel_basis) with solutions encoded as
    bit vectors over the column index, or None if the system is
    inconsistent.
    """
    ncols = len(cols)
    rows = []
    for r in range(nrows):
        mask = 0
        for i in range(ncols):
            if (cols[i] >> r) & 1:
                mask |= 1 << i
        if (rhs >> r) & 1:
            mask |= 1 << ncols
        rows.append(mask)

    pivots: list[int] = []
    rank = 0
    for col in range(ncols):
        sel = -1
        for r in range(rank, nrows):
            if (rows[r] >> col) & 1:
                sel = r
                break
        if sel < 0:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        for r in range(nrows):
            if r != rank and (rows[r] >> col) & 1:
                rows[r] ^= rows[rank]
        pivots.append(col)
        rank += 1

    if any(rows[r] for r in range(rank, nrows)):  # leftover 0 = 1 row
        return None

    particular = 0
    for r, col in enumerate(pivots):
        if (rows[r] >> ncols) & 1:
            particular |= 1 << col
    pivot_set = set(pivots)
    kernel = []
    for col in range(ncols):
        if col in pivot_set:
            continue
        v = 1 << col
        for r, pcol in enumerate(pivots):
            if (rows[r] >> col) & 1:
                v |= 1 << pcol
        kernel.append(v)
    return particular, kernel


# ---------------------------------------------------------------------------
# the field context
# ---------------------------------------------------------------------------

class FieldContext:
    """Immutable description of F_{2^m} with its embedded F_q, m = k*n.

    Attributes:
      k, n      the two odd construction parameters (q = 2^k, n >= 3)
      q, m      2^k and k*n
      size      2^m, the number of field elements
      order     2^m - 1, the order of the multiplicative group
      modulus   encoding of the reduction polynomial (smallest irreducible)
      subfield  the q elements fixed by x -> x^q, sorted ascending
      generator a multiplicative generator, or None when the field is too
                large for exp/log tables

    All methods are pure functions of (context, arguments); a context never
    mutates after construction and can be shared freely between workers.
    """

    def __init__(self, k: int, n: int):
        if k < 1 or k % 2 == 0:
            raise ValueError(f"k must be a positive odd integer, got {k}")
        if n % 2 == 0:
            raise ValueError(f"n must be odd, got {n}")
        if n < 3:
            raise ValueError(f"n must be at least 3, got {n}")

        self.k = k
        self.n = n
        self.q = 1 << k
        self.m = k * n
        self.size = 1 << self.m
        self.order = self.size - 1
        self.modulus = _smallest_irreducible(self.m)

        if gcd(self.q + 1, self.order) != 1:
            raise RuntimeError(
                f"gcd(q+1, q^n-1) != 1 for k={k}, n={n}; construction hypothesis broken")
        self._qp1_exp = pow(self.q + 1, -1, self.order)

        self._exp: list[int] | None = None
        self._log: list[int | None] | None = None
        self.generator: int | None = None
        if self.size <= _TABLE_LIMIT:
            self._build_tables()

        # columns of the x -> x^q matrix: images of the basis vectors z^i,
        # each obtained by k squarings
        cols = []
        for i in range(self.m):
            v = 1 << i
            for _ in range(k):
                v = _pmulmod(v, v, self.modulus)
            cols.append(v)
        self._frob_cols = tuple(cols)

        self.subfield = self._compute_subfield()
        self._self_check()

    def __repr__(self) -> str:
        return (f"FieldContext(k={self.k}, n={self.n}, q={self.q}, "
                f"m={self.m}, modulus={self.modulus})")

    # -- construction helpers ------------------------------------------------

    def _build_tables(self) -> None:
        g = 2
        while True:
            exp = [0] * self.order
            log: list[int | None] = [None] * self.size
            a = 1
            period = 0
            for i in range(self.order):
                if a == 1 and i > 0:
                    break
                exp[i] = a
                log[a] = i
                a = _pmulmod(a, g, self.modulus)
                period += 1
            if period == self.order and a == 1:
                self._exp = exp
                self._log = log
                self.generator = g
                return
            g += 1

    def _compute_subfield(self) -> tuple[int, ...]:
        # kernel of (frobenius_q - identity) as an F_2-linear map
        cols = [self._frob_cols[i] ^ (1 << i) for i in range(self.m)]
        solved = _solve_affine_f2(cols, 0, self.m)
        if solved is None:
            raise RuntimeError("homogeneous system reported inconsistent")
        _, kernel = solved
        if len(kernel) != self.k:
            raise RuntimeError(
                f"fixed field of x -> x^q has dimension {len(kernel)}, expected {self.k}")
        elems = set()
        for bits in range(1 << len(kernel)):
            s = 0
            for i, b in enumerate(kernel):
                if (bits >> i) & 1:
                    s ^= b
            elems.add(s)
        return tuple(sorted(elems))

    def _self_check(self) -> None:
        if len(self.subfield) != self.q:
            raise RuntimeError(
                f"subfield has {len(self.subfield)} elements, expected {self.q}")
        for s in self.subfield:
            if self.frobenius_q(s) != s:
                raise RuntimeError(f"subfield element {s} not fixed by x -> x^q")
        if self.abs_trace(1) != 1:
            raise RuntimeError(
                "absolute trace of 1 is 0; k*n must be odd for the construction")
        # the matrix and the repeated-squaring Frobenius must agree
        if self.size <= 4096:
            sample = range(self.size)
        else:
            step = self.size // 512
            sample = list(range(0, self.size, step)) + [1 << i for i in range(self.m)]
        for a in sample:
            if self.frobenius_q(a) != self._frobenius_by_squaring(a):
                raise RuntimeError(f"Frobenius paths disagree at element {a}")

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        """Characteristic-2 sum: bitwise XOR."""
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            s = self._log[a] + self._log[b]
            if s >= self.order:
                s -= self.order
            return self._exp[s]
        return _pmulmod(a, b, self.modulus)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 has no negative powers")
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % self.order]
        e %= self.order
        r = 1
        base = a
        while e:
            if e & 1:
                r = _pmulmod(r, base, self.modulus)
            base = _pmulmod(base, base, self.modulus)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 is not invertible")
        if self._exp is not None:
            return self._exp[(-self._log[a]) % self.order]
        return self.pow(a, self.order - 1)

    def frobenius_q(self, a: int) -> int:
        """a^q via the precomputed bit matrix for x -> x^q."""
        r = 0
        i = 0
        while a:
            if a & 1:
                r ^= self._frob_cols[i]
            a >>= 1
            i += 1
        return r

    def _frobenius_by_squaring(self, a: int) -> int:
        for _ in range(self.k):
            a = _pmulmod(a, a, self.modulus)
        return a

    def qplus1_root(self, a: int) -> int:
        """The unique b with b^(q+1) = a; total because gcd(q+1, 2^m-1) = 1."""
        return self.pow(a, self._qp1_exp)

    def abs_trace(self, a: int) -> int:
        """Absolute trace F_{2^m} -> F_2: sum of a^(2^i) for i < m."""
        t = a
        s = a
        for _ in range(self.m - 1):
            s = self.mul(s, s)
            t ^= s
        return t

    def rel_trace(self, a: int) -> int:
        """Relative trace F_{q^n} -> F_q: sum of a^(q^i) for i < n."""
        t = a
        s = a
        for _ in range(self.n - 1):
            s = self.frobenius_q(s)
            t ^= s
        return t

    def subfield_sqrt(self, s: int) -> int:
        """Square root inside F_q, as s^(2^(k-1)); squaring is a bijection."""
        if self.frobenius_q(s) != s:
            raise ValueError(f"{s} is not in the subfield F_q")
        for _ in range(self.k - 1):
            s = self.mul(s, s)
        return s

    def solve_semilinear(self, u: int, c: int) -> tuple[int, ...]:
        """All y with u*y^q + u^q*y = c, as a sorted tuple.

        The map y -> u*y^q + u^q*y is F_2-linear with kernel F_q * u, so
        the result is empty or a coset of size exactly q.
        """
        if u == 0:
            raise ValueError("u must be nonzero")
        uq = self.frobenius_q(u)
        cols = [self.mul(u, self._frob_cols[i]) ^ self.mul(uq, 1 << i)
                for i in range(self.m)]
        solved = _solve_affine_f2(cols, c, self.m)
        if solved is None:
            return ()
        particular, kernel = solved
        if len(kernel) != self.k:
            raise RuntimeError(
                f"kernel of y -> u*y^q + u^q*y has dimension {len(kernel)}, expected {self.k}")
        sols = []
        for bits in range(1 << len(kernel)):
            y = particular
            for i, b in enumerate(kernel):
                if (bits >> i) & 1:
                    y ^= b
            sols.append(y)
        return tuple(sorted(sols))


def make_context(k: int, n: int) -> FieldContext:
    """Build the field context for q = 2^k and extension degree n.

    Rejects even k, even n and n < 3: the construction needs both
    parameters odd and n >= 3.
    """
    return FieldContext(k, n)
