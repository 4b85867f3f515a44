"""Table-driven arithmetic in F_{p^m} and F_p-vector arithmetic on index encodings.

Elements are integers in ``[0, p**m)``.  The index of an element is the
base-``p`` number whose digits are its polynomial-basis coordinates, lowest
degree in the least significant digit.  Every operation accepts Python ints or
integer numpy arrays and broadcasts; scalar in gives ``int`` out.
"""
from __future__ import annotations

import itertools
from functools import cached_property, lru_cache
from math import gcd

import numpy as np
import sympy

# Above this order the q x q product table is skipped and mul goes through logs.
MUL_TABLE_MAX = 1024
FIELD_ORDER_MAX = 1 << 20


def _out(x):
    if isinstance(x, np.generic) or (isinstance(x, np.ndarray) and x.ndim == 0):
        return int(x)
    return x


def _arr(x):
    return np.asarray(x, dtype=np.int64)


# --- F_p^n vectors in index encoding --------------------------------------

# Digits are processed in blocks of width h with p^(2h) <= BLOCK_TABLE_MAX, one
# table lookup per block.
BLOCK_TABLE_MAX = 1 << 16


@lru_cache(maxsize=None)
def _block(p: int) -> tuple[int, np.ndarray]:
    h = 1
    while p ** (2 * (h + 1)) <= BLOCK_TABLE_MAX:
        h += 1
    B = p**h
    digits = (np.arange(B)[:, None] // p ** np.arange(h)) % p
    pw = p ** np.arange(h)
    table = ((digits[:, None, :] + digits[None, :, :]) % p) @ pw
    return h, table.astype(np.int64)


@lru_cache(maxsize=None)
def _scale_block(p: int, c: int) -> np.ndarray:
    h, _ = _block(p)
    digits = (np.arange(p**h)[:, None] // p ** np.arange(h)) % p
    return ((digits * c) % p) @ (p ** np.arange(h))


def vec_add(p: int, n: int, a, b):
    """Coordinate-wise sum of two index-encoded vectors of F_p^n."""
    if p == 2:
        return _out(_arr(a) ^ _arr(b))
    a, b = _arr(a), _arr(b)
    h, table = _block(p)
    if n <= h:
        return _out(table[a, b])
    B = p**h
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    pw = 1
    for _ in range(0, n, h):
        out += table[a % B, b % B] * pw
        a, b = a // B, b // B
        pw *= B
    return _out(out)


def vec_scale(p: int, n: int, c: int, a):
    """Multiply every coordinate of ``a`` by the scalar ``c`` in F_p."""
    c %= p
    a = _arr(a)
    if p == 2:
        return _out(a if c else np.zeros_like(a))
    h, _ = _block(p)
    table = _scale_block(p, c)
    B = p**h
    out = np.zeros_like(a)
    pw = 1
    for _ in range(0, n, h):
        out += table[a % B] * pw
        a = a // B
        pw *= B
    return _out(out)


def vec_neg(p: int, n: int, a):
    return vec_scale(p, n, p - 1, a)


def vec_sub(p: int, n: int, a, b):
    return vec_add(p, n, a, vec_neg(p, n, b))


def to_digits(p: int, n: int, a) -> np.ndarray:
    """Coordinates of ``a`` as an array with a trailing axis of length ``n``."""
    a = _arr(a)
    return np.stack([(a // p**i) % p for i in range(n)], axis=-1)


def from_digits(p: int, digits) -> int | np.ndarray:
    digits = _arr(digits)
    pw = p ** np.arange(digits.shape[-1], dtype=np.int64)
    return _out((digits % p) @ pw)


def linear_extension(p: int, n: int, T: np.ndarray) -> np.ndarray:
    """Rebuild ``T`` along axis 0 as if ``u -> T[u]`` were F_p-linear.

    Row ``u`` of the result is the combination of the basis rows ``T[p**i]``
    given by the digits of ``u``; ``T`` equals its extension iff it is additive.
    """
    ext = np.zeros_like(T)
    block = 1
    for _ in range(n):
        for j in range(1, p):
            ext[j * block:(j + 1) * block] = vec_add(p, n, ext[:block], vec_scale(p, n, j, T[block]))
        block *= p
    return ext


# --- number theory ----------------------------------------------------------

def nu2(s: int) -> int:
    """2-adic valuation; nu2(0) is treated as infinity and returned as -1."""
    if s == 0:
        return -1
    return (s & -s).bit_length() - 1


def gcd_power_formula(p: int, j: int, n: int) -> int:
    """gcd(p^j + 1, p^n - 1) for odd p, by the 2-adic valuation rule."""
    if p % 2 == 0 or not sympy.isprime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if j < 1 or n < 1:
        raise ValueError("j and n must be positive")
    if nu2(j) < nu2(n):
        return p ** gcd(j, n) + 1
    return 2


def is_irreducible(p: int, coeffs) -> bool:
    """Irreducibility over F_p of the polynomial with low-degree-first ``coeffs``."""
    poly = sympy.Poly(list(reversed([int(c) for c in coeffs])), sympy.Symbol("x"), modulus=p)
    if poly.degree() < 1:
        return False
    return bool(poly.is_irreducible)


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree m, low degree compared first."""
    if m == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=m):
        if low[0] == 0:
            continue
        coeffs = low + (1,)
        if is_irreducible(p, coeffs):
            return coeffs
    raise RuntimeError("no irreducible polynomial found")  # unreachable for prime p


class FieldCtx:
    """A materialized finite field F_{p^m} with log/exp and Frobenius tables.

    Build instances with :func:`build_field`.  The object is never mutated
    after construction apart from lazily cached lookup tables.
    """

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(int(c) for c in modulus)
        self._pw = p ** np.arange(m, dtype=np.int64)
        self._build_log_tables()
        exps = [p**i for i in range(m)]
        self.frob_table = np.stack([self.pow(np.arange(self.q), e) for e in exps])

    def __repr__(self):
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    # -- construction helpers --
    def _times_x_matrix(self) -> np.ndarray:
        p, m = self.p, self.m
        M = np.zeros((m, m), dtype=np.int64)
        for j in range(m - 1):
            M[j + 1, j] = 1
        for i in range(m):
            M[i, m - 1] = (-self.modulus[i]) % p
        return M

    def _mul_matrix(self, h: int) -> np.ndarray:
        """Matrix of y -> h*y acting on digit column vectors."""
        X = self._times_x_matrix()
        col = to_digits(self.p, self.m, h)
        cols = []
        for _ in range(self.m):
            cols.append(col)
            col = X @ col % self.p
        return np.stack(cols, axis=1)

    def _matpow(self, M: np.ndarray, e: int) -> np.ndarray:
        R = np.eye(self.m, dtype=np.int64)
        while e:
            if e & 1:
                R = R @ M % self.p
            M = M @ M % self.p
            e >>= 1
        return R

    def _build_log_tables(self):
        p, m, q = self.p, self.m, self.q
        n = q - 1
        one = np.zeros(m, dtype=np.int64)
        one[0] = 1
        prime_factors = list(sympy.factorint(n)) if n > 1 else []
        g = None
        for h in range(1, q):
            Mh = self._mul_matrix(h)
            if all(not np.array_equal(self._matpow(Mh, n // r) @ one % p, one) for r in prime_factors):
                g = h
                break
        self.g = g
        digits = np.zeros((n, m), dtype=np.int64)
        digits[0] = one
        Mk, k = self._mul_matrix(g), 1
        while k < n:
            take = min(k, n - k)
            digits[k : k + take] = digits[:take] @ Mk.T % p
            Mk = Mk @ Mk % p
            k += take
        self.exp = digits @ self._pw
        self.log = np.zeros(q, dtype=np.int64)
        self.log[self.exp] = np.arange(n)
        # zero-aware copies: log(0) is a sentinel that lands in a zero tail of exp
        self._log_z = self.log.copy()
        self._log_z[0] = 2 * n
        self._exp_z = np.concatenate([self.exp, self.exp, np.zeros(2 * n + 1, dtype=np.int64)])

    @cached_property
    def _mul_table(self) -> np.ndarray | None:
        if self.q > MUL_TABLE_MAX:
            return None
        e = np.arange(self.q)
        return self._mul_log(e[:, None], e[None, :])

    # -- arithmetic --
    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def from_coeffs(self, coeffs) -> int:
        return int(from_digits(self.p, list(coeffs) + [0] * (self.m - len(coeffs))))

    def coeffs(self, e: int) -> list[int]:
        return [int(c) for c in to_digits(self.p, self.m, e)]

    def scalar(self, c: int) -> int:
        """Index of the prime-field constant c."""
        return c % self.p

    def add(self, a, b):
        return vec_add(self.p, self.m, a, b)

    def sub(self, a, b):
        return vec_sub(self.p, self.m, a, b)

    def neg(self, a):
        return vec_neg(self.p, self.m, a)

    def _mul_log(self, a, b):
        return self._exp_z[self._log_z[_arr(a)] + self._log_z[_arr(b)]]

    def mul(self, a, b):
        table = self._mul_table
        if table is not None:
            return _out(table[_arr(a), _arr(b)])
        return _out(self._mul_log(a, b))

    def pow(self, a, e: int):
        a = _arr(a)
        n = self.q - 1
        if e < 0 and np.any(a == 0):
            raise ZeroDivisionError("negative power of zero")
        r = self.exp[(self.log[a] * (e % n)) % n]
        if e > 0:
            r = np.where(a == 0, 0, r)
        return _out(r)

    def inv(self, a):
        if np.any(_arr(a) == 0):
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, -1)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def frobenius(self, a, i: int):
        """a^(p^i); i is reduced mod m."""
        return _out(self.frob_table[i % self.m][_arr(a)])

    def is_power(self, a, k: int):
        """True where a is a k-th power (0 counts)."""
        a = _arr(a)
        d = gcd(k, self.q - 1)
        return _out((a == 0) | (self.log[a] % d == 0))

    def is_square(self, a):
        return self.is_power(a, 2)

    def is_cube(self, a):
        return self.is_power(a, 3)

    def subfield(self, l: int) -> np.ndarray:
        """Elements of the subfield F_{p^l} (requires l | m)."""
        if self.m % l:
            raise ValueError(f"{l} does not divide {self.m}")
        e = self.elements()
        return e[self.frobenius(e, l) == e]

    def in_subfield(self, a, l: int):
        return _out(self.frobenius(a, l) == _arr(a))

    def albert(self, k: int, x, y):
        """x^(p^k) y + y^(p^k) x."""
        return self.add(self.mul(self.frobenius(x, k), y), self.mul(self.frobenius(y, k), x))


def build_field(p: int, m: int, modulus=None) -> FieldCtx:
    """Build F_{p^m}; the default modulus is the lexicographically least irreducible."""
    if not sympy.isprime(p):
        raise ValueError(f"p={p} is not prime")
    if m < 1:
        raise ValueError(f"degree must be >= 1, got {m}")
    if p**m > FIELD_ORDER_MAX:
        raise ValueError(f"field order {p}^{m} exceeds the supported maximum {FIELD_ORDER_MAX}")
    if modulus is None:
        modulus = default_modulus(p, m)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}: {list(modulus)}")
        if not is_irreducible(p, modulus):
            raise ValueError(f"modulus {list(modulus)} is reducible over F_{p}")
    return FieldCtx(p, m, modulus)


def rel_trace(ctx2: FieldCtx, x):
    """Relative trace F_{q^2} -> F_q, x + x^q, for a field of even degree."""
    if ctx2.m % 2:
        raise ValueError("relative trace needs an even-degree field")
    return ctx2.add(x, ctx2.frobenius(x, ctx2.m // 2))


def check_two_to_one(ctx: FieldCtx, k: int) -> bool:
    """Exhaustively test that x -> x^(p^k+1) is 2-to-1 on the nonzero elements."""
    img = ctx.pow(ctx.elements()[1:], ctx.p**k + 1)
    counts = np.bincount(img, minlength=ctx.q)
    return bool(np.all((counts == 0) | (counts == 2)))


def check_perm_xpk_plus_x(ctx: FieldCtx, k: int) -> bool:
    """Exhaustively test that x -> x^(p^k) + x permutes the field."""
    e = ctx.elements()
    img = ctx.add(ctx.frobenius(e, k), e)
    return len(np.unique(img)) == ctx.q
