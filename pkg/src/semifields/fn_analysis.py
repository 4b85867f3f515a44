"""Functions F_p^n -> F_p^n as exhaustive value tables: planarity, APN-ness, polarization.

Also tabulates the concrete planar and APN families built from the
two-parameter presemifields, and three sporadic planar monomial sums.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd

import numpy as np

from .constructions import DiamondSpec, Product, TwoParamSpec, join, split
from .gf_core import FieldCtx, build_field, linear_extension, vec_add, vec_scale, vec_sub

# Derivative tables are built this many entries at a time.
CHUNK = 1 << 22


@dataclass(frozen=True, eq=False)
class VecFn:
    """Value table of f: F_p^n -> F_p^n in canonical index encoding."""

    p: int
    n: int
    table: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        if t.shape != (self.p**self.n,):
            raise ValueError(f"table must have {self.p**self.n} entries, got {t.shape}")
        if t.size and (t.min() < 0 or t.max() >= self.p**self.n):
            raise ValueError("table entries out of range")
        object.__setattr__(self, "table", t)

    @property
    def size(self) -> int:
        return self.p**self.n

    def __call__(self, x):
        out = self.table[np.asarray(x)]
        return int(out) if np.ndim(out) == 0 else out

    def __eq__(self, other):
        return (isinstance(other, VecFn) and (self.p, self.n) == (other.p, other.n)
                and np.array_equal(self.table, other.table))

    def compose_linear(self, inner=None, outer=None) -> "VecFn":
        """outer o f o inner, with the maps given as permutation tables."""
        t = self.table if inner is None else self.table[np.asarray(inner)]
        if outer is not None:
            t = np.asarray(outer)[t]
        return VecFn(self.p, self.n, t)


def _derivatives(f: VecFn):
    """Yield (a-chunk, rows) with rows[i, x] = f(x + a_i) - f(x), a != 0."""
    p, n, N = f.p, f.n, f.size
    x = np.arange(N)
    step = max(1, CHUNK // N)
    for lo in range(1, N, step):
        a = np.arange(lo, min(N, lo + step))
        shifted = vec_add(p, n, x[None, :], a[:, None])
        yield a, vec_sub(p, n, f.table[shifted], f.table[None, :])


def is_planar(f: VecFn) -> bool:
    """Every nonzero derivative x -> f(x+a) - f(x) is a bijection."""
    if f.p == 2:
        raise ValueError("no planar functions in characteristic 2; use is_apn")
    N = f.size
    for a, rows in _derivatives(f):
        hits = np.zeros((len(a), N), dtype=np.int32)
        np.put_along_axis(hits, rows, 1, axis=1)
        if not hits.all():
            return False
    return True


def diff_spectrum(f: VecFn) -> dict[int, int]:
    """Histogram {solution count: number of (a != 0, b)} of f(x+a) - f(x) = b."""
    N = f.size
    hist = Counter()
    for a, rows in _derivatives(f):
        offs = np.arange(len(a))[:, None] * N
        counts = np.bincount((rows + offs).ravel(), minlength=len(a) * N)
        for c, freq in enumerate(np.bincount(counts)):
            if freq:
                hist[c] += int(freq)
    return dict(sorted(hist.items()))


def is_apn(f: VecFn) -> bool:
    if f.p != 2:
        raise ValueError("APN is defined here for characteristic 2")
    return set(diff_spectrum(f)) <= {0, 2}


def differential_uniformity(f: VecFn) -> int:
    return max(diff_spectrum(f))


def square_map(P: Product) -> VecFn:
    e = np.arange(P.size)
    return VecFn(P.p, P.n, P(e, e))


class PolarizedProduct(Product):
    """x*y = (f(x+y) - f(x) - f(y)) / 2, evaluated on demand."""

    name = "polarized"

    def __init__(self, f: VecFn):
        if f.p == 2:
            raise ValueError("polarization divides by 2; characteristic must be odd")
        self.f, self.p, self.n = f, f.p, f.n
        self._half = (f.p + 1) // 2

    def __call__(self, u, v):
        p, n, f = self.p, self.n, self.f
        s = vec_sub(p, n, vec_sub(p, n, f(vec_add(p, n, u, v)), f(u)), f(v))
        return vec_scale(p, n, self._half, s)


def polarize(f: VecFn) -> PolarizedProduct:
    return PolarizedProduct(f)


def is_do_polynomial(f: VecFn) -> bool:
    """f(0) = 0 and x -> f(x+a) - f(x) - f(a) is additive for every a."""
    p, n, N = f.p, f.n, f.size
    if f(0) != 0:
        return False
    x = np.arange(N)
    step = max(1, CHUNK // N)
    for lo in range(0, N, step):
        a = np.arange(lo, min(N, lo + step))
        g = vec_sub(p, n, vec_sub(p, n, f.table[vec_add(p, n, x[:, None], a[None, :])],
                                  f.table[:, None]), f.table[a][None, :])
        # g[x, a]; additivity in x for each column
        if not np.array_equal(linear_extension(p, n, g), g):
            return False
    return True


# --- concrete families ------------------------------------------------------

def two_param_planar_fn(spec: TwoParamSpec) -> VecFn:
    """(x, y) -> (x^(p^k+1) + alpha (y^(p^k+1))^sigma, xy)."""
    F, k = spec.ctx, spec.k
    x, y = split(F, np.arange(spec.size))
    e = F.p**k + 1
    first = F.add(F.pow(x, e), F.mul(spec.alpha, F.frobenius(F.pow(y, e), spec.r)))
    return VecFn(F.p, spec.n, join(F, first, F.mul(x, y)))


def diamond_planar_fn(spec: DiamondSpec) -> VecFn:
    """(2cxy + x^2 + alpha y^2, c(x^(p^k+1) + alpha y^(p^k+1)) + alpha x o_k y)."""
    F, k, c, al = spec.ctx, spec.k, spec.c, spec.alpha
    x, y = split(F, np.arange(spec.size))
    first = F.add(F.add(F.mul(F.scalar(2), F.mul(c, F.mul(x, y))), F.mul(x, x)), F.mul(al, F.mul(y, y)))
    e = F.p**k + 1
    second = F.add(F.mul(c, F.add(F.pow(x, e), F.mul(al, F.pow(y, e)))), F.mul(al, F.albert(k, x, y)))
    return VecFn(F.p, spec.n, join(F, first, second))


def _check_apn_params(ctx: FieldCtx, k: int, i: int, alpha: int):
    if ctx.p != 2 or ctx.m < 2 or ctx.m % 2:
        raise ValueError("need F_{2^m} with m >= 2 even")
    if gcd(k, ctx.m) != 1:
        raise ValueError(f"gcd(k, m) must be 1, got k={k}, m={ctx.m}")
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    if not 0 <= i < ctx.m:
        raise ValueError(f"i must lie in [0, {ctx.m})")


def apn_two_param_fn(ctx: FieldCtx, k: int, i: int, alpha: int) -> VecFn:
    """(x, y) -> (x^(2^k+1) + alpha y^((2^k+1) 2^i), xy) on F_{2^m}^2."""
    _check_apn_params(ctx, k, i, alpha)
    x, y = split(ctx, np.arange(ctx.q**2))
    e = 2**k + 1
    first = ctx.add(ctx.pow(x, e), ctx.mul(alpha, ctx.frobenius(ctx.pow(y, e), i)))
    return VecFn(2, 2 * ctx.m, join(ctx, first, ctx.mul(x, y)))


def alpha_apn_condition(ctx: FieldCtx, k: int, i: int, alpha: int) -> bool:
    """True iff alpha has no representation a^(2^k+1) (t^(2^k)+t)^(1-sigma).

    w^(1-sigma) is read as w / w^sigma for w = t^(2^k) + t != 0.
    """
    _check_apn_params(ctx, k, i, alpha)
    e = ctx.elements()
    w = ctx.add(ctx.frobenius(e, k), e)
    w = np.unique(w[w != 0])
    twist = np.unique(ctx.div(w, ctx.frobenius(w, i)))
    a_pow = np.unique(ctx.pow(e, 2**k + 1))
    reps = np.unique(ctx.mul(a_pow[:, None], twist[None, :]))
    return alpha not in set(reps.tolist())


SPORADIC = {
    "weng1": (3, 5, [(1, 90), (1, 2)]),
    "weng2": (3, 5, [(1, 162), (1, 108), (-1, 84), (1, 2)]),
    "weng3": (5, 5, [(1, 50), (3, 6)]),
}


def sporadic_planar(name: str, ctx: FieldCtx | None = None) -> VecFn:
    """x^90+x^2 and x^162+x^108-x^84+x^2 on F_{3^5}; x^50+3x^6 on F_{5^5}."""
    if name not in SPORADIC:
        raise ValueError(f"unknown sporadic function {name!r}; choose from {sorted(SPORADIC)}")
    p, m, terms = SPORADIC[name]
    F = ctx or build_field(p, m)
    if (F.p, F.m) != (p, m):
        raise ValueError(f"{name} lives on F_{p}^{m}")
    x = F.elements()
    out = np.zeros_like(x)
    for coef, e in terms:
        out = F.add(out, F.mul(F.scalar(coef), F.pow(x, e)))
    return VecFn(p, m, out)


def field_fn(ctx: FieldCtx, exponent: int) -> VecFn:
    """x -> x^exponent on F_{p^m}."""
    return VecFn(ctx.p, ctx.m, ctx.pow(ctx.elements(), exponent))
