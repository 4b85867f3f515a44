"""(Pre)semifield products on pairs over F_{p^m} and exhaustive axiom checks.

A pair ``(a, b)`` of elements of F_{p^m} is stored as the single index
``a + q*b``; that index is also the canonical F_p^{2m} vector encoding, so
pairs can be added with :func:`semifields.gf_core.vec_add`.

Every product is a callable ``P(u, v)`` that broadcasts over numpy arrays.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

import numpy as np

from .gf_core import FieldCtx, linear_extension, nu2, rel_trace, vec_add, vec_scale

TABLE_MAX = 4096
SAMPLE_SEED = 0


def split(ctx: FieldCtx, u):
    u = np.asarray(u, dtype=np.int64)
    return u % ctx.q, u // ctx.q


def join(ctx: FieldCtx, a, b):
    out = np.asarray(a, dtype=np.int64) + ctx.q * np.asarray(b, dtype=np.int64)
    return int(out) if out.ndim == 0 else out


class Product:
    """A binary product on F_p^n in index encoding."""

    p: int
    n: int
    name = "product"

    @property
    def size(self) -> int:
        return self.p**self.n

    def __call__(self, u, v):
        raise NotImplementedError

    def params(self) -> dict:
        return {}

    def table(self) -> np.ndarray:
        """Full size x size product table; only for small domains."""
        if self.size > TABLE_MAX:
            raise ValueError(f"domain of size {self.size} is too large to tabulate")
        return self._table

    @cached_property
    def _table(self) -> np.ndarray:
        e = np.arange(self.size)
        return np.asarray(self(e[:, None], e[None, :]), dtype=np.int64)

    def basis(self) -> np.ndarray:
        return self.p ** np.arange(self.n, dtype=np.int64)


class FieldProduct(Product):
    name = "field"

    def __init__(self, ctx: FieldCtx):
        self.ctx, self.p, self.n = ctx, ctx.p, ctx.m

    def __call__(self, u, v):
        return self.ctx.mul(u, v)

    def params(self):
        return {"p": self.p, "m": self.ctx.m, "modulus": list(self.ctx.modulus)}


class AlbertProduct(Product):
    """The twisted-field product x^(p^k) y + y^(p^k) x on F_{p^m}."""

    name = "albert"

    def __init__(self, ctx: FieldCtx, k: int):
        self.ctx, self.k, self.p, self.n = ctx, k, ctx.p, ctx.m

    def __call__(self, u, v):
        return self.ctx.albert(self.k, u, v)

    def params(self):
        return {"p": self.p, "m": self.ctx.m, "k": self.k, "modulus": list(self.ctx.modulus)}


def albert_product(ctx: FieldCtx, k: int, x, y):
    return ctx.albert(k, x, y)


def default_alpha(ctx: FieldCtx, l: int) -> int:
    """Least-index non-square of F_{p^m} lying in F_{p^l}."""
    cand = ctx.subfield(l)
    cand = cand[(cand != 0) & ~np.asarray(ctx.is_square(cand), dtype=bool)]
    if len(cand) == 0:
        raise ValueError(f"F_{ctx.p}^{l} has no non-square of F_{ctx.p}^{ctx.m}")
    return int(cand.min())


class TwoParamSpec(Product):
    """(a,b)*(c,d) = (a o_k c + alpha (b o_k d)^sigma, ad + bc), sigma = x^(p^r).

    ``k = 0`` is the Dickson reading (x o_0 y = 2xy); build it with
    :func:`dickson_spec`.
    """

    name = "two-param"

    def __init__(self, ctx: FieldCtx, k: int, r: int = 0, alpha: int | None = None, *, check=True):
        if ctx.p == 2:
            raise ValueError("two-parameter presemifields need odd characteristic")
        m = ctx.m
        self.ctx, self.k, self.r = ctx, k, r
        self.p, self.n = ctx.p, 2 * m
        self.l = gcd(m, k)
        self.alpha = default_alpha(ctx, self.l) if alpha is None else int(alpha)
        if check:
            self.validate()

    def validate(self):
        ctx, m, k, r, alpha = self.ctx, self.ctx.m, self.k, self.r, self.alpha
        if self.name == "two-param" and not 1 <= k <= m // 2:
            raise ValueError(f"k must lie in [1, {m // 2}] for m={m}, got {k}")
        if not 0 <= r <= m // 2:
            raise ValueError(f"r must lie in [0, {m // 2}] for m={m}, got {r}")
        if (m // self.l) % 2 == 0:
            raise ValueError(f"m/gcd(m,k) = {m // self.l} must be odd")
        if alpha == 0 or ctx.is_square(alpha):
            raise ValueError(f"alpha={alpha} must be a non-square")
        if not ctx.in_subfield(alpha, self.l):
            raise ValueError(f"alpha={alpha} must lie in F_{ctx.p}^{self.l}")

    def params(self):
        return {"p": self.p, "m": self.ctx.m, "k": self.k, "r": self.r, "s": self.r,
                "alpha": self.alpha, "modulus": list(self.ctx.modulus)}

    def __call__(self, u, v):
        F, k = self.ctx, self.k
        a, b = split(F, u)
        c, d = split(F, v)
        twist = F.mul(self.alpha, F.frobenius(F.albert(k, b, d), self.r))
        first = F.add(F.albert(k, a, c), twist)
        second = F.add(F.mul(a, d), F.mul(b, c))
        return join(F, first, second)

    # L(a, b) = (a, b) * (1, 0)
    def L_map(self, u):
        F = self.ctx
        a, b = split(F, u)
        return join(F, F.add(a, F.frobenius(a, self.k)), b)

    @cached_property
    def _trace_inverse(self) -> np.ndarray:
        F = self.ctx
        e = F.elements()
        img = np.asarray(F.add(e, F.frobenius(e, self.k)))
        inv = np.full(F.q, -1, dtype=np.int64)
        inv[img] = e
        if np.any(inv < 0):
            raise ValueError("x^(p^k) + x is not a permutation; L is not invertible")
        return inv

    def L_inverse(self, u):
        F = self.ctx
        a, b = split(F, u)
        return join(F, self._trace_inverse[a], b)


def two_param_product(spec: TwoParamSpec, u, v):
    return spec(u, v)


def L_map(spec: TwoParamSpec, u):
    return spec.L_map(u)


def L_inverse(spec: TwoParamSpec, u):
    return spec.L_inverse(u)


class DicksonSpec(TwoParamSpec):
    name = "dickson"

    def __init__(self, ctx: FieldCtx, r: int, alpha: int | None = None, *, check=True):
        super().__init__(ctx, 0, r, alpha, check=check)


def dickson_spec(ctx: FieldCtx, r: int, alpha: int | None = None) -> DicksonSpec:
    return DicksonSpec(ctx, r, alpha)


class DiamondSpec(Product):
    """The commutative presemifield obtained from S_k with middle-nucleus element L(c, 1).

    (a,b)<>(e,f) = (c(a o e + alpha b o f) + alpha(b o e + a o f), c(af + be) + (ae + alpha bf))
    """

    name = "diamond"

    def __init__(self, base: TwoParamSpec, c: int):
        if base.r != 0:
            raise ValueError("the diamond product needs sigma = identity (r = 0)")
        ctx = base.ctx
        if not ctx.in_subfield(c, base.l):
            raise ValueError(f"c={c} must lie in F_{ctx.p}^{base.l}")
        self.base, self.c = base, int(c)
        self.ctx, self.k, self.alpha = ctx, base.k, base.alpha
        self.p, self.n = ctx.p, 2 * ctx.m
        shift = ctx.sub(ctx.mul(c, c), self.alpha)
        # c^2 - alpha non-square: the condition under which <> is not strongly isotopic to P_s
        self.non_square_shift = not bool(ctx.is_square(shift))

    def params(self):
        d = self.base.params()
        d.update({"c": self.c, "non_square_shift": self.non_square_shift})
        return d

    def __call__(self, u, v):
        F, k, c, al = self.ctx, self.k, self.c, self.alpha
        a, b = split(F, u)
        e, f = split(F, v)
        first = F.add(
            F.mul(c, F.add(F.albert(k, a, e), F.mul(al, F.albert(k, b, f)))),
            F.mul(al, F.add(F.albert(k, b, e), F.albert(k, a, f))),
        )
        second = F.add(
            F.mul(c, F.add(F.mul(a, f), F.mul(b, e))),
            F.add(F.mul(a, e), F.mul(al, F.mul(b, f))),
        )
        return join(F, first, second)


def diamond_product(spec: DiamondSpec, u, v):
    return spec(u, v)


def _default_omega(ctx2: FieldCtx, m: int) -> int:
    e = ctx2.elements()[1:]
    if m % 2:
        # omega^p = -omega puts omega in F_{p^2} with omega^q = -omega
        hit = e[ctx2.frobenius(e, 1) == ctx2.neg(e)]
    else:
        hit = e[ctx2.frobenius(e, m) != e]
    return int(hit.min())


class BHSpec(Product):
    """M_s(x) = x^(q+1) + omega tr(beta x^(p^s+1)) on F_{q^2}, q = p^m.

    Indices are big-field indices of F_{p^{2m}}.  The product is the halved
    polarization of M_s.  Pair coordinates ``(a, b) <-> a + b*omega`` use the
    position of a and b in the sorted list of subfield elements.
    """

    name = "bh"

    def __init__(self, ctx2: FieldCtx, s: int, omega: int | None = None, beta: int | None = None,
                 *, check=True):
        if ctx2.m % 2 or ctx2.p == 2:
            raise ValueError("BH functions need F_{p^(2m)} with p odd")
        self.ctx, self.m, self.s = ctx2, ctx2.m // 2, s
        self.p, self.n = ctx2.p, ctx2.m
        self.omega = _default_omega(ctx2, self.m) if omega is None else int(omega)
        if beta is None:
            e = ctx2.elements()[1:]
            beta = int(e[~np.asarray(ctx2.is_square(e), dtype=bool)].min())
        self.beta = int(beta)
        self.sub = ctx2.subfield(self.m)
        self._sub_pos = np.full(ctx2.q, -1, dtype=np.int64)
        self._sub_pos[self.sub] = np.arange(len(self.sub))
        if check:
            self.validate()

    def validate(self):
        F, m, s = self.ctx, self.m, self.s
        if not (s == 0 or nu2(s) != nu2(m)):
            raise ValueError(f"need s = 0 or nu(s) != nu(m); got s={s}, m={m}")
        if F.in_subfield(self.omega, m):
            raise ValueError("omega must lie outside F_q")
        if self.beta == 0 or F.is_square(self.beta):
            raise ValueError("beta must be a non-square")

    def params(self):
        return {"p": self.p, "m": self.m, "s": self.s, "omega": self.omega, "beta": self.beta,
                "modulus": list(self.ctx.modulus)}

    def function(self, x):
        F = self.ctx
        norm = F.mul(x, F.frobenius(x, self.m))
        inner = F.mul(self.beta, F.pow(x, self.p**self.s + 1))
        return F.add(norm, F.mul(self.omega, rel_trace(F, inner)))

    def __call__(self, u, v):
        F = self.ctx
        full = F.add(F.add(F.mul(F.frobenius(u, self.m), v), F.mul(u, F.frobenius(v, self.m))),
                     F.mul(self.omega, rel_trace(F, F.mul(self.beta, F.albert(self.s, u, v)))))
        return vec_scale(F.p, F.m, (F.p + 1) // 2, full)

    # pair coordinates
    def pair_to_big(self, u):
        qm = len(self.sub)
        u = np.asarray(u, dtype=np.int64)
        F = self.ctx
        return F.add(self.sub[u % qm], F.mul(self.sub[u // qm], self.omega))

    def pair_product(self, u, v):
        """(a,b),(c,d) -> (2(ac - bd omega^2), 2(a o_s d + b o_s c))."""
        F, qm = self.ctx, len(self.sub)
        if self.m % 2 == 0:
            raise ValueError("pair form needs m odd")
        if F.frobenius(self.omega, self.m) != F.neg(self.omega):
            raise ValueError("pair form needs omega^q = -omega")
        if F.frobenius(self.omega, self.s) != self.omega:
            raise ValueError("pair form needs omega^(p^s) = omega")
        if F.mul(self.beta, self.omega) != 1:
            raise ValueError("pair form needs beta = omega^-1")
        u, v = np.asarray(u, dtype=np.int64), np.asarray(v, dtype=np.int64)
        a, b = self.sub[u % qm], self.sub[u // qm]
        c, d = self.sub[v % qm], self.sub[v // qm]
        w2 = F.mul(self.omega, self.omega)
        first = F.sub(F.mul(a, c), F.mul(F.mul(b, d), w2))
        second = F.add(F.albert(self.s, a, d), F.albert(self.s, b, c))
        first = vec_scale(F.p, F.m, 2, first)
        second = vec_scale(F.p, F.m, 2, second)
        out = self._sub_pos[first] + qm * self._sub_pos[second]
        return int(out) if np.ndim(out) == 0 else out


def bh_function(spec: BHSpec, x):
    return spec.function(x)


def bh_pair_product(spec: BHSpec, u, v):
    return spec.pair_product(u, v)


class TableProduct(Product):
    """An explicitly tabulated product."""

    name = "table"

    def __init__(self, p: int, n: int, table):
        table = np.asarray(table, dtype=np.int64)
        if table.shape != (p**n, p**n):
            raise ValueError(f"table must be {p**n} x {p**n}")
        self.p, self.n = p, n
        self._table = table

    def __call__(self, u, v):
        out = self._table[np.asarray(u), np.asarray(v)]
        return int(out) if np.ndim(out) == 0 else out


class SemifieldProduct(Product):
    """The product defined by (x*a) # (a*y) = x*y; its unit is a*a."""

    name = "semifield"

    def __init__(self, base: Product, a: int):
        if a == 0:
            raise ValueError("a must be nonzero")
        self.base, self.a = base, int(a)
        self.p, self.n = base.p, base.n
        e = np.arange(base.size)
        self._right_inv = self._invert(base(e, a))
        self._left_inv = self._invert(base(a, e))
        self.unit = int(base(a, a))

    @staticmethod
    def _invert(img) -> np.ndarray:
        img = np.asarray(img, dtype=np.int64)
        inv = np.full(len(img), -1, dtype=np.int64)
        inv[img] = np.arange(len(img))
        if np.any(inv < 0):
            raise ValueError("translation is not bijective: the base product has zero divisors")
        return inv

    def params(self):
        d = dict(self.base.params())
        d["lift_element"] = self.a
        return d

    def __call__(self, u, v):
        return self.base(self._right_inv[np.asarray(u)], self._left_inv[np.asarray(v)])


def semifield_from_presemifield(P: Product, a: int) -> SemifieldProduct:
    return SemifieldProduct(P, a)


@dataclass
class AxiomReport:
    distributive: bool
    commutative: bool
    no_zero_divisors: bool
    unit: int | None
    sampled: bool = False
    samples: int = 0
    seed: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def presemifield(self) -> bool:
        return self.distributive and self.no_zero_divisors

    @property
    def semifield(self) -> bool:
        return self.presemifield and self.unit is not None

    def as_dict(self) -> dict:
        return {"distributive": self.distributive, "commutative": self.commutative,
                "no_zero_divisors": self.no_zero_divisors, "unit": self.unit,
                "sampled": self.sampled, "samples": self.samples, "seed": self.seed}


def check_axioms(P: Product, samples: int | None = None, seed: int = SAMPLE_SEED) -> AxiomReport:
    """Check distributivity, commutativity, zero divisors and find the unit.

    Exhaustive when the domain can be tabulated and ``samples`` is None.
    Distributivity is decided exactly: u -> P(u, v) is additive iff it agrees
    with the F_p-linear extension of its values on the standard basis.
    """
    p, n, N = P.p, P.n, P.size
    if samples is None and N <= TABLE_MAX:
        T = P.table()
        left = np.array_equal(linear_extension(p, n, T), T)
        right = np.array_equal(linear_extension(p, n, T.T), T.T)
        comm = np.array_equal(T, T.T)
        nz = not np.any(T[1:, 1:] == 0)
        e = np.arange(N)
        unit = None
        for cand in np.flatnonzero(T[:, 1] == 1):
            if np.array_equal(T[cand], e) and np.array_equal(T[:, cand], e):
                unit = int(cand)
                break
        return AxiomReport(bool(left and right), bool(comm), bool(nz), unit)

    samples = samples or 100_000
    rng = np.random.default_rng(seed)
    x, y, z = (rng.integers(0, N, samples) for _ in range(3))
    left = np.array_equal(P(vec_add(p, n, x, y), z), vec_add(p, n, P(x, z), P(y, z)))
    right = np.array_equal(P(z, vec_add(p, n, x, y)), vec_add(p, n, P(z, x), P(z, y)))
    comm = np.array_equal(P(x, y), P(y, x))
    xs, ys = rng.integers(1, N, samples), rng.integers(1, N, samples)
    nz = not np.any(np.asarray(P(xs, ys)) == 0)
    # unit candidates from P(e, b) = b on a basis, then checked on the samples
    e = np.arange(N)
    cand = e
    for b in P.basis():
        cand = cand[np.asarray(P(cand, b)) == b]
        if len(cand) == 0:
            break
    unit = None
    for c in cand:
        if np.array_equal(P(c, x), x) and np.array_equal(P(x, c), x):
            unit = int(c)
            break
    return AxiomReport(bool(left and right), bool(comm), bool(nz), unit, sampled=True,
                       samples=samples, seed=seed)


__all__ = [
    "AlbertProduct", "AxiomReport", "BHSpec", "DiamondSpec", "DicksonSpec", "FieldProduct",
    "Product", "SemifieldProduct", "TableProduct", "TwoParamSpec", "L_inverse", "L_map",
    "albert_product", "bh_function", "bh_pair_product", "check_axioms", "default_alpha",
    "diamond_product", "dickson_spec", "join", "semifield_from_presemifield", "split",
    "two_param_product",
]
