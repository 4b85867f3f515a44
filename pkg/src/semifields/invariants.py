"""Isotopy/CCZ invariants, the parameter catalog of the two-parameter family, and reports.

The Gamma-rank of f: F_2^d -> F_2^d is the GF(2) rank of the 2^(2d) x 2^(2d)
matrix A[u, v] = [u + v in G_f], G_f = {(x, f(x))}.  Rows are generated from
G_f on the fly; only the reduced basis is stored.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import ceil, gcd

import numpy as np

from ._gf2 import dev_rank
from .constructions import Product, check_axioms
from .fn_analysis import VecFn, apn_two_param_fn, diff_spectrum, is_apn, is_planar, square_map
from .gf_core import build_field, is_irreducible
from .nuclei import NucleusReport, nucleus_report

GAMMA_MAX_DIM = 8


def graph_points(f: VecFn) -> np.ndarray:
    """G_f encoded as x | f(x) << d."""
    x = np.arange(f.size, dtype=np.int64)
    return x | (f.table << f.n)


def set_rank(points, d: int) -> int:
    """Gamma-rank of an arbitrary subset of F_2^d x F_2^d."""
    if d > GAMMA_MAX_DIM:
        raise ValueError(f"dimension {d} exceeds the cap {GAMMA_MAX_DIM} (65536-row matrix)")
    return dev_rank(np.asarray(points, dtype=np.int64), 2 * d)


def gamma_rank(f: VecFn) -> int:
    if f.p != 2:
        raise ValueError("Gamma-rank is defined here for characteristic 2")
    return set_rank(graph_points(f), f.n)


def apn_gamma_rank_sweep(m: int = 4, k: int = 1, i: int = 2) -> list[dict]:
    """Gamma-rank of the two-parameter APN function over every modulus and primitive alpha."""
    out = []
    for low in itertools.product(range(2), repeat=m):
        coeffs = low + (1,)
        if low[0] == 0 or not is_irreducible(2, coeffs):
            continue
        F = build_field(2, m, coeffs)
        e = F.elements()[1:]
        prim = [int(a) for a in e if gcd(int(F.log[a]), F.q - 1) == 1]
        for alpha in prim:
            f = apn_two_param_fn(F, k, i, alpha)
            out.append({"modulus": list(coeffs), "alpha": alpha, "gamma_rank": gamma_rank(f)})
    return out


# --- parameter catalog ------------------------------------------------------

def exponent_class(p: int, m: int, k: int) -> int:
    """Least s in [0, m//2] with p^k + 1 = p^u (p^s + 1) mod p^m - 1 for some u."""
    mod = p**m - 1
    target = (p**k + 1) % mod
    for s in range(m // 2 + 1):
        for u in range(m):
            if (p**u * (p**s + 1)) % mod == target:
                return s
    raise ValueError(f"no representative for k={k} (p={p}, m={m})")


def odd_part(m: int) -> int:
    while m % 2 == 0:
        m //= 2
    return m


def count_classes(p: int, m: int) -> tuple[int, int]:
    """(non-isotopic semifields, inequivalent planar functions) from the counting formula."""
    if m < 1:
        raise ValueError("m must be positive")
    mu = odd_part(m)
    return (mu // 2) * ceil(m / 2), (mu // 2) * (ceil(m / 2) + 1)


@dataclass
class ClassCatalog:
    p: int
    m: int
    pairs: list[tuple[int, int]]
    raw_count: int
    formula_semifields: int
    formula_planar: int
    exponent_classes: dict[int, int]

    @property
    def match(self) -> bool:
        return self.raw_count == self.formula_semifields

    def as_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "pairs": [list(x) for x in self.pairs],
                "raw_count": self.raw_count, "formula_semifields": self.formula_semifields,
                "formula_planar": self.formula_planar, "match": self.match,
                "exponent_classes": {str(k): v for k, v in self.exponent_classes.items()}}


def enumerate_catalog(p: int, m: int) -> ClassCatalog:
    """(k, r) pairs in the declared ranges with m/gcd(m,k) odd, k reduced to its class.

    A raw-count/formula mismatch is reported through ``match``, never reconciled.
    """
    classes = {k: exponent_class(p, m, k) for k in range(1, m)} if m > 1 else {}
    ks = sorted({exponent_class(p, m, k) for k in range(1, m // 2 + 1)
                 if (m // gcd(m, k)) % 2 == 1} - {0})
    pairs = [(k, r) for k in ks for r in range(m // 2 + 1)]
    sf, pl = count_classes(p, m)
    return ClassCatalog(p, m, pairs, len(pairs), sf, pl, classes)


# --- reports ----------------------------------------------------------------

@dataclass
class InvariantReport:
    family: str
    params: dict
    p: int
    n: int
    planar: bool | None = None
    apn: bool | None = None
    diff_spectrum: dict[int, int] | None = None
    axioms: dict | None = None
    nuclei: NucleusReport | None = None
    gamma_rank: int | None = None
    extra: dict = field(default_factory=dict)

    def nucleus_sizes(self) -> dict[str, int] | None:
        return None if self.nuclei is None else self.nuclei.sizes

    def as_dict(self) -> dict:
        return {
            "family": self.family, "parameters": self.params, "p": self.p, "n": self.n,
            "verdicts": {"planar": self.planar, "apn": self.apn, "axioms": self.axioms},
            "diff_spectrum": None if self.diff_spectrum is None
            else {str(k): v for k, v in self.diff_spectrum.items()},
            "nuclei": None if self.nuclei is None else self.nuclei.as_dict(),
            "gamma_rank": self.gamma_rank,
            **self.extra,
        }


def invariant_report(obj: Product | VecFn, *, gamma: bool = False, nuclei: bool = True,
                     seed: int = 0, family: str | None = None, params: dict | None = None
                     ) -> InvariantReport:
    """Bundle planarity/APN verdicts, spectrum, nuclei and optionally the Gamma-rank."""
    if isinstance(obj, Product):
        P, f = obj, square_map(obj)
        family = family or P.name
        params = params if params is not None else P.params()
    else:
        P, f = None, obj
        family = family or "table"
        params = params or {}
    rep = InvariantReport(family, dict(params), f.p, f.n)
    rep.diff_spectrum = diff_spectrum(f)
    if f.p == 2:
        rep.apn = set(rep.diff_spectrum) <= {0, 2}
        if gamma:
            rep.gamma_rank = gamma_rank(f)
    else:
        rep.planar = rep.diff_spectrum == {1: (f.size - 1) * f.size}
    if P is not None:
        ax = check_axioms(P)
        rep.axioms = ax.as_dict()
        if nuclei and ax.presemifield:
            rep.nuclei = nucleus_report(P, seed)
    return rep


@dataclass(frozen=True)
class Verdict:
    kind: str  # "ProvablyDistinct" or "Indistinguishable"
    witness: str | None = None

    @property
    def distinct(self) -> bool:
        return self.kind == "ProvablyDistinct"


def distinguish(a: InvariantReport, b: InvariantReport) -> Verdict:
    """Compare isotopy/CCZ invariants; a difference proves the objects inequivalent.

    Equal invariants prove nothing and give ``Indistinguishable``.
    """
    if (a.p, a.n) != (b.p, b.n):
        raise ValueError(f"reports are over different domains: {a.p}^{a.n} vs {b.p}^{b.n}")
    if a.nuclei is not None and b.nuclei is not None:
        for key in ("left", "middle", "right", "nucleus"):
            sa, sb = a.nuclei.sizes[key], b.nuclei.sizes[key]
            if sa != sb:
                return Verdict("ProvablyDistinct", f"{key} nucleus size {sa} vs {sb}")
    if a.diff_spectrum is not None and b.diff_spectrum is not None and a.diff_spectrum != b.diff_spectrum:
        return Verdict("ProvablyDistinct", f"differential spectrum {a.diff_spectrum} vs {b.diff_spectrum}")
    if a.gamma_rank is not None and b.gamma_rank is not None and a.gamma_rank != b.gamma_rank:
        return Verdict("ProvablyDistinct", f"Gamma-rank {a.gamma_rank} vs {b.gamma_rank}")
    return Verdict("Indistinguishable")


__all__ = [
    "ClassCatalog", "InvariantReport", "Verdict", "apn_gamma_rank_sweep", "count_classes",
    "distinguish", "enumerate_catalog", "exponent_class", "gamma_rank", "graph_points",
    "invariant_report", "is_apn", "is_planar", "set_rank",
]
