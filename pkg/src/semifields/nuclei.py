"""Left, middle and right nuclei of finite semifields, computed exactly.

Candidates are first thinned by random associativity probes (fixed seed);
survivors are then confirmed exhaustively, so the seed never changes the
result.  Presemifields are lifted to a semifield with a = 1 (the pair (1,0))
before the scan, which for the two-parameter family is the L-map semifield.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .constructions import Product, SemifieldProduct, TABLE_MAX, TwoParamSpec
from .gf_core import vec_add

PROBES = 48
SEED = 0


def find_unit(P: Product) -> int | None:
    if getattr(P, "unit", None) is not None:
        return P.unit
    cand = np.arange(P.size)
    for b in P.basis():
        cand = cand[np.asarray(P(cand, b)) == b]
    e = np.arange(P.size)
    for c in cand:
        if np.array_equal(P(c, e), e) and np.array_equal(P(e, c), e):
            return int(c)
    return None


def as_semifield(P: Product, lift: bool = True) -> Product:
    """Return P with its unit recorded, lifting a presemifield through a = 1."""
    unit = find_unit(P)
    if unit is not None:
        if getattr(P, "unit", None) is None:
            P.unit = unit
        return P
    if not lift:
        raise ValueError("product has no unit; not a semifield")
    return SemifieldProduct(P, 1)


def _sides(S: Product, kind: str, a, x, y):
    if kind == "left":
        return S(S(a, x), y), S(a, S(x, y))
    if kind == "middle":
        return S(S(x, a), y), S(x, S(a, y))
    if kind == "right":
        return S(S(x, y), a), S(x, S(y, a))
    raise ValueError(kind)


def _exact_member(S: Product, kind: str, a: int, T: np.ndarray | None) -> bool:
    if T is not None:
        if kind == "left":
            return np.array_equal(T[T[a]], T[a][T])
        if kind == "middle":
            return np.array_equal(T[T[:, a]], T[:, T[a]])
        return np.array_equal(T[:, a][T], T[:, T[:, a]])
    # bi-additive product: fixing x on a basis and letting y run over everything is exhaustive
    y = np.arange(S.size)
    for x in S.basis():
        lhs, rhs = _sides(S, kind, a, x, y)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def nucleus_set(S: Product, kind: str, seed: int = SEED, probes: int = PROBES) -> np.ndarray:
    N = S.size
    rng = np.random.default_rng(seed)
    cand = np.arange(N)
    for _ in range(probes):
        x, y = (int(v) for v in rng.integers(0, N, 2))
        lhs, rhs = _sides(S, kind, cand, x, y)
        cand = cand[np.asarray(lhs) == np.asarray(rhs)]
    T = S.table() if N <= TABLE_MAX else None
    return np.array([a for a in cand if _exact_member(S, kind, int(a), T)], dtype=np.int64)


def middle_nucleus(S: Product, seed: int = SEED, lift: bool = True) -> np.ndarray:
    return nucleus_set(as_semifield(S, lift), "middle", seed)


def left_nucleus(S: Product, seed: int = SEED, lift: bool = True) -> np.ndarray:
    return nucleus_set(as_semifield(S, lift), "left", seed)


def right_nucleus(S: Product, seed: int = SEED, lift: bool = True) -> np.ndarray:
    return nucleus_set(as_semifield(S, lift), "right", seed)


def nucleus(S: Product, seed: int = SEED, lift: bool = True) -> np.ndarray:
    S = as_semifield(S, lift)
    sets = [nucleus_set(S, kind, seed) for kind in ("left", "middle", "right")]
    return np.intersect1d(np.intersect1d(sets[0], sets[1]), sets[2])


def verify_nucleus_field(S: Product, elems) -> bool:
    """elems contains 0 and the unit, is closed under + and the product, has inverses."""
    S = as_semifield(S)
    E = np.unique(np.asarray(elems, dtype=np.int64))
    size, p = len(E), S.p
    while size > 1 and size % p == 0:
        size //= p
    if size != 1 or len(E) < 2:
        return False
    members = set(E.tolist())
    if 0 not in members or S.unit not in members:
        return False
    sums = vec_add(S.p, S.n, E[:, None], E[None, :])
    prods = np.asarray(S(E[:, None], E[None, :]))
    if not (np.isin(sums, E).all() and np.isin(prods, E).all()):
        return False
    # E is sorted and contains 0, so rows 1: are the nonzero elements
    return bool((prods[1:] == S.unit).any(axis=1).all())


def predicted_sizes(spec: TwoParamSpec) -> tuple[int, int]:
    """(|N_m|, |N|) predicted for S_{k,sigma}: p^(2l) or p^l, and p^gcd(m,k,r)."""
    p, m, k, r = spec.p, spec.ctx.m, spec.k, spec.r
    l = gcd(m, k)
    middle = p ** (2 * l) if r == 0 else p**l
    return middle, p ** gcd(m, k, r)


@dataclass
class NucleusReport:
    left: list[int]
    middle: list[int]
    right: list[int]
    nucleus: list[int]
    is_field: dict[str, bool]
    predicted_middle: int | None = None
    predicted_nucleus: int | None = None
    params: dict = field(default_factory=dict)

    @property
    def sizes(self) -> dict[str, int]:
        return {k: len(getattr(self, k)) for k in ("left", "middle", "right", "nucleus")}

    @property
    def matches_prediction(self) -> bool | None:
        if self.predicted_middle is None:
            return None
        s = self.sizes
        return s["middle"] == self.predicted_middle and s["nucleus"] == self.predicted_nucleus

    def as_dict(self) -> dict:
        d = dict(self.sizes)
        d.update({"predicted_middle": self.predicted_middle,
                  "predicted_nucleus": self.predicted_nucleus,
                  "is_field": self.is_field, "elements": {k: getattr(self, k) for k in self.sizes}})
        return d


def nucleus_report(P: Product, seed: int = SEED) -> NucleusReport:
    S = as_semifield(P)
    sets = {kind: nucleus_set(S, kind, seed) for kind in ("left", "middle", "right")}
    sets["nucleus"] = np.intersect1d(np.intersect1d(sets["left"], sets["middle"]), sets["right"])
    flags = {k: verify_nucleus_field(S, v) for k, v in sets.items()}
    rep = NucleusReport(**{k: v.tolist() for k, v in sets.items()}, is_field=flags,
                        params=P.params())
    if isinstance(P, TwoParamSpec):
        rep.predicted_middle, rep.predicted_nucleus = predicted_sizes(P)
        # the exponent of sigma appears as both r and s
        rep.params.update({"r": P.r, "s": P.r})
    return rep


__all__ = [
    "NucleusReport", "as_semifield", "find_unit", "left_nucleus", "middle_nucleus", "nucleus",
    "nucleus_report", "nucleus_set", "predicted_sizes", "right_nucleus", "verify_nucleus_field",
]
