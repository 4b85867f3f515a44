import numpy as np
import pytest

import oracles
from semifields import build_field
from semifields.constructions import FieldProduct, TwoParamSpec
from semifields.fn_analysis import VecFn, apn_two_param_fn, field_fn
from semifields.invariants import (count_classes, distinguish, enumerate_catalog, exponent_class,
                                   gamma_rank, graph_points, invariant_report, set_rank)


# --- Gamma-rank --------------------------------------------------------------

def test_gamma_rank_of_cube_matches_dense_oracle(F16):
    f = field_fn(F16, 3)
    assert gamma_rank(f) == oracles.dense_gamma_rank(4, f.table.tolist()) == 100


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_gamma_rank_matches_dense_oracle_on_random_functions(d):
    rng = np.random.default_rng(d)
    for _ in range(6 if d < 5 else 2):
        t = rng.integers(0, 2**d, 2**d)
        assert gamma_rank(VecFn(2, d, t)) == oracles.dense_gamma_rank(d, t.tolist())


@pytest.mark.parametrize("m,e", [(2, 3), (3, 3), (3, 5), (4, 7), (5, 3), (5, 11)])
def test_gamma_rank_matches_dense_oracle_on_monomials(m, e):
    f = field_fn(build_field(2, m), e)
    assert gamma_rank(f) == oracles.dense_gamma_rank(m, f.table.tolist())


def test_gamma_rank_at_largest_dense_size():
    f = field_fn(build_field(2, 6), 5)
    assert gamma_rank(f) == oracles.dense_gamma_rank(6, f.table.tolist())


def _random_gl(rng, n):
    while True:
        M = rng.integers(0, 2, (n, n))
        # rank over GF(2) via elimination
        A = M.copy()
        r = 0
        for c in range(n):
            piv = next((i for i in range(r, n) if A[i, c]), None)
            if piv is None:
                continue
            A[[r, piv]] = A[[piv, r]]
            for i in range(n):
                if i != r and A[i, c]:
                    A[i] ^= A[r]
            r += 1
        if r == n:
            return M


def _apply(M, v):
    n = M.shape[0]
    bits = (v[:, None] >> np.arange(n)) & 1
    return ((bits @ M.T) % 2) @ (1 << np.arange(n))


@pytest.mark.parametrize("seed", range(20))
def test_gamma_rank_invariant_under_linear_maps(F16, seed):
    rng = np.random.default_rng(seed)
    f = field_fn(F16, 3)
    base = gamma_rank(f)
    # a linear bijection of the ambient graph space F_2^8
    M = _random_gl(rng, 8)
    assert set_rank(_apply(M, graph_points(f)), 4) == base
    # and of the input and output spaces separately
    A, B = _random_gl(rng, 4), _random_gl(rng, 4)
    x = np.arange(16)
    g = f.compose_linear(inner=_apply(A, x), outer=_apply(B, x))
    assert gamma_rank(g) == base


def test_gamma_rank_errors():
    with pytest.raises(ValueError):
        gamma_rank(field_fn(build_field(3, 2), 2))
    with pytest.raises(ValueError, match="cap"):
        set_rank(np.arange(4), 9)


# --- catalog -------------------------------------------------------------------

def test_count_classes_examples():
    assert count_classes(3, 5) == (6, 8)
    assert count_classes(3, 3) == (2, 3)
    assert count_classes(3, 6) == (3, 4)


def test_exponent_class_examples():
    assert exponent_class(3, 5, 4) == 1
    for m in range(2, 9):
        for k in range(1, m // 2 + 1):
            assert exponent_class(3, m, k) == k
            assert exponent_class(3, m, m - k) == k


def _scan(p, m, k):
    mod = p**m - 1
    return min(s for s in range(m // 2 + 1) for u in range(m)
               if (p**u * (p**s + 1) - (p**k + 1)) % mod == 0)


@pytest.mark.parametrize("p", [3, 5])
def test_exponent_class_scan_oracle_and_idempotence(p):
    for m in range(2, 9):
        for k in range(1, m):
            s = exponent_class(p, m, k)
            assert s == _scan(p, m, k)
            if s:
                assert exponent_class(p, m, s) == s


def test_catalog_examples():
    c5 = enumerate_catalog(3, 5)
    assert sorted(c5.pairs) == [(k, r) for k in (1, 2) for r in (0, 1, 2)]
    assert c5.raw_count == 6 and c5.formula_semifields == 6 and c5.match
    c3 = enumerate_catalog(3, 3)
    assert c3.pairs == [(1, 0), (1, 1)] and c3.match
    c6 = enumerate_catalog(3, 6)
    assert c6.raw_count == 4 and c6.formula_semifields == 3 and not c6.match
    assert c6.pairs == [(2, r) for r in range(4)]


@pytest.mark.parametrize("m", [1, 3, 5, 7, 9])
def test_catalog_agrees_with_formula_for_odd_m(m):
    cat = enumerate_catalog(3, m)
    assert cat.raw_count == count_classes(3, m)[0]
    assert cat.match


def test_catalog_pairs_lie_in_ranges():
    for m in range(1, 11):
        cat = enumerate_catalog(3, m)
        for k, r in cat.pairs:
            assert 1 <= k <= m // 2 and 0 <= r <= m // 2
            assert (m // np.gcd(m, k)) % 2 == 1


# --- reports and distinguishing --------------------------------------------------------

@pytest.fixture(scope="module")
def reports():
    F = build_field(3, 3)
    return {r: invariant_report(TwoParamSpec(F, 1, r, 2)) for r in (0, 1)}


def test_two_param_reports(reports):
    for r, mid in ((0, 9), (1, 3)):
        rep = reports[r]
        assert rep.planar is True and rep.apn is None
        assert rep.nuclei.sizes["middle"] == mid
        assert rep.nuclei.sizes["nucleus"] == 3
        d = rep.as_dict()
        assert d["parameters"]["modulus"] == [1, 0, 2, 1]


def test_field_report(F27):
    rep = invariant_report(FieldProduct(F27))
    assert set(rep.nuclei.sizes.values()) == {27}


def test_distinguish(reports):
    v = distinguish(reports[0], reports[1])
    assert v.distinct and "middle" in v.witness
    same = distinguish(reports[0], reports[0])
    assert same.kind == "Indistinguishable" and not same.distinct


def test_distinguish_size_mismatch(reports, F27):
    with pytest.raises(ValueError):
        distinguish(reports[0], invariant_report(FieldProduct(F27)))


def test_apn_reports_differ_only_if_gamma_ranks_differ(F16):
    r0 = invariant_report(apn_two_param_fn(F16, 1, 0, F16.g), gamma=False)
    r2 = invariant_report(apn_two_param_fn(F16, 1, 2, F16.g), gamma=False)
    assert r0.apn and r2.apn
    # equal differential spectra: without Gamma-ranks the two cannot be told apart
    assert distinguish(r0, r2).kind == "Indistinguishable"
