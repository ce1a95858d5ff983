from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stretched.errors import ConstraintViolation
from stretched.family import (
    FamilyParams,
    build_family_semigroup,
    check_construction_lemmas,
    corollary67_params,
    iter_family_params,
    predicted_report,
    sample_family_params,
    validate_family,
)
from stretched.filtration import analyze
from stretched.hilbert import hilbert_data
from stretched.ideal import equals, ideal_from_exponents, maximal_ideal, module_sum, power, shift


def F(ell, **bn):
    return FamilyParams(2, 6, ell, {int(k[1:]): v for k, v in bn.items()})


def test_validate_examples():
    assert validate_family(F(3, b4=5, b5=6)) == []
    (msg,) = validate_family(F(3, b4=8, b5=6))
    assert "b_{ell+1} <= b*ell + b - 1" in msg and "7" in msg
    (msg,) = validate_family(F(3, b4=5, b5=7))
    assert "b_{n+1} <= b_n + ceil(b/2)" in msg
    assert validate_family(F(3, b4=4, b5=6))  # ceil(b/2)*n + 1 = 5
    assert validate_family(F(3, b4=5))  # b_5 missing
    assert validate_family(FamilyParams(1, 6, 3, {4: 5, 5: 6}))
    assert validate_family(FamilyParams(2, 6, 6, {}))


@pytest.mark.parametrize(
    "params, gens",
    [
        (F(3, b4=5, b5=6), (6, 13, 34, 41)),
        (F(3, b4=6, b5=6), (6, 13, 40, 41)),
        (F(2, b3=5, b4=5, b5=6), (6, 13, 33, 34, 41)),
    ],
)
def test_build(params, gens):
    assert build_family_semigroup(params).generators == gens


def test_build_refuses_invalid():
    with pytest.raises(ConstraintViolation) as exc:
        build_family_semigroup(F(3, b4=8, b5=6))
    assert exc.value.violations


def test_predictions():
    p = predicted_report(F(2, b3=5, b4=5, b5=6))
    assert (p.n, p.r, p.lambda_set, p.e1, p.depth_g) == (2, 3, {2}, 7, 0)
    p = predicted_report(F(3, b4=5, b5=6))
    assert (p.n, p.r, p.lambda_set, p.e1, p.tau, p.mu) == (3, 3, frozenset(), 8, 3, 4)


@pytest.mark.parametrize(
    "args, bv, gens",
    [
        ((2, 6, 2, 2), {3: 5, 4: 5, 5: 6}, (6, 13, 33, 34, 41)),
        ((2, 6, 3, 2), {4: 7, 5: 6}, (6, 13, 41, 46)),
        ((2, 6, 3, 3), {4: 6, 5: 6}, (6, 13, 40, 41)),
    ],
)
def test_forced_params(args, bv, gens):
    p = corollary67_params(*args)
    assert dict(p.b_values) == bv
    assert build_family_semigroup(p).generators == gens


def test_forced_params_rejects():
    with pytest.raises(ConstraintViolation):
        corollary67_params(2, 6, 4, 2)  # ell > e - 3
    with pytest.raises(ConstraintViolation):
        corollary67_params(2, 9, 3, 4)  # s > ell
    # for b = 4 the boundary fill grows by 3 > ceil(4/2) per step
    with pytest.raises(ConstraintViolation):
        corollary67_params(4, 10, 3, 2)
    with pytest.raises(ValueError):
        corollary67_params(2, 9, 3, 2, fill_strategy="nope")


def test_forced_params_custom_fill():
    p = corollary67_params(2, 9, 3, 2, fill_strategy=lambda n: n + 1)
    assert p.fill_note == "custom fill" and p.b_values[6] == 7


@pytest.mark.parametrize("b, e, ell, s", [(2, 7, 3, 2), (2, 8, 3, 3), (3, 9, 4, 2), (3, 10, 5, 5), (2, 12, 6, 4)])
def test_forced_params_instances(b, e, ell, s):
    p = corollary67_params(b, e, ell, s)
    m = maximal_ideal(build_family_semigroup(p))
    rep, hd = analyze(m), hilbert_data(m)
    assert rep.stretched and (rep.n, rep.r, rep.lambda_set) == (ell, ell + 1, {s})
    assert hd.e1 == e - 1 + comb(ell + 1, 2) - s + 1


def test_square_decomposition_ex681():
    H = build_family_semigroup(F(3, b4=5, b5=6))
    m, Q = maximal_ideal(H), ideal_from_exponents(H, [6])
    assert equals(power(m, 2), module_sum(shift(m, 6), ideal_from_exponents(H, [26])))
    assert 39 not in Q


def test_lemmas_on_examples():
    for p in (F(3, b4=5, b5=6), F(2, b3=5, b4=6, b5=6), F(4, b5=6)):
        assert all(v == [] for v in check_construction_lemmas(p).values())


def test_generators_are_valid():
    allp = list(iter_family_params(3, 7))
    assert allp and all(validate_family(p) == [] for p in allp)
    keys = {(p.b, p.e, p.ell, tuple(sorted(p.b_values.items()))) for p in allp}
    assert len(keys) == len(allp)
    sample = sample_family_params(40, max_b=3, max_e=7, seed=3)
    assert all(validate_family(p) == [] for p in sample)
    assert sample == sample_family_params(40, max_b=3, max_e=7, seed=3)


@given(st.integers(0, 10_000))
def test_prediction_matches_ring(seed):
    (p,) = sample_family_params(1, max_b=4, max_e=11, seed=seed)
    pred = predicted_report(p)
    m = maximal_ideal(build_family_semigroup(p))
    rep, hd = analyze(m), hilbert_data(m)
    got = (rep.n, rep.r, rep.lambda_set, rep.tau, rep.mu_I, hd.e1, rep.depth_g)
    assert got == (pred.n, pred.r, pred.lambda_set, pred.tau, pred.mu, pred.e1, pred.depth_g), p.describe()
    assert rep.stretched
    assert hd.postulation <= max(pred.hilbert_from, 0)
    assert all(v == [] for v in check_construction_lemmas(p).values()), p.describe()
