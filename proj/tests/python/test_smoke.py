import math

import numpy as np
import pytest

import wmnorm


def test_cesaro_weights_and_ratios():
    w = wmnorm.make_weights("cesaro", 4)
    assert len(w) == 4
    assert w.lambdas == [1.0, 1.0, 1.0, 1.0]
    assert w.cumsums == [1.0, 2.0, 3.0, 4.0]
    assert wmnorm.ratio_profile(w).l_trunc == 1.0


def test_apply_matches_dense():
    w = wmnorm.make_weights("power:alpha=1", 20)
    x = np.random.default_rng(3).standard_normal(20)
    b = np.asarray(wmnorm.dense_mean(w))
    np.testing.assert_allclose(wmnorm.apply_B(w, list(x)), b @ x, atol=1e-13)
    np.testing.assert_allclose(wmnorm.apply_Bt(w, list(x)), b.T @ x, atol=1e-13)


def test_gram_inverse_desk_example():
    t = wmnorm.build_gram_inverse(wmnorm.make_weights("cesaro", 3))
    assert t.diag == [1.0, 5.0, 13.0]
    assert t.offdiag == [-1.0, -4.0]
    lam = wmnorm.eigen_extreme(t, "min", 1e-12).value
    assert abs(lam**3 - 19 * lam**2 + 66 * lam - 36) < 1e-9
    assert lam == pytest.approx(0.6702, abs=5e-5)


def test_norm_against_numpy_svd():
    w = wmnorm.make_weights("geometric:rho=1.5", 60)
    sigma = wmnorm.power_norm(w).value
    ref = np.linalg.svd(np.asarray(wmnorm.dense_mean(w)), compute_uv=False)[0]
    assert sigma == pytest.approx(ref, rel=1e-9)


def test_certify_report():
    rep = wmnorm.certify(wmnorm.make_weights("cesaro", 100), trials=50, seed=1)
    assert list(rep)[:3] == ["l", "k", "c"]
    assert rep["violations"] == []
    assert rep["min_slack34"] >= -1e-12
    assert rep["lambda_min"] >= rep["k_bound"] - 1e-10
    assert rep["sigma_max"] < 2.0


def test_certificate_rejects_l_two():
    with pytest.raises(wmnorm.ConditionViolated):
        wmnorm.build_certificate(wmnorm.make_weights("cesaro", 5), 2.0)


def test_invalid_weights():
    with pytest.raises(wmnorm.InvalidWeight):
        wmnorm.weights_from_values([1.0, 0.0, 2.0])


def test_reduction_identities():
    for l in (0.1, 0.7, 1.0, 1.9):
        c = l * (2 - l) / 4
        assert abs(wmnorm.reduction_coefficient(l)) <= 1e-14
        assert abs(wmnorm.reduction_constant(l) - c * l / 2) <= 1e-14


def test_ftt_closed_form_and_inequalities():
    ev = wmnorm.ftt_eigenvalues_closed_form(1.0, 1.0, 3)
    np.testing.assert_allclose(ev, [2 - math.sqrt(2), 2, 2 + math.sqrt(2)],
                               atol=1e-12)
    rep = wmnorm.verify_ftt_inequalities(7, 2.0, 3.0, trials=200, seed=5)
    assert rep["violations"] == 0
    assert rep["lower_constant"] <= rep["min_ratio"]
    assert rep["max_ratio"] <= rep["upper_constant"]
    chk = wmnorm.sine_certificate_check(1.0, 2.0, 10, "minus")
    assert chk["max_deviation"] <= 1e-12
