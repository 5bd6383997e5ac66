import math
import warnings

import numpy as np
import pytest

from slabshift import (AtomSpec, QuadratureSpec, ReducedParams, Slab,
                       Transition, buhmann_U, classify_regime, energy_shift,
                       halfspace_S, nonretarded_shift, nonretarded_thin_shift,
                       retarded_thin_shift, static_polarizability)

ATOM = AtomSpec([Transition(E_ji=1.0, mu_par_sq=2.0, mu_perp_sq=1.0)])


def _isotropic_atom(rng):
    trs = []
    for _ in range(rng.integers(1, 4)):
        mu = rng.uniform(0.1, 3.0)
        trs.append(Transition(E_ji=rng.uniform(0.2, 5.0), mu_par_sq=2.0 * mu,
                              mu_perp_sq=mu))
    return AtomSpec(trs)


def test_classify_regime():
    assert classify_regime(ReducedParams(50.0, 1.0, 2.0)).regime == "retarded"
    assert classify_regime(ReducedParams(0.01, 1.0, 2.0)).regime == "non-retarded"
    assert classify_regime(ReducedParams(1.0, 1.0, 2.0)).regime == "intermediate"
    rep = classify_regime(ReducedParams(2.0, 3.0, 2.0))
    assert rep.two_zeta == 4.0
    assert rep.lambda_over_zeta == pytest.approx(1.5)


def test_halfspace_transparent():
    assert halfspace_S(1.0, 1.0) == (0.0, 0.0)


def test_halfspace_agrees_with_thick_slab():
    q = QuadratureSpec(rel_tol=1e-10)
    from slabshift import s_parallel, s_perp
    hs_par, hs_perp = halfspace_S(1.0, 2.0, q)
    thick_par = s_parallel(ReducedParams(1.0, 200.0, 2.0), q)[0]
    thick_perp = s_perp(ReducedParams(1.0, 200.0, 2.0), q)[0]
    assert thick_par == pytest.approx(hs_par, rel=1e-6)
    assert thick_perp == pytest.approx(hs_perp, rel=1e-6)


def test_retarded_thin_transparent_and_linear_in_L():
    assert retarded_thin_shift(ATOM, Slab(n=1.0, L=1.0), 5.0).value == 0.0
    full = retarded_thin_shift(ATOM, Slab(n=2.0, L=1.0), 5.0).value
    half = retarded_thin_shift(ATOM, Slab(n=2.0, L=0.5), 5.0).value
    assert half == pytest.approx(full / 2.0, rel=1e-14)


def test_retarded_thin_smooth_zero_thickness_limit():
    # ratio shift/L must be L-independent (analytic L -> 0 limit)
    ratios = [retarded_thin_shift(ATOM, Slab(n=2.0, L=L), 5.0).value / L
              for L in (1e-6, 1e-8, 1e-10)]
    assert ratios[0] == pytest.approx(ratios[1], rel=1e-10)
    assert ratios[1] == pytest.approx(ratios[2], rel=1e-10)


def test_retarded_thin_isotropic_bracket():
    # isotropic atom, n = 2: per-transition bracket is
    # 2 (9 + 14 n^2) |mu_nu|^2 and (n^2-1)(9+14n^2) = 195
    n = 2.0
    assert (n * n - 1.0) * (9.0 + 14.0 * n * n) == 195.0
    mu = 0.8
    atom = AtomSpec([Transition(1.0, 2.0 * mu, mu)])
    got = retarded_thin_shift(atom, Slab(n=n, L=0.3), 4.0).value
    expected = -(n * n - 1.0) * 0.3 / (160.0 * math.pi ** 2 * n * n * 4.0 ** 5) \
        * 2.0 * (9.0 + 14.0 * n * n) * mu
    assert got == pytest.approx(expected, rel=1e-14)


def test_buhmann_bracket_values():
    # mu(0) = 1 leg contributes (6-1)/1 = 5; n = 2 bracket = 195/4
    n = 2.0
    bracket = (14.0 * n ** 4 - 9.0) / (n * n) - 5.0
    assert bracket == pytest.approx(195.0 / 4.0, rel=1e-14)
    assert bracket == pytest.approx((n * n - 1.0) * (9.0 + 14.0 * n * n) / (n * n),
                                    rel=1e-14)


def test_buhmann_equals_retarded_thin_for_isotropic():
    rng = np.random.default_rng(17)
    for _ in range(50):
        atom = _isotropic_atom(rng)
        n = rng.uniform(1.0, 5.0)
        L = rng.uniform(0.01, 10.0)
        Z = rng.uniform(0.1, 20.0)
        u = buhmann_U(static_polarizability(atom), n, L, Z)
        d = retarded_thin_shift(atom, Slab(n=n, L=L), Z).value
        assert u == pytest.approx(d, rel=1e-12, abs=1e-300)


def test_nonretarded_halfspace_limit():
    # L -> inf: Delta E = -beta (2 mu_perp + mu_par) / (64 pi Z^3)
    n, Z = 2.0, 1.3
    beta = (n * n - 1.0) / (n * n + 1.0)
    expected = -beta * (2.0 * 1.0 + 2.0) / (64.0 * math.pi * Z ** 3)
    for method in ("series", "quadrature"):
        got = nonretarded_shift(ATOM, Slab(n=n, L=math.inf), Z, method=method)
        assert got.value == pytest.approx(expected, rel=1e-10)


def test_nonretarded_transparent():
    for method in ("series", "quadrature"):
        got = nonretarded_shift(ATOM, Slab(n=1.0, L=1.0), 1.0, method=method)
        assert got.value == 0.0


def test_nonretarded_series_equals_quadrature():
    s = nonretarded_shift(ATOM, Slab(n=2.0, L=1.0), 1.0, method="series")
    q = nonretarded_shift(ATOM, Slab(n=2.0, L=1.0), 1.0, method="quadrature")
    assert q.value == pytest.approx(s.value, rel=1e-10)


def test_nonretarded_rejects_unknown_method():
    with pytest.raises(ValueError):
        nonretarded_shift(ATOM, Slab(n=2.0, L=1.0), 1.0, method="fft")


def test_nonretarded_thin_transparent_and_linear():
    assert nonretarded_thin_shift(ATOM, Slab(n=1.0, L=1.0), 1.0).value == 0.0
    full = nonretarded_thin_shift(ATOM, Slab(n=2.0, L=0.02), 1.0).value
    half = nonretarded_thin_shift(ATOM, Slab(n=2.0, L=0.01), 1.0).value
    assert half == pytest.approx(full / 2.0, rel=1e-14)


def test_nonretarded_thin_converges_linearly():
    # the thin form deviates from the exact integral by
    # 2 (1+beta^2)/(1-beta^2) * (L/Z) + O((L/Z)^2); check the linear law
    n, Z = 2.0, 1.0
    beta = (n * n - 1.0) / (n * n + 1.0)
    coeff = 2.0 * (1.0 + beta * beta) / (1.0 - beta * beta)
    devs = []
    for ratio in (1e-2, 1e-3):
        exact = nonretarded_shift(ATOM, Slab(n=n, L=ratio * Z), Z).value
        thin = nonretarded_thin_shift(ATOM, Slab(n=n, L=ratio * Z), Z).value
        devs.append(abs(thin - exact) / abs(exact))
        assert devs[-1] == pytest.approx(coeff * ratio, rel=0.15)
    assert devs[1] == pytest.approx(devs[0] / 10.0, rel=0.15)


def test_full_integral_approaches_retarded_thin():
    # relative deviation falls ~ 1/zeta at fixed lam = 0.5, n = 2
    slab = Slab(n=2.0, L=0.5)
    devs = []
    for Z in (25.0, 50.0, 100.0):
        full = energy_shift(ATOM, slab, Z).value
        thin = retarded_thin_shift(ATOM, slab, Z).value
        devs.append(abs(full - thin) / abs(thin))
    assert devs[0] > devs[1] > devs[2]
    assert devs[1] / devs[0] == pytest.approx(0.5, abs=0.1)
    assert devs[2] / devs[1] == pytest.approx(0.5, abs=0.1)


def test_full_integral_approaches_nonretarded():
    slab = Slab(n=2.0, L=1.0)
    Z = 0.005
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        full = energy_shift(ATOM, slab, Z).value
    nr = nonretarded_shift(ATOM, slab, Z).value
    assert abs(full - nr) / abs(nr) < 0.01
