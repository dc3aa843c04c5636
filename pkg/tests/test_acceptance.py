"""Acceptance gate: the eleven binding criteria, one test each.

Every criterion records its outcome in CRITERION_RESULTS; the conftest
terminal-summary hook prints one PASS/FAIL line per criterion at the
end of the run, immune to output capture."""

import math
import warnings
from contextlib import contextmanager
from itertools import permutations
from math import factorial

from test_derivpoly import FD_TIMES, _fd_oracle

from logistic_horizon import (
    FIRST_LOCAL_MAX,
    LAST_LOCAL_MAX_BEFORE_DECLINE,
    GenSpec,
    LogisticParams,
    RiccatiParams,
    benchmark_estimators,
    build_poly,
    characteristic_level,
    count_ascents,
    cumulate,
    estimate_nlls,
    estimate_scd,
    estimate_sld,
    eulerian_explicit,
    eulerian_row,
    eval_poly,
    find_characteristic_point,
    fit_logistic_nlls,
    fit_polynomial_lsm,
    generate,
    get_fixture,
    logistic_nth_derivative,
    poly_roots,
    polyfit_estimate,
    resolve_constant,
    riccati_nth_derivative,
    second_central_diff,
)


CRITERION_RESULTS = []


@contextmanager
def _criterion(num, label):
    try:
        yield
    except BaseException:
        CRITERION_RESULTS.append((num, label, False))
        raise
    CRITERION_RESULTS.append((num, label, True))


KNOWN_ROWS = {
    0: (1,),
    1: (1, 0),
    2: (1, 1, 0),
    3: (1, 4, 1, 0),
    4: (1, 11, 11, 1, 0),
    5: (1, 26, 66, 26, 1, 0),
    6: (1, 57, 302, 302, 57, 1, 0),
    7: (1, 120, 1191, 2416, 1191, 120, 1, 0),
}


def test_criterion_01_eulerian_triangle():
    with _criterion(1, "Eulerian triangle vs known rows and counting oracles"):
        for n, row in KNOWN_ROWS.items():
            assert tuple(eulerian_row(n)) == row
        for n in range(21):
            assert sum(eulerian_row(n)) == factorial(n)
        for n in range(13):
            row = eulerian_row(n)
            for k in range(n + 1):
                assert eulerian_explicit(n, k) == row[k]
        for n in range(1, 9):
            counted = [0] * (n + 1)
            for perm in permutations(range(1, n + 1)):
                counted[count_ascents(perm)] += 1
            assert counted == eulerian_row(n)


def test_criterion_02_characteristic_levels():
    with _criterion(2, "characteristic levels vs closed forms and 3-digit constants"):
        assert characteristic_level(2) == 0.5
        closed = {
            3: 0.5 - math.sqrt(3.0) / 6.0,
            4: 0.5 - math.sqrt(6.0) / 6.0,
            5: 0.5 - math.sqrt(30.0 * (15.0 + math.sqrt(105.0))) / 60.0,
        }
        printed_10 = {3: 0.2113248654, 4: 0.0917517095}
        for n, want in closed.items():
            level = characteristic_level(n)
            assert abs(level - want) <= 1e-9
            if n in printed_10:
                assert abs(level - printed_10[n]) <= 1e-9
        assert resolve_constant(3, "paper-rounded") == 0.211
        assert resolve_constant(4, "paper-rounded") == 0.0917
        assert resolve_constant(5, "paper-rounded") == 0.0413


def _poly_derivative(coeffs):
    return tuple(i * c for i, c in enumerate(coeffs))[1:]


def _poly_multiply(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return tuple(out)


def test_criterion_03_polynomial_structure():
    with _criterion(3, "derivative-polynomial recurrence, symmetry, leading term"):
        p2 = build_poly(1).monomial_coeffs
        for n in range(1, 13):
            cur = build_poly(n).monomial_coeffs
            nxt = build_poly(n + 1).monomial_coeffs
            chained = _poly_multiply(_poly_derivative(cur), p2)
            assert chained == nxt
            assert cur[-1] == (-1) ** n * factorial(n)
        for m in range(2, 14):
            poly = build_poly(m - 1)
            for j in range(100):
                x = -0.6 + 1.2 * j / 99.0
                left = eval_poly(poly, 0.5 + x)
                right = (-1.0) ** m * eval_poly(poly, 0.5 - x)
                assert abs(left - right) <= 1e-10 * max(1.0, abs(left))


def test_criterion_04_derivative_formula_vs_finite_differences():
    with _criterion(4, "closed-form derivatives vs repeated central differences"):
        lp = LogisticParams(7.0, 17.0, 1.5)
        assert len(FD_TIMES) == 20
        for n in range(1, 6):
            for t in FD_TIMES:
                want = _fd_oracle(7.0, 17.0, 1.5, n, t)
                got = logistic_nth_derivative(lp, n, t)
                assert abs(got - want) <= 1e-4 * max(abs(want), 1e-12)


def test_criterion_05_loyalty_window():
    with _criterion(5, "loyalty-window second differences and division estimates"):
        window = get_fixture("loyalty-tnlc-window").series
        ds = second_central_diff(window)
        point = find_characteristic_point(ds, FIRST_LOCAL_MAX)
        assert point.index == 3
        assert point.series_value == 100776.0
        scd = estimate_scd(window, constant_mode="paper-rounded")
        sld = estimate_sld(window, constant_mode="paper-rounded")
        assert math.trunc(scd.u_max_hat) == 477611
        assert math.trunc(sld.u_max_hat) == 501085
        stated = (-556.0, -412.0, 358.0, 291.5, -74.5, -259.5, -9.5, -588.5)
        assert ds.values[1:-1] == stated


def test_criterion_06_polynomial_fit_estimate():
    with _criterion(6, "quartic-trend fit coefficients and estimate on the loyalty window"):
        window = get_fixture("loyalty-tnlc-window").series
        fit = fit_polynomial_lsm(window, 4)
        stated_ascending = (85584.0, 5610.1, -206.23, 30.515, -1.6807)
        for got, want in zip(fit.coefficients, stated_ascending):
            assert abs(got - want) <= 0.005 * abs(want)
        est = polyfit_estimate(window, constant_mode="paper-rounded")
        assert abs(est.u_max_hat - 514647.0) <= 0.01 * 514647.0


def test_criterion_07_mobile_diffusion():
    with _criterion(7, "mobile-diffusion estimates for both countries"):
        germany = get_fixture("mobile-germany").series
        de_scd = second_central_diff(germany)
        head = tuple(round(v, 12) for v in de_scd.values[1:6])
        assert head == (0.005, 0.02, 0.02, 0.095, -0.105)
        de_point = find_characteristic_point(de_scd, FIRST_LOCAL_MAX)
        assert germany.labels[de_point.index] == "1999"
        assert de_point.series_value == 0.28
        de_est = estimate_scd(germany, constant_mode="paper-rounded")
        assert abs(de_est.u_max_hat - 1.327) <= 0.001

        slovakia = get_fixture("mobile-slovakia").series
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            sk_est = estimate_scd(slovakia, constant_mode="paper-rounded")
        sk_point = sk_est.char_point
        assert slovakia.labels[sk_point.index] == "1999"
        assert sk_point.series_value == 0.12
        assert abs(sk_est.u_max_hat - 0.569) <= 0.001
        rival_indices = [i for i, _ in sk_point.ambiguity]
        year_2000 = slovakia.labels.index("2000")
        assert year_2000 in rival_indices
        assert slovakia.values[year_2000] == 0.23
        rival_estimate = slovakia.values[year_2000] / 0.211
        assert abs(rival_estimate - 1.090) <= 0.001


def test_criterion_08_medical_devices():
    with _criterion(8, "medical-device series: decline policy vs default policy"):
        raw = get_fixture("medical-qmd").series
        levels = cumulate(raw)
        assert levels.labels[5] == "11/09"
        assert levels.values[5] == 92.0
        est = estimate_sld(
            levels, constant_mode="paper-rounded", policy=LAST_LOCAL_MAX_BEFORE_DECLINE
        )
        assert math.trunc(est.u_max_hat) == 436
        with warnings.catch_warnings():
            # the early detection deliberately undershoots; the warning is the feature
            warnings.simplefilter("ignore", RuntimeWarning)
            first = estimate_sld(levels, constant_mode="paper-rounded", policy=FIRST_LOCAL_MAX)
        assert first.char_point.index < est.char_point.index


def test_criterion_09_nlls_round_trip():
    with _criterion(9, "logistic fit round trip, clean and noisy"):
        clean = generate(GenSpec(params=LogisticParams(7.0, 17.0, 1.5), n_points=21, t_step=0.5))
        params, rmse = fit_logistic_nlls(clean)
        assert abs(params.u_max - 7.0) <= 1e-6 * 7.0
        assert abs(params.a - 17.0) <= 1e-6 * 17.0
        assert abs(params.c / 0.5 - 1.5) <= 1e-6 * 1.5
        noisy = generate(
            GenSpec(
                params=LogisticParams(7.0, 17.0, 1.5),
                n_points=21,
                t_step=0.5,
                noise_sd=0.05,
                seed=42,
            )
        )
        est = estimate_nlls(noisy)
        assert abs(est.u_max_hat - 7.0) / 7.0 < 0.05


def test_criterion_10_root_scaling():
    with _criterion(10, "derivative zeros scale with the saturation level"):
        for u_max in (1.0, 7.0, 1000.0):
            rate = -1.3 / u_max
            params = RiccatiParams(rate, 0.0, u_max)
            for n in range(2, 6):
                scale = abs(rate) ** n * u_max ** (n + 1) * max(eulerian_row(n - 1))
                for root in poly_roots(n):
                    residual = riccati_nth_derivative(params, n, u_max * root)
                    assert abs(residual) <= 1e-9 * scale


def test_criterion_11_benchmark_harness():
    with _criterion(11, "benchmark harness: truncation behavior and determinism"):
        specs = [GenSpec(params=LogisticParams(1000.0, 200.0, 0.4), n_points=41)]
        first = benchmark_estimators(specs, [9, 13])
        second = benchmark_estimators(specs, [9, 13])
        assert first == second
        rows = {(r["truncation"], r["method"]): r for r in first}
        assert rows[(9, "scd")]["status"] == "not-found"
        ok = rows[(13, "scd")]
        assert ok["status"] == "ok"
        assert ok["rel_error"] < 0.05
