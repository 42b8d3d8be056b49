import math

import pytest
from hypothesis import given, settings, strategies as st

from stefan_hbim import DomainError, ProblemParams, SolveControl, eval_quadratic_temperature, free_boundary, solve
from stefan_hbim.hbim import (
    coefficients_heat_balance,
    coefficients_p1,
    coefficients_rim_robin,
    heat_balance_defect,
    residual_for,
    rim_defect,
    robin_defect,
    solve_p1,
    solve_p1h,
    solve_p2,
    solve_p2h,
    solve_p3,
    solve_p3h,
    w1,
    w1h,
    w2,
    w2h,
    w3,
    w3h,
)

ALPHAS = [0.0, 0.5, 1.0, 2.0, 5.0]
STES = [0.1, 0.3, 0.5, 0.7, 0.9]
BIS = [1.0, 10.0, 100.0]


def test_w1_at_origin():
    assert w1(1e-12, 1.0, 0.5) == pytest.approx(4.5, rel=1e-9)
    assert w1(0.0, 1.0, 0.5) == pytest.approx(4.5)


def test_w1_negative_at_one():
    assert w1(1.0, 0.0, 0.5) < 0


def test_w1_near_published_root():
    scale = max(abs(w1(1.0, 0.0, 0.5)), 1.0)
    nu = solve_p1(ProblemParams(0, 0.5)).nu
    assert abs(w1(nu, 0.0, 0.5)) / scale <= 1e-8
    assert nu == pytest.approx(0.4869, abs=1e-4)


@pytest.mark.parametrize("alpha,ste,expected", [(0, 0.5, 0.4869), (0.5, 1.0, 0.5943), (5, 0.1, 0.3563)])
def test_solve_p1(alpha, ste, expected):
    assert solve_p1(ProblemParams(alpha, ste)).nu == pytest.approx(expected, abs=1e-4)


def test_p1_beyond_hypothesis_is_flagged():
    assert "hypothesis_violated" in solve_p1(ProblemParams(0.5, 1.0)).flags
    assert "hypothesis_violated" not in solve_p1(ProblemParams(0.5, 0.9)).flags


def test_p1_reports_only_unit_interval_roots():
    s = solve_p1(ProblemParams(1.0, 0.5))
    assert s.roots == (s.nu,)
    assert s.nu == pytest.approx(0.4608, abs=1e-4)


@pytest.mark.parametrize("alpha,ste,expected", [(0, 0.5, 0.4723), (5, 1.0, 0.4881)])
def test_solve_p2(alpha, ste, expected):
    assert solve_p2(ProblemParams(alpha, ste)).nu == pytest.approx(expected, abs=1e-4)


def test_p2_small_stefan_asymptote():
    ste = 1e-8
    nu = solve_p2(ProblemParams(0, ste)).nu
    assert nu * nu == pytest.approx(ste / 2, rel=1e-2)


@pytest.mark.parametrize("alpha,ste,expected", [(0, 0.5, 0.4804), (0.5, 0.1, 0.2580)])
def test_solve_p3(alpha, ste, expected):
    assert solve_p3(ProblemParams(alpha, ste)).nu == pytest.approx(expected, abs=1e-4)


@settings(max_examples=50, deadline=None)
@given(ste=st.floats(1e-4, 20))
def test_p3_alpha0_closed_form(ste):
    assert solve_p3(ProblemParams(0, ste)).nu == pytest.approx(math.sqrt(3 * ste / (6 + ste)), abs=1e-10)


def test_p1h_examples():
    assert solve_p1h(ProblemParams(0, 0.5, 1)).nu == pytest.approx(0.2966, abs=1e-4)
    assert solve_p1h(ProblemParams(0, 0.5, 1e6)).nu == pytest.approx(solve_p1(ProblemParams(0, 0.5)).nu, abs=1e-5)


def test_p2h_examples():
    assert solve_p2h(ProblemParams(0, 0.5, 10)).nu == pytest.approx(0.4484, abs=1e-4)
    assert solve_p2h(ProblemParams(0.5, 0.5, 100)).nu == pytest.approx(0.4653, abs=1e-4)
    assert solve_p2h(ProblemParams(0, 0.5, 1e6)).nu == pytest.approx(0.4723, abs=1e-4)


def test_p3h_examples():
    assert solve_p3h(ProblemParams(0, 0.5, 1e6)).nu == pytest.approx(0.4804, abs=1e-4)
    # closed form at alpha = 0: 12 z^2 + 2 z^3/Bi + 6 z/Bi + Ste(2 z^2 - 6) = 0
    bi, ste = 10.0, 0.5
    nu = solve_p3h(ProblemParams(0, ste, bi)).nu
    assert 12 * nu ** 2 + 2 * nu ** 3 / bi + 6 * nu / bi + ste * (2 * nu ** 2 - 6) == pytest.approx(0, abs=1e-11)


def test_convective_methods_need_bi():
    for fn in (solve_p1h, solve_p2h, solve_p3h):
        with pytest.raises(DomainError):
            fn(ProblemParams(0, 0.5))


def test_large_bi_residuals_tend_to_fixed_temperature_ones():
    for z in (0.2, 0.5, 0.9):
        assert w1h(z, 1.0, 0.5, 1e12) == pytest.approx(w1(z, 1.0, 0.5), rel=1e-9)
        assert w2h(z, 1.0, 0.5, 1e12) == pytest.approx(w2(z, 1.0, 0.5), rel=1e-9)
        assert w3h(z, 1.0, 0.5, 1e12) == pytest.approx(w3(z, 1.0, 0.5), rel=1e-9)


GRID = [(a, s) for a in ALPHAS for s in STES]


@pytest.mark.parametrize("alpha,ste", GRID)
def test_dirichlet_closure(alpha, ste):
    p = ProblemParams(alpha, ste)
    for s in (solve_p1(p), solve_p2(p), solve_p3(p)):
        assert s.coeff_a + s.coeff_b == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("alpha,ste", GRID)
@pytest.mark.parametrize("bi", [None] + BIS)
def test_stefan_condition_algebra(alpha, ste, bi):
    p = ProblemParams(alpha, ste, bi)
    methods = ("p2", "p3") if bi is None else ("p2h", "p3h")
    for m in methods:
        s = solve(m, p)
        assert s.coeff_a == pytest.approx(2 ** (alpha + 1) * s.nu ** (alpha + 2) / ste, abs=1e-12)
    # this identity holds only at the root, and dA/dnu ~ 1/Ste is large, so pin the root tighter
    s = solve("p1" if bi is None else "p1h", p, SolveControl(abs_tol=1e-15))
    assert s.coeff_a ** 2 == pytest.approx(2 ** (alpha + 1) * s.nu ** alpha / ste * s.coeff_b, abs=1e-10)


@pytest.mark.parametrize("alpha,ste", GRID)
@pytest.mark.parametrize("bi", BIS)
def test_robin_closure(alpha, ste, bi):
    p = ProblemParams(alpha, ste, bi)
    for m in ("p1h", "p2h", "p3h"):
        assert robin_defect(solve(m, p), bi) == pytest.approx(0, abs=1e-12)


@pytest.mark.parametrize("alpha,ste", GRID)
@pytest.mark.parametrize("bi", [None] + BIS)
def test_residual_at_root(alpha, ste, bi):
    p = ProblemParams(alpha, ste, bi)
    names = ("p1", "p2", "p3") if bi is None else ("p1h", "p2h", "p3h")
    for m in names:
        s = solve(m, p)
        w = residual_for(s.method, p)
        assert abs(w(s.nu)) / max(abs(w(1.0)), 1.0) <= 1e-9


@pytest.mark.parametrize("alpha,ste", GRID)
def test_integral_balances_hold_at_their_roots(alpha, ste):
    p = ProblemParams(alpha, ste)
    assert heat_balance_defect(solve_p1(p), alpha, ste) == pytest.approx(0, abs=1e-10)
    assert heat_balance_defect(solve_p2(p), alpha, ste) == pytest.approx(0, abs=1e-10)
    assert rim_defect(solve_p3(p), alpha) == pytest.approx(0, abs=1e-10)
    for bi in BIS:
        q = ProblemParams(alpha, ste, bi)
        assert heat_balance_defect(solve_p1h(q), alpha, ste) == pytest.approx(0, abs=1e-10)
        assert heat_balance_defect(solve_p2h(q), alpha, ste) == pytest.approx(0, abs=1e-10)
        assert rim_defect(solve_p3h(q), alpha) == pytest.approx(0, abs=1e-10)


@pytest.mark.parametrize("alpha,ste", GRID)
def test_alternative_coefficient_forms_agree(alpha, ste):
    p = ProblemParams(alpha, ste)
    s1 = solve_p1(p)
    assert coefficients_p1(s1.nu, alpha, ste) == pytest.approx(coefficients_heat_balance(s1.nu, alpha, ste), abs=1e-12)
    s2 = solve_p2(p)
    assert coefficients_heat_balance(s2.nu, alpha, ste) == pytest.approx((s2.coeff_a, s2.coeff_b), abs=1e-10)
    for bi in BIS:
        q = ProblemParams(alpha, ste, bi)
        s2h = solve_p2h(q)
        assert coefficients_heat_balance(s2h.nu, alpha, ste, bi) == pytest.approx((s2h.coeff_a, s2h.coeff_b), abs=1e-10)
        s3h = solve_p3h(q)
        assert coefficients_rim_robin(s3h.nu, alpha, bi) == pytest.approx((s3h.coeff_a, s3h.coeff_b), abs=1e-10)


@pytest.mark.parametrize("alpha", ALPHAS)
def test_modified_hbim_bi_monotonicity(alpha):
    limit = solve_p2(ProblemParams(alpha, 0.5)).nu
    seq = [solve_p2h(ProblemParams(alpha, 0.5, bi)).nu for bi in (1, 2, 5, 10, 50, 100, 1000)]
    gaps = [abs(v - limit) for v in seq]
    assert all(a < b for a, b in zip(seq, seq[1:]))
    assert all(v < limit for v in seq)
    assert all(a > b for a, b in zip(gaps, gaps[1:]))


@settings(max_examples=60, deadline=None)
@given(alpha=st.floats(0, 6), ste=st.floats(0.01, 0.99), bi=st.floats(0.5, 1e4))
def test_unique_root_methods_single_sign_change(alpha, ste, bi):
    p = ProblemParams(alpha, ste, bi)
    for fn in (solve_p2, solve_p3, solve_p2h, solve_p3h):
        s = fn(p)
        assert len(s.roots) == 1 and s.nu > 0


def test_quadratic_profile_evaluation():
    p = ProblemParams(1.0, 0.5, theta_inf=2.0)
    s = solve_p2(p)
    for t in (0.5, 2.0):
        assert eval_quadratic_temperature(p, s, free_boundary(p, s, t), t) == pytest.approx(0, abs=1e-14)
        assert eval_quadratic_temperature(p, s, 0.0, t) == pytest.approx(2.0 * t ** 0.5, rel=1e-12)


def test_quadratic_profile_convective_face():
    p = ProblemParams(0, 0.5, 10)
    s = solve_p2h(p)
    assert eval_quadratic_temperature(p, s, 0.0, 1.0) == pytest.approx(s.coeff_a + s.coeff_b, rel=1e-14)
    assert robin_defect(s, 10) == pytest.approx(0, abs=1e-10)


def test_quadratic_profile_rejects_bad_input():
    p = ProblemParams(0, 0.5)
    s = solve_p2(p)
    with pytest.raises(DomainError):
        eval_quadratic_temperature(p, s, 5.0, 1.0)
    with pytest.raises(DomainError):
        eval_quadratic_temperature(p, s, 0.0, -1.0)
    with pytest.raises(DomainError):
        eval_quadratic_temperature(p, solve("exact", p), 0.0, 1.0)
