import pytest
import pymy.numerics.solver as solver
import pymy.app.verify
from pymy.core.util import DomainError
from pymy.numerics.canonical import DepressedCubic
from pymy.numerics.solver import GeneralCubic

ALPHA = 1.532088886238
BETA = 0.347296355334
GAMMA = -1.879385241572


def test_three_real_roots():
    result = solver.solve_depressed(DepressedCubic(-3.0, 1.0))
    assert result.kind == solver.THREE_REAL
    assert result.case == 4
    assert result.roots == [pytest.approx(GAMMA, abs=1e-12), pytest.approx(BETA, abs=1e-12),
                            pytest.approx(ALPHA, abs=1e-12)]
    assert result.method_detail["labels"] == ["gamma", "beta", "alpha"]
    assert result.method_detail["transformation"] == solver.TRANSFORMATION_2
    assert result.double_flags == [False, False, False]


def test_case_2():
    result = solver.solve_depressed(DepressedCubic(1.0, 1.0))
    assert result.kind == solver.ONE_REAL
    assert result.case == 2
    assert result.roots == [pytest.approx(-0.682327803828019, abs=1e-13)]
    assert result.method_detail["labels"] == ["alpha"]


def test_case_1():
    result = solver.solve_depressed(DepressedCubic(0.0, 8.0))
    assert result.case == 1
    assert result.roots == [pytest.approx(-2.0, rel=1e-15)]
    assert solver.solve_depressed(DepressedCubic(0.0, 0.0)).roots == [0.0]


def test_case_3():
    cubic = DepressedCubic(-3.0, 5.0)
    result = solver.solve_depressed(cubic)
    assert result.case == 3
    assert result.kind == solver.ONE_REAL
    assert abs(cubic.evaluate(result.roots[0])) <= 1e-13 * cubic.residual_scale(result.roots[0])
    via_t2, via_t1 = solver.case3_root(cubic)
    assert via_t2 == pytest.approx(via_t1, rel=1e-12)
    assert via_t2 == pytest.approx(result.roots[0], rel=1e-15)
    # positive root for xi > 1
    assert solver.solve_depressed(DepressedCubic(-3.0, -5.0)).roots[0] > 0.0


def test_case3_root_domain():
    with pytest.raises(DomainError):
        solver.case3_root(DepressedCubic(-3.0, 1.0))
    with pytest.raises(DomainError):
        solver.case3_root(DepressedCubic(3.0, 1.0))


def test_double_roots():
    # (y - 1)^2 (y + 2)
    low = solver.solve_depressed(DepressedCubic(-3.0, 2.0))
    assert low.roots == [pytest.approx(-2.0, abs=1e-12), pytest.approx(1.0, abs=1e-7), pytest.approx(1.0, abs=1e-7)]
    assert low.double_flags == [False, True, True]
    # (y + 1)^2 (y - 2)
    high = solver.solve_depressed(DepressedCubic(-3.0, -2.0))
    assert high.roots == [pytest.approx(-1.0, abs=1e-7), pytest.approx(-1.0, abs=1e-7), pytest.approx(2.0, abs=1e-12)]
    assert high.double_flags == [True, True, False]


def test_symmetric_roots():
    result = solver.solve_depressed(DepressedCubic(-4.0, 0.0))
    assert result.roots == [pytest.approx(-2.0, rel=1e-14), 0.0, pytest.approx(2.0, rel=1e-14)]


def test_small_xi_middle_root():
    cubic = DepressedCubic(-3.0, 1e-9)
    result = solver.solve_depressed(cubic)
    # the middle root is close to -q / p
    assert result.roots[1] == pytest.approx(1e-9 / 3.0, rel=1e-6)


def test_extreme_coefficients():
    assert solver.solve_depressed(DepressedCubic(-1e-200, 1.0)).roots == [pytest.approx(-1.0, rel=1e-12)]
    assert solver.solve_depressed(DepressedCubic(1e-10, 1.0)).roots == [pytest.approx(-1.0, rel=1e-9)]
    big = solver.solve_depressed(DepressedCubic(1e6, 1e6))
    assert big.roots[0] == pytest.approx(-1.0, rel=1e-5)


def test_random_cubics_residuals_and_vieta():
    for p, q in pymy.app.verify.random_cubics(300, 7):
        cubic = DepressedCubic(p, q)
        result = solver.solve_depressed(cubic)
        assert max(result.relative_residuals()) <= 1e-10
        assert result.roots == sorted(result.roots)
        if result.kind == solver.THREE_REAL:
            gamma, beta, alpha = result.roots
            scale = abs(alpha) + abs(beta) + abs(gamma)
            assert abs(alpha + beta + gamma) <= 1e-9 * scale


def test_viete_cross_check():
    cubic = DepressedCubic(-3.0, 1.0)
    t0, t1, t2 = solver.viete_trig_roots(cubic)
    assert (t0, t1, t2) == (pytest.approx(ALPHA, abs=1e-12), pytest.approx(BETA, abs=1e-12),
                            pytest.approx(GAMMA, abs=1e-12))
    viete = solver.solve_depressed_viete(cubic)
    assert viete.method_detail["transformation"] == solver.VIETE
    with pytest.raises(DomainError):
        solver.solve_depressed_viete(DepressedCubic(1.0, 1.0))


def test_transformations_label_roots_differently():
    alpha, beta, gamma = solver.roots_transform2(DepressedCubic(-3.0, 1.0))
    assert (alpha, beta, gamma) == (pytest.approx(ALPHA, abs=1e-12), pytest.approx(BETA, abs=1e-12),
                                    pytest.approx(GAMMA, abs=1e-12))
    alpha_p, beta_p, gamma_p = solver.roots_transform1(DepressedCubic(-3.0, 1.0))
    assert (alpha_p, beta_p, gamma_p) == (pytest.approx(GAMMA, abs=1e-11), pytest.approx(ALPHA, abs=1e-11),
                                          pytest.approx(BETA, abs=1e-11))
    # q < 0 mirrors the roots
    alpha_p, beta_p, gamma_p = solver.roots_transform1(DepressedCubic(-3.0, -1.0))
    assert (alpha_p, beta_p, gamma_p) == (pytest.approx(-GAMMA, abs=1e-11), pytest.approx(-ALPHA, abs=1e-11),
                                          pytest.approx(-BETA, abs=1e-11))
    with pytest.raises(DomainError):
        solver.roots_transform1(DepressedCubic(-3.0, 0.0))
    with pytest.raises(DomainError):
        solver.roots_transform2(DepressedCubic(-3.0, 5.0))


def test_iterative_roots_converge():
    cubic = DepressedCubic(-3.0, 1.0)
    errors = []
    for n in range(6):
        result = solver.solve_depressed_iterative(cubic, n)
        assert result.method_detail["evaluator"] == "fixed:{0}".format(n)
        errors.append(abs(result.roots[2] - ALPHA))
    assert errors[0] == pytest.approx(2.41e-3, rel=1e-2)
    assert all(b < a for a, b in zip(errors, errors[1:]))
    with pytest.raises(DomainError):
        solver.solve_depressed_iterative(cubic, 65)


def test_general_cubic():
    result = solver.solve_general(GeneralCubic(1.0, -6.0, 11.0, -6.0))
    assert result.roots == [pytest.approx(1.0, abs=1e-12), pytest.approx(2.0, abs=1e-12),
                            pytest.approx(3.0, abs=1e-12)]
    single = solver.solve_general(GeneralCubic(2.0, 0.0, 0.0, -16.0))
    assert single.roots == [pytest.approx(2.0, rel=1e-14)]
    iterative = solver.solve_general(GeneralCubic(1.0, -6.0, 11.0, -6.0), 5)
    assert iterative.roots[0] == pytest.approx(1.0, abs=1e-9)


def test_general_cubic_domain():
    with pytest.raises(DomainError):
        GeneralCubic(0.0, 1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        GeneralCubic(1.0, float("nan"), 1.0, 1.0)


def test_general_cubic_depressed():
    cubic = GeneralCubic(1.0, -6.0, 11.0, -6.0)
    depressed = cubic.depressed()
    assert depressed.p == pytest.approx(-1.0)
    assert depressed.q == pytest.approx(0.0, abs=1e-14)
    assert cubic.shift == pytest.approx(-2.0)


def test_discriminant():
    assert solver.discriminant(DepressedCubic(-3.0, 1.0)) == pytest.approx(81.0)
    assert solver.discriminant(DepressedCubic(-3.0, 2.0)) == pytest.approx(0.0)
    assert solver.discriminant(DepressedCubic(1.0, 1.0)) < 0.0


def test_refine_newton():
    cubic = DepressedCubic(-3.0, 1.0)
    rough = solver.solve_depressed_iterative(cubic, 1)
    refined = solver.refine_newton(cubic, rough)
    assert refined.method_detail["refined"] is True
    for before, after in zip(rough.residuals(), refined.residuals()):
        assert after < before


def test_discriminant_sign_matches_root_kind():
    for p, q in pymy.app.verify.random_cubics(300, 7):
        cubic = DepressedCubic(p, q)
        three_real = solver.solve_depressed(cubic).kind == solver.THREE_REAL
        assert three_real == (solver.discriminant(cubic) > 0.0)
    double = solver.solve_depressed(DepressedCubic(-3.0, 2.0))
    assert solver.discriminant(double.cubic) == pytest.approx(0.0)
    assert any(double.double_flags)


def test_reductions_agree_on_random_instances():
    checked = 0
    for p, q in pymy.app.verify.random_cubics(400, 5):
        cubic = DepressedCubic(-abs(p), q)
        if solver.solve_depressed(cubic).kind != solver.THREE_REAL:
            continue
        alpha, beta, gamma = solver.roots_transform2(cubic)
        primed = solver.roots_transform1(cubic)
        tol = 1e-10 * max(1.0, abs(alpha) + abs(beta) + abs(gamma))
        assert sorted(primed) == [pytest.approx(r, abs=tol) for r in sorted((alpha, beta, gamma))]
        # label mapping depends on the sign of q only
        expected = (gamma, alpha, beta) if q > 0.0 else (alpha, gamma, beta)
        assert list(primed) == [pytest.approx(r, abs=tol) for r in expected]
        checked += 1
    assert checked > 50
