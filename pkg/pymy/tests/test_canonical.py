import math
import numpy as np
import pytest
import pymy.numerics.canonical as canonical
from pymy.core.util import DomainError
from pymy.numerics.canonical import DepressedCubic


def test_f_canonical_values():
    assert canonical.f_canonical(0.0) == 0.0
    assert canonical.f_canonical(-1.0) == 0.0
    assert canonical.f_canonical(1.0) == 1.0
    assert canonical.f_canonical(-2.0 / 3.0) == pytest.approx(2.0 / 27.0, rel=1e-15)
    assert canonical.f_canonical(1.0 / 3.0) == pytest.approx(2.0 / 27.0, rel=1e-15)


def test_f_derivative_vanishes_at_extrema():
    assert canonical.f_derivative(0.0) == 0.0
    assert canonical.f_derivative(-2.0 / 3.0) == pytest.approx(0.0, abs=1e-15)
    assert canonical.f_derivative(1.0) == 2.5


def test_reflection_symmetry():
    for z in np.linspace(-3.0, 3.0, 61):
        left = canonical.f_canonical(canonical.reflect(z))
        assert left == pytest.approx(2.0 / 27.0 - canonical.f_canonical(z), abs=1e-13 * (1.0 + abs(z) ** 3))


def test_classify_target():
    assert canonical.classify_target(1.0) == canonical.UNIQUE_ABOVE_MAX
    assert canonical.classify_target(-0.5) == canonical.UNIQUE_NEGATIVE
    assert canonical.classify_target(0.05) == canonical.THREE_REAL
    # boundaries carry a double root
    assert canonical.classify_target(0.0) == canonical.THREE_REAL
    assert canonical.classify_target(2.0 / 27.0) == canonical.THREE_REAL
    assert canonical.classify_target(0.05).root_count == 3
    assert canonical.classify_target(1.0).root_count == 1


def test_classify_target_rejects_non_finite():
    with pytest.raises(DomainError):
        canonical.classify_target(float("nan"))
    with pytest.raises(DomainError):
        canonical.classify_target(float("inf"))


def test_depressed_cubic_rejects_non_finite():
    with pytest.raises(DomainError):
        DepressedCubic(float("nan"), 1.0)
    with pytest.raises(DomainError):
        DepressedCubic(1.0, float("-inf"))


def test_xi_sign_convention():
    assert canonical.xi(DepressedCubic(-3.0, 1.0)).value == pytest.approx(-0.5, rel=1e-15)
    assert canonical.xi(DepressedCubic(-3.0, -1.0)).value == pytest.approx(0.5, rel=1e-15)
    assert canonical.xi(DepressedCubic(-3.0, 0.0)).value == 0.0


def test_xi_matches_definition():
    for p, q in [(-1.0, 0.3), (-7.5, -2.0), (-0.02, 1e-4)]:
        expected = (3.0 * q / (2.0 * p)) * math.sqrt(-3.0 / p)
        assert canonical.xi(DepressedCubic(p, q)).value == pytest.approx(expected, rel=1e-14)


def test_xi_log_scale_does_not_overflow():
    value = canonical.xi(DepressedCubic(-1e-200, 1.0)).value
    assert value < 0.0
    assert math.isinf(value) or abs(value) > 1e290
    big = canonical.xi(DepressedCubic(-1e70, 1e104)).value
    assert big == pytest.approx(-math.sqrt(27.0) / 2.0 * 1e104 / 1e105, rel=1e-12)


def test_xi_requires_negative_p():
    with pytest.raises(DomainError):
        canonical.xi(DepressedCubic(0.0, 1.0))
    with pytest.raises(DomainError):
        canonical.xi(DepressedCubic(2.0, 1.0))


def test_transform1():
    cubic = DepressedCubic(-3.0, 1.0)
    reduction = canonical.transform1(cubic)
    assert reduction.t == pytest.approx(1.0 / 54.0, rel=1e-15)
    assert reduction.backmap.kind == canonical.RECIPROCAL
    # z = q / (p y) of a root y solves f(z) = t
    alpha = 1.532088886238
    z = 1.0 / (-3.0 * alpha)
    assert canonical.f_canonical(z) == pytest.approx(reduction.t, abs=1e-11)
    assert reduction.backmap.apply(z) == pytest.approx(alpha, rel=1e-14)


def test_transform1_rejects_zero_coefficients():
    with pytest.raises(DomainError):
        canonical.transform1(DepressedCubic(0.0, 1.0))
    with pytest.raises(DomainError):
        canonical.transform1(DepressedCubic(-1.0, 0.0))


def test_transform2():
    cubic = DepressedCubic(-3.0, 1.0)
    reduction = canonical.transform2(cubic)
    assert reduction.t == pytest.approx((1.0 - 0.5) / 27.0, rel=1e-14)
    assert reduction.backmap.kind == canonical.AFFINE
    assert reduction.backmap.scale == pytest.approx(3.0)
    assert reduction.backmap.offset == pytest.approx(1.0)
    assert reduction.backmap.apply(-1.0 / 3.0) == pytest.approx(0.0, abs=1e-15)


def test_transform2_matches_xi():
    for p, q in [(-1.0, 0.1), (-2.0, -3.0), (-0.5, 10.0)]:
        cubic = DepressedCubic(p, q)
        assert canonical.transform2(cubic).t == pytest.approx((1.0 + canonical.xi(cubic).value) / 27.0, rel=1e-13)


def test_transform2_requires_negative_p():
    with pytest.raises(DomainError):
        canonical.transform2(DepressedCubic(1.0, 1.0))


def test_reciprocal_backmap_undefined_at_zero():
    with pytest.raises(DomainError):
        canonical.Backmap.reciprocal(1.0, 2.0).apply(0.0)


def test_value_types():
    cubic = DepressedCubic(-3.0, 1.0)
    assert cubic == DepressedCubic(-3, 1)
    assert cubic.to_dict() == {"p": -3.0, "q": 1.0}
    assert "DepressedCubic" in repr(cubic)
    assert canonical.Backmap.affine(2.0, 1.0) == canonical.Backmap.affine(2.0, 1.0)
    with pytest.raises(DomainError):
        canonical.Scenario("Other")


@pytest.mark.parametrize("lo,hi,increasing", [
    (-10.0, -2.0 / 3.0, True),
    (-2.0 / 3.0, 0.0, False),
    (0.0, 10.0, True)
])
def test_f_monotonic_between_extrema(lo, hi, increasing):
    values = [canonical.f_canonical(z) for z in np.linspace(lo, hi, 1001)]
    steps = np.diff(values)
    if increasing:
        assert (steps > 0.0).all()
    else:
        assert (steps < 0.0).all()
