import math
import pytest
import pymy.core.util
import pymy.numerics.canonical as canonical
import pymy.numerics.closed_form as closed_form
import pymy.numerics.oracle as oracle
import pymy.app.verify
from pymy.core.util import DomainError


def test_my_bisect_agrees_with_closed_form():
    for x in pymy.core.util.log_grid(1e-6, 1e6, 100):
        z = closed_form.my_value(x)
        assert oracle.my_bisect(x, 1e-14) == pytest.approx(z, abs=1e-13 * max(1.0, z))


def test_my_bisect_known_values():
    assert oracle.my_bisect(0.0, 1e-13) == 0.0
    assert oracle.my_bisect(1000.0, 1e-13) == pytest.approx(12.27454062005818, abs=1e-12)
    assert oracle.my_bisect(0.05, 1e-13) == pytest.approx(0.27955689, abs=1e-8)


def test_my_oracle():
    result = oracle.my_oracle(2.0, 1e-12)
    assert result.method == closed_form.ORACLE
    assert 0.0 < result.error_bound <= 0.5e-12
    assert abs(result.value - closed_form.my_value(2.0)) <= result.error_bound + 1e-15
    default = oracle.my_oracle(2.0)
    assert default.error_bound <= 0.5e-13
    assert oracle.my_oracle(0.0).value == 0.0


def test_tolerance_floor():
    with pytest.raises(DomainError):
        oracle.my_bisect(1.0, 1e-16)
    with pytest.raises(DomainError):
        oracle.my_oracle(1.0, 0.0)
    with pytest.raises(DomainError):
        oracle.my_bisect(-1.0, 1e-13)


def test_upper_bracket_encloses_root():
    for x in [1e-9, 0.5, 1.0, 30.0, 1e9]:
        bracket = oracle.Bracket(0.0, oracle.upper_bracket(x), x)
        assert bracket.brackets_target()
        assert closed_form.my_value(x) < bracket.hi


def test_bracket():
    with pytest.raises(DomainError):
        oracle.Bracket(1.0, 1.0, 0.5)
    decreasing = oracle.Bracket(-2.0 / 3.0, 0.0, 0.05, increasing=False)
    assert decreasing.brackets_target()
    assert decreasing.width == pytest.approx(2.0 / 3.0)
    assert not oracle.Bracket(0.0, 1.0, 5.0).brackets_target()


def test_bisect_stops_at_tolerance():
    # f(1) = 1
    root, width = oracle.bisect(oracle.Bracket(0.0, 2.0, 1.0), 1e-6)
    assert width <= 1e-6
    assert abs(root - 1.0) <= 1e-6


def test_canonical_roots_bisect_three_real():
    found = oracle.canonical_roots_bisect(0.05, 1e-14)
    assert found.scenario == canonical.THREE_REAL
    assert found.roots == [
        pytest.approx(-0.86695132, abs=1e-8), pytest.approx(-0.41260557, abs=1e-8), pytest.approx(0.27955689, abs=1e-8)
    ]
    closed = closed_form.canonical_roots(0.05)
    for a, b in zip(found.roots, closed.roots):
        assert a == pytest.approx(b, abs=1e-12)


def test_canonical_roots_bisect_single():
    negative = oracle.canonical_roots_bisect(-3.0, 1e-14)
    assert len(negative) == 1
    assert negative.z1 == pytest.approx(closed_form.canonical_roots(-3.0).z1, abs=1e-12)
    above = oracle.canonical_roots_bisect(4.0, 1e-14)
    assert len(above) == 1
    assert above.z1 == pytest.approx(closed_form.my_value(4.0), abs=1e-12)


def test_canonical_roots_bisect_double_roots():
    found = oracle.canonical_roots_bisect(0.0, 1e-14)
    assert found.double_flags == [False, True, True]
    assert found.roots[0] == pytest.approx(-1.0, abs=1e-12)


def test_my_bisect_near_float_max():
    z = oracle.my_bisect(1e308, 1e-15)
    assert math.isfinite(z)
    assert z == pytest.approx(closed_form.my_value(1e308), rel=1e-13)
    assert oracle.upper_bracket(1e308) > z


def test_my_oracle_residual_within_bracket():
    for x in pymy.app.verify.random_targets(200, 11, 1e-6, 1e6):
        result = oracle.my_oracle(x, 1e-13)
        width = max(1e-13, 2.0 * result.error_bound)
        slope = max(1.0, canonical.f_derivative(result.value + width))
        assert result.residual() <= 2.0 * width * slope + 1e-15 * x


def test_bisection_is_deterministic():
    for x in pymy.app.verify.random_targets(50, 12, 1e-6, 1e6):
        assert oracle.my_bisect(x, 1e-13) == oracle.my_bisect(x, 1e-13)
        assert oracle.my_oracle(x).to_dict() == oracle.my_oracle(x).to_dict()
