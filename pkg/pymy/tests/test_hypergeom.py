import math
import pytest
from scipy import special
import pymy.core.util
import pymy.numerics.closed_form as closed_form
import pymy.numerics.hypergeom as hypergeom
from pymy.core.util import DomainError
from pymy.numerics.hypergeom import HypergeometricSpec


def test_gauss_2f1_against_scipy():
    for a, b, c, z in [
        (1.0 / 3.0, 2.0 / 3.0, 0.5, 0.5),
        (1.0 / 6.0, 2.0 / 3.0, 0.5, -0.7),
        (1.0 / 3.0, 2.0 / 3.0, 0.5, 0.95),
        (2.5, -1.5, 3.25, 0.3)
    ]:
        value = hypergeom.gauss_2f1(HypergeometricSpec(a, b, c, z))
        assert value == pytest.approx(special.hyp2f1(a, b, c, z), rel=1e-10)


def test_gauss_2f1_log():
    z = 0.5
    value = hypergeom.gauss_2f1(HypergeometricSpec(1.0, 1.0, 2.0, z))
    assert value == pytest.approx(-math.log(1.0 - z) / z, rel=1e-11)


def test_gauss_2f1_terminating_series():
    # b = -2 leaves a quadratic, 1 + (ab/c) z + (a(a+1) b(b+1) / (c(c+1) 2)) z^2
    value, terms = hypergeom.gauss_2f1_detail(HypergeometricSpec(1.0, -2.0, 1.0, 0.5))
    assert value == pytest.approx(1.0 - 2.0 * 0.5 + 0.25, abs=1e-15)
    assert terms <= 4


def test_gauss_2f1_domain():
    with pytest.raises(DomainError):
        hypergeom.gauss_2f1(HypergeometricSpec(0.5, 0.5, 1.0, 1.0))
    with pytest.raises(DomainError):
        hypergeom.gauss_2f1(HypergeometricSpec(0.5, 0.5, 1.0, -1.5))
    with pytest.raises(DomainError):
        HypergeometricSpec(0.5, 0.5, 0.0, 0.1)
    with pytest.raises(DomainError):
        HypergeometricSpec(0.5, 0.5, -2.0, 0.1)


def test_series_convergence_error():
    spec = HypergeometricSpec(1.0 / 3.0, 2.0 / 3.0, 0.5, 0.9, max_terms=5)
    with pytest.raises(hypergeom.SeriesConvergenceError) as info:
        hypergeom.gauss_2f1(spec)
    assert info.value.terms == 5
    assert info.value.partial_sum == pytest.approx(hypergeom.partial_sum(spec, 5))


def test_partial_sums_grow_towards_one():
    # c - a - b < 0, F diverges as z -> 1-
    spec = hypergeom.my_spec(1e-7)
    sums = [hypergeom.partial_sum(spec, n) for n in (10, 100, 1000, 10000)]
    assert all(b > a for a, b in zip(sums, sums[1:]))
    with pytest.raises(DomainError):
        hypergeom.partial_sum(spec, 0)


def test_kummer_transform_preserves_value():
    spec = HypergeometricSpec(1.0 / 3.0, 2.0 / 3.0, 0.5, -0.5)
    image = hypergeom.kummer_transform(spec)
    assert image.z == pytest.approx(1.0 / 3.0)
    assert image.a == pytest.approx(1.0 / 6.0)
    assert hypergeom.gauss_2f1(image) == pytest.approx(hypergeom.gauss_2f1(spec), rel=1e-11)
    with pytest.raises(DomainError):
        hypergeom.kummer_transform(HypergeometricSpec(0.5, 0.5, 1.0, 1.0))


def test_best_representation():
    direct = hypergeom.best_representation(0.05)
    assert direct.z == pytest.approx(1.0 - 27.0 * 0.05 / 2.0)
    assert direct.prefactor == 1.0
    image = hypergeom.best_representation(1000.0)
    assert image.z == pytest.approx(1.0 - 2.0 / 27000.0)
    assert image.prefactor == pytest.approx((27000.0 / 2.0) ** (-2.0 / 3.0))


def test_my_hyper_matches_closed_form():
    for x in pymy.core.util.log_grid(1e-3, 1e4, 60):
        result = hypergeom.my_hyper(x)
        assert result.method == closed_form.HYPERGEOMETRIC
        assert result.iterations >= 1
        assert result.value == pytest.approx(closed_form.my_value(x), rel=1e-9)


def test_my_hyper_known_values():
    assert hypergeom.my_hyper(0.05).value == pytest.approx(0.27955689, abs=1e-8)
    assert hypergeom.my_hyper(1000.0).value == pytest.approx(12.27454062005818, rel=1e-9)


def test_my_hyper_window():
    for x in [0.0, 1e-4, 2e4]:
        with pytest.raises(hypergeom.UnsupportedDomainError):
            hypergeom.my_hyper(x)
    # still a domain error for callers that only know the base class
    with pytest.raises(DomainError):
        hypergeom.my_hyper(1e5)
