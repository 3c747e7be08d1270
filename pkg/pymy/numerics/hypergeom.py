"""
MY through the Gauss hypergeometric function,

    MY(x) = 1 / (3 F(1/3, 2/3; 1/2; 1 - 27x/2))

The series of F only converges for |z| < 1, and slowly near 1. The argument is routed to whichever of
1 - 27x/2 and its Kummer image 1 - 2/(27x) is smaller in magnitude. This module is a cross check of the
closed form, it refuses x outside a fixed supported window instead of degrading silently.
"""
import math
import logging
import pymy.core.util
from pymy.core.util import DomainError
import pymy.core.appvars
import pymy.numerics.canonical as canonical
import pymy.numerics.closed_form as closed_form

logger = logging.getLogger()

# parameters of the representation of MY
MY_A = 1.0 / 3.0
MY_B = 2.0 / 3.0
MY_C = 0.5


class SeriesConvergenceError(Exception):
    """
    Raised when a series does not reach its tolerance within max_terms terms
    """

    def __init__(self, msg, partial_sum, terms):
        super(SeriesConvergenceError, self).__init__(msg)
        self.partial_sum = partial_sum
        self.terms = terms


class UnsupportedDomainError(DomainError):
    """
    Raised for x outside the window the hypergeometric path supports
    """
    pass


class HypergeometricSpec(object):
    """
    prefactor * F(a, b; c; z) with the series settings used to evaluate it
    """

    def __init__(self, a, b, c, z, max_terms=None, target_tol=None, prefactor=1.0):
        pymy.core.util.check_finite(a=a, b=b, c=c, z=z, prefactor=prefactor)
        if c <= 0.0 and float(c).is_integer():
            raise DomainError("c must not be a nonpositive integer, got {0}".format(c))
        app_vars = pymy.core.appvars.AppVars()
        self.__a = a
        self.__b = b
        self.__c = c
        self.__z = z
        self.__max_terms = app_vars.hyper_max_terms if max_terms is None else max_terms
        self.__target_tol = app_vars.hyper_target_tol if target_tol is None else target_tol
        self.__prefactor = prefactor

    @property
    def a(self):
        return self.__a

    @property
    def b(self):
        return self.__b

    @property
    def c(self):
        return self.__c

    @property
    def z(self):
        return self.__z

    @property
    def max_terms(self):
        return self.__max_terms

    @property
    def target_tol(self):
        return self.__target_tol

    @property
    def prefactor(self):
        return self.__prefactor

    def to_dict(self):
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "z": self.z,
            "max_terms": self.max_terms,
            "target_tol": self.target_tol,
            "prefactor": self.prefactor
        }

    def __repr__(self):
        return '<pymy.numerics.hypergeom.HypergeometricSpec "{0!r} * F({1!r}, {2!r}; {3!r}; {4!r})">'.format(
            self.prefactor, self.a, self.b, self.c, self.z
        )


def _sum_series(spec, n_terms, tol):
    """
    Sums the series with compensation. Stops once a term is below tol times the sum, tol = None never stops early
    :return: (sum, terms used, converged)
    """
    total = pymy.core.util.CompensatedSum()
    term = 1.0
    total.add(term)
    for n in range(1, n_terms):
        k = n - 1
        term *= (spec.a + k) * (spec.b + k) / ((spec.c + k) * n) * spec.z
        total.add(term)
        if tol is not None and abs(term) <= tol * abs(total.value):
            return total.value, total.count, True
    return total.value, total.count, tol is None


def partial_sum(spec, n_terms):
    """
    The sum of the first n_terms terms of the series, no convergence test
    :param spec: a HypergeometricSpec, the prefactor is applied
    :param n_terms: number of terms, >= 1
    :return: the partial sum
    """
    if n_terms < 1:
        raise DomainError("Need at least one term, got {0}".format(n_terms))
    value, _, _ = _sum_series(spec, n_terms, None)
    return spec.prefactor * value


def gauss_2f1_detail(spec):
    """
    Evaluates the series of F(a, b; c; z) for |z| < 1
    :param spec: a HypergeometricSpec
    :exception DomainError: |z| >= 1 or max_terms < 1
    :exception SeriesConvergenceError: tolerance not reached within max_terms
    :return: (prefactor * F, terms used)
    """
    if not abs(spec.z) < 1.0:
        raise DomainError("The series needs |z| < 1, got z = {0}".format(spec.z))
    if spec.max_terms < 1:
        raise DomainError("max_terms must be >= 1, got {0}".format(spec.max_terms))
    value, terms, converged = _sum_series(spec, spec.max_terms, spec.target_tol)
    if not converged:
        raise SeriesConvergenceError(
            "Series for {0} did not converge in {1} terms".format(spec, terms), spec.prefactor * value, terms
        )
    return spec.prefactor * value, terms


def gauss_2f1(spec):
    """
    :return: prefactor * F(a, b; c; z), see gauss_2f1_detail
    """
    return gauss_2f1_detail(spec)[0]


def kummer_transform(spec):
    """
    F(a, b; c; z) = (1 - z)^(-b) F(c - a, b; c; z / (z - 1))
    :param spec: a HypergeometricSpec with z < 1
    :exception DomainError: z >= 1
    :return: the equivalent HypergeometricSpec, its prefactor includes (1 - z)^(-b)
    """
    if not spec.z < 1.0:
        raise DomainError("Kummer's transformation needs z < 1, got {0}".format(spec.z))
    one_minus_z = 1.0 - spec.z
    return HypergeometricSpec(
        spec.c - spec.a,
        spec.b,
        spec.c,
        spec.z / (spec.z - 1.0),
        max_terms=spec.max_terms,
        target_tol=spec.target_tol,
        prefactor=spec.prefactor * math.pow(one_minus_z, -spec.b)
    )


def my_spec(x):
    """
    :param x: x > 0
    :return: the HypergeometricSpec of F(1/3, 2/3; 1/2; 1 - 27x/2)
    """
    return HypergeometricSpec(MY_A, MY_B, MY_C, 1.0 - 27.0 * x / 2.0)


def best_representation(x):
    """
    The representation of F(1/3, 2/3; 1/2; 1 - 27x/2) with the smallest argument, the direct one or its Kummer
    image (27x/2)^(-2/3) F(1/6, 2/3; 1/2; 1 - 2/(27x)). Applying the transformation again returns to the direct
    argument, so these two are all the candidates.
    :param x: x > 0
    :return: a HypergeometricSpec
    """
    direct = my_spec(x)
    image = kummer_transform(direct)
    if abs(image.z) < abs(direct.z):
        return image
    return direct


def my_hyper(x):
    """
    MY(x) = 1 / (3 F) on the supported window. When neither argument is within the reduction threshold, x is
    replaced by sqrt(x/54) + 1/27 and the value mapped back with MY(x) = sqrt(6x) / (3 MY(sqrt(x/54) + 1/27) + 1)
    :param x: 1e-3 <= x <= 1e4
    :exception UnsupportedDomainError: x outside the window
    :exception SeriesConvergenceError: series did not converge
    :return: an EvalResult tagged Hypergeometric, iterations is the number of series terms summed
    """
    pymy.core.util.check_nonneg(x)
    app_vars = pymy.core.appvars.AppVars()
    if x < app_vars.hyper_min_x or x > app_vars.hyper_max_x:
        raise UnsupportedDomainError(
            "The hypergeometric path supports {0} <= x <= {1}, got {2}".format(
                app_vars.hyper_min_x, app_vars.hyper_max_x, x
            )
        )

    reduced = []
    current = x
    spec = best_representation(current)
    while abs(spec.z) > app_vars.hyper_reduce_above and current > canonical.LOCAL_MAX:
        reduced.append(current)
        current = math.sqrt(current / 54.0) + canonical.INFLECTION_F
        spec = best_representation(current)

    f_value, terms = gauss_2f1_detail(spec)
    value = 1.0 / (3.0 * f_value)
    for previous in reversed(reduced):
        value = math.sqrt(6.0 * previous) / (3.0 * value + 1.0)

    logger.debug("my_hyper({0}): {1} reductions, argument {2}, {3} terms".format(x, len(reduced), spec.z, terms))
    return closed_form.EvalResult(x, value, closed_form.HYPERGEOMETRIC, terms, 0.0)
