"""
Closed form evaluation of MY, the inverse of f(z) = (z^3 + z^2) / 2 on the nonnegative reals, and everything
built directly on it: the alternative radical form, the derivative and a primitive, power function bounds and
the roots of the canonical equation f(z) = x.

With u = x - 1/27:
    x >= 2/27   MY(x) = -1/3 + cbrt(u + sqrt(u^2 - 1/27^2)) + cbrt(u - sqrt(u^2 - 1/27^2))
    x < 2/27    MY(x) = -1/3 + (2/3) cos(arccos(27 u) / 3)
"""
import sys
import math
import logging
import pymy.core.util
from pymy.core.util import DomainError
import pymy.core.appvars
import pymy.numerics.canonical as canonical

logger = logging.getLogger()

# evaluation methods
CLOSED_RADICAL = "ClosedRadical"
CLOSED_TRIG = "ClosedTrig"
FIXED_POINT = "FixedPoint"
HYPERGEOMETRIC = "Hypergeometric"
ORACLE = "Oracle"

METHODS = (CLOSED_RADICAL, CLOSED_TRIG, FIXED_POINT, HYPERGEOMETRIC, ORACLE)

_ONE_THIRD = 1.0 / 3.0
_SQRT3 = math.sqrt(3.0)
# arguments of MY in the inversion identity kept in this range
_INVERSION_RANGE = (1e-300, 1e300)


class EvalResult(object):
    """
    A value of MY with the method that produced it. error_bound is a certified absolute bound on
    |value - MY(x)|, or 0 meaning machine precision (closed forms).
    """

    def __init__(self, x, value, method, iterations=0, error_bound=0.0):
        if method not in METHODS:
            raise DomainError("Unknown evaluation method {0}".format(method))
        self.__x = x
        self.__value = value
        self.__method = method
        self.__iterations = iterations
        self.__error_bound = error_bound

    @property
    def x(self):
        return self.__x

    @property
    def value(self):
        return self.__value

    @property
    def method(self):
        return self.__method

    @property
    def iterations(self):
        return self.__iterations

    @property
    def error_bound(self):
        return self.__error_bound

    def residual(self):
        """:return: |f(value) - x|"""
        return abs(canonical.f_canonical(self.value) - self.x)

    def to_dict(self):
        return {
            "x": self.x,
            "value": self.value,
            "method": self.method,
            "iterations": self.iterations,
            "error_bound": self.error_bound
        }

    def __float__(self):
        return float(self.value)

    def __eq__(self, other):
        return isinstance(other, EvalResult) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<pymy.numerics.closed_form.EvalResult "MY({0!r}) = {1!r} ({2})">'.format(
            self.x, self.value, self.method
        )


class CanonicalRoots(object):
    """
    The real roots of f(z) = x in ascending order, with a flag per root telling if it is a double root.
    In the ThreeReal scenario the roots are z2 <= z3 <= z1 with z2, z3 <= 0 <= z1 and z1 + z2 + z3 = -1.
    """

    def __init__(self, x, scenario, roots, double_flags=None):
        self.__x = x
        self.__scenario = scenario
        self.__roots = list(roots)
        if double_flags is None:
            double_flags = [False] * len(self.__roots)
        self.__double_flags = list(double_flags)

    @property
    def x(self):
        return self.__x

    @property
    def scenario(self):
        return self.__scenario

    @property
    def roots(self):
        """ascending list of the real roots"""
        return list(self.__roots)

    @property
    def double_flags(self):
        return list(self.__double_flags)

    @property
    def z1(self):
        """the root MY(x) for x >= 0, the single root otherwise"""
        return self.__roots[-1]

    @property
    def z2(self):
        """the smallest root, -2/3 - MY(2/27 - x), when there are three"""
        self._check_three()
        return self.__roots[0]

    @property
    def z3(self):
        """the middle root, MY(2/27 - x) - MY(x) - 1/3, when there are three"""
        self._check_three()
        return self.__roots[1]

    def _check_three(self):
        if len(self.__roots) != 3:
            raise DomainError("Scenario {0} has a single root".format(self.scenario))

    def to_dict(self):
        return {
            "x": self.x,
            "scenario": self.scenario.kind,
            "roots": self.roots,
            "double": self.double_flags
        }

    def __len__(self):
        return len(self.__roots)

    def __iter__(self):
        return iter(self.roots)

    def __repr__(self):
        return '<pymy.numerics.closed_form.CanonicalRoots "{0}: {1}">'.format(self.scenario, self.roots)


def _my_radical(x):
    """
    Radical branch, x >= 2/27. Uses that the two cube roots multiply to 1/9, so the second one is computed from
    the first instead of from u - sqrt(u^2 - 1/27^2), which cancels badly for large x
    """
    app_vars = pymy.core.appvars.AppVars()
    gap = x - canonical.LOCAL_MAX
    if gap < 0.0:
        # last ulp rounding at the seam
        if abs(gap * x) < app_vars.seam_guard * x * x:
            gap = 0.0
        else:
            raise DomainError("Radical branch needs x >= 2/27, got {0}".format(x))
    if x > app_vars.scaled_radicand_above:
        # cbrt(x) cbrt(1 - 1/(27x) + sqrt(1 - 2/(27x))), u + sqrt(...) is about 2x and overflows
        a = pymy.core.util.real_cbrt(x) * pymy.core.util.real_cbrt(
            1.0 - canonical.INFLECTION_F / x + math.sqrt(gap / x)
        )
        return -_ONE_THIRD + a + 1.0 / (9.0 * a)
    # sqrt(x (x - 2/27)) taken as a product of roots so x^2 never overflows
    root_disc = math.sqrt(x) * math.sqrt(gap)
    u = x - canonical.INFLECTION_F
    a = pymy.core.util.real_cbrt(u + root_disc)
    return -_ONE_THIRD + a + 1.0 / (9.0 * a)


def _my_trig(x):
    """
    Trigonometric branch, 0 <= x < 2/27. Same function as -1/3 + (2/3) cos(arccos(27u) / 3), rewritten with
    arccos(27x - 1) = pi - 2 arcsin(sqrt(27x / 2)) so that small x keeps full relative precision:
        phi = (2/3) arcsin(sqrt(27x / 2)),    MY(x) = sin(phi) / sqrt(3) - (2/3) sin^2(phi / 2)
    """
    ratio = pymy.core.util.clamp(27.0 * x / 2.0, 0.0, 1.0)
    phi = (2.0 / 3.0) * math.asin(math.sqrt(ratio))
    half = math.sin(phi / 2.0)
    return math.sin(phi) / _SQRT3 - (2.0 / 3.0) * half * half


def my_trig_arccos(x):
    """
    The arccos form of the trigonometric branch exactly as written, -1/3 + (2/3) cos(arccos(27u) / 3).
    Loses relative precision for tiny x, kept as a reference for the production branch
    :param x: 0 <= x <= 2/27
    :return: MY(x)
    """
    pymy.core.util.check_nonneg(x)
    if x > canonical.LOCAL_MAX:
        raise DomainError("The arccos form needs x <= 2/27, got {0}".format(x))
    arg = pymy.core.util.clamp(27.0 * (x - canonical.INFLECTION_F), -1.0, 1.0)
    return -_ONE_THIRD + (2.0 / 3.0) * math.cos(math.acos(arg) / 3.0)


def my_closed(x):
    """
    MY(x) in closed form. Radical branch for x >= 2/27, trigonometric branch below
    :param x: finite x >= 0
    :exception DomainError: negative or non finite x
    :return: an EvalResult tagged ClosedRadical or ClosedTrig
    """
    pymy.core.util.check_nonneg(x)
    if x >= canonical.LOCAL_MAX:
        return EvalResult(x, _my_radical(x), CLOSED_RADICAL)
    return EvalResult(x, _my_trig(x), CLOSED_TRIG)


def my_value(x):
    """:return: my_closed(x).value"""
    return my_closed(x).value


def my_radical_alt(x):
    """
    The single fraction radical form
        MY(x) = cbrt(2x (x - sqrt(x (x - 2/27)))) / (1/3 + cbrt((x - 1/27) - sqrt(x (x - 2/27))))
    Both differences are evaluated as quotients, x - r = (2x/27) / (x + r) and (x - 1/27) - r = (1/729) / (x - 1/27 + r)
    with r = sqrt(x (x - 2/27)), which is the same number without the cancellation for large x
    :param x: x >= 2/27
    :exception DomainError: x < 2/27
    :return: MY(x)
    """
    pymy.core.util.check_nonneg(x)
    if x < canonical.LOCAL_MAX:
        raise DomainError("The alternative radical form needs x >= 2/27, got {0}".format(x))
    # r / x, so neither difference forms 2x
    ratio = math.sqrt(x - canonical.LOCAL_MAX) / math.sqrt(x)
    x_minus_r = (2.0 / 27.0) / (1.0 + ratio)
    # the denominator of u_minus_r overflows to inf near the float max, the term is then far below 1/3
    u_minus_r = (1.0 / 729.0) / (x - canonical.INFLECTION_F + x * ratio)
    numerator = pymy.core.util.real_cbrt(x) * pymy.core.util.real_cbrt(2.0 * x_minus_r)
    denominator = _ONE_THIRD + pymy.core.util.real_cbrt(u_minus_r)
    return numerator / denominator


def my_derivative(x):
    """
    MY'(x) = 2 / (3 MY(x)^2 + 2 MY(x))
    :param x: x > 0
    :exception DomainError: x <= 0, the derivative diverges at 0
    :return: the derivative
    """
    pymy.core.util.check_nonneg(x)
    if x == 0.0:
        raise DomainError("MY'(x) diverges as x -> 0+, x must be > 0")
    z = my_value(x)
    return 2.0 / (z * (3.0 * z + 2.0))


def seam_gap(eps):
    """
    Mismatch of the trigonometric and radical branches across 2/27,
        |MY(2/27 + eps) - MY(2/27 - eps) - 2 eps MY'(2/27)|
    MY'(2/27) = 2. The linear term is what a continuous, smooth MY moves over the interval, the rest is of order
    eps^3 plus rounding
    :param eps: half width, 0 < eps <= 2/27
    :return: the gap
    """
    pymy.core.util.check_finite(eps=eps)
    if not 0.0 < eps <= canonical.LOCAL_MAX:
        raise DomainError("seam_gap needs 0 < eps <= 2/27, got {0}".format(eps))
    below = my_value(canonical.LOCAL_MAX - eps)
    above = my_value(canonical.LOCAL_MAX + eps)
    return abs(above - below - 2.0 * eps * my_derivative(canonical.LOCAL_MAX))


def my_antiderivative(x):
    """
    The primitive of MY vanishing at 0, (3/4) x MY(x) - x/12 + MY(x)^2 / 24. Since MY(x)^2 - 2x = -MY(x)^3 it is
    evaluated as (3/4) x MY(x) - MY(x)^3 / 24, which does not cancel for small x
    :param x: x >= 0
    :return: the integral of MY over [0, x]
    """
    pymy.core.util.check_nonneg(x)
    z = my_value(x)
    return 0.75 * x * z - z * z * z / 24.0


def bounds(x):
    """
    sqrt(2x / (1 + x^(2/5))) <= MY(x) <= x^(2/5)
    :param x: x >= 0
    :return: (lower, upper)
    """
    pymy.core.util.check_nonneg(x)
    upper = pymy.core.util.power_two_fifths(x)
    lower = math.sqrt(x) * math.sqrt(2.0 / (1.0 + upper))
    return lower, upper


def companion_roots(z1):
    """
    The two negative roots of z^3 + z^2 = 2x from its positive root z1 = MY(x), through the quadratic
    z^2 + (1 + z1) z + z1 (1 + z1) = 0:
        z2 = -(1 + z1)/2 (1 + sqrt((1 - 3 z1) / (1 + z1)))
        z3 = -(1 + z1)/2 (1 - sqrt((1 - 3 z1) / (1 + z1))),   evaluated as -2 z1 / (1 + sqrt(...))
    :param z1: 0 <= z1 <= 1/3
    :exception DomainError: z1 outside [0, 1/3]
    :return: (z2, z3), z2 <= z3
    """
    pymy.core.util.check_finite(z1=z1)
    if z1 < 0.0 or z1 > _ONE_THIRD:
        raise DomainError("companion_roots needs 0 <= z1 <= 1/3, got {0}".format(z1))
    root = math.sqrt(max(1.0 - 3.0 * z1, 0.0) / (1.0 + z1))
    z2 = -(1.0 + z1) / 2.0 * (1.0 + root)
    z3 = -2.0 * z1 / (1.0 + root)
    return z2, z3


def my_reflected(x):
    """
    MY(2/27 - x) reconstructed from MY(x):  (1 + MY(x))/2 (1 + sqrt((1 - 3 MY(x)) / (1 + MY(x)))) - 2/3
    :param x: 0 <= x <= 2/27
    :return: MY(2/27 - x)
    """
    pymy.core.util.check_nonneg(x)
    if x > canonical.LOCAL_MAX:
        raise DomainError("my_reflected needs x <= 2/27, got {0}".format(x))
    z1 = min(my_value(x), _ONE_THIRD)
    z2, _ = companion_roots(z1)
    return canonical.reflect(z2)


def canonical_roots(x):
    """
    All real roots of f(z) = x expressed with MY
        x > 2/27        MY(x)
        x < 0           -2/3 - MY(2/27 - x)
        0 <= x <= 2/27  z2 = -2/3 - MY(2/27 - x),  z3 = MY(2/27 - x) - MY(x) - 1/3 (Vieta),  z1 = MY(x)
    :param x: finite x
    :return: CanonicalRoots, ascending
    """
    pymy.core.util.check_finite(x=x)
    scenario = canonical.classify_target(x)
    if scenario == canonical.UNIQUE_ABOVE_MAX:
        return CanonicalRoots(x, scenario, [my_value(x)])
    if scenario == canonical.UNIQUE_NEGATIVE:
        return CanonicalRoots(x, scenario, [canonical.reflect(my_value(canonical.LOCAL_MAX - x))])

    if x == 0.0:
        return CanonicalRoots(x, scenario, [-1.0, 0.0, 0.0], [False, True, True])
    if x == canonical.LOCAL_MAX:
        return CanonicalRoots(x, scenario, [canonical.LOCAL_MAX_AT, canonical.LOCAL_MAX_AT, _ONE_THIRD],
                              [True, True, False])

    z1 = my_value(x)
    mirrored = my_value(canonical.LOCAL_MAX - x)
    z2 = canonical.reflect(mirrored)
    z3 = mirrored - z1 - _ONE_THIRD
    # rounding near the double roots must not break z2 <= z3 <= 0
    z3 = min(max(z3, z2), 0.0)

    tol = pymy.core.appvars.AppVars().double_root_tol
    low_double = abs(canonical.LOCAL_MAX - x) <= tol
    high_double = abs(x) <= tol
    flags = [low_double, low_double or high_double, high_double]
    return CanonicalRoots(x, scenario, [z2, z3, z1], flags)


def sqrt_via_my(x, eps):
    """
    sqrt(x) as the limit of MY(x eps^2 / 2) / eps for eps -> 0+
    :param x: x >= 0
    :param eps: small positive number
    :return: the approximation at eps
    """
    pymy.core.util.check_nonneg(x)
    if not eps > 0.0:
        raise DomainError("eps must be > 0, got {0}".format(eps))
    return my_value(x * eps * eps / 2.0) / eps


def cbrt_via_my(x, eps):
    """
    cbrt(x) as the limit of eps MY(x / (2 eps^3)) for eps -> 0+
    :param x: x >= 0
    :param eps: small positive number
    :return: the approximation at eps
    """
    pymy.core.util.check_nonneg(x)
    if not eps > 0.0:
        raise DomainError("eps must be > 0, got {0}".format(eps))
    return eps * my_value(x / (2.0 * eps * eps * eps))


def identity_residuals(x):
    """
    Relative residuals of the identities of MY at x
        radical_form    my_radical_alt(x) against my_closed(x), x >= 2/27
        scaling         MY(x) (3 MY(sqrt(x/54) + 1/27) + 1) against sqrt(6x)
        inversion       1 / MY(x / MY(x)^5) against MY(x)
        reflection      my_reflected(x) against MY(2/27 - x), x <= 2/27
    :param x: x > 0
    :return: dict of identity name to relative residual, identities outside their domain are left out
    """
    pymy.core.util.check_nonneg(x)
    if x == 0.0:
        raise DomainError("identity residuals need x > 0")
    z = my_value(x)
    residuals = {}
    if x >= canonical.LOCAL_MAX:
        residuals["radical_form"] = abs(my_radical_alt(x) / z - 1.0)
    scaled = z * (3.0 * my_value(math.sqrt(x / 54.0) + canonical.INFLECTION_F) + 1.0)
    residuals["scaling"] = abs(scaled / (math.sqrt(6.0) * math.sqrt(x)) - 1.0)
    # x / MY(x)^5 as (x / z^2) / z^3, left out where z^3 or the argument leaves the normal float range
    z_cubed = z * z * z
    if sys.float_info.min <= z_cubed <= sys.float_info.max:
        argument = (x / (z * z)) / z_cubed
        if _INVERSION_RANGE[0] <= argument <= _INVERSION_RANGE[1]:
            residuals["inversion"] = abs(1.0 / my_value(argument) / z - 1.0)
    if x <= canonical.LOCAL_MAX:
        direct = my_value(canonical.LOCAL_MAX - x)
        residuals["reflection"] = abs(my_reflected(x) - direct)
    return residuals
