"""
Approximation of MY with real radicals only. MY(x) is the fixed point in y of

    G(x, y) = cbrt(2x + 1/27 + (1/3) sqrt(2x / (1 + y))) - 1/3

and the sequence M0(x) = G(x, x^(2/5)), Mn+1(x) = G(x, Mn(x)) converges to it with a certified bound
|Mn(x) - MY(x)| < C0 / K^n. Nothing in this module calls a trigonometric function or the closed form, the
error columns of a trace are measured against a reference value supplied by the caller or the closed form.
"""
import math
import logging
import pymy.core.util
from pymy.core.util import DomainError
import pymy.core.appvars
import pymy.numerics.canonical as canonical
import pymy.numerics.closed_form as closed_form

logger = logging.getLogger()

_ONE_THIRD = 1.0 / 3.0
_ONE_NINTH = 1.0 / 9.0


class ConvergenceConstants(object):
    """
    The constants of the convergence certificate, re-derived from their closed form argmax points
        C1      max |dG/dy| over all x > 0, y >= 0
        C2      max |dG/dy| along the fixed point curve y = MY(x)
        C0      bound on |M0(x) - MY(x)|
        C0_rel  bound on |M0(x) / MY(x) - 1|
        K       2 / (C1 + C2), the per iteration shrink factor of the error
    """

    def __init__(self, c0, c0_rel, c1, c2, k, v0, z_star):
        self.__c0 = c0
        self.__c0_rel = c0_rel
        self.__c1 = c1
        self.__c2 = c2
        self.__k = k
        self.__v0 = v0
        self.__z_star = z_star

    @property
    def C0(self):
        return self.__c0

    @property
    def C0_rel(self):
        return self.__c0_rel

    @property
    def C1(self):
        return self.__c1

    @property
    def C2(self):
        return self.__c2

    @property
    def K(self):
        return self.__k

    @property
    def v0(self):
        """argmax of g_scaled, gives C1"""
        return self.__v0

    @property
    def z_star(self):
        """argmax of |dG/dy| on the fixed point curve, gives C2"""
        return self.__z_star

    def to_dict(self):
        return {
            "C0": self.C0,
            "C0_rel": self.C0_rel,
            "C1": self.C1,
            "C2": self.C2,
            "K": self.K,
            "v0": self.v0,
            "z_star": self.z_star
        }

    def __repr__(self):
        return '<pymy.numerics.fixed_point.ConvergenceConstants "C0=1/{0:.6f}, K={1:.6f}">'.format(
            1.0 / self.C0, self.K
        )


class IterationTrace(object):
    """
    The iterates M0(x) ... Mn(x) with their absolute and relative errors against a reference value of MY(x).
    Row 0 is the seed M0.
    """

    def __init__(self, x, values, reference):
        self.__x = x
        self.__reference = reference
        self.__rows = []
        for n, value in enumerate(values):
            abs_err = abs(value - reference)
            rel_err = abs_err / reference if reference else 0.0
            self.__rows.append({"n": n, "value": value, "abs_err": abs_err, "rel_err": rel_err})

    @property
    def x(self):
        return self.__x

    @property
    def reference(self):
        """the value of MY(x) the errors are measured against"""
        return self.__reference

    @property
    def rows(self):
        """list of dicts with keys n, value, abs_err, rel_err"""
        return [dict(row) for row in self.__rows]

    @property
    def values(self):
        return [row["value"] for row in self.__rows]

    @property
    def final(self):
        """the last iterate"""
        return self.__rows[-1]["value"]

    def to_dict(self):
        return {"x": self.x, "reference": self.reference, "rows": self.rows}

    def __len__(self):
        return len(self.__rows)

    def __iter__(self):
        return iter(self.rows)

    def __repr__(self):
        return '<pymy.numerics.fixed_point.IterationTrace "x={0!r}, {1} rows">'.format(self.x, len(self))


def G(x, y):
    """
    The fixed point map. Written as s / (a^2 + a/3 + 1/9) with s = 2x + (1/3) sqrt(2x / (1 + y)) and
    a = cbrt(1/27 + s), which equals a - 1/3 without subtracting nearly equal numbers for small x
    :param x: x >= 0
    :param y: y >= 0
    :exception DomainError: negative or non finite inputs
    :return: G(x, y)
    """
    pymy.core.util.check_nonneg(x)
    pymy.core.util.check_nonneg(y, name="y")
    if x > pymy.core.appvars.AppVars().scaled_radicand_above:
        return _g_scaled_out(x, y)
    s = 2.0 * x + _ONE_THIRD * math.sqrt(2.0 * x / (1.0 + y))
    if s == 0.0:
        return 0.0
    a = pymy.core.util.real_cbrt(canonical.INFLECTION_F + s)
    return s / (a * a + a / 3.0 + _ONE_NINTH)


def _g_scaled_out(x, y):
    """
    G for x near the float max, where 2x overflows. With k = cbrt(x), s = x sigma and a = k c:
        G = k sigma / (c^2 + c / (3k) + 1 / (9k^2))
    """
    k = pymy.core.util.real_cbrt(x)
    sigma = 2.0 + _ONE_THIRD * math.sqrt(2.0 / x) / math.sqrt(1.0 + y)
    c = pymy.core.util.real_cbrt(canonical.INFLECTION_F / x + sigma)
    return k * sigma / (c * c + c / (3.0 * k) + _ONE_NINTH / (k * k))


def dG_dy(x, y):
    """
    Partial derivative of G in y,
        -(sqrt(2x) / 18) ((2x + 1/27) (1 + y)^(9/4) + (sqrt(2x) / 3) (1 + y)^(7/4))^(-2/3)
    evaluated as -(sqrt(2x) / 18) / (a^2 (1 + y)^(3/2)) with a = G(x, y) + 1/3
    :param x: x > 0
    :param y: y >= 0
    :exception DomainError: x <= 0
    :return: the derivative, always negative
    """
    pymy.core.util.check_nonneg(x)
    pymy.core.util.check_nonneg(y, name="y")
    if x == 0.0:
        raise DomainError("dG/dy needs x > 0")
    root_2x = math.sqrt(2.0) * math.sqrt(x)
    if x > pymy.core.appvars.AppVars().scaled_radicand_above:
        # cbrt(x) factored out of a, 2x overflows
        a = pymy.core.util.real_cbrt(x) * pymy.core.util.real_cbrt(
            2.0 + canonical.INFLECTION_F / x + _ONE_THIRD * math.sqrt(2.0 / x) / math.sqrt(1.0 + y)
        )
    else:
        a = pymy.core.util.real_cbrt(2.0 * x + canonical.INFLECTION_F + _ONE_THIRD * root_2x / math.sqrt(1.0 + y))
    return -(root_2x / 18.0) / (a * a) / (1.0 + y) / math.sqrt(1.0 + y)


def m0(x):
    """
    The seed M0(x) = G(x, x^(2/5))
    :param x: x >= 0
    :return: M0(x)
    """
    pymy.core.util.check_nonneg(x)
    return G(x, pymy.core.util.power_two_fifths(x))


def sequence(x, n):
    """
    The iterates M0(x) ... Mn(x)
    :param x: x >= 0
    :param n: number of iterations after the seed, 0 <= n <= 64
    :exception DomainError: n out of range
    :return: list of n + 1 floats
    """
    pymy.core.util.check_nonneg(x)
    max_iterations = pymy.core.appvars.AppVars().max_iterations
    if n < 0 or n > max_iterations:
        raise DomainError("Iteration count must be in [0, {0}], got {1}".format(max_iterations, n))
    values = [m0(x)]
    for _ in range(n):
        values.append(G(x, values[-1]))
    return values


def iterate(x, n, reference=None):
    """
    Runs n iterations and records every iterate with its error
    :param x: x >= 0
    :param n: number of iterations after the seed, 0 <= n <= 64
    :param reference: value of MY(x) the errors are measured against, defaults to the closed form
    :return: an IterationTrace with rows 0 ... n
    """
    values = sequence(x, n)
    if reference is None:
        reference = closed_form.my_value(x)
    return IterationTrace(x, values, reference)


def certified_bound(n):
    """:return: C0 / K^n, the certified bound on |Mn(x) - MY(x)|"""
    app_vars = pymy.core.appvars.AppVars()
    return app_vars.certified_c0 / app_vars.certified_k ** n


def certified_iterations(tol):
    """
    Smallest n with C0 / K^n <= tol
    :param tol: tol >= 1e-15
    :exception DomainError: tol below the smallest supported tolerance
    :return: n
    """
    app_vars = pymy.core.appvars.AppVars()
    if not tol >= app_vars.min_fixed_tol:
        raise DomainError("Tolerance must be >= {0}, got {1}".format(app_vars.min_fixed_tol, tol))
    n = 0
    while certified_bound(n) > tol:
        n += 1
    return n


def my_fixed(x, tol):
    """
    MY(x) by fixed point iteration, stopping as soon as the certified bound is below tol
    :param x: x >= 0
    :param tol: certified absolute tolerance, >= 1e-15
    :return: an EvalResult tagged FixedPoint, its error_bound is C0 / K^n
    """
    pymy.core.util.check_nonneg(x)
    n = certified_iterations(tol)
    if x == 0.0:
        return closed_form.EvalResult(x, 0.0, closed_form.FIXED_POINT, 0, 0.0)
    value = sequence(x, n)[-1]
    logger.debug("my_fixed({0}) used {1} iterations for tol {2}".format(x, n, tol))
    return closed_form.EvalResult(x, value, closed_form.FIXED_POINT, n, certified_bound(n))


def my_fixed_n(x, n):
    """
    MY(x) after exactly n iterations
    :return: an EvalResult tagged FixedPoint with the certified bound for n iterations
    """
    value = sequence(x, n)[-1]
    bound = 0.0 if x == 0.0 else certified_bound(n)
    return closed_form.EvalResult(x, value, closed_form.FIXED_POINT, n, bound)


def g_scaled(s):
    """
    max over y of |dG/dy(x, y)| as a function of s = (3 sqrt(2x))^(-1/2) alone,
        (1/18) (3^(-1/2) (1/s + s + s^3/3))^(-2/3)
    Its maximum over s > 0 is C1, reached where s^2 = (sqrt(5) - 1) / 2
    :param s: s > 0
    :return: the value
    """
    if not s > 0.0:
        raise DomainError("g_scaled needs s > 0, got {0}".format(s))
    inner = (1.0 / s + s + s * s * s / 3.0) / math.sqrt(3.0)
    return 1.0 / (18.0 * pymy.core.util.real_cbrt(inner * inner))


def seed_factor_a(z):
    """:return: A(z) = z (z + 1) / (18 (z + 1/3)^2), at most 1/16 reached at z = 1"""
    pymy.core.util.check_nonneg(z, name="z")
    return z * (z + 1.0) / (18.0 * (z + _ONE_THIRD) ** 2)


def seed_factor_b(z):
    """
    B(z) = (w^(2/5) - 1) / (4 w^2) with w = (sqrt(z) + 1/sqrt(z)) / 2
    :param z: z > 0
    :return: the value, 0 at z = 1
    """
    if not z > 0.0:
        raise DomainError("seed_factor_b needs z > 0, got {0}".format(z))
    root = math.sqrt(z)
    w = (root + 1.0 / root) / 2.0
    return (pymy.core.util.power_two_fifths(w) - 1.0) / (4.0 * w * w)


def seed_bound_b(s):
    """
    The majorant (1/4) (s^(-2/9) + s^(7/9))^(-9/2) of B, maximal at s = 2/7 where it is 1/43.37886
    :param s: s > 0
    :return: the value
    """
    if not s > 0.0:
        raise DomainError("seed_bound_b needs s > 0, got {0}".format(s))
    ninth = pymy.core.util.real_root(s, 9)
    return 0.25 * (1.0 / (ninth * ninth) + ninth ** 7) ** -4.5


def seed_error_bound(z):
    """
    U(z) = A(z) B(z) = |dG/dy(f(z), z)| (f(z)^(2/5) - z), a bound on |M0(x) - MY(x)| with z = MY(x)
    :param z: z > 0
    :return: U(z)
    """
    return seed_factor_a(z) * seed_factor_b(z)


def constants():
    """
    Re-derives the convergence constants
    :return: a ConvergenceConstants
    """
    v0 = math.sqrt((math.sqrt(5.0) - 1.0) / 2.0)
    c1 = g_scaled(v0)
    z_star = (-3.0 + math.sqrt(33.0)) / 12.0
    c2 = z_star / (18.0 * (1.0 + z_star) * (z_star + _ONE_THIRD) ** 2)
    b_max = seed_bound_b(2.0 / 7.0)
    # A <= 1/16 for the absolute bound, A / z <= 1/2 for the relative one
    c0 = b_max / 16.0
    c0_rel = b_max / 2.0
    k = 2.0 / (c1 + c2)
    return ConvergenceConstants(c0, c0_rel, c1, c2, k, v0, z_star)
