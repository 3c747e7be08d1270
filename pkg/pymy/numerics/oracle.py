"""
Reference values by plain bisection on the intervals where f(z) = (z^3 + z^2) / 2 is monotonic. Slow, but it
depends on nothing but f and always converges, so the other paths are tested against it.
"""
import logging
import pymy.core.util
from pymy.core.util import DomainError
import pymy.core.appvars
import pymy.numerics.canonical as canonical
import pymy.numerics.closed_form as closed_form

logger = logging.getLogger()

_CBRT2 = pymy.core.util.real_cbrt(2.0)


class Bracket(object):
    """
    An interval [lo, hi] on which f is monotonic and takes the value target
    """

    def __init__(self, lo, hi, target, increasing=True):
        if not lo < hi:
            raise DomainError("A bracket needs lo < hi, got [{0}, {1}]".format(lo, hi))
        self.__lo = lo
        self.__hi = hi
        self.__target = target
        self.__increasing = increasing

    @property
    def lo(self):
        return self.__lo

    @property
    def hi(self):
        return self.__hi

    @property
    def target(self):
        return self.__target

    @property
    def increasing(self):
        return self.__increasing

    @property
    def width(self):
        return self.hi - self.lo

    def brackets_target(self):
        """:return: True if f(lo) and f(hi) enclose the target in the bracket's direction"""
        f_lo = canonical.f_canonical(self.lo)
        f_hi = canonical.f_canonical(self.hi)
        if self.increasing:
            return f_lo <= self.target <= f_hi
        return f_hi <= self.target <= f_lo

    def __repr__(self):
        return '<pymy.numerics.oracle.Bracket "[{0!r}, {1!r}] -> {2!r}">'.format(self.lo, self.hi, self.target)


def _check_tol(tol):
    min_tol = pymy.core.appvars.AppVars().bisect_min_tol
    if not tol >= min_tol:
        raise DomainError("Bisection tolerance must be >= {0}, got {1}".format(min_tol, tol))


def bisect(bracket, tol):
    """
    Halves the bracket until its width is at most tol, or it can no longer be split, or the iteration cap
    :param bracket: a Bracket
    :param tol: width to reach
    :return: (midpoint of the final bracket, final width)
    """
    lo, hi = bracket.lo, bracket.hi
    max_iterations = pymy.core.appvars.AppVars().bisect_max_iterations
    for _ in range(max_iterations):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        below = canonical.f_canonical(mid) < bracket.target
        if below == bracket.increasing:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi), hi - lo


def upper_bracket(x):
    """
    :return: max(1, (2x)^(1/3) + 1), above MY(x). The cube root is taken as cbrt(2) cbrt(x), 2x overflows near
    the float max
    """
    return max(1.0, _CBRT2 * pymy.core.util.real_cbrt(x) + 1.0)


def my_bisect(x, tol):
    """
    MY(x) by bisection on [0, max(1, (2x)^(1/3) + 1)]
    :param x: x >= 0
    :param tol: bracket width to reach, >= 1e-15
    :return: the root
    """
    pymy.core.util.check_nonneg(x)
    _check_tol(tol)
    if x == 0.0:
        return 0.0
    root, _ = bisect(Bracket(0.0, upper_bracket(x), x), tol)
    return root


def my_oracle(x, tol=None):
    """
    :return: my_bisect(x, tol) as an EvalResult tagged Oracle, error_bound is half the final bracket width
    """
    pymy.core.util.check_nonneg(x)
    if tol is None:
        tol = pymy.core.appvars.AppVars().oracle_tol
    _check_tol(tol)
    if x == 0.0:
        return closed_form.EvalResult(x, 0.0, closed_form.ORACLE)
    root, width = bisect(Bracket(0.0, upper_bracket(x), x), tol)
    return closed_form.EvalResult(x, root, closed_form.ORACLE, 0, width / 2.0)


def canonical_roots_bisect(x, tol):
    """
    All real roots of f(z) = x, one bisection per monotonic interval that reaches x
        ]-inf, -2/3]    x <= 2/27
        [-2/3, 0]       0 <= x <= 2/27
        [0, +inf[       x >= 0
    :param x: finite x
    :param tol: bracket width to reach, >= 1e-15
    :return: CanonicalRoots, ascending
    """
    pymy.core.util.check_finite(x=x)
    _check_tol(tol)
    scenario = canonical.classify_target(x)
    roots = []
    if x <= canonical.LOCAL_MAX:
        lo = -(_CBRT2 * pymy.core.util.real_cbrt(abs(x)) + 2.0)
        roots.append(bisect(Bracket(lo, canonical.LOCAL_MAX_AT, x), tol)[0])
    if 0.0 <= x <= canonical.LOCAL_MAX:
        roots.append(bisect(Bracket(canonical.LOCAL_MAX_AT, 0.0, x, increasing=False), tol)[0])
    if x >= 0.0:
        roots.append(my_bisect(x, tol))
    roots.sort()

    flags = [False] * len(roots)
    if len(roots) == 3:
        double_tol = pymy.core.appvars.AppVars().double_root_tol
        low_double = abs(canonical.LOCAL_MAX - x) <= double_tol
        high_double = abs(x) <= double_tol
        flags = [low_double, low_double or high_double, high_double]
    logger.debug("canonical_roots_bisect({0}) -> {1}".format(x, roots))
    return closed_form.CanonicalRoots(x, scenario, roots, flags)
