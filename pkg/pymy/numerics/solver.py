"""
Real roots of depressed cubics y^3 + p y + q = 0, and of general cubics through the shift y = x + b/(3a),
written with MY. With xi = (3q / 2p) sqrt(-3/p) for p < 0 there are four cases:

    1   p = 0                   one root, -cbrt(q)
    2   p > 0                   one root, q / (p (-2/3 - MY(2/27 + q^2 / (2p^3))))
    3   p < 0 and |xi| > 1      one root, sign(xi) sqrt(-p/3) (3 MY((1 + |xi|) / 27) + 1)
    4   p < 0 and |xi| <= 1     three roots gamma <= beta <= alpha
                                    alpha =  sqrt(-p/3) (3 MY((1 + xi) / 27) + 1)
                                    beta  = 3 sqrt(-p/3) (MY((1 - xi) / 27) - MY((1 + xi) / 27))
                                    gamma = -sqrt(-p/3) (3 MY((1 - xi) / 27) + 1)
"""
import math
import logging
import functools
import pymy.core.util
from pymy.core.util import DomainError
import pymy.core.appvars
import pymy.numerics.canonical as canonical
import pymy.numerics.closed_form as closed_form
import pymy.numerics.fixed_point as fixed_point
from pymy.numerics.canonical import DepressedCubic

logger = logging.getLogger()

# root set kinds
ONE_REAL = "OneReal"
THREE_REAL = "ThreeReal"

# transformations recorded in method details
NO_TRANSFORMATION = "none"
TRANSFORMATION_1 = "transformation1"
TRANSFORMATION_2 = "transformation2"
VIETE = "viete"

# below this |xi| the middle root is taken from a divided difference of MY
_MIDDLE_ROOT_XI = 0.25

_ONE_THIRD = 1.0 / 3.0


class GeneralCubic(object):
    """
    Coefficients of a x^3 + b x^2 + c x + d = 0, a != 0
    """

    def __init__(self, a, b, c, d):
        pymy.core.util.check_finite(a=a, b=b, c=c, d=d)
        if a == 0.0:
            raise DomainError("The leading coefficient of a cubic must not be 0")
        self.__a = float(a)
        self.__b = float(b)
        self.__c = float(c)
        self.__d = float(d)

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
    def d(self):
        return self.__d

    @property
    def shift(self):
        """b / (3a), x = y - shift"""
        return self.b / (3.0 * self.a)

    def depressed(self):
        """:return: the DepressedCubic in y = x + b / (3a)"""
        a, b, c, d = self.a, self.b, self.c, self.d
        p = c / a - b * b / (3.0 * a * a)
        q = 2.0 * b * b * b / (27.0 * a * a * a) - b * c / (3.0 * a * a) + d / a
        return DepressedCubic(p, q)

    def evaluate(self, x):
        return ((self.a * x + self.b) * x + self.c) * x + self.d

    def residual_scale(self, x):
        """:return: |a| + |a||x|^3 + |b|x^2 + |c||x| + |d|"""
        ax = abs(x)
        return abs(self.a) * (1.0 + ax * ax * ax) + abs(self.b) * ax * ax + abs(self.c) * ax + abs(self.d)

    def to_dict(self):
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}

    def __eq__(self, other):
        return isinstance(other, GeneralCubic) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __repr__(self):
        return '<pymy.numerics.solver.GeneralCubic "a={0!r}, b={1!r}, c={2!r}, d={3!r}">'.format(
            self.a, self.b, self.c, self.d
        )


class RootSet(object):
    """
    The real roots of a cubic in ascending order with double root flags. method_detail records the case, the
    transformation, the MY evaluator and the label of each root (gamma, beta, alpha or alpha for a single root).
    """

    def __init__(self, cubic, kind, roots, double_flags, method_detail):
        if kind not in (ONE_REAL, THREE_REAL):
            raise DomainError("Unknown root set kind {0}".format(kind))
        self.__cubic = cubic
        self.__kind = kind
        self.__roots = list(roots)
        self.__double_flags = list(double_flags)
        self.__method_detail = dict(method_detail)

    @property
    def cubic(self):
        """the DepressedCubic or GeneralCubic these are roots of"""
        return self.__cubic

    @property
    def kind(self):
        return self.__kind

    @property
    def roots(self):
        return list(self.__roots)

    @property
    def double_flags(self):
        return list(self.__double_flags)

    @property
    def method_detail(self):
        return dict(self.__method_detail)

    @property
    def case(self):
        return self.__method_detail.get("case")

    def residuals(self):
        """:return: |cubic(r)| for each root"""
        return [abs(self.cubic.evaluate(r)) for r in self.__roots]

    def relative_residuals(self):
        """:return: |cubic(r)| / residual_scale(r) for each root"""
        return [abs(self.cubic.evaluate(r)) / self.cubic.residual_scale(r) for r in self.__roots]

    def to_dict(self):
        return {
            "cubic": self.cubic.to_dict(),
            "kind": self.kind,
            "roots": self.roots,
            "double": self.double_flags,
            "method_detail": self.method_detail,
            "residuals": self.residuals()
        }

    def __len__(self):
        return len(self.__roots)

    def __iter__(self):
        return iter(self.roots)

    def __repr__(self):
        return '<pymy.numerics.solver.RootSet "{0} case {1}: {2}">'.format(self.kind, self.case, self.roots)


def _fixed_value(x, n):
    return fixed_point.sequence(x, n)[-1]


def fixed_evaluator(n):
    """:return: x -> Mn(x), a picklable MY evaluator doing n fixed point iterations"""
    return functools.partial(_fixed_value, n=n)


def discriminant(cubic):
    """
    -(4p^3 + 27q^2): positive for three distinct real roots, 0 for a multiple root, negative for one real root
    """
    return -(4.0 * cubic.p * cubic.p * cubic.p + 27.0 * cubic.q * cubic.q)


def _snapped_xi(cubic):
    """xi with values within the double root tolerance of +-1 snapped onto +-1"""
    value = canonical.xi(cubic).value
    if abs(abs(value) - 1.0) <= pymy.core.appvars.AppVars().double_root_tol:
        return pymy.core.util.sign(value)
    return value


def _require_three_real(cubic):
    if not cubic.p < 0.0:
        raise DomainError("Three real roots need p < 0, got p = {0}".format(cubic.p))
    value = _snapped_xi(cubic)
    if abs(value) > 1.0:
        raise DomainError("Three real roots need |xi| <= 1, got xi = {0}".format(value))
    return value


def _transform2_roots(cubic, xi_value, my):
    scale = math.sqrt(-cubic.p / 3.0)
    m_plus = my((1.0 + xi_value) / 27.0)
    m_minus = my((1.0 - xi_value) / 27.0)
    alpha = scale * (3.0 * m_plus + 1.0)
    gamma = -scale * (3.0 * m_minus + 1.0)
    if abs(xi_value) < _MIDDLE_ROOT_XI:
        # m_minus - m_plus from f(m_minus) - f(m_plus) = -2 xi / 27
        spread = m_minus * m_minus + m_minus * m_plus + m_plus * m_plus + m_minus + m_plus
        beta = 3.0 * scale * (-4.0 * xi_value / 27.0) / spread
    else:
        beta = 3.0 * scale * (m_minus - m_plus)
    return alpha, beta, gamma


def roots_transform2(cubic, my=None):
    """
    The three roots from Transformation 2
    :param cubic: a DepressedCubic with p < 0 and |xi| <= 1
    :param my: MY evaluator, defaults to the closed form
    :exception DomainError: p >= 0 or |xi| > 1
    :return: (alpha, beta, gamma), gamma <= beta <= alpha
    """
    xi_value = _require_three_real(cubic)
    return _transform2_roots(cubic, xi_value, my or closed_form.my_value)


def roots_transform1(cubic):
    """
    The three roots from Transformation 1, y = q / (p z) for each root z of f(z) = -q^2 / (2p^3).
    They are the same set as roots_transform2, labelled differently:
        q > 0   (alpha', beta', gamma') = (gamma, alpha, beta)
        q < 0   (alpha', beta', gamma') = (alpha, gamma, beta)
    :param cubic: a DepressedCubic with p < 0, |xi| <= 1 and q != 0
    :exception DomainError: q = 0 or not three real roots
    :return: (alpha', beta', gamma')
    """
    _require_three_real(cubic)
    if cubic.q == 0.0:
        raise DomainError("Transformation 1 is undefined for q = 0")
    p, q = cubic.p, cubic.q
    t = canonical.transform1(cubic).t
    t = pymy.core.util.clamp(t, 0.0, canonical.LOCAL_MAX)
    z1 = min(closed_form.my_value(t), _ONE_THIRD)
    z2 = canonical.reflect(closed_form.my_value(canonical.LOCAL_MAX - t))
    # the middle canonical root from the quadratic, MY(2/27 - t) - MY(t) - 1/3 cancels for small t
    _, z3 = closed_form.companion_roots(z1)
    alpha_p = q / (p * z1)
    gamma_p = q / (p * z2)
    beta_p = q / (p * z3)
    return alpha_p, beta_p, gamma_p


def viete_trig_roots(cubic):
    """
    t_k = 2 sqrt(-p/3) cos(arccos(xi) / 3 - 2 k pi / 3), k = 0, 1, 2
    :param cubic: a DepressedCubic with p < 0 and |xi| <= 1
    :return: (t0, t1, t2), t2 <= t1 <= t0
    """
    xi_value = pymy.core.util.clamp(_require_three_real(cubic), -1.0, 1.0)
    scale = 2.0 * math.sqrt(-cubic.p / 3.0)
    angle = math.acos(xi_value) / 3.0
    return tuple(scale * math.cos(angle - 2.0 * k * math.pi / 3.0) for k in range(3))


def _case3_transform2(cubic, xi_value, my):
    scale = math.sqrt(-cubic.p / 3.0)
    return pymy.core.util.sign(xi_value) * scale * (3.0 * my((1.0 + abs(xi_value)) / 27.0) + 1.0)


def case3_root(cubic, my=None):
    """
    The single root of case 3 two ways, from Transformation 2 and from Transformation 1
        sign(xi) sqrt(-p/3) (3 MY((1 + |xi|) / 27) + 1)    and    q / (p MY(-q^2 / (2p^3)))
    :param cubic: a DepressedCubic with p < 0 and |xi| > 1
    :return: (from transformation 2, from transformation 1)
    """
    my = my or closed_form.my_value
    if not cubic.p < 0.0:
        raise DomainError("Case 3 needs p < 0, got p = {0}".format(cubic.p))
    xi_value = _snapped_xi(cubic)
    if not abs(xi_value) > 1.0:
        raise DomainError("Case 3 needs |xi| > 1, got xi = {0}".format(xi_value))
    via_t2 = _case3_transform2(cubic, xi_value, my)
    via_t1 = cubic.q / (cubic.p * my(canonical.transform1(cubic).t))
    return via_t2, via_t1


def _one_real(cubic, root, case, transformation, evaluator):
    detail = {"case": case, "transformation": transformation, "evaluator": evaluator, "labels": ["alpha"]}
    # no -0.0 in output
    return RootSet(cubic, ONE_REAL, [root + 0.0], [False], detail)


def _solve(cubic, my, evaluator):
    p, q = cubic.p, cubic.q
    app_vars = pymy.core.appvars.AppVars()

    if abs(p) < app_vars.near_zero_p:
        logger.debug("Case 1 for {0}".format(cubic))
        return _one_real(cubic, -pymy.core.util.real_cbrt(q), 1, NO_TRANSFORMATION, evaluator)

    if p > 0.0:
        t = canonical.LOCAL_MAX + (q / p) * (q / p) / (2.0 * p)
        if not math.isfinite(t):
            # p y is negligible next to y^3
            logger.debug("Case 2 target overflows for {0}, using -cbrt(q)".format(cubic))
            return _one_real(cubic, -pymy.core.util.real_cbrt(q), 1, NO_TRANSFORMATION, evaluator)
        root = q / (p * (canonical.LOCAL_MAX_AT - my(t)))
        return _one_real(cubic, root, 2, TRANSFORMATION_1, evaluator)

    xi_value = _snapped_xi(cubic)
    if abs(xi_value) > 1.0:
        if not math.isfinite(xi_value):
            logger.debug("xi overflows for {0}, using -cbrt(q)".format(cubic))
            return _one_real(cubic, -pymy.core.util.real_cbrt(q), 1, NO_TRANSFORMATION, evaluator)
        root = _case3_transform2(cubic, xi_value, my)
        return _one_real(cubic, root, 3, TRANSFORMATION_2, evaluator)

    alpha, beta, gamma = _transform2_roots(cubic, xi_value, my)
    # rounding must not break gamma <= beta <= alpha
    beta = pymy.core.util.clamp(beta, gamma, alpha)
    flags = [False, False, False]
    if xi_value == 1.0:
        flags = [True, True, False]
    elif xi_value == -1.0:
        flags = [False, True, True]
    detail = {
        "case": 4,
        "transformation": TRANSFORMATION_2,
        "evaluator": evaluator,
        "labels": ["gamma", "beta", "alpha"]
    }
    return RootSet(cubic, THREE_REAL, [gamma, beta + 0.0, alpha], flags, detail)


def solve_depressed(cubic):
    """
    Solves y^3 + p y + q = 0 with the closed form of MY
    :param cubic: a DepressedCubic
    :return: a RootSet
    """
    return _solve(cubic, closed_form.my_value, "closed")


def solve_depressed_iterative(cubic, n):
    """
    Same formulas as solve_depressed with every MY replaced by n fixed point iterations
    :param cubic: a DepressedCubic
    :param n: iterations, 0 <= n <= 64
    :return: a RootSet
    """
    max_iterations = pymy.core.appvars.AppVars().max_iterations
    if n < 0 or n > max_iterations:
        raise DomainError("Iteration count must be in [0, {0}], got {1}".format(max_iterations, n))
    return _solve(cubic, fixed_evaluator(n), "fixed:{0}".format(n))


def solve_depressed_viete(cubic):
    """
    The three roots of case 4 from the trigonometric formula
    :param cubic: a DepressedCubic with p < 0 and |xi| <= 1
    :return: a RootSet
    """
    t0, t1, t2 = viete_trig_roots(cubic)
    detail = {"case": 4, "transformation": VIETE, "evaluator": "trig", "labels": ["t2", "t1", "t0"]}
    return RootSet(cubic, THREE_REAL, [t2, t1, t0], [False, False, False], detail)


def solve_general(cubic, n=None):
    """
    Solves a x^3 + b x^2 + c x + d = 0 by solving the depressed cubic in y = x + b/(3a)
    :param cubic: a GeneralCubic
    :param n: fixed point iterations, None for the closed form
    :return: a RootSet whose roots are checked against the original coefficients
    """
    depressed = cubic.depressed()
    if n is None:
        solved = solve_depressed(depressed)
    else:
        solved = solve_depressed_iterative(depressed, n)
    shift = cubic.shift
    roots = [y - shift for y in solved.roots]
    result = RootSet(cubic, solved.kind, roots, solved.double_flags, solved.method_detail)
    worst = max(result.relative_residuals())
    if worst > 1e-10:
        logger.warning("Residual {0} of {1} above 1e-10".format(worst, cubic))
    return result


def refine_newton(cubic, roots):
    """
    One Newton step on every root, y - (y^3 + p y + q) / (3 y^2 + p). Not part of the MY method
    :param cubic: a DepressedCubic or GeneralCubic
    :param roots: a RootSet for that cubic
    :return: a new RootSet flagged refined
    """
    if isinstance(cubic, GeneralCubic):
        def slope(r):
            return (3.0 * cubic.a * r + 2.0 * cubic.b) * r + cubic.c
    else:
        def slope(r):
            return 3.0 * r * r + cubic.p

    refined = []
    for root in roots.roots:
        d = slope(root)
        refined.append(root - cubic.evaluate(root) / d if d != 0.0 else root)
    refined.sort()
    detail = roots.method_detail
    detail["refined"] = True
    return RootSet(cubic, roots.kind, refined, roots.double_flags, detail)
