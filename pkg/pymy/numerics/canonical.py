"""
The canonical function f(z) = (z^3 + z^2) / 2, its symmetry about the inflection point I(-1/3, 1/27), the
classification of a target x into scenarios, and the two changes of variable that turn a depressed cubic
y^3 + p y + q = 0 into a canonical equation f(z) = t.

f is monotonic on three intervals:
    ]-inf, -2/3]    increasing from -inf to 2/27, M(-2/3, 2/27) is a local maximum
    [-2/3, 0]       decreasing from 2/27 to 0
    [0, +inf[       increasing from 0 to +inf
"""
import math
import logging
import pymy.core.util
from pymy.core.util import DomainError
import pymy.core.appvars

logger = logging.getLogger()

# local maximum of f, reached at z = -2/3 and again at z = 1/3
LOCAL_MAX = 2.0 / 27.0
# abscissa of the local maximum
LOCAL_MAX_AT = -2.0 / 3.0
# the inflection point, center of symmetry of the curve
INFLECTION_Z = -1.0 / 3.0
INFLECTION_F = 1.0 / 27.0

# scenario kinds
UNIQUE_ABOVE_MAX = "UniqueAboveMax"
UNIQUE_NEGATIVE = "UniqueNegative"
THREE_REAL = "ThreeReal"

# backmap kinds
AFFINE = "affine"
RECIPROCAL = "reciprocal"


class DepressedCubic(object):
    """
    Coefficients of y^3 + p y + q = 0
    """

    def __init__(self, p, q):
        pymy.core.util.check_finite(p=p, q=q)
        self.__p = float(p)
        self.__q = float(q)

    @property
    def p(self):
        return self.__p

    @property
    def q(self):
        return self.__q

    def evaluate(self, y):
        """:return: y^3 + p y + q"""
        return y * y * y + self.p * y + self.q

    def residual_scale(self, y):
        """:return: the scale 1 + |p||y| + |q| residuals are measured against"""
        return 1.0 + abs(self.p) * abs(y) + abs(self.q)

    def to_dict(self):
        return {"p": self.p, "q": self.q}

    def __eq__(self, other):
        return isinstance(other, DepressedCubic) and self.p == other.p and self.q == other.q

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return '<pymy.numerics.canonical.DepressedCubic "p={0!r}, q={1!r}">'.format(self.p, self.q)


class Scenario(object):
    """
    Classification of a canonical target x by the number and location of the roots of f(z) = x
        UniqueAboveMax  x > 2/27, one root, above 1/3
        UniqueNegative  x < 0, one root, below -1
        ThreeReal       0 <= x <= 2/27, three real roots, two of which coincide at the boundaries
    """

    def __init__(self, kind):
        if kind not in (UNIQUE_ABOVE_MAX, UNIQUE_NEGATIVE, THREE_REAL):
            raise DomainError("Unknown scenario {0}".format(kind))
        self.__kind = kind

    @property
    def kind(self):
        return self.__kind

    @property
    def root_count(self):
        """number of real roots counted with multiplicity"""
        return 3 if self.kind == THREE_REAL else 1

    def __eq__(self, other):
        if isinstance(other, str):
            return self.kind == other
        return isinstance(other, Scenario) and self.kind == other.kind

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.kind)

    def __str__(self):
        return self.kind

    def __repr__(self):
        return '<pymy.numerics.canonical.Scenario "{0}">'.format(self.kind)


class Backmap(object):
    """
    Descriptor of the map taking a canonical root z back to a depressed root y. Either
        affine      y = scale * z + offset
        reciprocal  y = numerator / (denominator * z)
    Kept as data rather than a closure so it can be compared and serialised.
    """

    def __init__(self, kind, scale=None, offset=None, numerator=None, denominator=None):
        if kind == AFFINE:
            if scale is None or offset is None:
                raise DomainError("An affine backmap needs a scale and an offset")
        elif kind == RECIPROCAL:
            if numerator is None or not denominator:
                raise DomainError("A reciprocal backmap needs a numerator and a nonzero denominator")
        else:
            raise DomainError("Unknown backmap kind {0}".format(kind))
        self.__kind = kind
        self.__scale = scale
        self.__offset = offset
        self.__numerator = numerator
        self.__denominator = denominator

    @classmethod
    def affine(cls, scale, offset):
        return cls(AFFINE, scale=scale, offset=offset)

    @classmethod
    def reciprocal(cls, numerator, denominator):
        return cls(RECIPROCAL, numerator=numerator, denominator=denominator)

    @property
    def kind(self):
        return self.__kind

    @property
    def scale(self):
        return self.__scale

    @property
    def offset(self):
        return self.__offset

    @property
    def numerator(self):
        return self.__numerator

    @property
    def denominator(self):
        return self.__denominator

    def apply(self, z):
        """
        Maps a canonical root to a depressed root
        :param z: the canonical root
        :exception DomainError: z = 0 for a reciprocal map
        :return: y
        """
        if self.kind == AFFINE:
            return self.scale * z + self.offset
        if z == 0.0:
            raise DomainError("The reciprocal backmap is undefined at z = 0")
        return self.numerator / (self.denominator * z)

    def to_dict(self):
        if self.kind == AFFINE:
            return {"kind": self.kind, "scale": self.scale, "offset": self.offset}
        return {"kind": self.kind, "numerator": self.numerator, "denominator": self.denominator}

    def __eq__(self, other):
        return isinstance(other, Backmap) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<pymy.numerics.canonical.Backmap "{0}">'.format(self.to_dict())


class CanonicalReduction(object):
    """
    Result of reducing a depressed cubic to f(z) = t. Applying the backmap to any root of f(z) = t gives a root
    of the depressed cubic.
    """

    def __init__(self, t, backmap):
        self.__t = t
        self.__backmap = backmap

    @property
    def t(self):
        """the canonical target"""
        return self.__t

    @property
    def backmap(self):
        return self.__backmap

    def to_dict(self):
        return {"t": self.t, "backmap": self.backmap.to_dict()}

    def __repr__(self):
        return '<pymy.numerics.canonical.CanonicalReduction "t={0!r}, {1}">'.format(self.t, self.backmap.kind)


class Xi(object):
    """
    The normalised parameter xi = (3q / 2p) sqrt(-3/p) of a depressed cubic with p < 0. |xi| <= 1 exactly when
    the cubic has three real roots.
    """

    def __init__(self, value):
        self.__value = value

    @property
    def value(self):
        return self.__value

    def __float__(self):
        return float(self.__value)

    def __abs__(self):
        return abs(self.__value)

    def __eq__(self, other):
        if isinstance(other, Xi):
            return self.value == other.value
        return self.value == other

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return '<pymy.numerics.canonical.Xi "{0!r}">'.format(self.value)


def f_canonical(z):
    """
    The canonical function, evaluated as (z^2 / 2) (z + 1) so there is no cancellation near z = -1 and no
    overflow before the halving
    :param z: finite real
    :return: (z^3 + z^2) / 2
    """
    return 0.5 * z * z * (z + 1.0)


def f_derivative(z):
    """:return: f'(z) = (3 z^2 + 2 z) / 2"""
    return z * (3.0 * z + 2.0) / 2.0


def classify_target(x):
    """
    Classifies the canonical target x. The boundaries 0 and 2/27 have a double root and classify as ThreeReal
    :param x: finite real
    :return: a Scenario
    """
    pymy.core.util.check_finite(x=x)
    if x > LOCAL_MAX:
        return Scenario(UNIQUE_ABOVE_MAX)
    if x < 0.0:
        return Scenario(UNIQUE_NEGATIVE)
    return Scenario(THREE_REAL)


def reflect(z):
    """
    Reflection about the abscissa of the inflection point. f(reflect(z)) = 2/27 - f(z) for every z
    :param z: finite real
    :return: -2/3 - z
    """
    return LOCAL_MAX_AT - z


def xi(cubic):
    """
    Computes xi = (3q / 2p) sqrt(-3/p) as -sign(q) sqrt(-27 q^2 / (4 p^3)). The square root is taken on log scaled
    factors for tiny p or huge q so that the intermediate q^2 / p^3 never overflows.
    :param cubic: a DepressedCubic with p < 0
    :exception DomainError: p >= 0
    :return: an Xi
    """
    p, q = cubic.p, cubic.q
    if not p < 0.0:
        raise DomainError("xi is only defined for p < 0, got p = {0}".format(p))
    if q == 0.0:
        return Xi(0.0)
    app_vars = pymy.core.appvars.AppVars()
    if -p < app_vars.xi_tiny_p or abs(q) > app_vars.xi_huge_q:
        log_magnitude = math.log(abs(q)) + 0.5 * math.log(27.0 / 4.0) - 1.5 * math.log(-p)
        # exp overflows to inf only when |xi| itself is not representable
        try:
            magnitude = math.exp(log_magnitude)
        except OverflowError:
            magnitude = float("inf")
        logger.debug("xi computed on log scale for p={0}, q={1}".format(p, q))
    else:
        magnitude = (abs(q) * math.sqrt(27.0) / 2.0) / (-p * math.sqrt(-p))
    return Xi(-pymy.core.util.sign(q) * magnitude)


def transform1(cubic):
    """
    The reciprocal change of variable z = q / (p y). It gives t = -q^2 / (2 p^3) and the backmap y = q / (p z)
    :param cubic: a DepressedCubic with p != 0 and q != 0
    :exception DomainError: p = 0 or q = 0
    :return: a CanonicalReduction
    """
    p, q = cubic.p, cubic.q
    if p == 0.0 or q == 0.0:
        raise DomainError("Transformation 1 needs p != 0 and q != 0, got p = {0}, q = {1}".format(p, q))
    # written as a ratio of ratios to delay overflow
    t = -(q / p) * (q / p) / (2.0 * p)
    return CanonicalReduction(t, Backmap.reciprocal(q, p))


def transform2(cubic):
    """
    The affine change of variable z = y / sqrt(-3p) - 1/3. It gives t = 1/27 - q / (2 sqrt(-27 p^3)), equal to
    (1 + xi) / 27, and the backmap y = sqrt(-3p) (z + 1/3)
    :param cubic: a DepressedCubic with p < 0
    :exception DomainError: p >= 0
    :return: a CanonicalReduction
    """
    p = cubic.p
    if not p < 0.0:
        raise DomainError("Transformation 2 needs p < 0, got p = {0}".format(p))
    q = cubic.q
    app_vars = pymy.core.appvars.AppVars()
    if -p < app_vars.xi_tiny_p or abs(q) > app_vars.xi_huge_q:
        t = (1.0 + xi(cubic).value) / 27.0
    else:
        t = INFLECTION_F - q / (2.0 * math.sqrt(27.0) * (-p) * math.sqrt(-p))
    scale = math.sqrt(-3.0 * p)
    return CanonicalReduction(t, Backmap.affine(scale, scale / 3.0))
