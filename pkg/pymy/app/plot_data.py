"""
Grid data for plotting MY and related curves. Only the numbers are produced, plotting is left to other tools.
"""
import math
import logging
import pymy.core.util
from pymy.core.util import DomainError
import pymy.numerics.canonical as canonical
import pymy.numerics.closed_form as closed_form
import pymy.numerics.fixed_point as fixed_point
from pymy.app.output import OutputRecord, Column, VALUE, ERROR, TEXT

logger = logging.getLogger()

# curves defined for x >= 0 only
_NONNEG_CURVES = ("my", "bounds", "m0-error", "powers")


def _my_row(x):
    return {"x": x, "my": closed_form.my_value(x)}


def _f_row(x):
    return {"x": x, "f": canonical.f_canonical(x)}


def _bounds_row(x):
    lower, upper = closed_form.bounds(x)
    return {"x": x, "lower": lower, "my": closed_form.my_value(x), "upper": upper}


def _m0_error_row(x):
    seed = fixed_point.m0(x)
    value = closed_form.my_value(x)
    return {"x": x, "m0": seed, "my": value, "abs_err": abs(seed - value)}


def _powers_row(x):
    return {
        "x": x,
        "my": closed_form.my_value(x),
        "sqrt": math.sqrt(x),
        "cbrt": pymy.core.util.real_cbrt(x),
        "two_fifths": pymy.core.util.power_two_fifths(x)
    }


def _roots_row(x):
    found = closed_form.canonical_roots(x)
    row = {"x": x, "scenario": found.scenario.kind}
    for index, root in enumerate(found.roots):
        row["root_{0}".format(index + 1)] = root
    return row


CURVES = {
    "my": ([Column("x"), Column("my")], _my_row),
    "f": ([Column("x"), Column("f")], _f_row),
    "bounds": ([Column("x"), Column("lower"), Column("my"), Column("upper")], _bounds_row),
    "m0-error": ([Column("x"), Column("m0"), Column("my"), Column("abs_err", ERROR)], _m0_error_row),
    "powers": (
        [Column("x"), Column("my"), Column("sqrt"), Column("cbrt"), Column("two_fifths")], _powers_row
    ),
    "roots": (
        [Column("x"), Column("scenario", TEXT), Column("root_1"), Column("root_2"), Column("root_3")], _roots_row
    )
}


def curve_data(curve, x_min, x_max, points):
    """
    Evaluates a curve family on an evenly spaced grid
        my          MY(x)
        f           f(x) = (x^3 + x^2) / 2
        bounds      sqrt(2x / (1 + x^(2/5))), MY(x), x^(2/5)
        m0-error    M0(x), MY(x), |M0(x) - MY(x)|
        powers      MY(x), sqrt(x), cbrt(x), x^(2/5)
        roots       the real roots of f(z) = x, ascending
    :param curve: a key of CURVES
    :param x_min: first grid point
    :param x_max: last grid point, > x_min
    :param points: number of grid points, >= 2
    :exception DomainError: unknown curve, bad range, negative x for a curve defined on x >= 0
    :return: an OutputRecord
    """
    if curve not in CURVES:
        raise DomainError("Unknown curve {0}, valid curves are {1}".format(curve, ", ".join(sorted(CURVES))))
    pymy.core.util.check_finite(x_min=x_min, x_max=x_max)
    if points < 2:
        raise DomainError("Need at least 2 points, got {0}".format(points))
    if not x_min < x_max:
        raise DomainError("Need x_min < x_max, got [{0}, {1}]".format(x_min, x_max))
    if curve in _NONNEG_CURVES and x_min < 0.0:
        raise DomainError("Curve {0} is defined for x >= 0, got x_min = {1}".format(curve, x_min))

    columns, row_func = CURVES[curve]
    record = OutputRecord(
        curve, columns, title="{0} on [{1!r}, {2!r}]".format(curve, x_min, x_max),
        inputs={"curve": curve, "x_min": x_min, "x_max": x_max, "points": points}
    )
    for x in pymy.core.util.linear_grid(x_min, x_max, points):
        record.add_row(row_func(x))
    logger.debug("plot data {0}: {1} points".format(curve, points))
    return record
