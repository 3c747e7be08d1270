"""
The four reference tables, computed every time they are asked for
    my-ex1      fixed point iterates of MY(0.01), n = 0..5
    my-ex2      fixed point iterates of MY(1000), n = 0..2
    cubic-ex1   the root of y^3 + y + 1 = 0 with n = 0..3 iterations per MY
    cubic-ex2   the three roots of y^3 - 3y + 1 = 0 with n = 0..5 iterations per MY
"""
import logging
import pymy.core.util
from pymy.core.util import DomainError
import pymy.core.appvars
import pymy.numerics.canonical
import pymy.numerics.fixed_point
import pymy.numerics.solver
from pymy.app.output import OutputRecord, Column, VALUE, ERROR, INTEGER, TEXT

logger = logging.getLogger()

MY_TABLES = {
    "my-ex1": {"x": 0.01, "iterations": 5},
    "my-ex2": {"x": 1000.0, "iterations": 2}
}

CUBIC_TABLES = {
    "cubic-ex1": {"p": 1.0, "q": 1.0, "iterations": 3},
    "cubic-ex2": {"p": -3.0, "q": 1.0, "iterations": 5}
}


def _error_columns():
    return [Column("n", INTEGER), Column("value", VALUE), Column("abs_err", ERROR), Column("rel_err", ERROR)]


def my_table(name):
    """
    :param name: my-ex1 or my-ex2
    :return: an OutputRecord with columns n, value, abs_err, rel_err
    """
    setup = MY_TABLES[name]
    trace = pymy.numerics.fixed_point.iterate(setup["x"], setup["iterations"])
    app_vars = pymy.core.appvars.AppVars()
    title = "{0}: Mn({1!r}), closed form MY = {2}".format(
        name, setup["x"], pymy.core.util.format_fixed(trace.reference, app_vars.value_decimals)
    )
    record = OutputRecord(name, _error_columns(), title=title, inputs={"x": setup["x"], "reference": trace.reference})
    for row in trace.rows:
        record.add_row(row)
    return record


def cubic_table(name):
    """
    The roots of the depressed cubic with every MY replaced by n fixed point iterations, against the closed form
    roots. A single root gives columns n, value, abs_err, rel_err, three roots add a leading root column
    :param name: cubic-ex1 or cubic-ex2
    :return: an OutputRecord
    """
    setup = CUBIC_TABLES[name]
    cubic = pymy.numerics.canonical.DepressedCubic(setup["p"], setup["q"])
    exact = pymy.numerics.solver.solve_depressed(cubic)
    labels = exact.method_detail["labels"]
    exact_by_label = dict(zip(labels, exact.roots))
    three = exact.kind == pymy.numerics.solver.THREE_REAL

    columns = _error_columns()
    if three:
        columns = [Column("root", TEXT)] + columns
    title = "{0}: y^3 + ({1!r}) y + ({2!r}) = 0".format(name, setup["p"], setup["q"])
    record = OutputRecord(
        name, columns, title=title, inputs={"p": setup["p"], "q": setup["q"], "roots": exact.roots},
        group_column="root" if three else None
    )

    approximations = [
        pymy.numerics.solver.solve_depressed_iterative(cubic, n) for n in range(setup["iterations"] + 1)
    ]
    # alpha, beta, gamma is the order the roots are usually listed in
    for label in reversed(labels):
        reference = exact_by_label[label]
        for n, approx in enumerate(approximations):
            value = dict(zip(approx.method_detail["labels"], approx.roots))[label]
            abs_err = abs(value - reference)
            row = {"n": n, "value": value, "abs_err": abs_err, "rel_err": abs_err / abs(reference)}
            if three:
                row["root"] = label
            record.add_row(row)
    return record


def build_table(name):
    """
    :param name: one of AppVars.table_names
    :exception DomainError: unknown name
    :return: an OutputRecord
    """
    if name in MY_TABLES:
        return my_table(name)
    if name in CUBIC_TABLES:
        return cubic_table(name)
    raise DomainError(
        "Unknown table {0}, valid names are {1}".format(name, ", ".join(pymy.core.appvars.AppVars().table_names))
    )
