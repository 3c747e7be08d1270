# Command line interface: evaluate MY, solve cubics, print the reference tables, verify, emit plot data

import sys
import argparse
import logging
from colorama import Fore, Style
from pymy.core.util import DomainError
import pymy.core.appvars
import pymy.core.error_logging
import pymy.numerics.canonical
import pymy.numerics.closed_form
import pymy.numerics.fixed_point
import pymy.numerics.hypergeom
import pymy.numerics.oracle
import pymy.numerics.solver
import pymy.app.output
import pymy.app.tables
import pymy.app.verify
import pymy.app.plot_data
from pymy.app.output import OutputRecord, Column, VALUE, ERROR, INTEGER, TEXT, FLAG

logger = logging.getLogger()

# exit codes
EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

EVAL_METHODS = ["closed", "fixed", "hyper", "oracle"]
SOLVE_METHODS = ["my", "viete", "both"]


class MyCli:
    """
    Command line app. Data goes to stdout uncoloured, messages go to stderr through show_msg.
    :param argv: arguments without the program name, defaults to sys.argv[1:]
    """

    def __init__(self, argv=None):
        self.app_vars = pymy.core.appvars.AppVars()
        parser = self.build_parser()
        self.args = parser.parse_args(argv)

    def build_parser(self):
        """
        Create the parser with the sub commands and their arguments. Also create help.
        :return: the parser
        """
        parser = argparse.ArgumentParser(
            prog=self.app_vars.app_name,
            description="Evaluates MY, the inverse of (z^3 + z^2) / 2 on the nonnegative reals, and solves cubic "
                        "equations with it",
            epilog="example: pymy eval 0.01 --method fixed --iterations 5"
        )
        parser.add_argument('--version', action='version',
                            version="{0} {1}".format(self.app_vars.app_name, self.app_vars.version))
        parser.add_argument('--no-log', dest="no_log", help="Do not write a log file.",
                            action="store_true", default=False)
        subparsers = parser.add_subparsers(dest="command")
        subparsers.required = True

        # eval
        eval_parser = subparsers.add_parser("eval", help="Evaluate MY(x) for one or more x")
        eval_parser.add_argument('x', nargs="+", type=float, help="Points to evaluate, x >= 0")
        eval_parser.add_argument('-m', '--method', choices=EVAL_METHODS, default="closed",
                                 help="Evaluation method. Default is closed.")
        eval_parser.add_argument('-n', '--iterations', type=int, default=None,
                                 help="Fixed point iterations. Overrides --tol for the fixed method.")
        eval_parser.add_argument('-t', '--tol', type=float, default=None,
                                 help="Certified tolerance for fixed, bracket width for oracle.")
        self._add_format_arg(eval_parser, "text")

        # solve
        solve_parser = subparsers.add_parser("solve", help="Solve a depressed or general cubic")
        group = solve_parser.add_mutually_exclusive_group(required=True)
        group.add_argument('--depressed', nargs=2, type=float, metavar=("P", "Q"),
                           help="Solve y^3 + p y + q = 0")
        group.add_argument('--general', nargs=4, type=float, metavar=("A", "B", "C", "D"),
                           help="Solve a x^3 + b x^2 + c x + d = 0")
        solve_parser.add_argument('-m', '--method', choices=SOLVE_METHODS, default="my",
                                  help="my, viete or both. Default is my.")
        solve_parser.add_argument('-n', '--iterations', type=int, default=None,
                                  help="Evaluate MY with this many fixed point iterations instead of the closed form")
        solve_parser.add_argument('--refine', action="store_true", default=False,
                                  help="Apply one Newton step to every root. Not part of the MY method.")
        self._add_format_arg(solve_parser, "text")

        # table
        table_parser = subparsers.add_parser("table", help="Print one of the reference tables")
        table_parser.add_argument('name', choices=self.app_vars.table_names, help="The table to compute")
        self._add_format_arg(table_parser, "text")

        # verify
        verify_parser = subparsers.add_parser("verify", help="Run the property suites")
        verify_parser.add_argument('--grid-points', dest="grid_points", type=int,
                                   default=self.app_vars.verify_grid_points,
                                   help="Grid points and random cubics. Default is {0}.".format(
                                       self.app_vars.verify_grid_points))
        verify_parser.add_argument('--x-min', dest="x_min", type=float, default=self.app_vars.verify_x_min)
        verify_parser.add_argument('--x-max', dest="x_max", type=float, default=self.app_vars.verify_x_max)
        verify_parser.add_argument('--seed', type=int, default=self.app_vars.verify_seed)
        verify_parser.add_argument('--workers', type=int, default=self.app_vars.verify_workers,
                                   help="Processes used to evaluate the grid. Default is 1.")

        # plot-data
        plot_parser = subparsers.add_parser("plot-data", help="Emit grid data for a curve")
        plot_parser.add_argument('--curve', choices=self.app_vars.plot_curves, default="my")
        plot_parser.add_argument('--x-min', dest="x_min", type=float, default=0.0)
        plot_parser.add_argument('--x-max', dest="x_max", type=float, default=1.0)
        plot_parser.add_argument('--points', type=int, default=self.app_vars.plot_points)
        self._add_format_arg(plot_parser, "csv")
        return parser

    def run(self):
        """
        run the app
        :return: the exit code
        """
        commands = {
            "eval": self.cmd_eval,
            "solve": self.cmd_solve,
            "table": self.cmd_table,
            "verify": self.cmd_verify,
            "plot-data": self.cmd_plot_data
        }
        try:
            return commands[self.args.command]()
        except DomainError as e:
            logger.error(e)
            self.show_msg(str(e), Fore.RED)
            return EXIT_USAGE
        except pymy.numerics.hypergeom.SeriesConvergenceError as e:
            logger.error("{0}, last partial sum {1} after {2} terms".format(e, e.partial_sum, e.terms))
            self.show_msg(str(e), Fore.RED)
            return EXIT_USAGE
        except ArithmeticError as e:
            # overflow or division by zero outside the range a computation supports
            error_msg = "Numerical error in {0}: {1}".format(self.args.command, e)
            logger.exception(error_msg)
            self.show_msg(error_msg, Fore.RED)
            return EXIT_USAGE

    def cmd_eval(self):
        """
        Evaluates MY at every x with the selected method
        :return: the exit code
        """
        method = self.args.method
        if self.args.iterations is not None and method != "fixed":
            self.show_msg("--iterations only applies to the fixed method, ignored", Fore.YELLOW)

        columns = [
            Column("x", TEXT), Column("value", VALUE), Column("method", TEXT), Column("iterations", INTEGER),
            Column("error_bound", ERROR)
        ]
        record = OutputRecord("eval", columns)
        for x in self.args.x:
            result = self._evaluate(x, method)
            record.add_row(result.to_dict())
        inputs = {"x": self.args.x, "method": method, "iterations": self.args.iterations, "tol": self.args.tol}
        self._emit([record], inputs)
        return EXIT_OK

    def _evaluate(self, x, method):
        if method == "closed":
            return pymy.numerics.closed_form.my_closed(x)
        if method == "fixed":
            if self.args.iterations is not None:
                return pymy.numerics.fixed_point.my_fixed_n(x, self.args.iterations)
            tol = self.app_vars.default_fixed_tol if self.args.tol is None else self.args.tol
            return pymy.numerics.fixed_point.my_fixed(x, tol)
        if method == "hyper":
            return pymy.numerics.hypergeom.my_hyper(x)
        return pymy.numerics.oracle.my_oracle(x, self.args.tol)

    def cmd_solve(self):
        """
        Solves the cubic and prints every root with its case and residual
        :return: the exit code
        """
        if self.args.depressed is not None:
            cubic = pymy.numerics.canonical.DepressedCubic(*self.args.depressed)
            depressed, shift = cubic, 0.0
        else:
            cubic = pymy.numerics.solver.GeneralCubic(*self.args.general)
            depressed, shift = cubic.depressed(), cubic.shift

        root_sets = []
        if self.args.method in ("my", "both"):
            if isinstance(cubic, pymy.numerics.solver.GeneralCubic):
                root_sets.append(pymy.numerics.solver.solve_general(cubic, self.args.iterations))
            elif self.args.iterations is not None:
                root_sets.append(pymy.numerics.solver.solve_depressed_iterative(cubic, self.args.iterations))
            else:
                root_sets.append(pymy.numerics.solver.solve_depressed(cubic))
        if self.args.method in ("viete", "both"):
            try:
                viete = pymy.numerics.solver.solve_depressed_viete(depressed)
            except DomainError as e:
                if self.args.method == "viete":
                    raise
                self.show_msg("Trigonometric roots skipped: {0}".format(e), Fore.YELLOW)
            else:
                root_sets.append(pymy.numerics.solver.RootSet(
                    cubic, viete.kind, [y - shift for y in viete.roots], viete.double_flags, viete.method_detail
                ))
        if self.args.refine:
            root_sets = [pymy.numerics.solver.refine_newton(cubic, roots) for roots in root_sets]

        columns = [
            Column("method", TEXT), Column("case", INTEGER), Column("label", TEXT), Column("root", VALUE),
            Column("double", FLAG), Column("residual", ERROR)
        ]
        record = OutputRecord(
            "solve", columns, title="{0} roots of {1}".format(root_sets[0].kind, cubic.to_dict())
        )
        for roots in root_sets:
            detail = roots.method_detail
            for label, root, double, residual in zip(
                    detail["labels"], roots.roots, roots.double_flags, roots.residuals()):
                record.add_row({
                    "method": detail["transformation"] if detail["evaluator"] == "trig" else detail["evaluator"],
                    "case": detail["case"],
                    "label": label,
                    "root": root,
                    "double": double,
                    "residual": residual
                })
        inputs = {
            "cubic": cubic.to_dict(), "method": self.args.method, "iterations": self.args.iterations,
            "refine": self.args.refine
        }
        self._emit([record], inputs)
        return EXIT_OK

    def cmd_table(self):
        """
        Prints a reference table, computed now
        :return: the exit code
        """
        record = pymy.app.tables.build_table(self.args.name)
        self._emit([record], {"name": self.args.name})
        return EXIT_OK

    def cmd_verify(self):
        """
        Runs the property suites and prints one line per suite
        :return: 0 if every suite passed, 1 otherwise
        """
        verifier = pymy.app.verify.MyVerifier(
            self.args.grid_points, self.args.x_min, self.args.x_max, self.args.seed, self.args.workers
        )
        results = verifier.run()
        for result in results:
            sys.stdout.write("{0}\n".format(result))
        if all(result.passed for result in results):
            self.show_msg("All {0} suites passed.".format(len(results)), Fore.GREEN)
            return EXIT_OK
        failed = [result.name for result in results if not result.passed]
        self.show_msg("Failed suites: {0}".format(", ".join(failed)), Fore.RED)
        return EXIT_VERIFY_FAILED

    def cmd_plot_data(self):
        """
        Emits the grid data of a curve
        :return: the exit code
        """
        record = pymy.app.plot_data.curve_data(self.args.curve, self.args.x_min, self.args.x_max, self.args.points)
        self._emit([record], record.inputs)
        return EXIT_OK

    def _emit(self, records, inputs):
        """
        Writes the records to stdout in the selected format
        """
        text = pymy.app.output.render(records, self.args.format, inputs, self.args.command)
        sys.stdout.write(text)

    @staticmethod
    def show_msg(msg, color=Fore.WHITE, stream=None):
        """
        Shows message in the console
        :param msg: the message to display
        :param color: text color, default is white
        :param stream: where to write, default is stderr
        """
        stream = sys.stderr if stream is None else stream
        stream.write("{0}{1}{2}\n".format(color, msg, Style.RESET_ALL))

    def _add_format_arg(self, parser, default):
        """
        Adds the --format option
        :param parser: the argparser instance
        :param default: default format
        """
        parser.add_argument('-f', '--format', choices=self.app_vars.output_formats, default=default,
                            help="Output format. Default is {0}.".format(default))


def main(argv=None):
    """
    entry function
    :param argv: arguments without the program name
    :return: the exit code
    """
    try:
        cli = MyCli(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors, 0 on --help and --version
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    error_logging = None
    if not cli.args.no_log:
        error_logging = pymy.core.error_logging.ErrorLogging(cli.app_vars.app_name)
        if not error_logging.setup_logging() or error_logging.error_log_list:
            errors = ', '.join(error_logging.error_log_list)
            MyCli.show_msg(
                "Error logging could not be setup because {0}. You can continue, however errors will not be "
                "logged.".format(errors or "the log directory is missing"), Fore.YELLOW
            )

    try:
        return cli.run()
    finally:
        if error_logging is not None:
            error_logging.close()


if __name__ == '__main__':
    sys.exit(main())
