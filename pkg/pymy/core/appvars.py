import os
import tempfile


class AppVars:
    """
    Variables used by the library and the command line app - defaults for tolerances, iteration caps,
    printed precisions and log locations. Nothing here is read from disk or the environment, so two runs
    with the same flags always behave the same.

    To see a list of App Vars:
    print(AppVars_instance)
    """
    def __init__(self):

        # BASIC / GENERAL

        self.app_name = "pymy"
        self.version = "1.0.0"
        # base temp dir
        self.local_temp_dir = os.path.normpath(tempfile.gettempdir())

        # LOGGING

        # root of all logs, one sub folder per app name
        self.log_root_dir = os.path.join(self.local_temp_dir, self.app_name, "logs")
        # how long to keep logs
        self.days_to_keep_log = 7

        # CANONICAL / CLOSED FORM

        # x(x - 2/27) rounding to a negative smaller than this times x^2 is treated as 0 at the branch seam
        self.seam_guard = 1e-18
        # |xi| within this of 1 (or canonical x within this of 0 or 2/27) means a double root
        self.double_root_tol = 1e-12
        # |p| below this is treated as p = 0, 1/p^3 overflows and case 2/3 formulas lose all precision
        self.near_zero_p = 1e-300
        # thresholds past which xi is computed on log scaled factors
        self.xi_tiny_p = 1e-100
        self.xi_huge_q = 1e100
        # x above this is factored out of cube roots and radicands, 2x and x^2 overflow near the float max
        self.scaled_radicand_above = 1e300

        # FIXED POINT

        self.max_iterations = 64
        self.min_fixed_tol = 1e-15
        # tolerance of eval --method fixed when neither --iterations nor --tol is given
        self.default_fixed_tol = 1e-12
        # the bound used in certificates, the printed rational rather than a re-derived value
        self.certified_c0 = 1.0 / 694.061782
        # conservative K from the theorem statement - smaller K gives larger bounds
        self.certified_k = 25.05

        # HYPERGEOMETRIC

        self.hyper_max_terms = 20000
        self.hyper_target_tol = 1e-12
        self.hyper_min_x = 1e-3
        self.hyper_max_x = 1e4
        # candidate arguments larger than this in magnitude trigger the MY argument reduction
        self.hyper_reduce_above = 0.9

        # ORACLE

        self.bisect_max_iterations = 200
        self.bisect_min_tol = 1e-15
        self.oracle_tol = 1e-13

        # OUTPUT

        self.value_decimals = 10
        self.error_sig_digits = 3
        self.output_formats = ["text", "csv", "json"]
        self.table_names = ["my-ex1", "my-ex2", "cubic-ex1", "cubic-ex2"]

        # VERIFY / PLOT DATA

        self.verify_grid_points = 1000
        self.verify_min_grid_points = 10
        self.verify_seed = 0
        self.verify_x_min = 1e-6
        self.verify_x_max = 1e6
        self.verify_workers = 1
        self.plot_points = 100
        self.plot_curves = ["my", "f", "bounds", "m0-error", "powers", "roots"]

    def __str__(self):
        return "\n".join(
            "{0}: {1}".format(name, value) for name, value in sorted(vars(self).items())
        )
