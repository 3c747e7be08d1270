"""
Property suites behind the verify command. Every suite checks an invariant of the numerics on a grid or on
seeded random samples and reports the first offending (input, expected, got) triple it finds.
"""
import math
import logging
import multiprocessing
import numpy as np
import pymy.core.util
from pymy.core.util import DomainError
import pymy.core.appvars
import pymy.numerics.canonical as canonical
import pymy.numerics.closed_form as closed_form
import pymy.numerics.fixed_point as fixed_point
import pymy.numerics.hypergeom as hypergeom
import pymy.numerics.oracle as oracle
import pymy.numerics.solver as solver

logger = logging.getLogger()

# tolerances of the identities of MY, relative
IDENTITY_TOLERANCES = {
    "radical_form": 1e-12,
    "scaling": 1e-12,
    "inversion": 1e-11,
    "reflection": 1e-11
}

# suite names in report order
SUITES = [
    "inverse_identity",
    "branch_continuity",
    "identities",
    "inequalities",
    "power_inequality",
    "limits",
    "derivative",
    "f_monotonic",
    "seed_bound",
    "contraction",
    "g_monotonic",
    "constants",
    "hypergeometric",
    "canonical_roots",
    "solver_residual",
    "solver_vieta",
    "solver_cross_check",
    "reductions_agree",
    "root_labels",
    "case3_dual",
    "oracle_consistency",
    "oracle_determinism"
]

# (a, True) for MY(x^a) >= MY(x)^a, (a, False) for MY(x^a) <= MY(x)^a
POWER_EXPONENTS = [(0.25, True), (0.5, True), (0.75, True), (-1.0, False), (1.5, False), (2.0, False)]

# y values G(., y) is checked to increase along
G_Y_VALUES = (0.0, 0.5, 2.0, 100.0)


class CheckResult(object):
    """
    Outcome of one suite
    """

    def __init__(self, name, checked, failure=None):
        self.name = name
        self.checked = checked
        # (input, expected, got) of the first failure, None if the suite passed
        self.failure = failure

    @property
    def passed(self):
        return self.failure is None

    def to_dict(self):
        return {"name": self.name, "checked": self.checked, "passed": self.passed, "failure": self.failure}

    def __str__(self):
        if self.passed:
            return "PASS {0} ({1} checks)".format(self.name, self.checked)
        given, expected, got = self.failure
        return "FAIL {0}: input={1!r}, expected={2}, got={3!r}".format(self.name, given, expected, got)


def _point_failures(x):
    """
    The per x checks of the MY evaluators
    :param x: grid point > 0
    :return: list of (suite, input, expected, got)
    """
    failures = []
    z = closed_form.my_value(x)

    residual = abs(canonical.f_canonical(z) - x)
    if residual > 1e-13 * (1.0 + x):
        failures.append(("inverse_identity", x, "|f(MY(x)) - x| <= 1e-13 (1 + x)", residual))

    for name, value in closed_form.identity_residuals(x).items():
        if value > IDENTITY_TOLERANCES[name]:
            failures.append(("identities", x, "{0} residual <= {1}".format(name, IDENTITY_TOLERANCES[name]), value))

    lower, upper = closed_form.bounds(x)
    slack = 1e-14 * z
    if not lower - slack <= z <= upper + slack:
        failures.append(("inequalities", x, "{0!r} <= MY(x) <= {1!r}".format(lower, upper), z))
    root2 = math.sqrt(x)
    root3 = pymy.core.util.real_cbrt(x)
    low, high = (root2, root3) if x <= 1.0 else (root3, root2)
    slack = 1e-14 * max(z, 1.0)
    if not low - slack <= z <= high + slack:
        failures.append(("inequalities", x, "MY(x) between sqrt(x) and cbrt(x)", z))

    for power, at_least in POWER_EXPONENTS:
        # x^a and MY(x)^a must both stay inside the float range
        if abs(power * math.log10(x)) > 300.0:
            continue
        left = closed_form.my_value(x ** power)
        right = z ** power
        slack = 1e-13 * max(left, right)
        if at_least and left < right - slack:
            failures.append(("power_inequality", x, "MY(x^{0}) >= MY(x)^{0} = {1!r}".format(power, right), left))
        elif not at_least and left > right + slack:
            failures.append(("power_inequality", x, "MY(x^{0}) <= MY(x)^{0} = {1!r}".format(power, right), left))

    h = 1e-5 * x
    if math.isfinite(x + h):
        difference = (closed_form.my_value(x + h) - closed_form.my_value(x - h)) / (2.0 * h)
        derivative = closed_form.my_derivative(x)
        if abs(difference / derivative - 1.0) > 1e-6:
            failures.append(("derivative", x, "central difference {0!r}".format(difference), derivative))

    c = fixed_point.constants()
    reference = oracle.my_bisect(x, pymy.core.appvars.AppVars().oracle_tol)
    seed = fixed_point.m0(x)
    if not abs(seed - reference) < c.C0:
        failures.append(("seed_bound", x, "|M0 - MY| < {0!r}".format(c.C0), abs(seed - reference)))
    if not abs(seed / reference - 1.0) < c.C0_rel:
        failures.append(("seed_bound", x, "|M0 / MY - 1| < {0!r}".format(c.C0_rel), abs(seed / reference - 1.0)))

    trace = fixed_point.iterate(x, 6, reference=z)
    floor = 1e-13 * max(1.0, 10.0 * z)
    errors = [row["abs_err"] for row in trace.rows]
    for previous, current in zip(errors, errors[1:]):
        if current > floor and previous > 0.0 and current / previous > 1.0 / 24.0:
            failures.append(("contraction", x, "error ratio <= 1/24", current / previous))
            break

    app_vars = pymy.core.appvars.AppVars()
    if app_vars.hyper_min_x <= x <= app_vars.hyper_max_x:
        hyper = hypergeom.my_hyper(x).value
        if abs(hyper - z) > 1e-9 * z:
            failures.append(("hypergeometric", x, "within 1e-9 relative of {0!r}".format(z), hyper))
    return failures


def _canonical_failures(x):
    """Closed form canonical roots against bisection"""
    expected = oracle.canonical_roots_bisect(x, 1e-14)
    got = closed_form.canonical_roots(x)
    if len(expected) != len(got) or any(abs(a - b) > 1e-9 for a, b in zip(expected.roots, got.roots)):
        return [("canonical_roots", x, expected.roots, got.roots)]
    roots = got.roots
    if roots != sorted(roots):
        return [("canonical_roots", x, "ascending roots", roots)]
    return []


def _cubic_failures(coefficients):
    """
    Solver checks on one depressed cubic
    :param coefficients: (p, q)
    :return: list of (suite, input, expected, got)
    """
    p, q = coefficients
    cubic = canonical.DepressedCubic(p, q)
    failures = []
    result = solver.solve_depressed(cubic)
    worst = max(result.relative_residuals())
    if worst > 1e-10:
        failures.append(("solver_residual", coefficients, "relative residual <= 1e-10", worst))

    if result.kind == solver.THREE_REAL:
        gamma, beta, alpha = result.roots
        scale = abs(alpha) + abs(beta) + abs(gamma)
        pair_scale = abs(alpha * beta) + abs(beta * gamma) + abs(gamma * alpha)
        product_scale = abs(alpha * beta * gamma)
        checks = [
            (alpha + beta + gamma, 0.0, scale),
            (alpha * beta + beta * gamma + gamma * alpha, p, pair_scale),
            (alpha * beta * gamma, -q, product_scale)
        ]
        for got, expected, magnitude in checks:
            if abs(got - expected) > 1e-9 * max(magnitude, abs(expected)):
                failures.append(("solver_vieta", coefficients, expected, got))
                break

        t0, t1, t2 = solver.viete_trig_roots(cubic)
        viete = [t2, t1, t0]
        if any(abs(a - b) > 1e-10 * max(1.0, scale) for a, b in zip(viete, result.roots)):
            failures.append(("solver_cross_check", coefficients, viete, result.roots))
        else:
            reduction = canonical.transform2(cubic)
            canonical_roots = oracle.canonical_roots_bisect(reduction.t, 1e-15)
            bisected = sorted(reduction.backmap.apply(z) for z in canonical_roots.roots)
            if any(abs(a - b) > 1e-9 * max(1.0, scale) for a, b in zip(bisected, result.roots)):
                failures.append(("solver_cross_check", coefficients, bisected, result.roots))

        if q != 0.0:
            alpha2, beta2, gamma2 = solver.roots_transform2(cubic)
            primed = solver.roots_transform1(cubic)
            tol = 1e-10 * max(1.0, scale)
            unprimed = (alpha2, beta2, gamma2)
            if any(abs(a - b) > tol for a, b in zip(sorted(primed), sorted(unprimed))):
                failures.append(("reductions_agree", coefficients, sorted(unprimed), sorted(primed)))
            else:
                # (alpha', beta', gamma') in terms of (alpha, beta, gamma)
                expected = (gamma2, alpha2, beta2) if q > 0.0 else (alpha2, gamma2, beta2)
                if any(abs(a - b) > tol for a, b in zip(primed, expected)):
                    failures.append(("root_labels", coefficients, expected, primed))
    elif result.case == 3:
        via_t2, via_t1 = solver.case3_root(cubic)
        if abs(via_t2 - via_t1) > 1e-10 * abs(via_t1):
            failures.append(("case3_dual", coefficients, via_t1, via_t2))
    return failures


def _oracle_failures(x):
    """Bisection residual within its bracket width, and the same bits on a second run"""
    tol = pymy.core.appvars.AppVars().oracle_tol
    first = oracle.my_oracle(x, tol)
    second = oracle.my_oracle(x, tol)
    failures = []
    if first.value != second.value:
        failures.append(("oracle_determinism", x, first.value, second.value))
    # the bracket can stop above tol once it is one ulp wide
    width = max(tol, 2.0 * first.error_bound)
    slope = max(1.0, canonical.f_derivative(first.value + width))
    allowed = 2.0 * width * slope + 1e-15 * x
    residual = first.residual()
    if residual > allowed:
        failures.append(("oracle_consistency", x, "|f(root) - x| <= {0!r}".format(allowed), residual))
    return failures


def random_targets(count, seed, x_min, x_max):
    """
    Targets log uniform over [x_min, x_max]
    :param count: number of targets
    :param seed: seed of the generator
    :return: list of floats
    """
    rng = np.random.default_rng(seed)
    exponents = rng.uniform(math.log10(x_min), math.log10(x_max), size=count)
    return [pymy.core.util.clamp(float(10.0 ** e), x_min, x_max) for e in exponents]


def random_cubics(count, seed):
    """
    Depressed cubic coefficients with |p|, |q| log uniform over [1e-6, 1e6] and random signs
    :param count: number of cubics
    :param seed: seed of the generator
    :return: list of (p, q)
    """
    rng = np.random.default_rng(seed)
    magnitudes = 10.0 ** rng.uniform(-6.0, 6.0, size=(count, 2))
    signs = rng.choice([-1.0, 1.0], size=(count, 2))
    return [(float(p), float(q)) for p, q in magnitudes * signs]


class MyVerifier(object):
    """
    Runs every suite
    :param grid_points: number of grid points and of random cubics, >= AppVars.verify_min_grid_points
    :param x_min: first point of the log grid, > 0
    :param x_max: last point of the log grid
    :param seed: seed of the random cubics
    :param workers: processes used for the grid and the cubics, 1 runs in process
    """

    def __init__(self, grid_points=None, x_min=None, x_max=None, seed=None, workers=None):
        app_vars = pymy.core.appvars.AppVars()
        self.grid_points = app_vars.verify_grid_points if grid_points is None else grid_points
        self.x_min = app_vars.verify_x_min if x_min is None else x_min
        self.x_max = app_vars.verify_x_max if x_max is None else x_max
        self.seed = app_vars.verify_seed if seed is None else seed
        self.workers = app_vars.verify_workers if workers is None else workers

        if self.grid_points < app_vars.verify_min_grid_points:
            raise DomainError("verify needs at least {0} grid points, got {1}".format(
                app_vars.verify_min_grid_points, self.grid_points)
            )
        if not 0.0 < self.x_min < self.x_max:
            raise DomainError("verify needs 0 < x_min < x_max, got [{0}, {1}]".format(self.x_min, self.x_max))
        if self.workers < 1:
            raise DomainError("workers must be >= 1, got {0}".format(self.workers))

    def _map(self, func, items):
        """
        Applies func to every item, in a process pool when there is more than one worker. Results come back in
        input order
        """
        if self.workers == 1:
            return [func(item) for item in items]
        p = multiprocessing.Pool(self.workers)
        try:
            results = p.map(func, items)
        finally:
            p.close()
            p.join()
        return results

    def canonical_grid(self):
        """Targets covering the three scenarios, kept away from the double roots"""
        inner = [t * canonical.LOCAL_MAX for t in pymy.core.util.linear_grid(0.001, 0.999, self.grid_points)]
        outer = pymy.core.util.log_grid(1e-3, 1e3, max(2, self.grid_points // 10))
        return [-x for x in outer] + inner + [canonical.LOCAL_MAX + x for x in outer]

    def _branch_continuity(self):
        """
        The two branches meet at 2/27. MY has slope 2 there, so the gap across [2/27 - eps, 2/27 + eps] is 4 eps
        up to terms of order eps^3, what is left after removing it must be at most 1e-10
        """
        failures = []
        for eps in (1e-12, 1e-10, 1e-8):
            gap = closed_form.seam_gap(eps)
            if gap > 1e-10:
                failures.append(("branch_continuity", eps, "seam gap <= 1e-10", gap))
        return failures

    @staticmethod
    def _limits():
        """MY(x) against sqrt(2x) near 0 and cbrt(2x) at large x"""
        failures = []
        small = 1e-12
        ratio = closed_form.my_value(small) / math.sqrt(2.0 * small)
        if abs(ratio - 1.0) > 1e-6:
            failures.append(("limits", small, "MY(x) / sqrt(2x) within 1e-6 of 1", ratio))
        large = 1e12
        ratio = closed_form.my_value(large) / pymy.core.util.real_cbrt(2.0 * large)
        if abs(ratio - 1.0) > 1e-4:
            failures.append(("limits", large, "MY(x) / cbrt(2x) within 1e-4 of 1", ratio))
        return failures

    def _f_monotonic(self):
        """f increasing on ]-inf, -2/3] and [0, inf[, decreasing on [-2/3, 0], sampled"""
        intervals = [
            (-10.0, canonical.LOCAL_MAX_AT, True),
            (canonical.LOCAL_MAX_AT, 0.0, False),
            (0.0, 10.0, True)
        ]
        for lo, hi, increasing in intervals:
            points = pymy.core.util.linear_grid(lo, hi, self.grid_points)
            values = [canonical.f_canonical(z) for z in points]
            for z, a, b in zip(points[1:], values, values[1:]):
                if (b <= a) if increasing else (b >= a):
                    expected = "increasing" if increasing else "decreasing"
                    return [("f_monotonic", z, "f {0} on [{1}, {2}]".format(expected, lo, hi), b)]
        return []

    @staticmethod
    def _g_monotonic(grid):
        """G(., y) strictly increasing in x and G(x, .) strictly decreasing, dG/dy < 0"""
        for y in G_Y_VALUES:
            values = [fixed_point.G(x, y) for x in grid]
            for x, a, b in zip(grid[1:], values, values[1:]):
                if not b > a:
                    return [("g_monotonic", (x, y), "G increasing in x", b)]
            for x in grid:
                slope = fixed_point.dG_dy(x, y)
                if not slope < 0.0:
                    return [("g_monotonic", (x, y), "dG/dy < 0", slope)]
        return []

    def _constants(self):
        c = fixed_point.constants()
        printed = {"C1": 1.0 / 21.2398, "C2": 1.0 / 30.5475, "C0": 1.0 / 694.061782, "K": 25.0572}
        failures = []
        for name, expected in sorted(printed.items()):
            got = getattr(c, name)
            if abs(got / expected - 1.0) > 1e-4:
                failures.append(("constants", name, expected, got))
        return failures

    def run(self):
        """
        :return: list of CheckResult, one per suite in SUITES order
        """
        grid = pymy.core.util.log_grid(self.x_min, self.x_max, self.grid_points)
        canonical_grid = self.canonical_grid()
        cubics = random_cubics(self.grid_points, self.seed)
        targets = random_targets(self.grid_points, self.seed, self.x_min, self.x_max)
        logger.info("verify: {0} grid points on [{1}, {2}], seed {3}, {4} workers".format(
            self.grid_points, self.x_min, self.x_max, self.seed, self.workers)
        )

        failures = []
        for point_failures in self._map(_point_failures, grid):
            failures.extend(point_failures)
        for point_failures in self._map(_canonical_failures, canonical_grid):
            failures.extend(point_failures)
        for cubic_failures in self._map(_cubic_failures, cubics):
            failures.extend(cubic_failures)
        for target_failures in self._map(_oracle_failures, targets):
            failures.extend(target_failures)
        failures.extend(self._branch_continuity())
        failures.extend(self._limits())
        failures.extend(self._f_monotonic())
        failures.extend(self._g_monotonic(grid))
        failures.extend(self._constants())

        hyper_points = len([x for x in grid if 1e-3 <= x <= 1e4])
        counts = {
            "inverse_identity": len(grid),
            "branch_continuity": 3,
            "identities": len(grid),
            "inequalities": 2 * len(grid),
            "power_inequality": len(POWER_EXPONENTS) * len(grid),
            "limits": 2,
            "derivative": len(grid),
            "f_monotonic": 3 * self.grid_points,
            "seed_bound": 2 * len(grid),
            "contraction": len(grid),
            "g_monotonic": 2 * len(G_Y_VALUES) * len(grid),
            "constants": 4,
            "hypergeometric": hyper_points,
            "canonical_roots": len(canonical_grid),
            "solver_residual": len(cubics),
            "solver_vieta": len(cubics),
            "solver_cross_check": len(cubics),
            "reductions_agree": len(cubics),
            "root_labels": len(cubics),
            "case3_dual": len(cubics),
            "oracle_consistency": len(targets),
            "oracle_determinism": len(targets)
        }
        results = []
        for name in SUITES:
            first = next((failure for failure in failures if failure[0] == name), None)
            results.append(CheckResult(name, counts[name], None if first is None else first[1:]))
            if first is not None:
                logger.error("verify failed {0}: {1}".format(name, first[1:]))
        return results
