import numpy as np
import scipy as sp
import time

PRINT_WIDTH = 71
BULLET_WIDTH = 32
STATUS_EVERY = 250

# Root-finding tolerance on the independent variable.
ROOT_XTOL = 1e-12


class DegenerateShockError(ValueError):
    pass


class NoProfileGuaranteeError(ValueError):
    def __init__(self, message, failed=None):
        super().__init__(message)
        self.failed = failed or []


class InvalidConstantsError(ValueError):
    pass


class SolverError(RuntimeError):
    pass


class VacuumCrossingError(SolverError):
    pass


class StiffnessError(SolverError):
    pass


class UnderflowError(SolverError):
    pass


class ContainmentError(SolverError):
    pass


class NonConvergenceError(SolverError):
    def __init__(self, message, terminal_error):
        super().__init__(message)
        self.terminal_error = terminal_error


def check_positive(name, v):
    if np.any(np.asarray(v) <= 0):
        raise ValueError("{} must be > 0.".format(name))


def bracketed_root(func, lo, hi, fprime=None, xtol=ROOT_XTOL):
    """Root of `func` in [lo, hi], which must bracket a sign change.

    Brent's method does the bracketed search; when `fprime` is given one
    Newton step polishes the result, kept only if it stays inside the bracket
    and lowers the residual.
    """
    f_lo = func(lo)
    f_hi = func(hi)
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        raise ValueError("Interval [{}, {}] does not bracket a root.".format(lo, hi))

    x = sp.optimize.brentq(func, lo, hi, xtol=xtol, rtol=4 * np.finfo(float).eps)

    if fprime is not None:
        fx = func(x)
        dfx = fprime(x)
        if dfx != 0 and np.isfinite(dfx):
            x_newton = x - fx / dfx
            if lo < x_newton < hi and abs(func(x_newton)) < abs(fx):
                x = x_newton
    return x


def print_info():
    print("-" * PRINT_WIDTH)
    print("QHDTW: traveling-wave profiles for viscous-dispersive QHD".center(PRINT_WIDTH))
    print("-" * PRINT_WIDTH)


def print_header(monitored=True):
    print("-" * PRINT_WIDTH)
    if monitored:
        print("  step |     y     |     P     |     Q     |     H     |   dist    ")
    else:
        print("  step |     y     |     P     |     Q     ")
    print("-" * PRINT_WIDTH)


def print_footer():
    print("-" * PRINT_WIDTH)


def print_status(step_num, y, P, Q, H=None, dist=None):
    columns = [y, P, Q]
    if H is not None:
        columns += [H, dist]
    print(
        "{} | {}".format(
            str(step_num).rjust(6),
            "  ".join(format(v, ".3e").ljust(10) for v in columns),
        )
    )


def print_bullet(label, value):
    print("{} {}".format(label.ljust(BULLET_WIDTH), value))


def print_summary(converged, terminal_error, n_steps, total_solve_time):
    print()
    print_bullet("converged:", converged)
    print_bullet("terminal error:", format(terminal_error, ".3e"))
    print_bullet("accepted steps:", n_steps)
    print("{} {:.4}s".format("total solve time:".ljust(BULLET_WIDTH), total_solve_time))


def elapsed(start_time):
    return time.time() - start_time
