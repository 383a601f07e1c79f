import time
from dataclasses import dataclass

import numpy as np
import scipy as sp

from qhdtw import model
from qhdtw import phase_plane
from qhdtw import rankine_hugoniot as rh
from qhdtw import util
from qhdtw.util import (
    ContainmentError,
    NonConvergenceError,
    StiffnessError,
    VacuumCrossingError,
)

MIN_STEP = 1e-14
EXTREMA_FLOOR = 1e-8


@dataclass(frozen=True)
class ShootOptions:
    perturbation: float = None
    conv_tol: float = 1e-6
    conv_steps: int = 3
    y_max: float = 1e4
    tol: float = 1e-10
    containment_tol: float = 1e-7
    vacuum: float = 1e-10
    dense_points: int = 4
    verbose: bool = False

    def __post_init__(self):
        if self.perturbation is not None and self.perturbation <= 0:
            raise ValueError("perturbation must be > 0.")
        for name in ("conv_tol", "y_max", "tol", "containment_tol", "vacuum"):
            if not getattr(self, name) > 0:
                raise ValueError("{} must be > 0.".format(name))
        if self.conv_steps < 1:
            raise ValueError("conv_steps must be >= 1.")
        if self.dense_points < 1:
            raise ValueError("dense_points must be >= 1.")


@dataclass(frozen=True)
class Trajectory:
    y: np.ndarray
    P: np.ndarray
    Q: np.ndarray
    step_sizes: np.ndarray
    stopped: bool
    H: np.ndarray = None
    V: np.ndarray = None


@dataclass(frozen=True)
class Profile:
    trajectory: Trajectory
    shock: rh.ShockData
    params: model.FluidParams
    case: rh.ProfileCase
    classification: phase_plane.Monotonicity
    extrema_count: int
    converged: bool
    terminal_error: float
    P_saddle: float
    P_target: float


def profile_rhs(c, gamma, k, mu, s=None):
    """Right-hand side of P' = Q, Q' = f(P)/k**2 - (2 s mu/k**2) Q.

    mu = 0 gives the inviscid (energy-conserving) system.
    """
    s = c.s if s is None else s
    k2 = k**2
    friction = 2 * s * mu / k2

    def rhs(y, state):
        P, Q = state
        if not P > 0:
            return np.array([Q, np.nan])
        return np.array([Q, float(model.f_eval(P, c, gamma)) / k2 - friction * Q])

    return rhs


def integrate(
    rhs,
    y0,
    state0,
    y_max,
    tol,
    stop=None,
    monitor=None,
    max_dP=None,
    vacuum=1e-10,
    dense_points=4,
    verbose=False,
):
    """Adaptive Dormand-Prince 5(4) integration from y0 towards y_max.

    Every accepted step contributes `dense_points` output points (the step end
    plus interpolated interior points), more when P moves by over `max_dP`
    within the step. `stop(y, P, Q)` is consulted after each accepted step.
    `monitor(y, P, Q)` returns the (H, dist) pair shown in verbose status rows.
    """
    if not tol > 0:
        raise ValueError("tol must be > 0.")
    P0, Q0 = state0
    if not P0 > 0:
        raise ValueError("Initial P must be > 0.")

    # Set when a stage of the current step evaluated the field at P <= 0.
    crossed = [False]

    def guarded_rhs(y, state):
        if state[0] <= 0:
            crossed[0] = True
        return rhs(y, state)

    def step_failure(message):
        if crossed[0]:
            return VacuumCrossingError(
                "Trial step crossed P = 0 after y = {:.6e}.".format(solver.t)
            )
        return StiffnessError(message)

    solver = sp.integrate.RK45(
        guarded_rhs, y0, np.array([P0, Q0], dtype=float), y_max, rtol=tol, atol=tol
    )
    ys = [float(y0)]
    Ps = [float(P0)]
    Qs = [float(Q0)]
    step_sizes = []
    stopped = False

    def status(n, y, P, Q):
        if monitor is None:
            util.print_status(n, y, P, Q)
        else:
            util.print_status(n, y, P, Q, *monitor(y, P, Q))

    if verbose:
        util.print_header(monitored=monitor is not None)

    while solver.status == "running":
        crossed[0] = False
        message = solver.step()
        if solver.status == "failed":
            raise step_failure("Integrator failed at y = {:.6e}: {}".format(solver.t, message))
        h = solver.t - solver.t_old
        if h < MIN_STEP:
            raise step_failure("Step size underflow at y = {:.6e}.".format(solver.t))
        step_sizes.append(h)

        P_new, Q_new = solver.y
        n_sub = dense_points
        if max_dP is not None:
            n_sub = max(n_sub, int(np.ceil(abs(P_new - Ps[-1]) / max_dP)) + 1)
        if n_sub > 1:
            inner_y = solver.t_old + h * np.arange(1, n_sub) / n_sub
            inner = solver.dense_output()(inner_y)
            ys.extend(inner_y)
            Ps.extend(inner[0])
            Qs.extend(inner[1])
        ys.append(solver.t)
        Ps.append(P_new)
        Qs.append(Q_new)

        if not min(Ps[-n_sub:]) >= vacuum:
            raise VacuumCrossingError(
                "P dropped below {:.1e} at y = {:.6e}.".format(vacuum, solver.t)
            )

        n = len(step_sizes)
        if verbose and (n == 1 or n % util.STATUS_EVERY == 0):
            status(n, solver.t, P_new, Q_new)

        if stop is not None and stop(solver.t, P_new, Q_new):
            stopped = True
            break

    if verbose:
        status(len(step_sizes), ys[-1], Ps[-1], Qs[-1])
        util.print_footer()

    return Trajectory(
        y=np.array(ys),
        P=np.array(Ps),
        Q=np.array(Qs),
        step_sizes=np.array(step_sizes),
        stopped=stopped,
    )


def _count_extrema(P, noise_floor):
    maxima, _ = sp.signal.find_peaks(P, prominence=noise_floor)
    minima, _ = sp.signal.find_peaks(-P, prominence=noise_floor)
    return len(maxima) + len(minima)


def count_extrema(profile, noise_floor=None):
    if noise_floor is None:
        noise_floor = EXTREMA_FLOOR * abs(profile.shock.P_minus - profile.shock.P_plus)
    return _count_extrema(profile.trajectory.P, noise_floor)


def shoot_heteroclinic(shock, params, opts=None):
    """Shoot from the saddle along its unstable manifold into the attractor.

    Case I integrates forward from [P-, 0]. Case II integrates the reversed
    system from [P+, 0] and flips the samples back into the forward parameter.
    """
    opts = opts if opts is not None else ShootOptions()
    hypotheses = rh.check_profile_hypotheses(shock, params.gamma)
    case = hypotheses.case

    if case is rh.ProfileCase.CASE_I:
        c = shock.constants
        P_saddle = shock.P_minus
        P_target = shock.P_plus
    else:
        c = shock.constants.mirrored()
        P_saddle = shock.P_plus
        P_target = shock.P_minus

    saddle = phase_plane.equilibrium_report(P_saddle, c, params)
    delta = opts.perturbation if opts.perturbation is not None else 1e-6 * P_saddle
    start = np.array([P_saddle, 0.0]) + delta * saddle.unstable_eigvec

    P_star = phase_plane.find_P_star(c, params, P_target, P_saddle)
    F_saddle = float(model.F_eval(P_saddle, c, params))

    if opts.verbose:
        util.print_info()
        util.print_bullet("case:", case.value)
        util.print_bullet("saddle / attractor:", "{:.6g} / {:.6g}".format(P_saddle, P_target))
        util.print_bullet("perturbation:", format(delta, ".3e"))
        solve_start_time = time.time()

    streak = [0]
    rho_target = P_target**2

    def monitor(y, P, Q):
        H = float(model.F_eval(P, c, params)) - Q**2 / 2 - F_saddle
        return H, float(np.hypot(P - P_target, Q))

    def stop(y, P, Q):
        H, dist = monitor(y, P, Q)
        if H < -opts.containment_tol or P > P_saddle + opts.containment_tol:
            raise ContainmentError(
                "Trajectory left the homoclinic region at y = {:.6e} (H = {:.3e}).".format(y, H)
            )
        # Both the state and the density have to settle.
        if dist < opts.conv_tol and abs(P**2 - rho_target) < opts.conv_tol:
            streak[0] += 1
        else:
            streak[0] = 0
        return streak[0] >= opts.conv_steps

    traj = integrate(
        profile_rhs(c, params.gamma, params.k, params.mu),
        0.0,
        start,
        opts.y_max,
        opts.tol,
        stop=stop,
        monitor=monitor,
        max_dP=0.01 * (P_saddle - P_star),
        vacuum=opts.vacuum,
        dense_points=opts.dense_points,
        verbose=opts.verbose,
    )
    terminal_error = float(np.hypot(traj.P[-1] - P_target, traj.Q[-1]))

    if opts.verbose:
        util.print_summary(
            traj.stopped, terminal_error, len(traj.step_sizes), util.elapsed(solve_start_time)
        )

    if not traj.stopped:
        raise NonConvergenceError(
            "No convergence within y_max = {:.3e} (terminal error {:.3e}).".format(
                opts.y_max, terminal_error
            ),
            terminal_error,
        )

    H = model.energy_H(traj.P, traj.Q, c, params, P_saddle)
    V = model.lyapunov_V(traj.P, traj.Q, c, params, P_target, P_saddle)
    if H.min() < -opts.containment_tol:
        raise ContainmentError("Dense output left the homoclinic region (H = {:.3e}).".format(H.min()))

    if case is rh.ProfileCase.CASE_I:
        traj = Trajectory(
            y=traj.y, P=traj.P, Q=traj.Q, step_sizes=traj.step_sizes, stopped=True, H=H, V=V
        )
    else:
        traj = Trajectory(
            y=-traj.y[::-1],
            P=traj.P[::-1],
            Q=-traj.Q[::-1],
            step_sizes=traj.step_sizes[::-1],
            stopped=True,
            H=H[::-1],
            V=V[::-1],
        )

    noise_floor = EXTREMA_FLOOR * abs(shock.P_minus - shock.P_plus)
    return Profile(
        trajectory=traj,
        shock=shock,
        params=params,
        case=case,
        classification=phase_plane.classify_monotonicity(shock, params),
        extrema_count=_count_extrema(traj.P, noise_floor),
        converged=True,
        terminal_error=terminal_error,
        P_saddle=P_saddle,
        P_target=P_target,
    )


def profile_fields(profile):
    P = profile.trajectory.P
    return {
        "y": profile.trajectory.y,
        "P": P,
        "Q": profile.trajectory.Q,
        "rho": P**2,
        "u": model.velocity_from_density(P, profile.shock.constants),
    }
