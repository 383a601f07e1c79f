"""Parameter sweeps over the viscosity ratio and over the right density."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from qhdtw import integrator
from qhdtw import model
from qhdtw import phase_plane
from qhdtw import rankine_hugoniot as rh
from qhdtw.util import SolverError

VARYING = ("mu", "rho_plus")


@dataclass(frozen=True)
class SweepSpec:
    gamma: float
    k: float
    s: float
    rho_minus: float
    varying: str
    values: tuple
    mu: float = None
    rho_plus: float = None
    solver_opts: integrator.ShootOptions = field(default_factory=integrator.ShootOptions)
    workers: int = 1

    def __post_init__(self):
        if self.varying not in VARYING:
            raise ValueError("varying must be one of {}.".format(VARYING))
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if len(self.values) == 0:
            raise ValueError("values must be non-empty.")
        if any(not v > 0 for v in self.values):
            raise ValueError("Sweep values must be > 0.")
        for name in ("gamma", "k", "rho_minus"):
            if not getattr(self, name) > 0:
                raise ValueError("{} must be > 0.".format(name))
        if self.s == 0:
            raise ValueError("s must be nonzero.")
        if self.varying == "mu" and (self.rho_plus is None or not self.rho_plus > 0):
            raise ValueError("A viscosity sweep needs rho_plus > 0.")
        if self.varying == "rho_plus" and (self.mu is None or not self.mu > 0):
            raise ValueError("A density sweep needs mu > 0.")
        if self.workers < 1:
            raise ValueError("workers must be >= 1.")


@dataclass(frozen=True)
class SweepReport:
    spec: SweepSpec
    rows: tuple
    profiles: tuple


def reference_viscosity_sweep(solver_opts=None, workers=1):
    k = np.sqrt(2)
    return SweepSpec(
        gamma=5 / 3,
        k=k,
        s=1.0,
        rho_minus=1.5,
        rho_plus=1.0,
        varying="mu",
        values=(4.0, 1.0, 0.5, 0.25),
        solver_opts=solver_opts if solver_opts is not None else integrator.ShootOptions(),
        workers=workers,
    )


def reference_vacuum_sweep(solver_opts=None, workers=1):
    return SweepSpec(
        gamma=1.5,
        k=np.sqrt(2),
        s=1.0,
        rho_minus=0.5,
        mu=1.2,
        varying="rho_plus",
        values=(0.4, 0.3, 0.1, 0.05),
        solver_opts=solver_opts if solver_opts is not None else integrator.ShootOptions(),
        workers=workers,
    )


def _empty_row(spec, mu, rho_plus):
    return {
        "gamma": spec.gamma,
        "k": spec.k,
        "s": spec.s,
        "rho_minus": spec.rho_minus,
        "rho_plus": rho_plus,
        "mu": mu,
        "mu_over_k": mu / spec.k,
        "u_minus": None,
        "u_plus": None,
        "sqrt_neg_fprime": None,
        "sound_speed_right": None,
        "sonic_flag": None,
        "hypothesis": None,
        "classification": None,
        "eigenvalues": None,
        "extrema_count": None,
        "terminal_error": None,
        "converged": False,
        "error": None,
    }


def _fill_shock(row, shock, gamma):
    row["u_minus"] = shock.left.u
    row["u_plus"] = shock.right.u
    row["sound_speed_right"] = float(model.sound_speed(shock.right.rho, gamma))
    row["sonic_flag"] = rh.sonic_classify(shock.right, gamma).value


def _run_row(spec, shock, mu, rho_plus):
    row = _empty_row(spec, mu, rho_plus)
    profile = None
    try:
        if shock is None:
            shock = rh.select_admissible_branch(spec.rho_minus, rho_plus, spec.s, spec.gamma)
        _fill_shock(row, shock, spec.gamma)
        params = model.FluidParams(spec.gamma, mu, spec.k)

        P_att = phase_plane.attracting_equilibrium(shock)
        fp = float(model.f_prime(P_att, shock.constants, spec.gamma))
        row["sqrt_neg_fprime"] = float(np.sqrt(-fp)) if fp < 0 else float("nan")
        row["eigenvalues"] = phase_plane.attracting_report(shock, params).eigenvalues
        row["classification"] = phase_plane.classify_monotonicity(shock, params).value
        row["hypothesis"] = rh.check_profile_hypotheses(shock, spec.gamma).condition

        profile = integrator.shoot_heteroclinic(shock, params, spec.solver_opts)
        row["extrema_count"] = profile.extrema_count
        row["terminal_error"] = profile.terminal_error
        row["converged"] = profile.converged
    except (ValueError, SolverError) as exc:
        row["error"] = "{}: {}".format(type(exc).__name__, exc)
        if getattr(exc, "terminal_error", None) is not None:
            row["terminal_error"] = exc.terminal_error
    return row, profile


def _run_rows(spec, jobs):
    if spec.workers == 1:
        results = [_run_row(spec, *job) for job in jobs]
    else:
        with ThreadPoolExecutor(max_workers=spec.workers) as pool:
            results = list(pool.map(lambda job: _run_row(spec, *job), jobs))
    rows, profiles = zip(*results)
    return SweepReport(spec=spec, rows=tuple(rows), profiles=tuple(profiles))


def sweep_viscosity(spec):
    """One row per viscosity value, all sharing the same end states."""
    if spec.varying != "mu":
        raise ValueError("sweep_viscosity needs a sweep varying mu.")
    try:
        shock = rh.select_admissible_branch(spec.rho_minus, spec.rho_plus, spec.s, spec.gamma)
    except ValueError:
        # Each row then records the same jump-condition failure.
        shock = None
    return _run_rows(spec, [(shock, mu, spec.rho_plus) for mu in spec.values])


def sweep_vacuum(spec):
    if spec.varying != "rho_plus":
        raise ValueError("sweep_vacuum needs a sweep varying rho_plus.")
    return _run_rows(spec, [(None, spec.mu, rho_plus) for rho_plus in spec.values])
