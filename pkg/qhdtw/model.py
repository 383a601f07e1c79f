"""Closed-form thermodynamic and profile functions.

Profiles are written as rho = P(y)**2, u = U(y) in the stretched variable
y = (x - s t) / eps. With the mass-flux constant A and the Bernoulli constant
B, P solves

    P'' = f(P) / k**2 - (2 s mu / k**2) P',
    f(P) = (0.5 * (A**2 / P**4 - s**2) + h(P**2) + B) * P.

Every function here is elementwise over numpy arrays.
"""

from dataclasses import dataclass

import numpy as np

from qhdtw.util import check_positive

ISOTHERMAL_TOL = 1e-12


def is_isothermal(gamma):
    return abs(gamma - 1) < ISOTHERMAL_TOL


@dataclass(frozen=True)
class FluidParams:
    gamma: float
    mu: float
    k: float

    def __post_init__(self):
        if not np.isfinite(self.gamma) or self.gamma < 1:
            raise ValueError("gamma must be >= 1.")
        if not np.isfinite(self.mu) or self.mu <= 0:
            raise ValueError("mu must be > 0.")
        if not np.isfinite(self.k) or self.k <= 0:
            raise ValueError("k must be > 0.")


@dataclass(frozen=True)
class ProfileConstants:
    A: float
    B: float
    s: float

    def __post_init__(self):
        if not np.isfinite(self.A) or not np.isfinite(self.B):
            raise ValueError("A and B must be finite.")
        if not np.isfinite(self.s) or self.s == 0:
            raise ValueError("s must be nonzero.")

    def mirrored(self):
        # y -> -y: f only sees s**2, the friction term changes sign.
        return ProfileConstants(self.A, self.B, -self.s)


def enthalpy(rho, gamma):
    check_positive("rho", rho)
    rho = np.asarray(rho, dtype=float)
    if is_isothermal(gamma):
        return np.log(rho)
    return gamma / (gamma - 1) * rho ** (gamma - 1)


def enthalpy_prime(rho, gamma):
    check_positive("rho", rho)
    rho = np.asarray(rho, dtype=float)
    if is_isothermal(gamma):
        return 1 / rho
    return gamma * rho ** (gamma - 2)


def sound_speed(rho, gamma):
    check_positive("rho", rho)
    rho = np.asarray(rho, dtype=float)
    if is_isothermal(gamma):
        return np.ones_like(rho)
    return np.sqrt(gamma * rho ** (gamma - 1))


def profile_constants(end_state, s, gamma):
    rho = end_state.rho
    u = end_state.u
    A = (s - u) * rho
    B = s * u - u**2 / 2 - float(enthalpy(rho, gamma))
    return ProfileConstants(A=A, B=B, s=s)


def f_eval(P, c, gamma):
    check_positive("P", P)
    P = np.asarray(P, dtype=float)
    return (0.5 * (c.A**2 / P**4 - c.s**2) + enthalpy(P**2, gamma) + c.B) * P


def f_eval_end_states(P, P_plus, P_minus, gamma):
    """f with A and B eliminated in favour of the two end states."""
    check_positive("P", P)
    P = np.asarray(P, dtype=float)
    rho_p = P_plus**2
    rho_m = P_minus**2
    h_p = enthalpy(rho_p, gamma)
    h_m = enthalpy(rho_m, gamma)
    denom = P_plus**4 - P_minus**4
    return (
        (P_plus * P_minus) ** 4 / P**4 * (h_p - h_m) / denom
        + enthalpy(P**2, gamma)
        - (P_plus**4 * h_p - P_minus**4 * h_m) / denom
    ) * P


def f_prime(P, c, gamma):
    check_positive("P", P)
    P = np.asarray(P, dtype=float)
    head = -3 * c.A**2 / (2 * P**4) + c.B - c.s**2 / 2
    if is_isothermal(gamma):
        return head + np.log(P**2) + 2
    return head + gamma * (2 * gamma - 1) / (gamma - 1) * P ** (2 * (gamma - 1))


def f_second(P, c, gamma):
    check_positive("P", P)
    P = np.asarray(P, dtype=float)
    if is_isothermal(gamma):
        return 6 * c.A**2 / P**5 + 2 / P
    return 6 * c.A**2 / P**5 + 2 * gamma * (2 * gamma - 1) * P ** (2 * gamma - 3)


def F_eval(P, c, params):
    """Antiderivative of f / k**2."""
    check_positive("P", P)
    P = np.asarray(P, dtype=float)
    k2 = params.k**2
    if is_isothermal(params.gamma):
        return (
            -c.A**2 / (4 * P**2)
            + 0.5 * (c.B - c.s**2 / 2 - 1) * P**2
            + 0.5 * P**2 * np.log(P**2)
        ) / k2
    gamma = params.gamma
    return (
        -c.A**2 / P**2 + (2 * c.B - c.s**2) * P**2 + 2 / (gamma - 1) * P ** (2 * gamma)
    ) / (4 * k2)


def energy_H(P, Q, c, params, P_minus):
    """Conserved energy of the inviscid system, zero on the homoclinic loop."""
    return F_eval(P, c, params) - np.asarray(Q) ** 2 / 2 - F_eval(P_minus, c, params)


def lyapunov_V(P, Q, c, params, P_plus, P_minus):
    return np.asarray(Q) ** 2 / 2 - F_eval(P, c, params) + F_eval(P_plus, c, params)


def velocity_from_density(P, c):
    check_positive("P", P)
    P = np.asarray(P, dtype=float)
    return c.s - c.A / P**2


def reduced_eigenvalues(P_eq, c, params):
    fp = complex(f_prime(P_eq, c, params.gamma))
    root = np.sqrt(fp) / params.k
    return root, -root
