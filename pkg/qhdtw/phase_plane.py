"""Equilibria and geometry of the planar profile system.

    P' = Q,
    Q' = f(P) / k**2 - (2 s mu / k**2) Q.

The two equilibria are the positive roots of f. The larger one is always a
saddle; the smaller one is attracting for s > 0. For s < 0 the analysis runs on
the reversed system (y -> -y, s -> -s), which has the same f.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from qhdtw import model
from qhdtw import rankine_hugoniot as rh
from qhdtw import util
from qhdtw.util import InvalidConstantsError, SolverError, UnderflowError

ROOT_CHECK_TOL = 1e-6
SCAN_LIMIT = 200
P_STAR_SCAN = 40
RADICAND_TOL = 1e-12


class EquilibriumKind(Enum):
    SADDLE = "Saddle"
    STABLE_NODE = "StableNode"
    STABLE_FOCUS = "StableFocus"
    UNSTABLE_NODE = "UnstableNode"
    UNSTABLE_FOCUS = "UnstableFocus"


class Monotonicity(Enum):
    MONOTONE = "Monotone"
    OSCILLATORY = "Oscillatory"


@dataclass(frozen=True)
class EquilibriumReport:
    P_eq: float
    eigenvalues: tuple
    unstable_eigvec: np.ndarray
    stable_eigvec: np.ndarray
    kind: EquilibriumKind
    jacobian: np.ndarray


@dataclass(frozen=True)
class HomoclinicLoop:
    P_star: float
    P_saddle: float
    P: np.ndarray
    Q_upper: np.ndarray
    Q_lower: np.ndarray


def jacobian(P_eq, c, params):
    k2 = params.k**2
    fp = float(model.f_prime(P_eq, c, params.gamma))
    return np.array([[0.0, 1.0], [fp / k2, -2 * c.s * params.mu / k2]])


def _bracket_P0(c, gamma, bracket_hint=None):
    def fprime(P):
        return float(model.f_prime(P, c, gamma))

    lo, hi = bracket_hint if bracket_hint is not None else (1.0, 1.0)
    for _ in range(SCAN_LIMIT):
        if fprime(lo) < 0:
            break
        lo /= 2
    else:
        raise InvalidConstantsError("Could not bracket the zero of f' from below.")
    for _ in range(SCAN_LIMIT):
        if fprime(hi) > 0:
            break
        hi *= 2
    else:
        raise InvalidConstantsError("Could not bracket the zero of f' from above.")
    return lo, hi


def _find_P0(c, gamma, bracket_hint=None):
    lo, hi = _bracket_P0(c, gamma, bracket_hint)
    return util.bracketed_root(
        lambda P: float(model.f_prime(P, c, gamma)),
        lo,
        hi,
        fprime=lambda P: float(model.f_second(P, c, gamma)),
    )


def find_equilibria(c, params, bracket_hint=None):
    """Both positive roots of f, returned as (P_plus, P_minus).

    The ordering follows the sign of s: the attracting root is P_plus for
    s > 0 and P_minus for s < 0.
    """
    if c.A == 0:
        raise InvalidConstantsError("A = 0: constants do not come from a shock.")
    gamma = params.gamma

    def f(P):
        return float(model.f_eval(P, c, gamma))

    def fprime(P):
        return float(model.f_prime(P, c, gamma))

    P0 = _find_P0(c, gamma, bracket_hint)
    if f(P0) >= 0:
        raise InvalidConstantsError(
            "f has fewer than two positive roots (min f = {:.3e}).".format(f(P0))
        )

    lo = P0
    for _ in range(SCAN_LIMIT):
        lo /= 2
        if f(lo) > 0:
            break
    else:
        raise InvalidConstantsError("Could not bracket the smaller root of f.")
    hi = P0
    for _ in range(SCAN_LIMIT):
        hi *= 2
        if f(hi) > 0:
            break
    else:
        raise InvalidConstantsError("Could not bracket the larger root of f.")

    P_small = util.bracketed_root(f, lo, P0, fprime=fprime)
    P_large = util.bracketed_root(f, P0, hi, fprime=fprime)
    if c.s > 0:
        return P_small, P_large
    return P_large, P_small


def saddle_and_attractor(c, params):
    P_plus, P_minus = find_equilibria(c, params)
    return max(P_plus, P_minus), min(P_plus, P_minus)


def _normalize(v):
    return v / np.linalg.norm(v)


def equilibrium_report(P_eq, c, params):
    f_val = float(model.f_eval(P_eq, c, params.gamma))
    if abs(f_val) >= ROOT_CHECK_TOL:
        raise ValueError(
            "P_eq = {} is not an equilibrium (f = {:.3e}).".format(P_eq, f_val)
        )
    k2 = params.k**2
    s_mu = c.s * params.mu
    fp = float(model.f_prime(P_eq, c, params.gamma))
    disc = k2 * fp + s_mu**2
    root = np.sqrt(complex(disc))
    lam1 = (-s_mu + root) / k2
    lam2 = (-s_mu - root) / k2

    unstable = None
    stable = None
    if fp > 0:
        kind = EquilibriumKind.SADDLE
        sq = np.sqrt(disc)
        unstable = _normalize(-np.array([(s_mu + sq) / fp, 1.0]))
        if unstable[0] > 0:
            unstable = -unstable
        stable = _normalize(np.array([(-s_mu + sq) / fp, -1.0]))
    elif c.s > 0:
        kind = EquilibriumKind.STABLE_FOCUS if disc < 0 else EquilibriumKind.STABLE_NODE
    else:
        kind = (
            EquilibriumKind.UNSTABLE_FOCUS if disc < 0 else EquilibriumKind.UNSTABLE_NODE
        )

    return EquilibriumReport(
        P_eq=float(P_eq),
        eigenvalues=(complex(lam1), complex(lam2)),
        unstable_eigvec=unstable,
        stable_eigvec=stable,
        kind=kind,
        jacobian=jacobian(P_eq, c, params),
    )


def reduced_eigenvector_check(P_saddle, c, params):
    """First components of the saddle eigenvectors of J and of the inviscid J~.

    The unstable direction of J points into the loop when v1_tilde > v1, and
    the stable direction reaches the saddle from outside when v2_tilde > v2.
    """
    fp = float(model.f_prime(P_saddle, c, params.gamma))
    k = params.k
    s_mu = abs(c.s) * params.mu
    sq = np.sqrt(k**2 * fp + s_mu**2)
    return {
        "v1": -(s_mu + sq) / fp,
        "v1_tilde": -k / np.sqrt(fp),
        "v2": (-s_mu + sq) / fp,
        "v2_tilde": k / np.sqrt(fp),
    }


def attracting_equilibrium(shock):
    if shock.s > 0:
        return shock.P_plus
    return shock.P_minus


def attracting_report(shock, params):
    """Equilibrium report at the attracting end state, in the forward-decay frame."""
    c = shock.constants
    if c.s < 0:
        c = c.mirrored()
    return equilibrium_report(attracting_equilibrium(shock), c, params)


def classify_monotonicity(shock, params):
    c = shock.constants
    P_att = attracting_equilibrium(shock)
    fp = float(model.f_prime(P_att, c, params.gamma))
    threshold = np.sqrt(-fp) if fp < 0 else 0.0
    if abs(shock.s) * params.mu / params.k < threshold:
        return Monotonicity.OSCILLATORY
    return Monotonicity.MONOTONE


def find_inflection_P0(c, params, P_plus, P_minus):
    lo = min(P_plus, P_minus)
    hi = max(P_plus, P_minus)
    gamma = params.gamma
    try:
        return util.bracketed_root(
            lambda P: float(model.f_prime(P, c, gamma)),
            lo,
            hi,
            fprime=lambda P: float(model.f_second(P, c, gamma)),
        )
    except ValueError as exc:
        raise SolverError("f' has no sign change between the equilibria.") from exc


def find_P_star(c, params, P_plus, P_minus):
    """Left end of the homoclinic loop through the saddle P_minus."""
    F_saddle = float(model.F_eval(P_minus, c, params))

    def G(P):
        return float(model.F_eval(P, c, params)) - F_saddle

    upper = P_plus
    for j in range(1, P_STAR_SCAN + 1):
        lower = P_plus * 2.0 ** (-j)
        if G(lower) < 0:
            break
        upper = lower
    else:
        raise UnderflowError("F - F(P-) kept its sign down to P = {:.3e}.".format(lower))

    return util.bracketed_root(
        G, lower, upper, fprime=lambda P: float(model.f_eval(P, c, params.gamma)) / params.k**2
    )


def homoclinic_loop(c, params, n_samples):
    if n_samples < 2:
        raise ValueError("n_samples must be >= 2.")
    P_saddle, P_attract = saddle_and_attractor(c, params)
    P_star = find_P_star(c, params, P_attract, P_saddle)

    P = np.linspace(P_star, P_saddle, n_samples)
    radicand = 2 * (model.F_eval(P, c, params) - model.F_eval(P_saddle, c, params))
    if np.any(radicand < -RADICAND_TOL):
        raise InvalidConstantsError(
            "Loop radicand negative ({:.3e}) inside [P*, P-].".format(radicand.min())
        )
    Q_upper = np.sqrt(np.maximum(radicand, 0))
    Q_upper[0] = 0.0
    Q_upper[-1] = 0.0
    return HomoclinicLoop(
        P_star=float(P_star),
        P_saddle=float(P_saddle),
        P=P,
        Q_upper=Q_upper,
        Q_lower=-Q_upper,
    )


def shock_from_constants(c, params):
    """End states implied by (A, B, s): the roots of f with u = s - A / P**2."""
    P_plus, P_minus = find_equilibria(c, params)
    left = rh.EndState(P_minus**2, float(model.velocity_from_density(P_minus, c)))
    right = rh.EndState(P_plus**2, float(model.velocity_from_density(P_plus, c)))
    family = rh.lax_classify(left, right, c.s, params.gamma)
    return rh.ShockData(left=left, right=right, s=c.s, family=family, gamma=params.gamma)
