"""Jump conditions, Lax admissibility and the existence hypotheses."""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from qhdtw import model
from qhdtw.util import DegenerateShockError, NoProfileGuaranteeError

RH_TOL = 1e-9
SONIC_BAND = 1e-12


class LaxFamily(Enum):
    LAX1 = "Lax1"
    LAX2 = "Lax2"
    NOT_ADMISSIBLE = "NotAdmissible"


class SonicType(Enum):
    SUBSONIC = "Subsonic"
    SUPERSONIC = "Supersonic"
    SONIC = "Sonic"


class ProfileCase(Enum):
    CASE_I = "CaseI"
    CASE_II = "CaseII"


@dataclass(frozen=True)
class EndState:
    rho: float
    u: float

    def __post_init__(self):
        if not np.isfinite(self.rho) or self.rho <= 0:
            raise ValueError("End state density must be > 0.")
        if not np.isfinite(self.u):
            raise ValueError("End state velocity must be finite.")

    @property
    def P(self):
        return float(np.sqrt(self.rho))


@dataclass(frozen=True)
class ShockData:
    left: EndState
    right: EndState
    s: float
    family: LaxFamily
    gamma: float
    constants: model.ProfileConstants = field(init=False)

    def __post_init__(self):
        if self.family is LaxFamily.NOT_ADMISSIBLE:
            raise NoProfileGuaranteeError("ShockData requires a Lax 1- or 2-shock.")
        actual = lax_classify(self.left, self.right, self.s, self.gamma)
        if actual is not self.family:
            raise NoProfileGuaranteeError(
                "Labelled {} but the characteristic speeds give {}.".format(
                    self.family.value, actual.value
                ),
                failed=[self.family.value],
            )
        r1, r2 = rh_residuals(self.left, self.right, self.s, self.gamma)
        if abs(r1) > RH_TOL or abs(r2) > RH_TOL:
            raise ValueError(
                "End states violate the jump conditions: residuals {:.3e}, {:.3e}.".format(
                    r1, r2
                )
            )
        c_right = model.profile_constants(self.right, self.s, self.gamma)
        c_left = model.profile_constants(self.left, self.s, self.gamma)
        for name in ("A", "B"):
            a = getattr(c_right, name)
            b = getattr(c_left, name)
            if abs(a - b) > RH_TOL * max(abs(a), abs(b), 1):
                raise ValueError(
                    "Constant {} differs between end states: {} vs {}.".format(name, b, a)
                )
        object.__setattr__(self, "constants", c_right)

    @property
    def P_minus(self):
        return self.left.P

    @property
    def P_plus(self):
        return self.right.P


@dataclass(frozen=True)
class HypothesisReport:
    case: ProfileCase
    condition: str
    subsonic_holds: bool
    speed_order_holds: bool
    left_sonic: SonicType
    right_sonic: SonicType
    notes: tuple


def rh_residuals(W_minus, W_plus, s, gamma):
    r_mass = s * (W_plus.rho - W_minus.rho) - (W_plus.rho * W_plus.u - W_minus.rho * W_minus.u)
    bern_plus = W_plus.u**2 / 2 + model.enthalpy(W_plus.rho, gamma)
    bern_minus = W_minus.u**2 / 2 + model.enthalpy(W_minus.rho, gamma)
    r_mom = s * (W_plus.u - W_minus.u) - (bern_plus - bern_minus)
    return float(r_mass), float(r_mom)


def characteristic_speeds(W, gamma):
    c = float(model.sound_speed(W.rho, gamma))
    return W.u - c, W.u + c


def rh_velocity_branches(rho_minus, rho_plus, s, gamma):
    if rho_minus <= 0 or rho_plus <= 0:
        raise ValueError("Densities must be > 0.")
    if rho_minus == rho_plus:
        raise DegenerateShockError("rho_minus equals rho_plus: no shock to resolve.")
    h_plus = model.enthalpy(rho_plus, gamma)
    h_minus = model.enthalpy(rho_minus, gamma)
    d = float(rho_plus * np.sqrt(2 * (h_plus - h_minus) / (rho_plus**2 - rho_minus**2)))
    ratio = rho_minus / rho_plus
    return {
        "d": d,
        "branch1": (s + d, s + ratio * d),
        "branch2": (s - d, s - ratio * d),
    }


def lax_classify(W_minus, W_plus, s, gamma):
    lam1_minus, lam2_minus = characteristic_speeds(W_minus, gamma)
    lam1_plus, lam2_plus = characteristic_speeds(W_plus, gamma)
    if lam2_plus < s < lam2_minus:
        return LaxFamily.LAX2
    if lam1_plus < s < lam1_minus:
        return LaxFamily.LAX1
    return LaxFamily.NOT_ADMISSIBLE


def select_admissible_branch(rho_minus, rho_plus, s, gamma):
    if s == 0:
        raise NoProfileGuaranteeError(
            "s = 0: the profile equation has no dissipative term.", failed=["s != 0"]
        )
    branches = rh_velocity_branches(rho_minus, rho_plus, s, gamma)
    if rho_plus < rho_minus:
        u_minus, u_plus = branches["branch2"]
        expected = LaxFamily.LAX2
    else:
        u_minus, u_plus = branches["branch1"]
        expected = LaxFamily.LAX1

    left = EndState(rho_minus, u_minus)
    right = EndState(rho_plus, u_plus)
    family = lax_classify(left, right, s, gamma)
    if family is not expected:
        raise NoProfileGuaranteeError(
            "Selected branch is not a {} shock.".format(expected.value),
            failed=[expected.value],
        )
    return ShockData(left=left, right=right, s=s, family=family, gamma=gamma)


def sonic_classify(W, gamma):
    c = float(model.sound_speed(W.rho, gamma))
    speed = abs(W.u)
    if abs(speed - c) <= SONIC_BAND:
        return SonicType.SONIC
    if speed < c:
        return SonicType.SUBSONIC
    return SonicType.SUPERSONIC


def branch_inequalities(r, gamma):
    """Both inequalities making branch 2 a Lax 2-shock, for r = rho+/rho- in (0, 1).

    Returns the pair of booleans (right-state condition, left-state condition).
    """
    r = np.asarray(r, dtype=float)
    if model.is_isothermal(gamma):
        right = r**2 - 1 > 2 * np.log(r)
        left = 2 * np.log(r) > 1 - 1 / r**2
    else:
        right = r**2 - 1 > 2 / (gamma - 1) * (1 - r ** (1 - gamma))
        left = 2 / (gamma - 1) * (r ** (gamma - 1) - 1) > 1 - 1 / r**2
    return right, left


def check_profile_hypotheses(shock, gamma):
    s = shock.s
    P_minus = shock.P_minus
    P_plus = shock.P_plus
    left_sonic = sonic_classify(shock.left, gamma)
    right_sonic = sonic_classify(shock.right, gamma)
    notes = []

    if s > 0 and 0 < P_plus < P_minus:
        case = ProfileCase.CASE_I
        subsonic = (
            shock.family is LaxFamily.LAX2 and right_sonic is SonicType.SUBSONIC
        )
        c_plus = float(model.sound_speed(shock.right.rho, gamma))
        speed_order = (
            shock.family is LaxFamily.LAX2 and s > shock.right.u + c_plus > 0
        )
        if not subsonic:
            notes.append(
                "right state is {}: subsonic Lax 2-shock condition does not apply".format(
                    right_sonic.value.lower()
                )
            )
    elif s < 0 and 0 < P_minus < P_plus:
        case = ProfileCase.CASE_II
        subsonic = (
            shock.family is LaxFamily.LAX1 and left_sonic is SonicType.SUBSONIC
        )
        c_minus = float(model.sound_speed(shock.left.rho, gamma))
        speed_order = (
            shock.family is LaxFamily.LAX1 and s < shock.left.u - c_minus < 0
        )
        if not subsonic:
            notes.append(
                "left state is {}: subsonic Lax 1-shock condition does not apply".format(
                    left_sonic.value.lower()
                )
            )
    else:
        failed = []
        if s > 0:
            failed.append("P+ < P- (have P+ = {:.6g}, P- = {:.6g})".format(P_plus, P_minus))
        elif s < 0:
            failed.append("P- < P+ (have P- = {:.6g}, P+ = {:.6g})".format(P_minus, P_plus))
        else:
            failed.append("s != 0")
        raise NoProfileGuaranteeError(
            "No existence case applies: " + "; ".join(failed), failed=failed
        )

    if subsonic:
        condition = "subsonic"
    elif speed_order:
        condition = "speed_order"
    else:
        condition = "ordering_only"
        notes.append("hypotheses hold but no listed sufficient condition")

    return HypothesisReport(
        case=case,
        condition=condition,
        subsonic_holds=subsonic,
        speed_order_holds=speed_order,
        left_sonic=left_sonic,
        right_sonic=right_sonic,
        notes=tuple(notes),
    )
