import numpy as np
from qhdtw import integrator
from qhdtw import model
from qhdtw import phase_plane
from qhdtw import rankine_hugoniot as rh


class TravelingWave:
    def __init__(
        self,
        data,
    ):

        # Checking fluid parameters
        for key in ("gamma", "mu", "k", "s"):
            if key not in data:
                raise ValueError("{} must be specified.".format(key))
            if not np.isfinite(data[key]):
                raise ValueError("{} must be finite.".format(key))
        if data["gamma"] < 1:
            raise ValueError("gamma must be >= 1.")
        if data["mu"] <= 0:
            raise ValueError("mu must be > 0.")
        if data["k"] <= 0:
            raise ValueError("k must be > 0.")
        if data["s"] == 0:
            raise ValueError("s must be nonzero.")

        # Checking end states or constants, exactly one of the two
        has_states = "rho_minus" in data or "rho_plus" in data
        has_constants = "A" in data or "B" in data
        if has_states and has_constants:
            raise ValueError("Specify either rho_minus/rho_plus or A/B, not both.")
        if has_states:
            for key in ("rho_minus", "rho_plus"):
                if key not in data:
                    raise ValueError("{} must be specified.".format(key))
                if not data[key] > 0:
                    raise ValueError("{} must be > 0.".format(key))
        elif has_constants:
            for key in ("A", "B"):
                if key not in data:
                    raise ValueError("{} must be specified.".format(key))
        else:
            raise ValueError("rho_minus/rho_plus or A/B must be specified.")

        self._data = dict(data)
        self._params = model.FluidParams(
            gamma=float(data["gamma"]), mu=float(data["mu"]), k=float(data["k"])
        )

        if has_states:
            self._shock = rh.select_admissible_branch(
                float(data["rho_minus"]),
                float(data["rho_plus"]),
                float(data["s"]),
                self._params.gamma,
            )
        else:
            c = model.ProfileConstants(
                A=float(data["A"]), B=float(data["B"]), s=float(data["s"])
            )
            self._shock = phase_plane.shock_from_constants(c, self._params)

        # User-specified options
        self._options = {}
        self._options["perturbation"] = None
        self._options["conv_tol"] = None
        self._options["conv_steps"] = None
        self._options["y_max"] = None
        self._options["tol"] = None
        self._options["containment_tol"] = None
        self._options["vacuum"] = None
        self._options["dense_points"] = None
        self._options["verbose"] = None
        return

    @property
    def shock(self):
        return self._shock

    @property
    def params(self):
        return self._params

    def solve(
        self,
        perturbation=None,
        conv_tol=1e-6,
        conv_steps=3,
        y_max=1e4,
        tol=1e-10,
        containment_tol=1e-7,
        vacuum=1e-10,
        dense_points=4,
        verbose=False,
    ):

        self._options["perturbation"] = perturbation
        self._options["conv_tol"] = conv_tol
        self._options["conv_steps"] = conv_steps
        self._options["y_max"] = y_max
        self._options["tol"] = tol
        self._options["containment_tol"] = containment_tol
        self._options["vacuum"] = vacuum
        self._options["dense_points"] = dense_points
        self._options["verbose"] = verbose

        opts = integrator.ShootOptions(**self._options)
        return integrator.shoot_heteroclinic(self._shock, self._params, opts)

    def classify(self):
        """Saddle and attractor reports plus the monotone/oscillatory verdict."""
        shock = self._shock
        c = shock.constants
        P_saddle = max(shock.P_minus, shock.P_plus)
        if c.s < 0:
            c = c.mirrored()
        return {
            "saddle": phase_plane.equilibrium_report(P_saddle, c, self._params),
            "attractor": phase_plane.attracting_report(shock, self._params),
            "classification": phase_plane.classify_monotonicity(shock, self._params),
            "hypotheses": rh.check_profile_hypotheses(shock, self._params.gamma),
        }

    def loop(self, n_samples=401):
        c = self._shock.constants
        if c.s < 0:
            c = c.mirrored()
        return phase_plane.homoclinic_loop(c, self._params, n_samples)
