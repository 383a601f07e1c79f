"""Command-line entry point: ``qhdtw <mode> [options]``.

Every mode computes first and writes afterwards, so a failing run leaves no
files behind. Output names are ``<mode>-<label>.<ext>`` with the label built
from the physical parameters.
"""

import argparse
import configparser
import dataclasses
import json
import os
import sys
from dataclasses import dataclass
from enum import Enum

import matplotlib
import numpy as np
from matplotlib.figure import Figure
from matplotlib.ticker import FormatStrFormatter

from qhdtw import experiments
from qhdtw import integrator
from qhdtw import model
from qhdtw import phase_plane
from qhdtw import rankine_hugoniot as rh
from qhdtw.qhdtw import TravelingWave
from qhdtw.util import NoProfileGuaranteeError, SolverError

FORMATS = ("csv", "json", "svg")
CSV_FMT = "%.17g"
LABEL_FMT = "%.6g"
SVG_RC = {"svg.hashsalt": "qhdtw", "svg.fonttype": "none"}
DEFAULT_N_SAMPLES = 401


class Mode(Enum):
    RH = "rh"
    CLASSIFY = "classify"
    PROFILE = "profile"
    LOOP = "loop"
    PHASE = "phase"
    SWEEP_MU = "sweep-mu"
    SWEEP_VACUUM = "sweep-vacuum"


@dataclass(frozen=True)
class RunConfig:
    mode: Mode
    gamma: float = None
    mu: float = None
    k: float = None
    s: float = None
    rho_minus: float = None
    rho_plus: float = None
    A: float = None
    B: float = None
    n_samples: int = DEFAULT_N_SAMPLES
    sweep: experiments.SweepSpec = None
    solver: integrator.ShootOptions = dataclasses.field(
        default_factory=integrator.ShootOptions
    )
    out_dir: str = "."
    formats: tuple = FORMATS
    stride: int = 1

    def wave_data(self):
        data = {"gamma": self.gamma, "mu": self.mu, "k": self.k, "s": self.s}
        if self.A is not None:
            data["A"] = self.A
            data["B"] = self.B
        else:
            data["rho_minus"] = self.rho_minus
            data["rho_plus"] = self.rho_plus
        return data


def _float_list(text):
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma-separated list of numbers")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one value")
    return values


def _format_list(text):
    values = [v.strip() for v in text.split(",") if v.strip()]
    for v in values:
        if v not in FORMATS:
            raise argparse.ArgumentTypeError("invalid format: {}".format(v))
    return values


def _bool(text):
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError("expected a boolean, got {}".format(text))


# Keys accepted in config files, with their converters.
OPTION_TYPES = {
    "gamma": float,
    "mu": float,
    "mu_over_k": float,
    "k": float,
    "s": float,
    "rho_minus": float,
    "rho_plus": float,
    "A": float,
    "B": float,
    "n_samples": int,
    "mu_list": _float_list,
    "rho_plus_list": _float_list,
    "tol": float,
    "perturbation": float,
    "y_max": float,
    "conv_tol": float,
    "out_dir": str,
    "format": _format_list,
    "stride": int,
    "verbose": _bool,
    "workers": int,
}


def _common_parser():
    parser = argparse.ArgumentParser(add_help=False)
    out = parser.add_argument_group("output")
    out.add_argument("--out-dir", help="output directory (default: .)")
    out.add_argument(
        "--format",
        action="append",
        type=_format_list,
        help="csv, json or svg; repeatable (default: all three)",
    )
    out.add_argument("--config", help="flat 'key = value' file; flags override it")
    out.add_argument("--stride", type=int, help="keep every n-th profile sample (default: 1)")
    out.add_argument("--verbose", action="store_true", default=None, help="print solver progress")
    out.add_argument("--workers", type=int, help="threads for sweep rows (default: 1)")

    solver = parser.add_argument_group("solver")
    solver.add_argument("--tol", type=float, help="local error tolerance (default: 1e-10)")
    solver.add_argument(
        "--perturbation", type=float, help="offset from the saddle (default: 1e-6 * P_saddle)"
    )
    solver.add_argument("--y-max", type=float, help="integration horizon (default: 1e4)")
    solver.add_argument(
        "--conv-tol", type=float, help="distance to the attractor that counts as converged (default: 1e-6)"
    )

    phys = parser.add_argument_group("physical parameters")
    phys.add_argument("--gamma", type=float, help="adiabatic exponent, 1 for isothermal")
    phys.add_argument("--mu", type=float, help="viscosity")
    phys.add_argument("--mu-over-k", type=float, help="viscosity given as the ratio mu/k")
    phys.add_argument("--k", type=float, help="dispersion coefficient")
    phys.add_argument("--s", type=float, help="shock speed")
    phys.add_argument("--rho-minus", type=float, help="left density")
    phys.add_argument("--rho-plus", type=float, help="right density")
    phys.add_argument("--A", type=float, help="mass-flux constant (instead of densities)")
    phys.add_argument("--B", type=float, help="Bernoulli constant (instead of densities)")
    phys.add_argument(
        "--n-samples", type=int, help="loop samples (default: {})".format(DEFAULT_N_SAMPLES)
    )
    return parser


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="qhdtw",
        description="Traveling-wave profiles of viscous-dispersive quantum hydrodynamics.",
    )
    subparsers = parser.add_subparsers(dest="mode", metavar="mode")
    subparsers.required = True

    subparsers.add_parser(
        "rh", parents=[common], help="velocity branches, Lax and sonic classification"
    )
    subparsers.add_parser(
        "classify", parents=[common], help="equilibrium analysis without integrating"
    )
    subparsers.add_parser("profile", parents=[common], help="heteroclinic profile table")
    subparsers.add_parser("loop", parents=[common], help="homoclinic loop of the inviscid system")
    subparsers.add_parser("phase", parents=[common], help="loop and heteroclinic in one dataset")
    sweep_mu = subparsers.add_parser(
        "sweep-mu", parents=[common], help="viscosity sweep (defaults to the reference sweep)"
    )
    sweep_mu.add_argument("--mu-list", type=_float_list, help="comma-separated viscosities")
    sweep_vacuum = subparsers.add_parser(
        "sweep-vacuum", parents=[common], help="right-density sweep (defaults to the reference sweep)"
    )
    sweep_vacuum.add_argument(
        "--rho-plus-list", type=_float_list, help="comma-separated right densities"
    )
    return parser


def _read_config_file(parser, path):
    cp = configparser.ConfigParser(inline_comment_prefixes=("#",))
    cp.optionxform = str
    try:
        with open(path) as f:
            cp.read_string("[run]\n" + f.read(), source=path)
    except (OSError, configparser.Error) as exc:
        parser.error("cannot read config file {}: {}".format(path, exc))

    values = {}
    for key, raw in cp["run"].items():
        name = key.replace("-", "_")
        if name not in OPTION_TYPES:
            parser.error("unknown config key: {}".format(key))
        try:
            values[name] = OPTION_TYPES[name](raw)
        except (ValueError, argparse.ArgumentTypeError) as exc:
            parser.error("bad value for config key {}: {}".format(key, exc))
    return values


def _flag(name):
    return "--" + name.replace("_", "-")


def parse_config(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    mode = Mode(args.mode)
    file_values = _read_config_file(parser, args.config) if args.config else {}

    values = {}
    for name in OPTION_TYPES:
        flag_value = getattr(args, name, None)
        values[name] = flag_value if flag_value is not None else file_values.get(name)
    if args.format is not None:
        values["format"] = [f for group in args.format for f in group]

    try:
        return _build_config(parser, mode, values)
    except ValueError as exc:
        parser.error(str(exc))


def _require(parser, mode, values, names):
    missing = [_flag(n) for n in names if values.get(n) is None]
    if missing:
        parser.error("{} requires {}".format(mode.value, ", ".join(missing)))


def _build_config(parser, mode, values):
    if values["mu"] is not None and values["mu_over_k"] is not None:
        parser.error("--mu and --mu-over-k are mutually exclusive")
    has_states = values["rho_minus"] is not None or values["rho_plus"] is not None
    has_constants = values["A"] is not None or values["B"] is not None
    if has_states and has_constants:
        parser.error("--A/--B cannot be combined with --rho-minus/--rho-plus")
    if values["mu_over_k"] is not None:
        _require(parser, mode, values, ["k"])
        values["mu"] = values["mu_over_k"] * values["k"]

    solver_kwargs = {
        name: values[name]
        for name in ("tol", "perturbation", "y_max", "conv_tol")
        if values[name] is not None
    }
    solver_kwargs["verbose"] = bool(values["verbose"])
    solver = integrator.ShootOptions(**solver_kwargs)

    formats = tuple(f for f in FORMATS if f in (values["format"] or FORMATS))
    stride = values["stride"] if values["stride"] is not None else 1
    if stride < 1:
        raise ValueError("stride must be >= 1.")
    out_dir = values["out_dir"] if values["out_dir"] is not None else "."
    if os.path.exists(out_dir) and not (
        os.path.isdir(out_dir) and os.access(out_dir, os.W_OK)
    ):
        parser.error("output directory is not writable: {}".format(out_dir))
    output = {"out_dir": out_dir, "formats": formats, "stride": stride, "solver": solver}

    if mode in (Mode.SWEEP_MU, Mode.SWEEP_VACUUM):
        if has_constants:
            parser.error("{} takes densities, not --A/--B".format(mode.value))
        return RunConfig(mode=mode, sweep=_build_sweep(mode, values, solver), **output)

    if mode is Mode.RH:
        if has_constants:
            parser.error("rh takes densities, not --A/--B")
        _require(parser, mode, values, ["gamma", "s", "rho_minus", "rho_plus"])
        if values["gamma"] < 1:
            raise ValueError("gamma must be >= 1.")
        if values["s"] == 0:
            raise ValueError("s must be nonzero.")
        rh.EndState(values["rho_minus"], 0.0)
        rh.EndState(values["rho_plus"], 0.0)
        return RunConfig(
            mode=mode,
            gamma=values["gamma"],
            s=values["s"],
            rho_minus=values["rho_minus"],
            rho_plus=values["rho_plus"],
            **output,
        )

    _require(parser, mode, values, ["gamma", "mu", "k", "s"])
    if has_constants:
        _require(parser, mode, values, ["A", "B"])
        model.ProfileConstants(values["A"], values["B"], values["s"])
    else:
        _require(parser, mode, values, ["rho_minus", "rho_plus"])
        rh.EndState(values["rho_minus"], 0.0)
        rh.EndState(values["rho_plus"], 0.0)
    model.FluidParams(values["gamma"], values["mu"], values["k"])
    n_samples = values["n_samples"] if values["n_samples"] is not None else DEFAULT_N_SAMPLES
    if n_samples < 2:
        raise ValueError("n_samples must be >= 2.")

    return RunConfig(
        mode=mode,
        gamma=values["gamma"],
        mu=values["mu"],
        k=values["k"],
        s=values["s"],
        rho_minus=values["rho_minus"],
        rho_plus=values["rho_plus"],
        A=values["A"],
        B=values["B"],
        n_samples=n_samples,
        **output,
    )


def _build_sweep(mode, values, solver):
    workers = values["workers"] if values["workers"] is not None else 1
    if mode is Mode.SWEEP_MU:
        base = experiments.reference_viscosity_sweep(solver_opts=solver, workers=workers)
        list_name, fixed_name = "mu_list", "rho_plus"
    else:
        base = experiments.reference_vacuum_sweep(solver_opts=solver, workers=workers)
        list_name, fixed_name = "rho_plus_list", "mu"
    overrides = {
        name: values[name]
        for name in ("gamma", "k", "s", "rho_minus", fixed_name)
        if values[name] is not None
    }
    if values.get(list_name) is not None:
        overrides["values"] = tuple(values[list_name])
    return dataclasses.replace(base, **overrides)


def _label(*pairs):
    return "-".join("{}{}".format(tag, LABEL_FMT % value) for tag, value in pairs)


def _config_label(config):
    pairs = [("g", config.gamma)]
    if config.mode is not Mode.RH:
        pairs += [("mu", config.mu), ("k", config.k)]
    pairs.append(("s", config.s))
    if config.A is not None:
        pairs += [("A", config.A), ("B", config.B)]
    else:
        pairs += [("rm", config.rho_minus), ("rp", config.rho_plus)]
    return _label(*pairs)


def _sweep_label(spec):
    pairs = [("g", spec.gamma), ("k", spec.k), ("s", spec.s), ("rm", spec.rho_minus)]
    if spec.varying == "mu":
        pairs.append(("rp", spec.rho_plus))
    else:
        pairs.append(("mu", spec.mu))
    return _label(*pairs)


def _json_default(obj):
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError("Cannot serialize {!r}".format(obj))


def _csv_writer(header, columns):
    def write(path):
        data = np.column_stack([np.asarray(c, dtype=float) for c in columns])
        np.savetxt(path, data, fmt=CSV_FMT, delimiter=",", header=header, comments="")

    return write


def _json_writer(payload):
    text = json.dumps(payload, sort_keys=True, indent=2, default=_json_default) + "\n"

    def write(path):
        with open(path, "w") as f:
            f.write(text)

    return write


def _svg_writer(series, xlabel, ylabel, title=None):
    def write(path):
        emit_svg(path, series, xlabel, ylabel, title=title)

    return write


def emit_svg(path, series, xlabel, ylabel, title=None):
    """Line plot of `series`, a list of (label, x, y), written as SVG.

    Raises ValueError before touching `path` if any value is non-finite.
    """
    if not series:
        raise ValueError("Nothing to plot.")
    checked = []
    for label, x, y in series:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.size == 0 or x.shape != y.shape:
            raise ValueError("Series {} is empty or has mismatched lengths.".format(label))
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            raise ValueError("Series {} has non-finite values.".format(label))
        checked.append((label, x, y))

    with matplotlib.rc_context(SVG_RC):
        fig = Figure(figsize=(6.4, 4.8))
        ax = fig.add_subplot()
        for label, x, y in checked:
            ax.plot(x, y, label=label, linewidth=1.0, marker="o" if x.size == 1 else None)
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        if title is not None:
            ax.set_title(title)
        ax.xaxis.set_major_formatter(FormatStrFormatter("%.4g"))
        ax.yaxis.set_major_formatter(FormatStrFormatter("%.4g"))
        ax.legend(loc="best")
        fig.savefig(path, format="svg", metadata={"Date": None})


def _thin(n, stride):
    idx = np.arange(0, n, stride)
    if idx[-1] != n - 1:
        idx = np.append(idx, n - 1)
    return idx


def _profile_columns(profile, stride):
    fields = integrator.profile_fields(profile)
    idx = _thin(len(fields["y"]), stride)
    return {name: values[idx] for name, values in fields.items()}


def _profile_summary(profile):
    return {
        "case": profile.case,
        "classification": profile.classification,
        "extrema_count": profile.extrema_count,
        "converged": profile.converged,
        "terminal_error": profile.terminal_error,
        "n_points": len(profile.trajectory.y),
        "n_steps": len(profile.trajectory.step_sizes),
        "shock": dataclasses.asdict(profile.shock),
    }


def _loop_polyline(loop):
    P = np.concatenate([loop.P, loop.P[::-1]])
    Q = np.concatenate([loop.Q_upper, loop.Q_lower[::-1]])
    return P, Q


def _rh_outputs(config):
    gamma = config.gamma
    s = config.s
    branches = rh.rh_velocity_branches(config.rho_minus, config.rho_plus, s, gamma)
    per_branch = {}
    for name in ("branch1", "branch2"):
        u_minus, u_plus = branches[name]
        left = rh.EndState(config.rho_minus, u_minus)
        right = rh.EndState(config.rho_plus, u_plus)
        per_branch[name] = {
            "u_minus": u_minus,
            "u_plus": u_plus,
            "family": rh.lax_classify(left, right, s, gamma),
            "residuals": rh.rh_residuals(left, right, s, gamma),
        }

    shock = rh.select_admissible_branch(config.rho_minus, config.rho_plus, s, gamma)
    try:
        hypotheses = dataclasses.asdict(rh.check_profile_hypotheses(shock, gamma))
    except NoProfileGuaranteeError as exc:
        hypotheses = {"error": str(exc), "failed": exc.failed}

    payload = {
        "mode": config.mode.value,
        "gamma": gamma,
        "s": s,
        "rho_minus": config.rho_minus,
        "rho_plus": config.rho_plus,
        "d": branches["d"],
        "branches": per_branch,
        "selected": dataclasses.asdict(shock),
        "sonic": {
            "left": rh.sonic_classify(shock.left, gamma),
            "right": rh.sonic_classify(shock.right, gamma),
        },
        "characteristic_speeds": {
            "left": rh.characteristic_speeds(shock.left, gamma),
            "right": rh.characteristic_speeds(shock.right, gamma),
        },
        "sound_speed": {
            "left": float(model.sound_speed(shock.left.rho, gamma)),
            "right": float(model.sound_speed(shock.right.rho, gamma)),
        },
        "hypotheses": hypotheses,
    }
    stem = "rh-" + _config_label(config)
    return [
        (stem, "csv", _csv_writer(
            "branch,u_minus,u_plus",
            [[1, 2], [branches["branch1"][0], branches["branch2"][0]],
             [branches["branch1"][1], branches["branch2"][1]]],
        )),
        (stem, "json", _json_writer(payload)),
    ]


def _classify_outputs(config):
    wave = TravelingWave(config.wave_data())
    result = wave.classify()
    saddle = result["saddle"]
    attractor = result["attractor"]
    c = wave.shock.constants
    fp = float(model.f_prime(attractor.P_eq, c, config.gamma))
    payload = {
        "mode": config.mode.value,
        "mu_over_k": config.mu / config.k,
        "sqrt_neg_fprime": float(np.sqrt(-fp)) if fp < 0 else None,
        "saddle": dataclasses.asdict(saddle),
        "attractor": dataclasses.asdict(attractor),
        "classification": result["classification"],
        "hypotheses": dataclasses.asdict(result["hypotheses"]),
        "shock": dataclasses.asdict(wave.shock),
    }
    reports = (saddle, attractor)
    stem = "classify-" + _config_label(config)
    return [
        (stem, "csv", _csv_writer(
            "P_eq,lambda1_re,lambda1_im,lambda2_re,lambda2_im",
            [
                [r.P_eq for r in reports],
                [r.eigenvalues[0].real for r in reports],
                [r.eigenvalues[0].imag for r in reports],
                [r.eigenvalues[1].real for r in reports],
                [r.eigenvalues[1].imag for r in reports],
            ],
        )),
        (stem, "json", _json_writer(payload)),
    ]


def _profile_outputs(config):
    wave = TravelingWave(config.wave_data())
    profile = wave.solve(**dataclasses.asdict(config.solver))
    cols = _profile_columns(profile, config.stride)
    payload = dict(_profile_summary(profile), mode=config.mode.value)
    stem = "profile-" + _config_label(config)
    return [
        (stem, "csv", _csv_writer("y,P,Q,rho,u", [cols[n] for n in ("y", "P", "Q", "rho", "u")])),
        (stem, "json", _json_writer(payload)),
        (stem, "svg", _svg_writer([("rho", cols["y"], cols["rho"])], "y", "rho")),
    ]


def _loop_outputs(config):
    wave = TravelingWave(config.wave_data())
    loop = wave.loop(config.n_samples)
    c = wave.shock.constants
    P_inflection = phase_plane.find_inflection_P0(
        c, wave.params, wave.shock.P_plus, wave.shock.P_minus
    )
    payload = {
        "mode": config.mode.value,
        "P_star": loop.P_star,
        "P_saddle": loop.P_saddle,
        "P_attractor": min(wave.shock.P_plus, wave.shock.P_minus),
        "P0": P_inflection,
        "n_samples": config.n_samples,
    }
    P, Q = _loop_polyline(loop)
    stem = "loop-" + _config_label(config)
    return [
        (stem, "csv", _csv_writer("P,Q_upper,Q_lower", [loop.P, loop.Q_upper, loop.Q_lower])),
        (stem, "json", _json_writer(payload)),
        (stem, "svg", _svg_writer([("homoclinic loop", P, Q)], "P", "Q")),
    ]


def _phase_outputs(config):
    wave = TravelingWave(config.wave_data())
    loop = wave.loop(config.n_samples)
    profile = wave.solve(**dataclasses.asdict(config.solver))
    cols = _profile_columns(profile, config.stride)
    loop_P, loop_Q = _loop_polyline(loop)
    curve = np.concatenate([np.zeros(loop_P.size), np.ones(cols["P"].size)])
    payload = dict(
        _profile_summary(profile),
        mode=config.mode.value,
        P_star=loop.P_star,
        P_saddle=loop.P_saddle,
    )
    stem = "phase-" + _config_label(config)
    return [
        (stem, "csv", _csv_writer(
            "curve,P,Q",
            [curve, np.concatenate([loop_P, cols["P"]]), np.concatenate([loop_Q, cols["Q"]])],
        )),
        (stem, "json", _json_writer(payload)),
        (stem, "svg", _svg_writer(
            [("homoclinic loop", loop_P, loop_Q), ("heteroclinic", cols["P"], cols["Q"])],
            "P",
            "Q",
        )),
    ]


SUMMARY_COLUMNS = (
    "mu",
    "mu_over_k",
    "rho_plus",
    "u_minus",
    "u_plus",
    "sqrt_neg_fprime",
    "sound_speed_right",
    "extrema_count",
    "converged",
    "terminal_error",
)


def _sweep_outputs(config):
    spec = config.sweep
    if config.mode is Mode.SWEEP_MU:
        report = experiments.sweep_viscosity(spec)
    else:
        report = experiments.sweep_vacuum(spec)

    for row in report.rows:
        if row["error"] is not None:
            print(
                "warning: {} = {} failed: {}".format(spec.varying, row[spec.varying], row["error"]),
                file=sys.stderr,
            )

    stem = "{}-{}".format(config.mode.value, _sweep_label(spec))
    summary = [
        [np.nan if row[name] is None else float(row[name]) for row in report.rows]
        for name in SUMMARY_COLUMNS
    ]
    payload = {
        "mode": config.mode.value,
        "spec": dataclasses.asdict(spec),
        "rows": list(report.rows),
    }
    outputs = [
        (stem, "csv", _csv_writer(",".join(SUMMARY_COLUMNS), summary)),
        (stem, "json", _json_writer(payload)),
    ]

    series = []
    for value, profile in zip(spec.values, report.profiles):
        if profile is None:
            continue
        cols = _profile_columns(profile, config.stride)
        row_stem = "{}-{}".format(stem, _label((spec.varying.replace("_", ""), value)))
        outputs.append(
            (row_stem, "csv", _csv_writer(
                "y,P,Q,rho,u", [cols[n] for n in ("y", "P", "Q", "rho", "u")]
            ))
        )
        label = "{} = {}".format(spec.varying, LABEL_FMT % value)
        if config.mode is Mode.SWEEP_MU:
            outputs.append(
                (row_stem, "svg", _svg_writer([("rho", cols["y"], cols["rho"])], "y", "rho", title=label))
            )
        else:
            series.append((label, cols["y"], cols["rho"]))
    if series:
        outputs.append((stem, "svg", _svg_writer(series, "y", "rho")))
    return outputs


MODE_OUTPUTS = {
    Mode.RH: _rh_outputs,
    Mode.CLASSIFY: _classify_outputs,
    Mode.PROFILE: _profile_outputs,
    Mode.LOOP: _loop_outputs,
    Mode.PHASE: _phase_outputs,
    Mode.SWEEP_MU: _sweep_outputs,
    Mode.SWEEP_VACUUM: _sweep_outputs,
}


def run(config):
    """Compute, then write; returns 0 on success and 1 on numerical failure."""
    try:
        outputs = MODE_OUTPUTS[config.mode](config)
    except (SolverError, ValueError) as exc:
        print("error: {}: {}".format(type(exc).__name__, exc), file=sys.stderr)
        return 1

    written = []
    try:
        os.makedirs(config.out_dir, exist_ok=True)
        for stem, ext, write in outputs:
            if ext not in config.formats:
                continue
            path = os.path.join(config.out_dir, "{}.{}".format(stem, ext))
            written.append(path)
            write(path)
            print("wrote {}".format(path))
    except (OSError, ValueError) as exc:
        for path in written:
            if os.path.exists(path):
                os.remove(path)
        print("error: {}: {}".format(type(exc).__name__, exc), file=sys.stderr)
        return 1
    return 0


def main(argv=None):
    return run(parse_config(argv))


if __name__ == "__main__":
    sys.exit(main())
