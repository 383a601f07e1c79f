import numpy as np
import pytest
from qhdtw import experiments
from tests import testutil


@pytest.fixture(scope="module")
def viscosity_report():
    return experiments.sweep_viscosity(experiments.reference_viscosity_sweep())


@pytest.fixture(scope="module")
def vacuum_report():
    return experiments.sweep_vacuum(experiments.reference_vacuum_sweep())


class TestSpec:
    def test_reference_sweeps(self):
        spec = experiments.reference_viscosity_sweep()
        ratios = [mu / spec.k for mu in spec.values]
        assert ratios == pytest.approx(testutil.VISCOSITY_RATIOS, abs=testutil.QUOTED_TOL)
        spec = experiments.reference_vacuum_sweep()
        assert spec.values == testutil.VACUUM_RHO_PLUS

    def test_bad_specs(self):
        base = dict(gamma=1.5, k=1.0, s=1.0, rho_minus=0.5, mu=1.0, varying="rho_plus")
        with pytest.raises(ValueError):
            experiments.SweepSpec(values=(), **base)
        with pytest.raises(ValueError):
            experiments.SweepSpec(values=(0.4, -0.1), **base)
        with pytest.raises(ValueError):
            experiments.SweepSpec(values=(0.4,), **dict(base, varying="k"))
        with pytest.raises(ValueError):
            experiments.SweepSpec(values=(0.4,), **dict(base, mu=None))
        with pytest.raises(ValueError):
            experiments.SweepSpec(values=(0.4,), workers=0, **base)

    def test_wrong_sweep(self):
        with pytest.raises(ValueError):
            experiments.sweep_vacuum(experiments.reference_viscosity_sweep())
        with pytest.raises(ValueError):
            experiments.sweep_viscosity(experiments.reference_vacuum_sweep())


class TestViscositySweep:
    def test_rows(self, viscosity_report):
        rows = viscosity_report.rows
        assert len(rows) == 4
        assert [row["mu"] for row in rows] == list(testutil.VISCOSITY_MUS)
        for row in rows:
            assert row["error"] is None
            assert row["converged"]
            assert row["u_minus"] == pytest.approx(-0.11, abs=testutil.QUOTED_TOL)
            assert row["u_plus"] == pytest.approx(-0.67, abs=testutil.QUOTED_TOL)
            assert row["sqrt_neg_fprime"] == pytest.approx(1.50, abs=0.01)
            assert row["sound_speed_right"] == pytest.approx(1.29, abs=testutil.QUOTED_TOL)

    def test_split(self, viscosity_report):
        rows = viscosity_report.rows
        assert rows[0]["classification"] == "Monotone"
        assert all(lam.imag == 0 and lam.real < 0 for lam in rows[0]["eigenvalues"])
        assert [row["classification"] for row in rows[1:]] == ["Oscillatory"] * 3
        imag = [abs(row["eigenvalues"][0].imag) for row in rows[1:]]
        assert np.all(np.diff(imag) > 0)

    def test_extrema_grow(self, viscosity_report):
        counts = [row["extrema_count"] for row in viscosity_report.rows]
        assert counts[0] == 0
        assert counts == sorted(counts)

    def test_profiles_satisfy_own_jump_conditions(self, viscosity_report):
        for profile in viscosity_report.profiles:
            rho = profile.trajectory.P[-1] ** 2
            assert rho == pytest.approx(profile.shock.right.rho, abs=1e-5)

    def test_threads_keep_order(self, viscosity_report):
        spec = experiments.reference_viscosity_sweep(workers=4)
        report = experiments.sweep_viscosity(spec)
        assert report.rows == viscosity_report.rows


class TestVacuumSweep:
    def test_velocities(self, vacuum_report):
        for row, (u_minus, u_plus) in zip(vacuum_report.rows, testutil.VACUUM_VELOCITIES):
            assert row["u_minus"] == pytest.approx(u_minus, abs=testutil.QUOTED_TOL)
            assert row["u_plus"] == pytest.approx(u_plus, abs=testutil.QUOTED_TOL)

    def test_thresholds(self, vacuum_report):
        rows = vacuum_report.rows
        sqrt_fp = [row["sqrt_neg_fprime"] for row in rows]
        sound = [row["sound_speed_right"] for row in rows]
        assert sqrt_fp == pytest.approx(testutil.VACUUM_SQRT_NEG_FPRIME, abs=0.01)
        assert sound == pytest.approx(testutil.VACUUM_SOUND_SPEEDS, abs=testutil.QUOTED_TOL)
        assert [row["sonic_flag"] for row in rows] == list(testutil.VACUUM_SONIC)

    def test_split(self, vacuum_report):
        rows = vacuum_report.rows
        assert rows[0]["classification"] == "Monotone"
        assert [row["classification"] for row in rows[1:]] == ["Oscillatory"] * 3
        imag = [abs(row["eigenvalues"][0].imag) for row in rows[1:]]
        assert np.all(np.diff(imag) > 0)

    def test_converged(self, vacuum_report):
        for row in vacuum_report.rows:
            assert row["error"] is None
            assert row["converged"]
            assert row["terminal_error"] < 1e-6
        assert vacuum_report.rows[3]["hypothesis"] == "ordering_only"

    def test_extrema_grow(self, vacuum_report):
        counts = [row["extrema_count"] for row in vacuum_report.rows]
        assert counts == sorted(counts)


class TestFailedRows:
    def test_row_error_is_recorded(self):
        spec = experiments.SweepSpec(
            gamma=1.5, k=np.sqrt(2), s=1.0, rho_minus=0.5, mu=1.2,
            varying="rho_plus", values=(0.8, 0.5),
        )
        report = experiments.sweep_vacuum(spec)
        assert len(report.rows) == 2
        for row, profile in zip(report.rows, report.profiles):
            assert not row["converged"]
            assert row["error"] is not None
            assert profile is None
        assert report.rows[1]["error"].startswith("DegenerateShockError")
