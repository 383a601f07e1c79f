import numpy as np
import pytest
from qhdtw import model
from qhdtw import rankine_hugoniot as rh
from qhdtw.util import DegenerateShockError, NoProfileGuaranteeError
from tests import testutil


class TestBranches:
    def test_reference_velocities(self):
        shock = testutil.viscosity_shock()
        assert shock.family is rh.LaxFamily.LAX2
        assert shock.left.u == pytest.approx(-0.11, abs=testutil.QUOTED_TOL)
        assert shock.right.u == pytest.approx(-0.67, abs=testutil.QUOTED_TOL)
        assert shock.left.u == pytest.approx(-0.11422, abs=1e-5)
        assert shock.right.u == pytest.approx(-0.67133, abs=1e-5)

    def test_isothermal_branches(self):
        branches = rh.rh_velocity_branches(2.0, 1.0, 1.0, 1.0)
        d = np.sqrt(2 * np.log(2) / 3)
        assert branches["d"] == pytest.approx(d)
        assert branches["branch1"] == pytest.approx((1 + d, 1 + 2 * d))
        assert branches["branch2"] == pytest.approx((1 - d, 1 - 2 * d))

    @pytest.mark.parametrize("gamma", [1.0, 1.4, 5 / 3, 3.0])
    def test_both_branches_satisfy_jump_conditions(self, gamma):
        for rho_minus, rho_plus in [(1.5, 1.0), (0.5, 0.05), (1.0, 2.0)]:
            branches = rh.rh_velocity_branches(rho_minus, rho_plus, 0.7, gamma)
            for name in ("branch1", "branch2"):
                u_minus, u_plus = branches[name]
                r = rh.rh_residuals(
                    rh.EndState(rho_minus, u_minus), rh.EndState(rho_plus, u_plus), 0.7, gamma
                )
                assert np.allclose(r, 0, atol=1e-12)

    def test_equal_densities(self):
        with pytest.raises(DegenerateShockError) as exc_info:
            rh.rh_velocity_branches(1.0, 1.0, 1.0, 1.5)
        print(exc_info.value)

    def test_zero_speed(self):
        with pytest.raises(NoProfileGuaranteeError):
            rh.select_admissible_branch(1.5, 1.0, 0.0, 5 / 3)

    def test_bad_density(self):
        with pytest.raises(ValueError):
            rh.rh_velocity_branches(-1.0, 1.0, 1.0, 1.5)
        with pytest.raises(ValueError):
            rh.EndState(0.0, 1.0)

    def test_right_denser_selects_lax1(self):
        shock = rh.select_admissible_branch(1.0, 1.5, -1.0, 5 / 3)
        assert shock.family is rh.LaxFamily.LAX1
        # Mirror image of the reference shock.
        reference = testutil.viscosity_shock()
        assert shock.left.u == pytest.approx(-reference.right.u)
        assert shock.right.u == pytest.approx(-reference.left.u)

    def test_reflection_symmetry(self):
        np.random.seed(1240)
        for _ in range(200):
            rho_a, rho_b = np.random.uniform(0.05, 3.0, 2)
            s = np.random.choice([-1, 1]) * np.random.uniform(0.1, 3.0)
            gamma = np.random.choice([1.0, 1.4, 5 / 3, 3.0])
            shock = rh.select_admissible_branch(rho_a, rho_b, s, gamma)
            mirror = rh.select_admissible_branch(rho_b, rho_a, -s, gamma)
            assert mirror.left.u == pytest.approx(-shock.right.u, abs=1e-12)
            assert mirror.right.u == pytest.approx(-shock.left.u, abs=1e-12)


class TestShockData:
    def test_constants_agree(self):
        shock = testutil.viscosity_shock()
        c_left = model.profile_constants(shock.left, shock.s, shock.gamma)
        assert c_left.A == pytest.approx(shock.constants.A, rel=1e-9)
        assert c_left.B == pytest.approx(shock.constants.B, rel=1e-9)

    def test_inconsistent_states(self):
        with pytest.raises(ValueError):
            rh.ShockData(
                left=rh.EndState(1.5, -0.2),
                right=rh.EndState(1.0, -0.67),
                s=1.0,
                family=rh.LaxFamily.LAX2,
                gamma=5 / 3,
            )

    def test_not_admissible(self):
        shock = testutil.viscosity_shock()
        with pytest.raises(NoProfileGuaranteeError):
            rh.ShockData(
                left=shock.left,
                right=shock.right,
                s=shock.s,
                family=rh.LaxFamily.NOT_ADMISSIBLE,
                gamma=shock.gamma,
            )

    def test_mislabelled_family(self):
        shock = testutil.viscosity_shock()
        with pytest.raises(NoProfileGuaranteeError) as exc_info:
            rh.ShockData(
                left=shock.left,
                right=shock.right,
                s=shock.s,
                family=rh.LaxFamily.LAX1,
                gamma=shock.gamma,
            )
        assert exc_info.value.failed == ["Lax1"]

    @pytest.mark.parametrize("gamma", [1.0, 1.4, 5 / 3])
    def test_family_matches_characteristics(self, gamma):
        for rho_minus, rho_plus, s in [(1.5, 1.0, 1.0), (1.0, 1.5, -1.0), (0.5, 0.05, 1.0)]:
            shock = rh.select_admissible_branch(rho_minus, rho_plus, s, gamma)
            lam1_minus, lam2_minus = rh.characteristic_speeds(shock.left, gamma)
            lam1_plus, lam2_plus = rh.characteristic_speeds(shock.right, gamma)
            if shock.family is rh.LaxFamily.LAX2:
                assert lam2_plus < s < lam2_minus
            else:
                assert lam1_plus < s < lam1_minus


class TestClassification:
    def test_lax(self):
        shock = testutil.viscosity_shock()
        assert rh.lax_classify(shock.left, shock.right, shock.s, shock.gamma) is rh.LaxFamily.LAX2
        branches = rh.rh_velocity_branches(1.5, 1.0, 1.0, 5 / 3)
        u_minus, u_plus = branches["branch1"]
        family = rh.lax_classify(rh.EndState(1.5, u_minus), rh.EndState(1.0, u_plus), 1.0, 5 / 3)
        assert family is rh.LaxFamily.NOT_ADMISSIBLE

    def test_characteristic_speeds(self):
        lam1, lam2 = rh.characteristic_speeds(rh.EndState(1.0, 0.5), 1.0)
        assert (lam1, lam2) == pytest.approx((-0.5, 1.5))

    def test_sonic(self):
        assert rh.sonic_classify(rh.EndState(1.0, 0.5), 1.0) is rh.SonicType.SUBSONIC
        assert rh.sonic_classify(rh.EndState(1.0, -2.0), 1.0) is rh.SonicType.SUPERSONIC
        assert rh.sonic_classify(rh.EndState(1.0, 1.0), 1.0) is rh.SonicType.SONIC

    def test_vacuum_sonic_flags(self):
        for rho_plus, flag in zip(testutil.VACUUM_RHO_PLUS, testutil.VACUUM_SONIC):
            shock = testutil.vacuum_shock(rho_plus)
            assert rh.sonic_classify(shock.right, shock.gamma).value == flag


class TestBranchInequalities:
    @pytest.mark.parametrize("gamma", [1.0, 1.4, 5 / 3, 3.0])
    def test_sampled_ratios(self, gamma):
        np.random.seed(1236)
        r = np.random.uniform(0.01, 0.99, 200)
        right, left = rh.branch_inequalities(r, gamma)
        assert np.all(right)
        assert np.all(left)

    @pytest.mark.parametrize("gamma", [1.0, 1.4, 5 / 3, 3.0])
    def test_branch2_is_lax2(self, gamma):
        for r in (0.05, 0.3, 0.7, 0.95):
            shock = rh.select_admissible_branch(1.0, r, 1.0, gamma)
            assert shock.family is rh.LaxFamily.LAX2


class TestHypotheses:
    def test_case_one(self):
        shock = testutil.viscosity_shock()
        report = rh.check_profile_hypotheses(shock, shock.gamma)
        assert report.case is rh.ProfileCase.CASE_I
        assert report.subsonic_holds
        assert report.condition == "subsonic"
        assert report.right_sonic is rh.SonicType.SUBSONIC

    def test_case_two(self):
        shock = rh.select_admissible_branch(1.0, 1.5, -1.0, 5 / 3)
        report = rh.check_profile_hypotheses(shock, shock.gamma)
        assert report.case is rh.ProfileCase.CASE_II
        assert report.subsonic_holds

    def test_supersonic_right_state(self):
        shock = testutil.vacuum_shock(0.05)
        report = rh.check_profile_hypotheses(shock, shock.gamma)
        assert report.case is rh.ProfileCase.CASE_I
        assert not report.subsonic_holds
        assert report.condition == "ordering_only"
        assert report.notes

    def test_wrong_ordering(self):
        shock = rh.select_admissible_branch(1.0, 1.5, 1.0, 5 / 3)
        with pytest.raises(NoProfileGuaranteeError) as exc_info:
            rh.check_profile_hypotheses(shock, shock.gamma)
        assert exc_info.value.failed
