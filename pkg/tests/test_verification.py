"""
Tests for exact identity verification
"""

import pytest
from pydantic import ValidationError

import src.coefficients.closed_form as closed_form
from src.cli.renderers import OutputFormat, parse_reports_json, render_reports
from src.coefficients import coeff_table_recurrence
from src.errors import CoefficientIndexError, VerificationPreconditionError
from src.polynomials import higher_order_legendre
from src.verification import (
    FirstFailure,
    IdentityId,
    IdentityVerifier,
    VerifyReport,
    verify_all,
    verify_ode_family,
    verify_theorem2,
)


@pytest.fixture(autouse=True)
def reset_settings():
    """Reset settings singleton before each test"""
    import src.config as config

    config._settings = None
    yield
    config._settings = None


@pytest.fixture
def verifier():
    """Verifier backed by the recurrence triangle"""
    return IdentityVerifier()


@pytest.fixture
def perturbed_table():
    """Triangle with a_1(1) = 2"""
    return coeff_table_recurrence(4).perturbed(1, 1)


class TestOdeFamily:
    """Test suite for the nonlinear ODE family"""

    @pytest.mark.parametrize("N", [1, 2, 3, 4, 5, 6])
    def test_family_holds(self, N):
        """Test every member through N = 6 at truncation order 20"""
        report = verify_ode_family(N, 20)
        assert report.passed
        assert report.first_failure is None
        assert report.identity_id == IdentityId.ODE_FAMILY
        assert report.params == {"N": N, "M": 20}

    def test_minimal_order(self):
        """Test truncation order equal to N, which compares only t^0"""
        assert verify_ode_family(3, 3).passed

    def test_mutation_detected(self, perturbed_table):
        """Test that a_1(1) = 2 fails at t^0"""
        report = verify_ode_family(1, 12, perturbed_table)
        assert not report.passed
        assert report.first_failure == FirstFailure(
            t_power=0, x_power=1, lhs="1", rhs="2"
        )

    def test_every_perturbation_detected(self):
        """Test that changing any single entry breaks its family member"""
        table = coeff_table_recurrence(4)
        for N in range(1, 5):
            for i in range(1, N + 1):
                report = verify_ode_family(N, 12, table.perturbed(i, N))
                assert not report.passed, (i, N)

    @pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
    def test_perturbation_fails_at_every_order(self, N):
        """Test that a perturbed entry fails for every M >= N at one t-power"""
        table = coeff_table_recurrence(5)
        for i in range(1, N + 1):
            changed = table.perturbed(i, N)
            t_powers = set()
            for order in range(N, N + 8):
                report = verify_ode_family(N, order, changed)
                assert not report.passed, (i, N, order)
                t_powers.add(report.first_failure.t_power)
            assert len(t_powers) == 1, (i, N, t_powers)

    def test_sides_truncated(self, verifier):
        """Test that both sides are compared through t^(M-N)"""
        lhs, rhs = verifier.ode_family_sides(2, 10)
        assert lhs.order == 8
        assert lhs == rhs

    def test_preconditions(self, verifier):
        """Test invalid N and orders below N"""
        with pytest.raises(VerificationPreconditionError):
            verifier.verify_ode_family(0, 5)
        with pytest.raises(VerificationPreconditionError):
            verifier.verify_ode_family(3, 2)

    @pytest.mark.parametrize("N", [1, 2, 3, 4])
    def test_induction_step(self, verifier, N):
        """Test the differentiated family carrying N to N + 1"""
        report = verifier.verify_ode_step(N, 12)
        assert report.passed
        assert report.params == {"N": N, "M": 12, "step": 1}

    def test_induction_step_detects_mutation(self, perturbed_table):
        """Test the step check with a_1(1) = 2"""
        assert not IdentityVerifier(perturbed_table).verify_ode_step(1, 8).passed

    def test_induction_step_precondition(self, verifier):
        """Test that the step needs order at least N + 1"""
        with pytest.raises(VerificationPreconditionError):
            verifier.verify_ode_step(3, 3)


class TestHigherOrderIdentity:
    """Test suite for the explicit higher-order Legendre identity"""

    def test_identity_holds(self):
        """Test every (n, N) with n <= 10 and N <= 4"""
        for n in range(11):
            for N in range(1, 5):
                report = verify_theorem2(n, N)
                assert report.passed, (n, N)
                assert report.identity_id == IdentityId.THEOREM_2

    def test_small_cases(self, verifier):
        """Test p_0^(3) = 1 and p_1^(3) = 3x from the explicit sum alone"""
        assert verifier.explicit_sum_polynomial(0, 1).coeffs == (1,)
        assert verifier.explicit_sum_polynomial(1, 1).coeffs == (0, 3)

    def test_explicit_sum_matches_series(self, verifier):
        """Test that the explicit sum reproduces F^(2N+1) coefficients"""
        for N in range(1, 4):
            for n in range(6):
                expected = higher_order_legendre(n, 2 * N + 1)
                assert verifier.explicit_sum_polynomial(n, N) == expected

    def test_mutation_detected(self, perturbed_table):
        """Test that a_1(1) = 2 breaks the identity at n = 0"""
        report = verify_theorem2(0, 1, perturbed_table)
        assert not report.passed
        assert report.first_failure.t_power == 0

    def test_preconditions(self, verifier):
        """Test negative n and N below 1"""
        with pytest.raises(VerificationPreconditionError):
            verifier.verify_theorem2(-1, 1)
        with pytest.raises(VerificationPreconditionError):
            verifier.verify_theorem2(2, 0)


class TestSupplementaryChecks:
    """Test suite for Legendre, generating-function and closed-form checks"""

    @pytest.mark.parametrize("n", [0, 3, 12])
    def test_legendre_checks(self, verifier, n):
        """Test the differential equation and generator agreement reports"""
        assert verifier.verify_legendre_de(n).passed
        assert verifier.verify_generator_agreement(n).passed

    def test_generating_function(self, verifier):
        """Test the generating-function identities"""
        report = verifier.verify_generating_function(10)
        assert report.passed
        assert report.identity_id == IdentityId.GENERATING_FUNCTION
        with pytest.raises(VerificationPreconditionError):
            verifier.verify_generating_function(0)

    def test_closed_form(self, verifier, perturbed_table):
        """Test closed-form reconciliation with a correct and a wrong triangle"""
        assert verifier.verify_closed_form(8).passed

        report = IdentityVerifier(perturbed_table).verify_closed_form(4)
        assert not report.passed
        assert report.detail == "a_1(1) direct form disagrees"
        assert report.first_failure.rhs == "1"

    def test_closed_form_names_shifted_disagreement(self, verifier, monkeypatch):
        """Test that a disagreement in the shifted form alone is reported as such"""
        original = closed_form.coeff_closed_form_shifted

        def off_by_one(i, N):
            value = original(i, N)
            return value + 1 if (i, N) == (2, 3) else value

        monkeypatch.setattr(closed_form, "coeff_closed_form_shifted", off_by_one)
        report = verifier.verify_closed_form(4)
        assert not report.passed
        assert report.detail == "a_2(3) shifted form disagrees"
        assert report.first_failure.lhs == "3"
        assert report.first_failure.rhs == "4"

    def test_closed_form_needs_enough_rows(self):
        """Test that a supplied table shorter than the bound is rejected"""
        verifier = IdentityVerifier(coeff_table_recurrence(3))
        with pytest.raises(CoefficientIndexError):
            verifier.verify_closed_form(5)


class TestVerifyAll:
    """Test suite for the full verification run"""

    def test_report_count(self):
        """Test (5, 2, 10): 6 + 6 + 2 + 12 reports in a fixed order"""
        reports = verify_all(5, 2, 10)
        assert len(reports) == 26
        assert all(r.passed for r in reports)

        ids = [r.identity_id for r in reports]
        assert ids[:6] == [IdentityId.LEGENDRE_DE] * 6
        assert ids[6:12] == [IdentityId.GENERATOR_AGREEMENT] * 6
        assert ids[12:14] == [IdentityId.ODE_FAMILY] * 2
        assert ids[14:] == [IdentityId.THEOREM_2] * 12

    def test_minimal_bounds(self):
        """Test the smallest legal bounds"""
        reports = verify_all(0, 1, 1)
        assert len(reports) == 4
        assert all(r.passed for r in reports)

    def test_supplementary(self):
        """Test that supplementary checks are appended"""
        reports = verify_all(2, 2, 6, include_supplementary=True)
        assert len(reports) == 3 + 3 + 2 + 6 + 2 + 1 + 1
        assert reports[-1].identity_id == IdentityId.CLOSED_FORM
        assert reports[-2].identity_id == IdentityId.GENERATING_FUNCTION
        assert all(r.passed for r in reports)

    def test_reconciliation_bound(self, perturbed_table):
        """Test the closed-form bound from settings, arguments and the table"""
        from src.config import get_settings

        reports = verify_all(1, 1, 2, include_supplementary=True)
        assert reports[-1].params == {"N": 15}

        get_settings().override(reconcile_n_max=6)
        reports = verify_all(1, 1, 2, include_supplementary=True)
        assert reports[-1].params == {"N": 6}

        reports = verify_all(1, 1, 2, include_supplementary=True, reconcile_n_max=3)
        assert reports[-1].params == {"N": 3}

        reports = verify_all(
            1, 1, 2, include_supplementary=True, table=perturbed_table
        )
        assert reports[-1].params == {"N": 4}
        assert not reports[-1].passed

    def test_threaded_run_matches(self):
        """Test that worker threads keep the report order"""
        assert verify_all(4, 2, 8, max_workers=4) == verify_all(4, 2, 8, max_workers=1)

    @pytest.mark.parametrize("bounds", [(5, 2, 1), (-1, 1, 3), (3, 0, 3)])
    def test_preconditions(self, bounds):
        """Test invalid bounds"""
        with pytest.raises(VerificationPreconditionError):
            verify_all(*bounds)

    def test_perturbed_table_fails(self, perturbed_table):
        """Test that a wrong triangle fails family and identity checks"""
        reports = verify_all(2, 2, 6, table=perturbed_table)
        failed = {r.identity_id for r in reports if not r.passed}
        assert failed == {IdentityId.ODE_FAMILY, IdentityId.THEOREM_2}


class TestVerifyReport:
    """Test suite for the report model"""

    def test_failure_consistency(self):
        """Test that passed and first_failure must agree"""
        failure = FirstFailure(t_power=0, x_power=1, lhs="1", rhs="2")
        with pytest.raises(ValidationError):
            VerifyReport(
                identity_id=IdentityId.ODE_FAMILY, passed=True, first_failure=failure
            )
        with pytest.raises(ValidationError):
            VerifyReport(identity_id=IdentityId.ODE_FAMILY, passed=False)

    def test_json_round_trip(self, perturbed_table):
        """Test that parsed JSON output renders back to the same text"""
        reports = verify_all(1, 1, 3) + [verify_ode_family(1, 3, perturbed_table)]
        text = render_reports(reports, OutputFormat.JSON)
        parsed = parse_reports_json(text)
        assert parsed == reports
        assert render_reports(parsed, OutputFormat.JSON) == text

    def test_json_omits_empty_detail(self):
        """Test the serialized field set"""
        report = VerifyReport(
            identity_id=IdentityId.LEGENDRE_DE, params={"n": 2}, passed=True
        )
        assert set(report.to_json_dict()) == {
            "identity_id",
            "params",
            "passed",
            "first_failure",
        }


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
