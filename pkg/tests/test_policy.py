"""Tests for the policy interventions and their composition"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from powershift.exceptions import NegativeLevy, RateOutOfRange
from powershift.models import FAMILY_MODELS, Linear
from powershift.schemas.factors import FactorInputs
from powershift.schemas.policy import PolicySpec
from powershift.services.accounting import read_distribution
from powershift.services.policy import (
    apply_coop_ownership,
    apply_fixed_levy,
    apply_policy_stack,
    apply_proportional_tax,
    apply_uad,
    evaluate_policed,
)
from tests.strategies import factor_inputs, rates

incomes = st.floats(min_value=-5.0, max_value=50.0, allow_nan=False, allow_infinity=False)


class TestCoopOwnership:
    """Transfer of AGI capital into human ownership"""

    def test_transfers_capital(self, unit_inputs):
        owned = apply_coop_ownership(unit_inputs, 0.2)
        assert owned.K == pytest.approx(1.2)
        assert owned.K_agi == pytest.approx(0.8)
        assert (owned.L, owned.L_agi) == (1.0, 1.0)

    def test_zero_share_is_identity(self, unit_inputs):
        assert apply_coop_ownership(unit_inputs, 0.0) == unit_inputs

    def test_linear_share_drops(self, reference_linear, unit_inputs):
        owned = apply_coop_ownership(unit_inputs, 0.2)
        _, reading = read_distribution(reference_linear, owned)
        assert reading.Y == pytest.approx(4.3)
        assert reading.S_raw == pytest.approx(2.1 / 4.3)
        assert reading.S_raw == pytest.approx(0.488372, rel=1e-6)

    def test_share_out_of_range(self, unit_inputs):
        with pytest.raises(RateOutOfRange):
            apply_coop_ownership(unit_inputs, 1.5)

    def test_full_transfer_allowed(self, unit_inputs):
        assert apply_coop_ownership(unit_inputs, 1.0).K_agi == 0.0

    @settings(max_examples=50)
    @given(inputs=factor_inputs(), share=st.floats(min_value=0.0, max_value=1.0))
    def test_capital_is_conserved(self, inputs, share):
        owned = apply_coop_ownership(inputs, share)
        assert owned.K + owned.K_agi == pytest.approx(inputs.K + inputs.K_agi, rel=1e-12)

    def test_share_non_increasing_in_coop(self):
        inputs = FactorInputs(L=1.0, L_agi=2.0, K=1.5, K_agi=3.0)
        grid = [0.0, 0.1, 0.2, 0.4, 0.6, 0.8, 0.95]
        for family, model_class in FAMILY_MODELS.items():
            shares = [read_distribution(model_class(), apply_coop_ownership(inputs, co))[1].S_raw for co in grid]
            for earlier, later in zip(shares, shares[1:]):
                assert later <= earlier + 1e-12, family


class TestProportionalStages:
    """Proportional tax and Universal AI Dividend"""

    def test_tax_transfer(self):
        agi, human = apply_proportional_tax(1.17, 1.71, 0.25)
        assert agi == pytest.approx(0.8775)
        assert human == pytest.approx(2.0025)
        assert agi + human == pytest.approx(2.88)

    def test_tax_scales_share(self):
        agi, human = apply_proportional_tax(0.40625, 0.59375, 0.25)
        assert agi / (agi + human) == pytest.approx(0.3046875)

    def test_zero_rates_are_identity(self):
        assert apply_proportional_tax(1.17, 1.71, 0.0) == (1.17, 1.71)
        assert apply_uad(1.17, 1.71, 0.0) == (1.17, 1.71)

    def test_uad_scales_share(self):
        agi, human = apply_uad(0.5, 0.5, 0.15)
        assert agi / (agi + human) == pytest.approx(0.425)

    def test_composition(self):
        agi, human = apply_proportional_tax(0.40625, 0.59375, 0.25)
        agi, human = apply_uad(agi, human, 0.15)
        assert agi / (agi + human) == pytest.approx(0.85 * 0.75 * 0.40625)
        assert agi / (agi + human) == pytest.approx(0.258984, rel=1e-5)

    @pytest.mark.parametrize("rate", [-0.1, 1.0, 1.5])
    def test_rate_out_of_range(self, rate):
        with pytest.raises(RateOutOfRange):
            apply_proportional_tax(1.0, 1.0, rate)
        with pytest.raises(RateOutOfRange):
            apply_uad(1.0, 1.0, rate)

    @settings(max_examples=100)
    @given(agi=incomes, human=incomes, tau=rates, uad=rates)
    def test_income_conserved(self, agi, human, tau, uad):
        taxed = apply_proportional_tax(agi, human, tau)
        paid = apply_uad(*taxed, uad)
        assert sum(taxed) == pytest.approx(agi + human, abs=1e-12)
        assert sum(paid) == pytest.approx(agi + human, abs=1e-12)


class TestFixedLevy:
    """Set amount per step, floored at zero AGI income"""

    def test_partial_levy(self):
        agi, human = apply_fixed_levy(2.3, 2.0, 0.5)
        assert agi == pytest.approx(1.8)
        assert agi / (agi + human) == pytest.approx(0.418605, rel=1e-6)

    def test_zero_levy(self):
        assert apply_fixed_levy(2.3, 2.0, 0.0) == (2.3, 2.0)

    def test_levy_larger_than_income(self):
        agi, human = apply_fixed_levy(2.3, 2.0, 10.0)
        assert agi == 0.0
        assert human == pytest.approx(4.3)

    def test_negative_agi_income_untouched(self):
        assert apply_fixed_levy(-1.0, 3.0, 0.5) == (-1.0, 3.0)

    def test_negative_levy(self):
        with pytest.raises(NegativeLevy):
            apply_fixed_levy(2.3, 2.0, -0.1)

    @settings(max_examples=100)
    @given(agi=incomes, human=incomes, levy=st.floats(min_value=0.0, max_value=100.0))
    def test_income_conserved(self, agi, human, levy):
        new_agi, new_human = apply_fixed_levy(agi, human, levy)
        assert new_agi + new_human == pytest.approx(agi + human, abs=1e-12)
        assert new_agi >= min(agi, 0.0)


class TestPolicyStack:
    """Coop, evaluation, tax, dividend, levy in that order"""

    def test_empty_spec_matches_unpoliced(self, reference_cobb_douglas, unit_inputs):
        _, unpoliced = read_distribution(reference_cobb_douglas, unit_inputs)
        assert apply_policy_stack(reference_cobb_douglas, unit_inputs, PolicySpec()) == unpoliced

    def test_cobb_douglas_reference(self, reference_cobb_douglas, unit_inputs, reference_policy):
        reading = apply_policy_stack(reference_cobb_douglas, unit_inputs, reference_policy)
        assert reading.S_raw == pytest.approx(0.75 * 0.85 * 0.40625, rel=1e-12)
        assert reading.S_raw == pytest.approx(0.258984, rel=1e-5)
        assert reading.degenerate_normalization is True

    def test_linear_reference(self, reference_linear, unit_inputs, reference_policy):
        reading = apply_policy_stack(reference_linear, unit_inputs, reference_policy)
        assert reading.S_raw == pytest.approx(0.75 * 0.85 * 2.1 / 4.3, rel=1e-12)
        assert reading.S_raw == pytest.approx(0.311337, rel=1e-5)

    def test_total_income_unchanged_by_transfers(self, reference_linear, unit_inputs):
        spec = PolicySpec(name="all", proportional_tax=0.25, uad_rate=0.15, fixed_levy=0.3)
        _, unpoliced = read_distribution(reference_linear, unit_inputs)
        assert apply_policy_stack(reference_linear, unit_inputs, spec).Y == pytest.approx(unpoliced.Y)

    def test_levy_share_anchors_to_current_income(self, unit_inputs):
        model = Linear()
        _, _, reading = evaluate_policed(model, unit_inputs, PolicySpec(name="levy", fixed_levy_share=0.1))
        assert reading.S_raw == pytest.approx((2.3 - 0.43) / 4.3)

    def test_policy_rates_validated(self):
        with pytest.raises(ValidationError):
            PolicySpec(proportional_tax=1.0)
        with pytest.raises(ValidationError):
            PolicySpec(coop_share=1.1)
        with pytest.raises(ValidationError):
            PolicySpec(fixed_levy=-1)

    @settings(max_examples=30, deadline=None)
    @given(inputs=factor_inputs())
    def test_dominance(self, inputs):
        spec = PolicySpec(name="redistribution", proportional_tax=0.25, uad_rate=0.15, coop_share=0.2, fixed_levy=0.1)
        for family, model_class in FAMILY_MODELS.items():
            model = model_class()
            _, baseline = read_distribution(model, inputs)
            policed = apply_policy_stack(model, inputs, spec)
            assert policed.S_raw <= baseline.S_raw + 1e-12, family
