"""Межі на частку інфікованих: замкнені форми, обвідна, уточнення, страти"""

import logging
from datetime import date, timedelta

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from core.accuracy import MissRateInterval
from core.assumptions import AssumptionConfig, ProbabilityInterval
from core.bounds import (BoundInterval, BoundMethod, BoundSeries, asymptomatic_envelope,
                         asymptomatic_refined_lower, base_bound, blend_weights_from_population, bound_series,
                         bound_width, make_interval, monotone_untested_upper,
                         severe_conditional_bound, stratified_bound, temporal_envelope, testing_monotone_bound,
                         width_decomposition, worst_case_bound)
from core.errors import AssumptionInconsistencyError, ConfigError, DataValidationError
from core.records import EmpiricalRates
from tests.reference_tables import DATES, ENVELOPE

DAY = date(2020, 4, 6)
EXAMPLES = 2000

probability = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


@st.composite
def intervals(draw):
    lo = draw(probability)
    hi = draw(st.floats(min_value=lo, max_value=1.0))
    return lo, hi


@st.composite
def observed_rates(draw):
    return EmpiricalRates(date=DAY, p_tested=draw(probability), p_pos_given_tested=draw(probability))


def monotone_cfg(lo, hi):
    return AssumptionConfig(miss_rate=MissRateInterval(lo, hi))


def explicit_cfg(miss, untested):
    return AssumptionConfig(miss_rate=MissRateInterval(*miss), untested=ProbabilityInterval(*untested))


# ============================================================================
# Замкнені форми
# ============================================================================

class TestClosedForms:

    def test_worst_case_formula(self):
        rates = EmpiricalRates(DAY, p_tested=0.2, p_pos_given_tested=0.25)
        bound = worst_case_bound(rates, explicit_cfg((0.1, 0.4), (0.0, 0.3)))
        assert bound.lo == pytest.approx(0.05 + 0.1 * 0.15)
        assert bound.hi == pytest.approx(0.05 + 0.3 * 0.8 + 0.4 * 0.15)
        assert bound.method is BoundMethod.WORST_CASE

    def test_testing_monotone_formula(self):
        rates = EmpiricalRates(DAY, p_tested=0.2, p_pos_given_tested=0.25)
        bound = testing_monotone_bound(rates, monotone_cfg(0.1, 0.4))
        assert bound.lo == pytest.approx(0.065)
        assert bound.hi == pytest.approx(0.05 + 0.06 + (0.25 + 0.4 * 0.75) * 0.8)

    def test_method_requires_matching_untested(self):
        rates = EmpiricalRates(DAY, 0.2, 0.25)
        with pytest.raises(ConfigError) as info:
            worst_case_bound(rates, monotone_cfg(0.1, 0.4))
        assert info.value.invariant == "untested_explicit"
        with pytest.raises(ConfigError) as info:
            testing_monotone_bound(rates, explicit_cfg((0.1, 0.4), (0.0, 1.0)))
        assert info.value.invariant == "untested_derived"

    def test_everyone_tested(self):
        rates = EmpiricalRates(DAY, p_tested=1.0, p_pos_given_tested=0.3)
        bound = testing_monotone_bound(rates, monotone_cfg(0.0, 0.0))
        assert bound.lo == bound.hi == pytest.approx(0.3)

    def test_nobody_tested(self):
        bound = worst_case_bound(EmpiricalRates(DAY, 0.0, 0.0), explicit_cfg((0.1, 0.4), (0.0, 1.0)))
        assert (bound.lo, bound.hi) == (0.0, 1.0)

    def test_italy_worst_case(self):
        rates = EmpiricalRates(DAY, p_tested=0.012, p_pos_given_tested=0.184)
        bound = worst_case_bound(rates, explicit_cfg((0.1, 0.4), (0.0, 0.5104)))
        assert bound.lo == pytest.approx(0.0032, abs=1e-4)
        assert bound.hi == pytest.approx(0.5104, abs=1e-4)
        assert bound_width(bound) == pytest.approx(0.5072, abs=1e-4)
        assert width_decomposition(rates, explicit_cfg((0.1, 0.4), (0.0, 0.5104))).total == pytest.approx(
            bound_width(bound), abs=1e-12)

    @pytest.mark.parametrize('u_d10, r, expected', [(0.4, 0.184, 0.5104), (1.0, 0.3, 1.0), (0.0, 0.2, 0.2)])
    def test_monotone_untested_upper_values(self, u_d10, r, expected):
        rates = EmpiricalRates(DAY, p_tested=0.1, p_pos_given_tested=r)
        assert monotone_untested_upper(rates, u_d10) == pytest.approx(expected, abs=1e-12)

    @given(rates=observed_rates(), u_d10=probability)
    @settings(max_examples=EXAMPLES)
    def test_monotone_untested_upper_two_forms(self, rates, u_d10):
        upper = monotone_untested_upper(rates, u_d10)
        r = rates.p_pos_given_tested
        assert upper == pytest.approx(r + u_d10 * (1.0 - r), abs=1e-12)
        assert upper >= u_d10

    @given(rates=observed_rates(), miss=intervals())
    @settings(max_examples=EXAMPLES)
    def test_monotone_inside_vacuous_worst_case(self, rates, miss):
        monotone = testing_monotone_bound(rates, monotone_cfg(*miss))
        vacuous = worst_case_bound(rates, explicit_cfg(miss, (0.0, 1.0)))
        assert vacuous.lo <= monotone.lo + 1e-12
        assert monotone.hi <= vacuous.hi + 1e-12

    @given(rates=observed_rates(), miss=intervals())
    @settings(max_examples=EXAMPLES)
    def test_monotone_is_worst_case_with_derived_untested(self, rates, miss):
        derived = min(monotone_untested_upper(rates, miss[1]), 1.0)
        monotone = testing_monotone_bound(rates, monotone_cfg(*miss))
        worst = worst_case_bound(rates, explicit_cfg(miss, (0.0, derived)))
        assert monotone.lo == pytest.approx(worst.lo, abs=1e-12)
        assert monotone.hi == pytest.approx(worst.hi, abs=1e-12)

    @given(rates=observed_rates(), miss=intervals(), untested=intervals())
    @settings(max_examples=EXAMPLES)
    def test_width_decomposition(self, rates, miss, untested):
        for cfg in (monotone_cfg(*miss), explicit_cfg(miss, untested)):
            bound = base_bound(rates, cfg)
            parts = width_decomposition(rates, cfg)
            assert bound_width(bound) == pytest.approx(parts.total, abs=1e-12)
            assert parts.accuracy_part >= 0.0 and parts.untested_part >= 0.0

    @given(rates=observed_rates(), outer=intervals(), inner=st.tuples(probability, probability))
    @settings(max_examples=EXAMPLES)
    def test_nested_assumptions_give_nested_bounds(self, rates, outer, inner):
        lo = min(outer[0] + inner[0] * (outer[1] - outer[0]), outer[1])
        hi = min(lo + inner[1] * (outer[1] - lo), outer[1])
        assume(lo <= hi)
        wide = testing_monotone_bound(rates, monotone_cfg(*outer))
        narrow = testing_monotone_bound(rates, monotone_cfg(lo, hi))
        assert wide.lo <= narrow.lo + 1e-12
        assert narrow.hi <= wide.hi + 1e-12

    @given(rates=observed_rates(), miss=intervals(), step=probability)
    @settings(max_examples=EXAMPLES)
    def test_upper_bound_grows_with_miss_rate(self, rates, miss, step):
        raised = min(miss[1] + step * (1.0 - miss[1]), 1.0)
        before = testing_monotone_bound(rates, monotone_cfg(*miss))
        after = testing_monotone_bound(rates, monotone_cfg(miss[0], raised))
        assert after.hi >= before.hi - 1e-12
        assert after.lo == before.lo


# ============================================================================
# Інтервали
# ============================================================================

class TestIntervals:

    def test_crossing_raises(self):
        with pytest.raises(AssumptionInconsistencyError) as info:
            make_interval(0.5, 0.4, BoundMethod.WORST_CASE, DAY)
        assert info.value.exit_code == 3
        assert "2020-04-06" in str(info.value)

    def test_clamp_is_flagged(self, caplog):
        bound = make_interval(-0.01, 1.02, BoundMethod.WORST_CASE, DAY)
        assert (bound.lo, bound.hi, bound.clamped) == (0.0, 1.0, True)
        assert "обрізано" in caplog.text

    def test_subset(self):
        inner = BoundInterval(0.2, 0.3, BoundMethod.WORST_CASE)
        outer = BoundInterval(0.1, 0.3, BoundMethod.WORST_CASE)
        assert inner.is_subset_of(outer) and not outer.is_subset_of(inner)
        assert outer.contains(0.1) and not outer.contains(0.31)

    def test_method_parse(self):
        assert BoundMethod.parse('envelope') is BoundMethod.TEMPORAL_ENVELOPE
        assert BoundMethod.parse('worst_case') is BoundMethod.WORST_CASE
        with pytest.raises(ConfigError):
            BoundMethod.parse('bayes')


# ============================================================================
# Часова обвідна
# ============================================================================

@st.composite
def consistent_intervals(draw):
    anchor = draw(probability)
    count = draw(st.integers(min_value=1, max_value=30))
    result = []
    for _ in range(count):
        lo = draw(st.floats(min_value=0.0, max_value=anchor))
        hi = draw(st.floats(min_value=anchor, max_value=1.0))
        result.append(BoundInterval(lo, hi, BoundMethod.TESTING_MONOTONE))
    return result


class TestEnvelope:

    @given(raw=consistent_intervals())
    @settings(max_examples=EXAMPLES)
    def test_envelope_is_monotone_and_tighter(self, raw):
        envelope = temporal_envelope(raw)
        for index, (item, original) in enumerate(zip(envelope, raw)):
            assert item.is_subset_of(original)
            assert item.method is BoundMethod.TEMPORAL_ENVELOPE
            if index:
                assert item.lo >= envelope[index - 1].lo
                assert item.hi >= envelope[index - 1].hi

    def test_envelope_crossing(self):
        raw = [BoundInterval(0.5, 0.6, BoundMethod.TESTING_MONOTONE),
               BoundInterval(0.1, 0.4, BoundMethod.TESTING_MONOTONE)]
        dates = [DAY, DAY + timedelta(days=1)]
        with pytest.raises(AssumptionInconsistencyError) as info:
            temporal_envelope(raw, dates)
        assert info.value.invariant == "bounds_cross"

    def test_empty(self):
        assert temporal_envelope([]) == []

    def test_running_extrema(self):
        raw = [BoundInterval(lo, hi, BoundMethod.TESTING_MONOTONE)
               for lo, hi in zip([0.1, 0.05, 0.2], [0.9, 0.8, 0.95])]
        envelope = temporal_envelope(raw)
        assert [item.lo for item in envelope] == [0.1, 0.1, 0.2]
        assert [item.hi for item in envelope] == [0.8, 0.8, 0.95]

    @pytest.mark.parametrize('region_id', ['illinois', 'new_york', 'italy'])
    def test_published_envelope(self, regions, default_cfg, region_id):
        bounds = bound_series(regions[region_id], default_cfg, BoundMethod.TEMPORAL_ENVELOPE)
        assert list(bounds.dates) == DATES
        for day, interval, (lo, hi) in zip(bounds.dates, bounds.intervals, ENVELOPE[region_id]):
            assert interval.lo == pytest.approx(lo, abs=1e-3), day
            assert interval.hi == pytest.approx(hi, abs=1e-3), day

    def test_italy_upper_bound_is_flat(self, italy, default_cfg):
        bounds = bound_series(italy, default_cfg, BoundMethod.TEMPORAL_ENVELOPE)
        assert {round(item.hi, 3) for item in bounds.intervals} == {0.510}

    def test_envelope_inside_daily_bounds(self, regions, default_cfg):
        for series in regions.values():
            daily = bound_series(series, default_cfg, BoundMethod.TESTING_MONOTONE)
            envelope = bound_series(series, default_cfg, BoundMethod.TEMPORAL_ENVELOPE)
            for item, original in zip(envelope.intervals, daily.intervals):
                assert item.is_subset_of(original)


# ============================================================================
# Уточнення для безсимптомних
# ============================================================================

class TestAsymptomatic:

    @pytest.mark.parametrize('region_id, expected', [('illinois', 0.002), ('new_york', 0.011), ('italy', 0.004)])
    def test_refined_lower_bound(self, regions, default_cfg, region_id, expected):
        cfg = default_cfg.with_alpha(0.25, 0.5)
        bounds = bound_series(regions[region_id], cfg, BoundMethod.ASYM_REFINED)
        assert bounds.interval_on(DAY).lo == pytest.approx(expected, abs=1e-3)

    def test_refinement_keeps_upper_and_raises_lower(self, italy, default_cfg):
        cfg = default_cfg.with_alpha(0.25, 0.5)
        envelope = bound_series(italy, cfg, BoundMethod.TEMPORAL_ENVELOPE)
        refined = bound_series(italy, cfg, BoundMethod.ASYM_REFINED)
        for plain, better in zip(envelope.intervals, refined.intervals):
            assert better.hi == plain.hi
            assert better.lo >= plain.lo

    def test_zero_alpha_equals_envelope(self, illinois, default_cfg):
        envelope = bound_series(illinois, default_cfg, BoundMethod.TEMPORAL_ENVELOPE)
        refined = bound_series(illinois, default_cfg.with_alpha(0.0, 0.0), BoundMethod.ASYM_REFINED)
        assert [item.lo for item in refined.intervals] == pytest.approx([item.lo for item in envelope.intervals])

    def test_alpha_required(self, italy, default_cfg):
        with pytest.raises(ConfigError) as info:
            bound_series(italy, default_cfg, BoundMethod.ASYM_REFINED)
        assert info.value.invariant == "alpha_required"

    def test_alpha_below_one(self, italy, default_cfg):
        with pytest.raises(ConfigError) as info:
            bound_series(italy, default_cfg.with_alpha(0.2, 1.0), BoundMethod.ASYM_REFINED)
        assert info.value.invariant == "alpha_below_one"

    def test_refined_lower_clamp_is_flagged(self, caplog):
        rates = EmpiricalRates(DAY, p_tested=0.5, p_pos_given_tested=0.5)
        cfg = monotone_cfg(0.1, 1.0).with_alpha(0.75, 0.8)
        with caplog.at_level(logging.WARNING):
            assert asymptomatic_refined_lower(rates, cfg) == 1.0
        assert "обрізано" in caplog.text
        (bound,) = asymptomatic_envelope([rates], cfg)
        assert (bound.lo, bound.hi, bound.clamped) == (1.0, 1.0, True)

    def test_refined_lower_without_clamp(self, caplog):
        rates = EmpiricalRates(DAY, p_tested=0.5, p_pos_given_tested=0.5)
        cfg = monotone_cfg(0.1, 1.0).with_alpha(0.5, 0.6)
        (bound,) = asymptomatic_envelope([rates], cfg)
        assert bound.lo == pytest.approx(0.55)
        assert not bound.clamped
        assert "обрізано" not in caplog.text


# ============================================================================
# Тяжкі наслідки
# ============================================================================

class TestSevereRatio:

    def test_ratio(self):
        bound = severe_conditional_bound(0.01, BoundInterval(0.05, 0.5, BoundMethod.TEMPORAL_ENVELOPE))
        assert bound.lo == pytest.approx(0.02)
        assert bound.hi == pytest.approx(0.2)
        assert bound.method is BoundMethod.SEVERE_RATIO

    def test_zero_infection_lower_bound(self):
        bound = severe_conditional_bound(0.01, BoundInterval(0.0, 0.5, BoundMethod.TEMPORAL_ENVELOPE))
        assert bound.hi == 1.0

    def test_no_severe_cases(self):
        bound = severe_conditional_bound(0.0, BoundInterval(0.0, 0.5, BoundMethod.TEMPORAL_ENVELOPE))
        assert (bound.lo, bound.hi) == (0.0, 0.0)

    def test_severe_above_infected(self):
        with pytest.raises(AssumptionInconsistencyError) as info:
            severe_conditional_bound(0.6, BoundInterval(0.1, 0.5, BoundMethod.TEMPORAL_ENVELOPE), DAY)
        assert info.value.invariant == "severe_implies_infected"

    def test_ratio_clamped_at_one(self):
        bound = severe_conditional_bound(0.2, BoundInterval(0.1, 0.5, BoundMethod.TEMPORAL_ENVELOPE))
        assert bound.hi == 1.0 and bound.clamped

    @given(outer=intervals(), shrink=st.tuples(probability, probability), share=probability)
    @settings(max_examples=EXAMPLES)
    def test_wider_infection_bound_gives_wider_severe_bound(self, outer, shrink, share):
        inner_lo = min(outer[0] + shrink[0] * (outer[1] - outer[0]), outer[1])
        inner_hi = min(inner_lo + shrink[1] * (outer[1] - inner_lo), outer[1])
        inner = BoundInterval(inner_lo, inner_hi, BoundMethod.TEMPORAL_ENVELOPE)
        wide = BoundInterval(outer[0], outer[1], BoundMethod.TEMPORAL_ENVELOPE)
        p_severe = share * inner_hi
        narrow_severe = severe_conditional_bound(p_severe, inner)
        wide_severe = severe_conditional_bound(p_severe, wide)
        assert wide_severe.lo <= narrow_severe.lo + 1e-12
        assert narrow_severe.hi <= wide_severe.hi + 1e-12


# ============================================================================
# Страти
# ============================================================================

class TestStratified:

    STRATA = {
        'young': (EmpiricalRates(DAY, 0.01, 0.1), AssumptionConfig.default()),
        'old': (EmpiricalRates(DAY, 0.03, 0.3), AssumptionConfig.default()),
    }

    def test_per_stratum_only(self):
        result = stratified_bound(self.STRATA)
        assert result.blend is None
        assert result.per_stratum['old'] == base_bound(*self.STRATA['old'])

    def test_blend(self):
        weights = blend_weights_from_population({'young': 3000, 'old': 1000})
        assert weights == {'young': 0.75, 'old': 0.25}
        result = stratified_bound(self.STRATA, weights)
        young, old = result.per_stratum['young'], result.per_stratum['old']
        assert result.blend.lo == pytest.approx(0.75 * young.lo + 0.25 * old.lo)
        assert result.blend.hi == pytest.approx(0.75 * young.hi + 0.25 * old.hi)
        assert result.blend.method is BoundMethod.STRATIFIED

    @pytest.mark.parametrize('weights, invariant', [
        ({'young': 0.5}, "weights_keys"),
        ({'young': 1.5, 'old': -0.5}, "weights_nonnegative"),
        ({'young': 0.5, 'old': 0.4}, "weights_sum"),
    ])
    def test_bad_weights(self, weights, invariant):
        with pytest.raises(ConfigError) as info:
            stratified_bound(self.STRATA, weights)
        assert info.value.invariant == invariant


# ============================================================================
# BoundSeries
# ============================================================================

class TestBoundSeries:

    def test_frame_columns(self, italy, default_cfg):
        frame = bound_series(italy, default_cfg, BoundMethod.TESTING_MONOTONE).to_frame()
        assert list(frame.columns) == ['date', 'method', 'lo', 'hi', 'clamped']
        assert len(frame) == len(DATES)

    def test_json_parse_back(self, italy, default_cfg):
        bounds = bound_series(italy, default_cfg, BoundMethod.TEMPORAL_ENVELOPE)
        parsed = BoundSeries.from_json(bounds.to_json())
        assert parsed == bounds
        assert parsed.region_id == 'italy'

    def test_csv_parse_back(self, new_york, default_cfg):
        bounds = bound_series(new_york, default_cfg, BoundMethod.TEMPORAL_ENVELOPE)
        parsed = BoundSeries.from_csv(bounds.to_csv(), 'new_york')
        assert parsed.dates == bounds.dates
        assert [item.hi for item in parsed.intervals] == pytest.approx([item.hi for item in bounds.intervals])

    def test_bad_row(self):
        with pytest.raises(DataValidationError) as info:
            BoundSeries.from_csv("date,method,lo,hi\n2020-04-06,worst_case,0.5,0.4\n")
        assert info.value.row == 1

    def test_not_json(self):
        with pytest.raises(DataValidationError):
            BoundSeries.from_json("[1, 2")

    def test_severe_ratio_is_not_an_infection_method(self, italy, default_cfg):
        with pytest.raises(ConfigError):
            bound_series(italy, default_cfg, BoundMethod.SEVERE_RATIO)
