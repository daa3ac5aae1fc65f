from __future__ import annotations

import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from crossgen.constraints import TRUE
from crossgen.diversity import (
    EmptyBucketError,
    empirical_distribution,
    jsd,
    variance,
    variance_curves,
)
from crossgen.model import FeatureSchema, Profile, ScenarioSpace, SkillGroup
from crossgen.presets import builtin_crosswalk_space, builtin_profile

from .util import naive_jsd

SPACE = builtin_crosswalk_space()
P1 = builtin_profile("profile-1")
P3 = builtin_profile("profile-3")

# closed forms, frozen from the textbook formula (see naive_jsd):
#   jsd((1,0), (1/2,1/2))      = 1/2*log2(4/3) + 1/4*log2(2/3) + 1/4
#   jsd((1,0,0,0), uniform(4)) = 1/2*log2(8/5) + 3/8*log2(2) + 1/8*log2(2/5)
JSD_DEGENERATE_BINARY = 0.311278
JSD_DEGENERATE_QUATERNARY = 0.548795


class TestJsd:
    def test_identical_distributions(self):
        assert jsd((0.25, 0.75), (0.25, 0.75)) == 0.0

    def test_degenerate_binary(self):
        expected = 0.5 * math.log2(4 / 3) + 0.25 * math.log2(2 / 3) + 0.25
        assert abs(expected - JSD_DEGENERATE_BINARY) < 1e-6
        assert abs(jsd((1.0, 0.0), (0.5, 0.5)) - JSD_DEGENERATE_BINARY) < 1e-6

    def test_degenerate_quaternary(self):
        value = jsd((1.0, 0.0, 0.0, 0.0), (0.25,) * 4)
        assert abs(value - JSD_DEGENERATE_QUATERNARY) < 1e-6
        assert abs(value - naive_jsd((1.0, 0.0, 0.0, 0.0), (0.25,) * 4)) < 1e-12

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length"):
            jsd((1.0,), (0.5, 0.5))

    def test_non_distribution(self):
        with pytest.raises(ValueError, match="sum"):
            jsd((0.7, 0.7), (0.5, 0.5))
        with pytest.raises(ValueError, match="negative"):
            jsd((-0.5, 1.5), (0.5, 0.5))

    def test_fraction_inputs(self):
        assert jsd((F(1, 2), F(1, 2)), (F(1, 2), F(1, 2))) == 0.0


@st.composite
def distribution_pair(draw):
    n = draw(st.integers(2, 6))
    def dist():
        weights = draw(st.lists(st.floats(0.001, 1.0), min_size=n, max_size=n))
        total = sum(weights)
        return tuple(w / total for w in weights)
    return dist(), dist()


@settings(max_examples=300, deadline=None)
@given(distribution_pair())
def test_jsd_symmetry_and_bounds(pair):
    p, q = pair
    assert jsd(p, q) == jsd(q, p)
    assert 0.0 <= jsd(p, q) <= 1.0
    assert abs(jsd(p, q) - naive_jsd(p, q)) < 1e-12


def one_hot(n: int, i: int) -> tuple[float, ...]:
    return tuple(1.0 if j == i else 0.0 for j in range(n))


def test_jsd_max_at_disjoint_support():
    assert abs(jsd(one_hot(2, 0), one_hot(2, 1)) - 1.0) < 1e-12


class TestEmpiricalDistribution:
    def test_even_split_on_binary_feature(self):
        # one feature, weight-1 profile: each bucket is one value, so use
        # a two-feature space where the second feature is free
        space = ScenarioSpace(
            features=(
                FeatureSchema(1, "main", (F(0), F(1)), 1),
                FeatureSchema(2, "free", (F(0), F(1)), 2),
            ),
            groups=(SkillGroup(1, "g1"), SkillGroup(2, "g2")),
        )
        profile = Profile("p", "p", {1: 5, 2: 1}, TRUE)
        # delta = 5/6; buckets: k = round(d/delta); scenario scores 0,1,5,6 ->
        # normalized 0, 1/6, 5/6, 1 -> k 0, 0, 1, 1: feature 2 splits evenly
        dist = empirical_distribution(space, profile, 2, 0)
        assert dist.probabilities == (0.5, 0.5)

    def test_constrained_feature_degenerate(self):
        for k in (2, 3, 4):
            dist = empirical_distribution(SPACE, P3, 5, k)
            assert dist.probabilities == (0.0, 0.0, 1.0)  # vehicles pinned to "many"

    def test_single_feature_space_degenerate_buckets(self):
        space = ScenarioSpace(
            features=(FeatureSchema(1, "only", (F(0), F(1, 2), F(1)), 1),),
            groups=(SkillGroup(1, "g"),),
        )
        profile = Profile("p", "p", {1: 1}, TRUE)
        # delta = 1 -> k in {0, 1}: value 0 alone in bucket 0; 1/2 and 1 in bucket 1
        assert empirical_distribution(space, profile, 1, 0).probabilities == (1.0, 0.0, 0.0)
        assert empirical_distribution(space, profile, 1, 1).probabilities == (0.0, 0.5, 0.5)

    def test_empty_bucket_is_no_data(self):
        with pytest.raises(EmptyBucketError):
            empirical_distribution(SPACE, P3, 5, 0)  # below the constrained minimum


class TestVariance:
    def test_uniform_is_one(self):
        space = ScenarioSpace(
            features=(
                FeatureSchema(1, "a", (F(0), F(1)), 1),
                FeatureSchema(2, "b", (F(0), F(1)), 1),
            ),
            groups=(SkillGroup(1, "g"),),
        )
        profile = Profile("p", "p", {1: 1}, TRUE)
        # bucket 1 holds (0,1) and (1,0): both features split 50/50
        assert variance(space, profile, 1, 1) == pytest.approx(1.0, abs=1e-9)

    def test_degenerate_binary(self):
        # profile-3 pins nothing binary, but bucket 2's sound features are
        # nearly free; use the pinned 3-ary feature's closed form instead
        value = 1.0 - jsd((1.0, 0.0), (0.5, 0.5))
        assert abs(value - 0.688722) < 1e-6

    def test_degenerate_quaternary(self):
        value = 1.0 - jsd((1.0, 0.0, 0.0, 0.0), (0.25,) * 4)
        assert abs(value - 0.451205) < 1e-6

    def test_constrained_feature_constant_v(self):
        curves = variance_curves(SPACE, P3, exclude=())
        by_id = {c.feature_id: c for c in curves}
        vehicle_vs = [v for _, v in by_id[5].points]
        assert len(set(round(v, 12) for v in vehicle_vs)) == 1  # pinned -> constant


class TestVarianceCurves:
    def test_profile_1_all_features(self):
        curves = variance_curves(SPACE, P1, exclude=())
        assert len(curves) == 12
        nonempty = [F(k, 9) for k in range(1, 10)]  # bucket 0 empty under the filter
        for curve in curves:
            assert [cd for cd, _ in curve.points] == nonempty
            assert all(0.0 <= v <= 1.0 for _, v in curve.points)

    def test_profile_3_excluding_constrained_features(self):
        curves = variance_curves(SPACE, P3, exclude=(1, 4, 5, 12))
        assert len(curves) == 8

    def test_single_bucket_space_single_point_curves(self):
        space = ScenarioSpace(
            features=(FeatureSchema(1, "x", (F(1, 2), F(1)), 1),),
            groups=(SkillGroup(1, "g"),),
        )
        profile = Profile("p", "p", {1: 1}, TRUE)
        # delta = 1: both values round to k=1 (1/2 -> 1? round(0.5)=1; 1 -> 1)
        curves = variance_curves(space, profile)
        assert len(curves) == 1
        assert len(curves[0].points) == 1

    def test_cd_ascending(self):
        for curve in variance_curves(SPACE, P3):
            cds = [cd for cd, _ in curve.points]
            assert cds == sorted(cds)

    def test_fast_and_brute_curves_identical(self):
        assert variance_curves(SPACE, P3, prefer_fast=True) == variance_curves(
            SPACE, P3, prefer_fast=False
        )


def test_profile_1_plateau_region():
    """Mid-range buckets keep every feature's diversity near 1."""
    curves = variance_curves(SPACE, P1)
    for curve in curves:
        for cd, v in curve.points:
            if F(3, 10) <= cd <= F(7, 10):
                assert v >= 0.9, (curve.feature_id, cd, v)
