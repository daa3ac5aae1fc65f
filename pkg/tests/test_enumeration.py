from __future__ import annotations

import random
import time
from fractions import Fraction as F

import pytest

from crossgen import constraints as cx
from crossgen.enumeration import (
    BucketCounts,
    UnsupportedConstraintShape,
    bucket_members,
    count_by_bucket_bruteforce,
    count_by_bucket_fast,
    bucket_table_bruteforce,
    bucket_table_fast,
    enumerate_scenarios,
    score_grid,
)
from crossgen.model import FeatureSchema, Profile, ScenarioSpace, SkillGroup
from crossgen.presets import builtin_crosswalk_space, builtin_profile
from crossgen.constraints import TRUE

from .util import naive_scenarios, random_supported_constraint

SPACE = builtin_crosswalk_space()
P1 = builtin_profile("profile-1")
P3 = builtin_profile("profile-3")
P4 = builtin_profile("profile-4")


def tiny_space(*value_counts: int) -> ScenarioSpace:
    feats = tuple(
        FeatureSchema(i + 1, f"f{i + 1}", tuple(F(j, n - 1) if n > 1 else F(1) for j in range(n)), 1)
        for i, n in enumerate(value_counts)
    )
    return ScenarioSpace(feats, (SkillGroup(1, "g"),))


class TestScenarioStream:
    def test_unfiltered_count(self):
        n = sum(1 for _ in enumerate_scenarios(SPACE))
        assert n == 331776

    def test_profile_1_filtered_count(self):
        n = sum(1 for _ in enumerate_scenarios(SPACE, P1.constraint))
        assert n == 290304

    def test_single_feature_value_order(self):
        space = tiny_space(3)
        assert list(enumerate_scenarios(space)) == [(0,), (1,), (2,)]

    def test_lexicographic_and_duplicate_free(self):
        space = tiny_space(2, 3, 2)
        seen = list(enumerate_scenarios(space))
        assert seen == sorted(seen)
        assert len(seen) == len(set(seen)) == 12
        assert seen == list(naive_scenarios(space))

    def test_matches_itertools_on_builtin_prefix(self):
        stream = enumerate_scenarios(SPACE)
        for expected, got in zip(naive_scenarios(SPACE), stream):
            if expected[0] > 0:  # one full slice of the first feature is plenty
                break
            assert expected == got

    def test_resume_token_identity(self):
        space = tiny_space(3, 2, 2)
        full = list(enumerate_scenarios(space))
        stream = enumerate_scenarios(space)
        consumed = [next(stream) for _ in range(5)]
        token = stream.token
        resumed = list(enumerate_scenarios(space, start_token=token))
        assert consumed + resumed == full

    def test_resume_with_filter(self):
        constraint = cx.allow(2, (1, 2))
        space = tiny_space(3, 3, 3)
        full = list(enumerate_scenarios(space, constraint))
        stream = enumerate_scenarios(space, constraint)
        consumed = [next(stream) for _ in range(4)]
        resumed = list(enumerate_scenarios(space, constraint, start_token=stream.token))
        assert consumed + resumed == full

    def test_bad_token_rejected(self):
        with pytest.raises(ValueError, match="position token"):
            enumerate_scenarios(tiny_space(2), start_token=5)


class TestBruteForce:
    def test_profile_1_totals(self):
        counts = count_by_bucket_bruteforce(SPACE, P1)
        assert counts.total_all == 331776
        assert counts.total_profile == 290304

    def test_profile_4_totals(self):
        counts = count_by_bucket_bruteforce(SPACE, P4)
        assert counts.total_profile == 147456

    def test_single_feature_three_buckets(self):
        space = tiny_space(3)  # values 0, 1/2, 1; weight 1
        counts = count_by_bucket_bruteforce(space, Profile("p", "p", {1: 1}, TRUE))
        # delta = 1, so k = round(d) gives buckets 0, 1 (0 and 1/2 both round
        # to their nearest integers: 0 -> 0, 1/2 -> 1, 1 -> 1)
        assert counts.total_all == 3
        assert sum(counts.count_profile) == 3

    def test_bucket_partition(self):
        counts = count_by_bucket_bruteforce(SPACE, P3)
        assert counts.total_all == 331776
        assert all(p <= a for a, p in zip(counts.count_all, counts.count_profile))

    def test_buckets_match_per_scenario_scoring(self):
        """Cross-check tallies against per-scenario rational bucketing."""
        from .util import naive_bucket

        space = tiny_space(3, 2, 4)
        profile = Profile("p", "p", {1: 3}, cx.allow(3, (0, 2, 3)))
        counts = count_by_bucket_bruteforce(space, profile)
        k_expected_all = [0] * (counts.k_max + 1)
        k_expected_prof = [0] * (counts.k_max + 1)
        pred = cx.compile_predicate(profile.constraint, space)
        for s in naive_scenarios(space):
            k, k_max = naive_bucket(s, space, profile)
            assert k_max == counts.k_max
            k_expected_all[k] += 1
            if pred(s):
                k_expected_prof[k] += 1
        assert counts.count_all == tuple(k_expected_all)
        assert counts.count_profile == tuple(k_expected_prof)


class TestFastCounting:
    def test_builtin_profiles_bit_identical(self):
        for pid in ("profile-1", "profile-2", "profile-2-easy", "profile-2-medium",
                    "profile-2-hard", "profile-3", "profile-4"):
            profile = builtin_profile(pid)
            assert count_by_bucket_fast(SPACE, profile) == count_by_bucket_bruteforce(SPACE, profile), pid

    def test_unconstrained_total(self):
        counts = count_by_bucket_fast(SPACE, Profile("free", "free", P1.weights, TRUE))
        assert counts.total_all == 331776
        assert counts.total_profile == 331776

    def test_huge_space_under_a_second(self):
        values = tuple(F(i, 5) for i in range(6))
        feats = tuple(FeatureSchema(i, f"f{i}", values, 1 + (i % 4)) for i in range(1, 21))
        space = ScenarioSpace(feats, tuple(SkillGroup(g, f"g{g}") for g in range(1, 5)))
        profile = Profile("stress", "stress", {1: 2, 2: 3, 3: 5, 4: 1}, TRUE)
        t0 = time.perf_counter()
        counts = count_by_bucket_fast(space, profile)
        elapsed = time.perf_counter() - t0
        assert counts.total_all == 6**20  # ~3.66e15, never enumerated
        assert counts.total_profile == 6**20
        assert elapsed < 1.0

    def test_unsupported_shape_signals_fallback(self):
        profile = Profile("odd", "odd", P1.weights, cx.Or((cx.allow(1, (0,)), cx.allow(2, (1,)))))
        with pytest.raises(UnsupportedConstraintShape):
            count_by_bucket_fast(SPACE, profile)

    def test_inclusion_exclusion_sanity(self):
        # at least one of three unconstrained binary features: total * 7/8
        counts = count_by_bucket_fast(SPACE, P1)
        assert counts.total_profile == 331776 - 331776 // 8

    def test_empty_allow_counts_zero(self):
        profile = Profile("none", "none", P1.weights, cx.Allow(1, frozenset()))
        counts = count_by_bucket_fast(SPACE, profile)
        assert counts.total_profile == 0
        assert counts.total_all == 331776

    def test_randomized_supported_constraints(self):
        """>= 20 seeded random supported shapes, bit-identical counts."""
        rng = random.Random(20240817)
        weights_pool = [P1.weights, P3.weights, P4.weights]
        for trial in range(22):
            constraint = random_supported_constraint(rng, SPACE)
            profile = Profile(f"r{trial}", "random", weights_pool[trial % 3], constraint)
            fast = count_by_bucket_fast(SPACE, profile)
            brute = count_by_bucket_bruteforce(SPACE, profile)
            assert fast == brute, f"trial {trial}: {constraint}"

    def test_table_paths_agree(self):
        for profile in (P1, P3):
            assert bucket_table_fast(SPACE, profile) == bucket_table_bruteforce(SPACE, profile)

    def test_table_value_counts_sum_to_bucket_population(self):
        table = bucket_table_fast(SPACE, P3)
        for pos in range(len(SPACE.features)):
            for k in range(table.counts.k_max + 1):
                assert sum(table.value_counts[pos][k]) == table.counts.count_profile[k]


class TestBucketMembers:
    def test_below_minimum_bucket_empty(self):
        counts = count_by_bucket_fast(SPACE, P3)
        k_below = min(counts.nonempty_buckets()) - 1
        assert bucket_members(SPACE, P3, k_below, 0, 10) == []

    def test_limit_zero(self):
        assert bucket_members(SPACE, P1, 4, 0, 0) == []

    def test_pages_concatenate_to_full_scan(self):
        counts = count_by_bucket_fast(SPACE, P3)
        k = counts.nonempty_buckets()[0]
        population = counts.count_profile[k]
        paged = []
        offset = 0
        while True:
            page = bucket_members(SPACE, P3, k, offset, 40)
            paged.extend(page)
            if len(page) < 40:
                break
            offset += 40
        full = bucket_members(SPACE, P3, k)
        assert paged == full
        assert len(full) == population
        assert len(set(full)) == population

    def test_offset_beyond_population(self):
        counts = count_by_bucket_fast(SPACE, P3)
        k = counts.nonempty_buckets()[0]
        assert bucket_members(SPACE, P3, k, counts.count_profile[k] + 5, 10) == []

    def test_bad_bucket_rejected(self):
        grid = score_grid(SPACE, P1)
        with pytest.raises(ValueError, match="bucket"):
            bucket_members(SPACE, P1, grid.k_max + 1, 0, 1)


def test_bucket_counts_equality_is_bitwise():
    a = BucketCounts(2, (1, 2, 3), (0, 1, 2))
    assert a == BucketCounts(2, (1, 2, 3), (0, 1, 2))
    assert a != BucketCounts(2, (1, 2, 3), (0, 1, 3))
