"""Difficulty scoring and consistent-difficulty bucketing.

The raw score of a scenario is the weighted sum of its feature values,
each feature weighted by its skill group's weight. Normalization
divides by the score of the all-maximum scenario, so constrained
profiles keep their floor visible instead of being stretched to 0.

Bucketing groups scores whose difference is below the largest single
feature contribution (the step ``delta``): two scenarios in one bucket
cannot differ by a full feature's worth of difficulty. The bucket
index over its maximum gives the consistent-difficulty value in
[0, 1]. Everything here is exact rational arithmetic; two equal scores
can never straddle a bucket boundary through float noise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .model import Profile, Scenario, ScenarioSpace, validate_scenario
from .rational import round_half_away


@dataclass(frozen=True)
class DifficultyScore:
    raw: Fraction
    normalized: Fraction


@dataclass(frozen=True)
class BucketIndex:
    """Consistent-difficulty bucket: index k of k_max, cd = k / k_max."""

    k: int
    k_max: int

    @property
    def cd(self) -> Fraction:
        return Fraction(self.k, self.k_max)


def raw_score(scenario: Scenario, space: ScenarioSpace, profile: Profile) -> Fraction:
    """Weighted sum of the scenario's feature values."""
    validate_scenario(scenario, space)
    total = Fraction(0)
    for idx, feat in zip(scenario, space.features):
        total += profile.weights[feat.group_id] * feat.values[idx]
    return total


def max_raw_score(space: ScenarioSpace, profile: Profile) -> Fraction:
    """Score of the all-maximum scenario: the normalization constant."""
    total = Fraction(0)
    for feat in space.features:
        total += profile.weights[feat.group_id] * feat.values[-1]
    return total


def normalized_score(scenario: Scenario, space: ScenarioSpace, profile: Profile) -> Fraction:
    return raw_score(scenario, space, profile) / max_raw_score(space, profile)


def score(scenario: Scenario, space: ScenarioSpace, profile: Profile) -> DifficultyScore:
    raw = raw_score(scenario, space, profile)
    return DifficultyScore(raw=raw, normalized=raw / max_raw_score(space, profile))


def max_feature_contribution(space: ScenarioSpace, profile: Profile) -> Fraction:
    """Largest single-feature weighted contribution, unnormalized."""
    return max(profile.weights[f.group_id] * f.values[-1] for f in space.features)


def delta(space: ScenarioSpace, profile: Profile) -> Fraction:
    """The consistent-difficulty step: largest possible score increase
    from one feature, as a fraction of the maximum score."""
    return max_feature_contribution(space, profile) / max_raw_score(space, profile)


def k_max_for(space: ScenarioSpace, profile: Profile) -> int:
    return round_half_away(1 / delta(space, profile))


def cd_bucket(d_norm: Fraction, step: Fraction) -> BucketIndex:
    """Bucket a normalized score given the step ``delta``.

    k = round(d_norm / delta) with ties away from zero; k_max =
    round(1 / delta). Monotone in d_norm, and the hardest scenario
    (d_norm = 1) always lands at cd = 1.
    """
    if step <= 0:
        raise ValueError("delta must be positive")
    if not 0 <= d_norm <= 1:
        raise ValueError(f"normalized score {d_norm} outside [0, 1]")
    return BucketIndex(k=round_half_away(d_norm / step), k_max=round_half_away(1 / step))


def bucket_for(scenario: Scenario, space: ScenarioSpace, profile: Profile) -> BucketIndex:
    return cd_bucket(normalized_score(scenario, space, profile), delta(space, profile))


def literal_reciprocal_cd(d_norm: Fraction, step: Fraction) -> Optional[Fraction]:
    """Diagnostic variant: the reciprocal of round(d_norm / delta).

    Decreases as difficulty grows and is undefined when the rounded
    ratio is zero; kept only so the published formula can be inspected
    side by side with the bucket-normalized default.
    """
    k = round_half_away(d_norm / step)
    if k == 0:
        return None
    return Fraction(1, k)
