"""Feature-diversity metrics within consistent-difficulty buckets.

For each feature the benchmark is the uniform distribution over its
values; the evenness score V is 1 minus the Jensen-Shannon divergence
between the empirical in-bucket distribution and that benchmark. Logs
are base 2 - that is what bounds JSD (and hence V) to [0, 1]. V = 1
means every value of the feature is used equally often inside the
bucket; a feature pinned by a constraint scores a constant V below 1.

Divergences are computed in binary64 after exact counting; empty
buckets are "no data" (an error), never V = 0, because 0 would claim a
present-but-degenerate distribution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .enumeration import BucketTable, bucket_table
from .model import Profile, ScenarioSpace


class EmptyBucketError(ValueError):
    """The requested bucket holds no admissible scenarios."""


@dataclass(frozen=True)
class ValueDistribution:
    feature_id: int
    probabilities: tuple[float, ...]


@dataclass(frozen=True)
class VarianceCurve:
    """V over the nonempty buckets of one feature, cd ascending."""

    feature_id: int
    points: tuple[tuple[Fraction, float], ...]  # (cd, V)


def jsd(p: Sequence[float], q: Sequence[float]) -> float:
    """Jensen-Shannon divergence, base-2 logs, 0*log(0) = 0.

    Symmetric, zero iff the distributions coincide, bounded by 1.
    """
    if len(p) != len(q):
        raise ValueError(f"length mismatch: {len(p)} vs {len(q)}")
    p = [float(x) for x in p]
    q = [float(x) for x in q]
    for dist, name in ((p, "p"), (q, "q")):
        if any(x < 0 for x in dist):
            raise ValueError(f"{name} has negative entries")
        if abs(sum(dist) - 1.0) > 1e-9:
            raise ValueError(f"{name} does not sum to 1 (got {sum(dist)!r})")
    total = 0.0
    for a, b in zip(p, q):
        m = (a + b) / 2.0
        ta = a * math.log2(a / m) / 2.0 if a > 0.0 else 0.0
        tb = b * math.log2(b / m) / 2.0 if b > 0.0 else 0.0
        # add the two terms smallest-first: makes jsd(p, q) == jsd(q, p)
        # bit-for-bit instead of up to float association
        total += (ta + tb) if ta <= tb else (tb + ta)
    # clamp float dust so the documented [0, 1] bound is literal
    return min(max(total, 0.0), 1.0)


def _distribution_from_table(
    table: BucketTable, space: ScenarioSpace, feature_id: int, k: int
) -> ValueDistribution:
    pos = space.feature_index(feature_id)
    population = table.counts.count_profile[k]
    if population == 0:
        raise EmptyBucketError(f"bucket {k} has no admissible scenarios")
    tallies = table.value_counts[pos][k]
    return ValueDistribution(
        feature_id=feature_id,
        probabilities=tuple(c / population for c in tallies),
    )


def empirical_distribution(
    space: ScenarioSpace, profile: Profile, feature_id: int, k: int
) -> ValueDistribution:
    """Frequencies of one feature's values among the admissible
    scenarios of bucket k."""
    table = bucket_table(space, profile)
    return _distribution_from_table(table, space, feature_id, k)


def _uniform(n: int) -> tuple[float, ...]:
    return tuple(1.0 / n for _ in range(n))


def variance_of_distribution(dist: ValueDistribution) -> float:
    """1 - JSD against the uniform benchmark over the feature's values."""
    return 1.0 - jsd(dist.probabilities, _uniform(len(dist.probabilities)))


def variance(space: ScenarioSpace, profile: Profile, feature_id: int, k: int) -> float:
    return variance_of_distribution(empirical_distribution(space, profile, feature_id, k))


def variance_curves_from_table(
    table: BucketTable,
    space: ScenarioSpace,
    exclude: Iterable[int] = (),
) -> list[VarianceCurve]:
    """Curves for every non-excluded feature over the nonempty buckets."""
    excluded = set(exclude)
    k_max = table.counts.k_max
    nonempty = table.counts.nonempty_buckets()
    curves = []
    for feat in space.features:
        if feat.feature_id in excluded:
            continue
        points = []
        for k in nonempty:
            dist = _distribution_from_table(table, space, feat.feature_id, k)
            points.append((Fraction(k, k_max), variance_of_distribution(dist)))
        curves.append(VarianceCurve(feature_id=feat.feature_id, points=tuple(points)))
    return curves


def variance_curves(
    space: ScenarioSpace,
    profile: Profile,
    exclude: Iterable[int] = (),
    prefer_fast: bool = True,
) -> list[VarianceCurve]:
    table = bucket_table(space, profile, prefer_fast=prefer_fast)
    return variance_curves_from_table(table, space, exclude)
