"""Diverse scenario sampling and training-path composition.

``sample_bucket`` picks scenarios of one difficulty bucket that are as
mutually different as possible: the first pick is seeded-uniform, each
following pick greedily maximizes the minimum Hamming distance (number
of differing feature assignments) to everything already picked, ties
broken lexicographically. Greedy max-min beats a lexicographic prefix
because neighbors in lexicographic order differ in almost nothing.

Determinism contract: the same (space, profile, arguments, seed)
produce the same plan on every platform. Randomness comes only from
``random.Random(seed)``, whose sequence is stable across CPython
versions, and from nothing else.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .diversity import EmptyBucketError
from .enumeration import bucket_members, count_by_bucket
from .model import Profile, Scenario, ScenarioSpace
from .rational import format_rational


@dataclass(frozen=True)
class PlanStep:
    cd: Fraction
    scenario: Scenario
    requested_cd: Optional[Fraction] = None  # set when the target was substituted


@dataclass(frozen=True)
class SessionPlan:
    profile_id: str
    seed: int
    steps: tuple[PlanStep, ...]


def hamming(a: Scenario, b: Scenario) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def sample_bucket(
    space: ScenarioSpace,
    profile: Profile,
    k: int,
    count: int,
    seed: int,
) -> list[Scenario]:
    """min(count, population) distinct scenarios from bucket k."""
    if count < 1:
        raise ValueError("count must be at least 1")
    members = bucket_members(space, profile, k)
    if not members:
        raise EmptyBucketError(f"bucket {k} has no admissible scenarios")
    if count >= len(members):
        return list(members)

    first = random.Random(seed).randrange(len(members))
    picked = [members[first]]
    picked_set = {first}
    # min distance from each candidate to the picked set, updated per pick
    dist = [hamming(m, members[first]) for m in members]
    while len(picked) < count:
        best = -1
        best_dist = -1
        for i, d in enumerate(dist):
            if i in picked_set:
                continue
            if d > best_dist:  # first occurrence wins: lexicographic tie-break
                best = i
                best_dist = d
        picked.append(members[best])
        picked_set.add(best)
        chosen = members[best]
        for i, m in enumerate(members):
            d = hamming(m, chosen)
            if d < dist[i]:
                dist[i] = d
    return picked


def _nearest_nonempty(target: Fraction, nonempty: Sequence[int], k_max: int) -> int:
    """Nearest bucket by |cd - target|, ties toward the lower cd."""
    best = nonempty[0]
    best_gap = abs(Fraction(best, k_max) - target)
    for k in nonempty[1:]:
        gap = abs(Fraction(k, k_max) - target)
        if gap < best_gap:
            best, best_gap = k, gap
    return best


def build_path(
    space: ScenarioSpace,
    profile: Profile,
    cd_targets: Sequence[Fraction],
    per_level: int,
    seed: int,
) -> SessionPlan:
    """Ordered plan of increasing difficulty, ``per_level`` scenarios
    per target. Targets with no matching bucket are substituted by the
    nearest nonempty one and the requested value is recorded."""
    if per_level < 1:
        raise ValueError("per_level must be at least 1")
    counts = count_by_bucket(space, profile)
    nonempty = counts.nonempty_buckets()
    if not nonempty:
        raise EmptyBucketError("the profile constraint admits no scenarios at all")

    resolved: list[tuple[int, Optional[Fraction]]] = []
    for target in cd_targets:
        if not 0 <= target <= 1:
            raise ValueError(f"cd target {target} outside [0, 1]")
        k = _nearest_nonempty(target, nonempty, counts.k_max)
        substituted = Fraction(k, counts.k_max) != target
        resolved.append((k, target if substituted else None))
    resolved.sort(key=lambda pair: pair[0])

    steps: list[PlanStep] = []
    for ordinal, (k, requested) in enumerate(resolved):
        # independent per-level seed, stable across platforms
        level_seed = seed * 1_000_003 + ordinal
        for scenario in sample_bucket(space, profile, k, per_level, level_seed):
            steps.append(
                PlanStep(cd=Fraction(k, counts.k_max), scenario=scenario, requested_cd=requested)
            )
    return SessionPlan(profile_id=profile.profile_id, seed=seed, steps=tuple(steps))


def plan_to_doc(plan: SessionPlan, space: ScenarioSpace) -> dict:
    """JSON document with human-readable labels resolved from the schema."""
    steps = []
    for step in plan.steps:
        entry: dict = {
            "cd": format_rational(step.cd),
            "assignment": list(step.scenario),
            "labels": {
                feat.name: feat.label_for(idx)
                for feat, idx in zip(space.features, step.scenario)
            },
        }
        if step.requested_cd is not None:
            entry["requested_cd"] = format_rational(step.requested_cd)
        steps.append(entry)
    return {"profile": plan.profile_id, "seed": plan.seed, "steps": steps}
