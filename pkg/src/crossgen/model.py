"""Scenario space schema: features, skill groups, profiles, scenarios.

A scenario space is a finite product of small ordered value sets, one
per feature. A scenario is an assignment of one value index per
feature; indices (not the rational values) identify assignments so hot
loops never compare fractions. All model objects are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

Scenario = tuple[int, ...]
"""One value index per feature, in feature order."""

WEIGHT_MIN = 1
WEIGHT_MAX = 5


@dataclass(frozen=True)
class FeatureSchema:
    """One configurable scenario dimension with ordered difficulty values."""

    feature_id: int
    name: str
    values: tuple[Fraction, ...]
    group_id: int
    labels: Optional[tuple[str, ...]] = None

    def label_for(self, value_index: int) -> str:
        if self.labels is not None:
            return self.labels[value_index]
        return str(self.values[value_index])


@dataclass(frozen=True)
class SkillGroup:
    """A cognitive-skill category whose weight scales its member features."""

    group_id: int
    name: str


@dataclass(frozen=True)
class ScenarioSpace:
    features: tuple[FeatureSchema, ...]
    groups: tuple[SkillGroup, ...]

    def feature_by_id(self, feature_id: int) -> FeatureSchema:
        for feat in self.features:
            if feat.feature_id == feature_id:
                return feat
        raise KeyError(f"no feature with id {feature_id}")

    def group_by_id(self, group_id: int) -> SkillGroup:
        for group in self.groups:
            if group.group_id == group_id:
                return group
        raise KeyError(f"no group with id {group_id}")

    def radices(self) -> tuple[int, ...]:
        """Per-feature value counts, in feature order."""
        return tuple(len(f.values) for f in self.features)

    def combination_count(self) -> int:
        total = 1
        for f in self.features:
            total *= len(f.values)
        return total

    def feature_index(self, feature_id: int) -> int:
        """Position of a feature in the ordered feature list."""
        for i, feat in enumerate(self.features):
            if feat.feature_id == feature_id:
                return i
        raise KeyError(f"no feature with id {feature_id}")


@dataclass(frozen=True, eq=True)
class Profile:
    """Per-skill-group weights plus a scenario filter.

    ``weights`` maps group_id to an integer in [1, 5]. ``version`` is a
    monotonically increasing integer used for optimistic concurrency in
    the profile store; it plays no role in scoring.
    """

    profile_id: str
    name: str
    weights: Mapping[int, int]
    constraint: "object"  # ConstraintExpr; untyped here to avoid an import cycle
    description: str = ""
    version: int = 1

    def with_version(self, version: int) -> "Profile":
        return Profile(
            profile_id=self.profile_id,
            name=self.name,
            weights=dict(self.weights),
            constraint=self.constraint,
            description=self.description,
            version=version,
        )


@dataclass(frozen=True)
class Violation:
    """One invariant violation found by validation. Data, not an exception."""

    code: str
    message: str
    feature_id: Optional[int] = None
    group_id: Optional[int] = None

    def __str__(self) -> str:
        return f"[{self.code}] {self.message}"


def validate_space(space: ScenarioSpace) -> list[Violation]:
    """Return every schema invariant violation; an empty list means ok."""
    violations: list[Violation] = []
    group_ids = [g.group_id for g in space.groups]
    seen_groups: set[int] = set()
    for gid in group_ids:
        if gid in seen_groups:
            violations.append(
                Violation("duplicate-group-id", f"group id {gid} appears more than once", group_id=gid)
            )
        seen_groups.add(gid)

    seen_features: set[int] = set()
    for feat in space.features:
        fid = feat.feature_id
        if fid in seen_features:
            violations.append(
                Violation("duplicate-feature-id", f"feature id {fid} appears more than once", feature_id=fid)
            )
        seen_features.add(fid)

        if not feat.values:
            violations.append(
                Violation("empty-values", f"feature {fid} ({feat.name}) has no values", feature_id=fid)
            )
        prev: Optional[Fraction] = None
        for value in feat.values:
            if value < 0 or value > 1:
                violations.append(
                    Violation(
                        "value-out-of-range",
                        f"feature {fid} value {value} outside [0, 1]",
                        feature_id=fid,
                    )
                )
            if prev is not None and value == prev:
                violations.append(
                    Violation("duplicate-value", f"feature {fid} repeats value {value}", feature_id=fid)
                )
            elif prev is not None and value < prev:
                violations.append(
                    Violation(
                        "unsorted-values",
                        f"feature {fid} values not strictly ascending at {value}",
                        feature_id=fid,
                    )
                )
            prev = value

        if feat.labels is not None and len(feat.labels) != len(feat.values):
            violations.append(
                Violation(
                    "label-count-mismatch",
                    f"feature {fid} has {len(feat.labels)} labels for {len(feat.values)} values",
                    feature_id=fid,
                )
            )
        if feat.group_id not in seen_groups and feat.group_id not in group_ids:
            violations.append(
                Violation(
                    "dangling-group",
                    f"feature {fid} references missing group {feat.group_id}",
                    feature_id=fid,
                    group_id=feat.group_id,
                )
            )
    return violations


def validate_profile(profile: Profile, space: ScenarioSpace) -> list[Violation]:
    """Check weight coverage and range against a space. Constraint
    references are validated separately by the constraints module."""
    violations: list[Violation] = []
    for group in space.groups:
        if group.group_id not in profile.weights:
            violations.append(
                Violation(
                    "missing-weight",
                    f"profile {profile.profile_id!r} has no weight for group {group.group_id}",
                    group_id=group.group_id,
                )
            )
    for gid, weight in profile.weights.items():
        if not isinstance(weight, int) or isinstance(weight, bool):
            violations.append(
                Violation("weight-not-integer", f"weight for group {gid} is not an integer", group_id=gid)
            )
        elif not WEIGHT_MIN <= weight <= WEIGHT_MAX:
            violations.append(
                Violation(
                    "weight-out-of-range",
                    f"weight {weight} for group {gid} outside [{WEIGHT_MIN}, {WEIGHT_MAX}]",
                    group_id=gid,
                )
            )
        if all(g.group_id != gid for g in space.groups):
            violations.append(
                Violation("unknown-group", f"weight refers to missing group {gid}", group_id=gid)
            )
    if profile.version < 1:
        violations.append(Violation("bad-version", f"version {profile.version} must be >= 1"))
    return violations


def validate_scenario(scenario: Sequence[int], space: ScenarioSpace) -> None:
    """Raise ValueError unless the assignment fits the space exactly."""
    if len(scenario) != len(space.features):
        raise ValueError(
            f"scenario has {len(scenario)} entries for {len(space.features)} features"
        )
    for i, (idx, feat) in enumerate(zip(scenario, space.features)):
        if not 0 <= idx < len(feat.values):
            raise ValueError(
                f"feature {feat.feature_id} (position {i}): value index {idx} "
                f"outside 0..{len(feat.values) - 1}"
            )


class InvalidDocument(ValueError):
    """A document failed validation; carries the violation report."""

    def __init__(self, message: str, violations: Iterable[Violation] = ()):  # noqa: D401
        super().__init__(message)
        self.violations = list(violations)
