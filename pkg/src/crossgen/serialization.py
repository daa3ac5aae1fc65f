"""Canonical JSON documents for spaces and profiles.

Round-trip identity is the contract: deserialize(serialize(x)) == x,
with rationals preserved exactly ("1/3" never becomes 0.333...).
Parsing reports the offending field path; invariant violations are
rejected with the full validation report attached.
"""

from __future__ import annotations

import hashlib
import json
from typing import Optional

from . import constraints
from .model import (
    FeatureSchema,
    InvalidDocument,
    Profile,
    ScenarioSpace,
    SkillGroup,
    validate_profile,
    validate_space,
)
from .rational import RationalFormatError, format_rational, parse_rational


def space_to_doc(space: ScenarioSpace) -> dict:
    return {
        "features": [
            {
                "id": f.feature_id,
                "name": f.name,
                "group": f.group_id,
                "values": [format_rational(v) for v in f.values],
                **({"labels": list(f.labels)} if f.labels is not None else {}),
            }
            for f in space.features
        ],
        "groups": [{"id": g.group_id, "name": g.name} for g in space.groups],
    }


def serialize_space(space: ScenarioSpace) -> str:
    return json.dumps(space_to_doc(space), indent=2, ensure_ascii=False) + "\n"


def _require(doc: dict, key: str, kind: type, where: str):
    if key not in doc:
        raise InvalidDocument(f"{where}: missing field {key!r}")
    value = doc[key]
    if kind is int and isinstance(value, bool):
        raise InvalidDocument(f"{where}.{key}: expected {kind.__name__}, got bool")
    if not isinstance(value, kind):
        raise InvalidDocument(f"{where}.{key}: expected {kind.__name__}, got {type(value).__name__}")
    return value


def space_from_doc(doc: object) -> ScenarioSpace:
    if not isinstance(doc, dict):
        raise InvalidDocument("space document must be a JSON object")
    raw_features = _require(doc, "features", list, "space")
    raw_groups = _require(doc, "groups", list, "space")

    groups = []
    for i, raw in enumerate(raw_groups):
        where = f"groups[{i}]"
        if not isinstance(raw, dict):
            raise InvalidDocument(f"{where}: expected an object")
        groups.append(SkillGroup(_require(raw, "id", int, where), _require(raw, "name", str, where)))

    features = []
    for i, raw in enumerate(raw_features):
        where = f"features[{i}]"
        if not isinstance(raw, dict):
            raise InvalidDocument(f"{where}: expected an object")
        raw_values = _require(raw, "values", list, where)
        try:
            values = tuple(
                parse_rational(v, f"{where}.values[{j}]") for j, v in enumerate(raw_values)
            )
        except RationalFormatError as exc:
            raise InvalidDocument(str(exc)) from exc
        labels: Optional[tuple[str, ...]] = None
        if "labels" in raw:
            raw_labels = _require(raw, "labels", list, where)
            for j, lab in enumerate(raw_labels):
                if not isinstance(lab, str):
                    raise InvalidDocument(f"{where}.labels[{j}]: expected a string")
            labels = tuple(raw_labels)
        features.append(
            FeatureSchema(
                feature_id=_require(raw, "id", int, where),
                name=_require(raw, "name", str, where),
                values=values,
                group_id=_require(raw, "group", int, where),
                labels=labels,
            )
        )

    space = ScenarioSpace(tuple(features), tuple(groups))
    violations = validate_space(space)
    if violations:
        raise InvalidDocument(
            "space document violates schema invariants: "
            + "; ".join(str(v) for v in violations),
            violations,
        )
    return space


def deserialize_space(text: str) -> ScenarioSpace:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDocument(f"space document is not valid JSON: line {exc.lineno}: {exc.msg}") from exc
    return space_from_doc(doc)


def profile_to_doc(profile: Profile) -> dict:
    return {
        "id": profile.profile_id,
        "name": profile.name,
        "weights": {str(gid): w for gid, w in sorted(profile.weights.items())},
        "constraint": constraints.constraint_to_doc(profile.constraint),
        "description": profile.description,
        "version": profile.version,
    }


def serialize_profile(profile: Profile) -> str:
    return json.dumps(profile_to_doc(profile), indent=2, ensure_ascii=False) + "\n"


def profile_from_doc(doc: object, space: Optional[ScenarioSpace] = None) -> Profile:
    """Parse a profile document; validate against ``space`` when given."""
    if not isinstance(doc, dict):
        raise InvalidDocument("profile document must be a JSON object")
    raw_weights = _require(doc, "weights", dict, "profile")
    weights: dict[int, int] = {}
    for key, value in raw_weights.items():
        try:
            gid = int(key)
        except ValueError:
            raise InvalidDocument(f"profile.weights: key {key!r} is not a group id") from None
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidDocument(f"profile.weights[{key!r}]: expected an integer weight")
        weights[gid] = value

    profile = Profile(
        profile_id=_require(doc, "id", str, "profile"),
        name=_require(doc, "name", str, "profile"),
        weights=weights,
        constraint=constraints.constraint_from_doc(doc.get("constraint", {"op": "true"})),
        description=doc.get("description", "") if isinstance(doc.get("description", ""), str) else "",
        version=_require(doc, "version", int, "profile") if "version" in doc else 1,
    )
    if space is not None:
        violations = validate_profile(profile, space)
        violations += constraints.validate_constraint(profile.constraint, space)
        if violations:
            raise InvalidDocument(
                "profile document violates invariants: " + "; ".join(str(v) for v in violations),
                violations,
            )
    return profile


def deserialize_profile(text: str, space: Optional[ScenarioSpace] = None) -> Profile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDocument(f"profile document is not valid JSON: line {exc.lineno}: {exc.msg}") from exc
    return profile_from_doc(doc, space)


def space_fingerprint(space: ScenarioSpace) -> str:
    """Content hash of the canonical space document; analyses carry it
    so cached results invalidate whenever the schema changes."""
    canonical = json.dumps(space_to_doc(space), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
