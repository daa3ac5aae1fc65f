"""Built-in crosswalk scenario space and the four reference profiles.

The crosswalk space has 12 features in 7 skill groups, 331776
combinations in total. Value lists are ordered by expected difficulty
and equally spaced on [0, 1]; features that can be absent include 0 so
a disabled feature contributes nothing to any score.
"""

from __future__ import annotations

from fractions import Fraction as F

from .constraints import profile_presets
from .model import FeatureSchema, Profile, ScenarioSpace, SkillGroup

_TL_LABELS = (
    "no traffic light",
    "basic TL",
    "TL with pedestrian button",
    "TL with countdown timer",
    "TL with button and timer",
    "broken or malfunctioning TL",
)

_VOLUMES = (F(0), F(1, 3), F(2, 3), F(1))
_VOLUME_LABELS = ("mute", "low", "medium", "high")


def builtin_crosswalk_space() -> ScenarioSpace:
    """The 12-feature urban crosswalk schema (331776 combinations)."""
    features = (
        FeatureSchema(1, "Type of crossing", (F(1, 3), F(2, 3), F(1)), 1,
                      ("short", "long", "double")),
        FeatureSchema(2, "Night time", (F(0), F(1)), 2, ("day time", "night time")),
        FeatureSchema(3, "Rain", (F(0), F(1)), 2, ("sunny", "rainy")),
        FeatureSchema(4, "Presence of pedestrians", (F(0), F(1, 2), F(1)), 3,
                      ("no one", "some people", "many people")),
        FeatureSchema(5, "Presence of vehicles", (F(0), F(1, 2), F(1)), 4,
                      ("no cars", "some cars", "many cars")),
        FeatureSchema(6, "ssd: church bell", (F(0), F(1)), 5, ("no sound", "sound activated")),
        FeatureSchema(7, "ssd: helicopter", (F(0), F(1)), 5, ("no sound", "sound activated")),
        FeatureSchema(8, "ssd: car waiting red lights", (F(0), F(1)), 5,
                      ("no sound", "sound activated")),
        FeatureSchema(9, "bn: ambulance", _VOLUMES, 6, _VOLUME_LABELS),
        FeatureSchema(10, "bn: baby crying", _VOLUMES, 6, _VOLUME_LABELS),
        FeatureSchema(11, "bn: dogs barking", _VOLUMES, 6, _VOLUME_LABELS),
        FeatureSchema(12, "Traffic light", (F(1, 6), F(1, 3), F(1, 2), F(2, 3), F(5, 6), F(1)), 7,
                      _TL_LABELS),
    )
    groups = (
        SkillGroup(1, "Visuospatial awareness"),
        SkillGroup(2, "Pattern vision"),
        SkillGroup(3, "Social factor"),
        SkillGroup(4, "Hazard factor"),
        SkillGroup(5, "Sudden Sound perception"),
        SkillGroup(6, "Tolerance to noise"),
        SkillGroup(7, "Rule complexity and hazard factor"),
    )
    return ScenarioSpace(features, groups)


_PROFILE_WEIGHTS = {
    "profile-1": (2, 2, 2, 2, 5, 5, 3),
    "profile-2": (3, 1, 3, 3, 3, 3, 3),
    "profile-3": (2, 2, 5, 5, 2, 2, 2),
    "profile-4": (5, 2, 2, 3, 2, 2, 2),
}

_PROFILE_NAMES = {
    "profile-1": "Sound hypersensitive",
    "profile-2": "Excessively focused attention on a detail",
    "profile-3": "Social anxiety",
    "profile-4": "Intermittent attention",
}

_PROFILE_DESCRIPTIONS = {
    "profile-1": "Unable to filter out loud noises; training requires at least one "
                 "sudden sound distractor in every scenario.",
    "profile-2": "Attention locks onto the crossing timer; scenarios require a "
                 "timer-equipped traffic light and a longer crossing, with staged "
                 "variants capping background-noise volumes at increasing levels.",
    "profile-3": "Avoids interaction with other pedestrians; scenarios require "
                 "crowded sidewalks, heavy traffic, a longer crossing and unsafe "
                 "signalling (no or broken traffic light).",
    "profile-4": "Difficulty sustaining attention; scenarios require a longer "
                 "crossing and at least some vehicle traffic.",
}


def builtin_profiles() -> list[Profile]:
    """The four reference profiles with their default constraints.

    profile-2 ships with its base constraint (equivalent to the "hard"
    stage); the easy/medium staged variants are available through
    ``builtin_stage_constraints``.
    """
    presets = profile_presets()
    return [
        Profile(
            profile_id=pid,
            name=_PROFILE_NAMES[pid],
            weights={gid: w for gid, w in enumerate(_PROFILE_WEIGHTS[pid], start=1)},
            constraint=presets[pid],
            description=_PROFILE_DESCRIPTIONS[pid],
            version=1,
        )
        for pid in ("profile-1", "profile-2", "profile-3", "profile-4")
    ]


def builtin_profile(profile_id: str) -> Profile:
    """One built-in profile by id, including staged profile-2 variants.

    ``profile-2-easy`` / ``-medium`` / ``-hard`` reuse profile-2's
    weights with the staged volume-cap constraints.
    """
    presets = profile_presets()
    base = {p.profile_id: p for p in builtin_profiles()}
    if profile_id in base:
        return base[profile_id]
    if profile_id in ("profile-2-easy", "profile-2-medium", "profile-2-hard"):
        stage = profile_id.rsplit("-", 1)[1]
        parent = base["profile-2"]
        return Profile(
            profile_id=profile_id,
            name=f"{parent.name} ({stage} stage)",
            weights=dict(parent.weights),
            constraint=presets[profile_id],
            description=parent.description,
            version=1,
        )
    raise KeyError(f"no built-in profile {profile_id!r}")


BUILTIN_PROFILE_IDS = (
    "profile-1",
    "profile-2",
    "profile-2-easy",
    "profile-2-medium",
    "profile-2-hard",
    "profile-3",
    "profile-4",
)
