from __future__ import annotations

from fractions import Fraction as F

import pytest

from crossgen.model import FeatureSchema, Profile, ScenarioSpace, SkillGroup
from crossgen.constraints import TRUE
from crossgen.presets import builtin_crosswalk_space, builtin_profile


@pytest.fixture(scope="session")
def space() -> ScenarioSpace:
    return builtin_crosswalk_space()


@pytest.fixture(scope="session")
def profile_1() -> Profile:
    return builtin_profile("profile-1")


@pytest.fixture(scope="session")
def profile_3() -> Profile:
    return builtin_profile("profile-3")


@pytest.fixture(scope="session")
def profile_4() -> Profile:
    return builtin_profile("profile-4")


@pytest.fixture()
def toy_space() -> ScenarioSpace:
    """3 features, 2 groups, 12 combinations: small enough to reason by hand."""
    return ScenarioSpace(
        features=(
            FeatureSchema(1, "alpha", (F(0), F(1, 2), F(1)), 1),
            FeatureSchema(2, "beta", (F(0), F(1)), 1),
            FeatureSchema(3, "gamma", (F(1, 3), F(1)), 2),
        ),
        groups=(SkillGroup(1, "first"), SkillGroup(2, "second")),
    )


@pytest.fixture()
def toy_profile() -> Profile:
    return Profile("toy", "toy profile", {1: 2, 2: 3}, TRUE)
