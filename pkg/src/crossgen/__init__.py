"""Personalized crossing-scenario engine.

Enumerates a discrete feature space, scores scenarios with
profile-weighted sums, groups them into consistent-difficulty buckets,
measures in-bucket feature diversity, and samples diverse training
paths. Exposed as a library, a CLI (``crossgen``), and an HTTP service.
"""

from .analysis import ProfileAnalysis, analyze, export
from .constraints import (
    Allow,
    And,
    AtLeastOne,
    ConstraintExpr,
    Not,
    Or,
    TRUE,
    evaluate,
    normalize,
    profile_presets,
)
from .diversity import (
    EmptyBucketError,
    ValueDistribution,
    VarianceCurve,
    empirical_distribution,
    jsd,
    variance,
    variance_curves,
)
from .enumeration import (
    BucketCounts,
    ScenarioStream,
    UnsupportedConstraintShape,
    bucket_members,
    count_by_bucket,
    count_by_bucket_bruteforce,
    count_by_bucket_fast,
    enumerate_scenarios,
)
from .model import (
    FeatureSchema,
    Profile,
    Scenario,
    ScenarioSpace,
    SkillGroup,
    Violation,
    validate_profile,
    validate_space,
)
from .presets import builtin_crosswalk_space, builtin_profile, builtin_profiles
from .sampler import SessionPlan, build_path, sample_bucket
from .scoring import (
    BucketIndex,
    DifficultyScore,
    cd_bucket,
    delta,
    max_raw_score,
    normalized_score,
    raw_score,
)
from .serialization import (
    deserialize_profile,
    deserialize_space,
    serialize_profile,
    serialize_space,
    space_fingerprint,
)
from .store import DuplicateProfile, ProfileStore, UnknownProfile, VersionConflict

__version__ = "0.1.0"

__all__ = [
    "Allow",
    "And",
    "AtLeastOne",
    "BucketCounts",
    "BucketIndex",
    "ConstraintExpr",
    "DifficultyScore",
    "DuplicateProfile",
    "EmptyBucketError",
    "FeatureSchema",
    "Not",
    "Or",
    "Profile",
    "ProfileAnalysis",
    "ProfileStore",
    "Scenario",
    "ScenarioSpace",
    "ScenarioStream",
    "SessionPlan",
    "SkillGroup",
    "TRUE",
    "UnknownProfile",
    "UnsupportedConstraintShape",
    "ValueDistribution",
    "VarianceCurve",
    "VersionConflict",
    "Violation",
    "analyze",
    "bucket_members",
    "build_path",
    "builtin_crosswalk_space",
    "builtin_profile",
    "builtin_profiles",
    "cd_bucket",
    "count_by_bucket",
    "count_by_bucket_bruteforce",
    "count_by_bucket_fast",
    "delta",
    "deserialize_profile",
    "deserialize_space",
    "empirical_distribution",
    "enumerate_scenarios",
    "evaluate",
    "export",
    "jsd",
    "max_raw_score",
    "normalize",
    "normalized_score",
    "profile_presets",
    "raw_score",
    "sample_bucket",
    "serialize_profile",
    "serialize_space",
    "space_fingerprint",
    "validate_profile",
    "validate_space",
    "variance",
    "variance_curves",
]
