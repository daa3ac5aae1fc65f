"""Shared test helpers: independent oracles and seeded generators.

The oracles here deliberately avoid the library's counting/streaming
code paths: they recompute expectations from first principles
(itertools products, naive set membership, textbook formulas) so that
a bug in the engine cannot hide in its own test.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

from crossgen import constraints as cx
from crossgen.model import Profile, ScenarioSpace


def naive_scenarios(space: ScenarioSpace):
    """All assignments via itertools.product, independent of ScenarioStream."""
    return itertools.product(*[range(len(f.values)) for f in space.features])


def naive_eval(expr, scenario, space: ScenarioSpace) -> bool:
    """Reference constraint semantics, written as plainly as possible."""
    pos = {f.feature_id: i for i, f in enumerate(space.features)}
    if isinstance(expr, cx.TrueExpr):
        return True
    if isinstance(expr, cx.Allow):
        return scenario[pos[expr.feature_id]] in expr.values
    if isinstance(expr, cx.AtLeastOne):
        return any(scenario[pos[fid]] in vals for fid, vals in expr.atoms)
    if isinstance(expr, cx.And):
        return all(naive_eval(a, scenario, space) for a in expr.args)
    if isinstance(expr, cx.Or):
        return any(naive_eval(a, scenario, space) for a in expr.args)
    if isinstance(expr, cx.Not):
        return not naive_eval(expr.arg, scenario, space)
    raise TypeError(expr)


_naive_count_cache: dict = {}


def naive_count(expr, space: ScenarioSpace) -> int:
    key = (expr, id(space))
    if key not in _naive_count_cache:
        _naive_count_cache[key] = sum(
            1 for s in naive_scenarios(space) if naive_eval(expr, s, space)
        )
    return _naive_count_cache[key]


def naive_bucket(scenario, space: ScenarioSpace, profile: Profile) -> tuple[int, int]:
    """(k, k_max) from pure Fraction arithmetic, textbook rounding."""
    raw = sum(
        profile.weights[f.group_id] * f.values[idx] for idx, f in zip(scenario, space.features)
    )
    max_raw = sum(profile.weights[f.group_id] * f.values[-1] for f in space.features)
    step = max(profile.weights[f.group_id] * f.values[-1] for f in space.features) / max_raw
    d_norm = raw / max_raw

    def round_half_up(x: Fraction) -> int:
        return (2 * x.numerator + x.denominator) // (2 * x.denominator)

    return round_half_up(d_norm / step), round_half_up(1 / step)


def naive_jsd(p, q) -> float:
    """Textbook base-2 JSD: mean KL against the midpoint."""

    def kl(a, b):
        return sum(x * math.log2(x / y) for x, y in zip(a, b) if x > 0)

    m = [(x + y) / 2 for x, y in zip(p, q)]
    return kl(p, m) / 2 + kl(q, m) / 2


def random_supported_constraint(rng: random.Random, space: ScenarioSpace) -> cx.ConstraintExpr:
    """Random conjunction of Allows, optionally with one AtLeastOne:
    exactly the shape the exact counter claims to support."""
    parts: list[cx.ConstraintExpr] = []
    features = list(space.features)
    for feat in rng.sample(features, rng.randint(0, min(4, len(features)))):
        n = len(feat.values)
        size = rng.randint(1, n)
        parts.append(cx.Allow(feat.feature_id, frozenset(rng.sample(range(n), size))))
    if rng.random() < 0.6:
        atom_feats = rng.sample(features, rng.randint(1, min(3, len(features))))
        atoms = []
        for feat in atom_feats:
            n = len(feat.values)
            size = rng.randint(1, max(1, n - 1))
            atoms.append((feat.feature_id, frozenset(rng.sample(range(n), size))))
        parts.append(cx.AtLeastOne(tuple(atoms)))
    if not parts:
        return cx.TRUE
    if len(parts) == 1:
        return parts[0]
    return cx.And(tuple(parts))
