"""Scenario enumeration and exact per-bucket counting.

Two counting paths produce bit-identical results:

* brute force streams every combination, scores it, and tallies:
  linear in the size of the product space, the reference behavior;
* the fast path never enumerates: per-feature score histograms are
  convolved over a common integer denominator (the distribution of a
  sum of independent discrete variables is the convolution of their
  distributions), and an AtLeastOne clause is handled by
  inclusion-exclusion: count(C and atLeastOne) = count(C) -
  count(C with every atom excluded). Runtime is polynomial in
  (features x distinct score values), so spaces with 10^15
  combinations count in milliseconds.

The fast path only supports constraints that normalize to per-feature
Allows plus at most one AtLeastOne clause; anything else raises
``UnsupportedConstraintShape`` and callers fall back to brute force.

All score arithmetic is integer: contributions are scaled by the lcm
of the value denominators, so bucket classification is exact and
platform-independent. Lexicographic enumeration order (last feature
varies fastest) is part of the public contract; pagination depends on
it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Optional

from . import constraints as cx
from .model import Profile, Scenario, ScenarioSpace
from .scoring import BucketIndex


class UnsupportedConstraintShape(Exception):
    """The constraint cannot be counted without enumeration; callers
    should fall back to the brute-force path."""


@dataclass(frozen=True)
class BucketCounts:
    """Per-bucket scenario tallies: all scenarios vs profile-filtered."""

    k_max: int
    count_all: tuple[int, ...]
    count_profile: tuple[int, ...]

    @property
    def total_all(self) -> int:
        return sum(self.count_all)

    @property
    def total_profile(self) -> int:
        return sum(self.count_profile)

    def nonempty_buckets(self) -> list[int]:
        """Bucket indices with at least one admissible scenario."""
        return [k for k, c in enumerate(self.count_profile) if c > 0]


@dataclass(frozen=True)
class BucketTable:
    """BucketCounts plus per-feature value tallies of the filtered set.

    ``value_counts[i][k][v]`` is the number of admissible scenarios in
    bucket k whose feature at position i takes value index v. Feeds the
    diversity metrics without a second pass.
    """

    counts: BucketCounts
    value_counts: tuple[tuple[tuple[int, ...], ...], ...]


# ---------------------------------------------------------------------------
# Integer scoring grid


@dataclass(frozen=True)
class ScoreGrid:
    """Per-feature integer score contributions over a common denominator."""

    contrib: tuple[tuple[int, ...], ...]  # [feature position][value index]
    scale: int
    max_contribution: int  # largest single-feature contribution
    max_raw: int

    @property
    def k_max(self) -> int:
        return _div_round(self.max_raw, self.max_contribution)

    def bucket_of(self, scaled_score: int) -> int:
        return _div_round(scaled_score, self.max_contribution)


def _div_round(p: int, q: int) -> int:
    """round(p/q) for nonnegative p, positive q, ties away from zero."""
    return (2 * p + q) // (2 * q)


def score_grid(space: ScenarioSpace, profile: Profile) -> ScoreGrid:
    scale = 1
    for feat in space.features:
        for value in feat.values:
            scale = math.lcm(scale, value.denominator)
    contrib = tuple(
        tuple(int(profile.weights[feat.group_id] * v * scale) for v in feat.values)
        for feat in space.features
    )
    per_feature_max = [max(c) for c in contrib]
    return ScoreGrid(
        contrib=contrib,
        scale=scale,
        max_contribution=max(per_feature_max),
        max_raw=sum(per_feature_max),
    )


# ---------------------------------------------------------------------------
# Streaming enumeration


class ScenarioStream:
    """Lexicographic cursor over the (optionally filtered) product space.

    Memory use is independent of the space size. ``token`` is the rank
    of the next unfiltered candidate; resuming from a token reproduces
    exactly the remaining sequence.
    """

    def __init__(
        self,
        space: ScenarioSpace,
        constraint: Optional[cx.ConstraintExpr] = None,
        start_token: int = 0,
    ):
        self._radices = space.radices()
        self._total = space.combination_count()
        if not 0 <= start_token <= self._total:
            raise ValueError(f"position token {start_token} outside 0..{self._total}")
        self._rank = start_token
        self._combo: Optional[list[int]] = None
        self._pred = None if constraint is None else cx.compile_predicate(constraint, space)

    @property
    def token(self) -> int:
        return self._rank

    def __iter__(self) -> Iterator[Scenario]:
        return self

    def __next__(self) -> Scenario:
        while self._rank < self._total:
            if self._combo is None:
                self._combo = self._decode(self._rank)
            scenario = tuple(self._combo)
            self._advance()
            if self._pred is None or self._pred(scenario):
                return scenario
        raise StopIteration

    def _decode(self, rank: int) -> list[int]:
        digits = [0] * len(self._radices)
        for i in range(len(self._radices) - 1, -1, -1):
            rank, digits[i] = divmod(rank, self._radices[i])
        return digits

    def _advance(self) -> None:
        self._rank += 1
        combo = self._combo
        for i in range(len(combo) - 1, -1, -1):
            combo[i] += 1
            if combo[i] < self._radices[i]:
                return
            combo[i] = 0


def enumerate_scenarios(
    space: ScenarioSpace,
    constraint: Optional[cx.ConstraintExpr] = None,
    start_token: int = 0,
) -> ScenarioStream:
    return ScenarioStream(space, constraint, start_token)


# ---------------------------------------------------------------------------
# Brute-force counting


def count_by_bucket_bruteforce(space: ScenarioSpace, profile: Profile) -> BucketCounts:
    """Score every combination and tally buckets; the reference path."""
    return _bruteforce(space, profile, want_values=False).counts


def bucket_table_bruteforce(space: ScenarioSpace, profile: Profile) -> BucketTable:
    return _bruteforce(space, profile, want_values=True)


def _bruteforce(space: ScenarioSpace, profile: Profile, want_values: bool) -> BucketTable:
    grid = score_grid(space, profile)
    maxc = grid.max_contribution
    k_max = grid.k_max
    pred = cx.compile_predicate(profile.constraint, space)
    n = len(space.features)

    count_all = [0] * (k_max + 1)
    count_profile = [0] * (k_max + 1)
    value_counts = [
        [[0] * len(f.values) for _ in range(k_max + 1)] for f in space.features
    ]

    if n == 0:
        raise ValueError("space has no features")

    # Innermost feature unrolled so the hot loop does one add per leaf.
    outer_ranges = [range(len(c)) for c in grid.contrib[:-1]]
    inner = tuple(enumerate(grid.contrib[-1]))
    outer_contrib = grid.contrib[:-1]
    for head in itertools.product(*outer_ranges):
        base = 0
        for i, idx in enumerate(head):
            base += outer_contrib[i][idx]
        for j, c in inner:
            k = (2 * (base + c) + maxc) // (2 * maxc)
            count_all[k] += 1
            scenario = head + (j,)
            if pred(scenario):
                count_profile[k] += 1
                if want_values:
                    for i, idx in enumerate(scenario):
                        value_counts[i][k][idx] += 1

    counts = BucketCounts(k_max, tuple(count_all), tuple(count_profile))
    return BucketTable(
        counts=counts,
        value_counts=tuple(tuple(tuple(b) for b in f) for f in value_counts),
    )


# ---------------------------------------------------------------------------
# Exact convolution counting


def _convolve(h1: dict[int, int], h2: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for a, ca in h1.items():
        for b, cb in h2.items():
            key = a + b
            out[key] = out.get(key, 0) + ca * cb
    return out


def _feature_hist(grid: ScoreGrid, pos: int, allowed: Optional[frozenset[int]]) -> dict[int, int]:
    hist: dict[int, int] = {}
    for idx, c in enumerate(grid.contrib[pos]):
        if allowed is not None and idx not in allowed:
            continue
        hist[c] = hist.get(c, 0) + 1
    return hist


def _resolve_shape(
    space: ScenarioSpace, profile: Profile
) -> tuple[dict[int, frozenset[int]], dict[int, frozenset[int]], bool]:
    """Map a supported constraint to feature positions.

    Returns (allowed sets, atom-excluded sets, has_atoms); the excluded
    sets describe the world where no AtLeastOne atom matches.
    """
    shape = cx.conjunctive_shape(profile.constraint, space)
    if shape is None:
        raise UnsupportedConstraintShape(
            "constraint does not normalize to per-feature Allows plus one atLeastOne clause"
        )
    allow_pos: dict[int, frozenset[int]] = {}
    for fid, vals in shape.allow.items():
        allow_pos[space.feature_index(fid)] = vals
    excluded = dict(allow_pos)
    has_atoms = shape.atoms is not None
    if shape.atoms:
        atom_union: dict[int, frozenset[int]] = {}
        for fid, vals in shape.atoms:
            pos = space.feature_index(fid)
            atom_union[pos] = atom_union.get(pos, frozenset()) | vals
        for pos, union in atom_union.items():
            full = frozenset(range(len(space.features[pos].values)))
            excluded[pos] = (allow_pos.get(pos, full)) - union
    return allow_pos, excluded, has_atoms


def _hist_for_sets(
    grid: ScoreGrid, space: ScenarioSpace, allowed: dict[int, frozenset[int]]
) -> dict[int, int]:
    hist = {0: 1}
    for pos in range(len(space.features)):
        sets = allowed.get(pos)
        if sets is not None and not sets:
            return {}
        hist = _convolve(hist, _feature_hist(grid, pos, sets))
        if not hist:
            return {}
    return hist


def count_by_bucket_fast(space: ScenarioSpace, profile: Profile) -> BucketCounts:
    """Exact counts via convolution; never enumerates the space."""
    grid = score_grid(space, profile)
    allow_pos, excluded, has_atoms = _resolve_shape(space, profile)

    hist_all = _hist_for_sets(grid, space, {})
    hist_admitted = _hist_for_sets(grid, space, allow_pos)
    if has_atoms:
        hist_excluded = _hist_for_sets(grid, space, excluded)
        for s, c in hist_excluded.items():
            hist_admitted[s] = hist_admitted.get(s, 0) - c

    k_max = grid.k_max
    count_all = [0] * (k_max + 1)
    count_profile = [0] * (k_max + 1)
    for s, c in hist_all.items():
        count_all[grid.bucket_of(s)] += c
    for s, c in hist_admitted.items():
        count_profile[grid.bucket_of(s)] += c
    return BucketCounts(k_max, tuple(count_all), tuple(count_profile))


def _value_counts_for_sets(
    grid: ScoreGrid, space: ScenarioSpace, allowed: dict[int, frozenset[int]], k_max: int
) -> list[list[list[int]]]:
    """Per-(feature, bucket, value) tallies via prefix/suffix convolutions."""
    n = len(space.features)
    hists = []
    for pos in range(n):
        sets = allowed.get(pos)
        if sets is not None and not sets:
            return [[[0] * len(f.values) for _ in range(k_max + 1)] for f in space.features]
        hists.append(_feature_hist(grid, pos, sets))

    prefix = [{0: 1}]
    for pos in range(n - 1):
        prefix.append(_convolve(prefix[-1], hists[pos]))
    suffix: list[dict[int, int]] = [{} for _ in range(n)]
    suffix[n - 1] = {0: 1}
    for pos in range(n - 2, -1, -1):
        suffix[pos] = _convolve(suffix[pos + 1], hists[pos + 1])

    out = [[[0] * len(f.values) for _ in range(k_max + 1)] for f in space.features]
    for pos in range(n):
        rest = _convolve(prefix[pos], suffix[pos])
        sets = allowed.get(pos)
        for idx, c in enumerate(grid.contrib[pos]):
            if sets is not None and idx not in sets:
                continue
            for s, cnt in rest.items():
                out[pos][grid.bucket_of(s + c)][idx] += cnt
    return out


def bucket_table_fast(space: ScenarioSpace, profile: Profile) -> BucketTable:
    """BucketTable via convolution; raises on unsupported constraint shapes."""
    grid = score_grid(space, profile)
    allow_pos, excluded, has_atoms = _resolve_shape(space, profile)
    counts = count_by_bucket_fast(space, profile)
    k_max = counts.k_max

    values = _value_counts_for_sets(grid, space, allow_pos, k_max)
    if has_atoms:
        values_excl = _value_counts_for_sets(grid, space, excluded, k_max)
        for i in range(len(values)):
            for k in range(k_max + 1):
                for v in range(len(values[i][k])):
                    values[i][k][v] -= values_excl[i][k][v]

    return BucketTable(
        counts=counts,
        value_counts=tuple(tuple(tuple(b) for b in f) for f in values),
    )


def bucket_table(space: ScenarioSpace, profile: Profile, prefer_fast: bool = True) -> BucketTable:
    """Fast path when the constraint shape allows it, else brute force."""
    if prefer_fast:
        try:
            return bucket_table_fast(space, profile)
        except UnsupportedConstraintShape:
            pass
    return bucket_table_bruteforce(space, profile)


def count_by_bucket(space: ScenarioSpace, profile: Profile, prefer_fast: bool = True) -> BucketCounts:
    if prefer_fast:
        try:
            return count_by_bucket_fast(space, profile)
        except UnsupportedConstraintShape:
            pass
    return count_by_bucket_bruteforce(space, profile)


# ---------------------------------------------------------------------------
# Bucket membership


def iter_bucket_members(space: ScenarioSpace, profile: Profile, k: int) -> Iterator[Scenario]:
    """Admissible scenarios of bucket k in lexicographic order."""
    grid = score_grid(space, profile)
    if not 0 <= k <= grid.k_max:
        raise ValueError(f"bucket {k} outside 0..{grid.k_max}")
    maxc = grid.max_contribution
    pred = cx.compile_predicate(profile.constraint, space)
    # bucket check before tuple construction: only candidates of bucket k
    # pay for the predicate
    outer_ranges = [range(len(c)) for c in grid.contrib[:-1]]
    inner = tuple(enumerate(grid.contrib[-1]))
    outer_contrib = grid.contrib[:-1]
    for head in itertools.product(*outer_ranges):
        base = 0
        for i, idx in enumerate(head):
            base += outer_contrib[i][idx]
        for j, c in inner:
            if (2 * (base + c) + maxc) // (2 * maxc) == k:
                scenario = head + (j,)
                if pred(scenario):
                    yield scenario


def bucket_members(
    space: ScenarioSpace,
    profile: Profile,
    k: int,
    offset: int = 0,
    limit: Optional[int] = None,
) -> list[Scenario]:
    """Deterministic page of bucket k; beyond-population offsets give
    an empty page, not an error."""
    if offset < 0:
        raise ValueError("offset must be nonnegative")
    if limit is not None and limit < 0:
        raise ValueError("limit must be nonnegative")
    out: list[Scenario] = []
    if limit == 0:
        return out
    for i, scenario in enumerate(iter_bucket_members(space, profile, k)):
        if i < offset:
            continue
        out.append(scenario)
        if limit is not None and len(out) >= limit:
            break
    return out


def bucket_index_for(space: ScenarioSpace, profile: Profile, scenario: Scenario) -> BucketIndex:
    """Integer-grid bucket of one scenario (equals the rational path)."""
    grid = score_grid(space, profile)
    s = 0
    for i, idx in enumerate(scenario):
        s += grid.contrib[i][idx]
    return BucketIndex(k=grid.bucket_of(s), k_max=grid.k_max)
