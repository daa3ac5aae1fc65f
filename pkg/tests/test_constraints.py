from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from crossgen import constraints as cx
from crossgen.model import InvalidDocument
from crossgen.presets import builtin_crosswalk_space

from .util import naive_count, naive_eval

SPACE = builtin_crosswalk_space()
PRESETS = cx.profile_presets()


def zero_scenario():
    return tuple(0 for _ in SPACE.features)


class TestEvaluate:
    def test_true_accepts_everything(self):
        assert cx.evaluate(cx.TRUE, zero_scenario(), SPACE)

    def test_profile_1_rejects_silent_scenario(self):
        # every sudden-sound distractor off
        assert not cx.evaluate(PRESETS["profile-1"], zero_scenario(), SPACE)

    def test_profile_1_accepts_single_distractor(self):
        scenario = list(zero_scenario())
        scenario[SPACE.feature_index(7)] = 1
        assert cx.evaluate(PRESETS["profile-1"], tuple(scenario), SPACE)

    def test_allow_broken_traffic_light(self):
        scenario = list(zero_scenario())
        scenario[SPACE.feature_index(12)] = 5  # the "broken or malfunctioning TL" state
        assert cx.evaluate(cx.allow(12, (5,)), tuple(scenario), SPACE)
        assert not cx.evaluate(cx.allow(12, (5,)), zero_scenario(), SPACE)

    def test_not_and_or(self):
        e = cx.Or((cx.allow(2, (1,)), cx.Not(cx.allow(3, (0,)))))
        s_day = zero_scenario()
        assert not cx.evaluate(e, s_day, SPACE)
        night = list(s_day)
        night[SPACE.feature_index(2)] = 1
        assert cx.evaluate(e, tuple(night), SPACE)

    def test_dangling_feature_raises(self):
        with pytest.raises(KeyError):
            cx.evaluate(cx.allow(99, (0,)), zero_scenario(), SPACE)

    def test_compile_matches_evaluate(self):
        rng = random.Random(7)
        exprs = [PRESETS[k] for k in PRESETS] + [cx.Not(PRESETS["profile-1"])]
        radices = [len(f.values) for f in SPACE.features]
        for expr in exprs:
            pred = cx.compile_predicate(expr, SPACE)
            for _ in range(200):
                s = tuple(rng.randrange(r) for r in radices)
                assert pred(s) == cx.evaluate(expr, s, SPACE)


class TestPresetCounts:
    """Counts verified against the published per-profile totals."""

    def test_profile_1_count(self):
        assert naive_count(PRESETS["profile-1"], SPACE) == 290304  # 87.5% of 331776

    def test_profile_1_is_complement_of_all_silent(self):
        total = SPACE.combination_count()
        assert naive_count(PRESETS["profile-1"], SPACE) == total - total // 8

    def test_profile_3_count(self):
        assert naive_count(PRESETS["profile-3"], SPACE) == 16384  # 4.9%

    def test_profile_4_count(self):
        assert naive_count(PRESETS["profile-4"], SPACE) == 147456  # 44.4%

    def test_profile_2_stage_counts(self):
        assert naive_count(PRESETS["profile-2-easy"], SPACE) == 9216
        assert naive_count(PRESETS["profile-2-medium"], SPACE) == 31104
        assert naive_count(PRESETS["profile-2-hard"], SPACE) == 73728

    def test_profile_2_stages_nested(self):
        """The staged volume caps nest: every easier scenario stays
        admissible at the harder stages."""
        easy = cx.compile_predicate(PRESETS["profile-2-easy"], SPACE)
        medium = cx.compile_predicate(PRESETS["profile-2-medium"], SPACE)
        hard = cx.compile_predicate(PRESETS["profile-2-hard"], SPACE)
        for s in itertools.product(*[range(len(f.values)) for f in SPACE.features]):
            if easy(s):
                assert medium(s)
            if medium(s):
                assert hard(s)

    def test_determinism(self):
        assert naive_count(PRESETS["profile-3"], SPACE) == naive_count(PRESETS["profile-3"], SPACE)


class TestNormalize:
    def test_not_allow_becomes_complement(self):
        norm = cx.normalize(cx.Not(cx.allow(2, (0,))), SPACE)
        assert norm == cx.allow(2, (1,))

    def test_and_intersects_same_feature(self):
        norm = cx.normalize(cx.And((cx.allow(1, (0, 1)), cx.allow(1, (1, 2)))), SPACE)
        assert norm == cx.allow(1, (1,))

    def test_or_unions_same_feature(self):
        norm = cx.normalize(cx.Or((cx.allow(1, (0,)), cx.allow(1, (1,)))), SPACE)
        assert norm == cx.allow(1, (0, 1))

    def test_unsatisfiable_preserved(self):
        norm = cx.normalize(cx.And((cx.allow(1, (0,)), cx.allow(1, (2,)))), SPACE)
        assert cx.is_trivially_false(norm)

    def test_full_range_allow_is_true(self):
        assert cx.normalize(cx.allow(2, (0, 1)), SPACE) == cx.TRUE

    def test_double_negation(self):
        expr = cx.Not(cx.Not(PRESETS["profile-1"]))
        assert cx.normalize(expr, SPACE) == cx.normalize(PRESETS["profile-1"], SPACE)

    def test_atleastone_full_atom_is_true(self):
        expr = cx.at_least_one((2, (0, 1)))
        assert cx.normalize(expr, SPACE) == cx.TRUE


# -- property: normalize preserves semantics --------------------------------
#
# evaluate() only reads the features an expression references, so checking
# every combination of the referenced features (others pinned to 0) is an
# exhaustive equivalence proof over all 331776 scenarios.


@st.composite
def constraint_expr(draw, depth=0):
    feature_ids = st.integers(1, 12)
    sizes = {f.feature_id: len(f.values) for f in SPACE.features}

    def allow_strategy():
        @st.composite
        def make(draw_inner):
            fid = draw_inner(feature_ids)
            n = sizes[fid]
            subset = draw_inner(st.sets(st.integers(0, n - 1), max_size=n))
            return cx.Allow(fid, frozenset(subset))

        return make()

    def atleastone_strategy():
        @st.composite
        def make(draw_inner):
            n_atoms = draw_inner(st.integers(1, 3))
            atoms = []
            for _ in range(n_atoms):
                fid = draw_inner(feature_ids)
                n = sizes[fid]
                subset = draw_inner(st.sets(st.integers(0, n - 1), min_size=1, max_size=n))
                atoms.append((fid, frozenset(subset)))
            return cx.AtLeastOne(tuple(atoms))

        return make()

    if depth >= 2:
        return draw(st.one_of(st.just(cx.TRUE), allow_strategy(), atleastone_strategy()))
    branch = draw(st.integers(0, 5))
    if branch == 0:
        return draw(st.just(cx.TRUE))
    if branch == 1:
        return draw(allow_strategy())
    if branch == 2:
        return draw(atleastone_strategy())
    if branch == 3:
        return cx.Not(draw(constraint_expr(depth=depth + 1)))
    args = tuple(
        draw(constraint_expr(depth=depth + 1)) for _ in range(draw(st.integers(1, 3)))
    )
    return cx.And(args) if branch == 4 else cx.Or(args)


def referenced_features(expr) -> set[int]:
    if isinstance(expr, cx.Allow):
        return {expr.feature_id}
    if isinstance(expr, cx.AtLeastOne):
        return {fid for fid, _ in expr.atoms}
    if isinstance(expr, (cx.And, cx.Or)):
        out = set()
        for a in expr.args:
            out |= referenced_features(a)
        return out
    if isinstance(expr, cx.Not):
        return referenced_features(expr.arg)
    return set()


@settings(max_examples=100, deadline=None)
@given(constraint_expr())
def test_normalize_preserves_semantics(expr):
    norm = cx.normalize(expr, SPACE)
    refs = sorted(referenced_features(expr) | referenced_features(norm))
    positions = [SPACE.feature_index(fid) for fid in refs]
    sizes = [len(SPACE.features[p].values) for p in positions]
    base = [0] * len(SPACE.features)
    for combo in itertools.product(*[range(s) for s in sizes]):
        scenario = list(base)
        for pos, idx in zip(positions, combo):
            scenario[pos] = idx
        s = tuple(scenario)
        assert cx.evaluate(norm, s, SPACE) == naive_eval(expr, s, SPACE)


@settings(max_examples=100, deadline=None)
@given(constraint_expr())
def test_normalize_is_idempotent(expr):
    norm = cx.normalize(expr, SPACE)
    assert cx.normalize(norm, SPACE) == norm


class TestConjunctiveShape:
    def test_presets_supported(self):
        for name, expr in PRESETS.items():
            assert cx.conjunctive_shape(expr, SPACE) is not None, name

    def test_or_unsupported(self):
        expr = cx.Or((cx.allow(1, (0,)), cx.allow(2, (1,))))
        assert cx.conjunctive_shape(expr, SPACE) is None

    def test_two_atleastone_unsupported(self):
        expr = cx.And((cx.at_least_one((6, (1,)), (7, (1,))), cx.at_least_one((2, (1,)), (3, (1,)))))
        assert cx.conjunctive_shape(expr, SPACE) is None

    def test_negated_allow_supported_after_normalize(self):
        expr = cx.Not(cx.allow(12, (0, 5)))
        shape = cx.conjunctive_shape(expr, SPACE)
        assert shape is not None
        assert shape.allow[12] == frozenset({1, 2, 3, 4})


class TestDocCodec:
    def test_round_trip(self):
        for expr in PRESETS.values():
            assert cx.constraint_from_doc(cx.constraint_to_doc(expr)) == expr

    def test_doc_shape_matches_interface(self):
        doc = cx.constraint_to_doc(
            cx.And((cx.allow(12, (3, 4)), cx.at_least_one((6, (1,)), (7, (1,)), (8, (1,)))))
        )
        assert doc == {
            "op": "and",
            "args": [
                {"op": "allow", "feature": 12, "values": [3, 4]},
                {"op": "atLeastOne", "atoms": [[6, [1]], [7, [1]], [8, [1]]]},
            ],
        }

    def test_unknown_op_rejected(self):
        with pytest.raises(InvalidDocument, match="unknown op"):
            cx.constraint_from_doc({"op": "xor", "args": []})

    def test_error_paths_are_precise(self):
        with pytest.raises(InvalidDocument, match=r"constraint\.args\[1\]"):
            cx.constraint_from_doc(
                {"op": "and", "args": [{"op": "true"}, {"op": "allow", "feature": "x", "values": []}]}
            )

    def test_validate_catches_dangles(self):
        report = cx.validate_constraint(cx.allow(99, (0,)), SPACE)
        assert any(v.code == "dangling-feature" for v in report)
        report = cx.validate_constraint(cx.allow(2, (7,)), SPACE)
        assert any(v.code == "value-index-out-of-range" for v in report)
