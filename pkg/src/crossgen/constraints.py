"""Boolean constraint algebra over scenarios.

Expressions select scenarios by their value *indices*, never by raw
rational values: ``Allow(5, {1, 2})`` admits scenarios whose feature 5
takes its second or third value. ``AtLeastOne`` exists because "at
least one distractor active" is the shape real filters take and it
matters for exact counting (inclusion-exclusion).

Expressions are immutable; ``evaluate`` is pure and thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Union

from .model import InvalidDocument, Scenario, ScenarioSpace, Violation

Atom = tuple[int, frozenset[int]]  # (feature_id, allowed value indices)


@dataclass(frozen=True)
class TrueExpr:
    """Accepts every scenario."""


@dataclass(frozen=True)
class Allow:
    """Scenario's value index for one feature must lie in a set.

    An empty set is legal and trivially false; normalization preserves
    it so that unsatisfiable filters stay visible instead of vanishing.
    """

    feature_id: int
    values: frozenset[int]


@dataclass(frozen=True)
class AtLeastOne:
    """True iff at least one (feature, value-set) atom matches."""

    atoms: tuple[Atom, ...]


@dataclass(frozen=True)
class And:
    args: tuple["ConstraintExpr", ...]


@dataclass(frozen=True)
class Or:
    args: tuple["ConstraintExpr", ...]


@dataclass(frozen=True)
class Not:
    arg: "ConstraintExpr"


ConstraintExpr = Union[TrueExpr, Allow, AtLeastOne, And, Or, Not]

TRUE = TrueExpr()


def allow(feature_id: int, values: Iterable[int]) -> Allow:
    return Allow(feature_id, frozenset(values))


def at_least_one(*atoms: tuple[int, Iterable[int]]) -> AtLeastOne:
    return AtLeastOne(tuple((fid, frozenset(vals)) for fid, vals in atoms))


def validate_constraint(expr: ConstraintExpr, space: ScenarioSpace) -> list[Violation]:
    """Dangling feature references, out-of-range indices, empty And/Or."""
    violations: list[Violation] = []
    sizes = {f.feature_id: len(f.values) for f in space.features}

    def check_ref(fid: int, values: frozenset[int]) -> None:
        if fid not in sizes:
            violations.append(
                Violation("dangling-feature", f"constraint references missing feature {fid}", feature_id=fid)
            )
            return
        for idx in values:
            if not 0 <= idx < sizes[fid]:
                violations.append(
                    Violation(
                        "value-index-out-of-range",
                        f"constraint on feature {fid}: index {idx} outside 0..{sizes[fid] - 1}",
                        feature_id=fid,
                    )
                )

    def walk(node: ConstraintExpr) -> None:
        if isinstance(node, TrueExpr):
            return
        if isinstance(node, Allow):
            check_ref(node.feature_id, node.values)
        elif isinstance(node, AtLeastOne):
            if not node.atoms:
                violations.append(Violation("empty-atoms", "atLeastOne with no atoms is always false"))
            for fid, vals in node.atoms:
                check_ref(fid, vals)
        elif isinstance(node, (And, Or)):
            if not node.args:
                violations.append(
                    Violation("empty-args", f"{type(node).__name__.lower()} requires at least one argument")
                )
            for arg in node.args:
                walk(arg)
        elif isinstance(node, Not):
            walk(node.arg)
        else:
            violations.append(Violation("unknown-node", f"unrecognized constraint node {node!r}"))

    walk(expr)
    return violations


def evaluate(expr: ConstraintExpr, scenario: Scenario, space: ScenarioSpace) -> bool:
    """Standard boolean semantics over one scenario."""
    if isinstance(expr, TrueExpr):
        return True
    if isinstance(expr, Allow):
        pos = space.feature_index(expr.feature_id)
        return scenario[pos] in expr.values
    if isinstance(expr, AtLeastOne):
        for fid, vals in expr.atoms:
            if scenario[space.feature_index(fid)] in vals:
                return True
        return False
    if isinstance(expr, And):
        return all(evaluate(arg, scenario, space) for arg in expr.args)
    if isinstance(expr, Or):
        return any(evaluate(arg, scenario, space) for arg in expr.args)
    if isinstance(expr, Not):
        return not evaluate(expr.arg, scenario, space)
    raise TypeError(f"not a constraint expression: {expr!r}")


def compile_predicate(expr: ConstraintExpr, space: ScenarioSpace) -> Callable[[Scenario], bool]:
    """Pre-resolve feature positions into closures for hot loops."""
    if isinstance(expr, TrueExpr):
        return lambda s: True
    if isinstance(expr, Allow):
        pos = space.feature_index(expr.feature_id)
        vals = expr.values
        return lambda s: s[pos] in vals
    if isinstance(expr, AtLeastOne):
        pairs = tuple((space.feature_index(fid), vals) for fid, vals in expr.atoms)
        return lambda s: any(s[p] in v for p, v in pairs)
    if isinstance(expr, And):
        preds = tuple(compile_predicate(arg, space) for arg in expr.args)
        return lambda s: all(p(s) for p in preds)
    if isinstance(expr, Or):
        preds = tuple(compile_predicate(arg, space) for arg in expr.args)
        return lambda s: any(p(s) for p in preds)
    if isinstance(expr, Not):
        inner = compile_predicate(expr.arg, space)
        return lambda s: not inner(s)
    raise TypeError(f"not a constraint expression: {expr!r}")


# ---------------------------------------------------------------------------
# Normalization


def _full_range(space: ScenarioSpace, feature_id: int) -> frozenset[int]:
    return frozenset(range(len(space.feature_by_id(feature_id).values)))


def _sort_key(expr: ConstraintExpr):
    if isinstance(expr, TrueExpr):
        return (0,)
    if isinstance(expr, Allow):
        return (1, expr.feature_id, tuple(sorted(expr.values)))
    if isinstance(expr, AtLeastOne):
        return (2, tuple((fid, tuple(sorted(vals))) for fid, vals in expr.atoms))
    if isinstance(expr, And):
        return (3, tuple(_sort_key(a) for a in expr.args))
    if isinstance(expr, Or):
        return (4, tuple(_sort_key(a) for a in expr.args))
    return (5, _sort_key(expr.arg))


def _false_for(space: ScenarioSpace) -> Allow:
    return Allow(space.features[0].feature_id, frozenset())


def _negate(expr: ConstraintExpr, space: ScenarioSpace) -> ConstraintExpr:
    if isinstance(expr, TrueExpr):
        return _false_for(space)
    if isinstance(expr, Allow):
        return Allow(expr.feature_id, _full_range(space, expr.feature_id) - expr.values)
    if isinstance(expr, AtLeastOne):
        # no atom matches: every atom feature avoids its atom set
        return And(tuple(Allow(fid, _full_range(space, fid) - vals) for fid, vals in expr.atoms))
    if isinstance(expr, And):
        return Or(tuple(_negate(a, space) for a in expr.args))
    if isinstance(expr, Or):
        return And(tuple(_negate(a, space) for a in expr.args))
    if isinstance(expr, Not):
        return expr.arg
    raise TypeError(f"not a constraint expression: {expr!r}")


def _simplify_atoms(expr: AtLeastOne, space: ScenarioSpace) -> ConstraintExpr:
    atoms: list[Atom] = []
    seen: set[Atom] = set()
    for fid, vals in expr.atoms:
        if not vals:
            continue  # never matches
        if vals >= _full_range(space, fid):
            return TRUE  # this atom always matches
        atom = (fid, vals)
        if atom not in seen:
            seen.add(atom)
            atoms.append(atom)
    if not atoms:
        return _false_for(space)
    atoms.sort(key=lambda a: (a[0], tuple(sorted(a[1]))))
    return AtLeastOne(tuple(atoms))


def normalize(expr: ConstraintExpr, space: ScenarioSpace) -> ConstraintExpr:
    """Canonical equivalent form.

    Nots are eliminated (complemented at the Allow level), nested
    And/Or are flattened, same-feature Allows are intersected under And
    and unioned under Or, arguments are sorted. Equivalence means equal
    ``evaluate`` on every scenario of the space. Unsatisfiable branches
    surface as empty-set Allows rather than disappearing.
    """
    if isinstance(expr, Not):
        return normalize(_negate(expr.arg, space), space)
    if isinstance(expr, TrueExpr):
        return TRUE
    if isinstance(expr, Allow):
        if expr.values >= _full_range(space, expr.feature_id):
            return TRUE
        return Allow(expr.feature_id, frozenset(expr.values))
    if isinstance(expr, AtLeastOne):
        return _simplify_atoms(expr, space)

    if isinstance(expr, (And, Or)):
        is_and = isinstance(expr, And)
        flat: list[ConstraintExpr] = []
        for arg in expr.args:
            norm = normalize(arg, space)
            if isinstance(norm, And) and is_and:
                flat.extend(norm.args)
            elif isinstance(norm, Or) and not is_and:
                flat.extend(norm.args)
            else:
                flat.append(norm)

        allows: dict[int, frozenset[int]] = {}
        rest: list[ConstraintExpr] = []
        for node in flat:
            if isinstance(node, TrueExpr):
                if is_and:
                    continue
                return TRUE
            if isinstance(node, Allow):
                if node.feature_id in allows:
                    if is_and:
                        allows[node.feature_id] = allows[node.feature_id] & node.values
                    else:
                        allows[node.feature_id] = allows[node.feature_id] | node.values
                else:
                    allows[node.feature_id] = node.values
            else:
                rest.append(node)

        merged: list[ConstraintExpr] = []
        for fid in sorted(allows):
            vals = allows[fid]
            if not is_and and not vals:
                continue  # false branch of an Or contributes nothing
            if vals >= _full_range(space, fid):
                if is_and:
                    continue
                return TRUE
            merged.append(Allow(fid, vals))
        merged.extend(rest)
        merged = [m for i, m in enumerate(merged) if m not in merged[:i]]
        merged.sort(key=_sort_key)

        if not merged:
            return TRUE if is_and else _false_for(space)
        if len(merged) == 1:
            return merged[0]
        return And(tuple(merged)) if is_and else Or(tuple(merged))

    raise TypeError(f"not a constraint expression: {expr!r}")


def is_trivially_false(expr: ConstraintExpr) -> bool:
    """True when a (normalized) expression can be seen unsatisfiable
    without enumeration: an empty Allow, or an And containing one."""
    if isinstance(expr, Allow):
        return not expr.values
    if isinstance(expr, And):
        return any(is_trivially_false(arg) for arg in expr.args)
    if isinstance(expr, AtLeastOne):
        return not expr.atoms
    return False


# ---------------------------------------------------------------------------
# Supported shape for exact convolution counting


@dataclass(frozen=True)
class ConjunctiveShape:
    """Per-feature Allow sets plus at most one AtLeastOne clause.

    The shape the exact counter handles without enumeration. ``allow``
    maps feature_id to allowed indices (absent features unrestricted);
    ``atoms`` is None when there is no AtLeastOne clause.
    """

    allow: dict[int, frozenset[int]]
    atoms: Optional[tuple[Atom, ...]]


def conjunctive_shape(expr: ConstraintExpr, space: ScenarioSpace) -> Optional[ConjunctiveShape]:
    """Extract the counting-friendly shape, or None when the expression
    does not normalize to (Allows...) AND (at most one AtLeastOne)."""
    norm = normalize(expr, space)
    if isinstance(norm, TrueExpr):
        return ConjunctiveShape({}, None)
    if isinstance(norm, Allow):
        return ConjunctiveShape({norm.feature_id: norm.values}, None)
    if isinstance(norm, AtLeastOne):
        return ConjunctiveShape({}, norm.atoms)
    if isinstance(norm, And):
        allow_sets: dict[int, frozenset[int]] = {}
        atoms: Optional[tuple[Atom, ...]] = None
        for arg in norm.args:
            if isinstance(arg, Allow):
                allow_sets[arg.feature_id] = arg.values
            elif isinstance(arg, AtLeastOne):
                if atoms is not None:
                    return None
                atoms = arg.atoms
            else:
                return None
        return ConjunctiveShape(allow_sets, atoms)
    return None


# ---------------------------------------------------------------------------
# Document codec (value entries are indices into the feature's value list)


def constraint_to_doc(expr: ConstraintExpr) -> dict:
    if isinstance(expr, TrueExpr):
        return {"op": "true"}
    if isinstance(expr, Allow):
        return {"op": "allow", "feature": expr.feature_id, "values": sorted(expr.values)}
    if isinstance(expr, AtLeastOne):
        return {
            "op": "atLeastOne",
            "atoms": [[fid, sorted(vals)] for fid, vals in expr.atoms],
        }
    if isinstance(expr, And):
        return {"op": "and", "args": [constraint_to_doc(a) for a in expr.args]}
    if isinstance(expr, Or):
        return {"op": "or", "args": [constraint_to_doc(a) for a in expr.args]}
    if isinstance(expr, Not):
        return {"op": "not", "arg": constraint_to_doc(expr.arg)}
    raise TypeError(f"not a constraint expression: {expr!r}")


def _require_index_list(raw: object, where: str) -> list[int]:
    if not isinstance(raw, list):
        raise InvalidDocument(f"{where}: expected a list of value indices")
    out = []
    for i, item in enumerate(raw):
        if not isinstance(item, int) or isinstance(item, bool):
            raise InvalidDocument(f"{where}[{i}]: value indices must be integers")
        out.append(item)
    return out


def constraint_from_doc(doc: object, where: str = "constraint") -> ConstraintExpr:
    if not isinstance(doc, dict):
        raise InvalidDocument(f"{where}: expected an object with an \"op\" field")
    op = doc.get("op")
    if op == "true":
        return TRUE
    if op == "allow":
        fid = doc.get("feature")
        if not isinstance(fid, int) or isinstance(fid, bool):
            raise InvalidDocument(f"{where}.feature: expected an integer feature id")
        return Allow(fid, frozenset(_require_index_list(doc.get("values"), f"{where}.values")))
    if op == "atLeastOne":
        raw_atoms = doc.get("atoms")
        if not isinstance(raw_atoms, list) or not raw_atoms:
            raise InvalidDocument(f"{where}.atoms: expected a nonempty list of [feature, values] pairs")
        atoms = []
        for i, pair in enumerate(raw_atoms):
            if not isinstance(pair, list) or len(pair) != 2:
                raise InvalidDocument(f"{where}.atoms[{i}]: expected a [feature, values] pair")
            fid, vals = pair
            if not isinstance(fid, int) or isinstance(fid, bool):
                raise InvalidDocument(f"{where}.atoms[{i}]: feature id must be an integer")
            atoms.append((fid, frozenset(_require_index_list(vals, f"{where}.atoms[{i}]"))))
        return AtLeastOne(tuple(atoms))
    if op in ("and", "or"):
        raw_args = doc.get("args")
        if not isinstance(raw_args, list) or not raw_args:
            raise InvalidDocument(f"{where}.args: expected a nonempty list of expressions")
        args = tuple(constraint_from_doc(a, f"{where}.args[{i}]") for i, a in enumerate(raw_args))
        return And(args) if op == "and" else Or(args)
    if op == "not":
        return Not(constraint_from_doc(doc.get("arg"), f"{where}.arg"))
    raise InvalidDocument(f"{where}: unknown op {op!r}")


# ---------------------------------------------------------------------------
# Built-in profile constraint presets (for the built-in crosswalk space)
#
# Encodings are data, not behavior: edit the profile documents to change
# them without touching code. Feature ids and indices refer to the
# built-in space (see presets module).
#
# profile-2 carries the base filter (timer-equipped traffic light and a
# longer crossing); the three staged variants additionally cap every
# background-noise volume at an increasing threshold (lowest two levels,
# lowest three, uncapped). Those caps were reconstructed to match the
# published stage totals of 9216 / 31104 / 73728 scenarios out of 331776.


def profile_presets() -> dict[str, ConstraintExpr]:
    """Constraint presets keyed by profile id, for the built-in space."""
    p2_base = (
        allow(1, (1, 2)),  # crossing: long or double
        allow(12, (3, 4)),  # traffic light: countdown timer, or button and timer
    )
    volume_caps = lambda top: tuple(allow(fid, range(top + 1)) for fid in (9, 10, 11))  # noqa: E731
    return {
        # at least one sudden-sound distractor active
        "profile-1": at_least_one((6, (1,)), (7, (1,)), (8, (1,))),
        "profile-2": And(p2_base),
        "profile-2-easy": And(p2_base + volume_caps(1)),
        "profile-2-medium": And(p2_base + volume_caps(2)),
        "profile-2-hard": And(p2_base),
        # crowded sidewalks, heavy traffic, longer crossing, unsafe signalling
        "profile-3": And(
            (
                allow(1, (1, 2)),  # crossing: long or double
                allow(4, (1, 2)),  # pedestrians: some or many
                allow(5, (2,)),  # vehicles: many
                allow(12, (0, 5)),  # traffic light: absent or broken
            )
        ),
        "profile-4": And(
            (
                allow(1, (1, 2)),  # crossing: long or double
                allow(5, (1, 2)),  # vehicles: some or many
            )
        ),
    }


PROFILE_2_STAGES = ("profile-2-easy", "profile-2-medium", "profile-2-hard")
