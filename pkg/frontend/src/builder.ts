// Constraint builder: a structured editor that composes Allow /
// AtLeastOne / And over the schema's features. It offers no free-text
// entry, only choices that exist in the schema, so every document it
// emits is valid by construction. Expressions outside its vocabulary
// (or / not / nested and) are carried through untouched as an opaque
// block so editing never destroys them.

import type { ConstraintDoc, SchemaDoc } from "./types.js";

export interface AllowRow {
  kind: "allow";
  featureId: number;
  selected: number[]; // value indices, kept sorted
}

export interface Atom {
  featureId: number;
  selected: number[];
}

export interface AtLeastOneRow {
  kind: "atLeastOne";
  atoms: Atom[];
}

export type BuilderRow = AllowRow | AtLeastOneRow;

export interface BuilderState {
  rows: BuilderRow[];
  // constraint forms the builder cannot edit, preserved verbatim
  opaque: ConstraintDoc | null;
}

export function emptyBuilder(): BuilderState {
  return { rows: [], opaque: null };
}

function sortedUnique(values: number[]): number[] {
  return [...new Set(values)].sort((a, b) => a - b);
}

function clampIndices(values: number[], featureId: number, schema: SchemaDoc): number[] {
  const feature = schema.features.find((f) => f.id === featureId);
  if (!feature) return [];
  return sortedUnique(values.filter((v) => Number.isInteger(v) && v >= 0 && v < feature.values.length));
}

export function addAllowRow(state: BuilderState, featureId: number): BuilderState {
  return { ...state, rows: [...state.rows, { kind: "allow", featureId, selected: [] }] };
}

export function addAtLeastOneRow(state: BuilderState): BuilderState {
  return { ...state, rows: [...state.rows, { kind: "atLeastOne", atoms: [] }] };
}

export function removeRow(state: BuilderState, rowIndex: number): BuilderState {
  return { ...state, rows: state.rows.filter((_, i) => i !== rowIndex) };
}

export function toggleAllowValue(
  state: BuilderState,
  rowIndex: number,
  valueIndex: number,
  schema: SchemaDoc
): BuilderState {
  const rows = state.rows.map((row, i) => {
    if (i !== rowIndex || row.kind !== "allow") return row;
    const has = row.selected.includes(valueIndex);
    const next = has ? row.selected.filter((v) => v !== valueIndex) : [...row.selected, valueIndex];
    return { ...row, selected: clampIndices(next, row.featureId, schema) };
  });
  return { ...state, rows };
}

export function addAtom(state: BuilderState, rowIndex: number, featureId: number): BuilderState {
  const rows = state.rows.map((row, i) => {
    if (i !== rowIndex || row.kind !== "atLeastOne") return row;
    return { ...row, atoms: [...row.atoms, { featureId, selected: [] }] };
  });
  return { ...state, rows };
}

export function removeAtom(state: BuilderState, rowIndex: number, atomIndex: number): BuilderState {
  const rows = state.rows.map((row, i) => {
    if (i !== rowIndex || row.kind !== "atLeastOne") return row;
    return { ...row, atoms: row.atoms.filter((_, j) => j !== atomIndex) };
  });
  return { ...state, rows };
}

export function toggleAtomValue(
  state: BuilderState,
  rowIndex: number,
  atomIndex: number,
  valueIndex: number,
  schema: SchemaDoc
): BuilderState {
  const rows = state.rows.map((row, i) => {
    if (i !== rowIndex || row.kind !== "atLeastOne") return row;
    const atoms = row.atoms.map((atom, j) => {
      if (j !== atomIndex) return atom;
      const has = atom.selected.includes(valueIndex);
      const next = has ? atom.selected.filter((v) => v !== valueIndex) : [...atom.selected, valueIndex];
      return { ...atom, selected: clampIndices(next, atom.featureId, schema) };
    });
    return { ...row, atoms };
  });
  return { ...state, rows };
}

/** Rows that would not survive the server's document rules yet. */
export function incompleteRows(state: BuilderState): number[] {
  const out: number[] = [];
  state.rows.forEach((row, i) => {
    if (row.kind === "atLeastOne") {
      if (row.atoms.length === 0 || row.atoms.every((a) => a.selected.length === 0)) out.push(i);
    }
  });
  return out;
}

/**
 * Emit the constraint document. Incomplete atLeastOne rows are dropped
 * (an atLeastOne with no satisfiable atom is a rejected document, not a
 * constraint); empty Allow selections are legal and mean "nothing
 * allowed".
 */
export function buildConstraint(state: BuilderState): ConstraintDoc {
  const parts: ConstraintDoc[] = [];
  for (const row of state.rows) {
    if (row.kind === "allow") {
      parts.push({ op: "allow", feature: row.featureId, values: sortedUnique(row.selected) });
    } else {
      const atoms = row.atoms
        .filter((a) => a.selected.length > 0)
        .map((a): [number, number[]] => [a.featureId, sortedUnique(a.selected)]);
      if (atoms.length > 0) parts.push({ op: "atLeastOne", atoms });
    }
  }
  if (state.opaque !== null) parts.push(state.opaque);
  if (parts.length === 0) return { op: "true" };
  if (parts.length === 1) return parts[0];
  return { op: "and", args: parts };
}

/**
 * Reconstruct builder rows from a stored document. Flat conjunctions of
 * allow / atLeastOne map onto rows; anything else lands in the opaque
 * slot and round-trips unchanged.
 */
export function builderFromConstraint(doc: ConstraintDoc): BuilderState {
  const asRow = (node: ConstraintDoc): BuilderRow | null => {
    if (node.op === "allow") {
      return { kind: "allow", featureId: node.feature, selected: sortedUnique(node.values) };
    }
    if (node.op === "atLeastOne") {
      return {
        kind: "atLeastOne",
        atoms: node.atoms.map(([featureId, selected]) => ({
          featureId,
          selected: sortedUnique(selected),
        })),
      };
    }
    return null;
  };

  if (doc.op === "true") return emptyBuilder();
  const single = asRow(doc);
  if (single) return { rows: [single], opaque: null };
  if (doc.op === "and") {
    const rows: BuilderRow[] = [];
    const leftovers: ConstraintDoc[] = [];
    for (const arg of doc.args) {
      const row = asRow(arg);
      if (row) rows.push(row);
      else leftovers.push(arg);
    }
    if (leftovers.length === 0) return { rows, opaque: null };
    if (leftovers.length === 1) return { rows, opaque: leftovers[0] };
    return { rows, opaque: { op: "and", args: leftovers } };
  }
  return { rows: [], opaque: doc };
}
