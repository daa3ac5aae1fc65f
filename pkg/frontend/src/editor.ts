// Profile editor state: weight sliders (one per skill group) plus the
// constraint builder. Pure mapping to and from profile documents; the
// save/reload round-trip must be exact.

import { BuilderState, buildConstraint, builderFromConstraint, emptyBuilder } from "./builder.js";
import type { ProfileDoc, SchemaDoc } from "./types.js";
import { WEIGHT_MAX, WEIGHT_MIN, validateProfileDoc, Violation } from "./validation.js";

export interface EditorState {
  id: string;
  name: string;
  description: string;
  version: number;
  weights: Record<string, number>;
  builder: BuilderState;
  /** version of the analysis currently displayed, for the stale badge */
  analysisVersion: number | null;
}

export function newDraft(schema: SchemaDoc): EditorState {
  const weights: Record<string, number> = {};
  for (const group of schema.groups) weights[String(group.id)] = WEIGHT_MIN;
  return {
    id: "",
    name: "",
    description: "",
    version: 1,
    weights,
    builder: emptyBuilder(),
    analysisVersion: null,
  };
}

export function editorFromProfile(doc: ProfileDoc): EditorState {
  return {
    id: doc.id,
    name: doc.name,
    description: doc.description,
    version: doc.version,
    weights: { ...doc.weights },
    builder: builderFromConstraint(doc.constraint),
    analysisVersion: null,
  };
}

export function profileFromEditor(state: EditorState): ProfileDoc {
  return {
    id: state.id,
    name: state.name,
    description: state.description,
    version: state.version,
    weights: { ...state.weights },
    constraint: buildConstraint(state.builder),
  };
}

/** Slider semantics: values land on integers and clamp to the legal band. */
export function setWeight(state: EditorState, groupId: number, value: number): EditorState {
  const clamped = Math.min(WEIGHT_MAX, Math.max(WEIGHT_MIN, Math.round(value)));
  return { ...state, weights: { ...state.weights, [String(groupId)]: clamped } };
}

export function duplicateProfile(doc: ProfileDoc, newId: string): ProfileDoc {
  return { ...doc, id: newId, name: `${doc.name} (copy)`, version: 1 };
}

export function liveValidation(state: EditorState, schema: SchemaDoc): Violation[] {
  return validateProfileDoc(profileFromEditor(state), schema);
}

export function isAnalysisStale(state: EditorState): boolean {
  return state.analysisVersion !== null && state.analysisVersion !== state.version;
}
