// Profile editor state: weight sliders (one per skill group) plus the
// constraint builder. Pure mapping to and from profile documents; the
// save/reload round-trip must be exact.
import { buildConstraint, builderFromConstraint, emptyBuilder } from "./builder.js";
import { WEIGHT_MAX, WEIGHT_MIN, validateProfileDoc } from "./validation.js";
export function newDraft(schema) {
    const weights = {};
    for (const group of schema.groups)
        weights[String(group.id)] = WEIGHT_MIN;
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
export function editorFromProfile(doc) {
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
export function profileFromEditor(state) {
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
export function setWeight(state, groupId, value) {
    const clamped = Math.min(WEIGHT_MAX, Math.max(WEIGHT_MIN, Math.round(value)));
    return { ...state, weights: { ...state.weights, [String(groupId)]: clamped } };
}
export function duplicateProfile(doc, newId) {
    return { ...doc, id: newId, name: `${doc.name} (copy)`, version: 1 };
}
export function liveValidation(state, schema) {
    return validateProfileDoc(profileFromEditor(state), schema);
}
export function isAnalysisStale(state) {
    return state.analysisVersion !== null && state.analysisVersion !== state.version;
}
