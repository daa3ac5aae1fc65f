// Save/reload round-trip: what the editor emits is exactly what a
// reload reconstructs, and vice versa.
import assert from "node:assert/strict";
import { test } from "node:test";
import { PROFILE_1 } from "../src/fixtures/profile1.js";
import { SCHEMA_FIXTURE } from "../src/fixtures/schema.js";
import { editorFromProfile, liveValidation, newDraft, profileFromEditor, setWeight, } from "../src/editor.js";
import { addAllowRow, toggleAllowValue } from "../src/builder.js";
const schema = SCHEMA_FIXTURE;
const profile1 = JSON.parse(JSON.stringify(PROFILE_1));
test("stored document -> editor -> document is the identity", () => {
    const roundTripped = profileFromEditor(editorFromProfile(profile1));
    assert.deepEqual(roundTripped, profile1);
});
test("editor -> document -> editor preserves the draft", () => {
    let draft = newDraft(schema);
    draft = { ...draft, id: "my-profile", name: "My profile", description: "hello" };
    draft = setWeight(draft, 3, 4);
    draft = { ...draft, builder: addAllowRow(draft.builder, 12) };
    draft = { ...draft, builder: toggleAllowValue(draft.builder, 0, 3, schema) };
    draft = { ...draft, builder: toggleAllowValue(draft.builder, 0, 4, schema) };
    const doc = profileFromEditor(draft);
    const reloaded = editorFromProfile(doc);
    assert.deepEqual(profileFromEditor(reloaded), doc);
    assert.deepEqual(reloaded.weights, draft.weights);
    assert.deepEqual(reloaded.builder, draft.builder);
});
test("round-trip keeps constraints the builder cannot edit", () => {
    const exotic = {
        ...profile1,
        constraint: { op: "not", arg: { op: "allow", feature: 2, values: [0] } },
    };
    const state = editorFromProfile(exotic);
    assert.deepEqual(state.builder.rows, []);
    assert.deepEqual(profileFromEditor(state).constraint, exotic.constraint);
});
test("slider clamps to the legal 1..5 band", () => {
    let draft = newDraft(schema);
    draft = setWeight(draft, 1, 99);
    assert.equal(draft.weights["1"], 5);
    draft = setWeight(draft, 1, -3);
    assert.equal(draft.weights["1"], 1);
    draft = setWeight(draft, 1, 3.4);
    assert.equal(draft.weights["1"], 3);
});
test("live validation mirrors server rules on the draft", () => {
    let draft = newDraft(schema);
    assert.ok(liveValidation(draft, schema).some((v) => v.code === "empty-id"));
    draft = { ...draft, id: "x", name: "y" };
    assert.equal(liveValidation(draft, schema).length, 0);
    const broken = { ...draft, weights: { ...draft.weights, "2": 6 } };
    assert.ok(liveValidation(broken, schema).some((v) => v.code === "weight-out-of-range"));
});
