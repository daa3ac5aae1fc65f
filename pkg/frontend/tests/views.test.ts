import assert from "node:assert/strict";
import { test } from "node:test";

import { PROFILE_1 } from "../src/fixtures/profile1.js";
import { SCHEMA_FIXTURE } from "../src/fixtures/schema.js";
import { editorFromProfile } from "../src/editor.js";
import { renderBucketView, renderEditor, renderProfilesList, renderSessionView } from "../src/views.js";
import { emptyComposer, withPlan } from "../src/session.js";
import type { BucketPage, ProfileDoc, SchemaDoc, SessionPlanDoc } from "../src/types.js";

const schema = SCHEMA_FIXTURE as unknown as SchemaDoc;
const profile1 = JSON.parse(JSON.stringify(PROFILE_1)) as ProfileDoc;

test("profiles list renders rows with actions", () => {
  const html = renderProfilesList([profile1]);
  assert.ok(html.includes("profile-1"));
  assert.ok(html.includes('data-action="duplicate"'));
  assert.ok(html.includes('data-action="delete"'));
});

test("editor renders one slider per skill group with its name", () => {
  const html = renderEditor(editorFromProfile(profile1), schema, [], false);
  const sliders = html.match(/type="range"/g) ?? [];
  assert.equal(sliders.length, schema.groups.length);
  for (const group of schema.groups) {
    assert.ok(html.includes(group.name), group.name);
  }
  assert.ok(html.includes('min="1" max="5"'));
});

test("editor save button is disabled while the draft is invalid", () => {
  const html = renderEditor(
    editorFromProfile(profile1),
    schema,
    [{ code: "weight-out-of-range", message: "weight 9" }],
    false
  );
  assert.ok(html.includes('data-action="save" disabled'));
  assert.ok(html.includes("weight-out-of-range"));
});

test("builder options use the schema's human-readable value labels", () => {
  const doc: ProfileDoc = {
    ...profile1,
    constraint: { op: "allow", feature: 12, values: [3, 4] },
  };
  const html = renderEditor(editorFromProfile(doc), schema, [], false);
  assert.ok(html.includes("TL with countdown timer"));
  assert.ok(html.includes("broken or malfunctioning TL"));
});

test("bucket view renders labels and paging controls", () => {
  const page: BucketPage = {
    k: 3,
    k_max: 6,
    cd: "1/2",
    total: 60,
    offset: 25,
    limit: 25,
    items: [
      {
        assignment: Array(schema.features.length).fill(0),
        labels: Object.fromEntries(schema.features.map((f) => [f.name, "some label"])),
      },
    ],
  };
  const html = renderBucketView(page, schema);
  assert.ok(html.includes("Bucket k=3"));
  assert.ok(html.includes("some label"));
  assert.ok(html.includes('data-action="bucket-prev"'));
  assert.ok(!html.includes('data-action="bucket-prev" disabled'));
});

test("session view marks substituted targets", () => {
  const plan: SessionPlanDoc = {
    profile: "profile-3",
    seed: 1,
    steps: [{ cd: "1/3", requested_cd: "1/10", assignment: [0], labels: { crossing: "long" } }],
  };
  const html = renderSessionView(withPlan(emptyComposer(), plan));
  assert.ok(html.includes("requested 1/10"));
  assert.ok(html.includes('data-action="export-plan"'));
});
