// HTML rendering, all pure string functions. Interactive elements carry
// data-action attributes; the app shell owns the event delegation, so
// every view can be rendered (and tested) without a DOM.

import { BuilderState, incompleteRows } from "./builder.js";
import { renderCountChart, renderVarianceChart } from "./charts.js";
import { EditorState, isAnalysisStale } from "./editor.js";
import { ComposerState, orderedSteps } from "./session.js";
import type { AnalysisDoc, BucketPage, ProfileDoc, SchemaDoc } from "./types.js";
import type { Violation } from "./validation.js";

export function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

// -- profiles list -----------------------------------------------------------

export function renderProfilesList(profiles: readonly ProfileDoc[]): string {
  const rows = profiles
    .map(
      (p) => `
  <tr>
    <td><a href="#/profiles/${esc(p.id)}" class="profile-link">${esc(p.id)}</a></td>
    <td>${esc(p.name)}</td>
    <td>v${p.version}</td>
    <td>
      <button data-action="open" data-id="${esc(p.id)}">edit</button>
      <button data-action="duplicate" data-id="${esc(p.id)}">duplicate</button>
      <button data-action="delete" data-id="${esc(p.id)}" class="danger">delete</button>
    </td>
  </tr>`
    )
    .join("");
  return `
<section class="profiles-list">
  <h2>Profiles</h2>
  <table>
    <thead><tr><th>id</th><th>name</th><th>version</th><th></th></tr></thead>
    <tbody>${rows}</tbody>
  </table>
  <button data-action="new-profile">new profile</button>
</section>`;
}

// -- profile editor ----------------------------------------------------------

function renderWeightSliders(state: EditorState, schema: SchemaDoc): string {
  return schema.groups
    .map((group) => {
      const value = state.weights[String(group.id)] ?? 1;
      return `
  <label class="weight-row">
    <span class="weight-name">${esc(group.name)}</span>
    <input type="range" min="1" max="5" step="1" value="${value}"
           data-action="set-weight" data-group="${group.id}">
    <span class="weight-value">${value}</span>
  </label>`;
    })
    .join("");
}

function renderValueChecklist(
  schema: SchemaDoc,
  featureId: number,
  selected: readonly number[],
  action: string,
  extra: string
): string {
  const feature = schema.features.find((f) => f.id === featureId);
  if (!feature) return "";
  return feature.values
    .map((value, idx) => {
      const label = feature.labels ? feature.labels[idx] : value;
      const checked = selected.includes(idx) ? " checked" : "";
      return `
    <label class="value-option">
      <input type="checkbox" data-action="${action}" ${extra} data-value="${idx}"${checked}>
      ${esc(String(label))}
    </label>`;
    })
    .join("");
}

function featureSelect(schema: SchemaDoc, action: string, extra = ""): string {
  const options = schema.features
    .map((f) => `<option value="${f.id}">${esc(f.name)}</option>`)
    .join("");
  return `<select data-action="${action}" ${extra}><option value="">add feature rule...</option>${options}</select>`;
}

export function renderBuilder(builder: BuilderState, schema: SchemaDoc): string {
  const incomplete = new Set(incompleteRows(builder));
  const rows = builder.rows
    .map((row, i) => {
      if (row.kind === "allow") {
        const feature = schema.features.find((f) => f.id === row.featureId);
        return `
  <div class="builder-row">
    <strong>${esc(feature?.name ?? `feature ${row.featureId}`)}</strong> must be one of:
    ${renderValueChecklist(schema, row.featureId, row.selected, "toggle-allow", `data-row="${i}"`)}
    <button data-action="remove-row" data-row="${i}">remove</button>
  </div>`;
      }
      const atoms = row.atoms
        .map(
          (atom, j) => `
    <div class="atom">
      ${esc(schema.features.find((f) => f.id === atom.featureId)?.name ?? String(atom.featureId))}:
      ${renderValueChecklist(schema, atom.featureId, atom.selected, "toggle-atom", `data-row="${i}" data-atom="${j}"`)}
      <button data-action="remove-atom" data-row="${i}" data-atom="${j}">x</button>
    </div>`
        )
        .join("");
      const warn = incomplete.has(i)
        ? `<span class="incomplete">pick at least one value; this rule is ignored until then</span>`
        : "";
      return `
  <div class="builder-row">
    <strong>at least one of</strong> ${warn}
    ${atoms}
    ${featureSelect(schema, "add-atom", `data-row="${i}"`)}
    <button data-action="remove-row" data-row="${i}">remove</button>
  </div>`;
    })
    .join("");
  const opaque = builder.opaque
    ? `<div class="builder-opaque">advanced constraint kept as-is:
       <code>${esc(JSON.stringify(builder.opaque))}</code></div>`
    : "";
  return `
<div class="builder">
  ${rows}
  ${opaque}
  ${featureSelect(schema, "add-allow-row")}
  <button data-action="add-atleastone-row">add "at least one of" rule</button>
</div>`;
}

export function renderEditor(
  state: EditorState,
  schema: SchemaDoc,
  violations: readonly Violation[],
  isNew: boolean
): string {
  const problems = violations.length
    ? `<ul class="violations">${violations
        .map((v) => `<li>[${esc(v.code)}] ${esc(v.message)}</li>`)
        .join("")}</ul>`
    : "";
  const stale = isAnalysisStale(state)
    ? `<span class="stale-badge">analysis below is from v${state.analysisVersion}; profile is v${state.version}</span>`
    : "";
  return `
<section class="editor">
  <h2>${isNew ? "New profile" : `Edit ${esc(state.id)} (v${state.version})`} ${stale}</h2>
  <label>id <input name="id" value="${esc(state.id)}" data-action="set-id" ${isNew ? "" : "readonly"}></label>
  <label>name <input name="name" value="${esc(state.name)}" data-action="set-name"></label>
  <label>description <textarea data-action="set-description">${esc(state.description)}</textarea></label>
  <h3>Skill weights</h3>
  ${renderWeightSliders(state, schema)}
  <h3>Scenario constraint</h3>
  ${renderBuilder(state.builder, schema)}
  ${problems}
  <button data-action="save" ${violations.length ? "disabled" : ""}>save</button>
</section>`;
}

// -- analysis view -----------------------------------------------------------

export function renderAnalysisView(analysis: AnalysisDoc, profileVersion?: number): string {
  const stale =
    profileVersion !== undefined && profileVersion !== analysis.profile_version
      ? `<span class="stale-badge">stale: computed from v${analysis.profile_version}, profile is v${profileVersion}</span>`
      : "";
  const pct = analysis.percentage.toFixed(1);
  const excluded = analysis.excluded_features.length
    ? `<p class="excluded">constraint-pinned features not charted: ${analysis.excluded_features.join(", ")}</p>`
    : "";
  const thresholds = analysis.thresholds.low_cd_collapse
    ? `<p class="thresholds">diversity collapses below cd ${esc(analysis.thresholds.low_cd_collapse)}${
        analysis.thresholds.high_cd_collapse
          ? ` and above cd ${esc(analysis.thresholds.high_cd_collapse)}`
          : ""
      }</p>`
    : "";
  return `
<section class="analysis">
  <h2>${esc(analysis.profile_id)}: ${analysis.total_profile} / ${analysis.total_all} (${pct}%) ${stale}</h2>
  <div class="legend">
    <span class="swatch" style="background:#0000FF"></span> All scenarios
    <span class="swatch" style="background:#FE0000"></span> Profile specific scenarios
  </div>
  <div class="panels">
    <div class="panel">${renderCountChart(analysis)}</div>
    <div class="panel">${renderVarianceChart(analysis)}</div>
  </div>
  ${excluded}
  ${thresholds}
  <p class="hint">click a bar to browse that bucket's scenarios</p>
</section>`;
}

// -- bucket browser ----------------------------------------------------------

export function renderBucketView(page: BucketPage, schema: SchemaDoc): string {
  const headers = schema.features.map((f) => `<th>${esc(f.name)}</th>`).join("");
  const rows = page.items
    .map((item) => {
      const cells = schema.features
        .map((f) => `<td>${esc(item.labels[f.name] ?? "")}</td>`)
        .join("");
      return `<tr>${cells}</tr>`;
    })
    .join("");
  const prevDisabled = page.offset === 0 ? "disabled" : "";
  const nextDisabled = page.offset + page.items.length >= page.total ? "disabled" : "";
  return `
<section class="bucket">
  <h2>Bucket k=${page.k} (cd ${esc(page.cd)}): ${page.total} scenarios</h2>
  <p>showing ${page.offset + 1}-${page.offset + page.items.length} of ${page.total}</p>
  <table><thead><tr>${headers}</tr></thead><tbody>${rows}</tbody></table>
  <button data-action="bucket-prev" ${prevDisabled}>previous</button>
  <button data-action="bucket-next" ${nextDisabled}>next</button>
</section>`;
}

// -- session composer --------------------------------------------------------

export function renderSessionView(state: ComposerState): string {
  const targets = state.targets
    .map(
      (t, i) =>
        `<li>${esc(t)} <button data-action="remove-target" data-index="${i}">x</button></li>`
    )
    .join("");
  const steps = orderedSteps(state)
    .map((step, i) => {
      const substituted = step.requested_cd
        ? ` <span class="substituted">(requested ${esc(step.requested_cd)}, nearest bucket used)</span>`
        : "";
      const summary = Object.entries(step.labels)
        .slice(0, 4)
        .map(([k, v]) => `${esc(k)}: ${esc(v)}`)
        .join(", ");
      return `
  <li>
    cd ${esc(step.cd)}${substituted} - ${summary}, ...
    <button data-action="step-up" data-index="${i}">up</button>
    <button data-action="step-down" data-index="${i}">down</button>
  </li>`;
    })
    .join("");
  return `
<section class="session">
  <h2>Session composer</h2>
  <label>difficulty target <input data-action="target-input" placeholder="e.g. 0.5 or 1/3"></label>
  <button data-action="add-target">add target</button>
  <ol class="targets">${targets}</ol>
  <label>scenarios per level <input type="number" min="1" max="20" value="${state.perLevel}"
         data-action="set-per-level"></label>
  <label>seed <input type="number" value="${state.seed}" data-action="set-seed"></label>
  <button data-action="request-plan" ${state.targets.length ? "" : "disabled"}>request plan</button>
  <ol class="steps">${steps}</ol>
  ${state.plan ? `<button data-action="export-plan">export plan JSON</button>` : ""}
</section>`;
}
