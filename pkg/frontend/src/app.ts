// Application shell: hash routing, event delegation, server calls.
// All rendering is delegated to the pure view functions; this file owns
// the only mutable state and the only DOM access.

import { api, ApiError, isJobTicket, VersionConflictError } from "./api.js";
import {
  addAllowRow,
  addAtom,
  addAtLeastOneRow,
  removeAtom,
  removeRow,
  toggleAllowValue,
  toggleAtomValue,
} from "./builder.js";
import {
  EditorState,
  duplicateProfile,
  editorFromProfile,
  liveValidation,
  newDraft,
  profileFromEditor,
  setWeight,
} from "./editor.js";
import {
  addTarget,
  ComposerState,
  emptyComposer,
  exportPlan,
  moveStep,
  removeTarget,
  withPlan,
} from "./session.js";
import type { AnalysisDoc, BucketPage, ProfileDoc, SchemaDoc } from "./types.js";
import {
  renderAnalysisView,
  renderBucketView,
  renderEditor,
  renderProfilesList,
  renderSessionView,
} from "./views.js";

interface AppState {
  schema: SchemaDoc | null;
  profiles: ProfileDoc[];
  editor: EditorState | null;
  editorIsNew: boolean;
  analysis: AnalysisDoc | null;
  bucketPage: BucketPage | null;
  composer: ComposerState;
  activeProfileId: string | null;
  notice: string | null;
}

const state: AppState = {
  schema: null,
  profiles: [],
  editor: null,
  editorIsNew: false,
  analysis: null,
  bucketPage: null,
  composer: emptyComposer(),
  activeProfileId: null,
  notice: null,
};

const BUCKET_PAGE_SIZE = 25;

function root(): HTMLElement {
  return document.getElementById("app")!;
}

function notice(text: string | null): void {
  state.notice = text;
  render();
}

function render(): void {
  if (!state.schema) {
    root().innerHTML = "<p>loading schema...</p>";
    return;
  }
  const hash = window.location.hash || "#/profiles";
  const parts: string[] = [];
  if (state.notice) parts.push(`<div class="notice">${state.notice}</div>`);
  parts.push(`<nav><a href="#/profiles">profiles</a></nav>`);
  if (hash === "#/profiles" || hash === "#") {
    parts.push(renderProfilesList(state.profiles));
  } else if (state.editor) {
    parts.push(renderEditor(state.editor, state.schema, liveValidation(state.editor, state.schema), state.editorIsNew));
    if (state.analysis) {
      parts.push(renderAnalysisView(state.analysis, state.editor.version));
    }
    if (state.bucketPage) {
      parts.push(renderBucketView(state.bucketPage, state.schema));
    }
    parts.push(renderSessionView(state.composer));
  }
  root().innerHTML = parts.join("\n");
}

async function loadProfiles(): Promise<void> {
  state.profiles = await api.listProfiles();
  render();
}

async function openProfile(id: string): Promise<void> {
  const doc = await api.getProfile(id);
  state.activeProfileId = id;
  state.editor = editorFromProfile(doc);
  state.editorIsNew = false;
  state.analysis = null;
  state.bucketPage = null;
  state.composer = emptyComposer();
  window.location.hash = `#/profiles/${encodeURIComponent(id)}`;
  render();
  await refreshAnalysis(id);
}

async function refreshAnalysis(id: string): Promise<void> {
  let body = await api.analysis(id);
  while (isJobTicket(body)) {
    if (body.status === "failed") {
      notice(`analysis failed: ${body.error ?? "unknown error"}`);
      return;
    }
    await new Promise((resolve) => setTimeout(resolve, 500));
    body = await api.job(body.job_id!);
  }
  state.analysis = body;
  if (state.editor) state.editor = { ...state.editor, analysisVersion: body.profile_version };
  render();
}

async function saveEditor(): Promise<void> {
  if (!state.editor || !state.schema) return;
  const doc = profileFromEditor(state.editor);
  try {
    const stored = state.editorIsNew ? await api.createProfile(doc) : await api.updateProfile(doc);
    state.editor = { ...editorFromProfile(stored), analysisVersion: state.editor.analysisVersion };
    state.editorIsNew = false;
    state.activeProfileId = stored.id;
    notice(`saved ${stored.id} at version ${stored.version}`);
    await loadProfiles();
    await refreshAnalysis(stored.id);
  } catch (err) {
    if (err instanceof VersionConflictError) {
      notice(
        `someone else saved this profile (server has v${err.currentVersion}); ` +
          `reload to pick up their changes before editing again`
      );
    } else if (err instanceof ApiError) {
      notice(`save rejected: ${err.message}`);
    } else {
      throw err;
    }
  }
}

async function loadBucket(k: number, offset: number): Promise<void> {
  if (!state.activeProfileId) return;
  state.bucketPage = await api.bucket(state.activeProfileId, k, offset, BUCKET_PAGE_SIZE);
  render();
}

async function requestPlan(): Promise<void> {
  if (!state.activeProfileId) return;
  const plan = await api.session(
    state.activeProfileId,
    state.composer.targets,
    state.composer.perLevel,
    state.composer.seed
  );
  state.composer = withPlan(state.composer, plan);
  render();
}

function downloadPlan(): void {
  const payload = exportPlan(state.composer);
  const blob = new Blob([payload], { type: "application/json" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = `session-${state.composer.plan?.profile ?? "plan"}.json`;
  link.click();
  URL.revokeObjectURL(link.href);
}

function findAction(target: EventTarget | null): HTMLElement | null {
  let el = target as HTMLElement | null;
  while (el && el !== document.body) {
    if (el.dataset && el.dataset.action) return el;
    el = el.parentElement;
  }
  return null;
}

async function handleAction(el: HTMLElement, event: Event): Promise<void> {
  const action = el.dataset.action!;
  const schema = state.schema!;
  const row = Number(el.dataset.row ?? -1);
  const atom = Number(el.dataset.atom ?? -1);
  const value = Number(el.dataset.value ?? -1);
  const index = Number(el.dataset.index ?? -1);

  switch (action) {
    case "new-profile":
      state.editor = newDraft(schema);
      state.editorIsNew = true;
      state.analysis = null;
      state.bucketPage = null;
      state.composer = emptyComposer();
      window.location.hash = "#/profiles/new";
      render();
      return;
    case "open":
      await openProfile(el.dataset.id!);
      return;
    case "duplicate": {
      const source = await api.getProfile(el.dataset.id!);
      const copy = duplicateProfile(source, `${source.id}-copy`);
      state.editor = editorFromProfile(copy);
      state.editorIsNew = true;
      window.location.hash = "#/profiles/new";
      render();
      return;
    }
    case "delete":
      await api.deleteProfile(el.dataset.id!);
      await loadProfiles();
      return;
    case "save":
      await saveEditor();
      return;
    case "set-weight":
      state.editor = setWeight(state.editor!, Number(el.dataset.group), Number((el as HTMLInputElement).value));
      render();
      return;
    case "set-id":
      state.editor = { ...state.editor!, id: (el as HTMLInputElement).value };
      return;
    case "set-name":
      state.editor = { ...state.editor!, name: (el as HTMLInputElement).value };
      return;
    case "set-description":
      state.editor = { ...state.editor!, description: (el as HTMLTextAreaElement).value };
      return;
    case "add-allow-row": {
      const featureId = Number((el as HTMLSelectElement).value);
      if (featureId) {
        state.editor = { ...state.editor!, builder: addAllowRow(state.editor!.builder, featureId) };
        render();
      }
      return;
    }
    case "add-atleastone-row":
      state.editor = { ...state.editor!, builder: addAtLeastOneRow(state.editor!.builder) };
      render();
      return;
    case "add-atom": {
      const featureId = Number((el as HTMLSelectElement).value);
      if (featureId) {
        state.editor = { ...state.editor!, builder: addAtom(state.editor!.builder, row, featureId) };
        render();
      }
      return;
    }
    case "remove-row":
      state.editor = { ...state.editor!, builder: removeRow(state.editor!.builder, row) };
      render();
      return;
    case "remove-atom":
      state.editor = { ...state.editor!, builder: removeAtom(state.editor!.builder, row, atom) };
      render();
      return;
    case "toggle-allow":
      state.editor = {
        ...state.editor!,
        builder: toggleAllowValue(state.editor!.builder, row, value, schema),
      };
      render();
      return;
    case "toggle-atom":
      state.editor = {
        ...state.editor!,
        builder: toggleAtomValue(state.editor!.builder, row, atom, value, schema),
      };
      render();
      return;
    case "bucket-prev":
      if (state.bucketPage) {
        await loadBucket(state.bucketPage.k, Math.max(0, state.bucketPage.offset - BUCKET_PAGE_SIZE));
      }
      return;
    case "bucket-next":
      if (state.bucketPage) {
        await loadBucket(state.bucketPage.k, state.bucketPage.offset + BUCKET_PAGE_SIZE);
      }
      return;
    case "add-target": {
      const input = document.querySelector<HTMLInputElement>('[data-action="target-input"]');
      if (input) {
        state.composer = addTarget(state.composer, input.value);
        render();
      }
      return;
    }
    case "remove-target":
      state.composer = removeTarget(state.composer, index);
      render();
      return;
    case "set-per-level":
      state.composer = { ...state.composer, perLevel: Number((el as HTMLInputElement).value) || 1 };
      return;
    case "set-seed":
      state.composer = { ...state.composer, seed: Number((el as HTMLInputElement).value) || 0 };
      return;
    case "request-plan":
      await requestPlan();
      return;
    case "step-up":
      state.composer = moveStep(state.composer, index, -1);
      render();
      return;
    case "step-down":
      state.composer = moveStep(state.composer, index, 1);
      render();
      return;
    case "export-plan":
      downloadPlan();
      return;
    case "target-input":
      return; // handled by add-target
    default:
      console.warn("unhandled action", action, event);
  }
}

export function start(): void {
  document.body.addEventListener("click", (event) => {
    const el = findAction(event.target);
    if (el && el.tagName !== "INPUT" && el.tagName !== "SELECT" && el.tagName !== "TEXTAREA") {
      event.preventDefault();
      void handleAction(el, event).catch((err) => notice(String(err)));
    }
    // chart bars open the bucket browser
    const bar = (event.target as HTMLElement | null)?.closest?.(".bar");
    if (bar && bar instanceof SVGElement === false) return;
    if (bar) {
      const k = Number((bar as unknown as HTMLElement).dataset.k);
      void loadBucket(k, 0).catch((err) => notice(String(err)));
    }
  });
  document.body.addEventListener("change", (event) => {
    const el = findAction(event.target);
    if (el) void handleAction(el, event).catch((err) => notice(String(err)));
  });
  window.addEventListener("hashchange", render);

  void (async () => {
    state.schema = await api.schema();
    await loadProfiles();
    render();
  })().catch((err) => {
    root().innerHTML = `<p class="notice">cannot reach the engine API: ${String(err)}</p>`;
  });
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  start();
}
