// Thin typed client. Only the documented routes appear here; if a view
// needs data there is either an endpoint for it or the view is wrong.

import type {
  AnalysisDoc,
  BucketPage,
  JobTicket,
  ProfileDoc,
  SchemaDoc,
  SessionPlanDoc,
} from "./types.js";

export class ApiError extends Error {
  status: number;
  body: unknown;

  constructor(status: number, body: unknown, message?: string) {
    super(message ?? `API error ${status}`);
    this.status = status;
    this.body = body;
  }
}

export class VersionConflictError extends ApiError {
  currentVersion: number;

  constructor(body: { current_version: number }, status: number) {
    super(status, body, "profile changed on the server");
    this.currentVersion = body.current_version;
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(path, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const text = await resp.text();
  const body = text ? JSON.parse(text) : null;
  if (!resp.ok) {
    if (resp.status === 409 && body && typeof body.current_version === "number") {
      throw new VersionConflictError(body, resp.status);
    }
    throw new ApiError(resp.status, body, body?.detail ?? `API error ${resp.status}`);
  }
  return body as T;
}

export const api = {
  schema: () => request<SchemaDoc>("/api/schema"),

  listProfiles: () => request<ProfileDoc[]>("/api/profiles"),

  getProfile: (id: string) => request<ProfileDoc>(`/api/profiles/${encodeURIComponent(id)}`),

  createProfile: (doc: ProfileDoc) =>
    request<ProfileDoc>("/api/profiles", { method: "POST", body: JSON.stringify(doc) }),

  updateProfile: (doc: ProfileDoc) =>
    request<ProfileDoc>(`/api/profiles/${encodeURIComponent(doc.id)}`, {
      method: "PUT",
      body: JSON.stringify(doc),
    }),

  deleteProfile: (id: string) =>
    request<void>(`/api/profiles/${encodeURIComponent(id)}`, { method: "DELETE" }),

  // 200 -> AnalysisDoc, 202 -> JobTicket to poll
  analysis: (id: string, fast = true) =>
    request<AnalysisDoc | JobTicket>(
      `/api/profiles/${encodeURIComponent(id)}/analysis?fast=${fast}`
    ),

  job: (jobId: string) =>
    request<AnalysisDoc | JobTicket>(`/api/jobs/${encodeURIComponent(jobId)}`),

  bucket: (id: string, k: number, offset: number, limit: number) =>
    request<BucketPage>(
      `/api/profiles/${encodeURIComponent(id)}/buckets/${k}?offset=${offset}&limit=${limit}`
    ),

  session: (id: string, cdTargets: string[], perLevel: number, seed: number) =>
    request<SessionPlanDoc>(`/api/profiles/${encodeURIComponent(id)}/sessions`, {
      method: "POST",
      body: JSON.stringify({ cd_targets: cdTargets, per_level: perLevel, seed }),
    }),
};

export function isJobTicket(body: AnalysisDoc | JobTicket): body is JobTicket {
  return (body as JobTicket).status !== undefined && !("total_all" in body);
}
