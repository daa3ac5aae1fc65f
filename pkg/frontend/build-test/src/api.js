// Thin typed client. Only the documented routes appear here; if a view
// needs data there is either an endpoint for it or the view is wrong.
export class ApiError extends Error {
    status;
    body;
    constructor(status, body, message) {
        super(message ?? `API error ${status}`);
        this.status = status;
        this.body = body;
    }
}
export class VersionConflictError extends ApiError {
    currentVersion;
    constructor(body, status) {
        super(status, body, "profile changed on the server");
        this.currentVersion = body.current_version;
    }
}
async function request(path, init) {
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
    return body;
}
export const api = {
    schema: () => request("/api/schema"),
    listProfiles: () => request("/api/profiles"),
    getProfile: (id) => request(`/api/profiles/${encodeURIComponent(id)}`),
    createProfile: (doc) => request("/api/profiles", { method: "POST", body: JSON.stringify(doc) }),
    updateProfile: (doc) => request(`/api/profiles/${encodeURIComponent(doc.id)}`, {
        method: "PUT",
        body: JSON.stringify(doc),
    }),
    deleteProfile: (id) => request(`/api/profiles/${encodeURIComponent(id)}`, { method: "DELETE" }),
    // 200 -> AnalysisDoc, 202 -> JobTicket to poll
    analysis: (id, fast = true) => request(`/api/profiles/${encodeURIComponent(id)}/analysis?fast=${fast}`),
    job: (jobId) => request(`/api/jobs/${encodeURIComponent(jobId)}`),
    bucket: (id, k, offset, limit) => request(`/api/profiles/${encodeURIComponent(id)}/buckets/${k}?offset=${offset}&limit=${limit}`),
    session: (id, cdTargets, perLevel, seed) => request(`/api/profiles/${encodeURIComponent(id)}/sessions`, {
        method: "POST",
        body: JSON.stringify({ cd_targets: cdTargets, per_level: perLevel, seed }),
    }),
};
export function isJobTicket(body) {
    return body.status !== undefined && !("total_all" in body);
}
