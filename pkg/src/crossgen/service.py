"""HTTP JSON API over the engine with a file-backed profile store.

Single-operator deployment model: no authentication, one scenario
space per server process, profiles persisted as JSON documents.
Analyses over the built-in space (or any constraint the exact counter
supports) complete inline; anything that would need a long brute-force
pass runs on a worker thread and the route hands out a job token to
poll, so the service stays responsive.

Analysis responses are cached as serialized bytes keyed on (space
fingerprint, profile id, profile version, options): repeated GETs are
byte-identical until the profile or schema changes.
"""

from __future__ import annotations

import threading
import uuid
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import constraints as cx
from .analysis import analyze, analysis_json_bytes
from .diversity import EmptyBucketError
from .enumeration import bucket_members, count_by_bucket, score_grid
from .model import InvalidDocument, Profile, ScenarioSpace
from .presets import builtin_crosswalk_space, builtin_profiles
from .rational import RationalFormatError, format_rational, parse_rational
from .sampler import build_path, plan_to_doc
from .serialization import profile_from_doc, profile_to_doc, space_fingerprint, space_to_doc
from .store import DuplicateProfile, ProfileStore, UnknownProfile, VersionConflict

INLINE_COMBINATION_LIMIT = 500_000


class ProfileBody(BaseModel):
    """Profile document as accepted by POST and PUT."""

    id: str
    name: str
    weights: dict[str, int]
    constraint: dict = Field(default_factory=lambda: {"op": "true"})
    description: str = ""
    version: int = 1

    def to_profile(self, space: ScenarioSpace) -> Profile:
        return profile_from_doc(self.model_dump(), space)


class SessionRequest(BaseModel):
    cd_targets: list[Union[str, float, int]]
    per_level: int = 1
    seed: int = 0


def _parse_cd(raw: Union[str, float, int]) -> Fraction:
    if isinstance(raw, (int, str)):
        return parse_rational(raw, "cd_targets")
    # float targets are read as their decimal literal, 0.3 -> 3/10
    return Fraction(str(raw))


def create_app(
    space: Optional[ScenarioSpace] = None,
    store_dir: Optional[Union[str, Path]] = None,
    console_dir: Optional[Union[str, Path]] = None,
    dev_cors: bool = False,
    seed_builtin: bool = True,
) -> FastAPI:
    """Build the service; with no arguments: built-in space, temp store."""
    active_space = space if space is not None else builtin_crosswalk_space()
    if store_dir is None:
        import tempfile

        store_dir = tempfile.mkdtemp(prefix="crossgen-store-")
    store = ProfileStore(store_dir, active_space)
    if seed_builtin and not store.list_ids():
        try:
            store.seed_defaults(builtin_profiles())
        except InvalidDocument:
            pass  # custom space: built-ins may not validate against it

    app = FastAPI(title="crossgen", version="0.1.0")
    app.state.space = active_space
    app.state.store = store
    app.state.fingerprint = space_fingerprint(active_space)
    app.state.analysis_cache: dict[tuple, bytes] = {}
    app.state.jobs: dict[str, dict] = {}
    app.state.jobs_by_key: dict[tuple, str] = {}
    app.state.jobs_lock = threading.Lock()
    app.state.executor = ThreadPoolExecutor(max_workers=2)

    if dev_cors:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        # malformed query parameters are client errors, not schema errors
        errors = exc.errors()
        if errors and all(e.get("loc", [None])[0] == "query" for e in errors):
            return JSONResponse(status_code=400, content={"detail": "malformed query"})
        safe = [
            {"loc": list(e.get("loc", ())), "msg": str(e.get("msg", "")), "type": e.get("type", "")}
            for e in errors
        ]
        return JSONResponse(status_code=422, content={"detail": safe})

    @app.exception_handler(UnknownProfile)
    async def unknown_handler(request: Request, exc: UnknownProfile):
        return JSONResponse(status_code=404, content={"detail": f"unknown profile {exc.profile_id!r}"})

    @app.exception_handler(VersionConflict)
    async def conflict_handler(request: Request, exc: VersionConflict):
        return JSONResponse(
            status_code=409,
            content={
                "detail": str(exc),
                "current_version": exc.expected,
                "submitted_version": exc.got,
            },
        )

    @app.exception_handler(DuplicateProfile)
    async def duplicate_handler(request: Request, exc: DuplicateProfile):
        return JSONResponse(status_code=409, content={"detail": str(exc)})

    @app.exception_handler(InvalidDocument)
    async def invalid_handler(request: Request, exc: InvalidDocument):
        return JSONResponse(
            status_code=422,
            content={
                "detail": str(exc),
                "violations": [
                    {
                        "code": v.code,
                        "message": v.message,
                        "feature_id": v.feature_id,
                        "group_id": v.group_id,
                    }
                    for v in exc.violations
                ],
            },
        )

    # -- schema --------------------------------------------------------

    @app.get("/api/schema")
    def get_schema():
        return {
            "fingerprint": app.state.fingerprint,
            "combination_count": active_space.combination_count(),
            **space_to_doc(active_space),
        }

    # -- profiles ------------------------------------------------------

    @app.get("/api/profiles")
    def list_profiles():
        return [profile_to_doc(p) for p in store.list_profiles()]

    @app.post("/api/profiles", status_code=201)
    def create_profile(body: ProfileBody):
        stored = store.create(body.to_profile(active_space))
        return profile_to_doc(stored)

    @app.get("/api/profiles/{profile_id}")
    def get_profile(profile_id: str):
        return profile_to_doc(store.get(profile_id))

    @app.put("/api/profiles/{profile_id}")
    def put_profile(profile_id: str, body: ProfileBody):
        if body.id != profile_id:
            raise InvalidDocument(f"document id {body.id!r} does not match route {profile_id!r}")
        store.get(profile_id)  # 404 before conflict/validation checks
        stored = store.update(body.to_profile(active_space))
        return profile_to_doc(stored)

    @app.delete("/api/profiles/{profile_id}", status_code=204)
    def delete_profile(profile_id: str):
        store.delete(profile_id)
        return Response(status_code=204)

    # -- analysis ------------------------------------------------------

    def _analysis_key(profile: Profile, fast: bool, exclude: bool) -> tuple:
        return (app.state.fingerprint, profile.profile_id, profile.version, fast, exclude)

    def _inline_eligible(profile: Profile, fast: bool) -> bool:
        if fast and cx.conjunctive_shape(profile.constraint, active_space) is not None:
            return True
        return active_space.combination_count() <= INLINE_COMBINATION_LIMIT

    def _compute_analysis(profile: Profile, fast: bool, exclude: bool) -> bytes:
        result = analyze(active_space, profile, use_fast_counting=fast, exclude_constrained=exclude)
        payload = analysis_json_bytes(result)
        app.state.analysis_cache[_analysis_key(profile, fast, exclude)] = payload
        return payload

    @app.get("/api/profiles/{profile_id}/analysis")
    def get_analysis(profile_id: str, fast: bool = True, exclude_constrained: bool = True):
        profile = store.get(profile_id)
        key = _analysis_key(profile, fast, exclude_constrained)
        cached = app.state.analysis_cache.get(key)
        if cached is not None:
            return Response(content=cached, media_type="application/json")
        if _inline_eligible(profile, fast):
            return Response(
                content=_compute_analysis(profile, fast, exclude_constrained),
                media_type="application/json",
            )

        with app.state.jobs_lock:
            token = app.state.jobs_by_key.get(key)
            if token is None:
                token = uuid.uuid4().hex
                app.state.jobs_by_key[key] = token
                app.state.jobs[token] = {"status": "in_progress", "key": key}

                def run(job_token: str, job_profile: Profile, job_fast: bool, job_excl: bool):
                    try:
                        _compute_analysis(job_profile, job_fast, job_excl)
                        app.state.jobs[job_token] = {"status": "done", "key": key}
                    except Exception as exc:  # surfaced through the job, not the log
                        app.state.jobs[job_token] = {"status": "failed", "error": str(exc)}

                app.state.executor.submit(run, token, profile, fast, exclude_constrained)
        return JSONResponse(status_code=202, content={"status": "in_progress", "job_id": token})

    @app.get("/api/jobs/{job_id}")
    def get_job(job_id: str):
        job = app.state.jobs.get(job_id)
        if job is None:
            return JSONResponse(status_code=404, content={"detail": f"unknown job {job_id!r}"})
        if job["status"] == "done":
            cached = app.state.analysis_cache.get(job["key"])
            if cached is not None:
                return Response(content=cached, media_type="application/json")
        return JSONResponse(
            status_code=200,
            content={"status": job["status"], **({"error": job["error"]} if "error" in job else {})},
        )

    # -- bucket browser ------------------------------------------------

    @app.get("/api/profiles/{profile_id}/buckets/{k}")
    def get_bucket(profile_id: str, k: int, offset: int = 0, limit: int = 50):
        profile = store.get(profile_id)
        grid = score_grid(active_space, profile)
        if not 0 <= k <= grid.k_max:
            return JSONResponse(
                status_code=400,
                content={"detail": f"bucket {k} outside 0..{grid.k_max}"},
            )
        if offset < 0 or not 1 <= limit <= 500:
            return JSONResponse(status_code=400, content={"detail": "malformed query"})
        counts = count_by_bucket(active_space, profile)
        items = [
            {
                "assignment": list(s),
                "labels": {
                    feat.name: feat.label_for(idx)
                    for feat, idx in zip(active_space.features, s)
                },
            }
            for s in bucket_members(active_space, profile, k, offset, limit)
        ]
        return {
            "k": k,
            "k_max": grid.k_max,
            "cd": format_rational(Fraction(k, grid.k_max)),
            "total": counts.count_profile[k],
            "offset": offset,
            "limit": limit,
            "items": items,
        }

    # -- session plans ---------------------------------------------------

    @app.post("/api/profiles/{profile_id}/sessions")
    def post_session(profile_id: str, body: SessionRequest):
        profile = store.get(profile_id)
        try:
            targets = [_parse_cd(t) for t in body.cd_targets]
        except RationalFormatError as exc:
            raise InvalidDocument(str(exc)) from exc
        if not targets:
            raise InvalidDocument("cd_targets must not be empty")
        if body.per_level < 1:
            raise InvalidDocument("per_level must be at least 1")
        try:
            plan = build_path(active_space, profile, targets, body.per_level, body.seed)
        except EmptyBucketError as exc:
            raise InvalidDocument(str(exc)) from exc
        except ValueError as exc:
            raise InvalidDocument(str(exc)) from exc
        return plan_to_doc(plan, active_space)

    # -- console static assets (optional) --------------------------------

    if console_dir is not None and Path(console_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(console_dir), html=True), name="console")

    return app
