"""File-backed profile store with optimistic concurrency.

One JSON document per profile under a root directory. Writes are
atomic (write to a temp file in the same directory, fsync, rename), so
a crash at any point leaves either the previous document or the new
one on disk - never a torn file. Updates require the caller to present
the version it read; a mismatch raises ``VersionConflict`` and the
stored version advances by exactly 1 per successful update.

Per-profile locks serialize writers inside one process; the atomic
rename protects against crashes, not against multiple processes
racing version checks.
"""

from __future__ import annotations

import os
import threading
import uuid
from pathlib import Path

from .model import InvalidDocument, Profile, ScenarioSpace, validate_profile
from . import constraints as cx
from .serialization import deserialize_profile, serialize_profile


class UnknownProfile(KeyError):
    def __init__(self, profile_id: str):
        super().__init__(profile_id)
        self.profile_id = profile_id


class DuplicateProfile(ValueError):
    def __init__(self, profile_id: str):
        super().__init__(f"profile {profile_id!r} already exists")
        self.profile_id = profile_id


class VersionConflict(ValueError):
    def __init__(self, profile_id: str, expected: int, got: int):
        super().__init__(
            f"profile {profile_id!r} is at version {expected}, update based on {got}"
        )
        self.profile_id = profile_id
        self.expected = expected
        self.got = got


def _atomic_write(path: Path, payload: bytes) -> None:
    tmp = path.with_name(f".{path.name}.{uuid.uuid4().hex}.tmp")
    fd = os.open(tmp, os.O_WRONLY | os.O_CREAT | os.O_EXCL, 0o644)
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(payload)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    finally:
        if tmp.exists():
            try:
                os.unlink(tmp)
            except OSError:
                pass


class ProfileStore:
    """Directory of profile documents validated against one space."""

    def __init__(self, root: Path | str, space: ScenarioSpace):
        self.root = Path(root)
        self.space = space
        self.root.mkdir(parents=True, exist_ok=True)
        self._master = threading.Lock()
        self._locks: dict[str, threading.Lock] = {}

    def _lock_for(self, profile_id: str) -> threading.Lock:
        with self._master:
            if profile_id not in self._locks:
                self._locks[profile_id] = threading.Lock()
            return self._locks[profile_id]

    def _path(self, profile_id: str) -> Path:
        safe = profile_id.replace("/", "_").replace("\\", "_").replace("..", "_")
        return self.root / f"{safe}.json"

    def _validate(self, profile: Profile) -> None:
        violations = validate_profile(profile, self.space)
        violations += cx.validate_constraint(profile.constraint, self.space)
        if violations:
            raise InvalidDocument(
                "profile violates invariants: " + "; ".join(str(v) for v in violations),
                violations,
            )

    def list_ids(self) -> list[str]:
        return sorted(
            p.stem for p in self.root.glob("*.json") if not p.name.startswith(".")
        )

    def list_profiles(self) -> list[Profile]:
        return [self.get(pid) for pid in self.list_ids()]

    def index(self) -> dict[str, int]:
        """id -> stored version."""
        return {p.profile_id: p.version for p in self.list_profiles()}

    def exists(self, profile_id: str) -> bool:
        return self._path(profile_id).exists()

    def get(self, profile_id: str) -> Profile:
        path = self._path(profile_id)
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise UnknownProfile(profile_id) from None
        return deserialize_profile(text)

    def create(self, profile: Profile) -> Profile:
        """Store a new profile at version 1."""
        stored = profile.with_version(1)
        self._validate(stored)
        with self._lock_for(profile.profile_id):
            path = self._path(profile.profile_id)
            if path.exists():
                raise DuplicateProfile(profile.profile_id)
            _atomic_write(path, serialize_profile(stored).encode("utf-8"))
        return stored

    def update(self, profile: Profile) -> Profile:
        """Replace an existing profile; ``profile.version`` must equal
        the stored version and the stored version advances by 1."""
        with self._lock_for(profile.profile_id):
            current = self.get(profile.profile_id)
            if current.version != profile.version:
                raise VersionConflict(profile.profile_id, current.version, profile.version)
            stored = profile.with_version(current.version + 1)
            self._validate(stored)
            _atomic_write(self._path(profile.profile_id), serialize_profile(stored).encode("utf-8"))
        return stored

    def delete(self, profile_id: str) -> None:
        with self._lock_for(profile_id):
            path = self._path(profile_id)
            if not path.exists():
                raise UnknownProfile(profile_id)
            os.unlink(path)

    def seed_defaults(self, profiles: list[Profile]) -> int:
        """Create any missing profiles; returns how many were written."""
        written = 0
        for profile in profiles:
            if not self.exists(profile.profile_id):
                self.create(profile)
                written += 1
        return written
