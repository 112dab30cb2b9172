"""Versioned JSON payloads emitted and consumed by the qecsa CLI.

Every payload carries `schema_version` as `<name>/v<major>[.<minor>]`.
Within one major, fields are only ever added, so a reader accepts any
minor of the major it was written against. Field-level documentation
lives under `docs/schema/`.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any, NamedTuple

PLAN = "qecsa-plan/v1"
MATRICES = "qecsa-matrices/v1"
TRANSCRIPT = "qecsa-transcript/v1"
VERIFY_REPORT = "qecsa-verify-report/v1"

# schema name -> subcommand that produces it
PRODUCERS = {
    "qecsa-plan": "rate",
    "qecsa-matrices": "build",
    "qecsa-transcript": "run",
    "qecsa-verify-report": "verify",
}

_PATTERN = re.compile(r"(?P<name>[a-z][a-z0-9-]*)/v(?P<major>\d+)(?:\.(?P<minor>\d+))?")


class SchemaVersionError(ValueError):
    """schema_version is missing, malformed, or of another payload kind or major."""


class SchemaVersion(NamedTuple):
    name: str
    major: int
    minor: int = 0

    @classmethod
    def parse(cls, text: str) -> SchemaVersion:
        m = _PATTERN.fullmatch(text or "")
        if m is None:
            raise SchemaVersionError(
                f"malformed schema_version {text!r}; want '<name>/v<major>[.<minor>]'"
            )
        return cls(m["name"], int(m["major"]), int(m["minor"] or 0))

    def readable_as(self, expected: SchemaVersion) -> bool:
        return self.name == expected.name and self.major == expected.major

    def __str__(self) -> str:
        suffix = f".{self.minor}" if self.minor else ""
        return f"{self.name}/v{self.major}{suffix}"


def parse_version(version: str) -> tuple[str, int, int]:
    """`<name>/v<major>[.<minor>]` -> (name, major, minor).

    >>> parse_version("qecsa-transcript/v2.3")
    ('qecsa-transcript', 2, 3)
    """
    return tuple(SchemaVersion.parse(version))


def identify(payload: Any) -> SchemaVersion:
    """The stamped version of a payload; the name must be a qecsa payload kind."""
    if not isinstance(payload, dict):
        raise SchemaVersionError(f"expected a JSON object, got {type(payload).__name__}")
    raw = payload.get("schema_version")
    if not raw:
        raise SchemaVersionError("payload carries no schema_version")
    version = SchemaVersion.parse(str(raw))
    if version.name not in PRODUCERS:
        raise SchemaVersionError(f"{version.name!r} is not a qecsa payload")
    return version


def require_schema_version(payload: Any, expected: str) -> SchemaVersion:
    want = SchemaVersion.parse(expected)
    got = identify(payload)
    if got.name != want.name:
        raise SchemaVersionError(
            f"got a {got.name} payload (written by `qecsa {PRODUCERS[got.name]}`), "
            f"expected {want.name}"
        )
    if not got.readable_as(want):
        raise SchemaVersionError(f"{got} cannot be read as {want} (major version differs)")
    return got


def load_payload(path: str | Path, expected: str) -> dict:
    with Path(path).open(encoding="utf-8") as f:
        payload = json.load(f)
    require_schema_version(payload, expected)
    return payload


def stamp(payload: dict, version: str) -> dict:
    """Set `schema_version` in place and return the payload."""
    payload["schema_version"] = version
    return payload


def dumps(payload: dict) -> str:
    """Sorted keys, so equal payloads are byte-identical."""
    return json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True)
