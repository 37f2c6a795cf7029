"""JSON schema of the documents written by ``cga ... --json``.

A document is self-describing: it carries the schema version, the argv and
effective configuration that produced it, timestamps, and a list of reports.
A report is either a claim verification (``claim_id`` ... ``summary``) or an
analysis payload from an exploration command (``payload`` ... ``data``).
"""
from __future__ import annotations

SCHEMA_VERSION = "1"

_VERIFICATION = {
    "type": "object",
    "required": ["claim_id", "locator", "parameters", "result", "evidence", "wall_time", "summary"],
    "properties": {
        "claim_id": {"type": "string", "minLength": 1},
        "locator": {"type": "string"},
        "parameters": {"type": "object"},
        "result": {"enum": ["pass", "fail", "undecided"]},
        "evidence": {"type": "object"},
        "wall_time": {"type": "number", "minimum": 0},
        "summary": {"type": "string"},
    },
    "additionalProperties": False,
}

_PAYLOAD = {
    "type": "object",
    "required": ["payload", "parameters", "data", "wall_time"],
    "properties": {
        "payload": {"enum": ["classes", "centralizer", "component", "cover", "reps-search"]},
        "parameters": {"type": "object"},
        "data": {"type": "object"},
        "wall_time": {"type": "number", "minimum": 0},
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "cga report document",
    "type": "object",
    "required": ["schema_version", "invocation", "started_at", "finished_at", "exit_status", "reports"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "invocation": {
            "type": "object",
            "required": ["argv", "command", "config"],
            "properties": {
                "argv": {"type": "array", "items": {"type": "string"}},
                "command": {"type": "string"},
                "config": {
                    "type": "object",
                    "required": ["cap", "jobs", "cache_dir", "deterministic", "sources"],
                    "properties": {
                        "cap": {"type": "integer", "minimum": 1},
                        "jobs": {"type": "integer", "minimum": 1},
                        "cache_dir": {"type": "string"},
                        "deterministic": {"type": "boolean"},
                        "sources": {"type": "object"},
                    },
                },
            },
        },
        "started_at": {"type": "string"},
        "finished_at": {"type": "string"},
        "exit_status": {"enum": [0, 1, 2, 3]},
        "reports": {"type": "array", "items": {"oneOf": [_VERIFICATION, _PAYLOAD]}},
    },
    "additionalProperties": False,
}

# A line of ``verify --jsonl`` output: a header, then one report per line.
JSONL_HEADER_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "invocation", "started_at"],
    "properties": {"schema_version": {"const": SCHEMA_VERSION}},
}
VERIFICATION_REPORT_SCHEMA = _VERIFICATION
