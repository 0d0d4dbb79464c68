"""Machine-readable analysis reports and their JSON schema."""

from __future__ import annotations

import json

SCHEMA_VERSION = "poe-report/1"

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "group", "components", "spectrum", "theorems", "findings"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "group": {
            "type": "object",
            "required": ["spec", "factors", "order", "family"],
            "properties": {
                "spec": {"type": "string"},
                "factors": {"type": "array", "items": {"type": "integer"}},
                "order": {"type": "integer"},
                "family": {"type": "string"},
            },
        },
        "components": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["index", "size", "order_profile"],
                "properties": {
                    "index": {"type": "integer"},
                    "size": {"type": "integer"},
                    "n_edges": {"type": "integer"},
                    "regularity": {"type": ["integer", "null"]},
                    "bipartite": {"type": "boolean"},
                    "has_triangle": {"type": "boolean"},
                    "order_profile": {
                        "type": "object",
                        "additionalProperties": {"type": "integer"},
                    },
                    "vertices": {"type": "array", "items": {"type": "string"}},
                    "vertices_truncated": {"type": "boolean"},
                },
            },
        },
        "spectrum": {
            "type": ["object", "null"],
            "required": ["integer_eigenvalues", "residual_poly", "quadratic_factors"],
            "properties": {
                "integer_eigenvalues": {
                    "type": "object",
                    "additionalProperties": {"type": "integer"},
                },
                "residual_poly": {"type": "array", "items": {"type": "integer"}},
                "quadratic_factors": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["poly", "multiplicity"],
                        "properties": {
                            "poly": {"type": "array", "items": {"type": "integer"}},
                            "multiplicity": {"type": "integer"},
                        },
                    },
                },
                "partial": {"type": "boolean"},
                "numeric_max_error": {"type": ["number", "null"]},
            },
        },
        "theorems": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "verdict", "evidence"],
                "properties": {
                    "id": {"type": "string"},
                    "verdict": {"enum": ["pass", "fail", "hypothesis-not-met"]},
                    "evidence": {
                        "type": "object",
                        "required": ["predicted", "computed"],
                    },
                },
            },
        },
        "findings": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "variants", "verdict"],
                "properties": {
                    "id": {"type": "string"},
                    "description": {"type": "string"},
                    "variants": {"type": "object"},
                    "verdict": {"type": "string"},
                    "evidence": {"type": "array"},
                },
            },
        },
        "timing": {
            "type": "object",
            "additionalProperties": {"type": "number"},
        },
    },
}


def theorem_entry(check) -> dict:
    return {
        "id": check.check_id,
        "verdict": check.verdict,
        "evidence": {
            "predicted": check.predicted,
            "computed": check.computed,
            "certificates": check.certificates,
            "note": check.note,
        },
    }


def dump_json(document: dict, path=None, indent: int = 2) -> str:
    text = json.dumps(document, indent=indent, sort_keys=False, default=str)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return text
