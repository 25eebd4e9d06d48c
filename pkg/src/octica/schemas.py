"""Shipped JSON schemas for the CLI's file formats and outputs, with a small
structural validator (no external dependency)."""
from __future__ import annotations

RATIONAL = {"type": "string_or_number"}   # rationals travel as "p/q" strings

CONSTRAINT_FILE_SCHEMA = {
    "type": "object",
    "required": ["degree", "conditions"],
    "properties": {
        "degree": {"type": "integer"},
        "conditions": {"type": "array", "items": {
            "type": "object",
            "required": ["kind"],
            "properties": {
                "kind": {"type": "string"},
                "point": {"type": "array"},
                "order": {"type": "integer"},
                "multiplicity": {"type": "integer"},
                "power": {"type": "integer"},
                "tangent": {"type": "string"},
                "line": {"type": "string"},
                "form": {"type": "string"},
                "degenerate": {"type": "boolean"},
                "direction": RATIONAL,
            },
        }},
        "parameters": {"type": "array"},
    },
}

FAMILY_FILE_SCHEMA = {
    "type": "object",
    "required": [],
    "properties": {
        "degree": {"type": "integer"},
        "nn_order": {"type": "integer"},
        "parameter": {"type": "string"},
        "extra_conditions": {"type": "array"},
        "kernel_at": {"type": "array"},
        "witness_line": {"type": "string"},
    },
}

LINSYS_OUTPUT_SCHEMA = {
    "type": "object",
    "required": ["degree", "dim_forms", "dim_projective"],
    "properties": {
        "degree": {"type": "integer"},
        "dim_forms": {"type": "integer"},
        "dim_projective": {"type": "integer"},
        "basis": {"type": "array"},
    },
}

REPORT_OUTPUT_SCHEMA = {
    "type": "object",
    "required": ["type", "multiplicity", "milnor"],
    "properties": {
        "type": {"type": "string"},
        "multiplicity": {"type": "integer"},
        "milnor": {"type": "integer_or_string"},
        "table_mu": {"type": "integer_or_null"},
        "branches": {"type": "integer_or_null"},
        "point": {"type": "array_or_null"},
        "distinguished_tangent": {"type": "string_or_null"},
    },
}

CATALOGUE_OUTPUT_SCHEMA = {
    "type": "object",
    "required": ["totals", "strata"],
    "properties": {
        "totals": {"type": "object", "required": ["strata", "components"], "properties": {}},
        "strata": {"type": "array", "items": {
            "type": "object",
            "required": ["label", "id", "counts", "component", "dimension",
                         "birational_type", "empty"],
            "properties": {},
        }},
    },
}


class SchemaError(ValueError):
    pass


def validate(instance, schema, path="$") -> None:
    kind = schema.get("type")
    if kind == "object":
        if not isinstance(instance, dict):
            raise SchemaError(f"{path}: expected object")
        for key in schema.get("required", []):
            if key not in instance:
                raise SchemaError(f"{path}: missing required key {key!r}")
        props = schema.get("properties", {})
        for key, sub in props.items():
            if key in instance and instance[key] is not None:
                validate(instance[key], sub, f"{path}.{key}")
    elif kind == "array":
        if not isinstance(instance, list):
            raise SchemaError(f"{path}: expected array")
        item_schema = schema.get("items")
        if item_schema:
            for i, item in enumerate(instance):
                validate(item, item_schema, f"{path}[{i}]")
    elif kind == "integer":
        if not isinstance(instance, int) or isinstance(instance, bool):
            raise SchemaError(f"{path}: expected integer")
    elif kind == "string":
        if not isinstance(instance, str):
            raise SchemaError(f"{path}: expected string")
    elif kind == "boolean":
        if not isinstance(instance, bool):
            raise SchemaError(f"{path}: expected boolean")
    elif kind == "integer_or_string":
        if not isinstance(instance, (int, str)):
            raise SchemaError(f"{path}: expected integer or string")
    elif kind == "integer_or_null":
        if instance is not None and not isinstance(instance, int):
            raise SchemaError(f"{path}: expected integer or null")
    elif kind == "string_or_null":
        if instance is not None and not isinstance(instance, str):
            raise SchemaError(f"{path}: expected string or null")
    elif kind == "array_or_null":
        if instance is not None and not isinstance(instance, list):
            raise SchemaError(f"{path}: expected array or null")
    elif kind == "string_or_number":
        if not isinstance(instance, (str, int)):
            raise SchemaError(f"{path}: expected string or number")
    else:
        raise SchemaError(f"{path}: unknown schema type {kind!r}")
