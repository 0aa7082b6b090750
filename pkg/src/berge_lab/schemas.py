"""JSON Schemas (draft 2020-12) for the ``--json`` output of each subcommand.

Plain dictionaries, so any validator can consume them; the test suite
uses :mod:`jsonschema`.
"""

from __future__ import annotations

_nullable_int = {"type": ["integer", "null"]}
_nullable_bool = {"type": ["boolean", "null"]}
_str_list = {"type": "array", "items": {"type": "string"}}

ANALYZE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["file", "k", "kind", "saturated", "long_cycle"],
    "properties": {
        "file": {"type": "string"},
        "k": {"type": "integer"},
        "r": {"type": "integer"},
        "kind": {"enum": ["hypergraph", "bipartite"]},
        "n": {"type": "integer"},
        "m": {"type": "integer"},
        "e": {"type": "integer"},
        "edges": {"type": "integer"},
        "circumference": {"type": "integer"},
        "longest_path": {"type": "integer"},
        "berge_circumference": {"type": "integer"},
        "longest_berge_path": {"type": "integer"},
        "incidence_circumference": {"type": "integer"},
        "berge_cycle": {
            "type": ["object", "null"],
            "required": ["vertices", "edges"],
            "properties": {
                "vertices": {"type": "array", "items": {"type": "integer"}},
                "edges": {"type": "array", "items": {"type": "integer"}},
            },
        },
        "cycle": {"type": ["array", "null"], "items": {"type": "string"}},
        "path": _str_list,
        "saturated": _nullable_bool,
        "long_cycle": {"type": "boolean"},
    },
}

VERIFY = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["theorem", "verdict", "applicable", "holds", "tight", "class", "measured", "bound", "hypotheses"],
    "properties": {
        "theorem": {"type": "string"},
        "verdict": {"enum": ["holds", "fails", "inapplicable"]},
        "applicable": {"type": "boolean"},
        "holds": _nullable_bool,
        "tight": {"type": "boolean"},
        "class": {"enum": ["none", "block_tree", "t1_family", "other"]},
        "measured": _nullable_int,
        "bound": {"type": ["string", "null"]},
        "hypotheses": {"type": "object", "additionalProperties": _nullable_bool},
        "details": {"type": "object"},
        "note": {"type": "string"},
    },
}

CONSTRUCT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["family", "out", "kind", "n"],
    "properties": {
        "family": {"enum": ["block", "block-tree", "star", "ht", "t1-family"]},
        "out": {"type": "string"},
        "kind": {"enum": ["hypergraph", "bipartite"]},
        "n": {"type": "integer"},
        "m": {"type": "integer"},
        "e": {"type": "integer"},
        "edges": {"type": "integer"},
    },
}

STRUCTURE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["file"],
    "properties": {
        "file": {"type": "string"},
        "path": _str_list,
        "n_first": {"type": "array", "items": {"type": "integer"}},
        "n_last": {"type": "array", "items": {"type": "integer"}},
        "pairs": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
        "scf": {
            "type": "object",
            "required": ["ok", "parts", "witnesses", "chain"],
            "properties": {
                "ok": {"type": "boolean"},
                "parts": {"type": "object", "additionalProperties": {"type": "boolean"}},
                "witnesses": {"type": "object", "additionalProperties": {"type": "string"}},
                "chain": {"type": ["array", "null"], "items": {"type": "integer"}},
            },
        },
        "scf_ok": {"type": "boolean"},
        "separation": {"type": "boolean"},
        "core_nodes": _str_list,
        "core_m": {"type": "integer"},
        "core_n": {"type": "integer"},
        "core_edges": {"type": "integer"},
        "removed": _str_list,
    },
    "patternProperties": {"^part[1-5]$": {"type": "boolean"}},
}

_instance = {
    "type": "object",
    "required": ["n", "edges"],
    "properties": {
        "n": {"type": "integer"},
        "m": {"type": "integer"},
        "edges": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
    },
}

ENUMERATE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["scanned", "applicable", "violations", "tight", "seconds", "complete", "histogram"],
    "properties": {
        "scanned": {"type": "integer", "minimum": 0},
        "applicable": {"type": "integer", "minimum": 0},
        "violations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["theorem", "instance", "measured", "bound"],
                "properties": {"instance": _instance, "measured": {"type": "integer"}, "bound": {"type": "string"}},
            },
        },
        "tight": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["instance", "class"],
                "properties": {"instance": _instance, "class": {"type": "string"}},
            },
        },
        "tight_count": {"type": "integer"},
        "histogram": {"type": "object", "additionalProperties": {"type": "integer"}},
        "max_measured": {"type": "object", "additionalProperties": {"type": "integer"}},
        "oracle_checks": {"type": "integer"},
        "seconds": {"type": "number"},
        "complete": {"type": "boolean"},
        "violation_count": {"type": "integer"},
        "estimate": {"type": "integer"},
        "note": {"type": "string"},
    },
}

SATURATE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["file", "k", "edges_before", "edges_after", "added", "circumference"],
    "properties": {
        "file": {"type": "string"},
        "k": {"type": "integer"},
        "edges_before": {"type": "integer"},
        "edges_after": {"type": "integer"},
        "added": _str_list,
        "circumference": {"type": "integer"},
    },
}

SCHEMAS = {
    "analyze": ANALYZE,
    "verify": VERIFY,
    "construct": CONSTRUCT,
    "structure": STRUCTURE,
    "enumerate": ENUMERATE,
    "saturate": SATURATE,
}
