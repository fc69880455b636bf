"""Canonical JSON documents for every report type, with schema validation.

Documents are rendered with sorted keys and a fixed indent so identical
inputs always produce byte-identical output.  Rationals are serialized as
strings ("5", "-3/2") and parsed back exactly.
"""

import json
from fractions import Fraction

import jsonschema

from .connectivity import ConditionReport
from .construction import BorderClassification, CertificateVerdicts, CyclePairCertificate
from .errors import MalformedInput
from .graph import Network, SimplePath
from .measurement import IdentifiabilityReport, MeasurementMatrix, TransformedMatrix
from .simulation import RoundTripReport


def rational(value: Fraction) -> str:
    return str(Fraction(value))


def parse_rational(text) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise MalformedInput(f"not a rational: {text!r}") from exc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _schema_id(kind: str) -> str:
    return f"tomolink/{kind}/v1"


def graph_document(net: Network) -> dict:
    return {
        "nodes": list(net.nodes),
        "links": [list(lk) for lk in net.links],
        "monitors": list(net.monitors),
    }


def conditions_document(report: ConditionReport) -> dict:
    return {
        "schema": _schema_id("conditions"),
        "method": report.method_tag,
        "condition_one": {
            "passed": report.condition_one.passed,
            "failing_links": [list(lk) for lk in report.condition_one.failing_links],
        },
        "condition_two": {
            "passed": report.condition_two.passed,
            "witness": (list(report.condition_two.witness)
                        if report.condition_two.witness else None),
        },
        "satisfied": report.satisfied,
    }


def paths_document(paths) -> dict:
    return {
        "schema": _schema_id("paths"),
        "count": len(paths),
        "paths": [list(p.nodes) for p in paths],
    }


def matrix_csv(rows) -> str:
    return "\n".join(",".join(rational(x) for x in row) for row in rows) + "\n"


def transform_document(matrix: MeasurementMatrix,
                       transformed: TransformedMatrix) -> dict:
    k1, k2 = transformed.k1, transformed.k2
    total = len(transformed.rows)
    return {
        "schema": _schema_id("transform"),
        "columns": [list(lk) for lk in transformed.column_labels],
        "column_blocks": {
            "m1_exterior": [0, k1],
            "m2_exterior": [k1, k1 + k2],
            "interior": [k1 + k2, k1 + k2 + transformed.k_h],
        },
        "row_blocks": {
            "top": [0, k2],
            "tee": [k2, k2 + k1 - 1],
            "low": [k2 + k1 - 1, total],
        },
        "csv": matrix_csv(transformed.rows),
        "provenance": [[[idx, coeff] for idx, coeff in prov]
                       for prov in transformed.row_provenance],
        "path_count": len(matrix.rows),
    }


def identifiability_document(report: IdentifiabilityReport) -> dict:
    links = []
    for lk in sorted(report.per_link):
        entry = {
            "link": list(lk),
            "identifiable": report.per_link[lk],
            "recovered": None,
        }
        if report.recovered is not None and lk in report.recovered:
            entry["recovered"] = rational(report.recovered[lk])
        links.append(entry)
    return {
        "schema": _schema_id("identifiability"),
        "conditions": conditions_document(report.conditions),
        "rank": report.rank,
        "links": links,
        "measurements_supplied": report.recovered is not None,
    }


def _certificate_body(cert: CyclePairCertificate) -> dict:
    return {
        "v": cert.v,
        "w": cert.w,
        "c1": list(cert.c1.cycle),
        "c2": list(cert.c2),
        "p1": list(cert.p1.nodes),
        "p2": list(cert.p2.nodes),
        "monitor_assignment": list(cert.monitor_assignment),
    }


def certificate_document(cert: CyclePairCertificate,
                         verdicts: CertificateVerdicts) -> dict:
    return {
        "schema": _schema_id("certificate"),
        **_certificate_body(cert),
        "verdicts": [{"property": name, "ok": ok} for name, ok in verdicts.items()],
        "all_ok": verdicts.all_ok,
    }


def classification_document(classification: BorderClassification) -> dict:
    return {
        "schema": _schema_id("classification"),
        "verdict": classification.verdict,
        "note": classification.note,
        "shared_node": classification.shared_node,
        "witness": (_certificate_body(classification.witness)
                    if classification.witness else None),
    }


def roundtrip_document(report: RoundTripReport) -> dict:
    links = []
    for lk in sorted(report.per_link):
        outcome = report.per_link[lk]
        links.append({
            "link": list(lk),
            "assigned": rational(outcome.assigned),
            "recovered": (rational(outcome.recovered)
                          if outcome.recovered is not None else None),
            "identifiable": outcome.identifiable,
        })
    return {
        "schema": _schema_id("roundtrip"),
        "digest": report.digest,
        "conditions": conditions_document(report.conditions),
        "path_count": report.path_count,
        "rank": report.rank,
        "links": links,
        "exact_match": report.exact_match,
    }


_NODE = {"type": "string"}
_LINK = {"type": "array", "items": _NODE, "minItems": 2, "maxItems": 2}
_NODE_LIST = {"type": "array", "items": _NODE}
_RATIONAL = {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"}
_NULLABLE_RATIONAL = {"anyOf": [_RATIONAL, {"type": "null"}]}
_SPAN = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}

_CONDITIONS_BODY = {
    "type": "object",
    "required": ["schema", "method", "condition_one", "condition_two", "satisfied"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": _schema_id("conditions")},
        "method": {"enum": ["CHARACTERIZATION", "BRUTE_FORCE"]},
        "condition_one": {
            "type": "object",
            "required": ["passed", "failing_links"],
            "additionalProperties": False,
            "properties": {
                "passed": {"type": "boolean"},
                "failing_links": {"type": "array", "items": _LINK},
            },
        },
        "condition_two": {
            "type": "object",
            "required": ["passed", "witness"],
            "additionalProperties": False,
            "properties": {
                "passed": {"type": "boolean"},
                "witness": {"anyOf": [_LINK, {"type": "null"}]},
            },
        },
        "satisfied": {"type": "boolean"},
    },
}

_CERTIFICATE_BODY_PROPS = {
    "v": _NODE,
    "w": _NODE,
    "c1": _NODE_LIST,
    "c2": _NODE_LIST,
    "p1": _NODE_LIST,
    "p2": _NODE_LIST,
    "monitor_assignment": _NODE_LIST,
}

SCHEMAS: dict[str, dict] = {
    "graph": {
        "type": "object",
        "required": ["nodes", "links", "monitors"],
        "additionalProperties": False,
        "properties": {
            "nodes": _NODE_LIST,
            "links": {"type": "array", "items": _LINK},
            "monitors": {"type": "array", "items": _NODE, "minItems": 2, "maxItems": 2},
        },
    },
    "conditions": _CONDITIONS_BODY,
    "paths": {
        "type": "object",
        "required": ["schema", "count", "paths"],
        "additionalProperties": False,
        "properties": {
            "schema": {"const": _schema_id("paths")},
            "count": {"type": "integer"},
            "paths": {"type": "array", "items": _NODE_LIST},
        },
    },
    "transform": {
        "type": "object",
        "required": ["schema", "columns", "column_blocks", "row_blocks",
                     "csv", "provenance", "path_count"],
        "additionalProperties": False,
        "properties": {
            "schema": {"const": _schema_id("transform")},
            "columns": {"type": "array", "items": _LINK},
            "column_blocks": {
                "type": "object",
                "required": ["m1_exterior", "m2_exterior", "interior"],
                "additionalProperties": False,
                "properties": {
                    "m1_exterior": _SPAN, "m2_exterior": _SPAN, "interior": _SPAN,
                },
            },
            "row_blocks": {
                "type": "object",
                "required": ["top", "tee", "low"],
                "additionalProperties": False,
                "properties": {"top": _SPAN, "tee": _SPAN, "low": _SPAN},
            },
            "csv": {"type": "string"},
            "provenance": {
                "type": "array",
                "items": {"type": "array", "items": _SPAN},
            },
            "path_count": {"type": "integer"},
        },
    },
    "identifiability": {
        "type": "object",
        "required": ["schema", "conditions", "rank", "links", "measurements_supplied"],
        "additionalProperties": False,
        "properties": {
            "schema": {"const": _schema_id("identifiability")},
            "conditions": _CONDITIONS_BODY,
            "rank": {"type": "integer"},
            "links": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["link", "identifiable", "recovered"],
                    "additionalProperties": False,
                    "properties": {
                        "link": _LINK,
                        "identifiable": {"type": "boolean"},
                        "recovered": _NULLABLE_RATIONAL,
                    },
                },
            },
            "measurements_supplied": {"type": "boolean"},
        },
    },
    "certificate": {
        "type": "object",
        "required": ["schema", "v", "w", "c1", "c2", "p1", "p2",
                     "monitor_assignment", "verdicts", "all_ok"],
        "additionalProperties": False,
        "properties": {
            "schema": {"const": _schema_id("certificate")},
            **_CERTIFICATE_BODY_PROPS,
            "verdicts": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["property", "ok"],
                    "additionalProperties": False,
                    "properties": {
                        "property": {"type": "string"},
                        "ok": {"type": "boolean"},
                    },
                },
            },
            "all_ok": {"type": "boolean"},
        },
    },
    "classification": {
        "type": "object",
        "required": ["schema", "verdict", "note", "shared_node", "witness"],
        "additionalProperties": False,
        "properties": {
            "schema": {"const": _schema_id("classification")},
            "verdict": {"enum": ["NON_BORDER", "BORDER_CLASS_1", "BORDER_CLASS_2"]},
            "note": {"type": "string"},
            "shared_node": {"anyOf": [_NODE, {"type": "null"}]},
            "witness": {
                "anyOf": [
                    {"type": "null"},
                    {
                        "type": "object",
                        "required": list(_CERTIFICATE_BODY_PROPS),
                        "additionalProperties": False,
                        "properties": _CERTIFICATE_BODY_PROPS,
                    },
                ],
            },
        },
    },
    "roundtrip": {
        "type": "object",
        "required": ["schema", "digest", "conditions", "path_count", "rank",
                     "links", "exact_match"],
        "additionalProperties": False,
        "properties": {
            "schema": {"const": _schema_id("roundtrip")},
            "digest": {"type": "string"},
            "conditions": _CONDITIONS_BODY,
            "path_count": {"type": "integer"},
            "rank": {"type": "integer"},
            "links": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["link", "assigned", "recovered", "identifiable"],
                    "additionalProperties": False,
                    "properties": {
                        "link": _LINK,
                        "assigned": _RATIONAL,
                        "recovered": _NULLABLE_RATIONAL,
                        "identifiable": {"type": "boolean"},
                    },
                },
            },
            "exact_match": {"type": "boolean"},
        },
    },
}


def validate_document(doc: dict, kind: str | None = None) -> dict:
    """Validate a document against its schema; returns the document."""
    if kind is None:
        schema_field = doc.get("schema") if isinstance(doc, dict) else None
        if not isinstance(schema_field, str):
            raise MalformedInput("document has no schema field")
        parts = schema_field.split("/")
        if len(parts) != 3 or parts[0] != "tomolink" or parts[2] != "v1":
            raise MalformedInput(f"unknown schema id {schema_field!r}")
        kind = parts[1]
    if kind not in SCHEMAS:
        raise MalformedInput(f"unknown document kind {kind!r}")
    try:
        jsonschema.validate(doc, SCHEMAS[kind])
    except jsonschema.ValidationError as exc:
        raise MalformedInput(f"document does not match {kind} schema: {exc.message}")
    return doc
