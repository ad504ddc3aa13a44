"""JSON encodings of every value type, with schemas for CLI payloads.

Rationals travel as strings ``"p/q"``; output uses sorted keys so identical
inputs give byte-identical documents.
"""

from __future__ import annotations

import json
from fractions import Fraction

import jsonschema

from .brauer import (
    AbstractBrauerClass,
    BrauerClass,
    GlobalBrauerClass,
    TorsionFraction,
    ValidationReport,
    Violation,
)
from .bundles import AsAtom, BsContext, BundleExpr, SplitBundle
from .cohomology import (
    BsWitness,
    CohAtom,
    CohomologyTable,
    GrassWitness,
    NotSplit,
    Split,
    Verdict,
    cotangent_atom,
    line_atom,
)
from .symbols import class_from_invariants, quaternion_class

_INT = {"type": "integer"}
_POS = {"type": "integer", "minimum": 1}
_RATIONAL = {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*-?\d+)?\s*$"}
_WEIGHT = {"type": "array", "items": _INT}

CLASS_SCHEMA = {
    "type": "object",
    "minProperties": 1,
    "maxProperties": 1,
    "properties": {
        "global": {
            "type": "object",
            "required": ["invariants"],
            "properties": {
                "invariants": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["place", "num", "den"],
                        "properties": {
                            "place": {"type": ["string", "integer"]},
                            "num": _INT,
                            "den": _POS,
                        },
                        "additionalProperties": False,
                    },
                }
            },
            "additionalProperties": False,
        },
        "abstract": {
            "type": "object",
            "required": ["period", "index_sequence"],
            "properties": {"period": _POS, "index_sequence": {"type": "array", "items": _INT}},
            "additionalProperties": False,
        },
        "quaternion": {
            "type": "object",
            "required": ["a", "b"],
            "properties": {"a": _RATIONAL, "b": _RATIONAL},
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}

CONTEXT_SCHEMA = {
    "type": "object",
    "required": ["class", "algebra_degree"],
    "properties": {"class": CLASS_SCHEMA, "algebra_degree": _POS, "d": _POS},
    "additionalProperties": False,
}

_AS_ATOM = {
    "type": "object",
    "required": ["a", "j"],
    "properties": {"a": _INT, "j": _INT, "mult": _POS},
    "additionalProperties": False,
}

BUNDLE_SCHEMA = {
    "type": "object",
    "required": ["atoms"],
    "properties": {"atoms": {"type": "array", "items": _AS_ATOM}},
    "additionalProperties": False,
}

SPLIT_SCHEMA = {
    "type": "object",
    "required": ["twists"],
    "properties": {
        "twists": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["t"],
                "properties": {"t": _INT, "mult": _POS},
                "additionalProperties": False,
            },
        }
    },
    "additionalProperties": False,
}

_COH_ATOM = {
    "type": "object",
    "minProperties": 1,
    "maxProperties": 1,
    "properties": {
        "line": {
            "type": "object", "required": ["t"],
            "properties": {"t": _INT, "mult": _POS}, "additionalProperties": False,
        },
        "cotangent": {
            "type": "object", "required": ["p"],
            "properties": {"p": {"type": "integer", "minimum": 0}, "t": _INT, "mult": _POS},
            "additionalProperties": False,
        },
        "schur": {
            "type": "object", "required": ["alpha", "beta"],
            "properties": {"alpha": _WEIGHT, "beta": _WEIGHT, "t": _INT, "mult": _POS},
            "additionalProperties": False,
        },
        "as_atom": _AS_ATOM,
    },
    "additionalProperties": False,
}

ATOMS_SCHEMA = {
    "type": "object",
    "required": ["atoms"],
    "properties": {"atoms": {"type": "array", "items": _COH_ATOM}},
    "additionalProperties": False,
}

INDEX_SEQUENCE_SCHEMA = {
    "type": "object",
    "required": ["period", "index_sequence"],
    "properties": {"period": _INT, "index_sequence": {"type": "array", "items": _INT}},
    "additionalProperties": False,
}


def validate(obj, schema) -> None:
    """Raise ``jsonschema.ValidationError`` if ``obj`` does not match."""
    jsonschema.validate(obj, schema)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# ------------------------------------------------------------------ classes


def encode_class(c: BrauerClass) -> dict:
    if isinstance(c, AbstractBrauerClass):
        return {"abstract": {"period": c.period, "index_sequence": list(c.index_sequence)}}
    return {"global": {"invariants": [
        {"place": str(p), "num": inv.numerator, "den": inv.denominator}
        for p, inv in c.invariants
    ]}}


def decode_class(obj: dict) -> BrauerClass:
    validate(obj, CLASS_SCHEMA)
    if "abstract" in obj:
        body = obj["abstract"]
        return AbstractBrauerClass(body["period"], tuple(body["index_sequence"]))
    if "quaternion" in obj:
        q = obj["quaternion"]
        return quaternion_class(Fraction(q["a"].replace(" ", "")), Fraction(q["b"].replace(" ", "")))
    return class_from_invariants(
        (e["place"], TorsionFraction(e["num"], e["den"])) for e in obj["global"]["invariants"]
    )


# ------------------------------------------------------------------ bundles


def encode_context(ctx: BsContext) -> dict:
    return {"class": encode_class(ctx.brauer_class), "algebra_degree": ctx.algebra_degree, "d": ctx.d}


def decode_context(obj: dict) -> BsContext:
    validate(obj, CONTEXT_SCHEMA)
    return BsContext(decode_class(obj["class"]), obj["algebra_degree"], obj.get("d", 1))


def encode_bundle(e: BundleExpr) -> dict:
    return {"atoms": [{"a": atom.a, "j": atom.j, "mult": m} for atom, m in e.atoms]}


def raw_atoms(obj: dict) -> list[tuple[AsAtom, int]]:
    validate(obj, BUNDLE_SCHEMA)
    return [(AsAtom(j=x["j"], a=x["a"]), x.get("mult", 1)) for x in obj["atoms"]]


def decode_bundle(obj: dict, ctx: BsContext) -> BundleExpr:
    return BundleExpr(ctx, tuple(raw_atoms(obj)))


def encode_split(s: SplitBundle) -> dict:
    return {"twists": [{"t": t, "mult": m} for t, m in s.twists]}


def decode_split(obj: dict) -> SplitBundle:
    validate(obj, SPLIT_SCHEMA)
    return SplitBundle(tuple((x["t"], x.get("mult", 1)) for x in obj["twists"]))


# --------------------------------------------------------------- cohomology


def decode_coh_atoms(obj: dict, ctx: BsContext) -> list:
    validate(obj, ATOMS_SCHEMA)
    out: list = []
    for entry in obj["atoms"]:
        (kind, body), = entry.items()
        mult = body.get("mult", 1)
        if kind == "line":
            out.append(line_atom(ctx, body["t"], mult))
        elif kind == "cotangent":
            out.append(cotangent_atom(body["p"], body.get("t", 0), mult))
        elif kind == "schur":
            out.append(CohAtom(tuple(body["alpha"]), tuple(body["beta"]), body.get("t", 0), mult))
        else:
            out.append((AsAtom(j=body["j"], a=body["a"]), mult))
    return out


def encode_coh_atom(atom) -> dict:
    if isinstance(atom, CohAtom):
        return atom.to_json()
    a, m = atom
    return {"as_atom": {"a": a.a, "j": a.j, "mult": m}}


def decode_table(obj: dict) -> CohomologyTable:
    return CohomologyTable.from_dict({int(k): v for k, v in obj["table"].items()})


def encode_report(r: ValidationReport) -> dict:
    return r.to_json()


def decode_report(obj: dict) -> ValidationReport:
    return ValidationReport(
        obj["period"], tuple(obj["index_sequence"]),
        tuple(Violation(v["constraint"], v["witness"]) for v in obj["violations"]),
    )


def encode_verdict(v: Verdict) -> dict:
    if isinstance(v, NotSplit):
        return {"verdict": "not_split", "witness": v.witness.to_json()}
    dec = encode_bundle(v.decomposition) if v.decomposition is not None else None
    return {"verdict": "split", "decomposition": dec}


def decode_verdict(obj: dict, ctx: BsContext) -> Verdict:
    if obj["verdict"] == "not_split":
        w = obj["witness"]
        if "lambda" in w:
            return NotSplit(GrassWitness(w["r"], tuple(w["lambda"]), w["t"], w["dim"]))
        return NotSplit(BsWitness(w["i"], w["a"], w["j"], w["dim"]))
    dec = obj["decomposition"]
    return Split(decode_bundle(dec, ctx) if dec is not None else None)
