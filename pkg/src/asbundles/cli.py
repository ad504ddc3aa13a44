"""Command-line front end: JSON in, JSON out.

Exit codes: 0 success, 1 malformed input, 2 domain error (the error object
names the violated constraint and its witness values).
"""

from __future__ import annotations

import argparse
import json
import sys

import jsonschema

from . import brauer, bundles, cohomology, jsonio
from .astype import compute_as_type
from .errors import AsBundlesError

EXIT_OK, EXIT_MALFORMED, EXIT_DOMAIN = 0, 1, 2


class DomainFailure(Exception):
    """A computed result that must be reported with the domain exit code."""

    def __init__(self, payload: dict):
        self.payload = payload


def _read(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _context(args) -> bundles.BsContext:
    if not args.context:
        raise ValueError("--context is required for this subcommand")
    return jsonio.decode_context(_read(args.context))


def _class_cmd(args, payload):
    op = args.op
    if op == "tensor":
        jsonio.validate(payload, {"type": "object", "required": ["classes"],
                                  "properties": {"classes": {"type": "array", "minItems": 2, "maxItems": 2}}})
        c1, c2 = (jsonio.decode_class(c) for c in payload["classes"])
        return jsonio.encode_class(brauer.tensor(c1, c2))
    c = jsonio.decode_class(payload)
    if op == "build":
        return jsonio.encode_class(c)
    if op == "opposite":
        return jsonio.encode_class(brauer.opposite(c))
    if op == "power":
        return jsonio.encode_class(brauer.power(c, args.r))
    if op == "period":
        return {"period": brauer.period(c)}
    return {"index": brauer.index(c, args.r), "r": args.r}


def _astype_cmd(args, payload):
    return compute_as_type(jsonio.decode_class(payload), args.d).to_json()


def _bundle_cmd(args, payload):
    ctx = _context(args)
    op = args.op
    if op == "descend":
        return jsonio.encode_bundle(bundles.descend(jsonio.decode_split(payload), ctx))
    if op == "normalize":
        return jsonio.encode_bundle(bundles.krull_schmidt_normalize(jsonio.raw_atoms(payload), ctx))
    if op == "tensor":
        jsonio.validate(payload, {"type": "object", "required": ["bundles"],
                                  "properties": {"bundles": {"type": "array", "minItems": 2, "maxItems": 2}}})
        e, f = (jsonio.decode_bundle(b, ctx) for b in payload["bundles"])
        return jsonio.encode_bundle(bundles.tensor_bundles(e, f))
    e = jsonio.decode_bundle(payload, ctx)
    if op == "dual":
        return jsonio.encode_bundle(bundles.dual(e))
    if op == "pullback":
        return jsonio.encode_split(bundles.pullback(e))
    return {"rank": bundles.rank(e)}


def _cohomology_cmd(args, payload):
    ctx = _context(args)
    return cohomology.cohomology_of_expr(jsonio.decode_coh_atoms(payload, ctx), ctx).to_json()


def _criterion_cmd(args, payload):
    ctx = _context(args)
    atoms = jsonio.decode_coh_atoms(payload, ctx)
    fn = cohomology.criterion_bs if args.kind == "bs" else cohomology.criterion_grass
    return jsonio.encode_verdict(fn(atoms, ctx, window_scale=args.window_scale, jobs=args.jobs))


def _validate_cmd(args, payload):
    jsonio.validate(payload, jsonio.INDEX_SEQUENCE_SCHEMA)
    report = brauer.validate_index_sequence(payload["period"], payload["index_sequence"])
    if not report.valid:
        raise DomainFailure({"error": {"code": "invalid_index_sequence", "report": report.to_json()}})
    return report.to_json()


def build_parsers() -> tuple:
    """Top-level parser plus one standalone parser per subcommand.

    Subcommands are parsed separately so options may sit anywhere
    between the positional arguments.
    """
    top = argparse.ArgumentParser(
        prog="asbundles",
        description="Brauer classes, AS-types, AS-bundles and splitting criteria.",
    )
    sub = top.add_subparsers(dest="command", required=True)
    parsers = {}

    def add(name, handler, help_):
        sub.add_parser(name, help=help_, add_help=False)
        p = argparse.ArgumentParser(prog=f"asbundles {name}", description=help_)
        p.set_defaults(handler=handler)
        parsers[name] = p
        return p

    p = add("class", _class_cmd, "Brauer-class arithmetic")
    p.add_argument("op", choices=["build", "tensor", "opposite", "power", "period", "index"])
    p.add_argument("--r", type=int, default=1, help="exponent for power/index")

    p = add("astype", _astype_cmd, "AS-type of BS(d, A)")
    p.add_argument("--d", type=int, default=1)

    p = add("bundle", _bundle_cmd, "AS-bundle calculus")
    p.add_argument("op", choices=["normalize", "dual", "tensor", "pullback", "descend", "rank"])

    add("cohomology", _cohomology_cmd, "cohomology table of homogeneous atoms")

    p = add("criterion", _criterion_cmd, "cohomological AS-criteria")
    p.add_argument("kind", choices=["bs", "grass"])
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the sweep")
    p.add_argument("--window-scale", type=int, default=1, help="multiply the twist window")

    add("validate", _validate_cmd, "validate an index sequence")

    for name, p in parsers.items():
        p.add_argument("input", nargs="?", default="-", help="payload JSON file (default: stdin)")
        if name in ("bundle", "cohomology", "criterion"):
            p.add_argument("--context", help="BsContext JSON file")
    return top, parsers


def parse_args(argv=None) -> argparse.Namespace:
    argv = list(sys.argv[1:] if argv is None else argv)
    top, parsers = build_parsers()
    if not argv or argv[0] not in parsers:
        top.parse_args(argv)  # prints usage / help and exits
    return parsers[argv[0]].parse_intermixed_args(argv[1:])


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        # argparse reports usage errors with status 2; those are malformed input here
        return EXIT_MALFORMED if exc.code else EXIT_OK
    try:
        payload = _read(args.input)
        result = args.handler(args, payload)
        code = EXIT_OK
    except DomainFailure as exc:
        result, code = exc.payload, EXIT_DOMAIN
    except AsBundlesError as exc:
        result, code = {"error": exc.to_json()}, EXIT_DOMAIN
    except (ValueError, KeyError, TypeError, OSError, jsonschema.ValidationError) as exc:
        message = exc.message if isinstance(exc, jsonschema.ValidationError) else str(exc)
        result, code = {"error": {"code": "malformed_input", "message": message}}, EXIT_MALFORMED
    out.write(jsonio.dumps(result) + "\n")
    return code


def main() -> None:
    sys.exit(run())
