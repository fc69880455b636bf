"""Command-line entry point.

Exit codes: 0 success, 1 validation/precondition error, 2 counterexample
signal (a guaranteed witness was not found), 3 resource ceiling hit.
"""

import argparse
import os
import sys

from . import documents
from .construction import certificate_to_dot, classify_link, find_cycle_pair, verify_certificate
from .connectivity import condition_report
from .errors import (
    CapExceeded,
    MalformedInput,
    NotFound,
    SearchExhausted,
    SearchSpaceTooLarge,
    TomolinkError,
)
from .graph import parse_network
from .measurement import (
    DEFAULT_PATH_CAP,
    block_transform,
    build_measurement_matrix,
    enumerate_simple_paths,
    identify,
)
from .simulation import random_network, round_trip

CEILING_ENV = "TOMOLINK_CEILING"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tomolink", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, needs_input=True):
        p = sub.add_parser(name, help=help_text)
        if needs_input:
            p.add_argument("--input", required=True, help="graph document path")
        p.add_argument("--output", help="write the report here instead of stdout")
        return p

    add("check", "evaluate both connectivity conditions")

    paths = add("paths", "list all simple monitor-to-monitor paths")
    paths.add_argument("--cap", type=int, default=DEFAULT_PATH_CAP)

    transform = add("transform", "export the block-transformed measurement matrix")
    transform.add_argument("--cap", type=int, default=DEFAULT_PATH_CAP)
    transform.add_argument("--csv", help="also write the raw CSV matrix here")

    ident = add("identify", "per-link identifiability report, optional recovery")
    ident.add_argument("--cap", type=int, default=DEFAULT_PATH_CAP)
    ident.add_argument("--measurements",
                       help="JSON array of rationals, one per path in canonical order")

    construct = add("construct", "find a cycle-pair certificate for a link")
    construct.add_argument("--link", required=True, help="interior link as u-v")
    construct.add_argument("--ceiling", type=int)
    construct.add_argument("--dot", help="also write a DOT rendering here")

    classify = add("classify", "border-link classification for a link")
    classify.add_argument("--link", required=True, help="interior link as u-v")
    classify.add_argument("--ceiling", type=int)

    simulate = add("simulate", "generate a network and run a recovery round trip",
                   needs_input=False)
    simulate.add_argument("--nodes", type=int, required=True)
    simulate.add_argument("--extra-links", type=int, default=0)
    simulate.add_argument("--seed", type=int, required=True)

    return parser


def _load_network(path: str):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from exc
    return parse_network(text)


def _parse_link_option(value: str) -> tuple[str, str]:
    parts = value.split("-")
    if len(parts) != 2 or not parts[0] or not parts[1]:
        raise MalformedInput(f"link must be given as u-v, got {value!r}")
    return (parts[0], parts[1])


def _load_measurements(path: str):
    import json

    try:
        with open(path, "r", encoding="utf-8") as handle:
            raw = json.load(handle)
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(raw, list):
        raise MalformedInput("measurements file must hold a JSON array")
    return [documents.parse_rational(entry) for entry in raw]


def _ceiling(args) -> int | None:
    if getattr(args, "ceiling", None) is not None:
        return args.ceiling
    env = os.environ.get(CEILING_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise MalformedInput(f"{CEILING_ENV} must be an integer, got {env!r}") from exc
    return None


def _write_text(path: str, text: str):
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as handle:
        handle.write(text)
    os.replace(tmp, path)


def _dispatch(args) -> dict:
    if args.command == "check":
        net = _load_network(args.input)
        return documents.conditions_document(condition_report(net))
    if args.command == "paths":
        net = _load_network(args.input)
        return documents.paths_document(enumerate_simple_paths(net, args.cap))
    if args.command == "transform":
        net = _load_network(args.input)
        matrix = build_measurement_matrix(net, enumerate_simple_paths(net, args.cap))
        transformed = block_transform(matrix)
        doc = documents.transform_document(matrix, transformed)
        if args.csv:
            _write_text(args.csv, doc["csv"])
        return doc
    if args.command == "identify":
        net = _load_network(args.input)
        measurements = (_load_measurements(args.measurements)
                        if args.measurements else None)
        return documents.identifiability_document(identify(net, measurements, args.cap))
    if args.command == "construct":
        net = _load_network(args.input)
        target = _parse_link_option(args.link)
        cert = find_cycle_pair(net, target, _ceiling(args))
        verdicts = verify_certificate(net, cert)
        if args.dot:
            _write_text(args.dot, certificate_to_dot(net, cert))
        return documents.certificate_document(cert, verdicts)
    if args.command == "classify":
        net = _load_network(args.input)
        target = _parse_link_option(args.link)
        classification = classify_link(net, target, _ceiling(args))
        return documents.classification_document(classification)
    if args.command == "simulate":
        net = random_network(args.nodes, args.extra_links, args.seed)
        return documents.roundtrip_document(round_trip(net, args.seed))
    raise MalformedInput(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc = _dispatch(args)
        documents.validate_document(doc, kind=None if "schema" in doc else "graph")
        text = documents.dumps(doc)
    except (SearchExhausted, NotFound) as exc:
        print(f"counterexample signal: {exc}", file=sys.stderr)
        return 2
    except (CapExceeded, SearchSpaceTooLarge) as exc:
        print(f"resource ceiling: {exc}", file=sys.stderr)
        return 3
    except TomolinkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        _write_text(args.output, text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
