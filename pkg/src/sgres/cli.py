"""Command-line interface.

Subcommands: classify, resolve, hilbert, pf, frobenius, indisp, scan,
selftest.  Exit codes: 0 success, 1 usage or invalid input, 2 unsupported
class or embedding dimension, 3 internal verification failure.

JSON output is deterministic: keys sorted, polynomial strings canonical.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import sys

from .errors import (
    ConsistencyFailure,
    CrossValidationMismatch,
    DegreeMismatch,
    NotInClass,
    SgresError,
    UnsupportedClass,
    UnsupportedEmbeddingDimension,
    VerificationFailure,
)
from .indispensability import strong_indisp
from .invariants import hilbert_series, k_polynomial, pf_from_betti
from .presentation import SemigroupClass, classify
from .resolution import resolve
from .scan import (
    classify_with_permutations,
    scan_bresinsky,
    scan_generator_range,
    scan_komeda,
)
from .selftest import run_selftest
from .semigroup import NumericalSemigroup
from .polyalg import poly_to_str

_UNSUPPORTED = (UnsupportedClass, UnsupportedEmbeddingDimension, NotInClass)
_INTERNAL = (
    VerificationFailure,
    CrossValidationMismatch,
    ConsistencyFailure,
    DegreeMismatch,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_generators(text: str) -> NumericalSemigroup:
    try:
        gens = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise _UsageError(f"cannot parse generators {text!r}") from None
    return NumericalSemigroup(gens)


def _parse_ranges(text: str, count: int) -> list[tuple[int, int]]:
    parts = text.split(",")
    if len(parts) != count:
        raise _UsageError(f"expected {count} comma-separated ranges, got {len(parts)}")
    out = []
    for part in parts:
        lo, _, hi = part.partition(":")
        try:
            lo_i = int(lo)
            hi_i = int(hi) if hi else lo_i
        except ValueError:
            raise _UsageError(f"cannot parse range {part!r}") from None
        out.append((lo_i, hi_i))
    return out


def _data_json(data) -> dict | None:
    if data is None:
        return None
    payload = dataclasses.asdict(data)
    if hasattr(data, "case"):
        payload["case"] = data.case
        if data.alternate is not None:
            payload["alternate"]["case"] = data.alternate.case
    return payload


def _cmd_classify(args) -> int:
    S = _parse_generators(args.generators)
    c = classify(S)
    payload = {
        "generators": list(S.generators),
        "class": c.tag.value,
        "data": _data_json(c.data),
    }
    lines = [f"generators: {','.join(map(str, S.generators))}", f"class: {c.tag.value}"]
    if c.tag is SemigroupClass.UNSUPPORTED and S.embedding_dimension == 4:
        alt = classify_with_permutations(S.generators)
        if alt.tag is not SemigroupClass.UNSUPPORTED:
            note = (
                f"reordering the generators as {','.join(map(str, alt.semigroup.generators))}"
                f" fits class {alt.tag.value}"
            )
            payload["note"] = note
            lines.append(f"note: {note}")
    if c.data is not None:
        for key, value in sorted(_data_json(c.data).items()):
            lines.append(f"  {key}: {value}")
    if args.text:
        for line in lines:
            print(line)
    else:
        print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_resolve(args) -> int:
    S = _parse_generators(args.generators)
    R = resolve(S)
    if args.text:
        weights = S.generators
        print(f"class: {R.class_tag.value}")
        print(f"betti degrees: {[list(level) for level in R.betti_degrees]}")
        for index, m in enumerate(R.maps, start=1):
            print(f"phi_{index} ({m.num_rows}x{m.num_cols}):")
            cells = [[poly_to_str(p, weights) for p in row] for row in m.entries]
            widths = [max(len(cells[r][c]) for r in range(m.num_rows)) for c in range(m.num_cols)]
            for row in cells:
                print("  [ " + "  ".join(cell.ljust(w) for cell, w in zip(row, widths)) + " ]")
    else:
        print(json.dumps(R.to_json(), sort_keys=True))
    return 0


def _cmd_hilbert(args) -> int:
    S = _parse_generators(args.generators)
    R = resolve(S)
    degree = args.max_degree
    if degree is None:
        degree = S.frobenius() + S.generator_sum + 5
    series = hilbert_series(R, degree)
    matches = all(c == (1 if S.contains(d) else 0) for d, c in enumerate(series))
    numerator = k_polynomial(R)
    if args.text:
        print(f"numerator: {numerator.as_string()}")
        print(f"max degree: {degree}")
        print(f"series matches membership indicator: {matches}")
    else:
        print(
            json.dumps(
                {
                    "generators": list(S.generators),
                    "kpolynomial": numerator.to_json(),
                    "max_degree": degree,
                    "series": series,
                    "matches_membership": matches,
                },
                sort_keys=True,
            )
        )
    return 3 if not matches else 0


def _pf_payload(S: NumericalSemigroup):
    R = resolve(S)
    definition = S.pseudofrobenius()
    betti = pf_from_betti(R)
    return definition, betti


def _cmd_pf(args) -> int:
    S = _parse_generators(args.generators)
    definition, betti = _pf_payload(S)
    match = definition == betti
    if args.text:
        print(f"pf (definition): {definition}")
        print(f"pf (betti):      {betti}")
        print(f"match: {match}")
    else:
        print(
            json.dumps(
                {
                    "generators": list(S.generators),
                    "pf_definition": definition,
                    "pf_betti": betti,
                    "match": match,
                },
                sort_keys=True,
            )
        )
    return 0 if match else 3


def _cmd_frobenius(args) -> int:
    S = _parse_generators(args.generators)
    definition, betti = _pf_payload(S)
    match = definition[-1] == betti[-1]
    if args.text:
        print(f"frobenius (definition): {definition[-1]}")
        print(f"frobenius (betti):      {betti[-1]}")
        print(f"match: {match}")
    else:
        print(
            json.dumps(
                {
                    "generators": list(S.generators),
                    "frobenius_definition": definition[-1],
                    "frobenius_betti": betti[-1],
                    "match": match,
                },
                sort_keys=True,
            )
        )
    return 0 if match else 3


def _cmd_indisp(args) -> int:
    S = _parse_generators(args.generators)
    c = classify(S)
    if c.tag is SemigroupClass.UNSUPPORTED:
        raise UnsupportedClass(f"no indispensability criterion for class Unsupported")
    report = strong_indisp(S, c)
    payload = {"generators": list(S.generators), "class": c.tag.value}
    payload.update(report.to_json())
    if args.text:
        print(f"class: {c.tag.value}")
        print(f"method: {report.method.value}")
        print(f"strongly indispensable: {report.verdict}")
        for w in report.witnesses:
            print(f"  witness: level {w.level}, pair {w.pair}, diff {w.diff} in S")
    else:
        print(json.dumps(payload, sort_keys=True))
    return 0


def _witness_text(witnesses) -> str:
    if not witnesses:
        return ""
    w = witnesses[0]
    return f"level={w['level']};pair=({w['pair'][0]},{w['pair'][1]});diff={w['diff']}"


def _cmd_scan(args) -> int:
    if args.gens_max is not None:
        records = scan_generator_range(args.gens_max, class_filter=args.cls)
    elif args.komeda is not None:
        records = scan_komeda(_parse_ranges(args.komeda, 5), class_filter=args.cls)
    elif args.bresinsky is not None:
        records = scan_bresinsky(_parse_ranges(args.bresinsky, 8), class_filter=args.cls)
    else:
        raise _UsageError("scan needs one of --gens-max, --komeda, --bresinsky")
    if args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(["generators", "class", "frobenius", "type", "verdict", "witness"])
        for record in records:
            writer.writerow(
                [
                    ",".join(map(str, record["generators"])),
                    record["class"],
                    record["frobenius"],
                    record["type"],
                    record["strongly_indispensable"],
                    _witness_text(record["witnesses"]),
                ]
            )
    else:
        for record in records:
            print(json.dumps(record, sort_keys=True))
    return 0


def _cmd_selftest(args) -> int:
    results = run_selftest()
    failures = 0
    for result in results:
        if result.ok:
            print(f"PASS {result.name}")
        else:
            failures += 1
            print(f"FAIL {result.name}: expected {result.expected}, got {result.got}")
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return 3 if failures else 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="sgres", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    for name, handler, help_text in (
        ("classify", _cmd_classify, "class and defining parameters"),
        ("resolve", _cmd_resolve, "graded minimal free resolution"),
        ("hilbert", _cmd_hilbert, "Hilbert series numerator and expansion"),
        ("pf", _cmd_pf, "pseudofrobenius numbers by both routes"),
        ("frobenius", _cmd_frobenius, "Frobenius number by both routes"),
        ("indisp", _cmd_indisp, "strong indispensability report"),
    ):
        p = add(name, handler, help_text)
        p.add_argument("generators", help="comma-separated generators, e.g. 7,9,8,13")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="JSON output (default)")
        fmt.add_argument("--text", action="store_true", help="human-readable output")
        if name == "hilbert":
            p.add_argument("--max-degree", type=int, default=None)

    p = add("scan", _cmd_scan, "stream records for a family of semigroups")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--gens-max", type=int, default=None, metavar="M",
                        help="all minimal generator tuples with entries <= M, dimension 2..4")
    source.add_argument("--komeda", default=None, metavar="RANGES",
                        help="5 ranges lo:hi for (a1,a2,a3,a4,a21)")
    source.add_argument("--bresinsky", default=None, metavar="RANGES",
                        help="8 ranges lo:hi for (a21,a31,a32,a42,a13,a43,a14,a24)")
    p.add_argument("--class", dest="cls", default=None, help="filter by class tag")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--jsonl", action="store_true", help="one JSON object per line (default)")
    fmt.add_argument("--csv", action="store_true", help="CSV output")

    add("selftest", _cmd_selftest, "run the embedded example table")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except _UNSUPPORTED as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 2
    except _INTERNAL as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 3
    except SgresError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
