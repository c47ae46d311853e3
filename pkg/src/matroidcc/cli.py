"""Command-line surface: file ingestion, verification sweeps, catalog
generation, and inspection subcommands.

Exit codes: 0 all checks passed, 1 a theory-level assertion failed,
2 input error, 3 a desk-scale cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any

from . import analyze, construct, transform
from .core import Matroid
from .errors import (
    CapExceeded,
    MatroidError,
    ParseError,
    TheoremViolation,
)

REPORT_VERSION = 1

DEFAULT_RANDOM_COUNT = 20


def _exit_code_for(err: MatroidError) -> int:
    if isinstance(err, CapExceeded):
        return 3
    if isinstance(err, TheoremViolation):
        return 1
    return 2


# ---------------------------------------------------------------------------
# File format
# ---------------------------------------------------------------------------


def _require(doc: dict, key: str, path: str) -> Any:
    if key not in doc:
        raise ParseError(f"{path}: missing field {key!r}")
    return doc[key]


def parse_matroid(path: str | Path) -> Matroid:
    """Read a matroid file (circuits, matrix or graph format) and build the
    validated matroid.  Degenerate inputs (empty ground set, rank 0) are
    rejected here."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    fmt = _require(doc, "format", str(path))
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError(f"{path}: name must be a string")
    if name is None:
        name = path.stem

    if fmt == "circuits":
        ground = _require(doc, "ground", str(path))
        circuits = _require(doc, "circuits", str(path))
        if not isinstance(ground, list) or not all(isinstance(x, str) for x in ground):
            raise ParseError(f"{path}: ground must be a list of strings")
        if not ground:
            raise ParseError(f"{path}: empty ground set")
        if not isinstance(circuits, list):
            raise ParseError(f"{path}: circuits must be a list of label lists")
        m = construct.from_circuits(ground, circuits, name=name)
    elif fmt == "matrix":
        p = _require(doc, "field", str(path))
        labels = _require(doc, "labels", str(path))
        rows = _require(doc, "rows", str(path))
        if not isinstance(labels, list) or not labels:
            raise ParseError(f"{path}: labels must be a non-empty list")
        if not isinstance(rows, list):
            raise ParseError(f"{path}: rows must be a list of int lists")
        for row in rows:
            if not isinstance(row, list) or len(row) != len(labels):
                raise ParseError(f"{path}: each row must list one entry per label")
        matrix = construct.MatrixOverGF.from_rows(p, rows)
        m = construct.from_matrix(matrix, labels=labels, name=name)
    elif fmt == "graph":
        vertices = _require(doc, "vertices", str(path))
        edges = _require(doc, "edges", str(path))
        if not isinstance(vertices, int) or not isinstance(edges, list):
            raise ParseError(f"{path}: graph needs an int vertex count and edge list")
        parsed = []
        for e in edges:
            if (
                not isinstance(e, list)
                or len(e) != 3
                or not isinstance(e[0], int)
                or not isinstance(e[1], int)
                or not isinstance(e[2], str)
            ):
                raise ParseError(f"{path}: edges must be [u, v, label] triples")
            parsed.append((e[0], e[1], e[2]))
        m = construct.from_graph(
            construct.GraphSpec(vertex_count=vertices, edges=tuple(parsed)),
            name=name,
        )
    else:
        raise ParseError(f"{path}: unknown format {fmt!r}")
    if m.rank() == 0:
        raise ParseError(f"{path}: degenerate rank-0 matroid rejected")
    return m


def matroid_doc(m: Matroid, name: str | None = None) -> dict:
    """Circuits-format document for a matroid, canonical member order."""
    doc: dict[str, Any] = {"format": "circuits"}
    label = name if name is not None else m.name
    if label:
        doc["name"] = label
    doc["ground"] = list(m.ground.labels)
    doc["circuits"] = [list(c.labels()) for c in m.circuits]
    return doc


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def write_matroid(m: Matroid, path: str | Path, name: str | None = None) -> None:
    Path(path).write_text(_dump(matroid_doc(m, name)), encoding="utf-8")


# ---------------------------------------------------------------------------
# Catalog
# ---------------------------------------------------------------------------


def catalog_documents(seed: int = 1) -> list[tuple[str, dict]]:
    """The standard catalog as (filename, document) pairs, seed-stable."""
    out: list[tuple[str, dict]] = []
    for n in range(4, 11):
        for k in range(1, n):
            m = construct.uniform(n, k)
            out.append((f"u{n}_{k}.json", matroid_doc(m, name=f"u{n}_{k}")))

    def graph_doc(spec: construct.GraphSpec, name: str) -> dict:
        return {
            "format": "graph",
            "name": name,
            "vertices": spec.vertex_count,
            "edges": [[u, v, lab] for u, v, lab in spec.edges],
        }

    def matrix_doc(matrix: construct.MatrixOverGF, labels: list[str], name: str) -> dict:
        rows = [
            [matrix.columns[j][i] for j in range(len(matrix.columns))]
            for i in range(matrix.rows)
        ]
        return {
            "format": "matrix",
            "name": name,
            "field": matrix.p,
            "labels": labels,
            "rows": rows,
        }

    out.append(("k4.json", graph_doc(construct._complete_graph_spec(4), "k4")))
    out.append(("k5.json", graph_doc(construct._complete_graph_spec(5), "k5")))
    out.append(("wheel3.json", graph_doc(construct._wheel3_spec(), "wheel3")))
    out.append(
        (
            "fano.json",
            matrix_doc(
                construct.MatrixOverGF(p=2, rows=3, columns=construct._binary_columns(3, 7)),
                [str(i) for i in range(1, 8)],
                "fano",
            ),
        )
    )
    out.append(
        (
            "nonfano.json",
            matrix_doc(
                construct.MatrixOverGF(p=3, rows=3, columns=construct._binary_columns(3, 7)),
                [str(i) for i in range(1, 8)],
                "nonfano",
            ),
        )
    )
    out.append(("vamos.json", matroid_doc(construct.named("vamos"), "vamos")))
    for i in range(DEFAULT_RANDOM_COUNT):
        p = 2 if i % 2 == 0 else 3
        n = 6 + (i % 4)
        r = 2 + ((i // 2) % 3)
        inst_seed = seed * 1000 + i
        matrix = construct.random_matrix(inst_seed, n, r, p)
        name = f"rand{i:02d}"
        out.append(
            (
                f"{name}.json",
                matrix_doc(matrix, [str(j) for j in range(1, n + 1)], name),
            )
        )
    return out


def cmd_catalog(args: argparse.Namespace) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    docs = catalog_documents(seed=args.seed)
    for filename, doc in docs:
        (out_dir / filename).write_text(_dump(doc), encoding="utf-8")
    print(f"wrote {len(docs)} matroid files to {out_dir}")
    return 0


# ---------------------------------------------------------------------------
# Verification sweep
# ---------------------------------------------------------------------------


def _witness_dict(cc: analyze.CCIntersection) -> dict:
    return {
        "circuit": list(cc.circuit.labels()),
        "cocircuit": list(cc.cocircuit.labels()),
        "intersection": list(cc.intersection.labels()),
    }


def report_entry_dict(
    report: analyze.ConjectureReport, ms: float | None = None
) -> dict:
    entry: dict[str, Any] = {
        "name": report.name,
        "elements": report.elements,
        "rank": report.rank,
        "circuits": report.circuit_count,
        "cocircuits": report.cocircuit_count,
        "achieved_sizes": list(report.achieved),
        "conjecture": [
            {
                "k": e.k,
                "oracle_ok": e.oracle_ok,
                "witness": _witness_dict(e.chain.final),
            }
            for e in report.entries
        ],
        "out_of_scope": [
            {"k": k, "oracle_ok": ok} for k, ok in report.out_of_scope
        ],
        "property_suites": {
            name: suite.status for name, suite in report.suites.items()
        },
        "property_exercised": {
            name: dict(sorted(suite.exercised.items()))
            for name, suite in report.suites.items()
        },
    }
    if ms is not None:
        entry["ms"] = round(ms, 3)
    return entry


def _chain_text(chain: analyze.WitnessChain) -> str:
    parts = []
    for step in chain.steps:
        if isinstance(step, analyze.ExtractionStep):
            ox = step.minor
            parts.append(
                f"extract[|E|={ox.minor.size}, del={ox.spec.deleted!r}, "
                f"con={ox.spec.contracted!r}]"
            )
        elif isinstance(step, analyze.OracleStep):
            parts.append(f"oracle[{step.found.intersection!r}]")
        elif isinstance(step, analyze.WitnessStep):
            parts.append(f"witness[{step.found.intersection!r}]")
        elif isinstance(step, analyze.LiftStep):
            parts.append("lift")
    return " -> ".join(parts)


def report_text(report: analyze.ConjectureReport, ms: float) -> str:
    lines = [
        f"== {report.name} ({report.elements} elements, rank {report.rank}, "
        f"{report.circuit_count} circuits, {report.cocircuit_count} cocircuits)"
    ]
    sizes = ",".join(str(s) for s in report.achieved) or "none"
    lines.append(f"   achieved sizes: {sizes}")
    if report.vacuous:
        lines.append("   conjecture vacuous: no intersection of size 4 or more")
    for e in report.entries:
        cc = e.chain.final
        lines.append(
            f"   k={e.k}: oracle ok; {_chain_text(e.chain)}; "
            f"final circuit={cc.circuit!r} cocircuit={cc.cocircuit!r} "
            f"intersection={cc.intersection!r} (size {cc.size})"
        )
    for k, ok in report.out_of_scope:
        lines.append(
            f"   k={k}: beyond verified range; oracle size-{k - 2} check: "
            f"{'ok' if ok else 'NOT ACHIEVED'}"
        )
    if report.entries:
        suites = " ".join(
            f"{name}={suite.status}" for name, suite in report.suites.items()
        )
        lines.append(f"   suites: {suites}")
    lines.append(f"   ({ms:.1f} ms)")
    return "\n".join(lines)


def cmd_verify(args: argparse.Namespace) -> int:
    paths = sorted(str(p) for p in args.paths)
    threads = args.threads if args.threads and args.threads > 0 else (os.cpu_count() or 1)

    def job(path: str):
        start = time.perf_counter()
        m = parse_matroid(path)
        report = analyze.verify_conjecture(m, cap=args.cap)
        return report, (time.perf_counter() - start) * 1000.0

    results: dict[str, tuple[analyze.ConjectureReport, float] | MatroidError] = {}
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = {path: pool.submit(job, path) for path in paths}
        for path in paths:
            try:
                results[path] = futures[path].result()
            except MatroidError as err:
                results[path] = err

    entries = []
    first_error: tuple[str, MatroidError] | None = None
    for path in paths:
        outcome = results[path]
        if isinstance(outcome, MatroidError):
            if first_error is None:
                first_error = (path, outcome)
            continue
        report, ms = outcome
        print(report_text(report, ms))
        entries.append(
            report_entry_dict(report, ms if args.timings else None)
        )
    if args.json:
        doc = {"report_version": REPORT_VERSION, "entries": entries}
        Path(args.json).write_text(_dump(doc), encoding="utf-8")
    if first_error is not None:
        path, err = first_error
        print(f"{path}: {type(err).__name__}: {err}", file=sys.stderr)
        return _exit_code_for(err)
    print(f"verified {len(entries)} matroid(s); all checks passed")
    return 0


# ---------------------------------------------------------------------------
# Inspection
# ---------------------------------------------------------------------------


def _parse_label_sets(arg: str, keys: tuple[str, ...], what: str) -> dict[str, list[str]]:
    out: dict[str, list[str]] = {}
    for chunk in arg.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise ParseError(f"{what}: expected key=labels, got {chunk!r}")
        key, _, value = chunk.partition("=")
        key = key.strip()
        if key not in keys:
            raise ParseError(f"{what}: unknown key {key!r} (expected {keys})")
        out[key] = [x.strip() for x in value.split(",") if x.strip()]
    return out


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_inspect(args: argparse.Namespace) -> int:
    m = parse_matroid(args.path)
    if args.circuits:
        for c in m.circuits:
            print(repr(c))
    elif args.cocircuits:
        for d in transform.cocircuits(m):
            print(repr(d))
    elif args.hyperplanes:
        for h in m.hyperplanes():
            print(repr(h))
    elif args.cc_sizes:
        sizes = analyze.achieved_sizes(m, cap=args.cap)
        print(",".join(str(s) for s in sizes))
    elif args.dual:
        _emit(_dump(matroid_doc(transform.dual(m))), args.out)
    elif args.minor:
        spec_sets = _parse_label_sets(args.minor, ("del", "con"), "--minor")
        spec = transform.MinorSpec(
            m.ground.subset(spec_sets.get("del", [])),
            m.ground.subset(spec_sets.get("con", [])),
        )
        sub = transform.minor(m, spec)
        _emit(_dump(matroid_doc(sub, name=f"{m.name}_minor")), args.out)
    elif args.oxley:
        sets = _parse_label_sets(args.oxley, ("circuit", "cocircuit"), "--oxley")
        if "circuit" not in sets or "cocircuit" not in sets:
            raise ParseError("--oxley needs circuit=... and cocircuit=...")
        ox = analyze.oxley_minor(
            m, m.ground.subset(sets["circuit"]), m.ground.subset(sets["cocircuit"])
        )
        print(f"minor: {ox.minor.size} elements, rank {ox.minor.rank()}, k={ox.k}")
        print(f"deleted: {ox.spec.deleted!r}")
        print(f"contracted: {ox.spec.contracted!r}")
        print(f"X: {ox.x!r}")
        print(f"Y: {ox.y!r}")
    else:
        co = transform.cocircuits(m)
        print(
            f"{m.name}: {m.size} elements, rank {m.rank()}, "
            f"{len(m.circuits)} circuits, {len(co)} cocircuits"
        )
    return 0


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroidcc",
        description="Matroid toolkit: circuit-cocircuit intersection verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="verify inputs and report")
    p_verify.add_argument("paths", nargs="+", help="matroid JSON files")
    p_verify.add_argument("--json", help="write the machine report here")
    p_verify.add_argument("--threads", type=int, default=0, help="worker threads")
    p_verify.add_argument(
        "--cap", type=int, default=analyze.DEFAULT_PAIR_CAP,
        help="max circuit-cocircuit pairs per matroid",
    )
    p_verify.add_argument(
        "--timings", action="store_true",
        help="include per-entry ms in the JSON report (breaks byte determinism)",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_catalog = sub.add_parser("catalog", help="emit the standard matroid catalog")
    p_catalog.add_argument("--out", required=True, help="output directory")
    p_catalog.add_argument("--seed", type=int, default=1, help="random-instance seed base")
    p_catalog.set_defaults(func=cmd_catalog)

    p_inspect = sub.add_parser("inspect", help="inspect one matroid file")
    p_inspect.add_argument("path")
    p_inspect.add_argument("--circuits", action="store_true")
    p_inspect.add_argument("--cocircuits", action="store_true")
    p_inspect.add_argument("--hyperplanes", action="store_true")
    p_inspect.add_argument("--cc-sizes", dest="cc_sizes", action="store_true")
    p_inspect.add_argument("--dual", action="store_true")
    p_inspect.add_argument("--minor", help='minor spec, e.g. "del=a,b;con=c"')
    p_inspect.add_argument(
        "--oxley", help='extraction input, e.g. "circuit=a,b,c,d;cocircuit=c,d,e,f"'
    )
    p_inspect.add_argument("--out", help="write file output here instead of stdout")
    p_inspect.add_argument(
        "--cap", type=int, default=analyze.DEFAULT_PAIR_CAP,
        help="max circuit-cocircuit pairs",
    )
    p_inspect.set_defaults(func=cmd_inspect)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MatroidError as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return _exit_code_for(err)


def run() -> None:
    raise SystemExit(main())
