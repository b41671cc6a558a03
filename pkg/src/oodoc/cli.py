"""Command-line front end: scan, parse, model, serialize, document, evaluate.

Exit codes: 0 success, 1 usage error, 2 input or parse error, 3 evaluation
threshold not met.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .documents import (
    DOCUMENT_KINDS,
    PER_CLASS_KINDS,
    generate_documents,
    merge_per_class_documents,
)
from .dot import serialize_dot
from .errors import (
    ConsistencyError,
    InputError,
    ModelError,
    OodocError,
    ParseFailure,
    SchemaError,
)
from .evaluation import extract_links, format_report, precision_recall
from .metrics import format_metrics, metrics_json, project_metrics
from .model import Project, build_model, resolve_references
from .parsing import parse_files
from .sources import DEFAULT_EXTENSION, scan_directory
from .xmlio import parse_model, serialize_model

RENDERER_ENV_VAR = "OODOC_RENDERER"


@dataclass
class RunConfig:
    input_root: str
    output_dir: str = "out"
    project_name: str = ""
    source_extension: str = DEFAULT_EXTENSION
    documents: tuple[str, ...] = DOCUMENT_KINDS
    render: bool = False
    renderer_path: str | None = None
    include_unresolved: bool = False
    merge_method_docs: bool = False
    strict: bool = False
    jobs: int = field(default_factory=lambda: min(8, os.cpu_count() or 1))


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _parse_document_list(value: str) -> tuple[str, ...]:
    if value == "all":
        return DOCUMENT_KINDS
    kinds = tuple(k.strip() for k in value.split(",") if k.strip())
    for kind in kinds:
        if kind not in DOCUMENT_KINDS:
            raise argparse.ArgumentTypeError(
                f"unknown document kind {kind!r} (choose from {', '.join(DOCUMENT_KINDS)})"
            )
    if not kinds:
        raise argparse.ArgumentTypeError("document list must not be empty")
    return kinds


def _add_input_options(sub: argparse.ArgumentParser):
    sub.add_argument("input", help="directory containing the source files")
    sub.add_argument("--name", default=None, help="project name (default: input directory name)")
    sub.add_argument(
        "--ext",
        default=DEFAULT_EXTENSION,
        help=f"source file extension (default: {DEFAULT_EXTENSION})",
    )
    sub.add_argument("--jobs", type=int, default=min(8, os.cpu_count() or 1),
                     help="parallel parsing workers")
    sub.add_argument("--strict", action="store_true",
                     help="fail (exit 2) when any source file cannot be parsed")


def build_arg_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="oodoc",
                             description="Document object-oriented source code as "
                                         "XML, metrics and DOT graph documents.")
    subs = parser.add_subparsers(dest="command", required=True)

    analyze = subs.add_parser("analyze", help="run the full pipeline")
    _add_input_options(analyze)
    analyze.add_argument("-o", "--output", default="out", help="output directory")
    analyze.add_argument("--documents", type=_parse_document_list, default=DOCUMENT_KINDS,
                         help="comma-separated document kinds, or 'all'")
    analyze.add_argument("--include-unresolved", action="store_true",
                         help="show unresolved relations in the method dependency document")
    analyze.add_argument("--merge-method-docs", action="store_true",
                         help="one combined file for per-class method documents")
    analyze.add_argument("--render", action="store_true",
                         help="run the external DOT renderer on every generated document")
    analyze.add_argument("--renderer", default=None,
                         help=f"renderer executable (default: ${RENDERER_ENV_VAR})")

    metrics = subs.add_parser("metrics", help="print project size metrics")
    _add_input_options(metrics)
    metrics.add_argument("--json", dest="json_path", default=None,
                         help="also write a machine-readable record file")

    document = subs.add_parser("document", help="generate selected documents only")
    _add_input_options(document)
    document.add_argument("-o", "--output", default="out", help="output directory")
    document.add_argument("--documents", type=_parse_document_list, required=True,
                          help="comma-separated document kinds, or 'all'")
    document.add_argument("--include-unresolved", action="store_true")
    document.add_argument("--merge-method-docs", action="store_true")

    evaluate = subs.add_parser("evaluate", help="precision/recall of a model against a reference")
    evaluate.add_argument("--retrieved", required=True, help="extracted model XML file")
    evaluate.add_argument("--reference", required=True, help="gold-standard model XML file")
    evaluate.add_argument("--fail-under", nargs=2, type=float, metavar=("PRECISION", "RECALL"),
                          default=None, help="exit 3 when either measure is below its threshold")

    render = subs.add_parser("render", help="render existing .dot files to .svg")
    render.add_argument("docs_dir", help="directory containing .dot files")
    render.add_argument("--renderer", default=None,
                        help=f"renderer executable (default: ${RENDERER_ENV_VAR})")
    render.add_argument("--strict", action="store_true",
                        help="fail (exit 2) when the renderer fails")

    return parser


def _config_from_args(args) -> RunConfig:
    name = args.name if args.name is not None else Path(args.input).name
    return RunConfig(
        input_root=args.input,
        output_dir=getattr(args, "output", "out"),
        project_name=name,
        source_extension=args.ext,
        documents=tuple(getattr(args, "documents", DOCUMENT_KINDS)),
        include_unresolved=getattr(args, "include_unresolved", False),
        merge_method_docs=getattr(args, "merge_method_docs", False),
        render=getattr(args, "render", False),
        renderer_path=getattr(args, "renderer", None),
        strict=args.strict,
        jobs=max(1, args.jobs),
    )


def load_project(config: RunConfig):
    """Scan, parse (with per-file isolation), build and resolve."""
    files = scan_directory(config.input_root, config.source_extension)
    if not files:
        raise InputError(
            f"no source files with extension {config.source_extension!r} "
            f"under {config.input_root}"
        )
    trees, failures = parse_files(files, config.jobs)
    parsed = {t.path for t in trees}
    analyzed = [f for f in files if f.path in parsed]
    project = build_model(trees, analyzed, config.project_name)
    resolve_references(project)
    warnings = [w for t in trees for w in t.warnings]
    return project, failures, warnings


def _report_parse_issues(failures, warnings) -> None:
    for w in warnings:
        print(f"oodoc: warning: {w}", file=sys.stderr)
    for f in failures:
        print(f"oodoc: parse failure: {f}", file=sys.stderr)


def _write_documents(project: Project, config: RunConfig, docs_dir: Path) -> list[Path]:
    docs_dir.mkdir(parents=True, exist_ok=True)
    generated = generate_documents(project, config.documents, config.include_unresolved)
    written: list[Path] = []
    for kind in config.documents:
        result = generated[kind]
        if kind in PER_CLASS_KINDS:
            parts = result
            if config.merge_method_docs:
                graph = merge_per_class_documents(kind, parts, project.name)
                path = docs_dir / f"{kind}.dot"
                path.write_text(serialize_dot(graph), encoding="utf-8")
                written.append(path)
            else:
                subdir = docs_dir / kind
                subdir.mkdir(parents=True, exist_ok=True)
                for qname, graph in parts:
                    path = subdir / f"{qname}.dot"
                    path.write_text(serialize_dot(graph), encoding="utf-8")
                    written.append(path)
        else:
            path = docs_dir / f"{kind}.dot"
            path.write_text(serialize_dot(result), encoding="utf-8")
            written.append(path)
    return written


def _resolve_renderer(explicit: str | None) -> str | None:
    return explicit or os.environ.get(RENDERER_ENV_VAR)


def _render_files(renderer: str, dot_files: list[Path], strict: bool) -> int:
    status = 0
    for dot_path in dot_files:
        svg_path = dot_path.with_suffix(".svg")
        try:
            result = subprocess.run(
                [renderer, "-Tsvg", str(dot_path), "-o", str(svg_path)],
                capture_output=True,
                text=True,
            )
        except OSError as exc:
            print(f"oodoc: warning: renderer failed for {dot_path}: {exc}", file=sys.stderr)
            status = 2
            continue
        if result.returncode != 0:
            print(
                f"oodoc: warning: renderer exited with {result.returncode} for {dot_path}",
                file=sys.stderr,
            )
            status = 2
    return status if strict else 0


def run_analyze(args) -> int:
    config = _config_from_args(args)
    project, failures, warnings = load_project(config)
    _report_parse_issues(failures, warnings)
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "model.xml").write_text(serialize_model(project), encoding="utf-8")
    metrics_text = format_metrics(project_metrics(project))
    (out / "metrics.txt").write_text(metrics_text, encoding="utf-8")
    sys.stdout.write(metrics_text)
    written = _write_documents(project, config, out / "docs")
    if config.render:
        renderer = _resolve_renderer(config.renderer_path)
        if renderer is None:
            print(
                f"oodoc: error: --render needs --renderer or ${RENDERER_ENV_VAR}",
                file=sys.stderr,
            )
            return 1
        render_status = _render_files(renderer, written, config.strict)
        if render_status:
            return render_status
    if failures and config.strict:
        return 2
    return 0


def run_metrics(args) -> int:
    config = _config_from_args(args)
    project, failures, warnings = load_project(config)
    _report_parse_issues(failures, warnings)
    record = project_metrics(project)
    sys.stdout.write(format_metrics(record))
    if args.json_path:
        Path(args.json_path).write_text(metrics_json(record), encoding="utf-8")
    if failures and config.strict:
        return 2
    return 0


def run_document(args) -> int:
    config = _config_from_args(args)
    project, failures, warnings = load_project(config)
    _report_parse_issues(failures, warnings)
    _write_documents(project, config, Path(config.output_dir) / "docs")
    if failures and config.strict:
        return 2
    return 0


def run_evaluate(args) -> int:
    retrieved_doc = _read_text(args.retrieved)
    reference_doc = _read_text(args.reference)
    retrieved = extract_links(parse_model(retrieved_doc))
    reference = extract_links(parse_model(reference_doc))
    report = precision_recall(retrieved, reference)
    sys.stdout.write(format_report(report))
    if args.fail_under is not None:
        precision_floor, recall_floor = args.fail_under
        if float(report.precision) < precision_floor or float(report.recall) < recall_floor:
            print("oodoc: thresholds not met", file=sys.stderr)
            return 3
    return 0


def run_render(args) -> int:
    renderer = _resolve_renderer(args.renderer)
    if renderer is None:
        print(f"oodoc: error: render needs --renderer or ${RENDERER_ENV_VAR}", file=sys.stderr)
        return 1
    docs_dir = Path(args.docs_dir)
    if not docs_dir.is_dir():
        raise InputError(f"not a readable directory: {docs_dir}")
    dot_files = sorted(docs_dir.rglob("*.dot"), key=lambda p: p.as_posix())
    if not dot_files:
        raise InputError(f"no .dot files under {docs_dir}")
    return _render_files(renderer, dot_files, args.strict)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


_COMMANDS = {
    "analyze": run_analyze,
    "metrics": run_metrics,
    "document": run_document,
    "evaluate": run_evaluate,
    "render": run_render,
}


def main(argv=None) -> int:
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code else 0
    try:
        return _COMMANDS[args.command](args)
    except (InputError, ParseFailure, ModelError, SchemaError, ConsistencyError) as exc:
        print(f"oodoc: error: {exc}", file=sys.stderr)
        return 2
    except OodocError as exc:
        print(f"oodoc: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
