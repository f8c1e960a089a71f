"""Command-line entry point.

Subcommands:

* ``kb-validate PATH`` -- exit 0 silently when the tree is valid,
  otherwise print one violation per line and exit 1.
* ``kb-render PATH`` -- print one rendered path statement per leaf,
  optionally filtered by verdict and/or provenance.
* ``compare BUNDLE_DIR`` -- run the three-stage pipeline on a bundle
  directory and write the report (text, csv or json).
* ``serve`` -- run the walkthrough HTTP service.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ethicskb.errors import EthicsKbError, ValidationError
from ethicskb.kb.engine import enumerate_leaves, filter_by_provenance
from ethicskb.kb.loader import load_tree
from ethicskb.kb.model import DeonticVerdict
from ethicskb.pipeline.config import MergeConfig
from ethicskb.pipeline.report import format_table
from ethicskb.pipeline.run import load_bundle, run_pipeline


def _threshold(text: str) -> float | int:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("threshold must be positive")
    return int(value) if value >= 1 and value == int(value) else value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ethicskb",
        description="Deontic knowledge-base walkthroughs and observation-set comparison",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    validate = sub.add_parser("kb-validate", help="validate a tree document")
    validate.add_argument("path", type=Path)

    render = sub.add_parser("kb-render", help="render every path statement of a tree")
    render.add_argument("path", type=Path)
    render.add_argument(
        "--verdict",
        choices=[v.value for v in DeonticVerdict],
        help="only leaves with this verdict",
    )
    render.add_argument(
        "--provenance",
        help="comma-separated provenance values to keep (e.g. literature)",
    )

    compare = sub.add_parser("compare", help="run the comparison pipeline on a bundle")
    compare.add_argument("bundle", type=Path, help="bundle directory")
    compare.add_argument("--broad-threshold", type=_threshold, default=None)
    compare.add_argument("--weight-unique", type=float, default=1.0)
    compare.add_argument("--weight-plus-alpha", type=float, default=1.0)
    compare.add_argument("--format", choices=["text", "csv", "json"], default="text")
    compare.add_argument("--out", type=Path, help="write the report here instead of stdout")

    serve = sub.add_parser("serve", help="run the walkthrough HTTP service")
    serve.add_argument("--addr", default="127.0.0.1:8000", help="host:port to bind")
    serve.add_argument(
        "--trees", type=Path, default=Path("fixtures/kb"), help="directory of tree documents"
    )
    serve.add_argument(
        "--data-dir", type=Path, default=Path("data/sessions"),
        help="directory for session event logs",
    )
    serve.add_argument(
        "--ui", type=Path, default=Path("frontend/dist"),
        help="static UI directory served at / (skipped when absent)",
    )
    return parser


def _cmd_kb_validate(args) -> int:
    try:
        load_tree(args.path)
    except ValidationError as exc:
        for violation in exc.violations:
            print(f"{args.path}: {violation}", file=sys.stderr)
        return 1
    except EthicsKbError as exc:
        print(f"{args.path}: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_kb_render(args) -> int:
    try:
        tree = load_tree(args.path)
        if args.provenance:
            allowed = {part.strip() for part in args.provenance.split(",") if part.strip()}
            tree = filter_by_provenance(tree, allowed)
        verdict = DeonticVerdict(args.verdict) if args.verdict else None
        for statement in enumerate_leaves(tree, verdict):
            print(statement.rendered_text)
    except (EthicsKbError, ValueError) as exc:
        print(f"{args.path}: {exc}", file=sys.stderr)
        return 1
    return 0


def _cmd_compare(args) -> int:
    config = MergeConfig(
        broad_link_threshold=args.broad_threshold,
        weight_unique=args.weight_unique,
        weight_plus_alpha=args.weight_plus_alpha,
    )
    try:
        bundle = load_bundle(args.bundle)
        table = run_pipeline(bundle, config)
    except EthicsKbError as exc:
        print(f"{args.bundle}: {exc}", file=sys.stderr)
        return 1
    report = format_table(table, args.format)
    if args.out:
        args.out.write_text(report, encoding="utf-8")
    else:
        sys.stdout.write(report)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from ethicskb.service.app import create_app

    host, _, port_text = args.addr.partition(":")
    port = int(port_text) if port_text else 8000
    ui_dir = args.ui if args.ui and Path(args.ui).is_dir() else None
    app = create_app(trees_dir=args.trees, data_dir=args.data_dir, ui_dir=ui_dir)
    uvicorn.run(app, host=host or "127.0.0.1", port=port, log_level="info")
    return 0


_COMMANDS = {
    "kb-validate": _cmd_kb_validate,
    "kb-render": _cmd_kb_render,
    "compare": _cmd_compare,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
