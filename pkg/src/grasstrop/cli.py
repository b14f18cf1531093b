"""Command-line interface.

Subcommands:
  trees enumerate   list the trivalent trees on n leaves
  trop dissim       dissimilarity vector of an edge weighting
  trop check        test a vector against the four-point condition
  trop reconstruct  rebuild the tree and weights from a vector
  val matrix        valuation matrix of a tree for an edge order
  paper-example     recompute the four-leaf worked example and diff it
                    against the embedded golden text

Exit codes: 0 on success or a verified property, 1 on a failed
verification (a vector outside the tropical Grassmannian, a golden
mismatch), 2 on usage or format errors.  Every input option accepts "-"
for stdin.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import report as report_mod
from .tropical import DissimilarityVector, EdgeWeighting, dissimilarity
from .tropical import is_tropical_point, reconstruct_tree
from .trees import enumerate_trivalent, parse_edge_order
from .trees import tree_from_json, tree_to_json, tree_to_newick
from .valuation import valuation_matrix

DEFAULT_SEED = 1729


@dataclass(frozen=True)
class Config:
    """Resolved command options.

    The seed and sample count are fixed constants so that any sampling
    helper reached from a command is reproducible run to run; no current
    subcommand draws samples.
    """

    input_path: str | None = None
    output_path: str | None = None
    fmt: str | None = None
    seed: int = DEFAULT_SEED
    samples: int = 100


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(cfg: Config, text: str) -> None:
    if cfg.output_path and cfg.output_path != "-":
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args: argparse.Namespace) -> Config:
    return Config(
        input_path=getattr(args, "input", None),
        output_path=getattr(args, "output", None),
        fmt=getattr(args, "format", None),
    )


def _read_vector(cfg: Config) -> DissimilarityVector:
    if cfg.input_path is None:
        raise ValueError("missing --input (use - for stdin)")
    text = _read_text(cfg.input_path)
    fmt = cfg.fmt
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "tsv"
    if fmt == "json":
        return DissimilarityVector.from_json(text)
    return DissimilarityVector.from_tsv(text)


def cmd_trees_enumerate(args: argparse.Namespace) -> int:
    cfg = _config(args)
    trees = enumerate_trivalent(args.n)
    if args.count:
        _emit(cfg, f"{len(trees)}\n")
        return 0
    fmt = cfg.fmt or "json"
    lines = []
    for t in trees:
        lines.append(tree_to_newick(t) if fmt == "newick" else tree_to_json(t))
    _emit(cfg, "\n".join(lines) + "\n")
    return 0


def cmd_trop_dissim(args: argparse.Namespace) -> int:
    cfg = _config(args)
    if cfg.input_path is None:
        raise ValueError("missing --input (use - for stdin)")
    r = EdgeWeighting.from_json_dict(json.loads(_read_text(cfg.input_path)))
    d = dissimilarity(r)
    if (cfg.fmt or "tsv") == "json":
        _emit(cfg, d.to_json() + "\n")
    else:
        _emit(cfg, d.to_tsv() + "\n")
    return 0


def cmd_trop_check(args: argparse.Namespace) -> int:
    cfg = _config(args)
    d = _read_vector(cfg)
    ok, witnesses = is_tropical_point(d)
    if ok:
        lines = ["tropical: yes"]
        lines.extend("  " + w.describe() for w in witnesses)
        _emit(cfg, "\n".join(lines) + "\n")
        return 0
    (w,) = witnesses
    _emit(cfg, "tropical: no\n  " + w.describe() + "\n")
    return 1


def cmd_trop_reconstruct(args: argparse.Namespace) -> int:
    cfg = _config(args)
    d = _read_vector(cfg)
    _, r = reconstruct_tree(d)
    _emit(cfg, json.dumps(r.to_json_dict(), indent=2) + "\n")
    return 0


def cmd_val_matrix(args: argparse.Namespace) -> int:
    cfg = _config(args)
    t = tree_from_json(_read_text(args.tree))
    order = parse_edge_order(t, args.order) if args.order else t.edge_ids
    m = valuation_matrix(t, order)
    _emit(cfg, m.to_tsv() + "\n")
    return 0


def cmd_paper_example(args: argparse.Namespace) -> int:
    cfg = _config(args)
    if args.emit:
        _emit(cfg, report_mod.build_report())
        return 0
    ok, text = report_mod.check_report()
    if ok:
        _emit(cfg, text)
        return 0
    sys.stderr.write(text)
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grasstrop",
        description="Tree-indexed tropical and valuation data "
        "of the Grassmannian of planes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_trees = sub.add_parser("trees", help="tree enumeration")
    trees_sub = p_trees.add_subparsers(dest="subcommand", required=True)
    p_enum = trees_sub.add_parser(
        "enumerate", help="list trivalent trees in canonical order"
    )
    p_enum.add_argument("--n", type=int, required=True, help="number of leaves")
    p_enum.add_argument(
        "--count", action="store_true", help="print only the number of trees"
    )
    p_enum.add_argument("--format", choices=["json", "newick"], default=None)
    p_enum.add_argument("--output", "-o", default=None)
    p_enum.set_defaults(func=cmd_trees_enumerate)

    p_trop = sub.add_parser("trop", help="tropical Grassmannian operations")
    trop_sub = p_trop.add_subparsers(dest="subcommand", required=True)

    p_dissim = trop_sub.add_parser(
        "dissim", help="dissimilarity vector of an edge weighting (JSON in)"
    )
    p_dissim.add_argument("--input", "-i", required=True, help='file or "-"')
    p_dissim.add_argument("--format", choices=["tsv", "json"], default=None)
    p_dissim.add_argument("--output", "-o", default=None)
    p_dissim.set_defaults(func=cmd_trop_dissim)

    p_check = trop_sub.add_parser(
        "check", help="four-point condition check (exit 1 when violated)"
    )
    p_check.add_argument("--input", "-i", required=True, help='file or "-"')
    p_check.add_argument(
        "--format",
        choices=["tsv", "json"],
        default=None,
        help="input format, detected from content when omitted",
    )
    p_check.add_argument("--output", "-o", default=None)
    p_check.set_defaults(func=cmd_trop_check)

    p_rec = trop_sub.add_parser(
        "reconstruct", help="tree and weights realizing a tropical vector"
    )
    p_rec.add_argument("--input", "-i", required=True, help='file or "-"')
    p_rec.add_argument(
        "--format",
        choices=["tsv", "json"],
        default=None,
        help="input format, detected from content when omitted",
    )
    p_rec.add_argument("--output", "-o", default=None)
    p_rec.set_defaults(func=cmd_trop_reconstruct)

    p_val = sub.add_parser("val", help="valuation operations")
    val_sub = p_val.add_subparsers(dest="subcommand", required=True)
    p_matrix = val_sub.add_parser(
        "matrix", help="valuation matrix of a tree for an edge order"
    )
    p_matrix.add_argument("--tree", required=True, help='tree JSON file or "-"')
    p_matrix.add_argument(
        "--order",
        default=None,
        help="comma-separated edge ids; defaults to the canonical order",
    )
    p_matrix.add_argument("--output", "-o", default=None)
    p_matrix.set_defaults(func=cmd_val_matrix)

    p_example = sub.add_parser(
        "paper-example",
        help="recompute the four-leaf worked example and diff against golden",
    )
    p_example.add_argument(
        "--emit", action="store_true", help="print the report without comparing"
    )
    p_example.add_argument("--output", "-o", default=None)
    p_example.set_defaults(func=cmd_paper_example)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
