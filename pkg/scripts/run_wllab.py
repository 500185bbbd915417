#!/usr/bin/env python3
"""Command-line entry point for WL-Lab.

Results are printed as JSON on stdout; logs go to stderr.

Exit codes: 0 pass or indistinguishable, 1 fail or distinguishable,
2 invalid input or unmet hypothesis, 3 capacity limit exceeded.
"""

import argparse
import json
import logging
import sys
from collections import Counter
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

# Add the scripts directory to the path so the wllab package imports
sys.path.insert(0, str(Path(__file__).parent))

from wllab.canonical import ColorInterner  # noqa: E402
from wllab.core.config import (  # noqa: E402
    DEFAULT_CONFIG_PATH,
    Limits,
    configure_limits,
    load_config,
)
from wllab.core.errors import CapacityError, InputError, WlLabError  # noqa: E402
from wllab.core.harness import VerificationHarness  # noqa: E402
from wllab.core.logger import setup_logging  # noqa: E402
from wllab.graph_io import dump_graph, load_graph, to_dot  # noqa: E402
from wllab.structure import (  # noqa: E402
    check_cycle_bound,
    circumference,
    is_connected,
    is_k_separable,
    is_k_strongly_separable,
)
from wllab.synth import FIXTURE_NAMES, fixture  # noqa: E402
from wllab.verify import CHECK_CLASSES, EXPLORED, PASS, build_check  # noqa: E402
from wllab.wl_engines import (  # noqa: E402
    Variant,
    indistinguishable,
    run_variant,
    vertexwise_indistinguishable,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAPACITY = 3

ERROR_EXIT_CODES = {
    "InputError": EXIT_INPUT,
    "PreconditionError": EXIT_INPUT,
    "ValueError": EXIT_INPUT,
    "CapacityError": EXIT_CAPACITY,
}

logger = logging.getLogger("wllab.cli")


def emit(payload: Any) -> None:
    print(json.dumps(payload, indent=2))


def cmd_wl(args: argparse.Namespace) -> int:
    if len(args.graphs) > 2:
        raise InputError(f"wl takes one or two graphs, got {len(args.graphs)}")
    graphs = [load_graph(path) for path in args.graphs]
    shared = ColorInterner()
    runs = [run_variant(args.variant, g, args.k, shared) for g in graphs]
    if len(runs) == 1:
        emit(runs[0].to_dict())
        return EXIT_OK
    same = indistinguishable(*runs)
    vertexwise = vertexwise_indistinguishable(*runs)
    emit(
        {
            "variant": runs[0].variant.value,
            "k": runs[0].k,
            "verdict": "indistinguishable" if same else "distinguishable",
            "vertexwise": vertexwise,
            "stabilized_at": [run.stabilized_at for run in runs],
        }
    )
    decisive = vertexwise if args.vertexwise else same
    return EXIT_OK if decisive else EXIT_FAIL


def cmd_check(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    if args.what == "connected":
        emit({"what": "connected", "connected": is_connected(g)})
    elif args.what == "cycles":
        if args.bound is None:
            report = circumference(g)
        else:
            report = check_cycle_bound(g, args.bound, exact=True)
        emit({"what": "cycles", **report.to_dict()})
    elif args.what == "k-separable":
        emit({"what": args.what, **is_k_separable(g, args.k).to_dict()})
    else:
        emit({"what": args.what, **is_k_strongly_separable(g, args.k).to_dict()})
    return EXIT_OK


def _check_config(
    harness: VerificationHarness, args: argparse.Namespace
) -> Dict[str, Any]:
    block = harness.check_config(args.theorem)
    overrides = {
        "k": args.k,
        "n_max": args.n_max,
        "classes": args.classes,
        "soundness_trials": args.soundness_trials,
        "seed": args.seed,
    }
    block.update({key: value for key, value in overrides.items() if value is not None})
    if args.explore:
        block["explore"] = True
    return block


def _result_exit_code(result: Dict[str, Any]) -> int:
    if result.get("status") != "success":
        return ERROR_EXIT_CODES.get(result.get("error_type", ""), EXIT_FAIL)
    return EXIT_OK if result["result"]["status"] in (PASS, EXPLORED) else EXIT_FAIL


def cmd_verify(args: argparse.Namespace, harness: VerificationHarness) -> int:
    if args.theorem == "all":
        for name in CHECK_CLASSES:
            block = harness.check_config(name)
            if args.seed is not None:
                block["seed"] = args.seed
            if block.get("enabled", True):
                harness.register_check(build_check(name, block))
        results = harness.run_all_checks()
        emit(results)
        return max((_result_exit_code(r) for r in results), default=EXIT_OK)

    harness.register_check(build_check(args.theorem, _check_config(harness, args)))
    result = harness.run_check(args.theorem)
    emit(result)
    return _result_exit_code(result)


def cmd_stats(args: argparse.Namespace) -> int:
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        raise InputError(f"corpus directory {corpus} does not exist")
    histogram: Counter = Counter()
    errors: List[Dict[str, str]] = []
    exit_code = EXIT_OK
    files = sorted(corpus.glob("*.json"))
    if not files:
        logger.warning(f"No GraphDocument files in {corpus}")
    for path in files:
        try:
            histogram[circumference(load_graph(path)).circumference] += 1
        except CapacityError as e:
            errors.append({"file": path.name, "error": str(e)})
            exit_code = EXIT_CAPACITY
        except InputError as e:
            errors.append({"file": path.name, "error": str(e)})
            exit_code = max(exit_code, EXIT_INPUT)
    payload = {
        "corpus": str(corpus),
        "files": len(files),
        "histogram": {str(length): histogram[length] for length in sorted(histogram)},
        "errors": errors,
    }
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        logger.info(f"Wrote cycle statistics to {out}")
    emit(payload)
    return exit_code


def cmd_fixtures(args: argparse.Namespace) -> int:
    if args.list:
        emit(FIXTURE_NAMES)
        return EXIT_OK
    if not args.name:
        raise InputError("--name is required unless --list is given")
    fixture_set = fixture(args.name)
    out = Path(args.out)
    written = [
        str(dump_graph(g, out / f"{fixture_set.name}_{i}.json"))
        for i, g in enumerate(fixture_set.graphs)
    ]
    emit({**fixture_set.to_dict(), "files": written})
    return EXIT_OK


def cmd_export_dot(args: argparse.Namespace) -> int:
    g = load_graph(args.graph)
    dot = to_dot(g, name=Path(args.graph).stem)
    if args.out:
        Path(args.out).write_text(dot, encoding="utf-8")
    else:
        sys.stdout.write(dot)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="WL-Lab: Weisfeiler-Lehman variants and their separation claims",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python run_wllab.py wl --variant classic --graphs a.json b.json
  python run_wllab.py check --what k-separable --k 3 --graph g.json
  python run_wllab.py verify --theorem t35 --k 2 --n-max 7
  python run_wllab.py verify --theorem all --config custom.yaml
  python run_wllab.py fixtures --name fig1_pair --out fixtures/
  python run_wllab.py stats --corpus corpus/ --out stats.json
        """,
    )
    parser.add_argument(
        "--config",
        type=str,
        default=str(DEFAULT_CONFIG_PATH),
        help="Configuration file, JSON or YAML (default: wllab/config/default.json)",
    )
    parser.add_argument("--seed", type=int, help="Seed for randomized commands")
    parser.add_argument("--verbose", action="store_true", help="Enable debug logs")
    sub = parser.add_subparsers(dest="command", required=True)

    wl = sub.add_parser("wl", help="Run a WL variant on one or two graphs")
    wl.add_argument("--variant", choices=[v.value for v in Variant], required=True)
    wl.add_argument("--k", type=int, default=1)
    wl.add_argument("--graphs", nargs="+", required=True, metavar="FILE")
    wl.add_argument(
        "--vertexwise", action="store_true", help="Decide on position-wise colors"
    )

    check = sub.add_parser("check", help="Structural predicates of one graph")
    check.add_argument(
        "--what",
        choices=["connected", "cycles", "k-separable", "k-strongly-separable"],
        required=True,
    )
    check.add_argument("--k", type=int, default=1)
    check.add_argument("--bound", type=int)
    check.add_argument("--graph", required=True, metavar="FILE")

    verify = sub.add_parser("verify", help="Run a theorem or fixture check")
    verify.add_argument(
        "--theorem", choices=sorted(CHECK_CLASSES) + ["all"], required=True
    )
    verify.add_argument("--k", type=int)
    verify.add_argument("--n-max", type=int, dest="n_max")
    verify.add_argument("--classes", type=int)
    verify.add_argument("--soundness-trials", type=int, dest="soundness_trials")
    verify.add_argument(
        "--explore", action="store_true", help="Drop the separability hypothesis"
    )

    stats = sub.add_parser("stats", help="Longest-cycle histogram of a corpus")
    stats.add_argument("--corpus", required=True, metavar="DIR")
    stats.add_argument("--out", metavar="FILE")

    fixtures = sub.add_parser("fixtures", help="Write fixture graphs as JSON")
    fixtures.add_argument("--name")
    fixtures.add_argument("--out", default=".", metavar="DIR")
    fixtures.add_argument("--list", action="store_true")

    dot = sub.add_parser("export-dot", help="Render a graph as Graphviz DOT")
    dot.add_argument("--graph", required=True, metavar="FILE")
    dot.add_argument("--out", metavar="FILE")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    args = build_parser().parse_args(argv)
    log_level = "DEBUG" if args.verbose else None

    config_path: Optional[Path] = Path(args.config)
    if not config_path.exists():
        logger.warning(f"Config file {config_path} not found, using defaults")
        config_path = None

    try:
        if args.command == "verify":
            return cmd_verify(args, VerificationHarness(config_path, log_level))

        setup_logging(log_level or "WARNING")
        configure_limits(Limits.from_config(load_config(config_path).get("limits")))
        handlers = {
            "wl": cmd_wl,
            "check": cmd_check,
            "stats": cmd_stats,
            "fixtures": cmd_fixtures,
            "export-dot": cmd_export_dot,
        }
        return handlers[args.command](args)

    except KeyboardInterrupt:
        logger.error("Operation cancelled by user")
        return EXIT_FAIL
    except CapacityError as e:
        logger.error(str(e))
        return EXIT_CAPACITY
    except WlLabError as e:
        logger.error(str(e))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
