"""Command-line surface: argument parsing, dispatch and exit codes."""
import argparse
import json
import logging
import random
import sys
from pathlib import Path
from typing import Any

from errors import BudgetExceededError, DomainError, RainbowError, SizeLimitError
from config.settings import settings
from cli.messages import (
    get_construct_message,
    get_explore_message,
    get_history_message,
    get_pattern_message,
    get_search_message,
    get_stick_message,
    get_verify_message,
)
from graphs.constructions import ConstructionKind, ConstructionSpec
from graphs.ecgraph import random_proper_coloring
from graphs.io import graph_to_json, load_graph, save_graph
from patterns.enumeration import enumerate_free_trees
from patterns.trees import (
    broom_pattern,
    caterpillar_pattern,
    load_pattern,
    path_pattern,
    spider_pattern,
    star_pattern,
)
from rainbow.budget import SearchBudget

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3

RANDOM_KIND = "random"


class UsageError(DomainError):
    """Bad command line."""


class _Parser(argparse.ArgumentParser):
    """Turns argparse's own exit into a UsageError so it reaches the JSON error path."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rainbow", description="Rainbow subgraphs in properly edge-colored graphs")
    parser.add_argument("--threads", type=_positive, default=settings.DEFAULT_THREADS, help="worker processes")
    parser.add_argument("--seed", type=int, default=settings.DEFAULT_SEED, help="seed for random graphs")
    parser.add_argument("--json-out", help="also write the JSON result to this file")
    parser.add_argument("--quiet", action="store_true", help="print a one-line summary instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    construct = sub.add_parser("construct", help="build a named edge-colored graph")
    construct.add_argument("--kind", required=True, choices=[k.value for k in ConstructionKind] + [RANDOM_KIND])
    construct.add_argument("--param", type=int, default=0, help="s, k or n depending on the kind")
    construct.add_argument("--p", type=float, default=0.5, help="edge probability for --kind random")
    construct.add_argument("--out", help="write .json or .dot instead of printing")

    pattern = sub.add_parser("pattern", help="emit tree patterns")
    pattern.add_argument("--family", required=True,
                         choices=["path", "star", "broom", "caterpillar", "spider", "enumerate"])
    pattern.add_argument("--k", type=int, help="edge count (path, star, broom, enumerate)")
    pattern.add_argument("--l", type=int, help="handle length of a broom")
    pattern.add_argument("--leaves", help="comma separated leaf counts of a caterpillar, e.g. 2,0,3")
    pattern.add_argument("--t", type=int, help="subdivided legs of a spider")
    pattern.add_argument("--legs", type=int, help="star edges of a spider")
    pattern.add_argument("--out", help="write the JSON here")

    search = sub.add_parser("search", help="search for or count rainbow copies")
    search.add_argument("--graph", required=True, help="graph JSON file")
    target = search.add_mutually_exclusive_group(required=True)
    target.add_argument("--pattern", help="tree pattern JSON file")
    target.add_argument("--cycle", type=int, metavar="LEN", help="rainbow cycle with LEN edges")
    target.add_argument("--longest-path", action="store_true", help="longest rainbow path")
    search.add_argument("--count", action="store_true", help="count instead of stopping at the first copy")
    search.add_argument("--budget", type=_positive, default=settings.DEFAULT_SEARCH_BUDGET)
    search.add_argument("--anchored", action="store_true", help="host is vertex-transitive; start at vertex 0")

    stick = sub.add_parser("stick", help="search for stick sequences over GF(2)")
    stick.add_argument("--d", type=int, required=True)
    stick.add_argument("--all", action="store_true", help="collect every canonical witness")

    explore = sub.add_parser("explore", help="check a predicate on every coloring class of K_n")
    explore.add_argument("--n", type=int, required=True)
    explore.add_argument("--factorizations", action="store_true", help="1-factorizations instead of proper colorings")
    explore.add_argument("--colors", type=int,
                         help="color cap for proper colorings; default n(n-1)/2, every proper coloring")
    explore.add_argument("--predicate", required=True,
                         help="no-rainbow-path:K | rainbow-path:K | no-rainbow-tree:FILE | rainbow-tree:FILE")
    explore.add_argument("--budget", type=_positive, help="node budget per class")

    verify = sub.add_parser("verify", help="run registered claims")
    verify.add_argument("--claim", help="glob over claim ids, e.g. 'D-*'")
    verify.add_argument("--budget", type=_positive, default=settings.DEFAULT_SEARCH_BUDGET)
    verify.add_argument("--json", dest="json_file", help="write the report array here")
    verify.add_argument("--deep", action="store_true", help="include the slow instances")
    verify.add_argument("--archive", action="store_true", help="store the run in the results database")
    verify.add_argument("--list", action="store_true", help="list the selected claims without running them")

    history = sub.add_parser("history", help="list archived verify runs")
    history.add_argument("--limit", type=_positive, default=10)
    return parser


def _emit(args: argparse.Namespace, data: Any, summary: str) -> None:
    text = json.dumps(data, indent=2)
    if args.json_out:
        Path(args.json_out).write_text(text + "\n")
    print(summary if args.quiet else text)


def cmd_construct(args: argparse.Namespace) -> int:
    if args.kind == RANDOM_KIND:
        if args.param < 1:
            raise DomainError(f"--param must be the vertex count for a random graph, got {args.param}")
        g = random_proper_coloring(args.param, args.p, random.Random(args.seed))
    else:
        g = ConstructionSpec(ConstructionKind(args.kind), args.param).build()
    data = graph_to_json(g)
    if args.out:
        save_graph(g, args.out)
        data = {"out": args.out, "n": g.n, "edges": g.edge_count, "colors": g.color_count}
    _emit(args, data, get_construct_message(args.kind, g.n, g.edge_count, g.color_count, args.out))
    return EXIT_OK


def _require(value, flag: str, family: str):
    if value is None:
        raise UsageError(f"--{flag} is required for --family {family}")
    return value


def cmd_pattern(args: argparse.Namespace) -> int:
    family = args.family
    if family == "path":
        patterns = [path_pattern(_require(args.k, "k", family))]
    elif family == "star":
        patterns = [star_pattern(_require(args.k, "k", family))]
    elif family == "broom":
        patterns = [broom_pattern(_require(args.k, "k", family), _require(args.l, "l", family))]
    elif family == "caterpillar":
        leaves = _require(args.leaves, "leaves", family)
        try:
            counts = [int(part) for part in leaves.split(",")]
        except ValueError as e:
            raise UsageError(f"--leaves must be comma separated integers, got {leaves!r}") from e
        patterns = [caterpillar_pattern(counts)]
    elif family == "spider":
        patterns = [spider_pattern(_require(args.t, "t", family), _require(args.legs, "legs", family))]
    else:
        patterns = enumerate_free_trees(_require(args.k, "k", family))

    items = [dict(p.to_json(), name=p.name) if p.name else p.to_json() for p in patterns]
    data: Any = items[0] if family != "enumerate" else {"k": args.k, "classes": len(items), "patterns": items}
    if args.out:
        Path(args.out).write_text(json.dumps(data) + "\n")
    _emit(args, data, get_pattern_message(items))
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    # Imported here so `construct` and `pattern` stay light.
    from rainbow.cycles import count_rainbow_cycles_result, find_rainbow_cycle
    from rainbow.paths import longest_rainbow_path
    from rainbow.trees import count_rainbow_tree_result, find_rainbow_tree

    g = load_graph(args.graph)
    budget = SearchBudget(args.budget)
    if args.longest_path:
        data = longest_rainbow_path(g, budget, args.anchored, args.threads).to_json()
    elif args.cycle is not None:
        search = count_rainbow_cycles_result if args.count else find_rainbow_cycle
        data = search(g, args.cycle, budget, args.anchored, args.threads).to_json()
    else:
        pattern = load_pattern(args.pattern)
        search = count_rainbow_tree_result if args.count else find_rainbow_tree
        data = search(g, pattern, budget, args.anchored, args.threads).to_json()
    _emit(args, data, get_search_message(data))
    return EXIT_REFUSED if data["status"] == "budget" else EXIT_OK


def cmd_stick(args: argparse.Namespace) -> int:
    from algebra.sticks import stick_sequence_search

    data = stick_sequence_search(args.d, find_all=args.all, threads=args.threads).to_json()
    _emit(args, data, get_stick_message(data))
    return EXIT_OK


def parse_predicate(text: str, max_nodes: int | None = None):
    """Turn 'no-rainbow-path:K' and friends into a picklable RainbowTreePredicate."""
    from explorer.forall import RainbowTreePredicate

    kind, sep, value = text.partition(":")
    if not sep or not value:
        raise UsageError(f"predicate must look like KIND:VALUE, got {text!r}")
    if kind in ("no-rainbow-path", "rainbow-path"):
        try:
            k = int(value)
        except ValueError as e:
            raise UsageError(f"path length must be an integer, got {value!r}") from e
        return RainbowTreePredicate(path_pattern(k), kind == "rainbow-path", max_nodes)
    if kind in ("no-rainbow-tree", "rainbow-tree"):
        return RainbowTreePredicate(load_pattern(value), kind == "rainbow-tree", max_nodes)
    raise UsageError(f"unknown predicate {kind!r}")


def cmd_explore(args: argparse.Namespace) -> int:
    from explorer.factorizations import enumerate_one_factorizations
    from explorer.forall import forall_check
    from explorer.proper import enumerate_proper_colorings

    predicate = parse_predicate(args.predicate, args.budget)
    total = None
    if args.factorizations:
        family = "1-factorizations"
        classes = enumerate_one_factorizations(args.n)
        total = len(classes)
    else:
        colors = args.colors if args.colors is not None else args.n * (args.n - 1) // 2
        family = f"proper colorings with at most {colors} colors"
        classes = enumerate_proper_colorings(args.n, colors)
    report = forall_check(classes, predicate, args.threads)
    data = {"n": args.n, "family": family, "predicate": predicate.describe(), "classes_total": total}
    data.update(report.to_json())
    _emit(args, data, get_explore_message(data))
    return EXIT_OK if report.holds else EXIT_FAILURE


def cmd_verify(args: argparse.Namespace) -> int:
    from verify.registry import exit_code, run_all, select_claims

    if args.list:
        claims = select_claims(args.claim, args.deep)
        _emit(args, [claim.to_json() for claim in claims], f"{len(claims)} claims selected")
        return EXIT_OK

    reports = run_all(args.claim, SearchBudget(args.budget), args.threads, args.deep)
    code = exit_code(reports)
    data = [report.to_json() for report in reports]
    if args.json_file:
        Path(args.json_file).write_text(json.dumps(data, indent=2) + "\n")
    if args.archive:
        from database.archive import save_run

        run_id = save_run(reports, args.claim, args.budget, args.threads, code)
        logger.info(f"Stored as run {run_id}")
    _emit(args, data, get_verify_message(reports, code))
    return code


def cmd_history(args: argparse.Namespace) -> int:
    from database.archive import list_runs

    runs = list_runs(args.limit)
    _emit(args, runs, get_history_message(runs))
    return EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "pattern": cmd_pattern,
    "search": cmd_search,
    "stick": cmd_stick,
    "explore": cmd_explore,
    "verify": cmd_verify,
    "history": cmd_history,
}


def _fail(error: BaseException, code: int) -> int:
    print(json.dumps({"error": type(error).__name__, "message": str(error)}), file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    """
    Parse argv, run one subcommand and map errors to exit codes.

    Returns:
        0 on success, 1 on refuted claims or unexpected failures, 2 on usage
        or domain errors, 3 on budget or size refusals
    """
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        return _fail(e, EXIT_USAGE)
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    if args.quiet:
        logging.getLogger().setLevel(logging.WARNING)

    try:
        return COMMANDS[args.command](args)
    except (SizeLimitError, BudgetExceededError) as e:
        logger.warning(f"{args.command} refused: {e}")
        return _fail(e, EXIT_REFUSED)
    except DomainError as e:
        return _fail(e, EXIT_USAGE)
    except FileNotFoundError as e:
        return _fail(e, EXIT_USAGE)
    except (RainbowError, OSError) as e:
        logger.error(f"{args.command} failed: {e}", exc_info=True)
        return _fail(e, EXIT_FAILURE)
    except Exception as e:
        logger.error(f"Unexpected error in {args.command}: {e}", exc_info=True)
        return _fail(e, EXIT_FAILURE)
