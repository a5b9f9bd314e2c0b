"""Claim bodies: each one runs the searches behind one statement and returns a ClaimReport."""
import logging
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from errors import BudgetExceededError, DomainError, InvariantError
from algebra.sticks import stick_sequence_search
from explorer.colorings import colorings_isomorphic
from explorer.factorizations import enumerate_one_factorizations
from explorer.forall import RainbowTreePredicate, forall_check
from explorer.proper import enumerate_proper_colorings
from graphs.constructions import (
    build_complete_minus_color,
    build_d_star,
    build_k6_geometric,
    build_k_star,
)
from graphs.ecgraph import ColoredGraph, is_balanced_small
from patterns.enumeration import enumerate_free_trees
from patterns.trees import (
    CaterpillarSpec,
    broom_pattern,
    caterpillar_pattern,
    path_pattern,
    spider_pattern,
)
from rainbow.budget import SearchStatus
from rainbow.cycles import count_rainbow_closed_walks, count_rainbow_cycles_result, rainbow_girth
from rainbow.paths import longest_rainbow_path, maximal_path_degree_report
from rainbow.trees import count_rainbow_tree_result, find_rainbow_tree
from verify.reports import ClaimContext, ClaimReport, ClaimStatus, SkipReason

logger = logging.getLogger(__name__)

DEFAULT_CONTEXT = ClaimContext()

CATERPILLAR_FAMILIES = ("a", "b", "c", "d", "e")
COUNT_LINES = ("d-path", "d-cycle", "k-c3", "k-c4", "k-c5")


def _skipped(claim_id: str, reason: SkipReason, nodes: int = 0, **details) -> ClaimReport:
    logger.warning(f"{claim_id} skipped: {reason.value}")
    return ClaimReport(claim_id, ClaimStatus.SKIPPED, reason=reason, nodes_visited=nodes, details=details)


def _verdict(ok: bool) -> ClaimStatus:
    return ClaimStatus.VERIFIED if ok else ClaimStatus.REFUTED


def claim_d_no_rainbow_pk(s: int, ctx: ClaimContext = DEFAULT_CONTEXT) -> ClaimReport:
    """D*_{2^s} has no rainbow P_{s+1}, and its longest rainbow path has length s."""
    claim_id = f"D-PATH-S{s}"
    if not 2 <= s <= 7:
        raise DomainError(f"s must be in [2, 7], got {s}")
    g = build_d_star(s)
    search = find_rainbow_tree(g, path_pattern(s + 1), ctx.budget, anchored=True, threads=ctx.threads)
    if search.timed_out:
        return _skipped(claim_id, SkipReason.BUDGET, search.nodes_visited)
    longest = longest_rainbow_path(g, ctx.budget, anchored=True, threads=ctx.threads)
    nodes = search.nodes_visited + longest.nodes_visited
    if longest.timed_out:
        return _skipped(claim_id, SkipReason.BUDGET, nodes, lower_bound=longest.length)

    ok = search.status is SearchStatus.NONE and longest.length == s
    witness = search.witness.to_json() if search.found else longest.witness.to_json()
    return ClaimReport(
        claim_id, _verdict(ok),
        expected={"rainbow_path": "none", "longest": s},
        found={"rainbow_path": search.status.value, "longest": longest.length},
        witness=witness, nodes_visited=nodes,
    )


def claim_d_tight(s: int, ctx: ClaimContext = DEFAULT_CONTEXT) -> ClaimReport:
    """D*_{2^s} is k-regular with exactly k colors (k = s+1) and a rainbow path of length k-1."""
    claim_id = f"D-TIGHT-S{s}"
    k = s + 1
    g = build_d_star(s)
    longest = longest_rainbow_path(g, ctx.budget, anchored=True, threads=ctx.threads)
    if longest.timed_out:
        return _skipped(claim_id, SkipReason.BUDGET, longest.nodes_visited, lower_bound=longest.length)
    found = {
        "regular_degree": g.degree(0) if g.is_regular() else None,
        "colors": g.color_count,
        "longest": longest.length,
        "edges": g.edge_count,
    }
    expected = {"regular_degree": k, "colors": k, "longest": k - 1, "edges": g.n * k // 2}
    return ClaimReport(claim_id, _verdict(found == expected), expected=expected, found=found,
                       witness=longest.witness.to_json() if longest.witness else None,
                       nodes_visited=longest.nodes_visited)


def claim_d_girth(s: int, ctx: ClaimContext = DEFAULT_CONTEXT) -> ClaimReport:
    """The shortest rainbow cycle of D*_{2^s} has length s+1."""
    claim_id = f"D-GIRTH-S{s}"
    result = rainbow_girth(build_d_star(s), s + 1, ctx.budget, anchored=True, threads=ctx.threads)
    if result.status is SearchStatus.BUDGET:
        return _skipped(claim_id, SkipReason.BUDGET, result.nodes_visited)
    return ClaimReport(claim_id, _verdict(result.girth == s + 1), expected=s + 1, found=result.girth,
                       nodes_visited=result.nodes_visited)


def claim_bk2(k: int, ctx: ClaimContext = DEFAULT_CONTEXT) -> ClaimReport:
    """
    No rainbow B_{k,2} in any k-edge-coloring of K_{k+1} (odd k), and the
    even-k construction has k^2/2 edges without a rainbow B_{k,2}.
    """
    claim_id = f"B-K2-K{k}"
    broom = broom_pattern(k, 2)
    if k % 2:
        if k not in (3, 5, 7):
            raise DomainError(f"odd k must be 3, 5 or 7, got {k}")
        classes = enumerate_one_factorizations(k + 1)
        predicate = RainbowTreePredicate(broom, present=False, max_nodes=ctx.budget.max_nodes)
        report = forall_check(classes, predicate, ctx.threads)
        return ClaimReport(
            claim_id, _verdict(report.holds),
            expected="no rainbow copy in any 1-factorization", found=report.to_json()["verdict"],
            witness=report.counterexample.to_json() if report.counterexample else None,
            nodes_visited=report.nodes_visited,
            details={"classes": len(classes), "classes_checked": report.classes_checked},
        )

    if k not in (2, 4, 6):
        raise DomainError(f"even k must be 2, 4 or 6, got {k}")
    g = build_complete_minus_color(k)
    search = find_rainbow_tree(g, broom, ctx.budget, threads=ctx.threads)
    if search.timed_out:
        return _skipped(claim_id, SkipReason.BUDGET, search.nodes_visited)
    if k == 2:
        # B_{2,2} is P_2, present in every graph with two adjacent edges.
        return _skipped(claim_id, SkipReason.PARAMETER_INFEASIBLE, search.nodes_visited,
                        edges=g.edge_count, rainbow_copy=search.status.value,
                        note="B(2,2) is the path on two edges")
    ok = g.edge_count == k * k // 2 and search.status is SearchStatus.NONE
    return ClaimReport(
        claim_id, _verdict(ok),
        expected={"edges": k * k // 2, "rainbow_copy": "none"},
        found={"edges": g.edge_count, "rainbow_copy": search.status.value},
        witness=search.witness.to_json() if search.witness else None,
        nodes_visited=search.nodes_visited,
    )


def claim_bk3(s: int, ctx: ClaimContext = DEFAULT_CONTEXT) -> ClaimReport:
    """K*_{2^s} has no rainbow B_{2^s-1,3}."""
    claim_id = f"B-K3-S{s}"
    k = 2 ** s - 1
    if k - 3 < 1:
        # B_{3,3} has no star part and is just P_3.
        return _skipped(claim_id, SkipReason.PARAMETER_INFEASIBLE, note=f"B({k},3) is a path")
    search = find_rainbow_tree(build_k_star(s), broom_pattern(k, 3), ctx.budget, anchored=True, threads=ctx.threads)
    if search.timed_out:
        return _skipped(claim_id, SkipReason.BUDGET, search.nodes_visited)
    return ClaimReport(claim_id, _verdict(search.status is SearchStatus.NONE), expected="none",
                       found=search.status.value, witness=search.witness.to_json() if search.witness else None,
                       nodes_visited=search.nodes_visited)


def claim_broom_sequences(ctx: ClaimContext = DEFAULT_CONTEXT, lengths: Sequence[int] = range(2, 11)) -> ClaimReport:
    """
    Stick sequences do not exist for 2 <= d <= 9 and exist for d = 10;
    direct search finds no rainbow B_{7,d} in K*_{2^3} for 4 <= d <= 6.
    """
    claim_id = "BROOM-STICKS"
    expected, found, nodes = {}, {}, 0
    witness = None
    for d in lengths:
        result = stick_sequence_search(d, threads=ctx.threads)
        nodes += result.nodes
        expected[str(d)] = "sat" if d >= 10 else "unsat"
        found[str(d)] = result.status
        if result.witness and d == 10:
            witness = result.witness.as_ints()

    k_star = build_k_star(3)
    direct = {}
    for d in range(4, 7):
        search = find_rainbow_tree(k_star, broom_pattern(7, d), ctx.budget, anchored=True, threads=ctx.threads)
        nodes += search.nodes_visited
        if search.timed_out:
            return _skipped(claim_id, SkipReason.BUDGET, nodes, broom=f"B(7,{d})")
        direct[f"B(7,{d})"] = search.status.value

    ok = found == expected and all(v == "none" for v in direct.values())
    return ClaimReport(claim_id, _verdict(ok), expected=expected, found=found, witness=witness,
                       nodes_visited=nodes, details={"direct_search": direct})


def caterpillar_instances(s: int, family: str) -> list[CaterpillarSpec]:
    """Instances with 2^s - 1 edges; both orientations of asymmetric pairs are listed."""
    k = 2 ** s - 1
    if family == "a":
        return [CaterpillarSpec((1, k - 4, 1))] if k - 4 >= 2 else []
    if family == "b":
        return [CaterpillarSpec((t, k - 1 - t)) for t in range(3, k - 3) if t % 2 and (k - 1 - t) % 2]
    if family == "c":
        return [CaterpillarSpec((t, 0, k - 2 - t)) for t in range(2, k - 3)]
    if family == "d":
        return [CaterpillarSpec((t, 0, 0, k - 3 - t)) for t in range(2, k - 4)]
    if family == "e":
        return [CaterpillarSpec((t, 1, k - 3 - t)) for t in range(3, k - 5) if t % 2 and (k - 3 - t) % 2]
    raise DomainError(f"unknown caterpillar family {family!r}")


def claim_caterpillars(s: int, ctx: ClaimContext = DEFAULT_CONTEXT,
                       families: Iterable[str] = CATERPILLAR_FAMILIES, claim_id: str | None = None) -> ClaimReport:
    """No listed caterpillar on 2^s - 1 edges has a rainbow copy in K*_{2^s}."""
    claim_id = claim_id or f"CATERPILLAR-S{s}"
    g = build_k_star(s)
    instances, nodes = {}, 0
    refuted_by = None
    for family in families:
        specs = caterpillar_instances(s, family)
        if not specs:
            instances[f"({family})"] = SkipReason.PARAMETER_INFEASIBLE.value
            continue
        for spec in specs:
            search = find_rainbow_tree(g, caterpillar_pattern(spec), ctx.budget, anchored=True, threads=ctx.threads)
            nodes += search.nodes_visited
            instances[f"({family}) {spec.label()}"] = SkipReason.BUDGET.value if search.timed_out else search.status.value
            if search.found and refuted_by is None:
                refuted_by = {"instance": spec.label(), **search.witness.to_json()}

    # Outside the families: both leaf counts even.
    probes = {}
    if s == 3:
        probe = find_rainbow_tree(g, caterpillar_pattern((2, 2)), ctx.budget, anchored=True, threads=ctx.threads)
        probes["CP(2,2)"] = probe.status.value

    checked = [v for v in instances.values() if v in ("none", "found")]
    if refuted_by:
        return ClaimReport(claim_id, ClaimStatus.REFUTED, expected="none", found=instances, witness=refuted_by,
                           nodes_visited=nodes, details={"probes": probes})
    if any(v == SkipReason.BUDGET.value for v in instances.values()):
        return _skipped(claim_id, SkipReason.BUDGET, nodes, instances=instances)
    if not checked:
        return _skipped(claim_id, SkipReason.PARAMETER_INFEASIBLE, nodes, instances=instances)
    return ClaimReport(claim_id, ClaimStatus.VERIFIED, expected="none", found=instances, nodes_visited=nodes,
                       details={"probes": probes})


def claim_seven_edge_trees(ctx: ClaimContext = DEFAULT_CONTEXT) -> ClaimReport:
    """Of the 23 trees on 7 edges exactly 3 have a rainbow copy in K*_{2^3}."""
    claim_id = "TREES-7"
    trees = enumerate_free_trees(7)
    g = build_k_star(3)
    embeddable, blocked, nodes = [], [], 0
    for t in trees:
        search = find_rainbow_tree(g, t, ctx.budget, anchored=True, threads=ctx.threads)
        nodes += search.nodes_visited
        if search.timed_out:
            return _skipped(claim_id, SkipReason.BUDGET, nodes, tree=t.canonical_code.hex())
        (embeddable if search.found else blocked).append(t.canonical_code.hex())
    ok = len(trees) == 23 and len(embeddable) == 3
    return ClaimReport(claim_id, _verdict(ok), expected={"classes": 23, "embeddable": 3},
                       found={"classes": len(trees), "embeddable": len(embeddable)},
                       witness={"embeddable": embeddable}, nodes_visited=nodes,
                       details={"non_embeddable": blocked})


def _formula(value: Fraction) -> int | str:
    return value.numerator if value.denominator == 1 else str(value)


def claim_counts(s: int, ctx: ClaimContext = DEFAULT_CONTEXT, lines: Iterable[str] = COUNT_LINES,
                 claim_id: str | None = None) -> ClaimReport:
    """
    Exact rainbow path and cycle counts against the closed formulas.

    Lines: "d-path" (P_l in D*, 1 <= l <= k-1, k = s+1), "d-cycle" (C_k in D*),
    "k-c3", "k-c4", "k-c5" (C_3, C_4, C_5 in K*, k = 2^s - 1).
    A disagreement is a MISMATCH carrying both numbers.
    """
    lines = tuple(lines)
    claim_id = claim_id or f"COUNTS-S{s}"
    unknown = set(lines) - set(COUNT_LINES)
    if unknown:
        raise DomainError(f"unknown count lines {sorted(unknown)}")
    found, expected, details = {}, {}, {}
    nodes = 0
    n = 2 ** s

    def counted(result) -> int:
        nonlocal nodes
        nodes += result.nodes_visited
        if result.timed_out:
            raise BudgetExceededError(f"{claim_id}: count exceeded the node budget", nodes)
        return result.count

    def tree_count(g: ColoredGraph, length: int) -> int:
        return counted(count_rainbow_tree_result(g, path_pattern(length), ctx.budget, anchored=True, threads=ctx.threads))

    def cycle_count(g: ColoredGraph, length: int) -> int:
        return counted(count_rainbow_cycles_result(g, length, ctx.budget, anchored=True, threads=ctx.threads))

    if "d-path" in lines or "d-cycle" in lines:
        d_star, k = build_d_star(s), s + 1
        if "d-path" in lines:
            for length in range(1, k):
                found[f"P{length}"] = tree_count(d_star, length)
                expected[f"P{length}"] = _formula(Fraction(n * factorial(k), 2 * factorial(k - length)))
            # l = k is reported apart from the formula: a rainbow walk through all k colors closes up.
            details[f"P{k}"] = tree_count(d_star, k)
        if "d-cycle" in lines:
            found[f"C{k}"] = cycle_count(d_star, k)
            expected[f"C{k}"] = _formula(Fraction(n * factorial(k - 1), 2))

    k_star, k = build_k_star(s), 2 ** s - 1
    formulas = {
        "k-c3": (3, Fraction(n * k * (k - 1), 6)),
        "k-c4": (4, Fraction(n * k * (k - 1) * (k - 2), 8)),
        "k-c5": (5, Fraction(n * k * (k - 1) * (k - 3) * (k - 7), 10)),
    }
    for line, (length, value) in formulas.items():
        if line in lines:
            found[f"K-C{length}"] = cycle_count(k_star, length)
            expected[f"K-C{length}"] = _formula(value)

    mismatched = sorted(key for key in found if found[key] != expected[key])
    if mismatched:
        logger.info(f"{claim_id}: enumeration differs from the formula on {mismatched}")
    status = ClaimStatus.MISMATCH if mismatched else ClaimStatus.VERIFIED
    return ClaimReport(claim_id, status, expected=expected, found=found, nodes_visited=nodes,
                       details={"mismatched": mismatched, **details})


def claim_k_cycle_count(s: int, ctx: ClaimContext = DEFAULT_CONTEXT) -> ClaimReport:
    """Number of rainbow C_k in K*_{2^s} with k = 2^s - 1, cross-checked against labeled closed walks."""
    claim_id = f"K-CYCLE-COUNT-S{s}"
    k = 2 ** s - 1
    g = build_k_star(s)
    result = count_rainbow_cycles_result(g, k, ctx.budget, anchored=True, threads=ctx.threads)
    if result.timed_out:
        return _skipped(claim_id, SkipReason.BUDGET, result.nodes_visited)
    walks = count_rainbow_closed_walks(g, k, ctx.budget, threads=ctx.threads)
    if walks != 2 * k * result.count:
        logger.error(f"{claim_id}: {walks} closed walks for {result.count} cycles of length {k}")
        raise InvariantError(f"closed walks {walks} != 2 * {k} * {result.count}")
    return ClaimReport(claim_id, ClaimStatus.VERIFIED, expected=None, found=result.count,
                       nodes_visited=result.nodes_visited, details={"closed_walks": walks})


def claim_k6_and_k5(ctx: ClaimContext = DEFAULT_CONTEXT) -> ClaimReport:
    """
    The geometric K_6 has longest rainbow path 4, every proper coloring of K_5
    has a rainbow P_4, and the only 5-coloring of K_6 is the geometric one.
    """
    claim_id = "K6-K5"
    k6 = build_k6_geometric()
    longest = longest_rainbow_path(k6, ctx.budget, threads=ctx.threads)
    if longest.timed_out:
        return _skipped(claim_id, SkipReason.BUDGET, longest.nodes_visited)

    k5 = forall_check(enumerate_proper_colorings(5, 10), RainbowTreePredicate.path(4, present=True), ctx.threads)
    k4 = forall_check(enumerate_proper_colorings(4, 6), RainbowTreePredicate.path(3, present=True), ctx.threads)
    k4_probe = k4.counterexample is not None and k4.counterexample.color_count == 3

    five_colorings = list(enumerate_proper_colorings(6, 5))
    geometric = [c for c in five_colorings if colorings_isomorphic(c.to_graph(), k6)]
    no_p5 = forall_check(geometric, RainbowTreePredicate.path(5, present=False), ctx.threads)

    found = {
        "k6_longest": longest.length,
        "k5_rainbow_p4": k5.to_json()["verdict"],
        "k4_one_factorization_without_p3": k4_probe,
        "k6_five_colorings": len(five_colorings),
        "k6_geometric_without_p5": bool(geometric) and no_p5.holds,
    }
    expected = {
        "k6_longest": 4,
        "k5_rainbow_p4": "holds_for_all",
        "k4_one_factorization_without_p3": True,
        "k6_five_colorings": 1,
        "k6_geometric_without_p5": True,
    }
    return ClaimReport(claim_id, _verdict(found == expected), expected=expected, found=found,
                       witness=longest.witness.to_json() if longest.witness else None,
                       nodes_visited=longest.nodes_visited + k5.nodes_visited + k4.nodes_visited + no_p5.nodes_visited,
                       details={"k5_classes": k5.classes_checked, "k4_classes": k4.classes_checked})


def _small_hosts() -> dict[str, ColoredGraph]:
    return {"D*8": build_d_star(3), "K6": build_k6_geometric(), "K*8": build_k_star(3)}


def claim_path_degree(ctx: ClaimContext = DEFAULT_CONTEXT) -> ClaimReport:
    """Endpoints of maximal rainbow paths of length k have degree at most 2k-1."""
    claim_id = "PROP-PATHDEG"
    found, nodes, witness = {}, 0, None
    for name, g in _small_hosts().items():
        report = maximal_path_degree_report(g, ctx.budget, ctx.threads)
        nodes += report.nodes_visited
        if report.status is SearchStatus.BUDGET:
            return _skipped(claim_id, SkipReason.BUDGET, nodes, graph=name)
        found[name] = report.to_json()
        if not report.holds and witness is None:
            witness = {"graph": name, "path": list(report.proved_violation)}
    ok = witness is None
    return ClaimReport(claim_id, _verdict(ok), expected="d(v) <= 2k-1 everywhere",
                       found={name: data["bound_2k_minus_1"] for name, data in found.items()},
                       witness=witness, nodes_visited=nodes, details=found)


def claim_balanced(ctx: ClaimContext = DEFAULT_CONTEXT) -> ClaimReport:
    """The extremal constructions are balanced graphs."""
    found, witness, subsets = {}, None, 0
    for name, g in _small_hosts().items():
        result = is_balanced_small(g)
        subsets += (1 << g.n) - 1
        found[name] = result.balanced
        if not result.balanced and witness is None:
            witness = {"graph": name, "subset": list(result.witness)}
    return ClaimReport("PROP-BALANCED", _verdict(witness is None), expected={name: True for name in found},
                       found=found, witness=witness, nodes_visited=subsets)


def claim_spiders(ctx: ClaimContext = DEFAULT_CONTEXT) -> ClaimReport:
    """Which t-spiders on 7 edges have a rainbow copy in K*_{2^3}; the 2-spider has none."""
    claim_id = "SPIDER-S3"
    g = build_k_star(3)
    found, nodes = {}, 0
    for t in range(4):
        search = find_rainbow_tree(g, spider_pattern(t, 7 - t), ctx.budget, anchored=True, threads=ctx.threads)
        nodes += search.nodes_visited
        if search.timed_out:
            return _skipped(claim_id, SkipReason.BUDGET, nodes, spider=t)
        found[f"t={t}"] = search.status.value
    return ClaimReport(claim_id, _verdict(found["t=2"] == "none"), expected={"t=2": "none"}, found=found,
                       nodes_visited=nodes)