"""Claim registry, run_all and the exit policy."""
import logging
import time
from fnmatch import fnmatchcase

from errors import BudgetExceededError, InvariantError, SizeLimitError
from config.settings import settings
from rainbow.budget import SearchBudget
from verify import claims
from verify.reports import Claim, ClaimContext, ClaimReport, ClaimStatus, SkipReason

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_SKIPPED = 3


def build_registry() -> list[Claim]:
    """Every claim in registry order; ids are unique."""
    registry: list[Claim] = []

    for s in range(2, 8):
        registry.append(Claim(
            f"D-PATH-S{s}", f"D*_{{2^{s}}} has no rainbow P_{s + 1} and longest rainbow path {s}",
            "the hypercube-with-diagonals coloring avoids rainbow paths with one edge more than it has colors",
            {"s": s}, {"rainbow_path": "none", "longest": s},
            lambda ctx, s=s: claims.claim_d_no_rainbow_pk(s, ctx), deep=s > 5,
            reference="rainbow path lower bound from D*",
        ))
    for s in range(2, 6):
        registry.append(Claim(
            f"D-GIRTH-S{s}", f"rainbow girth of D*_{{2^{s}}} is {s + 1}",
            "no nonempty proper subset of the basis plus all-ones vector sums to zero",
            {"s": s}, s + 1, lambda ctx, s=s: claims.claim_d_girth(s, ctx),
            reference="rainbow girth of D*",
        ))
    for s in range(2, 6):
        registry.append(Claim(
            f"D-TIGHT-S{s}", f"D*_{{2^{s}}} is {s + 1}-regular with {s + 1} colors and a rainbow P_{s}",
            "the path bound is tight: the construction still contains a rainbow path of length k-1",
            {"s": s}, {"regular_degree": s + 1, "colors": s + 1, "longest": s},
            lambda ctx, s=s: claims.claim_d_tight(s, ctx),
            reference="tightness of the rainbow path bound",
        ))
    for k in range(2, 8):
        odd = k % 2 == 1
        registry.append(Claim(
            f"B-K2-K{k}",
            f"no rainbow B_{{{k},2}} in any 1-factorization of K_{k + 1}" if odd
            else f"K_{k + 1} minus a color class has {k * k // 2} edges and no rainbow B_{{{k},2}}",
            "a k-edge-coloring of K_{k+1} has no rainbow B_{k,2} for odd k; removing a color class works for even k",
            {"k": k}, "none", lambda ctx, k=k: claims.claim_bk2(k, ctx),
            optional=k == 2, reference="brooms with a one-edge handle",
        ))
    for s in (2, 3, 4):
        registry.append(Claim(
            f"B-K3-S{s}", f"K*_{{2^{s}}} has no rainbow B_{{{2 ** s - 1},3}}",
            "the star centre of a rainbow broom with a two-edge handle forces a repeated color",
            {"s": s}, "none", lambda ctx, s=s: claims.claim_bk3(s, ctx),
            optional=s != 3, reference="brooms with a two-edge handle",
        ))
    registry.append(Claim(
        "BROOM-STICKS", "stick sequences: none for 2 <= d <= 9, one for d = 10",
        "brute force over prefix-closed sequences of distinct GF(2) vectors",
        {"d": [2, 10]}, {"unsat": [2, 9], "sat": 10}, lambda ctx: claims.claim_broom_sequences(ctx),
        reference="stick sequences for long brooms",
    ))
    registry.append(Claim(
        "CATERPILLAR-S3", "caterpillar families (a)-(e) on 7 edges have no rainbow copy in K*_{2^3}",
        "caterpillars with short central paths and the stated leaf parities avoid K*_{2^s}",
        {"s": 3}, "none", lambda ctx: claims.claim_caterpillars(3, ctx),
        reference="caterpillars avoiding K*",
    ))
    registry.append(Claim(
        "CATERPILLAR-E-S4", "caterpillar family (e) on 15 edges has no rainbow copy in K*_{2^4}",
        "caterpillars CP(t,1,q) with t, q odd avoid K*_{2^s}",
        {"s": 4, "families": ["e"]}, "none",
        lambda ctx: claims.claim_caterpillars(4, ctx, families=("e",), claim_id="CATERPILLAR-E-S4"),
        optional=True, reference="caterpillars avoiding K*",
    ))
    registry.append(Claim(
        "CATERPILLAR-S4", "caterpillar families (a)-(d) on 15 edges have no rainbow copy in K*_{2^4}",
        "caterpillars with short central paths and the stated leaf parities avoid K*_{2^s}",
        {"s": 4, "families": ["a", "b", "c", "d"]}, "none",
        lambda ctx: claims.claim_caterpillars(4, ctx, families=("a", "b", "c", "d")),
        optional=True, deep=True, reference="caterpillars avoiding K*",
    ))
    registry.append(Claim(
        "TREES-7", "exactly 3 of the 23 trees on 7 edges embed rainbow in K*_{2^3}",
        "all but three trees on 7 edges avoid K*_{2^3}",
        {"k": 7}, {"classes": 23, "embeddable": 3}, lambda ctx: claims.claim_seven_edge_trees(ctx),
        reference="trees on seven edges in K*",
    ))
    registry.append(Claim(
        "SPIDER-S3", "the 2-spider on 7 edges has no rainbow copy in K*_{2^3}",
        "properly colored complete graphs need not contain a rainbow 2-spider",
        {"s": 3}, {"t=2": "none"}, lambda ctx: claims.claim_spiders(ctx),
        reference="spiders in properly colored complete graphs",
    ))

    count_lines = (
        ("D-PATH", "d-path", "rainbow P_l count in D* is n k! / (2 (k-l)!)", False),
        ("D-CYCLE", "d-cycle", "rainbow C_k count in D* is n (k-1)! / 2", False),
        ("K-C3", "k-c3", "rainbow C_3 count in K* is n k (k-1) / 6", False),
        ("K-C4", "k-c4", "rainbow C_4 count in K* is n k (k-1) (k-2) / 8", True),
        ("K-C5", "k-c5", "rainbow C_5 count in K* is n k (k-1) (k-3) (k-7) / 10", True),
    )
    for s in (2, 3, 4):
        for name, line, statement, formula_check in count_lines:
            claim_id = f"COUNT-{name}-S{s}"
            registry.append(Claim(
                claim_id, f"exact count against the closed formula ({line}, s = {s})", statement,
                {"s": s, "line": line}, "formula value",
                lambda ctx, s=s, line=line, claim_id=claim_id: claims.claim_counts(s, ctx, (line,), claim_id),
                formula_check=formula_check, reference="rainbow subgraph counts in D* and K*",
            ))
    for s in (2, 3):
        registry.append(Claim(
            f"K-CYCLE-COUNT-S{s}", f"number of rainbow C_{2 ** s - 1} in K*_{{2^{s}}}",
            "how many rainbow C_k does K*_{2^s} have for k = 2^s - 1",
            {"s": s}, None, lambda ctx, s=s: claims.claim_k_cycle_count(s, ctx),
            reference="open question on rainbow cycle counts in K*",
        ))
    registry.append(Claim(
        "K6-K5", "geometric K_6 has longest rainbow path 4; every proper K_5 coloring has a rainbow P_4",
        "a proper coloring of K_6 without rainbow P_5, while K_5 always has a rainbow P_4",
        {}, {"k6_longest": 4, "k5_rainbow_p4": "holds_for_all"}, lambda ctx: claims.claim_k6_and_k5(ctx),
        reference="rainbow paths in small complete graphs",
    ))
    registry.append(Claim(
        "PROP-PATHDEG", "maximal rainbow paths of length k end at vertices of degree <= 2k-1",
        "the endpoint of a maximal rainbow path has bounded degree",
        {}, True, lambda ctx: claims.claim_path_degree(ctx),
        reference="endpoint degree of maximal rainbow paths",
    ))
    registry.append(Claim(
        "PROP-BALANCED", "D*_{2^3}, K*_{2^3} and the geometric K_6 are balanced",
        "extremal lower-bound constructions can be taken balanced",
        {}, True, lambda ctx: claims.claim_balanced(ctx),
        reference="balanced extremal constructions",
    ))

    ids = [claim.id for claim in registry]
    if len(ids) != len(set(ids)):
        raise InvariantError("duplicate claim ids in the registry")
    return registry


def select_claims(pattern: str | None = None, deep: bool = False) -> list[Claim]:
    """Claims whose id matches the glob pattern; deep claims only when deep=True or named exactly."""
    selected = []
    for claim in build_registry():
        if pattern and not fnmatchcase(claim.id, pattern):
            continue
        if claim.deep and not deep and pattern != claim.id:
            continue
        selected.append(claim)
    return selected


def run_claim(claim: Claim, ctx: ClaimContext) -> ClaimReport:
    logger.info(f"Running {claim.id}: {claim.description}")
    started = time.perf_counter()
    try:
        report = claim.runner(ctx)
    except BudgetExceededError as e:
        logger.warning(f"{claim.id}: {e}")
        report = ClaimReport(claim.id, ClaimStatus.SKIPPED, reason=SkipReason.BUDGET, nodes_visited=e.nodes_visited,
                             details={"message": str(e)})
    except SizeLimitError as e:
        logger.warning(f"{claim.id}: {e}")
        report = ClaimReport(claim.id, ClaimStatus.SKIPPED, reason=SkipReason.SIZE_CAP, details={"message": str(e)})
    report.wall_time = time.perf_counter() - started
    logger.info(f"{claim.id}: {report.status.value} in {report.wall_time:.2f}s ({report.nodes_visited} nodes)")
    return report


def run_all(pattern: str | None = None, budget: SearchBudget | None = None,
            threads: int = settings.DEFAULT_THREADS, deep: bool = False) -> list[ClaimReport]:
    """
    Run every registered claim matching the pattern, in registry order.

    Args:
        pattern: Glob over claim ids such as "D-*"; None runs everything
        budget: Node budget per search
        threads: Worker processes handed to each claim
        deep: Include the slow instances

    Returns:
        One ClaimReport per selected claim
    """
    ctx = ClaimContext(budget or SearchBudget(), threads)
    return [run_claim(claim, ctx) for claim in select_claims(pattern, deep)]


def exit_code(reports: list[ClaimReport], registry: list[Claim] | None = None) -> int:
    """
    0 when every report is VERIFIED, a MISMATCH on a formula-check claim or a
    SKIPPED optional claim; 1 on REFUTED or any other MISMATCH; 3 when a
    required claim was SKIPPED.
    """
    by_id = {claim.id: claim for claim in (registry or build_registry())}
    code = EXIT_OK
    for report in reports:
        claim = by_id.get(report.claim_id)
        if report.status is ClaimStatus.REFUTED:
            return EXIT_REFUTED
        if report.status is ClaimStatus.MISMATCH and not (claim and claim.formula_check):
            return EXIT_REFUTED
        if report.status is ClaimStatus.SKIPPED and not (claim and claim.optional):
            code = EXIT_SKIPPED
    return code
