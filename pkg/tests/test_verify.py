import pytest

from errors import InvariantError
from rainbow.budget import SearchBudget
from verify import claims
from verify.registry import EXIT_OK, EXIT_REFUTED, EXIT_SKIPPED, build_registry, exit_code, run_all, run_claim, select_claims
from verify.reports import Claim, ClaimContext, ClaimReport, ClaimStatus, SkipReason


def _by_id(reports):
    return {report.claim_id: report for report in reports}


def _claim(claim_id, **flags):
    return Claim(claim_id, "", "", {}, None, lambda ctx: None, **flags)


# Registry


def test_registry_ids_are_unique_and_stable():
    ids = [claim.id for claim in build_registry()]
    assert len(ids) == len(set(ids))
    assert ids == [claim.id for claim in build_registry()]
    for expected in ("D-PATH-S3", "D-GIRTH-S5", "D-TIGHT-S2", "B-K2-K7", "B-K3-S3", "BROOM-STICKS",
                     "CATERPILLAR-S3", "CATERPILLAR-E-S4", "TREES-7", "COUNT-K-C4-S3", "K6-K5",
                     "PROP-PATHDEG", "PROP-BALANCED", "SPIDER-S3", "K-CYCLE-COUNT-S2"):
        assert expected in ids


def test_claims_carry_descriptive_statements():
    for claim in build_registry():
        assert claim.description and claim.statement and claim.reference
        data = claim.to_json()
        assert list(data) == ["id", "description", "statement", "reference", "parameters",
                              "expected", "formula_check", "optional", "deep"]


def test_select_claims_by_glob():
    ids = [claim.id for claim in select_claims("D-*")]
    assert ids == [f"D-PATH-S{s}" for s in range(2, 6)] + [f"D-GIRTH-S{s}" for s in range(2, 6)] + \
        [f"D-TIGHT-S{s}" for s in range(2, 6)]
    assert [claim.id for claim in select_claims("COUNT-K-C4-*")] == [f"COUNT-K-C4-S{s}" for s in (2, 3, 4)]


def test_deep_claims_need_opt_in():
    assert "D-PATH-S6" not in [claim.id for claim in select_claims("D-PATH-*")]
    assert "D-PATH-S6" in [claim.id for claim in select_claims("D-PATH-*", deep=True)]
    assert [claim.id for claim in select_claims("D-PATH-S6")] == ["D-PATH-S6"]


def test_formula_and_optional_flags():
    registry = {claim.id: claim for claim in build_registry()}
    assert registry["COUNT-K-C4-S3"].formula_check
    assert registry["COUNT-K-C5-S4"].formula_check
    assert not registry["COUNT-K-C3-S3"].formula_check
    assert registry["B-K2-K2"].optional
    assert registry["CATERPILLAR-E-S4"].optional
    assert not registry["CATERPILLAR-S3"].optional


# Reports


def test_report_invariants():
    with pytest.raises(InvariantError):
        ClaimReport("X", ClaimStatus.REFUTED)
    with pytest.raises(InvariantError):
        ClaimReport("X", ClaimStatus.MISMATCH)
    with pytest.raises(InvariantError):
        ClaimReport("X", ClaimStatus.SKIPPED)
    report = ClaimReport("X", ClaimStatus.SKIPPED, reason=SkipReason.BUDGET, wall_time=1.5)
    assert list(report.to_json()) == ["claim_id", "status", "reason", "expected", "found", "witness",
                                      "nodes_visited", "wall_time", "details"]
    assert "wall_time" not in report.to_json(include_time=False)
    assert report.to_json()["reason"] == "budget"


# Exit policy


def test_exit_policy():
    registry = [
        _claim("PLAIN"),
        _claim("FORMULA", formula_check=True),
        _claim("OPTIONAL", optional=True),
    ]
    verified = ClaimReport("PLAIN", ClaimStatus.VERIFIED)
    assert exit_code([verified], registry) == EXIT_OK
    assert exit_code([], registry) == EXIT_OK
    assert exit_code([ClaimReport("FORMULA", ClaimStatus.MISMATCH, found=1)], registry) == EXIT_OK
    assert exit_code([ClaimReport("PLAIN", ClaimStatus.MISMATCH, found=1)], registry) == EXIT_REFUTED
    assert exit_code([ClaimReport("PLAIN", ClaimStatus.REFUTED, witness=[0])], registry) == EXIT_REFUTED
    optional_skip = ClaimReport("OPTIONAL", ClaimStatus.SKIPPED, reason=SkipReason.BUDGET)
    assert exit_code([verified, optional_skip], registry) == EXIT_OK
    required_skip = ClaimReport("PLAIN", ClaimStatus.SKIPPED, reason=SkipReason.BUDGET)
    assert exit_code([required_skip, verified], registry) == EXIT_SKIPPED
    assert exit_code([required_skip, ClaimReport("PLAIN", ClaimStatus.REFUTED, found=0)], registry) == EXIT_REFUTED


def test_run_claim_maps_budget_and_size_errors():
    from errors import BudgetExceededError, SizeLimitError

    def out_of_budget(ctx):
        raise BudgetExceededError("too big", 42)

    def too_large(ctx):
        raise SizeLimitError("n too large")

    report = run_claim(Claim("B", "", "", {}, None, out_of_budget), ClaimContext())
    assert report.status is ClaimStatus.SKIPPED and report.reason is SkipReason.BUDGET
    assert report.nodes_visited == 42
    report = run_claim(Claim("S", "", "", {}, None, too_large), ClaimContext())
    assert report.reason is SkipReason.SIZE_CAP


# Claims


@pytest.mark.parametrize("claim_id", [
    "D-PATH-S2", "D-PATH-S3", "D-GIRTH-S2", "D-GIRTH-S3", "D-TIGHT-S2", "D-TIGHT-S3",
    "B-K2-K3", "B-K2-K4", "B-K2-K5", "B-K3-S3", "SPIDER-S3", "PROP-PATHDEG", "PROP-BALANCED",
    "COUNT-D-PATH-S2", "COUNT-D-PATH-S3", "COUNT-D-CYCLE-S3", "COUNT-K-C3-S2", "COUNT-K-C3-S3",
    "K-CYCLE-COUNT-S2",
])
def test_cheap_claims_verify(claim_id):
    (report,) = run_all(claim_id)
    assert report.status is ClaimStatus.VERIFIED, report.to_json()
    assert report.nodes_visited > 0


def test_degenerate_claims_are_skipped():
    reports = _by_id(run_all("B-K*-*2"))
    assert reports["B-K2-K2"].status is ClaimStatus.SKIPPED
    assert reports["B-K2-K2"].reason is SkipReason.PARAMETER_INFEASIBLE
    assert reports["B-K3-S2"].reason is SkipReason.PARAMETER_INFEASIBLE
    assert exit_code(list(reports.values())) == EXIT_OK


def test_k_c4_formula_mismatch_is_reported_with_both_numbers():
    (report,) = run_all("COUNT-K-C4-S3")
    assert report.status is ClaimStatus.MISMATCH
    assert report.expected == {"K-C4": 210}
    assert report.found == {"K-C4": 168}
    assert exit_code([report]) == EXIT_OK


def test_k_c5_formula_at_three():
    (report,) = run_all("COUNT-K-C5-S3")
    assert report.status is ClaimStatus.VERIFIED
    assert report.found == {"K-C5": 0}


def test_d_path_counts_follow_the_formula():
    report = claims.claim_counts(3, lines=("d-path",))
    assert report.found == {"P1": 16, "P2": 48, "P3": 96}
    assert report.details["P4"] == 0


def test_k_cycle_count_cross_checks_closed_walks():
    report = claims.claim_k_cycle_count(2)
    assert report.found == 4
    assert report.details["closed_walks"] == 2 * 3 * 4


def test_tiny_budget_skips_instead_of_refuting():
    (report,) = run_all("B-K3-S3", budget=SearchBudget(5))
    assert report.status is ClaimStatus.SKIPPED
    assert report.reason is SkipReason.BUDGET
    assert exit_code([report]) == EXIT_SKIPPED


def test_caterpillar_instances():
    labels = {family: [spec.label() for spec in claims.caterpillar_instances(3, family)] for family in "abcde"}
    assert labels["a"] == ["CP(1,3,1)"]
    assert labels["c"] == ["CP(2,0,3)", "CP(3,0,2)"]
    assert labels["e"] == []
    assert [spec.label() for spec in claims.caterpillar_instances(4, "e")] == \
        ["CP(3,1,9)", "CP(5,1,7)", "CP(7,1,5)", "CP(9,1,3)"]
    for s in (3, 4):
        for family in "abcde":
            for spec in claims.caterpillar_instances(s, family):
                assert spec.edge_count == 2 ** s - 1


@pytest.mark.slow
@pytest.mark.parametrize("claim_id", ["CATERPILLAR-S3", "TREES-7", "B-K2-K7", "K6-K5", "BROOM-STICKS"])
def test_slow_claims_verify(claim_id):
    (report,) = run_all(claim_id)
    assert report.status is ClaimStatus.VERIFIED, report.to_json()


# Determinism


def test_run_all_is_repeatable():
    first = [report.to_json(include_time=False) for report in run_all("D-*")]
    second = [report.to_json(include_time=False) for report in run_all("D-*")]
    assert first == second


def test_run_all_is_thread_independent():
    single = [report.to_json(include_time=False) for report in run_all("COUNT-*-S2")]
    pooled = [report.to_json(include_time=False) for report in run_all("COUNT-*-S2", threads=2)]
    assert single == pooled
