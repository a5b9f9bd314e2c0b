import json

import pytest

from cli.commands import EXIT_FAILURE, EXIT_OK, EXIT_REFUSED, EXIT_USAGE, UsageError, main, parse_predicate


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _error(err: str) -> dict:
    return json.loads(err.strip().splitlines()[-1])


@pytest.fixture
def d3_file(tmp_path, capsys):
    path = tmp_path / "d3.json"
    assert main(["construct", "--kind", "dstar", "--param", "3", "--out", str(path)]) == EXIT_OK
    capsys.readouterr()
    return path


def test_construct_writes_graph(tmp_path, capsys):
    path = tmp_path / "d3.json"
    code, out, _ = _run(capsys, "construct", "--kind", "dstar", "--param", "3", "--out", str(path))
    assert code == EXIT_OK
    assert json.loads(out) == {"out": str(path), "n": 8, "edges": 16, "colors": 4}
    data = json.loads(path.read_text())
    assert data["n"] == 8 and len(data["edges"]) == 16


def test_construct_prints_graph_json(capsys):
    code, out, _ = _run(capsys, "construct", "--kind", "kstar", "--param", "2")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["n"] == 4 and len(data["edges"]) == 6


def test_construct_random_is_seeded(capsys):
    _, first, _ = _run(capsys, "--seed", "5", "construct", "--kind", "random", "--param", "7", "--p", "0.6")
    _, second, _ = _run(capsys, "--seed", "5", "construct", "--kind", "random", "--param", "7", "--p", "0.6")
    assert first == second


def test_construct_dot(tmp_path, capsys):
    path = tmp_path / "k6.dot"
    code, _, _ = _run(capsys, "construct", "--kind", "k6", "--out", str(path))
    assert code == EXIT_OK
    assert path.read_text().startswith("graph")


def test_pattern_and_search(tmp_path, capsys, d3_file):
    p4 = tmp_path / "p4.json"
    code, out, _ = _run(capsys, "pattern", "--family", "path", "--k", "4", "--out", str(p4))
    assert code == EXIT_OK
    assert json.loads(out)["name"] == "P4"

    code, out, _ = _run(capsys, "search", "--graph", str(d3_file), "--pattern", str(p4))
    assert code == EXIT_OK
    assert json.loads(out)["status"] == "none"

    p2 = tmp_path / "p2.json"
    _run(capsys, "pattern", "--family", "path", "--k", "2", "--out", str(p2))
    code, out, _ = _run(capsys, "search", "--graph", str(d3_file), "--pattern", str(p2), "--count")
    assert code == EXIT_OK
    assert json.loads(out)["count"] == 48


def test_search_cycles_and_longest_path(capsys, d3_file):
    code, out, _ = _run(capsys, "search", "--graph", str(d3_file), "--cycle", "4", "--count", "--anchored")
    assert code == EXIT_OK
    assert json.loads(out)["count"] == 24

    code, out, _ = _run(capsys, "search", "--graph", str(d3_file), "--longest-path")
    assert json.loads(out)["length"] == 3


def test_search_budget_exit(tmp_path, capsys):
    k3 = tmp_path / "k3.json"
    broom = tmp_path / "broom.json"
    _run(capsys, "construct", "--kind", "kstar", "--param", "3", "--out", str(k3))
    _run(capsys, "pattern", "--family", "broom", "--k", "7", "--l", "3", "--out", str(broom))
    code, out, _ = _run(capsys, "search", "--graph", str(k3), "--pattern", str(broom), "--budget", "10")
    assert code == EXIT_REFUSED
    assert json.loads(out)["status"] == "budget"


def test_search_is_thread_independent(tmp_path, capsys, d3_file):
    p3 = tmp_path / "p3.json"
    _run(capsys, "pattern", "--family", "path", "--k", "3", "--out", str(p3))
    _, single, _ = _run(capsys, "search", "--graph", str(d3_file), "--pattern", str(p3))
    _, pooled, _ = _run(capsys, "--threads", "2", "search", "--graph", str(d3_file), "--pattern", str(p3))
    assert single == pooled


def test_pattern_enumerate(capsys):
    code, out, _ = _run(capsys, "pattern", "--family", "enumerate", "--k", "5")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["classes"] == 6 and len(data["patterns"]) == 6


def test_stick(capsys):
    code, out, _ = _run(capsys, "stick", "--d", "2")
    assert code == EXIT_OK
    assert json.loads(out)["status"] == "unsat"

    code, _, err = _run(capsys, "stick", "--d", "13")
    assert code == EXIT_REFUSED
    assert _error(err)["error"] == "SizeLimitError"


def test_explore_finds_k4_counterexample(capsys):
    code, out, _ = _run(capsys, "explore", "--n", "4", "--predicate", "rainbow-path:3")
    assert code == EXIT_FAILURE
    data = json.loads(out)
    assert data["verdict"] == "counterexample"
    assert data["counterexample"] is not None


def test_explore_default_palette_is_unbounded(capsys):
    # Every Hamiltonian path of a 3-colored K_4 repeats a color, so only wider palettes refute this.
    code, out, _ = _run(capsys, "explore", "--n", "4", "--predicate", "no-rainbow-path:3")
    assert code == EXIT_FAILURE
    data = json.loads(out)
    assert data["family"] == "proper colorings with at most 6 colors"
    assert len(data["counterexample"]["color_classes"]) > 3

    code, out, _ = _run(capsys, "explore", "--n", "4", "--colors", "3", "--predicate", "no-rainbow-path:3")
    assert code == EXIT_OK
    assert json.loads(out)["verdict"] == "holds_for_all"


def test_explore_refuted_predicate_exits_one(capsys):
    code, out, _ = _run(capsys, "explore", "--n", "4", "--predicate", "no-rainbow-path:1")
    assert code == EXIT_FAILURE
    data = json.loads(out)
    assert data["verdict"] == "counterexample" and data["counterexample_index"] == 0


def test_explore_budget_exit(capsys):
    code, _, err = _run(capsys, "explore", "--n", "4", "--colors", "3", "--budget", "1",
                        "--predicate", "no-rainbow-path:3")
    assert code == EXIT_REFUSED
    assert _error(err)["error"] == "BudgetExceededError"


def test_explore_factorizations(capsys):
    code, out, _ = _run(capsys, "explore", "--n", "6", "--factorizations", "--predicate", "no-rainbow-path:5")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["classes_total"] == 1 and data["verdict"] == "holds_for_all"


def test_parse_predicate():
    assert parse_predicate("rainbow-path:3").present
    assert not parse_predicate("no-rainbow-path:3").present
    for bad in ("rainbow-path", "rainbow-path:x", "purple-path:3"):
        with pytest.raises(UsageError):
            parse_predicate(bad)


def test_verify(tmp_path, capsys):
    report_file = tmp_path / "reports.json"
    code, out, _ = _run(capsys, "verify", "--claim", "D-PATH-S3", "--json", str(report_file))
    assert code == EXIT_OK
    (report,) = json.loads(out)
    assert report["claim_id"] == "D-PATH-S3" and report["status"] == "VERIFIED"
    assert json.loads(report_file.read_text())[0]["claim_id"] == "D-PATH-S3"


def test_verify_list(capsys):
    code, out, _ = _run(capsys, "verify", "--claim", "B-K2-*", "--list")
    assert code == EXIT_OK
    assert [claim["id"] for claim in json.loads(out)] == [f"B-K2-K{k}" for k in range(2, 8)]


def test_quiet_and_json_out(tmp_path, capsys):
    out_file = tmp_path / "stick.json"
    code, out, _ = _run(capsys, "--quiet", "--json-out", str(out_file), "stick", "--d", "3")
    assert code == EXIT_OK
    assert out.strip().startswith("d=3: unsat")
    assert json.loads(out_file.read_text())["status"] == "unsat"


@pytest.mark.parametrize("argv", [
    [],
    ["construct"],
    ["construct", "--kind", "nonsense"],
    ["pattern", "--family", "broom", "--k", "5"],
    ["pattern", "--family", "caterpillar", "--leaves", "1,x"],
    ["--threads", "0", "stick", "--d", "3"],
])
def test_usage_errors(capsys, argv):
    code, _, err = _run(capsys, *argv)
    assert code == EXIT_USAGE
    assert "message" in _error(err)


def test_domain_errors_exit_two(capsys):
    code, _, err = _run(capsys, "construct", "--kind", "kstar", "--param", "99")
    assert code == EXIT_USAGE
    assert _error(err)["error"] in ("DomainError", "PreconditionError")


def test_missing_file(tmp_path, capsys):
    code, _, err = _run(capsys, "search", "--graph", str(tmp_path / "absent.json"), "--longest-path")
    assert code == EXIT_USAGE
    assert _error(err)["error"] == "FileNotFoundError"
