"""One-line human summaries printed by --quiet."""
from collections import Counter

from verify.reports import ClaimReport


def get_construct_message(kind: str, n: int, edges: int, colors: int, out: str | None) -> str:
    message = f"{kind}: {n} vertices, {edges} edges, {colors} colors"
    if out:
        message += f" -> {out}"
    return message


def get_pattern_message(patterns: list[dict]) -> str:
    if len(patterns) == 1:
        p = patterns[0]
        return f"pattern {p.get('name') or '?'}: {p['vertices']} vertices, code {p['code']}"
    return f"{len(patterns)} pattern classes"


def get_search_message(data: dict) -> str:
    """Summary for tree, cycle and longest-path searches."""
    if "length" in data:
        return f"longest rainbow path {data['length']} ({data['status']}, {data['nodes_visited']} nodes)"
    message = f"{data['status']}"
    if data.get("count") is not None:
        message += f", count {data['count']}"
    return message + f" ({data['nodes_visited']} nodes)"


def get_stick_message(data: dict) -> str:
    message = f"d={data['d']}: {data['status']}"
    if data["witness"]:
        message += f" witness {data['witness']}"
    return message + f" ({data['nodes']} nodes)"


def get_explore_message(data: dict) -> str:
    message = f"K_{data['n']} {data['family']}: {data['predicate']} -> {data['verdict']} after {data['classes_checked']} classes"
    if data["counterexample_index"] is not None:
        message += f" (counterexample #{data['counterexample_index']})"
    return message


def get_verify_message(reports: list[ClaimReport], exit_code: int) -> str:
    tally = Counter(report.status.value for report in reports)
    parts = ", ".join(f"{count} {status}" for status, count in sorted(tally.items()))
    return f"{len(reports)} claims: {parts or 'none selected'}; exit {exit_code}"


def get_history_message(runs: list[dict]) -> str:
    if not runs:
        return "no archived runs"
    lines = []
    for run in runs:
        statuses = " ".join(f"{k}={v}" for k, v in run["statuses"].items())
        lines.append(f"#{run['run_id']} {run['started_at']} filter={run['claim_filter'] or '*'} "
                     f"exit={run['exit_code']} {statuses}")
    return "\n".join(lines)
