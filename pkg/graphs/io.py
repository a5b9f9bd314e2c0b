"""JSON and DOT interchange for colored graphs."""
import json
import logging
from pathlib import Path
from typing import Any

import networkx as nx

from errors import DomainError
from graphs.ecgraph import ColoredGraph

logger = logging.getLogger(__name__)

# Cosmetic only; the label carries the color id.
DOT_PALETTE = [
    "red", "blue", "green3", "orange", "purple", "cyan3", "magenta", "gold3",
    "brown", "gray40", "darkgreen", "navy", "deeppink", "olivedrab", "sienna",
]


def graph_to_json(g: ColoredGraph) -> dict[str, Any]:
    """Edges normalized u < v and sorted lexicographically."""
    return {"n": g.n, "edges": [[e.u, e.v, e.color] for e in g.edges]}


def graph_from_json(data: dict[str, Any]) -> ColoredGraph:
    try:
        n = int(data["n"])
        edges = [(int(u), int(v), int(c)) for u, v, c in data["edges"]]
    except (KeyError, TypeError, ValueError) as e:
        raise DomainError(f"malformed graph JSON: {e}") from e
    return ColoredGraph(n, edges)


def graph_to_dot(g: ColoredGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for e in g.edges:
        hue = DOT_PALETTE[g.color_ids.index(e.color) % len(DOT_PALETTE)]
        lines.append(f'  {e.u} -- {e.v} [label="{e.color}", color="{hue}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_networkx(g: ColoredGraph) -> nx.Graph:
    """networkx view with the color stored on the `color` edge attribute."""
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from((e.u, e.v, {"color": e.color}) for e in g.edges)
    return graph


def save_graph(g: ColoredGraph, path: str | Path) -> Path:
    """Write JSON or DOT depending on the file suffix."""
    path = Path(path)
    if path.suffix == ".dot":
        path.write_text(graph_to_dot(g))
    else:
        path.write_text(json.dumps(graph_to_json(g)))
    logger.info(f"Wrote graph with {g.n} vertices and {g.edge_count} edges to {path}")
    return path


def load_graph(path: str | Path) -> ColoredGraph:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise DomainError(f"{path} is not valid JSON: {e}") from e
    return graph_from_json(data)
