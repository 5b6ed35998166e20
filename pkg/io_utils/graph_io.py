"""
Reads graphs, permutations and label sequences from command-line text and
JSON files, and renders graphs and components as DOT.
"""
import json
import os

from core.coxeter import label_from_text
from core.errors import ParameterError
from core.families import family_name, make_family, parse_family
from core.graph import Graph
from core.permutations import Permutation


def graph_to_dict(g, name=None):
    """JSON-ready form of a graph: {"n", "edges", "name"}."""
    return {"n": g.n, "edges": [list(e) for e in g.edges()], "name": name}


def graph_from_dict(data):
    """
    Inverse of graph_to_dict.

    Raises:
        ParameterError: when "n" or "edges" is missing or malformed.
    """
    try:
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParameterError(f"graph JSON needs integer 'n' and an 'edges' list of pairs ({exc})") from exc
    return Graph(n, edges)


def load_graph(text):
    """
    Resolve a graph argument.

    Args:
        text (str): A family spec ("spider:2,2,2", "co(fruit:7)") or a path to
            a JSON file written by graph_to_dict.

    Returns:
        tuple: (Graph, display name)
    """
    if text.endswith(".json") or os.path.isfile(text):
        try:
            with open(text, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ParameterError(f"cannot read graph file '{text}': {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ParameterError(f"graph file '{text}' is not valid JSON: {exc}") from exc
        return graph_from_dict(data), data.get("name") or os.path.basename(text)
    spec = parse_family(text)
    return make_family(spec), family_name(spec)


def parse_permutation(text, n=None):
    """
    Parse a one-line permutation "2,1,3,4".

    Raises:
        ParameterError: when the values are not a permutation of 1..n.
    """
    try:
        images = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError as exc:
        raise ParameterError(f"cannot parse permutation '{text}'") from exc
    size = len(images) if n is None else n
    if sorted(images) != list(range(1, size + 1)):
        raise ParameterError(f"'{text}' is not a permutation of 1..{size}")
    return Permutation(images)


def parse_labels(text):
    """Comma-separated edge labels: "12,13,23,12" or "1-10,2-10"."""
    parts = [p for p in text.replace(" ", "").split(",") if p]
    return tuple(label_from_text(p) for p in parts)


def graph_to_dot(g, name="G"):
    lines = [f'graph "{name}" {{']
    lines += [f"  {v};" for v in g.vertices]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def component_to_dot(c, name="component"):
    """
    DOT rendering of an explicit FS component; nodes are named by their
    one-line permutation and edges carry their swap labels.
    """
    lines = [f'graph "{name}" {{', "  node [shape=box];"]
    for i, v in enumerate(c.vertices):
        text = "".join(str(x) for x in v.images) if v.n < 10 else ",".join(str(x) for x in v.images)
        lines.append(f'  v{i} [label="{text}"];')
    for i, j, label in c.edges:
        lines.append(f'  v{i} -- v{j} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
