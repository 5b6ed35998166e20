"""
Named graph families and the "kind:params" spec syntax used on the command line.

Labelings (all vertex sets are 1..n):
    path n      edges {i, i+1}
    cycle n     edges {i, i+1} and {n, 1}
    star n      center 1, leaves 2..n
    spider λ    center 1; leg j occupies the next λ_j labels, walking outward
    dand k,n    Spider(n-k, 1, ..., 1): the long leg first, then k-1 pendants
    fruit n     edges {1, n-1}, {1, n}, {i, i+1} for i in [n-2]
    theta0      hubs 1 and 2 joined by 1-3-4-2, 1-5-6-2 and 1-7-2
"""
import re
from dataclasses import dataclass
from itertools import combinations

from core.errors import ParameterError
from core.graph import Graph, complement

KINDS = ("path", "cycle", "star", "complete", "empty", "spider", "dand", "fruit", "theta0", "co")


@dataclass(frozen=True)
class FamilySpec:
    """A named family member, e.g. FamilySpec("spider", (3, 2, 2))."""

    kind: str
    params: tuple = ()
    inner: "FamilySpec" = None

    def __str__(self):
        return family_name(self)


def path(n):
    return make_family(FamilySpec("path", (n,)))


def cycle(n):
    return make_family(FamilySpec("cycle", (n,)))


def star(n):
    return make_family(FamilySpec("star", (n,)))


def complete(n):
    return make_family(FamilySpec("complete", (n,)))


def empty(n):
    return make_family(FamilySpec("empty", (n,)))


def spider(*legs):
    return make_family(FamilySpec("spider", tuple(legs)))


def dandelion(k, n):
    return make_family(FamilySpec("dand", (k, n)))


def fruit(n):
    return make_family(FamilySpec("fruit", (n,)))


def theta0():
    return make_family(FamilySpec("theta0"))


def _spider_edges(legs):
    edges, nxt = [], 2
    for length in legs:
        prev = 1
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return nxt - 1, edges


def _need(cond, message):
    if not cond:
        raise ParameterError(message)


def make_family(spec):
    """
    Build the graph for a FamilySpec using the labelings in the module docstring.

    Raises:
        ParameterError: naming the violated bound.
    """
    kind, p = spec.kind, spec.params
    if kind == "co":
        _need(spec.inner is not None, "co(...) needs an inner family")
        return complement(make_family(spec.inner))
    if kind == "theta0":
        return Graph(7, [(1, 3), (3, 4), (4, 2), (1, 5), (5, 6), (6, 2), (1, 7), (7, 2)])
    if kind == "spider":
        _need(len(p) >= 1, "spider needs at least one leg")
        _need(all(x >= 1 for x in p), f"spider legs must be positive, got {p}")
        n, edges = _spider_edges(p)
        return Graph(n, edges)
    if kind == "dand":
        _need(len(p) == 2, "dand needs parameters k,n")
        k, n = p
        _need(n >= k >= 2, f"dandelion requires n >= k >= 2, got k={k}, n={n}")
        legs = ([n - k] if n > k else []) + [1] * (k - 1)
        n_built, edges = _spider_edges(legs)
        return Graph(n_built, edges)
    _need(len(p) == 1, f"{kind} takes one size parameter")
    n = p[0]
    if kind == "path":
        _need(n >= 1, f"path requires n >= 1, got {n}")
        return Graph(n, [(i, i + 1) for i in range(1, n)])
    if kind == "cycle":
        _need(n >= 3, f"cycle requires n >= 3, got {n}")
        return Graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])
    if kind == "star":
        _need(n >= 1, f"star requires n >= 1, got {n}")
        return Graph(n, [(1, v) for v in range(2, n + 1)])
    if kind == "complete":
        _need(n >= 1, f"complete requires n >= 1, got {n}")
        return Graph(n, combinations(range(1, n + 1), 2))
    if kind == "empty":
        _need(n >= 1, f"empty requires n >= 1, got {n}")
        return Graph(n)
    if kind == "fruit":
        _need(n >= 4, f"fruit graph requires n >= 4, got {n}")
        return Graph(n, [(1, n - 1), (1, n)] + [(i, i + 1) for i in range(1, n - 1)])
    raise ParameterError(f"unknown family kind '{kind}' (expected one of {', '.join(KINDS)})")


_SIMPLE = re.compile(r"^([a-z]+[0-9]*)(?::([0-9]+(?:,[0-9]+)*))?$")


def parse_family(text):
    """
    Parse the CLI syntax: "path:5", "spider:3,2,2", "dand:3,8", "theta0", "co(fruit:7)".
    """
    s = text.strip().replace(" ", "")
    if s.startswith("co(") and s.endswith(")"):
        return FamilySpec("co", (), parse_family(s[3:-1]))
    m = _SIMPLE.match(s)
    if not m:
        raise ParameterError(f"cannot parse family spec '{text}'")
    kind, params = m.group(1), m.group(2)
    if kind not in KINDS or kind == "co":
        raise ParameterError(f"unknown family kind '{kind}' in '{text}'")
    values = tuple(int(x) for x in params.split(",")) if params else ()
    if kind == "theta0" and values:
        raise ParameterError("theta0 takes no parameters")
    if kind != "theta0" and not values:
        raise ParameterError(f"family '{kind}' needs parameters, e.g. '{kind}:5'")
    spec = FamilySpec(kind, values)
    make_family(spec)
    return spec


def family_name(spec):
    """Inverse of parse_family."""
    if spec.kind == "co":
        return f"co({family_name(spec.inner)})"
    if spec.kind == "theta0":
        return "theta0"
    return f"{spec.kind}:{','.join(str(x) for x in spec.params)}"
