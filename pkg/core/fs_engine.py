"""
Friends-and-strangers graphs FS(X, Y).

Vertices are bijections sigma: V(X) -> V(Y) (X-vertices are chairs, Y-vertices
are people); sigma and sigma o (a b) are adjacent when {a, b} is an X-edge and
{sigma(a), sigma(b)} is a Y-edge. The graph is never materialized: the census
walks the Lehmer rank range in chunks, generates every friendly swap with numpy
and hands the edge list to scipy's connected_components.
"""
from collections import deque
from dataclasses import dataclass, field
from math import factorial
from typing import NamedTuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from core.errors import ParameterError
from core.graph import bipartition, is_biconnected, is_connected
from core.permutations import Permutation, rank, rank_rows, unrank, unrank_range, sign
from core.small_graphs import is_isomorphic
from core.families import theta0
from metrics.logger import log_debug, progress
from metrics.monitor import DEFAULT_BUDGET, ensure_census_capacity

DEFAULT_CHUNK = 262144


class EdgeLabel(NamedTuple):
    """Unordered pair of people exchanged by a friendly swap, stored lo < hi."""

    lo: int
    hi: int

    @classmethod
    def of(cls, u, v):
        if u == v:
            raise ParameterError(f"edge label needs two distinct people, got {u}")
        return cls(min(u, v), max(u, v))

    def __str__(self):
        if self.hi < 10:
            return f"{self.lo}{self.hi}"
        return f"{self.lo}-{self.hi}"

    def meets(self, other):
        return self.lo in other or self.hi in other


@dataclass(frozen=True)
class ComponentCensus:
    """Component count, sizes and minimum-rank representatives, ordered by representative."""

    count: int
    sizes: tuple
    reps: tuple

    def to_dict(self):
        return {
            "count": self.count,
            "sizes": list(self.sizes),
            "reps": [r.to_list() for r in self.reps],
        }


@dataclass(frozen=True)
class StarPrediction:
    """
    Component structure of FS(Star_n, Y) read off Y alone.

    kind is one of Connected, TwoHalves, ThetaSix, CyclicOrders, NotBiconnected;
    count and size are None for NotBiconnected.
    """

    kind: str
    count: int = None
    size: int = None

    def to_dict(self):
        return {"kind": self.kind, "count": self.count, "size": self.size}


@dataclass
class ExplicitComponent:
    """
    One component of FS(X, Y) with its vertices sorted by rank and every edge
    listed once as (i, j, label) with i < j indexing into vertices.
    """

    vertices: tuple
    edges: tuple
    _index: dict = field(default=None, repr=False, compare=False)

    @property
    def size(self):
        return len(self.vertices)

    @property
    def num_edges(self):
        return len(self.edges)

    def index_of(self, sigma):
        if self._index is None:
            self._index = {v: i for i, v in enumerate(self.vertices)}
        return self._index[sigma]

    def adjacency(self):
        """adj[i] = list of (neighbor index, edge index)."""
        adj = [[] for _ in self.vertices]
        for k, (i, j, _) in enumerate(self.edges):
            adj[i].append((j, k))
            adj[j].append((i, k))
        return adj

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.size))
        for k, (i, j, label) in enumerate(self.edges):
            g.add_edge(i, j, index=k, label=label)
        return g

    def to_dict(self):
        return {
            "vertices": [v.to_list() for v in self.vertices],
            "edges": [[i, j, [lab.lo, lab.hi]] for i, j, lab in self.edges],
        }


def _check_sizes(x, y):
    if x.n != y.n:
        raise ParameterError(f"X has {x.n} vertices but Y has {y.n}")
    if x.n < 1:
        raise ParameterError("friends-and-strangers graphs need n >= 1")


def _as_perm(sigma, n):
    if not isinstance(sigma, Permutation):
        sigma = Permutation(tuple(sigma))
    if sigma.n != n:
        raise ParameterError(f"permutation has length {sigma.n}, expected {n}")
    return sigma


def _swaps(x, y, images):
    """Friendly swaps out of a one-line tuple: (neighbor tuple, label)."""
    out = []
    for a, b in x.edges():
        pa, pb = images[a - 1], images[b - 1]
        if y.has_edge(pa, pb):
            nxt = list(images)
            nxt[a - 1], nxt[b - 1] = pb, pa
            out.append((tuple(nxt), EdgeLabel.of(pa, pb)))
    return out


def fs_neighbors(x, y, sigma):
    """
    Neighbors of sigma in FS(x, y), one per X-edge {a, b} (in sorted X-edge
    order) whose occupants are Y-adjacent.

    Returns:
        list: (Permutation, EdgeLabel) pairs.
    """
    _check_sizes(x, y)
    sigma = _as_perm(sigma, x.n)
    return [(Permutation(t), lab) for t, lab in _swaps(x, y, sigma.images)]


def _chunk_edges(x_edges, ymat, n, start, stop):
    perms = unrank_range(start, stop, n)
    src = np.arange(start, stop, dtype=np.int64)
    for a, b in x_edges:
        ia, ib = a - 1, b - 1
        mask = ymat[perms[:, ia], perms[:, ib]]
        if not mask.any():
            continue
        rows = perms[mask]
        rows[:, [ia, ib]] = rows[:, [ib, ia]]
        dst = rank_rows(rows)
        s = src[mask]
        keep = s < dst
        yield s[keep], dst[keep]


def _census(x, y, budget, chunk):
    _check_sizes(x, y)
    n = x.n
    ensure_census_capacity(n, x.num_edges, budget)
    total = factorial(n)
    ymat = y.adjacency_matrix()
    x_edges = x.edges()
    srcs, dsts = [], []
    starts = range(0, total, chunk)
    for start in progress(starts, total=len(starts), desc=f"census n={n}", unit="chunk"):
        for s, d in _chunk_edges(x_edges, ymat, n, start, min(start + chunk, total)):
            srcs.append(s)
            dsts.append(d)
    src = np.concatenate(srcs) if srcs else np.zeros(0, dtype=np.int64)
    dst = np.concatenate(dsts) if dsts else np.zeros(0, dtype=np.int64)
    adj = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(total, total))
    count, raw = connected_components(adj, directed=False)
    # first occurrence of each raw label is its minimum rank
    _, first = np.unique(raw, return_index=True)
    order = np.argsort(first)
    relabel = np.empty(count, dtype=np.int64)
    relabel[np.unique(raw)[order]] = np.arange(count)
    labels = relabel[raw]
    sizes = np.bincount(labels, minlength=count)
    reps = tuple(unrank(int(first[k]), n) for k in order)
    log_debug(f"census n={n}: {len(src)} edges, {count} components")
    census = ComponentCensus(int(count), tuple(int(s) for s in sizes), reps)
    return census, labels


def fs_components(x, y, budget=DEFAULT_BUDGET, chunk=DEFAULT_CHUNK):
    """
    Exact component census of FS(x, y).

    Raises:
        ParameterError: when |V(x)| != |V(y)|.
        CapabilityError: when n! exceeds the budget or available memory.
    """
    return _census(x, y, budget, chunk)[0]


def census_labels(x, y, budget=DEFAULT_BUDGET, chunk=DEFAULT_CHUNK):
    """Component index of every rank 0..n!-1, components numbered by representative."""
    return _census(x, y, budget, chunk)[1]


def fs_is_connected(x, y, budget=DEFAULT_BUDGET, chunk=DEFAULT_CHUNK):
    return fs_components(x, y, budget, chunk).count == 1


def _is_cycle_graph(y):
    return y.n >= 3 and is_connected(y) and all(d == 2 for d in y.degrees())


def star_components_predicted(y):
    """
    Component structure of FS(Star_n, y) from Wilson's classification.
    """
    n = y.n
    if n < 3:
        raise ParameterError(f"star prediction needs n >= 3, got {n}")
    biconnected, _ = is_biconnected(y)
    if not biconnected:
        return StarPrediction("NotBiconnected")
    if n == 7 and y.num_edges == 8 and is_isomorphic(y, theta0()):
        return StarPrediction("ThetaSix", 6, factorial(7) // 6)
    if _is_cycle_graph(y):
        return StarPrediction("CyclicOrders", factorial(n - 2), n * (n - 1))
    if bipartition(y) is not None:
        return StarPrediction("TwoHalves", 2, factorial(n) // 2)
    return StarPrediction("Connected", 1, factorial(n))


def _is_side(g, side):
    side = frozenset(side)
    if not side <= frozenset(g.vertices):
        return False
    return all((u in side) != (v in side) for u, v in g.edges())


def bipartite_parity(x, y, a_x, a_y, sigma):
    """
    Parity bit |sigma(A_X) & A_Y| + (sgn(sigma) + 1) / 2 mod 2, constant on the
    components of FS(x, y) when both graphs are bipartite.

    Raises:
        ParameterError: when a_x or a_y is not a side of a bipartition.
    """
    _check_sizes(x, y)
    sigma = _as_perm(sigma, x.n)
    if not _is_side(x, a_x):
        raise ParameterError(f"{sorted(a_x)} is not a bipartition side of X")
    if not _is_side(y, a_y):
        raise ParameterError(f"{sorted(a_y)} is not a bipartition side of Y")
    a_y = frozenset(a_y)
    hits = sum(1 for v in a_x if sigma(v) in a_y)
    return (hits + (sign(sigma.images) + 1) // 2) % 2


def _closure(x, y, start):
    seen = {start: None}
    queue = deque([start])
    adjacency = {}
    while queue:
        cur = queue.popleft()
        nbrs = _swaps(x, y, cur)
        adjacency[cur] = nbrs
        for nxt, _ in nbrs:
            if nxt not in seen:
                seen[nxt] = None
                queue.append(nxt)
    return adjacency


def fs_component_of(x, y, sigma, budget=DEFAULT_BUDGET):
    """
    Breadth-first closure of sigma in FS(x, y).

    Returns:
        ExplicitComponent: vertices in rank order, each edge emitted once from
        its lower-rank endpoint, edges sorted by endpoint indices.
    """
    _check_sizes(x, y)
    sigma = _as_perm(sigma, x.n)
    ensure_census_capacity(x.n, x.num_edges, budget)
    adjacency = _closure(x, y, sigma.images)
    ranked = sorted((rank(t), t) for t in adjacency)
    index = {t: i for i, (_, t) in enumerate(ranked)}
    edges = []
    for t, nbrs in adjacency.items():
        i = index[t]
        for nxt, label in nbrs:
            j = index[nxt]
            if i < j:
                edges.append((i, j, label))
    edges.sort()
    vertices = tuple(Permutation(t) for _, t in ranked)
    return ExplicitComponent(vertices, tuple(edges))


def iter_components(x, y, budget=DEFAULT_BUDGET, chunk=DEFAULT_CHUNK):
    """Yield every component of FS(x, y) explicitly, in representative order."""
    census = fs_components(x, y, budget, chunk)
    for rep in census.reps:
        yield fs_component_of(x, y, rep, budget)


def cyclic_leaf_order(sigma):
    """
    Component invariant of FS(Star_n, Cycle_n) with star center 1.

    Reading people 1..n around the cycle and skipping whoever sits on the
    center gives a cyclic sequence of leaf chairs; friendly swaps only move
    a person between the center and a leaf without changing it. Rotated to
    start at chair 2.
    """
    sigma = _as_perm(sigma, len(sigma))
    inv = sigma.inverse()
    chairs = [inv(p) for p in range(1, sigma.n + 1) if inv(p) != 1]
    k = chairs.index(2)
    return tuple(chairs[k:] + chairs[:k])


def placement_reachable(x, y, sigma, chair, person, budget=DEFAULT_BUDGET):
    """Whether some sigma' in the component of sigma seats person on chair."""
    _check_sizes(x, y)
    sigma = _as_perm(sigma, x.n)
    if not (1 <= chair <= x.n and 1 <= person <= x.n):
        raise ParameterError(f"chair {chair} / person {person} outside 1..{x.n}")
    ensure_census_capacity(x.n, x.num_edges, budget)
    start = sigma.images
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur[chair - 1] == person:
            return True
        for nxt, _ in _swaps(x, y, cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False
