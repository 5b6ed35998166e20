"""
Simple labeled graphs on the vertex set {1..n} and the structural predicates
needed by the connectivity theorems (connectivity, cut vertices, bipartitions,
domination, induced-subgraph conditions, spider subgraphs).
"""
from itertools import combinations

import numpy as np

from core.errors import ParameterError


class Graph:
    """
    Immutable simple graph with vertices 1..n stored as adjacency sets.

    Args:
        n (int): Number of vertices.
        edges: Iterable of vertex pairs.
        origin (tuple, optional): For induced subgraphs, origin[i - 1] is the
            label vertex i had in the parent graph. Ignored by equality.
    """

    __slots__ = ("n", "_adj", "origin", "_edges")

    def __init__(self, n, edges=(), origin=None):
        if n < 0:
            raise ParameterError(f"vertex count must be >= 0, got {n}")
        adj = [set() for _ in range(n + 1)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParameterError(f"edge {{{u},{v}}} leaves the vertex range 1..{n}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self.origin = tuple(origin) if origin is not None else None
        self._edges = tuple(sorted((u, v) for u in range(1, n + 1) for v in adj[u] if u < v))

    @classmethod
    def from_edges(cls, n, edges):
        return cls(n, edges)

    @property
    def vertices(self):
        return range(1, self.n + 1)

    def neighbors(self, v):
        return self._adj[v]

    def has_edge(self, u, v):
        return v in self._adj[u]

    def degree(self, v):
        return len(self._adj[v])

    def edges(self):
        """Sorted list of edges (u, v) with u < v."""
        return list(self._edges)

    @property
    def num_edges(self):
        return len(self._edges)

    def degrees(self):
        return [len(self._adj[v]) for v in self.vertices]

    def adjacency_matrix(self):
        """Boolean numpy matrix indexed by 0-based vertices."""
        mat = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self._edges:
            mat[u - 1, v - 1] = True
            mat[v - 1, u - 1] = True
        return mat

    def neighbor_masks(self):
        """Per-vertex neighbor bitmasks; bit i - 1 stands for vertex i."""
        masks = []
        for v in self.vertices:
            m = 0
            for w in self._adj[v]:
                m |= 1 << (w - 1)
            masks.append(m)
        return masks

    def relabel(self, mapping):
        """Return the graph with vertex v renamed mapping[v]."""
        return Graph(self.n, [(mapping[u], mapping[v]) for u, v in self._edges])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self._edges)})"


def complement(g):
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    edges = [(u, v) for u, v in combinations(g.vertices, 2) if not g.has_edge(u, v)]
    return Graph(g.n, edges)


def induced_subgraph(g, s):
    """
    Subgraph induced by vertex set s, relabeled 1..|s| in increasing order.

    The returned graph's ``origin`` maps new labels back to labels of g.
    """
    verts = sorted(set(s))
    if not verts:
        raise ParameterError("induced subgraph needs a nonempty vertex set")
    for v in verts:
        if not 1 <= v <= g.n:
            raise ParameterError(f"vertex {v} outside 1..{g.n}")
    index = {v: i + 1 for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    return Graph(len(verts), edges, origin=verts)


def add_pendant(g, v):
    """Append vertex n + 1 joined only to v."""
    if not 1 <= v <= g.n:
        raise ParameterError(f"attachment vertex {v} outside 1..{g.n}")
    return Graph(g.n + 1, g.edges() + [(v, g.n + 1)])


def disjoint_union(graphs):
    """Disjoint union, later graphs shifted past earlier ones."""
    edges, offset = [], 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return Graph(offset, edges)


def _mask_connected(masks, subset):
    """Whether the vertices in bitmask subset induce a connected graph."""
    if subset == 0:
        return True
    start = subset & -subset
    seen = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nbrs = masks[low.bit_length() - 1] & subset & ~seen
        seen |= nbrs
        frontier |= nbrs
    return seen == subset


def is_connected(g):
    """Connectivity by bitmask search; the empty graph counts as connected."""
    if g.n == 0:
        return True
    return _mask_connected(g.neighbor_masks(), (1 << g.n) - 1)


def is_biconnected(g):
    """
    Biconnectivity with the list of cut vertices.

    Connected graphs on at most 2 vertices count as biconnected.

    Returns:
        tuple: (biconnected, sorted list of cut vertices)
    """
    if not is_connected(g):
        return False, []
    if g.n <= 2:
        return True, []
    masks = g.neighbor_masks()
    full = (1 << g.n) - 1
    cuts = [v for v in g.vertices if not _mask_connected(masks, full & ~(1 << (v - 1)))]
    return not cuts, cuts


def bipartition(g):
    """
    Two-coloring by breadth-first search, lowest unvisited vertex first.

    Returns:
        tuple or None: (A, B) as frozensets, A holding vertex 1's side;
        None when g has an odd cycle.
    """
    color = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            u = queue.pop()
            for w in g.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side_a = frozenset(v for v, c in color.items() if c == 0)
    return side_a, frozenset(g.vertices) - side_a


def _closed_masks(g):
    return [m | (1 << (v - 1)) for v, m in zip(g.vertices, g.neighbor_masks())]


def dominating_sets(g, size):
    """Yield every dominating set of the given size in lexicographic order."""
    closed = _closed_masks(g)
    full = (1 << g.n) - 1
    for combo in combinations(range(g.n), size):
        covered = 0
        for i in combo:
            covered |= closed[i]
        if covered == full:
            yield tuple(i + 1 for i in combo)


def domination_number(g):
    """Exact domination number by subset search in increasing size."""
    if g.n < 1:
        raise ParameterError("domination number needs at least one vertex")
    for size in range(1, g.n + 1):
        for _ in dominating_sets(g, size):
            return size
    return g.n


def domination_at_least(g, t):
    """True iff no dominating set has fewer than t vertices."""
    for size in range(1, min(t, g.n + 1)):
        for _ in dominating_sets(g, size):
            return False
    return True


def has_triangle(g):
    for u, v in g.edges():
        if g.neighbors(u) & g.neighbors(v):
            return True
    return False


def min_degree(g):
    return min(g.degrees()) if g.n else 0


def max_degree(g):
    return max(g.degrees()) if g.n else 0


def is_tree(g):
    return g.n >= 1 and g.num_edges == g.n - 1 and is_connected(g)


def disconnected_k_subset(g, k):
    """First k-subset (lexicographic) inducing a disconnected graph, or None."""
    if not 1 <= k <= g.n:
        raise ParameterError(f"subset size k={k} outside 1..{g.n}")
    masks = g.neighbor_masks()
    for combo in combinations(range(g.n), k):
        subset = 0
        for i in combo:
            subset |= 1 << i
        if not _mask_connected(masks, subset):
            return tuple(i + 1 for i in combo)
    return None


def all_k_subsets_connected(g, k):
    """True iff every k-vertex induced subgraph of g is connected."""
    return disconnected_k_subset(g, k) is None


def find_spider_subgraph(g, legs):
    """
    Embedding of Spider(legs) as a (not necessarily induced) subgraph of g.

    Center-first backtracking; legs are extended longest first.

    Returns:
        tuple or None: (center, list of leg vertex paths) or None.
    """
    lengths = sorted((int(x) for x in legs), reverse=True)
    if any(x < 1 for x in lengths):
        raise ParameterError(f"spider legs must be positive, got {tuple(legs)}")
    if sum(lengths) + 1 > g.n:
        return None
    k = len(lengths)

    def extend(leg_idx, path, used, paths, center):
        if leg_idx == k:
            return list(paths)
        need = lengths[leg_idx]
        if len(path) == need:
            paths.append(tuple(path))
            found = extend(leg_idx + 1, [], used, paths, center)
            if found is not None:
                return found
            paths.pop()
            return None
        tip = path[-1] if path else center
        for w in sorted(g.neighbors(tip)):
            if w in used:
                continue
            used.add(w)
            path.append(w)
            found = extend(leg_idx, path, used, paths, center)
            if found is not None:
                return found
            path.pop()
            used.discard(w)
        return None

    for center in g.vertices:
        if g.degree(center) < k:
            continue
        found = extend(0, [], {center}, [], center)
        if found is not None:
            return center, found
    return None


def contains_spider_subgraph(g, legs):
    return find_spider_subgraph(g, legs) is not None
