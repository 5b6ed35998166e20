"""
Graphs up to isomorphism: canonical forms, the generic small-graph enumerator
(n <= 8), and dedicated generators for the hereditary families built from
complements of disjoint unions of paths, cycles and fruit pieces (any n).
"""
from functools import lru_cache
from itertools import permutations, product
from math import factorial

import numpy as np

from core.errors import CapabilityError
from core.graph import Graph, complement, disjoint_union, is_tree
from core.families import cycle, fruit, path, spider
from core.permutations import all_permutations

GENERIC_MAX_N = 8
MAX_RELABELINGS = 2_000_000


def _pair_weights(n):
    iu, ju = np.triu_indices(n, 1)
    weights = np.left_shift(np.int64(1), np.arange(len(iu) - 1, -1, -1, dtype=np.int64))
    return iu, ju, weights


def _min_code(mat, relabelings):
    """Smallest upper-triangle code of mat over the given relabelings."""
    n = mat.shape[0]
    if n <= 1:
        return 0
    iu, ju, weights = _pair_weights(n)
    bits = mat[relabelings[:, iu], relabelings[:, ju]]
    return int((bits.astype(np.int64) @ weights).min())


def decode(n, code):
    """Graph whose upper-triangle code (first pair = most significant bit) is code."""
    if n <= 1:
        return Graph(n)
    iu, ju, _ = _pair_weights(n)
    npairs = len(iu)
    edges = [(int(iu[k]) + 1, int(ju[k]) + 1) for k in range(npairs) if (code >> (npairs - 1 - k)) & 1]
    return Graph(n, edges)


def canonical_form(g):
    """
    Lexicographically minimal adjacency code over all n! vertex relabelings.

    Returns:
        tuple: (n, code)
    """
    if g.n > GENERIC_MAX_N:
        raise CapabilityError(f"exhaustive canonical form supports n <= {GENERIC_MAX_N}, got {g.n}")
    return g.n, _min_code(g.adjacency_matrix(), all_permutations(g.n))


def refined_classes(g):
    """
    Isomorphism-invariant ordered partition of the vertices by color refinement.
    """
    color = {v: g.degree(v) for v in g.vertices}
    n_classes = len(set(color.values()))
    while True:
        sig = {v: (color[v], tuple(sorted(color[w] for w in g.neighbors(v)))) for v in g.vertices}
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        color = {v: palette[sig[v]] for v in g.vertices}
        if len(palette) == n_classes:
            break
        n_classes = len(palette)
    classes = {}
    for v in g.vertices:
        classes.setdefault(color[v], []).append(v - 1)
    return [classes[c] for c in sorted(classes)]


def canonical_code(g):
    """
    Canonical code minimized over relabelings that respect refined_classes.

    Cheaper than canonical_form and equally an isomorphism invariant.
    """
    if g.n <= 1:
        return g.n, 0
    classes = refined_classes(g)
    count = 1
    for cls in classes:
        count *= factorial(len(cls))
    if count > MAX_RELABELINGS:
        raise CapabilityError(f"canonical code would need {count} relabelings")
    blocks = [np.array(list(permutations(cls)), dtype=np.int8) for cls in classes]
    rows = [np.concatenate(choice) for choice in product(*blocks)]
    return g.n, _min_code(g.adjacency_matrix(), np.array(rows, dtype=np.int8))


def is_isomorphic(g, h):
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_code(g) == canonical_code(h)


@lru_cache(maxsize=None)
def _graphs_on(n):
    if n == 1:
        return (Graph(1),)
    found = {}
    for base in _graphs_on(n - 1):
        for mask in range(1 << (n - 1)):
            edges = base.edges() + [(v + 1, n) for v in range(n - 1) if mask >> v & 1]
            key = canonical_code(Graph(n, edges))
            if key not in found:
                found[key] = decode(*key)
    return tuple(found[k] for k in sorted(found, key=lambda k: (bin(k[1]).count("1"), k[1])))


def enumerate_small_graphs(n, filter=None):
    """
    Yield one graph per isomorphism class on n vertices, optionally filtered.

    Raises:
        CapabilityError: for n > 8; use co_path_cycle_unions for the
            minimum-degree >= n-3 class at larger n.
    """
    if n > GENERIC_MAX_N:
        raise CapabilityError(
            f"generic enumeration supports n <= {GENERIC_MAX_N}; "
            "use co_path_cycle_unions for complements of path/cycle unions"
        )
    if n < 1:
        return
    for g in _graphs_on(n):
        if filter is None or filter(g):
            yield g


def trees(n):
    return list(enumerate_small_graphs(n, is_tree))


def _linear_forest_partitions(n, max_part=None):
    """Non-increasing partitions of n (path lengths)."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in _linear_forest_partitions(n - first, first):
            yield (first,) + rest


def _component_multisets(n, allow_cycles, max_key=None):
    """Non-increasing sequences of ("P"|"C", size) parts summing to n."""
    if n == 0:
        yield ()
        return
    keys = []
    for size in range(n, 0, -1):
        if allow_cycles and size >= 3:
            keys.append((size, "P"))
            keys.append((size, "C"))
        else:
            keys.append((size, "P"))
    keys.sort(reverse=True)
    for key in keys:
        if max_key is not None and key > max_key:
            continue
        for rest in _component_multisets(n - key[0], allow_cycles, key):
            yield (key,) + rest


def _union_of(parts):
    pieces = [cycle(size) if kind == "C" else path(size) for size, kind in parts]
    return disjoint_union(pieces)


def co_path_cycle_unions(n, allow_cycles=True):
    """
    Complements of disjoint unions of paths (and cycles) on n vertices.

    One graph per isomorphism class, for any n: exactly the n-vertex graphs
    of minimum degree >= n-3 when allow_cycles is True.
    """
    for parts in _component_multisets(n, allow_cycles):
        yield complement(_union_of(parts))


def co_cycle_family(n):
    """
    n-vertex members of the hereditary closure of complements of Cycle_N, N >= 5.
    """
    if n >= 5:
        yield complement(cycle(n))
    yield from co_path_cycle_unions(n, allow_cycles=False)


def co_fruit_family(n):
    """
    n-vertex members of the hereditary closure of complements of fruit graphs.

    Induced subgraphs of fruit graphs are the fruit itself, its cycle, linear
    forests, and linear forests plus one Spider(p, q, 1). The smallest fruit
    is the triangle with a pendant on 4 vertices, so the triangle is a member
    at n = 3.
    """
    if n >= 4:
        yield complement(fruit(n))
    if n >= 3:
        yield complement(cycle(n))
    yield from co_path_cycle_unions(n, allow_cycles=False)
    for p in range(1, n):
        for q in range(1, p + 1):
            rest = n - (p + q + 2)
            if rest < 0:
                continue
            for forest in _linear_forest_partitions(rest):
                pieces = [spider(p, q, 1)] + [path(size) for size in forest]
                yield complement(disjoint_union(pieces))


def random_graph(n, p, rng):
    """Seeded G(n, p) sample drawn with a numpy Generator."""
    draws = rng.random(n * (n - 1) // 2)
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    return Graph(n, [e for e, d in zip(pairs, draws) if d < p])
