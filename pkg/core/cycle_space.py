"""
Cycle space over GF(2) of explicit components of FS(Cycle_n, Y).

A cycle vector is an int bitset over the component's edge indices (bit k is
edge k of ExplicitComponent.edges). Squares come from pairs of commuting
swaps, hexagons from three pairwise Y-adjacent people on three consecutive
cycle positions; networkx supplies an independent girth-bounded enumerator
and the breadth-first distances used by the geodesic and isometric checks.
"""
from collections import Counter, deque
from dataclasses import dataclass

import networkx as nx

from core.errors import CapabilityError, ParameterError, ValidationError

GENERIC_MAX_EDGES = 50_000
GENERIC_MAX_LENGTH = 8


@dataclass(frozen=True, order=True)
class CycleVector:
    """Even-degree edge subgraph of a component, as a bitset of edge indices."""

    bits: int

    @property
    def weight(self):
        return bin(self.bits).count("1")

    def edge_indices(self):
        out, b = [], self.bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return out

    def __xor__(self, other):
        return CycleVector(self.bits ^ other.bits)


def _edge_lookup(c):
    return {(i, j): k for k, (i, j, _) in enumerate(c.edges)}


def _edge_between(lookup, i, j):
    return lookup.get((i, j) if i < j else (j, i))


def _is_connected(c):
    if c.size == 0:
        return False
    adj = c.adjacency()
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w, _ in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == c.size


def cycle_space_dimension(c):
    """|E| - |V| + 1 of a connected component."""
    if not _is_connected(c):
        raise ParameterError("cycle space dimension needs a connected component")
    return c.num_edges - c.size + 1


def is_cycle_vector(c, vec):
    """Every vertex meets an even number of the selected edges."""
    if vec.bits >> c.num_edges:
        return False
    parity = [0] * c.size
    for k in vec.edge_indices():
        i, j, _ = c.edges[k]
        parity[i] ^= 1
        parity[j] ^= 1
    return not any(parity)


def fundamental_basis(c):
    """
    Fundamental cycles of the breadth-first tree rooted at vertex 0, one per
    non-tree edge in edge-index order.
    """
    cycle_space_dimension(c)
    adj = c.adjacency()
    path_bits = [None] * c.size
    path_bits[0] = 0
    tree = set()
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w, k in adj[u]:
            if path_bits[w] is None:
                path_bits[w] = path_bits[u] | (1 << k)
                tree.add(k)
                queue.append(w)
    basis = []
    for k, (i, j, _) in enumerate(c.edges):
        if k not in tree:
            basis.append(CycleVector((1 << k) ^ path_bits[i] ^ path_bits[j]))
    return basis


def _swap_positions(u, v):
    """0-based positions where two adjacent permutations differ."""
    return tuple(p for p in range(len(u)) if u[p] != v[p])


def enumerate_squares(c):
    """
    4-cycles from two friendly swaps on disjoint cycle edges at a common
    vertex, each square listed once, sorted by bitset.
    """
    lookup = _edge_lookup(c)
    index = {v.images: i for i, v in enumerate(c.vertices)}
    adj = c.adjacency()
    found = set()
    for u in range(c.size):
        here = c.vertices[u].images
        moves = [(w, k, set(_swap_positions(here, c.vertices[w].images))) for w, k in adj[u]]
        for p in range(len(moves)):
            w1, k1, pos1 = moves[p]
            for q in range(p + 1, len(moves)):
                w2, k2, pos2 = moves[q]
                if pos1 & pos2:
                    continue
                corner = list(c.vertices[w1].images)
                for a in pos2:
                    corner[a] = c.vertices[w2].images[a]
                far = index[tuple(corner)]
                k3 = _edge_between(lookup, w1, far)
                k4 = _edge_between(lookup, w2, far)
                if k3 is None or k4 is None:
                    raise ValidationError(f"commuting swaps at vertex {u} do not close a square")
                found.add((1 << k1) | (1 << k2) | (1 << k3) | (1 << k4))
    return [CycleVector(b) for b in sorted(found)]


def enumerate_hexagons(c):
    """
    6-cycles realizing the Yang-Baxter move: three people on consecutive
    cycle positions i, i+1, i+2, pairwise adjacent in Y, permuted by
    alternately swapping the two cycle edges. Each hexagon listed once.
    """
    if c.size == 0:
        return []
    n = c.vertices[0].n
    if n < 3:
        return []
    lookup = _edge_lookup(c)
    index = {v.images: i for i, v in enumerate(c.vertices)}
    found = set()
    for u, sigma in enumerate(c.vertices):
        for i in range(n):
            left = (i, (i + 1) % n)
            right = ((i + 1) % n, (i + 2) % n)
            cur, bits, ok = sigma.images, 0, True
            for step in range(6):
                a, b = left if step % 2 == 0 else right
                nxt = list(cur)
                nxt[a], nxt[b] = nxt[b], nxt[a]
                nxt = tuple(nxt)
                k = _edge_between(lookup, index[cur], index[nxt]) if nxt in index else None
                if k is None:
                    ok = False
                    break
                bits |= 1 << k
                cur = nxt
            if ok and cur == sigma.images and bin(bits).count("1") == 6:
                found.add(bits)
    return [CycleVector(b) for b in sorted(found)]


def gf2_rank(vectors):
    """Rank over GF(2) of int bitsets, eliminating on the lowest set bit."""
    pivots = {}
    for vec in vectors:
        v = vec.bits if isinstance(vec, CycleVector) else int(vec)
        while v:
            low = v & -v
            if low in pivots:
                v ^= pivots[low]
            else:
                pivots[low] = v
                break
    return len(pivots)


def spans(generators, c):
    """
    Whether the generators span the cycle space of c.

    Raises:
        ValidationError: when a generator is not an even-degree edge subgraph.
    """
    for idx, gen in enumerate(generators):
        if not is_cycle_vector(c, gen):
            raise ValidationError(f"generator {idx} is not a cycle vector", step=idx)
    return gf2_rank(generators) == cycle_space_dimension(c)


def generic_cycles(c, max_length=GENERIC_MAX_LENGTH, graph=None):
    """
    Every simple cycle of length <= max_length, found by networkx.

    Raises:
        CapabilityError: for components with more than 50,000 edges.
    """
    if c.num_edges > GENERIC_MAX_EDGES:
        raise CapabilityError(
            f"generic cycle enumeration is capped at {GENERIC_MAX_EDGES} edges, component has {c.num_edges}"
        )
    g = graph if graph is not None else c.to_networkx()
    lookup = _edge_lookup(c)
    found = set()
    for nodes in nx.simple_cycles(g, length_bound=max_length):
        if len(nodes) < 3:
            continue
        bits = 0
        for p in range(len(nodes)):
            bits |= 1 << _edge_between(lookup, nodes[p], nodes[(p + 1) % len(nodes)])
        found.add(bits)
    return [CycleVector(b) for b in sorted(found)]


def cycle_order(c, cycle):
    """
    Walk a simple cycle.

    Returns:
        tuple: (vertex indices, edge indices) in cyclic order, starting at the
        lowest vertex and leaving along its lower-indexed edge.

    Raises:
        ValidationError: when the vector is not a single simple cycle.
    """
    ks = cycle.edge_indices()
    if not ks or ks[-1] >= c.num_edges:
        raise ValidationError("cycle vector selects no edges of the component")
    incident = {}
    for k in ks:
        i, j, _ = c.edges[k]
        incident.setdefault(i, []).append(k)
        incident.setdefault(j, []).append(k)
    if any(len(v) != 2 for v in incident.values()):
        raise ValidationError("cycle vector is not a simple cycle (a vertex has degree other than 2)")
    start = min(incident)
    verts, edges = [start], []
    cur, k = start, min(incident[start])
    while True:
        edges.append(k)
        i, j, _ = c.edges[k]
        cur = j if i == cur else i
        if cur == start:
            break
        verts.append(cur)
        k = incident[cur][0] if incident[cur][0] != k else incident[cur][1]
    if len(edges) != len(ks):
        raise ValidationError("cycle vector is a union of several cycles")
    return verts, edges


def is_isometric(c, cycle, graph=None):
    """Whether distances along the cycle equal distances in the component."""
    verts, _ = cycle_order(c, cycle)
    length = len(verts)
    g = graph if graph is not None else c.to_networkx()
    for p, u in enumerate(verts):
        dist = nx.single_source_shortest_path_length(g, u, cutoff=length // 2)
        for q in range(p + 1, length):
            along = min(q - p, length - (q - p))
            if dist.get(verts[q], along + 1) != along:
                return False
    return True


def cycle_label_multiplicity(c, cycle):
    """Map EdgeLabel -> number of cycle edges carrying it."""
    _, edges = cycle_order(c, cycle)
    return dict(Counter(c.edges[k][2] for k in edges))


def opposite_label_check(c, cycle):
    """Equal labels occur exactly at opposite positions of the cycle."""
    _, edges = cycle_order(c, cycle)
    length = len(edges)
    if length % 2:
        return False
    labels = [c.edges[k][2] for k in edges]
    half = length // 2
    for p in range(length):
        for q in range(p + 1, length):
            if (labels[p] == labels[q]) != (q - p == half):
                return False
    return True


def walk_labels(c, path):
    """
    Labels along a vertex-index path of c.

    Raises:
        ValidationError: at the first step that is not an edge.
    """
    lookup = _edge_lookup(c)
    labels = []
    for step in range(len(path) - 1):
        k = _edge_between(lookup, path[step], path[step + 1])
        if k is None:
            raise ValidationError(f"step {step}: vertices {path[step]} and {path[step + 1]} are not adjacent", step=step)
        labels.append(c.edges[k][2])
    return labels


def check_label_distinctness(labels):
    return len(set(labels)) == len(labels)


def is_geodesic(c, path, graph=None):
    """Length of the path equals the breadth-first distance of its endpoints."""
    walk_labels(c, path)
    if len(path) <= 1:
        return True
    g = graph if graph is not None else c.to_networkx()
    return nx.shortest_path_length(g, path[0], path[-1]) == len(path) - 1


def geodesic_label_violations(c, source=0):
    """
    Vertices where the breadth-first tree path from source first repeats a label.

    Every tree path is a geodesic, so a nonempty result is a geodesic with a
    repeated label.
    """
    adj = c.adjacency()
    label_bit = {}
    for _, _, lab in c.edges:
        label_bit.setdefault(lab, 1 << len(label_bit))
    masks = {source: 0}
    bad = []
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w, k in adj[u]:
            if w in masks:
                continue
            bit = label_bit[c.edges[k][2]]
            if masks[u] & bit:
                bad.append(w)
            masks[w] = masks[u] | bit
            queue.append(w)
    return sorted(bad)


def component_report(c):
    """Dimension, generator counts and spanning flags of one component."""
    dim = cycle_space_dimension(c)
    squares = enumerate_squares(c)
    hexagons = enumerate_hexagons(c)
    square_rank = gf2_rank(squares)
    return {
        "vertices": c.size,
        "edges": c.num_edges,
        "dimension": dim,
        "squares": len(squares),
        "hexagons": len(hexagons),
        "spans_squares": square_rank == dim,
        "spans_squares_hexagons": gf2_rank(squares + hexagons) == dim,
    }
