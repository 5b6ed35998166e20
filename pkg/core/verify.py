"""
Sweep runners that cross-check every executable theorem against exact
censuses over enumerated (or seeded random) instances.

Each runner returns a SweepReport; a nonempty counterexample list means a
theorem predicate disagreed with the census it promises.
"""
from dataclasses import dataclass, field
from math import factorial

import numpy as np

from core.coxeter import classify_prediction, find_anchored_walks, reduce_anchored, replay
from core.cycle_space import (
    component_report,
    cycle_label_multiplicity,
    enumerate_hexagons,
    enumerate_squares,
    generic_cycles,
    geodesic_label_violations,
    is_isometric,
    opposite_label_check,
)
from core.errors import FSError, ParameterError, TheoremViolation
from core.families import cycle, dandelion, fruit, spider, star, theta0
from core.fs_engine import (
    census_labels,
    fs_components,
    iter_components,
    placement_reachable,
    star_components_predicted,
    bipartite_parity,
    cyclic_leaf_order,
)
from core.graph import (
    bipartition,
    complement,
    domination_at_least,
    has_triangle,
    is_biconnected,
    is_connected,
)
from core.permutations import unrank, unrank_range
from core.small_graphs import GENERIC_MAX_N, co_path_cycle_unions, enumerate_small_graphs, random_graph, trees
from core.theorems import (
    HEREDITARY_FAMILIES,
    cycles_complement_base_case,
    dandelion_characterization,
    fruit_base_case,
    hereditary_extension_check,
    min_degree_sufficient,
    necessary_spider_condition,
    spider_vs_complement_cycle,
    spider_vs_complement_fruit,
    sufficient_spider_condition,
    wilsonian_existence,
)
from core.utils import DEFAULT_SEED, Stopwatch, make_rng, partitions
from metrics.logger import log_info, progress
from metrics.monitor import DEFAULT_BUDGET


@dataclass
class SweepConfig:
    """Parameters shared by every sweep."""

    n_max: int = None
    seed: int = DEFAULT_SEED
    budget: int = DEFAULT_BUDGET
    samples: int = 200
    count: int = 1000


@dataclass
class SweepReport:
    theorem: str
    params: dict
    instances: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)
    elapsed: float = None

    @property
    def ok(self):
        return not self.counterexamples

    def add(self, instance, bad=False):
        self.instances.append(instance)
        if bad:
            self.counterexamples.append(instance)

    def to_dict(self, timing=False):
        out = {
            "theorem": self.theorem,
            "params": self.params,
            "checked": len(self.instances),
            "instances": self.instances,
            "counterexamples": self.counterexamples,
            "ok": self.ok,
        }
        if timing and self.elapsed is not None:
            out["elapsed_sec"] = round(self.elapsed, 3)
        return out


def _edges(g):
    return [list(e) for e in g.edges()]


def _graphs(n, keep=None):
    """Every graph on n vertices up to isomorphism (n <= 8) passing keep."""
    return list(enumerate_small_graphs(n, keep))


def _sweep_sizes(lo, n_max):
    return range(lo, n_max + 1)


def sweep_spider_sufficient(cfg, report):
    """Predicate true => census connected, over all connected X and Y."""
    for n in _sweep_sizes(3, cfg.n_max):
        connected = _graphs(n, is_connected)
        for x in progress(connected, desc=f"spider-sufficient n={n}", unit="graph"):
            for y in connected:
                verdict = sufficient_spider_condition(x, y)
                if verdict.predicate_result:
                    verdict.oracle_result = fs_components(x, y, cfg.budget).count == 1
                report.add({"n": n, "x": _edges(x), "y": _edges(y), **verdict.to_dict()},
                           bad=not verdict.consistent)


def sweep_wilsonian(cfg, report):
    """A Star_k witness exists whenever n >= 2k-1 and all k-subsets are connected."""
    for n in _sweep_sizes(5, cfg.n_max):
        for k in range(3, (n + 1) // 2 + 1):
            for y in _graphs(n):
                try:
                    verdict = wilsonian_existence(y, k)
                except ParameterError:
                    continue
                except TheoremViolation as exc:
                    report.add({"n": n, "k": k, "y": _edges(y), "error": str(exc)}, bad=True)
                    continue
                report.add({"n": n, "k": k, "y": _edges(y), **verdict.to_dict()})


def sweep_spider_necessary(cfg, report):
    """A disconnected (n - legs_1)-subset certificate => census disconnected."""
    for n in _sweep_sizes(3, cfg.n_max):
        ys = _graphs(n)
        for legs in partitions(n - 1):
            x = spider(*legs)
            for y in ys:
                verdict = necessary_spider_condition(legs, y)
                if verdict.predicate_result:
                    verdict.oracle_result = fs_components(x, y, cfg.budget).count == 1
                report.add({"legs": list(legs), "y": _edges(y), **verdict.to_dict()},
                           bad=not verdict.consistent)


def sweep_dandelion(cfg, report):
    """Exhaustive up to n = 7, then seeded G(n, p) samples at n = 8."""
    for n in _sweep_sizes(3, min(cfg.n_max, 7)):
        ys = _graphs(n)
        for k in range(2, (n + 1) // 2 + 1):
            for y in progress(ys, desc=f"dandelion k={k} n={n}", unit="graph"):
                verdict = dandelion_characterization(k, n, y, oracle=True, budget=cfg.budget)
                report.add({"k": k, "n": n, "y": _edges(y), **verdict.to_dict()}, bad=not verdict.consistent)
    if cfg.n_max >= 8:
        rng = make_rng(cfg.seed)
        for _ in progress(range(cfg.samples), desc="dandelion n=8", unit="graph"):
            y = random_graph(8, float(rng.uniform(0.5, 0.95)), rng)
            for k in (2, 3, 4):
                verdict = dandelion_characterization(k, 8, y, oracle=True, budget=cfg.budget)
                report.add({"k": k, "n": 8, "y": _edges(y), **verdict.to_dict()}, bad=not verdict.consistent)


def _closed_form_sweep(report, cfg, partitions_by_n, closed_form, base_case, target):
    for n, all_legs in partitions_by_n:
        y = target(n)
        for legs in all_legs:
            predicted = closed_form(legs)
            census = fs_components(spider(*legs), y, cfg.budget)
            base = base_case(legs) if predicted else None
            bad = predicted != (census.count == 1) or (predicted and base is None)
            report.add({
                "legs": list(legs),
                "n": n,
                "predicate": predicted,
                "oracle": census.count == 1,
                "components": census.count,
                "base": list(base) if base else None,
            }, bad=bad)


def sweep_cycles_complement(cfg, report):
    """Closed form vs census against the complement of Cycle_n; (6,2,1) at n = 10."""
    by_n = [(n, list(partitions(n - 1))) for n in _sweep_sizes(4, min(cfg.n_max, 9))]
    if cfg.n_max >= 10:
        by_n.append((10, [(6, 2, 1)]))
    _closed_form_sweep(report, cfg, by_n, spider_vs_complement_cycle,
                       cycles_complement_base_case, lambda n: complement(cycle(n)))


def sweep_fruit(cfg, report):
    """Closed form vs census against the complement of the fruit graph."""
    by_n = [(n, list(partitions(n - 1, min_parts=3))) for n in _sweep_sizes(4, cfg.n_max)]
    _closed_form_sweep(report, cfg, by_n, spider_vs_complement_fruit,
                       fruit_base_case, lambda n: complement(fruit(n)))


def sweep_min_degree(cfg, report):
    """Predicate true => census connected; Y ranges over minimum degree >= n-3."""
    for n in _sweep_sizes(4, cfg.n_max):
        if n <= GENERIC_MAX_N:
            xs = trees(n)
        else:
            xs = [spider(*legs) for legs in partitions(n - 1)]
        ys = list(co_path_cycle_unions(n))
        for x in progress(xs, desc=f"min-degree n={n}", unit="tree"):
            for y in ys:
                verdict = min_degree_sufficient(x, y)
                if verdict.predicate_result:
                    verdict.oracle_result = fs_components(x, y, cfg.budget).count == 1
                report.add({"n": n, "x": _edges(x), "y": _edges(y), **verdict.to_dict()},
                           bad=not verdict.consistent)


def _parity_classes(x, y, a_y, labels):
    """Parity of every permutation grouped by component label."""
    classes = {}
    for r, lab in enumerate(labels):
        bit = bipartite_parity(x, y, {1}, a_y, unrank(r, x.n))
        classes.setdefault(int(lab), set()).add(bit)
    return classes


def sweep_star(cfg, report):
    """
    Wilson's classification of FS(Star_n, Y) vs census for biconnected Y,
    with the parity and cyclic-order invariants checked component-wise.
    """
    for n in _sweep_sizes(4, cfg.n_max):
        x = star(n)
        ys = _graphs(n, lambda g: is_biconnected(g)[0])
        for y in progress(ys, desc=f"star n={n}", unit="graph"):
            predicted = star_components_predicted(y)
            census = fs_components(x, y, cfg.budget)
            bad = census.count != predicted.count or set(census.sizes) != {predicted.size}
            entry = {"n": n, "y": _edges(y), "prediction": predicted.to_dict(), "components": census.count}
            if predicted.kind == "TwoHalves":
                classes = _parity_classes(x, y, bipartition(y)[0], census_labels(x, y, cfg.budget))
                constant = all(len(bits) == 1 for bits in classes.values())
                entry["parity_constant"] = constant
                bad = bad or not constant or {min(b) for b in classes.values()} != {0, 1}
            report.add(entry, bad=bad)
        labels = census_labels(x, cycle(n), cfg.budget)
        seen = {}
        for r, lab in enumerate(labels):
            seen.setdefault(cyclic_leaf_order(unrank(r, n)), set()).add(int(lab))
        separated = all(len(v) == 1 for v in seen.values()) and len(seen) == factorial(n - 2)
        report.add({"n": n, "y": f"cycle:{n}", "cyclic_orders": len(seen), "invariant_matches": separated},
                   bad=not separated)
    if cfg.n_max >= 7:
        census = fs_components(star(7), theta0(), cfg.budget)
        report.add({"n": 7, "y": "theta0", "components": census.count}, bad=census.count != 6)


def sweep_hereditary(cfg, report):
    """Grow every tree with a pendant and census the family at the new size."""
    for n in _sweep_sizes(4, cfg.n_max - 1):
        for base in trees(n):
            for family in HEREDITARY_FAMILIES:
                for v in base.vertices:
                    try:
                        verdict = hereditary_extension_check(base, v, family, cfg.budget)
                    except ParameterError:
                        continue
                    report.add({"n": n, "base": _edges(base), "attach_at": v, "family": family,
                                **verdict.to_dict()}, bad=not verdict.consistent)


def sweep_placement(cfg, report):
    """Breadth-first placement search agrees with the component census."""
    rng = make_rng(cfg.seed)
    for n in _sweep_sizes(3, cfg.n_max):
        perms = unrank_range(0, factorial(n), n)
        for x in trees(n):
            for y in _graphs(n, is_connected):
                labels = census_labels(x, y, cfg.budget)
                r = int(rng.integers(factorial(n)))
                chair = int(rng.integers(n)) + 1
                person = int(rng.integers(n)) + 1
                same = labels == labels[r]
                expected = bool(np.any(perms[same, chair - 1] == person - 1))
                got = placement_reachable(x, y, unrank(r, n), chair, person, cfg.budget)
                report.add({"n": n, "x": _edges(x), "y": _edges(y), "rank": r, "chair": chair,
                            "person": person, "reachable": got}, bad=got != expected)


def _dominated_graphs(n, t):
    return _graphs(n, lambda g: domination_at_least(g, t))


def sweep_isometric(cfg, report):
    """Squares and hexagons span the cycle space when domination(Y) >= 3."""
    cases = [(n, y) for n in _sweep_sizes(5, min(cfg.n_max, 7)) for y in _dominated_graphs(n, 3)]
    if cfg.n_max >= 8:
        cases.append((8, dandelion(3, 8)))
    for n, y in progress(cases, desc="isometric", unit="graph"):
        triangle_free = not has_triangle(y)
        for c in iter_components(cycle(n), y, cfg.budget):
            if c.num_edges == 0:
                continue
            rep = component_report(c)
            bad = not rep["spans_squares_hexagons"] or (triangle_free and not rep["spans_squares"])
            report.add({"n": n, "y": _edges(y), "rep": c.vertices[0].to_list(), **rep}, bad=bad)


def sweep_geodesic(cfg, report):
    """No breadth-first geodesic repeats a label when domination(Y) >= 3."""
    rng = make_rng(cfg.seed)
    for n in _sweep_sizes(4, cfg.n_max):
        for y in _dominated_graphs(n, 3):
            for c in iter_components(cycle(n), y, cfg.budget):
                sources = {0, int(rng.integers(c.size))}
                for s in sorted(sources):
                    bad = geodesic_label_violations(c, s)
                    report.add({"n": n, "y": _edges(y), "source": c.vertices[s].to_list(),
                                "violations": len(bad)}, bad=bool(bad))


def _short_cycles(c):
    return generic_cycles(c, max_length=8) if c.num_edges else []


def sweep_cycle_labels(cfg, report):
    """Every label on a cycle appears at least twice; structural generators are real cycles."""
    for n in _sweep_sizes(4, cfg.n_max):
        for y in _dominated_graphs(n, 3):
            for c in iter_components(cycle(n), y, cfg.budget):
                found = _short_cycles(c)
                known = set(found)
                structural = enumerate_squares(c) + enumerate_hexagons(c)
                missing = [v for v in structural if v not in known]
                single = [v for v in found if min(cycle_label_multiplicity(c, v).values()) < 2]
                report.add({"n": n, "y": _edges(y), "rep": c.vertices[0].to_list(), "cycles": len(found),
                            "unmatched_generators": len(missing), "single_labels": len(single)},
                           bad=bool(missing or single))


def sweep_opposite(cfg, report):
    """On isometric cycles equal labels sit exactly on opposite edges."""
    for n in _sweep_sizes(4, cfg.n_max):
        for y in _dominated_graphs(n, 3):
            for c in iter_components(cycle(n), y, cfg.budget):
                if not c.num_edges:
                    continue
                graph = c.to_networkx()
                iso = [v for v in generic_cycles(c, 8, graph) if is_isometric(c, v, graph)]
                wrong = [v for v in iso if not opposite_label_check(c, v)]
                report.add({"n": n, "y": _edges(y), "rep": c.vertices[0].to_list(), "isometric": len(iso),
                            "violations": len(wrong)}, bad=bool(wrong))


def _dominates_pair(y, a, b):
    covered = {a, b} | y.neighbors(a) | y.neighbors(b)
    return len(covered) == y.n


def sweep_isocycles(cfg, report):
    """Reduce seeded repetition-free anchored walks and audit every result."""
    rng = make_rng(cfg.seed)
    sizes = [n for n in (5, 6, 7) if n <= cfg.n_max]
    if not sizes:
        return
    per_size = -(-cfg.count // len(sizes))
    for n in sizes:
        pool = _dominated_graphs(n, 2)
        picks = rng.choice(len(pool), size=min(8, len(pool)), replace=False)
        per_graph = -(-per_size // len(picks))
        for pick in progress(sorted(int(p) for p in picks), desc=f"isocycles n={n}", unit="graph"):
            y = pool[pick]
            seed = int(rng.integers(2**31))
            for w in find_anchored_walks(y, n, per_graph, seed=seed):
                entry = {"n": n, "y": _edges(y), "walk": w.to_dict()}
                try:
                    predicted = classify_prediction(w, y)
                    result = reduce_anchored(w, y)
                    final = replay(w, result.log, y)
                except FSError as exc:
                    entry["error"] = f"{type(exc).__name__}: {exc}"
                    report.add(entry, bad=True)
                    continue
                a, b = result.walk.labels[0]
                bad = (
                    result.classification != predicted
                    or final != result.walk
                    or not result.log.satisfies_discipline()
                    or (result.classification == "Complete" and not _dominates_pair(y, a, b))
                )
                entry.update({"predicted": predicted, "classification": result.classification,
                              "moves": len(result.log)})
                report.add(entry, bad=bad)


# theorem id -> (runner, default n_max)
SWEEPS = {
    "spider-sufficient": (sweep_spider_sufficient, 6),
    "wilsonian": (sweep_wilsonian, 7),
    "spider-necessary": (sweep_spider_necessary, 7),
    "dandelion": (sweep_dandelion, 8),
    "cycles-complement": (sweep_cycles_complement, 9),
    "fruit": (sweep_fruit, 8),
    "min-degree": (sweep_min_degree, 8),
    "star": (sweep_star, 7),
    "hereditary": (sweep_hereditary, 7),
    "placement": (sweep_placement, 5),
    "isometric": (sweep_isometric, 8),
    "geodesic": (sweep_geodesic, 7),
    "cycle-labels": (sweep_cycle_labels, 6),
    "opposite": (sweep_opposite, 6),
    "isocycles": (sweep_isocycles, 7),
}


def run_sweep(theorem, cfg=None):
    """
    Run one theorem sweep.

    Args:
        theorem (str): One of SWEEPS.
        cfg (SweepConfig): n_max None selects the theorem's default.

    Returns:
        SweepReport
    """
    if theorem not in SWEEPS:
        raise ParameterError(f"unknown theorem id '{theorem}' (expected one of {', '.join(SWEEPS)})")
    cfg = cfg or SweepConfig()
    runner, default_n = SWEEPS[theorem]
    if cfg.n_max is None:
        cfg = SweepConfig(default_n, cfg.seed, cfg.budget, cfg.samples, cfg.count)
    report = SweepReport(theorem, {"n_max": cfg.n_max, "seed": cfg.seed, "budget": cfg.budget,
                                   "samples": cfg.samples, "count": cfg.count})
    with Stopwatch() as clock:
        runner(cfg, report)
    report.elapsed = clock.elapsed
    log_info(f"{theorem}: {len(report.instances)} instances, "
             f"{len(report.counterexamples)} counterexamples in {clock.elapsed:.1f}s")
    return report
