"""
Executable connectivity theorems for FS(X, Y), each returning a verdict that
can be cross-checked against an exact census.
"""
from dataclasses import dataclass
from itertools import combinations
from math import factorial

from core.errors import ParameterError, TheoremViolation
from core.families import complete, cycle, dandelion, fruit, spider
from core.fs_engine import fs_components, fs_is_connected, star_components_predicted
from core.graph import (
    add_pendant,
    all_k_subsets_connected,
    complement,
    disconnected_k_subset,
    find_spider_subgraph,
    induced_subgraph,
    is_connected,
    max_degree,
    min_degree,
)
from core.small_graphs import co_cycle_family, co_fruit_family, co_path_cycle_unions
from core.utils import dominates
from metrics.logger import log_debug
from metrics.monitor import DEFAULT_BUDGET

COMPLEMENT_CYCLE_EXCEPTIONS = frozenset({
    (1, 1, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 1), (3, 3, 1), (4, 2, 1), (5, 2, 1),
})
COMPLEMENT_CYCLE_BASES = ((1, 1, 1, 1, 1), (2, 1, 1, 1), (6, 2, 1), (4, 3, 1), (3, 2, 2))
FRUIT_BASES = ((1, 1, 1, 1, 1), (2, 2, 1, 1), (3, 2, 2))
MIN_DEGREE_SPIDERS = ((1, 1, 1, 1, 1, 1), (2, 1, 1, 1, 1), (2, 2, 1, 1), (3, 3, 2), (4, 2, 2), (4, 3, 1))
HEREDITARY_FAMILIES = ("CoCycle", "CoFruit", "MinDeg3")


@dataclass
class TheoremVerdict:
    """
    Predicate value, optional census value and the structure that made the
    predicate fire.

    kind says how the two must relate: "equivalence" (equal), "sufficient"
    (a true predicate forces a connected census) or "necessary" (a true
    predicate forces a disconnected census).
    """

    predicate_result: bool
    oracle_result: bool = None
    witness: object = None
    kind: str = "equivalence"

    @property
    def consistent(self):
        if self.oracle_result is None:
            return True
        if self.kind == "equivalence":
            return self.predicate_result == self.oracle_result
        if self.kind == "sufficient":
            return not self.predicate_result or self.oracle_result
        return not self.predicate_result or not self.oracle_result

    def to_dict(self):
        witness = self.witness
        if isinstance(witness, tuple):
            witness = list(witness)
        return {
            "predicate": self.predicate_result,
            "oracle": self.oracle_result,
            "witness": witness,
            "kind": self.kind,
            "consistent": self.consistent,
        }


def _normalize_legs(legs):
    lam = tuple(sorted((int(x) for x in legs), reverse=True))
    if not lam or any(x < 1 for x in lam):
        raise ParameterError(f"spider legs must be positive integers, got {tuple(legs)}")
    return lam


def _census_connected(x, y, oracle, budget):
    if not oracle or factorial(x.n) > budget:
        return None
    return fs_is_connected(x, y, budget)


def _star_connected(y0):
    """FS(Star_k, Y0) connected, including the degenerate k <= 2 stars."""
    if y0.n <= 2:
        return y0.num_edges == y0.n * (y0.n - 1) // 2
    # K_3 is a cycle: one cyclic order, so a single component
    return star_components_predicted(y0).count == 1


def _same_size(x, y):
    if x.n != y.n:
        raise ParameterError(f"X has {x.n} vertices but Y has {y.n}")


def sufficient_spider_condition(x, y, oracle=False, budget=DEFAULT_BUDGET):
    """
    All k-vertex induced subgraphs of y connected (k = max degree of x) and
    some k-subset Y0 with FS(Star_k, Y0) connected. Witness: Y0's vertices.
    """
    _same_size(x, y)
    if not (is_connected(x) and is_connected(y)):
        raise ParameterError("sufficient spider condition needs connected X and Y")
    k = max_degree(x)
    if k < 2:
        raise ParameterError(f"X must have maximum degree at least 2, got {k}")
    witness = None
    if all_k_subsets_connected(y, k):
        for subset in combinations(y.vertices, k):
            if _star_connected(induced_subgraph(y, subset)):
                witness = subset
                break
    return TheoremVerdict(witness is not None, _census_connected(x, y, oracle, budget), witness, "sufficient")


def wilsonian_existence(y, k):
    """
    Search for a k-subset Y0 of y with FS(Star_k, Y0) connected.

    Raises:
        ParameterError: when k < 3 or some k-subset of y is disconnected.
        TheoremViolation: when no Y0 exists although n >= 2k - 1.
    """
    if k < 3:
        raise ParameterError(f"k must be at least 3, got {k}")
    if k > y.n:
        raise ParameterError(f"k={k} exceeds the {y.n} vertices of Y")
    bad = disconnected_k_subset(y, k)
    if bad is not None:
        raise ParameterError(f"induced subgraph on {list(bad)} is disconnected")
    for subset in combinations(y.vertices, k):
        if _star_connected(induced_subgraph(y, subset)):
            return TheoremVerdict(True, None, subset, "sufficient")
    if y.n >= 2 * k - 1:
        raise TheoremViolation(f"no {k}-subset Y0 with FS(Star_{k}, Y0) connected although n={y.n} >= {2 * k - 1}")
    return TheoremVerdict(False, None, None, "sufficient")


def necessary_spider_condition(legs, y, oracle=False, budget=DEFAULT_BUDGET):
    """
    True (FS(Spider(legs), y) provably disconnected) iff some induced
    subgraph of y on n - legs_1 vertices is disconnected. Witness: that subset.
    """
    lam = _normalize_legs(legs)
    n = sum(lam) + 1
    if y.n != n:
        raise ParameterError(f"Spider{lam} has {n} vertices but Y has {y.n}")
    witness = disconnected_k_subset(y, n - lam[0])
    x = spider(*lam)
    return TheoremVerdict(witness is not None, _census_connected(x, y, oracle, budget), witness, "necessary")


def dandelion_characterization(k, n, y, oracle=False, budget=DEFAULT_BUDGET):
    """
    FS(Dand_{k,n}, y) is connected iff every k-vertex induced subgraph of y
    is connected, for n >= 2k - 1.
    """
    if k < 2:
        raise ParameterError(f"dandelion needs k >= 2, got {k}")
    if n < 2 * k - 1:
        raise ParameterError(f"dandelion characterization needs n >= 2k-1, got k={k}, n={n}")
    if y.n != n:
        raise ParameterError(f"Y has {y.n} vertices, expected {n}")
    bad = disconnected_k_subset(y, k)
    result = _census_connected(dandelion(k, n), y, oracle, budget)
    return TheoremVerdict(bad is None, result, bad, "equivalence")


def spider_vs_complement_cycle(legs):
    """Closed form for the connectivity of FS(Spider(legs), complement of Cycle_n)."""
    lam = _normalize_legs(legs)
    n = sum(lam) + 1
    if n < 4:
        raise ParameterError(f"complement-of-cycle form needs n >= 4, got {n}")
    if len(lam) <= 2:
        # a path, connected only against the complete graph
        return False
    if len(lam) == 3 and lam[1] == 1 and lam[2] == 1:
        return False
    return lam not in COMPLEMENT_CYCLE_EXCEPTIONS


def spider_vs_complement_fruit(legs):
    """Closed form for the connectivity of FS(Spider(legs), complement of the fruit graph)."""
    lam = _normalize_legs(legs)
    if len(lam) < 3:
        raise ParameterError(f"fruit characterization needs at least 3 legs, got {lam}")
    if len(lam) == 4 and lam[1:] == (1, 1, 1):
        return False
    if len(lam) == 3 and lam[2] == 1:
        return False
    return lam != (2, 2, 2)


def cycles_complement_base_case(legs):
    """Base spider dominated leg-wise by legs, or None."""
    lam = _normalize_legs(legs)
    return next((b for b in COMPLEMENT_CYCLE_BASES if dominates(lam, b)), None)


def fruit_base_case(legs):
    lam = _normalize_legs(legs)
    return next((b for b in FRUIT_BASES if dominates(lam, b)), None)


def min_degree_sufficient(x, y, oracle=False, budget=DEFAULT_BUDGET):
    """
    Minimum degree of y at least n-3, x connected and containing one of the
    six small spiders as a subgraph. Witness: (legs, center, leg paths).
    """
    _same_size(x, y)
    n = x.n
    witness = None
    if min_degree(y) >= n - 3 and is_connected(x):
        for legs in MIN_DEGREE_SPIDERS:
            found = find_spider_subgraph(x, legs)
            if found is not None:
                witness = (legs, found[0], [list(p) for p in found[1]])
                break
    return TheoremVerdict(witness is not None, _census_connected(x, y, oracle, budget), witness, "sufficient")


def _family_members(family, n):
    if family == "CoCycle":
        return list(co_cycle_family(n))
    if family == "CoFruit":
        return list(co_fruit_family(n))
    return list(co_path_cycle_unions(n))


def _base_targets(family, n):
    if family == "CoCycle":
        return [("co(cycle)", complement(cycle(n)))]
    if family == "CoFruit":
        return [("co(cycle)", complement(cycle(n))), ("co(fruit)", complement(fruit(n)))]
    return [(f"min-degree member {i}", y) for i, y in enumerate(co_path_cycle_unions(n))]


def hereditary_extension_check(base_x, attach_at, family, budget=DEFAULT_BUDGET):
    """
    Grow base_x by a pendant vertex at attach_at and census FS(x', Y') for
    every (n+1)-vertex member Y' of the hereditary family.

    Raises:
        ParameterError: when the family is unknown or a base census is
            disconnected (the message names it and its component count).
    """
    if family not in HEREDITARY_FAMILIES:
        raise ParameterError(f"family must be one of {', '.join(HEREDITARY_FAMILIES)}, got '{family}'")
    n = base_x.n
    least = 4 if family == "MinDeg3" else 5
    if n < least:
        raise ParameterError(f"{family} extension needs a base on at least {least} vertices, got {n}")
    for name, y in _base_targets(family, n):
        census = fs_components(base_x, y, budget)
        if census.count != 1:
            raise ParameterError(f"base hypothesis fails: FS(X, {name}) has {census.count} components")
    grown = add_pendant(base_x, attach_at)
    failures = []
    members = _family_members(family, n + 1)
    for idx, y in enumerate(members):
        if not fs_is_connected(grown, y, budget):
            failures.append(idx)
    log_debug(f"hereditary {family}: {len(members)} members at n={n + 1}, {len(failures)} disconnected")
    return TheoremVerdict(True, not failures, {"members": len(members), "disconnected": failures}, "sufficient")


def path_connected_against(y):
    """FS(Path_n, y) is connected iff y is complete."""
    return y == complete(y.n) if y.n >= 1 else True


__all__ = [
    "TheoremVerdict",
    "sufficient_spider_condition",
    "wilsonian_existence",
    "necessary_spider_condition",
    "dandelion_characterization",
    "spider_vs_complement_cycle",
    "spider_vs_complement_fruit",
    "cycles_complement_base_case",
    "fruit_base_case",
    "min_degree_sufficient",
    "hereditary_extension_check",
    "path_connected_against",
]
