"""
General utilities (seeding, partitions, timing).
"""
import time

import numpy as np

DEFAULT_SEED = 20230401


def make_rng(seed=DEFAULT_SEED):
    """
    Seeded numpy Generator shared by every randomized sweep.

    Args:
        seed: Integer seed; None falls back to DEFAULT_SEED.

    Returns:
        np.random.Generator
    """
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


def partitions(total, min_parts=1, max_part=None):
    """
    Integer partitions of total as non-increasing tuples, largest first.

    Args:
        total: The number being partitioned.
        min_parts: Skip partitions with fewer parts.
        max_part: Largest allowed part (defaults to total).
    """
    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    cap = total if max_part is None else max_part
    for p in rec(total, cap):
        if len(p) >= min_parts:
            yield p


def dominates(big, small):
    """Leg-wise domination after sorting both partitions in decreasing order."""
    big = sorted(big, reverse=True)
    small = sorted(small, reverse=True)
    if len(small) > len(big):
        return False
    return all(b >= s for b, s in zip(big, small))


class Stopwatch:
    """Context manager measuring wall time with time.perf_counter."""

    def __enter__(self):
        self.start = time.perf_counter()
        self.elapsed = 0.0
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        return False
