"""
Performance and resource monitoring utilities.
"""
from math import factorial

import psutil

from core.errors import CapabilityError

DEFAULT_BUDGET = factorial(10)

# int8 row + int64 rank per chunk row are transient; what persists is
# the edge list (two int64 per friendly swap) and the component labels.
_BYTES_PER_EDGE = 16
_BYTES_PER_VERTEX = 8 + 4


def get_system_info():
    """Get basic system information."""
    return {
        'cpu_count': psutil.cpu_count(),
        'memory_total': psutil.virtual_memory().total,
        'memory_available': psutil.virtual_memory().available
    }


def monitor_resources():
    """Monitor current resource usage."""
    return {
        'cpu_percent': psutil.cpu_percent(),
        'memory_percent': psutil.virtual_memory().percent,
        'memory_used': psutil.virtual_memory().used
    }


def estimate_census_bytes(n, x_edges):
    """
    Upper estimate of the memory held by a dense census of FS(X, Y).

    Args:
        n (int): Number of vertices of X and Y.
        x_edges (int): Number of edges of X; each contributes at most
            n!/2 friendly swaps.
    """
    vertices = factorial(n)
    return vertices * _BYTES_PER_VERTEX + (vertices // 2) * x_edges * _BYTES_PER_EDGE


def ensure_census_capacity(n, x_edges, budget=DEFAULT_BUDGET):
    """
    Raise CapabilityError when n! exceeds the budget or the estimate
    exceeds the currently available memory.

    Returns:
        int: the estimated byte count.
    """
    required = estimate_census_bytes(n, x_edges)
    if factorial(n) > budget:
        raise CapabilityError(
            f"census of {factorial(n)} permutations (n={n}) exceeds the budget of {budget}; "
            f"estimated memory {required / 2**20:.1f} MiB",
            required_bytes=required,
        )
    available = get_system_info()['memory_available']
    if required > available:
        raise CapabilityError(
            f"census for n={n} needs about {required / 2**20:.1f} MiB, "
            f"only {available / 2**20:.1f} MiB available",
            required_bytes=required,
        )
    return required
