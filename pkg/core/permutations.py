"""
Permutations of {1..n} with Lehmer-code ranking, plus vectorized rank/unrank
over whole rank ranges for the dense census.
"""
from dataclasses import dataclass
from math import factorial

import numpy as np

from core.errors import ParameterError


@dataclass(frozen=True, order=True)
class Permutation:
    """
    Bijection V(X) -> V(Y) in one-line notation: images[x - 1] = sigma(x).
    """

    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ParameterError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @property
    def n(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x - 1]

    def __len__(self):
        return len(self.images)

    def __str__(self):
        sep = "" if self.n < 10 else " "
        return sep.join(str(v) for v in self.images)

    def rank(self):
        return rank(self.images)

    def swap_positions(self, a, b):
        """sigma o (a b): exchange the occupants of positions a and b."""
        img = list(self.images)
        img[a - 1], img[b - 1] = img[b - 1], img[a - 1]
        return Permutation(tuple(img))

    def position_of(self, person):
        return self.images.index(person) + 1

    def inverse(self):
        inv = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    def compose(self, other):
        """self o other."""
        return Permutation(tuple(self.images[other.images[i] - 1] for i in range(self.n)))

    def sign(self):
        return sign(self.images)

    def to_list(self):
        return list(self.images)


def identity(n):
    return Permutation(tuple(range(1, n + 1)))


def rank(images):
    """Lehmer rank of a one-line permutation (values 1..n, or 0..n-1)."""
    n = len(images)
    r = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if images[j] < images[i])
        r += smaller * factorial(n - 1 - i)
    return r


def unrank(r, n):
    """Inverse of rank: the permutation of 1..n with Lehmer rank r."""
    if not 0 <= r < factorial(n):
        raise ParameterError(f"rank {r} outside 0..{factorial(n) - 1}")
    pool = list(range(1, n + 1))
    out = []
    for i in range(n):
        f = factorial(n - 1 - i)
        d, r = divmod(r, f)
        out.append(pool.pop(d))
    return Permutation(tuple(out))


def sign(images):
    """Sign from the cycle decomposition: (-1)^(n - #cycles)."""
    n = len(images)
    base = min(images)
    seen = [False] * n
    cycles = 0
    for i in range(n):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = images[j] - base
    return -1 if (n - cycles) % 2 else 1


def unrank_range(start, stop, n):
    """
    Rows of 0-based permutations for ranks start..stop-1 in lexicographic order.

    Returns:
        np.ndarray: (stop - start, n) int8 array.
    """
    ranks = np.arange(start, stop, dtype=np.int64)
    m = len(ranks)
    available = np.ones((m, n), dtype=bool)
    out = np.empty((m, n), dtype=np.int8)
    rows = np.arange(m)
    for i in range(n):
        f = factorial(n - 1 - i)
        digit = (ranks // f) % (n - i)
        # position of the (digit+1)-th still-available value
        pick = np.argmax(np.cumsum(available, axis=1) == (digit + 1)[:, None], axis=1)
        out[:, i] = pick
        available[rows, pick] = False
    return out


def all_permutations(n):
    """All n! permutations of 0..n-1 as an int8 array, row index = rank."""
    return unrank_range(0, factorial(n), n)


def rank_rows(perms):
    """Vectorized Lehmer rank of each row of a 0-based permutation array."""
    perms = np.asarray(perms)
    m, n = perms.shape
    total = np.zeros(m, dtype=np.int64)
    for i in range(n - 1):
        smaller = (perms[:, i + 1:] < perms[:, i:i + 1]).sum(axis=1)
        total += smaller.astype(np.int64) * factorial(n - 1 - i)
    return total
