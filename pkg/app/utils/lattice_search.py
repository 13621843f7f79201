"""
Bounded enumeration of integer multiplicity vectors.

Every search works on non-increasing "shapes" and expands to all slot
orders only on request, because every constraint used by the services is
symmetric in the blown-up points.
"""
from collections import Counter
from math import factorial, prod
from typing import Iterator, List, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations, partitions

Shape = Tuple[int, ...]


def shapes_with_sums(length: int, total: int, square_total: int, lo: int, hi: int) -> Iterator[Shape]:
    """
    Non-increasing tuples with entries in [lo, hi] whose entries sum to
    ``total`` and whose squares sum to ``square_total``.
    """

    def rec(n: int, cap: int, s: int, q: int, prefix: List[int]) -> Iterator[Shape]:
        if n == 0:
            if s == 0 and q == 0:
                yield tuple(prefix)
            return
        # Cauchy-Schwarz on the remaining slots
        if q < 0 or n * q < s * s:
            return
        if s < n * lo or s > n * cap:
            return
        for v in range(cap, lo - 1, -1):
            rest_s, rest_q = s - v, q - v * v
            if rest_q < 0:
                continue
            if n > 1 and rest_q > (n - 1) * max(lo * lo, v * v):
                # the remaining slots cannot absorb that much square mass
                continue
            prefix.append(v)
            yield from rec(n - 1, v, rest_s, rest_q, prefix)
            prefix.pop()

    yield from rec(length, hi, total, square_total, [])


def triangular(a: int) -> int:
    return a * (a + 1) // 2


def shapes_within_budget(length: int, hi: int, budget: int) -> Iterator[Shape]:
    """Non-increasing tuples in [0, hi] with sum of a(a+1)/2 at most ``budget``."""

    def rec(n: int, cap: int, left: int, prefix: List[int]) -> Iterator[Shape]:
        if n == 0:
            yield tuple(prefix)
            return
        for v in range(min(cap, hi), -1, -1):
            cost = triangular(v)
            if cost > left:
                continue
            prefix.append(v)
            yield from rec(n - 1, v, left - cost, prefix)
            prefix.pop()

    if budget < 0:
        return
    yield from rec(length, hi, budget, [])


def shapes_with_total(length: int, hi: int, total: int) -> Iterator[Shape]:
    """Non-increasing tuples of ``length`` entries in [0, hi] summing to ``total``."""
    if total < 0 or total > length * hi:
        return
    if total == 0:
        yield (0,) * length
        return
    for part in partitions(total, m=length, k=hi):
        entries = [v for v, mult in sorted(part.items(), reverse=True) for _ in range(mult)]
        yield tuple(entries) + (0,) * (length - len(entries))


def slot_orders(shape: Sequence[int]) -> Iterator[Shape]:
    """Every distinct assignment of a shape to the numbered slots."""
    for perm in multiset_permutations(sorted(shape)):
        yield tuple(perm)


def orbit_size(shape: Sequence[int]) -> int:
    """Number of distinct slot orders of a shape."""
    counts = Counter(shape)
    return factorial(len(shape)) // prod(factorial(c) for c in counts.values())
