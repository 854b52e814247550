"""Exact integer combinatorics: binomials, Stirling numbers, Bell numbers.

Everything returns plain Python ints, so all arithmetic is arbitrary
precision by construction. Out-of-range indices give 0 rather than raising,
which keeps the summation code elsewhere free of edge-case guards.
"""

from functools import cache
from math import comb


def binomial(n, k):
    """C(n, k), with 0 for k outside 0..n."""
    if n < 0:
        raise ValueError(f"binomial: n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@cache
def stirling2(k, t):
    """Stirling number of the second kind: partitions of a k-set into t blocks.

    Uses the recurrence S2(k, t) = t*S2(k-1, t) + S2(k-1, t-1) with
    S2(0, 0) = 1. Total: returns 0 whenever t < 0 or t > k.
    """
    if t < 0 or t > k:
        return 0
    if k == 0:
        return 1
    return t * stirling2(k - 1, t) + stirling2(k - 1, t - 1)


def bell(k):
    """Bell number B(k): all set partitions of a k-set."""
    return sum(stirling2(k, t) for t in range(k + 1))


def bell_restricted(k, n):
    """B(k, n): set partitions of a k-set into at most n blocks."""
    return sum(stirling2(k, t) for t in range(min(k, n) + 1))


def odd_double_factorial(m):
    """m!! for odd m, counting perfect matchings on m+1 points.

    Defined as 1 for m in {-1, 0}; positive even m is a domain error.
    """
    if m in (-1, 0):
        return 1
    if m < -1 or m % 2 == 0:
        raise ValueError(f"odd_double_factorial: need odd m >= -1, got {m}")
    result = 1
    for j in range(1, m + 1, 2):
        result *= j
    return result


def set_partitions(n):
    """Yield all set partitions of {1, ..., n} as tuples of tuples.

    Blocks are ordered by their minimum and sorted internally, so each
    partition comes out in canonical form exactly once. n = 0 yields the
    empty partition.
    """
    blocks = []

    def rec(i):
        if i > n:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(1)


def singleton_free_bell(m):
    """Set partitions of an m-set with every block of size at least 2.

    Counted by direct enumeration; the alternating-binomial identity with
    Bell numbers is checked in the test suite, not assumed here.
    """
    if m < 0:
        raise ValueError(f"singleton_free_bell: need m >= 0, got {m}")
    return sum(1 for p in set_partitions(m) if all(len(b) >= 2 for b in p))
