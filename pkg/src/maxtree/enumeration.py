"""Exhaustive, duplicate-free enumeration of r-furcating shapes with n leaves."""
from __future__ import annotations

import heapq
from functools import lru_cache
from math import comb
from typing import Iterator

from .shape import ShapeError, TreeShape, compose, leaf


def _check(r: int, n: int) -> None:
    if not isinstance(r, int) or r < 2:
        raise ShapeError(f"arity must be an integer >= 2, got {r!r}")
    if not isinstance(n, int) or n < 1 or (n - 1) % (r - 1):
        raise ShapeError(f"invalid leaf count n={n} for r={r}: need n >= 1 and n = 1 (mod {r - 1})")


def size_multisets(r: int, n: int) -> list[tuple[int, ...]]:
    """Non-decreasing r-tuples of valid subtree sizes summing to ``n``."""
    _check(r, n)
    if n == 1:
        return []
    out: list[tuple[int, ...]] = []

    def rec(k: int, rem: int, lo: int, acc: tuple[int, ...]) -> None:
        if k == 1:
            if rem >= lo and (rem - 1) % (r - 1) == 0:
                out.append(acc + (rem,))
            return
        for size in range(lo, rem // k + 1, r - 1):
            rec(k - 1, rem - size, size, acc + (size,))

    rec(r, n, 1, ())
    return out


def _shapes_for_sizes(r: int, sizes: tuple[int, ...]) -> Iterator[TreeShape]:
    pools = [_sorted_shapes(r, s) for s in sizes]
    k = len(sizes)

    def rec(i: int, start: int, acc: list[TreeShape]) -> Iterator[TreeShape]:
        if i == k:
            yield compose(acc)
            return
        pool = pools[i]
        lo = start if i > 0 and sizes[i] == sizes[i - 1] else 0
        for j in range(lo, len(pool)):
            acc.append(pool[j])
            yield from rec(i + 1, j, acc)
            acc.pop()

    yield from rec(0, 0, [])


@lru_cache(maxsize=None)
def _sorted_shapes(r: int, n: int) -> tuple[TreeShape, ...]:
    if n == 1:
        return (leaf(r),)
    shapes = [t for sizes in size_multisets(r, n) for t in _shapes_for_sizes(r, sizes)]
    shapes.sort(key=lambda t: t.text)
    return tuple(shapes)


def enumerate_shapes(r: int, n: int) -> Iterator[TreeShape]:
    """Yield every canonical shape with ``n`` leaves once, in serialization order."""
    _check(r, n)
    yield from _sorted_shapes(r, n)


def partitions(r: int, n: int, parts: int) -> list[list[tuple[int, ...]]]:
    """Split the root size-multisets into ``parts`` disjoint groups.

    Groups are balanced greedily by the number of shapes each multiset
    produces; the assignment depends only on ``(r, n, parts)``.
    """
    if parts < 1:
        raise ValueError("parts must be >= 1")
    groups: list[list[tuple[int, ...]]] = [[] for _ in range(parts)]
    loads = [0] * parts
    weighted = [(_multiset_count(r, ms), ms) for ms in size_multisets(r, n)]
    weighted.sort(key=lambda p: (-p[0], p[1]))
    for cnt, ms in weighted:
        i = min(range(parts), key=lambda j: (loads[j], j))
        groups[i].append(ms)
        loads[i] += cnt
    return groups


def enumerate_partition(r: int, n: int, part: int, parts: int) -> Iterator[TreeShape]:
    """One worker's disjoint sub-stream, in serialization order.

    Merging all ``parts`` sub-streams with :func:`merge_streams` reproduces
    :func:`enumerate_shapes` exactly.
    """
    _check(r, n)
    if n == 1:
        if part == 0:
            yield leaf(r)
        return
    group = partitions(r, n, parts)[part]
    shapes = [t for ms in group for t in _shapes_for_sizes(r, ms)]
    shapes.sort(key=lambda t: t.text)
    yield from shapes


def merge_streams(streams) -> Iterator[TreeShape]:
    return heapq.merge(*streams, key=lambda t: t.text)


def _multiset_count(r: int, sizes: tuple[int, ...]) -> int:
    total = 1
    i = 0
    while i < len(sizes):
        j = i
        while j < len(sizes) and sizes[j] == sizes[i]:
            j += 1
        # multisets of size (j - i) drawn from count_shapes(size) kinds
        total *= comb(count_shapes(r, sizes[i]) + (j - i) - 1, j - i)
        i = j
    return total


@lru_cache(maxsize=None)
def count_shapes(r: int, n: int) -> int:
    """Number of shapes, by the multiset-composition recurrence (no enumeration)."""
    _check(r, n)
    if n == 1:
        return 1
    return sum(_multiset_count(r, ms) for ms in size_multisets(r, n))
