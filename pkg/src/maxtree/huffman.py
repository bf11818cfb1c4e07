"""
The r-merge operator, normal sequences, and r-ary Huffman trees.

Weights are positive integers throughout so every comparison is exact.
"""
from __future__ import annotations

import bisect
import heapq
import os
from collections import Counter
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Sequence

from .shape import TreeShape, compose, leaf

DEFAULT_STATE_CAP = 10**6


class StateCapExceeded(RuntimeError):
    """The exhaustive tie exploration visited more states than allowed."""


def _check_weights(weights: Sequence[int]) -> None:
    for x in weights:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValueError(f"weights must be positive integers, got {x!r}")


def r_merge(seq: Sequence[int], r: int) -> tuple[int, ...]:
    """Replace the first ``r`` elements of a non-decreasing sequence by their sum."""
    if len(seq) < r:
        raise ValueError(f"sequence of length {len(seq)} is shorter than r={r}")
    rest = list(seq[r:])
    bisect.insort(rest, sum(seq[:r]))
    return tuple(rest)


def is_power(x: int, r: int) -> bool:
    while x % r == 0:
        x //= r
    return x == 1


def floor_log(x: int, r: int) -> int:
    k = 0
    p = r
    while p <= x:
        p *= r
        k += 1
    return k


@dataclass(frozen=True)
class NormalityReport:
    is_normal: bool
    k: int | None = None
    # 1-based position of the single element that is not a power of r
    nonpower_index: int | None = None


def is_normal(seq: Sequence[int], r: int) -> NormalityReport:
    """Check whether ``seq`` is normal for arity ``r``.

    The witness ``k`` is ``floor(log_r seq[0])``; in particular an all-``r**j``
    sequence reports ``k = j``.
    """
    if not seq:
        raise ValueError("empty sequence")
    if any(seq[i] > seq[i + 1] for i in range(len(seq) - 1)):
        return NormalityReport(False)
    k = floor_log(seq[0], r)
    if seq[-1] > r ** (k + 1):
        return NormalityReport(False)
    odd = [i for i, x in enumerate(seq) if not is_power(x, r)]
    if len(odd) > 1:
        return NormalityReport(False)
    return NormalityReport(True, k, odd[0] + 1 if odd else None)


def huffman_tree(weights: Sequence[int], r: int) -> tuple[TreeShape, tuple[int, ...]]:
    """Deterministic r-ary Huffman tree and its weight sequence.

    Ties are broken by ``(weight, creation index)``: leaves are indexed in
    input order (after a stable sort by weight), and each merged node gets
    the next index.  Returns the canonical shape and the merged weights in
    creation order, which is always non-decreasing.
    """
    _check_weights(weights)
    n = len(weights)
    if n < 1 or (n - 1) % (r - 1):
        raise ValueError(f"{n} leaves cannot form a strictly {r}-furcating tree")
    heap = [(w, i, leaf(r)) for i, w in enumerate(sorted(weights))]
    heapq.heapify(heap)
    created: list[int] = []
    counter = n
    while len(heap) > 1:
        picked = [heapq.heappop(heap) for _ in range(r)]
        total = sum(p[0] for p in picked)
        node = compose([p[2] for p in picked])
        heapq.heappush(heap, (total, counter, node))
        counter += 1
        created.append(total)
    assert created == sorted(created), "Huffman merge weights must be non-decreasing"
    return heap[0][2], tuple(created)


def state_cap() -> int:
    raw = os.environ.get("MAXTREE_STATE_CAP")
    return int(raw) if raw else DEFAULT_STATE_CAP


def huffman_all_trees(
    weights: Sequence[int], r: int, cap: int | None = None
) -> set[tuple[TreeShape, tuple[int, ...]]]:
    """Every ``(shape, weight sequence)`` reachable by resolving ties in any way.

    States are multisets of pending ``(weight, shape)`` pairs; choosing
    between nodes with identical weight and shape never branches.  Raises
    :class:`StateCapExceeded` after ``cap`` distinct states (default from
    ``MAXTREE_STATE_CAP``, else one million).
    """
    _check_weights(weights)
    n = len(weights)
    if n < 1 or (n - 1) % (r - 1):
        raise ValueError(f"{n} leaves cannot form a strictly {r}-furcating tree")
    if cap is None:
        cap = state_cap()
    memo: dict[tuple, frozenset] = {}
    explored = 0

    def key_of(items) -> tuple:
        return tuple(sorted(items, key=lambda p: (p[0], p[1].sort_key)))

    def solve(state: tuple) -> frozenset:
        nonlocal explored
        if state in memo:
            return memo[state]
        explored += 1
        if explored > cap:
            raise StateCapExceeded(f"more than {cap} states explored")
        if len(state) == 1:
            result = frozenset([(state[0][1], ())])
            memo[state] = result
            return result
        boundary = state[r - 1][0]
        forced = [p for p in state if p[0] < boundary]
        larger = [p for p in state if p[0] > boundary]
        kinds = Counter(p[1] for p in state if p[0] == boundary)
        need = r - len(forced)
        out = set()
        for pick in combinations_with_replacement(sorted(kinds, key=lambda t: t.sort_key), need):
            want = Counter(pick)
            if any(want[s] > kinds[s] for s in want):
                continue
            merged = compose([p[1] for p in forced] + list(pick))
            total = sum(p[0] for p in forced) + boundary * need
            rest = larger + [(boundary, s) for s in (kinds - want).elements()] + [(total, merged)]
            for shape, seq in solve(key_of(rest)):
                out.add((shape, (total,) + seq))
        result = frozenset(out)
        memo[state] = result
        return result

    return set(solve(key_of([(w, leaf(r)) for w in weights])))


def huffman_all_shapes(weights: Sequence[int], r: int, cap: int | None = None) -> set[TreeShape]:
    """Every canonical shape an arbitrary tie-breaking Huffman run can produce."""
    return {shape for shape, _ in huffman_all_trees(weights, r, cap)}


def weight_sequence(t: TreeShape) -> tuple[int, ...]:
    """Internal-node weights under unit leaf weights, non-decreasing."""
    return tuple(sorted(v.leaf_count for v in t.internal_nodes()))
