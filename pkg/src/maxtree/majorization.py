"""
Majorization predicates on integer vectors and the product objective.

Both predicates sort internally, so callers may pass vectors in any order.
No floating point enters any comparison.
"""
from __future__ import annotations

import math
from itertools import accumulate
from typing import Sequence

from .shape import TreeShape


def _same_length(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} != {len(y)}")


def majorizes(y: Sequence[int], x: Sequence[int]) -> bool:
    """True iff ``x`` is majorized by ``y``.

    Non-increasing prefix sums of x are bounded by those of y for
    k = 1..n-1, and the totals agree.
    """
    _same_length(x, y)
    px = list(accumulate(sorted(x, reverse=True)))
    py = list(accumulate(sorted(y, reverse=True)))
    if not px:
        return True
    return px[-1] == py[-1] and all(a <= b for a, b in zip(px[:-1], py[:-1]))


def weakly_supermajorizes(y: Sequence[int], x: Sequence[int]) -> bool:
    """True iff ``x`` is weakly supermajorized by ``y``.

    On non-decreasing orderings, every prefix sum of y is at most the
    corresponding prefix sum of x (k = 1..n).
    """
    _same_length(x, y)
    px = accumulate(sorted(x))
    py = accumulate(sorted(y))
    return all(b <= a for a, b in zip(px, py))


def log_objective(t: TreeShape) -> tuple[int, float]:
    """``prod (m(v) - 1)`` over internal nodes, exactly, plus its natural log.

    Minimizing the product is equivalent to maximizing the labeled-history
    count at fixed (r, n).  The float is for display only.
    """
    p = 1
    for v in t.internal_nodes():
        p *= v.leaf_count - 1
    return p, math.log(p)


def log_sum_check(x: Sequence[int], y: Sequence[int]) -> bool | None:
    """Check that ``x`` weakly supermajorized by ``y`` forces ``prod y < prod x``.

    Returns None when the premise does not hold (x not weakly supermajorized
    by y, or x a permutation of y), otherwise whether the strict product
    inequality holds.
    """
    _same_length(x, y)
    if any(v <= 0 for v in x) or any(v <= 0 for v in y):
        raise ValueError("entries must be strictly positive")
    if sorted(x) == sorted(y) or not weakly_supermajorizes(y, x):
        return None
    return math.prod(y) < math.prod(x)
