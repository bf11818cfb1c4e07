"""
Labeled-history counts for r-furcating shapes.

``N(T)`` is counted two independent ways: the subtree recursion with a
multinomial coefficient at each root, and the closed form
``w! / prod_v ((m(v) - 1) / (r - 1))``.

Tie-permitting counts ``E(T, z)`` are the surjections f from internal nodes
onto ``{1..z}`` with ``f(u) < f(v)`` whenever u lies strictly below v.  They
are obtained by inclusion-exclusion over chain length from ``A(T, j)``, the
number of such (not necessarily surjective) maps into ``{1..j}``.
"""
from __future__ import annotations

from math import comb, factorial

from . import kernels
from .shape import TreeShape

_N_MEMO: dict[TreeShape, int] = {}
_CHAIN_MEMO: dict[tuple[TreeShape, int], tuple[int, ...]] = {}


def multinomial(total: int, parts) -> int:
    parts = list(parts)
    if sum(parts) != total:
        raise ValueError("parts must sum to total")
    out = 1
    acc = 0
    for k in parts:
        acc += k
        out *= comb(acc, k)
    return out


def count_histories_recursive(t: TreeShape) -> int:
    """N(T) via the multinomial recursion over root subtrees (memoized)."""
    got = _N_MEMO.get(t)
    if got is not None:
        return got
    # iterative post-order so deep caterpillars do not hit the recursion limit
    stack = [(t, False)]
    while stack:
        node, ready = stack.pop()
        if node in _N_MEMO:
            continue
        if node.is_leaf:
            _N_MEMO[node] = 1
            continue
        if not ready:
            stack.append((node, True))
            stack.extend((c, False) for c in node.children if c not in _N_MEMO)
            continue
        val = multinomial(node.w - 1, (c.w for c in node.children))
        for c in node.children:
            val *= _N_MEMO[c]
        _N_MEMO[node] = val
    return _N_MEMO[t]


def count_histories_closed(t: TreeShape) -> int:
    """N(T) = w! / prod over internal v of (m(v)-1)/(r-1)."""
    r = t.r
    if (t.n - 1) % (r - 1):
        raise AssertionError(f"leaf count {t.n} incompatible with r={r}")
    denom = 1
    for v in t.internal_nodes():
        denom *= (v.leaf_count - 1) // (r - 1)
    q, rem = divmod(factorial(t.w), denom)
    if rem:
        raise AssertionError(f"inexact division in closed-form count for {t}")
    return q


def post_order_parents(t: TreeShape) -> list[int]:
    """Parent index of each internal node, internal nodes in post-order."""
    out: list[int] = []
    if t.is_leaf:
        return out
    # frame: [node, next child position, post-order indices of internal children]
    stack: list[list] = [[t, 0, []]]
    while stack:
        frame = stack[-1]
        node, i, kids = frame
        if i < len(node.children):
            frame[1] += 1
            c = node.children[i]
            if not c.is_leaf:
                stack.append([c, 0, []])
            continue
        stack.pop()
        me = len(out)
        out.append(-1)
        for k in kids:
            out[k] = me
        if stack:
            stack[-1][2].append(me)
    return out


def chain_counts(t: TreeShape, jmax: int) -> tuple[int, ...]:
    """``A(T, j)`` for ``j = 0..jmax``."""
    key = (t, jmax)
    got = _CHAIN_MEMO.get(key)
    if got is None:
        got = tuple(kernels.chain_counts(post_order_parents(t), jmax))
        _CHAIN_MEMO[key] = got
    return got


def count_tie_permitting(t: TreeShape, z: int) -> int:
    """E(T, z): labeled histories with exactly ``z`` events, ties allowed."""
    if z < 0:
        raise ValueError("z must be >= 0")
    if t.is_leaf:
        return 1 if z == 0 else 0
    if z < t.height or z > t.w:
        return 0
    a = chain_counts(t, t.w)
    total = 0
    for j in range(z + 1):
        term = comb(z, j) * a[j]
        total += term if (z - j) % 2 == 0 else -term
    return total


def tie_permitting_profile(t: TreeShape) -> dict[int, int]:
    """``{z: E(T, z)}`` over the nonzero range ``height..w``."""
    if t.is_leaf:
        return {0: 1}
    return {z: count_tie_permitting(t, z) for z in range(t.height, t.w + 1)}


def total_tie_permitting(t: TreeShape) -> int:
    return sum(tie_permitting_profile(t).values())


def clear_caches() -> None:
    _N_MEMO.clear()
    _CHAIN_MEMO.clear()

