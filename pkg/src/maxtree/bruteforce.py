"""
Direct-enumeration oracles for labeled-history counts.

These walk the definitions literally (every permutation, every map) and
share no code with :mod:`maxtree.histories`.  Only practical for trees with
a handful of internal nodes.
"""
from itertools import permutations, product

from .shape import TreeShape


def descent_pairs(t: TreeShape) -> tuple[int, list[tuple[int, int]]]:
    """Number internal nodes 0..w-1 and list every (descendant, ancestor) pair."""
    pairs = []
    counter = 0

    def walk(node, ancestors):
        nonlocal counter
        if node.is_leaf:
            return
        me = counter
        counter += 1
        for a in ancestors:
            pairs.append((me, a))
        for c in node.children:
            walk(c, ancestors + [me])

    walk(t, [])
    return counter, pairs


def histories_by_bijection(t: TreeShape) -> int:
    """Count bijections to {1..w} that increase strictly toward the root."""
    w, pairs = descent_pairs(t)
    return sum(all(f[u] < f[v] for u, v in pairs) for f in permutations(range(w)))


def tie_permitting_by_surjection(t: TreeShape, z: int) -> int:
    """Count surjections onto {1..z} that increase strictly toward the root."""
    w, pairs = descent_pairs(t)
    if w == 0:
        return 1 if z == 0 else 0
    full = set(range(z))
    count = 0
    for f in product(range(z), repeat=w):
        if all(f[u] < f[v] for u, v in pairs) and set(f) == full:
            count += 1
    return count
