"""Pure-Python chain-count kernel (fallback for the compiled ``_chain``)."""


def chain_counts(parents, jmax):
    """Order-preserving map counts into chains of length 0..jmax.

    ``parents`` lists the internal nodes in post-order (children before
    parents); entry ``v`` is the index of v's parent, or -1 for the root.
    Returns ``A[j]``, the number of maps f from internal nodes to {1..j}
    with f(child) < f(parent), for j = 0..jmax.
    """
    w = len(parents)
    if w == 0:
        return [1] * (jmax + 1)
    prod = [[1] * (jmax + 1) for _ in range(w)]
    root = None
    for v in range(w):
        p = prod[v]
        a = [0] * (jmax + 1)
        s = 0
        for t in range(1, jmax + 1):
            s += p[t - 1]
            a[t] = s
        u = parents[v]
        if u < 0:
            root = a
        else:
            q = prod[u]
            for t in range(jmax + 1):
                q[t] *= a[t]
    return root
