from collections import Counter

import pytest

from maxtree.enumeration import (
    count_shapes,
    enumerate_partition,
    enumerate_shapes,
    merge_streams,
)
from maxtree.shape import ShapeError, canonicalize, serialize


def wedderburn_etherington(n):
    """Unlabeled binary rooted tree counts by the classic split recurrence."""
    a = [0, 1]
    for m in range(2, n + 1):
        total = 0
        for i in range(1, (m - 1) // 2 + 1):
            total += a[i] * a[m - i]
        if m % 2 == 0:
            k = a[m // 2]
            total += k * (k + 1) // 2
        a.append(total)
    return a[n]


def _texts(r, n):
    return [t.text for t in enumerate_shapes(r, n)]


def test_r3_n7_two_shapes():
    got = sorted(tuple(c.n for c in t.children) for t in enumerate_shapes(3, 7))
    assert got == [(1, 1, 5), (1, 3, 3)]


def test_r2_n6_six_shapes():
    assert len(_texts(2, 6)) == 6 == wedderburn_etherington(6)


def test_single_leaf():
    assert _texts(2, 1) == ["*"]


@pytest.mark.parametrize("r, n, expected", [(3, 9, 4), (2, 4, 2), (2, 2, 1)])
def test_count_examples(r, n, expected):
    assert count_shapes(r, n) == expected
    assert len(_texts(r, n)) == expected


@pytest.mark.parametrize("n", range(1, 15))
def test_binary_counts_match_recurrence(n):
    assert count_shapes(2, n) == wedderburn_etherington(n)


@pytest.mark.parametrize("r, n", [(2, 7), (3, 9), (3, 11), (4, 10), (5, 13)])
def test_enumeration_matches_brute_force(r, n):
    # the oracle closes every ordered child tuple and deduplicates by canonical text
    got = sorted(serialize(t) for t in enumerate_shapes(r, n))
    assert got == _brute_texts(r, n)


def _brute_texts(r, n):
    from maxtree.shape import parse

    memo = {}

    def shapes(m):
        if m in memo:
            return memo[m]
        if m == 1:
            memo[m] = [parse("*;", r)]
            return memo[m]
        found = {}

        def rec(k, rem, acc):
            if k == 0:
                if rem == 0:
                    t = canonicalize(list(acc), r)
                    found[t.text] = t
                return
            for size in range(1, rem - (k - 1) + 1, r - 1):
                for s in shapes(size):
                    rec(k - 1, rem - size, acc + [s])

        rec(r, m, [])
        memo[m] = list(found.values())
        return memo[m]

    return sorted(t.text + ";" for t in shapes(n))


@pytest.mark.parametrize("r, top", [(2, 12), (3, 17), (4, 16)])
def test_no_duplicates_sorted_and_closed(r, top):
    for n in range(1, top + 1, r - 1):
        texts = _texts(r, n)
        assert len(texts) == len(set(texts)) == count_shapes(r, n)
        assert texts == sorted(texts)
        for t in enumerate_shapes(r, n):
            assert t.n == n == t.w * (r - 1) + 1
            for c in t.children:
                assert c.text in set(_texts(r, c.n))


@pytest.mark.parametrize("parts", [1, 2, 3, 5, 8])
def test_partitions_merge_to_serial_stream(parts):
    serial = _texts(3, 19)
    streams = [enumerate_partition(3, 19, i, parts) for i in range(parts)]
    merged = [t.text for t in merge_streams(streams)]
    assert merged == serial
    sizes = Counter()
    for i in range(parts):
        for t in enumerate_partition(3, 19, i, parts):
            sizes[t.text] += 1
    assert set(sizes.values()) == {1}


@pytest.mark.parametrize("r, n", [(3, 4), (2, 0), (1, 3), (4, 5)])
def test_invalid_leaf_counts(r, n):
    with pytest.raises(ShapeError):
        list(enumerate_shapes(r, n))
    with pytest.raises(ShapeError):
        count_shapes(r, n)
