import pytest

from maxtree import published
from maxtree.acceptance import decomposition_solutions
from maxtree.bruteforce import tie_permitting_by_surjection
from maxtree.enumeration import enumerate_shapes
from maxtree.histories import count_histories_closed, count_tie_permitting, tie_permitting_profile
from maxtree.maxprob import (
    ResourceGuardError,
    conjecture_check,
    decompose,
    hammersley_split,
    max_tie_table,
    maxprob_shape,
    nonunique_family,
    root_split,
    scan_column,
    verify_maxprob,
)
from maxtree.shape import fully_symmetric, is_fully_symmetric, parse


@pytest.mark.parametrize(
    "n, r, triple, parts",
    [
        (5, 2, (2, 2, 1), [2, 3]),
        (9, 3, (2, 3, 0), [3, 3, 3]),
        (23, 3, (2, 1, 2), [5, 9, 9]),
    ],
)
def test_decompose_examples(n, r, triple, parts):
    d = decompose(n, r)
    assert (d.p, d.s, d.b) == triple
    assert d.parts(r) == parts
    assert decomposition_solutions(n, r) == [triple]


@pytest.mark.parametrize("r", range(2, 9))
def test_decompose_identity(r):
    for n in range(r, 3000, r - 1):
        d = decompose(n, r)
        assert n == d.s * r ** (d.p - 1) + (r - d.s) * r**d.p + d.b
        assert 1 <= d.s <= r and 0 <= d.b < r**d.p - r ** (d.p - 1)
        assert sum(d.parts(r)) == n


def test_decompose_errors():
    with pytest.raises(ValueError):
        decompose(4, 3)
    with pytest.raises(ValueError):
        decompose(2, 3)
    with pytest.raises(ValueError):
        decompose(5, 1)


def test_maxprob_examples():
    assert maxprob_shape(7, 3) == parse("(*,(*,*,*),(*,*,*));", 3)
    assert sorted(root_split(maxprob_shape(16, 2))) == [8, 8]
    assert maxprob_shape(3, 3) == parse("(*,*,*);", 3)
    assert maxprob_shape(1, 4).is_leaf


def test_maxprob_large_is_cheap():
    t = maxprob_shape(10**6 + 1, 3)
    assert t.n == 10**6 + 1
    assert is_fully_symmetric(maxprob_shape(3**9, 3))


@pytest.mark.parametrize("n, pair", [(7, (4, 3)), (13, (8, 5)), (3, (1, 2))])
def test_hammersley_examples(n, pair):
    assert hammersley_split(n) == pair


def test_hammersley_matches_shape():
    for n, pair in published.BIFURCATING_ROOT_SPLITS.items():
        assert hammersley_split(n) == pair
        assert sorted(root_split(maxprob_shape(n, 2))) == sorted(pair)
    for n in range(3, 300):
        assert sorted(root_split(maxprob_shape(n, 2))) == sorted(hammersley_split(n))


def test_verify_examples():
    rep = verify_maxprob(6, 2)
    assert rep.passed and rep.argmax == (maxprob_shape(6, 2).text,)
    assert sorted(root_split(maxprob_shape(6, 2))) == [2, 4]
    rep = verify_maxprob(7, 3)
    assert rep.passed and rep.max_histories == 2 and rep.argmax == ("(*,(*,*,*),(*,*,*))",)
    rep = verify_maxprob(9, 3)
    assert rep.passed and rep.max_histories == 6
    assert rep.argmax == (fully_symmetric(3, 2).text,)
    assert rep.to_text().endswith("VERIFIED\n")


def test_verify_jobs_invariant():
    assert verify_maxprob(19, 3, jobs=1).to_text() == verify_maxprob(19, 3, jobs=3).to_text()


def test_verify_guard():
    with pytest.raises(ResourceGuardError):
        verify_maxprob(13, 3, bound=5)


def test_table_small_columns():
    table = max_tie_table(3, 13)
    assert table.ns == [3, 5, 7, 9, 11, 13]
    assert [table.cell(z, 13) for z in (3, 4, 5, 6)] == [4, 33, 68, 40]
    assert table.total(13) == 145
    assert table.cell(1, 3) == 1 and table.total(3) == 1
    assert table.maxprob_attains_all()
    assert all(table.total_maximizer_unique(n) for n in table.ns)
    lines = table.to_csv().splitlines()
    assert lines[0] == "z,n=3,n=5,n=7,n=9,n=11,n=13"
    assert lines[-1] == "total,1,1,3,13,31,145"


def test_table_n9_column_by_surjection():
    table = max_tie_table(3, 9)
    shapes = list(enumerate_shapes(3, 9))
    brute = [max(tie_permitting_by_surjection(t, z) for t in shapes) for z in range(1, 5)]
    assert table.column(9) == brute == [0, 1, 6, 6]
    assert table.total(9) == 13


def test_column_29():
    col = scan_column(3, 29)
    printed = published.R3_EVENT_TABLE[29]
    assert col.cells.get(3, 0) == 0 and col.cells[4] == 324
    assert col.cells[14] == 38_918_880
    assert [col.cells.get(z, 0) for z in range(1, 15)] == list(printed)
    # the maximum total equals the sum of the printed column
    assert col.total == sum(printed) == 2_160_961_243


def test_scan_jobs_invariant():
    a = scan_column(3, 21, jobs=1)
    b = scan_column(3, 21, jobs=4)
    assert a == b


def maps_at_height(t, z):
    """Backtracking count of strict order-preserving maps into 1..z.

    Each node's value is confined to [height, z - depth]; when z equals the
    tree height every map is onto, so this counts E(T, z) directly.
    """
    nodes = []

    def walk(v, depth, parent):
        idx = len(nodes)
        nodes.append([v.height, z - depth, parent])
        for c in v.children:
            if not c.is_leaf:
                walk(c, depth + 1, idx)

    walk(t, 0, None)
    vals = [0] * len(nodes)

    def assign(i):
        if i == len(nodes):
            return 1
        lo, hi, parent = nodes[i]
        if parent is not None:
            hi = min(hi, vals[parent] - 1)
        total = 0
        for x in range(lo, hi + 1):
            vals[i] = x
            total += assign(i + 1)
        return total

    return assign(0)


@pytest.mark.parametrize("r, k, n, count", [(3, 3, 23, 1), (3, 4, 65, 4), (4, 3, 55, 1)])
def test_nonunique_family(r, k, n, count):
    t1, t2, got_n, z = nonunique_family(r, k)
    assert (got_n, z) == (n, k)
    assert t1 != t2 and t1.n == t2.n == n
    assert t1.height == t2.height == k
    assert count_tie_permitting(t1, k) == count_tie_permitting(t2, k) == count
    assert maps_at_height(t1, k) == maps_at_height(t2, k) == count


def test_nonunique_matches_figure_three_pair():
    t1, t2, _, _ = nonunique_family(3, 3)
    rep = conjecture_check(3, 23)
    assert rep.scan.cells[3] == 1
    assert set(rep.scan.cell_maximizers[3]) == {t1.text, t2.text}


def test_conjecture_23():
    rep = conjecture_check(3, 23)
    assert rep.passed
    assert rep.scan.total_maximizers == (maxprob_shape(23, 3).text,)
    assert rep.scan.cell_maximizer_count[3] == 2
    assert "part (i): ok" in rep.to_text()


def test_conjecture_9():
    rep = conjecture_check(3, 9)
    assert rep.passed
    assert rep.maxprob_profile == {2: 1, 3: 6, 4: 6}
    assert rep.scan.total == 13


def test_conjecture_binary_8():
    rep = conjecture_check(2, 8)
    u = maxprob_shape(8, 2)
    assert rep.passed and u == fully_symmetric(2, 3)
    assert sorted(rep.scan.cells) == [3, 4, 5, 6, 7]
    brute = {z: tie_permitting_by_surjection(u, z) for z in range(3, 8)}
    assert brute == tie_permitting_profile(u) == rep.scan.cells
    assert rep.scan.cells[7] == count_histories_closed(u)
