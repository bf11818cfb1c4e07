"""
Desk-scale acceptance checks.

Each ``criterion_*`` function runs one exit criterion with exact integer
comparison and returns a :class:`CriterionResult`.  ``maxtree selftest``
and ``tests/test_acceptance.py`` both drive these.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import published
from .bruteforce import histories_by_bijection, tie_permitting_by_surjection
from .enumeration import enumerate_shapes
from .histories import count_histories_closed, count_histories_recursive, count_tie_permitting
from .huffman import (
    huffman_all_shapes,
    huffman_all_trees,
    huffman_tree,
    is_normal,
    is_power,
    r_merge,
)
from .maxprob import conjecture_check, decompose, hammersley_split, max_tie_table, maxprob_shape, verify_maxprob
from .shape import is_fully_symmetric


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"[{status}] criterion {self.number}: {self.title}"
        return out + (f" -- {self.detail}" if self.detail else "")


# (r, n) pairs swept exhaustively for the theorem check
THEOREM_RANGES = {2: 16, 3: 25, 4: 22}


def theorem_cases() -> list[tuple[int, int]]:
    return [(r, n) for r, top in THEOREM_RANGES.items() for n in range(r, top + 1, r - 1)]


@lru_cache(maxsize=None)
def _verify(r: int, n: int, jobs: int = 1):
    return verify_maxprob(n, r, jobs=jobs)


def criterion_1(n_max: int = 29, jobs: int = 1) -> CriterionResult:
    """Regenerated r=3 event table equals the printed one cell for cell."""
    table = max_tie_table(3, n_max, jobs=jobs)
    bad = []
    for n in table.ns:
        want = published.R3_EVENT_TABLE[n]
        got = [table.cell(z, n) for z in range(1, 15)]
        for z, (g, w) in enumerate(zip(got, want), start=1):
            if g != w:
                bad.append(f"(n={n},z={z}) got {g} printed {w}")
        if table.total(n) != published.R3_EVENT_TOTALS[n]:
            bad.append(f"(n={n},total) got {table.total(n)} printed {published.R3_EVENT_TOTALS[n]}")
    cells = len(table.ns) * 15
    detail = f"{cells - len(bad)}/{cells} cells match (n <= {n_max})"
    if bad:
        detail += "; mismatches: " + "; ".join(bad)
    return CriterionResult(1, "event table reproduction", not bad, detail)


def criterion_2(jobs: int = 1) -> CriterionResult:
    failed = [f"r={r},n={n}" for r, n in theorem_cases() if not _verify(r, n, jobs).passed]
    total = len(theorem_cases())
    detail = f"{total - len(failed)}/{total} (r,n) cases verified"
    if failed:
        detail += "; failed: " + ", ".join(failed)
    return CriterionResult(2, "exhaustive theorem verification", not failed, detail)


def criterion_3() -> CriterionResult:
    bad = []
    for n, pair in published.BIFURCATING_ROOT_SPLITS.items():
        split = sorted(c.leaf_count for c in maxprob_shape(n, 2).children)
        if split != sorted(pair) or hammersley_split(n) != pair:
            bad.append(f"n={n}: shape {split}, formula {hammersley_split(n)}, printed {pair}")
    return CriterionResult(3, "bifurcating root splits n=3..16", not bad, "; ".join(bad))


def criterion_4() -> CriterionResult:
    bad = []
    _, seq = huffman_tree((5, 6, 7, 8), 2)
    if seq != (11, 15, 26):
        bad.append(f"binary Huffman weight sequence {seq}")
    trees = huffman_all_trees((1, 1, 1, 1, 1, 3, 4), 3)
    shapes = {t for t, _ in trees}
    if len(shapes) != 2 or {s for _, s in trees} != {(3, 5, 12)}:
        bad.append(f"ternary tie exploration gave {sorted((t.text, s) for t, s in trees)}")
    rep = conjecture_check(3, 23)
    if rep.scan.cell_maximizer_count.get(3) != 2 or rep.scan.cells.get(3) != 1:
        bad.append(f"(23,3) maximizers {rep.scan.cell_maximizer_count.get(3)} value {rep.scan.cells.get(3)}")
    return CriterionResult(4, "Huffman and tie examples", not bad, "; ".join(bad))


def criterion_5(bijection_w: int = 7, surjection_w: int = 6) -> CriterionResult:
    bad = []
    checked = {"closed": 0, "bijection": 0, "surjection": 0}
    for r, n in theorem_cases():
        for t in enumerate_shapes(r, n):
            nc = count_histories_closed(t)
            checked["closed"] += 1
            if nc != count_histories_recursive(t):
                bad.append(f"closed/recursive {t}")
            if count_tie_permitting(t, t.w) != nc:
                bad.append(f"E(T,w) != N(T) for {t}")
            if t.w <= bijection_w:
                checked["bijection"] += 1
                if histories_by_bijection(t) != nc:
                    bad.append(f"bijection {t}")
            if t.w <= surjection_w:
                checked["surjection"] += 1
                for z in range(0, t.w + 2):
                    if tie_permitting_by_surjection(t, z) != count_tie_permitting(t, z):
                        bad.append(f"surjection {t} z={z}")
    detail = ", ".join(f"{k}={v}" for k, v in checked.items())
    if bad:
        detail += "; failures: " + "; ".join(bad[:20])
    return CriterionResult(5, "formula cross-oracles", not bad, detail)


def merge_chain_problems(r: int, n: int) -> list[str]:
    """Problems found along the merge chain of the all-ones sequence of length n."""
    out = []
    seq = (1,) * n
    while True:
        if not is_normal(seq, r).is_normal:
            out.append(f"not normal: {seq}")
        if len(seq) < r:
            break
        head = seq[:r]
        if sum(is_power(x, r) for x in head) < r - 1:
            out.append(f"fewer than r-1 powers in head of {seq}")
        if head[0] * r < head[-1]:
            out.append(f"head ratio below 1/r in {seq}")
        nxt = r_merge(seq, r)
        created = sum(head)
        if is_power(created, r) and created > 1 and any(x * r != created for x in head):
            out.append(f"power {created} built from {head}")
        if sum(nxt) != sum(seq) or len(nxt) != len(seq) - (r - 1):
            out.append(f"sum/length not preserved at {seq}")
        seq = nxt
    return out


def criterion_6(n_max: int = 200, unique_n_max: int = 40) -> CriterionResult:
    bad = []
    for r in (2, 3, 4, 5):
        for n in range(1, n_max + 1, r - 1):
            bad.extend(f"r={r},n={n}: {p}" for p in merge_chain_problems(r, n))
        k = 1
        while r**k <= n_max:
            if not is_fully_symmetric(huffman_tree([1] * r**k, r)[0]):
                bad.append(f"r={r},n={r**k}: Huffman shape not fully symmetric")
            k += 1
    for r in (2, 3, 4):
        for n in range(1, unique_n_max + 1, r - 1):
            shapes = huffman_all_shapes([1] * n, r)
            if shapes != {huffman_tree([1] * n, r)[0]}:
                bad.append(f"r={r},n={n}: {len(shapes)} uniform Huffman shapes")
    return CriterionResult(6, "merge/normality/Huffman properties", not bad, "; ".join(bad[:20]))


def criterion_7(jobs: int = 1) -> CriterionResult:
    bad = []
    for r, n in theorem_cases():
        rep = _verify(r, n, jobs)
        if not rep.supermajorization_ok:
            bad.append(f"r={r},n={n}: {len(rep.supermajorization_violations)} domination failures")
        if not rep.sets_agree:
            bad.append(f"r={r},n={n}: argmax N != argmin product")
    return CriterionResult(7, "majorization certificate", not bad, "; ".join(bad))


def decomposition_solutions(n: int, r: int) -> list[tuple[int, int, int]]:
    """Brute-force all in-range (p, s, b) with n = s r^(p-1) + (r-s) r^p + b."""
    sols = []
    p = 1
    while r ** (p - 1) <= n:
        unit = r**p - r ** (p - 1)
        for s in range(1, r + 1):
            b = n - (s * r ** (p - 1) + (r - s) * r**p)
            if 0 <= b < unit:
                sols.append((p, s, b))
        p += 1
    return sols


def criterion_8(n_max: int = 10**4, r_max: int = 8) -> CriterionResult:
    bad = []
    cases = 0
    for r in range(2, r_max + 1):
        for n in range(r, n_max + 1, r - 1):
            cases += 1
            d = decompose(n, r)
            sols = decomposition_solutions(n, r)
            if sols != [(d.p, d.s, d.b)]:
                bad.append(f"r={r},n={n}: {sols} vs {d}")
    d = decompose(23, 3)
    if (d.p, d.s, d.b) != (2, 1, 2):
        bad.append(f"(r=3,n=23) gave {d}")
    detail = f"{cases} cases"
    if bad:
        detail += "; " + "; ".join(bad[:20])
    return CriterionResult(8, "unique decomposition", not bad, detail)


def run_all(quick: bool = False, jobs: int = 1) -> list[CriterionResult]:
    """Run every criterion; ``quick`` limits the table to n <= 21."""
    return [
        criterion_1(n_max=21 if quick else 29, jobs=jobs),
        criterion_2(jobs=jobs),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(jobs=jobs),
        criterion_8(),
    ]
