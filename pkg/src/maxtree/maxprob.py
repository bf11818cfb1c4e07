"""
The maximally probable r-furcating shape and exhaustive checks around it.

``maxprob_shape(n, r)`` builds ``U*_n`` from the unique ``(p, s, b)``
decomposition ``n = s r^(p-1) + (r-s) r^p + b``.  The verification helpers
enumerate every shape with n leaves and compare.  Work can be spread over
processes; partial results are merged by a deterministic reduction, so
reports never depend on ``jobs``.
"""
from __future__ import annotations

import io
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .enumeration import count_shapes, enumerate_partition
from .histories import (
    count_histories_closed,
    count_histories_recursive,
    count_tie_permitting,
    tie_permitting_profile,
)
from .huffman import floor_log, huffman_tree, weight_sequence
from .majorization import log_objective, weakly_supermajorizes
from .shape import TreeShape, compose, leaf

DEFAULT_SHAPE_BOUND = 2_000_000
DEFAULT_KEEP = 16


class ResourceGuardError(RuntimeError):
    """An exhaustive sweep would exceed the configured shape bound."""


@dataclass(frozen=True)
class Decomposition:
    p: int
    s: int
    b: int

    def parts(self, r: int) -> list[int]:
        """Root subtree sizes: (s-1) x r^(p-1), r^(p-1)+b, (r-s) x r^p."""
        small = r ** (self.p - 1)
        return [small] * (self.s - 1) + [small + self.b] + [small * r] * (r - self.s)


def _check(n: int, r: int) -> None:
    if not isinstance(r, int) or r < 2:
        raise ValueError(f"arity must be an integer >= 2, got {r!r}")
    if not isinstance(n, int) or n < 1 or (n - 1) % (r - 1):
        raise ValueError(f"invalid leaf count n={n} for r={r}")


def decompose(n: int, r: int) -> Decomposition:
    """Unique ``(p, s, b)`` with ``1 <= s <= r`` and ``0 <= b < r^p - r^(p-1)``.

    ``p = floor(log_r n)``; ``s`` is the ceiling of
    ``(r^(p+1) - n) / (r^p - r^(p-1))``, which keeps ``b`` in range even
    when the division is inexact.
    """
    _check(n, r)
    if n < r:
        raise ValueError(f"n={n} is smaller than r={r}")
    p = floor_log(n, r)
    unit = r**p - r ** (p - 1)
    deficit = r ** (p + 1) - n
    s = -(-deficit // unit)
    b = n - (s * r ** (p - 1) + (r - s) * r**p)
    if not (1 <= s <= r and 0 <= b < unit and b % (r - 1) == 0):
        raise AssertionError(f"decomposition out of range for n={n}, r={r}: {(p, s, b)}")
    return Decomposition(p, s, b)


@lru_cache(maxsize=None)
def maxprob_shape(n: int, r: int) -> TreeShape:
    """``U*_n``: the shape maximizing the number of labeled histories."""
    _check(n, r)
    if n == 1:
        return leaf(r)
    d = decompose(n, r)
    return compose([maxprob_shape(m, r) for m in d.parts(r)])


def root_split(t: TreeShape) -> tuple[int, ...]:
    return tuple(c.leaf_count for c in t.children)


def hammersley_split(n: int) -> tuple[int, int]:
    """Bifurcating root split ``(t, n - t)``, ``t = 2^(floor(log2((n-1)/3)) + 1)``."""
    if n < 3:
        raise ValueError("hammersley_split needs n >= 3")
    # largest e with 2^e <= (n-1)/3; (n-1)/3 >= 2/3 so e >= -1
    e = -1
    while 3 * 2 ** (e + 1) <= n - 1:
        e += 1
    t = 2 ** (e + 1)
    return t, n - t


def _guard(r: int, n: int, bound: int | None) -> int:
    total = count_shapes(r, n)
    limit = DEFAULT_SHAPE_BOUND if bound is None else bound
    if total > limit:
        raise ResourceGuardError(f"{total} shapes for r={r}, n={n} exceeds bound {limit}")
    return total


def _run_parts(fn, r: int, n: int, jobs: int, *extra):
    jobs = max(1, jobs)
    if jobs == 1:
        return [fn(r, n, 0, 1, *extra)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, r, n, i, jobs, *extra) for i in range(jobs)]
        return [f.result() for f in futures]


def _merge_best(parts, better, keep):
    """Reduce ``(value, count, texts)`` partials; ``better(a, b)`` means a beats b."""
    best = None
    count = 0
    texts: list[str] = []
    for value, cnt, tx in parts:
        if cnt == 0:
            continue
        if best is None or better(value, best):
            best, count, texts = value, cnt, list(tx)
        elif value == best:
            count += cnt
            texts = sorted(set(texts) | set(tx))
    if keep is not None:
        texts = texts[:keep]
    return best, count, tuple(texts)


class _Best:
    """Running extremum with its (capped, text-sorted) set of attainers."""

    def __init__(self, maximize: bool, keep: int | None):
        self.maximize = maximize
        self.keep = keep
        self.value = None
        self.count = 0
        self.texts: list[str] = []

    def offer(self, value, text: str) -> None:
        if self.value is None or (value > self.value if self.maximize else value < self.value):
            self.value, self.count, self.texts = value, 1, [text]
        elif value == self.value:
            self.count += 1
            if self.keep is None or len(self.texts) < self.keep:
                self.texts.append(text)

    def partial(self):
        # shapes arrive in text order, so the retained prefix is the smallest texts
        return self.value, self.count, tuple(self.texts)


def _spot_check(text: str) -> bool:
    return zlib.crc32(text.encode()) % 100 == 0


def _verify_part(r: int, n: int, part: int, parts: int):
    target = maxprob_shape(n, r)
    target_seq = weight_sequence(target)
    best_n = _Best(True, None)
    best_p = _Best(False, None)
    violations: list[str] = []
    spot = 0
    spot_bad: list[str] = []
    seen = 0
    for t in enumerate_partition(r, n, part, parts):
        seen += 1
        val = count_histories_closed(t)
        best_n.offer(val, t.text)
        best_p.offer(log_objective(t)[0], t.text)
        if not weakly_supermajorizes(target_seq, weight_sequence(t)):
            violations.append(t.text)
        if _spot_check(t.text) or t == target:
            spot += 1
            if count_histories_recursive(t) != val:
                spot_bad.append(t.text)
    return seen, best_n.partial(), best_p.partial(), violations, spot, spot_bad


@dataclass
class VerifyReport:
    r: int
    n: int
    shape_count: int
    max_histories: int
    argmax: tuple[str, ...]
    min_product: int
    argmin_product: tuple[str, ...]
    maxprob: str
    huffman: str
    supermajorization_violations: tuple[str, ...]
    spot_checks: int
    spot_check_failures: tuple[str, ...]

    @property
    def unique(self) -> bool:
        return len(self.argmax) == 1

    @property
    def matches_maxprob(self) -> bool:
        return self.argmax == (self.maxprob,)

    @property
    def matches_huffman(self) -> bool:
        return self.argmax == (self.huffman,)

    @property
    def sets_agree(self) -> bool:
        return self.argmax == self.argmin_product

    @property
    def supermajorization_ok(self) -> bool:
        return not self.supermajorization_violations

    @property
    def passed(self) -> bool:
        return (
            self.unique
            and self.matches_maxprob
            and self.matches_huffman
            and self.sets_agree
            and self.supermajorization_ok
            and not self.spot_check_failures
        )

    def to_text(self) -> str:
        def flag(ok):
            return "ok" if ok else "FAIL"

        lines = [
            f"r={self.r} n={self.n} shapes={self.shape_count}",
            f"max N = {self.max_histories}",
            "argmax N: " + " ".join(s + ";" for s in self.argmax),
            "argmin prod(m(v)-1): " + " ".join(s + ";" for s in self.argmin_product),
            f"maxprob shape: {self.maxprob};",
            f"unique argmax: {flag(self.unique)}",
            f"argmax equals maxprob shape: {flag(self.matches_maxprob)}",
            f"argmax equals uniform Huffman shape: {flag(self.matches_huffman)}",
            f"argmax N equals argmin product: {flag(self.sets_agree)}",
            f"weight sequences dominated by maxprob: {flag(self.supermajorization_ok)}"
            + (f" ({len(self.supermajorization_violations)} violations)" if self.supermajorization_violations else ""),
            f"recursive/closed spot checks: {self.spot_checks} {flag(not self.spot_check_failures)}",
            "VERIFIED" if self.passed else "FAILED",
        ]
        return "\n".join(lines) + "\n"


def verify_maxprob(n: int, r: int, jobs: int = 1, bound: int | None = None) -> VerifyReport:
    """Exhaustively confirm that ``U*_n`` is the unique maximizer of N(T)."""
    _check(n, r)
    _guard(r, n, bound)
    results = _run_parts(_verify_part, r, n, jobs)
    seen = sum(res[0] for res in results)
    max_n, _, argmax = _merge_best([res[1] for res in results], lambda a, b: a > b, None)
    min_p, _, argmin = _merge_best([res[2] for res in results], lambda a, b: a < b, None)
    violations = tuple(sorted(v for res in results for v in res[3]))
    spot = sum(res[4] for res in results)
    spot_bad = tuple(sorted(v for res in results for v in res[5]))
    return VerifyReport(
        r=r,
        n=n,
        shape_count=seen,
        max_histories=max_n,
        argmax=argmax,
        min_product=min_p,
        argmin_product=argmin,
        maxprob=maxprob_shape(n, r).text,
        huffman=huffman_tree([1] * n, r)[0].text,
        supermajorization_violations=violations,
        spot_checks=spot,
        spot_check_failures=spot_bad,
    )


def _scan_part(r: int, n: int, part: int, parts: int, keep):
    cells: dict[int, _Best] = {}
    total = _Best(True, keep)
    for t in enumerate_partition(r, n, part, parts):
        prof = tie_permitting_profile(t)
        for z, e in prof.items():
            if e:
                cells.setdefault(z, _Best(True, keep)).offer(e, t.text)
        total.offer(sum(prof.values()), t.text)
    return {z: b.partial() for z, b in cells.items()}, total.partial()


@dataclass
class ColumnScan:
    """Per-z maxima of E(T, z) over all shapes with n leaves."""

    r: int
    n: int
    cells: dict[int, int]
    cell_maximizers: dict[int, tuple[str, ...]]
    cell_maximizer_count: dict[int, int]
    total: int
    total_maximizers: tuple[str, ...]
    total_maximizer_count: int


def scan_column(r: int, n: int, jobs: int = 1, keep: int | None = DEFAULT_KEEP, bound: int | None = None) -> ColumnScan:
    _check(n, r)
    _guard(r, n, bound)
    results = _run_parts(_scan_part, r, n, jobs, keep)
    zs = sorted({z for cells, _ in results for z in cells})
    cells, maxers, counts = {}, {}, {}
    for z in zs:
        val, cnt, tx = _merge_best([c[z] for c, _ in results if z in c], lambda a, b: a > b, keep)
        cells[z], counts[z], maxers[z] = val, cnt, tx
    tot, tcnt, ttx = _merge_best([t for _, t in results], lambda a, b: a > b, keep)
    return ColumnScan(r, n, cells, maxers, counts, tot, ttx, tcnt)


@dataclass
class EventTable:
    """Maximal tie-permitting counts per (z, n), with a Total row."""

    r: int
    ns: list[int]
    columns: dict[int, ColumnScan] = field(default_factory=dict)

    @property
    def z_values(self) -> list[int]:
        top = max((n - 1) // (self.r - 1) for n in self.ns)
        return list(range(1, top + 1))

    def cell(self, z: int, n: int) -> int:
        return self.columns[n].cells.get(z, 0)

    def total(self, n: int) -> int:
        return self.columns[n].total

    def column(self, n: int) -> list[int]:
        return [self.cell(z, n) for z in self.z_values]

    def maxprob_attains(self, z: int, n: int) -> bool:
        return count_tie_permitting(maxprob_shape(n, self.r), z) == self.cell(z, n)

    def maxprob_attains_all(self) -> bool:
        return all(self.maxprob_attains(z, n) for n in self.ns for z in self.z_values)

    def total_maximizer_unique(self, n: int) -> bool:
        return self.columns[n].total_maximizer_count == 1

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(",".join(["z"] + [f"n={n}" for n in self.ns]) + "\n")
        for z in self.z_values:
            buf.write(",".join([str(z)] + [str(self.cell(z, n)) for n in self.ns]) + "\n")
        buf.write(",".join(["total"] + [str(self.total(n)) for n in self.ns]) + "\n")
        return buf.getvalue()


def max_tie_table(r: int, n_max: int, jobs: int = 1, keep: int | None = DEFAULT_KEEP, bound: int | None = None) -> EventTable:
    """Max over shapes of E(T, z) for n = r, 2r-1, ..., n_max."""
    if r < 2:
        raise ValueError("r must be >= 2")
    if n_max < r:
        raise ValueError(f"n_max={n_max} is smaller than r={r}")
    ns = list(range(r, n_max + 1, r - 1))
    table = EventTable(r, ns)
    for n in ns:
        table.columns[n] = scan_column(r, n, jobs=jobs, keep=keep, bound=bound)
    return table


def nonunique_family(r: int, k: int) -> tuple[TreeShape, TreeShape, int, int]:
    """Two distinct shapes with equal tie-permitting counts at ``z = k``.

    ``n = (r-1) r^(k-1) + r^(k-2) + (r-1)``.  The first shape has root
    subtrees of sizes ``r^(k-1)`` (r-1 times) and ``r^(k-2) + (r-1)``; the
    second ``r^(k-1)`` (r-2 times), ``r^(k-1) - (r-1)`` and
    ``r^(k-2) + 2(r-1)``.  Every subtree is the maxprob shape of its size.

    Both counts are 1 when k = 3.  For larger k the small subtree has
    internal nodes off the longest root path, so the shared count exceeds 1
    (4 for r=3, k=4); only the equality is asserted.
    """
    if r < 3 or k < 3:
        raise ValueError("nonunique_family needs r >= 3 and k >= 3")
    big, small = r ** (k - 1), r ** (k - 2)
    n = (r - 1) * big + small + (r - 1)
    sizes1 = [big] * (r - 1) + [small + (r - 1)]
    sizes2 = [big] * (r - 2) + [big - (r - 1), small + 2 * (r - 1)]
    t1 = compose([maxprob_shape(m, r) for m in sizes1])
    t2 = compose([maxprob_shape(m, r) for m in sizes2])
    assert t1.n == t2.n == n
    assert t1 != t2
    assert count_tie_permitting(t1, k) == count_tie_permitting(t2, k) >= 1
    return t1, t2, n, k


@dataclass
class ConjectureReport:
    r: int
    n: int
    scan: ColumnScan
    maxprob: str
    maxprob_profile: dict[int, int]

    @property
    def part_i(self) -> bool:
        """The total-count maximizer is unique and equals the maxprob shape."""
        return self.scan.total_maximizers == (self.maxprob,)

    @property
    def part_ii(self) -> bool:
        """The maxprob shape attains the maximum at every z."""
        return all(self.maxprob_profile.get(z, 0) == v for z, v in self.scan.cells.items())

    @property
    def passed(self) -> bool:
        return self.part_i and self.part_ii

    def to_text(self) -> str:
        out = [f"r={self.r} n={self.n} maxprob={self.maxprob};"]
        for z in sorted(self.scan.cells):
            mine = self.maxprob_profile.get(z, 0)
            mark = "ok" if mine == self.scan.cells[z] else "FAIL"
            out.append(
                f"z={z} max={self.scan.cells[z]} maxprob={mine} {mark} "
                f"maximizers({self.scan.cell_maximizer_count[z]}): "
                + " ".join(s + ";" for s in self.scan.cell_maximizers[z])
            )
        out.append(
            f"total max={self.scan.total} maximizers({self.scan.total_maximizer_count}): "
            + " ".join(s + ";" for s in self.scan.total_maximizers)
        )
        out.append(f"part (i): {'ok' if self.part_i else 'FAIL'}")
        out.append(f"part (ii): {'ok' if self.part_ii else 'FAIL'}")
        return "\n".join(out) + "\n"


def conjecture_check(r: int, n: int, jobs: int = 1, bound: int | None = None) -> ConjectureReport:
    """Compare U*_n against every shape on totals and on each event count z."""
    scan = scan_column(r, n, jobs=jobs, keep=None, bound=bound)
    u = maxprob_shape(n, r)
    return ConjectureReport(r, n, scan, u.text, tie_permitting_profile(u))
