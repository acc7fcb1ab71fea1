"""Exhaustive enumeration of classes by combinatorial length.

One row per necklace (rotation class of cyclically reduced words), with
its exact self-intersection number and the block-count bounds; on top of
that, verification sweeps for the bound theorems, length spectra, and
the near-maximal epsilon census.  All census decisions are exact integer
or rational arithmetic; floats never appear.

Enumeration order is ascending in the letter order a < A < b < B, and
the work can be partitioned by two-letter prefix: partitions are
disjoint, cover everything, and concatenate in order, which is what
makes parallel runs byte-identical to sequential ones.
"""

from __future__ import annotations

import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, Iterator

from selfint import _kernel
from selfint.errors import LengthOutOfRangeError
from selfint.words import CyclicWord, decode, encode, inverse

logger = logging.getLogger(__name__)

MAX_ENUM_LENGTH = 24
MAX_SPECTRUM_LENGTH = 14
MAX_VERIFY_LENGTH = 14
MAX_COUNT_LENGTH = 20

CSV_HEADER = ("word", "L", "n", "i", "H", "lower", "upper", "primitive", "simple")


@dataclass(frozen=True)
class CensusRow:
    """One class: its word, size data, exact count, and bounds.

    ``n`` and ``H`` describe the whole word (block count, and the corner
    count scaled by multiplicity squared); ``lower``/``upper`` are the
    block-count bounds L - n - 1 and nL - n^2, which constrain ``i``
    whenever the class is non-simple.  Powers of a single letter carry
    n = 0 and zero bounds.
    """

    word: str
    L: int
    n: int
    i: int
    H: int
    lower: int
    upper: int
    primitive: bool
    simple: bool


def _row_from_raw(raw: bytes) -> CensusRow:
    root, m, n0, H0, cf0, i, simple = _kernel.word_stats(raw)
    L = len(raw)
    n = m * n0
    if n == 0:
        lower = upper = 0
    else:
        lower = L - n - 1
        upper = n * L - n * n
    return CensusRow(
        word=decode(raw), L=L, n=n, i=i, H=m * m * H0,
        lower=lower, upper=upper, primitive=(m == 1), simple=bool(simple),
    )


def _is_simple_raw(raw: bytes) -> bool:
    # powers of one letter, and powers of the two null-count roots
    kinds = {x >> 1 for x in raw}
    if len(kinds) == 1:
        return True
    p = _kernel.smallest_period(raw)
    return raw[:p] in (b"\x00\x02", b"\x01\x03")  # ab, AB


def _keep(raw: bytes, primitive_only: bool, unoriented: bool, include_simple: bool) -> bool:
    if primitive_only and _kernel.smallest_period(raw) != len(raw):
        return False
    if not include_simple and _is_simple_raw(raw):
        return False
    if unoriented:
        rev = _kernel.canonical_rotation(bytes(x ^ 1 for x in reversed(raw)))
        if rev < raw:
            return False
    return True


def _check_length(length: int, high: int) -> None:
    if not 1 <= length <= high:
        raise LengthOutOfRangeError(length, 1, high)


def _prefixes(length: int) -> list[bytes]:
    """Two-letter work partitions, in enumeration order."""
    if length < 2:
        return [b""]
    out = []
    for f in range(4):
        for x in range(f, 4):
            if x != f ^ 1:
                out.append(bytes((f, x)))
    return out


def enumerate_classes(length: int, *, primitive_only: bool = False,
                      unoriented: bool = False,
                      include_simple: bool = True) -> Iterator[CyclicWord]:
    """Stream every class of the given length exactly once, ascending.

    Canonical representatives only.  ``unoriented`` keeps one of each
    {class, inverse class} pair; ``primitive_only`` drops proper powers;
    ``include_simple=False`` drops classes with zero self-intersection.
    """
    _check_length(length, MAX_ENUM_LENGTH)
    for raw in _kernel.necklaces(length):
        if _keep(raw, primitive_only, unoriented, include_simple):
            yield CyclicWord(decode(raw))


def _scan_partition(args: tuple[int, bytes, bool, bool, bool]) -> list[CensusRow]:
    length, prefix, primitive_only, unoriented, include_simple = args
    return [
        _row_from_raw(raw)
        for raw in _kernel.necklaces(length, prefix)
        if _keep(raw, primitive_only, unoriented, include_simple)
    ]


def census_rows(length: int, *, primitive_only: bool = False,
                unoriented: bool = False, include_simple: bool = True,
                threads: int = 1) -> list[CensusRow]:
    """All census rows for one length, in enumeration order.

    ``threads`` > 1 scans the two-letter-prefix partitions in a process
    pool; the merged output is identical to the sequential scan.
    """
    _check_length(length, MAX_ENUM_LENGTH)
    parts = _prefixes(length)
    jobs = [(length, p, primitive_only, unoriented, include_simple) for p in parts]
    if threads > 1 and len(parts) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(_scan_partition, jobs))
    else:
        chunks = [_scan_partition(j) for j in jobs]
    return [row for chunk in chunks for row in chunk]


def rows_to_csv(rows: Iterable[CensusRow], fp: IO[str]) -> None:
    """Write rows as CSV with the stable header, LF line endings."""
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow([r.word, r.L, r.n, r.i, r.H, r.lower, r.upper,
                         str(r.primitive).lower(), str(r.simple).lower()])


def row_to_dict(row: CensusRow) -> dict:
    return {
        "word": row.word, "L": row.L, "n": row.n, "i": row.i, "H": row.H,
        "lower": row.lower, "upper": row.upper,
        "primitive": row.primitive, "simple": row.simple,
    }


@dataclass(frozen=True)
class Spectrum:
    """Extremes of i over one length, with witnesses."""

    length: int
    max_i: int
    max_witness: str
    min_nonsimple: int | None
    min_witness: str | None


def spectrum(length: int, rows: list[CensusRow] | None = None) -> Spectrum:
    """Minimum non-simple and maximum self-intersection at one length."""
    _check_length(length, MAX_SPECTRUM_LENGTH)
    if length < 2:
        raise LengthOutOfRangeError(length, 2, MAX_SPECTRUM_LENGTH)
    rows = census_rows(length) if rows is None else rows
    max_row = max(rows, key=lambda r: r.i)
    nonsimple = [r for r in rows if not r.simple]
    min_row = min(nonsimple, key=lambda r: r.i) if nonsimple else None
    return Spectrum(
        length=length,
        max_i=max_row.i,
        max_witness=max_row.word,
        min_nonsimple=min_row.i if min_row else None,
        min_witness=min_row.word if min_row else None,
    )


@dataclass(frozen=True)
class Violation:
    word: str
    rule: str
    detail: str


def check_rows(rows: Iterable[CensusRow]) -> list[Violation]:
    """All bound violations in the given rows (expected none).

    Non-simple classes must satisfy the block-count bounds, the parity
    bounds, and 2*sqrt(i) <= L <= 2i + 2; primitive classes with blocks
    must satisfy the corner-count band n-1 <= H <= n^2 + (n-1)^2, with
    the tighter bands for {a,B}-only and {a,b}-only words.
    """
    out: list[Violation] = []

    def bad(word: str, rule: str, detail: str) -> None:
        out.append(Violation(word=word, rule=rule, detail=detail))

    for r in rows:
        if not r.simple:
            if not r.lower <= r.i <= r.upper:
                bad(r.word, "block-bounds", f"i={r.i} outside [{r.lower}, {r.upper}]")
            if r.L % 2 == 0:
                p_lo, p_hi = r.L // 2 - 1, r.L * r.L // 4
            else:
                p_lo, p_hi = (r.L - 1) // 2, (r.L * r.L - 1) // 4
            if not p_lo <= r.i <= p_hi:
                bad(r.word, "parity-bounds", f"i={r.i} outside [{p_lo}, {p_hi}]")
            if 4 * r.i > r.L * r.L or r.L > 2 * r.i + 2:
                bad(r.word, "length-window", f"L={r.L} outside [2*sqrt({r.i}), {2 * r.i + 2}]")
        if r.primitive and r.n >= 1:
            lo, hi = r.n - 1, r.n * r.n + (r.n - 1) ** 2
            letters = set(r.word)
            if letters <= {"a", "B"}:
                lo = r.n * r.n + r.n - 1
            elif letters <= {"a", "b"}:
                hi = (r.n - 1) ** 2
            if not lo <= r.H <= hi:
                bad(r.word, "corner-band", f"H={r.H} outside [{lo}, {hi}]")
    return out


def verify_bounds(max_length: int, *, rows_by_length: dict[int, list[CensusRow]] | None = None,
                  threads: int = 1) -> list[Violation]:
    """Scan every class up to ``max_length`` and report bound violations."""
    _check_length(max_length, MAX_VERIFY_LENGTH)
    out: list[Violation] = []
    for L in range(1, max_length + 1):
        rows = rows_by_length[L] if rows_by_length else census_rows(L, threads=threads)
        out.extend(check_rows(rows))
    return out


def in_class_a(i: int, length: int, epsilon: Fraction) -> bool:
    """Exact test i >= (1/4 - epsilon) * L^2."""
    return 4 * epsilon.denominator * i >= \
        (epsilon.denominator - 4 * epsilon.numerator) * length * length


def in_class_b(length: int, blocks: int, epsilon: Fraction) -> bool:
    """Exact test L - 2n <= 2*sqrt(epsilon)*L, compared in squares."""
    t = length - 2 * blocks
    if t <= 0:
        return True
    return epsilon.denominator * t * t <= 4 * epsilon.numerator * length * length


@dataclass(frozen=True)
class EpsilonReport:
    """Counts of nearly-maximal classes at one length.

    ``count_a`` counts i >= (1/4 - epsilon) L^2, ``count_b`` the
    block-count relaxation L - 2n <= 2 sqrt(epsilon) L that contains it.
    ``paper_total`` is the closed-form class count 8 * 3^(L-2) / L,
    reported alongside the enumerated total without being asserted (it
    does not match at small L and need not be an integer).
    """

    length: int
    epsilon: Fraction
    count_a: int
    count_b: int
    total: int
    paper_total: Fraction

    def to_dict(self) -> dict:
        return {
            "L": self.length,
            "epsilon": str(self.epsilon),
            "count_A": self.count_a,
            "count_B": self.count_b,
            "total": self.total,
            "closed_form_total": str(self.paper_total),
        }


def closed_form_total(length: int) -> Fraction:
    """The closed-form class count 8 * 3^(L-2) / L, as an exact rational."""
    return Fraction(8 * 3 ** (length - 2), length) if length >= 2 \
        else Fraction(8, 3 ** (2 - length) * length)


def epsilon_census(length: int, epsilon: Fraction,
                   rows: list[CensusRow] | None = None) -> EpsilonReport:
    """Exact epsilon census at one length (0 < epsilon < 1/4)."""
    _check_length(length, MAX_VERIFY_LENGTH)
    if not 0 < epsilon < Fraction(1, 4):
        raise ValueError(f"epsilon must be in (0, 1/4), got {epsilon}")
    rows = census_rows(length) if rows is None else rows
    count_a = sum(1 for r in rows if in_class_a(r.i, r.L, epsilon))
    count_b = sum(1 for r in rows if in_class_b(r.L, r.n, epsilon))
    return EpsilonReport(
        length=length, epsilon=epsilon, count_a=count_a, count_b=count_b,
        total=len(rows), paper_total=closed_form_total(length),
    )


def epsilon_trend(lengths: Iterable[int], epsilon: Fraction,
                  rows_by_length: dict[int, list[CensusRow]] | None = None) -> list[Fraction]:
    """Diagnostic ratios #A/total over the given lengths, logged.

    The asymptotic statement (the ratio tends to 0) is not checkable at
    desk scale; this reports the finite trend.
    """
    ratios = []
    for L in lengths:
        rows = rows_by_length[L] if rows_by_length else census_rows(L)
        rep = epsilon_census(L, epsilon, rows)
        ratio = Fraction(rep.count_a, rep.total)
        logger.info("epsilon trend: L=%d eps=%s #A=%d total=%d ratio=%s (~%.6f)",
                    L, epsilon, rep.count_a, rep.total, ratio, float(ratio))
        ratios.append(ratio)
    return ratios


@dataclass(frozen=True)
class ClassCounts:
    length: int
    all_classes: int
    primitive: int
    simple: int
    paper_formula: Fraction

    def to_dict(self) -> dict:
        return {
            "L": self.length,
            "all": self.all_classes,
            "primitive": self.primitive,
            "simple": self.simple,
            "closed_form": str(self.paper_formula),
        }


def class_counts(length: int, rows: list[CensusRow] | None = None) -> ClassCounts:
    """Enumerated class counts next to the closed-form count.

    The two are emitted side by side and never asserted equal.
    """
    _check_length(length, MAX_COUNT_LENGTH)
    rows = census_rows(length) if rows is None else rows
    return ClassCounts(
        length=length,
        all_classes=len(rows),
        primitive=sum(1 for r in rows if r.primitive),
        simple=sum(1 for r in rows if r.simple),
        paper_formula=closed_form_total(length),
    )
