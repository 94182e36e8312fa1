"""Exact 2D aperiodic correlation of binary matrices.

The aperiodic autocorrelation of an M x N binary matrix R at shift
(t1, t2) is

    A(t1, t2) = sum_{i,j} R[i,j] * R[i+t1, j+t2]

with out-of-range entries treated as 0.  The full table of shifts is an
inversion-symmetric (2M-1) x (2N-1) integer matrix with A(0,0) = l, the
number of 1s (the peak).  The largest off-center value s is the nearest
sidelobe, and d1 = l - s is the peak-sidelobe distance.  A profile
{d1 | n1, n2, ...} records d1 together with the histogram n_i of how
often each distance value d1, d1+1, ..., l occurs among the off-center
table cells.

All arithmetic is exact integer arithmetic (no FFT).  The optimized path
packs matrix rows into machine words and uses shifted AND / popcount;
`naive_autocorrelation` is the permanent brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


class ParseError(ValueError):
    """Malformed matrix text; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class BinaryMatrix:
    """Immutable M x N matrix over {0,1}; row i is packed into bits[i] with bit j = cell (i, j)."""

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.bits) != self.rows:
            raise ValueError("row count does not match dimensions")
        limit = 1 << self.cols
        if any(not 0 <= r < limit for r in self.bits):
            raise ValueError("row bits exceed column count")

    @classmethod
    def from_rows(cls, rows) -> "BinaryMatrix":
        cells = [list(r) for r in rows]
        if not cells or not cells[0]:
            raise ValueError("matrix dimensions must be positive")
        n = len(cells[0])
        packed = []
        for r in cells:
            if len(r) != n:
                raise ValueError("ragged rows")
            if any(c not in (0, 1) for c in r):
                raise ValueError("cells must be 0 or 1")
            packed.append(sum(c << j for j, c in enumerate(r)))
        return cls(len(cells), n, tuple(packed))

    @classmethod
    def from_strings(cls, lines) -> "BinaryMatrix":
        return cls.from_rows([[int(c) for c in line] for line in lines])

    def cell(self, i: int, j: int) -> int:
        return (self.bits[i] >> j) & 1

    def row_list(self) -> list[list[int]]:
        return [[self.cell(i, j) for j in range(self.cols)] for i in range(self.rows)]

    @cached_property
    def ones(self) -> int:
        """Number of 1s (the autocorrelation peak l)."""
        return sum(r.bit_count() for r in self.bits)

    def to_text(self) -> str:
        """Serialize as 'M N' then M rows of N characters from {0,1}."""
        body = "\n".join(
            "".join(str(self.cell(i, j)) for j in range(self.cols))
            for i in range(self.rows)
        )
        return f"{self.rows} {self.cols}\n{body}\n"

    @classmethod
    def from_text(cls, text: str) -> "BinaryMatrix":
        lines = text.splitlines()
        if not lines:
            raise ParseError(1, "empty input")
        head = lines[0].split()
        if len(head) != 2:
            raise ParseError(1, "expected header 'M N'")
        try:
            m, n = int(head[0]), int(head[1])
        except ValueError:
            raise ParseError(1, "expected integer dimensions") from None
        if m < 1 or n < 1:
            raise ParseError(1, "dimensions must be positive")
        if len(lines) < 1 + m:
            raise ParseError(len(lines) + 1, f"expected {m} matrix rows")
        packed = []
        for i in range(m):
            line = lines[1 + i].strip()
            if len(line) != n:
                raise ParseError(2 + i, f"expected {n} characters, got {len(line)}")
            if set(line) - {"0", "1"}:
                raise ParseError(2 + i, "characters must be 0 or 1")
            packed.append(sum((c == "1") << j for j, c in enumerate(line)))
        return cls(m, n, tuple(packed))

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix.from_rows(
            [[self.cell(i, j) for i in range(self.rows)] for j in range(self.cols)]
        )


def autocorrelation(R: BinaryMatrix, t1: int, t2: int) -> int:
    """A(t1, t2) by shifted AND / popcount; any integer shifts are legal."""
    total = 0
    for i in range(R.rows):
        i2 = i + t1
        if 0 <= i2 < R.rows:
            a, b = R.bits[i], R.bits[i2]
            total += (a & (b >> t2)).bit_count() if t2 >= 0 else (a & (b << -t2)).bit_count()
    return total


def naive_autocorrelation(R: BinaryMatrix, t1: int, t2: int) -> int:
    """Brute-force double loop over cells; the permanent test oracle."""
    total = 0
    for i in range(R.rows):
        for j in range(R.cols):
            i2, j2 = i + t1, j + t2
            if R.cell(i, j) and 0 <= i2 < R.rows and 0 <= j2 < R.cols:
                total += R.cell(i2, j2)
    return total


def crosscorrelation(R: BinaryMatrix, R2: BinaryMatrix, t1: int, t2: int) -> int:
    """sum_{i,j} R[i,j] * R2[i+t1, j+t2], zero-padded; equals autocorrelation when R2 is R."""
    total = 0
    for i in range(R.rows):
        i2 = i + t1
        if 0 <= i2 < R2.rows:
            a, b = R.bits[i], R2.bits[i2]
            total += (a & (b >> t2)).bit_count() if t2 >= 0 else (a & (b << -t2)).bit_count()
    return total


@dataclass(frozen=True)
class AutocorrelationTable:
    """(2M-1) x (2N-1) table of A(t1, t2), t1 in [-(M-1), M-1], t2 in [-(N-1), N-1]."""

    rows: int
    cols: int
    values: tuple[tuple[int, ...], ...]

    def value(self, t1: int, t2: int) -> int:
        return self.values[t1 + self.rows - 1][t2 + self.cols - 1]

    def shifts(self):
        for t1 in range(-(self.rows - 1), self.rows):
            for t2 in range(-(self.cols - 1), self.cols):
                yield t1, t2


def autocorrelation_table(R: BinaryMatrix) -> AutocorrelationTable:
    """Full shift table; computes the half-plane and mirrors A(t) = A(-t)."""
    m, n = R.rows, R.cols
    vals = [[0] * (2 * n - 1) for _ in range(2 * m - 1)]
    for t1 in range(m):
        t2_start = 1 if t1 == 0 else -(n - 1)
        for t2 in range(t2_start, n):
            a = autocorrelation(R, t1, t2)
            vals[t1 + m - 1][t2 + n - 1] = a
            vals[m - 1 - t1][n - 1 - t2] = a
    vals[m - 1][n - 1] = R.ones
    return AutocorrelationTable(m, n, tuple(tuple(r) for r in vals))


def unit_shift_sidelobe(R: BinaryMatrix) -> int:
    """max of A(1,0), A(-1,0), A(0,1), A(0,-1)."""
    return max(
        autocorrelation(R, 1, 0),
        autocorrelation(R, -1, 0),
        autocorrelation(R, 0, 1),
        autocorrelation(R, 0, -1),
    )


def unit_shift_distance(R: BinaryMatrix) -> int:
    """Peak minus the largest unit-shift sidelobe.

    An upper bound on the profile d1; the circulant construction theory
    in `designs` and `bordering` is exact for this quantity.
    """
    return R.ones - unit_shift_sidelobe(R)


@dataclass(frozen=True)
class CorrelationProfile:
    """Profile {d1 | n1, ..., n_{s+1}}: peak l, nearest sidelobe s, d1 = l - s.

    `histogram` maps every distance value d1, d1+1, ..., l to the number
    of off-center table cells at that distance; trailing zero counts are
    kept so that the n_i sequence always has s + 1 entries.
    """

    peak: int
    nearest_sidelobe: int
    d1: int
    histogram: dict[int, int]

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(self.histogram[d] for d in range(self.d1, self.peak + 1))

    def notation(self) -> str:
        return "{%d | %s}" % (self.d1, ",".join(str(c) for c in self.counts))

    def to_record(self) -> dict:
        return {
            "peak": self.peak,
            "sidelobe": self.nearest_sidelobe,
            "d1": self.d1,
            "histogram": [
                {"distance": d, "count": c} for d, c in sorted(self.histogram.items())
            ],
        }


def profile(R: BinaryMatrix) -> CorrelationProfile:
    """Profile of R.  Raises ValueError("empty support") on an all-zero matrix."""
    l = R.ones
    if l == 0:
        raise ValueError("empty support")
    table = autocorrelation_table(R)
    counts: dict[int, int] = {}
    s = 0
    for t1, t2 in table.shifts():
        if t1 == 0 and t2 == 0:
            continue
        a = table.value(t1, t2)
        counts[a] = counts.get(a, 0) + 1
        if a > s:
            s = a
    d1 = l - s
    hist = {l - a: counts.get(a, 0) for a in range(s + 1)}
    return CorrelationProfile(peak=l, nearest_sidelobe=s, d1=d1, histogram=hist)


def compare_profiles(p: CorrelationProfile, q: CorrelationProfile) -> int:
    """-1 if p is worse than q, 0 if equivalent, 1 if p is better.

    Larger d1 wins; ties are broken by the lexicographically smaller
    count sequence (n1, n2, ...), padded with trailing zeros.
    """
    if p.d1 != q.d1:
        return -1 if p.d1 < q.d1 else 1
    a, b = p.counts, q.counts
    width = max(len(a), len(b))
    a = a + (0,) * (width - len(a))
    b = b + (0,) * (width - len(b))
    if a == b:
        return 0
    return 1 if a < b else -1


def profile_less(p: CorrelationProfile, q: CorrelationProfile) -> bool:
    """True iff p is strictly worse than q."""
    return compare_profiles(p, q) < 0


def skirlo_bound(m: int, n: int, l: int) -> int:
    """Upper bound on d1 for an m x n matrix with l ones.

    With M = min(m, n), N = max(m, n):

        d1 <= l            for l in [0, N1]
        d1 <= N1           for l in [N1, N2]
        d1 <= M(N+1) - l   for l in [N2, MN]

    where N1 = MN/2 and N2 = MN/2 + M when MN is even, and
    N1 = (MN+1)/2 and N2 = (MN+1)/2 + M - 1 when MN is odd.
    """
    if not 1 <= l <= m * n:
        raise ValueError(f"l must be in [1, {m * n}], got {l}")
    if m > n:
        m, n = n, m
    mn = m * n
    if mn % 2 == 0:
        n1, n2 = mn // 2, mn // 2 + m
    else:
        n1, n2 = (mn + 1) // 2, (mn + 1) // 2 + m - 1
    candidates = []
    if l <= n1:
        candidates.append(l)
    if n1 <= l <= n2:
        candidates.append(n1)
    if l >= n2:
        candidates.append(m * (n + 1) - l)
    assert len(set(candidates)) == 1, "bound branches disagree at an interval boundary"
    return candidates[0]
