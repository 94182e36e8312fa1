"""Desk-scale exhaustive searches for optimal binary matrices.

Candidates are enumerated as packed bit patterns (bit i*N + j is cell
(i, j)) in ascending integer order, evaluated in vectorized batches
(shift / AND / popcount on uint64 boards), and ranked by the profile
ordering: d1 first, then the lexicographically smallest histogram.

Pruning, when enabled, drops a candidate only when the unit-shift bound
l - max(A(0,1), A(1,0)) is already below the best d1 seen, which can
never exclude an optimum.  Partitioned runs split the enumeration range
into contiguous chunks and merge deterministically, so any worker count
produces the identical result.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError
from .matrix import (
    BinaryMatrix,
    CorrelationProfile,
    autocorrelation,
    compare_profiles,
    profile,
    unit_shift_sidelobe,
)

DEFAULT_BUDGET_PLAIN = 1 << 26
DEFAULT_BUDGET_SYMMETRIC = 1 << 36
_BATCH = 1 << 20


@dataclass(frozen=True)
class SearchSpace:
    rows: int
    cols: int
    symmetric: bool = False
    ones: int | None = None

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("dimensions must be positive")
        if self.symmetric and self.rows != self.cols:
            raise ValueError("diagonal symmetry requires a square matrix")
        if self.symmetric and self.ones is not None:
            raise ValueError("constraints are mutually exclusive")
        if self.ones is not None and not 0 < self.ones <= self.rows * self.cols:
            raise ValueError("fixed ones count out of range")

    @property
    def free_bits(self) -> int:
        if self.symmetric:
            return self.rows * (self.rows + 1) // 2
        return self.rows * self.cols

    @property
    def enumeration_range(self) -> int:
        return 1 << self.free_bits


@dataclass(frozen=True)
class SearchResult:
    best_profile: CorrelationProfile
    witnesses: tuple[BinaryMatrix, ...]
    witness_total: int
    explored: int


class _BoardOps:
    """Precomputed masks and shift evaluation for M x N boards in uint64."""

    def __init__(self, space: SearchSpace):
        m, n = space.rows, space.cols
        self.m, self.n = m, n
        self.space = space
        self.col_keep = {
            t2: np.uint64(
                sum(
                    1 << (i * n + j)
                    for i in range(m)
                    for j in range(n)
                    if j <= n - 1 - t2
                )
            )
            for t2 in range(n)
        }
        # half-plane of shifts; A(t) = A(-t) covers the rest
        self.half_shifts = [(0, t2) for t2 in range(1, n)] + [
            (t1, t2) for t1 in range(1, m) for t2 in range(-(n - 1), n)
        ]
        self.unit_shifts = [(0, 1), (1, 0)]
        if space.symmetric:
            self.free_cells = [(i, j) for i in range(m) for j in range(i, n)]
        else:
            self.free_cells = None

    def boards(self, cand: np.ndarray) -> np.ndarray:
        if self.free_cells is None:
            return cand
        x = np.zeros(len(cand), dtype=np.uint64)
        for b, (i, j) in enumerate(self.free_cells):
            bit = (cand >> np.uint64(b)) & np.uint64(1)
            x |= bit << np.uint64(i * self.n + j)
            if i != j:
                x |= bit << np.uint64(j * self.n + i)
        return x

    def _shifted(self, x: np.ndarray, t1: int, t2: int) -> np.ndarray:
        if t2 >= 0:
            sh = (x >> np.uint64(t2)) & self.col_keep[t2]
        else:
            sh = (x << np.uint64(-t2)) & np.uint64(int(self.col_keep[-t2]) << (-t2))
        if t1:
            sh = sh >> np.uint64(t1 * self.n)
        return sh

    def max_sidelobe(self, x: np.ndarray, shifts) -> np.ndarray:
        smax = np.zeros(len(x), dtype=np.int16)
        for t1, t2 in shifts:
            a = np.bitwise_count(x & self._shifted(x, t1, t2)).astype(np.int16)
            np.maximum(smax, a, out=smax)
        return smax

    def to_matrix(self, board: int) -> BinaryMatrix:
        n = self.n
        mask = (1 << n) - 1
        return BinaryMatrix(
            self.m, n, tuple((board >> (i * n)) & mask for i in range(self.m))
        )


def _scan_chunk(ops: _BoardOps, lo: int, hi: int, prune: bool, state: dict) -> None:
    space = ops.space
    for start in range(lo, hi, _BATCH):
        cand = np.arange(start, min(start + _BATCH, hi), dtype=np.uint64)
        boards = ops.boards(cand)
        l = np.bitwise_count(boards).astype(np.int16)
        keep = l > 0
        if space.ones is not None:
            keep &= l == space.ones
        if not keep.all():
            boards, l = boards[keep], l[keep]
        state["explored"] += len(boards)
        if not len(boards):
            continue
        if prune and state["best_d"] > -(1 << 30):
            ub = l.astype(np.int32) - ops.max_sidelobe(boards, ops.unit_shifts)
            mask = ub >= state["best_d"]
            boards, l = boards[mask], l[mask]
            if not len(boards):
                continue
        d = l.astype(np.int32) - ops.max_sidelobe(boards, ops.half_shifts)
        top = int(d.max())
        if top > state["best_d"]:
            state["best_d"] = top
            state["best_boards"] = []
        if top == state["best_d"]:
            state["best_boards"].extend(int(b) for b in boards[d == state["best_d"]])


def exhaustive_search(
    space: SearchSpace,
    *,
    prune: bool = True,
    workers: int = 1,
    witness_cap: int = 16,
    budget: int | None = None,
) -> SearchResult:
    """Exact optimum of the space under the profile ordering.

    Deterministic for any worker count; raises BudgetExceededError when
    the enumeration range exceeds the budget (default 2^36 with the
    symmetry constraint, 2^26 without).
    """
    if workers < 1:
        raise ValueError("workers must be positive")
    if budget is None:
        budget = DEFAULT_BUDGET_SYMMETRIC if space.symmetric else DEFAULT_BUDGET_PLAIN
    total = space.enumeration_range
    if total > budget:
        raise BudgetExceededError(total, budget)
    ops = _BoardOps(space)
    state = {"best_d": -(1 << 30), "best_boards": [], "explored": 0}
    bounds = [1 + ((total - 1) * w) // workers for w in range(workers + 1)]
    for w in range(workers):
        if bounds[w] < bounds[w + 1]:
            _scan_chunk(ops, bounds[w], bounds[w + 1], prune, state)
    if not state["best_boards"]:
        raise ValueError("empty search space")
    best_prof = None
    winners: list[int] = []
    for board in state["best_boards"]:
        prof = profile(ops.to_matrix(board))
        cmp = 1 if best_prof is None else compare_profiles(prof, best_prof)
        if cmp > 0:
            best_prof, winners = prof, [board]
        elif cmp == 0:
            winners.append(board)
    return SearchResult(
        best_profile=best_prof,
        witnesses=tuple(ops.to_matrix(b) for b in winners[:witness_cap]),
        witness_total=len(winners),
        explored=state["explored"],
    )


@dataclass(frozen=True)
class ObservationReport:
    """Structural diagnostics of one matrix (no claims asserted)."""

    peak: int
    nearest_sidelobe: int
    unit_sidelobe: int
    nearest_at_unit_shift: bool
    interior_row_ones: tuple[int, ...]
    interior_col_ones: tuple[int, ...]
    border_zeros: dict[str, tuple[int, ...]]

    def to_record(self) -> dict:
        return {
            "peak": self.peak,
            "nearest_sidelobe": self.nearest_sidelobe,
            "unit_sidelobe": self.unit_sidelobe,
            "nearest_at_unit_shift": self.nearest_at_unit_shift,
            "interior_row_ones": list(self.interior_row_ones),
            "interior_col_ones": list(self.interior_col_ones),
            "border_zeros": {k: list(v) for k, v in self.border_zeros.items()},
        }


def verify_observations(R: BinaryMatrix) -> ObservationReport:
    """Report whether the nearest sidelobe sits at a unit shift, plus
    interior one-counts per row/column and the border zero pattern."""
    prof = profile(R)
    unit = unit_shift_sidelobe(R)
    m, n = R.rows, R.cols
    interior_rows = tuple(
        sum(R.cell(i, j) for j in range(1, n - 1)) for i in range(1, m - 1)
    )
    interior_cols = tuple(
        sum(R.cell(i, j) for i in range(1, m - 1)) for j in range(1, n - 1)
    )
    border = {
        "top": tuple(j for j in range(n) if not R.cell(0, j)),
        "bottom": tuple(j for j in range(n) if not R.cell(m - 1, j)),
        "left": tuple(i for i in range(m) if not R.cell(i, 0)),
        "right": tuple(i for i in range(m) if not R.cell(i, n - 1)),
    }
    return ObservationReport(
        peak=prof.peak,
        nearest_sidelobe=prof.nearest_sidelobe,
        unit_sidelobe=unit,
        nearest_at_unit_shift=prof.nearest_sidelobe == unit,
        interior_row_ones=interior_rows,
        interior_col_ones=interior_cols,
        border_zeros=border,
    )
