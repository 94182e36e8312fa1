"""Border-and-puncture construction of square matrices from special circulants.

Pipeline: take a (v-2) x (v-2) special circulant, adjoin a border of 1s
to get a v x v matrix, list the border cells whose orthogonally adjacent
interior cell is 1 (the four side sets), then set exactly one such cell
per side to 0.  All cell coordinates are 0-based (row, col).
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import ConstructionSpec, generate
from .designs import ResidueSet, bv_bound, circulant, difference_spectrum, soptimality
from .errors import DistanceMismatchError
from .matrix import (
    BinaryMatrix,
    CorrelationProfile,
    profile,
    unit_shift_distance,
)

Cell = tuple[int, int]


def border(R: BinaryMatrix) -> BinaryMatrix:
    """Surround R with a ring of 1s."""
    w, v = R.cols, R.cols + 2
    full = (1 << v) - 1
    rows = [full]
    for r in R.bits:
        rows.append(1 | (r << 1) | (1 << (v - 1)))
    rows.append(full)
    return BinaryMatrix(R.rows + 2, v, tuple(rows))


@dataclass(frozen=True)
class SideSets:
    """Border cells adjacent to an interior 1, one tuple per side."""

    top: tuple[Cell, ...]
    bottom: tuple[Cell, ...]
    left: tuple[Cell, ...]
    right: tuple[Cell, ...]

    def as_tuple(self) -> tuple[tuple[Cell, ...], ...]:
        return (self.top, self.bottom, self.left, self.right)


def s_sets(Rp: BinaryMatrix) -> SideSets:
    """The four puncture-candidate sets of a bordered matrix.

    Corners are excluded; a border cell qualifies when the interior cell
    next to it (one step inward) is 1.
    """
    if Rp.rows != Rp.cols or Rp.rows < 4:
        raise ValueError("expected a square bordered matrix of size >= 4")
    v = Rp.rows
    inner = range(1, v - 1)
    return SideSets(
        top=tuple((0, j) for j in inner if Rp.cell(1, j)),
        bottom=tuple((v - 1, j) for j in inner if Rp.cell(v - 2, j)),
        left=tuple((i, 0) for i in inner if Rp.cell(i, 1)),
        right=tuple((i, v - 1) for i in inner if Rp.cell(i, v - 2)),
    )


def _varying_index(cell: Cell, v: int) -> int:
    i, j = cell
    return j if i in (0, v - 1) else i


def choose_punctures(sets: SideSets, v: int) -> tuple[Cell, ...]:
    """Default deterministic choice: per side, the cell whose varying index
    is closest to the center, ties broken toward the smaller index."""
    if any(not side for side in sets.as_tuple()):
        raise ValueError("construction inapplicable: an empty side set")
    center = (v - 1) / 2
    return tuple(
        min(side, key=lambda c: (abs(_varying_index(c, v) - center), _varying_index(c, v)))
        for side in sets.as_tuple()
    )


def puncture(Rp: BinaryMatrix, punctures) -> BinaryMatrix:
    """Set the four chosen border cells to 0, validating the choice."""
    v = Rp.rows
    cells = tuple(punctures)
    if len(cells) != 4 or len(set(cells)) != 4:
        raise ValueError("need exactly four distinct punctures")
    sides = s_sets(Rp)
    for cell, side in zip(cells, sides.as_tuple()):
        if cell not in side:
            raise ValueError(f"puncture {cell} is not a valid choice for its side")
    rows = list(Rp.bits)
    for i, j in cells:
        rows[i] &= ~(1 << j)
    return BinaryMatrix(v, v, tuple(rows))


@dataclass(frozen=True)
class BorderedMatrix:
    """A punctured bordered matrix together with its interior and punctures."""

    interior: BinaryMatrix
    full: BinaryMatrix
    punctures: tuple[Cell, ...]

    def __post_init__(self):
        v = self.full.rows
        if self.interior.rows != v - 2 or self.interior.cols != v - 2:
            raise ValueError("interior does not fit the bordered matrix")
        for i in range(1, v - 1):
            for j in range(1, v - 1):
                if self.full.cell(i, j) != self.interior.cell(i - 1, j - 1):
                    raise ValueError("interior mismatch")
        punctured = set(self.punctures)
        for i in range(v):
            for j in range(v):
                if i in (0, v - 1) or j in (0, v - 1):
                    expected = 0 if (i, j) in punctured else 1
                    if self.full.cell(i, j) != expected:
                        raise ValueError("border cells must be 1 except the punctures")
        corners = {(0, 0), (0, v - 1), (v - 1, 0), (v - 1, v - 1)}
        if punctured & corners:
            raise ValueError("punctures may not be corners")


def predicted_distance(v: int, k: int, cls: str) -> int:
    """Reference distance formula for the v x v punctured matrix built from a
    (v-2) x (v-2) interior with k defining elements:

        (v-1) * B_{v-2} + 2(v-k) + 3   for an s-optimal interior
        (v-1) * B_{v-2} + 2(v-k) + 2   for a near-s-optimal interior
    """
    if v < 4 or not 2 <= k < v - 2:
        raise ValueError("requires v >= 4 and 2 <= k < v - 2")
    if cls == "s-optimal":
        extra = 3
    elif cls == "near-s-optimal":
        extra = 2
    else:
        raise ValueError(f"no distance formula for class {cls!r}")
    return (v - 1) * bv_bound(v - 2) + 2 * (v - k) + extra


@dataclass(frozen=True)
class BuildResult:
    spec: ConstructionSpec
    defining_set: ResidueSet
    opt_class: str
    bordered: BorderedMatrix
    profile: CorrelationProfile
    predicted_d1: int
    unit_distance: int

    @property
    def matrix(self) -> BinaryMatrix:
        return self.bordered.full

    @property
    def matches(self) -> bool:
        return self.profile.d1 == self.predicted_d1


def build_from_set(D: ResidueSet, spec: ConstructionSpec | None = None) -> BuildResult:
    """Run circulant -> border -> side sets -> default punctures -> profile."""
    cls = soptimality(D)
    R = circulant(D)
    Rp = border(R)
    sets = s_sets(Rp)
    punctures = choose_punctures(sets, Rp.rows)
    final = puncture(Rp, punctures)
    bm = BorderedMatrix(interior=R, full=final, punctures=punctures)
    return BuildResult(
        spec=spec,
        defining_set=D,
        opt_class=cls,
        bordered=bm,
        profile=profile(final),
        predicted_d1=predicted_distance(D.v + 2, D.k, cls),
        unit_distance=unit_shift_distance(final),
    )


def build_good_matrix(spec: ConstructionSpec, verify: bool = True) -> BuildResult:
    """End-to-end pipeline for a construction family.

    With verify=True (the default), a measured profile d1 differing from
    predicted_distance raises DistanceMismatchError carrying the full
    result; verify=False returns the result regardless, leaving the
    comparison to the caller (see BuildResult.matches).
    """
    result = build_from_set(generate(spec), spec)
    if verify and not result.matches:
        raise DistanceMismatchError(result)
    return result


def all_puncture_choices(Rp: BinaryMatrix):
    """Every valid puncture selection (one cell per side), in deterministic order."""
    sets = s_sets(Rp)
    for a in sets.top:
        for b in sets.bottom:
            for c in sets.left:
                for d in sets.right:
                    yield (a, b, c, d)


def interior_spectrum(result: BuildResult):
    return difference_spectrum(result.defining_set)
