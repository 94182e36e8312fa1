"""Residue sets in Z_v: difference spectra, design classification, circulants.

A k-subset D of Z_v has a difference spectrum: the multiplicity with
which each nonzero residue occurs among the k(k-1) ordered differences
a - b, a != b in D.  The distinct multiplicities mu_1 < ... < mu_s (0
included when some residue never occurs) are the difference levels,
Lambda = mu_s is the largest, and d(D) = k - Lambda is the periodic
distance.  D is a (v,k,lambda) difference set when s = 1 and a
(v,k,lambda,t) almost difference set when s = 2 with mu_2 = mu_1 + 1.

D is special when its number of cyclically consecutive residue pairs
equals Lambda; the circulant of a special set has all four unit-shift
autocorrelations equal to (v-1)*Lambda, which drives the s-optimality
bound Q <= (v+1)*B_v + 1 with B_v = floor(v^2 / (4(v-1))).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import ConsistencyError
from .matrix import BinaryMatrix, autocorrelation, unit_shift_sidelobe


@dataclass(frozen=True)
class ResidueSet:
    """A subset of Z_v; elements kept sorted, duplicates rejected."""

    v: int
    elements: tuple[int, ...]

    def __post_init__(self):
        if self.v < 1:
            raise ValueError("modulus must be positive")
        if any(not 0 <= e < self.v for e in self.elements):
            raise ValueError("elements must lie in [0, v)")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate elements")
        object.__setattr__(self, "elements", tuple(sorted(self.elements)))

    @classmethod
    def of(cls, v: int, elements) -> "ResidueSet":
        return cls(v, tuple(elements))

    @property
    def k(self) -> int:
        return len(self.elements)

    def to_text(self) -> str:
        return f"{self.v}: {','.join(str(e) for e in self.elements)}"

    @classmethod
    def from_text(cls, text: str) -> "ResidueSet":
        head, _, rest = text.partition(":")
        try:
            v = int(head.strip())
        except ValueError:
            raise ValueError(f"bad modulus in {text!r}") from None
        rest = rest.strip()
        elems = [int(x) for x in rest.split(",")] if rest else []
        return cls.of(v, elems)

    def __contains__(self, x: int) -> bool:
        return x % self.v in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.elements)


@dataclass(frozen=True)
class DifferenceSpectrum:
    """Multiplicity table of nonzero differences of D, with derived levels."""

    v: int
    k: int
    multiplicity: dict[int, int]
    levels: tuple[int, ...]
    level_counts: tuple[int, ...]
    lambda_max: int
    periodic_distance: int
    consecutive_pairs: int


def difference_spectrum(D: ResidueSet) -> DifferenceSpectrum:
    """Exact spectrum by brute force over D x D.  Requires 2 <= k < v."""
    v, k = D.v, D.k
    if not 2 <= k < v:
        raise ValueError("degenerate set")
    mult = {g: 0 for g in range(1, v)}
    for a in D.elements:
        for b in D.elements:
            if a != b:
                mult[(a - b) % v] += 1
    levels = tuple(sorted(set(mult.values())))
    counts = tuple(
        sum(1 for m in mult.values() if m == mu) for mu in levels
    )
    lam = levels[-1]
    consec = sum(1 for x in D.elements if (x + 1) % v in D)
    return DifferenceSpectrum(
        v=v,
        k=k,
        multiplicity=mult,
        levels=levels,
        level_counts=counts,
        lambda_max=lam,
        periodic_distance=k - lam,
        consecutive_pairs=consec,
    )


@dataclass(frozen=True)
class DesignClass:
    """Classification tag: difference set, almost difference set, or generic."""

    kind: str  # "difference-set" | "almost-difference-set" | "generic"
    v: int
    k: int
    lam: int | None = None
    t: int | None = None
    n_levels: int | None = None

    def __str__(self) -> str:
        if self.kind == "difference-set":
            return f"({self.v},{self.k},{self.lam})-DS"
        if self.kind == "almost-difference-set":
            return f"({self.v},{self.k},{self.lam},{self.t})-ADS"
        return f"generic({self.n_levels} levels)"


def classify(D: ResidueSet) -> DesignClass:
    """DS iff one difference level; ADS iff two consecutive levels."""
    spec = difference_spectrum(D)
    s = len(spec.levels)
    if s == 1:
        return DesignClass("difference-set", D.v, D.k, lam=spec.levels[0])
    if s == 2 and spec.levels[1] == spec.levels[0] + 1:
        return DesignClass(
            "almost-difference-set",
            D.v,
            D.k,
            lam=spec.levels[0],
            t=spec.level_counts[0],
        )
    return DesignClass("generic", D.v, D.k, n_levels=s)


def is_special(D: ResidueSet) -> bool:
    """True iff the cyclic count of consecutive pairs {x, x+1} in D equals Lambda."""
    spec = difference_spectrum(D)
    return spec.consecutive_pairs == spec.lambda_max


def bv_bound(v: int) -> int:
    """B_v = floor(v^2 / (4(v-1))), the universal bound on periodic distance."""
    if v < 2:
        raise ValueError("v must be at least 2")
    return (v * v) // (4 * (v - 1))


def special_bound(v: int) -> int:
    """(v+1)*B_v + 1, the bound met by s-optimal circulants."""
    return (v + 1) * bv_bound(v) + 1


def equality_condition(D: ResidueSet) -> bool:
    """Exact criterion for d(D) = B_v:

        |k - v/2|^2 + sum_{i<s} (Lambda - mu_i) t_i  ==  v^2/4 - (v-1) B_v

    evaluated in 4-scaled integer arithmetic.
    """
    spec = difference_spectrum(D)
    v = D.v
    gap = sum(
        (spec.lambda_max - mu) * t
        for mu, t in zip(spec.levels[:-1], spec.level_counts[:-1])
    )
    lhs = (2 * D.k - v) ** 2 + 4 * gap
    rhs = v * v - 4 * (v - 1) * bv_bound(v)
    return lhs == rhs


def circulant(D: ResidueSet) -> BinaryMatrix:
    """v x v incidence matrix of the translates of D: row g is D + g.

    R[g][h] = 1 iff h - g mod v is in D; every row and column has k ones.
    """
    v = D.v
    base = sum(1 << e for e in D.elements)
    mask = (1 << v) - 1
    rows = []
    for g in range(v):
        rows.append(((base << g) | (base >> (v - g))) & mask if g else base)
    return BinaryMatrix(v, v, tuple(rows))


def complement(D: ResidueSet) -> ResidueSet:
    return ResidueSet.of(D.v, set(range(D.v)) - set(D.elements))


def soptimality(D: ResidueSet) -> str:
    """Classify a special set's circulant against the (v+1)B_v + 1 bound.

    Q is measured as the unit-shift peak-sidelobe distance of the
    circulant (peak minus the common value of A(+-1,0) and A(0,+-1)),
    which is the quantity the bound governs.  The measurement is
    cross-checked against the closed form Q = v(k-Lambda) + Lambda;
    disagreement raises ConsistencyError.

    Returns "s-optimal", "near-s-optimal" or "neither".
    """
    spec = difference_spectrum(D)
    if spec.consecutive_pairs != spec.lambda_max:
        raise ValueError("not special: bound inapplicable")
    R = circulant(D)
    units = {
        autocorrelation(R, 1, 0),
        autocorrelation(R, -1, 0),
        autocorrelation(R, 0, 1),
        autocorrelation(R, 0, -1),
    }
    if len(units) != 1:
        raise ConsistencyError(f"unit-shift values differ for circulant of {D.to_text()}")
    measured = R.ones - unit_shift_sidelobe(R)
    closed_form = D.v * spec.periodic_distance + spec.lambda_max
    if measured != closed_form:
        raise ConsistencyError(
            f"measured unit-shift distance {measured} != closed form {closed_form}"
        )
    bound = special_bound(D.v)
    if measured == bound:
        return "s-optimal"
    if measured == bound - 1:
        return "near-s-optimal"
    return "neither"
