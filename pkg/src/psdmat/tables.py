"""Reference tables for the constructed families, re-derived end to end.

Table 1 lists, per matrix order, the construction and its reference
distance; Table 2 gives per-family closed-form distances evaluated at
the smallest admissible primes.  Each row is reproduced by running the
full pipeline and comparing the measured profile d1 against the
reference value, and the design parameters against classification.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bordering import build_good_matrix
from .constructions import ConstructionSpec
from .designs import bv_bound, classify

Spec = ConstructionSpec


@dataclass(frozen=True)
class Table1Row:
    order: int
    spec: ConstructionSpec
    params: str
    reference_d1: int


TABLE1: tuple[Table1Row, ...] = (
    Table1Row(7, Spec("qnr", p=5), "(5,2,0,2)-ADS", 18),
    Table1Row(9, Spec("paley-a", p=7), "(7,4,2)-DS", 28),
    Table1Row(13, Spec("paley-a", p=11), "(11,6,3)-DS", 52),
    Table1Row(14, Spec("z4p", p=3), "(12,7,3,2)-ADS", 56),
    Table1Row(15, Spec("qnr", p=13), "(13,6,2,6)-ADS", 62),
    Table1Row(17, Spec("singer-b", t=4), "(15,8,4)-DS", 84),
    Table1Row(19, Spec("qnr", p=17), "(17,8,3,8)-ADS", 96),
)


@dataclass(frozen=True)
class Table2Row:
    label: str
    family: str
    primes: tuple[int, ...]

    def spec(self, p: int) -> ConstructionSpec:
        return ConstructionSpec(self.family, p=p)

    def formula(self, p: int) -> int:
        if self.family == "paley-a":
            return (p + 1) * (bv_bound(p) + 1) + 4
        if self.family == "qr-plus0":
            return (p + 1) * (bv_bound(p) + 1) + 5
        if self.family == "qnr":
            return (p + 1) * (bv_bound(p) + 1) + 6
        if self.family == "z4p":
            return (4 * p + 1) * (bv_bound(4 * p) + 1) + 4
        raise AssertionError("unreachable")


TABLE2: tuple[Table2Row, ...] = (
    Table2Row("(v,(v+1)/2,(v+1)/4)-DS border", "paley-a", (3, 7, 11)),
    Table2Row("(p,(p+1)/2,(p-1)/4,(p-1)/2)-ADS border", "qr-plus0", (5, 13, 17)),
    Table2Row("(p,(p-1)/2,(p-5)/4,(p-1)/2)-ADS border", "qnr", (5, 13, 17)),
    Table2Row("(4p,2p+1,p,p-1)-ADS border", "z4p", (3, 7, 11)),
)


@dataclass(frozen=True)
class RowResult:
    label: str
    spec: ConstructionSpec
    params_expected: str | None
    params_actual: str
    reference_d1: int
    measured_d1: int
    unit_distance: int
    passed: bool


def run_table1() -> list[RowResult]:
    out = []
    for row in TABLE1:
        result = build_good_matrix(row.spec, verify=False)
        actual = str(classify(result.defining_set))
        ok = actual == row.params and result.profile.d1 == row.reference_d1
        out.append(
            RowResult(
                label=f"order {row.order}",
                spec=row.spec,
                params_expected=row.params,
                params_actual=actual,
                reference_d1=row.reference_d1,
                measured_d1=result.profile.d1,
                unit_distance=result.unit_distance,
                passed=ok,
            )
        )
    return out


def run_table2() -> list[RowResult]:
    out = []
    for row in TABLE2:
        for p in row.primes:
            spec = row.spec(p)
            result = build_good_matrix(spec, verify=False)
            expected = row.formula(p)
            out.append(
                RowResult(
                    label=f"{row.label}, p={p}",
                    spec=spec,
                    params_expected=None,
                    params_actual=str(classify(result.defining_set)),
                    reference_d1=expected,
                    measured_d1=result.profile.d1,
                    unit_distance=result.unit_distance,
                    passed=expected == result.profile.d1,
                )
            )
    return out
