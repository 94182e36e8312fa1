import pytest
from hypothesis import given, settings, strategies as st

from psdmat.designs import (
    DesignClass,
    ResidueSet,
    bv_bound,
    circulant,
    classify,
    complement,
    difference_spectrum,
    equality_condition,
    is_special,
    soptimality,
    special_bound,
)
from psdmat.matrix import autocorrelation, profile, unit_shift_distance


def residue_sets(max_v=24, min_k=1):
    return st.integers(3, max_v).flatmap(
        lambda v: st.integers(min_k, v - 1).flatmap(
            lambda k: st.permutations(range(v)).map(
                lambda perm: ResidueSet.of(v, perm[:k])
            )
        )
    )


def brute_multiplicities(D):
    mult = {g: 0 for g in range(1, D.v)}
    for a in D.elements:
        for b in D.elements:
            if a != b:
                mult[(a - b) % D.v] += 1
    return mult


class TestSpectrum:
    def test_pair_in_z5(self):
        spec = difference_spectrum(ResidueSet.of(5, [2, 3]))
        assert spec.multiplicity == {1: 1, 2: 0, 3: 0, 4: 1}
        assert spec.lambda_max == 1
        assert spec.periodic_distance == 1
        assert spec.consecutive_pairs == 1

    def test_paley7(self):
        spec = difference_spectrum(ResidueSet.of(7, [0, 1, 2, 4]))
        assert all(m == 2 for m in spec.multiplicity.values())
        assert spec.lambda_max == 2

    def test_qr7(self):
        D = ResidueSet.of(7, [1, 2, 4])
        assert difference_spectrum(D).multiplicity == brute_multiplicities(D)
        assert classify(D) == DesignClass("difference-set", 7, 3, lam=1)

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError, match="degenerate"):
            difference_spectrum(ResidueSet.of(5, [1]))
        with pytest.raises(ValueError, match="degenerate"):
            difference_spectrum(ResidueSet.of(3, [0, 1, 2]))

    @settings(max_examples=120, deadline=None)
    @given(residue_sets(min_k=2))
    def test_invariants(self, D):
        spec = difference_spectrum(D)
        assert sum(spec.multiplicity.values()) == D.k * (D.k - 1)
        assert sum(spec.level_counts) == D.v - 1
        # the difference multiset is closed under negation
        for g in range(1, D.v):
            assert spec.multiplicity[g] == spec.multiplicity[D.v - g]
        assert spec.multiplicity == brute_multiplicities(D)
        # consecutive pairs count the multiplicity of difference 1
        assert spec.consecutive_pairs == spec.multiplicity[1 % D.v]


class TestClassify:
    def test_examples(self):
        assert classify(ResidueSet.of(7, [0, 1, 2, 4])) == DesignClass(
            "difference-set", 7, 4, lam=2
        )
        assert classify(ResidueSet.of(5, [0, 1])) == DesignClass(
            "almost-difference-set", 5, 2, lam=0, t=2
        )

    def test_z12_glued_set(self):
        from psdmat.constructions import z4p_ads

        assert classify(z4p_ads(3)) == DesignClass(
            "almost-difference-set", 12, 7, lam=3, t=2
        )

    def test_generic(self):
        cls = classify(ResidueSet.of(9, [0, 1, 2, 3]))
        assert cls.kind == "generic"


class TestSpecial:
    def test_examples(self):
        assert is_special(ResidueSet.of(5, [2, 3]))
        assert is_special(ResidueSet.of(7, [0, 1, 2, 4]))
        assert not is_special(ResidueSet.of(5, [0, 2]))

    def test_wraparound_pair_counts(self):
        # {4, 0} in Z_5 is the consecutive pair crossing the modulus
        assert difference_spectrum(ResidueSet.of(5, [0, 4])).consecutive_pairs == 1


class TestBounds:
    def test_bv_examples(self):
        assert bv_bound(5) == 1
        assert bv_bound(7) == 2
        assert bv_bound(13) == 3

    def test_special_bound_examples(self):
        assert special_bound(5) == 7
        assert special_bound(7) == 17
        assert special_bound(12) == 40

    def test_equality_condition_examples(self):
        assert equality_condition(ResidueSet.of(5, [2, 3]))
        assert equality_condition(ResidueSet.of(7, [0, 1, 2, 4]))
        assert equality_condition(ResidueSet.of(5, [0, 1]))

    def test_equality_iff_distance_meets_bound(self):
        for v in range(3, 10):
            for mask in range(1 << v):
                k = mask.bit_count()
                if not 2 <= k < v:
                    continue
                D = ResidueSet.of(v, [i for i in range(v) if mask >> i & 1])
                spec = difference_spectrum(D)
                assert spec.periodic_distance <= bv_bound(v)
                assert (spec.periodic_distance == bv_bound(v)) == equality_condition(D)


class TestCirculant:
    def test_pair_z5(self):
        R = circulant(ResidueSet.of(5, [2, 3]))
        assert R.row_list() == [
            [0, 0, 1, 1, 0],
            [0, 0, 0, 1, 1],
            [1, 0, 0, 0, 1],
            [1, 1, 0, 0, 0],
            [0, 1, 1, 0, 0],
        ]

    def test_paley7_first_row(self):
        R = circulant(ResidueSet.of(7, [0, 1, 2, 4]))
        assert R.row_list()[0] == [1, 1, 1, 0, 1, 0, 0]
        # every row is the previous one rotated
        for g in range(7):
            assert R.row_list()[g] == [R.cell(0, (j - g) % 7) for j in range(7)]

    def test_singleton_is_identity(self):
        R = circulant(ResidueSet.of(3, [0]))
        assert R.row_list() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

    @settings(max_examples=80, deadline=None)
    @given(residue_sets())
    def test_row_and_column_sums(self, D):
        R = circulant(D)
        rows = R.row_list()
        assert all(sum(r) == D.k for r in rows)
        assert all(sum(r[j] for r in rows) == D.k for j in range(D.v))


class TestUnitShiftLemma:
    @settings(max_examples=150, deadline=None)
    @given(residue_sets(max_v=40))
    def test_four_unit_shifts_equal(self, D):
        R = circulant(D)
        vals = {
            autocorrelation(R, 1, 0),
            autocorrelation(R, -1, 0),
            autocorrelation(R, 0, 1),
            autocorrelation(R, 0, -1),
        }
        assert len(vals) == 1

    @settings(max_examples=100, deadline=None)
    @given(residue_sets(max_v=30, min_k=2))
    def test_unit_value_is_consecutive_pairs_scaled(self, D):
        R = circulant(D)
        spec = difference_spectrum(D)
        assert autocorrelation(R, 0, 1) == (D.v - 1) * spec.consecutive_pairs


class TestSOptimality:
    def test_examples(self):
        assert soptimality(ResidueSet.of(5, [2, 3])) == "near-s-optimal"
        assert soptimality(ResidueSet.of(7, [0, 1, 2, 4])) == "near-s-optimal"
        qr13 = ResidueSet.of(13, [0, 1, 3, 4, 9, 10, 12])
        assert soptimality(qr13) == "s-optimal"
        assert unit_shift_distance(circulant(qr13)) == 43 == special_bound(13)

    def test_non_special_rejected(self):
        with pytest.raises(ValueError, match="not special"):
            soptimality(ResidueSet.of(5, [0, 2]))

    def test_bound_holds_up_to_complementation(self):
        # the (v+1)B_v + 1 bound is provable for special sets with
        # k <= (v+1)/2; complements of dense sets can exceed it
        for v in range(3, 11):
            for mask in range(1 << v):
                k = mask.bit_count()
                if not 2 <= k < v or 2 * k > v + 1:
                    continue
                D = ResidueSet.of(v, [i for i in range(v) if mask >> i & 1])
                spec = difference_spectrum(D)
                if spec.consecutive_pairs != spec.lambda_max:
                    continue
                R = circulant(D)
                q_unit = unit_shift_distance(R)
                assert q_unit == v * spec.periodic_distance + spec.lambda_max
                assert profile(R).d1 <= q_unit <= special_bound(v)

    def test_dense_counterexample_to_unrestricted_bound(self):
        # DS(5,4,3) is special with unit-shift distance 8 > (v+1)B_v + 1 = 7
        D = ResidueSet.of(5, [1, 2, 3, 4])
        assert is_special(D)
        assert unit_shift_distance(circulant(D)) == 8 > special_bound(5)


class TestComplement:
    def test_examples(self):
        assert complement(ResidueSet.of(7, [1, 2, 4])) == ResidueSet.of(7, [0, 3, 5, 6])
        assert classify(complement(ResidueSet.of(7, [1, 2, 4]))) == DesignClass(
            "difference-set", 7, 4, lam=2
        )
        assert classify(complement(ResidueSet.of(5, [0, 1]))) == DesignClass(
            "almost-difference-set", 5, 3, lam=1, t=2
        )
        assert complement(ResidueSet.of(4, [])) == ResidueSet.of(4, range(4))

    def test_parameter_transforms_exhaustive(self):
        # complements of difference sets and almost difference sets carry
        # the transformed parameters (v, v-k, v-2k+lambda[, t])
        for v in range(4, 11):
            for mask in range(1 << v):
                k = mask.bit_count()
                if not 2 <= k <= v - 2:
                    continue
                D = ResidueSet.of(v, [i for i in range(v) if mask >> i & 1])
                cls = classify(D)
                if cls.kind == "generic":
                    continue
                comp_cls = classify(complement(D))
                assert comp_cls.kind == cls.kind
                assert comp_cls.k == v - k
                assert comp_cls.lam == v - 2 * k + cls.lam
                if cls.kind == "almost-difference-set":
                    assert comp_cls.t == cls.t


class TestResidueSetText:
    def test_roundtrip(self):
        D = ResidueSet.of(13, [1, 3, 4, 9, 10, 12])
        assert ResidueSet.from_text(D.to_text()) == D
        assert D.to_text() == "13: 1,3,4,9,10,12"

    def test_rejects_duplicates_and_range(self):
        with pytest.raises(ValueError):
            ResidueSet.of(5, [1, 1])
        with pytest.raises(ValueError):
            ResidueSet.of(5, [5])
