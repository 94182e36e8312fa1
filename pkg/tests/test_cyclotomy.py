import pytest

from psdmat.cyclotomy import (
    QuarticDecomposition,
    convolution_check,
    cyclotomic_classes,
    cyclotomic_number,
    cyclotomic_number_table,
    is_prime,
    negation_class,
    order2_closed_form,
    order4_closed_form,
    primitive_root,
    quartic_decomposition,
)


class TestPrimitiveRoot:
    def test_examples(self):
        assert primitive_root(7) == 3
        assert primitive_root(5) == 2
        assert primitive_root(13) == 2

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            primitive_root(15)

    def test_order_is_maximal(self):
        for p in (11, 17, 23, 29, 97):
            g = primitive_root(p)
            seen = set()
            x = 1
            for _ in range(p - 1):
                x = x * g % p
                seen.add(x)
            assert len(seen) == p - 1


class TestClasses:
    def test_p5_order2(self):
        ctx = cyclotomic_classes(5, 2, 2)
        assert ctx.classes == (frozenset({1, 4}), frozenset({2, 3}))

    def test_p7_order2(self):
        ctx = cyclotomic_classes(7, 2, 3)
        assert ctx.classes == (frozenset({1, 2, 4}), frozenset({3, 5, 6}))

    def test_p13_order4(self):
        ctx = cyclotomic_classes(13, 4, 2)
        assert ctx.classes == (
            frozenset({1, 3, 9}),
            frozenset({2, 6, 5}),
            frozenset({4, 12, 10}),
            frozenset({8, 11, 7}),
        )

    def test_partition_and_sizes(self):
        for p, e in ((13, 2), (13, 3), (13, 4), (13, 6), (31, 6), (29, 4)):
            ctx = cyclotomic_classes(p, e)
            assert ctx.f == (p - 1) // e
            union = set()
            for c in ctx.classes:
                assert len(c) == ctx.f
                union |= c
            assert union == set(range(1, p))
            assert 1 in ctx.classes[0]

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            cyclotomic_classes(13, 5)

    def test_rejects_non_primitive_gamma(self):
        with pytest.raises(ValueError):
            cyclotomic_classes(13, 4, 3)  # 3 has order 3 mod 13


class TestNumbers:
    def test_examples(self):
        assert cyclotomic_number(cyclotomic_classes(5, 2), 0, 0) == 0
        assert cyclotomic_number(cyclotomic_classes(7, 2), 0, 1) == 2

    def test_total_is_p_minus_2(self):
        for p, e in ((13, 2), (13, 4), (19, 2), (19, 6), (29, 4), (31, 6)):
            ctx = cyclotomic_classes(p, e)
            assert sum(cyclotomic_number_table(ctx).values()) == p - 2

    def test_index_identities(self):
        for p, e in ((13, 4), (19, 6), (29, 4), (23, 2), (31, 6)):
            ctx = cyclotomic_classes(p, e)
            f = ctx.f
            for h in range(e):
                for k in range(e):
                    a = cyclotomic_number(ctx, h, k)
                    assert a == cyclotomic_number(ctx, e - h, k - h)
                    if f % 2 == 0:
                        assert a == cyclotomic_number(ctx, k, h)
                    else:
                        assert a == cyclotomic_number(ctx, k + e // 2, h + e // 2)


class TestClosedForms:
    def test_order2_p13(self):
        assert order2_closed_form(13) == {(0, 0): 2, (0, 1): 3, (1, 0): 3, (1, 1): 3}

    def test_order2_p7(self):
        assert order2_closed_form(7) == {(0, 0): 1, (0, 1): 2, (1, 0): 1, (1, 1): 1}

    def test_order2_counts_match(self):
        for p in range(3, 100):
            if is_prime(p):
                assert cyclotomic_number_table(cyclotomic_classes(p, 2)) == order2_closed_form(p)

    def test_order4_p13(self):
        dec = QuarticDecomposition(13, -3, -1)
        table = order4_closed_form(13, dec)
        assert table[(0, 0)] == table[(2, 2)] == table[(2, 0)] == 0
        assert table[(0, 2)] == 2

    def test_order4_counts_match(self):
        for p in (13, 29, 37, 53, 61):
            ctx = cyclotomic_classes(p, 4)
            dec = quartic_decomposition(ctx)
            assert order4_closed_form(p, dec) == cyclotomic_number_table(ctx)

    def test_order4_requires_f_odd(self):
        with pytest.raises(ValueError):
            order4_closed_form(17, QuarticDecomposition(17, 1, 2))


class TestQuarticDecomposition:
    def test_p13(self):
        dec = quartic_decomposition(cyclotomic_classes(13, 4, 2))
        assert dec.x == -3
        assert dec.y in (1, -1)

    def test_p5(self):
        dec = quartic_decomposition(cyclotomic_classes(5, 4))
        assert dec.x == 1
        assert abs(dec.y) == 1

    def test_p29(self):
        # 29 = 25 + 4; the x = 1 mod 4 convention forces x = +5
        dec = quartic_decomposition(cyclotomic_classes(29, 4))
        assert dec.x == 5
        assert abs(dec.y) == 1

    def test_structural_invariants(self):
        with pytest.raises(ValueError):
            QuarticDecomposition(13, 3, 1)  # 3 != 1 mod 4
        with pytest.raises(ValueError):
            QuarticDecomposition(13, 1, 1)  # 1 + 4 != 13

    def test_sign_flips_with_root_choice(self):
        signs = set()
        from psdmat.cyclotomy import primitive_roots

        for gamma in primitive_roots(13):
            signs.add(quartic_decomposition(cyclotomic_classes(13, 4, gamma)).y)
        assert signs == {1, -1}


class TestNegation:
    def test_examples(self):
        assert negation_class(cyclotomic_classes(13, 2), 0) == 0  # f = 6 even
        assert negation_class(cyclotomic_classes(7, 2), 0) == 1  # f = 3 odd
        assert negation_class(cyclotomic_classes(13, 4), 0) == 2  # f = 3 odd

    def test_matches_location_of_negated_elements(self):
        for p, e in ((13, 2), (13, 4), (7, 2), (19, 6), (29, 4), (31, 6)):
            ctx = cyclotomic_classes(p, e)
            for i in range(e):
                j = negation_class(ctx, i)
                assert {(-x) % p for x in ctx.classes[i]} == set(ctx.classes[j])


class TestConvolution:
    def test_p5_diagonal(self):
        res = convolution_check(cyclotomic_classes(5, 2), 0, 0)
        assert res.identity_coefficient == 2  # f, f even and j = i
        assert res.class_coefficients == {0: 0, 1: 1}

    def test_p7_off_diagonal(self):
        res = convolution_check(cyclotomic_classes(7, 2), 0, 1)
        assert res.identity_coefficient == 3  # f, f odd and j = i + e/2

    def test_diagonal_identity_is_f_when_f_even(self):
        for p in (13, 17, 29):
            ctx = cyclotomic_classes(p, 2)
            assert convolution_check(ctx, 1, 1).identity_coefficient == ctx.f

    def test_identity_holds_broadly(self):
        # convolution_check raises ConsistencyError on any violation
        for p in range(3, 60):
            if not is_prime(p):
                continue
            for e in (2, 4, 6):
                if (p - 1) % e:
                    continue
                ctx = cyclotomic_classes(p, e)
                for i in range(e):
                    for j in range(e):
                        convolution_check(ctx, i, j)
