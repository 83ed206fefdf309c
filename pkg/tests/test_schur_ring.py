from __future__ import annotations

from math import comb

import pytest

from schurlab.schur_ring import (
    CompleteSSetQuery,
    GroupAlgebraElement,
    algebra_mul,
    class_quantity,
    complete_ssets,
    gset_product_weights,
    gset_product_weights_bruteforce,
    in_class_basis,
    is_complete_sset,
    lambda_bruteforce,
    lambda_formula,
    parity_subgroup,
    parity_weights,
    power_classes,
    simple_quantity,
    sset_generated_subgroup,
)
from schurlab.words import Word, identity, weight_class


def test_simple_quantity():
    one = simple_quantity([identity(4)])
    assert one.coeffs == {identity(4): 1}
    assert len(simple_quantity(weight_class(4, 3))) == 4
    assert len(class_quantity(9, 6)) == 84
    with pytest.raises(ValueError):
        simple_quantity([])


def test_algebra_identity_and_arithmetic():
    t = class_quantity(5, 3)
    one = simple_quantity([identity(5)])
    assert t * one == t
    assert (t + t) == 2 * t
    assert t.scale(0) == GroupAlgebraElement(5)
    with pytest.raises(ValueError):
        algebra_mul(t, class_quantity(4, 1))


def test_square_of_single_minus_class():
    sq = algebra_mul(class_quantity(4, 3), class_quantity(4, 3))
    assert in_class_basis(sq) == {4: 4, 2: 2}


def test_square_of_two_minus_class():
    # each word with four '-' splits into two pairs in 6 ways, each with two '-' in 2(n-2) ways
    for n in range(4, 11):
        g = class_quantity(n, n - 2)
        assert in_class_basis(algebra_mul(g, g)) == {n: comb(n, 2), n - 2: 2 * (n - 2), n - 4: 6}


def test_in_class_basis_rejects_non_class_combinations():
    with pytest.raises(ValueError):
        in_class_basis(simple_quantity([Word(3, 1)]))


def test_json_is_sorted():
    js = class_quantity(3, 2).to_json()
    assert js == [{"word": w, "coeff": 1} for w in ("-++", "+-+", "++-")]


def test_lambda_examples():
    assert lambda_formula(4, 1, 2, 2) == 0
    for n in range(1, 8):
        for a in range(n + 1):
            assert lambda_formula(n, 0, a, a) == 1
    assert lambda_formula(4, 1, 1, 2) == lambda_bruteforce(4, 1, 1, 2)
    with pytest.raises(ValueError):
        lambda_formula(3, 4, 0, 0)


def test_lambda_parity_zero():
    for n in range(2, 8):
        for i in range(n + 1):
            for j in range(n + 1):
                for k in range(n + 1):
                    if (i + j - k) % 2:
                        assert lambda_formula(n, i, j, k) == 0


def test_lambda_agrees_small():
    for n in range(2, 7):
        for i in range(n + 1):
            for j in range(n + 1):
                for k in range(n + 1):
                    assert lambda_formula(n, i, j, k) == lambda_bruteforce(n, i, j, k)


def test_lambda_against_convolution():
    # third oracle: read the coefficients off the full convolution
    for n in range(2, 7):
        for i in range(n + 1):
            for j in range(n + 1):
                prod = algebra_mul(class_quantity(n, n - i), class_quantity(n, n - j))
                for k in range(n + 1):
                    rep = Word(n, (1 << k) - 1)
                    assert prod.coeff(rep) == lambda_formula(n, i, j, k)


def test_product_examples():
    assert gset_product_weights(4, 1, 2) == {1, 3}
    for n in range(1, 9):
        for b in range(n + 1):
            assert gset_product_weights(n, 0, b) == {n - b}
    for h in range(1, 6):
        assert gset_product_weights(2 * h, h, h) == parity_weights(2 * h, "even")
        assert gset_product_weights(2 * h + 1, h, h) == parity_weights(2 * h + 1, "odd")


def test_product_agrees_small():
    for n in range(1, 8):
        for a in range(n + 1):
            for b in range(n + 1):
                assert gset_product_weights(n, a, b) == gset_product_weights_bruteforce(n, a, b)


def test_parity_subgroups():
    assert len(parity_subgroup(4, "even")) == 8
    assert len(parity_subgroup(5, "odd")) == 16
    ev = {w.mask for w in parity_subgroup(6, "even")}
    assert all(u ^ v in ev for u in ev for v in ev)
    with pytest.raises(ValueError):
        parity_subgroup(3, "neither")


def test_power_examples():
    assert power_classes(8, 3, 3) == parity_weights(8, "odd")
    assert power_classes(8, 3, 4) == parity_weights(8, "even")
    assert power_classes(7, 2, 3) == parity_weights(7, "even")
    assert power_classes(7, 2, 4) == parity_weights(7, "odd")
    assert power_classes(5, 2, 1) == {2}
    with pytest.raises(ValueError):
        power_classes(5, 2, 0)


def test_power_small_exceptions():
    # the general statements need n large enough; these lengths are genuine exceptions
    assert power_classes(6, 1, 3) == {1, 3}
    assert power_classes(5, 0, 3) == {0}
    assert power_classes(9, 2, 3) == {0, 2, 4, 6}
    assert power_classes(9, 2, 4) == parity_weights(9, "odd")
    assert power_classes(3, 0, 3) == {0}


def test_complete_sset_nonexistence():
    for n, parity in ((8, 1), (9, 0)):
        for a in range(n + 1):
            if a % 2 == parity:
                assert complete_ssets(n, a) == []


def test_complete_sset_checks():
    n, a = 6, 2
    found = complete_ssets(n, a)
    assert found
    for s in found:
        assert is_complete_sset(CompleteSSetQuery(n, s, a)).complete
    res = is_complete_sset(CompleteSSetQuery(n, frozenset(), a))
    assert not res.complete and res.reason == "empty"
    bad = is_complete_sset(CompleteSSetQuery(n, frozenset({0, 1}), a))
    assert not bad.complete and bad.failing_pair is not None
    with pytest.raises(ValueError):
        CompleteSSetQuery(3, frozenset({5}), 1)


def test_same_parity_complete_ssets_are_proper():
    for n in range(2, 11):
        for a in range(n + 1):
            for s in complete_ssets(n, a):
                if all((w - n) % 2 == 0 for w in s):
                    assert len(sset_generated_subgroup(n, s)) < 1 << n


def test_mixed_parity_complete_sset_can_generate_everything():
    # {G_2(1)} is G_2(0)-complete and G_2(1) = {+-, -+} generates Z_2^2
    assert frozenset({1}) in complete_ssets(2, 0)
    assert len(sset_generated_subgroup(2, {1})) == 4
