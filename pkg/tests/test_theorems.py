from __future__ import annotations

import pytest

from schurlab.theorems import (
    TheoremResult,
    check_even_freeness,
    check_power_proposition,
    check_safe_prime,
    check_sym_lemma,
    complete_sset_generating_examples,
    power_instances,
    square_products,
    theorem_ids,
    theorem_suite,
)


@pytest.mark.parametrize("n", range(1, 11))
def test_suite_passes(n):
    results = theorem_suite(n)
    assert results
    failed = [r for r in results if not r.passed]
    assert not failed, failed


def test_applicability():
    ids8 = {r.theorem_id for r in theorem_suite(8)}
    assert "even_freeness" in ids8 and "odd_freeness" not in ids8
    ids9 = {r.theorem_id for r in theorem_suite(9)}
    assert "odd_freeness" in ids9 and "sym_equals_invariant" in ids9
    assert "safe_prime" in {r.theorem_id for r in theorem_suite(7)}
    assert "safe_prime" not in ids9


def test_safe_prime_n11():
    assert check_safe_prime(11) is None


def test_only_filter():
    res = theorem_suite(6, only=["sym"])
    assert [r.theorem_id for r in res] == ["sym"]
    assert set(theorem_ids()) >= {"base_code", "even_freeness", "power_proposition"}


def test_power_instances():
    assert list(power_instances(8)) == [(1, 3, "odd", "even")]
    assert list(power_instances(7)) == [(4, 2, "even", "odd")]
    assert list(power_instances(6)) == []
    assert list(power_instances(9)) == []
    assert list(power_instances(13)) == [(3, 4, "even", "odd")]
    for n in range(4, 24):
        assert check_power_proposition(n) is None


def test_square_products():
    assert square_products(7, 0b11) == {7: 1, 5: 2, 3: 4}
    assert square_products(6, 0b1001) == {6: 2, 2: 4}


def test_even_freeness_instance():
    assert check_even_freeness(8) is None


def test_sym_lemma_example():
    assert check_sym_lemma(9) is None


def test_generating_complete_ssets_have_mixed_parity():
    for n in range(2, 9):
        for a, weights in complete_sset_generating_examples(n):
            assert any((w - n) % 2 for w in weights)


def test_result_json():
    ok = TheoremResult("x", 3, "pass")
    assert ok.to_json() == {"theorem_id": "x", "n": 3, "status": "pass"}
    bad = TheoremResult("x", 3, "fail", "+-+")
    assert bad.to_json()["witness"] == "+-+" and not bad.passed
