from __future__ import annotations

import random

import pytest

from conftest import xs
from schurlab.codes import (
    CodeSet,
    SetPartitionPT,
    base_code,
    bell,
    code_witness,
    count_pt_free_subgroups,
    disjoint_union_product,
    factorizations,
    generated_subgroup,
    is_code,
    is_g_code,
    pt_code,
    pt_free_count_formula,
    render_generators,
    set_partitions,
)
from schurlab.constructions import xfd_code
from schurlab.perm_groups import CapExceeded, group
from schurlab.words import Word, identity, minus_one, product, weight_class


def test_codeset_validation():
    with pytest.raises(ValueError):
        CodeSet(3, (identity(3),))
    with pytest.raises(ValueError):
        CodeSet(3, (xs(3, 0), xs(3, 0)))
    with pytest.raises(ValueError):
        CodeSet(3, (xs(4, 0),))
    with pytest.raises(ValueError):
        CodeSet.of([])


def test_codeset_json_roundtrip():
    c = CodeSet.parse(["-++", "+-+"])
    assert CodeSet.from_json(c.to_json()) == c


def test_base_code():
    for n in range(1, 13):
        c = base_code(n)
        assert is_code(c)
        assert len(generated_subgroup(c)) == 2**n
        assert product(c.words, n) == minus_one(n)


def test_single_word_is_code():
    for m in range(1, 16):
        assert is_code(CodeSet(4, (Word(4, m),)))


def test_x7_prime_is_not_a_code(x7_prime):
    for method in ("rank", "subsets"):
        wit = code_witness(x7_prime, method)
        assert wit is not None
        a = product([x7_prime.words[i] for i in wit.first], 7)
        b = product([x7_prime.words[i] for i in wit.second], 7)
        assert a == b == wit.word
        assert wit.first != wit.second
    target = xs(7, 0, 2, 5, 6)
    facts = factorizations(x7_prime, target)
    # X0X2X3 . X3X5X6 and X2X4X5 . X4X6X0
    assert (0, 3) in facts and (1, 6) in facts
    assert len(generated_subgroup(x7_prime)) == 16


def test_x7_prime_is_a_shift_orbit_but_not_a_g_code(x7_prime):
    from schurlab.perm_groups import orbit_masks

    assert set(orbit_masks(x7_prime.masks[0], group(7, "cn"))) == set(x7_prime.masks)
    assert not is_g_code(x7_prime, group(7, "cn"))


def test_g_codes():
    for n in range(2, 9):
        assert is_g_code(base_code(n), group(n, "cn"))
        # -G_n(n-1) = G_n(1) is a code only for even n: for odd n the product of all its words is 1
        g1 = CodeSet.of(weight_class(n, 1))
        assert is_g_code(g1, group(n, "sn")) == (n % 2 == 0)
        if n % 2:
            assert product(g1.words, n) == identity(n)


def test_oracle_and_rank_agree_random():
    rng = random.Random(7)
    for n in range(1, 13):
        for _ in range(200):
            size = rng.randint(1, n + 2)
            masks = rng.sample(range(1, 1 << n), min(size, (1 << n) - 1))
            c = CodeSet(n, tuple(Word(n, m) for m in masks))
            assert is_code(c, "rank") == is_code(c, "subsets")


def test_unknown_method():
    with pytest.raises(ValueError):
        code_witness(base_code(3), "magic")


def test_generated_subgroup_edge_cases():
    assert generated_subgroup([], 3) == [identity(3)]
    with pytest.raises(ValueError):
        generated_subgroup([])


def test_pt_code_examples():
    assert pt_code(SetPartitionPT.of(5, [[i] for i in range(5)])) == base_code(5)
    c = pt_code(SetPartitionPT.of(3, [[0, 1, 2]]))
    assert c.words == (minus_one(3),)
    assert set(generated_subgroup(c)) == {identity(3), minus_one(3)}
    for d in (1, 2, 3, 4, 6, 12):
        blocks = [list(range(i, 12, d)) for i in range(d)]
        assert set(pt_code(SetPartitionPT.of(12, blocks)).masks) == set(xfd_code(12, d).masks)


def test_set_partition_validation():
    with pytest.raises(ValueError):
        SetPartitionPT.of(3, [[0], [0, 1]])
    with pytest.raises(ValueError):
        SetPartitionPT.of(3, [[3]])
    with pytest.raises(ValueError):
        SetPartitionPT.of(3, [[]])


def test_bell_numbers():
    assert [bell(k) for k in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]
    for k in range(6):
        assert sum(1 for _ in set_partitions(list(range(k)))) == bell(k)
    for n in range(10):
        assert pt_free_count_formula(n) == bell(n + 1)


PAPER_N3_LIST = [
    [[0], [1], [2]], [[0, 1], [2]], [[0, 2], [1]], [[1, 2], [0]],
    [[0, 1, 2]],
    [[0], [1]], [[0, 1]], [[0], [2]], [[0, 2]], [[1], [2]], [[1, 2]],
    [[0]], [[1]], [[2]],
    [],
]


def test_census_n3_matches_listed_subgroups():
    census = count_pt_free_subgroups(3)
    assert (census.formula, census.constructions, census.distinct_subgroups) == (15, 15, 15)
    listed = {tuple(sorted(w.mask for w in generated_subgroup(pt_code(SetPartitionPT.of(3, b)).words, 3)))
              for b in PAPER_N3_LIST}
    assert listed == set(census.subgroups)


def test_census_small():
    assert count_pt_free_subgroups(0).formula == 1
    assert count_pt_free_subgroups(0).distinct_subgroups == 1
    c4 = count_pt_free_subgroups(4)
    assert c4.formula == c4.constructions == c4.distinct_subgroups == 52
    big = count_pt_free_subgroups(14, enumerate_all=False)
    assert big.formula == bell(15)
    with pytest.raises(CapExceeded):
        count_pt_free_subgroups(11)


def test_disjoint_union_product():
    sub = disjoint_union_product([CodeSet.of([xs(3, 0)]), CodeSet.of([xs(3, 1)])])
    assert len(sub) == 4
    n = 12
    a = SetPartitionPT.of(n, [[i, i + 3] for i in range(3)])
    b = SetPartitionPT.of(n, [[6 + i, 6 + i + 2] for i in range(2)] + [[10], [11]])
    prod = disjoint_union_product([(a, pt_code(a)), (b, pt_code(b))])
    assert len(prod) == 2 ** (3 + 4)
    assert len(disjoint_union_product([CodeSet.of([xs(5, i)]) for i in range(5)])) == 32
    with pytest.raises(ValueError):
        disjoint_union_product([CodeSet.of([xs(3, 0, 1)]), CodeSet.of([xs(3, 1)])])
    with pytest.raises(ValueError):
        disjoint_union_product([])


def test_render_generators():
    assert render_generators(3, CodeSet.of([xs(3, 0, 2), xs(3, 1)])) == "X0X2,X1"
