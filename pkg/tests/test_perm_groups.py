from __future__ import annotations

import math

import pytest

from conftest import xs
from schurlab.codes import generated_subgroup
from schurlab.perm_groups import (
    CapExceeded,
    PermGroupSpec,
    build_group,
    group,
    is_orbit_closed,
    is_s_subgroup,
    orbit,
    orbit_masks,
    partition,
    shift_perm,
)
from schurlab.words import Word, cyclic_shift, identity, minus_one, parse_word, render_word, weight_class


def test_group_orders():
    assert group(7, "cn").order() == 7
    assert group(7, "dn").order() == 6
    assert group(5, "hc").order() == 10
    assert group(7, "hn").order() == 2
    assert group(9, "dc").order() == 9 * 6
    assert group(5, "sn").order() == math.factorial(5)


def test_group_cap():
    with pytest.raises(CapExceeded):
        build_group(PermGroupSpec.from_alias(9, "hdc"), max_order=10)


def test_unknown_alias():
    with pytest.raises((KeyError, ValueError)):
        PermGroupSpec.from_alias(5, "xx")


def test_permutation_action_matches_shift():
    for n in range(2, 9):
        for k in range(n):
            p = shift_perm(n, k)
            for m in range(1 << n):
                assert p(Word(n, m)) == cyclic_shift(Word(n, m), k)


def test_orbit_examples():
    got = {render_word(w) for w in orbit(parse_word("-+++"), group(4, "cn"))}
    assert got == {"-+++", "+-++", "++-+", "+++-"}
    assert set(orbit(xs(7, 0), group(7, "sn"))) == set(weight_class(7, 6))
    assert len(orbit(parse_word("-++-++-++"), group(9, "cn"))) == 3


def test_orbit_is_sorted_with_canonical_first():
    orb = orbit(parse_word("++-+-"), group(5, "hc"))
    assert orb == sorted(orb)


def test_partition_examples():
    p = partition(4, group(4, "sn"))
    assert len(p) == 5
    assert sorted(len(o) for o in p.orbits) == [1, 1, 4, 4, 6]
    assert len(partition(4, group(4, "cn"))) == 6
    for n in range(1, 11):
        pc = partition(n, group(n, "cn"))
        assert all(n % len(o) == 0 for o in pc.orbits)
        # Burnside: number of necklaces
        assert len(pc) == sum(2 ** math.gcd(k, n) for k in range(n)) // n


def test_partition_cap(monkeypatch):
    with pytest.raises(CapExceeded):
        partition(12, group(12, "cn"), max_n=10)
    monkeypatch.setenv("SCHURLAB_MAX_N", "5")
    with pytest.raises(CapExceeded):
        partition(6, group(6, "cn"))


def test_partition_json_order():
    js = partition(3, group(3, "cn")).to_json()
    assert js == [["+++"], ["---"], ["-++", "+-+", "++-"], ["--+", "-+-", "+--"]]


@pytest.mark.parametrize("alias", ["sn", "cn", "dn", "hn", "hc", "dc", "hdc"])
def test_partitions_satisfy_s_ring_axioms(alias):
    for n in range(2, 8):
        partition(n, group(n, alias)).validate()


def test_union_of_orbits():
    p = partition(5, group(5, "cn"))
    assert p.is_union_of_orbits([0, 31])
    assert not p.is_union_of_orbits([0, 1])


def test_s_subgroup_examples(x7_prime):
    for alias in ("sn", "cn", "dn", "hc"):
        assert is_s_subgroup([identity(6), minus_one(6)], group(6, alias))
    sub = generated_subgroup(x7_prime)
    assert len(sub) == 16
    assert is_s_subgroup(sub, group(7, "cn"))
    assert not is_s_subgroup([identity(4), parse_word("-+++")], group(4, "cn"))
    # closed under shifts but not under products
    assert not is_s_subgroup([identity(3)] + orbit(xs(3, 0), group(3, "cn")), group(3, "cn"))


def test_orbit_closed():
    g = group(6, "hc")
    assert is_orbit_closed(range(64), g)
    assert not is_orbit_closed([1], g)
    assert is_orbit_closed(orbit_masks(xs(6, 0, 2).mask, g), g)
