"""Codes in Z_2^n: unique factorization, generated subgroups, P(T)-codes and the census.

Every element of Z_2^n is an involution, so a reduced factorization over a
set of words uses each word at most once.  A set is therefore a code exactly
when its 2^k subset products are pairwise distinct, which is the same as the
masks being linearly independent over the two-element field.  Both checks are
implemented and kept: :func:`code_witness` with ``method="subsets"`` is the
enumeration oracle, ``method="rank"`` the elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from schurlab.perm_groups import CapExceeded, PermGroup, orbit_masks
from schurlab.words import Word, gf2_rank, gf2_span, parse_word, render_word

MAX_GENERATED_LOG2 = 24


@dataclass(frozen=True)
class CodeSet:
    """Ordered set of distinct non-identity words of a common length."""

    n: int
    words: tuple[Word, ...]

    def __post_init__(self) -> None:
        masks = [w.mask for w in self.words]
        for w in self.words:
            if w.n != self.n:
                raise ValueError(f"word {w} has length {w.n}, expected {self.n}")
        if len(set(masks)) != len(masks):
            raise ValueError("duplicate words in code set")
        if 0 in masks:
            raise ValueError("the identity 1 cannot belong to a code")

    @classmethod
    def of(cls, words: Iterable[Word], n: int | None = None) -> CodeSet:
        ws = tuple(words)
        if n is None:
            if not ws:
                raise ValueError("cannot infer n from an empty word list")
            n = ws[0].n
        return cls(n, ws)

    @classmethod
    def parse(cls, texts: Iterable[str]) -> CodeSet:
        return cls.of(parse_word(t) for t in texts)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    @property
    def masks(self) -> list[int]:
        return [w.mask for w in self.words]

    def to_json(self) -> dict:
        return {"n": self.n, "words": [render_word(w) for w in self.words]}

    @classmethod
    def from_json(cls, obj: dict) -> CodeSet:
        words = tuple(parse_word(t) for t in obj["words"])
        return cls(int(obj["n"]), words)


@dataclass(frozen=True)
class FactorizationWitness:
    """Two different index sets whose products coincide."""

    word: Word
    first: tuple[int, ...]
    second: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "word": render_word(self.word),
            "first": list(self.first),
            "second": list(self.second),
        }


def _indices(bits: int) -> tuple[int, ...]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return tuple(out)


def _subset_witness(c: CodeSet) -> FactorizationWitness | None:
    # Subsets in increasing order of their index bitmask; products are built
    # incrementally from the subset without its highest index.  Once more than
    # 2^n subsets are seen a collision is certain, so the loop is bounded.
    masks = c.masks
    seen: dict[int, int] = {}
    prods = [0]
    seen[0] = 0
    for s in range(1, 1 << len(masks)):
        top = s.bit_length() - 1
        p = prods[s ^ (1 << top)] ^ masks[top]
        prods.append(p)
        if p in seen:
            return FactorizationWitness(Word(c.n, p), _indices(seen[p]), _indices(s))
        seen[p] = s
    return None


def _rank_witness(c: CodeSet) -> FactorizationWitness | None:
    # Elimination that tracks which codewords make up each basis vector.
    basis: dict[int, tuple[int, int]] = {}
    for idx, m in enumerate(c.masks):
        v, combo = m, 1 << idx
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = (v, combo)
                break
            bv, bc = basis[top]
            v ^= bv
            combo ^= bc
        else:
            # product over `combo` is 1: split off its least index
            members = _indices(combo)
            first, second = members[:1], members[1:]
            return FactorizationWitness(c.words[first[0]], first, second)
    return None


def code_witness(c: CodeSet, method: str = "rank") -> FactorizationWitness | None:
    """A double factorization if ``c`` is not a code, else None."""
    if method == "rank":
        return _rank_witness(c)
    if method == "subsets":
        # more than n words collide within the first 2^n + 1 subsets
        if min(len(c), c.n + 1) > 30:
            raise CapExceeded("subset oracle limited to 30 words")
        return _subset_witness(c)
    raise ValueError(f"unknown method {method!r}")


def is_code(c: CodeSet, method: str = "rank") -> bool:
    return code_witness(c, method) is None


def factorizations(c: CodeSet, target: Word) -> list[tuple[int, ...]]:
    """All index subsets of ``c`` whose product is ``target`` (enumeration, small codes only)."""
    if len(c) > 24:
        raise CapExceeded("factorization enumeration limited to 24 words")
    masks = c.masks
    out = []
    prods = [0]
    if target.mask == 0:
        out.append(())
    for s in range(1, 1 << len(masks)):
        top = s.bit_length() - 1
        p = prods[s ^ (1 << top)] ^ masks[top]
        prods.append(p)
        if p == target.mask:
            out.append(_indices(s))
    return out


def generated_masks(words: Iterable[Word]) -> list[int]:
    masks = [w.mask for w in words]
    rank = gf2_rank(masks)
    if rank > MAX_GENERATED_LOG2:
        raise CapExceeded(f"generated subgroup has 2^{rank} elements, above cap 2^{MAX_GENERATED_LOG2}")
    return gf2_span(masks)


def generated_subgroup(c: CodeSet | Iterable[Word], n: int | None = None) -> list[Word]:
    """The subgroup X* generated by the words, always containing 1, sorted by mask."""
    if isinstance(c, CodeSet):
        n = c.n
        ws = list(c.words)
    else:
        ws = list(c)
        if n is None:
            if not ws:
                raise ValueError("n is required for an empty generating set")
            n = ws[0].n
    return [Word(n, m) for m in generated_masks(ws)]


# P(T)-codes ---------------------------------------------------------------


@dataclass(frozen=True)
class SetPartitionPT:
    """A set partition of a subset T of {0, ..., n-1}."""

    n: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if seen & b:
                raise ValueError("blocks overlap")
            if any(not 0 <= i < self.n for i in b):
                raise ValueError(f"block {sorted(b)} leaves 0..{self.n - 1}")
            seen |= b

    @classmethod
    def of(cls, n: int, blocks: Iterable[Iterable[int]]) -> SetPartitionPT:
        return cls(n, tuple(frozenset(b) for b in blocks))

    @property
    def support(self) -> frozenset[int]:
        return frozenset().union(*self.blocks) if self.blocks else frozenset()


def pt_code(p: SetPartitionPT) -> CodeSet:
    """One codeword per block: the product of the generators X_i, i in the block."""
    return CodeSet(p.n, tuple(Word(p.n, sum(1 << i for i in b)) for b in p.blocks))


def base_code(n: int) -> CodeSet:
    """The code {X_0, ..., X_{n-1}} of unit generators, which generates all of Z_2^n."""
    return pt_code(SetPartitionPT.of(n, ([i] for i in range(n))))


def set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    """All set partitions of ``items`` (restricted-growth order)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


def bell(k: int) -> int:
    """Bell number B_k via the Bell triangle."""
    row = [1]
    for _ in range(k):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def pt_partitions(n: int) -> Iterator[SetPartitionPT]:
    """Every partition P(T) of every subset T of {0, ..., n-1}."""
    for size in range(n + 1):
        for t in combinations(range(n), size):
            for blocks in set_partitions(list(t)):
                yield SetPartitionPT.of(n, blocks)


@dataclass(frozen=True)
class Census:
    n: int
    formula: int
    constructions: int
    distinct_subgroups: int
    subgroups: tuple[tuple[int, ...], ...] = ()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "formula": self.formula,
            "constructions": self.constructions,
            "distinct_subgroups": self.distinct_subgroups,
        }


def pt_free_count_formula(n: int) -> int:
    """Sum over k of C(n, k) B_k, which equals B_{n+1}."""
    return sum(comb(n, k) * bell(k) for k in range(n + 1))


def count_pt_free_subgroups(n: int, enumerate_all: bool = True) -> Census:
    """Count P(T)-free subgroups by formula and, for n <= 10, by explicit enumeration."""
    formula = pt_free_count_formula(n)
    if not enumerate_all:
        return Census(n, formula, 0, 0)
    if n > 10:
        raise CapExceeded("explicit P(T) enumeration limited to n <= 10")
    if n == 0:
        return Census(0, formula, 1, 1, ((0,),))
    constructions = 0
    groups: set[tuple[int, ...]] = set()
    for p in pt_partitions(n):
        constructions += 1
        groups.add(tuple(generated_masks(pt_code(p).words)))
    return Census(n, formula, constructions, len(groups), tuple(sorted(groups)))


def disjoint_union_product(codes: Sequence[tuple[SetPartitionPT, CodeSet] | CodeSet]) -> list[Word]:
    """Subgroup generated by a union of P(T)-codes with pairwise disjoint supports.

    Inputs are either ``(partition, code)`` pairs or bare codes whose support
    is read off the codewords.
    """
    if not codes:
        raise ValueError("at least one code is required")
    supports: list[int] = []
    words: list[Word] = []
    n = None
    for item in codes:
        if isinstance(item, CodeSet):
            code = item
            support = 0
            for m in code.masks:
                if support & m:
                    raise ValueError("codewords within one P(T)-code overlap")
                support |= m
        else:
            p, code = item
            support = sum(1 << i for i in p.support)
        if n is None:
            n = code.n
        elif code.n != n:
            raise ValueError("codes have different lengths")
        for s in supports:
            if s & support:
                raise ValueError("supports overlap")
        supports.append(support)
        words.extend(code.words)
    return generated_subgroup(words, n)


def is_g_code(c: CodeSet, g: PermGroup) -> bool:
    """A code that is a single orbit of ``g``."""
    if c.n != g.n:
        raise ValueError("length mismatch")
    if not len(c) or not is_code(c):
        return False
    return set(orbit_masks(c.words[0].mask, g)) == set(c.masks)


def render_generators(n: int, code: CodeSet) -> str:
    """Codewords in X-notation, e.g. 'X0X2'."""
    return ",".join("".join(f"X{i}" for i in _indices(m)) for m in code.masks)
