"""Coordinate-permutation groups acting on Z_2^n, their orbits and the induced S-partitions.

Only the families needed here are supported: the full symmetric group S_n,
the cyclic group C_n = <C>, the decimation group Delta_n ~ Z_n^*, the
reversal group H_n = {1, R}, and groups generated by several of these
(H_nC_n, Delta_nC_n, H_nDelta_nC_n).  S_n is never materialized; its orbits
are the weight classes G_n(a).
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable

from schurlab.words import (
    Word,
    decimate_mask,
    gf2_rank,
    render_word,
    reverse_mask,
    rotate_mask,
    units,
    weight_class_masks,
)

FULL_SYMMETRIC = "full_symmetric"
CYCLIC = "cyclic"
DECIMATION = "decimation"
REVERSAL = "reversal"
KINDS = (FULL_SYMMETRIC, CYCLIC, DECIMATION, REVERSAL)

# CLI names for the group families
GROUP_ALIASES = {
    "sn": (FULL_SYMMETRIC,),
    "cn": (CYCLIC,),
    "dn": (DECIMATION,),
    "hn": (REVERSAL,),
    "hc": (REVERSAL, CYCLIC),
    "dc": (DECIMATION, CYCLIC),
    "hdc": (REVERSAL, DECIMATION, CYCLIC),
}

DEFAULT_MAX_GROUP_ORDER = 10**6
DEFAULT_MAX_PARTITION_N = 24


class CapExceeded(ValueError):
    """An enumeration would exceed a configured size cap."""


def partition_cap() -> int:
    """Largest n for full 2^n enumerations; ``SCHURLAB_MAX_N`` overrides the default."""
    env = os.environ.get("SCHURLAB_MAX_N")
    return int(env) if env else DEFAULT_MAX_PARTITION_N


@dataclass(frozen=True)
class Permutation:
    """Coordinate permutation acting by (sigma . x)_i = x_{sigma(i)}."""

    sigma: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.sigma) != list(range(len(self.sigma))):
            raise ValueError(f"not a permutation of 0..{len(self.sigma) - 1}: {self.sigma}")

    @property
    def n(self) -> int:
        return len(self.sigma)

    def __mul__(self, other: Permutation) -> Permutation:
        # (self * other) . x == self . (other . x)
        # (self . y)_i = y_{self(i)} = (other . x)_{self(i)} = x_{other(self(i))}
        return Permutation(tuple(other.sigma[s] for s in self.sigma))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, s in enumerate(self.sigma):
            inv[s] = i
        return Permutation(tuple(inv))

    def apply_mask(self, mask: int) -> int:
        out = 0
        for i, s in enumerate(self.sigma):
            if mask >> s & 1:
                out |= 1 << i
        return out

    def __call__(self, x: Word) -> Word:
        if x.n != self.n:
            raise ValueError(f"length mismatch: {x.n} != {self.n}")
        return Word(x.n, self.apply_mask(x.mask))


def shift_perm(n: int, k: int = 1) -> Permutation:
    return Permutation(tuple((i + k) % n for i in range(n)))


def reversal_perm(n: int) -> Permutation:
    return Permutation(tuple(n - 1 - i for i in range(n)))


def decimation_perm(n: int, a: int) -> Permutation:
    return Permutation(tuple((a * i) % n for i in range(n)))


@dataclass(frozen=True)
class PermGroupSpec:
    n: int
    kinds: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be positive")
        if not self.kinds:
            raise ValueError("at least one group kind is required")
        if len(set(self.kinds)) != len(self.kinds):
            raise ValueError(f"duplicate kinds in {self.kinds}")
        for kind in self.kinds:
            if kind not in KINDS:
                raise ValueError(f"unknown group kind {kind!r}")
        if DECIMATION in self.kinds and self.n < 2:
            raise ValueError("decimation group requires n >= 2")

    @classmethod
    def from_alias(cls, n: int, alias: str) -> PermGroupSpec:
        try:
            return cls(n, GROUP_ALIASES[alias])
        except KeyError:
            raise ValueError(
                f"unknown group {alias!r}; expected one of {sorted(GROUP_ALIASES)}"
            ) from None

    @property
    def symmetric(self) -> bool:
        return FULL_SYMMETRIC in self.kinds

    def generators(self) -> list[Permutation]:
        n = self.n
        gens: list[Permutation] = []
        if CYCLIC in self.kinds:
            gens.append(shift_perm(n))
        if REVERSAL in self.kinds:
            gens.append(reversal_perm(n))
        if DECIMATION in self.kinds:
            gens.extend(decimation_perm(n, a) for a in units(n) if a != 1)
        if FULL_SYMMETRIC in self.kinds:
            # adjacent transpositions
            for i in range(n - 1):
                s = list(range(n))
                s[i], s[i + 1] = s[i + 1], s[i]
                gens.append(Permutation(tuple(s)))
        return gens

    def mask_generators(self) -> list[Callable[[int], int]]:
        """Fast mask-level generator actions (S_n excluded, handled via weights)."""
        n = self.n
        gens: list[Callable[[int], int]] = []
        if CYCLIC in self.kinds:
            gens.append(lambda m: rotate_mask(m, 1, n))
        if REVERSAL in self.kinds:
            gens.append(lambda m: reverse_mask(m, n))
        if DECIMATION in self.kinds:
            for a in units(n):
                if a != 1:
                    gens.append(lambda m, a=a: decimate_mask(m, a, n))
        return gens


@dataclass
class PermGroup:
    spec: PermGroupSpec
    elements: frozenset[Permutation] | None = None
    _mask_gens: list = field(default_factory=list, repr=False)

    @property
    def n(self) -> int:
        return self.spec.n

    def order(self) -> int:
        if self.elements is None:
            return _factorial(self.n)
        return len(self.elements)


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def build_group(spec: PermGroupSpec, max_order: int = DEFAULT_MAX_GROUP_ORDER) -> PermGroup:
    """Close the generators of ``spec`` under composition.

    The full symmetric group is represented without its element set.
    """
    if spec.symmetric:
        return PermGroup(spec, None, [])
    ident = Permutation(tuple(range(spec.n)))
    gens = spec.generators()
    seen = {ident}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for h in gens:
            gh = h * g
            if gh not in seen:
                seen.add(gh)
                if len(seen) > max_order:
                    raise CapExceeded(f"group order exceeds cap {max_order}")
                queue.append(gh)
    return PermGroup(spec, frozenset(seen), spec.mask_generators())


def group(n: int, alias: str) -> PermGroup:
    return build_group(PermGroupSpec.from_alias(n, alias))


def orbit_masks(mask: int, g: PermGroup) -> list[int]:
    """Sorted masks of the orbit of ``mask``, by breadth-first closure under generators."""
    n = g.n
    if g.spec.symmetric:
        return sorted(weight_class_masks(n, n - mask.bit_count()))
    gens = g._mask_gens or g.spec.mask_generators()
    seen = {mask}
    queue = [mask]
    while queue:
        m = queue.pop()
        for act in gens:
            img = act(m)
            if img not in seen:
                seen.add(img)
                queue.append(img)
    return sorted(seen)


def orbit(x: Word, g: PermGroup) -> list[Word]:
    """Orbit of ``x`` as a sorted list; the first entry is the canonical representative."""
    if x.n != g.n:
        raise ValueError(f"length mismatch: {x.n} != {g.n}")
    return [Word(x.n, m) for m in orbit_masks(x.mask, g)]


@dataclass
class SPartition:
    """Orbits of a group acting on all of Z_2^n.

    ``orbits`` are sorted mask lists, listed in order of their least element;
    ``index`` maps each mask to the position of its orbit.
    """

    n: int
    spec: PermGroupSpec
    orbits: list[list[int]]
    index: list[int]

    def __len__(self) -> int:
        return len(self.orbits)

    def orbit_of(self, x: Word) -> list[Word]:
        return [Word(self.n, m) for m in self.orbits[self.index[x.mask]]]

    def words(self) -> list[list[Word]]:
        return [[Word(self.n, m) for m in orb] for orb in self.orbits]

    def is_union_of_orbits(self, masks: Iterable[int]) -> bool:
        s = set(masks)
        touched = {self.index[m] for m in s}
        return sum(len(self.orbits[i]) for i in touched) == len(s)

    def to_json(self) -> list[list[str]]:
        ordered = sorted(self.orbits, key=lambda orb: (len(orb), orb[0]))
        return [[render_word(Word(self.n, m)) for m in orb] for orb in ordered]

    def validate(self, max_n: int = 10) -> None:
        """Check the S-partition axioms; raises AssertionError on failure.

        Axiom 3 (products of simple quantities are integer combinations of
        simple quantities) is checked by exact convolution, so it is limited
        to ``n <= max_n``.
        """
        size = 1 << self.n
        assert sorted(m for orb in self.orbits for m in orb) == list(range(size))
        assert self.orbits[self.index[0]] == [0], "T_0 must be {1}"
        # every element is an involution, so each block is its own inverse
        if self.n > max_n:
            return
        for i, ti in enumerate(self.orbits):
            for tj in self.orbits[i:]:
                counts = [0] * size
                for u in ti:
                    for v in tj:
                        counts[u ^ v] += 1
                for tk in self.orbits:
                    vals = {counts[m] for m in tk}
                    assert len(vals) == 1, f"coefficient not constant on orbit {tk[0]}"


def partition(n: int, g: PermGroup, max_n: int | None = None) -> SPartition:
    cap = partition_cap() if max_n is None else max_n
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")
    if g.n != n:
        raise ValueError(f"group acts on length {g.n}, not {n}")
    size = 1 << n
    index = [-1] * size
    orbits: list[list[int]] = []
    if g.spec.symmetric:
        orbits = sorted((sorted(weight_class_masks(n, a)) for a in range(n + 1)), key=lambda o: o[0])
        for k, orb in enumerate(orbits):
            for m in orb:
                index[m] = k
        return SPartition(n, g.spec, orbits, index)
    for m in range(size):
        if index[m] < 0:
            orb = orbit_masks(m, g)
            for w in orb:
                index[w] = len(orbits)
            orbits.append(orb)
    return SPartition(n, g.spec, orbits, index)


def is_orbit_closed(masks: Iterable[int], g: PermGroup) -> bool:
    """True iff the set is mapped into itself by every generator of ``g``."""
    s = set(masks)
    if g.spec.symmetric:
        return all(
            all(w in s for w in weight_class_masks(g.n, g.n - m.bit_count())) for m in s
        )
    gens = g._mask_gens or g.spec.mask_generators()
    return all(act(m) in s for m in s for act in gens)


def is_s_subgroup(words: Iterable[Word], g: PermGroup) -> bool:
    """Subgroup containing 1 that is also a union of g-orbits."""
    ws = list(words)
    if any(w.n != g.n for w in ws):
        raise ValueError("all words must have the group's length")
    s = {w.mask for w in ws}
    if 0 not in s:
        return False
    # s lies in its own span, so it is closed iff it is the whole span
    if len(s) != 1 << gf2_rank(s):
        return False
    return is_orbit_closed(s, g)
