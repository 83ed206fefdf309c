"""Periodic correlation of +/-1 sequences and the search for 2-level autocorrelation.

For words x, y of length n, P_{x,y}(k) = sum_i x_i y_{i+k}.  Entries are real,
so conjugation is trivial and P_{x,y}(k) = n - 2 popcount(x XOR C^k y).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from schurlab.perm_groups import CapExceeded
from schurlab.words import (
    Word,
    decimate_mask,
    full_mask,
    render_word,
    reverse_mask,
    rotate_mask,
    units,
)

MAX_SEARCH_N = 28


@dataclass(frozen=True)
class AutocorrVector:
    n: int
    values: tuple[int, ...]

    @property
    def offpeak(self) -> set[int]:
        return set(self.values[1:])

    def is_two_level(self) -> bool:
        return len(self.offpeak) <= 1

    def __getitem__(self, k: int) -> int:
        return self.values[k % self.n]


def correlation_mask(x: int, y: int, k: int, n: int) -> int:
    return n - 2 * (x ^ rotate_mask(y, k, n)).bit_count()


def cross_correlation(x: Word, y: Word, k: int) -> int:
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} != {y.n}")
    return correlation_mask(x.mask, y.mask, k, x.n)


def cross_correlation_naive(x: Word, y: Word, k: int) -> int:
    """Direct sum of x_i * y_{i+k}; kept as the reference for the bitwise version."""
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} != {y.n}")
    n = x.n
    xs = [-1 if x.mask >> i & 1 else 1 for i in range(n)]
    ys = [-1 if y.mask >> i & 1 else 1 for i in range(n)]
    return sum(xs[i] * ys[(i + k) % n] for i in range(n))


def autocorr_mask(mask: int, n: int) -> tuple[int, ...]:
    return tuple(correlation_mask(mask, mask, k, n) for k in range(n))


def autocorr_vector(x: Word) -> AutocorrVector:
    return AutocorrVector(x.n, autocorr_mask(x.mask, x.n))


def check_divisibility(x: Word) -> bool:
    """n - P_x(k) is divisible by 4, with P_x(k) = n - 4a + 4 i_k and 0 <= i_k <= a, a = number of '+'."""
    n = x.n
    a = n - x.mask.bit_count()
    for k in range(1, n):
        p = correlation_mask(x.mask, x.mask, k, n)
        if (n - p) % 4:
            return False
        i_k, rem = divmod(p - n + 4 * a, 4)
        if rem or not 0 <= i_k <= a:
            return False
    return True


def decimation_diagram_check(x: Word, a: int) -> bool:
    """theta(delta_a x)[k] == theta(x)[k a mod n] for every shift k."""
    n = x.n
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    lhs = autocorr_mask(decimate_mask(x.mask, a, n), n)
    rhs = autocorr_mask(x.mask, n)
    return all(lhs[k] == rhs[k * a % n] for k in range(n))


def symmetry_images(mask: int, n: int) -> set[int]:
    """Orbit of ``mask`` under shifts, reversal, decimations and negation."""
    seen = {mask}
    stack = [mask]
    gens = [lambda m: rotate_mask(m, 1, n), lambda m: reverse_mask(m, n), lambda m: m ^ full_mask(n)]
    gens += [lambda m, a=a: decimate_mask(m, a, n) for a in units(n) if a != 1]
    while stack:
        m = stack.pop()
        for g in gens:
            img = g(m)
            if img not in seen:
                seen.add(img)
                stack.append(img)
    return seen


@dataclass(frozen=True)
class TwoLevelClass:
    n: int
    representative: Word
    weight: int
    offpeak: int
    orbit_size: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "representative": render_word(self.representative),
            "weight": self.weight,
            "offpeak": self.offpeak,
            "orbit_size": self.orbit_size,
        }


def admissible_offpeak(n: int, minus: int) -> int | None:
    """The only possible constant off-peak value for a word with ``minus`` '-' entries.

    Summing P(k) over all k gives (n - 2 minus)^2, so a constant off-peak value d
    satisfies n + (n - 1) d = (n - 2 minus)^2.
    """
    d, rem = divmod((n - 2 * minus) ** 2 - n, n - 1)
    return None if rem else d


def search_two_level(n: int, max_n: int = MAX_SEARCH_N) -> list[TwoLevelClass]:
    """All words with constant off-peak autocorrelation, one canonical word per symmetry class.

    Classes are orbits under shifts, reversal, decimations and negation; the
    representative is the least mask in the class.  Negation lets the scan
    restrict to at most n/2 '-' entries, shifts let it fix a '-' at position 0,
    and the sum rule above discards whole weights.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > max_n:
        raise CapExceeded(f"n={n} exceeds search cap {max_n}")
    found: dict[int, TwoLevelClass] = {}
    covered: set[int] = set()
    for minus in range(0, n // 2 + 1):
        d = admissible_offpeak(n, minus)
        if d is None:
            continue
        candidates = [0] if minus == 0 else (
            1 | sum(1 << i for i in rest) for rest in combinations(range(1, n), minus - 1)
        )
        for m in candidates:
            if m in covered:
                continue
            if all(correlation_mask(m, m, k, n) == d for k in range(1, n // 2 + 1)):
                orbit = symmetry_images(m, n)
                covered |= orbit
                rep = min(orbit)
                found[rep] = TwoLevelClass(n, Word(n, rep), n - rep.bit_count(), d, len(orbit))
    return sorted(found.values(), key=lambda c: (c.offpeak, c.representative.mask))
