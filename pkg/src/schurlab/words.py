"""Elements of Z_2^n as bitmask-encoded +/- sequences, and the coordinate actions on them.

Bit ``i`` of the mask is set exactly when component ``i`` is ``-``.  With this
encoding the group product is XOR and the identity ``1 = (+,+,...,+)`` is the
zero mask.  The unit generator ``X_i`` (a single ``-`` at position ``i``) is
``1 << i``.

Most functions come in two flavours: a public one taking :class:`Word` values
and a ``*_mask`` helper working on raw integers, which the exhaustive
enumerations use in their inner loops.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

MAX_N = 64


@dataclass(frozen=True, order=True, slots=True)
class Word:
    """A +/- sequence of length ``n``; ``mask`` bit i set means component i is '-'."""

    n: int
    mask: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"word length must be in [1, {MAX_N}], got {self.n}")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} does not fit in {self.n} bits")

    def __mul__(self, other: Word) -> Word:
        return mul(self, other)

    def __neg__(self) -> Word:
        return negate(self)

    def __str__(self) -> str:
        return render_word(self)

    def to_json(self) -> dict:
        return {"n": self.n, "mask": self.mask}

    @classmethod
    def from_json(cls, obj: dict) -> Word:
        return cls(int(obj["n"]), int(obj["mask"]))


def parse_word(text: str) -> Word:
    """Parse a string of '+' and '-' characters.

    The Unicode minus sign is accepted as well, so words can be pasted from
    typeset sources.
    """
    if not text:
        raise ValueError("empty word")
    if len(text) > MAX_N:
        raise ValueError(f"word longer than {MAX_N} characters")
    mask = 0
    for i, ch in enumerate(text):
        if ch in "-−":
            mask |= 1 << i
        elif ch != "+":
            raise ValueError(f"illegal character {ch!r} at position {i} in {text!r}")
    return Word(len(text), mask)


def render_word(x: Word) -> str:
    return "".join("-" if x.mask >> i & 1 else "+" for i in range(x.n))


def full_mask(n: int) -> int:
    return (1 << n) - 1


def identity(n: int) -> Word:
    return Word(n, 0)


def minus_one(n: int) -> Word:
    return Word(n, full_mask(n))


def unit(n: int, i: int) -> Word:
    """The generator X_i with a single '-' at position i."""
    if not 0 <= i < n:
        raise ValueError(f"position {i} out of range for n={n}")
    return Word(n, 1 << i)


def _check_same_length(x: Word, y: Word) -> None:
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} != {y.n}")


def mul(x: Word, y: Word) -> Word:
    _check_same_length(x, y)
    return Word(x.n, x.mask ^ y.mask)


def product(words, n: int) -> Word:
    """Product of an iterable of words of length n (the empty product is 1)."""
    mask = 0
    for w in words:
        if w.n != n:
            raise ValueError(f"length mismatch: {w.n} != {n}")
        mask ^= w.mask
    return Word(n, mask)


def weight(x: Word) -> int:
    """Number of '+' components (not the popcount of the mask)."""
    return x.n - x.mask.bit_count()


def negate(x: Word) -> Word:
    return Word(x.n, x.mask ^ full_mask(x.n))


def rotate_mask(mask: int, k: int, n: int) -> int:
    """Mask of C^k applied to ``mask``: component i of the result is component i+k."""
    k %= n
    if not k:
        return mask
    return ((mask >> k) | (mask << (n - k))) & full_mask(n)


def cyclic_shift(x: Word, k: int = 1) -> Word:
    """C^k: (x_0, ..., x_{n-1}) -> (x_k, x_{k+1}, ..., x_{k-1})."""
    return Word(x.n, rotate_mask(x.mask, k, x.n))


def reverse_mask(mask: int, n: int) -> int:
    return int(f"{mask:0{n}b}"[::-1], 2)


def reverse(x: Word) -> Word:
    return Word(x.n, reverse_mask(x.mask, x.n))


def decimate_mask(mask: int, a: int, n: int, center: int = 0) -> int:
    """Mask of the decimation by ``a`` about ``center``.

    Component i of the result is component ``center + a*(i - center)`` of the
    input; ``center = 0`` is the plain decimation x_i -> x_{a i mod n}.  Other
    centres give the conjugate ``C^{-center} delta_a C^{center}``.
    """
    out = 0
    for i in range(n):
        if mask >> ((center + a * (i - center)) % n) & 1:
            out |= 1 << i
    return out


def check_unit(a: int, n: int) -> int:
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit modulo {n}")
    return a % n if n > 1 else 0


def decimate(x: Word, a: int, center: int = 0) -> Word:
    """delta_a: component i of the result is x_{a i mod n}; requires gcd(a, n) = 1."""
    check_unit(a, x.n)
    return Word(x.n, decimate_mask(x.mask, a, x.n, center))


def units(n: int) -> list[int]:
    """Elements of the unit group Z_n^* in increasing order."""
    if n == 1:
        return [0]
    return [a for a in range(1, n) if math.gcd(a, n) == 1]


def weight_class_masks(n: int, a: int) -> Iterator[int]:
    """Masks of G_n(a), the words with exactly ``a`` '+' components."""
    if not 0 <= a <= n:
        return
    for minus in combinations(range(n), n - a):
        mask = 0
        for i in minus:
            mask |= 1 << i
        yield mask


def weight_class(n: int, a: int) -> list[Word]:
    return [Word(n, m) for m in sorted(weight_class_masks(n, a))]


def all_words(n: int) -> Iterator[Word]:
    for m in range(1 << n):
        yield Word(n, m)


def gf2_reduce(basis: dict[int, int], mask: int) -> int:
    """Reduce ``mask`` against an echelon basis keyed by leading bit."""
    while mask:
        top = mask.bit_length() - 1
        if top not in basis:
            return mask
        mask ^= basis[top]
    return 0


def gf2_basis(masks) -> dict[int, int]:
    """Echelon basis (leading bit -> vector) of the span of ``masks`` over the two-element field."""
    basis: dict[int, int] = {}
    for m in masks:
        r = gf2_reduce(basis, m)
        if r:
            basis[r.bit_length() - 1] = r
    return basis


def gf2_rank(masks) -> int:
    return len(gf2_basis(masks))


def gf2_span(masks) -> list[int]:
    """All elements of the span, sorted."""
    span = [0]
    for v in gf2_basis(masks).values():
        span += [s ^ v for s in span]
    return sorted(span)
