"""Named S-subgroup families: G_d(n) from periods, I_n(a) from cyclotomic cosets, and Sym.

Codewords are built as products of shifts C^i X of a base word X with a single
'-'.  With the base '-' at position ``p`` the shift C^i X has its '-' at
position ``p - i (mod n)``.  Defaults follow the usual choices: a leading '-'
for periods, a centred '-' (position (n-1)//2) for decimation-invariant and odd
symmetric words and a trailing '-' for even symmetric words.  Any base can be
passed explicitly; the resulting subgroups are conjugate under cyclic shifts.

Decimation-invariant words are taken about the base position: the invariant
subgroup for base ``p`` is the fixed set of x_i -> x_{p + a(i - p)}, which for
``p = 0`` is the plain decimation delta_a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from schurlab.codes import CodeSet, generated_masks, is_code
from schurlab.words import (
    Word,
    check_unit,
    decimate_mask,
    reverse_mask,
    rotate_mask,
    units,
)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def mobius(k: int) -> int:
    out = 1
    p = 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            out = -out
        p += 1
    return -out if k > 1 else out


def shift_of_base(n: int, base: int, i: int) -> int:
    """Mask of C^i X where X has its single '-' at position ``base``."""
    return 1 << ((base - i) % n)


def shifts_product(n: int, exponents, base: int = 0) -> int:
    """Mask of the product of C^i X over the given exponents (repeated exponents cancel)."""
    return reduce(lambda acc, i: acc ^ shift_of_base(n, base, i), exponents, 0)


# Periods and G_d(n) -------------------------------------------------------


def period_mask(mask: int, n: int) -> int:
    for d in divisors(n):
        if rotate_mask(mask, d, n) == mask:
            return d
    raise AssertionError("unreachable: C^n is the identity")


def fundamental_period(x: Word) -> int:
    """Least d dividing n with C^d x = x."""
    return period_mask(x.mask, x.n)


@dataclass
class PeriodDecomposition:
    n: int
    classes: dict[int, list[int]]

    def sizes(self) -> dict[int, int]:
        return {d: len(v) for d, v in self.classes.items()}


def period_decomposition(n: int) -> PeriodDecomposition:
    """Split Z_2^n into the sets F_d of words with fundamental period d."""
    classes: dict[int, list[int]] = {d: [] for d in divisors(n)}
    for m in range(1 << n):
        classes[period_mask(m, n)].append(m)
    return PeriodDecomposition(n, classes)


def period_count(d: int) -> int:
    """|F_d| = sum over r | d of mu(d/r) 2^r, independent of n."""
    return sum(mobius(d // r) * 2**r for r in divisors(d))


def _check_divisor(n: int, d: int) -> None:
    if d < 1 or n % d:
        raise ValueError(f"{d} does not divide {n}")


def xfd_code(n: int, d: int, base: int = 0) -> CodeSet:
    """Codewords A_{i,d} X = C^i X C^{i+d} X ... C^{i+n-d} X for i = 0..d-1."""
    _check_divisor(n, d)
    words = tuple(Word(n, shifts_product(n, range(i, n, d), base)) for i in range(d))
    return CodeSet(n, words)


def g_subgroup(n: int, d: int, base: int = 0) -> list[int]:
    """Masks of G_d(n), the subgroup generated by the arithmetic-progression code."""
    return generated_masks(xfd_code(n, d, base).words)


def periods_dividing(n: int, d: int) -> list[int]:
    """Masks of the union of F_r over r | d, i.e. the words with C^d x = x."""
    _check_divisor(n, d)
    return [m for m in range(1 << n) if rotate_mask(m, d, n) == m]


def g_lattice(n: int) -> tuple[list[int], list[tuple[int, int]]]:
    """Hasse diagram of the divisor lattice of n: nodes and covering edges (d, d')."""
    divs = divisors(n)
    edges = []
    for d in divs:
        for e in divs:
            if e > d and e % d == 0:
                if not any(d < f < e and f % d == 0 and e % f == 0 for f in divs):
                    edges.append((d, e))
    return divs, edges


def lattice_dot(n: int) -> str:
    nodes, edges = g_lattice(n)
    lines = [f'graph "G_d({n})" {{', "  rankdir=BT;"]
    lines += [f'  d{d} [label="G_{d}({n})"];' for d in nodes]
    lines += [f"  d{d} -- d{e};" for d, e in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


# Decimation ---------------------------------------------------------------


@dataclass(frozen=True)
class BaseSplit:
    fixed: list[Word]
    unit_part: list[Word]
    rest: list[Word]


def delta_partition_of_base(n: int) -> BaseSplit:
    """Split G_n(n-1) into the Delta_n-fixed word and the unit / non-unit shifts of it."""
    if n < 2:
        raise ValueError("n must be at least 2")
    unit_part = [Word(n, shift_of_base(n, 0, a)) for a in range(1, n) if math.gcd(a, n) == 1]
    rest = [Word(n, shift_of_base(n, 0, a)) for a in range(1, n) if math.gcd(a, n) != 1]
    return BaseSplit([Word(n, 1)], sorted(unit_part), sorted(rest))


def multiplicative_order(a: int, n: int) -> int:
    check_unit(a, n)
    k, x = 1, a % n
    while x != 1 % n:
        x = x * a % n
        k += 1
    return k


def cyclic_subgroup(a: int, n: int) -> frozenset[int]:
    """The subgroup <a> of Z_n^*."""
    return frozenset(pow(a, k, n) for k in range(multiplicative_order(a, n)))


@dataclass(frozen=True)
class CyclotomicCosets:
    n: int
    a: int
    cosets: tuple[tuple[int, ...], ...]

    @property
    def representatives(self) -> tuple[int, ...]:
        """Least elements of the nonzero cosets."""
        return tuple(c[0] for c in self.cosets if c[0] != 0)

    def coset_of(self, s: int) -> tuple[int, ...]:
        for c in self.cosets:
            if s % self.n in c:
                return c
        raise KeyError(s)


def cyclotomic_cosets(n: int, a: int) -> CyclotomicCosets:
    """Orbits {s, sa, sa^2, ...} of Z_n under multiplication by the unit a."""
    a = check_unit(a, n)
    seen: set[int] = set()
    cosets = []
    for s in range(n):
        if s in seen:
            continue
        coset = [s]
        x = s * a % n
        while x != s:
            coset.append(x)
            x = x * a % n
        seen.update(coset)
        cosets.append(tuple(coset))
    return CyclotomicCosets(n, a, tuple(cosets))


def default_invariant_base(n: int) -> int:
    return (n - 1) // 2


def invariant_code(n: int, a: int, base: int | None = None) -> CodeSet:
    """Codewords X and C_s X (the product of C^i X over a nonzero coset) for each coset rep s."""
    cc = cyclotomic_cosets(n, a)
    if base is None:
        base = default_invariant_base(n)
    words = [Word(n, shift_of_base(n, base, 0))]
    words += [Word(n, shifts_product(n, c, base)) for c in cc.cosets if c[0] != 0]
    return CodeSet(n, tuple(words))


def invariant_subgroup(n: int, a: int, base: int | None = None) -> list[int]:
    """Masks of I_n(a), generated by the coset code.

    This is the set of words fixed by the decimation by ``a`` about the base
    position; ``base=0`` gives the words with delta_a Y = Y.
    """
    return generated_masks(invariant_code(n, a, base).words)


def invariant_subgroup_scan(n: int, a: int, base: int | None = None) -> list[int]:
    """Fixed points of the decimation by a about ``base``, by scanning all of Z_2^n."""
    check_unit(a, n)
    if base is None:
        base = default_invariant_base(n)
    return [m for m in range(1 << n) if decimate_mask(m, a, n, base) == m]


def invariant_order_exponent(n: int, a: int) -> int:
    """r + 1 where r is the number of nonzero cyclotomic cosets of a mod n."""
    return len(cyclotomic_cosets(n, a).representatives) + 1


# Reversal -----------------------------------------------------------------


def default_sym_base(n: int) -> int:
    return (n - 1) // 2 if n % 2 else n - 1


def sym_code(n: int, base: int | None = None) -> CodeSet:
    """Reversal-fixed codewords.

    Odd n: X with a centred '-' and C^i X C^{n-i} X for i = 1..(n-1)/2.
    Even n: X with a trailing '-' and C^i X C^{n-1-i} X for i = 0..(n-2)/2.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    p = default_sym_base(n) if base is None else base
    if n % 2:
        words = [shift_of_base(n, p, 0)]
        words += [shifts_product(n, (i, n - i), p) for i in range(1, (n - 1) // 2 + 1)]
    else:
        words = [shifts_product(n, (i, n - 1 - i), p) for i in range(n // 2)]
    return CodeSet(n, tuple(Word(n, m) for m in words))


def sym_subgroup(n: int) -> list[int]:
    """Masks of the palindromic words, by scanning."""
    return [m for m in range(1 << n) if reverse_mask(m, n) == m]


def sym_subgroup_generated(n: int) -> list[int]:
    return generated_masks(sym_code(n).words)


def cyclic_closure(masks, n: int) -> list[int]:
    """Union of the C_n-orbits of the given masks."""
    out = set()
    for m in masks:
        out.update(rotate_mask(m, k, n) for k in range(n))
    return sorted(out)


def construction_codes_are_codes(n: int) -> bool:
    codes = [xfd_code(n, d) for d in divisors(n)]
    codes += [invariant_code(n, a) for a in units(n)] if n >= 2 else []
    codes += [sym_code(n)] if n >= 2 else []
    return all(is_code(c) for c in codes)
