"""Instance checks of the structural results about S-subgroups of Z_2^n.

Each check returns a :class:`TheoremResult`; a failure carries the first
counterexample found (as a +/- string or a short description).  Checks that
do not apply to a given n (wrong parity, n not of the form 2p+1, ...) are
omitted from the report rather than marked as passing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

from schurlab.codes import CodeSet, base_code, generated_masks, is_code
from schurlab.constructions import (
    cyclic_closure,
    cyclic_subgroup,
    cyclotomic_cosets,
    default_invariant_base,
    default_sym_base,
    delta_partition_of_base,
    divisors,
    g_subgroup,
    invariant_code,
    invariant_subgroup,
    invariant_subgroup_scan,
    multiplicative_order,
    period_mask,
    periods_dividing,
    shift_of_base,
    shifts_product,
    sym_code,
    sym_subgroup,
    sym_subgroup_generated,
    xfd_code,
)
from schurlab.perm_groups import group, is_orbit_closed, orbit_masks
from schurlab.schur_ring import (
    algebra_mul,
    class_quantity,
    complete_ssets,
    in_class_basis,
    parity_weights,
    power_classes,
    sset_generated_subgroup,
)
from schurlab.words import Word, decimate_mask, weight_class_masks, render_word, reverse_mask, rotate_mask, units

COMBINED_GROUPS = ("hc", "dc", "hdc")


@dataclass(frozen=True)
class TheoremResult:
    theorem_id: str
    n: int
    status: str
    witness: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {"theorem_id": self.theorem_id, "n": self.n, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _w(n: int, m: int) -> str:
    return render_word(Word(n, m))


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, math.isqrt(p) + 1))


# individual checks; each returns None on success or a witness string


def check_base_code(n: int) -> str | None:
    code = base_code(n)
    if not is_code(code) or not is_code(code, "subsets"):
        return "unit generators are dependent"
    prod = 0
    for m in code.masks:
        prod ^= m
    if prod != (1 << n) - 1:
        return f"product of generators is {_w(n, prod)}"
    if len(generated_masks(code.words)) != 1 << n:
        return "unit generators do not generate Z_2^n"
    return None


def check_weight_one_code(n: int) -> str | None:
    """Even n: G_n(1) = -G_n(n-1) is an S_n-code generating Z_2^n."""
    code = CodeSet.of(Word(n, m) for m in sorted(weight_class_masks(n, 1)))
    if not is_code(code):
        return "G_n(1) is dependent"
    if len(generated_masks(code.words)) != 1 << n:
        return "G_n(1) does not generate Z_2^n"
    return None


def check_even_freeness(n: int) -> str | None:
    """Length 2h: for every free Y, Y C^h Y is not 1 and has period dividing h."""
    h = n // 2
    x = 1
    if period_mask(x ^ rotate_mask(x, h, n), n) != h:
        return "X C^h X is not in F_h"
    for m in range(1 << n):
        if period_mask(m, n) != n:
            continue
        z = m ^ rotate_mask(m, h, n)
        if z == 0 or h % period_mask(z, n):
            return _w(n, m)
    return None


def check_odd_freeness(n: int) -> str | None:
    """Odd length: X C^k X is free for every free X and every k in [1, n-1]."""
    for k in range(1, n):
        if period_mask(1 ^ rotate_mask(1, k, n), n) != n:
            return f"lemma fails at k={k}"
    for m in range(1 << n):
        if period_mask(m, n) != n:
            continue
        for k in range(1, n):
            if period_mask(m ^ rotate_mask(m, k, n), n) != n:
                return f"{_w(n, m)} at k={k}"
    return None


def check_complete_sset_nonexistence(n: int) -> str | None:
    """No G_n(a)-complete S-set when the parity of a differs from that of n."""
    for a in range(n + 1):
        if (a - n) % 2 and complete_ssets(n, a):
            return f"a={a}: {sorted(complete_ssets(n, a)[0])}"
    return None


def check_complete_sset_proper(n: int) -> str | None:
    """Complete S-sets whose weights all have the parity of n never generate Z_2^n.

    The argument only covers members of the parity of n (they stay inside
    E_n or O_n); sets with other members can generate everything, e.g.
    {G_2(1)} for a = 0, see :func:`complete_sset_generating_examples`.
    """
    for a in range(n + 1):
        for s in complete_ssets(n, a):
            if all((w - n) % 2 == 0 for w in s) and len(sset_generated_subgroup(n, s)) == 1 << n:
                return f"a={a}: {sorted(s)}"
    return None


def complete_sset_generating_examples(n: int) -> list[tuple[int, list[int]]]:
    """(a, weights) for the complete S-sets that do generate all of Z_2^n."""
    out = []
    for a in range(n + 1):
        for s in complete_ssets(n, a):
            if len(sset_generated_subgroup(n, s)) == 1 << n:
                out.append((a, sorted(s)))
    return out


# (item, residue of n mod 4, weight as a function of k, cube parity, smallest n where it holds)
POWER_ITEMS = (
    (1, 0, lambda k: 2 * k - 1, "odd", 4),
    (2, 2, lambda k: 2 * k - 1, "odd", 10),
    (3, 1, lambda k: 2 * k - 2, "even", 13),
    (4, 3, lambda k: 2 * k, "even", 7),
)


def power_instances(n: int) -> Iterator[tuple[int, int, str, str]]:
    """(item, a, cube parity, fourth-power parity) for the items that apply to n."""
    for item, residue, weight_of, cube, start in POWER_ITEMS:
        if n % 4 == residue and n >= start:
            fourth = "even" if cube == "odd" else "odd"
            yield item, weight_of(n // 4), cube, fourth


def check_power_proposition(n: int) -> str | None:
    for item, a, cube, fourth in power_instances(n):
        if power_classes(n, a, 3) != parity_weights(n, cube):
            return f"item {item}: G_{n}({a})^3"
        if power_classes(n, a, 4) != parity_weights(n, fourth):
            return f"item {item}: G_{n}({a})^4"
    return None


def square_products(n: int, y: int) -> dict[int, int]:
    """Weight multiset of Y C^k Y over k = 0..n-1."""
    out: dict[int, int] = {}
    for k in range(n):
        w = n - (y ^ rotate_mask(y, k, n)).bit_count()
        out[w] = out.get(w, 0) + 1
    return out


def check_square_identity(n: int) -> str | None:
    """For Y in G_n(n-2): Y C^k Y is 1 once, in G_n(n-2) twice and in G_n(n-4) n-3 times.

    Words with two '-' at distance n/2 have period n/2 and give 1 twice and
    G_n(n-4) the other n-2 times.
    """
    for i in range(n):
        for j in range(i + 1, n):
            y = 1 << i | 1 << j
            if 2 * (j - i) == n:
                want = {n: 2, n - 4: n - 2}
            else:
                want = {n: 1, n - 2: 2}
                if n - 3:
                    want[n - 4] = n - 3
            if square_products(n, y) != want:
                return _w(n, y)
    return None


def check_g_subgroups(n: int) -> str | None:
    """G_d(n): order 2^d, equals the words of period dividing d, S-subgroup for C, HC, DC, HDC."""
    groups = {alias: group(n, alias) for alias in ("cn",) + COMBINED_GROUPS}
    for d in divisors(n):
        g = g_subgroup(n, d)
        if len(g) != 2**d:
            return f"|G_{d}({n})| = {len(g)}"
        if g != periods_dividing(n, d):
            return f"G_{d}({n}) differs from the union of F_r, r | {d}"
        for alias, grp in groups.items():
            if not is_orbit_closed(g, grp):
                return f"G_{d}({n}) not a union of {alias}-orbits"
        # contained in the union of G_n(na/d); equality only for d in {1, n}
        allowed = {n * a // d for a in range(d + 1)}
        if any(n - m.bit_count() not in allowed for m in g):
            return f"G_{d}({n}) leaves the weight classes n a / d"
        union_size = sum(math.comb(n, w) for w in allowed)
        if (union_size == len(g)) != (d in (1, n)):
            return f"equality case wrong for d={d}"
    return None


def check_xfd_codes(n: int) -> str | None:
    """X_{F,d} is a code, a C_n-orbit, and is permuted by R and by every delta_a."""
    for d in divisors(n):
        code = xfd_code(n, d)
        s = set(code.masks)
        if not is_code(code):
            return f"X_F,{d} is not a code"
        if set(orbit_masks(code.masks[0], group(n, "cn"))) != s:
            return f"X_F,{d} is not a single C_n-orbit"
        if {reverse_mask(m, n) for m in s} != s:
            return f"R does not permute X_F,{d}"
        for a in units(n):
            if {decimate_mask(m, a, n) for m in s} != s:
                return f"delta_{a} does not permute X_F,{d}"
    return None


def check_delta_partition(n: int) -> str | None:
    split = delta_partition_of_base(n)
    phi = len([a for a in range(1, n) if math.gcd(a, n) == 1])
    if len(split.unit_part) != phi or len(split.rest) != n - phi - 1:
        return "part sizes"
    if any(decimate_mask(1, a, n) != 1 for a in units(n)):
        return "X is not fixed by Delta_n"
    dn = group(n, "dn")
    for part in (split.unit_part, split.rest):
        masks = {w.mask for w in part}
        if not is_orbit_closed(masks, dn):
            return "part is not Delta_n-invariant"
        if len(generated_masks(part)) != 2 ** len(part):
            return "generated order"
    return None


def check_invariant_subgroups(n: int) -> str | None:
    """I_n(a): coset code equals the fixed-point scan, order 2^(r+1), delta_b permutes the codewords."""
    for a in units(n):
        code = invariant_code(n, a)
        gen = generated_masks(code.words)
        if gen != invariant_subgroup_scan(n, a):
            return f"I_{n}({a}) code and scan differ"
        r = len(cyclotomic_cosets(n, a).representatives)
        if len(gen) != 2 ** (r + 1):
            return f"|I_{n}({a})| = {len(gen)}"
        s = set(code.masks)
        c = default_invariant_base(n)
        for b in units(n):
            if {decimate_mask(m, b, n, c) for m in s} != s:
                return f"delta_{b} does not permute the I_{n}({a}) code"
    return None


def check_invariant_ordering(n: int) -> str | None:
    """<b> <= <a> in Z_n^* implies I_n(a) <= I_n(b)."""
    subs = {a: set(invariant_subgroup(n, a)) for a in units(n)}
    for a in units(n):
        ca = cyclic_subgroup(a, n)
        for b in units(n):
            if cyclic_subgroup(b, n) <= ca and not subs[a] <= subs[b]:
                return f"a={a}, b={b}"
    return None


def check_sym(n: int) -> str | None:
    """Sym code: palindromic codewords, generated group = scan, order 2^ceil(n/2)."""
    code = sym_code(n)
    if any(reverse_mask(m, n) != m for m in code.masks):
        return "non-palindromic codeword"
    if not is_code(code):
        return "Sym code is not a code"
    gen = sym_subgroup_generated(n)
    if gen != sym_subgroup(n):
        return "generated group differs from the palindromes"
    if len(gen) != 2 ** ((n + 1) // 2):
        return f"|Sym| = {len(gen)}"
    return None


def check_sym_equals_invariant(n: int) -> str | None:
    """Odd n = 2m+1: Sym equals I_n(2m) built on the centred base word."""
    m = (n - 1) // 2
    sym = sym_subgroup(n)
    if invariant_subgroup(n, n - 1) != sym:
        return "Sym != I_n(n-1)"
    if invariant_subgroup_scan(n, n - 1) != sym:
        return "Sym != fixed points of the centred decimation by -1"
    shifted = sorted(rotate_mask(x, -m, n) for x in invariant_subgroup(n, n - 1, base=0))
    if shifted != sym:
        return "Sym is not the shift of I_n(n-1) on the leading base"
    return None


def check_combined_orbit_closure(n: int) -> str | None:
    """G_dC(n), Sym_C and I_nC(a) are unions of orbits of H_nC_n, Delta_nC_n and H_nDelta_nC_n."""
    sets: list[tuple[str, list[int]]] = [(f"G_{d}C", g_subgroup(n, d)) for d in divisors(n)]
    sets.append(("Sym_C", cyclic_closure(sym_subgroup(n), n)))
    sets += [(f"I_{n}C({a})", cyclic_closure(invariant_subgroup(n, a), n)) for a in units(n)]
    for alias in COMBINED_GROUPS:
        grp = group(n, alias)
        for name, masks in sets:
            if not is_orbit_closed(masks, grp):
                return f"{name} under {alias}"
    return None


def check_sym_lemma(n: int) -> str | None:
    """delta_a maps the C-orbit of each symmetric codeword Y_i to that of Y_j with the stated index."""
    p = default_sym_base(n)
    if n % 2:
        def y(i: int) -> int:
            return shifts_product(n, (i, n - i), p)
    else:
        def y(i: int) -> int:
            return shifts_product(n, (i, n - 1 - i), p)
    cn = group(n, "cn")
    for a in units(n):
        inv = pow(a, -1, n)
        for i in range(n):
            j = inv * i if n % 2 else inv * i + (inv - 1) // 2
            lhs = set(orbit_masks(decimate_mask(y(i), a, n), cn))
            if lhs != set(orbit_masks(y(j % n), cn)):
                return f"a={a}, i={i}"
    return None


def check_menos_uno(n: int) -> str | None:
    """Cosets of -1 pair q with n - q, and I_n(n-1) is generated by X, (C^{n/2} X,) and C_q X."""
    cc = cyclotomic_cosets(n, n - 1)
    for c in cc.cosets:
        if c[0] and set(c) != {c[0], (n - c[0]) % n}:
            return f"coset {c}"
    words = [shift_of_base(n, 0, 0)]
    if n % 2 == 0:
        words.append(shift_of_base(n, 0, n // 2))
    words += [shifts_product(n, (q, n - q)) for q in range(1, (n - 1) // 2 + 1)]
    code = CodeSet(n, tuple(Word(n, m) for m in words))
    if generated_masks(code.words) != invariant_subgroup_scan(n, n - 1, base=0):
        return "generated group differs from I_n(n-1)"
    return None


def check_safe_prime(n: int) -> str | None:
    """n = 2p+1 prime, p an odd prime: the invariant subgroups I_n(a), a != 1, fall into three classes."""
    classes: dict[tuple[int, ...], set[int]] = {}
    for a in units(n):
        if a != 1:
            classes.setdefault(tuple(invariant_subgroup(n, a)), set()).add(a)
    if len(classes) != 3:
        return f"{len(classes)} distinct subgroups"
    prim = {a for a in units(n) if multiplicative_order(a, n) == n - 1}
    kinds = sorted(sorted(v) for v in classes.values())
    if sorted(prim) not in kinds or [n - 1] not in kinds:
        return f"classes {kinds}"
    return None


def check_basic_s_subgroups(n: int) -> str | None:
    """The subgroup generated by any orbit is a union of orbits (all group families)."""
    for alias in ("sn", "cn", "dn", "hn", "hc", "dc", "hdc"):
        grp = group(n, alias)
        seen: set[int] = set()
        for m in range(1 << n):
            if m in seen:
                continue
            orb = orbit_masks(m, grp)
            seen.update(orb)
            gen = generated_masks(Word(n, x) for x in orb)
            if not is_orbit_closed(gen, grp):
                return f"{alias}: orbit of {_w(n, m)}"
    return None


Check = Callable[[int], "str | None"]

# (theorem id, applicability, check)
THEOREMS: tuple[tuple[str, Callable[[int], bool], Check], ...] = (
    ("base_code", lambda n: n >= 1, check_base_code),
    ("weight_one_code", lambda n: n >= 2 and n % 2 == 0, check_weight_one_code),
    ("even_freeness", lambda n: n >= 2 and n % 2 == 0, check_even_freeness),
    ("odd_freeness", lambda n: n >= 3 and n % 2 == 1, check_odd_freeness),
    ("complete_sset_nonexistence", lambda n: n >= 2, check_complete_sset_nonexistence),
    ("complete_sset_proper", lambda n: n >= 1, check_complete_sset_proper),
    ("power_proposition", lambda n: any(True for _ in power_instances(n)), check_power_proposition),
    ("square_identity", lambda n: n >= 3, check_square_identity),
    ("g_subgroups", lambda n: n >= 2, check_g_subgroups),
    ("xfd_codes", lambda n: n >= 2, check_xfd_codes),
    ("delta_partition", lambda n: n >= 2, check_delta_partition),
    ("invariant_subgroups", lambda n: n >= 2, check_invariant_subgroups),
    ("invariant_ordering", lambda n: n >= 2, check_invariant_ordering),
    ("sym", lambda n: n >= 2, check_sym),
    ("sym_equals_invariant", lambda n: n >= 3 and n % 2 == 1, check_sym_equals_invariant),
    ("combined_orbit_closure", lambda n: n >= 2, check_combined_orbit_closure),
    ("sym_lemma", lambda n: n >= 2, check_sym_lemma),
    ("menos_uno_invariant", lambda n: n >= 3, check_menos_uno),
    ("safe_prime", lambda n: _is_prime(n) and n >= 7 and _is_prime((n - 1) // 2) and (n - 1) // 2 % 2 == 1, check_safe_prime),
    ("basic_s_subgroups", lambda n: 2 <= n <= 10, check_basic_s_subgroups),
)


def theorem_ids() -> list[str]:
    return [t[0] for t in THEOREMS]


def theorem_suite(n: int, only: list[str] | None = None) -> list[TheoremResult]:
    """Run every applicable check at length n, in a fixed order."""
    results = []
    for tid, applies, check in THEOREMS:
        if only is not None and tid not in only:
            continue
        if not applies(n):
            continue
        witness = check(n)
        results.append(TheoremResult(tid, n, "pass" if witness is None else "fail", witness))
    return results
