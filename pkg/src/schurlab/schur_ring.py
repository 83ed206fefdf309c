"""Group algebra Z[Z_2^n] and the S-ring S(Z_2^n, S_n) of weight classes.

Public functions are indexed by weight ``a`` (the number of '+'), i.e. by
G_n(a).  The structure-constant formula is stated for the basic sets
T_i = G_n(n - i); that translation happens only inside
:func:`lambda_formula` and :func:`lambda_bruteforce`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Mapping

from schurlab.words import (
    Word,
    gf2_span,
    render_word,
    weight_class_masks,
)


class GroupAlgebraElement:
    """Integer combination of words; immutable after construction."""

    __slots__ = ("n", "_coeffs")

    def __init__(self, n: int, coeffs: Mapping[int, int] | None = None):
        self.n = n
        self._coeffs = {m: c for m, c in (coeffs or {}).items() if c}

    @classmethod
    def from_words(cls, words: Mapping[Word, int]) -> GroupAlgebraElement:
        ns = {w.n for w in words}
        if len(ns) != 1:
            raise ValueError("words must share one length")
        return cls(ns.pop(), {w.mask: c for w, c in words.items()})

    @property
    def coeffs(self) -> dict[Word, int]:
        return {Word(self.n, m): c for m, c in sorted(self._coeffs.items())}

    def coeff(self, x: Word | int) -> int:
        return self._coeffs.get(x if isinstance(x, int) else x.mask, 0)

    def support(self) -> set[int]:
        return set(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._coeffs.items())))

    def _check(self, other: GroupAlgebraElement) -> None:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} != {other.n}")

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        self._check(other)
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out.get(m, 0) + c
        return GroupAlgebraElement(self.n, out)

    def scale(self, k: int) -> GroupAlgebraElement:
        return GroupAlgebraElement(self.n, {m: k * c for m, c in self._coeffs.items()})

    def __rmul__(self, k: int) -> GroupAlgebraElement:
        return self.scale(k)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return algebra_mul(self, other)

    def __repr__(self) -> str:
        terms = ", ".join(f"{c}*{render_word(Word(self.n, m))}" for m, c in sorted(self._coeffs.items()))
        return f"GroupAlgebraElement(n={self.n}, {{{terms}}})"

    def to_json(self) -> list[dict]:
        return [
            {"word": render_word(Word(self.n, m)), "coeff": c}
            for m, c in sorted(self._coeffs.items())
        ]


def simple_quantity(words: Iterable[Word]) -> GroupAlgebraElement:
    ws = list(words)
    if not ws:
        raise ValueError("simple quantity of an empty set")
    ns = {w.n for w in ws}
    if len(ns) != 1:
        raise ValueError("words must share one length")
    return GroupAlgebraElement(ns.pop(), {w.mask: 1 for w in ws})


def class_quantity(n: int, a: int) -> GroupAlgebraElement:
    """Simple quantity of the weight class G_n(a)."""
    return GroupAlgebraElement(n, {m: 1 for m in weight_class_masks(n, a)})


def algebra_mul(p: GroupAlgebraElement, q: GroupAlgebraElement) -> GroupAlgebraElement:
    """Exact convolution: coefficient of w is the sum of p(u) q(v) over u v = w."""
    p._check(q)
    out: dict[int, int] = {}
    qitems = sorted(q._coeffs.items())
    for u, cu in sorted(p._coeffs.items()):
        for v, cv in qitems:
            w = u ^ v
            out[w] = out.get(w, 0) + cu * cv
    return GroupAlgebraElement(p.n, out)


def in_class_basis(p: GroupAlgebraElement) -> dict[int, int]:
    """Express ``p`` as sum over a of coeff_a * G_n(a); raises if it is not in that span."""
    out: dict[int, int] = {}
    for a in range(p.n + 1):
        vals = {p.coeff(m) for m in weight_class_masks(p.n, a)}
        if len(vals) != 1:
            raise ValueError(f"coefficients not constant on G_{p.n}({a})")
        c = vals.pop()
        if c:
            out[a] = c
    return out


def _binom(m: int, t: int) -> int:
    return comb(m, t) if 0 <= t <= m else 0


def lambda_formula(n: int, i: int, j: int, k: int) -> int:
    """Structure constant lambda_{i,j,k} of S(Z_2^n, S_n) in the basis T_i = G_n(n - i)."""
    for v in (i, j, k):
        if not 0 <= v <= n:
            raise ValueError(f"index {v} outside [0, {n}]")
    if (i + j - k) % 2:
        return 0
    return _binom(k, (j - i + k) // 2) * _binom(n - k, (j + i - k) // 2)


def lambda_bruteforce(n: int, i: int, j: int, k: int, check_witness: bool = True) -> int:
    """Count factorizations w = u v with u in T_i, v in T_j for w in T_k, where T_i = G_n(n - i).

    With ``check_witness`` the count is computed for every w in T_k and must
    not depend on the choice.
    """
    if n > 16:
        raise ValueError("brute force limited to n <= 16")
    tk = list(weight_class_masks(n, n - k))
    if not tk:
        raise ValueError(f"empty basic set T_{k}")
    ti = list(weight_class_masks(n, n - i))
    # u in T_i and v = u w in T_j; T_j is the set of masks with j bits set
    witnesses = tk if check_witness else tk[:1]
    counts = {sum(1 for u in ti if (u ^ w).bit_count() == j) for w in witnesses}
    if len(counts) != 1:
        raise AssertionError(f"count depends on the witness in T_{k}: {sorted(counts)}")
    return counts.pop()


def _producto_cases(n: int, a: int, b: int) -> set[int] | None:
    if 0 <= a <= n // 2 and a <= b <= n - a:
        return {n - a - b + 2 * i for i in range(a + 1)}
    if n // 2 + 1 <= a <= n and n - a <= b <= a:
        return {a + b - n + 2 * i for i in range(n - a + 1)}
    return None


def gset_product_weights(n: int, a: int, b: int) -> set[int]:
    """Weights c with G_n(c) contained in G_n(a) G_n(b), from the two-case product formula.

    Pairs outside both displayed ranges are handled by commutativity (swap a, b);
    every pair in [0, n]^2 falls into one of the cases after at most one swap.
    """
    if not (0 <= a <= n and 0 <= b <= n):
        raise ValueError(f"weights must lie in [0, {n}]")
    out = _producto_cases(n, a, b)
    if out is None:
        out = _producto_cases(n, b, a)
    if out is None:  # pragma: no cover - ranges cover [0, n]^2 after swapping
        raise AssertionError(f"no case of the product formula applies to ({a}, {b})")
    return out


def gset_product_weights_bruteforce(n: int, a: int, b: int) -> set[int]:
    """Weights of all products u v with u in G_n(a), v in G_n(b), by enumeration."""
    bs = list(weight_class_masks(n, b))
    return {n - (u ^ v).bit_count() for u in weight_class_masks(n, a) for v in bs}


def parity_subgroup(n: int, parity: str) -> list[Word]:
    """Union of the weight classes of even ('even') or odd ('odd') weight."""
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    r = 0 if parity == "even" else 1
    return [Word(n, m) for m in range(1 << n) if (n - m.bit_count()) % 2 == r]


def parity_weights(n: int, parity: str) -> set[int]:
    r = 0 if parity == "even" else 1
    return {c for c in range(n + 1) if c % 2 == r}


@dataclass(frozen=True)
class CompleteSSetQuery:
    n: int
    candidate: frozenset[int]
    a: int

    def __post_init__(self) -> None:
        if not 0 <= self.a <= self.n or any(not 0 <= w <= self.n for w in self.candidate):
            raise ValueError(f"weights must lie in [0, {self.n}]")


@dataclass(frozen=True)
class CompleteSSetResult:
    complete: bool
    failing_pair: tuple[int, int] | None = None
    extension: int | None = None
    reason: str = ""


def is_complete_sset(q: CompleteSSetQuery) -> CompleteSSetResult:
    """Test the two conditions for a G_n(a)-complete S-set.

    The empty set is rejected: it satisfies both conditions vacuously whenever
    no square G_n(b)^2 reaches G_n(a), which would make every nonexistence
    statement false for a trivial reason.
    """
    n, a, s = q.n, q.a, sorted(q.candidate)
    if not s:
        return CompleteSSetResult(False, reason="empty")
    for x in s:
        for y in s:
            if y < x:
                continue
            if a not in gset_product_weights(n, x, y):
                return CompleteSSetResult(False, failing_pair=(x, y), reason="product misses target")
    for b in range(n + 1):
        if b in q.candidate:
            continue
        if a in gset_product_weights(n, b, b) and all(
            a in gset_product_weights(n, b, k) for k in s
        ):
            return CompleteSSetResult(False, extension=b, reason="extendable")
    return CompleteSSetResult(True)


def complete_ssets(n: int, a: int) -> list[frozenset[int]]:
    """All nonempty G_n(a)-complete S-sets, by exhaustive search over sets of weights.

    A complete S-set is a maximal clique of the graph on weights b with
    a in G(b)^2, adjacency being a in G(b)G(c); cliques are grown greedily
    from every subset, which is affordable for the small n used here.
    """
    nodes = [b for b in range(n + 1) if a in gset_product_weights(n, b, b)]
    adj = {b: {c for c in nodes if c != b and a in gset_product_weights(n, b, c)} for b in nodes}
    found: set[frozenset[int]] = set()
    for r in range(1, len(nodes) + 1):
        for sub in combinations(nodes, r):
            if all(y in adj[x] for x, y in combinations(sub, 2)):
                cand = frozenset(sub)
                if is_complete_sset(CompleteSSetQuery(n, cand, a)).complete:
                    found.add(cand)
    return sorted(found, key=lambda s: sorted(s))


def sset_generated_subgroup(n: int, weights: Iterable[int]) -> list[int]:
    """Masks of the subgroup generated by the union of the given weight classes."""
    gens = (m for w in weights for m in weight_class_masks(n, w))
    return gf2_span(gens)


def power_classes(n: int, a: int, e: int) -> set[int]:
    """Weight support of G_n(a)^e, by iterating the product formula."""
    if e < 1:
        raise ValueError("exponent must be at least 1")
    support = {a}
    for _ in range(e - 1):
        support = set().union(*(gset_product_weights(n, c, a) for c in support))
    return support
