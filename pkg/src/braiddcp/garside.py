"""
Left (Thurston) normal forms in B_n and the word problem.

Simple elements (permutation braids) are stored as 0-indexed permutation tables ``x`` where ``x[j]`` is the
final position of the strand starting at position j. The product ``xy`` of two simples, when it is again
simple, has table ``(y[x[0]], ..., y[x[n-1]])``.

A braid is held as Δ^p x_1 ⋯ x_l with every x_i a proper simple (neither the identity nor Δ) and each pair
(x_i, x_{i+1}) left-weighted: every atom that left-divides x_{i+1} right-divides x_i. This form is unique, so
two words are equal in B_n exactly when their normal forms coincide.

Nothing here enumerates S_n; all arithmetic is done on the tables, so it works for any moderate n.
"""
from __future__ import annotations

import dataclasses
import functools
from typing import Iterable

from .braid import BraidError, BraidWord, Permutation, invert, multiply

Simple = tuple[int, ...]


# ----------------------------------------------------------------------------------------------------------
# Arithmetic on permutation tables.

@functools.cache
def identity_simple(n: int) -> Simple:
    return tuple(range(n))


@functools.cache
def delta_simple(n: int) -> Simple:
    return tuple(range(n - 1, -1, -1))


@functools.cache
def atom(n: int, i: int) -> Simple:
    """The table of σ_i (1-based i)."""
    x = list(range(n))
    x[i - 1], x[i] = i, i - 1
    return tuple(x)


def compose(x: Simple, y: Simple) -> Simple:
    return tuple(y[v] for v in x)


def inverse_table(x: Simple) -> Simple:
    inv = [0] * len(x)
    for j, v in enumerate(x):
        inv[v] = j
    return tuple(inv)


def starting_set(x: Simple) -> frozenset[int]:
    """Atoms σ_i (1-based) that left-divide x: the strands at positions i, i+1 cross."""
    return frozenset(i + 1 for i in range(len(x) - 1) if x[i] > x[i + 1])


def finishing_set(x: Simple) -> frozenset[int]:
    """Atoms σ_i (1-based) that right-divide x: the strands ending at positions i, i+1 crossed."""
    return starting_set(inverse_table(x))


def simple_length(x: Simple) -> int:
    n = len(x)
    return sum(1 for a in range(n) for b in range(a + 1, n) if x[a] > x[b])


@functools.cache
def tau(x: Simple) -> Simple:
    """Δ⁻¹ x Δ, which is also Δ x Δ⁻¹."""
    n = len(x)
    return tuple(n - 1 - x[n - 1 - j] for j in range(n))


def tau_power(x: Simple, k: int) -> Simple:
    return tau(x) if k % 2 else x


def right_complement(x: Simple) -> Simple:
    """The simple r with x r = Δ."""
    return compose(inverse_table(x), delta_simple(len(x)))


def left_complement(x: Simple) -> Simple:
    """The simple c with c x = Δ."""
    return compose(delta_simple(len(x)), inverse_table(x))


def _mul_atom_right(x: Simple, i: int) -> Simple:
    """x σ_i as a table (caller guarantees the result is simple)."""
    return tuple(i if v == i - 1 else i - 1 if v == i else v for v in x)


def _strip_atom_left(y: Simple, i: int) -> Simple:
    """σ_i⁻¹ y as a table (caller guarantees σ_i left-divides y)."""
    y = list(y)
    y[i - 1], y[i] = y[i], y[i - 1]
    return tuple(y)


@functools.cache
def renormalize_pair(x: Simple, y: Simple) -> tuple[Simple, Simple]:
    """
    Rewrite the product xy as a left-weighted pair (x', y') with x' y' = x y.

    Atoms are moved from the front of y to the back of x while some atom starts y but does not finish x.
    """
    while True:
        candidates = starting_set(y) - finishing_set(x)
        if not candidates:
            return x, y
        i = min(candidates)
        x = _mul_atom_right(x, i)
        y = _strip_atom_left(y, i)


def is_left_weighted(x: Simple, y: Simple) -> bool:
    return starting_set(y) <= finishing_set(x)


def left_gcd(x: Simple, y: Simple) -> Simple:
    """Greatest common left divisor of two simple elements."""
    g = identity_simple(len(x))
    while True:
        common = starting_set(x) & starting_set(y)
        if not common:
            return g
        i = min(common)
        g = _mul_atom_right(g, i)
        x = _strip_atom_left(x, i)
        y = _strip_atom_left(y, i)


def simple_left_divides(a: Simple, b: Simple) -> bool:
    return left_gcd(a, b) == a


@functools.cache
def simple_word(x: Simple) -> tuple[int, ...]:
    """A positive reduced word for the simple element with table x."""
    n = len(x)
    at = list(range(n))
    letters = []
    changed = True
    while changed:
        changed = False
        for p in range(n - 1):
            if x[at[p]] > x[at[p + 1]]:
                at[p], at[p + 1] = at[p + 1], at[p]
                letters.append(p + 1)
                changed = True
    return tuple(letters)


def simple_support(x: Simple) -> frozenset[int]:
    """1-based positions moved by x."""
    return frozenset(j + 1 for j, v in enumerate(x) if v != j)


@dataclasses.dataclass(frozen=True)
class PermutationBraid:
    """A positive braid in which every pair of strands crosses at most once."""
    n: int
    perm: Permutation

    @classmethod
    def from_table(cls, x: Simple) -> PermutationBraid:
        return cls(len(x), Permutation(tuple(v + 1 for v in x)))

    @property
    def table(self) -> Simple:
        return tuple(v - 1 for v in self.perm.images)

    def word(self) -> BraidWord:
        return BraidWord(self.n, simple_word(self.table))

    def __mul__(self, other: PermutationBraid) -> PermutationBraid:
        x, y = self.table, other.table
        z = compose(x, y)
        if simple_length(z) != simple_length(x) + simple_length(y):
            raise BraidError("product of these permutation braids is not simple")
        return PermutationBraid.from_table(z)

    def left_gcd(self, other: PermutationBraid) -> PermutationBraid:
        return PermutationBraid.from_table(left_gcd(self.table, other.table))

    def complement(self) -> PermutationBraid:
        """The right complement x⁻¹Δ."""
        return PermutationBraid.from_table(right_complement(self.table))


# ----------------------------------------------------------------------------------------------------------
# Normal forms.

@dataclasses.dataclass(frozen=True)
class GarsideNormalForm:
    n: int
    delta_power: int
    factors: tuple[Simple, ...] = ()

    @property
    def inf(self) -> int:
        return self.delta_power

    @property
    def sup(self) -> int:
        return self.delta_power + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def is_delta_power(self) -> bool:
        return not self.factors

    def to_word(self) -> BraidWord:
        d = simple_word(delta_simple(self.n))
        if self.delta_power >= 0:
            letters = list(d * self.delta_power)
        else:
            letters = [-x for x in reversed(d)] * -self.delta_power
        for x in self.factors:
            letters.extend(simple_word(x))
        return BraidWord(self.n, tuple(letters))

    def simple_factors(self) -> list[PermutationBraid]:
        return [PermutationBraid.from_table(x) for x in self.factors]

    def __mul__(self, other: GarsideNormalForm) -> GarsideNormalForm:
        return nf_multiply(self, other)

    def __invert__(self) -> GarsideNormalForm:
        return nf_inverse(self)

    def __str__(self) -> str:
        body = " | ".join(" ".join(map(str, simple_word(x))) for x in self.factors)
        return f"D^{self.delta_power}" + (f" . {body}" if body else "")


def nf_identity(n: int) -> GarsideNormalForm:
    return GarsideNormalForm(n, 0, ())


def nf_delta_power(n: int, p: int) -> GarsideNormalForm:
    if n == 1:
        return nf_identity(1)
    return GarsideNormalForm(n, p, ())


def _finish(n: int, p: int, factors: list[Simple]) -> GarsideNormalForm:
    d, e = delta_simple(n), identity_simple(n)
    lo, hi = 0, len(factors)
    while lo < hi and factors[lo] == d:
        lo += 1
    while hi > lo and factors[hi - 1] == e:
        hi -= 1
    return GarsideNormalForm(n, p + lo, tuple(factors[lo:hi]))


def nf_right_mul_simple(a: GarsideNormalForm, s: Simple) -> GarsideNormalForm:
    """Normal form of a·s, by combing s backwards through the factors."""
    if a.n == 1:
        return a
    factors = list(a.factors)
    factors.append(s)
    for i in range(len(factors) - 2, -1, -1):
        x, y = renormalize_pair(factors[i], factors[i + 1])
        if x == factors[i]:
            break
        factors[i], factors[i + 1] = x, y
    return _finish(a.n, a.delta_power, factors)


def nf_left_mul_simple(s: Simple, a: GarsideNormalForm) -> GarsideNormalForm:
    """Normal form of s·a, by combing s forwards through the factors."""
    if a.n == 1:
        return a
    p = a.delta_power
    factors = [tau_power(s, p), *a.factors]
    for i in range(len(factors) - 1):
        x, y = renormalize_pair(factors[i], factors[i + 1])
        if y == factors[i + 1]:
            break
        factors[i], factors[i + 1] = x, y
    return _finish(a.n, p, factors)


def nf_right_mul_simple_inverse(a: GarsideNormalForm, s: Simple) -> GarsideNormalForm:
    """Normal form of a·s⁻¹, using s⁻¹ = (s⁻¹Δ)Δ⁻¹."""
    if a.n == 1:
        return a
    b = nf_right_mul_simple(a, right_complement(s))
    return GarsideNormalForm(a.n, b.delta_power - 1, tuple(tau(x) for x in b.factors))


def nf_left_mul_simple_inverse(s: Simple, a: GarsideNormalForm) -> GarsideNormalForm:
    """Normal form of s⁻¹·a, using s⁻¹ = Δ⁻¹(Δs⁻¹)."""
    if a.n == 1:
        return a
    b = nf_left_mul_simple(left_complement(s), a)
    return GarsideNormalForm(a.n, b.delta_power - 1, b.factors)


def nf_multiply(a: GarsideNormalForm, b: GarsideNormalForm) -> GarsideNormalForm:
    if a.n != b.n:
        raise BraidError(f"mismatched strand counts {a.n} and {b.n}")
    if a.n == 1:
        return a
    result = GarsideNormalForm(a.n, a.delta_power + b.delta_power,
                               tuple(tau_power(x, b.delta_power) for x in a.factors))
    for y in b.factors:
        result = nf_right_mul_simple(result, y)
    return result


def nf_inverse(a: GarsideNormalForm) -> GarsideNormalForm:
    result = nf_delta_power(a.n, -a.delta_power)
    for x in a.factors:
        result = nf_left_mul_simple_inverse(x, result)
    return result


def nf_conjugate_by_simple(a: GarsideNormalForm, s: Simple) -> GarsideNormalForm:
    """s⁻¹ a s."""
    return nf_right_mul_simple(nf_left_mul_simple_inverse(s, a), s)


def nf_conjugate(a: GarsideNormalForm, x: GarsideNormalForm) -> GarsideNormalForm:
    """x⁻¹ a x."""
    return nf_multiply(nf_multiply(nf_inverse(x), a), x)


def normalize_factors(n: int, p: int, factors: Iterable[Simple]) -> GarsideNormalForm:
    """Normal form of Δ^p x_1 ⋯ x_k for arbitrary simples x_i (identities and Δ's allowed)."""
    result = nf_delta_power(n, p)
    for x in factors:
        result = nf_right_mul_simple(result, x)
    return result


def is_normal(a: GarsideNormalForm) -> bool:
    """Check the structural invariants of a normal form."""
    d, e = delta_simple(a.n), identity_simple(a.n)
    if any(x in (d, e) for x in a.factors):
        return False
    return all(is_left_weighted(x, y) for x, y in zip(a.factors, a.factors[1:]))


@functools.lru_cache(maxsize=1 << 16)
def _normal_form_cached(n: int, letters: tuple[int, ...]) -> GarsideNormalForm:
    result = nf_identity(n)
    for x in letters:
        if x > 0:
            result = nf_right_mul_simple(result, atom(n, x))
        else:
            result = nf_right_mul_simple_inverse(result, atom(n, -x))
    return result


def normal_form(u: BraidWord) -> GarsideNormalForm:
    """
    The left normal form of a braid word.

    >>> normal_form(BraidWord(3, (1, 2, 1)))
    GarsideNormalForm(n=3, delta_power=1, factors=())
    """
    return _normal_form_cached(u.n, u.letters)


def is_trivial(u: BraidWord) -> bool:
    return normal_form(u).is_identity()


def equal(u: BraidWord, v: BraidWord) -> bool:
    if u.n != v.n:
        raise BraidError(f"mismatched strand counts {u.n} and {v.n}")
    return normal_form(u) == normal_form(v)


def commute(u: BraidWord, v: BraidWord) -> bool:
    return equal(multiply(u, v), multiply(v, u))


def delta(n: int) -> BraidWord:
    """The half twist Δ_n as a positive word; Δ_1 is the empty word."""
    return BraidWord(n, simple_word(delta_simple(n)))


def fundamental_power(n: int, p: int) -> BraidWord:
    d = delta(n)
    return d ** p


def inf(u: BraidWord) -> int:
    return normal_form(u).inf


def sup(u: BraidWord) -> int:
    return normal_form(u).sup


def canonical_length(u: BraidWord) -> int:
    return normal_form(u).canonical_length


def reduce_word(u: BraidWord) -> BraidWord:
    """A canonical word for u, read off its normal form."""
    return normal_form(u).to_word()


def simple_elements_word(n: int, x: Simple) -> BraidWord:
    return BraidWord(n, simple_word(x))


def word_conjugate(u: BraidWord, x: BraidWord) -> BraidWord:
    """Reduced word for x⁻¹ u x."""
    return reduce_word(multiply(invert(x), u, x))
