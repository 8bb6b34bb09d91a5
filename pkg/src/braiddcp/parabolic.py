"""
Standard parabolic subgroups B_[k,l] = ⟨σ_k, ..., σ_{l-1}⟩ of B_n and their conjugates.

Also provides the shift map σ_i ↦ σ_{i+1}, the braids δ_r and τ_{p,q} that move a block of strands to
the front, membership testing, standardization of double-coset instances, and the splitting of an
element of ⟨Δ²⟩·B_[k,l] into its central power and its block part.
"""
from __future__ import annotations

import dataclasses

from .braid import BraidError, BraidWord, delete_strands, invert, multiply, parse_word
from .garside import (
    GarsideNormalForm,
    Simple,
    delta_simple,
    fundamental_power,
    left_gcd,
    nf_left_mul_simple_inverse,
    nf_delta_power,
    normal_form,
    simple_support,
)


class NotInZH(ValueError):
    """The braid is not of the form Δ^{2q}·h with h in the given block."""


@dataclasses.dataclass(frozen=True)
class Interval:
    k: int
    l: int

    def __post_init__(self):
        if not (1 <= self.k < self.l):
            raise BraidError(f"interval [{self.k},{self.l}] needs 1 <= k < l")

    @property
    def size(self) -> int:
        """Number of strands in the block, m = l - k + 1."""
        return self.l - self.k + 1

    def generators(self, n: int) -> list[BraidWord]:
        self.check(n)
        return [BraidWord(n, (i,)) for i in range(self.k, self.l)]

    def check(self, n: int) -> None:
        if self.l > n:
            raise BraidError(f"interval [{self.k},{self.l}] does not fit in B_{n}")

    def is_proper(self, n: int) -> bool:
        return self.size < n

    def __str__(self) -> str:
        return f"[{self.k},{self.l}]"


@dataclasses.dataclass(frozen=True)
class ParabolicSpec:
    """The subgroup alpha · B_[k,l] · alpha⁻¹ of B_n."""
    n: int
    alpha: BraidWord
    interval: Interval

    def __post_init__(self):
        if self.alpha.n != self.n:
            raise BraidError("conjugator lives in the wrong braid group")
        self.interval.check(self.n)

    @classmethod
    def standard(cls, n: int, k: int, l: int) -> ParabolicSpec:
        return cls(n, BraidWord.identity(n), Interval(k, l))

    @property
    def size(self) -> int:
        return self.interval.size

    def generators(self) -> list[BraidWord]:
        return [multiply(self.alpha, s, invert(self.alpha)) for s in self.interval.generators(self.n)]

    def contains(self, u: BraidWord) -> bool:
        return parabolic_membership(multiply(invert(self.alpha), u, self.alpha), self.interval)

    def to_text(self) -> str:
        return f"{self.n}; {self.interval.k} {self.interval.l}; {self.alpha}"


def parse_parabolic_spec(text: str, n: int | None = None) -> ParabolicSpec:
    """
    Parse ``"n; k l; <alpha word>"``. The leading ``n;`` may be dropped when n is supplied.

    >>> parse_parabolic_spec("4; 2 3; 1").interval
    Interval(k=2, l=3)
    """
    parts = [p.strip() for p in text.split(";")]
    if len(parts) == 3:
        spec_n = int(parts[0])
        if n is not None and spec_n != n:
            raise BraidError(f"spec is for B_{spec_n}, instance is B_{n}")
        n = spec_n
        parts = parts[1:]
    if len(parts) != 2 or n is None:
        raise BraidError(f"malformed parabolic spec {text!r}")
    bounds = parts[0].split()
    if len(bounds) != 2:
        raise BraidError(f"malformed interval {parts[0]!r}")
    interval = Interval(int(bounds[0]), int(bounds[1]))
    return ParabolicSpec(n, parse_word(parts[1], n), interval)


# ----------------------------------------------------------------------------------------------------------

def small_delta(r: int, n: int | None = None) -> BraidWord:
    """δ_r = σ_{r-1} ⋯ σ_2 σ_1, optionally embedded in B_n."""
    if r < 1:
        raise BraidError("small_delta needs r >= 1")
    return BraidWord(n if n is not None else r, tuple(range(r - 1, 0, -1)))


def shift(u: BraidWord, s: int, target_n: int) -> BraidWord:
    """Apply σ_i ↦ σ_{i+s} letterwise, landing in B_{target_n}."""
    if s < 0:
        raise BraidError("shift amount must be nonnegative")
    letters = tuple(x + s if x > 0 else x - s for x in u.letters)
    if any(abs(x) > target_n - 1 for x in letters):
        raise BraidError(f"shifted word does not fit in B_{target_n}")
    return BraidWord(target_n, letters)


def tau_word(p: int, q: int, n: int) -> BraidWord:
    """
    τ_{p,q} = δ_{p+1} ∂(δ_{p+1}) ⋯ ∂^{q-1}(δ_{p+1}); τ_{p,0} is the identity.

    Its permutation sends the block 1..p to q+1..q+p and p+1..p+q to 1..q.

    >>> tau_word(1, 2, 3).letters
    (1, 2)
    """
    if p < 1 or q < 0:
        raise BraidError("tau needs p >= 1 and q >= 0")
    if p + q > n:
        raise BraidError(f"tau({p},{q}) does not fit in B_{n}")
    d = small_delta(p + 1, p + 1) if q else None
    letters: list[int] = []
    for t in range(q):
        letters.extend(shift(d, t, n).letters)
    return BraidWord(n, tuple(letters))


# ----------------------------------------------------------------------------------------------------------
# Membership.

def _positive_parts(a: GarsideNormalForm) -> tuple[list[Simple], list[Simple]]:
    """Split a normal form into positive numerator and denominator factor lists, a = den⁻¹ · num."""
    d = delta_simple(a.n)
    if a.delta_power >= 0:
        return [d] * a.delta_power + list(a.factors), []
    return list(a.factors), [d] * -a.delta_power


def irreducible_fraction(u: BraidWord) -> tuple[GarsideNormalForm, GarsideNormalForm]:
    """
    Positive braids (den, num) with u = den⁻¹ · num and no nontrivial common left divisor.
    """
    a = normal_form(u)
    n = a.n
    if a.delta_power >= 0:
        return nf_delta_power(n, 0), a
    num = GarsideNormalForm(n, 0, a.factors)
    den = nf_delta_power(n, -a.delta_power)
    ident = tuple(range(n))
    while not num.is_identity() and not den.is_identity():
        g = left_gcd(_first_factor(num), _first_factor(den))
        if g == ident:
            break
        num = nf_left_mul_simple_inverse(g, num)
        den = nf_left_mul_simple_inverse(g, den)
    return den, num


def _first_factor(a: GarsideNormalForm) -> Simple:
    # a is positive: its first simple factor is Δ when inf > 0
    return delta_simple(a.n) if a.delta_power > 0 else a.factors[0]


def _supported_in(a: GarsideNormalForm, lo: int, hi: int) -> bool:
    factors = list(a.factors)
    if a.delta_power:
        factors.append(delta_simple(a.n))
    return all(simple_support(x) <= set(range(lo, hi + 1)) for x in factors)


def parabolic_membership(u: BraidWord, interval: Interval) -> bool:
    """True iff u lies in B_[k,l]."""
    interval.check(u.n)
    den, num = irreducible_fraction(u)
    return _supported_in(den, interval.k, interval.l) and _supported_in(num, interval.k, interval.l)


def decompose_center_times_parabolic(u: BraidWord, interval: Interval) -> tuple[int, BraidWord]:
    """
    Split u = Δ_n^{2q} · h with h in B_[k,l]. Raises NotInZH when no such splitting exists.

    Erasing all block strands but the last one kills h and leaves Δ_{n-m+1}^{2q}, which fixes q.
    """
    n = u.n
    interval.check(n)
    if not interval.is_proper(n):
        raise BraidError("decomposition needs a proper block")
    image = delete_strands(u, range(interval.k, interval.l))
    nf = normal_form(image)
    if nf.factors:
        raise NotInZH(f"strand-deleted image {nf} is not a power of Δ")
    if image.n == 1:
        q = 0
    elif nf.delta_power % 2:
        raise NotInZH(f"strand-deleted image is an odd power Δ^{nf.delta_power}")
    else:
        q = nf.delta_power // 2
    h = multiply(fundamental_power(n, -2 * q), u)
    if not parabolic_membership(h, interval):
        raise NotInZH(f"Δ^{-2 * q}·u is not in B{interval}")
    return q, normal_form(h).to_word()


def membership_in_center_times_parabolic(u: BraidWord, interval: Interval) -> bool:
    try:
        decompose_center_times_parabolic(u, interval)
    except NotInZH:
        return False
    return True


# ----------------------------------------------------------------------------------------------------------
# Standardization of double-coset instances.

@dataclasses.dataclass(frozen=True)
class StandardizedDCP:
    n: int
    m_A: int
    m_B: int
    g1: BraidWord
    g1_prime: BraidWord
    tau_A: BraidWord
    tau_B: BraidWord
    back_A: BraidWord   # alpha · tau_A⁻¹
    back_B: BraidWord   # beta · tau_B⁻¹

    def block_A(self) -> Interval:
        return Interval(1, self.m_A)

    def block_B(self) -> Interval:
        return Interval(1, self.m_B)

    def transport(self, a1: BraidWord, b1: BraidWord) -> tuple[BraidWord, BraidWord]:
        """Carry a standardized witness (a1, b1) back to the original subgroups."""
        a = multiply(self.back_A, a1, invert(self.back_A))
        b = multiply(self.back_B, b1, invert(self.back_B))
        return a, b

    def standardize_pair(self, a: BraidWord, b: BraidWord) -> tuple[BraidWord, BraidWord]:
        """Carry an original witness (a, b) to the standardized instance."""
        a1 = multiply(invert(self.back_A), a, self.back_A)
        b1 = multiply(invert(self.back_B), b, self.back_B)
        return a1, b1


def standardize_instance(A: ParabolicSpec, B: ParabolicSpec, g: BraidWord, g_prime: BraidWord) -> StandardizedDCP:
    """
    Move both subgroups to leading blocks B_[1,m_A], B_[1,m_B].

    g1 = τ_A α⁻¹ g β τ_B⁻¹ with τ_A = τ_{m_A, k_A - 1}, and likewise for g1'.
    """
    n = A.n
    if B.n != n or g.n != n or g_prime.n != n:
        raise BraidError("instance words live in different braid groups")
    tau_A = tau_word(A.size, A.interval.k - 1, n)
    tau_B = tau_word(B.size, B.interval.k - 1, n)
    back_A = multiply(A.alpha, invert(tau_A))
    back_B = multiply(B.alpha, invert(tau_B))
    g1 = multiply(invert(back_A), g, back_B)
    g1_prime = multiply(invert(back_A), g_prime, back_B)
    return StandardizedDCP(n, A.size, B.size, g1, g1_prime, tau_A, tau_B, back_A, back_B)
