"""
Bounded brute-force deciders, used as ground truth in tests.

Nothing here uses summit sets, centralizer structure or the double-coset pipeline; the only shared machinery
is the word problem, and even that is cross-checked for n ≤ 3 by the (faithful) Burau representation over
Laurent polynomials. A "No" from a bounded search means "no witness up to the bound" and is conclusive only
when the caller knows every witness would be short, or when an invariant settles it.
"""
from __future__ import annotations

import dataclasses
import random
from typing import Iterator, Sequence

from .braid import BraidError, BraidWord, Permutation, invert, multiply, permutation_of
from .garside import GarsideNormalForm, normal_form

MAX_LEN_GUARD = 12
DEFAULT_ELEMENT_BUDGET = 400_000


class OracleBudgetExceeded(RuntimeError):
    pass


@dataclasses.dataclass(frozen=True)
class OracleResult:
    found: bool
    witness: tuple[BraidWord, ...] = ()
    conclusive: bool = True
    reason: str = ""


def enumerate_words(n: int, gens: Sequence[BraidWord], max_len: int,
                    budget: int = DEFAULT_ELEMENT_BUDGET) -> Iterator[BraidWord]:
    """
    All products of at most ``max_len`` factors from gens ∪ gens⁻¹, one word per group element,
    in breadth-first order (so each element comes with a shortest product).
    """
    if max_len > MAX_LEN_GUARD:
        raise OracleBudgetExceeded(f"max_len {max_len} exceeds guard {MAX_LEN_GUARD}")
    if any(g.n != n for g in gens):
        raise BraidError("generators live in a different braid group")
    steps = [*gens, *(invert(g) for g in gens)]
    start = BraidWord.identity(n)
    seen: set[GarsideNormalForm] = {normal_form(start)}
    yield start
    frontier = [start]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for s in steps:
                v = multiply(w, s)
                key = normal_form(v)
                if key in seen:
                    continue
                seen.add(key)
                if len(seen) > budget:
                    raise OracleBudgetExceeded(f"more than {budget} elements")
                nxt.append(v)
                yield v
        frontier = nxt
        if not frontier:
            return


def all_generators(n: int) -> list[BraidWord]:
    return [BraidWord(n, (i,)) for i in range(1, n)]


def brute_membership(u: BraidWord, gens: Sequence[BraidWord], max_len: int) -> OracleResult:
    target = normal_form(u)
    for w in enumerate_words(u.n, gens, max_len):
        if normal_form(w) == target:
            return OracleResult(True, (w,))
    return OracleResult(False, conclusive=False, reason=f"no product of length <= {max_len}")


def _invariants_rule_out(s: Sequence[BraidWord], t: Sequence[BraidWord]) -> str:
    for a, b in zip(s, t):
        if a.exponent_sum() != b.exponent_sum():
            return "exponent sums differ"
        if permutation_of(a).cycle_type() != permutation_of(b).cycle_type():
            return "permutation cycle types differ"
    return ""


def brute_simultaneous_conjugator(s: Sequence[BraidWord], t: Sequence[BraidWord], max_len: int,
                                  budget: int = DEFAULT_ELEMENT_BUDGET) -> OracleResult:
    """Search x of length ≤ max_len with x⁻¹ s_i x = t_i for all i."""
    if len(s) != len(t):
        raise BraidError("component counts differ")
    reason = _invariants_rule_out(s, t)
    if reason:
        return OracleResult(False, conclusive=True, reason=reason)
    n = s[0].n
    targets = [normal_form(b) for b in t]
    for x in enumerate_words(n, all_generators(n), max_len, budget):
        xi = invert(x)
        if all(normal_form(multiply(xi, a, x)) == b for a, b in zip(s, targets)):
            return OracleResult(True, (x,))
    return OracleResult(False, conclusive=False, reason=f"no conjugator of length <= {max_len}")


def brute_conjugator(u: BraidWord, v: BraidWord, max_len: int) -> OracleResult:
    return brute_simultaneous_conjugator([u], [v], max_len)


def _permutation_group(gens: Sequence[Permutation], n: int) -> set[Permutation]:
    group = {Permutation.identity(n)}
    frontier = list(group)
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                q = p * s
                if q not in group:
                    group.add(q)
                    nxt.append(q)
        frontier = nxt
    return group


def permutation_obstruction(instance) -> bool:
    """
    True when ν(g') lies outside ν(A)·ν(g)·ν(B) in S_n, which proves g' ∉ A·g·B.
    """
    n = instance.n
    pa = _permutation_group([permutation_of(w) for w in instance.A.generators()], n)
    pb = _permutation_group([permutation_of(w) for w in instance.B.generators()], n)
    pg, target = permutation_of(instance.g), permutation_of(instance.g_prime)
    return all(a * pg * b != target for a in pa for b in pb)


def brute_dcp(instance, max_len: int, budget: int = DEFAULT_ELEMENT_BUDGET) -> OracleResult:
    """
    Search a ∈ A, b ∈ B, each a product of at most ``max_len`` subgroup generators, with a g b = g'.

    Meets in the middle: tabulate g·b, then look up a⁻¹·g'. A permutation obstruction makes "no" conclusive.
    """
    if permutation_obstruction(instance):
        return OracleResult(False, conclusive=True, reason="permutation double coset excludes g'")
    n = instance.n
    g, gp = instance.g, instance.g_prime
    right: dict[GarsideNormalForm, BraidWord] = {}
    for b in enumerate_words(n, instance.B.generators(), max_len, budget):
        right.setdefault(normal_form(multiply(g, b)), b)
    for a in enumerate_words(n, instance.A.generators(), max_len, budget):
        b = right.get(normal_form(multiply(invert(a), gp)))
        if b is not None:
            return OracleResult(True, (a, b))
    return OracleResult(False, conclusive=False, reason=f"no witness with factors of length <= {max_len}")


# ----------------------------------------------------------------------------------------------------------
# Burau representation, exact over Z[t, t⁻¹]; faithful for n ≤ 3.

Laurent = dict  # exponent -> integer coefficient


def _lp_add(p: Laurent, q: Laurent) -> Laurent:
    r = dict(p)
    for e, c in q.items():
        r[e] = r.get(e, 0) + c
        if r[e] == 0:
            del r[e]
    return r


def _lp_mul(p: Laurent, q: Laurent) -> Laurent:
    r: Laurent = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            r[e] = r.get(e, 0) + c1 * c2
            if r[e] == 0:
                del r[e]
    return r


def _generator_matrix(n: int, x: int) -> list[list[Laurent]]:
    m = [[({0: 1} if i == j else {}) for j in range(n)] for i in range(n)]
    i = abs(x) - 1
    if x > 0:
        block = [[{0: 1, 1: -1}, {1: 1}], [{0: 1}, {}]]
    else:
        block = [[{}, {0: 1}], [{-1: 1}, {0: 1, -1: -1}]]
    for a in range(2):
        for b in range(2):
            m[i + a][i + b] = block[a][b]
    return m


def burau(u: BraidWord) -> tuple[tuple[tuple[tuple[int, int], ...], ...], ...]:
    """The unreduced Burau matrix of u, as a hashable table of sorted (exponent, coefficient) pairs."""
    n = u.n
    m = [[({0: 1} if i == j else {}) for j in range(n)] for i in range(n)]
    for x in u.letters:
        g = _generator_matrix(n, x)
        prod = []
        for i in range(n):
            row = []
            for j in range(n):
                acc: Laurent = {}
                for k in range(n):
                    if m[i][k] and g[k][j]:
                        acc = _lp_add(acc, _lp_mul(m[i][k], g[k][j]))
                row.append(acc)
            prod.append(row)
        m = prod
    return tuple(tuple(tuple(sorted(entry.items())) for entry in row) for row in m)


def burau_equal(u: BraidWord, v: BraidWord) -> bool:
    return burau(u) == burau(v)


# ----------------------------------------------------------------------------------------------------------

@dataclasses.dataclass
class DoubleCentralizerReport:
    n: int
    interval: object
    samples: int = 0
    commuting: int = 0
    members: int = 0
    violations: list[BraidWord] = dataclasses.field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def brute_double_centralizer(n: int, interval, samples: int, max_len: int, seed: int = 0) -> DoubleCentralizerReport:
    """
    Sample braids and check that each one commuting with the whole centralizer generating set of the block lies
    in ⟨Δ²⟩·B_[k,l].

    Samples mix uniformly random words, random elements of ⟨Δ²⟩·B_[k,l] (which must commute) and those
    elements multiplied by a random generator or conjugated (which mostly must not).
    """
    from .centralizer import centralizer_generators, commutes_with_all
    from .garside import fundamental_power
    from .parabolic import membership_in_center_times_parabolic

    rng = random.Random(seed)
    cgens = centralizer_generators(n, interval)
    block = list(range(interval.k, interval.l))
    report = DoubleCentralizerReport(n, interval)

    def random_word(letters, length):
        return BraidWord(n, tuple(rng.choice((1, -1)) * rng.choice(letters) for _ in range(length)))

    for idx in range(samples):
        kind = idx % 4
        length = rng.randint(0, max_len)
        if kind == 0:
            w = random_word(range(1, n), length)
        else:
            h = random_word(block, length)
            w = multiply(fundamental_power(n, 2 * rng.randint(-1, 1)), h)
            if kind == 2:
                w = multiply(w, random_word(range(1, n), 1))
            elif kind == 3:
                c = random_word(range(1, n), rng.randint(1, 3))
                w = multiply(invert(c), w, c)
        report.samples += 1
        if not commutes_with_all(w, cgens):
            continue
        report.commuting += 1
        if membership_in_center_times_parabolic(w, interval):
            report.members += 1
        else:
            report.violations.append(w)
    return report
