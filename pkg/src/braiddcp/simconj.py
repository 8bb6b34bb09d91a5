"""
Conjugacy and simultaneous conjugacy in B_n, with witnesses.

Orientation: a conjugator x for (s, t) always satisfies x⁻¹ s_i x = t_i for every component i.

The decision procedure has two stages.

1. Both tuples are pushed down in the complexity (-Σ inf, Σ sup) by conjugating with simple elements and
   their inverses; ``summit_tuple`` does this to exhaustion, the solver does it within a small budget.
2. A breadth-first search then runs over the tuples conjugate to s whose components all stay inside the
   inf/sup window spanned by the two reduced tuples, moving by positive simple conjugators. If x is any
   positive conjugator between the reduced tuples, then for each component the set of positive y with
   inf(s_i^y) ≥ r and sup(s_i^y) ≤ r' is closed under left gcd, so conjugating by x ∧ Δ stays in the window.
   Repeating this walks from s to t, hence the search is complete and its window is a finite set.
"""
from __future__ import annotations

import collections
import dataclasses
import functools
import itertools
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from .braid import BraidError, BraidWord, Permutation, invert, multiply, parse_word, permutation_of
from .garside import (
    GarsideNormalForm,
    Simple,
    nf_conjugate_by_simple,
    nf_left_mul_simple,
    nf_right_mul_simple_inverse,
    normal_form,
    simple_word,
    tau_power,
)

DEFAULT_BUDGET = 200_000
REDUCE_BUDGET = 400

NFTuple = tuple[GarsideNormalForm, ...]


class Inconclusive(RuntimeError):
    """The search exceeded its node budget before reaching a decision."""

    def __init__(self, budget: int, stage: str = "search"):
        super().__init__(f"{stage} exceeded node budget {budget}")
        self.budget = budget
        self.stage = stage


@dataclasses.dataclass(frozen=True)
class ConjTuple:
    n: int
    components: tuple[BraidWord, ...]

    def __post_init__(self):
        if not self.components:
            raise BraidError("a conjugation tuple needs at least one component")
        if any(c.n != self.n for c in self.components):
            raise BraidError("tuple components live in different braid groups")

    @classmethod
    def of(cls, *words: BraidWord) -> ConjTuple:
        return cls(words[0].n, tuple(words))

    def __len__(self) -> int:
        return len(self.components)

    def normal_forms(self) -> NFTuple:
        return tuple(normal_form(c) for c in self.components)

    def conjugate(self, x: BraidWord) -> ConjTuple:
        return ConjTuple(self.n, tuple(multiply(invert(x), c, x) for c in self.components))


@dataclasses.dataclass(frozen=True)
class SummitNode:
    tuple: NFTuple
    conjugator: BraidWord

    @property
    def complexity(self) -> tuple[int, int]:
        return complexity(self.tuple)

    def words(self) -> list[BraidWord]:
        return [a.to_word() for a in self.tuple]


# ----------------------------------------------------------------------------------------------------------

@functools.lru_cache(maxsize=1 << 18)
def _conj_pos(a: GarsideNormalForm, s: Simple) -> GarsideNormalForm:
    return nf_conjugate_by_simple(a, s)


@functools.lru_cache(maxsize=1 << 18)
def _conj_neg(a: GarsideNormalForm, s: Simple) -> GarsideNormalForm:
    # s a s⁻¹
    return nf_right_mul_simple_inverse(nf_left_mul_simple(s, a), s)


@functools.cache
def nontrivial_simples(n: int) -> tuple[Simple, ...]:
    ident = tuple(range(n))
    return tuple(p for p in itertools.permutations(range(n)) if p != ident)


def complexity(t: NFTuple) -> tuple[int, int]:
    return (-sum(a.inf for a in t), sum(a.sup for a in t))


def _sort_key(t: NFTuple):
    return tuple((a.delta_power, a.factors) for a in t)


def _word_of_moves(n: int, moves: Sequence[tuple[Simple, int]]) -> BraidWord:
    letters: list[int] = []
    for s, sign in moves:
        w = simple_word(s)
        letters.extend(w if sign > 0 else (-x for x in reversed(w)))
    return BraidWord(n, tuple(letters))


def _move(t: NFTuple, s: Simple, sign: int) -> NFTuple:
    f = _conj_pos if sign > 0 else _conj_neg
    return tuple(f(a, s) for a in t)


# ----------------------------------------------------------------------------------------------------------
# Cycling and decycling of single braids.

def cycling_conjugator(u: BraidWord) -> BraidWord:
    a = normal_form(u)
    if not a.factors:
        return BraidWord.identity(u.n)
    return BraidWord(u.n, simple_word(tau_power(a.factors[0], a.delta_power)))


def decycling_conjugator(u: BraidWord) -> BraidWord:
    a = normal_form(u)
    if not a.factors:
        return BraidWord.identity(u.n)
    return invert(BraidWord(u.n, simple_word(a.factors[-1])))


def cycling(u: BraidWord) -> BraidWord:
    """Conjugate u by the Δ-twisted first factor of its normal form; moves the first factor to the end."""
    x = cycling_conjugator(u)
    return normal_form(multiply(invert(x), u, x)).to_word()


def decycling(u: BraidWord) -> BraidWord:
    """Conjugate u by the inverse of its last factor; moves the last factor to the front."""
    x = decycling_conjugator(u)
    return normal_form(multiply(invert(x), u, x)).to_word()


def super_summit_representative(u: BraidWord, rounds: int | None = None) -> tuple[BraidWord, BraidWord]:
    """
    Iterate cycling until inf stops growing and decycling until sup stops shrinking.

    Returns (v, x) with v = x⁻¹ u x. Each phase is run for |Δ| = n(n-1)/2 steps without progress, which is
    enough for a single braid to reach its summit inf and sup.
    """
    n = u.n
    patience = rounds if rounds is not None else max(1, n * (n - 1) // 2)
    x = BraidWord.identity(n)
    v = normal_form(u).to_word()

    def run(step, better):
        nonlocal v, x
        stale = 0
        while stale < patience:
            c = step(v)
            w = normal_form(multiply(invert(c), v, c))
            if better(w, normal_form(v)):
                stale = 0
            else:
                stale += 1
            v = w.to_word()
            x = multiply(x, c)
            if not w.factors:
                break

    run(cycling_conjugator, lambda w, old: w.inf > old.inf)
    run(decycling_conjugator, lambda w, old: w.sup < old.sup)
    return v, x


# ----------------------------------------------------------------------------------------------------------
# Tuple summits.

def _reduce(start: NFTuple, n: int, budget: int, exhaustive: bool) -> tuple[NFTuple, list[tuple[Simple, int]]]:
    """
    Drive the complexity of a tuple down by simple and inverse-simple conjugations.

    Explores each complexity plateau breadth first and jumps as soon as a strictly smaller tuple appears. When
    ``exhaustive`` the final plateau is searched completely (raising Inconclusive if that needs more than
    ``budget`` nodes) and its least element is returned; otherwise the search stops quietly at the budget.
    """
    simples = nontrivial_simples(n)
    current, path = start, []
    expanded = 0
    while True:
        best = complexity(current)
        parents: dict[NFTuple, tuple[NFTuple, Simple, int] | None] = {current: None}
        queue = collections.deque([current])
        improved = None
        while queue and improved is None:
            node = queue.popleft()
            expanded += 1
            if expanded > budget:
                if exhaustive:
                    raise Inconclusive(budget, "summit search")
                return current, path
            for s in simples:
                for sign in (1, -1):
                    child = _move(node, s, sign)
                    if child in parents:
                        continue
                    c = complexity(child)
                    if c < best:
                        parents[child] = (node, s, sign)
                        improved = child
                        break
                    if c == best:
                        parents[child] = (node, s, sign)
                        queue.append(child)
                if improved is not None:
                    break
        if improved is None:
            if not exhaustive:
                return current, path
            target = min(parents, key=_sort_key)
        else:
            target = improved
        path = path + _trace(parents, target)
        current = target
        if improved is None:
            return current, path


def _trace(parents, node) -> list[tuple[Simple, int]]:
    moves = []
    while parents[node] is not None:
        prev, s, sign = parents[node]
        moves.append((s, sign))
        node = prev
    moves.reverse()
    return moves


def summit_tuple(t: ConjTuple, budget: int = DEFAULT_BUDGET) -> SummitNode:
    """
    Conjugate all components of t by one common braid until (-Σ inf, Σ sup) cannot be lowered.

    The returned tuple is the least element (in a fixed total order) of the final complexity plateau, and
    ``conjugator`` x satisfies x⁻¹ t_i x = tuple_i.
    """
    start = t.normal_forms()
    node, moves = _reduce(start, t.n, budget, exhaustive=True)
    return SummitNode(node, _word_of_moves(t.n, moves))


# ----------------------------------------------------------------------------------------------------------
# Decision.

def _perm_simultaneously_conjugate(s: Sequence[Permutation], t: Sequence[Permutation]) -> bool:
    n = s[0].n
    if any(a.cycle_type() != b.cycle_type() for a, b in zip(s, t)):
        return False
    if n > 6:
        return True
    for images in itertools.permutations(range(1, n + 1)):
        p = Permutation(images)
        pinv = p.inverse()
        if all(pinv * a * p == b for a, b in zip(s, t)):
            return True
    return False


def obviously_not_conjugate(s: ConjTuple, t: ConjTuple) -> bool:
    """Cheap invariants that rule out simultaneous conjugacy: exponent sums and permutations."""
    if any(a.exponent_sum() != b.exponent_sum() for a, b in zip(s.components, t.components)):
        return True
    ps = [permutation_of(c) for c in s.components]
    pt = [permutation_of(c) for c in t.components]
    return not _perm_simultaneously_conjugate(ps, pt)


def _window_search(s: NFTuple, t: NFTuple, n: int, budget: int, threads: int = 1) -> list[Simple] | None:
    lo = [min(a.inf, b.inf) for a, b in zip(s, t)]
    hi = [max(a.sup, b.sup) for a, b in zip(s, t)]
    order = sorted(range(len(s)), key=lambda i: hi[i] - lo[i])
    simples = nontrivial_simples(n)

    def child(node: NFTuple, x: Simple) -> NFTuple | None:
        out: list[GarsideNormalForm | None] = [None] * len(node)
        for i in order:
            a = _conj_pos(node[i], x)
            if a.inf < lo[i] or a.sup > hi[i]:
                return None
            out[i] = a
        return tuple(out)

    parents: dict[NFTuple, tuple[NFTuple, Simple] | None] = {s: None}
    queue = collections.deque([s])
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        while queue:
            node = queue.popleft()
            if node == t:
                path = []
                while parents[node] is not None:
                    prev, x = parents[node]
                    path.append(x)
                    node = prev
                return path[::-1]
            if len(parents) > budget:
                raise Inconclusive(budget)
            if pool is None:
                children = [child(node, x) for x in simples]
            else:
                children = list(pool.map(lambda x: child(node, x), simples))
            for x, c in zip(simples, children):
                if c is not None and c not in parents:
                    parents[c] = (node, x)
                    queue.append(c)
        return None
    finally:
        if pool is not None:
            pool.shutdown()


def verify_conjugator(s: ConjTuple, t: ConjTuple, x: BraidWord) -> bool:
    xi = invert(x)
    return all(normal_form(multiply(xi, a, x)) == normal_form(b) for a, b in zip(s.components, t.components))


def solve_simultaneous_conjugacy(s: ConjTuple, t: ConjTuple, budget: int = DEFAULT_BUDGET,
                                 threads: int = 1) -> BraidWord | None:
    """
    Return x with x⁻¹ s_i x = t_i for all i, or None when no such braid exists.

    Raises Inconclusive if the window search needs more than ``budget`` nodes.
    """
    if s.n != t.n:
        raise BraidError("tuples live in different braid groups")
    if len(s) != len(t):
        raise BraidError(f"component counts differ: {len(s)} vs {len(t)}")
    n = s.n
    if n == 1:
        return BraidWord.identity(1)
    if obviously_not_conjugate(s, t):
        return None
    s0, t0 = s.normal_forms(), t.normal_forms()
    if s0 == t0:
        return BraidWord.identity(n)

    s1, s_moves = _reduce(s0, n, min(REDUCE_BUDGET, budget), exhaustive=False)
    t1, t_moves = _reduce(t0, n, min(REDUCE_BUDGET, budget), exhaustive=False)
    path = _window_search(s1, t1, n, budget, threads)
    if path is None:
        return None
    x = multiply(_word_of_moves(n, s_moves), _word_of_moves(n, [(p, 1) for p in path]),
                 invert(_word_of_moves(n, t_moves)))
    x = normal_form(x).to_word()
    if not verify_conjugator(s, t, x):
        raise AssertionError("simultaneous conjugacy search produced an invalid conjugator")
    return x


def solve_conjugacy(u: BraidWord, v: BraidWord, budget: int = DEFAULT_BUDGET, threads: int = 1) -> BraidWord | None:
    """Return x with x⁻¹ u x = v, or None."""
    if u.n != v.n:
        raise BraidError(f"mismatched strand counts {u.n} and {v.n}")
    return solve_simultaneous_conjugacy(ConjTuple.of(u), ConjTuple.of(v), budget, threads)



def parse_tuple_lines(text: str, n: int) -> ConjTuple:
    """One braid word per line; blank lines and '#' comments are skipped."""
    words = [parse_word(line, n) for line in text.splitlines()
             if line.strip() and not line.lstrip().startswith("#")]
    return ConjTuple(n, tuple(words))
