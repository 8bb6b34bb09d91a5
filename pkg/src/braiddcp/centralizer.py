"""
Generating sets for the centralizer of a standard parabolic subgroup B_[k,l] in B_n.

Think of the block strands k..l as one fat strand. A braid centralizes the block when the fat strand returns
to its place, the other strands braid around it as a cable, and inside the fat strand only a central element
of the block group survives. The generators below are

- the full twist of the block (and σ_k itself when the block has two strands, B_2 being abelian),
- σ_i for the thin strands away from the block (i ≤ k-2 or i ≥ l+1),
- the loops of the fat strand around its two thin neighbours,
- the cabled half twist of (left neighbour, fat strand, right neighbour), which lets thin strands pass
  from one side of the block to the other.
"""
from __future__ import annotations

import dataclasses

from .braid import BraidError, BraidWord
from .garside import commute
from .parabolic import Interval


@dataclasses.dataclass(frozen=True)
class CentralizerGens:
    n: int
    interval: Interval
    gens: tuple[BraidWord, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.gens:
            raise BraidError("centralizer generating set must be nonempty")

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)


def block_full_twist(n: int, interval: Interval) -> BraidWord:
    """Δ_[k,l]² realized as (σ_k σ_{k+1} ⋯ σ_{l-1})^{l-k+1}."""
    k, l = interval.k, interval.l
    return BraidWord(n, tuple(range(k, l)) * (l - k + 1))


def loop_right(n: int, interval: Interval) -> BraidWord:
    """(σ_l σ_{l-1} ⋯ σ_k)(σ_k ⋯ σ_{l-1} σ_l): the block loops around strand l+1."""
    k, l = interval.k, interval.l
    return BraidWord(n, tuple(range(l, k - 1, -1)) + tuple(range(k, l + 1)))


def loop_left(n: int, interval: Interval) -> BraidWord:
    """(σ_{k-1} σ_k ⋯ σ_{l-1})(σ_{l-1} ⋯ σ_k σ_{k-1}): the block loops around strand k-1."""
    k, l = interval.k, interval.l
    return BraidWord(n, tuple(range(k - 1, l)) + tuple(range(l - 1, k - 2, -1)))


def cabled_swap(n: int, interval: Interval) -> BraidWord:
    """(σ_{k-1} ⋯ σ_{l-1}) σ_l (σ_{l-1} ⋯ σ_{k-1}): strands k-1 and l+1 trade places around the block."""
    k, l = interval.k, interval.l
    return BraidWord(n, tuple(range(k - 1, l)) + (l,) + tuple(range(l - 1, k - 2, -1)))


def centralizer_generators(n: int, interval: Interval) -> CentralizerGens:
    interval.check(n)
    k, l = interval.k, interval.l
    gens: list[BraidWord] = []
    labels: list[str] = []

    if l == k + 1:
        gens.append(BraidWord(n, (k,)))
        labels.append(f"s{k}")
    gens.append(block_full_twist(n, interval))
    labels.append("block twist")

    for i in list(range(1, k - 1)) + list(range(l + 1, n)):
        gens.append(BraidWord(n, (i,)))
        labels.append(f"s{i}")
    if k >= 2:
        gens.append(loop_left(n, interval))
        labels.append("loop left")
    if l <= n - 1:
        gens.append(loop_right(n, interval))
        labels.append("loop right")
    if k >= 2 and l <= n - 1:
        gens.append(cabled_swap(n, interval))
        labels.append("cabled swap")

    result = CentralizerGens(n, interval, tuple(gens), tuple(labels))
    if not verify_centralizing(result):
        raise AssertionError(f"generator construction failed to centralize B{interval} in B_{n}")
    return result


def verify_centralizing(cgens: CentralizerGens) -> bool:
    """Every generator commutes with every block generator σ_k, ..., σ_{l-1}."""
    block = cgens.interval.generators(cgens.n)
    return all(commute(c, s) for c in cgens.gens for s in block)


def commutes_with_all(u: BraidWord, cgens: CentralizerGens) -> bool:
    return all(commute(u, c) for c in cgens.gens)

