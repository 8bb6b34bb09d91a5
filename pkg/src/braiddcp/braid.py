"""
Braid words in the Artin generators of B_n, and the combinatorics that can be read off a diagram directly.

A braid word is a sequence of nonzero integers: ``i`` stands for σ_i and ``-i`` for σ_i⁻¹, with
1 ≤ i ≤ n-1. Words are read left to right, and a word is drawn top to bottom.

Conventions used throughout the package:

- σ_i is a positive crossing in which the strand at position i passes over the strand at position i+1.
- Strands are labelled by their left (top) end points 1, ..., n.
- The permutation of a braid is a right action on labels: ``perm.images[j-1]`` is the final position of
  the strand starting at position j, so that the permutation of ``u * v`` is "first u, then v".
"""
from __future__ import annotations

import dataclasses
from typing import Iterable, Sequence


class BraidError(ValueError):
    """Malformed braid data: bad tokens, indices out of range, or mismatched strand counts."""


@dataclasses.dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise BraidError(f"strand count must be at least 1, got {self.n}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.n - 1:
                raise BraidError(f"generator index {x} out of range for B_{self.n}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return multiply(self, other)

    def __invert__(self) -> BraidWord:
        return invert(self)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return BraidWord(self.n, invert(self).letters * -k)
        return BraidWord(self.n, self.letters * k)

    def __str__(self) -> str:
        return format_word(self)

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} stored as its tuple of images."""
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise BraidError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Right-action product: apply self, then other."""
        return Permutation(tuple(other(self(j)) for j in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for j, image in enumerate(self.images, start=1):
            inv[image - 1] = j
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(image == j for j, image in enumerate(self.images, start=1))

    def cycle_type(self) -> tuple[int, ...]:
        seen = set()
        lengths = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            length, j = 0, start
            while j not in seen:
                seen.add(j)
                j = self(j)
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))


def _parse_token(token: str) -> int:
    t = token.strip()
    if t[:1] in ("s", "S"):
        body = t[1:]
        sign = 1
        if "^" in body:
            body, exp = body.split("^", 1)
            if exp not in ("1", "+1", "-1"):
                raise BraidError(f"malformed token {token!r}")
            sign = -1 if exp == "-1" else 1
        if not body.isdigit():
            raise BraidError(f"malformed token {token!r}")
        return sign * int(body)
    try:
        value = int(t)
    except ValueError:
        raise BraidError(f"malformed token {token!r}") from None
    return value


def parse_word(text: str, n: int) -> BraidWord:
    """
    Parse a whitespace-separated braid word.

    Tokens are signed integers (``2``, ``-1``) or ``sK`` / ``sK^-1`` forms.

    >>> parse_word("1 2 -1", 3).letters
    (1, 2, -1)
    >>> parse_word("s2 s1^-1", 3).letters
    (2, -1)
    >>> parse_word("", 4).letters
    ()
    """
    letters = tuple(_parse_token(tok) for tok in text.split())
    if any(x == 0 for x in letters):
        raise BraidError("generator index 0 is not allowed")
    return BraidWord(n, letters)


def format_word(u: BraidWord) -> str:
    return " ".join(str(x) for x in u.letters)


def _check_same_n(*words: BraidWord) -> int:
    ns = {w.n for w in words}
    if len(ns) != 1:
        raise BraidError(f"mismatched strand counts {sorted(ns)}")
    return ns.pop()


def multiply(*words: BraidWord) -> BraidWord:
    """Concatenate words of the same braid group."""
    n = _check_same_n(*words)
    return BraidWord(n, tuple(x for w in words for x in w.letters))


def invert(u: BraidWord) -> BraidWord:
    return BraidWord(u.n, tuple(-x for x in reversed(u.letters)))


def conjugate(u: BraidWord, x: BraidWord) -> BraidWord:
    """The word x⁻¹ u x."""
    return multiply(invert(x), u, x)


def generator(n: int, i: int) -> BraidWord:
    return BraidWord(n, (i,))


def permutation_of(u: BraidWord) -> Permutation:
    """
    The permutation induced on strand labels (right action).

    >>> permutation_of(BraidWord(4, (3, 2, 1))).images
    (2, 3, 4, 1)
    """
    pos_of = list(range(u.n))       # label -> current position
    at = list(range(u.n))           # position -> label
    for x in u.letters:
        i = abs(x) - 1
        a, b = at[i], at[i + 1]
        at[i], at[i + 1] = b, a
        pos_of[a], pos_of[b] = i + 1, i
    return Permutation(tuple(p + 1 for p in pos_of))


def crossing_number(u: BraidWord, i: int, j: int) -> int:
    """
    Algebraic crossing number of the strands with left end points i and j.

    Each crossing between the two strands contributes the sign of its letter.
    """
    if not (1 <= i <= u.n and 1 <= j <= u.n) or i == j:
        raise BraidError(f"invalid strand pair ({i}, {j}) for B_{u.n}")
    pi, pj = i - 1, j - 1
    total = 0
    for x in u.letters:
        k = abs(x) - 1
        if {pi, pj} == {k, k + 1}:
            total += 1 if x > 0 else -1
        if pi == k:
            pi = k + 1
        elif pi == k + 1:
            pi = k
        if pj == k:
            pj = k + 1
        elif pj == k + 1:
            pj = k
    return total


def delete_strands(u: BraidWord, remove: Iterable[int]) -> BraidWord:
    """
    Erase the strands with the given left end points from the diagram of u.

    Crossings that involve an erased strand are dropped and the surviving positions are renumbered, so the
    result lives in B_{n - |remove|}. This is well defined on braids but is not a homomorphism.
    """
    removed = set(remove)
    if not removed <= set(range(1, u.n + 1)):
        raise BraidError(f"labels {sorted(removed)} out of range for B_{u.n}")
    if len(removed) >= u.n:
        raise BraidError("cannot remove every strand")
    kept = [label not in removed for label in range(1, u.n + 1)]
    at = list(range(u.n))
    out = []
    for x in u.letters:
        k = abs(x) - 1
        a, b = at[k], at[k + 1]
        if kept[a] and kept[b]:
            rank = sum(kept[at[p]] for p in range(k))
            out.append(rank + 1 if x > 0 else -(rank + 1))
        at[k], at[k + 1] = b, a
    return BraidWord(u.n - len(removed), tuple(out))


def from_letters(n: int, letters: Sequence[int]) -> BraidWord:
    return BraidWord(n, tuple(letters))
