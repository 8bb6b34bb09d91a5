from __future__ import annotations

import random

import pytest

from braiddcp.braid import BraidWord


def random_word(rng: random.Random, n: int, length: int, letters=None) -> BraidWord:
    letters = list(letters) if letters is not None else list(range(1, n))
    if not letters:
        return BraidWord.identity(n)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.choice(letters) for _ in range(length)))


@pytest.fixture
def rng():
    return random.Random(20240607)


def random_interval(rng: random.Random, n: int, proper: bool = True):
    from braiddcp.parabolic import Interval

    while True:
        k = rng.randint(1, n - 1)
        l = rng.randint(k + 1, n)
        if not proper or (k, l) != (1, n):
            return Interval(k, l)


def random_spec(rng: random.Random, n: int, alpha_len: int = 3, proper: bool = True):
    from braiddcp.parabolic import ParabolicSpec

    return ParabolicSpec(n, random_word(rng, n, rng.randint(0, alpha_len)), random_interval(rng, n, proper))


def random_member(rng: random.Random, spec, length: int) -> BraidWord:
    from braiddcp.braid import invert, multiply

    iv = spec.interval
    h = random_word(rng, spec.n, length, range(iv.k, iv.l))
    return multiply(spec.alpha, h, invert(spec.alpha))


def planted_instance(rng: random.Random, n: int, g_len: int = 5, member_len: int = 4):
    """A, B, g random; g' = a g b for random a ∈ A, b ∈ B."""
    from braiddcp.braid import multiply
    from braiddcp.dcp import DCPInstance

    A, B = random_spec(rng, n), random_spec(rng, n)
    g = random_word(rng, n, g_len)
    a, b = random_member(rng, A, member_len), random_member(rng, B, member_len)
    return DCPInstance(n, A, B, g, multiply(a, g, b)), (a, b)


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
