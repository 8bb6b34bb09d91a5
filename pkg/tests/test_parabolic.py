from __future__ import annotations

import itertools

import pytest

from braiddcp.braid import BraidError, BraidWord, invert, multiply, parse_word, permutation_of
from braiddcp.garside import equal, fundamental_power, left_gcd
from braiddcp.oracle import brute_membership
from braiddcp.parabolic import (
    _first_factor,
    Interval,
    NotInZH,
    ParabolicSpec,
    decompose_center_times_parabolic,
    irreducible_fraction,
    membership_in_center_times_parabolic,
    parabolic_membership,
    parse_parabolic_spec,
    shift,
    small_delta,
    standardize_instance,
    tau_word,
)

from conftest import random_word


def test_small_delta():
    assert small_delta(2) == parse_word("1", 2)
    assert small_delta(4) == parse_word("3 2 1", 4)
    assert small_delta(1) == BraidWord.identity(1)


def test_shift():
    assert shift(parse_word("1", 2), 1, 3) == parse_word("2", 3)
    assert shift(BraidWord.identity(3), 5, 8) == BraidWord.identity(8)
    assert shift(parse_word("1 2", 3), 2, 5) == parse_word("3 4", 5)
    with pytest.raises(BraidError):
        shift(parse_word("2", 3), 2, 4)


def test_tau_examples():
    assert tau_word(1, 1, 2) == parse_word("1", 2)
    assert tau_word(1, 2, 3) == parse_word("1 2", 3)
    assert tau_word(3, 0, 4) == BraidWord.identity(4)
    assert tau_word(2, 1, 3) == parse_word("2 1", 3)


@pytest.mark.parametrize("p,q", [(p, q) for p in range(1, 6) for q in range(1, 6) if p + q <= 6])
def test_tau_block_swap(p, q):
    images = permutation_of(tau_word(p, q, p + q)).images
    assert images[:p] == tuple(range(q + 1, q + p + 1))
    assert images[p:] == tuple(range(1, q + 1))


def test_tau_conjugates_block_to_front():
    # τ_{m,k-1} w τ⁻¹ lies in the leading block for every generator of B_[k,l]
    for n in range(2, 7):
        for k in range(1, n):
            for l in range(k + 1, n + 1):
                m = l - k + 1
                t = tau_word(m, k - 1, n)
                for w in Interval(k, l).generators(n):
                    c = multiply(t, w, invert(t))
                    assert parabolic_membership(c, Interval(1, m)), (n, k, l, w)


def test_membership_examples():
    assert parabolic_membership(parse_word("2", 4), Interval(2, 3))
    assert not parabolic_membership(parse_word("1", 4), Interval(2, 3))
    assert not parabolic_membership(parse_word("2 1 -2", 3), Interval(1, 2))
    assert parabolic_membership(parse_word("1 2 -1 3 -2 1 2 -1", 4), Interval(1, 4))


def test_membership_against_enumeration(rng):
    # planted members are found by enumeration; h·σ_j with σ_j outside the block is never a member;
    # conjugates are compared with enumeration whenever enumeration finds a witness
    checked = 0
    for n in (3, 4):
        for k, l in [(k, l) for k in range(1, n) for l in range(k + 1, n + 1) if (k, l) != (1, n)]:
            iv = Interval(k, l)
            gens = iv.generators(n)
            outside = [j for j in range(1, n) if not k <= j < l]
            for idx in range(75):
                h = random_word(rng, n, rng.randint(0, 6), range(k, l))
                kind = idx % 3
                if kind == 0:
                    assert parabolic_membership(h, iv)
                    assert brute_membership(h, gens, 6).found
                elif kind == 1:
                    u = multiply(h, BraidWord(n, (rng.choice((1, -1)) * rng.choice(outside),)))
                    assert not parabolic_membership(u, iv)
                else:
                    v = random_word(rng, n, 2)
                    u = multiply(v, h, invert(v))
                    if brute_membership(u, gens, 6).found:
                        assert parabolic_membership(u, iv)
                checked += 1
    assert checked >= 500


def test_irreducible_fraction(rng):
    for _ in range(50):
        u = random_word(rng, 4, 10)
        den, num = irreducible_fraction(u)
        assert den.delta_power >= 0 and num.delta_power >= 0
        if not den.is_identity() and not num.is_identity():
            first = [_first_factor(x) for x in (den, num)]
            assert left_gcd(*first) == tuple(range(4))
        assert equal(multiply(invert(den.to_word()), num.to_word()), u)


def test_center_times_parabolic_examples():
    d2 = fundamental_power(3, 2)
    iv = Interval(1, 2)
    assert membership_in_center_times_parabolic(multiply(d2, parse_word("1", 3)), iv)
    assert not membership_in_center_times_parabolic(parse_word("2", 3), iv)
    assert membership_in_center_times_parabolic(BraidWord.identity(3), iv)
    q, h = decompose_center_times_parabolic(d2, iv)
    assert q == 1 and equal(h, BraidWord.identity(3))
    q, h = decompose_center_times_parabolic(multiply(d2, parse_word("1", 3)), iv)
    assert q == 1 and equal(h, parse_word("1", 3))
    with pytest.raises(NotInZH):
        decompose_center_times_parabolic(parse_word("2", 3), iv)


def test_decomposition_round_trip(rng):
    for n in range(3, 7):
        for k, l in [(k, l) for k in range(1, n) for l in range(k + 1, n + 1) if (k, l) != (1, n)]:
            for _ in range(3):
                q = rng.randint(-2, 2)
                h = random_word(rng, n, rng.randint(0, 8), range(k, l))
                q2, h2 = decompose_center_times_parabolic(multiply(fundamental_power(n, 2 * q), h), Interval(k, l))
                assert q2 == q and equal(h2, h)


def test_decomposition_needs_proper_block():
    with pytest.raises(BraidError):
        decompose_center_times_parabolic(fundamental_power(3, 2), Interval(1, 3))


def test_spec_parsing():
    spec = parse_parabolic_spec("4; 2 3; 1 -2")
    assert spec.n == 4 and spec.interval == Interval(2, 3)
    assert spec.alpha == parse_word("1 -2", 4)
    assert parse_parabolic_spec(spec.to_text()) == spec
    with pytest.raises(BraidError):
        parse_parabolic_spec("3; 2 2; ")
    with pytest.raises(BraidError):
        parse_parabolic_spec("3; 1 4; ")


def test_spec_contains():
    spec = parse_parabolic_spec("3; 1 2; 2")
    assert spec.contains(parse_word("2 1 -2", 3))
    assert not spec.contains(parse_word("1", 3))


def test_standardize_identity_case():
    A = ParabolicSpec.standard(4, 1, 2)
    B = ParabolicSpec.standard(4, 1, 3)
    g, gp = parse_word("1 3 -2", 4), parse_word("2 2", 4)
    std = standardize_instance(A, B, g, gp)
    assert (std.m_A, std.m_B) == (2, 3)
    assert equal(std.g1, g) and equal(std.g1_prime, gp)


def test_standardize_shifted_block():
    A = parse_parabolic_spec("3; 2 3; 1")
    B = ParabolicSpec.standard(3, 1, 2)
    g, gp = parse_word("1 2 -1", 3), parse_word("2 2", 3)
    std = standardize_instance(A, B, g, gp)
    assert std.tau_A == parse_word("2 1", 3)
    assert equal(std.g1, multiply(parse_word("2 1 -1", 3), g))
    assert equal(std.g1_prime, multiply(parse_word("2 1 -1", 3), gp))


def test_standardize_round_trip(rng):
    for _ in range(60):
        n = rng.randint(3, 5)
        specs = []
        for _ in range(2):
            k = rng.randint(1, n - 1)
            l = rng.randint(k + 1, n)
            specs.append(ParabolicSpec(n, random_word(rng, n, rng.randint(0, 3)), Interval(k, l)))
        A, B = specs
        g = random_word(rng, n, 5)
        a1 = random_word(rng, n, 4, range(1, A.size))
        b1 = random_word(rng, n, 4, range(1, B.size))
        std = standardize_instance(A, B, g, g)
        a, b = std.transport(a1, b1)
        assert A.contains(a) and B.contains(b)
        assert equal(multiply(a1, std.g1, b1), multiply(std.back_A.__invert__(), a, g, b, std.back_B))
