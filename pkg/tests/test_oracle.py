from __future__ import annotations

import pytest

from braiddcp.braid import BraidError, BraidWord, parse_word
from braiddcp.dcp import parse_instance
from braiddcp.garside import equal
from braiddcp.oracle import (
    MAX_LEN_GUARD,
    OracleBudgetExceeded,
    all_generators,
    brute_conjugator,
    brute_dcp,
    brute_double_centralizer,
    brute_membership,
    brute_simultaneous_conjugator,
    burau,
    burau_equal,
    enumerate_words,
    permutation_obstruction,
)
from braiddcp.parabolic import Interval


def test_ball_sizes():
    # B_2 is infinite cyclic: the ball of radius r has 2r + 1 elements
    assert len(list(enumerate_words(2, all_generators(2), 5))) == 11
    # growth of B_3 in the standard generators: 1, 4, 12, 30
    sizes = [len(list(enumerate_words(3, all_generators(3), r))) for r in range(4)]
    assert sizes == [1, 5, 17, 47]


def test_enumeration_is_duplicate_free():
    words = list(enumerate_words(3, all_generators(3), 4))
    assert len({burau(w) for w in words}) == len(words)


def test_guards():
    with pytest.raises(OracleBudgetExceeded):
        list(enumerate_words(3, all_generators(3), MAX_LEN_GUARD + 1))
    with pytest.raises(OracleBudgetExceeded):
        list(enumerate_words(4, all_generators(4), 8, budget=100))
    with pytest.raises(BraidError):
        list(enumerate_words(3, all_generators(4), 2))


def test_brute_membership():
    r = brute_membership(parse_word("2 1 -2", 3), [parse_word("2 1 -2", 3)], 2)
    assert r.found
    r = brute_membership(parse_word("2", 3), [parse_word("1", 3)], 4)
    assert not r.found and not r.conclusive


def test_brute_conjugator():
    r = brute_conjugator(parse_word("1", 3), parse_word("2", 3), 4)
    assert r.found and r.witness[0] == parse_word("2 1", 3)
    r = brute_conjugator(parse_word("1", 3), parse_word("-1", 3), 4)
    assert not r.found and r.conclusive


def test_simultaneous_invariant_shortcuts():
    s = [parse_word("1 1", 3), parse_word("1", 3)]
    t = [parse_word("1 2", 3), parse_word("1", 3)]
    r = brute_simultaneous_conjugator(s, t, 3)
    assert r.conclusive and not r.found and "cycle" in r.reason


def test_brute_dcp():
    yes = parse_instance("3\n3; 1 2; \n3; 2 3; \n1\n1 1 2\n")
    r = brute_dcp(yes, 3)
    a, b = r.witness
    assert r.found and equal(a * yes.g * b, yes.g_prime)
    no = parse_instance("3\n3; 1 2; \n3; 1 2; \n\n2\n")
    assert permutation_obstruction(no)
    r = brute_dcp(no, 3)
    assert r.conclusive and not r.found


def test_burau_relations():
    assert burau_equal(parse_word("1 2 1", 3), parse_word("2 1 2", 3))
    assert burau_equal(parse_word("1 3", 4), parse_word("3 1", 4))
    assert burau_equal(parse_word("1 -1", 3), BraidWord.identity(3))
    assert not burau_equal(parse_word("1", 3), parse_word("2", 3))


def test_burau_specializes_to_permutation_matrix():
    # at t = 1 the Burau matrix is the permutation matrix
    m = burau(parse_word("1 2", 3))
    at_one = [[sum(c for _, c in entry) for entry in row] for row in m]
    assert sorted(map(tuple, at_one)) == sorted([(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_double_centralizer_report():
    rep = brute_double_centralizer(3, Interval(1, 2), 120, 6, seed=3)
    assert rep.samples == 120 and rep.ok
    assert rep.members == rep.commuting > 0
