from __future__ import annotations

import pytest

from braiddcp.braid import BraidError, BraidWord, crossing_number, invert, multiply, parse_word
from braiddcp.centralizer import centralizer_generators
from braiddcp.dcp import (
    INCONCLUSIVE,
    NO,
    YES,
    DCPInstance,
    build_simcp_instance,
    check_k_zero,
    parse_instance,
    solve_dcp,
    verify_solution,
)
from braiddcp.garside import equal, fundamental_power
from braiddcp.oracle import brute_dcp, permutation_obstruction
from braiddcp.parabolic import Interval, ParabolicSpec, parse_parabolic_spec
from braiddcp.simconj import verify_conjugator

from conftest import planted_instance, random_spec, random_word


def _instance(text: str) -> DCPInstance:
    return parse_instance(text)


def test_parse_instance_formats():
    inst = _instance("# comment\n4\n4; 2 3; 1\n4; 1 2; -2\n1 2 -3\n2 1\n")
    assert inst.n == 4
    assert inst.A.interval == Interval(2, 3)
    assert inst.g == parse_word("1 2 -3", 4)
    blank = _instance("3\n3; 1 2; \n3; 1 2; \n\n2\n")
    assert blank.g == BraidWord.identity(3)
    assert parse_instance(blank.to_text()) == blank


def test_parse_instance_rejects_mixed_groups():
    with pytest.raises(BraidError):
        _instance("3\n4; 1 2; \n3; 1 2; \n1\n1\n")


def test_generator_square_no_instance():
    inst = _instance("3\n3; 1 2; \n3; 1 2; \n\n2\n")
    assert permutation_obstruction(inst)
    assert solve_dcp(inst).status == NO


def test_offset_no_instance():
    # the centralizer system is solvable here, but every solution leaves b̂ = Δ²·b with b in the block,
    # so no witness exists
    inst = _instance("3\n3; 1 2; \n3; 1 2; \n-1 -2 1\n2 -1 1\n")
    result = solve_dcp(inst)
    assert result.status == NO
    assert result.diagnostics["offset"] == 1
    assert not permutation_obstruction(inst)


def test_offset_no_instance_central_identity():
    # g' = σ₁⁻¹ g σ₁⁻³ Δ², so a witness a g b = g' would give g⁻¹ h₁ g h₂ = Δ² with h₁, h₂ in ⟨σ₁⟩
    g = parse_word("-1 -2 1", 3)
    gp = parse_word("2 -1 1", 3)
    rhs = multiply(parse_word("-1", 3), g, parse_word("-1 -1 -1", 3), fundamental_power(3, 2))
    assert equal(rhs, gp)


def test_planted_examples(rng):
    for n in (3, 4, 5):
        for _ in range(5):
            inst, _ = planted_instance(rng, n)
            result = solve_dcp(inst)
            assert result.status == YES
            assert verify_solution(inst, result.solution.a, result.solution.b)


def test_shifted_block_instance():
    inst = _instance("4\n4; 2 3; 1\n4; 1 2; -2\n1 2 -3\n2 1 2 -3 1 1\n")
    result = solve_dcp(inst)
    assert result.status == NO


def test_easy_cases():
    full = ParabolicSpec.standard(3, 1, 3)
    small = ParabolicSpec.standard(3, 1, 2)
    g, gp = parse_word("1 2", 3), parse_word("-2 -2 1", 3)
    r = solve_dcp(DCPInstance(3, full, small, g, gp))
    assert r.status == YES and r.diagnostics["easy_case"] == "A = B_n"
    assert r.solution.b == BraidWord.identity(3)
    r = solve_dcp(DCPInstance(3, small, full, g, gp))
    assert r.status == YES and r.solution.a == BraidWord.identity(3)


def test_conjugated_whole_group_is_easy():
    spec = parse_parabolic_spec("3; 1 3; 1 2")
    r = solve_dcp(DCPInstance(3, spec, parse_parabolic_spec("3; 2 3; "), parse_word("1", 3), parse_word("2", 3)))
    assert r.status == YES


def test_build_simcp_instance_shape():
    g, gp = parse_word("1 2", 4), parse_word("2 3", 4)
    cgens = centralizer_generators(4, Interval(1, 2))
    dgens = centralizer_generators(4, Interval(1, 3))
    s, t = build_simcp_instance(g, gp, cgens, dgens)
    assert len(s) == len(t) == len(cgens) + len(dgens)
    assert s.components[: len(cgens)] == t.components[: len(cgens)]
    assert equal(s.components[len(cgens)], multiply(g, dgens.gens[0], invert(g)))


def test_planted_system_has_the_expected_solution(rng):
    # with g' = a g b, x = a solves x s_i x⁻¹ = t_i, i.e. a⁻¹ conjugates s to t in the solver orientation
    for _ in range(5):
        inst, (a, b) = planted_instance(rng, 4)
        A, B = inst.A, inst.B
        if A.alpha.letters or B.alpha.letters:
            continue
        s, t = build_simcp_instance(inst.g, inst.g_prime, centralizer_generators(4, A.interval),
                                    centralizer_generators(4, B.interval))
        assert verify_conjugator(s, t, invert(a))


def test_inconclusive_on_tiny_budget(rng):
    inst, _ = planted_instance(rng, 5, g_len=10, member_len=6)
    r = solve_dcp(inst, budget=1)
    assert r.status in (INCONCLUSIVE, YES)
    if r.status == INCONCLUSIVE:
        assert r.diagnostics["budget"] == 1


def test_k_zero_examples():
    held, ok = check_k_zero(parse_word("1", 3), Interval(1, 2), parse_word("-1", 3), Interval(1, 2),
                            BraidWord.identity(3))
    assert held and ok
    held, _ = check_k_zero(parse_word("1", 3), Interval(1, 2), parse_word("2", 3), Interval(2, 3),
                           parse_word("1 2", 3))
    assert not held
    with pytest.raises(BraidError):
        check_k_zero(parse_word("2", 3), Interval(1, 2), parse_word("1", 3), Interval(1, 2), BraidWord.identity(3))
    with pytest.raises(BraidError):
        check_k_zero(parse_word("1", 3), Interval(1, 3), parse_word("1", 3), Interval(1, 2), BraidWord.identity(3))


def test_k_zero_on_constructed_products(rng):
    # pick h₂ to make g h₁ g⁻¹ h₂ trivial whenever g h₁⁻¹ g⁻¹ happens to land in the second block
    held_count = 0
    for _ in range(300):
        g = random_word(rng, 4, rng.randint(0, 4), [2])
        h1 = random_word(rng, 4, rng.randint(0, 5), [1, 2])
        h2 = invert(multiply(g, h1, invert(g)))
        for iv in (Interval(1, 3), Interval(2, 4)):
            from braiddcp.parabolic import parabolic_membership

            if parabolic_membership(h2, iv):
                held, ok = check_k_zero(h1, Interval(1, 3), h2, iv, g)
                assert held and ok
                held_count += 1
    assert held_count > 0


def test_crossing_numbers_of_full_twist_powers():
    for n in (3, 4):
        for k in (-1, 2):
            w = fundamental_power(n, 2 * k)
            assert crossing_number(w, 1, n) == 2 * k


def test_agreement_with_bounded_search(rng):
    # YES answers always verify; NO answers never contradict a witness found by enumeration
    counts = {YES: 0, NO: 0}
    for _ in range(120):
        A, B = random_spec(rng, 3, 2), random_spec(rng, 3, 2)
        inst = DCPInstance(3, A, B, random_word(rng, 3, 3), random_word(rng, 3, 3))
        result = solve_dcp(inst)
        oracle = brute_dcp(inst, 5)
        if result.status == YES:
            assert verify_solution(inst, result.solution.a, result.solution.b)
        else:
            assert result.status == NO
            assert not oracle.found
        if oracle.conclusive and not oracle.found:
            assert result.status == NO
        counts[result.status] += 1
    assert counts[NO] >= 50
