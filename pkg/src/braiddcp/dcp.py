"""
Decide whether g' ∈ A·g·B for parabolic subgroups A, B of B_n with connected Coxeter graph.

The pipeline:

1. standardize, so that A and B become the leading blocks B_[1,m_A] and B_[1,m_B];
2. if either block is all of B_n the double coset is all of B_n;
3. solve the simultaneous conjugacy problem

       x c_i x⁻¹ = c_i,   x (g d_j g⁻¹) x⁻¹ = g' d_j g'⁻¹,

   where c_i and d_j generate the centralizers of the two blocks;
4. split the solution x = Δ^{2k}·â with â in the A-block;
5. put b̂ = g⁻¹ â⁻¹ g' and split it as Δ^{2m}·b with b in the B-block;
6. if m = 0, transport (â, b̂) back to the original subgroups; otherwise answer NO.

A solution of the system commutes with the centralizer of A, so it lies in ⟨Δ²⟩·A, and likewise b̂ lies in
⟨Δ²⟩·B. Failure of either split contradicts that and is raised as InvariantViolation. The offset m does
not depend on which solution the search returns: two solutions with offsets m and m' would produce
h₁, h₂ in proper blocks with g'⁻¹ h₁ g' h₂ = Δ^{2(m-m')}, forcing m = m'. So a nonzero m is a proof of NO.
"""
from __future__ import annotations

import dataclasses
from typing import Any, Iterable

from .braid import BraidError, BraidWord, crossing_number, invert, multiply, parse_word
from .centralizer import centralizer_generators
from .garside import equal, normal_form
from .parabolic import (
    Interval,
    NotInZH,
    ParabolicSpec,
    StandardizedDCP,
    decompose_center_times_parabolic,
    parabolic_membership,
    parse_parabolic_spec,
    standardize_instance,
)
from .simconj import DEFAULT_BUDGET, ConjTuple, Inconclusive, solve_simultaneous_conjugacy

YES, NO, INCONCLUSIVE = "YES", "NO", "INCONCLUSIVE"


class InvariantViolation(AssertionError):
    """An internal consequence of the double-centralizer property failed; carries the offending data."""

    def __init__(self, message: str, diagnostics: dict[str, Any]):
        super().__init__(message)
        self.diagnostics = diagnostics


@dataclasses.dataclass(frozen=True)
class DCPInstance:
    n: int
    A: ParabolicSpec
    B: ParabolicSpec
    g: BraidWord
    g_prime: BraidWord

    def __post_init__(self):
        if {self.A.n, self.B.n, self.g.n, self.g_prime.n} != {self.n}:
            raise BraidError("instance data live in different braid groups")

    def to_text(self) -> str:
        return "\n".join([str(self.n), self.A.to_text(), self.B.to_text(), str(self.g), str(self.g_prime)]) + "\n"


@dataclasses.dataclass(frozen=True)
class DCPSolution:
    a: BraidWord
    b: BraidWord
    diagnostics: dict[str, Any] = dataclasses.field(default_factory=dict, compare=False)


@dataclasses.dataclass(frozen=True)
class DCPResult:
    status: str
    solution: DCPSolution | None = None
    diagnostics: dict[str, Any] = dataclasses.field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.status == YES


def parse_instance(text: str) -> DCPInstance:
    """
    Read the five-line instance format: n, A-spec, B-spec, g, g'. Lines starting with '#' are ignored;
    blank lines count (an empty g or g' is the identity).
    """
    lines = [line.rstrip("\n") for line in text.splitlines() if not line.lstrip().startswith("#")]
    while lines and not lines[-1].strip() and len(lines) > 5:
        lines.pop()
    if len(lines) < 3:
        raise BraidError("instance needs at least the lines n, A-spec, B-spec")
    lines += [""] * (5 - len(lines))
    if len(lines) != 5:
        raise BraidError(f"instance has {len(lines)} lines, expected 5")
    n = int(lines[0].strip())
    A = parse_parabolic_spec(lines[1], n)
    B = parse_parabolic_spec(lines[2], n)
    return DCPInstance(n, A, B, parse_word(lines[3], n), parse_word(lines[4], n))


def build_simcp_instance(g: BraidWord, g_prime: BraidWord, cgens: Iterable[BraidWord],
                         dgens: Iterable[BraidWord]) -> tuple[ConjTuple, ConjTuple]:
    """
    s = (c_1, ..., g d_1 g⁻¹, ...), t = (c_1, ..., g' d_1 g'⁻¹, ...).

    A braid x solves the system iff x s_i x⁻¹ = t_i, i.e. x⁻¹ is a conjugator in the solver's orientation.
    """
    cs = list(cgens)
    ds = list(dgens)
    s = [*cs, *(multiply(g, d, invert(g)) for d in ds)]
    t = [*cs, *(multiply(g_prime, d, invert(g_prime)) for d in ds)]
    return ConjTuple(g.n, tuple(s)), ConjTuple(g.n, tuple(t))


def verify_solution(instance: DCPInstance, a: BraidWord, b: BraidWord) -> bool:
    return (equal(multiply(a, instance.g, b), instance.g_prime)
            and instance.A.contains(a) and instance.B.contains(b))


def _finish(instance: DCPInstance, a: BraidWord, b: BraidWord, diagnostics: dict[str, Any]) -> DCPResult:
    a = normal_form(a).to_word()
    b = normal_form(b).to_word()
    if not verify_solution(instance, a, b):
        raise InvariantViolation("double-coset witness failed verification", {**diagnostics, "a": a, "b": b})
    return DCPResult(YES, DCPSolution(a, b, diagnostics), diagnostics)


def solve_dcp(instance: DCPInstance, budget: int = DEFAULT_BUDGET, threads: int = 1) -> DCPResult:
    n = instance.n
    std: StandardizedDCP = standardize_instance(instance.A, instance.B, instance.g, instance.g_prime)
    diagnostics: dict[str, Any] = {"m_A": std.m_A, "m_B": std.m_B, "g1": std.g1, "g1_prime": std.g1_prime}

    if std.m_A == n:
        diagnostics["easy_case"] = "A = B_n"
        return _finish(instance, multiply(instance.g_prime, invert(instance.g)), BraidWord.identity(n), diagnostics)
    if std.m_B == n:
        diagnostics["easy_case"] = "B = B_n"
        return _finish(instance, BraidWord.identity(n), multiply(invert(instance.g), instance.g_prime), diagnostics)

    block_A, block_B = std.block_A(), std.block_B()
    cgens = centralizer_generators(n, block_A)
    dgens = centralizer_generators(n, block_B)
    s, t = build_simcp_instance(std.g1, std.g1_prime, cgens, dgens)
    diagnostics["simcp_size"] = len(s)

    try:
        y = solve_simultaneous_conjugacy(s, t, budget=budget, threads=threads)
    except Inconclusive as exc:
        diagnostics["budget"] = exc.budget
        return DCPResult(INCONCLUSIVE, None, diagnostics)
    if y is None:
        return DCPResult(NO, None, diagnostics)

    a_tilde = normal_form(invert(y)).to_word()
    diagnostics["a_tilde"] = a_tilde
    try:
        k, a_hat = decompose_center_times_parabolic(a_tilde, block_A)
    except NotInZH as exc:
        raise InvariantViolation(f"simCP solution is not in <Δ²>·A: {exc}", diagnostics) from exc
    diagnostics["k"] = k
    diagnostics["a_hat"] = a_hat

    b_hat = normal_form(multiply(invert(std.g1), invert(a_hat), std.g1_prime)).to_word()
    diagnostics["b_hat"] = b_hat
    try:
        offset, _ = decompose_center_times_parabolic(b_hat, block_B)
    except NotInZH as exc:
        raise InvariantViolation(f"b_hat = g⁻¹ â⁻¹ g' is not in <Δ²>·B: {exc}", diagnostics) from exc
    diagnostics["offset"] = offset
    if offset:
        # every solution of the system leaves the same central offset, and a nonzero offset would
        # give g⁻¹ h₁ g h₂ = Δ^{2·offset} with h₁, h₂ in proper blocks, which is impossible
        return DCPResult(NO, None, diagnostics)
    if not parabolic_membership(b_hat, block_B):
        raise InvariantViolation("b_hat = g⁻¹ â⁻¹ g' is not in the B-block", diagnostics)

    a, b = std.transport(a_hat, b_hat)
    return _finish(instance, a, b, diagnostics)


def check_k_zero(h1: BraidWord, interval1: Interval, h2: BraidWord, interval2: Interval,
                 g: BraidWord) -> tuple[bool, bool]:
    """
    Test the statement "g h1 g⁻¹ h2 = Δ^{2k} forces k = 0" on one sample.

    Returns (hypothesis_held, conclusion_holds). When the product is a pure Δ power, its crossing number on
    every strand pair is recomputed and must agree with 2k.
    """
    n = g.n
    for h, interval in ((h1, interval1), (h2, interval2)):
        if not interval.is_proper(n):
            raise BraidError(f"block {interval} is not proper in B_{n}")
        if not parabolic_membership(h, interval):
            raise BraidError(f"{h} is not in B{interval}")
    product = multiply(g, h1, invert(g), h2)
    nf = normal_form(product)
    if nf.factors or nf.delta_power % 2:
        return False, True
    two_k = nf.delta_power
    crossings_agree = all(crossing_number(product, i, j) == two_k
                          for i in range(1, n + 1) for j in range(i + 1, n + 1))
    return True, two_k == 0 and crossings_agree

