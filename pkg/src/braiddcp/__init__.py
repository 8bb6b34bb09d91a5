"""Braid group normal forms, conjugacy search, and the double coset problem for parabolic subgroups."""
from .braid import BraidError, BraidWord, Permutation, crossing_number, delete_strands, invert, multiply, parse_word, permutation_of
from .centralizer import CentralizerGens, centralizer_generators, verify_centralizing
from .dcp import DCPInstance, DCPResult, DCPSolution, InvariantViolation, check_k_zero, parse_instance, solve_dcp
from .garside import GarsideNormalForm, PermutationBraid, delta, equal, fundamental_power, is_trivial, normal_form
from .parabolic import (
    Interval,
    NotInZH,
    ParabolicSpec,
    decompose_center_times_parabolic,
    membership_in_center_times_parabolic,
    parabolic_membership,
    standardize_instance,
    tau_word,
)
from .simconj import ConjTuple, Inconclusive, solve_conjugacy, solve_simultaneous_conjugacy, summit_tuple

__version__ = "0.1.0"
