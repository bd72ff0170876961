import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turancover.errors import InputError, ScaleGuardError
from turancover.hypergraph import EdgeRanker, builtin_spec, enumerate_forbidden_copies
from turancover.monomial import (
    SquarefreeIdeal,
    SquarefreeMonomial,
    VarUniverse,
    alexander_dual,
    explicit_generators,
    initial_degree,
    intersect_variable_ideals,
    min_hitting_set,
    minimal_supports,
)


def masks(*bit_lists):
    return [sum(1 << b for b in bits) for bits in bit_lists]


# ---------------------------------------------------------------------------
# membership


def test_explicit_membership():
    u = VarUniverse(["a", "b", "c"])
    ideal = SquarefreeIdeal.from_generators(u, masks([0, 1]))
    assert ideal.membership(masks([0, 1])[0])
    assert ideal.membership(masks([0, 1, 2])[0])
    assert not ideal.membership(masks([0])[0])
    assert not ideal.membership(0)  # the monomial 1 is outside a proper ideal


def test_cover_membership_triangle():
    fam = enumerate_forbidden_copies(builtin_spec("K3"), 3)
    ideal = SquarefreeIdeal.from_copy_family(fam)
    rk = EdgeRanker(3, 2)
    assert ideal.membership(rk.mask([frozenset((1, 2))]))
    assert not ideal.membership(0)


def test_cover_equals_explicit_dual_form():
    # membership in cover form == membership in the dualized explicit form
    fam = enumerate_forbidden_copies(builtin_spec("K3"), 4)
    rk = EdgeRanker(4, 2)
    copies = fam.masks(rk)
    u = VarUniverse.edge_universe(4, 2)
    cover = SquarefreeIdeal.from_copies(u, copies)
    dual_gens = alexander_dual(copies, u.size)
    explicit = SquarefreeIdeal.from_generators(u, dual_gens)
    for m in range(1 << u.size):
        assert cover.membership(m) == explicit.membership(m)


def test_universe_mismatch_rejected():
    u1 = VarUniverse(["a", "b"])
    u2 = VarUniverse(["a", "c"])
    ideal = SquarefreeIdeal.from_generators(u1, [1])
    with pytest.raises(InputError):
        ideal.membership(SquarefreeMonomial(u2, 1))


# ---------------------------------------------------------------------------
# Alexander duality


def test_dual_of_single_generator():
    assert sorted(alexander_dual([0b11], 2)) == [0b01, 0b10]


def test_dual_of_two_singletons():
    assert alexander_dual([0b01, 0b10], 2) == [0b11]


def test_dual_of_triangle_copies_in_k4():
    fam = enumerate_forbidden_copies(builtin_spec("K3"), 4)
    rk = EdgeRanker(4, 2)
    copies = fam.masks(rk)
    dual = alexander_dual(copies, rk.count)
    # brute-force minimal transversals over all 2^6 supports
    members = [
        m for m in range(1 << rk.count) if all(m & c for c in copies)
    ]
    assert sorted(dual) == sorted(minimal_supports(members))


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.integers(min_value=1, max_value=(1 << 12) - 1), min_size=1, max_size=8
    )
)
def test_dual_is_involutive(gens):
    antichain = minimal_supports(gens)
    double = alexander_dual(alexander_dual(antichain, 12), 12)
    assert sorted(double) == sorted(antichain)


# ---------------------------------------------------------------------------
# intersections


def test_intersect_single_ideal_is_identity():
    u = VarUniverse(["a", "b", "c"])
    gens = masks([0], [1, 2])
    ideal = intersect_variable_ideals(u, [gens])
    explicit = SquarefreeIdeal.from_generators(u, gens)
    for m in range(1 << 3):
        assert ideal.membership(m) == explicit.membership(m)


def test_intersect_coprime_variables():
    u = VarUniverse(["a", "b"])
    ideal = intersect_variable_ideals(u, [[0b01], [0b10]])
    assert ideal.membership(0b11)
    assert not ideal.membership(0b01)


def test_intersect_two_variable_ideals():
    u = VarUniverse(["a", "b", "c"])
    # (y_a, y_b) ∩ (y_a, y_c)
    ideal = intersect_variable_ideals(u, [[0b001, 0b010], [0b001, 0b100]])
    assert ideal.membership(0b001)  # y_a
    assert ideal.membership(0b110)  # y_b*y_c
    assert not ideal.membership(0b010)  # y_b alone
    gens = explicit_generators(ideal)
    assert sorted(gens) == [0b001, 0b110]


# ---------------------------------------------------------------------------
# hitting sets


def test_min_hitting_set_path():
    size, witness = min_hitting_set(masks([0, 1], [1, 2], [2, 3]), 4)
    assert size == 2
    assert all(witness & c for c in masks([0, 1], [1, 2], [2, 3]))


def test_min_hitting_set_common_element():
    size, witness = min_hitting_set(masks([0, 1], [0, 2]), 3)
    assert size == 1 and witness == 0b001


def test_min_hitting_set_empty_family():
    assert min_hitting_set([], 5) == (0, 0)


def test_min_hitting_set_exhaustive_reference():
    rng = random.Random(13)
    for _ in range(30):
        nv = rng.randint(3, 8)
        copies = [
            sum(1 << b for b in rng.sample(range(nv), rng.randint(1, 3)))
            for _ in range(rng.randint(1, 6))
        ]
        size, witness = min_hitting_set(copies, nv)
        best = min(
            m.bit_count() for m in range(1 << nv) if all(m & c for c in copies)
        )
        assert size == best
        assert all(witness & c for c in copies)
        assert witness.bit_count() == size


def test_min_hitting_set_permutation_invariant_size():
    copies = masks([0, 1, 2], [2, 3], [0, 4])
    size, _ = min_hitting_set(copies, 5)
    perm = [3, 0, 4, 1, 2]
    permuted = [
        sum(1 << perm[b] for b in range(5) if c >> b & 1) for c in copies
    ]
    psize, _ = min_hitting_set(permuted, 5)
    assert size == psize


def test_min_hitting_set_witness_lexicographically_smallest():
    copies = masks([0, 1], [1, 2], [2, 3])
    size, witness = min_hitting_set(copies, 4)
    candidates = [
        m
        for m in range(1 << 4)
        if m.bit_count() == size and all(m & c for c in copies)
    ]
    assert witness == min(candidates)


# ---------------------------------------------------------------------------
# initial degree


def test_initial_degree_explicit():
    u = VarUniverse(["a", "b", "c"])
    assert initial_degree(SquarefreeIdeal.from_generators(u, masks([0, 1], [2]))) == 1


def test_initial_degree_whole_ring():
    u = VarUniverse(["a"])
    assert initial_degree(SquarefreeIdeal.from_generators(u, [0])) == 0


def test_initial_degree_zero_ideal_infinite():
    import math

    u = VarUniverse(["a"])
    ideal = SquarefreeIdeal(u, "explicit", generators=[])
    assert initial_degree(ideal) == math.inf


def test_initial_degree_cover_triangles_in_k4():
    fam = enumerate_forbidden_copies(builtin_spec("K3"), 4)
    ideal = SquarefreeIdeal.from_copy_family(fam)
    assert initial_degree(ideal) == comb(4, 2) - 4


def test_initial_degree_matches_hitting_set():
    fam = enumerate_forbidden_copies(builtin_spec("K3"), 5)
    rk = EdgeRanker(5, 2)
    copies = fam.masks(rk)
    ideal = SquarefreeIdeal.from_copy_family(fam)
    assert initial_degree(ideal) == min_hitting_set(copies, rk.count)[0]


def test_initial_degree_implicit_search():
    u = VarUniverse(list("abcde"))
    target = 0b10101
    ideal = SquarefreeIdeal.from_predicate(u, lambda m: m & target == target)
    assert initial_degree(ideal) == 3


def test_minimal_supports_antichain():
    assert minimal_supports([0b111, 0b011, 0b110, 0b011]) == [0b011, 0b110]
