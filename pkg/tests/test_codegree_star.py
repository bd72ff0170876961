import itertools
import random
from math import comb

import pytest

from turancover.codegree_star import (
    StarParams,
    balanced_partition_monomial,
    codegree_star_monomial,
    core_family_turan_number,
    in_star_ideal,
    missing_edge_monomial,
    star_ideal,
    star_initial_degree,
    verify_collapse,
    vertex_quotient,
)
from turancover.errors import ClaimCheckError, InputError, ScaleGuardError
from turancover.hypergraph import (
    CoreFamily,
    RGraph,
    core_family_free,
    turan_construct,
    turan_count,
)
from turancover.monomial import SquarefreeMonomial, initial_degree


# ---------------------------------------------------------------------------
# star monomials


def test_star_monomial_example_n4_r3():
    p = StarParams(4, 3, 3)
    m = codegree_star_monomial(p, 1, 2)
    assert set(m.variables()) == {frozenset((1, 2, 3)), frozenset((1, 2, 4))}


def test_star_monomial_symmetric_in_pair():
    p = StarParams(5, 3, 3)
    assert codegree_star_monomial(p, 2, 4) == codegree_star_monomial(p, 4, 2)


def test_star_monomial_size_law():
    for n, r in [(4, 2), (5, 3), (6, 3), (6, 4)]:
        p = StarParams(n, 3, r)
        for a, b in itertools.combinations(range(1, n + 1), 2):
            assert codegree_star_monomial(p, a, b).degree == comb(n - 2, r - 2)


def test_star_monomial_rejects_bad_pairs():
    p = StarParams(4, 3, 3)
    with pytest.raises(InputError):
        codegree_star_monomial(p, 1, 1)
    with pytest.raises(InputError):
        codegree_star_monomial(p, 1, 5)


# ---------------------------------------------------------------------------
# missing-edge monomials and the divisibility law


def test_missing_edge_monomial_complete_graph_is_one():
    p = StarParams(4, 3, 3)
    m = missing_edge_monomial(p, RGraph.complete(4, 3))
    assert m.degree == 0


def test_missing_edge_monomial_empty_graph_is_full_product():
    p = StarParams(4, 3, 3)
    m = missing_edge_monomial(p, RGraph(4, 3))
    assert m.degree == comb(4, 3)


def test_divisibility_law_exhaustive():
    # the star of (a,b) divides the missing-edge monomial iff codeg(a,b) == 0
    for n, r in [(4, 2), (4, 3), (5, 3)]:
        p = StarParams(n, 3, r)
        edges = list(itertools.combinations(range(1, n + 1), r))
        rng = random.Random(31)
        graph_masks = (
            range(1 << len(edges))
            if len(edges) <= 6
            else [rng.randrange(1 << len(edges)) for _ in range(200)]
        )
        for gm in graph_masks:
            G = RGraph(n, r, [edges[i] for i in range(len(edges)) if gm >> i & 1])
            m = missing_edge_monomial(p, G)
            for a, b in itertools.combinations(range(1, n + 1), 2):
                star = codegree_star_monomial(p, a, b)
                divides = star.support & m.support == star.support
                assert divides == (G.codegree(a, b) == 0)


# ---------------------------------------------------------------------------
# membership


def test_unit_not_member():
    p = StarParams(4, 3, 3)
    assert not in_star_ideal(0, p)


def test_single_star_not_enough_for_all_ell_sets():
    p = StarParams(4, 3, 3)
    star = codegree_star_monomial(p, 1, 2)
    assert not in_star_ideal(star, p)


def test_balanced_partition_monomial_is_member():
    for n, ell, r in [(4, 3, 3), (5, 3, 3), (4, 4, 3), (5, 4, 3), (5, 3, 2)]:
        p = StarParams(n, ell, r)
        m0 = balanced_partition_monomial(p)
        assert in_star_ideal(m0, p)
        assert m0.degree == comb(n, r) - turan_count(n, ell - 1, r)


def test_vacuous_range_everything_member():
    p = StarParams(3, 4, 3)
    assert in_star_ideal(0, p)


def test_membership_via_missing_edge_law():
    # missing-edge monomial is a member iff the graph has no core-family member
    p = StarParams(5, 3, 3)
    turan = turan_construct(5, 2, 3)  # empty at r=3 > q=2
    assert in_star_ideal(missing_edge_monomial(p, turan), p)
    assert not in_star_ideal(missing_edge_monomial(p, RGraph.complete(5, 3)), p)


def test_star_ideal_object_membership_and_lower_bound():
    p = StarParams(4, 3, 3)
    ideal = star_ideal(p)
    m0 = balanced_partition_monomial(p)
    assert ideal.membership(m0.support)
    assert initial_degree(ideal) == comb(4, 3) - turan_count(4, 2, 3) == 4


# ---------------------------------------------------------------------------
# vertex quotient soundness


def test_vertex_quotient_kill_pairs():
    p = StarParams(4, 3, 3)
    star12 = codegree_star_monomial(p, 1, 2)
    A = vertex_quotient(star12, p)
    assert A.kill == frozenset({frozenset((1, 2))})


def test_vertex_quotient_member_forces_top_vanishing():
    rng = random.Random(41)
    for n, ell, r in [(4, 3, 3), (5, 3, 3), (4, 4, 3), (5, 4, 2)]:
        p = StarParams(n, ell, r)
        nv = comb(n, r)
        hits = 0
        while hits < 10:
            # bias toward dense supports so members appear quickly
            support = rng.randrange(1 << nv) | rng.randrange(1 << nv)
            if not in_star_ideal(support, p):
                continue
            A = vertex_quotient(support, p)
            assert A.top_vanishing(ell - 1)
            hits += 1


def test_vertex_quotient_standard_sets_bound_degree():
    # every r-set whose variable is outside the support is standard, so
    # C(n, r) - deg(m) <= hilbert(r) <= t_r(n, ell-1) for members
    p = StarParams(5, 3, 3)
    rng = random.Random(43)
    nv = comb(5, 3)
    bound = turan_count(5, 2, 3)
    hits = 0
    while hits < 10:
        support = rng.randrange(1 << nv) | rng.randrange(1 << nv)
        if not in_star_ideal(support, p):
            continue
        A = vertex_quotient(support, p)
        free = nv - support.bit_count()
        assert free <= A.hilbert(3) <= bound
        hits += 1


# ---------------------------------------------------------------------------
# collapse to the cover ideal


@pytest.mark.parametrize(
    "n,ell,r",
    [(4, 3, 3), (5, 3, 3), (4, 4, 3), (5, 4, 3), (4, 3, 2), (5, 3, 2)],
)
def test_collapse(n, ell, r):
    assert verify_collapse(StarParams(n, ell, r))


def test_collapse_scale_guard():
    with pytest.raises(ScaleGuardError):
        verify_collapse(StarParams(7, 3, 3), cap=1 << 20)


# ---------------------------------------------------------------------------
# initial degree and the extremal number


@pytest.mark.parametrize(
    "n,ell,r,expected",
    [
        (4, 4, 3, 2),
        (5, 3, 3, 10),
        (4, 3, 3, 4),
        (5, 4, 3, 6),
        (6, 4, 3, 12),
        (5, 3, 2, 4),
        (6, 5, 3, 8),
    ],
)
def test_star_initial_degree_values(n, ell, r, expected):
    p = StarParams(n, ell, r)
    degree, witness = star_initial_degree(p)
    assert degree == expected == comb(n, r) - turan_count(n, ell - 1, r)
    assert witness.degree == degree
    assert in_star_ideal(witness, p)


def test_star_initial_degree_vacuous():
    degree, witness = star_initial_degree(StarParams(3, 4, 3))
    assert degree == 0 and witness.degree == 0


def test_star_initial_degree_scale_guard():
    # the certification scan at (6, 4, 3) would need C(20, 11) combinations
    with pytest.raises(ScaleGuardError):
        star_initial_degree(StarParams(6, 4, 3), cap_search=1000)


def test_core_family_turan_number_reports():
    rep = core_family_turan_number(StarParams(5, 4, 3))
    assert rep["value"] == turan_count(5, 3, 3) == 4
    assert rep["alpha"] == comb(5, 3) - 4
    assert rep["alpha_consistent"]
    assert rep["oracle_ex"] == 4


def test_core_family_turan_number_degenerate_case():
    rep = core_family_turan_number(StarParams(4, 3, 3))
    assert rep["value"] == 0
    assert rep["oracle_ex"] == 0


def test_params_validation():
    with pytest.raises(InputError):
        StarParams(4, 1, 3)
    with pytest.raises(InputError):
        StarParams(4, 3, 1)
