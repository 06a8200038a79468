"""Symmetry computations: Inn, Aut, transitivity, isomorphism, embedding.

The backtracking automorphism search is confronted with brute_force_aut,
which filters all n! permutations, on every family small enough for that.
Frozen orders: |Aut(R_n)| = n phi(n) and the 12-point trivial quandle at
12 factorial.
"""

import math

import pytest

import quandles.groups as G
import quandles.quandle as Q
import quandles.symmetry as sym
from quandles.perms import Permutation

DIHEDRAL_ORDERS = {3: (6, 6), 5: (20, 10), 7: (42, 14), 9: (54, 18), 11: (110, 22)}


def _samples_up_to_6():
    z5 = G.make_cyclic(5)
    return [
        Q.dihedral(3),
        Q.dihedral(4),
        Q.dihedral(5),
        Q.dihedral(6),
        Q.trivial_quandle(1),
        Q.trivial_quandle(5),
        Q.conj_quandle(G.make_symmetric(3), 1),
        Q.alexander(z5, G.scalar_map(z5, 2)),
        Q.takasaki(G.make_abelian([2, 2])),
    ]


def test_backtracking_matches_brute_force():
    for x in _samples_up_to_6():
        fast = sym.automorphism_group_backtrack(x)
        slow = sym.brute_force_aut(x)
        assert fast.order() == len(slow)
        assert {p.images for p in fast.elements()} == {p.images for p in slow}


def test_dihedral_symmetry_orders():
    for n, (aut, inn) in DIHEDRAL_ORDERS.items():
        x = Q.dihedral(n)
        assert sym.automorphism_group_backtrack(x).order() == aut
        assert sym.inner_group(x).order() == inn


def test_even_dihedral_inner_order():
    # for even n the doubled subgroup has index 2, so Inn collapses to order n
    assert sym.inner_group(Q.dihedral(4)).order() == 4
    assert sym.inner_group(Q.dihedral(6)).order() == 6


def test_trivial_quandle_aut_is_everything():
    x = Q.trivial_quandle(12)
    assert sym.automorphism_group_backtrack(x).order() == math.factorial(12)
    assert sym.inner_group(x).order() == 1


def test_aut_order_bound_respected():
    with pytest.raises(ValueError):
        sym.automorphism_group_backtrack(Q.trivial_quandle(90), max_order=81)


def test_inner_generators_are_columns():
    x = Q.dihedral(5)
    inn = sym.inner_group(x)
    cols = {x.column(c) for c in range(5)}
    assert {p.images for p in inn.generators} == cols


def test_inner_is_normal_in_aut():
    for x in (Q.dihedral(6), Q.conj_quandle(G.make_symmetric(3), 1)):
        inn = sym.inner_group(x)
        aut = sym.automorphism_group_backtrack(x)
        for f in aut.generators:
            finv = f.inverse()
            for s in inn.generators:
                conj = finv * s * f
                assert inn.contains(conj)


def test_every_inner_map_is_an_automorphism():
    for x in _samples_up_to_6():
        aut = sym.automorphism_group_backtrack(x)
        for s in sym.inner_group(x).generators:
            assert aut.contains(s)


def test_connectivity():
    assert sym.is_connected(Q.dihedral(3))
    assert sym.is_connected(Q.dihedral(9))
    assert not sym.is_connected(Q.dihedral(4))
    assert not sym.is_connected(Q.trivial_quandle(3))
    assert sym.is_connected(Q.trivial_quandle(1))
    g9 = G.make_abelian([3, 3])
    assert sym.is_connected(Q.alexander(g9, G.scalar_map(g9, 2)))


def test_two_point_homogeneity():
    assert sym.is_two_point_homogeneous(Q.dihedral(3))
    assert not sym.is_two_point_homogeneous(Q.dihedral(5))   # Inn order 10 < 20
    with pytest.raises(ValueError):
        sym.is_two_point_homogeneous(Q.trivial_quandle(1))


def test_double_transitivity_two_routes_agree():
    for x in (Q.dihedral(3), Q.dihedral(5), Q.dihedral(9), Q.trivial_quandle(4)):
        via_stab = sym.aut_is_doubly_transitive(x)
        via_bfs = sym.automorphism_group_backtrack(x).is_k_transitive(2)
        assert via_stab == via_bfs
    assert sym.aut_is_doubly_transitive(Q.dihedral(5))
    assert not sym.aut_is_doubly_transitive(Q.dihedral(9))   # 54 < 72


def test_isomorphism_found_and_verified():
    x = Q.dihedral(5)
    relabel = Permutation([2, 4, 1, 0, 3])
    img = relabel.images
    moved = [[0] * 5 for _ in range(5)]
    for a in range(5):
        for b in range(5):
            moved[img[a]][img[b]] = img[x.op(a, b)]
    y = Q.validate_axioms(moved)
    iso = sym.quandle_isomorphic(x, y)
    assert iso is not None
    for a in range(5):
        for b in range(5):
            assert iso(x.op(a, b)) == y.op(iso(a), iso(b))


def test_isomorphism_rejects():
    assert sym.quandle_isomorphic(Q.dihedral(4), Q.trivial_quandle(4)) is None
    assert sym.quandle_isomorphic(Q.dihedral(3), Q.dihedral(5)) is None
    z5 = G.make_cyclic(5)
    a = Q.alexander(z5, G.scalar_map(z5, 2))
    b = Q.alexander(z5, G.scalar_map(z5, 3))
    # distinct scalars give distinct classes: order 5 has three connected quandles
    assert sym.quandle_isomorphic(a, b) is None
    assert sym.quandle_isomorphic(a, a) is not None


def test_embedding_report_odd():
    x = Q.dihedral(9)
    rep = sym.embed_in_conj_inn(x)
    assert rep.is_homomorphism
    assert rep.is_injective
    assert rep.is_embedding
    assert rep.inn_order == 18


def test_embedding_report_even_collision():
    rep = sym.embed_in_conj_inn(Q.dihedral(4))
    assert rep.is_homomorphism        # conjugation identity is axiom 3
    assert not rep.is_injective
    assert rep.injectivity_witness == (0, 2)
    assert not rep.is_embedding


def test_analysis_fields():
    info = sym.analyze_quandle(Q.dihedral(7))
    assert (info.order, info.inn_order, info.aut_order) == (7, 14, 42)
    assert info.connected and info.involutory and not info.commutative
    assert info.aut_doubly_transitive and not info.two_point_homogeneous
    d = info.to_dict()
    assert d["automorphism_group_order"] == 42


def test_analysis_order_one():
    info = sym.analyze_quandle(Q.trivial_quandle(1))
    assert info.two_point_homogeneous is None
    assert info.aut_doubly_transitive is None
    assert info.connected


def test_column_profile_is_isomorphism_invariant():
    x = Q.dihedral(6)
    img = (3, 5, 0, 2, 4, 1)
    moved = [[0] * 6 for _ in range(6)]
    for a in range(6):
        for b in range(6):
            moved[img[a]][img[b]] = img[x.op(a, b)]
    y = Q.validate_axioms(moved)
    assert sym._column_profile(x) == sym._column_profile(y)


def test_enumerated_isomorphism_classes_order_up_to_4():
    # 1, 1, 3, 7 pairwise non-isomorphic classes
    for n, want in ((1, 1), (2, 1), (3, 3), (4, 7)):
        reps = []
        for x in Q.enumerate_quandle_tables(n):
            if not any(sym.quandle_isomorphic(x, y) is not None for y in reps):
                reps.append(x)
        assert len(reps) == want
