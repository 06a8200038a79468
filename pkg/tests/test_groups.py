"""Finite groups: constructors, validation, automorphisms, twisted maps.

Automorphism counts are frozen from the all-bijections brute-force oracle
(run in-line here for every catalog group of order <= 8) and from unit
counts for cyclic groups.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import quandles.groups as G

# order of the automorphism group, brute-forced over all bijections fixing 0
AUT_ORDERS = {
    "Z5": 4,        # units mod 5
    "Z9": 6,
    "Z2xZ2": 6,     # GL(2,2)
    "Z3xZ3": 48,    # GL(2,3)
    "S3": 6,
    "Q8": 24,
    "D4": 8,
    "Z2xZ2xZ2": 168,  # GL(3,2)
    "S4": 24,
}


def test_cyclic_tables():
    assert G.make_cyclic(1).table.tolist() == [[0]]
    assert G.make_cyclic(3).table[1][2] == 0
    z4 = G.make_cyclic(4)
    assert z4.table[2][2] == 0
    assert z4.table[1][1] == 2


def test_abelian_single_factor_matches_cyclic():
    a = G.make_abelian([6])
    b = G.make_cyclic(6)
    assert a.table.tolist() == b.table.tolist()


def test_abelian_constructions():
    v4 = G.make_abelian([2, 2])
    assert all(v4.table[a][a] == 0 for a in range(4))
    g9 = G.make_abelian([3, 3])
    assert all(G.element_order(g9, a) == 3 for a in range(1, 9))
    factors, coords = G.make_abelian([2, 3]).abelian_coordinates
    assert factors == (2, 3)
    assert coords[5] == (1, 2)   # mixed radix
    with pytest.raises(ValueError):
        G.make_abelian([])


def test_symmetric_group():
    s3 = G.make_symmetric(3)
    assert s3.order == 6
    assert not s3.is_abelian()
    s3.validate()
    with pytest.raises(ValueError):
        G.make_symmetric(7)


def test_named_groups_validate():
    for g in (G.make_dihedral_group(4), G.make_quaternion8(), G.make_dicyclic(4),
              G.direct_product(G.make_quaternion8(), G.make_cyclic(2))):
        g.validate()
    assert G.make_dicyclic(4).order == 16
    assert G.make_dihedral_group(5).order == 10


def test_quaternion_structure():
    q8 = G.make_quaternion8()
    assert q8.order == 8
    assert len(G.center(q8)) == 2
    assert sum(1 for a in range(8) if G.element_order(q8, a) == 2) == 1


def test_direct_product():
    g = G.direct_product(G.make_cyclic(3), G.make_symmetric(3))
    assert g.order == 18
    assert not g.is_abelian()
    g.validate()


def test_validation_rejects_broken_tables():
    bad = G.make_cyclic(4).table.copy()
    bad[1][2], bad[1][3] = bad[1][3], bad[1][2]
    with pytest.raises(ValueError):
        G.FiniteGroup(bad, validate=True)
    bad = G.make_cyclic(3).table.copy()
    bad[0] = [1, 2, 0]
    with pytest.raises(ValueError):
        G.FiniteGroup(bad, validate=True)


def test_inverses_and_power():
    g = G.make_cyclic(12)
    assert g.inv(5) == 7
    assert g.power(5, 0) == 0
    assert g.power(5, 7) == 35 % 12
    assert g.power(5, -1) == 7
    q8 = G.make_quaternion8()
    for a in range(8):
        assert q8.mul(a, q8.inv(a)) == 0


def test_center():
    assert G.center(G.make_symmetric(3)) == [0]
    assert len(G.center(G.make_quaternion8())) == 2
    assert G.center(G.make_abelian([5])) == list(range(5))


def test_automorphism_counts():
    for name, want in AUT_ORDERS.items():
        g = G.group_by_name(name.lower())
        assert len(G.automorphism_group(g)) == want, name


def test_automorphism_search_matches_brute_force():
    for g in G.catalog_groups(8):
        fast = {phi.images for phi in G.automorphism_group(g)}
        slow = {phi.images for phi in G.brute_force_group_automorphisms(g)}
        assert fast == slow, g.name


def test_automorphisms_form_a_group():
    g = G.make_quaternion8()
    auts = {phi.images for phi in G.automorphism_group(g)}
    for a in list(auts)[:6]:
        pa = G.map_from_images(g, a)
        assert pa.inverse().images in auts
        for b in list(auts)[:6]:
            pb = G.map_from_images(g, b)
            assert pa.then(pb).images in auts


def test_map_composition_order():
    g = G.make_cyclic(5)
    double = G.scalar_map(g, 2)
    triple = G.scalar_map(g, 3)
    # then: left map applied first
    assert double.then(triple)(1) == 6 % 5


def test_fixed_point_free():
    z5 = G.make_cyclic(5)
    assert G.is_fixed_point_free(G.negation_map(z5))
    z4 = G.make_cyclic(4)
    assert not G.is_fixed_point_free(G.negation_map(z4))   # fixes 2
    assert not G.is_fixed_point_free(G.identity_map(z4))
    with pytest.raises(ValueError):
        G.is_fixed_point_free(G.GroupMap(z4, z4, (0, 0, 0, 0), validate=False))


def test_central_automorphisms():
    q8 = G.make_quaternion8()
    central = [phi for phi in G.automorphism_group(q8) if G.is_central_automorphism(phi)]
    assert len(central) == 4
    z9 = G.make_cyclic(9)
    assert all(G.is_central_automorphism(phi) for phi in G.automorphism_group(z9))


def test_centralizer():
    z5 = G.make_cyclic(5)
    cent = G.centralizer_in_aut(z5, G.scalar_map(z5, 2))
    assert len(cent) == 4   # Aut(Z5) is abelian
    q8 = G.make_quaternion8()
    phi = G.automorphism_group(q8)[5]
    cent = G.centralizer_in_aut(q8, phi)
    assert phi.images in {f.images for f in cent}
    assert G.identity_map(q8).images in {f.images for f in cent}
    assert 24 % len(cent) == 0


def test_twisted_map():
    z5 = G.make_cyclic(5)
    tw = G.twisted_map(G.negation_map(z5))
    assert tw.is_homomorphism and tw.is_bijective
    assert tw.images == tuple((-2 * a) % 5 for a in range(5))
    z4 = G.make_cyclic(4)
    tw = G.twisted_map(G.negation_map(z4))
    assert tw.is_homomorphism and not tw.is_bijective
    assert tw.as_group_map(z4).images == tw.images


def test_scalar_and_matrix_maps():
    g9 = G.make_abelian([3, 3])
    assert G.scalar_map(g9, 2).images == G.matrix_map(g9, [[2, 0], [0, 2]]).images
    with pytest.raises(ValueError):
        G.matrix_map(g9, [[1, 0], [2, 0]])   # determinant 0
    with pytest.raises(ValueError):
        G.scalar_map(G.make_cyclic(4), 2)    # not a unit
    with pytest.raises(ValueError):
        G.scalar_map(G.make_symmetric(3), 2)


def test_doubling_image():
    assert G.doubling_image(G.make_cyclic(9)) == list(range(9))
    assert G.doubling_image(G.make_cyclic(4)) == [0, 2]
    assert G.doubling_image(G.make_abelian([2, 2])) == [0]


def test_elementary_abelian():
    assert G.is_elementary_abelian(G.make_abelian([3, 3]))
    assert G.is_elementary_abelian(G.make_cyclic(5))
    assert not G.is_elementary_abelian(G.make_cyclic(9))
    assert not G.is_elementary_abelian(G.make_symmetric(3))


def test_catalog():
    cat = G.catalog_groups(16)
    names = [g.name for g in cat]
    assert len(names) == len(set(names))
    assert all(g.order <= 16 for g in cat)
    # one entry per abelian isomorphism class: 1,1,1,2,1,1,1,3,2,1,1,2,1,1,1,5
    abelian = [g for g in cat if g.is_abelian()]
    assert len(abelian) == 25
    assert any(not g.is_abelian() for g in cat)


def test_group_by_name():
    assert G.group_by_name("z6").order == 6
    assert G.group_by_name("s3").order == 6
    assert G.group_by_name("q8").order == 8
    assert G.group_by_name("z3xz5").order == 15
    with pytest.raises(ValueError):
        G.group_by_name("nope")


def test_group_file_round_trip(tmp_path):
    g = G.make_quaternion8()
    path = tmp_path / "q8.grp"
    G.save_group(g, path)
    h = G.load_group(path)
    assert h.table.tolist() == g.table.tolist()
    path.write_text("2\n0 1\n1 1\n")
    with pytest.raises(ValueError):
        G.load_group(path)


def test_euler_phi():
    assert [G.euler_phi(n) for n in (1, 2, 9, 10, 11)] == [1, 1, 6, 4, 10]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=3))
def test_abelian_factors_always_give_groups(factors):
    g = G.make_abelian(factors)
    g.validate()
    assert g.is_abelian()
    # negation is fixed-point free exactly on odd orders
    odd = g.order % 2 == 1
    if g.order > 1:
        assert G.is_fixed_point_free(G.negation_map(g)) == odd
