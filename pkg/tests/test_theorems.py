"""The verification checks themselves: contracts, preconditions, plumbing.

Each check runs here on a couple of instances; the exhaustive sweeps live
in the acceptance tests.  Known counts appearing below: |Autcent(Q8)| = 4,
|Aut(Conj(S3))| = 6, |Aut(Alex((Z/3)^2, 2))| = 432, and the isomorphism
class counts 1, 1, 3, 7 for quandle orders 1..4.
"""

import pytest

import quandles.groups as G
from quandles import theorems as T


def test_report_plumbing():
    rep = T.TheoremReport("demo")
    assert rep.passed
    rep.fail("broken at x=1")
    assert not rep.passed
    d = rep.to_dict()
    assert d["theorem"] == "demo" and d["failures"] == ["broken at x=1"]
    merged = T.TheoremReport.merge("demo", [rep, T.TheoremReport("demo", instances_tested=3)])
    assert merged.instances_tested == 3
    assert not merged.passed


def test_alexander_embedding_check():
    q8 = G.make_quaternion8()
    for phi in G.automorphism_group(q8)[:4]:
        rep = T.check_prop_embedding_zg_caut(q8, phi)
        assert rep.passed
        assert rep.instances_tested >= 2
    z7 = G.make_cyclic(7)
    assert T.check_prop_embedding_zg_caut(z7, G.scalar_map(z7, 3)).passed


def test_takasaki_check():
    assert T.check_thm_takasaki_aut(G.make_cyclic(9)).passed
    rep = T.check_thm_takasaki_aut(G.make_abelian([3, 3]))
    assert rep.passed
    assert rep.annotations["aut_order[Z3xZ3]"] == 432
    with pytest.raises(ValueError):
        T.check_thm_takasaki_aut(G.make_cyclic(4))
    with pytest.raises(ValueError):
        T.check_thm_takasaki_aut(G.make_symmetric(3))


def test_dihedral_check():
    rep = T.check_corollary_dihedral(11)
    assert rep.passed
    assert rep.annotations["aut_order[R11]"] == 110
    assert T.check_corollary_dihedral(1).passed
    with pytest.raises(ValueError):
        T.check_corollary_dihedral(6)


def test_conj_embedding_check():
    rep = T.check_prop_conj_embedding(G.make_symmetric(3))
    assert rep.passed
    assert rep.annotations["aut_conj[S3]"] == 6
    assert rep.annotations["embedding_onto[S3]"] is True
    rep = T.check_prop_conj_embedding(G.make_quaternion8())
    assert rep.passed
    assert rep.annotations["embedding_onto[Q8]"] is False


def test_commutativity_check():
    rep = T.check_commutativity_criterion(9)
    assert rep.passed
    assert rep.instances_tested == sum(
        len(G.automorphism_group(g)) for g in G.catalog_groups(9)
    )
    assert T._commutativity_one(G.make_symmetric(3)).passed


def test_central_lemma_check():
    rep = T.check_lemma_central(8)
    assert rep.passed
    assert rep.annotations["autcent[Q8]"] == 4
    assert T._central_one(G.make_abelian([2, 4])).passed


def test_connected_abelian_check():
    rep = T.check_thm_connected_abelian(8)
    assert rep.passed
    one = T._connected_abelian_one(G.make_quaternion8())
    assert one.instances_tested == 4   # the central automorphisms are involutory here
    assert rep.instances_tested >= one.instances_tested
    with pytest.raises(ValueError):
        T._connected_abelian_one(G.make_cyclic(5))


def test_bae_choe_check():
    rep = T.check_thm_bae_choe(8)
    assert rep.passed
    assert rep.instances_tested == sum(
        len(G.automorphism_group(g))
        for g in G.catalog_groups(8, include_nonabelian=False)
    )
    assert T._bae_choe_one(G.make_abelian([2, 4])).passed
    with pytest.raises(ValueError):
        T._bae_choe_one(G.make_symmetric(3))


def test_fpf_structure_check():
    z5 = G.make_cyclic(5)
    assert T.check_thm_fpf_structure(z5, G.scalar_map(z5, 2)).passed
    g9 = G.make_abelian([3, 3])
    assert T.check_thm_fpf_structure(g9, G.scalar_map(g9, 2)).passed
    with pytest.raises(ValueError):
        T.check_thm_fpf_structure(z5, G.identity_map(z5))


def test_transitive_aut_check():
    rep = T.check_lemma_transitive_aut(9)
    assert rep.passed
    assert rep.instances_tested == len(G.catalog_groups(9)) - 1   # trivial group skipped
    assert T._aut_transitive_one(G.make_abelian([2, 2])).passed
    assert T._aut_transitive_one(G.make_quaternion8()).passed
    with pytest.raises(ValueError):
        T._aut_transitive_one(G.make_cyclic(1))


def test_doubly_transitive_check():
    rep = T.check_thm_fnt(3, 2, 2)
    assert rep.passed
    assert rep.annotations["aut_order[p=3, n=2, u=2]"] == 432
    with pytest.raises(ValueError):
        T.check_thm_fnt(4, 1, 3)    # not prime
    with pytest.raises(ValueError):
        T.check_thm_fnt(5, 1, 1)    # scalar 1 fixes everything
    with pytest.raises(ValueError):
        T.check_thm_fnt(5, 0, 2)


def test_mccarron_check():
    rep = T.check_mccarron_bound(1, 4)
    assert rep.passed
    assert rep.annotations["classes[3]"] == 3
    assert rep.annotations["classes[4]"] == 7
    with pytest.raises(ValueError):
        T.check_mccarron_bound(1, 7)


def test_conj_inn_embedding_check():
    assert T.check_prop_embed_conj_inn(G.make_cyclic(9)).passed
    assert T._negation_failure_witness().passed
    with pytest.raises(ValueError):
        T.check_prop_embed_conj_inn(G.make_cyclic(4))


def test_run_suite_selection():
    reports = T.run_suite(["dihedral-corollary"], ns=(3, 5))
    assert len(reports) == 1
    assert reports[0].passed
    assert reports[0].instances_tested == 12
    with pytest.raises(ValueError):
        T.run_suite(["no-such-theorem"])


def test_suite_registry_is_complete():
    assert set(T.THEOREM_SUITES) == {
        "conj-inn-embedding", "alexander-embedding", "takasaki-aut",
        "dihedral-corollary", "conj-embedding", "commutativity",
        "central-lemma", "connected-abelian", "bae-choe", "fpf-structure",
        "aut-transitive", "doubly-transitive", "mccarron",
    }
    for fn, desc in T.THEOREM_SUITES.values():
        assert callable(fn) and desc
