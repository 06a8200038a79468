"""Finite quandles built from finite groups.

Construction of conjugation, Takasaki and (generalized) Alexander quandles,
exact automorphism and inner automorphism groups, connectivity and
transitivity tests, and machine verification of the structure theorems these
families satisfy on exhaustive small-order catalogs.
"""

from .perms import Permutation, PermGroup, compose, group_from_generators
from .groups import (
    FiniteGroup,
    GroupMap,
    TwistedMap,
    make_cyclic,
    make_abelian,
    make_symmetric,
    make_quaternion8,
    make_dihedral_group,
    make_dicyclic,
    direct_product,
    center,
    element_order,
    automorphism_group,
    brute_force_group_automorphisms,
    identity_map,
    negation_map,
    scalar_map,
    matrix_map,
    map_from_images,
    is_fixed_point_free,
    is_central_automorphism,
    twisted_map,
    centralizer_in_aut,
    doubling_image,
    is_elementary_abelian,
    catalog_groups,
    group_by_name,
    load_group,
    save_group,
)
from .quandle import (
    Quandle,
    QuandleAxiomError,
    Provenance,
    validate_axioms,
    trivial_quandle,
    conj_quandle,
    takasaki,
    alexander,
    gen_alexander,
    dihedral,
    is_commutative,
    is_involutory,
    inner_translation,
    enumerate_quandle_tables,
    load_quandle,
    save_quandle,
    quandle_to_text,
)
from .symmetry import (
    inner_group,
    automorphism_group_backtrack,
    brute_force_aut,
    is_connected,
    is_two_point_homogeneous,
    aut_is_doubly_transitive,
    quandle_isomorphic,
    embed_in_conj_inn,
    EmbeddingReport,
    QuandleAnalysis,
    analyze_quandle,
)
from .theorems import (
    TheoremReport,
    check_prop_embedding_zg_caut,
    check_thm_takasaki_aut,
    check_corollary_dihedral,
    check_prop_conj_embedding,
    check_commutativity_criterion,
    check_lemma_central,
    check_thm_connected_abelian,
    check_thm_bae_choe,
    check_thm_fpf_structure,
    check_lemma_transitive_aut,
    check_thm_fnt,
    check_mccarron_bound,
    check_prop_embed_conj_inn,
    THEOREM_SUITES,
    run_suite,
)

__version__ = "0.1.0"
