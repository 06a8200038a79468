"""Machine checks for the structure theory of quandles built from groups.

Each check verifies one statement about these families on concrete
instances: it recomputes both sides of the claim through independent code
paths (group-side automorphism search vs quandle-side backtracking, direct
tuple BFS vs stabilizer criteria) and returns a TheoremReport listing every
failing instance with a witness.  An empty failure list on an exhaustive
family is the verification.

The suite registry at the bottom binds each check to its default instance
family; the command line and the acceptance tests run through it.
"""

import itertools
import time
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from . import groups as G
from . import quandle as Q
from . import symmetry as sym
from .perms import PermGroup, Permutation


@dataclass
class TheoremReport:
    """Outcome of one verification run."""

    theorem_id: str
    instances_tested: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    annotations: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.failures

    def fail(self, message):
        self.failures.append(message)

    def to_dict(self):
        return {
            "theorem": self.theorem_id,
            "instances_tested": self.instances_tested,
            "passed": self.passed,
            "failures": list(self.failures),
            "elapsed_seconds": round(self.elapsed, 3),
            "annotations": self.annotations,
        }

    @classmethod
    def merge(cls, theorem_id, reports):
        out = cls(theorem_id)
        for rep in reports:
            out.instances_tested += rep.instances_tested
            out.failures.extend(rep.failures)
            out.elapsed += rep.elapsed
            for key, val in rep.annotations.items():
                out.annotations[key] = val
        return out


def _timed(report, t0):
    report.elapsed = time.time() - t0
    return report


def _preserves(quandle, images):
    """images (array-like permutation) respects the quandle table."""
    p = np.asarray(images, dtype=np.int64)
    t = quandle.table
    return bool(np.array_equal(p[t], t[p[:, None], p[None, :]]))


def _translation(group, a):
    """Right translation b -> b*a as an image tuple."""
    return tuple(int(x) for x in group.table[:, a])


def _phi_name(phi):
    return "phi=" + ",".join(map(str, phi.images))


# -- embedding of Z(G) x| C_Aut(phi) into Aut of the generalized Alexander quandle


def check_prop_embedding_zg_caut(group, phi, pair_cap=64):
    """Verify that (a, f) -> t_a ; f embeds Z(G) x| C_Aut(G)(phi) into
    Aut(Alex(G, phi)).

    Clauses: every central translation and every centralizer element
    preserves the quandle; the map is injective; and it is a homomorphism
    from the semidirect product (a1,f1)(a2,f2) = (a1 f1(a2), f1 f2).  Pairs
    are checked exhaustively while the image has at most ``pair_cap``
    elements, and against the generating slices {(a, id)} and {(0, f)}
    above that.
    """
    t0 = time.time()
    rep = TheoremReport("alexander-embedding")
    if not phi.is_automorphism:
        raise ValueError("phi must be an automorphism")
    x = Q.gen_alexander(group, phi)
    zc = G.center(group)
    cent = G.centralizer_in_aut(group, phi)
    tag = f"{group.name}, {_phi_name(phi)}"
    for a in zc:
        if not _preserves(x, _translation(group, a)):
            rep.fail(f"{tag}: central translation t_{a} is not a quandle automorphism")
    for f in cent:
        if not _preserves(x, f.images):
            rep.fail(f"{tag}: centralizer element {f.images} is not a quandle automorphism")

    def embed(a, f):
        ta = _translation(group, a)
        return tuple(ta[fi] for fi in f.images)    # apply f, then translate

    image = {}
    for a in zc:
        for f in cent:
            p = embed(a, f)
            if p in image:
                rep.fail(f"{tag}: not injective, ({a}, {f.images}) collides with {image[p]}")
            image[p] = (a, f.images)

    elements = [(a, f) for a in zc for f in cent]
    if len(elements) <= pair_cap:
        pairs = itertools.product(elements, elements)
    else:
        ident = G.identity_map(group)
        gens = [(a, ident) for a in zc] + [(0, f) for f in cent]
        pairs = itertools.product(elements, gens)
    bad_pairs = 0
    for (a1, f1), (a2, f2) in pairs:
        prod_a = group.mul(a1, f1(a2))
        prod_f_images = tuple(f1.images[i] for i in f2.images)   # f2 first, then f1
        lhs = embed(prod_a, G.GroupMap(group, group, prod_f_images, validate=False))
        p1 = embed(a1, f1)
        p2 = embed(a2, f2)
        rhs = tuple(p1[i] for i in p2)                           # apply (a2,f2) first
        if lhs != rhs:
            bad_pairs += 1
            if bad_pairs <= 3:
                rep.fail(f"{tag}: product law fails at ({a1},{f1.images}) ({a2},{f2.images})")
    rep.instances_tested = len(elements)
    return _timed(rep, t0)


# -- Takasaki quandles: Aut = G x| Aut(G), Inn = 2G x| Z2 ---------------------


def check_thm_takasaki_aut(group):
    """On an abelian group of odd order: every automorphism of the Takasaki
    quandle splits uniquely as a translation followed by a group
    automorphism, |Aut| = |G| |Aut(G)|, and |Inn| = 2 |2G| (for |G| > 1).

    The group-side automorphism list and the quandle-side backtracking are
    fully independent computations; this check confronts them.
    """
    t0 = time.time()
    rep = TheoremReport("takasaki-aut")
    if not group.is_abelian():
        raise ValueError(f"{group.name} is not abelian")
    if group.order % 2 == 0:
        raise ValueError(f"{group.name} has even order")
    n = group.order
    x = Q.takasaki(group)
    aut = sym.automorphism_group_backtrack(x, max_order=max(sym._BACKTRACK_BOUND, n))
    auts_g = G.automorphism_group(group)
    tag = group.name

    if aut.order() != n * len(auts_g):
        rep.fail(f"{tag}: |Aut(T(G))| = {aut.order()} != {n} * {len(auts_g)}")

    # constructive direction: every t_c and every group automorphism preserves T(G)
    for c in range(n):
        if not _preserves(x, _translation(group, c)):
            rep.fail(f"{tag}: translation t_{c} is not a quandle automorphism")
    for h in auts_g:
        if not _preserves(x, h.images):
            rep.fail(f"{tag}: group automorphism {h.images} does not preserve T(G)")

    # factorization: f = t_{f(0)} ; h with h a group automorphism
    m = aut.order()
    elems = np.empty((m, n), dtype=np.int32)
    for i, t in enumerate(aut._element_tuples()):
        elems[i] = t
    tbl = group.table
    inv = group.inverse_array()
    shifted = tbl[elems, inv[elems[:, 0]][:, None]]      # h = f - f(0)
    good = np.ones(m, dtype=bool)
    gens, _ = G._greedy_generators(group)
    for g in gens:
        lhs = shifted[:, tbl[:, g]]
        rhs = tbl[shifted, shifted[:, g][:, None]]
        good &= (lhs == rhs).all(axis=1)
    good &= shifted[:, 0] == 0
    if not good.all():
        idx = int(np.nonzero(~good)[0][0])
        rep.fail(f"{tag}: automorphism {tuple(int(v) for v in elems[idx])} does not factor")

    inn = sym.inner_group(x)
    expected_inn = 1 if n == 1 else 2 * len(G.doubling_image(group))
    if inn.order() != expected_inn:
        rep.fail(f"{tag}: |Inn(T(G))| = {inn.order()} != {expected_inn}")
    rep.instances_tested = m + 2
    rep.annotations[f"aut_order[{tag}]"] = aut.order()
    return _timed(rep, t0)


def check_corollary_dihedral(n):
    """Odd dihedral quandle: |Aut(R_n)| = n phi(n), |Inn(R_n)| = 2n (n > 1),
    and Inn is generated by the maps y -> 2a - y, each matching S_a."""
    t0 = time.time()
    rep = TheoremReport("dihedral-corollary")
    if n % 2 == 0:
        raise ValueError(f"n must be odd, got {n}")
    x = Q.dihedral(n)
    aut = sym.automorphism_group_backtrack(x)
    if aut.order() != n * G.euler_phi(n):
        rep.fail(f"R{n}: |Aut| = {aut.order()} != {n} * {G.euler_phi(n)}")
    inn = sym.inner_group(x)
    expected = 1 if n == 1 else 2 * n
    if inn.order() != expected:
        rep.fail(f"R{n}: |Inn| = {inn.order()} != {expected}")
    reflect = [(-y) % n for y in range(n)]
    gens = []
    for a in range(n):
        timage = [(2 * a + v) % n for v in reflect]      # reflect, then shift by 2a
        gens.append(Permutation(timage))
        if tuple(timage) != x.column(a):
            rep.fail(f"R{n}: S_{a} != translation-by-2{a} after reflection")
    if PermGroup(gens, degree=n).order() != inn.order():
        rep.fail(f"R{n}: translation-reflection maps do not generate Inn")
    rep.instances_tested = n + 2
    rep.annotations[f"aut_order[R{n}]"] = aut.order()
    return _timed(rep, t0)


def check_prop_conj_embedding(group, pair_cap=64):
    """Conjugation quandle: (a, f) -> t_a ; f embeds Z(G) x| Aut(G) into
    Aut(Conj(G)); |Inn(Conj(G))| = |G : Z(G)|.  Whether the embedding is
    onto is reported as an annotation, not asserted.
    """
    t0 = time.time()
    rep = TheoremReport("conj-embedding")
    x = Q.conj_quandle(group, 1)
    n = group.order
    zc = G.center(group)
    auts_g = G.automorphism_group(group)
    tag = group.name
    for a in zc:
        if not _preserves(x, _translation(group, a)):
            rep.fail(f"{tag}: central translation t_{a} does not preserve Conj(G)")
    for f in auts_g:
        if not _preserves(x, f.images):
            rep.fail(f"{tag}: group automorphism {f.images} does not preserve Conj(G)")

    def embed(a, f):
        ta = _translation(group, a)
        return tuple(ta[fi] for fi in f.images)

    image = {}
    for a in zc:
        for f in auts_g:
            p = embed(a, f)
            if p in image:
                rep.fail(f"{tag}: embedding not injective at ({a}, {f.images})")
            image[p] = (a, f.images)

    ident = G.identity_map(group)
    elements = [(a, f) for a in zc for f in auts_g]
    if len(elements) <= pair_cap:
        pairs = itertools.product(elements, elements)
    else:
        gens = [(a, ident) for a in zc] + [(0, f) for f in auts_g]
        pairs = itertools.product(elements, gens)
    for (a1, f1), (a2, f2) in pairs:
        prod_a = group.mul(a1, f1(a2))
        prod_f = tuple(f1.images[i] for i in f2.images)
        lhs = embed(prod_a, G.GroupMap(group, group, prod_f, validate=False))
        rhs = tuple(embed(a1, f1)[i] for i in embed(a2, f2))
        if lhs != rhs:
            rep.fail(f"{tag}: product law fails at ({a1},...)({a2},...)")
            break

    inn = sym.inner_group(x)
    if inn.order() != n // len(zc):
        rep.fail(f"{tag}: |Inn(Conj(G))| = {inn.order()} != |G|/|Z(G)| = {n // len(zc)}")
    aut = sym.automorphism_group_backtrack(x, max_order=max(sym._BACKTRACK_BOUND, n))
    rep.annotations[f"aut_conj[{tag}]"] = aut.order()
    rep.annotations[f"embedding_onto[{tag}]"] = aut.order() == len(zc) * len(auts_g)
    rep.instances_tested = len(elements)
    return _timed(rep, t0)


# -- commutativity and central automorphisms ----------------------------------


def _commutativity_one(group, phis=None):
    """The commutativity clauses on a single group, over the given maps."""
    t0 = time.time()
    rep = TheoremReport("commutativity")
    if phis is None:
        phis = G.automorphism_group(group)
    abelian = group.is_abelian()
    tbl = group.table
    rng = np.arange(group.order)
    diag = tbl[rng, rng]
    tag = group.name
    for phi in phis:
        img = np.asarray(phi.images)
        x = Q.gen_alexander(group, phi)
        comm = Q.is_commutative(x)
        squares_back = bool((img[diag] == rng).all())
        if comm and not squares_back:
            rep.fail(f"{tag}, {_phi_name(phi)}: commutative but phi(a*a) != a")
        if abelian:
            two_phi_id = bool((tbl[img, img] == rng).all())
            if comm != two_phi_id:
                rep.fail(f"{tag}, {_phi_name(phi)}: commutative={comm} but 2phi=id is {two_phi_id}")
        elif squares_back and comm:
            rep.fail(f"{tag}, {_phi_name(phi)}: non-abelian group yet commutative quandle")
    rep.instances_tested = len(phis)
    return _timed(rep, t0)


def check_commutativity_criterion(catalog_bound=16):
    """A commutative Alex(G, phi) forces phi(a*a) = a; over an abelian group
    commutativity is exactly 2 phi = id; over a non-abelian group
    phi(a*a) = a never yields a commutative quandle.  Sweeps every catalog
    group up to the bound and every automorphism of it."""
    reports = [_commutativity_one(g) for g in G.catalog_groups(catalog_bound)]
    return TheoremReport.merge("commutativity", reports)


def _central_one(group, phis=None):
    """The central-automorphism clauses on a single group."""
    t0 = time.time()
    rep = TheoremReport("central-lemma")
    if phis is None:
        phis = G.automorphism_group(group)
    central = [phi for phi in phis if G.is_central_automorphism(phi)]
    zc = set(G.center(group))
    tag = group.name
    seen = {}
    for phi in central:
        tw = G.twisted_map(phi)
        if not tw.is_homomorphism:
            rep.fail(f"{tag}, {_phi_name(phi)}: twisted map is not a homomorphism")
        if any(v not in zc for v in tw.images):
            rep.fail(f"{tag}, {_phi_name(phi)}: twisted map leaves the center")
        if tw.images in seen:
            rep.fail(f"{tag}: twisted maps collide for {_phi_name(phi)} and {seen[tw.images]}")
        seen[tw.images] = _phi_name(phi)
        if not group.is_abelian() and G.is_fixed_point_free(phi):
            rep.fail(f"{tag}, {_phi_name(phi)}: fixed-point-free central map on a non-abelian group")
    if group.is_abelian() and len(central) != len(phis):
        rep.fail(f"{tag}: abelian group but Autcent has {len(central)} of {len(phis)} maps")
    rep.instances_tested = len(central)
    rep.annotations[f"autcent[{tag}]"] = len(central)
    return _timed(rep, t0)


def check_lemma_central(catalog_bound=16):
    """Central automorphisms: a -> a^-1 phi(a) is a homomorphism into the
    center, phi -> twisted(phi) is injective on Autcent(G), and a
    fixed-point-free central automorphism forces G abelian.  Sweeps every
    catalog group up to the bound; |Autcent| per group sits in the
    annotations."""
    reports = [_central_one(g) for g in G.catalog_groups(catalog_bound)]
    return TheoremReport.merge("central-lemma", reports)


def _connected_abelian_one(group, phis=None):
    """The connectivity obstruction on a single non-abelian group."""
    t0 = time.time()
    rep = TheoremReport("connected-abelian")
    if group.is_abelian():
        raise ValueError(f"{group.name} is abelian; the claim concerns non-abelian groups")
    if phis is None:
        phis = G.automorphism_group(group)
    ident = tuple(range(group.order))
    count = 0
    for phi in phis:
        if not G.is_central_automorphism(phi):
            continue
        if tuple(phi.images[i] for i in phi.images) != ident:
            continue
        count += 1
        x = Q.gen_alexander(group, phi)
        if sym.is_connected(x):
            rep.fail(f"{group.name}, {_phi_name(phi)}: connected despite central involutory phi")
    rep.instances_tested = count
    return _timed(rep, t0)


def check_thm_connected_abelian(catalog_bound=16):
    """For an involutory central automorphism of a non-abelian group, the
    generalized Alexander quandle is never connected.  Sweeps the
    non-abelian catalog groups up to the bound."""
    groups = G.catalog_groups(catalog_bound, include_abelian=False)
    return TheoremReport.merge(
        "connected-abelian", [_connected_abelian_one(g) for g in groups]
    )


def _bae_choe_one(group, phis=None):
    """The three-way equivalence on a single abelian group."""
    t0 = time.time()
    rep = TheoremReport("bae-choe")
    if not group.is_abelian():
        raise ValueError(f"{group.name} is not abelian")
    if phis is None:
        phis = G.automorphism_group(group)
    for phi in phis:
        x = Q.alexander(group, phi)
        connected = sym.is_connected(x)
        fpf = G.is_fixed_point_free(phi)
        bij = G.twisted_map(phi).is_bijective
        if not (connected == fpf == bij):
            rep.fail(
                f"{group.name}, {_phi_name(phi)}: connected={connected}, "
                f"fixed-point-free={fpf}, twisted-bijective={bij}"
            )
    rep.instances_tested = len(phis)
    return _timed(rep, t0)


def check_thm_bae_choe(catalog_bound=16):
    """On an abelian group the following agree for every automorphism phi:
    Alex(G, phi) connected, phi fixed-point free, and a -> phi(a) - a
    bijective.  Sweeps the abelian catalog groups up to the bound."""
    groups = G.catalog_groups(catalog_bound, include_nonabelian=False)
    return TheoremReport.merge("bae-choe", [_bae_choe_one(g) for g in groups])


# -- fixed-point-free structure and transitivity -------------------------------


def check_thm_fpf_structure(group, phi):
    """Fixed-point-free phi on an abelian group: the stabilizer of 0 in
    Aut(Alex(G, phi)) is exactly the centralizer of phi in Aut(G), every
    automorphism is a translation composed with a centralizer element,
    |Aut| = |G| |C|, and |Inn| = |G| ord(phi)."""
    t0 = time.time()
    rep = TheoremReport("fpf-structure")
    if not group.is_abelian():
        raise ValueError(f"{group.name} is not abelian")
    if not G.is_fixed_point_free(phi):
        raise ValueError("phi must be fixed-point free")
    n = group.order
    x = Q.alexander(group, phi)
    cent = G.centralizer_in_aut(group, phi)
    cent_set = {f.images for f in cent}
    aut = sym.automorphism_group_backtrack(x, max_order=max(sym._BACKTRACK_BOUND, n))
    tag = f"{group.name}, {_phi_name(phi)}"

    stab = aut.stabilizer(0)
    if stab.order() != len(cent):
        rep.fail(f"{tag}: |Aut_0| = {stab.order()} != |C| = {len(cent)}")
    else:
        for e in stab.elements():
            if e.images not in cent_set:
                rep.fail(f"{tag}: stabilizer element {e.images} outside the centralizer")
                break

    if aut.order() != n * len(cent):
        rep.fail(f"{tag}: |Aut| = {aut.order()} != {n} * {len(cent)}")

    tbl = group.table
    inv = group.inverse_array()
    for f in aut._element_tuples():
        shift = int(inv[f[0]])
        h = tuple(int(tbl[v, shift]) for v in f)
        if h not in cent_set:
            rep.fail(f"{tag}: automorphism {f} is not translation ; centralizer-element")
            break

    inn = sym.inner_group(x)
    if inn.order() != n * phi.map_order():
        rep.fail(f"{tag}: |Inn| = {inn.order()} != {n} * ord(phi) = {n * phi.map_order()}")
    rep.instances_tested = aut.order() + 2
    return _timed(rep, t0)


def _aut_transitive_one(group):
    """The transitivity test on a single nontrivial group."""
    t0 = time.time()
    rep = TheoremReport("aut-transitive")
    if group.order == 1:
        raise ValueError("transitivity on non-identity elements needs a nontrivial group")
    auts = G.automorphism_group(group)
    reach = {phi.images[1] for phi in auts}
    frontier = list(reach)
    while frontier:
        e = frontier.pop()
        for phi in auts:
            v = phi.images[e]
            if v not in reach:
                reach.add(v)
                frontier.append(v)
    transitive = reach == set(range(1, group.order))
    elem = G.is_elementary_abelian(group)
    if transitive != elem:
        rep.fail(
            f"{group.name}: Aut transitive on non-identity = {transitive}, "
            f"elementary abelian = {elem}"
        )
    rep.instances_tested = 1
    return _timed(rep, t0)


def check_lemma_transitive_aut(catalog_bound=16):
    """Aut(G) is transitive on the non-identity elements exactly when G is
    elementary abelian.  Sweeps the nontrivial catalog groups up to the
    bound."""
    groups = [g for g in G.catalog_groups(catalog_bound) if g.order > 1]
    return TheoremReport.merge("aut-transitive", [_aut_transitive_one(g) for g in groups])


def check_thm_fnt(p, n, u):
    """Alex((Z/p)^n, scalar u) with u a unit other than 1: Aut is doubly
    transitive (checked twice: stabilizer criterion and direct pair BFS);
    for n >= 2 the inner group is not transitive on pairs."""
    t0 = time.time()
    rep = TheoremReport("doubly-transitive")
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"p must be prime, got {p}")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if u % p in (0, 1):
        raise ValueError(f"u must be a unit distinct from 1 mod {p}, got {u}")
    group = G.make_abelian([p] * n)
    phi = G.scalar_map(group, u)
    x = Q.alexander(group, phi)
    tag = f"p={p}, n={n}, u={u}"
    aut = sym.automorphism_group_backtrack(x, max_order=max(sym._BACKTRACK_BOUND, group.order))
    via_stabilizer = sym.aut_is_doubly_transitive(x)
    via_bfs = aut.is_k_transitive(2)
    if via_stabilizer != via_bfs:
        rep.fail(f"{tag}: stabilizer criterion {via_stabilizer} != pair BFS {via_bfs}")
    if not via_stabilizer:
        rep.fail(f"{tag}: Aut not doubly transitive")
    if n >= 2 and sym.is_two_point_homogeneous(x):
        rep.fail(f"{tag}: inner group transitive on pairs despite n >= 2")
    rep.instances_tested = 1
    rep.annotations[f"aut_order[{tag}]"] = aut.order()
    return _timed(rep, t0)


# -- the census bound on higher transitivity -----------------------------------


def _quandle_classes(order):
    """Isomorphism classes of quandles of the given order, deterministic."""
    buckets = defaultdict(list)
    labeled = 0
    for x in Q.enumerate_quandle_tables(order):
        labeled += 1
        buckets[sym._column_profile(x)].append(x)
    classes = []
    for key in sorted(buckets):
        reps = []
        for x in buckets[key]:
            if not any(sym.quandle_isomorphic(x, y) is not None for y in reps):
                reps.append(x)
        classes.extend(reps)
    return classes, labeled


def check_mccarron_bound(min_order=1, max_order=6):
    """Census over all quandles of each order: no quandle with 4 or more
    elements is 3-transitive, and at order 3 the dihedral quandle R_3 is the
    unique 3-transitive one."""
    t0 = time.time()
    rep = TheoremReport("mccarron")
    if not 1 <= min_order <= max_order <= 6:
        raise ValueError("census bound must sit inside 1..6")
    for order in range(min_order, max_order + 1):
        classes, labeled = _quandle_classes(order)
        rep.annotations[f"classes[{order}]"] = len(classes)
        rep.annotations[f"labeled[{order}]"] = labeled
        rep.instances_tested += len(classes)
        if order < 3:
            continue
        three_transitive = [x for x in classes if sym.inner_group(x).is_k_transitive(3)]
        if order == 3:
            if len(three_transitive) != 1:
                rep.fail(f"order 3: expected exactly one 3-transitive quandle, found {len(three_transitive)}")
            elif sym.quandle_isomorphic(three_transitive[0], Q.dihedral(3)) is None:
                rep.fail("order 3: the 3-transitive quandle is not R_3")
        elif three_transitive:
            rep.fail(f"order {order}: found {len(three_transitive)} 3-transitive quandles")
    return _timed(rep, t0)


# -- embedding a quandle into the conjugation quandle of its inner group --------


def check_prop_embed_conj_inn(group):
    """For the negation automorphism on an abelian group of odd order,
    a -> S_a is an injective homomorphism into Conj(Inn); the homomorphism
    identity is S_{a*b} = S_b^-1 ; S_a ; S_b."""
    t0 = time.time()
    rep = TheoremReport("conj-inn-embedding")
    if not group.is_abelian():
        raise ValueError(f"{group.name} is not abelian")
    if group.order % 2 == 0:
        raise ValueError(f"{group.name} has even order; negation has a fixed point")
    x = Q.takasaki(group)
    report = sym.embed_in_conj_inn(x)
    if not report.is_homomorphism:
        rep.fail(f"{group.name}: S map is not a homomorphism at {report.homomorphism_witness}")
    if not report.is_injective:
        rep.fail(f"{group.name}: S map is not injective at {report.injectivity_witness}")
    rep.instances_tested = 1
    return _timed(rep, t0)


def _negation_failure_witness():
    """The even-order counterexample: on Z/4 with negation the S map is a
    homomorphism but S_0 = S_2, so injectivity fails."""
    rep = TheoremReport("conj-inn-embedding")
    x = Q.dihedral(4)
    report = sym.embed_in_conj_inn(x)
    if not report.is_homomorphism:
        rep.fail("Z4: homomorphism clause unexpectedly fails")
    if report.is_injective:
        rep.fail("Z4: injectivity unexpectedly holds for an even order")
    if report.injectivity_witness != (0, 2):
        rep.fail(f"Z4: expected collision (0, 2), found {report.injectivity_witness}")
    rep.instances_tested = 1
    return rep


# -- suites ---------------------------------------------------------------------


def _abelian_catalog(max_order, parity=None):
    out = []
    for g in G.catalog_groups(max_order, include_nonabelian=False):
        if parity == "odd" and g.order % 2 == 0:
            continue
        out.append(g)
    return out


def suite_conj_inn_embedding(max_order=15):
    reports = [check_prop_embed_conj_inn(g) for g in _abelian_catalog(max_order, parity="odd")]
    reports.append(_negation_failure_witness())
    return TheoremReport.merge("conj-inn-embedding", reports)


def suite_alexander_embedding(max_order=12):
    reports = []
    for g in G.catalog_groups(max_order):
        for phi in G.automorphism_group(g):
            reports.append(check_prop_embedding_zg_caut(g, phi))
    return TheoremReport.merge("alexander-embedding", reports)


def suite_takasaki(max_order=27):
    reports = []
    for g in _abelian_catalog(max_order, parity="odd"):
        reports.append(check_thm_takasaki_aut(g))
    return TheoremReport.merge("takasaki-aut", reports)


def suite_dihedral(ns=(3, 5, 7, 9, 11)):
    return TheoremReport.merge("dihedral-corollary", [check_corollary_dihedral(n) for n in ns])


def suite_conj_embedding(max_order=12):
    groups = G.catalog_groups(max_order)
    names = {g.name for g in groups}
    for extra in (G.make_symmetric(3), G.make_symmetric(4)):
        if extra.name not in names:
            groups.append(extra)
    return TheoremReport.merge("conj-embedding", [check_prop_conj_embedding(g) for g in groups])


def suite_commutativity(max_order=16):
    return check_commutativity_criterion(max_order)


def suite_central(max_order=16):
    return check_lemma_central(max_order)


def suite_connected_abelian(max_order=16):
    return check_thm_connected_abelian(max_order)


def suite_bae_choe(max_order=16):
    return check_thm_bae_choe(max_order)


def suite_fpf_structure(max_order=12):
    reports = []
    for g in _abelian_catalog(max_order):
        for phi in G.automorphism_group(g):
            if G.is_fixed_point_free(phi):
                reports.append(check_thm_fpf_structure(g, phi))
    return TheoremReport.merge("fpf-structure", reports)


def suite_aut_transitive(max_order=16):
    return check_lemma_transitive_aut(max_order)


def suite_doubly_transitive(cases=((3, 1, 2), (5, 1, 2), (5, 1, 3), (7, 1, 3), (3, 2, 2))):
    return TheoremReport.merge(
        "doubly-transitive", [check_thm_fnt(p, n, u) for p, n, u in cases]
    )


def suite_mccarron(max_order=6):
    return check_mccarron_bound(1, min(max_order, 6))


THEOREM_SUITES = {
    "conj-inn-embedding": (
        suite_conj_inn_embedding,
        "a -> S_a embeds odd Takasaki quandles into Conj(Inn); fails injectivity on Z4",
    ),
    "alexander-embedding": (
        suite_alexander_embedding,
        "Z(G) x| C_Aut(phi) embeds into Aut(Alex(G, phi))",
    ),
    "takasaki-aut": (
        suite_takasaki,
        "odd abelian G: Aut(T(G)) = translations x| Aut(G), |Inn| = 2|2G|",
    ),
    "dihedral-corollary": (
        suite_dihedral,
        "odd n: |Aut(R_n)| = n phi(n) and |Inn(R_n)| = 2n",
    ),
    "conj-embedding": (
        suite_conj_embedding,
        "Z(G) x| Aut(G) embeds into Aut(Conj(G)); |Inn(Conj(G))| = |G:Z(G)|",
    ),
    "commutativity": (
        suite_commutativity,
        "commutative Alex(G, phi) forces phi(a^2) = a; abelian case: 2 phi = id",
    ),
    "central-lemma": (
        suite_central,
        "central phi: twisted map is a homomorphism into Z(G), injectively in phi",
    ),
    "connected-abelian": (
        suite_connected_abelian,
        "involutory central phi on non-abelian G never gives a connected quandle",
    ),
    "bae-choe": (
        suite_bae_choe,
        "abelian G: connected == fixed-point-free == twisted map bijective",
    ),
    "fpf-structure": (
        suite_fpf_structure,
        "fixed-point-free phi: Aut_0 = C(phi), Aut = G x| C(phi), |Inn| = |G| ord(phi)",
    ),
    "aut-transitive": (
        suite_aut_transitive,
        "Aut(G) transitive on non-identity elements iff G elementary abelian",
    ),
    "doubly-transitive": (
        suite_doubly_transitive,
        "scalar quandles over (Z/p)^n have doubly transitive Aut; Inn not pair-transitive for n >= 2",
    ),
    "mccarron": (
        suite_mccarron,
        "census to order 6: R_3 is the only 3-transitive quandle on 3+ points",
    ),
}


def run_suite(theorem_ids=None, max_order=None, ns=None):
    """Run the named suites (all when None) and return their reports.

    max_order overrides each suite's default instance bound; ns overrides
    the dihedral order list.
    """
    if theorem_ids is None:
        theorem_ids = list(THEOREM_SUITES)
    reports = []
    for tid in theorem_ids:
        if tid not in THEOREM_SUITES:
            raise ValueError(f"unknown theorem id: {tid!r}")
        fn, _ = THEOREM_SUITES[tid]
        kwargs = {}
        if tid == "dihedral-corollary":
            if ns is not None:
                kwargs["ns"] = ns
        elif tid == "doubly-transitive":
            pass
        elif max_order is not None:
            kwargs["max_order"] = max_order
        reports.append(fn(**kwargs))
    return reports
