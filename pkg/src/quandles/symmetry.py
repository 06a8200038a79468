"""Symmetry groups of finite quandles.

The inner group Inn(X) is generated by the right translations S_x; the full
automorphism group Aut(X) is found by backtracking.  The backtracking search
assigns images of points in increasing order, tries candidate images in
increasing order, and propagates every newly closed pair through the table,
so a partial map dies as soon as it contradicts f(a*b) = f(a)*f(b) or
injectivity.  Rather than enumerating all automorphisms, the search builds a
strong generating set: working from the deepest point stabilizer up, it
finds one automorphism per new orbit point of each level and skips orbit
points already reachable, which keeps quandles with enormous automorphism
groups (the trivial quandle has all of Sym(n)) cheap.

An independent brute-force search over all bijections exists as an oracle
for tiny orders.
"""

import itertools
from dataclasses import dataclass

from .perms import Permutation, PermGroup
from .quandle import Quandle, inner_translation

_BACKTRACK_BOUND = 81
_BRUTE_FORCE_BOUND = 7


def inner_group(quandle):
    """Group generated by the right translations S_x, x in X."""
    cache = quandle._cache
    if "inn" not in cache:
        gens = [Permutation(quandle.column(x)) for x in range(quandle.order)]
        cache["inn"] = PermGroup(gens, degree=quandle.order)
    return cache["inn"]


# -- partial-map propagation ---------------------------------------------------


def _assign(tsrc, ttgt, img, rev, assigned, a, b):
    """Set img[a] = b and chase consequences; False on any contradiction.

    Every pair (a, x) with both points assigned closes two products, whose
    images are forced; forced assignments are queued and processed the same
    way, so the final map respects every fully assigned pair.
    """
    queue = [(a, b)]
    while queue:
        a, b = queue.pop()
        cur = img[a]
        if cur != -1:
            if cur != b:
                return False
            continue
        if rev[b] != -1:
            return False
        img[a] = b
        rev[b] = a
        assigned.append(a)
        ta, tb = tsrc[a], ttgt[b]
        for x in assigned:
            ix = img[x]
            queue.append((ta[x], tb[ix]))
            queue.append((tsrc[x][a], ttgt[ix][b]))
    return True


def _dfs_first(tsrc, ttgt, img, rev, assigned):
    """First completion of the partial map to a full isomorphism, or None."""
    n = len(img)
    a = next((i for i in range(n) if img[i] == -1), -1)
    if a == -1:
        return tuple(img)
    for b in range(n):
        if rev[b] != -1:
            continue
        img2, rev2, as2 = img[:], rev[:], assigned[:]
        if _assign(tsrc, ttgt, img2, rev2, as2, a, b):
            res = _dfs_first(tsrc, ttgt, img2, rev2, as2)
            if res is not None:
                return res
    return None


def automorphism_group_backtrack(quandle, max_order=_BACKTRACK_BOUND):
    """Aut(X) as a PermGroup with exact order.

    Levels run over the points in decreasing order; level k looks for
    automorphisms fixing 0..k-1 pointwise.  For each image c of point k not
    already in the orbit of k under the generators found so far, one
    depth-first search either produces a coset representative or proves the
    coset empty.  Generators accumulate from the deepest level up, giving a
    strong generating set relative to the natural base.
    """
    n = quandle.order
    if n > max_order:
        raise ValueError(f"order {n} exceeds automorphism search bound {max_order}")
    cache = quandle._cache
    if "aut" in cache:
        return cache["aut"]
    t = quandle.rows()

    # states[k]: partial map with the identity forced on points 0..k-1
    img = [-1] * n
    rev = [-1] * n
    assigned = []
    states = [(img[:], rev[:], assigned[:])]
    for k in range(n):
        if img[k] == -1:
            if not _assign(t, t, img, rev, assigned, k, k):
                raise RuntimeError("identity map rejected; malformed quandle table")
        states.append((img[:], rev[:], assigned[:]))

    gens = []

    def close_orbit(orbit):
        frontier = list(orbit)
        while frontier:
            p = frontier.pop()
            for g in gens:
                q = g[p]
                if q not in orbit:
                    orbit.add(q)
                    frontier.append(q)

    for k in range(n - 1, -1, -1):
        img_k, rev_k, as_k = states[k]
        if img_k[k] != -1:
            # image of k already forced by the identity prefix
            continue
        orbit = {k}
        close_orbit(orbit)
        for c in range(n):
            if c in orbit:
                continue
            img2, rev2, as2 = img_k[:], rev_k[:], as_k[:]
            if not _assign(t, t, img2, rev2, as2, k, c):
                continue
            found = _dfs_first(t, t, img2, rev2, as2)
            if found is None:
                continue
            gens.append(found)
            close_orbit(orbit)
    group = PermGroup([Permutation(g) for g in gens], degree=n)
    cache["aut"] = group
    return group


def brute_force_aut(quandle):
    """Oracle: every bijection preserving the table, by exhaustive filtering."""
    n = quandle.order
    if n > _BRUTE_FORCE_BOUND:
        raise ValueError(f"brute force capped at order {_BRUTE_FORCE_BOUND}, got {n}")
    t = quandle.rows()
    out = []
    pairs = [(a, b) for a in range(n) for b in range(n)]
    for p in itertools.permutations(range(n)):
        if all(p[t[a][b]] == t[p[a]][p[b]] for a, b in pairs):
            out.append(Permutation(p))
    return out


# -- transitivity -----------------------------------------------------------


def is_connected(quandle):
    """Inn(X) has a single orbit."""
    return len(inner_group(quandle).orbit(0)) == quandle.order


def is_two_point_homogeneous(quandle):
    """Inn(X) is transitive on ordered pairs of distinct points."""
    if quandle.order < 2:
        raise ValueError("two-point homogeneity needs at least 2 points")
    return inner_group(quandle).is_k_transitive(2)


def aut_is_doubly_transitive(quandle, max_order=_BACKTRACK_BOUND):
    """Aut(X) doubly transitive, decided through the stabilizer criterion:
    transitive, and the stabilizer of a point transitive on the rest."""
    n = quandle.order
    if n < 2:
        raise ValueError("double transitivity needs at least 2 points")
    aut = automorphism_group_backtrack(quandle, max_order=max_order)
    if len(aut.orbit(0)) != n:
        return False
    stab = aut.stabilizer(0)
    return stab.orbit(1) == list(range(1, n))


# -- isomorphism ----------------------------------------------------------------


def _column_profile(quandle):
    return tuple(sorted(inner_translation(quandle, x).cycle_type() for x in range(quandle.order)))


def quandle_isomorphic(x, y):
    """An isomorphism x -> y as a Permutation, or None.

    Backtracking exactly as in the automorphism search, with source and
    target tables distinct; a cheap column cycle-type profile screens out
    most non-isomorphic pairs first.
    """
    if x.order != y.order:
        return None
    if _column_profile(x) != _column_profile(y):
        return None
    n = x.order
    res = _dfs_first(x.rows(), y.rows(), [-1] * n, [-1] * n, [], )
    return Permutation(res) if res is not None else None


# -- embedding into the conjugation quandle of Inn -------------------------------


@dataclass
class EmbeddingReport:
    """Outcome of checking a -> S_a against conjugation in Inn(X).

    The homomorphism clause asks S_{a*b} = S_b^-1 ; S_a ; S_b (apply S_b
    first), which holds for involutory quandles; injectivity can fail, and
    the first witnessing pair is recorded.
    """

    translations: list
    inn_order: int
    is_homomorphism: bool
    homomorphism_witness: tuple
    is_injective: bool
    injectivity_witness: tuple

    @property
    def is_embedding(self):
        return self.is_homomorphism and self.is_injective


def embed_in_conj_inn(quandle):
    n = quandle.order
    t = quandle.rows()
    cols = [quandle.column(x) for x in range(n)]
    inv_cols = []
    for col in cols:
        inv = [0] * n
        for i, j in enumerate(col):
            inv[j] = i
        inv_cols.append(inv)
    hom_witness = None
    for a in range(n):
        for b in range(n):
            sa, sb, sb_inv = cols[a], cols[b], inv_cols[b]
            target = cols[t[a][b]]
            conj = tuple(sb_inv[sa[sb[y]]] for y in range(n))
            if tuple(target) != conj:
                hom_witness = (a, b)
                break
        if hom_witness:
            break
    inj_witness = None
    seen = {}
    for a in range(n):
        if cols[a] in seen:
            inj_witness = (seen[cols[a]], a)
            break
        seen[cols[a]] = a
    return EmbeddingReport(
        translations=[Permutation(c) for c in cols],
        inn_order=inner_group(quandle).order(),
        is_homomorphism=hom_witness is None,
        homomorphism_witness=hom_witness,
        is_injective=inj_witness is None,
        injectivity_witness=inj_witness,
    )


# -- one-stop structural report ---------------------------------------------------


@dataclass
class QuandleAnalysis:
    order: int
    inn_order: int
    aut_order: int
    connected: bool
    two_point_homogeneous: bool
    aut_doubly_transitive: bool
    commutative: bool
    involutory: bool
    provenance: str

    def to_dict(self):
        return {
            "order": self.order,
            "inner_group_order": self.inn_order,
            "automorphism_group_order": self.aut_order,
            "connected": self.connected,
            "two_point_homogeneous": self.two_point_homogeneous,
            "aut_doubly_transitive": self.aut_doubly_transitive,
            "commutative": self.commutative,
            "involutory": self.involutory,
            "provenance": self.provenance,
        }


def analyze_quandle(quandle, max_order=_BACKTRACK_BOUND):
    from .quandle import is_commutative, is_involutory

    inn = inner_group(quandle)
    aut = automorphism_group_backtrack(quandle, max_order=max_order)
    n = quandle.order
    return QuandleAnalysis(
        order=n,
        inn_order=inn.order(),
        aut_order=aut.order(),
        connected=is_connected(quandle),
        two_point_homogeneous=is_two_point_homogeneous(quandle) if n >= 2 else None,
        aut_doubly_transitive=aut_is_doubly_transitive(quandle, max_order=max_order) if n >= 2 else None,
        commutative=is_commutative(quandle),
        involutory=is_involutory(quandle),
        provenance=quandle.provenance.describe() if quandle.provenance else "table",
    )
