"""Finite groups as Cayley tables, and their automorphisms.

A group of order n lives on the elements {0, ..., n-1} with 0 as the
identity.  Tables are numpy int arrays locked read-only after validation;
every operation on top of them is exact integer work.  Abelian groups built
from cyclic factors carry their factor list and per-element coordinate
tuples, which is what scalar and matrix automorphisms act on.

The automorphism group of a group is computed by a generator-image search:
pick a generating set greedily, try images among elements of equal order,
extend each candidate tuple through a fixed spanning order of the group, and
keep the bijective extensions that pass the homomorphism check.  A separate
brute-force search over all bijections exists as an oracle for tiny orders.
"""

import itertools
from dataclasses import dataclass
from math import gcd, prod

import numpy as np

_AUT_ORDER_BOUND = 64
_BRUTE_FORCE_BOUND = 8


class FiniteGroup:
    """Immutable finite group given by its Cayley table.

    table[a][b] is the product a*b.  Identity is element 0.  ``labels`` are
    display names only and play no role in any computation.
    """

    def __init__(self, table, labels=None, name=None, abelian_coordinates=None, validate=None):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"Cayley table must be square, got shape {arr.shape}")
        n = arr.shape[0]
        if n == 0:
            raise ValueError("group must be nonempty")
        if arr.min() < 0 or arr.max() >= n:
            raise ValueError("table entries must lie in 0..n-1")
        if validate is None:
            validate = n <= _AUT_ORDER_BOUND
        if validate:
            _validate_group_table(arr)
        arr.setflags(write=False)
        self.table = arr
        self.order = n
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(self.labels) != n:
            raise ValueError(f"{len(self.labels)} labels for {n} elements")
        self.name = name if name is not None else f"group{n}"
        if abelian_coordinates is not None:
            factors, coords = abelian_coordinates
            self.abelian_coordinates = (tuple(factors), tuple(tuple(c) for c in coords))
        else:
            self.abelian_coordinates = None
        inv = (arr == 0).argmax(axis=1)
        inv.setflags(write=False)
        self._inv = inv
        self._rows = [tuple(int(x) for x in row) for row in arr]
        self._is_abelian = None
        self._center = None
        self._orders = None
        self._aut_cache = {}

    def mul(self, a, b):
        return self._rows[a][b]

    def inv(self, a):
        return int(self._inv[a])

    @property
    def identity(self):
        return 0

    def elements(self):
        return range(self.order)

    def inverse_array(self):
        return self._inv

    def is_abelian(self):
        if self._is_abelian is None:
            self._is_abelian = bool(np.array_equal(self.table, self.table.T))
        return self._is_abelian

    def power(self, a, k):
        """a**k for integer k (negative allowed)."""
        if k < 0:
            return self.power(self.inv(a), -k)
        out = 0
        base = a
        while k:
            if k & 1:
                out = self._rows[out][base]
            base = self._rows[base][base]
            k >>= 1
        return out

    def validate(self):
        """Recheck all three table invariants; raises ValueError on failure."""
        _validate_group_table(self.table)

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order})"


def _validate_group_table(arr):
    n = arr.shape[0]
    rng = np.arange(n)
    if not np.array_equal(arr[0], rng) or not np.array_equal(arr[:, 0], rng):
        raise ValueError("element 0 is not a two-sided identity")
    if not (np.sort(arr, axis=1) == rng).all() or not (np.sort(arr, axis=0) == rng[:, None]).all():
        raise ValueError("table rows/columns are not permutations (not a Latin square)")
    # associativity in row chunks to bound memory on larger tables
    step = max(1, 2 ** 22 // (n * n))
    for lo in range(0, n, step):
        chunk = arr[lo:lo + step]
        left = arr[chunk]        # left[a,b,c]  = (a*b)*c  for a in the chunk
        right = chunk[:, arr]    # right[a,b,c] = a*(b*c)
        if not np.array_equal(left, right):
            a, b, c = (int(x) for x in np.argwhere(left != right)[0])
            raise ValueError(f"associativity fails at ({a + lo}, {b}, {c})")


def element_order(group, a):
    """Multiplicative order of a, by repeated multiplication."""
    k = 1
    cur = a
    while cur != 0:
        cur = group.mul(cur, a)
        k += 1
    return k


def _element_orders(group):
    if group._orders is None:
        group._orders = [element_order(group, a) for a in group.elements()]
    return group._orders


def center(group):
    """Sorted list of elements commuting with everything."""
    if group._center is None:
        eq = (group.table == group.table.T).all(axis=1)
        group._center = [int(a) for a in np.nonzero(eq)[0]]
    return group._center


def is_elementary_abelian(group):
    """Nontrivial abelian group in which every non-identity element has the
    same prime order."""
    if group.order == 1 or not group.is_abelian():
        return False
    orders = {_element_orders(group)[a] for a in range(1, group.order)}
    if len(orders) != 1:
        return False
    p = orders.pop()
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def doubling_image(group):
    """Sorted image of a -> a*a; abelian groups only."""
    if not group.is_abelian():
        raise ValueError(f"{group.name} is not abelian")
    return sorted({group.mul(a, a) for a in group.elements()})


# -- homomorphisms ---------------------------------------------------------


class GroupMap:
    """Group homomorphism given by its image array; validated on construction."""

    def __init__(self, domain, codomain, images, validate=True):
        self.domain = domain
        self.codomain = codomain
        self.images = tuple(int(x) for x in images)
        if len(self.images) != domain.order:
            raise ValueError(f"{len(self.images)} images for order {domain.order}")
        if any(not 0 <= x < codomain.order for x in self.images):
            raise ValueError("image outside codomain")
        if validate:
            if self.images[0] != 0:
                raise ValueError("homomorphism must send identity to identity")
            img = np.array(self.images, dtype=np.int64)
            lhs = codomain.table[img[:, None], img[None, :]]
            rhs = img[domain.table]
            if not np.array_equal(lhs, rhs):
                a, b = (int(x) for x in np.argwhere(lhs != rhs)[0])
                raise ValueError(f"not a homomorphism: f({a}*{b}) != f({a})*f({b})")
        self._is_bijective = len(set(self.images)) == domain.order

    @property
    def is_bijective(self):
        return self._is_bijective

    @property
    def is_automorphism(self):
        return (
            self._is_bijective
            and self.domain.order == self.codomain.order
            and (self.domain is self.codomain or np.array_equal(self.domain.table, self.codomain.table))
        )

    def __call__(self, a):
        return self.images[a]

    def then(self, other):
        """Composite map: apply self first, then other."""
        if other.domain.order != self.codomain.order:
            raise ValueError("maps do not compose")
        return GroupMap(self.domain, other.codomain, tuple(other.images[x] for x in self.images), validate=False)

    def inverse(self):
        if not self.is_automorphism:
            raise ValueError("only automorphisms invert")
        out = [0] * len(self.images)
        for a, b in enumerate(self.images):
            out[b] = a
        return GroupMap(self.domain, self.domain, out, validate=False)

    def map_order(self):
        """Order of an automorphism under composition."""
        if not self.is_automorphism:
            raise ValueError("order is defined for automorphisms")
        ident = tuple(range(self.domain.order))
        k = 1
        cur = self.images
        while cur != ident:
            cur = tuple(self.images[x] for x in cur)
            k += 1
        return k

    def __eq__(self, other):
        return (
            isinstance(other, GroupMap)
            and self.images == other.images
            and self.domain.order == other.domain.order
        )

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"GroupMap({self.domain.name} -> {self.codomain.name}, {self.images})"


def map_from_images(group, images):
    """Endomorphism of a group from an explicit image list (validated)."""
    return GroupMap(group, group, images)


def identity_map(group):
    return GroupMap(group, group, range(group.order), validate=False)


def negation_map(group):
    """a -> a^-1; an automorphism exactly for abelian groups."""
    if not group.is_abelian():
        raise ValueError("inversion is a homomorphism only on abelian groups")
    return GroupMap(group, group, [group.inv(a) for a in group.elements()], validate=False)


def _require_coordinates(group):
    if group.abelian_coordinates is None:
        raise ValueError(f"{group.name} carries no cyclic factor coordinates")
    return group.abelian_coordinates


def scalar_map(group, u):
    """Coordinate-wise multiplication by u on an abelian group with factors."""
    factors, coords = _require_coordinates(group)
    index = {c: i for i, c in enumerate(coords)}
    images = []
    for c in coords:
        target = tuple((u * ci) % f for ci, f in zip(c, factors))
        images.append(index[target])
    out = GroupMap(group, group, images)
    if not out.is_bijective:
        raise ValueError(f"{u} is not a unit for factors {factors}")
    return out


def matrix_map(group, rows):
    """Matrix action on coordinates: new_i = sum_j rows[i][j] * old_j mod factor_i.

    Validation rejects matrices that fail to define an automorphism (for
    instance when they are not invertible, or mix factors incompatibly).
    """
    factors, coords = _require_coordinates(group)
    k = len(factors)
    mat = [list(r) for r in rows]
    if len(mat) != k or any(len(r) != k for r in mat):
        raise ValueError(f"matrix must be {k}x{k} for factors {factors}")
    index = {c: i for i, c in enumerate(coords)}
    images = []
    for c in coords:
        target = tuple(sum(mat[i][j] * c[j] for j in range(k)) % factors[i] for i in range(k))
        images.append(index[target])
    phi = GroupMap(group, group, images)
    if not phi.is_bijective:
        raise ValueError("matrix does not act invertibly on the group")
    return phi


def twisted_map(phi):
    """The map a -> a^-1 * phi(a) attached to an endomorphism phi.

    Unlike GroupMap this is not forced to be a homomorphism; the raw images
    are returned together with flags saying what it turned out to be.
    """
    G = phi.domain
    if phi.codomain is not G and not np.array_equal(phi.codomain.table, G.table):
        raise ValueError("twisted map needs an endomorphism")
    images = tuple(G.mul(G.inv(a), phi(a)) for a in G.elements())
    img = np.array(images, dtype=np.int64)
    hom = bool(np.array_equal(G.table[img[:, None], img[None, :]], img[G.table])) and images[0] == 0
    return TwistedMap(images=images, is_homomorphism=hom, is_bijective=len(set(images)) == G.order)


@dataclass(frozen=True)
class TwistedMap:
    images: tuple
    is_homomorphism: bool
    is_bijective: bool

    def as_group_map(self, group):
        if not self.is_homomorphism:
            raise ValueError("twisted map is not a homomorphism here")
        return GroupMap(group, group, self.images, validate=False)


# -- automorphism groups ----------------------------------------------------


def _greedy_generators(group):
    """Generating set grown by repeatedly adding the smallest outside element.

    Returns (generators, spanning order), where the spanning order lists
    (element, previous element, generator position) triples such that
    element = previous * generators[position], reachable in BFS order.
    """
    n = group.order
    rows = group._rows
    gens = []
    closure = {0}
    span = []
    while len(closure) < n:
        g = min(x for x in range(n) if x not in closure)
        gens.append(g)
        # regrow closure, recording one product recipe per new element
        queue = sorted(closure)
        for e in queue:
            for j, h in enumerate(gens):
                t = rows[e][h]
                if t not in closure:
                    closure.add(t)
                    span.append((t, e, j))
                    queue.append(t)
    return gens, span


def automorphism_group(group, max_order=_AUT_ORDER_BOUND):
    """All automorphisms, sorted by image tuple.

    Candidate images of each generator range over elements of the same
    order; each candidate tuple is extended through the spanning order and
    kept when it is bijective and multiplicative against every generator.
    """
    if group.order > max_order:
        raise ValueError(f"order {group.order} exceeds bound {max_order}")
    cache_key = "aut"
    if cache_key in group._aut_cache:
        return group._aut_cache[cache_key]
    n = group.order
    rows = group._rows
    orders = _element_orders(group)
    gens, span = _greedy_generators(group)
    candidates = [[x for x in range(n) if orders[x] == orders[g]] for g in gens]
    found = []
    for tup in itertools.product(*candidates):
        img = [-1] * n
        img[0] = 0
        used = [False] * n
        used[0] = True
        ok = True
        for e, prev, j in span:
            v = rows[img[prev]][tup[j]]
            if used[v]:
                ok = False
                break
            img[e] = v
            used[v] = True
        if not ok:
            continue
        for j, g in enumerate(gens):
            tg = tup[j]
            col_g = g
            for a in range(n):
                if img[rows[a][col_g]] != rows[img[a]][tg]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(tuple(img))
    found.sort()
    result = [GroupMap(group, group, t, validate=False) for t in found]
    group._aut_cache[cache_key] = result
    return result


def brute_force_group_automorphisms(group, max_order=_BRUTE_FORCE_BOUND):
    """Oracle: filter every bijection fixing 0.  Tiny orders only."""
    n = group.order
    if n > max_order:
        raise ValueError(f"brute force capped at order {max_order}, got {n}")
    rows = group._rows
    out = []
    for rest in itertools.permutations(range(1, n)):
        img = (0,) + rest
        if all(img[rows[a][b]] == rows[img[a]][img[b]] for a in range(n) for b in range(n)):
            out.append(img)
    return [GroupMap(group, group, t, validate=False) for t in out]


def is_fixed_point_free(phi):
    """No non-identity element is fixed.  Automorphisms only."""
    if not phi.is_automorphism:
        raise ValueError("fixed-point-freeness is defined for automorphisms")
    return all(phi(a) != a for a in range(1, phi.domain.order))


def is_central_automorphism(phi):
    """a^-1 * phi(a) lands in the center for every a."""
    if not phi.is_automorphism:
        raise ValueError("centrality is defined for automorphisms")
    G = phi.domain
    Z = set(center(G))
    return all(G.mul(G.inv(a), phi(a)) in Z for a in G.elements())


def centralizer_in_aut(group, phi, max_order=_AUT_ORDER_BOUND):
    """Automorphisms commuting with phi, as a sorted sublist of Aut."""
    if not phi.is_automorphism:
        raise ValueError("centralizer is taken around an automorphism")
    auts = automorphism_group(group, max_order=max_order)
    pim = phi.images
    return [f for f in auts if tuple(pim[x] for x in f.images) == tuple(f.images[x] for x in pim)]


# -- constructors -----------------------------------------------------------


def make_cyclic(n):
    """Integers mod n under addition."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    return make_abelian([n], name=f"Z{n}")


def make_abelian(factors, name=None):
    """Direct sum of cyclic groups; elements are mixed-radix coordinate tuples."""
    factors = [int(f) for f in factors]
    if not factors or any(f < 1 for f in factors):
        raise ValueError(f"factors must be positive, got {factors}")
    n = prod(factors)
    coords = list(itertools.product(*[range(f) for f in factors]))
    index = {c: i for i, c in enumerate(coords)}
    table = np.empty((n, n), dtype=np.int64)
    for a, ca in enumerate(coords):
        for b, cb in enumerate(coords):
            table[a, b] = index[tuple((x + y) % f for x, y, f in zip(ca, cb, factors))]
    if name is None:
        name = "x".join(f"Z{f}" for f in factors)
    labels = [",".join(map(str, c)) if len(factors) > 1 else str(c[0]) for c in coords]
    return FiniteGroup(table, labels=labels, name=name, abelian_coordinates=(factors, coords))


def make_symmetric(n):
    """Symmetric group on n letters, permutations in lexicographic order.

    Product a*b acts left-to-right: (a*b)(x) = b(a(x)).  Element 0 is the
    identity permutation.
    """
    if not 1 <= n <= 6:
        raise ValueError(f"symmetric group constructor accepts 1..6 letters, got {n}")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    m = len(perms)
    table = np.empty((m, m), dtype=np.int64)
    for a, pa in enumerate(perms):
        for b, pb in enumerate(perms):
            table[a, b] = index[tuple(pb[x] for x in pa)]
    labels = ["".join(map(str, p)) for p in perms]
    return FiniteGroup(table, labels=labels, name=f"S{n}", validate=n <= 5)


def make_dihedral_group(n):
    """Symmetries of the regular n-gon, order 2n; r^i s^j indexed as i + n*j."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    m = 2 * n
    table = np.empty((m, m), dtype=np.int64)
    for i1, j1 in itertools.product(range(n), range(2)):
        for i2, j2 in itertools.product(range(n), range(2)):
            i = (i1 - i2) % n if j1 else (i1 + i2) % n
            j = (j1 + j2) % 2
            table[i1 + n * j1, i2 + n * j2] = i + n * j
    labels = [f"r{i}" for i in range(n)] + [f"sr{i}" for i in range(n)]
    return FiniteGroup(table, labels=labels, name=f"D{n}")


def make_dicyclic(n):
    """Dicyclic group of order 4n: a^(2n)=1, b^2=a^n, b a b^-1 = a^-1."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    two_n = 2 * n
    m = 4 * n
    table = np.empty((m, m), dtype=np.int64)
    for i1, j1 in itertools.product(range(two_n), range(2)):
        for i2, j2 in itertools.product(range(two_n), range(2)):
            if j1:
                i = (i1 - i2) % two_n
                if j2:
                    i = (i + n) % two_n
            else:
                i = (i1 + i2) % two_n
            j = (j1 + j2) % 2
            table[i1 + two_n * j1, i2 + two_n * j2] = i + two_n * j
    labels = [f"a{i}" for i in range(two_n)] + [f"a{i}b" for i in range(two_n)]
    return FiniteGroup(table, labels=labels, name=f"Dic{n}")


def make_quaternion8():
    """The quaternion group {±1, ±i, ±j, ±k}."""
    q = make_dicyclic(2)
    labels = ["1", "i", "-1", "-i", "j", "k", "-j", "-k"]
    return FiniteGroup(q.table, labels=labels, name="Q8")


def direct_product(g, h, name=None):
    """Componentwise product on pairs, indexed a*|H| + b."""
    ng, nh = g.order, h.order
    n = ng * nh
    # pair (a, b) gets index a*nh + b; multiply componentwise
    t4 = g.table[:, None, :, None] * nh + h.table[None, :, None, :]
    table = t4.reshape(n, n)
    labels = [f"{la}|{lb}" for la in g.labels for lb in h.labels]
    coords = None
    if g.abelian_coordinates is not None and h.abelian_coordinates is not None:
        gf, gc = g.abelian_coordinates
        hf, hc = h.abelian_coordinates
        coords = (list(gf) + list(hf), [tuple(ca) + tuple(cb) for ca in gc for cb in hc])
    if name is None:
        name = f"{g.name}x{h.name}"
    return FiniteGroup(table, labels=labels, name=name, abelian_coordinates=coords, validate=False)


# -- catalog ----------------------------------------------------------------


def _partitions(k):
    if k == 0:
        yield ()
        return
    for first in range(k, 0, -1):
        for rest in _partitions(k - first):
            if not rest or first >= rest[0]:
                yield (first,) + rest


def _abelian_factor_lists(order):
    """Factor lists of the distinct abelian groups of the given order."""
    remaining = order
    primes = []
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            e = 0
            while remaining % p == 0:
                remaining //= p
                e += 1
            primes.append((p, e))
        p += 1
    if remaining > 1:
        primes.append((remaining, 1))
    per_prime = []
    for p, e in primes:
        per_prime.append([[p ** part for part in parts] for parts in _partitions(e)])
    if not per_prime:
        return [[1]]
    out = []
    for combo in itertools.product(*per_prime):
        factors = sorted((f for chunk in combo for f in chunk), reverse=True)
        out.append(factors)
    return out


def catalog_groups(max_order, include_nonabelian=True, include_abelian=True):
    """Small-order group catalog used by the exhaustive theorem checks.

    Every abelian group up to max_order (one per isomorphism class), plus a
    fixed non-abelian family list: symmetric, dihedral, dicyclic and direct
    products with Z2.  The list is deterministic and sorted by order.
    """
    groups = []
    if include_abelian:
        for n in range(1, max_order + 1):
            for factors in _abelian_factor_lists(n):
                groups.append(make_abelian(factors))
    if include_nonabelian:
        z2 = make_cyclic(2)
        nonabelian = [
            make_symmetric(3),
            make_dihedral_group(4),
            make_quaternion8(),
            make_dihedral_group(5),
            make_dihedral_group(6),
            make_dihedral_group(7),
            make_dihedral_group(8),
            make_dicyclic(4),
            direct_product(make_dihedral_group(4), z2),
            direct_product(make_quaternion8(), z2),
        ]
        if max_order >= 24:
            nonabelian.append(make_symmetric(4))
        groups.extend(g for g in nonabelian if g.order <= max_order)
    groups.sort(key=lambda g: (g.order, g.name))
    return groups


_NAMED_GROUPS = {
    "s3": lambda: make_symmetric(3),
    "s4": lambda: make_symmetric(4),
    "q8": make_quaternion8,
    "q16": lambda: make_dicyclic(4),
    "d4": lambda: make_dihedral_group(4),
    "d5": lambda: make_dihedral_group(5),
    "d6": lambda: make_dihedral_group(6),
    "d8": lambda: make_dihedral_group(8),
}


def group_by_name(name):
    """Look up a named group: zN, s3/s4, q8/q16, d4..d8, or 'aXbXc' factors."""
    key = name.strip().lower()
    if key in _NAMED_GROUPS:
        return _NAMED_GROUPS[key]()
    if key.startswith("z") and key[1:].isdigit():
        return make_cyclic(int(key[1:]))
    parts = [p[1:] if p.startswith("z") else p for p in key.split("x")]
    if parts and all(p.isdigit() and int(p) >= 1 for p in parts):
        return make_abelian([int(p) for p in parts])
    raise ValueError(f"unknown group name: {name!r}")


# -- file format -------------------------------------------------------------


def save_group(group, path):
    """Write the table: first line the order, then one row per line."""
    with open(path, "w") as fh:
        fh.write(f"{group.order}\n")
        for row in group.table:
            fh.write(" ".join(map(str, row)) + "\n")


def load_group(path, name=None):
    """Read and fully validate a Cayley table file."""
    with open(path) as fh:
        tokens = fh.read().split()
    if not tokens:
        raise ValueError(f"{path}: empty group file")
    n = int(tokens[0])
    if n < 1:
        raise ValueError(f"{path}: order must be positive")
    body = tokens[1:]
    if len(body) != n * n:
        raise ValueError(f"{path}: expected {n * n} entries, found {len(body)}")
    table = np.array([int(t) for t in body], dtype=np.int64).reshape(n, n)
    return FiniteGroup(table, name=name or "loaded", validate=True)


def euler_phi(n):
    """Count of units mod n."""
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
