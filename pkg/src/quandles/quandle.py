"""Finite quandles as operation tables.

table[a][b] is a*b, so the column at b is the right translation
S_b : y -> y*b.  The three axioms checked everywhere:

  1. a*a = a
  2. every column is a permutation (y -> y*b invertible)
  3. (a*b)*c = (a*c)*(b*c)

Constructors cover the families built from a group G: conjugation
a*b = b^-m a b^m, Takasaki a*b = 2b - a on abelian groups, Alexander
a*b = t(a) + b - t(b), and the generalized Alexander quandle
a*b = phi(a b^-1) b for an automorphism phi.  Constructed quandles remember
where they came from.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .perms import Permutation


class QuandleAxiomError(ValueError):
    """Axiom violation, carrying which axiom broke and a witness tuple."""

    def __init__(self, axiom, witness, message):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


@dataclass(frozen=True)
class Provenance:
    """How a quandle was constructed, enough to recover (G, phi)."""

    kind: str
    group: object = None
    automorphism: tuple = None
    power: int = None
    note: str = ""

    def describe(self):
        bits = [self.kind]
        if self.group is not None:
            bits.append(f"over {self.group.name}")
        if self.power is not None:
            bits.append(f"power {self.power}")
        if self.note:
            bits.append(self.note)
        return " ".join(bits)


class Quandle:
    """Immutable quandle on {0..n-1} given by its full operation table."""

    def __init__(self, table, provenance=None, validate=True):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError(f"quandle table must be square and nonempty, got shape {arr.shape}")
        if arr.min() < 0 or arr.max() >= arr.shape[0]:
            raise ValueError("table entries must lie in 0..n-1")
        if validate:
            _check_axioms(arr)
        arr.setflags(write=False)
        self.table = arr
        self.order = arr.shape[0]
        self.provenance = provenance
        self._rows = [tuple(int(x) for x in row) for row in arr]
        self._cache = {}

    def op(self, a, b):
        return self._rows[a][b]

    def rows(self):
        """Table as tuples, cheap to index in tight loops."""
        return self._rows

    def column(self, b):
        return tuple(int(x) for x in self.table[:, b])

    def __repr__(self):
        tag = self.provenance.describe() if self.provenance else "table"
        return f"Quandle({tag}, order={self.order})"


def _check_axioms(arr):
    n = arr.shape[0]
    rng = np.arange(n)
    diag = arr[rng, rng]
    if not np.array_equal(diag, rng):
        a = int(np.nonzero(diag != rng)[0][0])
        raise QuandleAxiomError(1, (a,), f"a*a != a at a = {a}")
    if not (np.sort(arr, axis=0) == rng[:, None]).all():
        for b in range(n):
            col = arr[:, b]
            if len(set(int(x) for x in col)) != n:
                seen = set()
                for a in range(n):
                    if int(col[a]) in seen:
                        raise QuandleAxiomError(
                            2, (a, b), f"column {b} repeats value {int(col[a])} at row {a}"
                        )
                    seen.add(int(col[a]))
    left = arr[arr]                     # (a,b,c) -> (a*b)*c
    right = arr[arr[:, None, :], arr[None, :, :]]   # (a,b,c) -> (a*c)*(b*c)
    if not np.array_equal(left, right):
        a, b, c = (int(x) for x in np.argwhere(left != right)[0])
        raise QuandleAxiomError(
            3, (a, b, c), f"({a}*{b})*{c} != ({a}*{c})*({b}*{c})"
        )


def validate_axioms(table, provenance=None):
    """Build a Quandle from a raw table, reporting the first broken axiom."""
    return Quandle(table, provenance=provenance, validate=True)


# -- constructors ------------------------------------------------------------


def trivial_quandle(n):
    """a*b = a for all a, b."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    table = np.tile(np.arange(n)[:, None], (1, n))
    return Quandle(table, provenance=Provenance("trivial"), validate=False)


def conj_quandle(group, m=1):
    """Conjugation quandle: a*b = b^-m a b^m."""
    n = group.order
    tbl = group.table
    inv = group.inverse_array()
    powm = np.array([group.power(b, m) for b in range(n)], dtype=np.int64)
    out = np.empty((n, n), dtype=np.int64)
    for b in range(n):
        bm = int(powm[b])
        out[:, b] = tbl[tbl[inv[bm], :], bm]
    prov = Provenance("conj", group=group, power=m)
    return Quandle(out, provenance=prov, validate=False)


def takasaki(group):
    """Takasaki quandle on an abelian group: a*b = 2b - a."""
    if not group.is_abelian():
        raise ValueError(f"{group.name} is not abelian")
    tbl = group.table
    inv = group.inverse_array()
    diag = tbl[np.arange(group.order), np.arange(group.order)]
    out = tbl[inv[:, None], diag[None, :]]
    prov = Provenance("takasaki", group=group)
    return Quandle(out, provenance=prov, validate=False)


def alexander(group, phi):
    """Alexander quandle on an abelian group: a*b = phi(a) + b - phi(b)."""
    if not group.is_abelian():
        raise ValueError(f"{group.name} is not abelian")
    if not phi.is_automorphism:
        raise ValueError("twisting map must be an automorphism")
    tbl = group.table
    inv = group.inverse_array()
    t = np.array(phi.images, dtype=np.int64)
    n = group.order
    m1 = tbl[t[:, None], np.arange(n)[None, :]]     # phi(a) + b
    out = tbl[m1, inv[t][None, :]]                  # ... - phi(b)
    prov = Provenance("alexander", group=group, automorphism=phi.images)
    return Quandle(out, provenance=prov, validate=False)


def gen_alexander(group, phi):
    """Generalized Alexander quandle: a*b = phi(a b^-1) b, any group."""
    if not phi.is_automorphism:
        raise ValueError("twisting map must be an automorphism")
    tbl = group.table
    inv = group.inverse_array()
    t = np.array(phi.images, dtype=np.int64)
    n = group.order
    m1 = tbl[:, inv]                                 # a b^-1
    out = tbl[t[m1], np.arange(n)[None, :]]          # phi(...) * b
    prov = Provenance("gen_alexander", group=group, automorphism=phi.images)
    return Quandle(out, provenance=prov, validate=False)


def dihedral(n):
    """Dihedral quandle R_n: points mod n with a*b = 2b - a."""
    from .groups import make_cyclic

    q = takasaki(make_cyclic(n))
    prov = Provenance("dihedral", group=q.provenance.group)
    return Quandle(q.table, provenance=prov, validate=False)


# -- predicates and translations ---------------------------------------------


def is_commutative(quandle):
    """a*b = b*a for all a, b."""
    return bool(np.array_equal(quandle.table, quandle.table.T))


def is_involutory(quandle):
    """(a*b)*b = a for all a, b; every right translation squares to identity."""
    arr = quandle.table
    n = quandle.order
    back = arr[arr, np.arange(n)[None, :]]
    return bool((back == np.arange(n)[:, None]).all())


def inner_translation(quandle, x):
    """The permutation S_x : y -> y*x (column x of the table)."""
    if not 0 <= x < quandle.order:
        raise ValueError(f"point {x} outside 0..{quandle.order - 1}")
    return Permutation(quandle.column(x))


# -- exhaustive enumeration ---------------------------------------------------


def enumerate_quandle_tables(n):
    """Yield every labeled quandle of order n exactly once, deterministically.

    Depth-first over the columns S_0, S_1, ... where each candidate column
    fixes its own point.  Assigning S_c propagates: axiom 3 forces
    S at the point S_c(b) to equal S_c^-1;S_b;S_c (apply S_c^-1 first) for
    every assigned b, which both prunes and fills columns, so leaves satisfy
    all three axioms by construction.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    candidates = []
    for x in range(n):
        others = [y for y in range(n) if y != x]
        cols = []
        for perm in itertools.permutations(others):
            col = [0] * n
            col[x] = x
            for y, img in zip(others, perm):
                col[y] = img
            cols.append(tuple(col))
        candidates.append(cols)

    def tinv(p):
        out = [0] * n
        for i, j in enumerate(p):
            out[j] = i
        return tuple(out)

    def propagate(cols, c):
        """Push consequences of newly assigned column c; False on clash."""
        queue = [c]
        while queue:
            c = queue.pop()
            sc = cols[c]
            sc_inv = tinv(sc)
            for b in range(n):
                sb = cols[b]
                if sb is None:
                    continue
                # axiom 3 forces the columns at sc[b] and at sb[c]
                t1 = sc[b]
                f1 = tuple(sc[sb[sc_inv[y]]] for y in range(n))
                if cols[t1] is None:
                    cols[t1] = f1
                    queue.append(t1)
                elif cols[t1] != f1:
                    return False
                sb_inv = tinv(sb)
                t2 = sb[c]
                f2 = tuple(sb[sc[sb_inv[y]]] for y in range(n))
                if cols[t2] is None:
                    cols[t2] = f2
                    queue.append(t2)
                elif cols[t2] != f2:
                    return False
        return True

    def dfs(cols):
        free = next((i for i in range(n) if cols[i] is None), None)
        if free is None:
            table = [[cols[b][a] for b in range(n)] for a in range(n)]
            yield Quandle(table, provenance=Provenance("enumerated"), validate=False)
            return
        for cand in candidates[free]:
            trial = list(cols)
            trial[free] = cand
            if propagate(trial, free):
                yield from dfs(trial)

    yield from dfs([None] * n)


# -- file format ---------------------------------------------------------------


def quandle_to_text(quandle):
    """Serialized table: first line the order, then one row per line."""
    lines = [str(quandle.order)]
    for row in quandle.table:
        lines.append(" ".join(map(str, row)))
    return "\n".join(lines) + "\n"


def save_quandle(quandle, path):
    """Write the table: first line the order, then one row per line."""
    with open(path, "w") as fh:
        fh.write(quandle_to_text(quandle))


def load_quandle(path):
    """Read a table file and refuse it unless all three axioms hold."""
    with open(path) as fh:
        tokens = fh.read().split()
    if not tokens:
        raise ValueError(f"{path}: empty quandle file")
    n = int(tokens[0])
    if n < 1:
        raise ValueError(f"{path}: order must be positive")
    body = tokens[1:]
    if len(body) != n * n:
        raise ValueError(f"{path}: expected {n * n} entries, found {len(body)}")
    table = np.array([int(t) for t in body], dtype=np.int64).reshape(n, n)
    return validate_axioms(table, provenance=Provenance("file", note=str(path)))
