"""Constructors for the standard finite quandle families.

Every constructor returns a validated FiniteQuandle whose ``record``
attribute holds a ConstructionRecord: the family tag, the parameters needed
to rebuild the identical table, and the element labeling.  Product carriers
(pairs, vectors over F_p) are ordered lexicographically so tables are
reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from .groups import (FiniteGroup, GroupAutomorphism, CosetSpace,
                     conjugacy_class, matrix_group_sl2, is_prime)
from .quandle import FiniteQuandle, QuandleError, validate

WELLDEF_EXHAUSTIVE_LIMIT = 512
WELLDEF_SAMPLES = 1000

FAMILIES = ("trivial", "cocycle", "conj", "conj_class", "phi_space",
            "vedernikov", "alexander", "dihedral", "power_cocycle", "unipotent_class")


class ConstructionError(QuandleError):
    pass


class CocycleError(ConstructionError):
    def __init__(self, bad_points):
        self.bad_points = tuple(bad_points)
        super().__init__(f"cocycle is nonzero on the diagonal at x in {self.bad_points}")


class NotAbelian(ConstructionError):
    pass


class NotFixed(ConstructionError):
    def __init__(self, moved):
        self.moved = tuple(moved)
        super().__init__(f"subgroup elements moved by the automorphism: {self.moved}")


@dataclass(frozen=True)
class ConstructionRecord:
    """Provenance of a constructed quandle; replaying it rebuilds the table."""

    family: str
    parameters: dict = field(hash=False)
    labeling: tuple[str, ...]

    def replay(self) -> FiniteQuandle:
        if self.family not in FAMILIES:
            raise ConstructionError(f"unknown family {self.family!r}")
        return _REPLAY[self.family](self.parameters)


def _finish(table, labels, family, parameters) -> FiniteQuandle:
    q = validate(table, labels=labels)
    q.record = ConstructionRecord(family, parameters, tuple(labels))
    return q


def _group_params(g: FiniteGroup) -> dict:
    return g.to_dict()


# ---------------------------------------------------------------------------
# basic families

def trivial(n: int) -> FiniteQuandle:
    """q |> r = r for all q, r."""
    if n < 1:
        raise ConstructionError("size must be positive")
    table = [[r for r in range(n)] for _ in range(n)]
    labels = tuple(str(i) for i in range(n))
    return _finish(table, labels, "trivial", {"n": n})


def dihedral(n: int) -> FiniteQuandle:
    """Z/n with i |> j = 2i - j."""
    if n < 1:
        raise ConstructionError("size must be positive")
    table = [[(2 * i - j) % n for j in range(n)] for i in range(n)]
    labels = tuple(str(i) for i in range(n))
    return _finish(table, labels, "dihedral", {"n": n})


def cocycle_extension(x_size: int, abelian: FiniteGroup, cocycle) -> FiniteQuandle:
    """Quandle on X x A with (x,a) |> (y,b) = (y, b + F(x,y)).

    ``cocycle`` is an x_size-square table of element indices into the abelian
    group.  The construction is a quandle exactly when F vanishes on the
    diagonal; offenders are all reported at once.
    """
    if x_size < 1:
        raise ConstructionError("x_size must be positive")
    if not abelian.is_abelian():
        raise NotAbelian("coefficient group must be abelian")
    f = [list(row) for row in cocycle]
    if len(f) != x_size or any(len(r) != x_size for r in f):
        raise ConstructionError("cocycle table must be x_size square")
    bad = [x for x in range(x_size) if f[x][x] != abelian.identity]
    if bad:
        raise CocycleError(bad)
    carrier = list(product(range(x_size), range(abelian.order)))
    pos = {e: i for i, e in enumerate(carrier)}
    table = [[pos[(y, abelian.mul(b, f[x][y]))] for (y, b) in carrier]
             for (x, a) in carrier]
    labels = tuple(f"({x},{abelian.label(a)})" for (x, a) in carrier)
    return _finish(table, labels, "cocycle",
                   {"x_size": x_size, "abelian": _group_params(abelian),
                    "cocycle": [list(r) for r in f]})


# ---------------------------------------------------------------------------
# conjugation quandles

def conjugation(group: FiniteGroup) -> FiniteQuandle:
    """The whole group with g |> h = g^-1 h g."""
    n = group.order
    table = [[group.conj(g, h) for h in range(n)] for g in range(n)]
    labels = tuple(group.label(i) for i in range(n))
    return _finish(table, labels, "conj", {"group": _group_params(group)})


def conj_class(group: FiniteGroup, g: int) -> FiniteQuandle:
    """One conjugacy class of the group, with the conjugation operation."""
    cls = conjugacy_class(group, g)
    pos = {e: i for i, e in enumerate(cls)}
    table = [[pos[group.conj(a, b)] for b in cls] for a in cls]
    labels = tuple(group.label(i) for i in cls)
    return _finish(table, labels, "conj_class",
                   {"group": _group_params(group), "g": int(g)})


def unipotent_class_quandle(p: int) -> FiniteQuandle:
    """The conjugacy class of [[1,1],[0,1]] inside SL_2(F_p)."""
    g = matrix_group_sl2(p)
    j1 = g.elements.index((1, 1, 0, 1))
    q = conj_class(g, j1)
    q.record = ConstructionRecord("unipotent_class", {"p": p}, q.labels)
    return q


# ---------------------------------------------------------------------------
# coset quandles from a group automorphism

def phi_space(group: FiniteGroup, phi: GroupAutomorphism, subgroup,
              rng: random.Random | None = None) -> FiniteQuandle:
    """Cosets G/H with xH |> yH = x phi(x^-1 y) H.

    Requires H inside the fixed subgroup of phi (offending elements are all
    reported).  Well-definedness over representative choices is rechecked
    exhaustively up to group order 512 and on 1000 sampled pairs above that;
    the algebra guarantees it, the check guards implementation bugs.
    """
    h = tuple(sorted(set(subgroup)))
    moved = [x for x in h if phi(x) != x]
    if moved:
        raise NotFixed(moved)
    cs = CosetSpace(group, h)  # raises NotASubgroup when H is not one

    def coset_op(x: int, y: int) -> int:
        return cs.index_of[group.mul(x, phi(group.mul(group.inv(x), y)))]

    k = cs.count
    table = [[coset_op(cs.reps[i], cs.reps[j]) for j in range(k)] for i in range(k)]

    if group.order <= WELLDEF_EXHAUSTIVE_LIMIT:
        pairs = ((x, y) for x in range(group.order) for y in range(group.order))
    else:
        rng = rng or random.Random(0)
        pairs = ((rng.randrange(group.order), rng.randrange(group.order))
                 for _ in range(WELLDEF_SAMPLES))
    for x, y in pairs:
        if coset_op(x, y) != table[cs.index_of[x]][cs.index_of[y]]:
            raise ConstructionError(
                f"coset operation not well-defined at representatives {(x, y)}")

    labels = tuple(f"{group.label(r)}.H" for r in cs.reps)
    return _finish(table, labels, "phi_space",
                   {"group": _group_params(group), "phi": list(phi.mapping),
                    "subgroup": list(h)})


def vedernikov(group: FiniteGroup, phi: GroupAutomorphism) -> FiniteQuandle:
    """The whole group with x |> y = x phi(y x^-1)."""
    n = group.order
    table = [[group.mul(x, phi(group.mul(y, group.inv(x)))) for y in range(n)]
             for x in range(n)]
    labels = tuple(group.label(i) for i in range(n))
    return _finish(table, labels, "vedernikov",
                   {"group": _group_params(group), "phi": list(phi.mapping)})


def twisted_orbit_action(group: FiniteGroup, phi: GroupAutomorphism):
    """The action x . a = x a phi(x^-1) of G on the carrier of vedernikov(G, phi).

    Returns one permutation of {0..|G|-1} per group element.  The orbit of
    the identity is a subquandle isomorphic to phi_space(G, phi, G^phi).
    """
    n = group.order
    return tuple(tuple(group.mul(group.mul(x, a), phi(group.inv(x)))
                       for a in range(n))
                 for x in range(n))


# ---------------------------------------------------------------------------
# linear families over prime fields

def _det_mod(mat, p: int) -> int:
    """Determinant of a square matrix over F_p by Gaussian elimination."""
    m = [[x % p for x in row] for row in mat]
    n = len(m)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] % p != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det % p
        det = det * m[col][col] % p
        inv = pow(m[col][col], p - 2, p)
        for r in range(col + 1, n):
            factor = m[r][col] * inv % p
            for c in range(col, n):
                m[r][c] = (m[r][c] - factor * m[col][c]) % p
    return det % p


def _vec_labels(vectors, n):
    if n == 1:
        return tuple(str(v[0]) for v in vectors)
    return tuple("(" + ",".join(str(x) for x in v) + ")" for v in vectors)


def alexander(p: int, n: int, a) -> FiniteQuandle:
    """F_p^n with v |> w = v + a(w - v), for an invertible scalar or matrix a."""
    if not is_prime(p):
        raise ConstructionError(f"{p} is not prime")
    if n < 1:
        raise ConstructionError("dimension must be positive")
    if isinstance(a, int):
        if a % p == 0:
            raise ConstructionError(f"scalar {a} is not invertible mod {p}")
        mat = [[a % p if i == j else 0 for j in range(n)] for i in range(n)]
        a_param = a % p
    else:
        mat = [[x % p for x in row] for row in a]
        if len(mat) != n or any(len(r) != n for r in mat):
            raise ConstructionError(f"matrix must be {n}x{n}")
        if _det_mod(mat, p) == 0:
            raise ConstructionError("matrix is not invertible mod p")
        a_param = [list(r) for r in mat]
    vectors = list(product(range(p), repeat=n))
    pos = {v: i for i, v in enumerate(vectors)}

    def op(v, w):
        d = [(w[i] - v[i]) % p for i in range(n)]
        return tuple((v[i] + sum(mat[i][j] * d[j] for j in range(n))) % p
                     for i in range(n))

    table = [[pos[op(v, w)] for w in vectors] for v in vectors]
    return _finish(table, _vec_labels(vectors, n), "alexander",
                   {"p": p, "n": n, "a": a_param})


def power_cocycle(p: int, n: int) -> FiniteQuandle:
    """F_p^n with x |> y = (y1, y2 + (y1-x1)^2, ..., yn + (y1-x1)^n).

    Every symmetry fixes the first coordinate, so the quandle is far from
    connected even though each translation moves the tail coordinates.
    """
    if not is_prime(p) or p < 3:
        raise ConstructionError("p must be an odd prime")
    if n < 2:
        raise ConstructionError("dimension must be at least 2")
    vectors = list(product(range(p), repeat=n))
    pos = {v: i for i, v in enumerate(vectors)}

    def op(x, y):
        d = (y[0] - x[0]) % p
        return (y[0],) + tuple((y[i] + pow(d, i + 1, p)) % p for i in range(1, n))

    table = [[pos[op(x, y)] for y in vectors] for x in vectors]
    return _finish(table, _vec_labels(vectors, n), "power_cocycle", {"p": p, "n": n})


# ---------------------------------------------------------------------------
# record replay

def _replay_group(params: dict) -> FiniteGroup:
    return FiniteGroup.from_dict(params)


def _replay_alexander(p: dict) -> FiniteQuandle:
    return alexander(p["p"], p["n"], p["a"])


_REPLAY = {
    "trivial": lambda p: trivial(p["n"]),
    "dihedral": lambda p: dihedral(p["n"]),
    "alexander": _replay_alexander,
    "power_cocycle": lambda p: power_cocycle(p["p"], p["n"]),
    "unipotent_class": lambda p: unipotent_class_quandle(p["p"]),
    "cocycle": lambda p: cocycle_extension(
        p["x_size"], _replay_group(p["abelian"]), p["cocycle"]),
    "conj": lambda p: conjugation(_replay_group(p["group"])),
    "conj_class": lambda p: conj_class(_replay_group(p["group"]), p["g"]),
    "phi_space": lambda p: phi_space(
        (g := _replay_group(p["group"])), GroupAutomorphism(g, p["phi"]),
        p["subgroup"]),
    "vedernikov": lambda p: vedernikov(
        (g := _replay_group(p["group"])), GroupAutomorphism(g, p["phi"])),
}
