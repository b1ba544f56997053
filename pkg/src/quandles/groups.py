"""Finite groups, permutation closures, automorphisms and coset spaces.

Permutations on {0..m-1} are plain tuples: ``p[i]`` is the image of ``i``.
``compose(p, q)`` applies ``q`` first, then ``p``, matching function
composition.  Everything here is exact integer arithmetic; groups are
immutable once built and safe to share.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Callable, Iterable, Sequence

DEFAULT_CAP = 10**6
TABLE_LIMIT = 512        # permutation-backed groups materialize a table up to this order
EXHAUSTIVE_ASSOC = 64    # associativity checked on all triples up to this order
EXHAUSTIVE_PAIRS = 2 * 10**6  # automorphism check is exhaustive up to this many pairs
SAMPLED_CHECKS = 20000


class GroupError(Exception):
    pass


class CapExceeded(GroupError):
    """Raised when a closure would enumerate more elements than allowed."""


class NotASubgroup(GroupError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAnAutomorphism(GroupError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class CycleParseError(GroupError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f" at line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(message + where)
        self.line = line
        self.column = column


# ---------------------------------------------------------------------------
# permutations

def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """p after q: (p o q)(i) = p[q[i]]."""
    return tuple(p[x] for x in q)


def invert(p: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def is_permutation(p: Sequence[int], n: int | None = None) -> bool:
    m = len(p) if n is None else n
    return len(p) == m and sorted(p) == list(range(m))


def perm_cycles(p: Sequence[int], include_fixed: bool = False) -> list[tuple[int, ...]]:
    """Disjoint cycles of ``p``, each starting at its minimum, sorted."""
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cur = start
        cyc = []
        while not seen[cur]:
            seen[cur] = True
            cyc.append(cur)
            cur = p[cur]
        if len(cyc) > 1 or include_fixed:
            cycles.append(tuple(cyc))
    return cycles


def cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    """Multiset of cycle lengths (fixed points included), sorted."""
    return tuple(sorted(len(c) for c in perm_cycles(p, include_fixed=True)))


def format_cycles(p: Sequence[int]) -> str:
    cycles = perm_cycles(p)
    if not cycles:
        return ""
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


def parse_cycles(text: str, domain_size: int | None = None,
                 line: int | None = None) -> tuple[int, ...]:
    """Parse one permutation in disjoint-cycle notation over 0-based points.

    Accepts whitespace between and inside cycles, e.g. ``"(0 1 2) (3 4)"``.
    An empty (or all-whitespace) string denotes the identity, which requires
    ``domain_size``.  Repeated points are rejected with the column of the
    second occurrence.
    """
    mapping: dict[int, int] = {}
    seen: set[int] = set()
    i = 0
    n = len(text)
    max_point = -1
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise CycleParseError(f"expected '(' but found {ch!r}", line, i)
        i += 1
        cyc: list[int] = []
        while True:
            while i < n and text[i].isspace():
                i += 1
            if i >= n:
                raise CycleParseError("unterminated cycle", line, i)
            if text[i] == ")":
                i += 1
                break
            if not text[i].isdigit():
                raise CycleParseError(f"expected point or ')' but found {text[i]!r}", line, i)
            start = i
            while i < n and text[i].isdigit():
                i += 1
            pt = int(text[start:i])
            if pt in seen:
                raise CycleParseError(f"repeated point {pt}", line, start)
            seen.add(pt)
            max_point = max(max_point, pt)
            cyc.append(pt)
        for k, pt in enumerate(cyc):
            mapping[pt] = cyc[(k + 1) % len(cyc)]
    size = max_point + 1
    if domain_size is not None:
        if size > domain_size:
            raise CycleParseError(
                f"point {max_point} outside domain of size {domain_size}", line)
        size = domain_size
    if size == 0:
        raise CycleParseError("empty permutation needs an explicit domain size", line)
    return tuple(mapping.get(x, x) for x in range(size))


def parse_generator_lines(text: str, domain_size: int | None = None) -> list[tuple[int, ...]]:
    """Parse a generator file: one cycle-notation permutation per line.

    Blank lines denote the identity.  All permutations share one domain,
    inferred as the largest point mentioned plus one unless given.
    """
    raw: list[tuple[int, str]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        raw.append((lineno, body))
    # first pass for the domain
    size = domain_size or 0
    for lineno, body in raw:
        for tok in body.replace("(", " ").replace(")", " ").split():
            if not tok.isdigit():
                raise CycleParseError(f"unexpected token {tok!r}", lineno)
            size = max(size, int(tok) + 1)
    if size == 0:
        raise CycleParseError("no points found and no domain size given")
    out = []
    for lineno, body in raw:
        if body.strip() == "":
            out.append(identity_perm(size))
        else:
            out.append(parse_cycles(body, domain_size=size, line=lineno))
    return out


# ---------------------------------------------------------------------------
# permutation groups by naive closure

class PermutationGroup:
    """A group of permutations of {0..m-1}, enumerated by breadth-first closure.

    Closure is lazy; ``elements`` and ``order`` trigger it.  Orbits only walk
    the generators and never require the full element set.
    """

    def __init__(self, domain_size: int, generators: Iterable[Sequence[int]],
                 cap: int = DEFAULT_CAP, _elements: tuple | None = None):
        gens = []
        seen = set()
        for g in generators:
            t = tuple(g)
            if len(t) != domain_size or not is_permutation(t):
                raise GroupError(f"generator {t} is not a permutation of {domain_size} points")
            if t not in seen:
                seen.add(t)
                gens.append(t)
        self.domain_size = domain_size
        self.generators = tuple(gens)
        self.cap = cap
        self._elements = _elements
        self._element_set = set(_elements) if _elements is not None else None

    @property
    def elements(self) -> tuple[tuple[int, ...], ...]:
        if self._elements is None:
            self._close()
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def _close(self) -> None:
        ident = identity_perm(self.domain_size)
        els = {ident}
        frontier = deque()
        for g in self.generators:
            if g not in els:
                els.add(g)
                frontier.append(g)
        while frontier:
            b = frontier.popleft()
            for g in self.generators:
                c = compose(g, b)
                if c not in els:
                    if len(els) >= self.cap:
                        raise CapExceeded(
                            f"group closure exceeded cap of {self.cap} elements")
                    els.add(c)
                    frontier.append(c)
        self._element_set = els
        self._elements = tuple(sorted(els))

    def __contains__(self, p) -> bool:
        if self._element_set is None:
            self._close()
        return tuple(p) in self._element_set

    def __iter__(self):
        return iter(self.elements)

    def orbit(self, point: int) -> frozenset[int]:
        """Orbit of a point under the generated group (generator walk only)."""
        seen = {point}
        queue = deque([point])
        while queue:
            x = queue.popleft()
            for g in self.generators:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def orbits(self) -> list[frozenset[int]]:
        out = []
        left = set(range(self.domain_size))
        while left:
            orb = self.orbit(min(left))
            out.append(orb)
            left -= orb
        return out

    def is_transitive(self) -> bool:
        return self.domain_size <= 1 or len(self.orbit(0)) == self.domain_size

    def __repr__(self):
        closed = self._elements is not None
        extra = f", order={len(self._elements)}" if closed else ""
        return f"PermutationGroup(domain={self.domain_size}, gens={len(self.generators)}{extra})"


def close(generators: Iterable[Sequence[int]], cap: int = DEFAULT_CAP,
          domain_size: int | None = None) -> PermutationGroup:
    """Close a generator list into a PermutationGroup (breadth-first)."""
    gens = [tuple(g) for g in generators]
    if domain_size is None:
        domain_size = len(gens[0]) if gens else 0
    for g in gens:
        if len(g) != domain_size:
            raise GroupError("generators live on different domains")
    grp = PermutationGroup(domain_size, gens, cap=cap)
    grp.elements  # force closure now so cap errors surface here
    return grp


# ---------------------------------------------------------------------------
# explicit finite groups

class FiniteGroup:
    """A finite group on indices 0..order-1.

    Multiplication comes from an explicit table or, for permutation-backed
    groups above ``TABLE_LIMIT``, from composing the underlying permutations.
    """

    def __init__(self, order: int, mul: Callable[[int, int], int] | None,
                 inv: Sequence[int], identity: int,
                 table: Sequence[Sequence[int]] | None = None,
                 labels: Sequence[str] | None = None,
                 elements: tuple | None = None):
        self.order = order
        self._mul = mul
        self._table = tuple(tuple(r) for r in table) if table is not None else None
        self.inv_map = tuple(inv)
        self.identity = identity
        self.labels = tuple(labels) if labels is not None else None
        self.elements = elements  # underlying objects (perms, matrices), optional

    # -- construction -------------------------------------------------------

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]],
                   labels: Sequence[str] | None = None,
                   rng: random.Random | None = None) -> "FiniteGroup":
        n = len(table)
        rows = [tuple(r) for r in table]
        for i, row in enumerate(rows):
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise GroupError(f"row {i} of multiplication table is malformed")
        ident = None
        for e in range(n):
            if all(rows[e][x] == x and rows[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise GroupError("no identity element in multiplication table")
        inv = [None] * n
        for x in range(n):
            for y in range(n):
                if rows[x][y] == ident and rows[y][x] == ident:
                    inv[x] = y
                    break
            if inv[x] is None:
                raise GroupError(f"element {x} has no inverse")
        if n <= EXHAUSTIVE_ASSOC:
            triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
        else:
            rng = rng or random.Random(0)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(SAMPLED_CHECKS))
        for a, b, c in triples:
            if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                raise GroupError(f"multiplication is not associative at {(a, b, c)}")
        return cls(n, None, inv, ident, table=rows, labels=labels)

    @classmethod
    def from_permutations(cls, perms: Iterable[Sequence[int]],
                          cap: int = DEFAULT_CAP) -> "FiniteGroup":
        grp = close(list(perms), cap=cap)
        return cls.from_permutation_group(grp)

    @classmethod
    def from_permutation_group(cls, grp: PermutationGroup) -> "FiniteGroup":
        els = grp.elements
        index = {p: i for i, p in enumerate(els)}
        ident = index[identity_perm(grp.domain_size)]
        inv = tuple(index[invert(p)] for p in els)
        labels = tuple(format_cycles(p) or "()" for p in els)
        if len(els) <= TABLE_LIMIT:
            table = [[index[compose(a, b)] for b in els] for a in els]
            return cls(len(els), None, inv, ident, table=table,
                       labels=labels, elements=els)

        def mul(i: int, j: int) -> int:
            return index[compose(els[i], els[j])]

        return cls(len(els), mul, inv, ident, labels=labels, elements=els)

    @classmethod
    def from_elements(cls, elements: Sequence, mul_fn: Callable,
                      inv_fn: Callable, identity_el,
                      labels: Sequence[str] | None = None) -> "FiniteGroup":
        """Build from abstract hashable elements with given operations."""
        els = tuple(elements)
        index = {e: i for i, e in enumerate(els)}
        ident = index[identity_el]
        inv = tuple(index[inv_fn(e)] for e in els)
        if len(els) <= TABLE_LIMIT:
            table = [[index[mul_fn(a, b)] for b in els] for a in els]
            return cls(len(els), None, inv, ident, table=table,
                       labels=labels, elements=els)

        def mul(i: int, j: int) -> int:
            return index[mul_fn(els[i], els[j])]

        return cls(len(els), mul, inv, ident, labels=labels, elements=els)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
        return cls(n, None, tuple((-i) % n for i in range(n)), 0,
                   table=table, labels=tuple(str(i) for i in range(n)))

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        import itertools
        perms = sorted(itertools.permutations(range(n)))
        return cls.from_elements(perms, compose, invert, identity_perm(n),
                                 labels=tuple(format_cycles(p) or "()" for p in perms))

    # -- operations ----------------------------------------------------------

    def mul(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        return self._mul(i, j)

    def inv(self, i: int) -> int:
        return self.inv_map[i]

    def conj(self, g: int, h: int) -> int:
        """g^-1 h g."""
        return self.mul(self.mul(self.inv(g), h), g)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def element_order(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.mul(x, i)
            k += 1
        return k

    def is_abelian(self) -> bool:
        for a in range(self.order):
            for b in range(a + 1, self.order):
                if self.mul(a, b) != self.mul(b, a):
                    return False
        return True

    def subgroup_witness(self, subset: Iterable[int]):
        """None if ``subset`` is a subgroup, else a witness describing why not."""
        s = set(subset)
        if not s:
            return ("empty",)
        if self.identity not in s:
            return ("missing-identity", self.identity)
        for a in s:
            if self.inv(a) not in s:
                return ("inverse", a)
            for b in s:
                if self.mul(a, b) not in s:
                    return ("product", a, b)
        return None

    def is_subgroup(self, subset: Iterable[int]) -> bool:
        return self.subgroup_witness(subset) is None

    def subgroup_closure(self, subset: Iterable[int]) -> tuple[int, ...]:
        s = set(subset) | {self.identity}
        frontier = deque(s)
        while frontier:
            a = frontier.popleft()
            for b in list(s):
                for c in (self.mul(a, b), self.mul(b, a)):
                    if c not in s:
                        s.add(c)
                        frontier.append(c)
            i = self.inv(a)
            if i not in s:
                s.add(i)
                frontier.append(i)
        return tuple(sorted(s))

    def multiplication_table(self) -> tuple[tuple[int, ...], ...]:
        if self._table is None:
            if self.order > 4096:
                raise GroupError(
                    f"refusing to materialize a {self.order}x{self.order} table")
            self._table = tuple(tuple(self.mul(i, j) for j in range(self.order))
                                for i in range(self.order))
        return self._table

    def to_dict(self) -> dict:
        d = {"order": self.order,
             "mul": [list(r) for r in self.multiplication_table()]}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "FiniteGroup":
        if "mul" not in d:
            raise GroupError("group JSON needs a 'mul' table")
        labels = d.get("labels")
        g = cls.from_table(d["mul"], labels=tuple(labels) if labels else None)
        if "order" in d and d["order"] != g.order:
            raise GroupError("declared order does not match table size")
        return g

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


# ---------------------------------------------------------------------------
# automorphisms, fixed subgroups, cosets

class GroupAutomorphism:
    """An automorphism of a FiniteGroup, stored as an index permutation."""

    def __init__(self, group: FiniteGroup, mapping: Sequence[int], check: bool = True,
                 rng: random.Random | None = None):
        self.group = group
        self.mapping = tuple(mapping)
        if check:
            self._check(rng)

    def _check(self, rng):
        g = self.group
        m = self.mapping
        if not is_permutation(m, g.order):
            raise NotAnAutomorphism("mapping is not a bijection on the group")
        if m[g.identity] != g.identity:
            raise NotAnAutomorphism("mapping moves the identity",
                                    witness=g.identity)
        n = g.order
        if n * n <= EXHAUSTIVE_PAIRS:
            pairs = ((a, b) for a in range(n) for b in range(n))
        else:
            rng = rng or random.Random(0)
            pairs = ((rng.randrange(n), rng.randrange(n)) for _ in range(SAMPLED_CHECKS))
        for a, b in pairs:
            if m[g.mul(a, b)] != g.mul(m[a], m[b]):
                raise NotAnAutomorphism(
                    f"mapping is not multiplicative at {(a, b)}", witness=(a, b))

    def apply(self, i: int) -> int:
        return self.mapping[i]

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def is_identity(self) -> bool:
        return all(self.mapping[i] == i for i in range(self.group.order))

    def inverse(self) -> "GroupAutomorphism":
        return GroupAutomorphism(self.group, invert(self.mapping), check=False)

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.group.order) if self.mapping[i] == i)

    def __repr__(self):
        return f"GroupAutomorphism(order={self.group.order})"


def fixed_subgroup(group: FiniteGroup, phi: GroupAutomorphism) -> tuple[int, ...]:
    """Elements fixed by ``phi``; always verified to form a subgroup."""
    fixed = phi.fixed_points()
    witness = group.subgroup_witness(fixed)
    if witness is not None:
        raise GroupError(f"fixed set is not a subgroup: {witness}")
    return fixed


def all_automorphisms(group: FiniteGroup, max_order: int = 64) -> list[GroupAutomorphism]:
    """Enumerate every automorphism of a small group by backtracking."""
    n = group.order
    if n > max_order:
        raise GroupError(f"automorphism enumeration limited to order {max_order}")
    orders = [group.element_order(i) for i in range(n)]
    by_order: dict[int, list[int]] = {}
    for i, o in enumerate(orders):
        by_order.setdefault(o, []).append(i)
    candidates = [tuple(by_order[orders[i]]) for i in range(n)]
    found: list[GroupAutomorphism] = []
    mapping = [-1] * n
    used = [False] * n
    mapping[group.identity] = group.identity
    used[group.identity] = True
    todo = [i for i in range(n) if i != group.identity]
    todo.sort(key=lambda i: (len(candidates[i]), i))

    def consistent(i: int) -> bool:
        for j in range(n):
            if mapping[j] < 0:
                continue
            p = group.mul(i, j)
            if mapping[p] >= 0 and mapping[p] != group.mul(mapping[i], mapping[j]):
                return False
            p = group.mul(j, i)
            if mapping[p] >= 0 and mapping[p] != group.mul(mapping[j], mapping[i]):
                return False
        return True

    def rec(k: int):
        if k == len(todo):
            found.append(GroupAutomorphism(group, tuple(mapping), check=False))
            return
        i = todo[k]
        for img in candidates[i]:
            if used[img]:
                continue
            mapping[i] = img
            used[img] = True
            if consistent(i):
                rec(k + 1)
            mapping[i] = -1
            used[img] = False

    rec(0)
    # drop impostors: the partial consistency check is necessary, not sufficient
    out = []
    for f in found:
        try:
            GroupAutomorphism(group, f.mapping, check=True)
            out.append(f)
        except NotAnAutomorphism:
            continue
    return out


class CosetSpace:
    """Left cosets gH of a verified subgroup, with canonical representatives.

    The representative of a coset is its minimum element index, so the
    decomposition is deterministic across runs.
    """

    def __init__(self, group: FiniteGroup, subgroup: Iterable[int]):
        sub = tuple(sorted(set(subgroup)))
        witness = group.subgroup_witness(sub)
        if witness is not None:
            raise NotASubgroup(f"not a subgroup: {witness}", witness=witness)
        self.group = group
        self.subgroup = sub
        index_of = [-1] * group.order
        reps = []
        cosets = []
        for g in range(group.order):
            if index_of[g] >= 0:
                continue
            members = tuple(sorted(group.mul(g, h) for h in sub))
            cid = len(reps)
            for m in members:
                index_of[m] = cid
            reps.append(g)
            cosets.append(members)
        self.reps = tuple(reps)
        self.cosets = tuple(cosets)
        self.index_of = tuple(index_of)

    @property
    def count(self) -> int:
        return len(self.reps)

    def coset_of(self, element: int) -> int:
        return self.index_of[element]

    def __repr__(self):
        return f"CosetSpace(group={self.group.order}, subgroup={len(self.subgroup)}, cosets={self.count})"


def cosets(group: FiniteGroup, subgroup: Iterable[int]) -> CosetSpace:
    return CosetSpace(group, subgroup)


def conjugacy_class(group: FiniteGroup, g: int) -> tuple[int, ...]:
    """Orbit of ``g`` under conjugation by the whole group."""
    if not 0 <= g < group.order:
        raise GroupError(f"element {g} out of range")
    return tuple(sorted({group.conj(h, g) for h in range(group.order)}))


# ---------------------------------------------------------------------------
# 2x2 matrix groups over prime fields

def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def matrix_group_sl2(p: int) -> FiniteGroup:
    """All 2x2 matrices of determinant 1 over F_p; order p(p^2-1).

    Elements are row-major 4-tuples (a, b, c, d) in lexicographic order,
    labelled "[[a,b],[c,d]]".  Guarded to p <= 13 to keep tables desk-sized.
    """
    if not is_prime(p):
        raise GroupError(f"{p} is not prime")
    if p > 13:
        raise GroupError(f"p={p} too large (limit 13)")
    els = []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p == 1:
                        els.append((a, b, c, d))
    els.sort()

    def mul(m, q):
        a, b, c, d = m
        e, f, g, h = q
        return ((a * e + b * g) % p, (a * f + b * h) % p,
                (c * e + d * g) % p, (c * f + d * h) % p)

    def inv(m):
        a, b, c, d = m
        return (d % p, (-b) % p, (-c) % p, a % p)

    labels = tuple(f"[[{a},{b}],[{c},{d}]]" for (a, b, c, d) in els)
    return FiniteGroup.from_elements(els, mul, inv, (1, 0, 0, 1), labels=labels)
