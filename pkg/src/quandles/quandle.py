"""Finite quandles as explicit operation tables on {0..n-1}.

A quandle is a set with a binary operation ``|>`` that is idempotent
(q |> q = q), left-invertible (each left translation s_q: r -> q |> r is a
bijection) and left-distributive (q |> (r |> s) = (q |> r) |> (q |> s)).
The left translations s_q are called the symmetries of the quandle; each is
an automorphism.

Carriers are always the integers 0..n-1; constructions attach a labeling for
human-readable provenance.  A validated FiniteQuandle is immutable and its
operations are pure, so instances are safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_VIOLATIONS = 100


class QuandleError(Exception):
    pass


class RangeError(QuandleError):
    """Malformed table: ragged rows or entries outside {0..n-1}."""

    def __init__(self, message: str, positions=()):
        super().__init__(message)
        self.positions = tuple(positions)


@dataclass(frozen=True)
class AxiomViolation:
    """One failed quandle axiom with a witness tuple.

    axiom 1: idempotence, witness (q,);
    axiom 2: left-invertibility, witness (q, r);
    axiom 3: left-distributivity, witness (q, r, s).
    """

    axiom: int
    witness: tuple[int, ...]

    def __str__(self):
        names = {1: "idempotence", 2: "left-invertibility", 3: "left-distributivity"}
        return f"axiom {self.axiom} ({names[self.axiom]}) fails at {self.witness}"


class InvalidQuandleError(QuandleError):
    def __init__(self, violations: Sequence[AxiomViolation], truncated: bool = False):
        self.violations = list(violations)
        self.truncated = truncated
        head = "; ".join(str(v) for v in self.violations[:3])
        more = f" (+{len(self.violations) - 3} more)" if len(self.violations) > 3 else ""
        suffix = " [witness list truncated]" if truncated else ""
        super().__init__(f"{len(self.violations)} axiom violation(s): {head}{more}{suffix}")


@dataclass(frozen=True)
class ElementSymmetry:
    """The left translation s_q; always a quandle automorphism."""

    base: int
    perm: tuple[int, ...]

    def __call__(self, r: int) -> int:
        return self.perm[r]


class FiniteQuandle:
    """An n-element quandle given by its operation table and its inverse.

    ``op[q][r]`` is q |> r and ``inv_op[q][r]`` is q |>^-1 r.  The inverse
    table is always materialized: the inverse operation shows up in every
    orbit computation, and n^2 integers are trivial at desk scale.

    Do not call the constructor with unchecked tables; use ``validate``.
    """

    def __init__(self, op: Sequence[Sequence[int]], inv_op: Sequence[Sequence[int]],
                 labels: Sequence[str] | None = None, record=None):
        self.op = tuple(tuple(row) for row in op)
        self.inv_op = tuple(tuple(row) for row in inv_op)
        self.size = len(self.op)
        self.labels = tuple(labels) if labels is not None else None
        self.record = record

    # -- elementary maps -----------------------------------------------------

    def symmetry_perm(self, q: int) -> tuple[int, ...]:
        return self.op[q]

    def symmetry(self, q: int) -> ElementSymmetry:
        if not 0 <= q < self.size:
            raise IndexError(f"element {q} out of range for size {self.size}")
        return ElementSymmetry(q, self.op[q])

    def right_translation(self, q: int) -> tuple[int, ...]:
        """The column map r -> r |> q.  Not a bijection in general."""
        if not 0 <= q < self.size:
            raise IndexError(f"element {q} out of range for size {self.size}")
        return tuple(self.op[r][q] for r in range(self.size))

    def apply(self, q: int, r: int) -> int:
        return self.op[q][r]

    def apply_inv(self, q: int, r: int) -> int:
        return self.inv_op[q][r]

    # -- subquandles ---------------------------------------------------------

    def subquandle_closure(self, seed: Iterable[int]) -> tuple["FiniteQuandle", tuple[int, ...]]:
        """Smallest subset containing ``seed`` closed under |> and |>^-1,
        reindexed as a standalone quandle, plus the embedding into self."""
        s = set(seed)
        if not s:
            raise ValueError("seed set must be nonempty")
        for x in s:
            if not 0 <= x < self.size:
                raise IndexError(f"element {x} out of range for size {self.size}")
        while True:
            new = set()
            for u in s:
                for v in s:
                    for w in (self.op[u][v], self.inv_op[u][v]):
                        if w not in s:
                            new.add(w)
            if not new:
                break
            s |= new
        emb = tuple(sorted(s))
        pos = {e: i for i, e in enumerate(emb)}
        table = [[pos[self.op[a][b]] for b in emb] for a in emb]
        labels = tuple(self.labels[e] for e in emb) if self.labels else None
        return validate(table, labels=labels), emb

    def is_closed_subset(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return all(self.op[u][v] in s and self.inv_op[u][v] in s
                   for u in s for v in s)

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        d = {"size": self.size, "table": [list(r) for r in self.op]}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "FiniteQuandle":
        if "table" not in d:
            raise RangeError("quandle JSON needs a 'table' field")
        table = d["table"]
        if "size" in d and d["size"] != len(table):
            raise RangeError("declared size does not match table")
        labels = d.get("labels")
        if labels is not None and len(labels) != len(table):
            raise RangeError("labels length does not match table size")
        return validate(table, labels=tuple(labels) if labels else None)

    @classmethod
    def from_json(cls, text: str) -> "FiniteQuandle":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise RangeError(f"invalid JSON: {exc}") from exc
        if not isinstance(d, dict):
            raise RangeError("quandle JSON must be an object")
        return cls.from_dict(d)

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FiniteQuandle) and self.op == other.op

    def __hash__(self):
        return hash(self.op)

    def __repr__(self):
        fam = f", {self.record.family}" if self.record is not None else ""
        return f"FiniteQuandle(size={self.size}{fam})"


def axiom_violations(table: Sequence[Sequence[int]],
                     inv_table: Sequence[Sequence[int]] | None = None,
                     cap: int = MAX_VIOLATIONS) -> tuple[list[AxiomViolation], bool]:
    """All axiom violations of a well-formed table, up to ``cap`` witnesses.

    Returns (violations, truncated).  Assumes entries are already known to be
    in range; use ``validate`` for the full pipeline.
    """
    n = len(table)
    a = np.asarray(table, dtype=np.int64)
    out: list[AxiomViolation] = []
    truncated = False

    def push(v: AxiomViolation) -> bool:
        nonlocal truncated
        if len(out) >= cap:
            truncated = True
            return False
        out.append(v)
        return True

    # axiom 1: idempotence on the diagonal
    for q in np.flatnonzero(a.diagonal() != np.arange(n)):
        if not push(AxiomViolation(1, (int(q),))):
            return out, truncated

    # axiom 2: each row is a permutation
    row_is_perm = (np.sort(a, axis=1) == np.arange(n)).all(axis=1)
    for q in np.flatnonzero(~row_is_perm):
        missing = min(set(range(n)) - set(int(x) for x in a[q]))
        if not push(AxiomViolation(2, (int(q), missing))):
            return out, truncated

    # provided inverse table must invert each (valid) row
    if inv_table is not None:
        inv = np.asarray(inv_table, dtype=np.int64)
        for q in range(n):
            if not row_is_perm[q]:
                continue
            expected = np.argsort(a[q])
            bad = np.flatnonzero(inv[q] != expected)
            if bad.size:
                if not push(AxiomViolation(2, (q, int(bad[0])))):
                    return out, truncated

    # axiom 3: left distributivity, vectorized over all triples
    idx = np.arange(n)
    lhs = a[idx[:, None, None], a[None, :, :]]          # a[q, a[r, s]]
    rhs = a[a[:, :, None], a[:, None, :]]               # a[a[q,r], a[q,s]]
    bad = np.argwhere(lhs != rhs)
    for q, r, s in bad:
        if not push(AxiomViolation(3, (int(q), int(r), int(s)))):
            return out, truncated
    return out, truncated


def validate(table: Sequence[Sequence[int]],
             inv_table: Sequence[Sequence[int]] | None = None,
             labels: Sequence[str] | None = None) -> FiniteQuandle:
    """Check the three quandle axioms and return the validated quandle.

    Raises RangeError for malformed tables and InvalidQuandleError carrying
    the full witness list (capped at 100) for axiom failures.  When
    ``inv_table`` is absent it is computed by inverting the rows.
    """
    n = len(table)
    if n == 0:
        raise RangeError("a quandle must be nonempty")
    bad_positions = []
    for q, row in enumerate(table):
        if len(row) != n:
            raise RangeError(f"row {q} has length {len(row)}, expected {n}")
        for r, x in enumerate(row):
            if not isinstance(x, (int, np.integer)) or isinstance(x, bool) or not 0 <= x < n:
                bad_positions.append((q, r))
    if inv_table is not None:
        if len(inv_table) != n:
            raise RangeError(f"inverse table has {len(inv_table)} rows, expected {n}")
        for q, row in enumerate(inv_table):
            if len(row) != n:
                raise RangeError(f"inverse row {q} has length {len(row)}, expected {n}")
            for r, x in enumerate(row):
                if not isinstance(x, (int, np.integer)) or isinstance(x, bool) or not 0 <= x < n:
                    bad_positions.append((q, r))
    if bad_positions:
        head = ", ".join(str(p) for p in bad_positions[:5])
        raise RangeError(f"entries out of range at {head}", positions=bad_positions)

    violations, truncated = axiom_violations(table, inv_table)
    if violations:
        raise InvalidQuandleError(violations, truncated)

    op = tuple(tuple(int(x) for x in row) for row in table)
    if inv_table is not None:
        inv_op = tuple(tuple(int(x) for x in row) for row in inv_table)
    else:
        inv_op = tuple(tuple(int(x) for x in np.argsort(np.asarray(row)))
                       for row in op)
    return FiniteQuandle(op, inv_op, labels=labels)


def symmetry(quandle: FiniteQuandle, q: int) -> ElementSymmetry:
    return quandle.symmetry(q)


def right_translation(quandle: FiniteQuandle, q: int) -> tuple[int, ...]:
    return quandle.right_translation(q)


def subquandle_closure(quandle: FiniteQuandle, seed: Iterable[int]):
    return quandle.subquandle_closure(seed)
