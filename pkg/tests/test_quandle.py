import pytest

from quandles import (AxiomViolation, FiniteQuandle, InvalidQuandleError,
                      RangeError, axiom_violations, conjugation, dihedral,
                      trivial, validate)
from quandles.groups import FiniteGroup, identity_perm

from corpus_util import small_corpus


def dihedral_table(n):
    return [[(2 * i - j) % n for j in range(n)] for i in range(n)]


def test_validate_dihedral():
    q = validate(dihedral_table(3))
    assert q.size == 3
    assert q.op == ((0, 2, 1), (2, 1, 0), (1, 0, 2))


def test_validate_trivial():
    for n in (1, 3, 6):
        q = validate([[r for r in range(n)] for _ in range(n)])
        assert all(q.op[a][b] == b for a in range(n) for b in range(n))


def test_validate_idempotence_violation():
    with pytest.raises(InvalidQuandleError) as exc:
        validate([[1, 1], [0, 0]])
    violations = exc.value.violations
    assert AxiomViolation(1, (0,)) in violations
    assert AxiomViolation(1, (1,)) in violations


def test_validate_row_not_permutation():
    with pytest.raises(InvalidQuandleError) as exc:
        validate([[0, 0, 0], [2, 1, 0], [1, 0, 2]])
    assert any(v.axiom == 2 and v.witness[0] == 0 for v in exc.value.violations)


def test_validate_distributivity_violation():
    # rows are permutations and the diagonal is fixed, but |> fails axiom 3
    table = [[0, 2, 1, 3], [3, 1, 0, 2], [1, 3, 2, 0], [2, 0, 1, 3]]
    violations, _ = axiom_violations(table)
    assert violations, "expected a distributivity failure"
    assert all(v.axiom in (1, 2, 3) for v in violations)
    q, r, s = next(v.witness for v in violations if v.axiom == 3)
    assert table[q][table[r][s]] != table[table[q][r]][table[q][s]]


def test_validate_out_of_range():
    with pytest.raises(RangeError):
        validate([[0, 5], [1, 1]])
    with pytest.raises(RangeError):
        validate([[0, 1], [1]])
    with pytest.raises(RangeError):
        validate([])


def test_validate_witness_cap():
    n = 8
    table = [[(q + r + 1) % n for r in range(n)] for q in range(n)]  # wildly wrong
    violations, truncated = axiom_violations(table)
    assert len(violations) == 100 and truncated


def test_inv_table_checked():
    tab = dihedral_table(4)
    good = validate(tab, inv_table=tab)  # dihedral symmetries are involutions
    assert good.inv_op == good.op
    bad_inv = [[(r + 1) % 4 for r in range(4)] for _ in range(4)]
    with pytest.raises(InvalidQuandleError):
        validate(tab, inv_table=bad_inv)


def test_inverse_tables_are_inverse():
    for _, q in small_corpus():
        n = q.size
        for a in range(n):
            for b in range(n):
                assert q.inv_op[a][q.op[a][b]] == b
                assert q.op[a][q.inv_op[a][b]] == b


def test_rows_are_permutations():
    for _, q in small_corpus():
        for a in range(q.size):
            assert sorted(q.op[a]) == list(range(q.size))


def test_symmetries_are_automorphisms():
    for _, q in small_corpus():
        for a in range(q.size):
            s = q.symmetry(a)
            assert s.base == a and s.perm == q.op[a]
            for x in range(q.size):
                for y in range(q.size):
                    assert s(q.op[x][y]) == q.op[s(x)][s(y)]


def test_symmetry_examples():
    t = trivial(4)
    assert all(t.symmetry(q).perm == identity_perm(4) for q in range(4))
    r3 = dihedral(3)
    assert r3.symmetry(0).perm == (0, 2, 1)
    with pytest.raises(IndexError):
        r3.symmetry(3)


def test_right_translation():
    t = trivial(5)
    assert t.right_translation(2) == (2, 2, 2, 2, 2)
    from quandles import alexander
    a = alexander(5, 1, 2)
    # r |> 0 = r + 2(0 - r) = -r mod 5
    assert a.right_translation(0) == tuple((-r) % 5 for r in range(5))
    r3 = dihedral(3)
    assert sorted(r3.right_translation(1)) == [0, 1, 2]
    with pytest.raises(IndexError):
        r3.right_translation(-1)


def test_subquandle_closure_whole():
    r3 = dihedral(3)
    sub, emb = r3.subquandle_closure(range(3))
    assert emb == (0, 1, 2) and sub.op == r3.op


def test_subquandle_closure_singleton():
    t = trivial(4)
    sub, emb = t.subquandle_closure({2})
    assert sub.size == 1 and emb == (2,)


def test_subquandle_closure_conjugation():
    # one element alone closes to itself (idempotence); two transpositions
    # generate the whole 3-element class
    s3 = FiniteGroup.symmetric(3)
    q = conjugation(s3)
    t1 = s3.elements.index((1, 0, 2))
    t2 = s3.elements.index((0, 2, 1))
    single, _ = q.subquandle_closure({t1})
    assert single.size == 1
    sub, emb = q.subquandle_closure({t1, t2})
    assert sub.size == 3
    assert all(q.labels[e].count("(") == 1 for e in emb)  # all transpositions


def test_subquandle_closure_empty_seed():
    with pytest.raises(ValueError):
        trivial(3).subquandle_closure(set())


def test_json_round_trip():
    for _, q in small_corpus():
        again = FiniteQuandle.from_json(q.to_json())
        assert again.op == q.op and again.labels == q.labels


def test_json_errors():
    with pytest.raises(RangeError):
        FiniteQuandle.from_json("not json")
    with pytest.raises(RangeError):
        FiniteQuandle.from_json('{"size": 2}')
    with pytest.raises(RangeError):
        FiniteQuandle.from_json('{"size": 3, "table": [[0]]}')
    with pytest.raises(RangeError):
        FiniteQuandle.from_json('{"table": [[0]], "labels": ["a", "b"]}')
