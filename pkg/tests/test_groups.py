import itertools

import pytest

from quandles.groups import (CapExceeded, CosetSpace, CycleParseError,
                             FiniteGroup, GroupAutomorphism, GroupError,
                             NotASubgroup, NotAnAutomorphism, all_automorphisms,
                             close, compose, conjugacy_class, cosets,
                             cycle_type, fixed_subgroup, format_cycles,
                             identity_perm, invert, is_permutation,
                             matrix_group_sl2, parse_cycles,
                             parse_generator_lines, perm_cycles)


def test_compose_and_invert():
    p = (1, 2, 0)
    q = (0, 2, 1)
    assert compose(p, q) == (1, 0, 2)  # p after q
    assert compose(invert(p), p) == identity_perm(3)
    assert cycle_type(p) == (3,) and cycle_type(q) == (1, 2)
    assert perm_cycles(p) == [(0, 1, 2)]


# -- closure ------------------------------------------------------------------

def test_close_empty():
    grp = close([], domain_size=5)
    assert grp.order == 1 and grp.elements == (identity_perm(5),)


def test_close_cyclic():
    grp = close([(1, 2, 0)])
    assert grp.order == 3


def test_close_dihedral_rows():
    rows = [(0, 2, 1), (2, 1, 0), (1, 0, 2)]
    grp = close(rows)
    assert grp.order == 6
    assert grp.is_transitive()


def test_close_order_independent():
    rows = [(0, 2, 1), (2, 1, 0), (1, 0, 2)]
    for perm in itertools.permutations(rows):
        assert set(close(list(perm)).elements) == set(close(rows).elements)


def test_close_cap():
    with pytest.raises(CapExceeded):
        close([(1, 2, 0), (0, 2, 1)], cap=3)


def test_close_mixed_domains():
    with pytest.raises(GroupError):
        close([(1, 0), (1, 2, 0)])


def test_orbits_without_closure():
    grp = close([(1, 0, 2, 3), (0, 1, 3, 2)])
    assert grp.orbits() == [frozenset({0, 1}), frozenset({2, 3})]


# -- explicit groups ----------------------------------------------------------

def test_from_table_validation():
    z3 = FiniteGroup.cyclic(3)
    assert z3.identity == 0 and z3.inv(1) == 2
    with pytest.raises(GroupError):
        FiniteGroup.from_table([[1, 0], [1, 0]])  # no identity
    with pytest.raises(GroupError):
        FiniteGroup.from_table([[0, 1], [1, 2]])  # out of range
    # non-associative latin square with identity: order 5 loop
    loop = [[0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0]]
    with pytest.raises(GroupError):
        FiniteGroup.from_table(loop)


def test_symmetric_group():
    s4 = FiniteGroup.symmetric(4)
    assert s4.order == 24
    assert s4.elements[s4.identity] == (0, 1, 2, 3)
    assert not s4.is_abelian()
    assert FiniteGroup.cyclic(8).is_abelian()


def test_element_order():
    s3 = FiniteGroup.symmetric(3)
    orders = sorted(s3.element_order(i) for i in range(6))
    assert orders == [1, 2, 2, 2, 3, 3]


def test_subgroup_closure_and_check():
    s3 = FiniteGroup.symmetric(3)
    t = s3.elements.index((1, 0, 2))
    sub = s3.subgroup_closure({t})
    assert len(sub) == 2 and s3.is_subgroup(sub)
    assert s3.subgroup_witness((t,)) is not None


def test_group_json_round_trip():
    s3 = FiniteGroup.symmetric(3)
    again = FiniteGroup.from_dict(s3.to_dict())
    assert again.order == 6
    assert all(again.mul(i, j) == s3.mul(i, j) for i in range(6) for j in range(6))


# -- automorphisms ------------------------------------------------------------

def test_fixed_subgroup_identity():
    z5 = FiniteGroup.cyclic(5)
    phi = GroupAutomorphism(z5, identity_perm(5))
    assert fixed_subgroup(z5, phi) == (0, 1, 2, 3, 4)


def test_fixed_subgroup_doubling():
    z5 = FiniteGroup.cyclic(5)
    phi = GroupAutomorphism(z5, tuple((2 * x) % 5 for x in range(5)))
    assert fixed_subgroup(z5, phi) == (0,)


def test_fixed_subgroup_conjugation():
    s3 = FiniteGroup.symmetric(3)
    t = s3.elements.index((1, 0, 2))
    phi = GroupAutomorphism(s3, tuple(s3.conj(t, x) for x in range(6)))
    assert fixed_subgroup(s3, phi) == (s3.identity, t)


def test_not_an_automorphism():
    z4 = FiniteGroup.cyclic(4)
    with pytest.raises(NotAnAutomorphism):
        GroupAutomorphism(z4, (0, 2, 1, 3))  # not multiplicative
    with pytest.raises(NotAnAutomorphism):
        GroupAutomorphism(z4, (1, 0, 3, 2))  # moves identity
    with pytest.raises(NotAnAutomorphism):
        GroupAutomorphism(z4, (0, 0, 2, 2))  # not a bijection


def test_all_automorphisms_s3():
    s3 = FiniteGroup.symmetric(3)
    autos = all_automorphisms(s3)
    assert len(autos) == 6
    z8 = FiniteGroup.cyclic(8)
    assert len(all_automorphisms(z8)) == 4  # units mod 8


# -- cosets -------------------------------------------------------------------

def test_cosets_whole_and_trivial():
    s3 = FiniteGroup.symmetric(3)
    assert cosets(s3, range(6)).count == 1
    cs = cosets(s3, (s3.identity,))
    assert cs.count == 6 and cs.reps == tuple(range(6))


def test_cosets_s3_by_transposition():
    s3 = FiniteGroup.symmetric(3)
    t = s3.elements.index((1, 0, 2))
    cs = CosetSpace(s3, (s3.identity, t))
    assert cs.count == 3
    # reps are minima and pairwise in distinct cosets
    for k, rep in enumerate(cs.reps):
        assert cs.index_of[rep] == k
        assert rep == min(cs.cosets[k])
    # element -> (coset, position) is a bijection
    seen = {(cs.index_of[g], cs.cosets[cs.index_of[g]].index(g)) for g in range(6)}
    assert len(seen) == 6
    assert cs.count * len(cs.subgroup) == s3.order


def test_cosets_rejects_non_subgroup():
    s3 = FiniteGroup.symmetric(3)
    with pytest.raises(NotASubgroup):
        CosetSpace(s3, (s3.identity, s3.elements.index((1, 2, 0))))


# -- conjugacy classes and SL2 -------------------------------------------------

def test_conjugacy_class_abelian():
    z8 = FiniteGroup.cyclic(8)
    assert conjugacy_class(z8, 5) == (5,)


def test_conjugacy_class_s3():
    s3 = FiniteGroup.symmetric(3)
    t = s3.elements.index((1, 0, 2))
    cls = conjugacy_class(s3, t)
    assert len(cls) == 3
    assert all(s3.element_order(x) == 2 for x in cls)


def test_sl2_orders():
    assert matrix_group_sl2(2).order == 6
    assert matrix_group_sl2(3).order == 24
    assert matrix_group_sl2(5).order == 120
    g = matrix_group_sl2(3)
    assert g.elements[g.identity] == (1, 0, 0, 1)
    with pytest.raises(GroupError):
        matrix_group_sl2(4)
    with pytest.raises(GroupError):
        matrix_group_sl2(17)


def test_sl2_unipotent_class_size():
    g = matrix_group_sl2(3)
    j1 = g.elements.index((1, 1, 0, 1))
    assert len(conjugacy_class(g, j1)) == 4
    g5 = matrix_group_sl2(5)
    j1 = g5.elements.index((1, 1, 0, 1))
    assert len(conjugacy_class(g5, j1)) == 12


# -- cycle notation ------------------------------------------------------------

def test_parse_cycles_basic():
    assert parse_cycles("(0 1 2)(3 4)") == (1, 2, 0, 4, 3)
    assert parse_cycles("( 0 1 )  ( 2 3 )") == (1, 0, 3, 2)
    assert parse_cycles("", domain_size=4) == (0, 1, 2, 3)
    assert parse_cycles("(1 3)", domain_size=6) == (0, 3, 2, 1, 4, 5)


def test_parse_cycles_errors():
    with pytest.raises(CycleParseError):
        parse_cycles("(0 1")
    with pytest.raises(CycleParseError):
        parse_cycles("0 1 2")
    with pytest.raises(CycleParseError) as exc:
        parse_cycles("(0 1)(1 2)")
    assert "repeated point 1" in str(exc.value)
    assert exc.value.column is not None
    with pytest.raises(CycleParseError):
        parse_cycles("(0 9)", domain_size=3)
    with pytest.raises(CycleParseError):
        parse_cycles("")  # identity with unknown domain


def test_parse_generator_lines():
    text = "(0 1 2)(3 4)\n\n(0 4)\n"
    perms = parse_generator_lines(text)
    assert perms[0] == (1, 2, 0, 4, 3)
    assert perms[1] == (0, 1, 2, 3, 4)  # blank line is the identity
    assert perms[2] == (4, 1, 2, 3, 0)
    with pytest.raises(CycleParseError) as exc:
        parse_generator_lines("(0 1)\n(2 2)")
    assert exc.value.line == 2


def test_format_cycles_round_trip():
    for p in [(1, 2, 0, 4, 3), (0, 1, 2), (1, 0)]:
        text = format_cycles(p)
        assert parse_cycles(text, domain_size=len(p)) == p
    assert format_cycles((0, 1, 2)) == ""


def test_delegated_multiplication_above_table_limit():
    # SL2(F_11) has order 1320 > 512, so products go through the matrices
    g = matrix_group_sl2(11)
    assert g.order == 1320
    assert g._table is None
    a, b = 17, 905
    ma, mb = g.elements[a], g.elements[b]
    prod = ((ma[0] * mb[0] + ma[1] * mb[2]) % 11, (ma[0] * mb[1] + ma[1] * mb[3]) % 11,
            (ma[2] * mb[0] + ma[3] * mb[2]) % 11, (ma[2] * mb[1] + ma[3] * mb[3]) % 11)
    assert g.elements[g.mul(a, b)] == prod
    assert g.mul(g.identity, a) == a
    assert g.mul(a, g.inv(a)) == g.identity


def test_permutation_backed_group_multiplies_consistently():
    s4 = FiniteGroup.symmetric(4)
    for i in (0, 3, 17):
        for j in (1, 5, 23):
            expected = s4.elements.index(compose(s4.elements[i], s4.elements[j]))
            assert s4.mul(i, j) == expected
    assert is_permutation(invert(s4.elements[7]))
