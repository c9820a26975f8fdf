"""Character tables, Murnaghan-Nakayama values, induction and restriction.

Oracles: the Sym(3) table was derived by hand from permutation characters
(trivial, sign, natural minus trivial) in an independent brute-force pass;
degrees are checked against the hook length formula implemented here from
scratch; orthogonality is checked from the definition with exact integers.
"""

import pytest

from globfun.characters import (
    ClassFunction,
    MAX_TABLE_N,
    block_structure,
    char_table_product,
    char_table_symmetric,
    character_table,
    cycle_type_class_size,
    decompose_into_irreducibles,
    induce_classfunction,
    inner_product,
    mn_character,
    partition_count,
    partitions,
    restrict_classfunction,
)
from globfun.errors import UnsupportedGroupError
from globfun.perms import (
    GroupHom,
    Perm,
    alternating_group,
    product_group,
    standard_inclusion,
    symmetric_group,
    young_two_block,
)


def hook_length_degree(lam):
    """Independent degree oracle: n! over the product of hook lengths."""
    from math import factorial

    conj = [sum(1 for p in lam if p > c) for c in range(max(lam))] if lam else []
    prod = 1
    for r, row_len in enumerate(lam):
        for c in range(row_len):
            prod *= (row_len - c) + (conj[c] - r) - 1
    return factorial(sum(lam)) // prod


def test_partitions_order():
    assert partitions(3) == ((3,), (2, 1), (1, 1, 1))
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert partitions(0) == ((),)
    assert [partition_count(n) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_class_sizes_sum():
    for n in range(1, 8):
        from math import factorial

        assert sum(cycle_type_class_size(mu) for mu in partitions(n)) == factorial(n)


def test_mn_spot_values():
    assert mn_character((1, 1, 1), (2, 1)) == -1
    assert mn_character((2, 1), (3,)) == -1
    assert mn_character((2, 1), (1, 1, 1)) == 2
    assert mn_character((3, 2), (1, 1, 1, 1, 1)) == 5
    assert mn_character((), ()) == 1
    # the trivial and sign characters, closed form
    for n in range(1, 7):
        for mu in partitions(n):
            assert mn_character((n,), mu) == 1
            assert mn_character(tuple([1] * n), mu) == (-1) ** (n - len(mu))


def test_s2_table():
    t = char_table_symmetric(2)
    assert t.labels == (((2,),), ((1, 1),))
    assert [list(r) for r in t.matrix] == [[1, 1], [1, -1]]
    assert t.class_types == (((1, 1),), ((2,),))
    assert t.class_sizes == (1, 1)


def test_s3_table_against_hand_oracle():
    t = char_table_symmetric(3)
    # frozen: rows (3), (2,1), (1,1,1); columns e, (1 2), (1 2 3)
    assert [list(r) for r in t.matrix] == [[1, 1, 1], [2, 0, -1], [1, -1, 1]]
    assert t.class_sizes == (1, 3, 2)


def test_degrees_match_hook_lengths():
    for n in range(1, MAX_TABLE_N + 1):
        t = char_table_symmetric(n)
        for lab, row in zip(t.labels, t.matrix):
            assert row[0] == hook_length_degree(lab[0])


def test_first_column_is_identity():
    for n in (2, 3, 4, 5):
        t = char_table_symmetric(n)
        assert t.class_reps[0].is_identity()
        assert t.class_sizes[0] == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_orthogonality(n):
    t = char_table_symmetric(n)
    order = t.group.order
    k = t.rank
    for i in range(k):
        for j in range(k):
            s = sum(z * a * b for z, a, b in zip(t.class_sizes, t.matrix[i], t.matrix[j]))
            assert s == (order if i == j else 0)


def test_sum_of_squares_of_degrees():
    for n in range(1, 8):
        t = char_table_symmetric(n)
        from math import factorial

        assert sum(row[0] ** 2 for row in t.matrix) == factorial(n)


def test_product_table():
    a = char_table_symmetric(2)
    b = char_table_symmetric(3)
    t = char_table_product(a, b)
    assert t.rank == 6
    assert sorted(row[0] for row in t.matrix) == [1, 1, 1, 1, 2, 2]
    assert t.group.order == 12


def test_product_table_degrees_exact():
    t = char_table_product(char_table_symmetric(2), char_table_symmetric(3))
    # rows: ((2),(3)), ((2),(21)), ((2),(111)), ((11),(3)), ...
    assert [row[0] for row in t.matrix] == [1, 2, 1, 1, 2, 1]
    order = t.group.order
    for i in range(t.rank):
        for j in range(t.rank):
            s = sum(z * a * b for z, a, b in zip(t.class_sizes, t.matrix[i], t.matrix[j]))
            assert s == (order if i == j else 0)


def test_block_structure_detection():
    assert block_structure(young_two_block(5, 2)) == ((1, 2), (3, 4, 5))
    assert block_structure(symmetric_group(1)) == ((1,),)
    with pytest.raises(UnsupportedGroupError):
        block_structure(alternating_group(4))
    # a conjugated Young subgroup is still a block product
    from globfun.perms import conjugate_subgroup

    g = conjugate_subgroup(young_two_block(5, 2), Perm.parse("(2 4)", 5))
    assert block_structure(g) == ((1, 4), (2, 3, 5))
    assert character_table(g).rank == 6


def test_class_index_of():
    t = char_table_symmetric(4)
    assert t.class_index_of(Perm.identity(4)) == 0
    for i, rep in enumerate(t.class_reps):
        assert t.class_index_of(rep) == i
        assert rep.cycle_type() == t.class_types[i][0]


def test_restriction_branching():
    # frozen example: the degree-2 irreducible of Sym(3) restricts along
    # i_3 to (2, 0) = trivial + sign
    t3 = char_table_symmetric(3)
    chi = t3.irreducible(1)
    assert t3.labels[1] == ((2, 1),)
    res = restrict_classfunction(chi, standard_inclusion(3))
    assert res.values == (2, 0)
    assert decompose_into_irreducibles(res) == (1, 1)


def test_branching_rule_symmetric():
    # restriction along i_n drops one box: multiplicities are 0/1 and the
    # partitions with a removable box each appear once
    for n in (3, 4, 5, 6):
        tn = char_table_symmetric(n)
        i_n = standard_inclusion(n)
        for lab, row in zip(tn.labels, tn.matrix):
            chi = ClassFunction(tn, row)
            mult = decompose_into_irreducibles(restrict_classfunction(chi, i_n))
            tprev = char_table_symmetric(n - 1)
            expect = []
            lam = lab[0]
            for mu_lab in tprev.labels:
                mu = mu_lab[0]
                expect.append(1 if _is_one_box_down(lam, mu) else 0)
            assert list(mult) == expect, (lam, mult)


def _is_one_box_down(lam, mu):
    lam = list(lam)
    mu = list(mu) + [0] * (len(lam) - len(mu))
    if len(mu) > len(lam):
        return False
    diffs = [a - b for a, b in zip(lam, mu)]
    return all(d in (0, 1) for d in diffs) and sum(diffs) == 1 and sorted(mu, reverse=True) == mu


def test_induction_permutation_character():
    # frozen example: inducing the trivial character of S(2)xS(1) up to
    # Sym(3) gives the natural permutation character (3, 1, 0)
    h = young_two_block(3, 2)
    th = character_table(h)
    triv = ClassFunction(th, [1] * len(th.class_types))
    ind = induce_classfunction(triv, symmetric_group(3))
    assert ind.values == (3, 1, 0)
    assert decompose_into_irreducibles(ind) == (1, 1, 0)


def test_induction_from_trivial_subgroup_is_regular():
    from globfun.perms import trivial_subgroup

    g = symmetric_group(3)
    e = trivial_subgroup(g)
    te = character_table(e)
    triv = ClassFunction(te, [1])
    reg = induce_classfunction(triv, g)
    assert reg.values == (6, 0, 0)
    assert decompose_into_irreducibles(reg) == (1, 2, 1)


def test_frobenius_reciprocity():
    # <ind phi, chi>_G = <phi, res chi>_H for Young subgroups of Sym(n)
    for n, k in [(3, 1), (4, 2), (5, 2)]:
        g = symmetric_group(n)
        h = young_two_block(n, k)
        tg = character_table(g)
        th = character_table(h)
        inc = GroupHom.inclusion(h, g)
        for i in range(th.rank):
            phi = th.irreducible(i)
            ind = induce_classfunction(phi, g)
            for j in range(tg.rank):
                chi = tg.irreducible(j)
                lhs = inner_product(ind, chi)
                rhs = inner_product(phi, restrict_classfunction(chi, inc))
                assert lhs == rhs


def test_restrict_along_inner_automorphism_is_identity():
    g = symmetric_group(4)
    t = character_table(g)
    for x in (Perm.parse("(1 2)", 4), Perm.parse("(1 2 3 4)", 4)):
        c = GroupHom.conjugation(g, g, x)
        for i in range(t.rank):
            chi = t.irreducible(i)
            assert restrict_classfunction(chi, c).values == chi.values


def test_inflation_along_projection():
    # pulling back along the first-factor projection gives a class function
    # that ignores the second coordinate
    y = young_two_block(4, 2)
    from globfun.perms import restrict_to_block

    p1 = restrict_to_block(y, [1, 2])
    t2 = character_table(p1.target)
    sign = t2.irreducible(1)
    inf = restrict_classfunction(sign, p1)
    ty = character_table(y)
    # classes of y: (e,e), (e,(34)), ((12),e), ((12),(34)) in row-major order
    assert inf.values == (1, 1, -1, -1)


def test_table_cap():
    with pytest.raises(UnsupportedGroupError):
        char_table_symmetric(9)
