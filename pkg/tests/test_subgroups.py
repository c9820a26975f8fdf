"""Subgroup lattice enumeration and the table of marks.

Class counts were frozen from an independent brute-force enumeration with
raw image tuples (2, 4, 11, 19 classes for Sym(2..5); 156 subgroups of
Sym(5) in total).
"""

import random

import pytest

from globfun.errors import CapExceededError
from globfun.perms import (
    PermGroup,
    Perm,
    alternating_group,
    conjugate_subgroup,
    symmetric_group,
    weyl_order,
    young_two_block,
)
from globfun.subgroups import subgroup_classes, table_of_marks


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 19)])
def test_class_counts_symmetric(n, count):
    assert len(subgroup_classes(symmetric_group(n))) == count


def test_total_subgroup_count_s5():
    lat = subgroup_classes(symmetric_group(5))
    assert sum(c.class_size for c in lat.classes) == 156


def test_lattice_sorted_and_bounds():
    lat = subgroup_classes(symmetric_group(4))
    orders = [c.order for c in lat.classes]
    assert orders == sorted(orders)
    assert orders[0] == 1 and orders[-1] == 24
    for c in lat.classes:
        assert 24 % c.order == 0


def test_class_of_lookup():
    g = symmetric_group(4)
    lat = subgroup_classes(g)
    # every conjugate of every representative resolves to its own class
    for c in lat.classes:
        for t in g.elements[:6]:
            assert lat.class_of(conjugate_subgroup(c.representative, t)) == c.index


def test_random_generated_subgroups_are_found():
    rng = random.Random(0)
    g = symmetric_group(5)
    lat = subgroup_classes(g)
    for _ in range(30):
        seeds = rng.sample(g.elements, rng.choice([1, 2]))
        h = PermGroup(5, seeds)
        idx = lat.class_of(h)
        assert lat.classes[idx].order == h.order


def test_alternating_lattice():
    lat = subgroup_classes(alternating_group(4))
    assert [c.order for c in lat.classes] == [1, 2, 3, 4, 12]
    assert len(subgroup_classes(alternating_group(5))) == 9


def test_lattice_cap():
    with pytest.raises(CapExceededError):
        subgroup_classes(symmetric_group(7), cap=1000)


def test_table_of_marks_s3():
    lat, marks = table_of_marks(symmetric_group(3))
    # classes in order: e, C2, C3, Sym(3)
    assert [c.order for c in lat.classes] == [1, 2, 3, 6]
    assert marks == [
        [6, 0, 0, 0],
        [3, 1, 0, 0],
        [2, 0, 2, 0],
        [1, 1, 1, 1],
    ]


def test_table_of_marks_properties():
    g = symmetric_group(4)
    lat, marks = table_of_marks(g)
    n = len(lat.classes)
    for i in range(n):
        # leading column: full coset count; diagonal: the Weyl group order
        assert marks[i][0] == g.order // lat.classes[i].order
        assert marks[i][i] == weyl_order(g, lat.classes[i].representative)
        for j in range(i + 1, n):
            assert marks[i][j] == 0
    assert marks[-1] == [1] * n
