"""Normal structure: minimal normal subgroups, socle, solubility, radicals."""

import pytest

from hallbound import (
    alternating_group,
    cyclic_group,
    derived_series,
    dihedral_group,
    direct_product,
    is_nilpotent,
    is_normal,
    is_simple,
    is_soluble,
    lower_central_series,
    make_named,
    minimal_normal_subgroups,
    socle,
    soluble_radical,
    symmetric_group,
)


def test_minimal_normal_of_s4_is_v4(s4):
    minimals = minimal_normal_subgroups(s4)
    assert len(minimals) == 1
    assert minimals[0].order() == 4
    assert is_normal(minimals[0], s4)


def test_minimal_normal_of_simple_group_is_itself(a5):
    minimals = minimal_normal_subgroups(a5)
    assert len(minimals) == 1
    assert minimals[0].same_group_as(a5)


def test_minimal_normals_of_a5_squared():
    g = direct_product(make_named("A5"), make_named("A5"))
    minimals = minimal_normal_subgroups(g)
    assert sorted(m.order() for m in minimals) == [60, 60]


def test_minimal_normals_of_cyclic_group():
    minimals = minimal_normal_subgroups(cyclic_group(12))
    assert sorted(m.order() for m in minimals) == [2, 3]


def test_socle_of_s4(s4):
    dec = socle(s4)
    assert dec.socle.order() == 4
    assert len(dec.minimal_normals) == 1
    # Abelian minimal normals are kept whole, not split into simple factors.
    assert [f.order() for f in dec.factors] == [4]
    assert dec.abelian_flags == (True,)


def test_socle_of_a5(a5):
    dec = socle(a5)
    assert dec.socle.same_group_as(a5)
    assert dec.abelian_flags == (False,)
    assert len(dec.factors) == 1


def test_socle_of_sl25_is_the_center(sl25):
    dec = socle(sl25)
    assert dec.socle.order() == 2
    assert dec.abelian_flags == (True,)


def test_derived_series_of_s4(s4):
    series = derived_series(s4)
    assert [h.order() for h in series] == [24, 12, 4, 1]
    for bigger, smaller in zip(series, series[1:]):
        assert smaller.is_subgroup_of(bigger)
        assert is_normal(smaller, bigger)


def test_derived_series_stalls_on_perfect_group(a5):
    series = derived_series(a5)
    assert series[-1].order() == 60


def test_is_soluble():
    assert is_soluble(symmetric_group(4))
    assert is_soluble(dihedral_group(12))
    assert is_soluble(make_named("SL(2,3)"))
    assert not is_soluble(alternating_group(5))
    assert not is_soluble(make_named("SL(2,5)"))
    assert not is_soluble(symmetric_group(5))


def test_is_nilpotent():
    assert is_nilpotent(cyclic_group(12))
    assert is_nilpotent(dihedral_group(8))
    assert not is_nilpotent(symmetric_group(3))
    assert not is_nilpotent(dihedral_group(12))


def test_lower_central_series_of_d8():
    series = lower_central_series(dihedral_group(8))
    assert series[0].order() == 8
    assert series[-1].order() == 1


def test_is_simple():
    assert is_simple(alternating_group(5))
    assert is_simple(make_named("PSL(2,7)"))
    assert is_simple(cyclic_group(7))
    assert not is_simple(symmetric_group(4))
    assert not is_simple(make_named("SL(2,5)"))
    assert not is_simple(cyclic_group(1))


def test_soluble_radical_values():
    assert soluble_radical(symmetric_group(4)).order() == 24
    assert soluble_radical(alternating_group(5)).order() == 1
    assert soluble_radical(make_named("SL(2,5)")).order() == 2
    mixed = direct_product(make_named("A5"), cyclic_group(6))
    assert soluble_radical(mixed).order() == 6


def test_soluble_radical_is_normal_and_soluble():
    g = direct_product(make_named("A5"), symmetric_group(4))
    rad = soluble_radical(g)
    assert rad.order() == 24
    assert is_normal(rad, g)
    assert is_soluble(rad)
