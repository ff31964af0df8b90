"""Cores, radicals, Fitting machinery, layer, and height/length certificates."""

import pytest

from hallbound import (
    PrimeSet,
    alternating_group,
    cyclic_group,
    dihedral_group,
    direct_product,
    fitting_height,
    fitting_subgroup,
    generalized_fitting_height,
    generalized_fitting_subgroup,
    is_normal,
    is_p_soluble,
    layer,
    make_named,
    p_core,
    p_length,
    p_length_value,
    p_prime_core,
    p_soluble_radical,
    pi_core,
    symmetric_group,
    sylow_subgroup,
)
from hallbound.errors import PreconditionError


def test_sylow_subgroup_orders(s4):
    assert sylow_subgroup(s4, 2).order() == 8
    assert sylow_subgroup(s4, 3).order() == 3
    a6 = alternating_group(6)
    assert sylow_subgroup(a6, 2).order() == 8
    assert sylow_subgroup(a6, 3).order() == 9
    assert sylow_subgroup(a6, 5).order() == 5


def test_sylow_subgroup_trivial_when_p_absent(a5):
    assert sylow_subgroup(a5, 7).is_trivial()


def test_p_core_values(s4, a4, a5):
    assert p_core(s4, 2).order() == 4
    assert p_core(s4, 3).order() == 1
    assert p_core(a4, 2).order() == 4
    assert p_core(a4, 3).order() == 1
    assert p_core(a5, 5).order() == 1
    assert p_core(cyclic_group(12), 2).order() == 4


def test_p_prime_core_values(s4):
    assert p_prime_core(s4, 2).order() == 1
    assert p_prime_core(dihedral_group(12), 2).order() == 3
    assert p_prime_core(cyclic_group(12), 2).order() == 3


def test_pi_core_values(s4):
    assert pi_core(s4, PrimeSet([2, 3])).order() == 24
    mixed = direct_product(make_named("A5"), cyclic_group(6))
    assert pi_core(mixed, PrimeSet([2, 3])).order() == 6
    assert pi_core(make_named("A5"), PrimeSet([2, 3])).order() == 1


def test_pi_core_is_normal_pi_subgroup():
    g = direct_product(symmetric_group(4), cyclic_group(5))
    pi = PrimeSet([2, 5])
    core = pi_core(g, pi)
    assert is_normal(core, g)
    assert pi.is_pi_number(core.order())
    assert core.order() == 20  # V4 x C5


def test_p_soluble_radical_values():
    assert p_soluble_radical(direct_product(make_named("A5"), cyclic_group(7)), 5).order() == 7
    assert p_soluble_radical(direct_product(make_named("A5"), cyclic_group(7)), 7).order() == 420
    assert p_soluble_radical(direct_product(make_named("A5"), cyclic_group(6)), 3).order() == 6
    assert p_soluble_radical(make_named("SL(2,5)"), 2).order() == 2
    assert p_soluble_radical(symmetric_group(4), 2).order() == 24


def test_is_p_soluble():
    assert is_p_soluble(symmetric_group(4), 2)
    assert is_p_soluble(symmetric_group(4), 3)
    assert is_p_soluble(alternating_group(5), 7)  # p does not divide the order
    assert not is_p_soluble(alternating_group(5), 2)
    assert not is_p_soluble(alternating_group(5), 5)
    assert not is_p_soluble(make_named("PSL(2,7)"), 3)
    with pytest.raises(PreconditionError):
        is_p_soluble(symmetric_group(4), 4)


def test_fitting_subgroup_values(s4):
    assert fitting_subgroup(s4).order() == 4
    assert fitting_subgroup(symmetric_group(3)).order() == 3
    assert fitting_subgroup(dihedral_group(12)).order() == 6
    assert fitting_subgroup(make_named("SL(2,3)")).order() == 8
    assert fitting_subgroup(alternating_group(5)).order() == 1
    assert fitting_subgroup(cyclic_group(12)).order() == 12


def test_layer_values(s4, a5, sl25):
    assert layer(s4).is_trivial()
    assert layer(a5).same_group_as(a5)
    assert layer(sl25).order() == 120
    double = direct_product(make_named("A5"), make_named("A5"))
    assert layer(double).order() == 3600
    mixed = direct_product(make_named("A5"), symmetric_group(4))
    assert layer(mixed).order() == 60


def test_generalized_fitting_subgroup_values(s4, a5, sl25):
    assert generalized_fitting_subgroup(s4).order() == 4
    assert generalized_fitting_subgroup(a5).same_group_as(a5)
    assert generalized_fitting_subgroup(sl25).order() == 120
    mixed = direct_product(make_named("A5"), symmetric_group(4))
    assert generalized_fitting_subgroup(mixed).order() == 240


def test_fitting_height_values(s4, a4):
    assert fitting_height(s4).height == 3
    assert fitting_height(a4).height == 2
    assert fitting_height(cyclic_group(12)).height == 1
    assert fitting_height(symmetric_group(3)).height == 2


def test_fitting_height_requires_soluble(a5):
    with pytest.raises(PreconditionError):
        fitting_height(a5)


def test_generalized_fitting_height_values(s4, a4, a5, sl25):
    assert generalized_fitting_height(a4).height == 2
    assert generalized_fitting_height(s4).height == 3
    assert generalized_fitting_height(a5).height == 1
    assert generalized_fitting_height(sl25).height == 1


def test_height_certificate_series_shape(s4):
    cert = fitting_height(s4)
    assert cert.kind == "fitting"
    assert cert.series[0].is_trivial()
    assert cert.series[-1].same_group_as(s4)
    assert [h.order() for h in cert.series] == [1, 4, 12, 24]
    for smaller, bigger in zip(cert.series, cert.series[1:]):
        assert smaller.is_subgroup_of(bigger)


def test_p_length_values(s4, a4):
    assert p_length_value(s4, 2) == 2
    assert p_length_value(s4, 3) == 1
    assert p_length_value(a4, 2) == 1
    assert p_length_value(a4, 3) == 1
    assert p_length_value(cyclic_group(12), 2) == 1
    assert p_length_value(make_named("SL(2,3)"), 2) == 1


def test_p_length_certificate_kind(s4):
    cert = p_length(s4, 2)
    assert cert.kind == "two_length"
    assert cert.series[-1].same_group_as(s4)


def test_p_length_requires_p_soluble(a5):
    with pytest.raises(PreconditionError):
        p_length(a5, 2)
