"""Kernel series, non-p-soluble length, and the lattice-based oracles."""

import pytest

from hallbound import (
    check_kernel_lemma,
    is_normal,
    is_p_soluble,
    kernel_series,
    lambda_oracle,
    make_named,
    non_p_soluble_length,
    normal_subgroup_lattice,
    p_kernel,
    p_length_oracle,
    p_length_value,
    symmetric_group,
    wreath_product,
)
from hallbound.errors import CapExceeded, PreconditionError


def test_p_kernel_of_p_soluble_group_is_whole(s4):
    assert p_kernel(s4, 3).same_group_as(s4)
    assert p_kernel(s4, 2).same_group_as(s4)


def test_p_kernel_of_simple_group_is_whole(a5):
    assert p_kernel(a5, 5).same_group_as(a5)


def test_kernel_series_empty_for_p_soluble(s4):
    series = kernel_series(s4, 3)
    assert series.length == 0
    assert series.kernels == ()
    assert series.socle_factor_counts == ()


def test_kernel_series_of_a5(a5):
    series = kernel_series(a5, 5)
    assert series.length == 1
    assert [k.order() for k in series.kernels] == [60]
    assert series.socle_factor_counts == (1,)


def test_kernel_series_of_wreath_product():
    g = wreath_product(make_named("A5"), make_named("C2"))
    series = kernel_series(g, 3)
    assert series.length == 1
    assert [k.order() for k in series.kernels] == [3600]
    assert series.socle_factor_counts == (2,)


def test_kernel_series_is_ascending_chain_of_normals(a5):
    g = wreath_product(make_named("A5"), make_named("C2"))
    series = kernel_series(g, 3)
    previous_order = 0
    for kernel in series.kernels:
        assert kernel.order() > previous_order
        assert is_normal(kernel, g)
        previous_order = kernel.order()


def test_non_p_soluble_length_values(s4, a5):
    assert non_p_soluble_length(s4, 2) == 0
    assert non_p_soluble_length(s4, 3) == 0
    assert non_p_soluble_length(a5, 2) == 1
    assert non_p_soluble_length(a5, 3) == 1
    assert non_p_soluble_length(a5, 5) == 1
    assert non_p_soluble_length(make_named("PSL(2,7)"), 3) == 1


def test_length_zero_iff_p_soluble(a5, s4):
    for g in (a5, s4, make_named("SL(2,5)"), make_named("S5")):
        for p in (2, 3, 5):
            assert (non_p_soluble_length(g, p) == 0) == is_p_soluble(g, p)


def test_validates_prime(s4):
    with pytest.raises(PreconditionError):
        non_p_soluble_length(s4, 6)


def test_normal_subgroup_lattice_of_s4(s4):
    orders = sorted(h.order() for h in normal_subgroup_lattice(s4))
    assert orders == [1, 4, 12, 24]


def test_normal_subgroup_lattice_of_simple_group(a5):
    orders = sorted(h.order() for h in normal_subgroup_lattice(a5))
    assert orders == [1, 60]


def test_normal_subgroup_lattice_of_cyclic_group():
    orders = sorted(h.order() for h in normal_subgroup_lattice(make_named("C12")))
    assert orders == [1, 2, 3, 4, 6, 12]


def test_normal_subgroup_lattice_cap():
    with pytest.raises(CapExceeded):
        normal_subgroup_lattice(symmetric_group(7), cap=100)


def test_lambda_oracle_matches_kernel_series(a5, s4):
    for g, p in ((a5, 2), (a5, 3), (a5, 5), (s4, 2), (s4, 3)):
        assert lambda_oracle(g, p) == non_p_soluble_length(g, p)


def test_p_length_oracle_matches_series(s4, a4):
    assert p_length_oracle(s4, 2) == p_length_value(s4, 2) == 2
    assert p_length_oracle(s4, 3) == p_length_value(s4, 3) == 1
    assert p_length_oracle(a4, 2) == p_length_value(a4, 2) == 1


def test_p_length_oracle_requires_p_soluble(a5):
    with pytest.raises(PreconditionError):
        p_length_oracle(a5, 2)


def test_kernel_lemma_on_a5(a5):
    report = check_kernel_lemma(a5, 5)
    assert report.holds
    assert report.kernel_length == 1
    assert report.kernel.same_group_as(a5)


def test_kernel_lemma_on_soluble_group(s4):
    report = check_kernel_lemma(s4, 3)
    assert report.holds
    assert report.kernel_length == 0
    assert report.outer_soluble is None
