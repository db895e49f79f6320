"""Coefficient algebras: factor data validation, strata, projections."""

import pytest

from descent_kit import (
    GF,
    QQ,
    PresentedRing,
    StructureAlgebra,
    build_d_algebra,
    difference_algebra,
    dual_numbers,
    dual_numbers_times_field,
    product_of_fields,
    truncated_jets,
)
from descent_kit.errors import (
    BadIdempotents,
    NotLocalFactor,
    NotNilpotent,
    StrataMismatch,
)


def test_dual_numbers_strata():
    d = dual_numbers(QQ)
    assert d.strata == (((0,), (1,)),)
    assert d.factor_of == (0, 0)
    assert d.stratum_of == (0, 1)
    assert d.unit == (QQ.one, QQ.zero)


def test_two_copies_of_k():
    d = product_of_fields(QQ, 2)
    assert d.strata == (((0,),), ((1,),))
    assert d.projections == ((QQ.one, QQ.zero), (QQ.zero, QQ.one))
    assert d.unit == (QQ.one, QQ.one)


def test_dual_numbers_times_field():
    d = dual_numbers_times_field(GF(2))
    assert d.strata == (((0,), (1,)), ((2,),))
    assert d.factor_of == (0, 0, 1)


def test_truncated_jets_strata():
    d = truncated_jets(QQ, 3)
    assert d.strata == (((0,), (1,), (2,)),)
    assert d.stratum_of == (0, 1, 2)


def test_difference_case_is_degenerate():
    d = difference_algebra(GF(5))
    assert d.dim == 1 and d.factor_count == 1
    assert d.projections == ((GF(5).one,),)


def test_projection_recovers_unit_coefficient():
    d = dual_numbers_times_field(QQ)
    # pi_1 of e1, eps, e3 = 1, 0, 0 ; pi_2 = 0, 0, 1
    assert d.projections[0] == (QQ.one, QQ.zero, QQ.zero)
    assert d.projections[1] == (QQ.zero, QQ.zero, QQ.one)


def _dual_algebra(field):
    kk = PresentedRing.base_field(field)
    z, o = kk.zero, kk.one
    return StructureAlgebra(kk, ("1", "eps"), [[[o, z], [z, o]], [[z, o], [z, z]]])


def test_bad_idempotents():
    alg = _dual_algebra(QQ)
    with pytest.raises(BadIdempotents):
        build_d_algebra(alg, [((QQ.one, QQ.zero), ()), ((QQ.zero, QQ.one), ())])
    with pytest.raises(BadIdempotents):
        build_d_algebra(alg, [((QQ.one, QQ.one), ((QQ.zero, QQ.one),))])


def test_not_nilpotent():
    alg = _dual_algebra(QQ)
    with pytest.raises(NotNilpotent):
        build_d_algebra(alg, [((QQ.one, QQ.zero), ((QQ.one, QQ.one),))])


def test_not_local_factor():
    # k^2 with one declared factor covering everything has residue dim 2
    kk = PresentedRing.base_field(QQ)
    z, o = kk.zero, kk.one
    alg = StructureAlgebra(
        kk, ("e1", "e2"),
        [[[o, z], [z, z]], [[z, z], [z, o]]],
        unit_coords=[o, o],
    )
    with pytest.raises(NotLocalFactor):
        build_d_algebra(alg, [((QQ.one, QQ.one), ())])


def test_strata_mismatch_reports_corrected_basis():
    # dual numbers with the basis listed as (eps, 1): not stratified
    kk = PresentedRing.base_field(QQ)
    z, o = kk.zero, kk.one
    alg = StructureAlgebra(
        kk, ("eps", "one_"), [[[z, z], [o, z]], [[o, z], [z, o]]], unit_coords=[z, o]
    )
    with pytest.raises(StrataMismatch) as err:
        build_d_algebra(alg, [((QQ.zero, QQ.one), ((QQ.one, QQ.zero),))])
    assert err.value.corrected_basis == [(QQ.zero, QQ.one), (QQ.one, QQ.zero)]


def test_stratified_constant_facts_hold():
    for build in (dual_numbers, lambda f: product_of_fields(f, 3),
                  lambda f: truncated_jets(f, 4), dual_numbers_times_field):
        for field in (QQ, GF(5)):
            d = build(field)
            l = d.dim
            for j in range(l):
                for k in range(l):
                    for m in range(l):
                        same = d.factor_of[j] == d.factor_of[k] == d.factor_of[m]
                        val = d.a(j, k, m)
                        if not same:
                            assert field.is_zero(val)
                        else:
                            p = d.stratum_of[k]
                            if m < j or (m == j and p > 0):
                                assert field.is_zero(val)
                            elif m == j and p == 0:
                                assert val == field.one
