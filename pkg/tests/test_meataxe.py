import numpy as np
import pytest

import chevalley as chev
import essentials as ess
import fp_linalg as fpl
import meataxe as mtx


@pytest.fixture(scope='module')
def sl2():
    return chev.classical_algebra('sl', 2, 5)


@pytest.fixture(scope='module')
def adjoint(sl2):
    return mtx.action_module(sl2, [sl2.vector({'E12': 1}), sl2.vector({'E21': 1})], name='ad')


@pytest.fixture(scope='module')
def borel_module(sl2):
    return mtx.action_module(sl2, [sl2.vector({'E12': 1}), sl2.vector({'H1': 1})], name='b')


def test_adjoint_sl2_is_absolutely_irreducible(adjoint):
    assert adjoint.dim == 3
    assert mtx.is_irreducible(adjoint, seed=0)
    assert mtx.is_absolutely_irreducible(adjoint, seed=0)
    assert mtx.is_irreducible(mtx.dual_module(adjoint), seed=0)


def test_borel_module_is_uniserial(borel_module):
    assert not mtx.is_irreducible(borel_module, seed=0)
    assert mtx.is_indecomposable(borel_module, seed=0)
    assert mtx.composition_factor_dims(borel_module, seed=0) == [1, 1, 1]
    assert len(mtx.irreducible_types(borel_module, seed=0)) == 3
    subs = mtx.submodule_bases(borel_module, seed=0)
    assert [s.dim for s in subs] == [0, 1, 2, 3]


def test_direct_sum_decomposes(adjoint):
    double = mtx.direct_sum(adjoint, adjoint)
    assert mtx.endomorphism_dim(double, seed=0) == 4
    assert not mtx.is_indecomposable(double, seed=0)
    minimal = mtx.minimal_submodules(double, seed=0)
    assert len(minimal) == 6
    assert all(s.dim == 3 for s in minimal)


def test_lattice_guard_keeps_partial_result(adjoint):
    double = mtx.direct_sum(adjoint, adjoint)
    with pytest.raises(ess.LatticeTooLarge) as info:
        mtx.minimal_submodules(double, bound=2, seed=0)
    assert info.value.partial == []


def test_hom_space_between_different_modules(adjoint, borel_module):
    assert len(mtx.hom_space(adjoint, adjoint, seed=0)) == 1
    homs = mtx.hom_space(adjoint, mtx.direct_sum(adjoint, adjoint), seed=0)
    assert len(homs) == 2
    for phi in homs:
        for a, b in zip(adjoint.actions, mtx.direct_sum(adjoint, adjoint).actions):
            assert np.array_equal(fpl.mul(b, phi, 5), fpl.mul(phi, a, 5))
    three = mtx.GModule(5, np.zeros((3, 1, 1), dtype=np.int64))
    with pytest.raises(ess.DimensionMismatch):
        mtx.hom_space(adjoint, three)


def test_non_invariant_spaces_raise(sl2):
    e = sl2.vector({'E12': 1})
    line = sl2.span([sl2.vector({'E21': 1})])
    with pytest.raises(ess.NotInvariant):
        mtx.action_module(sl2, [e], space=line)
    with pytest.raises(ess.NotInvariant):
        mtx.action_module(sl2, [e], space=sl2.span([e]), sub=line)


def test_submodules_carry_back_to_the_algebra(sl2, borel_module):
    e_line = fpl.span([[1, 0, 0]], 5)
    assert borel_module.is_invariant(e_line)
    quotient = borel_module.quotient(e_line)
    assert quotient.dim == 2
    minimal = mtx.minimal_submodules(quotient, seed=0)
    assert [s.dim for s in minimal] == [1]
    lifted = quotient.ambient_subspace(minimal[0])
    assert lifted.dim == 2
    assert lifted.contains(sl2.vector({'H1': 1}))
    assert lifted.contains(sl2.vector({'E12': 1}))
    with pytest.raises(ess.NotInvariant):
        borel_module.submodule(fpl.span([[0, 1, 0]], 5))


def test_quotient_of_algebra_module(sl2):
    e = sl2.vector({'E12': 1})
    h = sl2.vector({'H1': 1})
    top = mtx.action_module(sl2, [e, h], sub=sl2.span([e, h]))
    assert top.dim == 1
    assert mtx.is_irreducible(top, seed=0)
    assert top.ambient_subspace(fpl.Subspace.full(1, 5)).dim == 3


@pytest.mark.parametrize('blocks, expected', [
    ([[[1, 1], [0, 1]]], True),
    ([[[1, 0], [0, 2]]], False),
    ([[[0, 2], [1, 0]]], True),
])
def test_indecomposable_from_local_endomorphisms(blocks, expected):
    m = mtx.GModule(5, np.array(blocks))
    assert mtx.is_indecomposable(m, seed=0) == expected


def test_field_extension_twice_is_decomposable():
    # x^2 - 2 has no root mod 5, so End is GF(25) and End of the double is a matrix ring over it
    twisted = mtx.GModule(5, np.array([[[0, 2], [1, 0]]]))
    assert mtx.is_irreducible(twisted, seed=0)
    assert mtx.endomorphism_dim(twisted, seed=0) == 2
    assert mtx.endomorphism_module(twisted, seed=0).dim == 2
    double = mtx.direct_sum(twisted, twisted)
    assert mtx.endomorphism_dim(double, seed=0) == 8
    assert not mtx.is_indecomposable(double, seed=0)
