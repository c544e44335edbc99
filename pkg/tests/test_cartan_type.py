import pytest

import cartan_type as ct
import chevalley as chev
import essentials as ess
import subalgebras as sub


def test_lucas_binomials():
    assert ct.binom(5, 2, 3) == 1
    assert ct.binom(4, 2, 5) == 1
    assert ct.binom(3, 1, 3) == 0
    assert ct.binom(2, 3, 5) == 0


def test_divided_powers_truncate():
    O = ct.DividedPowerAlgebra(3, (1, 1))
    assert O.dim == 9
    assert O.monomials[0] == (0, 0)
    assert O.coefficient((1, 0), (1, 0)) == 2
    assert O.coefficient((1, 0), (2, 0)) == 0
    assert O.mul(O.x(0), O.x(1)) == {(1, 1): 1}
    assert O.d(O.x(0, 2), 0) == {(1, 0): 1}


def test_witt_algebra_shape(witt_p5):
    assert witt_p5.dim == 5
    assert witt_p5.grading.dims() == {-1: 1, 0: 1, 1: 1, 2: 1, 3: 1}
    assert sub.is_simple(witt_p5, seed=0)
    assert ct.is_restricted(witt_p5)


def test_witt_basis_table():
    w = ct.witt_basis(5)
    assert w.dim == 5
    assert sub.is_simple(w, seed=0)
    big = ct.witt_basis(3, 2)
    assert big.dim == 9
    assert not ct.is_restricted(big)


@pytest.mark.parametrize('family, m, n, p, dim', [
    ('W', 2, 1, 3, 18),
    ('H', 2, 1, 5, 24),
    ('H2', 2, 1, 5, 23),
    ('H2', 2, 1, 3, 7),
    ('K', 3, 1, 3, 27),
    ('K1', 3, 1, 3, 26),
    ('S', 3, 1, 3, 55),
    ('S1', 3, 1, 3, 52),
    ('CH', 2, 1, 3, 11),
])
def test_cartan_dimensions(family, m, n, p, dim):
    assert ct.cartan_algebra(family, m, n, p).dim == dim


def test_simple_hamiltonian_and_contact():
    assert sub.is_simple(ct.cartan_algebra('H2', 2, 1, 5), seed=0)
    assert sub.is_simple(ct.cartan_algebra('K1', 3, 1, 3), seed=0)


def test_bad_parameters():
    with pytest.raises(ess.UnknownType):
        ct.cartan_algebra('X', 1, 1, 5)
    with pytest.raises(ess.ConstructionError):
        ct.cartan_algebra('W', 1, 1, 2)
    with pytest.raises(ess.ConstructionError):
        ct.cartan_algebra('S', 2, 1, 5)
    with pytest.raises(ess.ConstructionError):
        ct.cartan_algebra('W', 2, (1, 1, 1), 3)
    with pytest.raises(ess.UnknownType):
        ct.exotic_algebra('Foo')
    with pytest.raises(ess.ConstructionError):
        ct.exotic_algebra('Er', p=5)
    with pytest.raises(ess.ConstructionError):
        ct.hamiltonian_special_subalgebra(4)


def test_envelope_formula():
    assert ct.p_envelope_dim('W', 1, 2, 5) == 26
    assert ct.p_envelope_dim('W', 2, 1, 3) == 18
    with pytest.raises(ess.UnknownType):
        ct.p_envelope_dim('H', 2, 1, 5)


def test_derivations_of_witt(witt_p5):
    assert ct.derivation_dim(witt_p5) == 5


def test_tensor_envelope_sl2():
    sl2 = chev.classical_algebra('sl', 2, 3)
    alg, envelope = ct.tensor_envelope(sl2, 2, 1)
    assert alg.dim == 27
    assert envelope == 45
    same, der = ct.tensor_envelope(sl2, 0, 1)
    assert same is sl2 and der == 3


def test_derived_algebra_of_simple_is_itself(witt_p5):
    assert ct.derived_algebra(witt_p5) is witt_p5


def test_hamiltonian_special_six():
    g = ct.hamiltonian_special_subalgebra(6)
    assert g.dim == 26
    assert g.p == 2


@pytest.mark.slow
def test_ermolaev_is_simple():
    er = ct.exotic_algebra('Er', (1, 1))
    assert er.dim == 26
    assert sub.is_simple(er, seed=0)
