import numpy as np
import pytest

import chevalley as chev
import essentials as ess


@pytest.mark.parametrize('p', [2, 3, 5])
def test_g2_dimension_and_centre(p):
    g = chev.chevalley_algebra('G2', p)
    assert g.dim == 14
    assert g.center().dim == 0


def test_e6_has_centre_at_three():
    g = chev.chevalley_algebra('E6', 3)
    assert g.dim == 78
    assert g.center().dim == 1
    assert chev.chevalley_algebra('E6', 5).center().dim == 0


def test_ad_is_bracket_and_antisymmetric(g2_p5):
    g = g2_p5
    rng = np.random.default_rng(1)
    x, y = rng.integers(0, 5, size=(2, g.dim))
    assert np.array_equal(g.ad(x) @ y % 5, g.bracket(x, y))
    assert np.array_equal((g.bracket(x, y) + g.bracket(y, x)) % 5, g.zero())


def test_chevalley_relations(g2_p5):
    g = g2_p5
    rs = g.root_system
    N = rs.num_positive
    for i in range(rs.rank):
        alpha = np.eye(rs.rank, dtype=np.int64)[i]
        h = g.basis_vector(N + i)
        assert np.array_equal(g.bracket(g.root_vector(alpha), g.root_vector(-alpha)), h)
        for beta in rs.positive:
            expected = (int(beta @ rs.cartan[:, i]) * g.root_vector(beta)) % 5
            assert np.array_equal(g.bracket(h, g.root_vector(beta)), expected)


def test_jacobi_holds_with_sign_changes():
    g = chev.chevalley_algebra('G2', 5, signs=7)
    assert g.jacobi_residual(samples=20, seed=2) == 0
    assert g.center().dim == 0


def test_root_vector_lookup(g2_p3):
    g = g2_p3
    assert g.root_index([1, 0]) == 0
    assert g.root_index([-1, 0]) == g.root_system.num_positive + 2
    with pytest.raises(ess.UnknownType):
        g.root_index([1, 2])


def test_bad_prime_and_type():
    with pytest.raises(ess.ConstructionError):
        chev.chevalley_algebra('G2', 4)
    with pytest.raises(ess.UnknownType):
        chev.chevalley_algebra('B2', 5)


def test_classical_algebras():
    assert chev.classical_algebra('sl', 3, 3).dim == 8
    assert chev.classical_algebra('psl', 3, 3).dim == 7
    assert chev.classical_algebra('psl', 3, 5).dim == 8
    with pytest.raises(ess.ConstructionError):
        chev.classical_algebra('so', 3, 5)


def test_p_power_in_sl2(sl2_p3):
    g = sl2_p3
    e, h = g.vector({'E12': 1}), g.vector({'H1': 1})
    assert not chev.p_power(g, e).any()
    assert np.array_equal(chev.p_power(g, h), h)
    assert chev.is_toral(g, h)
    assert not chev.is_toral(g, e)


class _ZeroDraws:
    def integers(self, low, high, size=None):
        return np.zeros(size, dtype=np.int64)


def test_p_power_when_random_vectors_are_degenerate(sl2_p3, monkeypatch):
    monkeypatch.setattr(ess, 'make_rng', lambda seed=None: _ZeroDraws())
    g = sl2_p3
    h, f = g.vector({'H1': 1}), g.vector({'E21': 1})
    assert np.array_equal(chev.p_power(g, h), h)
    assert not chev.p_power(g, f).any()


def test_p_power_modulo_centre(monkeypatch):
    monkeypatch.setattr(ess, 'make_rng', lambda seed=None: _ZeroDraws())
    g = chev.classical_algebra('sl', 3, 3)
    assert g.center().dim == 1
    h = g.vector({'H1': 1})
    y = chev.p_power(g, h)
    assert np.array_equal(g.ad(y), g.ad(h))
    assert y[g.center().pivots[0]] == 0


def test_p_closure_of_a_root_line(g2_p5):
    e = g2_p5.root_vector(g2_p5.root_system.highest_root)
    assert chev.p_closure(g2_p5, g2_p5.span([e])).dim == 1


def test_balanced_toral_element(sl2_p3):
    g = sl2_p3
    assert chev.eigenspace_dims(g, g.vector({'H1': 1})) == [1, 1]
    assert chev.is_d_balanced(g, g.vector({'H1': 1}), 1)
    with pytest.raises(ess.NotToral):
        chev.is_d_balanced(g, g.vector({'E12': 1}), 1)


def test_grading_from_diagram(g2_p5):
    grading = chev.grading_from_diagram(g2_p5, [1, 1])
    dims = grading.dims()
    assert dims[0] == 2
    assert dims[1] == 2 and dims[-1] == 2
    assert grading.depth() == 5 and grading.height() == 5
    with pytest.raises(ess.DimensionMismatch):
        chev.grading_from_diagram(g2_p5, [1, 1, 1])


def test_restrict_and_quotient(g2_p5):
    g = g2_p5
    e = g.root_vector([1, 0])
    space = g.span([e, g.root_vector([-1, 0]), g.basis_vector(g.root_system.num_positive)])
    s = g.restrict(space)
    assert s.dim == 3
    assert s.meta['embedding'] == space
    with pytest.raises(ess.NotInvariant):
        g.quotient(space)
    assert g.quotient(g.span([g.zero()])) is g


def test_to_json_fields(sl2_p3):
    out = sl2_p3.to_json()
    assert out['dim'] == 3 and out['p'] == 3
    assert out['labels'] == ['E12', 'E21', 'H1']
    assert out['center_basis'] == []
