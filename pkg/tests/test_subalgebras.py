import numpy as np
import pytest

import chevalley as chev
import essentials as ess
import subalgebras as sub


def _roots(g, coeffs):
    return [g.root_vector(c) for c in coeffs]


@pytest.fixture(scope='module')
def parts(g2_p5):
    g = g2_p5
    rs = g.root_system
    positive = [g.root_vector(r) for r in rs.positive]
    cartan = [g.basis_vector(rs.num_positive + i) for i in range(rs.rank)]
    return {'n': g.span(positive), 'b': g.span(positive + cartan), 'h': g.span(cartan)}


def test_generate_dimensions(g2_p5):
    g = g2_p5
    assert sub.generate(g, _roots(g, [[1, 0], [0, 1]])).dim == 6
    assert sub.generate(g, _roots(g, [[1, 0], [-1, 0]])).dim == 3
    assert sub.generate(g, _roots(g, [[1, 0], [0, 1], [-1, 0], [0, -1]])).dim == 14


def test_generating_set_spans(g2_p5, parts):
    gens = sub.generating_set(g2_p5, parts['b'], seed=3)
    assert sub.generate(g2_p5, gens).space == parts['b']


def test_centralizer_of_highest_root_vector(g2_p5):
    g = g2_p5
    e = g.root_vector(g.root_system.highest_root)
    ge = sub.centralizer(g, [e])
    assert ge.dim == 8
    assert e in ge
    assert sub.transporter(g, [e], g.span([g.zero()])) == ge.space


def test_normalizer_of_borel(g2_p5, parts):
    assert sub.normalizer(g2_p5, parts['b']).space == parts['b']


def test_series(g2_p5, parts):
    g = g2_p5
    assert [t.dim for t in sub.series(g, parts['n'], 'derived')] == [6, 4, 1, 0]
    assert [t.dim for t in sub.series(g, parts['n'], 'lower_central')] == [6, 4, 3, 2, 1, 0]
    assert sub.is_nilpotent(g, parts['n'])
    assert sub.is_solvable(g, parts['b'])
    assert not sub.is_nilpotent(g, parts['b'])
    assert sub.is_abelian(g, parts['h'])
    with pytest.raises(ess.ModLieError):
        sub.series(g, parts['n'], 'upper')


def test_centre_of_nilradical(g2_p5, parts):
    g = g2_p5
    centre = sub.center_of(g, parts['n'])
    assert centre.dim == 1
    assert centre.contains(g.root_vector(g.root_system.highest_root))


def test_simplicity(g2_p5, parts):
    assert sub.is_simple(g2_p5)
    assert not sub.is_simple(g2_p5, parts['b'])
    assert sub.is_simple(g2_p5, _roots(g2_p5, [[1, 0], [-1, 0]]) + [g2_p5.basis_vector(6)])


def test_solvable_radical(g2_p5, parts):
    g = g2_p5
    assert sub.solvable_radical(g, parts['b']).space == parts['b']
    sl2 = sub.generate(g, _roots(g, [[1, 0], [-1, 0]]))
    assert sub.solvable_radical(g, sl2).dim == 0


def test_quotient_and_lift(g2_p5, parts):
    g = g2_p5
    q = sub.quotient(g, parts['b'], parts['n'])
    assert q.dim == 2
    assert sub.is_abelian(q, q.full())
    lifted = sub.lift(g, parts['b'], parts['n'], [[1, 0]])
    assert lifted.dim == 7
    assert parts['b'].contains(lifted)
    with pytest.raises(ess.NotInvariant):
        sub.quotient(g, parts['n'], parts['b'])


def test_nonabelian_extension_of_abelian_quotient(g2_p5, parts):
    assert sub.nonabelian_extension(g2_p5, parts['b'], parts['n']) == parts['n']


def test_extend_ideal_by_highest_root(g2_p5, parts):
    g = g2_p5
    e = g.root_vector(g.root_system.highest_root)
    assert sub.extend_ideal(g, parts['b'], g.span([g.zero()]), [e]).dim == 1
    assert sub.extend_ideal(g, parts['b'], g.span([g.zero()]), [g.root_vector([1, 0])]).dim == 5


def test_step_space_of_borel(g2_p5, parts):
    g = g2_p5
    step = sub.step_space(g, parts['n'], parts['b'])
    assert step.dim == 10
    assert step.contains(g.root_vector([-1, 0]))
    assert step.contains(g.root_vector([0, -1]))
    assert not step.contains(g.root_vector([-1, -1]))


def test_maximal_borel_of_sl2(sl2_p3):
    g = sl2_p3
    borel = g.span([g.vector({'E12': 1}), g.vector({'H1': 1})])
    cert = sub.maximality_certificate(g, borel, 'adjoint', seed=0, lattice=False)
    assert cert.maximal
    assert cert.dims == {'g': 3, 'l0': 2, 'quotient': 1}
    assert cert.to_json()['verdict'] == 'maximal'
    with pytest.raises(ess.ModLieError):
        sub.maximality_certificate(g, borel, 'sideways')
    with pytest.raises(ess.DimensionMismatch):
        sub.maximality_certificate(g, g.full())


def test_jordan_blocks(sl2_p3):
    g = sl2_p3
    e = g.vector({'E12': 1})
    assert sub.jordan_block_count(g, g.full(), e) == 1
    assert sub.jordan_block_count(g, g.span([e]), e) == 1
    with pytest.raises(ess.NotInvariant):
        sub.jordan_block_count(g, g.span([g.vector({'E21': 1})]), e)


def test_fixed_vector_preconditions(sl2_p3):
    g = sl2_p3
    with pytest.raises(ess.NoSolution):
        sub.fixed_vector_check(g, g.zero(), g.vector({'H1': 1}))
    with pytest.raises(ess.NoSolution):
        sub.fixed_vector_check(g, g.vector({'E12': 1}), g.vector({'E21': 1}))


def test_subalgebra_wrapper(g2_p5, parts):
    b = sub.Subalgebra(g2_p5, parts['b'], name='b')
    assert b.closed
    assert b.algebra().dim == 8
    assert b.to_json()['dim'] == 8
    assert np.array_equal(sub.as_space(g2_p5, b).basis, parts['b'].basis)


def test_preimage_of_normalizer_under_regular_nilpotent():
    g = chev.classical_algebra('sl', 3, 5)
    e = g.vector({'E12': 1, 'E23': 1})
    ne = sub.normalizer(g, [e])
    assert sub.centralizer(g, [e]).dim == 2
    assert ne.dim == 3
    image = g.span(g.ad(e).T)
    assert image.contains(ne.space)
    assert sub.transporter(g, [e], ne.space).dim == 5


def test_derived_term_with_centre_becomes_simple_modulo_centre():
    g = chev.classical_algebra('sl', 3, 3)
    terms = sub.series(g, g.full(), 'derived')
    top = terms[-1]
    assert top.dim == 8
    assert not sub.is_simple(g, top)
    centre = sub.center_of(g, top)
    assert centre.dim == 1
    w = sub.quotient(g, top, centre)
    assert w.dim == 7
    assert sub.is_simple(w)
