import pytest

import chevalley as chev
import essentials as ess
import fp_linalg as fpl
import weisfeiler as wf


@pytest.fixture(scope='module')
def sl2():
    return chev.classical_algebra('sl', 2, 5)


def _borel(g):
    return g.span([g.vector({'E12': 1}), g.vector({'H1': 1})])


def test_sl2_filtration(sl2):
    f = wf.build_filtration(sl2, _borel(sl2), sl2.full())
    assert f.dims() == (3, 2, 1)
    assert (f.lowest, f.highest) == (-1, 1)
    assert f.term(1).contains(sl2.vector({'E12': 1}))
    assert f.term(-3) == sl2.full()
    assert f.term(2).dim == 0
    f.check_brackets()
    assert f.to_json() == {'algebra': sl2.name, 'degrees': [-1, 0, 1], 'dims': [3, 2, 1]}


def test_sl2_graded_algebra(sl2):
    ga = wf.graded_algebra(wf.build_filtration(sl2, _borel(sl2), sl2.full()))
    assert ga.algebra.dim == 3
    assert ga.dims() == {-1: 1, 0: 1, 1: 1}
    assert not ga.central_quotient
    report = wf.shape_report(ga)
    assert report['radical_dim'] == 0
    assert (report['depth'], report['height']) == (1, 1)
    assert report['simple']


def test_symbol_of_leading_term(sl2):
    ga = wf.graded_algebra(wf.build_filtration(sl2, _borel(sl2), sl2.full()))
    x = sl2.vector({'E21': 1, 'E12': 3})
    s = ga.symbol(x)
    assert ga.grading.degree_of(s) == -1
    assert not ga.symbol(sl2.zero()).any()


def test_witt_standard_filtration(witt_p5):
    grading = witt_p5.grading
    m0 = fpl.Subspace.zero(witt_p5.dim, witt_p5.p)
    for k in grading.degrees():
        if k >= 0:
            m0 = m0 + grading.component(k)
    f = wf.build_filtration(witt_p5, m0, witt_p5.full())
    assert f.dims() == (5, 4, 3, 2, 1)
    ga = wf.graded_algebra(f)
    assert ga.dims() == {-1: 1, 0: 1, 1: 1, 2: 1, 3: 1}
    report = wf.shape_report(ga, modules=True)
    assert report['radical_dim'] == 0
    assert report['depth'] == 1
    assert report['height'] == 3
    assert report['simple']


def test_filtration_rejects_bad_input(sl2):
    h = sl2.span([sl2.vector({'H1': 1})])
    with pytest.raises(ess.DimensionMismatch):
        wf.build_filtration(sl2, _borel(sl2), _borel(sl2))
    with pytest.raises(ess.NotInvariant):
        wf.build_filtration(sl2, h, sl2.span([sl2.vector({'H1': 1}), sl2.vector({'E12': 1, 'E21': 1})]))
    with pytest.raises(ess.ConstructionError):
        wf.build_filtration(sl2, h, sl2.full())


def test_regrade_check(sl2):
    e, f = sl2.vector({'E12': 1}), sl2.vector({'E21': 1})
    regraded = wf.regrade_check(sl2, [([e], 1), ([f], -1)])
    assert regraded.dims() == {-1: 1, 0: 1, 1: 1}
    assert regraded.well_defined
    assert regraded.span == sl2.full()
    assert regraded.component(0).contains(sl2.vector({'H1': 1}))
    assert regraded.component(5).dim == 0


def test_regrade_check_overlap(sl2):
    e = sl2.vector({'E12': 1})
    assert not wf.regrade_check(sl2, [([e], 1), ([e], 2)]).well_defined


def test_filtration_of_algebra_with_centre():
    g = chev.classical_algebra('sl', 3, 3)
    centre = g.center()
    assert centre.contains(g.vector({'H1': 1, 'H2': 2}))
    parabolic = g.span([g.vector({label: 1}) for label in ('H1', 'H2', 'E12', 'E13', 'E23', 'E32')])
    f = wf.build_filtration(g, parabolic, g.full())
    assert f.dims() == (8, 6, 3)
    assert f.tail == centre
    assert f.term(4) == centre
    assert f.term(1).contains(g.vector({'E12': 1}))
    f.check_brackets()
    ga = wf.graded_algebra(f)
    assert ga.central_quotient
    assert ga.algebra.dim == 7
    assert ga.dims() == {-1: 2, 0: 3, 1: 2}
    with pytest.raises(ess.ConstructionError):
        wf.graded_algebra(f, central_quotient=False)


def _graded_toy():
    # x (degree -2), y (-1), h (0), z (1): [h, x] = x, [h, y] = y, [z, x] = y
    entries = [(0, 2, 0, -1), (1, 2, 1, -1), (0, 3, 1, -1)]
    gr = chev.LieAlgebra.from_entries(5, 4, entries, labels=['x', 'y', 'h', 'z'], name='toy',
                                      grading=chev.Grading([-2, -1, 0, 1], 5))
    gr.check_jacobi()
    return wf.GradedAlgebra(gr, None)


def test_weisfeiler_radical_is_graded():
    ga = _graded_toy()
    gr = ga.algebra
    radical = wf.weisfeiler_radical(ga, seed=3)
    assert radical == gr.span([gr.vector({'x': 1}), gr.vector({'y': 1})])
    graded = fpl.Subspace.zero(gr.dim, gr.p)
    for k in gr.grading.degrees():
        graded = graded + (radical & ga.component(k))
    assert graded == radical
