import cartan_type as ct
import meataxe as mtx
import subalgebras as sub
import weisfeiler
from tasks import task
from tasks.pipeline import analyze, module_over, orbit_setup

"""
p3.py holds the characteristic three tasks for E6, E7 and E8: the orbit A2^2+A1 in all three (the maximal
subalgebra w, the ideals I and J and the filtrations), and the orbit A2^2+A1^2 in E8, whose centraliser has a simple
second derived algebra of dimension 79.
"""

ANCHOR_E6 = 'E6, p = 3, orbit A2^2+A1'
ANCHOR_E7 = 'E7, p = 3, orbit A2^2+A1'
ANCHOR_E8 = 'E8, p = 3, orbit A2^2+A1'
ANCHOR_CH = 'E8, p = 3, orbit A2^2+A1^2'


@task('thm-none6', 'E6, p = 3: the normaliser of the radical of g_e for A2^2+A1 is maximal')
def none6(r, seed):
    s = orbit_setup('E6', 3, 'A2^2+A1')
    an = analyze(s, seed=seed)
    g = s.g
    r.check('dim g_e', 27, s.ge.dim, ANCHOR_E6)
    r.check('dim A', 17, an.radical.dim, ANCHOR_E6)
    derived = sub.derived_subalgebra(g, an.radical)
    r.check("dim A'", 8, derived.dim, ANCHOR_E6)
    r.check("A' abelian", True, sub.is_abelian(g, derived), ANCHOR_E6)
    r.check('dim w', 35, an.w.dim, ANCHOR_E6)
    q = sub.quotient(g, an.w, an.radical, name='w/A')
    r.check('dim w/A', 18, q.dim, ANCHOR_E6)
    r.check('w/A simple', True, sub.is_simple(q, seed=seed), 'w/A is W(2;1)')
    r.check('w/A restricted', True, ct.is_restricted(q), 'w/A is W(2;1)')
    cert = sub.maximality_certificate(g, an.w, 'step', a=an.radical, seed=seed)
    r.check('dim L_-1', 44, cert.dims['step'], ANCHOR_E6)
    r.check('verdict', 'maximal', cert.verdict, ANCHOR_E6)
    step = sub.step_space(g, an.radical, an.w)
    f = weisfeiler.build_filtration(g, an.w, step, seed=seed)
    r.check('filtration dims', [78, 70, 62, 44, 35, 17, 8], list(f.dims()), ANCHOR_E6)
    ga = weisfeiler.graded_algebra(f)
    r.check('graded dim', 77, ga.algebra.dim, 'the centre of E6 is factored out')
    r.check('dim M(G)', 0, ga.radical(seed).dim, ANCHOR_E6)


def _relative(r, group, expected, anchor, seed):
    """Shared pipeline for E7 and E8 at p = 3: A = rad(n_e), w = N(A), I, the step spaces and the filtration."""
    s = orbit_setup(group, 3, 'A2^2+A1')
    an = analyze(s, seed=seed, quotient=False)
    g = s.g
    r.check('dim n_e', expected['n_e'], s.ne.dim, anchor)
    r.check('dim A', 8, an.radical.dim, anchor)
    r.check('A abelian', True, sub.is_abelian(g, an.radical), anchor)
    r.check('dim w', expected['w'], an.w.dim, anchor)
    r.check('dim I', expected['I'], an.ideal.dim, anchor)
    r.check('I ideal of w', True, an.ideal.is_invariant([g.ad(x) for x in an.w.basis]), anchor)
    outer = sub.transporter(g, an.radical.basis, an.w.space)
    r.check('dim L_-1', expected['outer'], outer.dim, anchor)
    outer_module = module_over(g, an.w, outer, an.w.space)
    r.check('L_-1/w irreducible', False, mtx.is_irreducible(outer_module, seed), anchor)
    r.check('L_-1/w indecomposable', True, mtx.is_indecomposable(outer_module, seed), anchor)
    step = sub.transporter(g, an.radical.basis, an.ideal)
    r.check('dim N', expected['step'], step.dim, anchor)
    r.check('N/w irreducible', True, mtx.is_irreducible(module_over(g, an.w, step, an.w.space), seed), anchor)
    r.check('<N>', g.dim, sub.generate(g, step.basis).dim, anchor)
    f = weisfeiler.build_filtration(g, an.w, step, seed=seed)
    r.check('filtration dims', expected['filtration'], list(f.dims()), anchor)
    ga = weisfeiler.graded_algebra(f)
    radical = ga.radical(seed)
    r.check('dim M(G)', 26, radical.dim, anchor)
    r.check('dim G/M(G)', expected['bar'], ga.algebra.dim - radical.dim, anchor)
    return s, an


@task('thm-none7', 'E7, p = 3: A2^2+A1, the maximal subalgebra w, the ideal I and the filtration')
def none7(r, seed):
    _relative(r, 'E7', {'n_e': 46, 'w': 53, 'I': 35, 'outer': 98, 'step': 80, 'filtration': [133, 125, 80, 53, 8],
                        'bar': 107}, ANCHOR_E7, seed)


@task('thm-none8', 'E8, p = 3: A2^2+A1, the maximal subalgebra w, the ideals I and J and the filtration')
def none8(r, seed):
    s, an = _relative(r, 'E8', {'n_e': 89, 'w': 96, 'I': 71, 'outer': 177, 'step': 159,
                                'filtration': [248, 240, 159, 96, 8], 'bar': 222}, ANCHOR_E8, seed)
    r.check('dim J', 78, an.extension.dim, ANCHOR_E8)
    q = sub.quotient(s.g, an.extension, an.ideal)
    r.check('J/I simple', True, sub.is_simple(q, seed=seed), 'J/I is psl(3)')


@task('thm-ch41', 'E8, p = 3: A2^2+A1^2, the simple algebra of dimension 79 and the step module M_-1')
def ch41(r, seed):
    s = orbit_setup('E8', 3, 'A2^2+A1^2')
    g = s.g
    r.check('dim g_e', 84, s.ge.dim, ANCHOR_CH)
    r.check('dim n_e', 85, s.ne.dim, ANCHOR_CH)
    rad = sub.solvable_radical(g, s.ge, seed)
    r.check('rad g_e = k e', True, rad.dim == 1 and rad.space.contains(s.e), ANCHOR_CH)
    r.check('dim g_e(tau, -1)', 4, s.ge_component(-1).dim, ANCHOR_CH)
    quo = sub.quotient(g, s.ge, [s.e], name='g_e/ke')
    terms = sub.series(quo, quo.full(), 'derived')
    second = terms[2] if len(terms) > 2 else terms[-1]
    r.check("dim (g_e/ke)''", 79, second.dim, ANCHOR_CH)
    r.check("(g_e/ke)'' simple", True, sub.is_simple(quo, second, seed), ANCHOR_CH)
    outer = sub.transporter(g, [s.e], s.ne.space)
    # [x, e] in n_e = g_e + kh: the invariant form pairs tau-degrees k and -k and g_e(tau, 0) is simple, so the
    # dimension is 84 + 85 - (an even rank)
    image = g.span(g.ad(s.e).T)
    r.check("n_e inside [e, g]", True, image.contains(s.ne.space), ANCHOR_CH)
    r.check("dim M'_-1", 169, outer.dim, 'dim g_e + dim n_e')
    module = module_over(g, s.ne, outer, s.ne.space)
    r.check("M'_-1/n_e indecomposable", True, mtx.is_indecomposable(module, seed), ANCHOR_CH)
    types = [t for t in mtx.irreducible_types(module, seed) if t.dim == 79]
    minimal = [m for m in mtx.minimal_submodules(module, types, seed=seed) if m.dim == 79]
    r.check('79-dimensional submodules', 1, len(minimal), ANCHOR_CH)
    if not minimal:
        return
    step = module.ambient_subspace(minimal[0])
    r.check('dim M_-1', 164, step.dim, ANCHOR_CH)
    r.check('M_-1/n_e irreducible', True, mtx.is_irreducible(module_over(g, s.ne, step, s.ne.space), seed),
            ANCHOR_CH)
    r.check('<M_-1>', 248, sub.generate(g, step.basis).dim, ANCHOR_CH)
