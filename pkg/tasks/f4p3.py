import cartan_type as ct
import subalgebras as sub
import weisfeiler
from tasks import task
from tasks.pipeline import analyze, orbit_setup

"""
f4p3.py holds the F4 tasks in characteristic three: the 26-dimensional simple subalgebra generated by an F4(a1)
element and a negative root vector, its 18-dimensional subalgebra and regrading, and the maximal subalgebra attached
to the orbit ~A2+A1 with its filtration.
"""

ANCHOR_ER = 'F4, p = 3, Ermolaev subalgebra'
ANCHOR_NON = 'F4, p = 3, orbit ~A2+A1'


# GAP basis positions (0-based) of f_1222, f_1232 and f_1242
GAP_F1222, GAP_F1232, GAP_F1242 = 43, 44, 45


def ermolaev_vectors(g):
    """f = f_1232 and f' = f_1222 - f_1242, with the root labels resolved through the GAP basis order."""
    rs = g.root_system
    f = g.root_vector(rs.gap_root(GAP_F1232))
    f_prime = (g.root_vector(rs.gap_root(GAP_F1222)) - g.root_vector(rs.gap_root(GAP_F1242))) % g.p
    return f, f_prime


@task('thm-ermax', 'F4, p = 3: <e, f_1232> is simple of dimension 26 and maximal')
def ermax(r, seed):
    s = orbit_setup('F4', 3, 'F4(a1)')
    g, e = s.g, s.e
    f, f_prime = ermolaev_vectors(g)
    big = sub.generate(g, [e, f], name='L')
    r.check('dim <e, f>', 26, big.dim, ANCHOR_ER)
    r.check('<e, f> simple', True, sub.is_simple(g, big, seed), ANCHOR_ER)
    r.check('dim N(L)', 26, sub.normalizer(g, big).dim, ANCHOR_ER)
    r.check("f' in L", True, big.space.contains(f_prime), ANCHOR_ER)
    small = sub.generate(g, [e, f_prime], name='W')
    r.check("dim <e, f'>", 18, small.dim, ANCHOR_ER)
    r.check("<e, f'> simple", True, sub.is_simple(g, small, seed), ANCHOR_ER)
    cert = sub.maximality_certificate(g, big, 'adjoint', seed=seed)
    r.check('submodules of g over L', [0, 26, 52], cert.submodule_dims, ANCHOR_ER)
    r.check('verdict', 'maximal', cert.verdict, ANCHOR_ER)
    regrading = weisfeiler.ermolaev_regrading(g, e, f, f_prime, s.grading)
    r.check('L = W + V', True, regrading['direct_sum'], ANCHOR_ER)
    r.check('regrading well defined', True, regrading['well_defined'], ANCHOR_ER)
    r.check('dim L_-1', 3, regrading['minus_one_dim'], 'Er(1,1) has L_-1 of dimension 3')
    r.check('dim L_0', 6, regrading['zero_dim'], 'Er(1,1) has L_0 of dimension 6')
    r.check('dim rad L_0', 3, regrading['zero_radical_dim'], 'rad L_0 is three-dimensional')
    r.check('rad L_0 central', False, regrading['zero_radical_central'], 'rad L_0 is not central')


def _nonf4(seed):
    s = orbit_setup('F4', 3, '~A2+A1')
    return s, analyze(s, seed=seed)


@task('thm-nonf4', 'F4, p = 3: the normaliser of the radical of g_e for ~A2+A1 is maximal')
def nonf4(r, seed):
    s, an = _nonf4(seed)
    g = s.g
    r.check('dim g_e', 18, s.ge.dim, ANCHOR_NON)
    r.check('dim n_e', 19, s.ne.dim, ANCHOR_NON)
    r.check('dim A', 8, an.radical.dim, ANCHOR_NON)
    r.check('A abelian', True, sub.is_abelian(g, an.radical), ANCHOR_NON)
    r.check('dim w', 26, an.w.dim, ANCHOR_NON)
    q = sub.quotient(g, an.w, an.radical, name='w/A')
    r.check('dim w/A', 18, q.dim, ANCHOR_NON)
    r.check('w/A simple', True, sub.is_simple(q, seed=seed), 'w/A is W(2;1)')
    r.check('w/A restricted', True, ct.is_restricted(q), 'w/A is W(2;1)')
    cert = sub.maximality_certificate(g, an.w, 'step', a=an.radical, seed=seed)
    r.check('dim L_-1', 44, cert.dims['step'], ANCHOR_NON)
    r.check('<L_-1>', 52, cert.generated_dim, ANCHOR_NON)
    r.check('verdict', 'maximal', cert.verdict, ANCHOR_NON)


@task('thm-weisf4', 'F4, p = 3: the Weisfeiler filtration for ~A2+A1')
def weisf4(r, seed):
    s, an = _nonf4(seed)
    step = sub.step_space(s.g, an.radical, an.w)
    f = weisfeiler.build_filtration(s.g, an.w, step, seed=seed)
    r.check('filtration dims', [52, 44, 26, 8], list(f.dims()), ANCHOR_NON)
    ga = weisfeiler.graded_algebra(f)
    report = weisfeiler.shape_report(ga, seed)
    r.check('graded dim', 52, ga.algebra.dim, ANCHOR_NON)
    r.check('dim M(G)', 0, report['radical_dim'], ANCHOR_NON)
    r.check('dim L_1', 8, report['component_dims'][1], 'dim L_1 = dim A = 8')
