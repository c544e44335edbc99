import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import chevalley as chev
import essentials as ess
import fp_linalg as fpl
import meataxe as mtx
import orbits
import subalgebras as sub
import weisfeiler

"""
pipeline.py holds the steps shared by the orbit-based verification tasks and by the `orbit` and `filtration`
commands: the algebra with a catalogued nilpotent e and its cocharacter grading, g_e and n_e, the radical A and its
normaliser (the maximal subalgebra candidate), the ideals I and J, and the step space that starts the filtration.

How far each orbit is taken is described by a Profile, keyed by (group, p, label).

Methods:
def orbit_setup: Algebra, record, representative and grading of one orbit.
def profile_for: Analysis profile of an orbit.
def analyze: Radical, normaliser and ideals for an orbit.
def step_route: M_-1 for the filtration, by the plain or the relative route.
def module_over: A subquotient of g as a module for a subalgebra.
"""

logger = logging.getLogger(__name__)


@lru_cache(maxsize=8)
def algebra(group, p):
    return chev.chevalley_algebra(group, p)


@dataclass
class OrbitSetup:
    g: chev.LieAlgebra
    rec: orbits.OrbitRecord
    e: object
    grading: chev.Grading

    @cached_property
    def ge(self):
        return sub.centralizer(self.g, [self.e], name='g_e')

    @cached_property
    def ne(self):
        return sub.normalizer(self.g, [self.e], name='n_e')

    def ge_component(self, k):
        return self.ge.space & self.grading.component(k)


def orbit_setup(group, p, label):
    g = algebra(group, p)
    rec = orbits.lookup(group, label)
    e = orbits.representative(g, rec)
    return OrbitSetup(g, rec, e, orbits.cocharacter_grading(g, rec))


@dataclass(frozen=True)
class Profile:
    """
    radical_of: 'ge' or 'ne', the subalgebra whose solvable radical is A
    ideal_depth: degree of g_e(tau) the ideal I is grown from, None when no ideal is needed
    extension: how J is obtained from I; 'degree-zero' keeps the non-abelian minimal ideals of M/I lying in degree
        zero, 'all' keeps every non-abelian minimal ideal, None skips J
    route: 'step' (L_-1 = {x : [x, A] in M}), 'relative' (N = {x : [x, A] in I}) or 'adjoint'
    """
    radical_of: str = 'ge'
    ideal_depth: int = None
    extension: str = None
    route: str = 'step'


PROFILES = {
    (group, p, orbits.normalize_label(label)): profile for (group, p, label), profile in {
        ('E8', 5, 'A4+A3'): Profile(),
        ('F4', 3, '~A2+A1'): Profile(),
        ('E6', 3, 'A2^2+A1'): Profile(),
        ('E7', 3, 'A2^2+A1'): Profile('ne', 4, None, 'relative'),
        ('E8', 3, 'A2^2+A1'): Profile('ne', 4, 'degree-zero', 'relative'),
        ('E6', 2, 'A1^3'): Profile('ne', 2, None, 'relative'),
        ('E7', 2, "(A1^3)'"): Profile('ne', 2, 'all', 'relative'),
        ('E8', 2, 'A1^3'): Profile('ne', 2, 'degree-zero', 'relative'),
        ('E7', 2, 'A1^4'): Profile('ne', None, None, 'adjoint'),
    }.items()
}


def profile_for(group, p, label):
    return PROFILES.get((group, p, orbits.normalize_label(label)), Profile())


@dataclass
class Analysis:
    setup: OrbitSetup
    profile: Profile
    radical: sub.Subalgebra
    w: sub.Subalgebra
    ideal: fpl.Subspace = None
    extension: fpl.Subspace = None
    notes: dict = field(default_factory=dict)

    def summary(self):
        out = {
            'g_e': self.setup.ge.dim,
            'n_e': self.setup.ne.dim,
            'radical': self.radical.dim,
            'radical_of': self.profile.radical_of,
            'radical_abelian': sub.is_abelian(self.setup.g, self.radical),
            'w': self.w.dim,
        }
        out.update(self.notes)
        if self.ideal is not None:
            out['I'] = self.ideal.dim
        if self.extension is not None:
            out['J'] = self.extension.dim
        return out


def analyze(s, profile=None, seed=0, quotient=True):
    g = s.g
    profile = profile or profile_for(s.rec.group, g.p, s.rec.label)
    base = s.ge if profile.radical_of == 'ge' else s.ne
    a = sub.solvable_radical(g, base, seed, name='A')
    w = sub.normalizer(g, a, name='w')
    out = Analysis(s, profile, a, w)
    if quotient and w.dim > a.dim:
        q = sub.quotient(g, w, a, name='w/A')
        out.notes['w/A'] = q.dim
        out.notes['w/A simple'] = sub.is_simple(q, seed=seed)
    if profile.ideal_depth is not None:
        out.ideal = sub.relative_ideal(g, w, s.ge, s.grading, profile.ideal_depth)
        if profile.extension is not None:
            within = None
            if profile.extension == 'degree-zero':
                within = out.ideal + (w.space & s.grading.component(0))
            out.extension = sub.nonabelian_extension(g, w, out.ideal, within=within, seed=seed)
    logger.info('%s %s at p=%d: %s', s.rec.group, s.rec.label, g.p, out.summary())
    return out


def module_over(g, s, space=None, quotient_by=None, name=''):
    s = s if isinstance(s, sub.Subalgebra) else sub.Subalgebra(g, sub.as_space(g, s))
    return mtx.action_module(g, s.generators(), space, quotient_by, name=name or s.name)


def step_route(analysis):
    """(route, M_-1) for the filtration attached to an analysed orbit."""
    g, a, w = analysis.setup.g, analysis.radical, analysis.w
    if analysis.profile.route == 'relative':
        if analysis.ideal is None:
            raise ess.ConstructionError('the relative route needs the ideal I')
        return 'relative', sub.transporter(g, a.basis, analysis.ideal)
    if analysis.profile.route == 'adjoint':
        return 'adjoint', g.full()
    return 'step', sub.step_space(g, a, w)


def filtration_report(analysis, seed=0, modules=False):
    """The filtration from w and M_-1 and the shape of its graded algebra."""
    route, step = step_route(analysis)
    f = weisfeiler.build_filtration(analysis.setup.g, analysis.w, step, seed=seed)
    ga = weisfeiler.graded_algebra(f)
    report = weisfeiler.shape_report(ga, seed, modules)
    report['route'] = route
    report['filtration_dims'] = list(f.dims())
    report['graded_dim'] = ga.algebra.dim
    return report
