import logging
from dataclasses import dataclass, field

import numpy as np

import chevalley as chev
import essentials as ess
import fp_linalg as fpl
import meataxe as mtx
import subalgebras as sub

"""
weisfeiler.py builds the filtration of g attached to a maximal subalgebra M_0 and an irreducible step module
M_-1 / M_0, its associated graded algebra and the largest graded ideal of that algebra inside the negative part.

Methods:
def build_filtration: The chain M_(-q) = g > ... > M_(r) > 0.
def graded_algebra: gr(g) as a graded LieAlgebra, with the central quotient taken when g has a centre.
def weisfeiler_radical: Largest graded ideal of gr(g) inside its negative part.
def shape_report: Component dimensions and the degenerate-case indicators.
def regrade_check: Grading of a subalgebra obtained by giving degrees to some homogeneous elements.
def ermolaev_regrading: The depth-one regrading of <e, f> in F4 at p = 3.
"""

logger = logging.getLogger(__name__)

# tau-degree of a component of V -> new degree
ERMOLAEV_DEGREES = {4: -1, 2: 0, 0: 1, -2: 0, -4: 1, -6: 2, -8: 1, -10: 2}


class Filtration:
    """
    g: the filtered algebra
    terms: degree -> Subspace, from the lowest degree (where the term is g) to the last non-central term
    tail: the central subspace every term above the last one equals (zero when g has no centre)
    """

    def __init__(self, g, terms, tail=None):
        self.g = g
        self.terms = dict(sorted(terms.items()))
        self.tail = tail if tail is not None else fpl.Subspace.zero(g.dim, g.p)

    def __repr__(self):
        return f'Filtration({self.g.name}, {self.dims()})'

    @property
    def lowest(self):
        return min(self.terms)

    @property
    def highest(self):
        return max(self.terms)

    def term(self, k):
        if k < self.lowest:
            return self.g.full()
        if k > self.highest:
            return self.tail
        return self.terms[k]

    def dims(self):
        return tuple(t.dim for t in self.terms.values())

    def check_brackets(self):
        """Raises when [M_(i), M_(j)] is not inside M_(i+j) for some stored pair."""
        degrees = list(self.terms)
        for a, i in enumerate(degrees):
            for j in degrees[a:]:
                if self.terms[i].dim == 0 or self.terms[j].dim == 0:
                    continue
                rows = self.g.bracket_rows(self.terms[i].basis, self.terms[j].basis)
                if not self.term(i + j).contains(rows):
                    raise ess.ConstructionError(f'[M({i}), M({j})] is not inside M({i + j})')

    def modulo(self, ideal):
        """The induced filtration of g / ideal."""
        q = self.g.quotient(ideal)
        terms = {}
        for k, t in self.terms.items():
            image = q.span(ideal.quotient_coordinates(t.basis)) if t.dim else fpl.Subspace.zero(q.dim, q.p)
            if image.dim:
                terms[k] = image
        tail = q.span(ideal.quotient_coordinates(self.tail.basis)) if self.tail.dim else None
        return Filtration(q, terms, tail)

    def to_json(self):
        return {'algebra': self.g.name, 'degrees': list(self.terms), 'dims': list(self.dims())}


def build_filtration(g, m0, m_minus1, check=True, seed=0):
    m0_space, step = sub.as_space(g, m0), sub.as_space(g, m_minus1)
    if not step.contains(m0_space) or step.dim == m0_space.dim:
        raise ess.DimensionMismatch(f'M_-1 of dimension {step.dim} must strictly contain M_0 of dimension '
                                    f'{m0_space.dim}')
    if not step.is_invariant([g.ad(x) for x in m0_space.basis]):
        raise ess.NotInvariant('M_-1 is not stable under ad M_0')
    if check:
        gens = sub.generating_set(g, m0_space, seed)
        module = mtx.action_module(g, gens, space=step, sub=m0_space, name='M_-1/M_0')
        if not mtx.is_irreducible(module, seed):
            raise ess.ConstructionError(f'M_-1/M_0 of dimension {module.dim} is not an irreducible M_0-module')
    terms = {0: m0_space, -1: step}
    k = -1
    while terms[k].dim < g.dim:
        nxt = terms[k] + g.span(g.bracket_rows(terms[k].basis, step.basis))
        if nxt == terms[k]:
            raise ess.ConstructionError(f'M_-1 generates only a {nxt.dim}-dimensional subspace')
        k -= 1
        terms[k] = nxt
    # The positive terms shrink to a subspace of the centre, which is stable from then on
    centre = g.center()
    k = 0
    tail = None
    while terms[k].dim:
        nxt = sub.transporter(g, step.basis, terms[k]) & terms[k]
        if centre.contains(nxt):
            tail = nxt
            break
        if nxt == terms[k]:
            raise ess.ConstructionError(f'the filtration stops at a non-central term of dimension {nxt.dim}')
        k += 1
        terms[k] = nxt
    f = Filtration(g, terms, tail)
    if f.tail.dim:
        logger.info('filtration of %s ends in a %d-dimensional central term', g.name, f.tail.dim)
    logger.info('filtration of %s: degrees %d..%d, dims %s', g.name, f.lowest, f.highest, f.dims())
    return f


@dataclass
class GradedAlgebra:
    algebra: chev.LieAlgebra
    filtration: Filtration
    # degree -> (section rows in the filtered algebra, their pivot columns)
    sections: dict = field(default_factory=dict)
    central_quotient: bool = False
    _radical: fpl.Subspace = None

    @property
    def grading(self):
        return self.algebra.grading

    def dims(self):
        return {k: len(rows) for k, (rows, _) in self.sections.items()}

    def component(self, k):
        return self.grading.component(k)

    def part(self, predicate):
        """Span of the components whose degree satisfies predicate."""
        idx = [i for i, w in enumerate(self.grading.weights) if predicate(int(w))]
        return self.algebra.span(np.eye(self.algebra.dim, dtype=np.int64)[idx])

    def symbol(self, x):
        """Leading term of an element of the filtered algebra, as an element of gr."""
        f = self.filtration
        x = fpl.as_residues(x, f.g.p)
        out = self.algebra.zero()
        if not x.any():
            return out
        offset = 0
        for k, (rows, cols) in self.sections.items():
            if not f.term(k + 1).contains(x):
                out[offset:offset + len(rows)] = f.term(k + 1).reduce(x)[cols]
                return out
            offset += len(rows)
        return out

    def radical(self, seed=0):
        if self._radical is None:
            self._radical = weisfeiler_radical(self, seed)
        return self._radical


def _sections(f):
    out = {}
    for k in range(f.lowest, f.highest + 1):
        cur, nxt = f.term(k), f.term(k + 1)
        old = set(nxt.pivots)
        rows = [i for i, piv in enumerate(cur.pivots) if piv not in old]
        out[k] = (cur.basis[rows], [cur.pivots[i] for i in rows])
    return out


def graded_algebra(f, central_quotient=None, check=True):
    """
    gr(g) = sum of M_(k) / M_(k+1). Each component is coordinatised by the echelon rows of M_(k) whose pivots are
    not pivots of M_(k+1); the class of x in M_(k) has coordinates M_(k+1).reduce(x) at those pivots.
    """
    g = f.g
    if central_quotient is None:
        central_quotient = g.center().dim > 0
    if central_quotient and g.center().dim:
        logger.info('taking the quotient of %s by its %d-dimensional centre', g.name, g.center().dim)
        f = f.modulo(g.center())
        g = f.g
    if check:
        f.check_brackets()
    sections = _sections(f)
    offsets, weights, labels, total = {}, [], [], 0
    for k, (rows, _) in sections.items():
        offsets[k] = total
        total += len(rows)
        weights += [k] * len(rows)
        labels += [f'G{k}.{t + 1}' for t in range(len(rows))]
    if total != g.dim:
        raise ess.ConstructionError(f'graded components add up to {total}, not {g.dim}')
    entries = []
    degrees = [k for k, (rows, _) in sections.items() if len(rows)]
    for a, i in enumerate(degrees):
        for j in degrees[a:]:
            k = i + j
            if k not in sections or not len(sections[k][0]):
                continue
            prods = g.brackets(sections[i][0], sections[j][0])
            flat = prods.reshape(-1, g.dim)
            coords = f.term(k + 1).reduce(flat)[:, sections[k][1]].reshape(prods.shape[0], prods.shape[1], -1)
            u, v, w = np.nonzero(coords)
            keep = u < v if i == j else np.ones(len(u), dtype=bool)
            u, v, w = u[keep], v[keep], w[keep]
            entries.append(np.stack([offsets[i] + u, offsets[j] + v, offsets[k] + w, coords[u, v, w]], axis=1))
    entries = np.vstack(entries) if entries else np.zeros((0, 4), dtype=np.int64)
    gr = chev.LieAlgebra.from_entries(g.p, total, entries, labels=labels, name=f'gr({g.name})',
                                      grading=chev.Grading(weights, g.p), meta={'parent': g.name})
    if check:
        gr.check_jacobi()
    logger.info('graded algebra of dimension %d, components %s', gr.dim, gr.grading.dims())
    return GradedAlgebra(gr, f, sections, central_quotient)


def weisfeiler_radical(ga, seed=0):
    """
    Largest graded ideal of gr(g) inside the sum of the negative components.

    gr acts through the homogeneous parts of a generating set, so every term of the fixpoint is graded; each term is
    still cut back to the sum of its intersections with the components.
    """
    gr = ga.algebra
    weights = gr.grading.weights
    degrees = gr.grading.degrees()
    gens = sub.generating_set(gr, gr.full(), seed)
    parts = [np.where(weights == k, x, 0) for x in gens for k in degrees]
    acting = np.array(parts, dtype=np.int64).reshape(-1, gr.dim)
    acting = acting[acting.any(axis=1)]
    space = ga.part(lambda k: k < 0)
    while space.dim:
        nxt = _graded_core(ga, sub.transporter(gr, acting, space) & space)
        if nxt == space:
            break
        space = nxt
    logger.info('radical of %s has dimension %d', gr.name, space.dim)
    return space


def _graded_core(ga, space):
    """The largest graded subspace of space."""
    out = fpl.Subspace.zero(ga.algebra.dim, ga.algebra.p)
    for k in ga.grading.degrees():
        out = out + (space & ga.component(k))
    return out



def _graded_quotient(ga, radical):
    if radical.dim == 0:
        return ga.algebra
    return ga.algebra.quotient(radical, name=f'{ga.algebra.name}/M')


def shape_report(ga, seed=0, modules=False):
    """
    Component dimensions of gr(g) and of its quotient by the radical, the minimal graded ideal A of the quotient
    (the ideal generated by its degree -1 component) and the degenerate-case indicators
    A meets no positive component, no component of degree >= 2, and [[G_-1, G_1], G_1] = 0.
    """
    gr = ga.algebra
    radical = ga.radical(seed)
    bar = _graded_quotient(ga, radical)
    dims_bar = bar.grading.dims()
    minus_one = bar.grading.component(-1)
    minimal = sub.ideal(bar, minus_one.basis) if minus_one.dim else fpl.Subspace.zero(bar.dim, bar.p)
    positive = bar.span(np.eye(bar.dim, dtype=np.int64)[bar.grading.weights > 0])
    one = bar.grading.component(1)
    triple = True
    if minus_one.dim and one.dim:
        inner = bar.bracket_rows(minus_one.basis, one.basis)
        triple = not bar.bracket_rows(inner, one.basis).any()
    report = {
        'component_dims': {k: v for k, v in ga.dims().items()},
        'depth': gr.grading.depth(),
        'height': gr.grading.height(),
        'radical_dim': radical.dim,
        'radical_meets_minus_one': (radical & ga.component(-1)).dim,
        'quotient_component_dims': dims_bar,
        'minimal_ideal_dim': minimal.dim,
        'degenerate_flags': {
            'minimal_ideal_misses_positive': (minimal & positive).dim == 0,
            'no_components_above_one': all(d == 0 for k, d in dims_bar.items() if k >= 2),
            'triple_bracket_vanishes': triple,
        },
        'central_quotient': ga.central_quotient,
        'simple': radical.dim == 0 and sub.is_simple(gr, seed=seed),
    }
    if modules:
        zero_part = ga.component(0)
        gens = sub.generating_set(gr, zero_part, seed)
        report['g0_simple'] = sub.is_simple(gr, zero_part, seed)
        report['components_irreducible'] = {
            k: mtx.is_irreducible(mtx.action_module(gr, gens, space=ga.component(k)), seed)
            for k, d in ga.dims().items() if d and k != 0}
    return report


@dataclass
class Regrading:
    g: chev.LieAlgebra
    components: dict

    def dims(self):
        return {k: s.dim for k, s in sorted(self.components.items()) if s.dim}

    @property
    def span(self):
        total = fpl.Subspace.zero(self.g.dim, self.g.p)
        for s in self.components.values():
            total = total + s
        return total

    @property
    def well_defined(self):
        """True when the components form a direct sum."""
        return sum(s.dim for s in self.components.values()) == self.span.dim

    def component(self, k):
        return self.components.get(k, fpl.Subspace.zero(self.g.dim, self.g.p))


def regrade_check(g, assignments):
    """
    assignments: (element, degree) pairs. Degrees are propagated through brackets, [L_i, L_j] going to L_(i+j),
    until nothing new appears.
    """
    comps = {}
    for x, d in assignments:
        comps[d] = comps.get(d, fpl.Subspace.zero(g.dim, g.p)) + g.span(x)
    changed = True
    while changed:
        changed = False
        for i in sorted(comps):
            for j in sorted(comps):
                if i > j or not comps[i].dim or not comps[j].dim:
                    continue
                target = comps.get(i + j, fpl.Subspace.zero(g.dim, g.p))
                grown, fresh = target.extend(g.bracket_rows(comps[i].basis, comps[j].basis))
                if fresh.shape[0]:
                    comps[i + j] = grown
                    changed = True
    out = Regrading(g, comps)
    logger.debug('regrading dims %s', out.dims())
    return out


def ermolaev_regrading(g, e, f, f_prime, grading, degrees=ERMOLAEV_DEGREES):
    """
    L = <e, f> and W = <e, f'> in F4 at p = 3. v spans ker(ad e) in L(tau, 4), V is the span of [W, v] and each
    tau-component of V gets the degree given by `degrees`.
    """
    big = sub.generate(g, [e, f], name='L')
    small = sub.generate(g, [e, f_prime], name='W')
    top = big.space & grading.component(4) & sub.centralizer(g, [e]).space
    if top.dim != 1:
        raise ess.NoSolution(f'ker(ad e) in L(tau, 4) has dimension {top.dim}')
    v = top.basis[0]
    module = g.span(g.bracket_rows(small.basis, [v]))
    pieces = {k: module & grading.component(k) for k in degrees}
    assignments = [(s.basis, degrees[k]) for k, s in pieces.items() if s.dim]
    regraded = regrade_check(g, assignments)
    zero = regraded.component(0)
    rad = sub.solvable_radical(g, sub.Subalgebra(g, zero, closed=True))
    centre = sub.center_of(g, zero)
    return {
        'dims': {'L': big.dim, 'W': small.dim, 'V': module.dim},
        'v_components': {k: s.dim for k, s in pieces.items()},
        'direct_sum': (small.space & module).dim == 0 and (small.space + module) == big.space,
        'well_defined': regraded.well_defined and regraded.span == big.space,
        'regraded_dims': regraded.dims(),
        'minus_one_dim': regraded.component(-1).dim,
        'zero_dim': zero.dim,
        'zero_radical_dim': rad.dim,
        'zero_radical_central': centre.contains(rad.space),
    }
