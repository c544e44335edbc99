import logging
from dataclasses import dataclass, field

import numpy as np

import essentials as ess
import fp_linalg as fpl
import meataxe as mtx

"""
subalgebras.py contains the subalgebra machinery used by the orbit analyses: generation, centralizers and normalizers,
derived and lower central series, solvable radicals, quotients, the step spaces L_-1, maximality certificates,
Jordan-block counts and the searches for Witt subalgebras.

Everything works inside an ambient LieAlgebra g; subalgebras are Subspaces of g wrapped with their closure status.

Methods:
def generate: Subalgebra generated by some elements.
def ideal, invariant_closure: Smallest subspace containing some elements and stable under some adjoint maps.
def centralizer, normalizer: As subalgebras of g.
def series: Derived or lower central series.
def solvable_radical: Largest solvable ideal, grown from abelian minimal ideals.
def quotient: s/i as a LieAlgebra.
def step_space: {x : [x, a] in target}, the L_-1 of a maximal pair.
def transporter: {x : [b, x] in target for every acting b}.
def maximality_certificate: Adjoint-module or step-space proof that a subalgebra is maximal.
def jordan_block_count: Number of Jordan blocks of ad e on an invariant subspace.
def witt_generation_scan: Elements f making <e, f> a Witt algebra candidate.
def fixed_vector_check: Sampled rank test for a fixed vector of a Witt subalgebra.
def relative_ideal, extend_ideal, nonabelian_extension: Ideals of a maximal subalgebra built from a nilpotent orbit.
def lift: Preimage of a subspace of a quotient.
"""

logger = logging.getLogger(__name__)

# Frontier rows bracketed per batch while closing a subspace
CLOSURE_BATCH = 64


class Subalgebra:
    """
    g: ambient algebra
    space: Subspace of g
    closed: True once [space, space] is known to lie in space
    """

    def __init__(self, g, space, closed=None, name=''):
        self.g = g
        self.space = space
        self.name = name
        self._closed = closed
        self._algebra = None
        self._generators = None

    def __repr__(self):
        return f'Subalgebra({self.name or "?"}, dim={self.dim}, in {self.g.name})'

    @property
    def dim(self):
        return self.space.dim

    @property
    def basis(self):
        return self.space.basis

    def __contains__(self, x):
        return self.space.contains(x)

    @property
    def closed(self):
        if self._closed is None:
            self._closed = self.g.is_closed(self.space)
        return self._closed

    def algebra(self):
        """The subalgebra as a LieAlgebra, coordinates taken at the pivots of its basis."""
        if self._algebra is None:
            self._algebra = self.g.restrict(self.space, name=self.name)
        return self._algebra

    def generators(self, seed=0):
        if self._generators is None:
            self._generators = generating_set(self.g, self.space, seed)
        return self._generators

    def module(self, space=None, sub=None, name=''):
        """A subquotient of g as a module for this subalgebra (acting through a generating set)."""
        return mtx.action_module(self.g, self.generators(), space, sub, name=name or self.name)

    def adjoint_module(self):
        a = self.algebra()
        gens = self.space.coordinates(self.generators())
        return mtx.action_module(a, gens, name=f'ad {self.name}')

    def to_json(self):
        return {'name': self.name, 'dim': self.dim, 'space': self.space.to_json()}


def as_space(g, s):
    if isinstance(s, Subalgebra):
        return s.space
    if isinstance(s, fpl.Subspace):
        return s
    return g.span(fpl.as_residues(s, g.p).reshape(-1, g.dim))


def generate(g, seeds, name=''):
    seeds = fpl.as_residues(seeds, g.p).reshape(-1, g.dim)
    space, frontier = fpl.Subspace.zero(g.dim, g.p).extend(seeds)
    rounds = 0
    while frontier.shape[0] and space.dim < g.dim:
        start_space = space
        pieces = []
        for start in range(0, frontier.shape[0], CLOSURE_BATCH):
            rows = g.bracket_rows(frontier[start:start + CLOSURE_BATCH], start_space.basis)
            space, fresh = space.extend(rows)
            pieces.append(fresh)
        frontier = np.vstack(pieces)
        rounds += 1
        logger.debug('generate round %d: dim %d', rounds, space.dim)
    return Subalgebra(g, space, closed=True, name=name)


def generating_set(g, space, seed=0):
    """A short list of elements generating the subalgebra on `space`."""
    rng = ess.make_rng(seed)
    gens = []
    current = fpl.Subspace.zero(g.dim, g.p)
    while current.dim < space.dim:
        candidate = None
        for _ in range(20):
            trial = fpl.mul(rng.integers(0, g.p, size=space.dim), space.basis, g.p)
            if current.reduce(trial).any():
                candidate = trial
                break
        if candidate is None:
            candidate = space.basis[np.flatnonzero(current.reduce(space.basis).any(axis=1))[0]]
        gens.append(candidate)
        current = generate(g, gens).space
    logger.debug('%d generators for a %d-dimensional subalgebra', len(gens), space.dim)
    return np.array(gens, dtype=np.int64).reshape(-1, g.dim)


def invariant_closure(g, vectors, acting, start=None):
    """Smallest subspace containing `vectors` and `start` (itself stable) and stable under ad of each acting row."""
    acting = fpl.as_residues(acting, g.p).reshape(-1, g.dim)
    space = start if start is not None else fpl.Subspace.zero(g.dim, g.p)
    space, frontier = space.extend(fpl.as_residues(vectors, g.p).reshape(-1, g.dim))
    while frontier.shape[0] and space.dim < g.dim and acting.shape[0]:
        pieces = []
        for start_row in range(0, frontier.shape[0], CLOSURE_BATCH):
            rows = g.bracket_rows(acting, frontier[start_row:start_row + CLOSURE_BATCH])
            space, fresh = space.extend(rows)
            pieces.append(fresh)
        frontier = np.vstack(pieces)
    return space


def ideal(g, seeds):
    return invariant_closure(g, seeds, np.eye(g.dim, dtype=np.int64))


def transporter(g, acting, target):
    """{x : [b, x] in target for every row b of acting}."""
    acting = fpl.as_residues(acting, g.p).reshape(-1, g.dim)
    comp = target.complement_columns()
    piv = list(target.pivots)

    def blocks():
        for b in acting:
            a = g.ad(b)
            if target.dim:
                yield (a[comp] - fpl.mul(target.basis[:, comp].T, a[piv], g.p)) % g.p
            else:
                yield a

    return fpl.stacked_nullspace(blocks(), g.dim, g.p)


def centralizer(g, s, name=''):
    space = as_space(g, s)
    return Subalgebra(g, transporter(g, space.basis, fpl.Subspace.zero(g.dim, g.p)), closed=True, name=name)


def normalizer(g, s, name=''):
    space = as_space(g, s)
    return Subalgebra(g, transporter(g, space.basis, space), closed=True, name=name)


def derived_subalgebra(g, s, name=''):
    space = as_space(g, s)
    if space.dim == 0:
        return Subalgebra(g, space, closed=True, name=name)
    return Subalgebra(g, g.span(g.bracket_rows(space.basis, space.basis)), closed=True, name=name)


def series(g, s, kind='derived'):
    """The derived or lower central series of s, stopping at the first repeated term."""
    if kind not in ('derived', 'lower_central'):
        raise ess.ModLieError(f'unknown series {kind!r}')
    top = as_space(g, s)
    terms = [Subalgebra(g, top, closed=True)]
    while terms[-1].dim:
        last = terms[-1].space
        other = last if kind == 'derived' else top
        nxt = g.span(g.bracket_rows(other.basis, last.basis))
        if nxt == last:
            break
        terms.append(Subalgebra(g, nxt, closed=True))
    return terms


def is_abelian(g, s):
    space = as_space(g, s)
    return space.dim == 0 or not g.bracket_rows(space.basis, space.basis).any()


def is_solvable(g, s):
    return series(g, s, 'derived')[-1].dim == 0


def is_nilpotent(g, s):
    return series(g, s, 'lower_central')[-1].dim == 0


def center_of(g, s):
    space = as_space(g, s)
    return transporter(g, space.basis, fpl.Subspace.zero(g.dim, g.p)) & space


def is_simple(g, s=None, seed=0):
    a = g if s is None else Subalgebra(g, as_space(g, s)).algebra()
    if a.dim <= 1 or is_abelian(a, a.full()):
        return False
    module = mtx.action_module(a, generating_set(a, a.full(), seed))
    return mtx.is_irreducible(module, seed)


def solvable_radical(g, s, seed=0, name=''):
    """
    Largest solvable ideal of s.

    Repeatedly adds every abelian minimal ideal of the current quotient (the homogeneous socle components that are
    abelian) until the quotient has none; a nonzero solvable ideal always contains an abelian minimal ideal.
    """
    sub = s if isinstance(s, Subalgebra) else Subalgebra(g, as_space(g, s))
    a = sub.algebra()
    radical = fpl.Subspace.zero(a.dim, a.p)
    while radical.dim < a.dim:
        q = a.quotient(radical) if radical.dim else a
        module = mtx.action_module(q, generating_set(q, q.full(), seed))
        found = fpl.Subspace.zero(q.dim, q.p)
        for t in mtx.irreducible_types(module, seed):
            component = mtx.socle_component(module, t, seed)
            if component.dim and not q.bracket_rows(component.basis, component.basis).any():
                found = found + component
        if found.dim == 0:
            break
        cols = q.meta.get('section', list(range(a.dim))) if radical.dim else list(range(a.dim))
        rows = np.zeros((found.dim, a.dim), dtype=np.int64)
        rows[:, cols] = found.basis
        radical = radical + a.span(rows)
        logger.debug('radical grew to %d', radical.dim)
    rows = fpl.mul(radical.basis, sub.basis, g.p) if radical.dim else np.zeros((0, g.dim), dtype=np.int64)
    return Subalgebra(g, g.span(rows), closed=True, name=name or 'rad')


def quotient(g, s, i, name=''):
    """s/i as a LieAlgebra; i must be an ideal of s."""
    sub = s if isinstance(s, Subalgebra) else Subalgebra(g, as_space(g, s))
    ideal_space = as_space(g, i)
    if not sub.space.contains(ideal_space):
        raise ess.NotInvariant('the ideal is not contained in the subalgebra')
    a = sub.algebra()
    inner = a.span(sub.space.coordinates(ideal_space.basis)) if ideal_space.dim else fpl.Subspace.zero(a.dim, a.p)
    return a.quotient(inner, name=name)


def step_space(g, a, target):
    """
    The largest target-stable subspace X with [X, a] inside target.

    {x : [x, a] in target} is collected first and then cut down until ad(target) preserves it; when a is an ideal
    of target the first space is already stable.
    """
    a_space, t_space = as_space(g, a), as_space(g, target)
    space = transporter(g, a_space.basis, t_space)
    while not space.is_invariant([g.ad(t) for t in t_space.basis]):
        basis = space.basis

        def blocks():
            for t in t_space.basis:
                images = fpl.mul(basis, g.ad(t).T, g.p)
                yield space.reduce(images).T

        combos = fpl.stacked_nullspace(blocks(), basis.shape[0], g.p)
        space = g.span(fpl.mul(combos.basis, basis, g.p))
        logger.debug('step space cut to %d', space.dim)
    return space


@dataclass
class Certificate:
    route: str
    dims: dict = field(default_factory=dict)
    submodule_dims: list = None
    generated_dim: int = None
    verdict: str = 'inconclusive'

    @property
    def maximal(self):
        return self.verdict == 'maximal'

    def to_json(self):
        return {'route': self.route, 'dims': self.dims, 'submodule_dims': self.submodule_dims,
                'generated_dim': self.generated_dim, 'verdict': self.verdict}


def maximality_certificate(g, l0, strategy='adjoint', a=None, outer=None, seed=0, lattice=True):
    """
    strategy 'adjoint': g/l0 is an irreducible l0-module, so nothing lies strictly between l0 and g.
    strategy 'step': L_-1 = step_space(g, a, l0) with L_-1/l0 irreducible and generating g; `outer`, a larger step
    space, must give an indecomposable module over l0.
    lattice: on the adjoint route, also list the submodule lattice of the adjoint module of l0.
    """
    l0 = l0 if isinstance(l0, Subalgebra) else Subalgebra(g, as_space(g, l0))
    if l0.dim >= g.dim:
        raise ess.DimensionMismatch('maximality needs a proper subalgebra')
    cert = Certificate(route=strategy, dims={'g': g.dim, 'l0': l0.dim})
    if strategy == 'adjoint':
        top = mtx.action_module(g, l0.generators(), sub=l0.space)
        irreducible = mtx.is_irreducible(top, seed)
        try:
            if lattice:
                subs = mtx.submodule_bases(l0.module(), seed=seed)
                cert.submodule_dims = [s.dim for s in subs]
        except ess.LatticeTooLarge:
            logger.warning('adjoint lattice over a %d-dimensional subalgebra is too large to list', l0.dim)
        cert.dims['quotient'] = top.dim
        cert.generated_dim = g.dim
        if irreducible:
            cert.verdict = 'maximal'
    elif strategy == 'step':
        a = a if a is not None else solvable_radical(g, l0, seed)
        step = step_space(g, a, l0)
        cert.dims['a'] = as_space(g, a).dim
        cert.dims['step'] = step.dim
        if step.dim == l0.dim:
            return cert
        quotient_module = l0.module(space=step, sub=l0.space)
        irreducible = mtx.is_irreducible(quotient_module, seed)
        cert.dims['step_quotient'] = quotient_module.dim
        cert.submodule_dims = [0, quotient_module.dim] if irreducible else None
        cert.generated_dim = generate(g, step.basis).dim
        indecomposable = True
        if outer is not None:
            outer_space = as_space(g, outer)
            cert.dims['outer'] = outer_space.dim
            if outer_space.dim > step.dim:
                indecomposable = mtx.is_indecomposable(l0.module(space=outer_space, sub=l0.space), seed)
        if irreducible and cert.generated_dim == g.dim and indecomposable:
            cert.verdict = 'maximal'
    else:
        raise ess.ModLieError(f'unknown maximality route {strategy!r}')
    if not cert.maximal:
        logger.warning('%s route is inconclusive for a %d-dimensional subalgebra', strategy, l0.dim)
    return cert


def jordan_block_count(g, m, e):
    space = as_space(g, m)
    ad_e = g.ad(e)
    if space.dim == 0:
        return 0
    if not space.is_invariant([ad_e]):
        raise ess.NotInvariant('the subspace is not stable under ad e')
    restricted = fpl.mul(ad_e, space.basis.T, g.p)
    return fpl.nullspace(restricted, g.p).dim


@dataclass
class WittCandidate:
    f: np.ndarray
    generated_dim: int


def witt_generation_scan(g, e, grading, k, limit=4):
    """
    Elements f of degree -2(p^k - 2) with (ad e)^(p^k - 1) f a nonzero multiple of e, and the dimension of the
    subalgebra each generates with e.
    """
    degree = -2 * (g.p ** k - 2)
    columns = grading.indices(degree)
    if len(columns) == 0:
        raise ess.NoSolution(f'no component of degree {degree}')
    power = fpl.matrix_power(g.ad(e), g.p ** k - 1, g.p)
    found = fpl.solve(power[:, columns], e, g.p)
    if found is None:
        return []
    particular, kernel = found
    options = [particular] + [(particular + row) % g.p for row in kernel.basis[:max(0, limit - 1)]]
    out = []
    for coeffs in options:
        f = g.zero()
        f[columns] = coeffs
        out.append(WittCandidate(f=f, generated_dim=generate(g, [e, f]).dim))
    logger.info('degree %d: %d candidate(s), generated dims %s', degree, len(out), [c.generated_dim for c in out])
    return out


def admits_witt(g, e, grading, k=1):
    try:
        return bool(witt_generation_scan(g, e, grading, k, limit=1))
    except ess.NoSolution:
        return False


def _solve_stacked(g, blocks, rhs):
    return fpl.solve(np.vstack(blocks) % g.p, np.concatenate(rhs) % g.p, g.p)


def fixed_vector_check(g, e, h, samples=5, seed=None, within=None):
    """
    Samples u with [e, u] = h, [h, u] = -lambda u and v with [e, v] = u, [h, v] = -2 lambda v (where
    [h, e] = lambda e), and reports the rank of w -> [v, w] on W = g_e ∩ ker ad h (or on `within`).
    """
    e = fpl.as_residues(e, g.p)
    h = fpl.as_residues(h, g.p)
    if not e.any():
        raise ess.NoSolution('e must be nonzero')
    he = g.bracket(h, e)
    lead = int(np.flatnonzero(e)[0])
    lam = int(he[lead] * fpl.inverse_table(g.p)[e[lead]]) % g.p
    if lam == 0 or not np.array_equal(he, (lam * e) % g.p):
        raise ess.NoSolution('[h, e] is not a nonzero multiple of e')
    eye = np.eye(g.dim, dtype=np.int64)
    ad_e, ad_h = g.ad(e), g.ad(h)
    found_u = _solve_stacked(g, [ad_e, ad_h + lam * eye], [h, g.zero()])
    if found_u is None:
        raise ess.NoSolution('h is not in the image of ad e with the required eigenvalue')
    u0, u_free = found_u
    if within is None:
        w_space = centralizer(g, [e]).space & fpl.nullspace(ad_h, g.p)
    else:
        w_space = as_space(g, within)
    rng = ess.make_rng(seed)
    ranks = []
    for _ in range(samples):
        u = (u0 + fpl.mul(rng.integers(0, g.p, size=u_free.dim), u_free.basis, g.p)) % g.p if u_free.dim else u0
        found_v = _solve_stacked(g, [ad_e, ad_h + 2 * lam * eye], [u, g.zero()])
        if found_v is None:
            ranks.append(None)
            continue
        v0, v_free = found_v
        v = (v0 + fpl.mul(rng.integers(0, g.p, size=v_free.dim), v_free.basis, g.p)) % g.p if v_free.dim else v0
        ranks.append(fpl.rank(fpl.mul(g.ad(v), w_space.basis.T, g.p), g.p) if w_space.dim else 0)
    exists = all(r is not None and r < w_space.dim for r in ranks)
    return {'unknowns': w_space.dim, 'ranks': ranks, 'lambda': lam,
            'verdict': 'fixed vector exists' if exists else 'inconclusive'}


def relative_ideal(g, l0, ge, grading, depth):
    """
    The ideal of l0 grown from g_e(tau, depth) by repeated brackets with g_e(tau, -1), then closed under ad l0.
    """
    l0_space, ge_space = as_space(g, l0), as_space(g, ge)
    top = ge_space & grading.component(depth)
    lowering = ge_space & grading.component(-1)
    seeds = invariant_closure(g, top.basis, lowering.basis) if lowering.dim else top
    return invariant_closure(g, seeds.basis, l0_space.basis)


def extend_ideal(g, l0, ideal_space, extra):
    l0_space = as_space(g, l0)
    return invariant_closure(g, extra, l0_space.basis, start=as_space(g, ideal_space))


def lift(g, s, i, rows):
    """Preimage in g of some rows of quotient(g, s, i), given in the coordinates of that quotient."""
    sub = s if isinstance(s, Subalgebra) else Subalgebra(g, as_space(g, s))
    ideal_space = as_space(g, i)
    a = sub.algebra()
    if ideal_space.dim:
        cols = a.span(sub.space.coordinates(ideal_space.basis)).complement_columns()
    else:
        cols = list(range(a.dim))
    rows = fpl.as_residues(rows, g.p).reshape(-1, len(cols))
    a_rows = np.zeros((rows.shape[0], a.dim), dtype=np.int64)
    a_rows[:, cols] = rows
    return ideal_space + g.span(fpl.mul(a_rows, sub.basis, g.p))


def nonabelian_extension(g, s, i, within=None, seed=0):
    """
    i together with the preimages of the non-abelian minimal ideals of s/i; with `within`, only those ideals whose
    preimage lies in that subspace are added.
    """
    q = quotient(g, s, i)
    module = mtx.action_module(q, generating_set(q, q.full(), seed))
    out = as_space(g, i)
    types = [t for t in mtx.irreducible_types(module, seed) if t.actions.any()]
    for m in mtx.minimal_submodules(module, types, seed=seed):
        if not q.bracket_rows(m.basis, m.basis).any():
            continue
        lifted = lift(g, s, i, m.basis)
        if within is not None and not as_space(g, within).contains(lifted):
            continue
        out = out + lifted
    logger.debug('non-abelian extension of a %d-dimensional ideal: %d', as_space(g, i).dim, out.dim)
    return out
