import itertools
import logging

import numpy as np
import sympy

import essentials as ess
import fp_linalg as fpl

"""
meataxe.py decomposes modules over GF(p) given by action matrices.

Actions multiply column vectors. A module built from a Lie algebra remembers how its coordinates sit in the algebra
(a section of rows plus the subspace quotiented out), so submodules found here can be carried back to the algebra with
GModule.ambient_subspace.

Methods:
def action_module: Module given by the adjoint action of some elements on an invariant subquotient.
def is_irreducible: Norton's irreducibility test with random words in the enveloping algebra.
def is_absolutely_irreducible: Irreducible with one-dimensional endomorphism algebra.
def hom_space: Basis of the module homomorphisms between two modules.
def endomorphism_module: End(m) acting on itself.
def is_indecomposable: Exact test that End(m) is local.
def composition_factors: Irreducible factors by recursive splitting.
def minimal_submodules: All minimal submodules, as images of homomorphisms from the irreducible types.
def submodule_bases: The whole submodule lattice.
"""

logger = logging.getLogger(__name__)

MAX_WORD_TRIES = 200
MAX_WORD_LENGTH = 6


class GModule:
    """
    p: characteristic
    dim: dimension
    actions: array of shape (k, dim, dim), one action matrix per acting element
    """

    def __init__(self, p, actions, name='', parent=None, section=None, base=None):
        actions = np.asarray(actions, dtype=np.int64) % p
        if actions.ndim != 3 or actions.shape[1] != actions.shape[2]:
            raise ess.DimensionMismatch(f'actions of shape {actions.shape}')
        self.p = p
        self.actions = actions
        self.dim = actions.shape[1]
        self.name = name
        self.parent = parent
        self.section = section
        self.base = base
        self._float = None

    def __repr__(self):
        return f'GModule({self.name or "?"}, dim={self.dim}, actions={len(self.actions)})'

    @property
    def float_actions(self):
        if self._float is None:
            self._float = self.actions.astype(np.float64)
        return self._float

    def spin(self, vectors):
        return fpl.spin(vectors, self.float_actions, self.p, self.dim)

    def spin_transposed(self, vectors):
        return fpl.spin(vectors, self.float_actions.transpose(0, 2, 1), self.p, self.dim)

    def is_invariant(self, space):
        return space.is_invariant(self.actions)

    def submodule(self, space, name=''):
        if not self.is_invariant(space):
            raise ess.NotInvariant(f'subspace of dimension {space.dim} is not a submodule of {self!r}')
        actions = np.array([space.coordinates(fpl.mul(space.basis, a.T, self.p)).T for a in self.actions])
        return GModule(self.p, actions.reshape(len(self.actions), space.dim, space.dim), name=name,
                       parent=self, section=space.basis, base=None)

    def quotient(self, space, name=''):
        if not self.is_invariant(space):
            raise ess.NotInvariant(f'subspace of dimension {space.dim} is not a submodule of {self!r}')
        cols = space.complement_columns()
        lifts = np.zeros((len(cols), self.dim), dtype=np.int64)
        lifts[np.arange(len(cols)), cols] = 1
        actions = np.array([space.quotient_coordinates(fpl.mul(lifts, a.T, self.p)).T for a in self.actions])
        return GModule(self.p, actions.reshape(len(self.actions), len(cols), len(cols)), name=name, parent=self,
                       section=lifts, base=space)

    def to_parent(self, space):
        """The subspace of the parent module (or of the algebra, for a root module) covering `space`."""
        rows = fpl.mul(space.basis, self.section, self.p) if space.dim else np.zeros((0, self.section.shape[1]))
        lifted = fpl.Subspace.from_rows(rows, self.p, self.section.shape[1])
        return lifted + self.base if self.base is not None else lifted

    def ambient_subspace(self, space):
        """Carries a subspace of this module all the way up to the algebra the module was built from."""
        module = self
        while module.section is not None:
            space = module.to_parent(space)
            module = module.parent
            if module is None:
                break
        return space

    def to_json(self):
        return {'name': self.name, 'p': self.p, 'dim': self.dim,
                'actions': [fpl.pack(a).hex() for a in self.actions]}


def action_module(g, elements, space=None, sub=None, name='', check=True):
    """
    The module space/sub under ad(x) for x in `elements`.

    space defaults to all of g and sub to 0; both must be invariant.
    """
    elements = fpl.as_residues(elements, g.p).reshape(-1, g.dim)
    space = space if space is not None else fpl.Subspace.full(g.dim, g.p)
    sub = sub if sub is not None else fpl.Subspace.zero(g.dim, g.p)
    if not space.contains(sub):
        raise ess.NotInvariant('the subspace to quotient out is not contained in the module space')
    section = fpl.Subspace.from_rows(sub.reduce(space.basis), g.p, g.dim)
    rows = section.basis
    actions = []
    for x in elements:
        images = fpl.mul(rows, g.ad(x).T, g.p)
        if not space.contains(images):
            raise ess.NotInvariant(f'space of dimension {space.dim} is not invariant under the acting elements')
        actions.append(section.coordinates(sub.reduce(images)).T)
    d = section.dim
    module = GModule(g.p, np.array(actions, dtype=np.int64).reshape(len(elements), d, d), name=name,
                     section=rows, base=sub)
    if check and len(elements) >= 2:
        _check_lie_action(g, elements, space, sub, section, module)
    logger.debug('action module %s: dim %d, %d actions', name, d, len(elements))
    return module


def _check_lie_action(g, elements, space, sub, section, module):
    for a, b in [(0, 1), (len(elements) - 1, 0)][:len(elements) - 1]:
        z = g.bracket(elements[a], elements[b])
        images = sub.reduce(fpl.mul(section.basis, g.ad(z).T, g.p))
        direct = section.coordinates(images).T
        commutator = (fpl.mul(module.actions[a], module.actions[b], g.p)
                      - fpl.mul(module.actions[b], module.actions[a], g.p)) % g.p
        if not np.array_equal(direct, commutator):
            raise ess.ConstructionError('acting elements do not define a Lie algebra action')


def dual_module(m):
    return GModule(m.p, (-m.actions.transpose(0, 2, 1)) % m.p, name=f'{m.name}*')


def direct_sum(a, b):
    if len(a.actions) != len(b.actions):
        raise ess.DimensionMismatch('modules over different acting sets')
    d = a.dim + b.dim
    actions = np.zeros((len(a.actions), d, d), dtype=np.int64)
    actions[:, :a.dim, :a.dim] = a.actions
    actions[:, a.dim:, a.dim:] = b.actions
    return GModule(a.p, actions, name=f'{a.name}+{b.name}')


# Norton's test
def _random_word(m, rng):
    p = m.p

    def combination():
        return np.remainder(np.tensordot(rng.integers(0, p, size=len(m.actions)), m.float_actions, axes=1), p)

    word = combination()
    for _ in range(int(rng.integers(0, MAX_WORD_LENGTH))):
        word = np.remainder(word @ combination() + combination(), p)
    word = word + int(rng.integers(0, p)) * np.eye(m.dim)
    return np.remainder(word, p).astype(np.int64)


def _local_minimal_polynomial(theta, v, p):
    """Coefficients (highest first) of the monic polynomial of least degree killing v."""
    d = theta.shape[0]
    space = fpl.Subspace.zero(d, p)
    krylov = []
    current = v % p
    while True:
        space, fresh = space.extend(current)
        if fresh.shape[0] == 0:
            break
        krylov.append(current)
        current = fpl.mul(theta, current, p)
    if not krylov:
        return [1]
    x, _ = fpl.solve(np.array(krylov).T, current, p)
    return [1] + [int(-c) % p for c in x[::-1]]


def _factors(coeffs, p):
    t = sympy.Symbol('t')
    _, factors = sympy.Poly.from_list(coeffs, t, modulus=p).factor_list()
    out = [[int(c) % p for c in f.all_coeffs()] for f, _ in factors]
    return sorted(out, key=len)


def evaluate_polynomial(coeffs, theta, p):
    result = np.zeros_like(theta)
    eye = np.eye(theta.shape[0], dtype=np.int64)
    for c in coeffs:
        result = (fpl.mul(result, theta, p) + c * eye) % p
    return result


def split(m, seed=None):
    """A proper nonzero submodule of m, or None when m is irreducible."""
    if m.dim <= 1:
        return None
    rng = ess.make_rng(seed)
    for attempt in range(MAX_WORD_TRIES):
        theta = _random_word(m, rng)
        v = rng.integers(0, m.p, size=m.dim)
        if not v.any():
            continue
        for f in _factors(_local_minimal_polynomial(theta, v, m.p), m.p):
            ftheta = evaluate_polynomial(f, theta, m.p)
            kernel = fpl.nullspace(ftheta, m.p)
            if kernel.dim == 0:
                continue
            sub = m.spin(kernel.basis[0])
            if sub.dim < m.dim:
                logger.debug('split %r after %d words: %d', m, attempt + 1, sub.dim)
                return sub
            dual = m.spin_transposed(fpl.nullspace(ftheta.T, m.p).basis[0])
            if dual.dim < m.dim:
                logger.debug('split %r by the transposed pass after %d words', m, attempt + 1)
                return fpl.nullspace(dual.basis, m.p)
            if kernel.dim == len(f) - 1:
                return None
    raise ess.ConstructionError(f'no decision on the irreducibility of {m!r} after {MAX_WORD_TRIES} words')


def is_irreducible(m, seed=None):
    return split(m, seed) is None


# Homomorphisms
def _word_basis(m, rng):
    """Spins seed vectors, recording for each new basis vector the (parent, action) pair that produced it."""
    space = fpl.Subspace.zero(m.dim, m.p)
    rows, records = [], []
    nseeds = 0
    unit = 0
    while space.dim < m.dim:
        seed_vec = None
        for _ in range(3):
            candidate = rng.integers(0, m.p, size=m.dim)
            if space.reduce(candidate).any():
                seed_vec = candidate
                break
        while seed_vec is None:
            candidate = np.zeros(m.dim, dtype=np.int64)
            candidate[unit] = 1
            unit += 1
            if space.reduce(candidate).any():
                seed_vec = candidate
        space, _ = space.extend(seed_vec)
        rows.append(seed_vec % m.p)
        records.append((-1, nseeds))
        nseeds += 1
        queue = len(rows) - 1
        while queue < len(rows):
            for i, a in enumerate(m.actions):
                image = fpl.mul(a, rows[queue], m.p)
                if space.reduce(image).any():
                    space, _ = space.extend(image)
                    rows.append(image)
                    records.append((queue, i))
            queue += 1
    return np.array(rows, dtype=np.int64).reshape(-1, m.dim), records, nseeds


def hom_space(s, m, seed=None):
    """Basis of Hom(s, m) as a list of dim(m) x dim(s) matrices."""
    if len(s.actions) != len(m.actions):
        raise ess.DimensionMismatch(f'{s!r} and {m!r} have different acting sets')
    p = s.p
    if s.dim == 0 or m.dim == 0:
        return []
    rng = ess.make_rng(seed)
    basis, records, nseeds = _word_basis(s, rng)
    basis_inv = fpl.inverse(basis, p)
    k = nseeds * m.dim
    images = np.zeros((s.dim, m.dim, k), dtype=np.int64)
    tree = set()
    for t, (parent, i) in enumerate(records):
        if parent < 0:
            images[t][:, i * m.dim:(i + 1) * m.dim] = np.eye(m.dim, dtype=np.int64)
        else:
            images[t] = fpl.mul(m.actions[i], images[parent], p)
            tree.add((parent, i))
    for t in range(s.dim):
        for i in range(len(s.actions)):
            if (t, i) in tree:
                continue
            coords = fpl.mul(fpl.mul(s.actions[i], basis[t], p), basis_inv, p)
            nz = np.flatnonzero(coords)
            combined = np.tensordot(coords[nz], images[nz].astype(np.float64), axes=1) if nz.size else 0
            residual = np.remainder(fpl.mul(m.actions[i], images[t], p) - combined, p).astype(np.int64)
            if not residual.any():
                continue
            kernel = fpl.nullspace(residual, p)
            k = kernel.dim
            if k == 0:
                return []
            images = fpl.mul(images.reshape(-1, images.shape[2]), kernel.basis.T, p).reshape(s.dim, m.dim, k)
    to_s = fpl.inverse(basis.T, p)
    return [fpl.mul(images[:, :, c].T, to_s, p) for c in range(images.shape[2])]


def endomorphism_dim(m, seed=None):
    return len(hom_space(m, m, seed))


def is_absolutely_irreducible(m, seed=None):
    return is_irreducible(m, seed) and endomorphism_dim(m, seed) == 1


def endomorphism_module(m, seed=None):
    """End(m) as a module over itself by left multiplication, on coordinates against the echelon basis."""
    ends = hom_space(m, m, seed)
    space = fpl.Subspace.from_rows(np.array([x.reshape(-1) for x in ends]), m.p, m.dim * m.dim)
    basis = space.basis.reshape(-1, m.dim, m.dim)
    actions = [space.coordinates(np.array([fpl.mul(a, b, m.p).reshape(-1) for b in basis])).T for a in basis]
    return GModule(m.p, np.array(actions, dtype=np.int64), name=f'End({m.name})')


def is_indecomposable(m, seed=None):
    """
    True exactly when End(m) is local. A finite-dimensional algebra is local when its regular module has a single
    maximal submodule: that is, one simple E-module S up to isomorphism, with End_E(S) of dimension dim S.
    """
    if m.dim <= 1:
        return True
    regular = endomorphism_module(m, seed)
    if regular.dim == 1:
        return True
    factors = composition_factors(regular, seed)
    top = factors[0]
    if any(not are_isomorphic(top, f, seed) for f in factors[1:]):
        logger.debug('%r: End has %d composition factors of more than one type', m, len(factors))
        return False
    return endomorphism_dim(top, seed) == top.dim


def composition_factors(m, seed=None):
    rng = ess.make_rng(seed)
    sub = split(m, rng)
    if sub is None:
        return [m]
    return composition_factors(m.submodule(sub), rng) + composition_factors(m.quotient(sub), rng)


def composition_factor_dims(m, seed=None):
    return sorted(f.dim for f in composition_factors(m, seed))


def are_isomorphic(a, b, seed=None):
    """Isomorphism test for irreducible modules."""
    return a.dim == b.dim and len(hom_space(a, b, seed)) > 0


def irreducible_types(m, seed=None):
    types = []
    for factor in composition_factors(m, seed):
        if not any(are_isomorphic(factor, t, seed) for t in types):
            types.append(factor)
    return types


def _projective_points(h, p):
    for lead in range(h):
        for tail in itertools.product(range(p), repeat=h - lead - 1):
            yield [0] * lead + [1] + list(tail)


def minimal_submodules(m, types=None, bound=None, seed=None):
    bound = bound or ess.load_settings().lattice_bound
    types = types if types is not None else irreducible_types(m, seed)
    found = {}
    for t in types:
        homs = hom_space(t, m, seed)
        h = len(homs)
        if h == 0:
            continue
        count = (m.p ** h - 1) // (m.p - 1)
        if count > bound:
            raise ess.LatticeTooLarge(f'{count} homomorphisms from a {t.dim}-dimensional irreducible into {m!r}',
                                      partial=list(found.values()))
        stack = np.array(homs, dtype=np.float64)
        for point in _projective_points(h, m.p):
            phi = np.remainder(np.tensordot(np.array(point, dtype=np.float64), stack, axes=1), m.p)
            image = fpl.Subspace.from_rows(phi.T.astype(np.int64), m.p, m.dim)
            found.setdefault(image.key(), image)
    return sorted(found.values(), key=lambda s: (s.dim, s.pivots))


def socle_component(m, t, seed=None):
    """Sum of all submodules of m isomorphic to the irreducible t."""
    homs = hom_space(t, m, seed)
    if not homs:
        return fpl.Subspace.zero(m.dim, m.p)
    return fpl.Subspace.from_rows(np.hstack(homs).T, m.p, m.dim)


def submodule_bases(m, bound=None, seed=None):
    """Every submodule of m as a Subspace, sorted by dimension."""
    bound = bound or ess.load_settings().lattice_bound
    types = irreducible_types(m, seed)
    memo = {}

    def above(base):
        key = base.key()
        if key in memo:
            return
        memo[key] = base
        if base.dim == m.dim:
            return
        quo = m.quotient(base)
        for minimal in minimal_submodules(quo, types, bound, seed):
            above(quo.to_parent(minimal))

    try:
        above(fpl.Subspace.zero(m.dim, m.p))
    except ess.LatticeTooLarge as exc:
        partial = sorted(memo.values(), key=lambda s: (s.dim, s.pivots))
        logger.warning('submodule lattice of %r is incomplete: %s', m, exc)
        raise ess.LatticeTooLarge(str(exc), partial=partial) from exc
    subs = sorted(memo.values(), key=lambda s: (s.dim, s.pivots))
    logger.info('%r has %d submodules: %s', m, len(subs), [s.dim for s in subs])
    return subs


def lattice_report(subs):
    dims = [s.dim for s in subs]
    incidence = [[i, j] for i, a in enumerate(subs) for j, b in enumerate(subs) if i != j and b.contains(a)]
    return {'dims': dims, 'incidence': incidence}
