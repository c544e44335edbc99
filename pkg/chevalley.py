import logging
from functools import lru_cache

import numpy as np
from scipy import sparse

import essentials as ess
import fp_linalg as fpl
import root_systems as rsys
import subalgebras as sub

"""
chevalley.py contains the structure-constant Lie algebra used everywhere in the workbench, and builds the exceptional
Lie algebras over GF(p) from a Chevalley basis.

A LieAlgebra stores its structure constants c_ij^k ([b_i, b_j] = sum_k c_ij^k b_k) as a sparse dim x dim^2 tensor, row
i and column j*dim + k. Elements are residue vectors of length dim; ad(x) is a column-convention matrix, so
ad(x) @ y and y @ ad(x).T are both the coordinates of [x, y].

Chevalley bases of the simply-laced types come from an integral cocycle on the root lattice; G2 and F4 are folded out
of D4 and E6 by their diagram automorphisms. The basis order is e_beta (positive roots in root-system order), then
h_1 .. h_l, then f_beta.

Methods:
def chevalley_algebra: Exceptional Lie algebra of a root system over GF(p).
def classical_algebra: sl(n) or psl(n) over GF(p).
def center, ideal_generated: The centre and the ideal generated by some elements.
def grading_from_diagram: Grading by a weighted Dynkin diagram.
def p_power, p_closure: The p-map x -> x^[p] and the p-closure of a subalgebra.
def is_d_balanced: Balanced toral element test.
"""

logger = logging.getLogger(__name__)

# Rows per batch when forming brackets in bulk
BRACKET_BATCH = 64
JACOBI_SAMPLES = 40
# Random vectors imposed before solve_adjoint falls back to basis vectors
ADJOINT_SAMPLES = 2


class Grading:
    """
    weights: integer degree of every basis vector
    diagram: the weighted Dynkin diagram the grading came from, if any
    """

    def __init__(self, weights, p, diagram=None):
        self.weights = np.asarray(weights, dtype=np.int64)
        self.p = p
        self.diagram = None if diagram is None else [int(a) for a in diagram]

    def __repr__(self):
        return f'Grading({self.dims()})'

    def weight_of(self, index):
        return int(self.weights[index])

    def degrees(self):
        return sorted(set(int(w) for w in self.weights))

    def indices(self, k):
        return np.flatnonzero(self.weights == k)

    def dims(self):
        return {k: int(np.count_nonzero(self.weights == k)) for k in self.degrees()}

    def component(self, k):
        idx = self.indices(k)
        n = len(self.weights)
        basis = np.zeros((len(idx), n), dtype=np.int64)
        basis[np.arange(len(idx)), idx] = 1
        return fpl.Subspace(basis, idx, self.p, n)

    def part(self, vectors, k):
        """The degree-k part of each vector."""
        out = np.array(vectors, dtype=np.int64, copy=True)
        out[..., self.weights != k] = 0
        return out

    def degree_of(self, x):
        """Degree of a nonzero homogeneous element, None otherwise."""
        support = set(int(w) for w in self.weights[np.flatnonzero(np.asarray(x) % self.p)])
        return support.pop() if len(support) == 1 else None

    def is_graded(self, space):
        """True when the subspace is the sum of its homogeneous parts."""
        for k in self.degrees():
            if not space.contains(self.part(space.basis, k)):
                return False
        return True

    def depth(self):
        return -min(self.degrees())

    def height(self):
        return max(self.degrees())


class LieAlgebra:
    """
    p: characteristic
    dim: dimension
    labels: basis names
    tensor: sparse structure constants, tensor[i, j*dim + k] = c_ij^k
    grading: optional Grading
    root_system, root_coeffs: set on Chevalley algebras (signed root of every basis vector, 0 on the Cartan part)
    meta: construction parameters, recorded in the JSON dump
    """

    def __init__(self, p, tensor, labels=None, name='', grading=None, meta=None):
        self.p = p
        self.dim = tensor.shape[0]
        if tensor.shape[1] != self.dim * self.dim:
            raise ess.DimensionMismatch(f'structure tensor of shape {tensor.shape}')
        self.tensor = tensor.tocsr()
        self.labels = list(labels) if labels is not None else [f'x{i + 1}' for i in range(self.dim)]
        self.name = name
        self.grading = grading
        self.meta = dict(meta or {})
        self.root_system = None
        self.root_coeffs = None
        self._ad_stack = None
        self._center = None
        self._tensor_t = None

    def __repr__(self):
        return f'LieAlgebra({self.name or "?"}, dim={self.dim}, p={self.p})'

    @classmethod
    def from_entries(cls, p, dim, entries, **kwargs):
        """Builds the algebra from (i, j, k, c) quadruples with i < j; antisymmetry is filled in."""
        entries = np.asarray(list(entries), dtype=np.int64).reshape(-1, 4)
        i, j, k, c = entries.T
        c = c % p
        keep = c != 0
        i, j, k, c = i[keep], j[keep], k[keep], c[keep]
        if np.any(i >= j):
            raise ess.ConstructionError('structure constants must be listed with i < j')
        rows = np.concatenate([i, j])
        cols = np.concatenate([j * dim + k, i * dim + k])
        data = np.concatenate([c, (-c) % p])
        tensor = sparse.coo_matrix((data, (rows, cols)), shape=(dim, dim * dim)).tocsr()
        tensor.sum_duplicates()
        tensor.data %= p
        tensor.eliminate_zeros()
        return cls(p, tensor, **kwargs)

    @classmethod
    def from_table(cls, p, table, **kwargs):
        """Builds the algebra from a dense (dim, dim, dim) array table[i, j, k] = c_ij^k."""
        table = np.asarray(table, dtype=np.int64) % p
        dim = table.shape[0]
        if table.shape != (dim, dim, dim):
            raise ess.DimensionMismatch(f'structure table of shape {table.shape}')
        i, j, k = np.nonzero(table)
        tensor = sparse.csr_matrix((table[i, j, k], (i, j * dim + k)), shape=(dim, dim * dim))
        return cls(p, tensor, **kwargs)

    # Elements
    def zero(self):
        return np.zeros(self.dim, dtype=np.int64)

    def basis_vector(self, i):
        v = self.zero()
        v[i] = 1
        return v

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise ess.UnknownType(f'{self.name} has no basis element {label!r}') from None

    def vector(self, terms):
        """Element from a mapping label (or index) -> coefficient."""
        v = self.zero()
        for key, coeff in dict(terms).items():
            i = key if isinstance(key, (int, np.integer)) else self.index(key)
            v[i] = (v[i] + coeff) % self.p
        return v

    def root_index(self, coeffs):
        """Basis index of e_beta (positive beta) or f_{-beta} (negative beta)."""
        if self.root_system is None:
            raise ess.UnknownType(f'{self.name} carries no root system')
        key = tuple(int(c) for c in coeffs)
        rs = self.root_system
        if key in rs.index:
            return rs.index[key]
        neg = tuple(-c for c in key)
        if neg in rs.index:
            return rs.num_positive + rs.rank + rs.index[neg]
        raise ess.UnknownType(f'{key} is not a root of {rs.type}')

    def root_vector(self, coeffs):
        return self.basis_vector(self.root_index(coeffs))

    def _check(self, x):
        if np.shape(x)[-1] != self.dim:
            raise ess.DimensionMismatch(f'element of length {np.shape(x)[-1]} in {self!r}')

    # Brackets
    def ad(self, x):
        """Adjoint matrix of x in the column convention."""
        self._check(x)
        x = np.asarray(x, dtype=np.int64) % self.p
        flat = self.tensor.T @ x
        return (np.asarray(flat).reshape(self.dim, self.dim).T) % self.p

    def bracket(self, x, y):
        self._check(x)
        self._check(y)
        return fpl.mul(np.asarray(y), self.ad(x).T, self.p)

    @property
    def ad_stack(self):
        """All adjoint matrices of basis vectors, stack[i] = ad(b_i)."""
        if self._ad_stack is None:
            n = self.dim
            coo = self.tensor.tocoo()
            stack = np.zeros((n, n, n), dtype=np.uint8)
            stack[coo.row, coo.col % n, coo.col // n] = coo.data
            stack.setflags(write=False)
            self._ad_stack = stack
        return self._ad_stack

    def brackets(self, xs, ys):
        """All brackets [x, y] for rows x of xs and y of ys, as an array of shape (len(xs), len(ys), dim)."""
        xs = fpl.as_residues(xs, self.p).reshape(-1, self.dim)
        ys = fpl.as_residues(ys, self.p).reshape(-1, self.dim).astype(np.float64)
        n = self.dim
        out = np.zeros((xs.shape[0], ys.shape[0], n), dtype=np.int64)
        if self._tensor_t is None:
            self._tensor_t = self.tensor.T.tocsr()
        for start in range(0, xs.shape[0], BRACKET_BATCH):
            block = xs[start:start + BRACKET_BATCH]
            flat = np.asarray(self._tensor_t @ block.T) % self.p
            a = block.shape[0]
            mixed = ys @ flat.reshape(n, n * a).astype(np.float64)
            out[start:start + a] = np.remainder(mixed.reshape(-1, n, a), self.p).astype(np.int64).transpose(2, 0, 1)
        return out

    def bracket_rows(self, xs, ys):
        return self.brackets(xs, ys).reshape(-1, self.dim)

    def jacobi_residual(self, samples=100, seed=None):
        """Number of random triples on which the Jacobi identity fails."""
        rng = ess.make_rng(seed)
        x, y, z = (rng.integers(0, self.p, size=(samples, self.dim)) for _ in range(3))
        failures = 0
        for a, b, c in zip(x, y, z):
            total = (self.bracket(a, self.bracket(b, c)) + self.bracket(b, self.bracket(c, a))
                     + self.bracket(c, self.bracket(a, b))) % self.p
            failures += int(total.any())
        return failures

    def check_jacobi(self, samples=JACOBI_SAMPLES, seed=0):
        failures = self.jacobi_residual(samples, seed)
        if failures:
            raise ess.ConstructionError(f'Jacobi identity fails on {failures}/{samples} random triples in {self!r}')

    # Subspaces
    def center(self):
        if self._center is None:
            if self._tensor_t is None:
                self._tensor_t = self.tensor.T.tocsr()
            t = self._tensor_t
            nnz = np.flatnonzero(t.getnnz(axis=1))
            blocks = (t[nnz[s:s + fpl.CHUNK_ROWS]].toarray() for s in range(0, len(nnz), fpl.CHUNK_ROWS))
            self._center = fpl.stacked_nullspace(blocks, self.dim, self.p)
        return self._center

    def full(self):
        return fpl.Subspace.full(self.dim, self.p)

    def span(self, vectors):
        return fpl.Subspace.from_rows(vectors, self.p, self.dim)

    def is_closed(self, space):
        if space.dim == 0:
            return True
        return not space.reduce(self.bracket_rows(space.basis, space.basis)).any()

    def is_ideal(self, space):
        if space.dim == 0:
            return True
        return not space.reduce(self.bracket_rows(space.basis, np.eye(self.dim, dtype=np.int64))).any()

    def restrict(self, space, name=''):
        """The subalgebra on `space` as an algebra in its own right, coordinates taken at the pivot columns."""
        if space.dim == 0:
            raise ess.DimensionMismatch('cannot restrict to the zero subspace')
        prods = self.brackets(space.basis, space.basis)
        if space.reduce(prods.reshape(-1, self.dim)).any():
            raise ess.NotInvariant(f'subspace of dimension {space.dim} is not closed under the bracket')
        table = space.coordinates(prods)
        labels = None
        if np.all(np.count_nonzero(space.basis, axis=1) == 1) and np.all(space.basis.sum(axis=1) == 1):
            labels = [self.labels[i] for i in space.pivots]
        grading = None
        if self.grading is not None:
            degrees = [self.grading.degree_of(row) for row in space.basis]
            if all(d is not None for d in degrees):
                grading = Grading(degrees, self.p)
        sub = LieAlgebra.from_table(self.p, table, labels=labels, name=name or f'sub({self.name})', grading=grading,
                                    meta={'parent': self.name, 'dim': space.dim})
        sub.meta['embedding'] = space
        return sub

    def quotient(self, ideal, name=''):
        """g/ideal, coordinates at the non-pivot columns of the ideal's echelon basis."""
        if ideal.ambient_dim != self.dim:
            raise ess.DimensionMismatch(f'{ideal!r} does not live in {self!r}')
        if not self.is_ideal(ideal):
            raise ess.NotInvariant(f'subspace of dimension {ideal.dim} is not an ideal of {self!r}')
        cols = ideal.complement_columns()
        if ideal.dim == 0:
            return self
        lifts = np.zeros((len(cols), self.dim), dtype=np.int64)
        lifts[np.arange(len(cols)), cols] = 1
        prods = self.brackets(lifts, lifts)
        table = ideal.quotient_coordinates(prods.reshape(-1, self.dim)).reshape(len(cols), len(cols), len(cols))
        grading = None
        if self.grading is not None and self.grading.is_graded(ideal):
            grading = Grading(self.grading.weights[cols], self.p)
        quo = LieAlgebra.from_table(self.p, table, labels=[self.labels[c] for c in cols],
                                    name=name or f'{self.name}/I{ideal.dim}', grading=grading,
                                    meta={'parent': self.name, 'ideal_dim': ideal.dim})
        quo.meta['section'] = cols
        return quo

    def to_json(self):
        coo = self.tensor.tocoo()
        j, k = np.divmod(coo.col, self.dim)
        keep = coo.row < j
        sc = sorted(zip(coo.row[keep].tolist(), j[keep].tolist(), k[keep].tolist(), coo.data[keep].tolist()))
        out = {'name': self.name, 'p': self.p, 'dim': self.dim, 'labels': self.labels,
               'sc': [list(t) for t in sc], 'center_basis': self.center().basis.tolist(),
               'meta': {key: value for key, value in self.meta.items() if isinstance(value, (int, str, list))}}
        if self.grading is not None:
            out['grading'] = self.grading.weights.tolist()
        return out


# Chevalley bases

# Orientation of the Dynkin diagram used by the root-lattice cocycle (Bourbaki numbering, 0-based)
ORIENTATIONS = {
    'D4': [(1, 0), (1, 2), (1, 3)],
    'E6': [(3, 2), (2, 0), (3, 4), (4, 5), (3, 1)],
}

# Folded type -> (parent, columns of the folding matrix, orbits of the parent nodes making each target h_i)
FOLDINGS = {
    'G2': ('D4', [[0, 2, 3], [1]], [[0, 2, 3], [1]]),
    'F4': ('E6', [[1], [3], [2, 4], [0, 5]], [[1], [3], [2, 4], [0, 5]]),
}


def _orientation(rs):
    if rs.type in ORIENTATIONS:
        return ORIENTATIONS[rs.type]
    # E7 and E8: every edge points to the larger Bourbaki index
    return [(i, j) for i in range(rs.rank) for j in range(i + 1, rs.rank) if rs.cartan[i, j]]


def _simply_laced_constants(rs):
    """Integral structure constants {(u, v): {w: c}} (u < v) of the e/h/f basis of a simply-laced type."""
    N, l = rs.num_positive, rs.rank
    M = np.eye(l, dtype=np.int64)
    for i, j in _orientation(rs):
        M[i, j] = 1
    roots = np.vstack([rs.positive, np.zeros((l, l), dtype=np.int64), -rs.positive])
    lookup = {}
    for t, i in rs.index.items():
        lookup[t] = (i, 1)
        lookup[tuple(-c for c in t)] = (N + l + i, -1)
    sign = np.array([1] * N + [1] * l + [-1] * N)
    n = 2 * N + l
    out = {}
    for u in range(n):
        for v in range(u + 1, n):
            u_root, v_root = u < N or u >= N + l, v < N or v >= N + l
            if u_root and v_root:
                a, b = roots[u], roots[v]
                s = a + b
                if not s.any():
                    # [E_a, E_-a] = -a^vee
                    coeff = -sign[u] * sign[v]
                    out[(u, v)] = {N + i: int(coeff * a[i]) for i in range(l) if a[i]}
                elif tuple(int(c) for c in s) in lookup:
                    w, dw = lookup[tuple(int(c) for c in s)]
                    eps = -1 if int(a @ M @ b) % 2 else 1
                    out[(u, v)] = {w: int(sign[u] * sign[v] * eps * dw)}
            elif u_root != v_root:
                h, r = (u, v) if not u_root else (v, u)
                value = int(roots[r] @ rs.cartan[:, h - N])
                if value:
                    # [h, r] = value r; flip when the root comes first
                    out[(u, v)] = {r: value if h == u else -value}
    return out


def _fold(target, parent_constants):
    parent_type, columns, orbits = FOLDINGS[target.type]
    parent = rsys.build(parent_type)
    F = np.zeros((parent.rank, target.rank), dtype=np.int64)
    for t, cols in enumerate(columns):
        F[cols, t] = 1
    Np, lp = parent.num_positive, parent.rank
    N, l = target.num_positive, target.rank
    n = 2 * N + l
    # target basis vectors as sparse integer vectors over the parent basis
    images = [dict() for _ in range(n)]
    folded = parent.positive @ F
    for gi, beta in enumerate(folded):
        t = target.index[tuple(int(c) for c in beta)]
        images[t][gi] = 1
        images[N + l + t][Np + lp + gi] = 1
    for t, orbit in enumerate(orbits):
        for j in orbit:
            images[N + t][Np + j] = 1
    owner = {}
    for t, image in enumerate(images):
        for u in image:
            owner[u] = t

    def parent_bracket(x, y):
        out = {}
        for u, a in x.items():
            for v, b in y.items():
                if u == v:
                    continue
                key, s = ((u, v), 1) if u < v else ((v, u), -1)
                for w, c in parent_constants.get(key, {}).items():
                    out[w] = out.get(w, 0) + s * a * b * c
        return {w: c for w, c in out.items() if c}

    constants = {}
    for s in range(n):
        for t in range(s + 1, n):
            result = parent_bracket(images[s], images[t])
            coeffs = {}
            for w, c in result.items():
                k = owner[w]
                if k in coeffs and coeffs[k] != c:
                    raise ess.ConstructionError(f'folding of {parent_type} onto {target.type} is not closed')
                coeffs[k] = c
            for k, c in coeffs.items():
                if any(result.get(w, 0) != c for w in images[k]):
                    raise ess.ConstructionError(f'folding of {parent_type} onto {target.type} is not closed')
            if coeffs:
                constants[(s, t)] = coeffs
    return constants


@lru_cache(maxsize=None)
def _integral_constants(type_, signs):
    rs = rsys.build(type_)
    if type_ in FOLDINGS:
        constants = _fold(rs, _simply_laced_constants(rsys.build(FOLDINGS[type_][0])))
    else:
        constants = _simply_laced_constants(rs)
    if signs is not None:
        s = ess.make_rng(signs).choice([-1, 1], size=rs.num_positive)
        d = np.concatenate([s, np.ones(rs.rank, dtype=np.int64), s])
        constants = {(u, v): {w: int(d[u] * d[v] * d[w] * c) for w, c in terms.items()}
                     for (u, v), terms in constants.items()}
    return constants


def chevalley_labels(rs):
    positive = [rs.label(beta) for beta in rs.positive]
    return ([f'e_{b}' for b in positive] + [f'h_{i + 1}' for i in range(rs.rank)] + [f'f_{b}' for b in positive])


def chevalley_algebra(rs, p, signs=None, check=True):
    """
    Lie algebra of type rs over GF(p) on a Chevalley basis.

    signs: seed of a random sign change e_beta -> s_beta e_beta, f_beta -> s_beta f_beta (None keeps the standard
    basis)
    """
    p = ess.check_prime(p)
    if isinstance(rs, str):
        rs = rsys.build(rs)
    if rs.type not in rsys.RANKS:
        raise ess.UnknownType(f'no Chevalley construction for {rs.type}')
    constants = _integral_constants(rs.type, signs)
    entries = [(u, v, w, c) for (u, v), terms in constants.items() for w, c in terms.items()]
    n = rs.dim
    g = LieAlgebra.from_entries(p, n, entries, labels=chevalley_labels(rs), name=f'{rs.type}/GF({p})',
                                meta={'type': rs.type, 'rank': rs.rank, 'p': p})
    g.root_system = rs
    g.root_coeffs = np.vstack([rs.positive, np.zeros((rs.rank, rs.rank), dtype=np.int64), -rs.positive])
    if check:
        g.check_jacobi()
    logger.info('built %s of dimension %d', g.name, g.dim)
    return g


def cartan_element(g, coeffs):
    """sum_i c_i h_i."""
    N = g.root_system.num_positive
    v = g.zero()
    v[N:N + g.root_system.rank] = np.asarray(coeffs, dtype=np.int64) % g.p
    return v


def classical_algebra(kind, n, p):
    """sl(n) on the basis E_ij (i != j) followed by H_i = E_ii - E_{i+1,i+1}; psl(n) is sl(n) modulo its centre."""
    p = ess.check_prime(p)
    if kind not in ('sl', 'psl') or n < 2:
        raise ess.ConstructionError(f'unsupported classical algebra {kind}({n})')
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    mats = []
    for i, j in pairs:
        m = np.zeros((n, n), dtype=np.int64)
        m[i, j] = 1
        mats.append(m)
    for i in range(n - 1):
        m = np.zeros((n, n), dtype=np.int64)
        m[i, i], m[i + 1, i + 1] = 1, -1
        mats.append(m)
    labels = [f'E{i + 1}{j + 1}' for i, j in pairs] + [f'H{i + 1}' for i in range(n - 1)]

    def express(m):
        coords = [m[i, j] for i, j in pairs]
        diag = np.cumsum(np.diag(m))[:n - 1]
        return np.array(coords + list(diag), dtype=np.int64)

    dim = len(mats)
    table = np.zeros((dim, dim, dim), dtype=np.int64)
    for a in range(dim):
        for b in range(dim):
            table[a, b] = express(mats[a] @ mats[b] - mats[b] @ mats[a])
    g = LieAlgebra.from_table(p, table, labels=labels, name=f'sl({n})/GF({p})', meta={'family': 'sl', 'n': n})
    if kind == 'psl':
        z = g.center()
        if z.dim:
            g = g.quotient(z, name=f'psl({n})/GF({p})')
            g.meta.update({'family': 'psl', 'n': n})
    return g


def center(g):
    return g.center()


def adjoint_matrix(g, x):
    return g.ad(x)


def ideal_generated(g, seeds):
    return sub.ideal(g, seeds)


def grading_from_diagram(g, diagram):
    if g.root_coeffs is None:
        raise ess.UnknownType(f'{g.name} is not a Chevalley algebra')
    diagram = np.asarray(diagram, dtype=np.int64)
    if diagram.shape != (g.root_system.rank,):
        raise ess.DimensionMismatch(f'diagram {diagram.tolist()} for rank {g.root_system.rank}')
    return Grading(g.root_coeffs @ diagram, g.p, diagram)


def solve_adjoint(g, target, seed=0):
    """
    The element y with ad(y) = target, normalized to vanish at the pivot coordinates of the centre.

    [y, v] = target v is imposed for a few random v. While two solutions still differ by a non-central h, a basis
    vector b with [h, b] != 0 is added to the system, so the solutions end up unique modulo the centre. The full
    identity is checked at the end.
    """
    target = fpl.as_residues(target, g.p)
    z = g.center()
    rng = ess.make_rng(seed)
    vectors = [rng.integers(0, g.p, size=g.dim) for _ in range(ADJOINT_SAMPLES)]
    while True:
        lhs = np.vstack([(-g.ad(v)) % g.p for v in vectors])
        rhs = np.concatenate([fpl.mul(target, v, g.p) for v in vectors])
        found = fpl.solve(lhs, rhs, g.p)
        if found is None:
            raise ess.NotRestrictable(f'no y in {g.name} with ad(y) equal to the given matrix')
        y, homogeneous = found
        loose = [h for h in homogeneous.basis if not z.contains(h)]
        if not loose:
            break
        column = int(np.flatnonzero(g.ad(loose[0]).any(axis=0))[0])
        vectors.append(g.basis_vector(column))
        logger.debug('solve_adjoint: %d undetermined directions, adding basis vector %d', len(loose), column)
    if z.dim:
        y = z.reduce(y)
    if not np.array_equal(g.ad(y), target):
        raise ess.NotRestrictable(f'no y in {g.name} with ad(y) equal to the given matrix')
    return y


def p_power(g, x):
    return solve_adjoint(g, fpl.matrix_power(g.ad(x), g.p, g.p))


def p_closure(g, space):
    current = sub.generate(g, space.basis if isinstance(space, fpl.Subspace) else space).space
    while True:
        powers = [p_power(g, x) for x in current.basis]
        bigger, fresh = current.extend(np.array(powers).reshape(-1, g.dim))
        if fresh.shape[0] == 0:
            return current
        current = sub.generate(g, bigger.basis).space
        logger.debug('p-closure grew to %d', current.dim)


def is_toral(g, h):
    a = g.ad(h)
    return np.array_equal(fpl.matrix_power(a, g.p, g.p), a)


def eigenspace_dims(g, h):
    a = g.ad(h)
    eye = np.eye(g.dim, dtype=np.int64)
    return [g.dim - fpl.rank((a - lam * eye) % g.p, g.p) for lam in range(1, g.p)]


def is_d_balanced(g, h, d):
    if not is_toral(g, h):
        raise ess.NotToral('ad h is not diagonalizable over the prime field')
    dims = eigenspace_dims(g, h)
    return len(set(dims)) == 1 and dims[0] % d == 0
