import logging
from functools import lru_cache

import numpy as np

import essentials as ess

"""
fp_linalg.py contains the exact dense linear algebra over the prime fields GF(p) that every other module runs on.

Matrices are numpy int64 arrays holding residues in [0, p). Products are formed in float64 (exact for p <= 31 and
dimensions in the low thousands) and reduced mod p. Vectors are rows; an operator A acts on a row vector v as
v @ A.T, which is the column convention A @ v written for batches.

Subspace is the canonical form of a subspace: a reduced row-echelon basis with ascending pivots. Two Subspaces are
equal iff their bases agree entry for entry, so they can be hashed and de-duplicated.

Methods:
def rref: Reduced row-echelon form, rank and pivot columns.
def nullspace: Right nullspace {v : m v = 0} as a Subspace.
def stacked_nullspace: Nullspace of a tall system supplied in row blocks.
def solve: Particular solution plus homogeneous space, or None when inconsistent.
def spin: Smallest subspace containing some vectors and closed under some operators.
def subspace_sum, subspace_intersect: Functional forms of u + v and u & v.
def matrix_power, inverse: The usual.
"""

logger = logging.getLogger(__name__)

# Row blocks larger than this are eliminated against the running nullspace piecewise
CHUNK_ROWS = 512


@lru_cache(maxsize=None)
def inverse_table(p):
    table = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        table[x] = pow(x, p - 2, p)
    return table


def as_residues(m, p):
    return np.asarray(m, dtype=np.int64) % p


def mul(a, b, p):
    """Matrix product mod p."""
    out = np.asarray(a, dtype=np.float64) @ np.asarray(b, dtype=np.float64)
    return np.remainder(out, p).astype(np.int64)


def matrix_power(a, k, p):
    a = as_residues(a, p)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ess.DimensionMismatch(f'matrix_power needs a square matrix, got shape {a.shape}')
    result = np.eye(a.shape[0], dtype=np.int64)
    base = a
    while k > 0:
        if k & 1:
            result = mul(result, base, p)
        k >>= 1
        if k:
            base = mul(base, base, p)
    return result


def rref(m, p):
    """Returns (reduced echelon matrix of the same shape, rank, pivot columns)."""
    a = as_residues(m, p).copy()
    if a.ndim != 2:
        raise ess.DimensionMismatch(f'rref needs a matrix, got {a.ndim} dimensions')
    rows, cols = a.shape
    inv = inverse_table(p)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            a[[r, i]] = a[[i, r]]
        if a[r, c] != 1:
            a[r, c:] = (a[r, c:] * inv[a[r, c]]) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit, c:] = (a[hit, c:] - np.outer(col[hit], a[r, c:])) % p
        pivots.append(c)
        r += 1
    return a, r, pivots


def rank(m, p):
    return rref(m, p)[1]


def nullspace(m, p):
    m = as_residues(m, p)
    if m.ndim != 2:
        raise ess.DimensionMismatch(f'nullspace needs a matrix, got {m.ndim} dimensions')
    n = m.shape[1]
    reduced, r, pivots = rref(m, p)
    taken = set(pivots)
    free = [j for j in range(n) if j not in taken]
    basis = np.zeros((len(free), n), dtype=np.int64)
    if free:
        basis[np.arange(len(free)), free] = 1
        if r:
            basis[:, pivots] = (-reduced[:r][:, free].T) % p
    return Subspace.from_rows(basis, p, n)


def stacked_nullspace(blocks, ncols, p):
    """Nullspace of the vertical stack of `blocks`, shrinking a running basis block by block."""
    current = Subspace.full(ncols, p)
    for block in blocks:
        block = as_residues(block, p)
        if block.size == 0:
            continue
        if block.ndim != 2 or block.shape[1] != ncols:
            raise ess.DimensionMismatch(f'block of shape {block.shape} in a system with {ncols} columns')
        for start in range(0, block.shape[0], CHUNK_ROWS):
            if current.dim == 0:
                return current
            image = mul(block[start:start + CHUNK_ROWS], current.basis.T, p)
            if not image.any():
                continue
            kernel = nullspace(image, p)
            current = Subspace.from_rows(mul(kernel.basis, current.basis, p), p, ncols)
    return current


def solve(a, b, p):
    """Solves a x = b. Returns (particular, homogeneous Subspace) or None."""
    a = as_residues(a, p)
    b = as_residues(b, p).reshape(-1)
    if a.shape[0] != b.shape[0]:
        raise ess.DimensionMismatch(f'{a.shape[0]} equations but right-hand side of length {b.shape[0]}')
    n = a.shape[1]
    reduced, r, pivots = rref(np.hstack([a, b[:, None]]), p)
    if pivots and pivots[-1] == n:
        return None
    x = np.zeros(n, dtype=np.int64)
    if r:
        x[pivots] = reduced[:r, n]
    return x, nullspace(a, p)


def inverse(a, p):
    a = as_residues(a, p)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ess.DimensionMismatch(f'inverse needs a square matrix, got shape {a.shape}')
    reduced, r, _ = rref(np.hstack([a, np.eye(n, dtype=np.int64)]), p)
    if r < n or not np.array_equal(reduced[:, :n], np.eye(n, dtype=np.int64)):
        raise ess.NoSolution('matrix is singular')
    return reduced[:, n:]


def pack(a):
    return np.ascontiguousarray(a, dtype=np.uint16).tobytes()


class Subspace:
    """A subspace of GF(p)^n held as a reduced echelon basis with ascending pivots."""

    __slots__ = ('p', 'ambient_dim', 'basis', 'pivots', '_key')

    def __init__(self, basis, pivots, p, ambient_dim):
        self.p = p
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)
        self.basis.setflags(write=False)
        self._key = None

    @classmethod
    def from_rows(cls, rows, p, n=None):
        rows = as_residues(rows, p)
        if rows.ndim == 1:
            rows = rows.reshape(1, -1) if rows.size else rows.reshape(0, n or 0)
        if n is None:
            n = rows.shape[1]
        if rows.shape[1] != n:
            raise ess.DimensionMismatch(f'rows of length {rows.shape[1]} in ambient dimension {n}')
        if rows.shape[0] == 0:
            return cls.zero(n, p)
        reduced, r, pivots = rref(rows, p)
        return cls(reduced[:r].copy(), pivots, p, n)

    @classmethod
    def zero(cls, n, p):
        return cls(np.zeros((0, n), dtype=np.int64), (), p, n)

    @classmethod
    def full(cls, n, p):
        return cls(np.eye(n, dtype=np.int64), range(n), p, n)

    @property
    def dim(self):
        return len(self.pivots)

    def __len__(self):
        return self.dim

    def __repr__(self):
        return f'Subspace(dim={self.dim}, ambient={self.ambient_dim}, p={self.p})'

    def key(self):
        if self._key is None:
            self._key = (self.p, self.ambient_dim, self.pivots, pack(self.basis))
        return self._key

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def _check(self, other):
        if isinstance(other, Subspace):
            if other.ambient_dim != self.ambient_dim or other.p != self.p:
                raise ess.DimensionMismatch(f'{other!r} and {self!r} live in different spaces')
        elif np.shape(other)[-1] != self.ambient_dim:
            raise ess.DimensionMismatch(f'vector of length {np.shape(other)[-1]} in ambient dimension '
                                        f'{self.ambient_dim}')

    def reduce(self, vectors):
        """Remainder of each row modulo the subspace; zero exactly on members."""
        self._check(vectors)
        v = as_residues(vectors, self.p)
        if self.dim == 0:
            return v.copy()
        single = v.ndim == 1
        v2 = v.reshape(1, -1) if single else v
        out = (v2 - mul(v2[:, list(self.pivots)], self.basis, self.p)) % self.p
        return out[0] if single else out

    def contains(self, x):
        if isinstance(x, Subspace):
            self._check(x)
            return not self.reduce(x.basis).any()
        return not self.reduce(x).any()

    def __contains__(self, x):
        return self.contains(x)

    def __le__(self, other):
        return other.contains(self)

    def coordinates(self, vectors):
        """Coefficients of members against the stored basis."""
        v = as_residues(vectors, self.p)
        return v[..., list(self.pivots)].copy()

    def complement_columns(self):
        piv = set(self.pivots)
        return [j for j in range(self.ambient_dim) if j not in piv]

    def quotient_coordinates(self, vectors):
        return self.reduce(vectors)[..., self.complement_columns()]

    def extend(self, rows):
        """Returns (larger Subspace, new independent rows); the new rows span the increment modulo self."""
        rows = as_residues(rows, self.p).reshape(-1, self.ambient_dim)
        if rows.shape[0] == 0:
            return self, rows
        if rows.shape[0] > CHUNK_ROWS:
            space, pieces = self, []
            for start in range(0, rows.shape[0], CHUNK_ROWS):
                space, fresh = space.extend(rows[start:start + CHUNK_ROWS])
                pieces.append(fresh)
            return space, np.vstack(pieces)
        rest = self.reduce(rows)
        rest = rest[rest.any(axis=1)]
        if rest.shape[0] == 0:
            return self, rest
        fresh, r, new_pivots = rref(rest, self.p)
        fresh = fresh[:r]
        old = self.basis
        if self.dim:
            old = (old - mul(old[:, new_pivots], fresh, self.p)) % self.p
        merged = np.vstack([old, fresh])
        pivots = list(self.pivots) + list(new_pivots)
        order = np.argsort(pivots, kind='stable')
        return Subspace(merged[order], [pivots[i] for i in order], self.p, self.ambient_dim), fresh

    def __add__(self, other):
        self._check(other)
        return self.extend(other.basis)[0]

    def intersect(self, other):
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim, self.p)
        if self.dim > other.dim:
            return other.intersect(self)
        rest = other.reduce(self.basis)
        combos = nullspace(rest.T, self.p)
        return Subspace.from_rows(mul(combos.basis, self.basis, self.p), self.p, self.ambient_dim)

    def __and__(self, other):
        return self.intersect(other)

    def image(self, operator):
        """Image of the subspace under the column-convention operator."""
        if self.dim == 0:
            return self
        return Subspace.from_rows(mul(self.basis, np.asarray(operator).T, self.p), self.p, self.ambient_dim)

    def is_invariant(self, operators):
        for op in operators:
            if self.dim and self.reduce(mul(self.basis, np.asarray(op).T, self.p)).any():
                return False
        return True

    def to_json(self):
        return {'p': self.p, 'ambient_dim': self.ambient_dim, 'dim': self.dim, 'pivots': list(self.pivots),
                'basis': self.basis.tolist()}


def span(vectors, p, n=None):
    return Subspace.from_rows(vectors, p, n)


def subspace_sum(u, v):
    return u + v


def subspace_intersect(u, v):
    return u & v


def spin(vectors, operators, p, n=None, start=None):
    """Smallest subspace containing `vectors` (and `start`) and closed under every operator.

    `operators` may be a list of square matrices or a 3-d stack; they act in the column convention.
    `start` must already be stable under the operators: only the new vectors are spun.
    """
    vectors = as_residues(vectors, p)
    if n is None:
        n = vectors.shape[-1] if vectors.size else np.shape(operators)[-1]
    vectors = vectors.reshape(-1, n)
    if start is not None and not start.is_invariant(operators):
        raise ess.NotInvariant(f'spin start of dimension {start.dim} is not stable under the operators')
    space = start if start is not None else Subspace.zero(n, p)
    space, frontier = space.extend(vectors)
    ops = [np.asarray(op, dtype=np.float64).T for op in operators]
    layer = 0
    while frontier.shape[0] and space.dim < n:
        front = frontier.astype(np.float64)
        pending = []
        size = 0
        added = []
        for op in ops:
            pending.append(np.remainder(front @ op, p).astype(np.int64))
            size += front.shape[0]
            if size >= CHUNK_ROWS:
                space, new = space.extend(np.vstack(pending))
                added.append(new)
                pending, size = [], 0
        if pending:
            space, new = space.extend(np.vstack(pending))
            added.append(new)
        frontier = np.vstack(added) if added else np.zeros((0, n), dtype=np.int64)
        layer += 1
        logger.debug('spin layer %d: dim %d', layer, space.dim)
    return space
