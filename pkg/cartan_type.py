import logging
from functools import lru_cache
from itertools import combinations, product
from math import comb

import numpy as np

import chevalley as chev
import essentials as ess
import fp_linalg as fpl
import subalgebras as sub

"""
cartan_type.py builds the Lie algebras of Cartan type and the exotic characteristic 3 and 5 algebras over GF(p) as
structure-constant LieAlgebra objects carrying their standard gradings.

Everything is written over the divided power algebra O(m; n). A polynomial is a dict exponent tuple -> residue, a
vector field (or one-form) is a tuple of m polynomials. Ambient algebras are assembled on monomial bases and the simple
algebras are cut out of them as kernels of a divergence, generated subalgebras or derived subalgebras.

Basis keys:
('d', a, i): x^(a) d_i in W
('o', a): x^(a) in O
('w', a, i): x^(a) dx_i in the one-forms
('t', a, i): x^(a) d~_i in the twisted copy of W

Methods:
def cartan_algebra: W, S, H, K and their derived, CS and CH.
def exotic_algebra: Ermolaev, Melikyan and the Skryabin algebras.
def divergence, d_h, d_k: div(D), D_H(f), D_K(f).
def tensor_envelope: S (x) O(m; n) and the dimension of its derivation algebra.
def hamiltonian_special_subalgebra: The characteristic 2 simple subalgebras of H(6; 1) and H(8; 1).
def witt_basis: W(1; n) on the basis e_i = x^(i+1) d.
def derived_algebra, is_restricted, p_envelope_dim
"""

logger = logging.getLogger(__name__)

FAMILIES = ('W', 'S', 'S1', 'H', 'H2', 'K', 'K1', 'CS', 'CH')
EXOTIC_PRIMES = {'Er': 3, 'Melikyan': 5, 'Skr1': 3, 'Skr2': 3, 'Skr3': 3}
EXOTIC_VARIABLES = {'Er': 2, 'Melikyan': 2, 'Skr1': 3, 'Skr2': 3, 'Skr3': 3}
HAMILTONIAN_SPECIAL_DIMS = {6: 26, 8: 118}


@lru_cache(maxsize=None)
def binom(n, k, p):
    """C(n, k) mod p by Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    out = 1
    while n or k:
        n, nd = divmod(n, p)
        k, kd = divmod(k, p)
        if kd > nd:
            return 0
        out = out * comb(nd, kd) % p
    return out


class DividedPowerAlgebra:
    """
    p: characteristic
    n: truncation vector, x_i^(j) exists for j < p^n_i
    monomials: exponent tuples in graded-lex order (total degree first, then x_1 before x_2)
    """

    def __init__(self, p, n):
        self.p = ess.check_prime(p)
        self.n = tuple(int(k) for k in n)
        if not self.n or any(k < 1 for k in self.n):
            raise ess.ConstructionError(f'bad truncation vector {n!r}')
        self.m = len(self.n)
        self.bounds = tuple(p ** k for k in self.n)
        self.monomials = sorted(product(*(range(b) for b in self.bounds)),
                                key=lambda a: (sum(a), tuple(-x for x in a)))
        self.index = {a: i for i, a in enumerate(self.monomials)}
        self.dim = len(self.monomials)
        self.zero_exponent = (0,) * self.m
        self.top = tuple(b - 1 for b in self.bounds)

    def __repr__(self):
        return f'O({self.m}; {self.n}) over GF({self.p})'

    def unit(self, i):
        return tuple(1 if j == i else 0 for j in range(self.m))

    def one(self):
        return {self.zero_exponent: 1}

    def x(self, i, power=1):
        return {tuple(power if j == i else 0 for j in range(self.m)): 1}

    def coefficient(self, a, b):
        """x^(a) x^(b) = coefficient(a, b) x^(a+b), zero past the truncation."""
        c = 1
        for ai, bi, bound in zip(a, b, self.bounds):
            if ai + bi >= bound:
                return 0
            c = c * binom(ai + bi, ai, self.p) % self.p
            if not c:
                return 0
        return c

    def mul(self, f, g):
        out = {}
        for a, s in f.items():
            for b, t in g.items():
                c = self.coefficient(a, b)
                if c:
                    key = tuple(x + y for x, y in zip(a, b))
                    out[key] = (out.get(key, 0) + s * t * c) % self.p
        return {a: c for a, c in out.items() if c}

    def d(self, f, i):
        """Partial derivative d_i, d_i x^(a) = x^(a - e_i)."""
        out = {}
        for a, c in f.items():
            if a[i]:
                out[a[:i] + (a[i] - 1,) + a[i + 1:]] = c
        return out

    def combine(self, *terms):
        """sum of c * f over (c, f) pairs."""
        out = {}
        for c, f in terms:
            for a, v in f.items():
                out[a] = (out.get(a, 0) + c * v) % self.p
        return {a: v for a, v in out.items() if v}

    def zero_field(self):
        return tuple({} for _ in range(self.m))


def degree(a):
    return sum(a)


# Vector fields and forms
def apply_field(O, D, f):
    return O.combine(*((1, O.mul(D[j], O.d(f, j))) for j in range(O.m)))


def divergence(O, D):
    return O.combine(*((1, O.d(D[j], j)) for j in range(O.m)))


def field_bracket(O, D, E):
    return tuple(O.combine((1, apply_field(O, D, E[k])), (-1, apply_field(O, E, D[k]))) for k in range(O.m))


def scale_field(O, f, D):
    return tuple(O.mul(f, comp) for comp in D)


def add_fields(O, *terms):
    return tuple(O.combine(*((c, D[k]) for c, D in terms)) for k in range(O.m))


def sigma(j, m):
    """+1 on the first half of the Darboux variables, -1 on the second (0-based)."""
    return 1 if j < m else -1


def prime(j, m):
    return j + m if j < m else j - m


def _half(O, odd=False):
    count = O.m - 1 if odd else O.m
    if count < 2 or count % 2:
        raise ess.ConstructionError(f'{O!r} has no Darboux pairing')
    return count // 2


def d_h(O, f):
    """D_H(f) = sum_j sigma(j) d_j(f) d_j'."""
    half = _half(O)
    comps = [{} for _ in range(O.m)]
    for j in range(O.m):
        comps[prime(j, half)] = O.combine((sigma(j, half), O.d(f, j)))
    return tuple(comps)


def poisson(O, f, g, variables=None):
    """{f, g} = sum_j sigma(j) d_j(f) d_j'(g) over the first `variables` coordinates."""
    count = O.m if variables is None else variables
    half = count // 2
    return O.combine(*((sigma(j, half), O.mul(O.d(f, j), O.d(g, prime(j, half)))) for j in range(count)))


def delta(O, f):
    """Delta(x^(a)) = (2 - a_1 - ... - a_2m) x^(a)."""
    return {a: (2 - sum(a[:-1])) * c % O.p for a, c in f.items() if (2 - sum(a[:-1])) % O.p}


def contact(O, f, g):
    t = O.m - 1
    return O.combine((1, O.mul(delta(O, f), O.d(g, t))), (-1, O.mul(delta(O, g), O.d(f, t))),
                     (1, poisson(O, f, g, t)))


def d_k(O, f):
    """D_K(f) = sum_i f_i d_i, f_i = x_i d_t(f) + sigma(i') d_i'(f) for i <= 2m and f_t = Delta(f)."""
    half = _half(O, odd=True)
    t = O.m - 1
    ft = O.d(f, t)
    comps = []
    for i in range(2 * half):
        j = prime(i, half)
        comps.append(O.combine((1, O.mul(O.x(i), ft)), (sigma(j, half), O.d(f, j))))
    comps.append(delta(O, f))
    return tuple(comps)


def d_map(O, f):
    """df = sum_i d_i(f) dx_i."""
    return tuple(O.d(f, i) for i in range(O.m))


def degree_derivation(O):
    return tuple(O.x(i) for i in range(O.m))


def special_derivation(O, f, i, j):
    """D_ij(f) = d_j(f) d_i - d_i(f) d_j, divergence free."""
    comps = [{} for _ in range(O.m)]
    comps[i] = O.d(f, j)
    comps[j] = O.combine((-1, O.d(f, i)))
    return tuple(comps)


# Basis keys and assembly
def _monomial_label(a):
    parts = []
    for i, k in enumerate(a):
        if k == 1:
            parts.append(f'x{i + 1}')
        elif k > 1:
            parts.append(f'x{i + 1}^({k})')
    return ''.join(parts)


def key_label(key):
    kind, a = key[0], key[1]
    mono = _monomial_label(a)
    if kind == 'o':
        return mono or '1'
    i = key[2] + 1
    suffix = {'d': f'd{i}', 'w': f'dx{i}', 't': f'd~{i}'}[kind]
    return f'{mono}{suffix}' if mono else suffix


def _field_keys(O, kind):
    return [(kind, a, i) for a in O.monomials for i in range(O.m)]


def _decode(O, key):
    if key[0] == 'o':
        return {key[1]: 1}
    comps = [{} for _ in range(O.m)]
    comps[key[2]][key[1]] = 1
    return tuple(comps)


def _encode(kind, obj):
    if kind == 'o':
        return {('o', a): c for a, c in obj.items()}
    return {(kind, a, i): c for i, comp in enumerate(obj) for a, c in comp.items()}


def _assemble(O, keys, product_rule, weights, name, meta=None):
    """LieAlgebra on `keys` with [u, v] = product_rule(u, v), a dict key -> residue."""
    index = {k: i for i, k in enumerate(keys)}
    decoded = [_decode(O, k) for k in keys]
    entries = []
    for i, u in enumerate(keys):
        for j in range(i + 1, len(keys)):
            for k, c in product_rule(u[0], decoded[i], keys[j][0], decoded[j]).items():
                if k not in index:
                    raise ess.ConstructionError(f'[{key_label(u)}, {key_label(keys[j])}] leaves the basis at '
                                                f'{key_label(k)}')
                entries.append((i, j, index[k], c))
    g = chev.LieAlgebra.from_entries(O.p, len(keys), entries, labels=[key_label(k) for k in keys], name=name,
                                     grading=chev.Grading(weights, O.p), meta=meta)
    logger.info('assembled %s: dim %d, %d structure constants', name, g.dim, len(entries))
    return g


def _table_rule(O, table):
    """Product rule from a table (kind, kind) -> (kind, function), filled in by antisymmetry."""

    def rule(ku, u, kv, v):
        if (ku, kv) in table:
            kind, fn = table[ku, kv]
            return _encode(kind, fn(u, v))
        kind, fn = table[kv, ku]
        return {key: (-c) % O.p for key, c in _encode(kind, fn(v, u)).items()}

    return rule


def element(g, O, kind, obj):
    """Coordinates in g of a polynomial, field or form of the given kind."""
    return g.vector({key_label(k): c for k, c in _encode(kind, obj).items()})


def _div_rows(O, keys, kind):
    """Matrix of the divergence on the `kind` part of an algebra on `keys`, zero elsewhere."""
    m = np.zeros((O.dim, len(keys)), dtype=np.int64)
    for col, key in enumerate(keys):
        if key[0] != kind:
            continue
        a, i = key[1], key[2]
        if a[i]:
            m[O.index[a[:i] + (a[i] - 1,) + a[i + 1:]], col] = 1
    return m


def derived_algebra(g, name=''):
    space = sub.derived_subalgebra(g, g.full()).space
    if space.dim == g.dim:
        return g
    d = g.restrict(space, name=name or f'{g.name}^(1)')
    d.meta.update({key: value for key, value in g.meta.items() if key in ('family', 'm', 'n', 'p')})
    return d


def _finish(g, check):
    if check:
        g.check_jacobi()
    return g


def _truncation(m, n):
    n = (n,) * m if isinstance(n, (int, np.integer)) else tuple(int(k) for k in n)
    if len(n) != m:
        raise ess.ConstructionError(f'truncation vector {n} for {m} variables')
    return n


# Cartan type
def witt_algebra(O):
    keys = _field_keys(O, 'd')
    table = {('d', 'd'): ('d', lambda D, E: field_bracket(O, D, E))}
    weights = [degree(a) - 1 for _, a, _ in keys]
    return _assemble(O, keys, _table_rule(O, table), weights, f'W({O.m};{O.n})',
                     meta={'family': 'W', 'm': O.m, 'n': list(O.n), 'p': O.p})


def _special_space(O):
    return fpl.nullspace(_div_rows(O, _field_keys(O, 'd'), 'd'), O.p)


def poisson_algebra(O):
    """D_H(O(2m; n)) realised on O modulo constants with the Poisson bracket."""
    _half(O)
    keys = [('o', a) for a in O.monomials if any(a)]

    def bracket(f, g):
        out = poisson(O, f, g)
        out.pop(O.zero_exponent, None)
        return out

    table = {('o', 'o'): ('o', bracket)}
    weights = [degree(a) - 2 for _, a in keys]
    return _assemble(O, keys, _table_rule(O, table), weights, f'H({O.m};{O.n})',
                     meta={'family': 'H', 'm': O.m, 'n': list(O.n), 'p': O.p})


def contact_algebra(O):
    _half(O, odd=True)
    keys = [('o', a) for a in O.monomials]
    table = {('o', 'o'): ('o', lambda f, g: contact(O, f, g))}
    weights = [degree(a) + a[-1] - 2 for _, a in keys]
    return _assemble(O, keys, _table_rule(O, table), weights, f'K({O.m};{O.n})',
                     meta={'family': 'K', 'm': O.m, 'n': list(O.n), 'p': O.p})


def _generated(w, vectors, name, family):
    s = sub.generate(w, vectors).space
    g = w.restrict(s, name=name)
    g.meta.update({'family': family, 'm': w.meta['m'], 'n': w.meta['n'], 'p': w.p})
    return g


def cartan_algebra(family, m, n, p, check=True):
    """
    Lie algebra of Cartan type on m variables with truncation n (an int or one entry per variable).

    family: W, S (divergence free), S1 (its derived algebra), H (D_H(O)), H2 (its derived algebra), K, K1,
    CS = S + F sum x_i d_i, CH = H + sum F x_i^(p^n_i - 1) d_i' + F sum x_i d_i.
    """
    if family not in FAMILIES:
        raise ess.UnknownType(f'unknown Cartan type family {family!r}')
    O = DividedPowerAlgebra(p, _truncation(m, n))
    if family == 'W':
        if O.m == 1 and O.p == 2:
            raise ess.ConstructionError('W(1; n) is solvable in characteristic 2')
        return _finish(witt_algebra(O), check)
    if family in ('S', 'S1', 'CS'):
        if O.m < 3:
            raise ess.ConstructionError(f'{family} needs at least three variables')
        w = witt_algebra(O)
        space = _special_space(O)
        if family == 'CS':
            space, _ = space.extend(element(w, O, 'd', degree_derivation(O)))
            return _finish(_generated(w, space.basis, f'CS({O.m};{O.n})', 'CS'), check)
        s = w.restrict(space, name=f'S({O.m};{O.n})')
        s.meta.update({'family': 'S', 'm': O.m, 'n': list(O.n), 'p': O.p})
        _finish(s, check)
        return s if family == 'S' else derived_algebra(s, f'S({O.m};{O.n})^(1)')
    if family in ('H', 'H2'):
        h = _finish(poisson_algebra(O), check)
        return h if family == 'H' else derived_algebra(h, f'H({O.m};{O.n})^(2)')
    if family in ('K', 'K1'):
        k = _finish(contact_algebra(O), check)
        return k if family == 'K' else derived_algebra(k, f'K({O.m};{O.n})^(1)')
    half = _half(O)
    w = witt_algebra(O)
    seeds = [element(w, O, 'd', d_h(O, {a: 1})) for a in O.monomials if any(a)]
    for i in range(O.m):
        comps = [{} for _ in range(O.m)]
        comps[prime(i, half)] = O.x(i, O.bounds[i] - 1)
        seeds.append(element(w, O, 'd', tuple(comps)))
    seeds.append(element(w, O, 'd', degree_derivation(O)))
    return _finish(_generated(w, np.array(seeds), f'CH({O.m};{O.n})', 'CH'), check)


def witt_basis(p, n=1):
    """W(1; n) on e_i, -1 <= i <= p^n - 2, with [e_i, e_j] = (C(i+j+1, j) - C(i+j+1, i)) e_(i+j)."""
    p = ess.check_prime(p)
    top = p ** n - 2
    entries = []
    for i in range(-1, top + 1):
        for j in range(i + 1, top + 1):
            if i + j > top:
                continue
            c = (binom(i + j + 1, j, p) - binom(i + j + 1, i, p)) % p
            if c:
                entries.append((i + 1, j + 1, i + j + 1, c))
    labels = [f'e{i}' for i in range(-1, top + 1)]
    return chev.LieAlgebra.from_entries(p, top + 2, entries, labels=labels, name=f'W(1;{n})',
                                        grading=chev.Grading(range(-1, top + 1), p),
                                        meta={'family': 'W', 'm': 1, 'n': [n], 'p': p})


def p_envelope_dim(family, m, n, p):
    """dim W(m; n)_[p] = m p^|n| + sum (n_i - 1)."""
    if family != 'W':
        raise ess.UnknownType(f'no p-envelope formula for {family!r}')
    n = _truncation(m, n)
    return m * p ** sum(n) + sum(k - 1 for k in n)


def is_restricted(g):
    for i in range(g.dim):
        try:
            chev.p_power(g, g.basis_vector(i))
        except ess.NotRestrictable:
            logger.info('%s: (ad %s)^p is not inner', g.name, g.labels[i])
            return False
    return True


def structure_table(g):
    """Dense table T[i, j, k] = c_ij^k."""
    return g.ad_stack.transpose(0, 2, 1).astype(np.int64)


def derivation_dim(g):
    """Dimension of Der(g) from the linear conditions D[x, y] = [Dx, y] + [x, Dy] on basis pairs."""
    n = g.dim
    t = structure_table(g)
    eye = np.eye(n, dtype=np.int64)
    conditions = (np.einsum('ra,ijb->ijrab', eye, t) - np.einsum('bi,ajr->ijrab', eye, t)
                  - np.einsum('bj,iar->ijrab', eye, t))
    return n * n - fpl.rank(conditions.reshape(n ** 3, n * n) % g.p, g.p)


def tensor_envelope(s, m, n):
    """
    S (x) O(m; n) with [s (x) f, t (x) g] = [s, t] (x) fg, and the dimension dim Der(S) p^|n| + m p^|n| of its
    derivation algebra (Der(S) (x) O(m; n) extended by 1 (x) W(m; n)).
    """
    if m == 0:
        return s, derivation_dim(s)
    O = DividedPowerAlgebra(s.p, _truncation(m, n))
    t = structure_table(s)
    dim = s.dim * O.dim
    entries = []
    for x in range(dim):
        i, a = divmod(x, O.dim)
        for y in range(x + 1, dim):
            j, b = divmod(y, O.dim)
            c = O.coefficient(O.monomials[a], O.monomials[b])
            if not c:
                continue
            ab = O.index[tuple(u + v for u, v in zip(O.monomials[a], O.monomials[b]))]
            for k in np.flatnonzero(t[i, j]):
                entries.append((x, y, int(k) * O.dim + ab, int(t[i, j, k]) * c))
    labels = [f'{s.labels[i]}*{_monomial_label(a) or "1"}' for i in range(s.dim) for a in O.monomials]
    g = chev.LieAlgebra.from_entries(s.p, dim, entries, labels=labels, name=f'{s.name}*O({m};{O.n})',
                                     meta={'base': s.name, 'm': m, 'n': list(O.n), 'p': s.p})
    envelope = derivation_dim(s) * O.dim + m * O.dim
    logger.info('%s: dim %d, derivation algebra of dim %d', g.name, g.dim, envelope)
    return g, envelope


def _special_generators(O):
    """x_i times the product of m - 2 of the other Darboux pairs, summed over the choices."""
    half = O.m // 2
    out = []
    for i in range(O.m):
        others = [k for k in range(half) if k != i % half]
        poly = {}
        for chosen in combinations(others, half - 2):
            a = [0] * O.m
            a[i] = 1
            for k in chosen:
                a[k] = a[k + half] = 1
            poly[tuple(a)] = (poly.get(tuple(a), 0) + 1) % O.p
        out.append({a: c for a, c in poly.items() if c})
    return out


def hamiltonian_special_subalgebra(two_m, check=True):
    """The subalgebra of H(2m; 1) over GF(2) generated by all d_i and the degree m - 2 elements above."""
    if two_m not in HAMILTONIAN_SPECIAL_DIMS:
        raise ess.ConstructionError(f'no special Hamiltonian subalgebra on {two_m} variables')
    O = DividedPowerAlgebra(2, (1,) * two_m)
    h = poisson_algebra(O)
    seeds = [element(h, O, 'o', O.x(i)) for i in range(two_m)]
    seeds += [element(h, O, 'o', f) for f in _special_generators(O)]
    space = sub.generate(h, np.array(seeds)).space
    expected = HAMILTONIAN_SPECIAL_DIMS[two_m]
    if space.dim != expected:
        raise ess.ConstructionError(f'special subalgebra of H({two_m};1) has dimension {space.dim}, '
                                    f'expected {expected}')
    g = h.restrict(space, name=f'HS({two_m};1)')
    g.meta.update({'family': 'HS', 'm': two_m, 'n': [1] * two_m, 'p': 2})
    return _finish(g, check)


# Exotic algebras
def _cross(O, f, g):
    return (O.combine((1, O.mul(f[1], g[2])), (-1, O.mul(f[2], g[1]))),
            O.combine((1, O.mul(f[2], g[0])), (-1, O.mul(f[0], g[2]))),
            O.combine((1, O.mul(f[0], g[1])), (-1, O.mul(f[1], g[0]))))


def _curl(O, v):
    """(d_3 v_2 - d_2 v_3, d_1 v_3 - d_3 v_1, d_2 v_1 - d_1 v_2)."""
    return (O.combine((1, O.d(v[1], 2)), (-1, O.d(v[2], 1))),
            O.combine((1, O.d(v[2], 0)), (-1, O.d(v[0], 2))),
            O.combine((1, O.d(v[0], 1)), (-1, O.d(v[1], 0))))


def _lie_derivative(O, D, form):
    """(L_D w)_k = D(w_k) + sum_j w_j d_k(D_j)."""
    return tuple(O.combine((1, apply_field(O, D, form[k])),
                           *((1, O.mul(form[j], O.d(D[j], k))) for j in range(O.m))) for k in range(O.m))


def ermolaev_algebra(O):
    """W(2; n) + O(2; n)_(div)."""
    table = {
        ('d', 'd'): ('d', lambda D, E: field_bracket(O, D, E)),
        ('d', 'o'): ('o', lambda D, f: O.combine((1, apply_field(O, D, f)), (1, O.mul(divergence(O, D), f)))),
        ('o', 'o'): ('d', lambda f, g: (O.combine((1, O.mul(f, O.d(g, 1))), (-1, O.mul(g, O.d(f, 1)))),
                                        O.combine((1, O.mul(g, O.d(f, 0))), (-1, O.mul(f, O.d(g, 0)))))),
    }
    keys = _field_keys(O, 'd') + [('o', a) for a in O.monomials]
    weights = [degree(k[1]) - 1 for k in keys]
    return _assemble(O, keys, _table_rule(O, table), weights, f'Er{O.n}',
                     meta={'family': 'Er', 'm': 2, 'n': list(O.n), 'p': O.p})


def melikyan_algebra(O):
    """W(2; n) + O(2; n)_(-2 div) + W~(2; n)_(2 div)."""

    def twisted(f):
        return (O.combine((-1, O.d(f, 1))), O.d(f, 0))

    table = {
        ('d', 'd'): ('d', lambda D, E: field_bracket(O, D, E)),
        ('d', 't'): ('t', lambda D, E: add_fields(O, (1, field_bracket(O, D, E)),
                                                  (2, scale_field(O, divergence(O, D), E)))),
        ('d', 'o'): ('o', lambda D, f: O.combine((1, apply_field(O, D, f)), (-2, O.mul(divergence(O, D), f)))),
        ('o', 't'): ('d', lambda f, E: scale_field(O, f, E)),
        ('o', 'o'): ('t', lambda f, g: add_fields(O, (2, scale_field(O, f, twisted(g))),
                                                  (-2, scale_field(O, g, twisted(f))))),
        ('t', 't'): ('o', lambda F, G: O.combine((1, O.mul(F[0], G[1])), (-1, O.mul(F[1], G[0])))),
    }
    keys = _field_keys(O, 'd') + [('o', a) for a in O.monomials] + _field_keys(O, 't')
    offset = {'d': -3, 'o': -2, 't': -1}
    weights = [3 * degree(k[1]) + offset[k[0]] for k in keys]
    return _assemble(O, keys, _table_rule(O, table), weights, f'M{O.n}',
                     meta={'family': 'Melikyan', 'm': 2, 'n': list(O.n), 'p': O.p})


def skryabin_ambient(O):
    """W(3; n) + O_(-div) + one-forms_(div) + W~_(div); the Skryabin algebras live inside."""

    def div_times(D, obj, c=1):
        return scale_field(O, O.combine((c, divergence(O, D))), obj)

    table = {
        ('d', 'd'): ('d', lambda D, E: field_bracket(O, D, E)),
        ('d', 'o'): ('o', lambda D, f: O.combine((1, apply_field(O, D, f)), (-1, O.mul(divergence(O, D), f)))),
        ('d', 'w'): ('w', lambda D, w: add_fields(O, (1, _lie_derivative(O, D, w)), (1, div_times(D, w)))),
        ('d', 't'): ('t', lambda D, X: add_fields(O, (1, field_bracket(O, D, X)), (1, div_times(D, X)))),
        ('o', 'o'): ('w', lambda f, g: add_fields(O, (1, scale_field(O, g, d_map(O, f))),
                                                  (-1, scale_field(O, f, d_map(O, g))))),
        ('o', 'w'): ('t', lambda f, w: _curl(O, scale_field(O, f, w))),
        ('o', 't'): ('d', lambda f, X: scale_field(O, f, X)),
        ('w', 'w'): ('d', lambda v, w: _cross(O, v, w)),
        ('w', 't'): ('o', lambda w, X: O.combine(*((1, O.mul(w[i], X[i])) for i in range(3)))),
        ('t', 't'): ('w', lambda X, Y: _cross(O, Y, X)),
    }
    keys = _field_keys(O, 'd') + [('o', a) for a in O.monomials] + _field_keys(O, 'w') + _field_keys(O, 't')
    offset = {'d': -4, 'o': -3, 'w': -2, 't': -1}
    weights = [4 * degree(k[1]) + offset[k[0]] for k in keys]
    return keys, _assemble(O, keys, _table_rule(O, table), weights, f'S1~{O.n}',
                           meta={'family': 'Skr1', 'm': 3, 'n': list(O.n), 'p': O.p})


def _unit_space(keys, kinds, p):
    cols = [i for i, k in enumerate(keys) if k[0] in kinds]
    rows = np.zeros((len(cols), len(keys)), dtype=np.int64)
    rows[np.arange(len(cols)), cols] = 1
    return fpl.Subspace.from_rows(rows, p, len(keys))


def skryabin_algebra(O, which):
    keys, ambient = skryabin_ambient(O)
    meta = {'m': 3, 'n': list(O.n), 'p': O.p}
    if which == 'Skr1':
        space = fpl.nullspace(_div_rows(O, keys, 't'), O.p)
        g = ambient.restrict(space, name=f'S1{O.n}')
        g.meta.update(family='Skr1', **meta)
        return g
    s2 = ambient.restrict(_unit_space(keys, ('d', 'w'), O.p), name=f'S2{O.n}')
    s2.grading = chev.Grading(s2.grading.weights // 2, O.p)
    s2.meta.update(family='Skr2', **meta)
    if which == 'Skr2':
        return s2
    w_keys = [k for k in keys if k[0] in ('d', 'w')]
    div = _div_rows(O, w_keys, 'd')
    forms = np.array([s2.vector({key_label(k): 1}) for k in w_keys if k[0] == 'w'])
    space = fpl.stacked_nullspace([div, forms], s2.dim, O.p)
    exact = [element(s2, O, 'w', d_map(O, {a: 1})) for a in O.monomials if any(a)]
    space, _ = space.extend(np.array(exact))
    g = s2.restrict(space, name=f'S3{O.n}')
    g.meta.update(family='Skr3', **meta)
    return g


def exotic_algebra(family, n=1, p=None, check=True):
    """
    Er (p = 3), Melikyan (p = 5) and Skryabin Skr1, Skr2, Skr3 (p = 3).

    Er, Skr1 and Skr3 return the simple derived algebras.
    """
    if family not in EXOTIC_PRIMES:
        raise ess.UnknownType(f'unknown exotic family {family!r}')
    expected = EXOTIC_PRIMES[family]
    p = expected if p is None else p
    if p != expected:
        raise ess.ConstructionError(f'{family} is only defined (simple) in characteristic {expected}, not {p}')
    O = DividedPowerAlgebra(p, _truncation(EXOTIC_VARIABLES[family], n))
    if family == 'Er':
        return derived_algebra(_finish(ermolaev_algebra(O), check), f'Er{O.n}^(1)')
    if family == 'Melikyan':
        return _finish(melikyan_algebra(O), check)
    g = _finish(skryabin_algebra(O, family), check)
    return g if family == 'Skr2' else derived_algebra(g, f'{g.name}^(1)')
