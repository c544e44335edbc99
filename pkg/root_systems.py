import logging
from dataclasses import dataclass, field

import numpy as np
import sympy

import essentials as ess

"""
root_systems.py builds the root systems of G2, F4, E6, E7 and E8 exactly.

Euclidean coordinates are stored multiplied by 2 so that the half-integer vectors of E7, E8 and F4 are integers; all
pairings are ratios, so the scale never shows. Simple roots follow Bourbaki numbering. Positive roots are listed by
height, and within one height by decreasing coefficient tuple.

Two-row notation for the E types puts alpha_2 underneath: "2465432|3" is the highest root of E8, the top row being
the coefficients of alpha_1, alpha_3, ..., alpha_8. The data of the E8(a2)/E8(a4) computations uses "ab|cdefg,h".

Methods:
def build: RootSystem of a named type.
def cartan_integer: <beta, alpha^vee>.
def root_string: (r, q) of the alpha-string through beta.
def borel_de_siebenthal_delete: Subsystem obtained by deleting one node of the extended diagram.
def levi_diagram: Weighted diagram of the regular nilpotent element of a standard Levi subalgebra.
def parse_root: Coefficients from a digit string in either notation.
"""

logger = logging.getLogger(__name__)

RANKS = {'G2': 2, 'F4': 4, 'E6': 6, 'E7': 7, 'E8': 8}
# Simply-laced systems folded onto G2 and F4 when building Chevalley bases
FOLDING_PARENTS = {'D4': 4}

_E8_SIMPLE = [
    [1, -1, -1, -1, -1, -1, -1, 1],
    [2, 2, 0, 0, 0, 0, 0, 0],
    [-2, 2, 0, 0, 0, 0, 0, 0],
    [0, -2, 2, 0, 0, 0, 0, 0],
    [0, 0, -2, 2, 0, 0, 0, 0],
    [0, 0, 0, -2, 2, 0, 0, 0],
    [0, 0, 0, 0, -2, 2, 0, 0],
    [0, 0, 0, 0, 0, -2, 2, 0],
]

SIMPLE_ROOTS = {
    'G2': [[2, -2, 0], [-4, 2, 2]],
    'F4': [[0, 2, -2, 0], [0, 0, 2, -2], [0, 0, 0, 2], [1, -1, -1, -1]],
    'E6': _E8_SIMPLE[:6],
    'E7': _E8_SIMPLE[:7],
    'E8': _E8_SIMPLE,
    'D4': [[2, -2, 0, 0], [0, 2, -2, 0], [0, 0, 2, -2], [0, 0, 2, 2]],
}

# Positive roots of F4 in the order the GAP Chevalley basis lists them, left to right and top to bottom
F4_GAP_ORDER = ['0001', '1000', '0010', '0100', '0011', '1100', '0110', '0111', '1110', '0120', '1111', '0121',
                '1120', '1121', '0122', '1220', '1221', '1122', '1231', '1222', '1232', '1242', '1342', '2342']


class RootSystem:
    """
    type: 'G2' 'F4' 'E6' 'E7' 'E8'
    simple: Euclidean coordinates (times 2) of the simple roots, one row each
    positive: coefficient rows of the positive roots over the simple roots, ordered by height
    euclid: Euclidean coordinates (times 2) of the positive roots
    cartan: Cartan matrix, cartan[i, j] = <alpha_i, alpha_j^vee>
    """

    def __init__(self, type_):
        if type_ not in RANKS and type_ not in FOLDING_PARENTS:
            raise ess.UnknownType(f'unknown root system type {type_!r}; expected one of {sorted(RANKS)}')
        self.type = type_
        self.rank = RANKS.get(type_) or FOLDING_PARENTS[type_]
        self.simple = np.array(SIMPLE_ROOTS[type_], dtype=np.int64)
        self.norms = np.einsum('ij,ij->i', self.simple, self.simple)
        gram = self.simple @ self.simple.T
        self.cartan = (2 * gram) // self.norms[None, :]
        self.positive = self._enumerate()
        self.euclid = self.positive @ self.simple
        self.index = {tuple(int(c) for c in row): i for i, row in enumerate(self.positive)}
        self.highest_root = self.positive[-1].copy()
        logger.debug('built %s with %d positive roots', type_, len(self.positive))

    def _enumerate(self):
        rank = self.rank
        layers = [[tuple(int(i == j) for j in range(rank)) for i in range(rank)]]
        known = set(layers[0])
        while True:
            nxt = set()
            for beta in layers[-1]:
                b = np.array(beta)
                for i in range(rank):
                    # r = length of the alpha_i-string below beta
                    r = 0
                    while True:
                        lower = list(beta)
                        lower[i] -= r + 1
                        if tuple(lower) in known:
                            r += 1
                        else:
                            break
                    q = r - int(b @ self.cartan[:, i])
                    if q > 0:
                        up = list(beta)
                        up[i] += 1
                        nxt.add(tuple(up))
            if not nxt:
                break
            layers.append(sorted(nxt, reverse=True))
            known.update(nxt)
        return np.array([root for layer in layers for root in layer], dtype=np.int64)

    @property
    def num_positive(self):
        return len(self.positive)

    @property
    def dim(self):
        return 2 * self.num_positive + self.rank

    def height(self, coeffs):
        return int(np.sum(coeffs))

    def is_root(self, coeffs):
        key = tuple(int(c) for c in coeffs)
        return key in self.index or tuple(-c for c in key) in self.index

    def euclidean(self, coeffs):
        return np.asarray(coeffs, dtype=np.int64) @ self.simple

    def label(self, coeffs):
        return ''.join(str(abs(int(c))) for c in coeffs)

    def coroot_coeffs(self, coeffs):
        """Coefficients of beta^vee over the simple coroots."""
        coeffs = np.asarray(coeffs, dtype=np.int64)
        norm = int(self.euclidean(coeffs) @ self.euclidean(coeffs))
        out = coeffs * self.norms // norm
        return out

    def gap_order(self):
        if self.type != 'F4':
            raise ess.UnknownType(f'no stored GAP order for {self.type}')
        return [self.index[tuple(int(c) for c in s)] for s in F4_GAP_ORDER]

    def gap_root(self, position):
        """Signed coefficients of the root at 0-based `position` of the GAP basis: 24 positive roots, then negatives."""
        order = self.gap_order()
        if not 0 <= position < 2 * len(order):
            raise ess.UnknownType(f'no root at GAP position {position}')
        sign = 1 if position < len(order) else -1
        return sign * self.positive[order[position % len(order)]]

    def to_json(self):
        return {'type': self.type, 'rank': self.rank,
                'positive_roots': self.positive.tolist(),
                'highest_root': self.highest_root.tolist()}


_CACHE = {}


def build(type_, rank=None):
    if rank is not None and RANKS.get(type_, FOLDING_PARENTS.get(type_)) != rank:
        raise ess.UnknownType(f'{type_} does not have rank {rank}')
    if type_ not in _CACHE:
        _CACHE[type_] = RootSystem(type_)
    return _CACHE[type_]


def cartan_integer(rs, beta, alpha):
    b = rs.euclidean(beta)
    a = rs.euclidean(alpha)
    norm = int(a @ a)
    if norm == 0:
        raise ess.DimensionMismatch('cartan_integer needs a nonzero alpha')
    num = 2 * int(b @ a)
    if num % norm:
        raise ess.ConstructionError(f'non-integral pairing of {beta} with {alpha}')
    return num // norm


def root_string(rs, beta, alpha):
    beta = np.asarray(beta, dtype=np.int64)
    alpha = np.asarray(alpha, dtype=np.int64)
    if np.array_equal(beta, alpha) or np.array_equal(beta, -alpha):
        raise ess.DimensionMismatch('root_string needs independent roots')
    r = 0
    while rs.is_root(beta - (r + 1) * alpha):
        r += 1
    q = 0
    while rs.is_root(beta + (q + 1) * alpha):
        q += 1
    return r, q


@dataclass
class Deletion:
    node: int
    label: str
    nodes: list
    coefficient: int
    maximal: bool
    caveat_prime: int = None
    components: list = field(default_factory=list)
    num_positive: int = 0


def _component_type(cartan, comp, short):
    n = len(comp)
    sub = cartan[np.ix_(comp, comp)]
    products = [sub[i, j] * sub[j, i] for i in range(n) for j in range(i + 1, n) if sub[i, j]]
    if 3 in products:
        return 'G2'
    if 2 in products:
        if n == 4:
            return 'F4'
        if n == 2:
            return 'B2'
        nshort = sum(short[c] for c in comp)
        return f'B{n}' if nshort == 1 else f'C{n}'
    degrees = [int(np.count_nonzero(sub[i])) - 1 for i in range(n)]
    if max(degrees, default=0) <= 2:
        return f'A{n}'
    branch = degrees.index(3)
    legs = []
    for start in np.flatnonzero(sub[branch]):
        if start == branch:
            continue
        length, prev, cur = 1, branch, start
        while True:
            nxt = [k for k in np.flatnonzero(sub[cur]) if k not in (cur, prev)]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[:2] == [1, 1]:
        return f'D{n}'
    return f'E{n}'


def _label(types):
    order = 'EFGDCBA'
    types = sorted(types, key=lambda t: (order.index(t[0]), -int(t[1:])))
    return '+'.join(types)


def _components(adjacency, nodes):
    remaining = list(nodes)
    comps = []
    while remaining:
        stack = [remaining.pop(0)]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in list(remaining):
                if adjacency[v, w]:
                    remaining.remove(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def borel_de_siebenthal_delete(rs, node):
    """
    Deletes `node` from the extended Dynkin diagram (0 is the affine node, the negative of the highest root).

    maximal is True when the deleted coefficient of the highest root is 1 or a prime. caveat_prime records that prime:
    in that characteristic the corresponding subalgebra acquires a centre.
    """
    if not 0 <= node <= rs.rank:
        raise ess.UnknownType(f'node {node} is not in the extended diagram of {rs.type}')
    ext = np.vstack([-rs.highest_root[None, :], np.eye(rs.rank, dtype=np.int64)])
    euclid = ext @ rs.simple
    gram = euclid @ euclid.T
    norms = np.diag(gram)
    cartan = (2 * gram) // norms[None, :]
    long_norm = norms.max()
    short = {i: int(norms[i] < long_norm) for i in range(rs.rank + 1)}
    kept = [i for i in range(rs.rank + 1) if i != node]
    adjacency = (cartan != 0)
    comps = _components(adjacency, kept)
    types = [_component_type(cartan, comp, short) for comp in comps]
    coefficient = 1 if node == 0 else int(rs.highest_root[node - 1])
    # positive roots of the subsystem are the roots with integer coordinates over the kept nodes
    to_nodes = sympy.Matrix(ext[kept].T.tolist()).inv()
    count = 0
    for row in rs.positive:
        coords = to_nodes * sympy.Matrix([int(c) for c in row])
        if all(c.is_integer for c in coords):
            count += 1
    maximal = node != 0 and (coefficient == 1 or sympy.isprime(coefficient))
    caveat = coefficient if node != 0 and sympy.isprime(coefficient) else None
    result = Deletion(node=node, label=_label(types), nodes=kept, coefficient=coefficient, maximal=maximal,
                      caveat_prime=caveat, components=[[int(c) for c in comp] for comp in comps],
                      num_positive=count)
    if caveat:
        logger.info('%s minus node %d: %s has a centre in characteristic %d', rs.type, node, result.label, caveat)
    return result


def levi_roots(rs, nodes):
    """Positive roots supported on the given simple roots (1-based Bourbaki indices)."""
    mask = np.zeros(rs.rank, dtype=bool)
    mask[[n - 1 for n in nodes]] = True
    keep = ~np.any(rs.positive[:, ~mask] != 0, axis=1)
    return rs.positive[keep]


def levi_diagram(rs, nodes):
    """Weights a_i = sum over positive Levi roots beta of <alpha_i, beta^vee>."""
    total = np.zeros(rs.rank, dtype=np.int64)
    for beta in levi_roots(rs, nodes):
        total += rs.coroot_coeffs(beta)
    # <alpha_i, sum_j c_j alpha_j^vee> = sum_j c_j cartan[i, j]
    return (rs.cartan @ total).astype(np.int64)


def parse_root(rs, text):
    """Coefficient vector of a root given as digits, two-row notation, or with a leading '-' for negatives."""
    text = text.strip().replace(' ', '')
    sign = 1
    if text.startswith('-'):
        sign, text = -1, text[1:]
    if ',' in text:
        top, bottom = text.split(',', 1)
        top = top.replace('|', '')
        digits = _two_row(top, bottom, rs)
    elif '|' in text:
        top, bottom = text.split('|', 1)
        digits = _two_row(top, bottom, rs)
    else:
        digits = [int(c) for c in text]
    if len(digits) != rs.rank:
        raise ess.UnknownType(f'{text!r} does not have {rs.rank} coefficients')
    coeffs = sign * np.array(digits, dtype=np.int64)
    if not rs.is_root(coeffs):
        raise ess.UnknownType(f'{text!r} is not a root of {rs.type}')
    return coeffs


def _two_row(top, bottom, rs):
    if rs.type not in ('E6', 'E7', 'E8'):
        raise ess.UnknownType(f'two-row notation is only used for E types, not {rs.type}')
    top = [int(c) for c in top]
    return [top[0], int(bottom)] + top[1:]


def format_two_row(rs, coeffs):
    coeffs = [abs(int(c)) for c in coeffs]
    if rs.type not in ('E6', 'E7', 'E8'):
        return ''.join(map(str, coeffs))
    return str(coeffs[0]) + ''.join(map(str, coeffs[2:])) + '|' + str(coeffs[1])
