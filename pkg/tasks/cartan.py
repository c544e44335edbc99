import cartan_type as ct
import chevalley as chev
import subalgebras as sub
from tasks import task

"""
cartan.py checks the dimension formulas of the Cartan type and exotic simple Lie algebras, their simplicity, and
the restrictedness and p-envelope statements for the Witt algebras.
"""

# (family, m, n, p, expected dim, check simplicity)
CARTAN_CASES = (
    ('W', 1, 1, 5, 5, True),
    ('W', 1, 2, 5, 25, False),
    ('W', 2, 1, 3, 18, True),
    ('S1', 3, 1, 3, 52, True),
    ('S1', 3, 1, 5, 248, False),
    ('H2', 2, 1, 3, 7, True),
    ('H2', 2, 1, 5, 23, True),
    ('H2', 4, 1, 3, 79, True),
    ('K', 3, 1, 5, 125, True),
    ('K1', 3, 1, 3, 26, True),
    ('CH', 2, 1, 3, 11, False),
)

# (family, n, expected dim)
EXOTIC_CASES = (
    ('Er', (1, 1), 26),
    ('Melikyan', (1, 1), 125),
    ('Skr1', 1, 241),
    ('Skr2', 1, 162),
    ('Skr3', 1, 77),
)


def formula(family, m, p):
    """Expected dimension with all truncations 1."""
    if family == 'W':
        return m * p ** m
    if family == 'S1':
        return (m - 1) * (p ** m - 1)
    if family == 'H2':
        return p ** m - 2
    if family in ('K', 'K1'):
        return p ** m if (m + 3) % p else p ** m - 1
    raise ValueError(family)


@task('cartan-dimensions', 'Dimensions, simplicity and p-envelopes of the Cartan type and exotic algebras')
def cartan_dimensions(r, seed):
    for family, m, n, p, dim, simple in CARTAN_CASES:
        g = ct.cartan_algebra(family, m, n, p)
        name = f'{family}({m};{n}) p={p}'
        r.check(f'{name} dim', dim, g.dim, 'dimension formulas of the Cartan type families')
        if n == 1 and family in ('W', 'S1', 'H2', 'K', 'K1'):
            r.check(f'{name} formula', dim, formula(family, m, p), 'dimension formulas of the Cartan type families')
        if simple:
            r.check(f'{name} simple', True, sub.is_simple(g, seed=seed), 'simplicity of the Cartan type algebras')
    for family, n, dim in EXOTIC_CASES:
        g = ct.exotic_algebra(family, n)
        r.check(f'{family} dim', dim, g.dim, 'exotic simple algebras in characteristic 3 and 5')
        r.check(f'{family} simple', True, sub.is_simple(g, seed=seed), 'exotic simple algebras')
    for two_m, dim in sorted(ct.HAMILTONIAN_SPECIAL_DIMS.items()):
        g = ct.hamiltonian_special_subalgebra(two_m)
        m = two_m // 2
        r.check(f'HS({two_m};1) dim', dim, g.dim, 'special Hamiltonian subalgebras in characteristic 2')
        r.check(f'HS({two_m};1) formula', dim, 2 ** (2 * m - 1) - 2 ** (m - 1) - 2, '2^(2m-1) - 2^(m-1) - 2')
        r.check(f'HS({two_m};1) simple', True, sub.is_simple(g, seed=seed), 'special Hamiltonian subalgebras')
    w11 = ct.cartan_algebra('W', 1, 1, 5)
    w12 = ct.cartan_algebra('W', 1, 2, 5)
    r.check('W(1;1) p=5 restricted', True, ct.is_restricted(w11), 'restricted Cartan type algebras have n = 1')
    r.check('W(1;2) p=5 restricted', False, ct.is_restricted(w12), 'restricted Cartan type algebras have n = 1')
    r.check('W(1;2) p=5 p-envelope', 26, ct.p_envelope_dim('W', 1, 2, 5), 'W(m;n)_[p] = W(m;n) + sum k d_i^(p^j)')
    r.check('W(1;2) basis table dim', 25, ct.witt_basis(5, 2).dim, 'W(1;n) basis e_i, -1 <= i <= p^n - 2')
    sl2 = chev.classical_algebra('sl', 2, 3)
    current, envelope = ct.tensor_envelope(sl2, 2, 1)
    r.check('sl(2) (x) O(2;1) p=3 dim', 27, current.dim, 'Der(S (x) O(m;n)) = Der(S) (x) O(m;n) + 1 (x) W(m;n)')
    r.check('sl(2) (x) O(2;1) p=3 envelope', 45, envelope, 'Der(S (x) O(m;n)) = Der(S) (x) O(m;n) + 1 (x) W(m;n)')
    psl3 = chev.classical_algebra('psl', 3, 3)
    current, _ = ct.tensor_envelope(psl3, 2, 1)
    r.check('psl(3) (x) O(2;1) p=3 dim', 63, current.dim, 'I/A = psl(3) (x) O(2;1) in E8 at p = 3')
