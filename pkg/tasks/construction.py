import numpy as np

import chevalley as chev
import orbits
import subalgebras as sub
from tasks import task

"""
construction.py checks the Chevalley constructions of the exceptional Lie algebras over GF(2), GF(3) and GF(5):
dimensions, centres, and the ideal generated by a short root vector where the root lengths collapse.
"""

DIMS = {'G2': 14, 'F4': 52, 'E6': 78, 'E7': 133, 'E8': 248}
CENTRES = {('E6', 3): 1, ('E7', 2): 1}
SHORT_ROOT_IDEALS = {('G2', 3): 7, ('F4', 2): 26}


def short_simple_root(rs):
    i = int(np.argmin(rs.norms))
    return np.eye(rs.rank, dtype=np.int64)[i]


@task('construction-sweep', 'Exceptional Lie algebras over GF(2), GF(3), GF(5): dimensions, centres, short-root ideals')
def construction_sweep(r, seed):
    r.check('orbit catalog digest', orbits.CATALOG_SHA256, orbits.catalog_digest(), 'orbits.txt')
    for group, dim in DIMS.items():
        for p in (2, 3, 5):
            g = chev.chevalley_algebra(group, p)
            r.check(f'{group} p={p} dim', dim, g.dim, 'number of roots plus rank')
            r.check(f'{group} p={p} centre', CENTRES.get((group, p), 0), g.center().dim, 'list of bad primes')
            if (group, p) in SHORT_ROOT_IDEALS:
                ideal = sub.ideal(g, [g.root_vector(short_simple_root(g.root_system))])
                r.check(f'{group} p={p} short root ideal', SHORT_ROOT_IDEALS[(group, p)], ideal.dim,
                        'list of bad primes')
