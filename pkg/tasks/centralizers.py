import logging

import orbits
from tasks import task
from tasks.pipeline import algebra

"""
centralizers.py compares the catalogued dimension of g_e with the nullity of ad e for every orbit that has a stored
representative, at every prime of its table row ("5+" and "7+" rows are checked at 5 and 7).
"""

logger = logging.getLogger(__name__)


def table_rows(group):
    """(record, p, expected) for every checkable orbit/prime pair of a group."""
    rows = []
    for rec in orbits.enumerate_orbits(group):
        for key, expected in rec.dim_ge.items():
            p = int(key.rstrip('+'))
            if rec.usable_at(p):
                rows.append((rec, p, expected))
    return rows


def sweep(r, group):
    rows = table_rows(group)
    for rec, p, expected in rows:
        g = algebra(group, p)
        e = orbits.representative(g, rec)
        r.check(f'{rec.label} p={p}', expected, orbits.centralizer_dim(g, e), f'centraliser table of {group}')
    logger.info('%s: %d orbit/prime pairs checked', group, len(rows))


def _register(group):
    @task(f'table-centralizers-{group}', f'Centraliser dimensions of the nilpotent orbits of {group}')
    def run(r, seed):
        sweep(r, group)
    return run


for _group in orbits.GROUPS:
    _register(_group)
