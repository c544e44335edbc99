import hashlib
import logging
import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import numpy as np

import chevalley as chev
import essentials as ess
import fp_linalg as fpl
import root_systems as rsys
import subalgebras as sub

"""
orbits.py reads the nilpotent orbit catalog (orbits.txt): representatives, weighted diagrams and the centralizer
dimension of every orbit of G2, F4, E6, E7 and E8 for every prime.

Methods:
def lookup, enumerate_orbits: Catalog records.
def representative, diagram, cocharacter_grading: The stored element and the grading of its cocharacter.
def catalog_digest, verify_catalog: SHA-256 of the catalog file against the pinned value.
def expected_centralizer_dim, centralizer_dim: Table value against the live nullity of ad e.
def witt_scan: Witt generation scan for a catalogued orbit.
"""

logger = logging.getLogger(__name__)

CATALOG_PATH = Path(__file__).with_name('orbits.txt')
CATALOG_SHA256 = '4e1b036da8dd33dca89b14ff87981049ab1d1dd82001e78120a71a367b6e3005'
GROUPS = ('G2', 'F4', 'E6', 'E7', 'E8')
# Smallest prime of the "all larger primes" row
GOOD_FROM = {'G2': 5, 'F4': 5, 'E6': 5, 'E7': 5, 'E8': 7}

# Orbits of E8 over GF(5) whose representatives could lie in the image of (ad e)^4
WITT_CANDIDATES_E8 = ('A4+A3', 'A4+A2', 'A4+2A1', 'A4+A2+A1', 'A4+A1', '2A3', 'D4(a1)+A2', 'A3+A2+A1', 'A4',
                      'A3+A2', 'D4(a1)+A1', 'A3+2A1', 'A3+A1', 'D4(a1)', 'A3')


@dataclass(frozen=True)
class OrbitRecord:
    group: str
    label: str
    dim_ge: dict = field(default_factory=dict)
    representative: tuple = None
    levi: tuple = None
    diagram: tuple = None
    nonstandard: bool = False
    notes: tuple = ()
    primes: tuple = None

    @property
    def has_representative(self):
        return self.representative is not None or self.levi is not None

    def usable_at(self, p):
        return self.has_representative and (self.primes is None or p in self.primes)

    def prime_class(self, p):
        return f'{GOOD_FROM[self.group]}+' if p >= GOOD_FROM[self.group] else str(p)

    def to_json(self):
        return {'group': self.group, 'label': self.label, 'dim_ge': dict(self.dim_ge),
                'representative': list(self.representative) if self.representative else None,
                'levi': list(self.levi) if self.levi else None,
                'diagram': list(self.diagram) if self.diagram else None,
                'nonstandard': self.nonstandard, 'notes': list(self.notes),
                'primes': list(self.primes) if self.primes else None}


def normalize_label(label):
    """Spaces dropped, nA_k written A_k^n and the summands of a standard label sorted."""
    label = label.replace(' ', '')
    if label.startswith('('):
        return label
    parts = [re.sub(r'^(\d)(~?[A-G]\d)$', r'\2^\1', part) for part in label.split('+')]
    return '+'.join(sorted(parts))


def _parse(text):
    records = []
    current = None

    def close():
        if current is not None:
            records.append(OrbitRecord(**current))

    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(' ')
        items = rest.split()
        try:
            if word == 'orbit':
                close()
                if items[0] not in GROUPS:
                    raise ess.UnknownType(f'unknown group {items[0]!r}')
                current = {'group': items[0], 'label': items[1], 'dim_ge': {}, 'notes': (),
                           'nonstandard': items[2:] == ['nonstandard']}
            elif current is None:
                raise ess.ConstructionError(f'{word!r} before the first orbit')
            elif word == 'dim':
                current['dim_ge'][items[0].removeprefix('p=')] = int(items[1])
            elif word == 'levi':
                current['levi'] = tuple(int(i) for i in items)
            elif word == 'rep':
                current['representative'] = tuple(items)
            elif word == 'diagram':
                current['diagram'] = tuple(int(a) for a in items)
            elif word == 'primes':
                current['primes'] = tuple(int(q) for q in items)
            elif word == 'note':
                current['notes'] = current['notes'] + (rest.strip(),)
            else:
                raise ess.ConstructionError(f'unknown keyword {word!r}')
        except (IndexError, ValueError) as err:
            raise ess.ConstructionError(f'orbits catalog line {number}: {raw.strip()!r}') from err
    close()
    return records


def catalog_digest(path=CATALOG_PATH):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def verify_catalog(path=CATALOG_PATH):
    digest = catalog_digest(path)
    if digest != CATALOG_SHA256:
        raise ess.ConstructionError(f'orbits catalog {path} has digest {digest}, expected {CATALOG_SHA256}')
    return digest


@lru_cache(maxsize=4)
def load_catalog(path=CATALOG_PATH):
    """{group: {normalized label: OrbitRecord}}, in file order."""
    if Path(path) == CATALOG_PATH:
        verify_catalog(path)
    text = Path(path).read_text(encoding='utf-8')
    catalog = {group: {} for group in GROUPS}
    for rec in _parse(text):
        key = normalize_label(rec.label)
        if key in catalog[rec.group]:
            raise ess.ConstructionError(f'{rec.group} orbit {rec.label} listed twice')
        catalog[rec.group][key] = rec
    logger.debug('loaded %d orbits from %s', sum(len(v) for v in catalog.values()), path)
    return catalog


def _group(group):
    if group not in GROUPS:
        raise ess.UnknownType(f'unknown group {group!r}; expected one of {GROUPS}')
    return load_catalog()[group]


def lookup(group, label):
    try:
        return _group(group)[normalize_label(label)]
    except KeyError:
        raise ess.UnknownType(f'{group} has no nilpotent orbit {label!r}') from None


def enumerate_orbits(group):
    return list(_group(group).values())


def _check_group(g, rec):
    if g.root_system is None or g.root_system.type != rec.group:
        raise ess.UnknownType(f'{rec.group} orbit {rec.label} used in {g.name}')


def representative_roots(rec):
    if not rec.has_representative:
        raise ess.MissingRepresentative(f'{rec.group} orbit {rec.label} has no stored representative')
    rs = rsys.build(rec.group)
    if rec.representative is not None:
        return [rsys.parse_root(rs, text) for text in rec.representative]
    return [np.eye(rs.rank, dtype=np.int64)[i - 1] for i in rec.levi]


def representative(g, rec):
    _check_group(g, rec)
    if rec.has_representative and not rec.usable_at(g.p):
        raise ess.MissingRepresentative(
            f'{rec.group} orbit {rec.label}: stored representative is only valid for p in {rec.primes}')
    e = g.zero()
    for coeffs in representative_roots(rec):
        e = (e + g.root_vector(coeffs)) % g.p
    return e


def diagram(rec):
    if rec.diagram is not None:
        return np.array(rec.diagram, dtype=np.int64)
    if rec.levi is not None and rec.representative is None:
        return rsys.levi_diagram(rsys.build(rec.group), rec.levi)
    raise ess.MissingRepresentative(f'{rec.group} orbit {rec.label} has no stored cocharacter')


def cocharacter_grading(g, rec):
    _check_group(g, rec)
    return chev.grading_from_diagram(g, diagram(rec))


def expected_centralizer_dim(rec, p):
    key = rec.prime_class(p)
    if key not in rec.dim_ge:
        raise ess.UnknownType(f'{rec.group} orbit {rec.label} has no centralizer row for p={p}')
    return rec.dim_ge[key]


def centralizer_dim(g, e):
    return g.dim - fpl.rank(g.ad(e), g.p)


def cross_check(g, rec):
    """(expected, computed) dimension of g_e for the stored representative."""
    e = representative(g, rec)
    return expected_centralizer_dim(rec, g.p), centralizer_dim(g, e)


def witt_scan(g, rec, k=1, limit=4):
    """Witt generation candidates f for the representative of a catalogued orbit, over its cocharacter grading."""
    e = representative(g, rec)
    try:
        return sub.witt_generation_scan(g, e, cocharacter_grading(g, rec), k, limit)
    except ess.NoSolution:
        return []


def witt_candidates(g, labels=WITT_CANDIDATES_E8, k=1):
    """{label: candidates or None when the orbit has no stored representative}."""
    out = {}
    for label in labels:
        rec = lookup(g.root_system.type, label)
        if not rec.usable_at(g.p):
            logger.warning('%s: no stored representative, skipped', rec.label)
            out[rec.label] = None
            continue
        out[rec.label] = witt_scan(g, rec, k, limit=1)
    return out
