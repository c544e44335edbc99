import numpy as np
import pytest

import chevalley as chev
import essentials as ess
import orbits


def test_normalize_label():
    assert orbits.normalize_label('2A1+A2') == 'A1^2+A2'
    assert orbits.normalize_label('A2 + 2A1') == orbits.normalize_label('2A1+A2')
    assert orbits.normalize_label('(~A1)^(3)') == '(~A1)^(3)'


def test_catalog_pinned():
    assert orbits.catalog_digest() == orbits.CATALOG_SHA256
    assert orbits.verify_catalog() == orbits.CATALOG_SHA256


def test_catalog_digest_mismatch(tmp_path):
    copy = tmp_path / 'orbits.txt'
    copy.write_bytes(orbits.CATALOG_PATH.read_bytes() + b'\n# edited\n')
    with pytest.raises(ess.ConstructionError):
        orbits.verify_catalog(copy)


def test_default_catalog_is_verified_on_load(monkeypatch):
    monkeypatch.setattr(orbits, 'CATALOG_SHA256', '0' * 64)
    orbits.load_catalog.cache_clear()
    try:
        with pytest.raises(ess.ConstructionError):
            orbits.load_catalog()
    finally:
        orbits.load_catalog.cache_clear()


def test_catalog_parse_errors(tmp_path):
    bad = tmp_path / 'bad.txt'
    bad.write_text('dim p=5+ 2\n', encoding='utf-8')
    with pytest.raises(ess.ConstructionError):
        orbits.load_catalog(bad)
    twice = tmp_path / 'twice.txt'
    twice.write_text('orbit G2 A1\ndim p=5+ 8\n\norbit G2 A1\ndim p=5+ 8\n', encoding='utf-8')
    with pytest.raises(ess.ConstructionError):
        orbits.load_catalog(twice)
    group = tmp_path / 'group.txt'
    group.write_text('orbit B3 A1\n', encoding='utf-8')
    with pytest.raises(ess.UnknownType):
        orbits.load_catalog(group)


def test_lookup():
    labels = [rec.label for rec in orbits.enumerate_orbits('G2')]
    assert labels == ['G2', 'G2(a1)', '(~A1)^(3)', '~A1', 'A1']
    assert orbits.lookup('G2', '(~A1)^(3)').nonstandard
    with pytest.raises(ess.UnknownType):
        orbits.lookup('G2', 'A2')
    with pytest.raises(ess.UnknownType):
        orbits.lookup('B3', 'A1')


def test_expected_rows():
    rec = orbits.lookup('G2', 'A1')
    assert orbits.expected_centralizer_dim(rec, 7) == 8
    assert rec.prime_class(7) == '5+'
    assert rec.prime_class(3) == '3'
    with pytest.raises(ess.UnknownType):
        orbits.expected_centralizer_dim(orbits.lookup('G2', '(~A1)^(3)'), 5)


def test_usable_primes():
    f4a1 = orbits.lookup('F4', 'F4(a1)')
    assert [f4a1.usable_at(p) for p in (2, 3, 5, 7)] == [False, True, True, False]
    e8a2 = orbits.lookup('E8', 'E8(a2)')
    assert e8a2.usable_at(2) and not e8a2.usable_at(5)
    assert not orbits.lookup('G2', 'G2(a1)').usable_at(5)
    assert orbits.lookup('G2', 'A1').usable_at(3)


@pytest.mark.parametrize('label, dim', [('G2', 2), ('~A1', 6), ('A1', 8)])
def test_g2_centralizers(g2_p5, label, dim):
    assert orbits.cross_check(g2_p5, orbits.lookup('G2', label)) == (dim, dim)


def test_missing_representative(g2_p5):
    with pytest.raises(ess.MissingRepresentative):
        orbits.representative(g2_p5, orbits.lookup('G2', 'G2(a1)'))
    with pytest.raises(ess.MissingRepresentative):
        orbits.diagram(orbits.lookup('G2', 'G2(a1)'))
    f4_p2 = chev.chevalley_algebra('F4', 2)
    with pytest.raises(ess.MissingRepresentative):
        orbits.representative(f4_p2, orbits.lookup('F4', 'F4(a1)'))


def test_wrong_group(g2_p5):
    with pytest.raises(ess.UnknownType):
        orbits.representative(g2_p5, orbits.lookup('F4', 'A1'))


def test_regular_cocharacter(g2_p5):
    rec = orbits.lookup('G2', 'G2')
    assert list(orbits.diagram(rec)) == [2, 2]
    grading = orbits.cocharacter_grading(g2_p5, rec)
    dims = grading.dims()
    assert sum(dims.values()) == 14
    assert dims[0] == 2
    assert dims[2] == 2


def test_record_json():
    out = orbits.lookup('F4', 'F4(a1)').to_json()
    assert out['primes'] == [3, 5]
    assert out['diagram'] == [2, 2, 0, 2]
    assert out['dim_ge'] == {'5+': 6, '3': 6, '2': 10}
    assert np.array_equal(orbits.diagram(orbits.lookup('F4', 'F4(a1)')), [2, 2, 0, 2])
