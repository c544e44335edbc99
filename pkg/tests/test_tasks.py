import numpy as np
import pytest

import chevalley as chev
import essentials as ess
import tasks

DOCUMENTED = [
    'construction-sweep', 'cartan-dimensions',
    'table-centralizers-G2', 'table-centralizers-F4', 'table-centralizers-E6', 'table-centralizers-E7',
    'table-centralizers-E8',
    'thm-e8p5non', 'thm-weise8', 'thm-nonrestrictedwitt', 'thm-regular-e8p5', 'prop-witt-search',
    'thm-ermax', 'thm-nonf4', 'thm-weisf4',
    'thm-none6', 'thm-none7', 'thm-none8', 'thm-ch41',
    'thm-p2newmax-e6', 'thm-p2newmax-e7', 'thm-p2newmax-e8', 'thm-e17a4', 'thm-a14e8', 'prop-a1-4-e8-extras',
    'thm-specialmax', 'rem-specialmax-centralizers',
]


def test_registry_keys():
    assert tasks.keys() == sorted(DOCUMENTED)
    titles = dict(tasks.describe())
    assert all(titles[key] for key in DOCUMENTED)


def test_duplicate_registration():
    tasks.load()
    with pytest.raises(ess.ConstructionError):
        tasks.task('construction-sweep', 'again')(lambda r, seed: None)


def test_check_normalizes_values():
    assert tasks.Check('dims', {1: 2}, {'1': 2}).passed
    assert tasks.Check('chain', (248, 224), [248, 224]).passed
    assert tasks.Check('dim', 3, np.int64(3)).passed
    assert not tasks.Check('dim', 3, 4).passed
    assert tasks.Check('flag', True, np.bool_(True)).to_json() == {
        'name': 'flag', 'expected': True, 'got': True, 'pass': True, 'anchor': ''}


def test_recorder_report():
    r = tasks.Recorder('demo')
    assert r.check('a', 1, 1, anchor='table') == 1
    r.check('b', [1], [2])
    report = r.report()
    assert report['schema'] == ess.JSON_SCHEMA == 1
    assert report['task'] == 'demo'
    assert [c['pass'] for c in report['checks']] == [True, False]
    assert report['checks'][0]['anchor'] == 'table'
    assert not r.passed
    assert not tasks.passed(report)


def test_unknown_task():
    with pytest.raises(ess.UnknownType):
        tasks.run_task('no-such-task')


def test_table_centralizers_g2():
    report = tasks.run_task('table-centralizers-G2')
    assert report['checks']
    assert tasks.passed(report)


@pytest.mark.slow
def test_construction_sweep():
    assert tasks.passed(tasks.run_task('construction-sweep'))


@pytest.mark.slow
def test_f4_weisfeiler_filtration():
    assert tasks.passed(tasks.run_task('thm-weisf4'))


def test_ermolaev_vectors_follow_gap_labels(f4_p3):
    from tasks.f4p3 import ermolaev_vectors
    g = f4_p3
    f, f_prime = ermolaev_vectors(g)
    assert np.array_equal(f, g.root_vector([-1, -2, -3, -2]))
    assert np.flatnonzero(f_prime).tolist() == sorted([g.root_index([-1, -2, -2, -2]), g.root_index([-1, -2, -4, -2])])
    assert f_prime[g.root_index([-1, -2, -2, -2])] == 1
    assert f_prime[g.root_index([-1, -2, -4, -2])] == 2


@pytest.mark.slow
@pytest.mark.parametrize('key', ['thm-ermax', 'thm-none6', 'thm-ch41', 'rem-specialmax-centralizers',
                                 'prop-witt-search'])
def test_theorem_tasks_pass(key):
    report = tasks.run_task(key)
    assert report['checks']
    assert tasks.passed(report), [c for c in report['checks'] if not c['pass']]


def test_acting_choices_add_the_central_torus():
    from tasks.e8p5 import acting_choices
    g = chev.classical_algebra('sl', 5, 5)
    height = [4, 2, 0, -2, -4]
    weights = [height[int(l[1]) - 1] - height[int(l[2]) - 1] if l.startswith('E') else 0 for l in g.labels]
    grading = chev.Grading(weights, 5)
    e = g.vector({'E12': 1, 'E23': 1, 'E34': 1, 'E45': 1})
    h = g.vector({'H1': 1})
    choices = acting_choices(g, e, h, grading)
    identity = g.vector({'H1': 1, 'H2': 2, 'H3': 3, 'H4': 4})
    assert len(choices) == 5
    assert np.array_equal(choices[0], h)
    assert g.span([(c - h) % 5 for c in choices[1:]]) == g.span([identity])
