import json

import index


def test_parser_errors_exit_two():
    assert index.main(['construct']) == index.EXIT_USAGE
    assert index.main(['frobnicate']) == index.EXIT_USAGE
    assert index.main(['orbit', '--group', 'B3', '--p', '5', '--orbit', 'A1']) == index.EXIT_USAGE


def test_help_exits_zero(capsys):
    assert index.main(['--help']) == index.EXIT_OK
    assert 'construct' in capsys.readouterr().out


def test_construct_g2(capsys, tmp_path):
    dump = tmp_path / 'g2.json'
    assert index.main(['construct', '--type', 'G2', '--p', '5', '--dump', str(dump)]) == index.EXIT_OK
    out = capsys.readouterr().out
    assert 'dim' in out and '14' in out
    data = json.loads(dump.read_text(encoding='utf-8'))
    assert data['dim'] == 14
    assert data['p'] == 5


def test_construct_needs_prime():
    assert index.main(['construct', '--type', 'G2']) == index.EXIT_USAGE
    assert index.main(['construct', '--type', 'sl', '--p', '3']) == index.EXIT_USAGE
    assert index.main(['construct', '--family', 'W', '--p', '5']) == index.EXIT_USAGE


def test_construct_witt(capsys):
    assert index.main(['construct', '--family', 'W', '--m', '1', '--p', '5']) == index.EXIT_OK
    assert 'degree' in capsys.readouterr().out


def test_verify_list(capsys):
    assert index.main(['verify', '--list']) == index.EXIT_OK
    assert 'thm-weise8' in capsys.readouterr().out


def test_verify_unknown_task():
    assert index.main(['verify', '--task', 'nope']) == index.EXIT_USAGE


def test_verify_task_json(tmp_path, capsys):
    path = tmp_path / 'report.json'
    assert index.main(['verify', '--task', 'table-centralizers-G2', '--json', str(path)]) == index.EXIT_OK
    assert 'PASS' in capsys.readouterr().out
    report = json.loads(path.read_text(encoding='utf-8'))
    assert report['schema'] == 1
    assert report['task'] == 'table-centralizers-G2'


def test_orbit_command(tmp_path):
    path = tmp_path / 'orbit.json'
    assert index.main(['orbit', '--group', 'G2', '--p', '5', '--orbit', 'A1', '--json', str(path)]) == index.EXIT_OK
    report = json.loads(path.read_text(encoding='utf-8'))
    assert report['g_e'] == report['expected'] == 8


def test_orbit_without_representative():
    assert index.main(['orbit', '--group', 'G2', '--p', '5', '--orbit', 'G2(a1)']) == index.EXIT_USAGE
