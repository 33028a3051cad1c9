import json
import os

import pytest

from central_extension_app import EXIT_PASS, EXIT_REFUSED, main


@pytest.fixture
def template(templates_dir):
    return lambda name: os.path.join(templates_dir, name)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_crossed_module_passes(capsys, template):
    code, out = run(capsys, 'check-2group', '--input', template('crossed_module_z2_z4.json'))
    assert code == EXIT_PASS
    assert json.loads(out)['status'] == 'pass'


def test_skeletal_two_group(capsys, template):
    code, _ = run(capsys, 'check-2group', '--input', template('skeletal_z2_abc.json'))
    assert code == EXIT_PASS


def test_unclosed_theta_is_refused(capsys, template):
    code, out = run(capsys, 'build-extension', '--cocycle', template('cocycle_bad_theta.json'))
    assert code == EXIT_REFUSED
    finding = json.loads(out)['findings'][0]
    assert finding['check'] == 'cocycle.theta_closed'
    assert len(finding['witness']) == 4


def test_build_extension_exports(capsys, template, tmp_path):
    export = tmp_path / 'total.json'
    code, out = run(capsys, 'build-extension', '--cocycle', template('cocycle_z2_z4.json'), '--export', str(export))
    assert code == EXIT_PASS
    assert json.loads(out)['provenance']['objects'] == 8
    code, _ = run(capsys, 'check-2group', '--input', str(export))
    assert code == EXIT_PASS


def test_cohomology(capsys, template):
    code, out = run(capsys, 'cohomology', '--input', template('cohomology_z4_integers.json'))
    assert code == EXIT_PASS
    assert json.loads(out)['findings'][0]['value']['invariant_factors'] == [4]


def test_cone_h2(capsys, template):
    code, out = run(capsys, 'cone-h2', '--tau', template('cone_z2_z4.json'))
    assert code == EXIT_PASS
    assert json.loads(out)['findings'][0]['check'] == 'cone_h2.classes'


def test_band(capsys, template):
    code, out = run(capsys, 'band', '--extension', template('cocycle_band_z4.json'))
    assert code == EXIT_PASS
    assert 'band.invariants' in [f['check'] for f in json.loads(out)['findings']]


def test_heisenberg_pipeline(capsys):
    code, out = run(capsys, 'pipeline', 'heisenberg', '--fd-step', '1e-3')
    assert code == EXIT_PASS
    provenance = json.loads(out)['provenance']
    assert provenance['fd_step'] == 1e-3
    assert {'quad_order', 'tolerance_estimate'} <= set(provenance)


def test_malformed_json_is_refused(capsys, tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"kind": ', encoding='utf-8')
    code, out = run(capsys, 'check-2group', '--input', str(path))
    assert code == EXIT_REFUSED
    assert 'Malformed JSON' in json.loads(out)['findings'][0]['detail']


def test_non_integer_group_order_is_refused(capsys, tmp_path):
    path = tmp_path / 'crossed.json'
    path.write_text(json.dumps({'kind': 'crossed_module', 'h': {'type': 'cyclic', 'n': 'abc'},
                                'g': {'type': 'cyclic', 'n': 4}, 'tau': [0, 2]}), encoding='utf-8')
    code, out = run(capsys, 'check-2group', '--input', str(path))
    assert code == EXIT_REFUSED
    assert json.loads(out)['status'] == 'refused'


def test_ragged_group_table_is_refused(capsys, tmp_path):
    path = tmp_path / 'cohomology.json'
    path.write_text(json.dumps({'group': {'type': 'finite', 'table': [[0, 1], [1]]},
                                'coeff': {'torsion': [2]}}), encoding='utf-8')
    code, out = run(capsys, 'cohomology', '--input', str(path))
    assert code == EXIT_REFUSED
    assert json.loads(out)['findings'][0]['detail'].startswith('Invalid group')


def test_non_integer_degree_is_refused(capsys, template, tmp_path):
    with open(template('cohomology_z4_integers.json'), encoding='utf-8') as f:
        data = json.load(f)
    data['degree'] = 'two'
    path = tmp_path / 'cohomology.json'
    path.write_text(json.dumps(data), encoding='utf-8')
    code, _ = run(capsys, 'cohomology', '--input', str(path))
    assert code == EXIT_REFUSED


def test_missing_flag_is_refused(capsys):
    code, _ = run(capsys, 'integrate', '--group', 'su2')
    assert code == EXIT_REFUSED


def test_unknown_verb():
    with pytest.raises(SystemExit) as excinfo:
        main(['frobnicate'])
    assert excinfo.value.code == 2


def test_runs_are_deterministic(capsys, template):
    first = run(capsys, 'check-2group', '--input', template('crossed_module_z2_z4.json'))
    second = run(capsys, 'check-2group', '--input', template('crossed_module_z2_z4.json'))
    assert first == second


def test_text_format(capsys, template):
    code, out = run(capsys, 'verify-cocycle', '--cocycle', template('cocycle_z2_z4.json'), '--format', 'text')
    assert code == EXIT_PASS
    assert out.startswith('✅')


def test_output_file(capsys, template, tmp_path):
    target = tmp_path / 'report.json'
    code, out = run(capsys, 'verify-cocycle', '--cocycle', template('cocycle_z2_z4.json'), '--output', str(target))
    assert code == EXIT_PASS
    assert out == ''
    assert json.loads(target.read_text(encoding='utf-8'))['status'] == 'pass'


@pytest.mark.parametrize('argv', [
    ['integrate', '--group', 'su2', '--omega', 'omega_su2_coboundary.json', '--pair', 'pair_su2.json'],
    ['defect', '--group', 'su2', '--omega', 'omega_su2_coboundary.json', '--samples', '3'],
    ['derive-lf', '--group', 'r2', '--omega', 'omega_r2_symplectic.json'],
    ['derive-bracket', '--group', 'heisenberg', '--samples', '3'],
    ['covering', '--samples', '50'],
    ['pipeline', 'heisenberg'],
    ['exp-check', '--samples', '3'],
], ids=lambda argv: argv[0])
def test_numeric_verbs_record_parameters(capsys, template, argv):
    argv = [template(a) if a.endswith('.json') else a for a in argv]
    code, out = run(capsys, *argv, '--quad-order', '8', '--fd-step', '2e-3')
    assert code != EXIT_REFUSED
    provenance = json.loads(out)['provenance']
    assert provenance['quad_order'] == 8
    assert provenance['fd_step'] == 2e-3
    assert provenance['tolerance_estimate'] >= 0.0
