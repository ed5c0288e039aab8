"""Check results, report documents and their renderings."""
import json

import jsonschema
import numpy as np
import pytest

from qoscillator.algebra.exact import PARAMETERS, gen
from qoscillator.reports.core import (
    FAIL,
    PASS,
    SCHEMA_VERSION,
    Check,
    Report,
    control_check,
    format_key,
    load_schema,
    render_text,
    residual_check,
    summarize,
)

z = gen('z')


def _report():
    return Report(
        'verify-hopf',
        {'order': 4, 'algebra': 'h4', 'seed': 1},
        [
            Check('first', tables={'antipode': {'N': '-N'}}, elapsed=0.5),
            Check('second', elapsed=1.25),
        ],
        total_time=1.75,
    )


@pytest.mark.parametrize(
    'key,expected',
    [
        ('N', 'N'),
        (('N', 'A+'), 'N,A+'),
        ((2, 3), '2,3'),
        (('antipode', 'M', 'left'), 'antipode,M,left'),
    ],
)
def test_format_key(key, expected):
    assert format_key(key) == expected


def test_summarize(deformed):
    assert summarize(deformed.zero) is None
    assert summarize(PARAMETERS.zero) is None
    assert summarize(deformed.gen('A-') * 2) == '2 A-'
    assert summarize(z) == 'z'
    matrix = np.zeros((3, 3), dtype=object)
    assert summarize(matrix) is None
    matrix[1, 2] = z
    assert summarize(matrix) == '1 nonzero entries, first at 2,3: z'


def test_residual_check(deformed):
    N = deformed.gen('N')
    check = residual_check('vanishing', {('N', 'A+'): deformed.zero, 'M': 0})
    assert check.status == PASS
    assert check.residuals == {}

    check = residual_check('broken', {('N', 'A+'): N - N, ('N', 'M'): N}, {'x': 1})
    assert check.status == FAIL
    assert check.residuals == {'N,M': 'N'}
    assert check.tables == {'x': 1}


def test_control_check(deformed):
    assert control_check('control', {'A+': deformed.gen('A+')}).status == PASS
    check = control_check('control', {'A+': deformed.zero})
    assert check.status == FAIL
    assert check.error


def test_report_status():
    report = _report()
    assert report.status == PASS
    assert report.return_code == 0
    report.checks.append(Check('third', status=FAIL, error='ValueError: boom'))
    assert report.status == FAIL
    assert report.return_code == 1
    assert Report('classify', {}).status == FAIL


def test_report_document():
    document = _report().to_dict()
    assert document['schema_version'] == SCHEMA_VERSION
    assert document['timing'] == {'total': 1.75, 'checks': {'first': 0.5, 'second': 1.25}}
    assert all('elapsed' not in check for check in document['checks'])
    assert 'timing' not in _report().to_dict(timing=False)


def test_report_determinism():
    first, second = _report(), _report()
    second.total_time = 99.0
    second.checks[0].elapsed = 7.0
    assert first.to_json(timing=False) == second.to_json(timing=False)
    assert first.to_json() != second.to_json()
    assert json.loads(first.to_json())['checks'][0]['tables'] == {'antipode': {'N': '-N'}}


def test_report_schema():
    schema = load_schema()
    jsonschema.Draft202012Validator.check_schema(schema)
    assert schema['properties']['schema_version']['const'] == SCHEMA_VERSION
    report = _report()
    report.checks.append(Check('third', status=FAIL, residuals={'N,A+': 'z A+'}, error='x'))
    document = report.validate()
    jsonschema.validate(instance=document, schema=schema)
    jsonschema.validate(instance=report.to_dict(timing=False), schema=schema)


@pytest.mark.parametrize(
    'change',
    [
        {'command': 'verify-nothing'},
        {'status': 'UNKNOWN'},
        {'extra': 1},
    ],
)
def test_report_schema_rejects(change):
    document = {**_report().to_dict(), **change}
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(instance=document, schema=load_schema())


def test_invalid_report_is_not_written(tmp_path):
    report = Report('verify-nothing', {'order': 1})
    with pytest.raises(jsonschema.ValidationError):
        report.write(tmp_path / 'report.json')
    assert not (tmp_path / 'report.json').exists()


def test_render_text():
    report = _report()
    report.checks.append(Check('third', status=FAIL, residuals={'N,A+': 'z A+'}, error='not zero'))
    text = report.render_text()
    assert text.splitlines()[0] == 'qoscillator verify-hopf: FAIL'
    assert '[PASS] first' in text
    assert '[FAIL] third' in text
    assert '    residual N,A+: z A+' in text
    assert '    error: not zero' in text
    assert '      N: -N' in text
    assert 'total time' not in render_text(report.to_dict(timing=False))


@pytest.mark.parametrize('output_format', ['json', 'text'])
def test_write(tmp_path, output_format):
    report = _report()
    target = tmp_path / 'reports' / f'report.{output_format}'
    text = report.write(target, output_format)
    assert target.read_text() == text + '\n'
    if output_format == 'json':
        assert json.loads(text)['status'] == PASS
    else:
        assert text.startswith('qoscillator verify-hopf: PASS')
