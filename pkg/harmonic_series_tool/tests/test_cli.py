"""
Tests for the harmonic-cli command-line interface.
"""
import json
from fractions import Fraction

import pytest

from harmonic_series_tool.cli import main
from harmonic_series_tool.cli.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, parse_bindings, run
from harmonic_series_tool.config.settings_manager import get_settings_manager
from harmonic_series_tool.engine.errors import ParameterError


def test_no_command_prints_help(capsys):
    assert run([]) == EXIT_USAGE
    assert 'harmonic-cli' in capsys.readouterr().out


def test_help_exits_cleanly(capsys):
    assert run(['--help']) == EXIT_OK


def test_euler_sum(capsys):
    assert run(['euler-sum', '--p', '1', '--q', '2']) == EXIT_OK
    assert capsys.readouterr().out.strip() == "5/8*zeta(3)"


def test_euler_sum_numeric(capsys):
    assert run(['euler-sum', '--p', '2', '--q', '3', '--numeric', '--digits', '20']) == EXIT_OK
    out = capsys.readouterr().out
    assert 'matched' in out


def test_euler_sum_even_weight_is_usage_error(capsys):
    assert run(['euler-sum', '--p', '1', '--q', '3']) == EXIT_USAGE
    assert 'odd' in capsys.readouterr().err


def test_eval_decimal_param_is_usage_error(capsys):
    assert run(['eval', '--id', 'THM_HARDY_ALT', '--param', 'x=0.5']) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "THM_HARDY_ALT parameters:" in err
    assert "x: rational > 0" in err


def test_eval_out_of_domain_param(capsys):
    assert run(['eval', '--id', 'THM_HARDY_ALT', '--param', 'k=0']) == EXIT_USAGE


def test_eval_unknown_identity(capsys):
    assert run(['eval', '--id', 'NOPE']) == EXIT_USAGE
    assert "harmonic-cli list" in capsys.readouterr().err


def test_eval_json(capsys):
    assert run(['eval', '--id', 'TRIGAMMA_THIRD', '--output', 'json']) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data[0]['id'] == 'TRIGAMMA_THIRD'
    assert data[0]['status'] == 'pass'


def test_list(capsys):
    assert run(['list']) == EXIT_OK
    out = capsys.readouterr().out
    assert 'THM_S1' in out
    assert 'Glaisher-Kinkelin constant' in out
    assert out.strip().endswith('identities')


def test_verify_selection_json(capsys, tmp_path):
    report_path = tmp_path / "report.json"
    code = run(['verify', '--only', 'TRIGAMMA*', '--digits', '20', '--output', 'json',
                '--json', str(report_path)])
    assert code == EXIT_OK
    printed = json.loads(capsys.readouterr().out)
    assert [item['id'] for item in printed] == ['TRIGAMMA_FIVE_SIXTHS', 'TRIGAMMA_THIRD']
    assert json.loads(report_path.read_text(encoding='utf-8')) == printed


def test_verify_text_summary(capsys):
    assert run(['verify', '--only', 'LEMNISCATE*']) == EXIT_OK
    assert capsys.readouterr().out.strip().endswith("1/1 passed")


def test_verify_empty_selection(capsys):
    assert run(['verify', '--only', 'NOTHING*']) == EXIT_USAGE


def test_verify_bad_digits(capsys):
    assert run(['verify', '--digits', '5']) == EXIT_USAGE
    assert run(['verify', '--digits', '2001']) == EXIT_USAGE
    assert '<= 2000' in capsys.readouterr().err


def test_verify_error_check_default_from_settings(capsys, monkeypatch, isolated_settings):
    seen = []
    real_verify_all = main.verify_all

    def recording_verify_all(policy, selection):
        seen.append(policy)
        return real_verify_all(policy, selection)

    monkeypatch.setattr(main, 'verify_all', recording_verify_all)
    isolated_settings.verification.check_errors = True
    assert run(['verify', '--only', 'TRIGAMMA_THIRD', '--digits', '20']) == EXIT_OK
    assert seen[0].check_errors


def test_verify_forced_missing_method_fails(capsys):
    assert run(['verify', '--only', 'LEMNISCATE*', '--method', 'abel']) == EXIT_FAILED


def test_special(capsys):
    assert run(['special', '--fn', 'zeta', '--arg', '3', '--digits', '20']) == EXIT_OK
    assert capsys.readouterr().out.strip() == "1.2020569031595942854"


def test_special_unknown_function(capsys):
    assert run(['special', '--fn', 'nope']) == EXIT_USAGE


def test_special_missing_order(capsys):
    assert run(['special', '--fn', 'polylog', '--arg', '1/2']) == EXIT_USAGE


def test_integrate(capsys):
    assert run(['integrate', '--id', 'HARMONIC_REP', '--param', 'n=3']) == EXIT_OK
    assert 'pass' in capsys.readouterr().out
    assert run(['integrate', '--id', 'HARDY_BASE_ALT']) == EXIT_USAGE


def test_settings_commands(capsys):
    assert run(['settings', 'set', 'digits=40', 'workers=2']) == EXIT_OK
    assert get_settings_manager().load_overrides() == {'digits': 40, 'workers': 2}
    assert run(['settings', 'show']) == EXIT_OK
    out = capsys.readouterr().out
    assert 'digits      40 (override)' in out
    assert run(['settings', 'set', 'digits=abc']) == EXIT_USAGE
    assert run(['settings', 'set', 'digits=3']) == EXIT_USAGE
    assert run(['settings', 'reset']) == EXIT_OK
    assert get_settings_manager().load_overrides() == {}


def test_parse_bindings():
    assert parse_bindings(['k=2', 'x = 7/2']) == {'k': 2, 'x': Fraction(7, 2)}
    assert parse_bindings(None) == {}
    with pytest.raises(ParameterError):
        parse_bindings(['k2'])
