import pytest

from steaneChef import __version__
from steaneChef.cli import cli
from steaneChef.config.config import Config
from steaneChef.core.codes import parse_check_file, validate
from steaneChef.utils.const import SUCCESS, USAGE_ERROR, VIOLATIONS
from steaneChef.utils.storage_utils import StorageUtils


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == SUCCESS
    assert __version__ in result.output


def test_codes_lists_registry(runner):
    result = runner.invoke(cli, ["codes"])
    assert result.exit_code == SUCCESS
    assert "steane" in result.output
    assert "[[7,1,3]]" in result.output
    assert "cc_4_8_8_17" in result.output


def test_codes_export_to_stdout(runner):
    result = runner.invoke(cli, ["codes", "--export", "steane"])
    assert result.exit_code == SUCCESS
    h_x, h_z = parse_check_file(result.output)
    assert validate(h_x, h_z).n == 7


def test_codes_export_to_out_dir(runner, tmp_path):
    result = runner.invoke(cli, ["--out", str(tmp_path), "codes", "--export", "steane"])
    assert result.exit_code == SUCCESS
    assert (tmp_path / "steane.checks").exists()


def test_codes_export_unknown(runner):
    result = runner.invoke(cli, ["codes", "--export", "nope"])
    assert result.exit_code == USAGE_ERROR
    assert "unknown code" in result.output


def test_synth_writes_run(runner, tmp_path):
    result = runner.invoke(cli, ["--out", str(tmp_path), "synth", "--code", "steane"])
    assert result.exit_code == SUCCESS, result.output
    assert "condition 1" in result.output
    manifest = StorageUtils.read_json(tmp_path / "manifest.json")
    assert manifest["command"] == "synth"
    assert "C4.circ" in manifest["outputs"]


def test_synth_seed_option(runner, tmp_path):
    result = runner.invoke(cli, ["--seed", "8", "--out", str(tmp_path), "synth", "--code", "steane"])
    assert result.exit_code == SUCCESS
    assert StorageUtils.read_json(tmp_path / "manifest.json")["seed"] == 8


def test_synth_unknown_code(runner, tmp_path):
    result = runner.invoke(cli, ["--out", str(tmp_path), "synth", "--code", "no_such_code"])
    assert result.exit_code == USAGE_ERROR
    assert not (tmp_path / "manifest.json").exists()


def test_synth_missing_code_option(runner):
    result = runner.invoke(cli, ["synth"])
    assert result.exit_code == USAGE_ERROR


@pytest.mark.integration
def test_synth_baseline_reports_violations(runner, tmp_path):
    result = runner.invoke(cli, ["--out", str(tmp_path), "synth", "--code", "cc_4_8_8_17", "--baseline"])
    assert result.exit_code == VIOLATIONS
    assert "FAIL" in result.output
    assert StorageUtils.read_json(tmp_path / "verify.json")["ok"] is False


def test_yaml_synth_config(runner, tmp_path):
    config = tmp_path / "synth.yaml"
    config.write_text("seed: 8\nmax_restarts: 5\n", encoding="utf-8")
    out = tmp_path / "out"
    result = runner.invoke(cli, ["--config", str(config), "--out", str(out), "synth", "--code", "steane"])
    assert result.exit_code == SUCCESS, result.output
    synth_config = StorageUtils.read_json(out / "manifest.json")["synth_config"]
    assert synth_config["seed"] == 8
    assert synth_config["max_restarts"] == 5


def test_bad_synth_config(runner, tmp_path):
    config = tmp_path / "synth.json"
    config.write_text('{"no_such_option": 1}', encoding="utf-8")
    result = runner.invoke(cli, ["--config", str(config), "codes"])
    assert result.exit_code == USAGE_ERROR
    assert "no_such_option" in result.output


def test_ini_config_updates_settings(runner, tmp_path):
    config = tmp_path / "steanechef.ini"
    config.write_text("[steanechef]\nthreads = 3\n", encoding="utf-8")
    result = runner.invoke(cli, ["--config", str(config), "codes"])
    assert result.exit_code == SUCCESS
    assert Config().threads == 3


def test_threads_option(runner):
    assert runner.invoke(cli, ["--threads", "2", "codes"]).exit_code == SUCCESS
    assert Config().threads == 2
    assert runner.invoke(cli, ["--threads", "0", "codes"]).exit_code == USAGE_ERROR


def test_verify_directory(runner, tmp_path, steane_circuit_dir):
    out = tmp_path / "out"
    result = runner.invoke(cli, ["--out", str(out), "verify", "--code", "steane", str(steane_circuit_dir)])
    assert result.exit_code == SUCCESS, result.output
    assert StorageUtils.read_json(out / "verify.json")["ok"] is True


def test_verify_malformed_circuit(runner, tmp_path, steane_circuit_dir):
    (steane_circuit_dir / "C3.circ").write_text("CX 0 1\n", encoding="utf-8")
    result = runner.invoke(cli, ["--out", str(tmp_path / "out"), "verify", "--code", "steane", str(steane_circuit_dir)])
    assert result.exit_code == USAGE_ERROR
    assert "C3.circ" in result.output


def test_verify_needs_circuits(runner):
    assert runner.invoke(cli, ["verify", "--code", "steane"]).exit_code == USAGE_ERROR


def test_simulate_noiseless(runner, tmp_path, steane_circuit_dir):
    out = tmp_path / "out"
    result = runner.invoke(
        cli,
        ["--seed", "3", "--out", str(out), "simulate", "--code", "steane", str(steane_circuit_dir),
         "--p", "0", "--shots", "50"],
    )
    assert result.exit_code == SUCCESS, result.output
    assert "r_A=1.0000" in result.output
    assert (out / "sim_x.csv").exists()
    assert (out / "sim_z.csv").exists()


@pytest.mark.parametrize("rates", ["abc", "0.5,2"])
def test_simulate_bad_rates(runner, steane_circuit_dir, rates):
    result = runner.invoke(cli, ["simulate", "--code", "steane", str(steane_circuit_dir), "--p", rates])
    assert result.exit_code == USAGE_ERROR


def test_inject(runner, tmp_path, steane_circuit_dir):
    result = runner.invoke(cli, ["--out", str(tmp_path / "out"), "inject", "--code", "steane", str(steane_circuit_dir)])
    assert result.exit_code == SUCCESS, result.output
    assert "0 counterexample(s)" in result.output
    assert StorageUtils.read_json(tmp_path / "out" / "inject.json")["ok"] is True


def test_inject_budget_exceeded(runner, tmp_path, steane_circuit_dir):
    result = runner.invoke(
        cli,
        ["--out", str(tmp_path / "out"), "inject", "--code", "steane", str(steane_circuit_dir), "--budget", "1"],
    )
    assert result.exit_code == USAGE_ERROR
    assert "budget" in result.output
