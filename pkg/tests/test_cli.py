import json

import pytest
from click.testing import CliRunner

from app import main


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def motivating_file(tmp_path, runner):
    path = tmp_path / "motivating.json"
    result = runner.invoke(main, ["gen", "--fixture", "motivating", "-o", str(path)])
    assert result.exit_code == 0, result.output
    return path


def _write(path, payload):
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


def test_fixtures_list(runner):
    result = runner.invoke(main, ["fixtures", "list"])
    assert result.exit_code == 0
    assert "motivating n=5 c1:{p2}; c2:{p3⊕p4}" in result.output
    assert "alice-bob n=2" in result.output


def test_gen_random_to_stdout(runner):
    result = runner.invoke(main, ["gen", "--family", "random", "--n", "4", "--p-has", "0.5", "--seed", "7"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["n"] == 4


def test_gen_rejects_bad_family_params(runner):
    result = runner.invoke(main, ["gen", "--family", "matching2-noF", "--n", "4"])
    assert result.exit_code == 2
    assert "BadFamilyParams" in result.output


def test_solve_motivating(runner, motivating_file, tmp_path):
    code_path = tmp_path / "code.json"
    trace_path = tmp_path / "trace.txt"
    dot_path = tmp_path / "g.dot"
    result = runner.invoke(main, [
        "solve", str(motivating_file), "-o", str(code_path),
        "--trace", str(trace_path), "--dot", str(dot_path),
    ])
    assert result.exit_code == 0, result.output
    assert "ℓ=3" in result.output
    assert "coding_gain=5/3 (1.6667)" in result.output
    assert "fallback_used=true" in result.output
    assert json.loads(code_path.read_text(encoding="utf-8"))[0] == ["p1", "p2"]
    assert len(trace_path.read_text(encoding="utf-8").splitlines()) == 3
    assert dot_path.exists()


def test_solve_baseline(runner, motivating_file):
    result = runner.invoke(main, ["solve", str(motivating_file), "-a", "ldg"])
    assert result.exit_code == 0
    assert "ℓ=5" in result.output
    assert "fallback_used=false" in result.output


def test_solve_trace_needs_ucic(runner, motivating_file, tmp_path):
    result = runner.invoke(main, ["solve", str(motivating_file), "-a", "ldg", "--trace", str(tmp_path / "t")])
    assert result.exit_code == 1


def test_solve_with_decision_log(runner, motivating_file, tmp_path):
    log_dir = tmp_path / "decisions"
    result = runner.invoke(main, ["solve", str(motivating_file), "--log", "--log-dir", str(log_dir)])
    assert result.exit_code == 0
    assert len(list(log_dir.glob("solve_decisions_*.json"))) == 1
    assert len(list(log_dir.glob("solve_decisions_*.txt"))) == 1
    assert "decisões em" in result.output


def test_usage_errors_exit_1(runner, motivating_file):
    assert runner.invoke(main, ["frobnicate"]).exit_code == 1
    assert runner.invoke(main, ["solve", str(motivating_file), "-a", "dsatur"]).exit_code == 1
    assert runner.invoke(main, ["oracle", "rank"]).exit_code == 1


def test_malformed_instance_exit_2(runner, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 1, "k": ', encoding="utf-8")
    result = runner.invoke(main, ["solve", str(bad)])
    assert result.exit_code == 2
    assert "ParseError" in result.output


def test_multicast_instance_exit_2(runner, tmp_path):
    path = _write(tmp_path / "multicast.json", {
        "n": 2, "k": 2,
        "clients": [{"has": ["p2"], "want": ["p1"]}, {"has": [], "want": ["p1"]}],
    })
    result = runner.invoke(main, ["solve", str(path)])
    assert result.exit_code == 2
    assert "MulticastInput" in result.output


def test_verify_valid_and_invalid(runner, motivating_file, tmp_path):
    good = _write(tmp_path / "good.json", [["p1", "p2"], ["p3", "p5"], ["p2", "p3", "p4"]])
    reversed_code = _write(tmp_path / "rev.json", [["p2", "p3", "p4"], ["p3", "p5"], ["p1", "p2"]])

    ok = runner.invoke(main, ["verify", str(motivating_file), str(good), "--payload-size", "16"])
    assert ok.exit_code == 0
    assert "válido: ℓ=3" in ok.output

    bad = runner.invoke(main, ["verify", str(motivating_file), str(reversed_code)])
    assert bad.exit_code == 2
    assert "c3 sem p3" in bad.output
    assert "c4 sem p4" in bad.output

    fixpoint = runner.invoke(main, ["verify", str(motivating_file), str(reversed_code), "--fixpoint"])
    assert fixpoint.exit_code == 0


def test_verify_unknown_symbol(runner, motivating_file, tmp_path):
    code = _write(tmp_path / "code.json", [["p1", "p9"]])
    result = runner.invoke(main, ["verify", str(motivating_file), str(code)])
    assert result.exit_code == 2
    assert "UnknownSymbol" in result.output


@pytest.mark.parametrize("oracle, value", [("minrk2", "3"), ("phi", "5"), ("omega", "2")])
def test_oracles(runner, motivating_file, oracle, value):
    result = runner.invoke(main, ["oracle", oracle, str(motivating_file)])
    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[0] == value


def test_oracle_witnesses(runner, motivating_file):
    omega = runner.invoke(main, ["oracle", "omega", str(motivating_file)])
    assert omega.output.splitlines()[1] == "p1⊕p5"
    minrk = runner.invoke(main, ["oracle", "minrk2", str(motivating_file)])
    assert len(minrk.output.splitlines()) == 1 + 5


def test_oracle_too_large(runner, tmp_path):
    path = tmp_path / "big.json"
    runner.invoke(main, ["gen", "--family", "complete", "--n", "7", "-o", str(path)])
    result = runner.invoke(main, ["oracle", "minrk2", str(path), "--max-free", "10"])
    assert result.exit_code == 2
    assert "TooLarge" in result.output


def test_check_motivating(runner, motivating_file):
    result = runner.invoke(main, ["check", str(motivating_file)])
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[:3] == ["omega=2", "minrk2=3", "phi=5"]
    assert "ucic-ldg ℓ=3" in lines
    assert "ldg ℓ=5" in lines


def test_check_complete(runner, tmp_path):
    path = tmp_path / "complete.json"
    runner.invoke(main, ["gen", "--family", "complete", "--n", "4", "-o", str(path)])
    result = runner.invoke(main, ["check", str(path)])
    assert result.exit_code == 0
    assert result.output.splitlines()[:3] == ["omega=1", "minrk2=1", "phi=1"]


def test_experiment_csv(runner, tmp_path):
    args = ["experiment", "--n", "5", "--p-has", "0.3", "--trials", "2", "-a", "ldg", "-a", "ucic-ldg"]
    first = runner.invoke(main, args)
    assert first.exit_code == 0, first.output
    lines = first.stdout.splitlines()
    assert lines[0] == "n,p_has,algorithm,trial,seed,ell,coding_gain,fallback_used"
    assert len(lines) == 1 + 4
    assert runner.invoke(main, args).stdout == first.stdout

    out = tmp_path / "exp.csv"
    saved = runner.invoke(main, args + ["-o", str(out)])
    assert saved.exit_code == 0
    assert out.read_text(encoding="utf-8") == first.stdout
    assert "ucic-ldg vs ldg" in saved.output


def test_gen_accepts_negative_seed(runner):
    result = runner.invoke(main, ["gen", "--family", "random", "--n", "5", "--p-has", "0.3", "--seed=-1"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["n"] == 5


def test_gen_rejects_out_of_range_probability(runner):
    result = runner.invoke(main, ["gen", "--family", "random", "--p-has", "1.5"])
    assert result.exit_code == 2
    assert "BadFamilyParams" in result.output


def test_gen_single_uniprior_reports_cycles(runner):
    result = runner.invoke(main, ["gen", "--family", "single-uniprior", "--n", "6", "--seed", "2"])
    assert result.exit_code == 0
    assert "xi=" in result.output


def test_exports_use_original_symbol_names(runner, tmp_path):
    path = _write(tmp_path / "dropped.json", {
        "n": 2, "k": 3,
        "clients": [{"has": ["p3"], "want": ["p2"]}, {"has": ["p2"], "want": ["p3"]}],
    })
    dot_path = tmp_path / "g.dot"
    trace_path = tmp_path / "trace.txt"
    result = runner.invoke(main, ["solve", str(path), "--dot", str(dot_path), "--trace", str(trace_path)])
    assert result.exit_code == 0, result.output
    assert "code={p2⊕p3}" in result.output

    dot = dot_path.read_text(encoding="utf-8")
    assert '"p2" -> "p3";' in dot
    assert '"p1"' not in dot
    assert "p1" not in trace_path.read_text(encoding="utf-8")
