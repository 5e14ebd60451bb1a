import subprocess
import sys

import pytest

from fbounded.cli import main
from fbounded.io import format_instance, load_kv, parse_instance

from conftest import k4, parallel3, star3, triangle


@pytest.fixture
def write(tmp_path):
    def _write(G, f, name="g.fbg"):
        path = tmp_path / name
        path.write_text(format_instance(G, f))
        return str(path)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_triangle(write, capsys):
    code, out, _ = run(capsys, "solve", "--input", write(triangle(), (1, 1, 1)))
    assert code == 0
    assert "|H| = 1" in out and "h = 2" in out


def test_solve_zero_weights_and_parallel(write, capsys):
    code, out, _ = run(capsys, "solve", "--input", write(k4(), (0,) * 4), "--format", "kv")
    assert code == 0 and load_kv(out)["size"] == "0"
    code, out, _ = run(capsys, "solve", "--input", write(parallel3(), (2, 2)), "--format", "kv")
    doc = load_kv(out)
    assert (doc["size"], doc["h"], doc["degree"]) == ("2", "4", "2,2")


def test_text_and_kv_report_same_numbers(write, capsys):
    path = write(star3(), (1,) * 4)
    _, text, _ = run(capsys, "certify", "--input", path)
    _, kv, _ = run(capsys, "certify", "--input", path, "--format", "kv")
    doc = load_kv(kv)
    assert doc["gamma"] == "2" and doc["S"] == "0" and doc["T"] == "" and doc["bound"] == "1"
    assert "gamma: 2" in text and "S: {0}" in text and "implied bound on |H|: 1" in text


def test_certify_examples(write, capsys):
    _, out, _ = run(capsys, "certify", "--input", write(triangle(), (1,) * 3), "--format", "kv")
    assert load_kv(out)["gamma"] == "1"
    _, out, _ = run(capsys, "certify", "--input", write(k4(), (1,) * 4), "--format", "kv")
    assert load_kv(out)["gamma"] == "0"


def test_guard_violation_exit_3(tmp_path, capsys):
    path = tmp_path / "big.fbg"
    assert run(capsys, "gen", "--n", "18", "--m", "5", "--fmax", "1", "--seed", "3", "--output", str(path))[0] == 0
    code, _, err = run(capsys, "certify", "--input", str(path))
    assert code == 3 and "too large" in err
    code, _, _ = run(capsys, "certify", "--input", str(path), "--limit", "4")
    assert code == 3


def test_parse_error_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.fbg"
    path.write_text("p fbg 2 1\nw 0 1\nw 1 1\ne 1 1\n")
    for cmd in ("solve", "certify", "verify"):
        code, _, err = run(capsys, cmd, "--input", str(path))
        assert code == 2 and "line 4" in err and "loop" in err


def test_verify_pass_and_forced_failure(write, tmp_path, capsys):
    path = write(triangle(), (1,) * 3)
    code, out, _ = run(capsys, "verify", "--input", path)
    assert code == 0 and out.rstrip().endswith("PASS")
    code, out, _ = run(capsys, "verify", "--input", write(k4(), (1,) * 4, "k4.fbg"), "--format", "kv")
    doc = load_kv(out)
    assert code == 0 and doc["gamma"] == "0" and "check.augmentation" not in doc

    _, cert, _ = run(capsys, "certify", "--input", path, "--format", "kv")
    corrupted = tmp_path / "cert.kv"
    corrupted.write_text(cert.replace("gamma = 1", "gamma = 3"))
    code, out, err = run(capsys, "verify", "--input", path, "--certificate", str(corrupted), "--format", "kv")
    assert code == 1
    assert load_kv(out)["first_failure"] == "certificate"
    assert "certificate" in err


def test_gen_deterministic_and_round_trips(capsys):
    _, a, _ = run(capsys, "gen", "--n", "6", "--m", "10", "--fmax", "3", "--seed", "12345")
    _, b, _ = run(capsys, "gen", "--n", "6", "--m", "10", "--fmax", "3", "--seed", "12345")
    assert a == b
    G, f = parse_instance(a)
    assert (G.n, G.m) == (6, 10) and max(f) <= 3
    assert format_instance(G, f) == a
    _, single, _ = run(capsys, "gen", "--n", "1", "--m", "0", "--fmax", "2", "--seed", "0")
    assert parse_instance(single)[0].n == 1


def test_gen_rejects_bad_parameters(capsys):
    assert run(capsys, "gen", "--n", "0", "--m", "0", "--fmax", "1", "--seed", "1")[0] == 2
    assert run(capsys, "gen", "--n", "1", "--m", "2", "--fmax", "1", "--seed", "1")[0] == 2
    assert run(capsys, "gen", "--n", "3", "--m", "2", "--fmax", "1")[0] == 2
    with pytest.raises(SystemExit):
        main(["gen", "--n", "3", "--m", "2", "--fmax", "1", "--seed", str(1 << 64)])
    with pytest.raises(SystemExit):
        main(["certify", "--input", "x", "--limit", "21"])


def test_selftest_small_and_vacuous(capsys):
    code, out, _ = run(capsys, "selftest", "--count", "25", "--seed", "99", "--format", "kv")
    doc = load_kv(out)
    assert code == 0 and doc["status"] == "PASS" and doc["strong_duality.pass"] == "25"
    code, out, _ = run(capsys, "selftest", "--count", "0")
    assert code == 0 and "PASS" in out


def test_selftest_single_seed_replay(capsys):
    _, a, _ = run(capsys, "selftest", "--count", "1", "--seed", "31", "--format", "kv")
    _, b, _ = run(capsys, "selftest", "--count", "1", "--seed", "31", "--format", "kv")
    assert a == b


def test_selftest_reports_failing_seed(monkeypatch, capsys):
    import fbounded.selftest as st

    real = st.battery

    def broken(G, f, limit):
        out = real(G, f, limit)
        out["strong_duality"] = False
        return out

    monkeypatch.setattr(st, "battery", broken)
    code, _, err = run(capsys, "selftest", "--count", "2", "--seed", "5")
    assert code == 1
    assert "seed=5" in err and "--count 1 --seed 5" in err


def test_module_entry_point(tmp_path):
    path = tmp_path / "t.fbg"
    path.write_text(format_instance(triangle(), (2, 2, 2)))
    proc = subprocess.run(
        [sys.executable, "-m", "fbounded", "solve", "--input", str(path), "--format", "kv"],
        capture_output=True, text=True, check=True,
    )
    assert load_kv(proc.stdout)["h"] == "6"
