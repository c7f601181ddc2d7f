import json
import subprocess
import sys

import pytest

from simplegames.cli import EXIT_FALSE, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_PARSE, EXIT_USAGE, main
from simplegames.constructions import gn2_certificate
from simplegames.game_core import format_game, parse_game
from simplegames.trade_algebra import format_certificate


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def fano_file(tmp_path, capsys):
    path = tmp_path / "fano.game"
    assert run(capsys, "construct", "fano", "-o", path)[0] == EXIT_OK
    return path


def test_construct_writes_parseable_game(fano_file):
    g = parse_game(fano_file.read_text())
    assert g.n == 7 and len(g.min_winning) == 7


def test_analyze_fano_end_to_end(capsys, fano_file):
    code, out, _ = run(capsys, "analyze", fano_file)
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["schema"] == 1 and rep["verdict"] == "not_roughly_weighted"
    assert (rep["f"], rep["g"], rep["exact"]) == (2, 8, True)
    assert rep["class"]["constant_sum"]


def test_analyze_is_byte_identical(capsys, fano_file):
    a = run(capsys, "analyze", fano_file)[1]
    b = run(capsys, "--threads", 4, "analyze", fano_file)[1]
    assert a == b


def test_analyze_weighted_rationals(capsys, tmp_path):
    path = tmp_path / "un.game"
    run(capsys, "construct", "un", "-o", path)
    rep = json.loads(run(capsys, "analyze", path)[1])
    assert rep["verdict"] == "weighted" and rep["f"] == "unbounded"
    assert all("/" in w for w in rep["representation"]["weights"])


def test_gn2_potent_certificate(capsys, tmp_path):
    game = tmp_path / "g52.game"
    cert = tmp_path / "g52.cert"
    run(capsys, "construct", "gn2", "--n", 5, "-o", game)
    code, out, _ = run(capsys, "certificate", game, "--potent", "--json")
    assert code == EXIT_OK and json.loads(out)["length"] == 13
    assert run(capsys, "certificate", game, "--potent", "-o", cert)[0] == EXIT_OK
    code, out, _ = run(capsys, "verify", game, cert)
    assert code == EXIT_OK and "valid" in out


def test_verify_representations(capsys, tmp_path):
    game = tmp_path / "ex2.game"
    run(capsys, "construct", "example2", "-o", game)
    assert run(capsys, "verify", game, "[3; 1 1 1 1 1 1] rough")[0] == EXIT_OK
    assert run(capsys, "verify", game, "[3; 1 1 1 1 1 1] weighted")[0] == EXIT_FALSE
    assert run(capsys, "verify", game, "[3; 1 1 1 1 1 1] rough", "--flavor", "weighted")[0] == EXIT_USAGE
    assert run(capsys, "verify", game, "[3; 1 1 1] rough")[0] == EXIT_USAGE


def test_verify_rejects_bad_certificate(capsys, tmp_path, fano_file):
    cert = tmp_path / "bad.cert"
    cert.write_text(format_certificate(gn2_certificate(5)))
    code, _, err = run(capsys, "verify", fano_file, cert)
    assert code == EXIT_FALSE and "5 players" in err


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.game"
    bad.write_text("players: 3\nminwin: 1 x\n")
    code, _, err = run(capsys, "analyze", bad)
    assert code == EXIT_PARSE and "line 2, column 11" in err


def test_usage_errors(capsys):
    assert run(capsys, "construct", "hadamard")[0] == EXIT_USAGE
    assert run(capsys, "construct", "bogus")[0] == EXIT_USAGE
    assert run(capsys, "analyze", "/nonexistent/file.game")[0] == EXIT_USAGE


def test_strict_inconclusive(capsys, tmp_path):
    game = tmp_path / "g52.game"
    run(capsys, "construct", "gn2", "--n", 5, "-o", game)
    assert run(capsys, "certificate", game, "--potent", "--max-len", 8, "--strict")[0] == EXIT_INCONCLUSIVE
    assert run(capsys, "certificate", game, "--potent", "--max-len", 8)[0] == EXIT_OK


def test_enumerate_n4(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "enumerate", "--n", 4, "--check", "rough", "--report", report, "--json")
    data = json.loads(out)
    assert code == EXIT_OK and data["not_roughly_weighted"] == 0 and data["violations"] == 0
    assert report.read_text() == out


def test_enumerate_sample_is_seeded(capsys):
    a = run(capsys, "--seed", 3, "enumerate", "--n", 5, "--sample", 20, "--json")[1]
    b = run(capsys, "--seed", 3, "enumerate", "--n", 5, "--sample", 20, "--json")[1]
    assert a == b and json.loads(a)["total_games"] == 20


def test_emitted_artifacts_reverify(capsys, tmp_path, fano_file):
    cert = tmp_path / "f.cert"
    run(capsys, "certificate", fano_file, "-o", cert)
    assert run(capsys, "verify", fano_file, cert)[0] == EXIT_OK


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "simplegames.cli", "construct", "fano"],
                          capture_output=True, text=True, check=True)
    assert format_game(parse_game(proc.stdout)) == proc.stdout
