import subprocess
import sys

import pytest

from tbt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_identity(capsys):
    code, out, _ = run(capsys, "eval", "--action", "c2", "tau[s] * tau[s]")
    assert code == 0
    assert "germinal twists: {e}" in out


def test_eval_rows(capsys):
    code, out, _ = run(capsys, "eval", "--action", "trivial:2", "--format", "rows", "x[1]")
    assert code == 0
    assert out.splitlines()[0] == "element,rank,corank,twists,spectrum"
    assert out.splitlines()[1].endswith('"{1}"')


def test_iota1_twists(capsys):
    code, out, _ = run(capsys, "eval", "iota1[1,s]")
    assert code == 0 and "germinal twists: {e, s}" in out


def test_malformed_word_is_a_usage_error(capsys):
    code, _, err = run(capsys, "eval", "x[1] • (")
    assert code == 2
    assert "^" in err


def test_bad_action_is_a_usage_error(capsys):
    code, _, err = run(capsys, "eval", "--action", "nope", "x[1]")
    assert code == 2 and "unknown action" in err


def test_relations(capsys):
    code, out, _ = run(capsys, "relations", "--action", "F", "--count", "5", "--seed", "7")
    assert code == 0 and "F: PASS" in out


def test_relations_rows(capsys, monkeypatch):
    monkeypatch.setenv("TBT_SEED", "3")
    code, out, _ = run(capsys, "relations", "--count", "3", "--format", "rows")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "action,relation,instances,failures" and len(lines) == 9


def test_bad_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("TBT_SEED", "x")
    code, _, _ = run(capsys, "relations", "--count", "1")
    assert code == 2


def test_factorize(capsys):
    code, out, _ = run(capsys, "factorize", "--action", "c2", "x[1]^-1 • (x[2]^-1 ⊕ tau[s]) • (x[2] ⊕ id[1]) • x[1] • tau[s]")
    assert code == 0 and "recomposition: PASS" in out


def test_factorize_rejects_splits(capsys):
    code, _, _ = run(capsys, "factorize", "x[1]")
    assert code == 2


def test_rho(capsys):
    assert run(capsys, "rho", "iota0[s]")[:2] == (0, "s\n")
    assert run(capsys, "rho", "iota1[1,s]")[:2] == (0, "e\n")
    assert run(capsys, "rho", "--basepoint", "P[1]{1=1}", "iota1[1,s]")[:2] == (0, "s\n")


def test_complex_matching(capsys):
    code, out, _ = run(capsys, "complex", "matching", "7", "--degree", "1")
    assert code == 0
    assert "Z/3" in out and "PASS" in out


def test_complex_rows(capsys):
    code, out, _ = run(capsys, "complex", "VE", "5", "--colors", "2", "--format", "rows")
    assert code == 0
    assert out.splitlines()[1] == "VE_5(|S|=2),0,0,"


def test_complex_usage(capsys):
    assert run(capsys, "complex", "E", "1")[0] == 2
    assert run(capsys, "complex", "E", "4", "--action", "c2")[0] == 2
    assert run(capsys, "complex", "E", "6", "--colors", "2", "--cap", "10")[0] == 2


def test_core_and_join(capsys):
    code, out, _ = run(capsys, "core", "--action", "trivial:2", "id[1]", "(x[2] ⊕ id[1]) • x[1]")
    assert code == 0 and out.startswith("EL{")
    code, _, _ = run(capsys, "core", "--action", "trivial:2", "x[1]", "id[1]")
    assert code == 1
    code, out, _ = run(capsys, "join", "--action", "trivial:2", "x[1]", "x[2]")
    assert code == 0 and out.startswith("FOREST{")


def test_missing_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tbt.cli", "rho", "iota0[s]"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "s\n"


def test_seeded_runs_are_deterministic(capsys):
    first = run(capsys, "relations", "--action", "houghton:3", "--count", "4", "--seed", "11", "--format", "rows")
    second = run(capsys, "relations", "--action", "houghton:3", "--count", "4", "--seed", "11", "--format", "rows")
    assert first == second
