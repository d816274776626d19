import subprocess
import sys

import pytest

from quiverdims.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_algebra_summary(capsys):
    code, out = run(capsys, "algebra", "--catalog", "b_power:2,2")
    assert code == 0 and "dimension: 9" in out and "global dimension: 2" in out


def test_dump_and_load(capsys, tmp_path):
    code, out = run(capsys, "algebra", "--catalog", "example_8_1", "--dump")
    f = tmp_path / "a.quiver"
    f.write_text(out)
    code, out = run(capsys, "algebra", "--file", str(f))
    assert code == 0 and "dimension: 6" in out


def test_fcy(capsys):
    assert run(capsys, "fcy", "--catalog", "dynkin:E6", "--expect", "12,10")[0] == 0
    assert run(capsys, "fcy", "--catalog", "kronecker", "--max-n", "4", "--expect", "none")[0] == 0
    assert run(capsys, "fcy", "--catalog", "linear_A:3", "--expect", "3,1")[0] == 1


def test_serre_dim_exit_codes(capsys):
    code, out = run(capsys, "serre-dim", "--catalog", "example_8_1", "--format", "csv")
    assert code == 0 and "LSdim" in out
    assert run(capsys, "serre-dim", "--catalog", "kronecker", "--steps", "3")[0] == 2


def test_mutate(capsys):
    code, out = run(capsys, "mutate", "e6")
    assert code == 0 and "quiver E6" in out


def test_mutate_failure(capsys, tmp_path):
    f = tmp_path / "bad.mut"
    f.write_text("algebra linear_A:3\nstart P0 P1 P2\nexpect-hom 1 3 = 0:5\n")
    assert run(capsys, "mutate", str(f))[0] == 1


def test_bounds(capsys):
    code, out = run(capsys, "bounds", "--catalog", "b_power:2,3")
    assert code == 2 and "Rdim: 1" in out and "Ddim: [1, 3]" in out


def test_psi(capsys):
    code, out = run(capsys, "psi", "--V", "-1:1,0:1,1:1", "--n", "4", "--m", "4", "--direct")
    assert code == 0 and "dims: (-1, 3)" in out
    assert run(capsys, "psi", "--V", "0:1")[0] == 1


def test_nilpotence(capsys):
    code, out = run(capsys, "nilpotence", "--catalog", "linear_A:3")
    assert code == 0 and "first vanishing power: 3" in out


@pytest.mark.parametrize("table,code", [("coxeter", 0), ("bmn", 0), ("intro-family", 0), ("examples-8", 2)])
def test_reproduce(capsys, table, code):
    assert run(capsys, "reproduce", table, "--format", "csv")[0] == code


def test_reproduce_is_deterministic(capsys, tmp_path):
    run(capsys, "reproduce", "all", "--out", str(tmp_path / "a"))
    run(capsys, "reproduce", "all", "--out", str(tmp_path / "b"))
    for f in sorted((tmp_path / "a").iterdir()):
        assert f.read_text() == (tmp_path / "b" / f.name).read_text()


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "quiverdims.cli", "fcy", "--catalog", "linear_A:2"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "(3, 1)" in r.stdout


def test_missing_algebra_is_an_error():
    with pytest.raises(SystemExit):
        main(["algebra"])
