import shutil
import subprocess

import pytest

from sohyper.cli import main


@pytest.fixture
def gen(tmp_path):
    def run(*args):
        out = tmp_path / "inst"
        assert main(["gen", *args, "--out", str(out)]) == 0
        return out

    return run


def check(capsys, out, name, *extra):
    code = main(["check", "--system", str(out / f"{name}.sys"), "--formula", str(out / f"{name}.hy"), *extra])
    return code, capsys.readouterr()


def test_ck_a_sat(gen, capsys):
    out = gen("ck", "2")
    capsys.readouterr()
    code, cap = check(capsys, out, "ck_a_2")
    assert code == 0
    assert cap.out.startswith("VERDICT=SAT precision=3 method=iter peak_states=")


def test_async_od_unsat_with_witness(gen, capsys):
    out = gen("async-od", "TAsyn")
    capsys.readouterr()
    code, cap = check(capsys, out, "od_TAsyn", "--witness")
    assert code == 1
    lines = cap.out.splitlines()
    assert lines[0].startswith("VERDICT=UNSAT")
    assert any(line.strip().startswith("p1 = ") for line in lines[1:])


def test_budget_gives_unknown(gen, capsys):
    out = gen("ck", "2")
    code, cap = check(capsys, out, "ck_a_2", "--max-precision", "0")
    assert code == 2
    assert "VERDICT=UNKNOWN" in cap.out


def test_learn_method(gen, capsys):
    out = gen("mazurkiewicz", "SwapA")
    code, cap = check(capsys, out, "maz_SwapA", "--method", "learn", "--max-precision", "6")
    assert code == 0 and "method=learn" in cap.out


def test_verdict_line_is_deterministic(gen, capsys):
    out = gen("muddy", "2", "2")
    capsys.readouterr()
    lines = []
    for _ in range(2):
        code, cap = check(capsys, out, "muddy_2_2")
        assert code == 0
        lines.append(cap.out.split(" ms=")[0])
    assert lines[0] == lines[1]


def test_parse_error_is_positioned(tmp_path, capsys):
    (tmp_path / "s.sys").write_text("aps: a\ninit: 0\nstates:\n0 {a} -> 0\n")
    (tmp_path / "f.hy").write_text("forall p in S.\n  G (a@p &\n")
    code = main(["check", "--system", str(tmp_path / "s.sys"), "--formula", str(tmp_path / "f.hy")])
    err = capsys.readouterr().err
    assert code == 3
    assert err.startswith(f"{tmp_path / 'f.hy'}:")
    assert err.split(":")[1].strip().isdigit()


def test_bad_system_and_missing_file(tmp_path, capsys):
    (tmp_path / "s.sys").write_text("aps: a\ninit: 0\nstates:\n0 {b} -> 0\n")
    (tmp_path / "f.hy").write_text("forall p in S. a@p\n")
    assert main(["check", "--system", str(tmp_path / "s.sys"), "--formula", str(tmp_path / "f.hy")]) == 3
    assert "line 4" in capsys.readouterr().err
    assert main(["check", "--system", str(tmp_path / "nope.sys"), "--formula", str(tmp_path / "f.hy")]) == 3


@pytest.mark.parametrize("argv", [
    [],
    ["check", "--system", "x"],
    ["gen", "async-od", "Q2", "--out", "x"],
    ["check", "--system", "a", "--formula", "b", "--max-precision", "-1"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 3


def test_gen_rejects_unknown_variant(tmp_path, capsys):
    assert main(["gen", "mazurkiewicz", "SwapB", "--out", str(tmp_path)]) == 3


def test_gen_regular_mc(tmp_path, capsys):
    code = main(["gen", "regular-mc", "--aps", "a", "--init", "a@q", "--step", "G eq(q,q2;a)",
                 "--bad", "X a@q", "--name", "triv", "--out", str(tmp_path)])
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == ["triv.hy", "triv.sys"]
    code, cap = check(capsys, tmp_path, "triv")
    assert code == 1


def test_selftest_small(capsys):
    assert main(["selftest", "--scale", "0.05"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 4 and all(", ok (" in line for line in out)


@pytest.mark.skipif(shutil.which("sohyper") is None, reason="console script not installed")
def test_console_script(tmp_path):
    res = subprocess.run(["sohyper", "gen", "ck", "1", "--out", str(tmp_path)], capture_output=True, text=True)
    assert res.returncode == 0
    res = subprocess.run(["sohyper", "check", "--system", str(tmp_path / "ck_a_1.sys"),
                          "--formula", str(tmp_path / "ck_a_1.hy")], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("VERDICT=SAT")
