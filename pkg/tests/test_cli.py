from pathlib import Path

import pytest

from xorsym import cli
from xorsym.boolfn import parse_circuit, parse_table
from xorsym.gf2 import parse_basis

DATA = Path(__file__).parents[1] / "data"


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_basis_figure(capsys):
    code, out, _ = run(capsys, "basis", "--bdd", DATA / "figure.obdd")
    assert code == 0 and out == "n 3\ndim 1\n101\n"


def test_basis_const(capsys):
    code, out, _ = run(capsys, "basis", "--circuit", DATA / "const1.cir", "--order", "a,b")
    assert code == 0 and parse_basis(out).dimension == 2


def test_basis_xorchain_checked(capsys):
    order = ",".join("x%d" % k for k in range(1, 9))
    code, out, _ = run(capsys, "basis", "--circuit", DATA / "xorchain8.cir", "--order", order, "--check")
    assert code == 0 and out == "n 8\ndim 1\n11111111\n"


def test_check_with_permuted_order(capsys):
    code, out, _ = run(capsys, "basis", "--circuit", DATA / "example2out.cir",
                       "--order", "x3,x1,x2", "--check")
    assert code == 0
    _, plain, _ = run(capsys, "basis", "--circuit", DATA / "example2out.cir")
    assert out == plain


def test_check_does_not_change_output(capsys):
    _, a, _ = run(capsys, "basis", "--bdd", DATA / "figure.obdd")
    _, b, _ = run(capsys, "basis", "--bdd", DATA / "figure.obdd", "--check")
    assert a == b


def test_check_mismatch_exit_code(capsys, monkeypatch):
    from xorsym.gf2 import Subspace

    monkeypatch.setattr(cli, "symmetry_basis", lambda d: Subspace.zero(d.n))
    code, out, err = run(capsys, "basis", "--bdd", DATA / "figure.obdd", "--check")
    assert code == 4 and out == "n 3\ndim 0\n" and "CHECK FAILED" in err


def test_decide(capsys):
    assert run(capsys, "decide", "--bdd", DATA / "figure.obdd")[1] == "yes\n"
    assert run(capsys, "decide", "--circuit", DATA / "identity3.cir")[1] == "no\n"
    assert run(capsys, "decide", "--circuit", DATA / "const1.cir")[1] == "yes\n"


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "--bdd", DATA / "figure.obdd")
    assert code == 0 and out == "n 3\ndim 1\n101\n"


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.cir"
    bad.write_text("inputs a\noutputs o\no = AND a b\n")
    code, _, err = run(capsys, "basis", "--circuit", bad)
    assert code == 2 and "line 3" in err
    assert run(capsys, "basis", "--bdd", DATA / "figure.obdd", "--order", "p,q,r")[0] == 2
    assert run(capsys, "basis", "--circuit", DATA / "const1.cir", "--order", "a")[0] == 2
    assert run(capsys, "basis", "--circuit", tmp_path / "missing.cir")[0] == 2


def test_resource_exit(capsys):
    code, _, _ = run(capsys, "oracle", "--circuit", DATA / "xorchain8.cir", "--cap", "4")
    assert code == 3
    code, _, _ = run(capsys, "basis", "--circuit", DATA / "xorchain8.cir", "--max-nodes", "3")
    assert code == 3


def test_table_input(capsys, tmp_path):
    t = tmp_path / "f.tt"
    t.write_text("2 1\n0\n1\n1\n0\n")
    code, out, _ = run(capsys, "basis", "--table", t, "--check")
    assert code == 0 and out == "n 2\ndim 1\n11\n"


def test_gen_simon_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.tt", tmp_path / "b.tt"
    for path in (a, b):
        assert run(capsys, "gen-simon", "--n", 4, "--s", "0110", "--seed", 7, "--out", path)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    t = parse_table(a.read_text())
    assert t.n == 4 and t.m == 4
    code, out, _ = run(capsys, "oracle", "--table", a)
    assert 0b0110 in parse_basis(out)


def test_gen_simon_circuit_out(capsys, tmp_path):
    c = tmp_path / "s.cir"
    code, out, _ = run(capsys, "gen-simon", "--n", 3, "--s", "101", "--seed", 1, "--strict",
                       "--circuit-out", c)
    assert code == 0
    code, basis, _ = run(capsys, "basis", "--circuit", c, "--check")
    assert code == 0 and basis == "n 3\ndim 1\n101\n"


@pytest.mark.parametrize("s", ["00", "012", "1"])
def test_gen_simon_bad_shift(capsys, s):
    assert run(capsys, "gen-simon", "--n", 2, "--s", s)[0] == 2


def test_gen_hardness_then_basis(capsys, tmp_path):
    out = tmp_path / "F.cir"
    assert run(capsys, "gen-hardness", "--circuit", DATA / "unsat1.cir", "--out", out)[0] == 0
    F = parse_circuit(out.read_text())
    assert F.n == 3
    code, text, _ = run(capsys, "basis", "--circuit", out, "--check")
    V = parse_basis(text)
    assert code == 0 and V.dimension >= 1 and 0b100 in V


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--family", "xor-chain", "--n-max", 16, "--repeat", 1)
    lines = out.splitlines()
    assert code == 0 and [ln.split()[0] for ln in lines] == ["8", "16"]
    assert all(ln.split()[3] == "1" for ln in lines)
    code, out, _ = run(capsys, "bench", "--family", "linear-map", "--n-max", 12, "--repeat", 1)
    assert code == 0 and len(out.splitlines()) == 2


def test_bench_unknown_family(capsys):
    assert run(capsys, "bench", "--family", "nope")[0] == 2


def test_output_is_deterministic(capsys):
    a = run(capsys, "basis", "--circuit", DATA / "example2out.cir", "--order", "x2,x3,x1")
    b = run(capsys, "basis", "--circuit", DATA / "example2out.cir", "--order", "x2,x3,x1")
    assert a == b
