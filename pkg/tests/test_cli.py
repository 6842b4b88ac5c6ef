import pytest

from revadder import netlist
from revadder.cli import main
from revadder.errors import ParseError
from revadder.generators import (
    carry_skip_adder4,
    full_adder,
    full_subtractor,
    ripple_borrow_subtractor,
    ripple_carry_adder,
)
from revadder.simulator import enumerate_table

from conftest import break_carry_chain

DESIGNS = {
    "fa": full_adder,
    "fs": full_subtractor,
    "rca4": lambda: ripple_carry_adder(4),
    "rcs4": lambda: ripple_borrow_subtractor(4),
    "csa4": carry_skip_adder4,
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestNetlist:
    @pytest.mark.parametrize("name", sorted(DESIGNS))
    def test_round_trip(self, name):
        c, _ = DESIGNS[name]()
        back = netlist.parse(netlist.render(c))
        assert back == c
        assert enumerate_table(back).same_as(enumerate_table(c))

    def test_inverse_gate_names(self):
        from revadder.circuit import inverse_circuit

        c = inverse_circuit(ripple_carry_adder(2)[0])
        text = netlist.render(c)
        assert "gate INV0' " in text
        assert netlist.parse(text) == c

    def test_format(self):
        text = netlist.render(full_adder()[0])
        assert text.splitlines()[:2] == ["revnet 1", "lines 4"]
        assert "gate INV0 0 1 2 3" in text
        assert "const 3 0" in text

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "lines 4\n",
            "revnet 2\nlines 4\n",
            "revnet 1\nlines x\n",
            "revnet 1\nlines 2\ngate NOPE 0 1\n",
            "revnet 1\nlines 2\ngate FG 0 0\n",
            "revnet 1\nlines 2\ngate FG 0 5\n",
            "revnet 1\nlines 2\nconst 0 2\n",
            "revnet 1\nlines 2\nfoo 1\n",
            "revnet 1\nlines 2\noutput 0 X\ngarbage 0\n",
        ],
    )
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            netlist.parse(text)

    def test_comments(self):
        c = netlist.parse("# hi\nrevnet 1  # v\n\nlines 2\ngate FG 0 1 # x\n")
        assert len(c) == 1


class TestGates:
    def test_inv0_table(self, capsys):
        code, out, _ = run(capsys, "gates", "INV0")
        assert code == 0
        rows = [ln for ln in out.splitlines() if "|" in ln][1:]
        assert len(rows) == 16 and rows[0] == "0000 | 0001" and rows[-1] == "1111 | 1101"

    def test_catalog(self, capsys):
        code, out, _ = run(capsys, "gates")
        assert code == 0 and len(out.splitlines()) == 7

    def test_unknown(self, capsys):
        assert run(capsys, "gates", "XYZ")[0] == 2


class TestBuild:
    def test_rca(self, capsys, tmp_path):
        f = tmp_path / "rca4.rev"
        code, out, _ = run(capsys, "build", "rca", "--bits", "4", "--out", str(f))
        assert code == 0
        assert sum(ln.startswith("gate INV0") for ln in f.read_text().splitlines()) == 4
        assert "alpha/beta/delta = 20/16/32" in out

    def test_csa4(self, capsys, tmp_path):
        f = tmp_path / "csa4.rev"
        code, out, _ = run(capsys, "build", "csa4", "--out", str(f))
        assert code == 0
        assert sum(ln.startswith("gate ") for ln in f.read_text().splitlines()) == 13
        assert "50/40/40" in out

    def test_stdout_is_valid_netlist(self, capsys):
        code, out, _ = run(capsys, "build", "fs")
        assert code == 0
        assert netlist.parse(out) == full_subtractor()[0]

    def test_bad_width(self, capsys):
        assert run(capsys, "build", "rca", "--bits", "0")[0] == 2
        assert run(capsys, "build", "rcs")[0] == 2
        assert run(capsys, "build", "rca", "--bits", "65")[0] == 2


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, build in DESIGNS.items():
        out[name] = tmp_path / f"{name}.rev"
        netlist.write(build()[0], out[name])
    return out


class TestSimulate:
    def test_full_adder(self, capsys, files):
        code, out, _ = run(capsys, "simulate", str(files["fa"]), "--inputs", "A=1", "B=1", "C=1")
        assert code == 0
        assert out.splitlines()[-1] == "SUM=1 CARRY=1"

    def test_backward_round_trip(self, capsys, files):
        _, out, _ = run(capsys, "simulate", str(files["fa"]), "--inputs", "A=1", "B=1", "C=1")
        bits = [ln.split()[-1] for ln in out.splitlines()[:4]]
        args = [f"line:{i}={b}" for i, b in enumerate(bits)]
        code, out, _ = run(capsys, "simulate", str(files["fa"]), "--backward", "--inputs", *args)
        assert code == 0
        assert [ln.split()[-1] for ln in out.splitlines()[:4]] == ["1", "1", "1", "0"]
        assert "(const 0)" in out

    def test_operand_expansion(self, capsys, files):
        code, out, _ = run(capsys, "simulate", str(files["rca4"]), "--inputs", "A=0xF", "B=1", "CIN=0")
        assert code == 0
        assert out.splitlines()[-1] == "S0=0 S1=0 S2=0 S3=0 COUT=1"

    def test_missing_input(self, capsys, files):
        assert run(capsys, "simulate", str(files["fa"]), "--inputs", "A=1")[0] == 2

    def test_malformed(self, capsys, tmp_path):
        bad = tmp_path / "bad.rev"
        bad.write_text("nonsense\n")
        assert run(capsys, "simulate", str(bad), "--inputs", "A=1")[0] == 3
        assert run(capsys, "simulate", str(tmp_path / "missing.rev"))[0] == 3


class TestVerify:
    def test_add(self, capsys, files):
        code, out, _ = run(capsys, "verify", str(files["rca4"]), "--mode", "add")
        assert code == 0 and "512/512 cases pass" in out

    def test_natural_mode(self, capsys, files):
        assert run(capsys, "verify", str(files["rcs4"]))[0] == 0
        assert run(capsys, "verify", str(files["fs"]))[0] == 0

    def test_equiv(self, capsys, files):
        code, out, _ = run(capsys, "verify", str(files["csa4"]), "--mode", "equiv", "--against", str(files["rca4"]))
        assert code == 0 and "512/512" in out

    def test_not_equiv(self, capsys, files):
        code, out, _ = run(capsys, "verify", str(files["rca4"]), "--mode", "equiv", "--against", str(files["rcs4"]))
        assert code == 1 and "counterexample" in out

    def test_mutated(self, capsys, tmp_path):
        c, _ = ripple_carry_adder(4)
        f = tmp_path / "bad.rev"
        netlist.write(break_carry_chain(c, 2), f)
        code, out, _ = run(capsys, "verify", str(f), "--mode", "add")
        assert code == 1 and "counterexample A=" in out

    def test_too_wide(self, capsys, tmp_path):
        f = tmp_path / "rca11.rev"
        netlist.write(ripple_carry_adder(11)[0], f)
        assert run(capsys, "verify", str(f))[0] == 2

    def test_no_layout(self, capsys, tmp_path):
        f = tmp_path / "x.rev"
        f.write_text("revnet 1\nlines 2\ngate FG 0 1\n")
        assert run(capsys, "verify", str(f))[0] == 2


class TestTableMetrics:
    def test_table2(self, capsys, files):
        code, out, _ = run(capsys, "table", str(files["fa"]), "--outputs", "SUM,CARRY")
        assert code == 0
        assert out.splitlines()[1:] == [
            "000 | 00", "001 | 10", "010 | 10", "011 | 01",
            "100 | 10", "101 | 01", "110 | 01", "111 | 11",
        ]

    def test_too_many_inputs(self, capsys, tmp_path):
        f = tmp_path / "rca10.rev"
        netlist.write(ripple_carry_adder(10)[0], f)
        assert run(capsys, "table", str(f), "--outputs", "COUT")[0] == 2

    def test_metrics(self, capsys, files):
        code, out, _ = run(capsys, "metrics", "--csv", str(files["rca4"]), str(files["csa4"]))
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 3
        assert lines[1].split(",")[5:8] == ["20", "16", "32"]
        assert lines[2].split(",")[5:8] == ["50", "40", "40"]

    def test_metrics_text(self, capsys, files):
        code, out, _ = run(capsys, "metrics", str(files["rca4"]), str(files["csa4"]))
        assert code == 0 and "rca4" in out and "csa4" in out

    def test_metrics_empty(self, capsys):
        assert run(capsys, "metrics")[0] == 2

    def test_deterministic(self, capsys, files):
        a = run(capsys, "metrics", str(files["rca4"]), str(files["csa4"]))
        b = run(capsys, "metrics", str(files["rca4"]), str(files["csa4"]))
        assert a == b
