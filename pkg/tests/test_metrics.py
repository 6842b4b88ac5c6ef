import pytest

from revadder.circuit import compose, new_circuit
from revadder.errors import EmptyInput, WidthOutOfRange
from revadder.gates import TlcTriple, builtin
from revadder.generators import carry_skip_adder4, full_adder, ripple_carry_adder
from revadder.metrics import compare, cost_report, scaling_report

from conftest import random_circuit


def test_full_adder_report():
    r = cost_report(full_adder()[0], "fa")
    assert r.summary() == (1, 1, 2, 1)
    assert r.tlc == TlcTriple(5, 4, 8)
    assert r.transistor_count is None


def test_rca4_report():
    r = cost_report(ripple_carry_adder(4)[0])
    assert r.summary() == (4, 4, 8, 4)
    assert r.tlc.as_tuple() == (20, 16, 32)


def test_csa4_report():
    r = cost_report(carry_skip_adder4()[0])
    assert r.gate_count == 13
    assert r.tlc.as_tuple() == (50, 40, 40)
    # hand-expanded: 4(5,2,0) + 4(5,4,8) + 4(2,4,2) + (2,0,0)
    assert r.tlc.as_tuple() == (4 * 5 + 4 * 5 + 4 * 2 + 2, 4 * 2 + 4 * 4 + 4 * 4, 4 * 8 + 4 * 2)


def test_transistors_summed_when_known():
    c = new_circuit(3).append_gate(builtin("FG"), (0, 1)).append_gate(builtin("TG"), (0, 1, 2))
    assert cost_report(c).transistor_count == 14


@pytest.mark.parametrize("n", range(1, 17))
def test_rca_scaling(n):
    r = cost_report(ripple_carry_adder(n)[0])
    assert r.summary() == (n, n, 2 * n, n)
    assert r.tlc == n * TlcTriple(5, 4, 8)


def test_scaling_report():
    reps = scaling_report("rca", [1, 4, 8])
    assert [r.summary() for r in reps] == [(1, 1, 2, 1), (4, 4, 8, 4), (8, 8, 16, 8)]
    assert [r.summary() for r in scaling_report("rcs", [3])] == [(3, 3, 6, 3)]
    with pytest.raises(WidthOutOfRange):
        scaling_report("rca", [0])
    with pytest.raises(ValueError):
        scaling_report("csa", [4])


def test_tlc_additive(rng):
    for _ in range(50):
        c1 = random_circuit(rng, max_lines=8)
        c2 = random_circuit(rng, max_lines=8)
        c2 = new_circuit(c1.line_count) if c2.line_count != c1.line_count else c2
        assert cost_report(compose(c1, c2)).tlc == cost_report(c1).tlc + cost_report(c2).tlc


class TestCompare:
    def reports(self):
        return [
            cost_report(ripple_carry_adder(4)[0], "rca4"),
            cost_report(carry_skip_adder4()[0], "csa4"),
        ]

    def test_flags(self):
        t = compare(self.reports())
        for col in ("gates", "alpha", "beta", "delta", "constants", "garbage", "delay"):
            assert t.minima[col] == {"rca4"}
        assert t.minima["transistors"] == frozenset()

    def test_single(self):
        t = compare(self.reports()[:1])
        assert all(t.minima[c] == {"rca4"} for c in t.minima if c != "transistors")

    def test_empty(self):
        with pytest.raises(EmptyInput):
            compare([])

    def test_order_stable(self):
        a = compare(self.reports())
        b = compare(self.reports()[::-1])
        assert a.minima == b.minima

    def test_csv(self):
        lines = compare(self.reports()).to_csv().splitlines()
        assert lines[0] == "design,gates,constants,garbage,delay,alpha,beta,delta,transistors"
        assert lines[1] == "rca4,4,4,8,4,20,16,32,"
        assert lines[2].startswith("csa4,13,") and lines[2].endswith(",6,50,40,40,")

    def test_text(self):
        text = compare(self.reports()).to_text()
        assert "20*" in text and "50" in text
        assert text.splitlines()[0].split()[0] == "design"
