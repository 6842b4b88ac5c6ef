"""Adder and subtractor circuits built from the Inventive0 gate, plus
exhaustive arithmetic verifiers.

Operand bit i (weight 2^i) is ``a_lines[i]``; A_0 is the least significant bit.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .circuit import Circuit, new_circuit
from .errors import WidthOutOfRange
from .gates import builtin
from .simulator import enumerate_table

MAX_BITS = 64
MAX_VERIFY_BITS = 10


@dataclass(frozen=True)
class AdderLayout:
    width: int
    a_lines: tuple[int, ...]
    b_lines: tuple[int, ...]
    carry_in_line: int
    carry_out_line: int
    sum_lines: tuple[int, ...]
    ancilla_lines: tuple[int, ...]
    # carry-skip only: propagate lines, block propagate line, carry-in copies
    skip_lines: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def groups(self) -> dict[str, tuple[int, ...]]:
        g = {
            "a": self.a_lines,
            "b": self.b_lines,
            "carry_in": (self.carry_in_line,),
            "ancilla": self.ancilla_lines,
        }
        g.update(self.skip_lines)
        return g


def _check_width(n: int) -> None:
    if not 1 <= n <= MAX_BITS:
        raise WidthOutOfRange(f"operand width {n} not in 1..{MAX_BITS}")


def _single_cell(d_bit: int) -> tuple[Circuit, AdderLayout]:
    inv0 = builtin("INV0")
    c = new_circuit(4).append_gate(inv0, (0, 1, 2, 3)).set_constant(3, d_bit)
    for line, name in zip((0, 1, 2), "ABC"):
        c = c.label_input(line, name)
    if d_bit == 0:
        # P, S garbage; Q = sum, R = carry
        c = c.mark_garbage({0, 3}).label_output(1, "SUM").label_output(2, "CARRY")
        out = 2
    else:
        # P, R garbage; Q = difference, S = borrow
        c = c.mark_garbage({0, 2}).label_output(1, "DIFF").label_output(3, "BORROW")
        out = 3
    layout = AdderLayout(1, (0,), (1,), 2, out, (1,), (3,))
    return c, layout


def full_adder() -> tuple[Circuit, AdderLayout]:
    """One INV0 with D=0: SUM on the Q line, CARRY on the R line."""
    return _single_cell(0)


def full_subtractor() -> tuple[Circuit, AdderLayout]:
    """One INV0 with D=1: DIFF on the Q line, BORROW on the S line."""
    return _single_cell(1)


def ripple_carry_adder(n: int) -> tuple[Circuit, AdderLayout]:
    """n cascaded INV0 full adders sharing one carry line.

    Lines: A_i on i, B_i on n+i, the carry chain on 2n, and stage i's D
    ancilla on 2n+1+i. Stage i leaves sum_i on the B_i line and its carry on
    the chain line, which is stage i+1's C port.
    """
    _check_width(n)
    inv0 = builtin("INV0")
    a = tuple(range(n))
    b = tuple(range(n, 2 * n))
    carry = 2 * n
    d = tuple(range(2 * n + 1, 3 * n + 1))
    c = new_circuit(3 * n + 1)
    for i in range(n):
        c = c.append_gate(inv0, (a[i], b[i], carry, d[i])).set_constant(d[i], 0)
    for i in range(n):
        c = c.label_input(a[i], f"A{i}").label_input(b[i], f"B{i}")
    c = c.label_input(carry, "CIN").mark_garbage(a + d)
    for i in range(n):
        c = c.label_output(b[i], f"S{i}")
    c = c.label_output(carry, "COUT")
    return c, AdderLayout(n, a, b, carry, carry, b, d)


def ripple_borrow_subtractor(n: int) -> tuple[Circuit, AdderLayout]:
    """n cascaded INV0 full subtractors computing A - B - Bin.

    Stage i's borrow appears on its D line, which becomes stage i+1's C
    port; the final D line carries the borrow-out.
    """
    _check_width(n)
    inv0 = builtin("INV0")
    a = tuple(range(n))
    b = tuple(range(n, 2 * n))
    bin_line = 2 * n
    d = tuple(range(2 * n + 1, 3 * n + 1))
    c = new_circuit(3 * n + 1)
    borrow = bin_line
    for i in range(n):
        c = c.append_gate(inv0, (a[i], b[i], borrow, d[i])).set_constant(d[i], 1)
        borrow = d[i]
    for i in range(n):
        c = c.label_input(a[i], f"A{i}").label_input(b[i], f"B{i}")
    c = c.label_input(bin_line, "BIN")
    # each stage's C port line ends up holding R, which is garbage here
    c = c.mark_garbage(a + (bin_line,) + d[:-1])
    for i in range(n):
        c = c.label_output(b[i], f"D{i}")
    c = c.label_output(d[-1], "BOUT")
    return c, AdderLayout(n, a, b, bin_line, d[-1], b, d)


def carry_skip_adder4() -> tuple[Circuit, AdderLayout]:
    """4-bit carry-skip adder: 4 HNG + 4 INV0 + 4 FRG + 1 F2G.

    Level 1: HNG(A_i, B_i, 0, 0) -> (A_i, B_i, P_i, A_iB_i) and F2G copies
    C_in twice. Level 2: INV0 ripple chain on the first copy. Level 3: three
    FRGs AND the P_i together, and a final FRG muxes C4 / C_in on the block
    propagate.
    """
    hng, inv0, frg, f2g = (builtin(x) for x in ("HNG", "INV0", "FRG", "F2G"))
    a = (0, 1, 2, 3)
    b = (4, 5, 6, 7)
    cin = 8
    p = (9, 10, 11, 12)
    g = (13, 14, 15, 16)
    chain, mux_in = 17, 18
    d = (19, 20, 21, 22)
    t = (23, 24, 25)
    block_p = t[-1]

    c = new_circuit(26)
    for line in p + g + (chain, mux_in) + d + t:
        c = c.set_constant(line, 0)

    for i in range(4):
        c = c.append_gate(hng, (a[i], b[i], p[i], g[i]))
    c = c.append_gate(f2g, (cin, chain, mux_in))
    for i in range(4):
        c = c.append_gate(inv0, (a[i], b[i], chain, d[i]))
    # FRG(ctl, x, 0) leaves ctl*x on its third line
    c = c.append_gate(frg, (p[0], p[1], t[0]))
    c = c.append_gate(frg, (t[0], p[2], t[1]))
    c = c.append_gate(frg, (t[1], p[3], t[2]))
    # Q = ~P*C4 + P*Cin lands on the chain line
    c = c.append_gate(frg, (block_p, chain, mux_in))

    for i in range(4):
        c = c.label_input(a[i], f"A{i}").label_input(b[i], f"B{i}")
    c = c.label_input(cin, "CIN")
    for i in range(4):
        c = c.label_output(b[i], f"S{i}")
    c = c.label_output(chain, "COUT")
    c = c.mark_garbage(set(range(26)) - set(b) - {chain})

    layout = AdderLayout(
        4,
        a,
        b,
        cin,
        chain,
        b,
        g + d + t[:-1],
        skip_lines={"propagate": p, "block_propagate": (block_p,), "carry_copies": (chain, mux_in)},
    )
    return c, layout


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    cases: int
    passed: int
    # first failing case, in input order
    a: int | None = None
    b: int | None = None
    carry_in: int | None = None
    expected: tuple[int, int] | None = None
    got: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return f"{self.passed}/{self.cases} cases pass"
        return (
            f"{self.passed}/{self.cases} cases pass; first counterexample "
            f"A={self.a} B={self.b} Cin={self.carry_in}: expected (result, carry)="
            f"{self.expected}, got {self.got}"
        )


def verify_against_arithmetic(
    circuit: Circuit, layout: AdderLayout, mode: str = "add"
) -> VerifyResult:
    """Check every (A, B, carry-in) against integer arithmetic.

    add: result = (A+B+Cin) mod 2^n, carry-out = overflow.
    subtract: result = (A-B-Bin) mod 2^n, borrow-out = A < B+Bin.
    """
    if mode not in ("add", "subtract"):
        raise ValueError(f"mode must be 'add' or 'subtract', got {mode!r}")
    n = layout.width
    if not 1 <= n <= MAX_VERIFY_BITS:
        raise WidthOutOfRange(f"exhaustive verification limited to {MAX_VERIFY_BITS} bits, got {n}")
    free = circuit.free_lines
    operand = list(layout.a_lines) + list(layout.b_lines) + [layout.carry_in_line]
    if sorted(operand) != free:
        raise WidthOutOfRange("layout operand lines must be exactly the circuit's free lines")

    # row word = A_{n-1}..A_0 B_{n-1}..B_0 Cin, so A, B read off as plain integers
    order = list(reversed(layout.a_lines)) + list(reversed(layout.b_lines)) + [layout.carry_in_line]
    outs = list(reversed(layout.sum_lines)) + [layout.carry_out_line]
    table = enumerate_table(circuit, outs, order, max_free_inputs=2 * MAX_VERIFY_BITS + 1)
    words = np.arange(len(table), dtype=np.int64)
    cin = words & 1
    b = (words >> 1) & ((1 << n) - 1)
    a = words >> (n + 1)
    mask = (1 << n) - 1
    if mode == "add":
        total = a + b + cin
        exp_res, exp_carry = total & mask, total >> n
    else:
        exp_res = (a - b - cin) & mask
        exp_carry = (a < b + cin).astype(np.int64)
    got = table.output_words()
    got_res, got_carry = got >> 1, got & 1
    bad = np.flatnonzero((got_res != exp_res) | (got_carry != exp_carry))
    cases = len(table)
    if bad.size == 0:
        return VerifyResult(True, cases, cases)
    r = int(bad[0])
    return VerifyResult(
        False,
        cases,
        cases - int(bad.size),
        int(a[r]),
        int(b[r]),
        int(cin[r]),
        (int(exp_res[r]), int(exp_carry[r])),
        (int(got_res[r]), int(got_carry[r])),
    )


DESIGNS = {
    "fa": lambda n=None: full_adder(),
    "fs": lambda n=None: full_subtractor(),
    "rca": ripple_carry_adder,
    "rcs": ripple_borrow_subtractor,
    "csa4": lambda n=None: carry_skip_adder4(),
}
