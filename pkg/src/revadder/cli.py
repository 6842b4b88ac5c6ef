"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 netlist parse error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import netlist
from .circuit import Circuit
from .errors import ParseError, RevError
from .gates import CATALOG, builtin, truth_table
from .generators import DESIGNS, verify_against_arithmetic
from .metrics import compare, cost_report
from .simulator import enumerate_table, equivalent, run_backward, run_forward

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _design_name(design: str, bits: int | None) -> str:
    return f"{design}{bits}" if design in ("rca", "rcs") else design


def _load(path: str) -> Circuit:
    return netlist.read(path)


def _line_ref(circuit: Circuit, token: str, prefer_output: bool) -> int:
    if token.startswith("line:"):
        idx = token[5:]
    else:
        idx = token if token.isdigit() else None
    if idx is not None:
        if not idx.isdigit() or int(idx) >= circuit.line_count:
            raise UsageError(f"bad line reference {token!r}")
        return int(idx)
    first, second = (
        (circuit.output_labels, circuit.input_labels)
        if prefer_output
        else (circuit.input_labels, circuit.output_labels)
    )
    for labels in (first, second):
        for line, name in labels.items():
            if name == token:
                return line
    raise UsageError(f"no line labelled {token!r}")


def parse_assignment(circuit: Circuit, tokens: Sequence[str], backward: bool) -> dict[int, int]:
    """Turn ``NAME=bit``, ``line:<i>=bit`` and operand ``A=0xF`` tokens into line values.

    An operand name X with integer value v sets the lines labelled X0, X1, ...
    to the bits of v, least significant first.
    """
    labels = circuit.output_labels if backward else circuit.input_labels
    names = set(labels.values())
    result: dict[int, int] = {}
    for tok in tokens:
        for part in tok.split(","):
            if not part:
                continue
            if "=" not in part:
                raise UsageError(f"expected NAME=value, got {part!r}")
            key, val = part.split("=", 1)
            try:
                value = int(val, 0)
            except ValueError:
                raise UsageError(f"bad value in {part!r}") from None
            if key not in names and not key.startswith("line:") and f"{key}0" in names:
                width = 0
                while f"{key}{width}" in names:
                    width += 1
                if not 0 <= value < (1 << width):
                    raise UsageError(f"operand {key}={value} does not fit in {width} bits")
                for i in range(width):
                    result[_line_ref(circuit, f"{key}{i}", backward)] = (value >> i) & 1
                continue
            if value not in (0, 1):
                raise UsageError(f"bit value must be 0 or 1 in {part!r}")
            result[_line_ref(circuit, key, backward)] = value
    return result


def cmd_gates(args) -> int:
    if args.name:
        gate = builtin(args.name)
        letters_in = "ABCDEFGH"[: gate.arity]
        letters_out = "PQRSTUVW"[: gate.arity]
        print(f"{gate.name} ({gate.arity} lines)")
        print(f"{letters_in} | {letters_out}")
        for x, y in truth_table(gate):
            print(f"{x} | {y}")
        return EXIT_OK
    print(f"{'gate':<6}{'arity':>6}{'alpha':>7}{'beta':>6}{'delta':>7}{'transistors':>13}")
    for gate in CATALOG.values():
        c = gate.cost
        tr = "-" if c.transistor_count is None else str(c.transistor_count)
        print(f"{gate.name:<6}{gate.arity:>6}{c.alpha:>7}{c.beta:>6}{c.delta:>7}{tr:>13}")
    return EXIT_OK


def cmd_build(args) -> int:
    if args.design in ("rca", "rcs"):
        if args.bits is None:
            raise UsageError(f"--bits is required for {args.design}")
        circuit, _ = DESIGNS[args.design](args.bits)
    else:
        circuit, _ = DESIGNS[args.design]()
    name = _design_name(args.design, args.bits)
    report = cost_report(circuit, name).render()
    text = netlist.render(circuit, title=name)
    if args.out in (None, "-"):
        sys.stdout.write(text)
        sys.stdout.write("".join(f"# {ln}\n" for ln in report.splitlines()))
    else:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
        sys.stdout.write(f"wrote {args.out}\n")
        sys.stdout.write(report)
    return EXIT_OK


def cmd_simulate(args) -> int:
    circuit = _load(args.file)
    values = parse_assignment(circuit, args.inputs or [], args.backward)
    if args.backward:
        result = run_backward(circuit, values)
        labels = circuit.input_labels
    else:
        result = run_forward(circuit, values)
        labels = circuit.output_labels
    for line in range(circuit.line_count):
        if line in labels:
            tag = labels[line]
        elif not args.backward and line in circuit.garbage:
            tag = "(garbage)"
        elif args.backward and line in circuit.constants:
            tag = f"(const {circuit.constants[line]})"
        else:
            tag = ""
        print(f"{line:>4}  {tag:<10} {result[line]}")
    named = [f"{labels[x]}={result[x]}" for x in sorted(labels)]
    if named:
        print(" ".join(named))
    return EXIT_OK


def cmd_verify(args) -> int:
    circuit = _load(args.file)
    try:
        layout, natural = netlist.layout_from_labels(circuit)
    except netlist.LayoutError as exc:
        raise UsageError(str(exc)) from None
    if args.mode == "equiv":
        if not args.against:
            raise UsageError("--mode equiv needs --against FILE")
        other = _load(args.against)
        try:
            other_layout, _ = netlist.layout_from_labels(other)
        except netlist.LayoutError as exc:
            raise UsageError(f"{args.against}: {exc}") from None
        if other_layout.width != layout.width:
            raise UsageError("operand widths differ")

        def ports(lay):
            ins = list(lay.a_lines) + list(lay.b_lines) + [lay.carry_in_line]
            return ins, list(lay.sum_lines) + [lay.carry_out_line]

        in1, out1 = ports(layout)
        in2, out2 = ports(other_layout)
        if sorted(in1) != circuit.free_lines or sorted(in2) != other.free_lines:
            raise UsageError("operand lines must be exactly the free lines of each circuit")
        res = equivalent(circuit, out1, other, out2, in1, in2)
        if res:
            print(f"equivalent: {res.rows_checked}/{res.rows_checked} cases pass")
            return EXIT_OK
        word = "".join(map(str, res.counterexample))
        print(
            f"NOT equivalent: first counterexample input {word} "
            f"(A0..A{layout.width - 1} B0..B{layout.width - 1} Cin); "
            f"outputs {''.join(map(str, res.outputs_first))} vs {''.join(map(str, res.outputs_second))}"
        )
        return EXIT_FAIL
    mode = args.mode or natural
    res = verify_against_arithmetic(circuit, layout, mode)
    print(res.describe())
    return EXIT_OK if res else EXIT_FAIL


def cmd_table(args) -> int:
    circuit = _load(args.file)
    if args.outputs:
        outs = [_line_ref(circuit, tok, True) for tok in args.outputs.split(",") if tok]
    else:
        outs = list(range(circuit.line_count))
    table = enumerate_table(circuit, outs)

    def name(line, labels):
        return labels.get(line, f"line:{line}")

    ins = " ".join(name(x, circuit.input_labels) for x in table.free_input_lines)
    print(f"{ins} | " + " ".join(name(x, circuit.output_labels) for x in outs))
    for row in table.format_rows():
        print(row)
    return EXIT_OK


def cmd_metrics(args) -> int:
    if not args.files:
        raise UsageError("metrics needs at least one netlist file")
    reports = [cost_report(_load(f), Path(f).stem) for f in args.files]
    table = compare(reports)
    sys.stdout.write(table.to_csv() if args.csv else table.to_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="revadder", description="Reversible adder circuit toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("gates", help="list catalog gates or print one truth table")
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_gates)

    s = sub.add_parser("build", help="generate a design netlist")
    s.add_argument("design", choices=sorted(DESIGNS))
    s.add_argument("--bits", type=int)
    s.add_argument("--out", help="output file (default: standard output)")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("simulate", help="run a netlist forward or backward")
    s.add_argument("file")
    s.add_argument("--inputs", nargs="*", metavar="NAME=VALUE")
    s.add_argument("--backward", action="store_true")
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("verify", help="exhaustively check against arithmetic or another netlist")
    s.add_argument("file")
    s.add_argument("--mode", choices=("add", "subtract", "equiv"))
    s.add_argument("--against")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("table", help="print a truth table")
    s.add_argument("file")
    s.add_argument("--outputs", help="comma-separated output labels or line:<i>")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("metrics", help="compare cost reports of netlists")
    s.add_argument("files", nargs="*")
    s.add_argument("--csv", action="store_true")
    s.set_defaults(func=cmd_metrics)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, RevError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
