"""Plain-text netlist format.

::

    revnet 1
    lines 4
    const 3 0
    input 0 A
    gate INV0 0 1 2 3
    garbage 0 3
    output 1 SUM

Gates apply in file order; the first line index of a ``gate`` record is the
gate's first port. ``#`` starts a comment.
"""
from __future__ import annotations

import re
from pathlib import Path

from .circuit import Circuit, new_circuit, validate
from .errors import ParseError, RevError, UnknownGate
from .gates import resolve
from .generators import AdderLayout

FORMAT_VERSION = 1


def render(circuit: Circuit, title: str | None = None) -> str:
    out = []
    if title:
        out.append(f"# {title}")
    out.append(f"revnet {FORMAT_VERSION}")
    out.append(f"lines {circuit.line_count}")
    for line in sorted(circuit.constants):
        out.append(f"const {line} {circuit.constants[line]}")
    for line in sorted(circuit.input_labels):
        out.append(f"input {line} {circuit.input_labels[line]}")
    for inst in circuit.instances:
        out.append(f"gate {inst.gate.name} " + " ".join(map(str, inst.lines)))
    if circuit.garbage:
        out.append("garbage " + " ".join(map(str, sorted(circuit.garbage))))
    for line in sorted(circuit.output_labels):
        out.append(f"output {line} {circuit.output_labels[line]}")
    return "\n".join(out) + "\n"


def _int(tok: str, lineno: int) -> int:
    if not re.fullmatch(r"\d+", tok):
        raise ParseError(f"expected a non-negative integer, got {tok!r}", lineno)
    return int(tok)


def parse(text: str) -> Circuit:
    circuit: Circuit | None = None
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kw, *args = line.split()
        if not seen_header:
            if kw != "revnet" or args != [str(FORMAT_VERSION)]:
                raise ParseError(f"expected 'revnet {FORMAT_VERSION}' header", lineno)
            seen_header = True
            continue
        if circuit is None:
            if kw != "lines" or len(args) != 1:
                raise ParseError("expected 'lines <N>' after the header", lineno)
            try:
                circuit = new_circuit(_int(args[0], lineno))
            except RevError as exc:
                raise ParseError(str(exc), lineno) from None
            continue
        try:
            if kw == "gate":
                if not args:
                    raise ParseError("gate record needs a name", lineno)
                try:
                    gate = resolve(args[0])
                except UnknownGate as exc:
                    raise ParseError(str(exc), lineno) from None
                circuit = circuit.append_gate(gate, [_int(a, lineno) for a in args[1:]])
            elif kw == "const":
                if len(args) != 2 or args[1] not in ("0", "1"):
                    raise ParseError("expected 'const <line> <0|1>'", lineno)
                circuit = circuit.set_constant(_int(args[0], lineno), int(args[1]))
            elif kw == "garbage":
                circuit = circuit.mark_garbage(_int(a, lineno) for a in args)
            elif kw in ("input", "output"):
                if len(args) != 2:
                    raise ParseError(f"expected '{kw} <line> <name>'", lineno)
                idx = _int(args[0], lineno)
                if kw == "input":
                    circuit = circuit.label_input(idx, args[1])
                else:
                    circuit = circuit.label_output(idx, args[1])
            elif kw in ("revnet", "lines"):
                raise ParseError(f"duplicate {kw!r} record", lineno)
            else:
                raise ParseError(f"unknown record {kw!r}", lineno)
        except ParseError:
            raise
        except RevError as exc:
            raise ParseError(str(exc), lineno) from None
    if circuit is None:
        raise ParseError("missing header or 'lines' record")
    problems = validate(circuit)
    if problems:
        raise ParseError("; ".join(map(str, problems)))
    return circuit


def write(circuit: Circuit, path: str | Path, title: str | None = None) -> None:
    Path(path).write_text(render(circuit, title), encoding="utf-8", newline="\n")


def read(path: str | Path) -> Circuit:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse(text)


class LayoutError(RevError):
    pass


def layout_from_labels(circuit: Circuit) -> tuple[AdderLayout, str]:
    """Recover an adder/subtractor layout from the port labels written by the
    generators. Returns the layout and its natural mode ("add" or "subtract").
    """
    ins = {name: line for line, name in circuit.input_labels.items()}
    outs = {name: line for line, name in circuit.output_labels.items()}

    # single-cell designs
    if {"A", "B", "C"} <= ins.keys():
        if {"SUM", "CARRY"} <= outs.keys():
            return AdderLayout(1, (ins["A"],), (ins["B"],), ins["C"], outs["CARRY"], (outs["SUM"],), ()), "add"
        if {"DIFF", "BORROW"} <= outs.keys():
            return AdderLayout(1, (ins["A"],), (ins["B"],), ins["C"], outs["BORROW"], (outs["DIFF"],), ()), "subtract"

    n = 0
    while f"A{n}" in ins:
        n += 1
    if n == 0 or any(f"B{i}" not in ins for i in range(n)):
        raise LayoutError("no adder port labels (A0.., B0.., CIN/BIN) found")
    a = tuple(ins[f"A{i}"] for i in range(n))
    b = tuple(ins[f"B{i}"] for i in range(n))
    if "CIN" in ins and "COUT" in outs and all(f"S{i}" in outs for i in range(n)):
        s = tuple(outs[f"S{i}"] for i in range(n))
        return AdderLayout(n, a, b, ins["CIN"], outs["COUT"], s, ()), "add"
    if "BIN" in ins and "BOUT" in outs and all(f"D{i}" in outs for i in range(n)):
        s = tuple(outs[f"D{i}"] for i in range(n))
        return AdderLayout(n, a, b, ins["BIN"], outs["BOUT"], s, ()), "subtract"
    raise LayoutError("incomplete adder labels: need CIN/COUT with S0.. or BIN/BOUT with D0..")
