"""Reversible netlist IR.

A :class:`Circuit` is an ordered list of gate instances on a fixed number of
lines. Lines may be bound to constants (ancillae), marked as garbage, and
labelled as named inputs or outputs. Builder methods return new circuits;
a circuit is never mutated in place.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .errors import (
    ArityMismatch,
    ConflictsWithInputLabel,
    DuplicateLabel,
    DuplicateLine,
    GarbageOutputConflict,
    LineOutOfRange,
    ValueOutOfRange,
    WidthOutOfRange,
)
from .gates import GateDefinition, invert

MAX_LINES = 1024


@dataclass(frozen=True)
class GateInstance:
    gate: GateDefinition
    lines: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.gate.name}({', '.join(map(str, self.lines))})"


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class Circuit:
    line_count: int
    instances: tuple[GateInstance, ...] = ()
    constants: dict[int, int] = field(default_factory=dict)
    garbage: frozenset[int] = frozenset()
    input_labels: dict[int, str] = field(default_factory=dict)
    output_labels: dict[int, str] = field(default_factory=dict)

    # -- queries ---------------------------------------------------------

    @property
    def free_lines(self) -> list[int]:
        """Lines not bound to a constant, ascending."""
        return [i for i in range(self.line_count) if i not in self.constants]

    def input_line(self, name: str) -> int:
        for line, label in self.input_labels.items():
            if label == name:
                return line
        raise KeyError(name)

    def output_line(self, name: str) -> int:
        for line, label in self.output_labels.items():
            if label == name:
                return line
        raise KeyError(name)

    def gate_census(self) -> dict[str, int]:
        census: dict[str, int] = {}
        for inst in self.instances:
            census[inst.gate.name] = census.get(inst.gate.name, 0) + 1
        return census

    def __len__(self) -> int:
        return len(self.instances)

    # -- builders --------------------------------------------------------

    def _check_line(self, line: int) -> None:
        if not 0 <= line < self.line_count:
            raise LineOutOfRange(f"line {line} not in 0..{self.line_count - 1}")

    def append_gate(self, gate: GateDefinition, lines: Sequence[int]) -> "Circuit":
        lines = tuple(lines)
        if len(lines) != gate.arity:
            raise ArityMismatch(f"{gate.name} takes {gate.arity} lines, got {len(lines)}")
        for line in lines:
            self._check_line(line)
        if len(set(lines)) != len(lines):
            raise DuplicateLine(f"{gate.name} placed on repeated lines {lines}")
        return replace(self, instances=self.instances + (GateInstance(gate, lines),))

    def set_constant(self, line: int, bit: int) -> "Circuit":
        self._check_line(line)
        if bit not in (0, 1):
            raise ValueOutOfRange(f"constant must be 0 or 1, got {bit!r}")
        if line in self.input_labels:
            raise ConflictsWithInputLabel(
                f"line {line} is labelled input {self.input_labels[line]!r}"
            )
        return replace(self, constants={**self.constants, line: bit})

    def mark_garbage(self, lines: Iterable[int]) -> "Circuit":
        lines = set(lines)
        for line in sorted(lines):
            self._check_line(line)
            if line in self.output_labels:
                raise GarbageOutputConflict(
                    f"line {line} is labelled output {self.output_labels[line]!r}"
                )
        return replace(self, garbage=self.garbage | lines)

    def label_input(self, line: int, name: str) -> "Circuit":
        self._check_line(line)
        if line in self.constants:
            raise ConflictsWithInputLabel(f"line {line} is bound to constant {self.constants[line]}")
        if name in self.input_labels.values() and self.input_labels.get(line) != name:
            raise DuplicateLabel(f"input label {name!r} already used")
        return replace(self, input_labels={**self.input_labels, line: name})

    def label_output(self, line: int, name: str) -> "Circuit":
        self._check_line(line)
        if line in self.garbage:
            raise GarbageOutputConflict(f"line {line} is marked garbage")
        if name in self.output_labels.values() and self.output_labels.get(line) != name:
            raise DuplicateLabel(f"output label {name!r} already used")
        return replace(self, output_labels={**self.output_labels, line: name})


def new_circuit(line_count: int) -> Circuit:
    if not 1 <= line_count <= MAX_LINES:
        raise WidthOutOfRange(f"line count {line_count} not in 1..{MAX_LINES}")
    return Circuit(line_count)


def validate(circuit: Circuit) -> list[Violation]:
    """Return every invariant violation; an empty list means the circuit is valid."""
    out: list[Violation] = []
    n = circuit.line_count
    if not 1 <= n <= MAX_LINES:
        out.append(Violation("WidthOutOfRange", f"line count {n}"))
    for k, inst in enumerate(circuit.instances):
        if len(inst.lines) != inst.gate.arity:
            out.append(Violation("ArityMismatch", f"instance {k} {inst}"))
        if len(set(inst.lines)) != len(inst.lines):
            out.append(Violation("DuplicateLine", f"instance {k} {inst}"))
        bad = [x for x in inst.lines if not 0 <= x < n]
        if bad:
            out.append(Violation("LineOutOfRange", f"instance {k} uses {bad}"))
    for group, lines in (
        ("constant", circuit.constants),
        ("garbage", circuit.garbage),
        ("input label", circuit.input_labels),
        ("output label", circuit.output_labels),
    ):
        bad = sorted(x for x in lines if not 0 <= x < n)
        if bad:
            out.append(Violation("LineOutOfRange", f"{group} on {bad}"))
    bad_bits = sorted(x for x, b in circuit.constants.items() if b not in (0, 1))
    if bad_bits:
        out.append(Violation("ValueOutOfRange", f"non-binary constants on {bad_bits}"))
    clash = sorted(set(circuit.constants) & set(circuit.input_labels))
    if clash:
        out.append(Violation("ConflictsWithInputLabel", f"lines {clash}"))
    clash = sorted(circuit.garbage & set(circuit.output_labels))
    if clash:
        out.append(Violation("GarbageOutputConflict", f"lines {clash}"))
    for kind, labels in (("input", circuit.input_labels), ("output", circuit.output_labels)):
        names = list(labels.values())
        dups = sorted({x for x in names if names.count(x) > 1})
        if dups:
            out.append(Violation("DuplicateLabel", f"{kind} labels {dups}"))
    return out


def inverse_circuit(circuit: Circuit) -> Circuit:
    """Reverse instance order and invert each gate.

    The inverse reads the original outputs, so every line becomes free:
    constants and garbage marks are dropped and input/output labels swap.
    """
    instances = tuple(
        GateInstance(invert(inst.gate), inst.lines) for inst in reversed(circuit.instances)
    )
    return Circuit(
        circuit.line_count,
        instances,
        input_labels=dict(circuit.output_labels),
        output_labels=dict(circuit.input_labels),
    )


def compose(first: Circuit, second: Circuit) -> Circuit:
    """Run ``first`` then ``second`` on the same lines; bookkeeping comes from ``first``."""
    if first.line_count != second.line_count:
        raise WidthOutOfRange("composed circuits must have equal line counts")
    return replace(first, instances=first.instances + second.instances)


def depth(circuit: Circuit) -> int:
    """ASAP level count with one unit of delay per gate."""
    level = [0] * circuit.line_count
    best = 0
    for inst in circuit.instances:
        lvl = 1 + max(level[x] for x in inst.lines)
        for x in inst.lines:
            level[x] = lvl
        best = max(best, lvl)
    return best
