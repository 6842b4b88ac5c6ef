"""Forward/backward execution, truth-table enumeration and equivalence checks.

Single assignments go through plain Python; exhaustive enumeration runs the
whole input space as a (rows, lines) bit matrix with numpy so that a 2^20 row
table stays a matter of seconds.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from .circuit import Circuit
from .errors import (
    InputShapeMismatch,
    LineOutOfRange,
    MissingInput,
    MissingOutput,
    TooManyFreeInputs,
    UnexpectedInput,
    ValueOutOfRange,
)

Assignment = dict[int, int]

MAX_FREE_INPUTS = 20
_CHUNK = 1 << 16


def _apply(state: list[int], lines: Sequence[int], table: Sequence[int]) -> None:
    k = len(lines)
    x = 0
    for line in lines:
        x = (x << 1) | state[line]
    y = table[x]
    for j, line in enumerate(lines):
        state[line] = (y >> (k - 1 - j)) & 1


def _check_bits(values: Mapping[int, int]) -> None:
    for line, bit in values.items():
        if bit not in (0, 1):
            raise ValueOutOfRange(f"line {line}: bit value {bit!r} is not 0 or 1")


def run_forward(circuit: Circuit, inputs: Mapping[int, int]) -> Assignment:
    """Apply the circuit to an assignment over exactly its free lines."""
    free = circuit.free_lines
    missing = [x for x in free if x not in inputs]
    if missing:
        raise MissingInput(f"no value for free lines {missing}")
    extra = sorted(x for x in inputs if x not in set(free))
    if extra:
        raise UnexpectedInput(f"lines {extra} are constant or out of range")
    _check_bits(inputs)
    state = [0] * circuit.line_count
    for line, bit in circuit.constants.items():
        state[line] = bit
    for line in free:
        state[line] = inputs[line]
    for inst in circuit.instances:
        _apply(state, inst.lines, inst.gate.mapping)
    return dict(enumerate(state))


def run_backward(circuit: Circuit, outputs: Mapping[int, int]) -> Assignment:
    """Undo the circuit from an assignment over all lines."""
    missing = [x for x in range(circuit.line_count) if x not in outputs]
    if missing:
        raise MissingOutput(f"no value for lines {missing}")
    extra = sorted(x for x in outputs if not 0 <= x < circuit.line_count)
    if extra:
        raise LineOutOfRange(f"lines {extra} out of range")
    _check_bits(outputs)
    state = [outputs[x] for x in range(circuit.line_count)]
    for inst in reversed(circuit.instances):
        _apply(state, inst.lines, inst.gate.inverse_mapping)
    return dict(enumerate(state))


def simulate_batch(circuit: Circuit, state: np.ndarray) -> np.ndarray:
    """Run the circuit forward on every row of a (rows, line_count) bit matrix, in place."""
    for inst in circuit.instances:
        k = len(inst.lines)
        cols = list(inst.lines)
        idx = np.zeros(state.shape[0], dtype=np.int64)
        for line in cols:
            idx = (idx << 1) | state[:, line]
        out = np.asarray(inst.gate.mapping, dtype=np.int64)[idx]
        for j, line in enumerate(cols):
            state[:, line] = (out >> (k - 1 - j)) & 1
    return state


def _int_to_bits(values: np.ndarray, width: int) -> np.ndarray:
    shifts = np.arange(width - 1, -1, -1, dtype=np.int64)
    return ((values[:, None] >> shifts) & 1).astype(np.uint8)


def _bits_to_int(bits: np.ndarray) -> np.ndarray:
    out = np.zeros(bits.shape[0], dtype=object if bits.shape[1] > 62 else np.int64)
    for j in range(bits.shape[1]):
        out = (out << 1) | bits[:, j].astype(out.dtype)
    return out


@dataclass(frozen=True)
class TruthTableView:
    """Exhaustive table: input words ascending, first listed line = leftmost bit."""

    free_input_lines: tuple[int, ...]
    output_lines: tuple[int, ...]
    outputs: np.ndarray  # (2^f, len(output_lines)) uint8

    def __len__(self) -> int:
        return self.outputs.shape[0]

    def input_bits(self, row: int) -> tuple[int, ...]:
        f = len(self.free_input_lines)
        return tuple((row >> (f - 1 - j)) & 1 for j in range(f))

    def output_bits(self, row: int) -> tuple[int, ...]:
        return tuple(int(b) for b in self.outputs[row])

    @property
    def rows(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        return list(self)

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        for r in range(len(self)):
            yield self.input_bits(r), self.output_bits(r)

    def output_words(self) -> np.ndarray:
        return _bits_to_int(self.outputs)

    def same_as(self, other: "TruthTableView") -> bool:
        return self.outputs.shape == other.outputs.shape and bool(
            np.array_equal(self.outputs, other.outputs)
        )

    def format_rows(self) -> list[str]:
        return [
            "".join(map(str, i)) + " | " + "".join(map(str, o)) for i, o in self
        ]


def enumerate_table(
    circuit: Circuit,
    output_lines: Sequence[int] | None = None,
    input_lines: Sequence[int] | None = None,
    max_free_inputs: int = MAX_FREE_INPUTS,
) -> TruthTableView:
    """Run every free-input word through the circuit.

    ``input_lines`` reorders the free lines (default: ascending index); the
    first one is the most significant bit of the row index. ``output_lines``
    defaults to every line.
    """
    free = circuit.free_lines
    if input_lines is None:
        input_lines = free
    elif sorted(input_lines) != free:
        raise InputShapeMismatch(f"input order {list(input_lines)} is not a permutation of {free}")
    if output_lines is None:
        output_lines = range(circuit.line_count)
    output_lines = tuple(output_lines)
    for line in output_lines:
        if not 0 <= line < circuit.line_count:
            raise LineOutOfRange(f"output line {line} out of range")
    f = len(input_lines)
    if f > max_free_inputs:
        raise TooManyFreeInputs(f"{f} free inputs exceeds the limit of {max_free_inputs}")

    total = 1 << f
    result = np.empty((total, len(output_lines)), dtype=np.uint8)
    in_cols = list(input_lines)
    out_cols = list(output_lines)
    for start in range(0, total, _CHUNK):
        words = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        state = np.zeros((words.size, circuit.line_count), dtype=np.int64)
        for line, bit in circuit.constants.items():
            state[:, line] = bit
        if f:
            state[:, in_cols] = _int_to_bits(words, f)
        simulate_batch(circuit, state)
        result[start : start + words.size] = state[:, out_cols]
    return TruthTableView(tuple(input_lines), output_lines, result)


@dataclass(frozen=True)
class EquivalenceResult:
    equal: bool
    rows_checked: int
    counterexample: tuple[int, ...] | None = None  # input bits of first mismatch
    outputs_first: tuple[int, ...] | None = None
    outputs_second: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.equal


def equivalent(
    c1: Circuit,
    outs1: Sequence[int],
    c2: Circuit,
    outs2: Sequence[int],
    inputs1: Sequence[int] | None = None,
    inputs2: Sequence[int] | None = None,
) -> EquivalenceResult:
    """Compare two circuits on selected outputs over the whole input space.

    Input words are matched position by position through ``inputs1`` and
    ``inputs2`` (each defaulting to its circuit's free lines ascending).
    """
    in1 = list(inputs1) if inputs1 is not None else c1.free_lines
    in2 = list(inputs2) if inputs2 is not None else c2.free_lines
    if len(in1) != len(in2):
        raise InputShapeMismatch(f"free input counts differ: {len(in1)} vs {len(in2)}")
    if len(outs1) != len(outs2):
        raise InputShapeMismatch(f"output selections differ in size: {len(outs1)} vs {len(outs2)}")
    t1 = enumerate_table(c1, outs1, in1)
    t2 = enumerate_table(c2, outs2, in2)
    diff = np.flatnonzero(np.any(t1.outputs != t2.outputs, axis=1))
    if diff.size == 0:
        return EquivalenceResult(True, len(t1))
    row = int(diff[0])
    return EquivalenceResult(
        False, len(t1), t1.input_bits(row), t1.output_bits(row), t2.output_bits(row)
    )
