"""Cost figures for circuits and side-by-side comparison tables."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Sequence

from .circuit import Circuit, depth
from .errors import EmptyInput, WidthOutOfRange
from .gates import TlcTriple

__all__ = [
    "TlcTriple",
    "CostReport",
    "ComparisonTable",
    "cost_report",
    "compare",
    "scaling_report",
]


@dataclass(frozen=True)
class CostReport:
    circuit_name: str
    gate_count: int
    constant_inputs: int
    garbage_outputs: int
    unit_delay: int
    tlc: TlcTriple
    transistor_count: int | None = None

    def summary(self) -> tuple[int, int, int, int]:
        """(gates, constants, garbage, delay)"""
        return (self.gate_count, self.constant_inputs, self.garbage_outputs, self.unit_delay)

    def render(self) -> str:
        t = self.tlc
        lines = [
            f"design:           {self.circuit_name}",
            f"gate count:       {self.gate_count}",
            f"constant inputs:  {self.constant_inputs}",
            f"garbage outputs:  {self.garbage_outputs}",
            f"unit delay:       {self.unit_delay}",
            f"TLC:              {t.alpha}a + {t.beta}b + {t.delta}d (alpha/beta/delta = {t.alpha}/{t.beta}/{t.delta})",
            "transistors:      "
            + ("n/a" if self.transistor_count is None else str(self.transistor_count)),
        ]
        return "\n".join(lines) + "\n"


def cost_report(circuit: Circuit, name: str = "circuit") -> CostReport:
    tlc = TlcTriple()
    transistors: int | None = 0
    for inst in circuit.instances:
        tlc = tlc + inst.gate.cost.tlc
        t = inst.gate.cost.transistor_count
        # report no count at all rather than a partial one
        transistors = None if transistors is None or t is None else transistors + t
    return CostReport(
        name,
        len(circuit.instances),
        len(circuit.constants),
        len(circuit.garbage),
        depth(circuit),
        tlc,
        transistors,
    )


COLUMNS = ("gates", "constants", "garbage", "delay", "alpha", "beta", "delta", "transistors")


def _values(r: CostReport) -> tuple:
    return (
        r.gate_count,
        r.constant_inputs,
        r.garbage_outputs,
        r.unit_delay,
        r.tlc.alpha,
        r.tlc.beta,
        r.tlc.delta,
        r.transistor_count,
    )


@dataclass(frozen=True)
class ComparisonTable:
    reports: tuple[CostReport, ...]
    # minima[col] = names of the designs achieving the column minimum
    minima: dict[str, frozenset[str]]

    def is_min(self, design: str, column: str) -> bool:
        return design in self.minima[column]

    def to_text(self) -> str:
        header = ("design",) + COLUMNS
        body = []
        for r in self.reports:
            cells = [r.circuit_name]
            for col, v in zip(COLUMNS, _values(r)):
                cell = "-" if v is None else str(v)
                if r.circuit_name in self.minima[col]:
                    cell += "*"
                cells.append(cell)
            body.append(cells)
        widths = [max(len(row[i]) for row in [list(header)] + body) for i in range(len(header))]
        out = [
            "  ".join(h.ljust(w) if i == 0 else h.rjust(w) for i, (h, w) in enumerate(zip(header, widths)))
        ]
        for row in body:
            out.append(
                "  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(row, widths)))
            )
        out.append("(* = column minimum)")
        return "\n".join(out) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("design",) + COLUMNS)
        for r in self.reports:
            w.writerow([r.circuit_name] + ["" if v is None else v for v in _values(r)])
        return buf.getvalue()


def compare(reports: Sequence[CostReport]) -> ComparisonTable:
    if not reports:
        raise EmptyInput("compare needs at least one report")
    minima = {}
    for j, col in enumerate(COLUMNS):
        present = [(r.circuit_name, _values(r)[j]) for r in reports if _values(r)[j] is not None]
        if not present:
            minima[col] = frozenset()
            continue
        low = min(v for _, v in present)
        minima[col] = frozenset(name for name, v in present if v == low)
    return ComparisonTable(tuple(reports), minima)


def scaling_report(generator: str, n_range: Iterable[int]) -> list[CostReport]:
    """Cost reports for the ripple adder ("rca") or subtractor ("rcs") at each width."""
    from .generators import MAX_BITS, ripple_borrow_subtractor, ripple_carry_adder

    build = {"rca": ripple_carry_adder, "rcs": ripple_borrow_subtractor}.get(generator)
    if build is None:
        raise ValueError(f"generator must be 'rca' or 'rcs', got {generator!r}")
    n_range = list(n_range)
    for n in n_range:
        if not 1 <= n <= MAX_BITS:
            raise WidthOutOfRange(f"width {n} not in 1..{MAX_BITS}")
    return [cost_report(build(n)[0], f"{generator}{n}") for n in n_range]
