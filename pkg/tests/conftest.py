import random
from dataclasses import replace

import pytest

from revadder.circuit import Circuit, GateInstance, new_circuit
from revadder.gates import CATALOG


def break_carry_chain(circuit: Circuit, stage: int) -> Circuit:
    """Cut a ripple adder's carry chain in front of ``stage``.

    A fresh constant-0 line replaces the chain from ``stage`` on, so that
    stage always sees carry 0; the old chain line is left dangling as garbage
    and COUT moves to the new chain.
    """
    chain = circuit.instances[stage].lines[2]
    new = circuit.line_count
    instances = list(circuit.instances)
    for k in range(stage, len(instances)):
        inst = instances[k]
        instances[k] = GateInstance(inst.gate, tuple(new if x == chain else x for x in inst.lines))
    outputs = {new if x == chain else x: name for x, name in circuit.output_labels.items()}
    return replace(
        circuit,
        line_count=new + 1,
        instances=tuple(instances),
        constants={**circuit.constants, new: 0},
        garbage=circuit.garbage | {chain},
        output_labels=outputs,
    )


def random_circuit(rng: random.Random, max_lines: int = 12, max_gates: int = 32) -> Circuit:
    gates = list(CATALOG.values())
    n = rng.randint(4, max_lines)
    c = new_circuit(n)
    for _ in range(rng.randint(0, max_gates)):
        g = rng.choice(gates)
        c = c.append_gate(g, rng.sample(range(n), g.arity))
    return c


@pytest.fixture
def rng():
    return random.Random(20261016)


_acceptance: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1].split("[")[0]
        _acceptance.setdefault(name, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcomes in _acceptance.items():
        verdict = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name} ({len(outcomes)} case(s))")
