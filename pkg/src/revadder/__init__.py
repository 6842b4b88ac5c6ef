"""Reversible adder circuits built from the Inventive0 gate."""
from .circuit import Circuit, GateInstance, depth, inverse_circuit, new_circuit, validate
from .gates import BitWord, CostProfile, GateDefinition, TlcTriple, builtin, invert, make_gate, truth_table
from .generators import (
    AdderLayout,
    carry_skip_adder4,
    full_adder,
    full_subtractor,
    ripple_borrow_subtractor,
    ripple_carry_adder,
    verify_against_arithmetic,
)
from .metrics import CostReport, compare, cost_report, scaling_report
from .simulator import enumerate_table, equivalent, run_backward, run_forward

__version__ = "0.1.0"
