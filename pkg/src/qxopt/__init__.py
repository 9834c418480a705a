"""Clifford+T circuit optimizer for CNOT-restricted processor topologies.

Pipeline: parse a circuit, build (once per architecture) a table realizing
every CNOT under the device's directed coupling constraints, try every
logical-to-physical placement, peephole-simplify, keep the cheapest, and
verify the result against the original unitary. Analysis helpers compute
Mermin-polynomial values and state fidelities from measured distributions
and tomography matrices.
"""
from .circuit import (
    Circuit,
    CostReport,
    Gate,
    GateKind,
    cost_report,
    gate_count,
    inverse_of,
    level_count,
    relabel,
)
from .nonclassicality import MerminValue, lhv_bound, mermin3, parity_expectation, sanitize, uhlmann_fidelity
from .peephole import simplify
from .placement import MappingResult, cost_of, optimize
from .qasm import emit, parse
from .realization import RealizationTable, build_table, lookup
from .simulator import equivalent, measure_probs, run_ideal, run_noisy, unitary_of
from .states import DensityMatrix, NoiseSpec, ProbabilityDistribution, StateVector
from .topology import CouplingGraph, allows, builtin, load

__all__ = [
    "Circuit",
    "CostReport",
    "CouplingGraph",
    "DensityMatrix",
    "Gate",
    "GateKind",
    "MappingResult",
    "MerminValue",
    "NoiseSpec",
    "ProbabilityDistribution",
    "RealizationTable",
    "StateVector",
    "allows",
    "build_table",
    "builtin",
    "cost_of",
    "cost_report",
    "emit",
    "equivalent",
    "gate_count",
    "inverse_of",
    "level_count",
    "lhv_bound",
    "load",
    "lookup",
    "measure_probs",
    "mermin3",
    "optimize",
    "parity_expectation",
    "parse",
    "relabel",
    "run_ideal",
    "run_noisy",
    "sanitize",
    "simplify",
    "uhlmann_fidelity",
    "unitary_of",
]

__version__ = "0.1.0"
