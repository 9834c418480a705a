"""Exhaustive logical-to-physical placement search.

Every injection of the circuit's qubits into the device qubits is scored by
relabeling, substituting each CNOT with its table realization, and peephole
simplifying; the cheapest mapping wins under a deterministic total order
(gates, then levels, then lexicographically smallest placement). Beyond the
exhaustive limit the search refuses instead of degrading to a heuristic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .circuit import Circuit, CostReport, Gate, GateKind, cost_report, levels_of
from .peephole import simplify_gates
from .realization import RealizationTable

DEFAULT_SEARCH_LIMIT = 8


@dataclass(frozen=True)
class MappingResult:
    placement: tuple[int, ...]
    mapped: Circuit
    initial_cost: CostReport
    final_cost: CostReport
    reduction_pct: tuple[int, int]


def percent_reduction(initial: CostReport, final: CostReport) -> tuple[int, int]:
    """Per-metric reduction, rounded half-up; negative when costs grew."""

    def pct(before: int, after: int) -> int:
        if before == 0:
            return 0
        return math.floor(100.0 * (before - after) / before + 0.5)

    return (pct(initial.gates, final.gates), pct(initial.levels, final.levels))


def _mapped_gates(
    circuit: Circuit,
    placement: Sequence[int],
    table: RealizationTable,
    cache: dict[tuple[GateKind, int], Gate],
) -> list[Gate]:
    out: list[Gate] = []
    entries = table.entries
    for g in circuit.gates:
        if g.kind is GateKind.CNOT:
            out.extend(entries[(placement[g.qubits[0]], placement[g.qubits[1]])].sequence.gates)
        else:
            key = (g.kind, placement[g.qubits[0]])
            gate = cache.get(key)
            if gate is None:
                gate = Gate(g.kind, (key[1],))
                cache[key] = gate
            out.append(gate)
    return out


def _check_widths(circuit: Circuit, table: RealizationTable, limit: int) -> int:
    num_physical = table.graph.num_physical
    if circuit.num_qubits > num_physical:
        raise ValueError(
            f"circuit has {circuit.num_qubits} qubits, device only {num_physical}"
        )
    if num_physical > limit:
        raise ValueError(
            f"device has {num_physical} qubits; exhaustive search is limited to "
            f"{limit} (the tool refuses rather than silently approximating)"
        )
    return num_physical


def optimize(
    circuit: Circuit,
    table: RealizationTable,
    limit: int = DEFAULT_SEARCH_LIMIT,
) -> MappingResult:
    """Try every injection of logical onto physical qubits, keep the best.

    The initial cost is measured on the circuit as written, even if it is
    not executable on the device as-is.
    """
    num_physical = _check_widths(circuit, table, limit)
    cache: dict[tuple[GateKind, int], Gate] = {}
    best_key: tuple | None = None
    best_gates: list[Gate] | None = None
    best_placement: tuple[int, ...] | None = None
    for placement in permutations(range(num_physical), circuit.num_qubits):
        gates = simplify_gates(_mapped_gates(circuit, placement, table, cache))
        key = (len(gates), levels_of(gates), placement)
        if best_key is None or key < best_key:
            best_key = key
            best_gates = gates
            best_placement = placement
    assert best_gates is not None and best_placement is not None
    initial = cost_report(circuit)
    mapped = Circuit(num_physical, tuple(best_gates))
    final = cost_report(mapped)
    return MappingResult(
        placement=best_placement,
        mapped=mapped,
        initial_cost=initial,
        final_cost=final,
        reduction_pct=percent_reduction(initial, final),
    )


def cost_of(
    circuit: Circuit,
    placement: Sequence[int],
    table: RealizationTable,
) -> CostReport:
    """Cost of relabel -> substitute -> simplify under one fixed placement."""
    num_physical = table.graph.num_physical
    placement = tuple(placement)
    if len(placement) != circuit.num_qubits:
        raise ValueError(
            f"placement covers {len(placement)} qubits, circuit has {circuit.num_qubits}"
        )
    if len(set(placement)) != len(placement):
        raise ValueError(f"placement is not injective: {placement}")
    if any(not 0 <= p < num_physical for p in placement):
        raise ValueError(f"placement {placement} outside 0..{num_physical - 1}")
    gates = simplify_gates(_mapped_gates(circuit, placement, table, {}))
    if not gates:
        return CostReport(0, 0)
    return CostReport(len(gates), levels_of(gates))
