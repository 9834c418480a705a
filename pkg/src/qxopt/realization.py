"""Per-architecture lookup from every ordered qubit pair to the cheapest
known gate sequence implementing that CNOT on the device.

Built once per coupling graph. Direct edges cost one gate, reversed edges
five (Hadamard conjugation). Distant pairs are served by the cheapest of:

  * swap the control (or the target) along a shortest path, apply the CNOT
    locally, swap back;
  * walk one endpoint until the pair is at distance two, then apply a
    four-CNOT ladder across the middle qubit (two gate orders tried).

Every candidate is peephole-simplified before costing, and every stored
entry is checked against the plain CNOT unitary.
"""
from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit, Gate, GateKind, cnot, gate1, levels_of
from .peephole import simplify_gates
from .simulator import MAX_STATE_QUBITS, equivalent
from .topology import CouplingGraph, allows, shortest_paths


class RealizationError(Exception):
    pass


@dataclass(frozen=True)
class RealizationEntry:
    control: int
    target: int
    sequence: Circuit
    total_gates: int
    levels: int


@dataclass(frozen=True)
class RealizationTable:
    graph: CouplingGraph
    entries: dict[tuple[int, int], RealizationEntry]


def _local_cnot(graph: CouplingGraph, control: int, target: int) -> list[Gate]:
    """CNOT between adjacent qubits: native edge, or H-conjugated reverse."""
    if (control, target) in graph.edges:
        return [cnot(control, target)]
    if (target, control) in graph.edges:
        h_pair = [gate1(GateKind.H, control), gate1(GateKind.H, target)]
        return h_pair + [cnot(target, control)] + h_pair
    raise RealizationError(f"qubits {control} and {target} are not adjacent")


def _swap(graph: CouplingGraph, a: int, b: int) -> list[Gate]:
    """SWAP from three CNOTs; a missing direction is fixed with Hadamards."""
    ab = (a, b) in graph.edges
    ba = (b, a) in graph.edges
    if ab and ba:
        return [cnot(a, b), cnot(b, a), cnot(a, b)]
    if ab:
        return [cnot(a, b)] + _local_cnot(graph, b, a) + [cnot(a, b)]
    if ba:
        return [cnot(b, a)] + _local_cnot(graph, a, b) + [cnot(b, a)]
    raise RealizationError(f"qubits {a} and {b} are not adjacent")


def _ladder(graph: CouplingGraph, a: int, mid: int, b: int, order: int) -> list[Gate]:
    """CNOT(a, b) across middle qubit `mid` as four local CNOTs."""
    first = _local_cnot(graph, a, mid)
    second = _local_cnot(graph, mid, b)
    if order == 0:
        return first + second + first + second
    return second + first + second + first


def _candidates(graph: CouplingGraph, control: int, target: int) -> list[list[Gate]]:
    out: list[list[Gate]] = []
    for path in shortest_paths(graph, control, target):
        k = len(path) - 1
        # Control content walks to the qubit adjacent to the target.
        walk_in = [g for i in range(k - 1) for g in _swap(graph, path[i], path[i + 1])]
        walk_out = [
            g
            for i in reversed(range(k - 1))
            for g in _swap(graph, path[i], path[i + 1])
        ]
        out.append(walk_in + _local_cnot(graph, path[k - 1], target) + walk_out)
        # Target content walks to the qubit adjacent to the control.
        walk_in = [g for i in range(k, 1, -1) for g in _swap(graph, path[i], path[i - 1])]
        walk_out = [
            g for i in range(2, k + 1) for g in _swap(graph, path[i], path[i - 1])
        ]
        out.append(walk_in + _local_cnot(graph, control, path[1]) + walk_out)
        # Walk the control until distance two remains, ladder across.
        walk_in = [g for i in range(k - 2) for g in _swap(graph, path[i], path[i + 1])]
        walk_out = [
            g
            for i in reversed(range(k - 2))
            for g in _swap(graph, path[i], path[i + 1])
        ]
        for order in (0, 1):
            out.append(
                walk_in + _ladder(graph, path[k - 2], path[k - 1], target, order) + walk_out
            )
        # Walk the target until distance two remains, ladder across.
        walk_in = [g for i in range(k, 2, -1) for g in _swap(graph, path[i], path[i - 1])]
        walk_out = [g for i in range(3, k + 1) for g in _swap(graph, path[i], path[i - 1])]
        for order in (0, 1):
            out.append(
                walk_in + _ladder(graph, control, path[1], path[2], order) + walk_out
            )
    return out


def _cost_key(gates: list[Gate]) -> tuple:
    return (
        len(gates),
        levels_of(gates),
        tuple((g.kind.name, g.qubits) for g in gates),
    )


def build_table(graph: CouplingGraph, verify: bool = True) -> RealizationTable:
    """Construct the full table for a connected coupling graph.

    With verify on (the default, possible up to the dense-simulation cap),
    every entry is proven equal to the plain CNOT up to global phase.
    """
    n = graph.num_physical
    entries: dict[tuple[int, int], RealizationEntry] = {}
    for control in range(n):
        for target in range(n):
            if control == target:
                continue
            if allows(graph, control, target):
                best = [cnot(control, target)]
            elif allows(graph, target, control):
                best = _local_cnot(graph, control, target)
            else:
                seen: set[tuple] = set()
                best = None
                for cand in _candidates(graph, control, target):
                    reduced = simplify_gates(cand)
                    key = _cost_key(reduced)
                    if key in seen:
                        continue
                    seen.add(key)
                    if best is None or key < _cost_key(best):
                        best = reduced
                assert best is not None
            sequence = Circuit(n, tuple(best))
            for g in best:
                if g.kind is GateKind.CNOT and not allows(graph, *g.qubits):
                    raise RealizationError(
                        f"entry ({control},{target}) uses illegal CNOT{g.qubits}"
                    )
            entries[(control, target)] = RealizationEntry(
                control, target, sequence, len(best), levels_of(best)
            )
    table = RealizationTable(graph, entries)
    if verify and n <= MAX_STATE_QUBITS:
        _verify_table(table)
    return table


def _verify_table(table: RealizationTable) -> None:
    n = table.graph.num_physical
    for (control, target), entry in table.entries.items():
        plain = Circuit(n, (cnot(control, target),))
        if not equivalent(plain, entry.sequence, tol=1e-9):
            raise RealizationError(
                f"entry ({control},{target}) does not implement its CNOT"
            )


def lookup(table: RealizationTable, control: int, target: int) -> RealizationEntry:
    n = table.graph.num_physical
    for q in (control, target):
        if not 0 <= q < n:
            raise ValueError(f"qubit {q} outside 0..{n - 1}")
    if control == target:
        raise ValueError("control and target must differ")
    return table.entries[(control, target)]


def dump_text(table: RealizationTable) -> str:
    """Human-readable table: per-pair cost line plus the gate sequence."""
    lines = [f"# architecture {table.graph.name}: {table.graph.num_physical} qubits"]
    for (control, target) in sorted(table.entries):
        entry = table.entries[(control, target)]
        lines.append(
            f"cnot q[{control}],q[{target}]: gates={entry.total_gates} levels={entry.levels}"
        )
        for g in entry.sequence.gates:
            args = ",".join(f"q[{q}]" for q in g.qubits)
            lines.append(f"  {g.kind.value} {args};")
    return "\n".join(lines) + "\n"
