"""Circuit intermediate representation for the Clifford+T gate set.

The IR is deliberately small: nine gate kinds, immutable gates and circuits,
and two cost metrics (gate count and level count under ASAP scheduling).
Everything downstream (routing, placement, peephole rewriting, simulation)
works on these values.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence


class GateKind(Enum):
    H = "h"
    X = "x"
    Y = "y"
    Z = "z"
    S = "s"
    SDG = "sdg"
    T = "t"
    TDG = "tdg"
    CNOT = "cx"

    @property
    def arity(self) -> int:
        return 2 if self is GateKind.CNOT else 1


# Inverse kinds, used by cancellation rewrites.
_INVERSE = {
    GateKind.H: GateKind.H,
    GateKind.X: GateKind.X,
    GateKind.Y: GateKind.Y,
    GateKind.Z: GateKind.Z,
    GateKind.S: GateKind.SDG,
    GateKind.SDG: GateKind.S,
    GateKind.T: GateKind.TDG,
    GateKind.TDG: GateKind.T,
    GateKind.CNOT: GateKind.CNOT,
}


def inverse_of(kind: GateKind) -> GateKind:
    """Gate kind whose unitary is the adjoint of `kind`'s."""
    return _INVERSE[kind]


@dataclass(frozen=True)
class Gate:
    """One gate application. For CNOT, qubits = (control, target)."""

    kind: GateKind
    qubits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.qubits) != self.kind.arity:
            raise ValueError(
                f"{self.kind.name} takes {self.kind.arity} qubit(s), got {self.qubits}"
            )
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"duplicate qubit in gate: {self.qubits}")
        if any(q < 0 for q in self.qubits):
            raise ValueError(f"negative qubit index: {self.qubits}")


def cnot(control: int, target: int) -> Gate:
    return Gate(GateKind.CNOT, (control, target))


def gate1(kind: GateKind, qubit: int) -> Gate:
    return Gate(kind, (qubit,))


@dataclass(frozen=True)
class Circuit:
    """Ordered gate sequence over `num_qubits` wires. Immutable value."""

    num_qubits: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self) -> None:
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be positive")
        if not isinstance(self.gates, tuple):
            object.__setattr__(self, "gates", tuple(self.gates))
        n = self.num_qubits
        for g in self.gates:
            for q in g.qubits:
                if q >= n:
                    raise ValueError(f"gate {g} uses qubit {q} >= num_qubits {n}")

    def __len__(self) -> int:
        return len(self.gates)


@dataclass(frozen=True)
class CostReport:
    """Gate count and schedule depth of a circuit."""

    gates: int
    levels: int

    def __post_init__(self) -> None:
        if self.gates < 0 or self.levels < 0:
            raise ValueError("costs must be non-negative")
        if self.levels > self.gates:
            raise ValueError("levels cannot exceed gates")
        if (self.levels == 0) != (self.gates == 0):
            raise ValueError("levels is zero exactly when gates is zero")


def gate_count(circuit: Circuit) -> int:
    return len(circuit.gates)


def level_count(circuit: Circuit) -> int:
    """Depth under as-soon-as-possible scheduling.

    A gate is placed at 1 + the highest level already occupied on any of its
    qubits; gates on disjoint qubits share a level.
    """
    return levels_of(circuit.gates)


def levels_of(gates: Iterable[Gate]) -> int:
    busy_until: dict[int, int] = {}
    depth = 0
    for g in gates:
        level = 1 + max((busy_until.get(q, 0) for q in g.qubits), default=0)
        for q in g.qubits:
            busy_until[q] = level
        if level > depth:
            depth = level
    return depth


def cost_report(circuit: Circuit) -> CostReport:
    return CostReport(gate_count(circuit), level_count(circuit))


def relabel(circuit: Circuit, perm: Sequence[int], num_qubits: int | None = None) -> Circuit:
    """Rewrite every qubit index i to perm[i], keeping gate order.

    `perm` must assign a distinct target to every wire of the circuit. The
    result has `num_qubits` wires (default: just enough to hold the image).
    """
    if len(perm) != circuit.num_qubits:
        raise ValueError(
            f"permutation covers {len(perm)} qubits, circuit has {circuit.num_qubits}"
        )
    if len(set(perm)) != len(perm):
        raise ValueError(f"mapping is not injective: {tuple(perm)}")
    if any(p < 0 for p in perm):
        raise ValueError(f"negative target index in mapping: {tuple(perm)}")
    width = max(perm) + 1 if num_qubits is None else num_qubits
    if max(perm) >= width:
        raise ValueError(f"mapping image {tuple(perm)} does not fit {width} qubits")
    gates = tuple(Gate(g.kind, tuple(perm[q] for q in g.qubits)) for g in circuit.gates)
    return Circuit(width, gates)


def concat(a: Circuit, b: Circuit) -> Circuit:
    """Sequential composition; width is the wider of the two."""
    return Circuit(max(a.num_qubits, b.num_qubits), a.gates + b.gates)
