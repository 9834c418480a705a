"""Dense statevector / unitary / density-matrix engine.

Caps: 10 qubits for unitaries and state vectors, 6 for density matrices.
Dense linear algebra throughout; at this scale sparsity buys nothing and
plain matrices keep every check auditable.
"""
from __future__ import annotations

import math

import numpy as np

from .circuit import Circuit, Gate, GateKind
from .states import (
    DensityMatrix,
    NoiseSpec,
    ProbabilityDistribution,
    StateVector,
    basis_state,
    distribution_from_vector,
)

MAX_STATE_QUBITS = 10
MAX_DENSITY_QUBITS = 6

_S2 = 1.0 / math.sqrt(2.0)

GATE_MATRICES: dict[GateKind, np.ndarray] = {
    GateKind.H: np.array([[_S2, _S2], [_S2, -_S2]], dtype=complex),
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    GateKind.S: np.array([[1, 0], [0, 1j]], dtype=complex),
    GateKind.SDG: np.array([[1, 0], [0, -1j]], dtype=complex),
    GateKind.T: np.array([[1, 0], [0, np.exp(1j * math.pi / 4)]], dtype=complex),
    GateKind.TDG: np.array([[1, 0], [0, np.exp(-1j * math.pi / 4)]], dtype=complex),
}


def embedded_gate(gate: Gate, num_qubits: int) -> np.ndarray:
    """Full 2^n x 2^n matrix of one gate, qubit 0 = least-significant bit."""
    dim = 2**num_qubits
    if gate.kind is GateKind.CNOT:
        control, target = gate.qubits
        idx = np.arange(dim)
        flipped = idx ^ (((idx >> control) & 1) << target)
        mat = np.zeros((dim, dim), dtype=complex)
        mat[flipped, idx] = 1.0
        return mat
    (q,) = gate.qubits
    return np.kron(
        np.kron(np.eye(2 ** (num_qubits - 1 - q)), GATE_MATRICES[gate.kind]),
        np.eye(2**q),
    )


def _check_width(num_qubits: int, cap: int) -> None:
    if num_qubits > cap:
        raise ValueError(f"{num_qubits} qubits exceeds the dense-simulation cap of {cap}")


def unitary_of(circuit: Circuit) -> np.ndarray:
    """Product of the circuit's embedded gate matrices, in circuit order."""
    _check_width(circuit.num_qubits, MAX_STATE_QUBITS)
    u = np.eye(2**circuit.num_qubits, dtype=complex)
    for g in circuit.gates:
        u = embedded_gate(g, circuit.num_qubits) @ u
    return u


def _apply_gate(state: np.ndarray, gate: Gate, num_qubits: int) -> np.ndarray:
    if gate.kind is GateKind.CNOT:
        control, target = gate.qubits
        idx = np.arange(state.shape[0])
        return state[idx ^ (((idx >> control) & 1) << target)]
    (q,) = gate.qubits
    mat = GATE_MATRICES[gate.kind]
    shaped = state.reshape(2 ** (num_qubits - 1 - q), 2, 2**q)
    return np.einsum("ab,xbz->xaz", mat, shaped).reshape(-1)


def run_ideal(circuit: Circuit, initial: StateVector | None = None) -> StateVector:
    """Apply the circuit to `initial` (default |0...0>) without noise."""
    _check_width(circuit.num_qubits, MAX_STATE_QUBITS)
    if initial is None:
        initial = basis_state(circuit.num_qubits)
    if initial.num_qubits != circuit.num_qubits:
        raise ValueError(
            f"initial state has {initial.num_qubits} qubits, circuit {circuit.num_qubits}"
        )
    amp = initial.amplitudes.copy()
    for g in circuit.gates:
        amp = _apply_gate(amp, g, circuit.num_qubits)
    return StateVector(amp)


_PAULIS = (GateKind.X, GateKind.Y, GateKind.Z)


def _depolarize(rho: np.ndarray, qubit: int, p: float, num_qubits: int) -> np.ndarray:
    if p == 0.0:
        return rho
    mix = np.zeros_like(rho)
    for kind in _PAULIS:
        pauli = embedded_gate(Gate(kind, (qubit,)), num_qubits)
        mix += pauli @ rho @ pauli
    return (1.0 - p) * rho + (p / 3.0) * mix


def run_noisy(circuit: Circuit, noise: NoiseSpec) -> DensityMatrix:
    """Evolve |0...0><0...0| through the circuit, applying a symmetric
    depolarizing channel to every qubit a gate touches, after the gate."""
    _check_width(circuit.num_qubits, MAX_DENSITY_QUBITS)
    dim = 2**circuit.num_qubits
    rho = np.zeros((dim, dim), dtype=complex)
    rho[0, 0] = 1.0
    for g in circuit.gates:
        u = embedded_gate(g, circuit.num_qubits)
        rho = u @ rho @ u.conj().T
        p = noise.p2 if g.kind.arity == 2 else noise.p1
        for q in g.qubits:
            rho = _depolarize(rho, q, p, circuit.num_qubits)
    out = DensityMatrix(rho)
    out.validate()
    return out


def measure_probs(state: StateVector | DensityMatrix) -> ProbabilityDistribution:
    """Computational-basis outcome probabilities, strict sum tolerance."""
    if isinstance(state, StateVector):
        values = np.abs(state.amplitudes) ** 2
    else:
        values = np.clip(np.diag(state.matrix).real, 0.0, None)
    dist = distribution_from_vector(values, tolerance=1e-10)
    dist.validate()
    return dist


def _extend_placement(perm: list[int], num_physical: int) -> list[int]:
    """Extend an injection to a full permutation: leftover logical slots take
    the unused physical indices in increasing order."""
    used = set(perm)
    spare = [p for p in range(num_physical) if p not in used]
    return perm + spare


def _permutation_matrix(perm_full: list[int]) -> np.ndarray:
    n = len(perm_full)
    dim = 2**n
    src = np.arange(dim)
    dst = np.zeros(dim, dtype=np.int64)
    for j, pj in enumerate(perm_full):
        dst |= ((src >> j) & 1) << pj
    mat = np.zeros((dim, dim), dtype=complex)
    mat[dst, src] = 1.0
    return mat


def equivalent(
    c1: Circuit,
    c2: Circuit,
    perm: list[int] | tuple[int, ...] | None = None,
    tol: float = 1e-9,
) -> bool:
    """True when c2's unitary equals c1's up to qubit relabeling by `perm`
    and a global phase.

    c1 may be narrower than c2; its extra wires are padded with identity.
    The phase is read off the first entry where the relabeled reference is
    nonzero, then the whole matrices must agree entrywise within `tol`.
    """
    n1, n2 = c1.num_qubits, c2.num_qubits
    if n1 > n2:
        raise ValueError(f"first circuit is wider ({n1}) than second ({n2})")
    if perm is None:
        perm = list(range(n1))
    perm = list(perm)
    if len(perm) != n1 or len(set(perm)) != n1 or any(not 0 <= p < n2 for p in perm):
        raise ValueError(f"invalid placement {perm} for {n1} -> {n2} qubits")
    _check_width(n2, MAX_STATE_QUBITS)

    u1 = unitary_of(c1)
    if n2 > n1:
        u1 = np.kron(np.eye(2 ** (n2 - n1)), u1)
    pmat = _permutation_matrix(_extend_placement(perm, n2))
    reference = pmat @ u1 @ pmat.conj().T
    u2 = unitary_of(c2)

    flat_ref = reference.ravel()
    anchors = np.flatnonzero(np.abs(flat_ref) > 1e-9)
    if anchors.size == 0:
        return False
    anchor = anchors[0]
    phase = u2.ravel()[anchor] / flat_ref[anchor]
    mag = abs(phase)
    if mag < 1e-12:
        return False
    phase /= mag
    return float(np.max(np.abs(u2 - phase * reference))) <= tol
