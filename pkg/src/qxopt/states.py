"""Simulation and analysis payloads: state vectors, density matrices,
probability distributions, noise parameters, and their text formats.

Conventions: qubit 0 is the least-significant bit of a basis-state index;
bitstring labels are written most-significant-bit first, so label "011"
means qubit 1 and qubit 0 are set.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def bitstring(index: int, num_qubits: int) -> str:
    return format(index, f"0{num_qubits}b")


@dataclass(frozen=True)
class StateVector:
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amp = np.asarray(self.amplitudes, dtype=complex).ravel()
        object.__setattr__(self, "amplitudes", amp)
        n = amp.shape[0]
        if n < 2 or n & (n - 1):
            raise ValueError(f"amplitude vector length {n} is not a power of two")

    @property
    def num_qubits(self) -> int:
        return int(self.amplitudes.shape[0]).bit_length() - 1

    def validate(self, tol: float = 1e-10) -> None:
        norm = float(np.sum(np.abs(self.amplitudes) ** 2))
        if abs(norm - 1.0) > tol:
            raise ValueError(f"state norm^2 = {norm}, not 1 within {tol}")


def basis_state(num_qubits: int, index: int = 0) -> StateVector:
    amp = np.zeros(2**num_qubits, dtype=complex)
    amp[index] = 1.0
    return StateVector(amp)


@dataclass(frozen=True)
class DensityMatrix:
    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", m)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"density matrix must be square, got shape {m.shape}")
        n = m.shape[0]
        if n < 2 or n & (n - 1):
            raise ValueError(f"dimension {n} is not a power of two")

    @property
    def num_qubits(self) -> int:
        return int(self.matrix.shape[0]).bit_length() - 1

    def validate(self, herm_tol: float = 1e-10, eig_tol: float = 1e-8) -> None:
        m = self.matrix
        if float(np.max(np.abs(m - m.conj().T))) > herm_tol:
            raise ValueError("matrix is not Hermitian within tolerance")
        if abs(float(np.trace(m).real) - 1.0) > herm_tol:
            raise ValueError(f"trace = {np.trace(m).real}, not 1 within {herm_tol}")
        low = float(np.min(np.linalg.eigvalsh(m)))
        if low < -eig_tol:
            raise ValueError(f"matrix has eigenvalue {low} < -{eig_tol}")


@dataclass(frozen=True)
class NoiseSpec:
    """Per-gate symmetric depolarizing strengths: p1 after single-qubit
    gates, p2 per touched qubit after two-qubit gates."""

    p1: float = 0.001
    p2: float = 0.01

    def __post_init__(self) -> None:
        for name, p in (("p1", self.p1), ("p2", self.p2)):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} = {p} outside [0, 1]")


@dataclass(frozen=True)
class ProbabilityDistribution:
    """Computational-basis outcome probabilities keyed by bitstring label.

    The default sum tolerance is loose (0.005) because published tables are
    rounded to three decimals.
    """

    num_qubits: int
    probs: dict[str, float]
    tolerance: float = field(default=0.005, compare=False)

    def validate(self) -> None:
        for bits, p in self.probs.items():
            if len(bits) != self.num_qubits or set(bits) - {"0", "1"}:
                raise ValueError(f"bad outcome label {bits!r} for {self.num_qubits} qubits")
            if not -1e-12 <= p <= 1.0 + 1e-12:
                raise ValueError(f"probability {p} for {bits} outside [0, 1]")
        total = sum(self.probs.values())
        if abs(total - 1.0) > self.tolerance:
            raise ValueError(f"probabilities sum to {total}, not 1 within {self.tolerance}")

    def prob(self, bits: str) -> float:
        return self.probs.get(bits, 0.0)


def distribution_from_vector(values: np.ndarray, tolerance: float = 0.005) -> ProbabilityDistribution:
    values = np.asarray(values, dtype=float).ravel()
    n = int(values.shape[0]).bit_length() - 1
    probs = {bitstring(i, n): float(values[i]) for i in range(values.shape[0])}
    return ProbabilityDistribution(n, probs, tolerance)


# Text formats.
#   distribution: one "bitstring value" pair per line
#   density matrix: "dm N" header, then N*N "re im" pairs in row-major order


def format_distribution(dist: ProbabilityDistribution) -> str:
    lines = [f"{bits} {float(dist.probs[bits])!r}" for bits in sorted(dist.probs)]
    return "\n".join(lines) + "\n"


def parse_distribution(text: str, tolerance: float = 0.005) -> ProbabilityDistribution:
    probs: dict[str, float] = {}
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'bitstring value', got {raw!r}")
        bits, value = parts
        if set(bits) - {"0", "1"}:
            raise ValueError(f"line {lineno}: bad bitstring {bits!r}")
        if width is None:
            width = len(bits)
        elif len(bits) != width:
            raise ValueError(f"line {lineno}: inconsistent bitstring width")
        if bits in probs:
            raise ValueError(f"line {lineno}: duplicate outcome {bits!r}")
        probs[bits] = float(value)
    if width is None:
        raise ValueError("empty distribution")
    dist = ProbabilityDistribution(width, probs, tolerance)
    dist.validate()
    return dist


def format_density_matrix(matrix: np.ndarray) -> str:
    m = np.asarray(matrix, dtype=complex)
    lines = [f"dm {m.shape[0]}"]
    for row in m:
        for entry in row:
            lines.append(f"{float(entry.real)!r} {float(entry.imag)!r}")
    return "\n".join(lines) + "\n"


def parse_density_matrix(text: str) -> np.ndarray:
    """Read the raw complex matrix; no sanitization is applied here."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("dm"):
        raise ValueError("missing 'dm N' header")
    try:
        dim = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise ValueError("malformed 'dm N' header") from exc
    body = lines[1:]
    if len(body) != dim * dim:
        raise ValueError(f"expected {dim * dim} entries, found {len(body)}")
    out = np.zeros((dim, dim), dtype=complex)
    for k, ln in enumerate(body):
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"entry {k}: expected 're im', got {ln!r}")
        out[k // dim, k % dim] = complex(float(parts[0]), float(parts[1]))
    return out
