import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qxopt.circuit import Circuit, Gate, GateKind, cnot, gate1, gate_count
from qxopt.fixtures import random_circuit
from qxopt.peephole import RULES, simplify, simplify_with_trace, verify_rules
from qxopt.simulator import unitary_of


def _phase_equal(a: np.ndarray, b: np.ndarray, tol: float = 1e-9) -> bool:
    anchor = np.flatnonzero(np.abs(a.ravel()) > 1e-9)[0]
    phase = b.ravel()[anchor] / a.ravel()[anchor]
    if abs(phase) < 1e-12:
        return False
    phase /= abs(phase)
    return bool(np.max(np.abs(b - phase * a)) <= tol)


def test_rule_table_is_unitarily_sound():
    verify_rules()  # raises if any pattern != replacement


@pytest.mark.parametrize("rule", RULES, ids=lambda r: r.name)
def test_each_rule_against_dense_oracle(rule):
    width = 2 if GateKind.CNOT in rule.pattern else 1
    qubits = (0, 1) if width == 2 else (0,)
    lhs = unitary_of(Circuit(width, tuple(Gate(k, qubits) for k in rule.pattern)))
    rhs = unitary_of(Circuit(width, tuple(Gate(k, qubits) for k in rule.replacement)))
    assert _phase_equal(lhs, rhs)


def test_consecutive_hadamards_removed():
    assert simplify(Circuit(1, (gate1(GateKind.H, 0), gate1(GateKind.H, 0)))).gates == ()


def test_cancellation_across_disjoint_support():
    c = Circuit(2, (gate1(GateKind.H, 0), gate1(GateKind.X, 1), gate1(GateKind.H, 0)))
    out = simplify(c)
    assert out.gates == (gate1(GateKind.X, 1),)
    assert _phase_equal(unitary_of(c), unitary_of(out))


def test_phase_merge_t_t_to_s():
    c = Circuit(1, (gate1(GateKind.T, 0), gate1(GateKind.T, 0)))
    out = simplify(c)
    assert out.gates == (gate1(GateKind.S, 0),)
    assert _phase_equal(unitary_of(c), unitary_of(out))


def test_four_t_gates_collapse_to_z():
    c = Circuit(1, tuple(gate1(GateKind.T, 0) for _ in range(4)))
    assert simplify(c).gates == (gate1(GateKind.Z, 0),)


def test_cnot_pair_cancels_only_on_identical_orientation():
    assert simplify(Circuit(2, (cnot(0, 1), cnot(0, 1)))).gates == ()
    kept = simplify(Circuit(2, (cnot(0, 1), cnot(1, 0))))
    assert kept.gates == (cnot(0, 1), cnot(1, 0))


def test_shared_qubit_blocks_matching():
    # The middle CNOT touches qubit 0, so the Hadamards are not adjacent.
    c = Circuit(2, (gate1(GateKind.H, 0), cnot(0, 1), gate1(GateKind.H, 0)))
    assert simplify(c).gates == c.gates


def test_trace_reports_fired_rules():
    c = Circuit(1, (gate1(GateKind.S, 0), gate1(GateKind.SDG, 0)))
    out, trace = simplify_with_trace(c)
    assert out.gates == ()
    assert [f.rule for f in trace] == ["cancel-s-sdg"]


@settings(deadline=None, max_examples=120)
@given(st.integers(0, 10_000))
def test_simplify_preserves_unitary_and_is_monotone_idempotent(seed):
    rng = random.Random(seed)
    c = random_circuit(rng.randint(1, 4), rng.randint(0, 24), rng)
    out = simplify(c)
    assert gate_count(out) <= gate_count(c)
    assert simplify(out) == out
    if c.num_qubits <= 4:
        u_in, u_out = unitary_of(c), unitary_of(out)
        if gate_count(c) == 0:
            assert np.allclose(u_in, u_out)
        else:
            assert _phase_equal(u_in, u_out, tol=1e-9)
