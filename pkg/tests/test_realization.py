import numpy as np
import pytest

from qxopt.circuit import Circuit, GateKind, cnot, gate_count
from qxopt.realization import build_table, dump_text, lookup
from qxopt.simulator import equivalent, unitary_of
from qxopt.topology import allows, builtin, distance, load


def test_direct_edge_is_single_gate(qx2_table):
    assert lookup(qx2_table, 0, 1).total_gates == 1


def test_reversed_edge_is_hadamard_conjugation(qx2_table):
    entry = lookup(qx2_table, 1, 0)
    assert entry.total_gates == 5
    kinds = [g.kind for g in entry.sequence.gates]
    assert kinds == [GateKind.H, GateKind.H, GateKind.CNOT, GateKind.H, GateKind.H]
    # Dense oracle: the sequence must equal CNOT(1,0) on the full device.
    want = unitary_of(Circuit(5, (cnot(1, 0),)))
    got = unitary_of(entry.sequence)
    assert np.max(np.abs(want - got)) < 1e-12


def test_qx2_distant_pair_within_paper_bound(qx2_table):
    assert lookup(qx2_table, 1, 4).total_gates <= 10


def test_qx4_entries(qx4_table):
    assert lookup(qx4_table, 2, 0).total_gates == 1
    assert lookup(qx4_table, 0, 2).total_gates == 5


def test_lookup_errors(qx2_table):
    with pytest.raises(ValueError):
        lookup(qx2_table, 0, 0)
    with pytest.raises(ValueError):
        lookup(qx2_table, 0, 9)


@pytest.mark.parametrize("arch", ["qx2", "qx4"])
def test_all_twenty_entries_sound_and_legal(arch, qx2_table, qx4_table):
    table = qx2_table if arch == "qx2" else qx4_table
    graph = table.graph
    assert len(table.entries) == 20
    for (control, target), entry in table.entries.items():
        plain = Circuit(5, (cnot(control, target),))
        assert equivalent(plain, entry.sequence, tol=1e-9), (control, target)
        for g in entry.sequence.gates:
            if g.kind is GateKind.CNOT:
                assert allows(graph, *g.qubits), (control, target, g)
        assert entry.total_gates == gate_count(entry.sequence)


@pytest.mark.parametrize("arch", ["qx2", "qx4"])
def test_cost_floors_and_distance_trend(arch, qx2_table, qx4_table):
    table = qx2_table if arch == "qx2" else qx4_table
    graph = table.graph
    by_distance: dict[int, list[int]] = {}
    for (control, target), entry in table.entries.items():
        d = distance(graph, control, target)
        by_distance.setdefault(d, []).append(entry.total_gates)
        if allows(graph, control, target):
            assert entry.total_gates == 1
        elif allows(graph, target, control):
            assert entry.total_gates <= 5
    # The cheapest realization cannot get cheaper with distance.
    ds = sorted(by_distance)
    for lo, hi in zip(ds, ds[1:]):
        assert min(by_distance[lo]) <= min(by_distance[hi])


def test_build_is_deterministic():
    a = build_table(builtin("qx2"), verify=False)
    b = build_table(builtin("qx2"), verify=False)
    assert a.entries == b.entries


def test_build_rejects_disconnected_by_construction():
    # Disconnected graphs cannot even be constructed.
    with pytest.raises(ValueError, match="not connected"):
        load("qubits 4\n0 1\n2 3\n")


def test_line_graph_long_distance_entry_sound():
    # One-directional 4-qubit line; the (0,3) pair needs swaps plus a ladder.
    graph = load("qubits 4\n0 1\n1 2\n2 3\n")
    table = build_table(graph)
    entry = lookup(table, 0, 3)
    assert equivalent(Circuit(4, (cnot(0, 3),)), entry.sequence, tol=1e-9)
    assert entry.total_gates >= lookup(table, 0, 2).total_gates


def test_dump_text_lists_every_pair_with_cost(qx2_table):
    text = dump_text(qx2_table)
    assert "cnot q[1],q[4]: gates=" in text
    assert text.count("cnot q[") == 20
    assert "cx q[0],q[1];" in text
