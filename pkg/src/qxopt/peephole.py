"""Template-based local rewriting to a fixpoint.

Two gates match a rule when they act on identical qubit tuples and every
gate between them touches disjoint qubits, i.e. the pair can be commuted
together. Rules only cancel inverse pairs or merge phase gates, so each
firing strictly shrinks the circuit and the loop terminates.

Deliberately NOT exploited: algebraic commutations (e.g. Z-diagonal gates
through CNOT controls). This is the smallest engine that removes repeated
Hadamards and collapses swap-sequence overlap.
"""
from __future__ import annotations

from dataclasses import dataclass

from .circuit import Circuit, Gate, GateKind


@dataclass(frozen=True)
class RewriteRule:
    name: str
    pattern: tuple[GateKind, GateKind]
    replacement: tuple[GateKind, ...]


RULES: tuple[RewriteRule, ...] = (
    RewriteRule("cancel-hh", (GateKind.H, GateKind.H), ()),
    RewriteRule("cancel-xx", (GateKind.X, GateKind.X), ()),
    RewriteRule("cancel-yy", (GateKind.Y, GateKind.Y), ()),
    RewriteRule("cancel-zz", (GateKind.Z, GateKind.Z), ()),
    RewriteRule("cancel-s-sdg", (GateKind.S, GateKind.SDG), ()),
    RewriteRule("cancel-sdg-s", (GateKind.SDG, GateKind.S), ()),
    RewriteRule("cancel-t-tdg", (GateKind.T, GateKind.TDG), ()),
    RewriteRule("cancel-tdg-t", (GateKind.TDG, GateKind.T), ()),
    RewriteRule("cancel-cx-cx", (GateKind.CNOT, GateKind.CNOT), ()),
    RewriteRule("merge-tt-s", (GateKind.T, GateKind.T), (GateKind.S,)),
    RewriteRule("merge-tdgtdg-sdg", (GateKind.TDG, GateKind.TDG), (GateKind.SDG,)),
    RewriteRule("merge-ss-z", (GateKind.S, GateKind.S), (GateKind.Z,)),
    RewriteRule("merge-sdgsdg-z", (GateKind.SDG, GateKind.SDG), (GateKind.Z,)),
)

_RULE_BY_PAIR = {rule.pattern: rule for rule in RULES}

_rules_verified = False


def verify_rules() -> None:
    """Check every rule's pattern and replacement are unitarily equal.

    Runs once per process, lazily, before the first rewrite.
    """
    global _rules_verified
    if _rules_verified:
        return
    from .simulator import equivalent  # deferred: simulator does not import us

    for rule in RULES:
        width = 2 if GateKind.CNOT in rule.pattern else 1
        qubits = (0, 1) if width == 2 else (0,)
        lhs = Circuit(width, tuple(Gate(k, qubits) for k in rule.pattern))
        rhs = Circuit(width, tuple(Gate(k, qubits) for k in rule.replacement))
        if not equivalent(lhs, rhs, tol=1e-12):
            raise AssertionError(f"rewrite rule {rule.name} is not unitarily sound")
        if len(rule.replacement) >= len(rule.pattern):
            raise AssertionError(f"rewrite rule {rule.name} does not shrink the circuit")
    _rules_verified = True


@dataclass(frozen=True)
class RuleFiring:
    """One applied rewrite: rule name, position in the evolving gate list,
    and the qubits involved."""

    rule: str
    position: int
    qubits: tuple[int, ...]


def _overlaps(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    for q in a:
        if q in b:
            return True
    return False


def simplify_gates(gates: list[Gate], trace: list[RuleFiring] | None = None) -> list[Gate]:
    """Rewrite a raw gate list to its fixpoint. Core of simplify()."""
    verify_rules()
    current = list(gates)
    while True:
        pending: list[Gate] = []
        fired = False
        for gate in current:
            while True:
                i = len(pending) - 1
                while i >= 0 and not _overlaps(pending[i].qubits, gate.qubits):
                    i -= 1
                if i < 0 or pending[i].qubits != gate.qubits:
                    pending.append(gate)
                    break
                rule = _RULE_BY_PAIR.get((pending[i].kind, gate.kind))
                if rule is None:
                    pending.append(gate)
                    break
                fired = True
                if trace is not None:
                    trace.append(RuleFiring(rule.name, i, gate.qubits))
                del pending[i]
                if not rule.replacement:
                    break
                # Merged gate keeps walking: it may combine again.
                gate = Gate(rule.replacement[0], gate.qubits)
        current = pending
        if not fired:
            return current


def simplify(circuit: Circuit) -> Circuit:
    """Apply the rule set until no rule fires; unitary preserved up to
    global phase, gate count never increases."""
    return Circuit(circuit.num_qubits, tuple(simplify_gates(list(circuit.gates))))


def simplify_with_trace(circuit: Circuit) -> tuple[Circuit, list[RuleFiring]]:
    trace: list[RuleFiring] = []
    out = Circuit(circuit.num_qubits, tuple(simplify_gates(list(circuit.gates), trace)))
    return out, trace
