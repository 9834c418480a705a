"""Coupling graphs: which directed CNOTs a processor executes natively.

Built-ins cover the two 5-qubit cloud processors this project targets; any
other device is described by a small text format ("qubits N" then one
"control target" pair per line).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache


@dataclass(frozen=True)
class CouplingGraph:
    num_physical: int
    edges: frozenset[tuple[int, int]]
    name: str = field(default="custom", compare=False)

    def __post_init__(self) -> None:
        if self.num_physical < 1:
            raise ValueError("num_physical must be positive")
        object.__setattr__(self, "edges", frozenset(self.edges))
        for c, t in self.edges:
            if c == t:
                raise ValueError(f"self-loop edge ({c}, {t})")
            if not (0 <= c < self.num_physical and 0 <= t < self.num_physical):
                raise ValueError(f"edge ({c}, {t}) outside 0..{self.num_physical - 1}")
        if not _connected(self.num_physical, self.edges):
            raise ValueError("coupling graph is not connected")

    def neighbors(self, q: int) -> list[int]:
        """Undirected adjacency; a reversed edge is still routable locally."""
        out = {t for c, t in self.edges if c == q} | {c for c, t in self.edges if t == q}
        return sorted(out)


def _connected(n: int, edges: frozenset[tuple[int, int]]) -> bool:
    if n == 1:
        return True
    adj: dict[int, set[int]] = {q: set() for q in range(n)}
    for c, t in edges:
        adj[c].add(t)
        adj[t].add(c)
    seen = {0}
    frontier = [0]
    while frontier:
        q = frontier.pop()
        for nb in adj[q]:
            if nb not in seen:
                seen.add(nb)
                frontier.append(nb)
    return len(seen) == n


_BUILTINS = {
    "qx2": (5, {(0, 1), (0, 2), (1, 2), (4, 2), (4, 3), (3, 2)}),
    "qx4": (5, {(3, 4), (3, 2), (2, 4), (2, 0), (2, 1), (1, 0)}),
}


def builtin(name: str) -> CouplingGraph:
    key = name.lower()
    if key not in _BUILTINS:
        known = ", ".join(sorted(_BUILTINS))
        raise ValueError(f"unknown architecture {name!r} (built-ins: {known})")
    n, edges = _BUILTINS[key]
    return CouplingGraph(n, frozenset(edges), name=key)


def allows(graph: CouplingGraph, control: int, target: int) -> bool:
    """Whether CNOT(control, target) runs natively on this device."""
    for q in (control, target):
        if not 0 <= q < graph.num_physical:
            raise ValueError(f"qubit {q} outside 0..{graph.num_physical - 1}")
    return (control, target) in graph.edges


def load(text: str, name: str = "custom") -> CouplingGraph:
    """Parse the coupling-graph text format and validate it."""
    num = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if num is None:
            if len(parts) != 2 or parts[0] != "qubits":
                raise ValueError(f"line {lineno}: expected 'qubits N' header")
            num = int(parts[1])
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'control target', got {raw!r}")
        c, t = int(parts[0]), int(parts[1])
        if (c, t) in edges:
            raise ValueError(f"line {lineno}: duplicate edge ({c}, {t})")
        edges.add((c, t))
    if num is None:
        raise ValueError("missing 'qubits N' header")
    return CouplingGraph(num, frozenset(edges), name=name)


@lru_cache(maxsize=None)
def _distances(graph: CouplingGraph) -> dict[tuple[int, int], int]:
    dist: dict[tuple[int, int], int] = {}
    for start in range(graph.num_physical):
        dist[(start, start)] = 0
        frontier = [start]
        d = 0
        seen = {start}
        while frontier:
            d += 1
            nxt = []
            for q in frontier:
                for nb in graph.neighbors(q):
                    if nb not in seen:
                        seen.add(nb)
                        dist[(start, nb)] = d
                        nxt.append(nb)
            frontier = nxt
    return dist


def distance(graph: CouplingGraph, a: int, b: int) -> int:
    """Undirected shortest-path distance between two physical qubits."""
    return _distances(graph)[(a, b)]


def shortest_paths(graph: CouplingGraph, a: int, b: int) -> list[list[int]]:
    """All undirected shortest paths from a to b, deterministically ordered."""
    dist = _distances(graph)
    target_len = dist[(a, b)]

    def extend(path: list[int]) -> list[list[int]]:
        last = path[-1]
        if last == b:
            return [path]
        out: list[list[int]] = []
        for nb in graph.neighbors(last):
            if dist[(nb, b)] == dist[(last, b)] - 1:
                out.extend(extend(path + [nb]))
        return out

    paths = extend([a])
    assert all(len(p) == target_len + 1 for p in paths)
    return sorted(paths)
