"""
Coefficient graph.

Vertices are the basis indices 1..K; there is an edge i -> j whenever i != j
and R[S_i, S_j] != 0. Edges always point to a smaller index, so the graph is
a DAG and paths can be walked without a visited set.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Tuple

import graphviz
import networkx as nx

from .config import DEFAULT_PATH_CAP, JSON_FORMAT_VERSION
from .enumeration import SSYTBasis
from .errors import ResourceCapError, ValidationError
from .rearrangement import RearrangementMatrix, rcoeff_row
from .straightening import PATHS, Straightening, check_member, standard_index
from .tableau import Filling

Path = Tuple[int, ...]

HIGHLIGHT = {"style": "filled", "fillcolor": "lightblue"}


@dataclass(frozen=True)
class CoeffGraph:
    basis: SSYTBasis
    matrix: RearrangementMatrix
    digraph: nx.DiGraph = field(compare=False, hash=False, repr=False)

    @property
    def edges(self) -> List[Tuple[int, int]]:
        """Edges sorted by source, then target, both descending."""
        return sorted(self.digraph.edges, reverse=True)

    def weight(self, i: int, j: int) -> int:
        return self.digraph.edges[i, j]["weight"]

    def successors(self, i: int) -> List[int]:
        return sorted(self.digraph.successors(i))

    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.digraph) and all(j < i for i, j in self.digraph.edges)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "format": JSON_FORMAT_VERSION,
            "kostka": len(self.basis),
            "edges": [
                {"from": i, "to": j, "weight": self.weight(i, j)} for i, j in self.edges
            ],
        }


def build_graph(basis: SSYTBasis, matrix: RearrangementMatrix) -> CoeffGraph:
    """Edge i -> j weighted R[S_i, S_j] for every nonzero entry below the diagonal."""
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(1, len(basis) + 1))
    for i in range(1, len(basis) + 1):
        for j, r in matrix.nonzero_below(i):
            digraph.add_edge(i, j, weight=r)
    return CoeffGraph(basis, matrix, digraph)


def _active_weights(filling: Filling, basis: SSYTBasis) -> Dict[int, int]:
    """k -> R[F, S_k] for every nonzero coefficient."""
    filling = check_member(filling, basis)
    if not filling.is_cardinal:
        return {}
    weights = rcoeff_row(filling, basis, standard_index(filling, basis))
    return {j: w for j, w in enumerate(weights, 1) if w}


def active_vertices(filling: Filling, basis: SSYTBasis) -> FrozenSet[int]:
    """V_F: indices k with R[F, S_k] != 0."""
    return frozenset(_active_weights(filling, basis))


def paths(graph: CoeffGraph, source: int, target: int,
          cap: int = DEFAULT_PATH_CAP) -> Iterator[Path]:
    """
    Every directed path from source to target, lexicographic on index sequences.

    The zero-length path (source,) is included when source == target. More
    than ``cap`` paths raises ResourceCapError.
    """
    size = len(graph.basis)
    for v in (source, target):
        if not 1 <= v <= size:
            raise ValidationError(f"Vertex {v} outside 1..{size}")
    found = 0
    stack: List[int] = [source]

    def walk(node: int) -> Iterator[Path]:
        nonlocal found
        if node == target:
            found += 1
            if found > cap:
                raise ResourceCapError(f"More than {cap} paths from S{source} to S{target}")
            yield tuple(stack)
            return
        for nxt in graph.successors(node):
            if nxt < target:
                continue
            stack.append(nxt)
            yield from walk(nxt)
            stack.pop()

    yield from walk(source)


def coefficient_paths(filling: Filling, i: int, graph: CoeffGraph,
                      cap: int = DEFAULT_PATH_CAP) -> int:
    """a_i as a signed sum over paths from V_F to S_i."""
    if not filling.is_cardinal:
        raise ValidationError("coefficient_paths needs a cardinal filling")
    total = 0
    for j, w in sorted(_active_weights(filling, graph.basis).items()):
        if j < i:
            continue
        for path in paths(graph, j, i, cap):
            term = w
            for a, b in zip(path, path[1:]):
                term *= -graph.weight(a, b)
            total += term
    return total


def straighten_paths(filling: Filling, graph: CoeffGraph,
                     cap: int = DEFAULT_PATH_CAP) -> Straightening:
    """Every a_i from paths out of V_F."""
    basis = graph.basis
    filling = check_member(filling, basis)
    if not filling.is_cardinal:
        return Straightening(filling, basis, (0,) * len(basis), PATHS)
    coefficients = tuple(
        coefficient_paths(filling, i, graph, cap) for i in range(1, len(basis) + 1)
    )
    return Straightening(filling, basis, coefficients, PATHS)


def export_dot(graph: CoeffGraph, filling: Optional[Filling] = None) -> str:
    """DOT digraph with nodes S1..SK, R weights on edges and V_F filled."""
    active = active_vertices(filling, graph.basis) if filling is not None else frozenset()
    dot = graphviz.Digraph(
        "coefficients",
        comment=f"shape {graph.basis.shape} content {graph.basis.content}",
    )
    for i in range(1, len(graph.basis) + 1):
        attrs = HIGHLIGHT if i in active else {}
        dot.node(f"S{i}", f"S{i}", **attrs)
    for i, j in graph.edges:
        dot.edge(f"S{i}", f"S{j}", label=str(graph.weight(i, j)))
    return dot.source
