import pytest

from conftest import DBASIS_F, GRAPH_EDGES, GRAPH_F
from straight.enumeration import enumerate_ssyt
from straight.errors import ResourceCapError, ValidationError
from straight.graph import (
    active_vertices,
    build_graph,
    coefficient_paths,
    export_dot,
    paths,
    straighten_paths,
)
from straight.rearrangement import rcoeff_matrix
from straight.tableau import Content, Partition


@pytest.fixture(scope="module")
def graph(graph_basis, graph_matrix):
    return build_graph(graph_basis, graph_matrix)


def test_edges(graph):
    assert graph.edges == sorted(GRAPH_EDGES, reverse=True)
    assert graph.is_acyclic()
    assert graph.successors(6) == [1, 2, 5]


def test_weights_match_matrix(graph, graph_matrix):
    for i, j in graph.edges:
        assert graph.weight(i, j) == graph_matrix.coeff(i, j)


def test_single_vertex():
    basis = enumerate_ssyt(Partition((3,)), Content((1, 1, 1)))
    graph = build_graph(basis, rcoeff_matrix(basis))
    assert graph.edges == []
    assert list(paths(graph, 1, 1)) == [(1,)]


def test_active_vertices(graph_basis):
    assert active_vertices(GRAPH_F, graph_basis) == {1, 2, 3, 5}


def test_paths_lexicographic(graph):
    assert list(paths(graph, 6, 2)) == [(6, 2), (6, 5, 2)]
    assert list(paths(graph, 6, 1)) == [(6, 1), (6, 5, 1)]
    assert list(paths(graph, 3, 3)) == [(3,)]
    assert list(paths(graph, 2, 6)) == []
    assert list(paths(graph, 4, 1)) == []


def test_paths_rejects_unknown_vertex(graph):
    with pytest.raises(ValidationError):
        list(paths(graph, 7, 1))


def test_path_cap(graph):
    with pytest.raises(ResourceCapError):
        list(paths(graph, 6, 2, cap=1))


def test_coefficient_paths(graph):
    assert coefficient_paths(GRAPH_F, 1, graph) == 1
    assert coefficient_paths(GRAPH_F, 6, graph) == 0


def test_straighten_paths_worked(dbasis_basis, dbasis_matrix):
    graph = build_graph(dbasis_basis, dbasis_matrix)
    assert straighten_paths(DBASIS_F, graph).text() == "+1·S5 −1·S4"


def test_dot(graph):
    source = export_dot(graph, GRAPH_F)
    assert source.startswith("// shape 3,3,2 content")
    assert "digraph coefficients" in source
    assert "S6 -> S5" in source
    node_lines = {
        line.split()[0]: line for line in source.splitlines()
        if line.strip().startswith("S") and "->" not in line
    }
    assert set(node_lines) == {f"S{i}" for i in range(1, 7)}
    for i in (1, 2, 3, 5):
        assert "lightblue" in node_lines[f"S{i}"]
    for i in (4, 6):
        assert "lightblue" not in node_lines[f"S{i}"]


def test_dot_without_filling(graph):
    assert "lightblue" not in export_dot(graph)


def test_json(graph):
    doc = graph.to_dict()
    assert doc["format"] == 1
    assert doc["kostka"] == 6
    assert len(doc["edges"]) == 7
    assert doc["edges"][0]["from"] == 6
    assert {(e["from"], e["to"]) for e in doc["edges"]} == GRAPH_EDGES
