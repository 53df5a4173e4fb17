import pytest

from colorcomplex.chromatic import chromatic_deletion_contraction
from colorcomplex.errors import ParameterError, StructureError
from colorcomplex.hypergraphs import (
    Hypergraph,
    complete_graph,
    complete_uniform,
    contract_core,
    diagonal,
    looped_complete,
    star,
    vertex_star,
)


def test_edges_are_canonicalized():
    h = Hypergraph(3, [(3, 2), (2, 1)])
    assert h.edges == ((1, 2), (2, 3))
    assert h.edge_masks == (0b011, 0b110)


def test_construction_errors():
    with pytest.raises(StructureError):
        Hypergraph(3, [(1, 1, 2)])  # repeated vertex
    with pytest.raises(StructureError):
        Hypergraph(3, [()])  # empty edge
    with pytest.raises(StructureError):
        Hypergraph(3, [(1, 4)])  # out of range
    with pytest.raises(StructureError):
        Hypergraph(3, [(1, 2), (2, 1)])  # duplicate after sorting
    with pytest.raises(ParameterError):
        Hypergraph(0, [])


def test_immutable_and_hashable():
    h = complete_graph(3)
    with pytest.raises(AttributeError):
        h.n = 5
    assert h == complete_uniform(3, 2)
    assert hash(h) == hash(complete_uniform(3, 2))
    assert h != Hypergraph(3, [(1, 2)])


def test_uniformity_and_loops():
    assert complete_uniform(5, 3).uniformity() == 3
    assert Hypergraph(4, [(1, 2), (1, 2, 3)]).uniformity() is None
    assert Hypergraph(3, []).uniformity() is None
    assert looped_complete(3).has_loop()
    assert not complete_graph(3).has_loop()


def test_complete_uniform():
    h = complete_uniform(5, 3)
    assert len(h.edges) == 10
    assert all(len(e) == 3 for e in h.edges)
    with pytest.raises(ParameterError):
        complete_uniform(3, 4)
    with pytest.raises(ParameterError):
        complete_uniform(3, 0)


def test_vertex_star():
    h = vertex_star(5, 3)
    assert len(h.edges) == 6  # C(4, 2)
    assert all(1 in e for e in h.edges)
    h2 = vertex_star(4, 2, center=3)
    assert all(3 in e for e in h2.edges)
    with pytest.raises(ParameterError):
        vertex_star(4, 2, center=5)


def test_star():
    h = star(6, 3)
    assert h.edges == ((1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 2, 6))
    h2 = star(6, 3, covered=4)
    assert h2.edges == ((1, 2, 3), (1, 2, 4))
    assert h2.n == 6  # vertices 5 and 6 stay, isolated
    with pytest.raises(ParameterError):
        star(6, 1)
    with pytest.raises(ParameterError):
        star(6, 3, covered=2)
    with pytest.raises(ParameterError):
        star(6, 3, covered=7)


def test_diagonal():
    h = diagonal(6, 4)
    assert h.edges == ((1, 2, 3, 4), (2, 3, 4, 5), (3, 4, 5, 6))
    assert diagonal(5, 5).edges == ((1, 2, 3, 4, 5),)
    with pytest.raises(ParameterError):
        diagonal(5, 1)


def test_looped_complete():
    h = looped_complete(3)
    assert h.edges == ((1,), (1, 2), (1, 3), (2,), (2, 3), (3,))


def test_json_round_trip():
    h = star(6, 3, covered=4)
    text = h.to_json_text()
    back = Hypergraph.from_json_text(text)
    assert back == h
    assert back.to_json_text() == text  # canonical form is stable
    assert text == '{"edges":[[1,2,3],[1,2,4]],"n":6}'


def test_json_errors():
    with pytest.raises(StructureError):
        Hypergraph.from_json_text("not json")
    with pytest.raises(StructureError):
        Hypergraph.from_json_text('{"n": 3}')
    with pytest.raises(StructureError):
        Hypergraph.from_json_text('{"n": 2, "edges": [[1, 3]]}')


def test_contract_core_star_shape():
    h = star(7, 3, covered=5)  # edges 123, 124, 125 on 7 vertices
    graph, mapping = contract_core(h)
    assert graph.n == 6
    assert graph.edges == ((1, 2), (1, 3), (1, 4))
    assert mapping == {1: 1, 2: 1, 3: 2, 4: 3, 5: 4, 6: 5, 7: 6}
    # chromatic check: a 3-leaf star plus two isolated vertices
    chi = chromatic_deletion_contraction(graph)
    assert chi.coeffs == (0, 0, 0, -1, 3, -3, 1)  # x^3 (x-1)^3


def test_contract_core_errors():
    with pytest.raises(ParameterError):
        contract_core(Hypergraph(3, []))
    with pytest.raises(StructureError):
        contract_core(complete_graph(3))  # no common vertex
    with pytest.raises(StructureError):
        contract_core(Hypergraph(5, [(1, 2, 3), (1, 4, 5)]))  # two extras
