from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from interchange.bounds import face_excess
from interchange.embedding import EmbeddedGraph, Face, euler_genus, face_count, hamiltonian_faces, is_simple_complete_bipartite
from interchange.errors import DomainError, ValidationError
from interchange.transition import construct_even, construct_odd, fixture_15, tg_to_voltage
from interchange.voltage import (
    CyclicElement,
    VoltageGraph,
    derive_embedding,
    derive_graph,
    derived_face_profile,
    derived_genus,
    dipole_voltage_graph,
    lifts_of_face,
    net_voltage,
    total_derived_faces,
    two_face_hamiltonian_lifts,
    voltage_faces_consistent,
    zn_order,
)
from interchange.embedding import trace_faces


@pytest.mark.parametrize("x,n,order", [(0, 6, 1), (5, 15, 3), (9, 15, 5), (1, 1, 1), (4, 6, 3)])
def test_zn_order(x, n, order):
    assert zn_order(x, n) == order
    assert CyclicElement(x, n).order == order


def test_cyclic_element_arithmetic():
    a = CyclicElement(4, 6)
    assert a + 3 == CyclicElement(1, 6)
    assert -a == CyclicElement(2, 6)
    assert 5 * a == CyclicElement(2, 6)
    with pytest.raises(DomainError):
        a + CyclicElement(1, 5)
    with pytest.raises(DomainError):
        CyclicElement(1, 0)


def test_derive_graph_k33_and_doubled():
    g = derive_graph(dipole_voltage_graph([0, 1, 2], [0, 1, 2], (0, 1, 2), 3))
    assert is_simple_complete_bipartite(g, 3)
    pairs = sorted((t, h) for _, t, h in g.edges)
    assert pairs == sorted((a, 3 + (a + k) % 3) for a in range(3) for k in range(3))
    g2 = derive_graph(dipole_voltage_graph([0, 1, 2], [0, 1, 2], (0, 0, 1), 3))
    assert sorted((t, h) for _, t, h in g2.edges).count((0, 3)) == 2


def test_d6_bijective_is_k66():
    vg = dipole_voltage_graph([0, 3, 1, 5, 2, 4], [0, 1, 2, 3, 4, 5], (3, 1, 4, 0, 5, 2), 6)
    assert is_simple_complete_bipartite(derive_graph(vg), 6)


def test_derive_embedding_examples():
    n3 = tg_to_voltage(construct_odd(3))
    emb = derive_embedding(n3)
    assert euler_genus(emb) == 1 and len(hamiltonian_faces(emb)) == 3
    d2 = dipole_voltage_graph([0, 1], [1, 0], (0, 1), 2)
    assert euler_genus(derive_embedding(d2)) == 0
    assert derive_embedding(d2).graph.edge_count == 4
    assert euler_genus(derive_embedding(tg_to_voltage(construct_even(4)))) == 2


def test_net_voltage_examples():
    base = EmbeddedGraph.dipole([0, 1], [1, 0])
    vg = VoltageGraph(base, 6, (0, 1))
    assert net_voltage(Face(((1, 1), (0, -1))), vg).value == 1
    four = VoltageGraph(EmbeddedGraph.dipole([0, 1, 2, 3], [0, 1, 2, 3]), 9, (2, 3, 6, 5))
    f = Face(((0, 1), (1, -1), (2, 1), (3, -1)))
    assert net_voltage(f, four).value == 0


def test_fixture_15_has_two_face_of_voltage_5():
    vg = tg_to_voltage(fixture_15())
    nets = {net_voltage(f, vg).value for f in trace_faces(vg.base) if f.size == 2}
    nets |= {(-v) % 15 for v in nets}
    assert 5 in nets and 9 in nets


@pytest.mark.parametrize("size,g,n,profile", [(2, 1, 7, (1, 14)), (4, 0, 9, (9, 4)), (2, 5, 15, (5, 6))])
def test_derived_face_profile(size, g, n, profile):
    edges = list(range(size))
    vg = VoltageGraph(EmbeddedGraph.dipole(edges, edges), n, (g,) + (0,) * (size - 1))
    face = Face(tuple((e, 1 if i % 2 == 0 else -1) for i, e in enumerate(edges)))
    assert derived_face_profile(face, vg) == profile


@pytest.mark.parametrize("tg,faces", [(construct_odd(3), 3), (construct_odd(5), 7), (construct_even(6), 14)])
def test_total_derived_faces(tg, faces):
    vg = tg_to_voltage(tg)
    assert total_derived_faces(vg) == faces == face_count(derive_embedding(vg))


def test_lifts_of_face_cover_lifted_half_edges():
    vg = tg_to_voltage(construct_odd(7))
    seen = []
    for f in trace_faces(vg.base):
        for walk in lifts_of_face(f, vg):
            seen += walk
    assert sorted(seen) == list(range(2 * 49))


def test_two_face_hamiltonian_lifts_agree_with_trace():
    for n in range(3, 12):
        vg = tg_to_voltage(construct_odd(n) if n % 2 else construct_even(n))
        assert two_face_hamiltonian_lifts(vg)
        assert len(hamiltonian_faces(derive_embedding(vg))) >= len(two_face_hamiltonian_lifts(vg))


def test_voltage_json_round_trip_and_errors():
    vg = tg_to_voltage(construct_odd(5))
    assert VoltageGraph.from_dict(vg.to_dict()) == vg
    bad = vg.to_dict()
    del bad["alpha"]["0"]
    with pytest.raises(ValidationError):
        VoltageGraph.from_dict(bad)
    with pytest.raises(ValidationError):
        VoltageGraph(vg.base, 5, (0, 1))


@settings(max_examples=150, deadline=None)
@given(
    st.integers(2, 8).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.permutations(range(1, n)),
            st.permutations(range(1, n)),
            st.lists(st.integers(0, n - 1), min_size=n, max_size=n),
        )
    )
)
def test_face_count_oracle_and_excess(data):
    n, pw, pb, alpha = data
    vg = dipole_voltage_graph([0, *pw], [0, *pb], alpha, n)
    assert voltage_faces_consistent(vg)
    faces = trace_faces(vg.base)
    assert sum(f.size for f in faces) == 2 * n
    assert sum(net_voltage(f, vg).value for f in faces) % n == 0
    emb = derive_embedding(vg)
    if emb.graph.is_connected():
        g = euler_genus(emb)
        assert g == derived_genus(vg)
        ex = sum(face_excess(f.size, net_voltage(f, vg).value, n) for f in faces)
        assert ex == 8 * g - 2 * n * n + 8 * n - 8
