from __future__ import annotations

import pytest

from interchange.bounds import choose_pq, l_c, solve_g1g2
from interchange.embedding import euler_genus, face_count, hamiltonian_faces, trace_faces
from interchange.errors import DomainError, ValidationError
from interchange.transition import (
    TransitionGraph,
    _abcde_ok,
    alternating_cycles,
    construct_1mod4_div3,
    construct_even,
    construct_g1g2,
    construct_odd,
    construct_optimal_symmetric,
    cycle_profile,
    fixture_15,
    fixture_21,
    genus_from_cycles,
    optimal_transition_graph,
    same_transition_graph,
    solve_abcde,
    tg_to_voltage,
    two_cycle_nets,
    voltage_to_tg,
)
from interchange.voltage import derive_embedding, net_voltage, zn_order


def derived(tg: TransitionGraph):
    return derive_embedding(tg_to_voltage(tg))


def test_transition_graph_validation():
    with pytest.raises(ValidationError):
        TransitionGraph(3, (0, 1, 1), (0, 1, 2))
    tg = TransitionGraph(4, (2, 1, 3, 0), (1, 2, 0, 3))
    assert TransitionGraph.from_dict(tg.to_dict()) == tg


def test_alternating_cycles_n3():
    cycles = alternating_cycles(TransitionGraph(3, (0, 1, 2), (0, 2, 1)))
    assert [(c.vertices, c.net) for c in cycles] == [((0, 1), 1), ((1, 2), 1), ((2, 0), 1)]


@pytest.mark.parametrize("n", [7, 11, 19, 23])
def test_alternating_cycles_3mod4(n):
    cycles = alternating_cycles(construct_odd(n))
    two = {c.vertices: c.net for c in cycles if len(c.vertices) == 2}
    assert set(two) == {(0, 1), ((n + 1) // 2, 0), ((n - 1) // 2, n - 1)}
    assert two[(0, 1)] == 1
    assert two[((n - 1) // 2, n - 1)] == (n - 1) // 2
    # nets of all cycles sum to 0 mod n, which forces (n-1)/2 here as well
    assert two[((n + 1) // 2, 0)] == (n - 1) // 2
    assert all(len(c.vertices) == 4 and c.net == 0 for c in cycles if len(c.vertices) != 2)


@pytest.mark.parametrize("n", [5, 9, 13, 17])
def test_alternating_cycles_1mod4(n):
    cycles = alternating_cycles(construct_odd(n))
    two = {c.vertices for c in cycles if len(c.vertices) == 2}
    assert two == {(n - 1, 0), ((n - 1) // 2, (n - 1) // 2 - 1)}
    six = [c for c in cycles if len(c.vertices) == 6]
    assert len(six) == 1 and six[0].net == 0
    assert all(len(c.vertices) == 4 and c.net == 0 for c in cycles if len(c.vertices) not in (2, 6))


def test_tg_to_voltage_examples():
    emb = derived(TransitionGraph(3, (0, 1, 2), (0, 2, 1)))
    assert euler_genus(emb) == 1 and len(hamiltonian_faces(emb)) == 3
    emb = derived(construct_even(6))
    assert euler_genus(emb) == 6 and len(hamiltonian_faces(emb)) == 2
    emb = derived(fixture_15())
    assert euler_genus(emb) == 49 and hamiltonian_faces(emb)


def test_cycles_match_faces():
    for n in range(3, 16):
        tg = optimal_transition_graph(n)
        vg = tg_to_voltage(tg)
        faces = trace_faces(vg.base)
        prof = sorted((f.size, zn_order(net_voltage(f, vg).value, n)) for f in faces)
        assert prof == cycle_profile(tg)
        assert same_transition_graph(voltage_to_tg(vg), tg)


def test_construct_even():
    tg = construct_even(4)
    assert (tg.solid, tg.dotted) == ((2, 1, 3, 0), (1, 2, 0, 3))
    assert euler_genus(derived(tg)) == 2
    emb = derived(construct_even(6))
    sizes = sorted(f.size for f in trace_faces(emb))
    assert sizes == [4] * 12 + [12, 12]
    assert euler_genus(derived(construct_even(10))) == 20
    for n in (4, 6, 8, 10, 12):
        two = {c.vertices for c in alternating_cycles(construct_even(n)) if len(c.vertices) == 2}
        assert {(2, 1), (n - 1, 0)} <= two
    with pytest.raises(DomainError):
        construct_even(5)


def test_construct_odd():
    emb = derived(construct_odd(3))
    assert euler_genus(emb) == 1 and len(hamiltonian_faces(emb)) == 3
    emb = derived(construct_odd(7))
    assert euler_genus(emb) == 10 and len(hamiltonian_faces(emb)) == 3
    assert sorted(f.size for f in trace_faces(emb)) == [4] * 14 + [14] * 3
    emb = derived(construct_odd(9))
    sizes = sorted(f.size for f in trace_faces(emb))
    assert euler_genus(emb) == 18 and len(hamiltonian_faces(emb)) == 2
    assert sizes == [4] * 18 + [6] * 9 + [18, 18]
    with pytest.raises(DomainError):
        construct_odd(8)


def test_solve_abcde():
    assert solve_abcde(15, 5, 9) == (2, 3, 4, 5, 7)
    for n in (27, 35):
        g1, g2 = solve_g1g2(n, *choose_pq(n))
        sol = solve_abcde(n, g1, g2)
        assert _abcde_ok(n, sol)
        a, b, c, d, e = sol
        assert (a + b) % n == g1 % n and (c + d) % n == g2 % n


@pytest.mark.parametrize("n,genus", [(15, 49), (27, 171), (35, 292)])
def test_construct_g1g2(n, genus):
    g1, g2 = solve_g1g2(n, *choose_pq(n))
    tg = construct_g1g2(n, g1, g2)
    assert two_cycle_nets(tg) == sorted([1, g1, g2])
    assert all(len(c.vertices) == 4 and c.net == 0 for c in alternating_cycles(tg) if len(c.vertices) != 2)
    assert genus_from_cycles(tg) == genus == l_c(n)
    assert euler_genus(derived(tg)) == genus


def test_construct_g1g2_reproduces_n15_fixture():
    assert same_transition_graph(construct_g1g2(15, 5, 9), fixture_15())


@pytest.mark.parametrize("n,genus", [(21, 104), (33, 263), (57, 797)])
def test_construct_1mod4_div3(n, genus):
    tg = construct_1mod4_div3(n)
    orders = sorted(zn_order(v, n) for v in two_cycle_nets(tg))
    assert orders == sorted([3, 3, 3, n // 3, n])
    assert genus_from_cycles(tg) == genus
    assert euler_genus(derived(tg)) == genus


def test_fixture_21_matches_generator_profile():
    assert same_transition_graph(construct_1mod4_div3(21), fixture_21())
    assert genus_from_cycles(fixture_21()) == 104


@pytest.mark.parametrize("n,genus", [(6, 6), (15, 49), (13, 39), (3, 1), (4, 2)])
def test_construct_optimal_symmetric(n, genus):
    emb = derive_embedding(construct_optimal_symmetric(n))
    assert euler_genus(emb) == genus


def test_optimal_domain():
    with pytest.raises(DomainError):
        optimal_transition_graph(2)


def test_every_construction_partitions_edges():
    for n in range(3, 60):
        tg = optimal_transition_graph(n)
        cycles = alternating_cycles(tg)
        assert sum(len(c.vertices) for c in cycles) == 2 * n
        assert sum(c.net for c in cycles) % n == 0
        assert face_count(tg_to_voltage(tg).base) == len(cycles)
