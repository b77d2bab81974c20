"""Acceptance criteria; each test prints one PASS/FAIL line.  All tolerances are exact."""

from __future__ import annotations

import json
import random
import time

from interchange.bounds import (
    bounds_report,
    choose_pq,
    face_excess,
    l_c,
    l_c_star,
    l_c_star_attainable,
    l_c_star_tilde,
    smallest_prime_divisor,
    solve_g1g2,
)
from interchange.cuts import (
    construct_3d,
    cut_voltage,
    ring_block,
    symmetric_genus,
    validate_cut_system,
    verify_n4_exception,
)
from interchange.embedding import (
    euler_characteristic,
    euler_genus,
    hamiltonian_faces,
    is_simple_complete_bipartite,
    trace_faces,
)
from interchange.search import enumerate_min_genus
from interchange.transition import (
    TransitionGraph,
    construct_1mod4_div3,
    construct_g1g2,
    construct_optimal_symmetric,
    cycle_profile,
    fixture_15,
    fixture_21,
    genus_from_cycles,
    tg_to_voltage,
)
from interchange.voltage import derive_embedding, net_voltage, two_face_hamiltonian_lifts

from .conftest import ACCEPTANCE_LINES

SEARCH_TABLE = {3: 1, 4: 2, 5: 5, 6: 6, 7: 10, 8: 12}
SEARCH_LIMIT_S = 30 * 60
CONSTRUCTION_LIMIT_S = 10.0
CUT_LIMIT_S = 60.0
BOUNDS_LIMIT_S = 1.0
RANDOM_SYSTEMS = 1000


def record(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def test_criterion_1_search_concordance():
    t0 = time.perf_counter()
    found = {n: enumerate_min_genus(n, require_ham=True).min_genus for n in SEARCH_TABLE}
    elapsed = time.perf_counter() - t0
    ok = found == SEARCH_TABLE and all(found[n] == l_c(n) for n in found) and elapsed < SEARCH_LIMIT_S
    record(1, ok, f"search min genus {found} in {elapsed:.1f}s (limit {SEARCH_LIMIT_S}s)")
    assert ok


def test_criterion_2_combinatorial_constructions():
    t0 = time.perf_counter()
    bad = []
    for n in range(3, 201):
        vg = construct_optimal_symmetric(n)
        emb = derive_embedding(vg)
        lifts = two_face_hamiltonian_lifts(vg)
        if not (
            is_simple_complete_bipartite(emb.graph, n)
            and lifts
            and hamiltonian_faces(emb)
            and euler_genus(emb) == l_c(n)
        ):
            bad.append(n)
    elapsed = time.perf_counter() - t0
    anchors = {15: euler_genus(derive_embedding(construct_optimal_symmetric(15))), 21: euler_genus(derive_embedding(construct_optimal_symmetric(21)))}
    ok = not bad and anchors == {15: 49, 21: 104} and elapsed < CONSTRUCTION_LIMIT_S
    record(2, ok, f"3<=n<=200 failures={bad} anchors={anchors} in {elapsed:.2f}s (limit {CONSTRUCTION_LIMIT_S}s)")
    assert ok


def test_criterion_3_three_dimensional_constructions():
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 101):
        if n == 4:
            continue
        cs = construct_3d(n)
        if not (validate_cut_system(cs).ok and cut_voltage(cs).is_bijective() and symmetric_genus(cs) == l_c_star(n)):
            bad.append(n)
    cert = verify_n4_exception()
    elapsed = time.perf_counter() - t0
    ok = not bad and cert.certified and cert.witness_genus == 4 == l_c_star_attainable(4) and elapsed < CUT_LIMIT_S
    record(
        3,
        ok,
        f"2<=n<=100 (n!=4) failures={bad}; n=4: {cert.assignments_checked} assignments on "
        f"{cert.planar_pairs} planar pairs, {cert.bijective_found} bijective, witness genus {cert.witness_genus}; "
        f"{elapsed:.2f}s (limit {CUT_LIMIT_S}s)",
    )
    assert ok


def test_criterion_4_literal_fixtures():
    lit15 = TransitionGraph.from_dict(json.loads(json.dumps(fixture_15().to_dict())))
    lit21 = TransitionGraph.from_dict(json.loads(json.dumps(fixture_21().to_dict())))
    gen15 = construct_g1g2(15, *solve_g1g2(15, *choose_pq(15)))
    gen21 = construct_1mod4_div3(21)
    block = ring_block(6)
    checks = {
        "n15 profile": cycle_profile(lit15) == cycle_profile(gen15),
        "n15 genus": genus_from_cycles(lit15) == euler_genus(derive_embedding(tg_to_voltage(lit15))) == 49,
        "n21 profile": cycle_profile(lit21) == cycle_profile(gen21),
        "n21 genus": genus_from_cycles(lit21) == euler_genus(derive_embedding(tg_to_voltage(lit21))) == 104,
        "n6 block": block.pi == (1, 4, 3, 2, 5) and block.pi_prime == (0, 3, 2, 1, 4) and block.genus == 1,
    }
    ok = all(checks.values())
    record(4, ok, " ".join(f"{k}={'ok' if v else 'MISMATCH'}" for k, v in checks.items()))
    assert ok


def _random_order(rng: random.Random, n: int) -> list[int]:
    rest = list(range(1, n))
    rng.shuffle(rest)
    return [0, *rest]


def test_criterion_5_property_suites():
    rng = random.Random(5)
    violations: dict[str, int] = {}

    def check(name: str, cond: bool) -> None:
        if not cond:
            violations[name] = violations.get(name, 0) + 1

    total = 0
    for n in range(2, 10):
        for _ in range(RANDOM_SYSTEMS):
            total += 1
            tg = TransitionGraph(n, _random_order(rng, n), _random_order(rng, n))
            vg = tg_to_voltage(tg)
            base_faces = trace_faces(vg.base)
            check("closure", sum(f.size for f in base_faces) == 2 * n)
            check("parity", all(f.size % 2 == 0 for f in base_faces))
            check("kirchhoff sizes", sum(f.size for f in base_faces) == 2 * n)
            check("kirchhoff nets", sum(net_voltage(f, vg).value for f in base_faces) % n == 0)
            emb = derive_embedding(vg)
            faces = trace_faces(emb)
            check("closure", sum(f.size for f in faces) == 2 * emb.graph.edge_count)
            check("parity", all(f.size % 2 == 0 for f in faces))
            check("euler integrality", euler_characteristic(emb, len(faces)) % 2 == 0)
            g = euler_genus(emb)
            check("cycle genus", genus_from_cycles(tg) == g)
            ex = sum(face_excess(f.size, net_voltage(f, vg).value, n) for f in base_faces)
            check("excess", ex == 8 * g - 2 * n * n + 8 * n - 8)
    ok = not violations
    record(5, ok, f"{total} random rotation systems (n=2..9, {RANDOM_SYSTEMS} each), violations={violations}")
    assert ok


def _spec_examples() -> dict[str, bool]:
    r15 = bounds_report(15)
    return {
        "l_c": [l_c(n) for n in (6, 15, 27, 21, 7)] == [6, 49, 171, 104, 10],
        "l_c_star": [l_c_star(n) for n in (6, 7, 8, 3, 4)] == [6, 13, 15, 2, 3],
        "attainable": l_c_star_attainable(4) == 4,
        "tilde": [l_c_star_tilde(n) for n in (4, 5, 8)] == [1, 5, 9],
        "excess": (face_excess(4, 0, 9), face_excess(2, 1, 9), face_excess(6, 0, 9)) == (0, 14, 18),
        "pq": (choose_pq(15), choose_pq(27), choose_pq(35)) == ((3, 5), (3, 27), (5, 7)),
        "g1g2": solve_g1g2(15, 3, 5) == (5, 9) and r15.g1g2 == (5, 9),
        "p1": [smallest_prime_divisor(x) for x in (15, 49, 97)] == [3, 7, 97],
    }


def test_criterion_6_bounds_table():
    t0 = time.perf_counter()
    reports = [bounds_report(n) for n in range(2, 1001)]
    order_ok = all(r.l_c is None or r.l_c <= r.l_c_star for r in reports)
    nonneg = all(v >= 0 for r in reports for v in (r.l_c_star, r.l_c_star_tilde, r.l_c if r.l_c is not None else 0))
    elapsed = time.perf_counter() - t0
    examples = _spec_examples()
    ok = order_ok and nonneg and all(examples.values()) and elapsed < BOUNDS_LIMIT_S
    failed = [k for k, v in examples.items() if not v]
    record(6, ok, f"2<=n<=1000 l_c<=l_c_star={order_ok} examples failed={failed} in {elapsed:.3f}s (limit {BOUNDS_LIMIT_S}s)")
    assert ok
