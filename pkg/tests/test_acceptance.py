"""Acceptance harness.

Each test runs one end-to-end guarantee of the package at full scale and
prints a single PASS line (pytest itself reports the FAIL line when an
assertion trips).  Everything here is exact arithmetic: zero tolerance,
zero allowed failures.
"""

import hashlib
import time

from intrinsiclinks.cli import link_report_doc
from intrinsiclinks.errors import InternalParityFailure
from intrinsiclinks.geometry import Point3, Triangle3, gp_points3
from intrinsiclinks.graphs import (
    complete_graph,
    crossings_between_polylines,
    make_cycle,
    make_embedding,
    make_graph,
)
from intrinsiclinks.instances import (
    bend_drawing,
    gen_k5_drawing,
    gen_k6_pl_subdivided,
    gen_k6_points,
    gen_k33_drawing,
    gen_k44_linear,
    gen_planar_polygon_pair,
    gen_points3_general,
    move_vertex_star,
)
from intrinsiclinks.invariants import (
    find_linked_cycles_k6,
    find_linked_cycles_k44,
    find_linked_triangles_linear,
    k44_parity_ledgers,
    linear_parity_ledger,
    oracle_confirm,
    oracle_count_linked_pairs,
    van_kampen_drawing,
    vk_invariance_probe,
)
from intrinsiclinks.linking import (
    closed_polygon,
    linking_mod2_cone,
    sample_general_apex,
    triangles_linked,
)
from intrinsiclinks.projection import find_general_projection, front_parity, lk_from_diagram
from intrinsiclinks.rng import SplitMix64
from intrinsiclinks.serialization import to_json_bytes

K6 = complete_graph(6)

TWO_TRIANGLES = make_graph(
    ("t1", "t2", "t3", "u1", "u2", "u3"),
    (("t1", "t2"), ("t2", "t3"), ("t1", "t3"),
     ("u1", "u2"), ("u2", "u3"), ("u1", "u3")),
)


def _announce(capsys, text):
    with capsys.disabled():
        print(text, flush=True)


def _k6_embedding(points):
    return make_embedding(K6, {f"v{i}": p for i, p in enumerate(points, start=1)})


def _ac1_report_bytes(seed: int) -> bytes:
    points = gen_k6_points(seed)
    report = find_linked_triangles_linear(points, seed=seed)
    return to_json_bytes(link_report_doc(report, seed))


def test_ac01_linear_linked_pair_thousand_seeds(capsys):
    started = time.time()
    for seed in range(1000):
        points = gen_k6_points(seed)
        report = find_linked_triangles_linear(points, seed=seed)
        named = {f"v{i}": p for i, p in enumerate(points, start=1)}
        t1 = Triangle3(*(named[v] for v in report.cycle1.vertices))
        t2 = Triangle3(*(named[v] for v in report.cycle2.vertices))
        assert triangles_linked(t1, t2), f"seed {seed}: reported pair not linked"
        assert report.lk_value == 1
        ledger = linear_parity_ledger(points, seed=seed)
        assert ledger.total == 1, f"seed {seed}: parity sum over the 10 edges is even"
        oracle = oracle_count_linked_pairs(_k6_embedding(points), 3, 3, seed=seed)
        assert oracle.count % 2 == 1, f"seed {seed}: oracle count {oracle.count} is even"
    elapsed = time.time() - started
    _announce(
        capsys,
        f"AC1 PASS: 1000/1000 random 6-point sets -> linked pair found and "
        f"confirmed, parity sum odd, oracle count odd ({elapsed:.1f}s)",
    )


def test_ac02_crossing_parity_of_drawings(capsys):
    for seed in range(1000):
        assert van_kampen_drawing(gen_k5_drawing(seed)) == 1, f"straight K5 seed {seed}"
    for seed in range(100):
        bent = bend_drawing(gen_k5_drawing(seed), seed)
        assert van_kampen_drawing(bent) == 1, f"polyline K5 seed {seed}"
    for seed in range(500):
        assert van_kampen_drawing(gen_k33_drawing(seed)) == 1, f"K3,3 seed {seed}"
    _announce(
        capsys,
        "AC2 PASS: invariant = 1 on 1000 straight K5, 100 polyline K5 "
        "and 500 K3,3 drawings",
    )


def _disjoint_edge_pairs(graph):
    edges = graph.edges
    for i, e1 in enumerate(edges):
        for e2 in edges[i + 1:]:
            if not set(e1) & set(e2):
                yield e1, e2


def test_ac03_per_pair_crossing_parity_identity(capsys):
    pairs_checked = 0
    for seed in range(500):
        if seed % 5 == 4:
            emb = gen_k44_linear(seed)
        elif seed % 25 == 0:
            emb = gen_k6_pl_subdivided(seed)
        else:
            emb = _k6_embedding(gen_k6_points(seed))
        diag = find_general_projection(emb, seed=seed)
        core = diag.embedding.graph
        for e1, e2 in _disjoint_edge_pairs(core):
            over1 = front_parity(diag, {e1}, {e2})
            over2 = front_parity(diag, {e2}, {e1})
            total = sum(
                1 for c in diag.crossings if {c.edge1, c.edge2} == {e1, e2}
            )
            assert (over1 + over2) % 2 == total % 2, (
                f"seed {seed}: identity fails for {e1} vs {e2}"
            )
            pairs_checked += 1
    _announce(
        capsys,
        f"AC3 PASS: over-strand parities sum to the crossing count mod 2 for "
        f"{pairs_checked} disjoint edge pairs across 500 projected diagrams",
    )


def test_ac04_even_crossings_for_closed_pairs(capsys):
    for seed in range(500):
        first, second = gen_planar_polygon_pair(seed)
        count = crossings_between_polylines(first, second)
        assert count % 2 == 0, f"seed {seed}: odd crossing count {count}"
    _announce(
        capsys,
        "AC4 PASS: 500 random closed polygon pairs all cross an even "
        "number of times",
    )


def test_ac05_five_way_linking_agreement(capsys):
    for seed in range(200):
        points = gen_points3_general(seed, 6)
        t1 = Triangle3(*points[:3])
        t2 = Triangle3(*points[3:])
        reference = 1 if triangles_linked(t1, t2) else 0

        poly1 = closed_polygon(points[:3])
        poly2 = closed_polygon(points[3:])
        rng = SplitMix64(seed)
        cone_values = [
            linking_mod2_cone(poly1, poly2, sample_general_apex(poly1, poly2, rng))
            for _ in range(3)
        ]

        emb = make_embedding(TWO_TRIANGLES, dict(zip(TWO_TRIANGLES.vertices, points)))
        c1 = make_cycle(TWO_TRIANGLES, ("t1", "t2", "t3"))
        c2 = make_cycle(TWO_TRIANGLES, ("u1", "u2", "u3"))
        diag1 = find_general_projection(emb, seed=seed)
        bump = seed + 100001
        diag2 = find_general_projection(emb, seed=bump)
        while diag2.direction == diag1.direction:
            bump += 1
            diag2 = find_general_projection(emb, seed=bump)
        diagram_values = [lk_from_diagram(d, c1, c2) for d in (diag1, diag2)]

        values = cone_values + diagram_values
        assert values == [reference] * 5, f"seed {seed}: {values} vs {reference}"
    _announce(
        capsys,
        "AC5 PASS: 200 triangle pairs -> three cone counts and two diagram "
        "counts all match the direct linkedness test",
    )


def test_ac06_bipartite_finder_and_cancellations(capsys):
    for seed in range(200):
        emb = gen_k44_linear(seed)
        report = oracle_confirm(
            emb, find_linked_cycles_k44(emb, seed=seed), seed=seed
        )
        assert report.lk_value == 1
        assert report.oracle_confirmed is True, f"seed {seed}: oracle disagrees"
        main, bridge, spoke_a, spoke_b, _flat = k44_parity_ledgers(emb, seed=seed)
        assert main.total == 1, f"seed {seed}: hub-pair sum even"
        assert bridge.total == 0, f"seed {seed}: hub-hub edge sum odd"
        assert spoke_a.total == 0, f"seed {seed}: first-hub spoke sum odd"
        assert spoke_b.total == 0, f"seed {seed}: second-hub spoke sum odd"
    _announce(
        capsys,
        "AC6 PASS: 200 random K4,4 embeddings -> confirmed linked pair, "
        "main sum odd, all three cancellation sums even",
    )


def test_ac07_subdivided_robustness(capsys):
    for seed in range(100):
        emb = gen_k6_pl_subdivided(seed)
        report = oracle_confirm(
            emb, find_linked_cycles_k6(emb, seed=seed), seed=seed
        )
        assert report.lk_value == 1
        assert report.oracle_confirmed is True, f"seed {seed}: oracle disagrees"
    _announce(
        capsys,
        "AC7 PASS: 100 subdivided-and-perturbed K6 embeddings -> finder "
        "succeeds, every reported pair oracle-confirmed",
    )


def test_ac08_invariance_probe(capsys):
    for seed in range(100):
        base = gen_k5_drawing(seed)
        if seed % 3 == 0:
            base = bend_drawing(base, seed)
        moved = move_vertex_star(base, seed)
        assert vk_invariance_probe(base, moved), f"K5 seed {seed}"
    for seed in range(100):
        base = gen_k33_drawing(seed)
        if seed % 3 == 0:
            base = bend_drawing(base, seed)
        moved = move_vertex_star(base, seed)
        assert vk_invariance_probe(base, moved), f"K3,3 seed {seed}"
    _announce(
        capsys,
        "AC8 PASS: 200 one-vertex-star moves (K5 and K3,3) leave the "
        "crossing parity invariant unchanged",
    )


def test_ac09_byte_determinism(capsys):
    first = hashlib.sha256()
    second = hashlib.sha256()
    for seed in range(1000):
        first.update(_ac1_report_bytes(seed))
    for seed in range(1000):
        second.update(_ac1_report_bytes(seed))
    assert first.digest() == second.digest()
    _announce(
        capsys,
        "AC9 PASS: regenerating all 1000 reports with the same seeds "
        "is byte-identical (sha256 match)",
    )
