"""End-to-end acceptance gate.

Each test pins one headline guarantee of the library, with explicit
runtime budgets where the guarantee includes one.
"""

import random
import time
from fractions import Fraction

import fixtures
import helpers
from lcrigidity import analysis, construct, exact, graphs, matroid

F = Fraction


def test_worked_stress_reproduction():
    start = time.monotonic()
    g = fixtures.looped_triangle()
    r = fixtures.looped_triangle_realization()
    basis = exact.stress_basis(g, r)
    assert len(basis) == 1
    vec = basis[0].vector(g)
    expected = fixtures.LOOPED_TRIANGLE_STRESS
    k = next(i for i, x in enumerate(expected) if x)
    scale = vec[k] / expected[k]
    assert scale != 0 and vec == tuple(x * scale for x in expected)
    report = exact.stress_matrix(g, basis[0], r)
    assert report.omega_matrix == tuple(
        tuple(x * scale for x in row) for row in fixtures.LOOPED_TRIANGLE_OMEGA
    )
    assert report.rank == 2
    assert time.monotonic() - start < 1.0


def test_oracle_equivalence_exhaustive():
    start = time.monotonic()
    rng = random.Random(20260823)
    checked = 0
    while checked < 300:
        g = helpers.random_graph(rng, max_vertices=6, max_elements=12)
        if len(g.elements) > 12:
            continue
        checked += 1
        table = helpers.brute_independent_sets(g)
        for subset, indep in table.items():
            assert matroid.is_independent(g, sorted(subset)) == indep, (
                g,
                sorted(subset),
            )
    assert time.monotonic() - start < 60.0


def test_combinatorial_matches_infinitesimal():
    start = time.monotonic()
    rng = random.Random(4221)
    for _ in range(300):
        g = helpers.random_graph(rng, max_vertices=8)
        combinatorial = matroid.is_rigid(g)
        for trial in range(3):
            r = exact.sample_realization(
                g, seed=rng.randrange(1 << 30), bits=16
            )
            assert exact.is_infinitesimally_rigid(g, r) == combinatorial, (g, trial)
    assert time.monotonic() - start < 120.0


def _tri_equivalence_instances(rng, count):
    """Connected graphs with >= 2 vertices: construction outputs plus
    single-element perturbations of them."""
    out = []
    while len(out) < count:
        seq = construct.random_construct(
            rng.randint(1, 5), construct.BALANCED, seed=rng.randrange(1 << 30)
        )
        g = construct.replay(seq)
        if len(g.vertices) > 8:
            continue
        if len(g.vertices) >= 2:
            out.append(g)
        if len(out) >= count:
            break
        # perturb: delete or add one element
        h = None
        if rng.random() < 0.5 and g.elements:
            h = g.remove_element(rng.choice(g.elements))
        else:
            absent = [
                (u, v)
                for i, u in enumerate(g.vertices)
                for v in g.vertices[i + 1 :]
                if not g.has_edge(u, v)
            ]
            if rng.random() < 0.5 and absent:
                h = g.add_edge(*rng.choice(absent))
            else:
                h = g.add_loop(
                    graphs.fresh_id("l", set(g.loop_vertex)), rng.choice(g.vertices)
                )
        if h is not None and h.is_connected() and len(h.vertices) >= 2:
            out.append(h)
    return out


def test_global_rigidity_tri_equivalence():
    start = time.monotonic()
    rng = random.Random(8321)
    for g in _tri_equivalence_instances(rng, 100):
        combinatorial = analysis.decide_global_rigidity(g).globally_rigid
        r = exact.sample_realization(g, seed=rng.randrange(1 << 30), bits=16)
        _, rank = exact.max_rank_stress(g, r, trials=50, seed=1)
        numerical = rank == len(g.vertices) - 1
        assert combinatorial == numerical, g
    assert time.monotonic() - start < 180.0


def test_admissibility_and_feasibility_witnesses():
    start = time.monotonic()
    h = fixtures.non_admissible_node_graph()
    ok, _ = construct.is_admissible(h, "x")
    assert not ok
    g = fixtures.feasibility_gap_graph()
    ok, witness = construct.is_admissible(g, "y")
    assert ok and witness == ("edge", ("y1", "y2"))
    ok, _ = construct.is_feasible(g, "y")
    assert not ok
    ok, witness = construct.is_feasible(g, "y1")
    assert ok and witness == ("edge", ("v", "y"))
    assert time.monotonic() - start < 1.0


def test_construction_round_trips():
    start = time.monotonic()
    for mode, check in (
        (construct.BALANCED, lambda g: g.is_balanced(2) and matroid._mlc_ok(g)),
        (construct.GENERAL, lambda g: matroid.is_rigid(g) and matroid._mlc_ok(g)),
    ):
        for seed in range(200):
            seq = construct.random_construct(seed % 9, mode, seed=seed)
            g = seq.base
            for m in seq.moves:
                g = construct.apply_move(g, m)
                assert check(g), (mode, seed)
            rebuilt = construct.replay(construct.deconstruct(g, mode))
            assert graphs.is_isomorphic(rebuilt, g), (mode, seed)
    assert time.monotonic() - start < 120.0


def test_circuit_calculus():
    rng = random.Random(606)
    for _ in range(100):
        rigid = helpers.random_rigid_circuit(rng, steps=rng.randint(1, 3))
        while not rigid.edges:
            rigid = helpers.random_rigid_circuit(rng, steps=rng.randint(1, 3))
        flexible = helpers.random_flexible_circuit(rng, steps=rng.randint(0, 2))
        hinge1 = rng.choice(rigid.edges)
        hinge2 = rng.choice(flexible.edges)
        glued = analysis.two_sum(rigid, flexible, hinge1, hinge2)
        rep = matroid.classify_circuit(glued)
        assert rep is not None and rep.kind == "rigid"
        assert not glued.is_balanced(2)
        kinds = set()
        for split in analysis.two_sum_decompose(glued):
            r1 = matroid.classify_circuit(split.part1)
            r2 = matroid.classify_circuit(split.part2)
            if r1 and r2:
                kinds.add((r1.kind, r2.kind))
        assert ("rigid", "flexible") in kinds

    for _ in range(100):
        g = helpers.random_rigid_circuit(rng, steps=rng.randint(0, 4))
        rep = matroid.classify_circuit(g)
        assert rep is not None and rep.kind == "rigid"


def test_enumeration_counts():
    start = time.monotonic()
    g = fixtures.unbalanced_circuit()
    r = exact.sample_realization(g, seed=404, bits=16)
    out = exact.enumerate_equivalent(g, r)
    assert len(out) == 2
    assert len({tuple(sorted(x.p.items())) for x in out}) == 2
    for x in out:
        assert exact.verify_equivalent(g, r, x)

    g2 = fixtures.double_unbalanced_circuit()
    r2 = exact.sample_realization(g2, seed=405, bits=16)
    out2 = exact.enumerate_equivalent(g2, r2)
    assert len(out2) == 4
    assert len({tuple(sorted(x.p.items())) for x in out2}) == 4
    for x in out2:
        assert exact.verify_equivalent(g2, r2, x)
    assert time.monotonic() - start < 5.0


def test_stress_rank_propagates_along_extensions():
    rng = random.Random(9090)
    g = graphs.k1_with_three_loops()
    for step in range(50):
        moves = [
            m
            for m in helpers._circuit_extension_moves(rng, g, "w%d" % step)
            if m.kind != construct.K4_EXTENSION
        ]
        g = construct.apply_move(g, moves[0])
        r = exact.sample_realization(g, seed=rng.randrange(1 << 30), bits=16)
        _, rank = exact.max_rank_stress(g, r, trials=50, seed=2)
        assert rank == len(g.vertices) - 1, step
