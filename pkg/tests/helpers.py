"""Brute-force reference implementations and random instance generators.

Everything here is deliberately slow and obviously correct, so the fast
library code can be checked against it on small instances.
"""

import random
from fractions import Fraction
from itertools import combinations

from lcrigidity import construct, graphs, matroid


def count_violation(g, subset):
    """True when the subset breaks one of the two counting rules."""
    if not subset:
        return False
    touched = set()
    for el in subset:
        touched.update(g.element_vertices(el))
    if len(subset) > 2 * len(touched):
        return True
    pure = [el for el in subset if el[0] == "edge"]
    if pure and len(pure) == len(subset) and len(subset) > 2 * len(touched) - 3:
        return True
    return False


def brute_independent_sets(g):
    """Map each subset of elements (as a frozenset) to independence.

    A set is independent iff neither it nor any subset violates the
    counts; dependence is propagated upward over supersets.
    """
    els = g.elements
    n = len(els)
    bad = [False] * (1 << n)
    for mask in range(1, 1 << n):
        subset = [els[i] for i in range(n) if mask >> i & 1]
        if count_violation(g, subset):
            bad[mask] = True
            continue
        m = mask
        while m:
            low = m & -m
            if bad[mask ^ low]:
                bad[mask] = True
                break
            m ^= low
    out = {}
    for mask in range(1 << n):
        key = frozenset(els[i] for i in range(n) if mask >> i & 1)
        out[key] = not bad[mask]
    return out


def brute_rank(g, subset=None):
    table = brute_independent_sets(g)
    pool = list(g.elements if subset is None else subset)
    best = 0
    for r in range(len(pool), -1, -1):
        if any(table[frozenset(c)] for c in combinations(pool, r)):
            best = r
            break
    return best


def brute_circuits(g):
    """All minimal dependent sets, as frozensets."""
    table = brute_independent_sets(g)
    out = []
    for s, indep in table.items():
        if indep:
            continue
        if all(table[s - {el}] for el in s):
            out.append(s)
    return out


def brute_components(g):
    """Partition of the ground set by the relation "lie on a common
    circuit", closed transitively."""
    els = g.elements
    parent = {el: el for el in els}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in brute_circuits(g):
        it = iter(c)
        first = next(it)
        for el in it:
            parent[find(el)] = find(first)
    groups = {}
    for el in els:
        groups.setdefault(find(el), set()).add(el)
    return sorted(
        (frozenset(s) for s in groups.values()),
        key=lambda s: sorted(s),
    )


def random_graph(rng, max_vertices=6, max_elements=None, loop_bias=0.35):
    """A random looped simple graph, possibly empty or disconnected."""
    n = rng.randint(1, max_vertices)
    vs = ["v%d" % i for i in range(n)]
    pairs = list(combinations(vs, 2))
    rng.shuffle(pairs)
    edges = []
    loops = []
    budget = rng.randint(0, 2 * n + 3)
    if max_elements is not None:
        budget = min(budget, max_elements)
    k = 0
    while len(edges) + len(loops) < budget:
        if pairs and rng.random() > loop_bias:
            edges.append(pairs.pop())
        else:
            loops.append(("l%d" % k, rng.choice(vs)))
            k += 1
    return graphs.build(vs, edges, loops)


def random_connected_graph(rng, max_vertices=6):
    """Random graph re-drawn until connected with at least one element."""
    while True:
        g = random_graph(rng, max_vertices)
        if g.elements and g.is_connected():
            return g


def random_rigid_circuit(rng, steps=3):
    """Grow a rigid circuit from the smallest ones by 1-extensions and
    K4-extensions, which preserve the property."""
    g = fixtures_smallest_rigid_circuit(rng)
    for i in range(steps):
        g = _extend_circuit(rng, g, "c%d" % i)
    return g


def fixtures_smallest_rigid_circuit(rng):
    if rng.random() < 0.5:
        return graphs.build(["w"], [], [("l0", "w"), ("l1", "w"), ("l2", "w")])
    return graphs.build(
        ["w0", "w1"],
        [("w0", "w1")],
        [("l0", "w0"), ("l1", "w0"), ("l2", "w1"), ("l3", "w1")],
    )


def _circuit_extension_moves(rng, g, new_vertex):
    """Candidate extension moves at a fresh vertex, in random order."""
    lid1 = graphs.fresh_id("l", set(g.loop_vertex))
    lid2 = graphs.fresh_id("l", set(g.loop_vertex) | {lid1})
    moves = []
    for a, b in g.edges:
        moves.append(
            construct.Move("k4_extension", u=a, v=b, new_vertices=(new_vertex, new_vertex + "x"))
        )
        thirds = [("loop", lid1)]
        thirds += [("edge", w) for w in g.vertices if w not in (a, b)]
        for third in thirds:
            moves.append(
                construct.Move(
                    "one_extension_edge",
                    removed_edge=(a, b),
                    vertex=new_vertex,
                    attachments=(("edge", a), ("edge", b), third),
                )
            )
    for lid, w in g.loops:
        thirds = [("loop", lid2)]
        thirds += [("edge", x) for x in g.vertices if x != w]
        for third in thirds:
            moves.append(
                construct.Move(
                    "one_extension_loop",
                    removed_loop=lid,
                    vertex=new_vertex,
                    attachments=(("edge", w), ("loop", lid1), third),
                )
            )
    rng.shuffle(moves)
    return moves


def _extend_circuit(rng, g, new_vertex):
    """Apply the first legal 1-extension or K4-extension; both preserve
    rigid circuits, so no result filtering happens here."""
    for mv in _circuit_extension_moves(rng, g, new_vertex):
        try:
            return construct.apply_move(g, mv)
        except Exception:
            continue
    raise AssertionError("no extension applied")


def random_flexible_circuit(rng, steps=2):
    """Grow a flexible circuit from K4 by 1-extensions on edges."""
    g = graphs.build(
        ["w0", "w1", "w2", "w3"],
        [
            ("w0", "w1"),
            ("w0", "w2"),
            ("w0", "w3"),
            ("w1", "w2"),
            ("w1", "w3"),
            ("w2", "w3"),
        ],
        [],
    )
    for i in range(steps):
        nv = "c%d" % i
        placed = False
        for mv in _circuit_extension_moves(rng, g, nv):
            if mv.kind != "one_extension_edge":
                continue
            if any(a[0] == "loop" for a in mv.attachments):
                continue
            try:
                h = construct.apply_move(g, mv)
            except Exception:
                continue
            if matroid.classify_circuit(h) is not None:
                g = h
                placed = True
                break
        if not placed:
            break
    return g


def random_realizations(rng, g, count=3, bits=24):
    from lcrigidity import exact

    return [
        exact.sample_realization(g, seed=rng.randrange(1 << 30), bits=bits)
        for _ in range(count)
    ]


def exact_to_float_residual(report):
    worst = Fraction(0)
    for row in report.residual:
        for x in row:
            worst = max(worst, abs(x))
    return worst
