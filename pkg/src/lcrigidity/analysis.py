"""High-level rigidity decisions.

Redundant rigidity, global rigidity, unbalanced separators, 2-sum
structure, the separator count b(G), exact realization counts, globally
linked pairs, and the bar-joint gadget.
"""

from dataclasses import dataclass
from itertools import combinations

from . import graphs, matroid
from .errors import (
    MissingEdge,
    NoUnbalancedSeparation,
    NotMlcConnected,
    PreconditionFailed,
)

is_redundantly_rigid = matroid.is_redundantly_rigid


@dataclass(frozen=True)
class ComponentReason:
    vertices: tuple
    kind: str  # "single_vertex_with_two_loops" | "redundantly_rigid" | "failing"
    witness: object  # failing element, or None


@dataclass(frozen=True)
class GlobalRigidityVerdict:
    globally_rigid: bool
    balanced: bool
    balance_witness: object  # failing vertex pair, or None
    components: tuple  # of ComponentReason


def decide_global_rigidity(g):
    """Globally rigid iff balanced and every connected component is a
    single vertex with two loops or is redundantly rigid.
    """
    witness = g.unbalanced_witness(2)
    balanced = witness is None
    reasons = []
    ok = balanced
    for comp in g.connected_components():
        sub = g.induced(comp)
        vs = tuple(sorted(comp))
        if len(vs) == 1 and len(sub.loops) == 2:
            reasons.append(ComponentReason(vs, "single_vertex_with_two_loops", None))
            continue
        if matroid.is_rigid(sub):
            bad = None
            for e in matroid.base_of(sub):
                rest = [f for f in sub.elements if f != e]
                if matroid.rank(sub, rest) != 2 * len(vs):
                    bad = e
                    break
            if bad is None:
                reasons.append(ComponentReason(vs, "redundantly_rigid", None))
                continue
            reasons.append(ComponentReason(vs, "failing", bad))
        else:
            reasons.append(ComponentReason(vs, "failing", None))
        ok = False
    return GlobalRigidityVerdict(ok, balanced, witness, tuple(reasons))


def unbalanced_two_separators(g):
    """All vertex pairs whose removal leaves a loopless component."""
    out = []
    for pair in combinations(g.vertices, 2):
        if g.loopless_components_after(pair) > 0:
            out.append(tuple(sorted(pair)))
    return sorted(out)


def b_count(g):
    """Sum over vertex pairs of the number of loopless components left."""
    total = 0
    for pair in combinations(g.vertices, 2):
        total += g.loopless_components_after(pair)
    return total


@dataclass(frozen=True)
class TwoSumSplit:
    part1: graphs.LoopedSimpleGraph  # carries all loops, plus edge uv
    part2: graphs.LoopedSimpleGraph  # loopless, plus edge uv
    hinge: tuple  # (u, v)
    hinge_was_edge: bool


def _unbalanced_splits(g, require_virtual_hinge):
    """Splits of g along unbalanced separator pairs.

    For each pair {u, v} and each loopless component H of G - {u, v},
    part2 is H together with u, v, its edges into them, and the hinge
    edge uv; part1 is G minus H plus the hinge edge.  When uv is already
    an edge of G it stays on part1 and the split is skipped if
    require_virtual_hinge is set.  Sorted by loopless side size.
    """
    out = []
    for pair in combinations(g.vertices, 2):
        u, v = sorted(pair)
        was_edge = g.has_edge(u, v)
        if was_edge and require_virtual_hinge:
            continue
        rest = g.remove_vertices((u, v))
        for comp in rest.connected_components():
            if any(rest._loops_at[w] for w in comp):
                continue
            side = set(comp) | {u, v}
            p2_edges = [
                e
                for e in g.edges
                if e[0] in side and e[1] in side and e != (u, v)
            ]
            p2 = graphs.build(side, p2_edges + [(u, v)], [])
            p1 = g.remove_vertices(comp)
            if not p1.has_edge(u, v):
                p1 = p1.add_edge(u, v)
            out.append(TwoSumSplit(p1, p2, (u, v), was_edge))
    out.sort(key=lambda s: (len(s.part2.vertices), s.hinge))
    return out


def two_sum_decompose(g):
    """Splits along unbalanced 2-separations with uv not an edge.

    Both parts, with the hinge edge added, are verified connected in the
    matroid sense.
    """
    if not g.loops:
        raise PreconditionFailed("graph has no loop")
    if not matroid._mlc_ok(g):
        raise NotMlcConnected()
    splits = _unbalanced_splits(g, require_virtual_hinge=True)
    if not splits:
        raise NoUnbalancedSeparation()
    for s in splits:
        for part in (s.part1, s.part2):
            if not matroid._mlc_ok(part):
                raise PreconditionFailed(
                    "2-sum part failed the connectivity it is guaranteed"
                )
    return splits


def two_sum(g1, g2, hinge1, hinge2):
    """Glue g1 and g2 on the endpoints of the named edges, deleting them.

    Non-hinge vertices and loops of g2 are renamed where they collide
    with g1.  hinge2's endpoints map onto hinge1's in sorted order.
    """
    u1, v1 = graphs.edge_key(*hinge1)
    u2, v2 = graphs.edge_key(*hinge2)
    if not g1.has_edge(u1, v1):
        raise MissingEdge(hinge1)
    if not g2.has_edge(u2, v2):
        raise MissingEdge(hinge2)
    vmap = {u2: u1, v2: v1}
    taken = set(g1.vertices)
    for w in g2.vertices:
        if w in vmap:
            continue
        name = w
        while name in taken:
            name = name + "'"
        vmap[w] = name
        taken.add(name)
    lmap = {}
    ltaken = {lid for lid, _ in g1.loops}
    for lid, _ in g2.loops:
        name = lid
        while name in ltaken:
            name = name + "'"
        lmap[lid] = name
        ltaken.add(name)
    vertices = list(g1.vertices) + [vmap[w] for w in g2.vertices if w not in (u2, v2)]
    edges = [e for e in g1.edges if e != (u1, v1)]
    for a, b in g2.edges:
        if (a, b) == (u2, v2):
            continue
        edges.append(graphs.edge_key(vmap[a], vmap[b]))
    loops = list(g1.loops) + [(lmap[lid], vmap[w]) for lid, w in g2.loops]
    return graphs.build(vertices, edges, loops)


def _require_rigid_connected(g):
    if not matroid.is_rigid(g):
        raise PreconditionFailed("graph is not rigid")
    if not matroid._mlc_ok(g):
        raise PreconditionFailed("graph is not connected in the matroid sense")


def count_equivalent_realizations(g):
    """2^{b(G)}; proven exact only for rigid matroid-connected graphs."""
    _require_rigid_connected(g)
    return 2 ** b_count(g)


def globally_linked_pairs(g):
    """Separator pairs whose distance is pinned in every equivalent
    framework.  Sound but not complete; adjacent pairs are omitted.
    """
    _require_rigid_connected(g)
    return unbalanced_two_separators(g)


def bar_joint_gadget(g, uv):
    """Pin the edge uv of a loopless graph with two loops at each end."""
    if g.loops:
        raise PreconditionFailed("input must be loopless")
    u, v = graphs.edge_key(*uv)
    if not g.has_edge(u, v):
        raise MissingEdge(uv)
    out = g
    taken = set()
    for w in (u, v):
        for k in (1, 2):
            lid = graphs.fresh_id("pin_%s_" % w, taken)
            taken.add(lid)
            out = out.add_loop(lid, w)
    return out
