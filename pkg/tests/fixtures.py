"""Shared worked-example graphs and frameworks used across the tests."""

from fractions import Fraction

from lcrigidity import exact, graphs

F = Fraction


def two_pinned_vertices():
    """Two vertices, two loops each, no edge; globally rigid."""
    return graphs.build(
        ["v1", "v2"],
        [],
        [("a1", "v1"), ("a2", "v1"), ("b1", "v2"), ("b2", "v2")],
    )


def pinned_edge_pair():
    """v1 with two loops, v2 with one loop, plus the edge v1v2.

    Rigid but not globally rigid: v2 can be reflected through p(v1)
    along its slider line.
    """
    return graphs.build(
        ["v1", "v2"],
        [("v1", "v2")],
        [("a1", "v1"), ("a2", "v1"), ("b1", "v2")],
    )


def looped_triangle():
    """Triangle with two loops at v1 and one each at v2, v3; a rigid
    circuit with a worked exact stress."""
    return graphs.build(
        ["v1", "v2", "v3"],
        [("v1", "v2"), ("v1", "v3"), ("v2", "v3")],
        [("l1", "v1"), ("l2", "v1"), ("l3", "v2"), ("l4", "v3")],
    )


def looped_triangle_realization():
    return exact.Realization(
        2,
        {"v1": (F(1), F(0)), "v2": (F(-1), F(0)), "v3": (F(0), F(1))},
        {
            "l1": (F(1), F(-1)),
            "l2": (F(1), F(0)),
            "l3": (F(1), F(1)),
            "l4": (F(0), F(1)),
        },
    )


# The exact cokernel generator of the framework above, in element order
# (edges sorted, then loops): omega = (0, 1, 1), lambda = (-1, 0, 1, -2).
LOOPED_TRIANGLE_STRESS = (F(0), F(1), F(1), F(-1), F(0), F(1), F(-2))

LOOPED_TRIANGLE_OMEGA = (
    (F(1), F(0), F(-1)),
    (F(0), F(1), F(-1)),
    (F(-1), F(-1), F(2)),
)


def k4(names=("v1", "v2", "v3", "v4")):
    a, b, c, d = names
    return graphs.build(
        names,
        [(a, b), (a, c), (a, d), (b, c), (b, d), (c, d)],
        [],
    )


def k4_one_loop_each():
    """K4 plus one loop per vertex; its edge set is a flexible circuit."""
    g = k4()
    for i, v in enumerate(g.vertices):
        g = g.add_loop("l%d" % i, v)
    return g


def rigid_circuit_on_four():
    """Four vertices, edges of K4 minus v2v4, one loop per vertex."""
    return graphs.build(
        ["v1", "v2", "v3", "v4"],
        [("v1", "v2"), ("v1", "v3"), ("v2", "v3"), ("v1", "v4"), ("v3", "v4")],
        [("l1", "v1"), ("l2", "v2"), ("l3", "v3"), ("l4", "v4")],
    )


def k4_two_loops_each():
    """K4 plus two loops per vertex; matroid-connected, many ears."""
    g = k4()
    for v in g.vertices:
        g = g.add_loop("l%s_1" % v, v).add_loop("l%s_2" % v, v)
    return g


def unbalanced_circuit():
    """2-sum of a five-vertex rigid circuit (one loop per vertex) and K4
    along the pair (u, v); an unbalanced rigid circuit with b = 1."""
    return graphs.build(
        ["v", "u", "a", "b", "x1", "x2", "x3"],
        [
            ("v", "a"),
            ("v", "b"),
            ("a", "b"),
            ("u", "a"),
            ("u", "b"),
            ("v", "x1"),
            ("v", "x2"),
            ("u", "x2"),
            ("x1", "x3"),
            ("x2", "x3"),
        ],
        [("lv", "v"), ("lu", "u"), ("l1", "x1"), ("l2", "x2"), ("l3", "x3")],
    )


def double_unbalanced_circuit():
    """Two K4's 2-summed onto the looped five-vertex core; b = 2."""
    core = graphs.build(
        ["v", "u", "x1", "x2", "x3"],
        [("u", "v"), ("v", "x1"), ("v", "x2"), ("u", "x2"), ("x1", "x3"), ("x2", "x3")],
        [("lv", "v"), ("lu", "u"), ("l1", "x1"), ("l2", "x2"), ("l3", "x3")],
    )
    from lcrigidity import analysis

    g = analysis.two_sum(core, k4(("u", "v", "a", "b")), ("u", "v"), ("u", "v"))
    return analysis.two_sum(g, k4(("x1", "x3", "c", "d")), ("x1", "x3"), ("x1", "x3"))


def non_admissible_node_graph():
    """Matroid-connected graph in which the node x admits no connected
    1-reduction."""
    return graphs.build(
        ["v1", "v2", "v3", "v4", "x"],
        [
            ("v1", "v2"),
            ("v1", "v3"),
            ("v2", "v3"),
            ("v1", "v4"),
            ("v2", "v4"),
            ("x", "v3"),
            ("x", "v4"),
        ],
        [("a", "v1"), ("b", "v2"), ("c", "v2"), ("d", "x")],
    )


def feasibility_gap_graph():
    """Balanced matroid-connected graph whose node y is admissible but
    not feasible, while y1 is feasible."""
    return graphs.build(
        ["v", "u", "y1", "y2", "y"],
        [
            ("v", "y1"),
            ("u", "y1"),
            ("v", "y2"),
            ("u", "y2"),
            ("y", "y1"),
            ("y", "y2"),
        ],
        [("lv1", "v"), ("lv2", "v"), ("lu1", "u"), ("lu2", "u"), ("ly", "y")],
    )


def extension_target():
    """K4 with the two extra loops at v1 and v4, one loop at v3, built
    by 1-extension, K4-extension, then loop and edge additions."""
    return graphs.build(
        ["v1", "v2", "v3", "v4"],
        [
            ("v1", "v2"),
            ("v1", "v3"),
            ("v2", "v3"),
            ("v2", "v4"),
            ("v3", "v4"),
            ("v1", "v4"),
        ],
        [("a1", "v1"), ("a2", "v1"), ("b1", "v4"), ("b2", "v4"), ("c", "v3")],
    )


def extension_intermediate():
    """The graph after the K4-extension step on the way to
    extension_target: five edges and four loops on four vertices."""
    return graphs.build(
        ["v1", "v2", "v3", "v4"],
        [("v1", "v2"), ("v1", "v3"), ("v2", "v3"), ("v2", "v4"), ("v3", "v4")],
        [("a1", "v1"), ("a2", "v1"), ("b1", "v4"), ("b2", "v4")],
    )
