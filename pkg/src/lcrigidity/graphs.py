"""Looped simple graphs.

A looped simple graph G = (V, E, L) has simple edges (no parallel edges,
no edge from a vertex to itself) together with a multiset of loops.  Each
loop sits at a single vertex and carries its own id, so several loops may
share a vertex.  Graphs are immutable values: every mutating operation
returns a new graph.

Ground-set elements are referred to by tagged tuples:

    ("edge", u, v)   with u < v
    ("loop", loop_id)
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import networkx as nx

from .errors import (
    DuplicateEdge,
    MissingEdge,
    SelfLoopAsEdge,
    UnknownVertex,
)


def edge_key(u, v):
    """Normalized endpoint pair of a simple edge."""
    return (u, v) if u <= v else (v, u)


def edge_element(u, v):
    return ("edge",) + edge_key(u, v)


def loop_element(loop_id):
    return ("loop", loop_id)


@dataclass(frozen=True)
class DegreeProfile:
    """Incidence counts of one vertex.

    d_dagger counts incident edges plus incident loops, each loop once;
    degree counts loops twice.  A vertex with d_dagger = 3 is a node.
    """

    d_dagger: int
    degree: int
    is_node: bool


@dataclass(frozen=True)
class LoopedSimpleGraph:
    vertices: tuple
    edges: tuple  # sorted (u, v) pairs with u < v
    loops: tuple  # sorted (loop_id, vertex) pairs

    @cached_property
    def _vertex_set(self):
        return frozenset(self.vertices)

    @cached_property
    def _edge_set(self):
        return frozenset(self.edges)

    @cached_property
    def loop_vertex(self):
        """Map loop id -> incident vertex."""
        return {lid: v for lid, v in self.loops}

    @cached_property
    def _adj(self):
        adj = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    @cached_property
    def _loops_at(self):
        at = {v: [] for v in self.vertices}
        for lid, v in self.loops:
            at[v].append(lid)
        return at

    @cached_property
    def elements(self):
        """Deterministically ordered ground set E followed by L."""
        out = [("edge",) + e for e in self.edges]
        out.extend(("loop", lid) for lid, _ in self.loops)
        return tuple(out)

    def has_vertex(self, v):
        return v in self._vertex_set

    def has_edge(self, u, v):
        return edge_key(u, v) in self._edge_set

    def neighbors(self, v):
        if v not in self._vertex_set:
            raise UnknownVertex(v)
        return tuple(sorted(self._adj[v]))

    def loops_at(self, v):
        if v not in self._vertex_set:
            raise UnknownVertex(v)
        return tuple(sorted(self._loops_at[v]))

    def degree_profile(self, v):
        nloops = len(self.loops_at(v))
        dd = len(self._adj[v]) + nloops
        return DegreeProfile(d_dagger=dd, degree=dd + nloops, is_node=dd == 3)

    def element_vertices(self, element):
        if element[0] == "edge":
            return element[1:]
        return (self.loop_vertex[element[1]],)

    # -- derived graphs -------------------------------------------------

    def add_vertex(self, v):
        if v in self._vertex_set:
            raise DuplicateEdge("vertex %r already present" % (v,))
        return build(self.vertices + (v,), self.edges, self.loops)

    def add_edge(self, u, v):
        if u == v:
            raise SelfLoopAsEdge((u, v))
        for w in (u, v):
            if w not in self._vertex_set:
                raise UnknownVertex(w)
        if self.has_edge(u, v):
            raise DuplicateEdge((u, v))
        return build(self.vertices, self.edges + (edge_key(u, v),), self.loops)

    def add_loop(self, loop_id, at):
        if at not in self._vertex_set:
            raise UnknownVertex(at)
        if loop_id in self.loop_vertex:
            raise DuplicateEdge("loop id %r already present" % (loop_id,))
        return build(self.vertices, self.edges, self.loops + ((loop_id, at),))

    def remove_element(self, element):
        if element[0] == "edge":
            e = element[1:]
            if e not in self._edge_set:
                raise MissingEdge(e)
            return build(self.vertices, tuple(x for x in self.edges if x != e), self.loops)
        lid = element[1]
        if lid not in self.loop_vertex:
            raise MissingEdge(lid)
        return build(self.vertices, self.edges, tuple(x for x in self.loops if x[0] != lid))

    def remove_vertices(self, xs):
        """Induced graph on V minus xs, dropping all incident elements."""
        xs = set(xs)
        for x in xs:
            if x not in self._vertex_set:
                raise UnknownVertex(x)
        keep = tuple(v for v in self.vertices if v not in xs)
        edges = tuple(e for e in self.edges if e[0] not in xs and e[1] not in xs)
        loops = tuple(l for l in self.loops if l[1] not in xs)
        return build(keep, edges, loops)

    def induced(self, vs):
        vs = set(vs)
        return self.remove_vertices(self._vertex_set - vs)

    # -- connectivity and balance ---------------------------------------

    def connected_components(self):
        """Partition of V by edge connectivity; loops do not connect."""
        seen = set()
        comps = []
        for root in self.vertices:
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            seen.add(root)
            while stack:
                for w in self._adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        stack.append(w)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self):
        return len(self.connected_components()) <= 1

    def loopless_components_after(self, xs):
        """Number of components of G - xs carrying no loop."""
        rest = self.remove_vertices(xs)
        count = 0
        for comp in rest.connected_components():
            if not any(rest._loops_at[v] for v in comp):
                count += 1
        return count

    def is_balanced(self, d=2):
        """Whether every component of G - X has a loop for all |X| = d.

        Vacuously true when |V| <= d.
        """
        if len(self.vertices) <= d:
            return True
        return self.unbalanced_witness(d) is None

    def unbalanced_witness(self, d=2):
        """A d-subset X leaving a loopless component, or None."""
        if len(self.vertices) <= d:
            return None
        for xs in combinations(self.vertices, d):
            if self.loopless_components_after(xs) > 0:
                return xs
        return None

    # -- serialization --------------------------------------------------

    def to_json_dict(self):
        return {
            "vertices": list(self.vertices),
            "edges": [[u, v] for u, v in self.edges],
            "loops": [{"id": lid, "at": v} for lid, v in self.loops],
        }


def build(vertices, edges, loops):
    """Normalize and validate a looped simple graph.

    vertices: iterable of vertex ids; edges: iterable of endpoint pairs;
    loops: iterable of (loop_id, vertex) pairs.
    """
    vs = tuple(sorted(set(vertices)))
    vset = set(vs)
    es = []
    seen = set()
    for u, v in edges:
        if u == v:
            raise SelfLoopAsEdge((u, v))
        if u not in vset:
            raise UnknownVertex(u)
        if v not in vset:
            raise UnknownVertex(v)
        e = edge_key(u, v)
        if e in seen:
            raise DuplicateEdge(e)
        seen.add(e)
        es.append(e)
    ls = []
    lids = set()
    for lid, v in loops:
        if v not in vset:
            raise UnknownVertex(v)
        if lid in lids:
            raise DuplicateEdge("loop id %r used twice" % (lid,))
        lids.add(lid)
        ls.append((lid, v))
    return LoopedSimpleGraph(vs, tuple(sorted(es)), tuple(sorted(ls)))


def from_json_dict(data):
    return build(
        data.get("vertices", []),
        [tuple(e) for e in data.get("edges", [])],
        [(l["id"], l["at"]) for l in data.get("loops", [])],
    )


def k1_with_three_loops(vertex="v0", loop_ids=("l0", "l1", "l2")):
    """The single vertex carrying three loops, the base of all constructions."""
    return build([vertex], [], [(lid, vertex) for lid in loop_ids])


def is_base_graph(g):
    """Whether g is a single vertex with exactly three loops and no edge."""
    return len(g.vertices) == 1 and not g.edges and len(g.loops) == 3


def fresh_id(prefix, taken):
    k = 0
    while "%s%d" % (prefix, k) in taken:
        k += 1
    return "%s%d" % (prefix, k)


def is_isomorphic(g1, g2):
    """Isomorphism of looped simple graphs.

    Loops are folded into a per-vertex loop count so loop ids do not
    matter; edge structure is compared by VF2.
    """
    n1 = nx.Graph()
    n2 = nx.Graph()
    for n, g in ((n1, g1), (n2, g2)):
        for v in g.vertices:
            n.add_node(v, nloops=len(g.loops_at(v)))
        n.add_edges_from(g.edges)
    return nx.is_isomorphic(
        n1, n2, node_match=lambda a, b: a["nloops"] == b["nloops"]
    )
