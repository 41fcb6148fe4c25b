"""Inductive constructions from the single vertex with three loops.

Moves are edge/loop additions, 1-extensions (on an edge or on a loop),
and K4-extensions (2-sum with a copy of K4 along an existing edge).
The module applies and inverts moves, tests admissibility and
feasibility of reductions, deconstructs suitable graphs into move
sequences, replays sequences, and samples random sequences.
"""

import random
from dataclasses import dataclass, field

from . import analysis, graphs, matroid
from .errors import (
    ExhaustionBug,
    IllegalChoice,
    InvalidMove,
    NotANode,
    NotMlcConnected,
    PreconditionFailed,
)

ADD_EDGE = "add_edge"
ADD_LOOP = "add_loop"
ONE_EXTENSION_EDGE = "one_extension_edge"
ONE_EXTENSION_LOOP = "one_extension_loop"
K4_EXTENSION = "k4_extension"


@dataclass(frozen=True)
class Move:
    kind: str
    # add_edge and k4_extension name an edge by (u, v)
    u: str = None
    v: str = None
    # add_loop
    at: str = None
    loop_id: str = None
    # 1-extensions
    removed_edge: tuple = None
    removed_loop: str = None
    vertex: str = None
    attachments: tuple = ()  # of ("edge", w) or ("loop", loop_id)
    # k4_extension
    new_vertices: tuple = ()

    def to_json_dict(self):
        d = {"kind": self.kind}
        if self.kind == ADD_EDGE:
            d["edge"] = [self.u, self.v]
        elif self.kind == ADD_LOOP:
            d["loop"] = {"id": self.loop_id, "at": self.at}
        elif self.kind == K4_EXTENSION:
            d["edge"] = [self.u, self.v]
            d["newVertices"] = list(self.new_vertices)
        else:
            if self.kind == ONE_EXTENSION_EDGE:
                d["removedEdge"] = list(self.removed_edge)
            else:
                d["removedLoop"] = self.removed_loop
            d["vertex"] = self.vertex
            d["attachments"] = [list(a) for a in self.attachments]
        return d


def move_from_json_dict(d):
    kind = d["kind"]
    if kind == ADD_EDGE:
        u, v = d["edge"]
        return Move(ADD_EDGE, u=u, v=v)
    if kind == ADD_LOOP:
        return Move(ADD_LOOP, at=d["loop"]["at"], loop_id=d["loop"]["id"])
    if kind == K4_EXTENSION:
        u, v = d["edge"]
        return Move(K4_EXTENSION, u=u, v=v, new_vertices=tuple(d["newVertices"]))
    if kind == ONE_EXTENSION_EDGE:
        return Move(
            ONE_EXTENSION_EDGE,
            removed_edge=tuple(d["removedEdge"]),
            vertex=d["vertex"],
            attachments=tuple(tuple(a) for a in d["attachments"]),
        )
    if kind == ONE_EXTENSION_LOOP:
        return Move(
            ONE_EXTENSION_LOOP,
            removed_loop=d["removedLoop"],
            vertex=d["vertex"],
            attachments=tuple(tuple(a) for a in d["attachments"]),
        )
    raise InvalidMove("unknown move kind %r" % (kind,))


def _apply_one_extension(g, m):
    if len(m.attachments) != 3:
        raise InvalidMove("1-extension needs exactly 3 attachments")
    if m.vertex is None or g.has_vertex(m.vertex):
        raise InvalidMove("new vertex id missing or not fresh")
    edge_targets = [a[1] for a in m.attachments if a[0] == "edge"]
    loop_ids = [a[1] for a in m.attachments if a[0] == "loop"]
    if len(edge_targets) + len(loop_ids) != 3:
        raise InvalidMove("attachments must be edges or loops")
    if len(set(edge_targets)) != len(edge_targets):
        raise InvalidMove("parallel edges at the new vertex")
    for w in edge_targets:
        if not g.has_vertex(w):
            raise InvalidMove("attachment to unknown vertex %r" % (w,))
    for lid in loop_ids:
        if lid in g.loop_vertex:
            raise InvalidMove("loop id %r not fresh" % (lid,))
    if len(set(loop_ids)) != len(loop_ids):
        raise InvalidMove("duplicate new loop id")
    if m.kind == ONE_EXTENSION_EDGE:
        a, b = graphs.edge_key(*m.removed_edge)
        if not g.has_edge(a, b):
            raise InvalidMove("removed edge %r missing" % ((a, b),))
        if sorted(edge_targets).count(a) != 1 or sorted(edge_targets).count(b) != 1:
            raise InvalidMove("each removed-edge endpoint needs one new edge")
        out = g.remove_element(graphs.edge_element(a, b))
    else:
        if m.removed_loop not in g.loop_vertex:
            raise InvalidMove("removed loop %r missing" % (m.removed_loop,))
        w = g.loop_vertex[m.removed_loop]
        if edge_targets.count(w) != 1:
            raise InvalidMove("removed loop's vertex needs exactly one new edge")
        if not loop_ids:
            raise InvalidMove("loop variant needs a new loop at the new vertex")
        out = g.remove_element(graphs.loop_element(m.removed_loop))
    out = out.add_vertex(m.vertex)
    for w in edge_targets:
        out = out.add_edge(m.vertex, w)
    for lid in loop_ids:
        out = out.add_loop(lid, m.vertex)
    return out


def apply_move(g, m):
    try:
        if m.kind == ADD_EDGE:
            if not (g.has_vertex(m.u) and g.has_vertex(m.v)):
                raise InvalidMove("edge endpoint unknown")
            if m.u == m.v or g.has_edge(m.u, m.v):
                raise InvalidMove("edge %r illegal" % ((m.u, m.v),))
            return g.add_edge(m.u, m.v)
        if m.kind == ADD_LOOP:
            if not g.has_vertex(m.at):
                raise InvalidMove("loop vertex unknown")
            if m.loop_id in g.loop_vertex:
                raise InvalidMove("loop id %r not fresh" % (m.loop_id,))
            return g.add_loop(m.loop_id, m.at)
        if m.kind == K4_EXTENSION:
            if not g.has_edge(m.u, m.v):
                raise InvalidMove("edge %r missing" % ((m.u, m.v),))
            a, b = m.new_vertices
            if a == b or g.has_vertex(a) or g.has_vertex(b):
                raise InvalidMove("new vertices must be fresh and distinct")
            out = g.remove_element(graphs.edge_element(m.u, m.v))
            out = out.add_vertex(a).add_vertex(b)
            for x, y in ((m.u, a), (m.u, b), (m.v, a), (m.v, b), (a, b)):
                out = out.add_edge(x, y)
            return out
        if m.kind in (ONE_EXTENSION_EDGE, ONE_EXTENSION_LOOP):
            return _apply_one_extension(g, m)
    except InvalidMove:
        raise
    except Exception as exc:  # normalize any structural failure
        raise InvalidMove(str(exc)) from exc
    raise InvalidMove("unknown move kind %r" % (m.kind,))


# -- reductions ---------------------------------------------------------


def node_choices(g, v):
    """Legal replacement elements for a 1-reduction at the node v.

    Three distinct neighbors: an absent edge between two of them.  Two
    neighbors and a loop at v: their absent edge, or a loop at either.
    One neighbor and two loops: a loop at it.  Pure-loop nodes admit no
    reduction.  Edge choices come before loop choices, each group in
    descending order.
    """
    prof = g.degree_profile(v)
    if not prof.is_node:
        raise NotANode(v)
    nbrs = sorted(g.neighbors(v))
    nloops = len(g.loops_at(v))
    choices = []
    if nloops == 0:
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                if not g.has_edge(nbrs[i], nbrs[j]):
                    choices.append(("edge", (nbrs[i], nbrs[j])))
    elif nloops == 1 and len(nbrs) == 2:
        if not g.has_edge(nbrs[0], nbrs[1]):
            choices.append(("edge", (nbrs[0], nbrs[1])))
        choices.extend(("loop", w) for w in nbrs)
    elif nloops == 2 and len(nbrs) == 1:
        choices.append(("loop", nbrs[0]))
    edges = sorted((c for c in choices if c[0] == "edge"), reverse=True)
    loops = sorted((c for c in choices if c[0] == "loop"), reverse=True)
    return edges + loops


def _reduce(g, v, choice):
    """Perform the reduction; returns (graph, added element)."""
    if choice not in node_choices(g, v):
        raise IllegalChoice(choice)
    out = g.remove_vertices((v,))
    if choice[0] == "edge":
        a, b = choice[1]
        return out.add_edge(a, b), graphs.edge_element(a, b)
    lid = graphs.fresh_id("l", set(out.loop_vertex) | set(g.loop_vertex))
    return out.add_loop(lid, choice[1]), graphs.loop_element(lid)


def one_reduction(g, v, choice):
    """Remove the node v and add the replacement element named by choice.

    choice is ("edge", (a, b)) or ("loop", at).
    """
    return _reduce(g, v, choice)[0]


def _is_element(target):
    return isinstance(target, tuple) and target and target[0] in ("edge", "loop")


def is_admissible(g, target):
    """Whether deleting the element, or 1-reducing the node, can leave a
    matroid-connected graph.  Returns (bool, witness choice or None).
    """
    if not matroid._mlc_ok(g):
        raise NotMlcConnected()
    if _is_element(target):
        return matroid._mlc_ok(g.remove_element(target)), None
    for choice in node_choices(g, target):
        if matroid._mlc_ok(one_reduction(g, target, choice)):
            return True, choice
    return False, None


def is_feasible(g, target):
    """Admissibility plus balance of the reduced graph."""
    if not g.is_balanced(2) or not matroid._mlc_ok(g):
        raise PreconditionFailed("graph must be balanced and matroid-connected")
    if _is_element(target):
        reduced = g.remove_element(target)
        return matroid._mlc_ok(reduced) and reduced.is_balanced(2), None
    for choice in node_choices(g, target):
        reduced = one_reduction(g, target, choice)
        if matroid._mlc_ok(reduced) and reduced.is_balanced(2):
            return True, choice
    return False, None


@dataclass(frozen=True)
class FoundMove:
    move: Move  # forward move rebuilding g from reduced
    reduced: graphs.LoopedSimpleGraph


def _forward_extension(g, v, choice, added):
    """The 1-extension taking the reduced graph back to g."""
    attachments = tuple(("edge", w) for w in sorted(g.neighbors(v)))
    attachments += tuple(("loop", lid) for lid in g.loops_at(v))
    if choice[0] == "edge":
        return Move(
            ONE_EXTENSION_EDGE,
            removed_edge=choice[1],
            vertex=v,
            attachments=attachments,
        )
    return Move(
        ONE_EXTENSION_LOOP,
        removed_loop=added[1],
        vertex=v,
        attachments=attachments,
    )


def _nodes(g):
    return [v for v in g.vertices if g.degree_profile(v).is_node]


def _scan(g, keep):
    """First element deletion or node reduction whose result passes keep."""
    for f in g.elements:
        reduced = g.remove_element(f)
        if keep(reduced):
            if f[0] == "edge":
                move = Move(ADD_EDGE, u=f[1], v=f[2])
            else:
                move = Move(ADD_LOOP, at=g.loop_vertex[f[1]], loop_id=f[1])
            return FoundMove(move, reduced)
    for v in _nodes(g):
        for choice in node_choices(g, v):
            reduced, added = _reduce(g, v, choice)
            if keep(reduced):
                return FoundMove(_forward_extension(g, v, choice, added), reduced)
    return None


def find_feasible_move(g):
    """A feasible deletion or reduction, as the forward move plus the
    reduced graph.  Guaranteed to exist away from the base graph.
    """
    if graphs.is_base_graph(g):
        raise PreconditionFailed("already the base graph")
    if not g.is_balanced(2) or not matroid._mlc_ok(g):
        raise PreconditionFailed("graph must be balanced and matroid-connected")
    found = _scan(g, lambda r: matroid._mlc_ok(r) and r.is_balanced(2))
    if found is None:
        raise ExhaustionBug("no feasible move on a qualifying graph")
    return found


def find_general_move(g):
    """A move preserving rigid + matroid-connected, allowing K4-reduction
    of a minimal loopless 2-sum side.
    """
    if graphs.is_base_graph(g):
        raise PreconditionFailed("already the base graph")
    if not matroid.is_rigid(g) or not matroid._mlc_ok(g):
        raise PreconditionFailed("graph must be rigid and matroid-connected")
    found = _scan(g, matroid._mlc_ok)
    if found is not None:
        return found
    for split in analysis.two_sum_decompose(g):
        p2 = split.part2
        if len(p2.vertices) == 4 and len(p2.edges) == 6 and not p2.loops:
            inner = tuple(sorted(set(p2.vertices) - set(split.hinge)))
            move = Move(
                K4_EXTENSION, u=split.hinge[0], v=split.hinge[1], new_vertices=inner
            )
            return FoundMove(move, split.part1)
    raise ExhaustionBug("no admissible move on a qualifying graph")


@dataclass(frozen=True)
class ConstructionSequence:
    base: graphs.LoopedSimpleGraph
    moves: tuple = field(default_factory=tuple)

    def to_json_dict(self):
        return {
            "base": self.base.to_json_dict(),
            "moves": [m.to_json_dict() for m in self.moves],
        }


def sequence_from_json_dict(d):
    return ConstructionSequence(
        graphs.from_json_dict(d["base"]),
        tuple(move_from_json_dict(m) for m in d.get("moves", [])),
    )


def replay(seq):
    """Apply the moves from the base; every prefix stays well-formed."""
    g = seq.base
    if not graphs.is_base_graph(g):
        raise InvalidMove("base must be a single vertex with three loops")
    for i, m in enumerate(seq.moves):
        try:
            g = apply_move(g, m)
        except InvalidMove as exc:
            raise InvalidMove("move %d: %s" % (i, exc)) from exc
    return g


BALANCED = "balanced"
GENERAL = "general"


def deconstruct(g, mode=BALANCED):
    """A move sequence from the base graph whose replay rebuilds g.

    Balanced mode requires a balanced matroid-connected input and uses
    only additions and 1-extensions; general mode requires rigid and
    matroid-connected and may also invert K4-extensions.
    """
    if mode not in (BALANCED, GENERAL):
        raise PreconditionFailed("unknown mode %r" % (mode,))
    if mode == BALANCED:
        if not (g.is_balanced(2) and matroid._mlc_ok(g)):
            raise PreconditionFailed("graph must be balanced and matroid-connected")
        step = find_feasible_move
    else:
        if not (matroid.is_rigid(g) and matroid._mlc_ok(g)):
            raise PreconditionFailed("graph must be rigid and matroid-connected")
        step = find_general_move
    moves = []
    current = g
    while not graphs.is_base_graph(current):
        found = step(current)
        moves.append(found.move)
        current = found.reduced
    moves.reverse()
    return ConstructionSequence(current, tuple(moves))


def _random_move(g, rng, mode):
    """One random legal move; None when the sampled shape cannot fit."""
    kinds = [ADD_EDGE, ADD_LOOP, ONE_EXTENSION_EDGE, ONE_EXTENSION_LOOP]
    if mode == GENERAL:
        kinds.append(K4_EXTENSION)
    kind = rng.choice(kinds)
    taken = set(g.vertices)
    new_v = graphs.fresh_id("v", taken)
    lid1 = graphs.fresh_id("l", set(g.loop_vertex))
    lid2 = graphs.fresh_id("l", set(g.loop_vertex) | {lid1})
    if kind == ADD_EDGE:
        absent = [
            (u, v)
            for i, u in enumerate(g.vertices)
            for v in g.vertices[i + 1 :]
            if not g.has_edge(u, v)
        ]
        if not absent:
            return None
        u, v = rng.choice(absent)
        return Move(ADD_EDGE, u=u, v=v)
    if kind == ADD_LOOP:
        return Move(ADD_LOOP, at=rng.choice(g.vertices), loop_id=lid1)
    if kind == K4_EXTENSION:
        if not g.edges:
            return None
        u, v = rng.choice(g.edges)
        return Move(
            K4_EXTENSION,
            u=u,
            v=v,
            new_vertices=(new_v, graphs.fresh_id("v", taken | {new_v})),
        )
    if kind == ONE_EXTENSION_EDGE:
        if not g.edges:
            return None
        a, b = rng.choice(g.edges)
        others = [w for w in g.vertices if w not in (a, b)]
        third = [("loop", lid1)] + [("edge", w) for w in others]
        return Move(
            ONE_EXTENSION_EDGE,
            removed_edge=(a, b),
            vertex=new_v,
            attachments=(("edge", a), ("edge", b), rng.choice(third)),
        )
    if not g.loops:
        return None
    removed = rng.choice(g.loops)[0]
    w = g.loop_vertex[removed]
    others = [x for x in g.vertices if x != w]
    third = [("loop", lid2)] + [("edge", x) for x in others]
    return Move(
        ONE_EXTENSION_LOOP,
        removed_loop=removed,
        vertex=new_v,
        attachments=(("edge", w), ("loop", lid1), rng.choice(third)),
    )


def random_construct(n_moves, mode=BALANCED, seed=0):
    """A random legal sequence of n_moves moves, deterministic per seed.

    Each sampled move is verified to keep the mode's invariants
    (balanced + matroid-connected, or rigid + matroid-connected) and is
    rejection-sampled otherwise.
    """
    rng = random.Random(seed)
    g = graphs.k1_with_three_loops()
    moves = []
    base = g
    while len(moves) < n_moves:
        for _ in range(200):
            m = _random_move(g, rng, mode)
            if m is None:
                continue
            try:
                g2 = apply_move(g, m)
            except InvalidMove:
                continue
            if mode == BALANCED:
                ok = g2.is_balanced(2) and matroid._mlc_ok(g2)
            else:
                ok = matroid.is_rigid(g2) and matroid._mlc_ok(g2)
            if ok:
                g = g2
                moves.append(m)
                break
        else:
            raise ExhaustionBug("could not sample a legal move")
    return ConstructionSequence(base, tuple(moves))
