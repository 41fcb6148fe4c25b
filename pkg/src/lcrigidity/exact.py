"""Exact linear algebra over rational realizations.

Rigidity matrices, equilibrium stresses (left null space vectors),
stress matrices with their ranks, randomized full-rank-stress
certificates, and reflection-based enumeration of all frameworks
equivalent to a generic one.  Everything downstream of the random
sampling is exact: coordinates are Fractions, elimination is
fraction-free over integers, and the optional prime-field rank backend
works modulo 2^61 - 1.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import analysis, graphs, matroid
from .errors import (
    DegenerateLine,
    LcRigidityError,
    NonzeroRequired,
    PreconditionFailed,
    UnboundElement,
)

MERSENNE_61 = (1 << 61) - 1


@dataclass(frozen=True)
class Realization:
    """Exact point map p on vertices and loop-normal map q on loops."""

    d: int
    p: dict  # vertex -> tuple of Fractions
    q: dict  # loop id -> tuple of Fractions

    def to_json_dict(self):
        return {
            "d": self.d,
            "p": {v: [str(x) for x in xs] for v, xs in self.p.items()},
            "q": {l: [str(x) for x in xs] for l, xs in self.q.items()},
        }


def realization_from_json_dict(data):
    d = int(data["d"])
    p = {v: tuple(Fraction(x) for x in xs) for v, xs in data["p"].items()}
    q = {l: tuple(Fraction(x) for x in xs) for l, xs in data["q"].items()}
    return Realization(d, p, q)


def sample_realization(g, d=2, seed=0, bits=32):
    """Random integer coordinates in (-2^bits, 2^bits), fixed per seed.

    Generic with high probability for every polynomial rank condition;
    loop normals are resampled until nonzero.
    """
    rng = random.Random(seed)
    hi = (1 << bits) - 1
    p = {v: tuple(Fraction(rng.randint(-hi, hi)) for _ in range(d)) for v in g.vertices}
    q = {}
    for lid, _ in g.loops:
        for _ in range(64):
            vec = tuple(Fraction(rng.randint(-hi, hi)) for _ in range(d))
            if any(vec):
                q[lid] = vec
                break
        else:
            raise NonzeroRequired("cannot draw a nonzero loop normal with bits=%d" % bits)
    return Realization(d, p, q)


@dataclass(frozen=True)
class RigidityMatrix:
    rows: tuple  # of tuples of Fractions, indexed like row_elements
    row_elements: tuple
    vertices: tuple
    d: int


def rigidity_matrix(g, r):
    """(|E|+|L|) x d|V| matrix: edge rows carry p(u)-p(v) against u and
    the negation against v; loop rows carry q in their vertex's block.
    """
    d = r.d
    for v in g.vertices:
        if v not in r.p:
            raise UnboundElement(v)
    for lid in g.loop_vertex:
        if lid not in r.q:
            raise UnboundElement(lid)
    col = {v: i * d for i, v in enumerate(g.vertices)}
    rows = []
    for element in g.elements:
        row = [Fraction(0)] * (d * len(g.vertices))
        if element[0] == "edge":
            u, v = element[1], element[2]
            for k in range(d):
                diff = r.p[u][k] - r.p[v][k]
                row[col[u] + k] = diff
                row[col[v] + k] = -diff
        else:
            w = g.loop_vertex[element[1]]
            for k in range(d):
                row[col[w] + k] = r.q[element[1]][k]
        rows.append(tuple(row))
    return RigidityMatrix(tuple(rows), g.elements, g.vertices, d)


# -- exact elimination --------------------------------------------------


def _integer_rows(rows):
    """Clear denominators per row; row scaling preserves rank and kernel."""
    out = []
    for row in rows:
        mult = 1
        for x in row:
            f = Fraction(x)
            if f.denominator != 1:
                mult = mult * f.denominator // gcd(mult, f.denominator)
        out.append([int(Fraction(x) * mult) for x in row])
    return out


def _bareiss_rank(rows):
    """Rank by fraction-free elimination; rows is a list of int lists,
    destroyed in place.
    """
    if not rows or not rows[0]:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    prev = 1
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, nrows):
            ric = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            for j in range(c, ncols):
                row_i[j] = (pivot * row_i[j] - ric * row_r[j]) // prev
        prev = pivot
        r += 1
        if r == nrows:
            break
    return r


def _rank_mod_p(rows, p, rng):
    rows = [[x % p for x in row] for row in rows]
    rng.shuffle(rows)
    if not rows or not rows[0]:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def matrix_rank(m, field="rational", seed=0, trials=2):
    """Exact rank.  field="prime" evaluates modulo 2^61 - 1 at least
    twice with shuffled row orders and accepts on agreement; the modular
    rank never exceeds the rational one.
    """
    rows = m.rows if isinstance(m, RigidityMatrix) else m
    ints = _integer_rows(rows)
    if field == "prime":
        rng = random.Random(seed)
        ranks = {
            _rank_mod_p(ints, MERSENNE_61, rng) for _ in range(max(2, trials))
        }
        if len(ranks) == 1:
            return ranks.pop()
        return max(ranks)
    return _bareiss_rank(ints)


def _left_nullspace(rows):
    """Exact basis of {y : y M = 0} for a matrix given as Fraction rows."""
    if not rows:
        return []
    ncols = len(rows[0])
    transposed = [[rows[i][j] for i in range(len(rows))] for j in range(ncols)]
    return _right_nullspace(transposed)


def _right_nullspace(rows):
    """Exact basis of {x : M x = 0}; integer echelon then back-substitution."""
    if not rows:
        return []
    ncols = len(rows[0])
    m = _integer_rows(rows)
    nrows = len(m)
    prev = 1
    pivots = []  # (row, col)
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pivot = m[r][c]
        for i in range(r + 1, nrows):
            ric = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c, ncols):
                row_i[j] = (pivot * row_i[j] - ric * row_r[j]) // prev
        prev = pivot
        pivots.append((r, c))
        r += 1
        if r == nrows:
            break
    pivot_cols = {c for _, c in pivots}
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for ri, ci in reversed(pivots):
            s = sum((Fraction(m[ri][j]) * x[j] for j in range(ci + 1, ncols)), Fraction(0))
            x[ci] = -s / m[ri][ci]
        basis.append(tuple(_normalize_vector(x)))
    return basis


def _normalize_vector(xs):
    """Clear denominators, divide by the gcd, make the first nonzero positive."""
    mult = 1
    for x in xs:
        if x.denominator != 1:
            mult = mult * x.denominator // gcd(mult, x.denominator)
    ints = [int(x * mult) for x in xs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return [Fraction(v) for v in ints]


# -- stresses -----------------------------------------------------------


@dataclass(frozen=True)
class Stress:
    """Edge scalars omega and loop scalars lam."""

    omega: dict  # (u, v) -> Fraction
    lam: dict  # loop id -> Fraction

    def vector(self, g):
        out = []
        for element in g.elements:
            if element[0] == "edge":
                out.append(self.omega[element[1:]])
            else:
                out.append(self.lam[element[1]])
        return tuple(out)

    def is_zero(self):
        return not any(self.omega.values()) and not any(self.lam.values())


def _stress_from_vector(g, vec):
    omega = {}
    lam = {}
    for element, x in zip(g.elements, vec):
        if element[0] == "edge":
            omega[element[1:]] = Fraction(x)
        else:
            lam[element[1]] = Fraction(x)
    return Stress(omega, lam)


def zero_stress(g):
    return _stress_from_vector(g, [Fraction(0)] * len(g.elements))


def stress_basis(g, r):
    """Exact basis of the cokernel of the rigidity matrix, as stresses."""
    m = rigidity_matrix(g, r)
    return [_stress_from_vector(g, vec) for vec in _left_nullspace(list(m.rows))]


def is_infinitesimally_rigid(g, r):
    return matrix_rank(rigidity_matrix(g, r)) == r.d * len(g.vertices)


@dataclass(frozen=True)
class StressMatrixReport:
    vertices: tuple
    loop_ids: tuple
    omega_matrix: tuple  # |V| x |V|, symmetric, zero row sums
    lambda_matrix: tuple  # |V| x |L|
    rank: int  # rank of the omega matrix
    residual: tuple  # d x |V| value of P.Omega + Q.Lambda, or None


def stress_matrix(g, s, realization=None):
    """Assemble the stress matrix and its loop companion.

    Off-diagonal (i, j) is -omega_ij, diagonals make row sums vanish.
    When a realization is supplied the equilibrium residual
    P.Omega + Q.Lambda is evaluated exactly as well.
    """
    vs = g.vertices
    idx = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    omega = [[Fraction(0)] * n for _ in range(n)]
    for (u, v), w in s.omega.items():
        i, j = idx[u], idx[v]
        omega[i][j] -= w
        omega[j][i] -= w
        omega[i][i] += w
        omega[j][j] += w
    loop_ids = tuple(lid for lid, _ in g.loops)
    lam = [[Fraction(0)] * len(loop_ids) for _ in range(n)]
    for k, lid in enumerate(loop_ids):
        lam[idx[g.loop_vertex[lid]]][k] = s.lam[lid]
    rank_omega = matrix_rank([row[:] for row in omega])
    residual = None
    if realization is not None:
        d = realization.d
        res = [[Fraction(0)] * n for _ in range(d)]
        for k in range(d):
            for j in range(n):
                acc = Fraction(0)
                for i, v in enumerate(vs):
                    acc += realization.p[v][k] * omega[i][j]
                for li, lid in enumerate(loop_ids):
                    acc += realization.q[lid][k] * lam[j][li]
                res[k][j] = acc
        residual = tuple(tuple(row) for row in res)
    return StressMatrixReport(
        vs,
        loop_ids,
        tuple(tuple(row) for row in omega),
        tuple(tuple(row) for row in lam),
        rank_omega,
        residual,
    )


def max_rank_stress(g, r, trials=50, seed=0):
    """Random rational combinations of the stress basis, keeping the one
    whose stress matrix has the largest rank.  Rank |V| - 1 certifies
    global rigidity of the framework.
    """
    basis = stress_basis(g, r)
    n = len(g.vertices)
    if not basis:
        return zero_stress(g), 0
    vectors = [s.vector(g) for s in basis]
    rng = random.Random(seed)
    best = (zero_stress(g), -1)
    for _ in range(max(1, trials)):
        if len(vectors) == 1:
            coeffs = [1]
        else:
            coeffs = [rng.randint(-(1 << 16), 1 << 16) for _ in vectors]
            if not any(coeffs):
                coeffs[0] = 1
        combo = [
            sum(c * vec[i] for c, vec in zip(coeffs, vectors))
            for i in range(len(g.elements))
        ]
        s = _stress_from_vector(g, combo)
        rk = stress_matrix(g, s).rank
        if rk > best[1]:
            best = (s, rk)
        if best[1] >= n - 1 or len(vectors) == 1:
            break
    return best


# -- equivalence and enumeration ----------------------------------------


def _sq_dist(a, b):
    return sum((x - y) * (x - y) for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def verify_equivalent(g, r1, r2):
    """Exact equality of edge lengths (squared) and loop offsets."""
    if r1.d != r2.d:
        return False
    for lid in g.loop_vertex:
        if r1.q.get(lid) != r2.q.get(lid):
            return False
    for u, v in g.edges:
        if _sq_dist(r1.p[u], r1.p[v]) != _sq_dist(r2.p[u], r2.p[v]):
            return False
    for lid, w in g.loops:
        if _dot(r1.p[w], r1.q[lid]) != _dot(r2.p[w], r2.q[lid]):
            return False
    return True


def _rotation_between(d0, d1):
    """The rotation matrix taking direction d0 to d1, for |d0| = |d1|."""
    n0 = _dot(d0, d0)
    if n0 == 0:
        raise DegenerateLine("coincident hinge points; resample the realization")
    # complex multiplication by (d1 / d0)
    a = (d1[0] * d0[0] + d1[1] * d0[1]) / n0
    b = (d1[1] * d0[0] - d1[0] * d0[1]) / n0
    return ((a, -b), (b, a))


def _reflection_across(a, b):
    """Orthogonal reflection fixing the line through a and b."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    n = dx * dx + dy * dy
    if n == 0:
        raise DegenerateLine("coincident hinge points; resample the realization")
    return (
        ((dx * dx - dy * dy) / n, 2 * dx * dy / n),
        (2 * dx * dy / n, (dy * dy - dx * dx) / n),
    )


def _apply_affine(mat, origin, image, x):
    t = (x[0] - origin[0], x[1] - origin[1])
    return (
        image[0] + mat[0][0] * t[0] + mat[0][1] * t[1],
        image[1] + mat[1][0] * t[0] + mat[1][1] * t[1],
    )


def _enumerate_points(g, p):
    """All point maps reachable by reflecting minimal loopless 2-sum
    sides, recursively; the original p comes first.
    """
    if g.is_balanced(2):
        return [dict(p)]
    splits = analysis._unbalanced_splits(g, require_virtual_hinge=False)
    if not splits:
        raise LcRigidityError("unbalanced graph without separator structure")
    s = splits[0]
    u, v = s.hinge
    inner = [w for w in s.part2.vertices if w not in (u, v)]
    sub = _enumerate_points(s.part1, {w: p[w] for w in s.part1.vertices})
    out = []
    for pa in sub:
        rot = _rotation_between(
            (p[v][0] - p[u][0], p[v][1] - p[u][1]),
            (pa[v][0] - pa[u][0], pa[v][1] - pa[u][1]),
        )
        placed = {w: _apply_affine(rot, p[u], pa[u], p[w]) for w in inner}
        refl = _reflection_across(pa[u], pa[v])
        for flip in (False, True):
            full = dict(pa)
            for w in inner:
                x = placed[w]
                full[w] = _apply_affine(refl, pa[u], pa[u], x) if flip else x
            out.append(full)
    return out


def enumerate_equivalent(g, r):
    """All 2^{b(G)} frameworks equivalent to (G, p, q), exactly.

    Requires d = 2 and a rigid matroid-connected graph; every output is
    re-verified against the equivalence equations.
    """
    if r.d != 2:
        raise PreconditionFailed("enumeration is specific to d = 2")
    if not matroid.is_rigid(g) or not matroid._mlc_ok(g):
        raise PreconditionFailed("graph must be rigid and matroid-connected")
    points = _enumerate_points(g, r.p)
    out = []
    for p in points:
        cand = Realization(2, {v: tuple(p[v]) for v in g.vertices}, dict(r.q))
        if not verify_equivalent(g, r, cand):
            raise LcRigidityError("enumerated framework failed verification")
        out.append(cand)
    return out
