"""Exact rational convex polytopes in low dimension.

Hulls are computed by brute-force facet enumeration over exact arithmetic:
every dim-subset of the input points is tested as a supporting hyperplane.
Lower-dimensional hulls are handled by first computing the affine hull and
recursing in reduced coordinates.  No floating point appears anywhere.

A polytope stores its vertices (V-representation), the facet halfspaces of
its affine hull (H-representation) and the affine-hull equations; all are
derived once at construction, so instances are immutable and freely
shareable across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd as _igcd


def _frac(v):
    return v if isinstance(v, Fraction) else Fraction(v)


def _as_point(seq):
    return tuple(_frac(v) for v in seq)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _canon_halfspace(normal, offset):
    """Scale (normal, offset) by a positive rational so entries are coprime ints."""
    denom = 1
    for v in list(normal) + [offset]:
        denom = denom * _frac(v).denominator // _igcd(denom, _frac(v).denominator)
    ints = [int(v * denom) for v in normal]
    off = int(_frac(offset) * denom)
    g = 0
    for v in ints + [off]:
        g = _igcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
        off = off // g
    return tuple(ints), Fraction(off)


def _int_det(m):
    """Determinant of a small integer matrix by cofactor expansion."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0
    for j, a in enumerate(m[0]):
        if a:
            sub = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * a * _int_det(sub)
    return total


def _cofactor_normal(rows):
    """Integer normal to the span of (d-1) integer row vectors in d-space."""
    d = len(rows[0]) if rows else 1
    normal = []
    for i in range(d):
        sub = [row[:i] + row[i + 1:] for row in rows]
        normal.append((-1) ** i * _int_det(sub))
    return tuple(normal)


def _echelon(rows):
    """Row-echelon form over the rationals; returns (rows, pivot columns)."""
    rows = [list(map(_frac, r)) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / pr[c]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _rank(rows):
    if not rows:
        return 0
    return len(_echelon(rows)[0])


def _nullspace(rows, dim):
    """Basis of {v : row . v = 0 for all rows}, as primitive integer vectors."""
    if not rows:
        rows = [[Fraction(0)] * dim]
    ech, pivots = _echelon(rows)
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * dim
        v[fc] = Fraction(1)
        for row, pc in zip(ech, pivots):
            v[pc] = -row[fc] / row[pc]
        n, _ = _canon_halfspace(v, Fraction(0))
        basis.append(n)
    return basis


def _solve_in_span(basis, target):
    """Coordinates of target in span(basis); basis is linearly independent."""
    dim = len(target)
    k = len(basis)
    aug = [[basis[j][i] for j in range(k)] + [target[i]] for i in range(dim)]
    ech, pivots = _echelon(aug)
    coords = [Fraction(0)] * k
    for row, pc in zip(ech, pivots):
        if pc == k:
            raise ValueError("target not in span")
        coords[pc] = row[k] / row[pc]
    return tuple(coords)


@dataclass(frozen=True)
class Face:
    """A face of a polytope: the maximizer set of a supporting functional."""

    functional: tuple
    vertices: tuple
    dim: int


class Polytope:
    """Immutable exact polytope with both V- and H-representations."""

    __slots__ = ("_ambient", "_vertices", "_facets", "_equations", "_dim")

    def __init__(self, ambient, vertices, facets, equations, dim):
        object.__setattr__(self, "_ambient", ambient)
        object.__setattr__(self, "_vertices", tuple(sorted(vertices)))
        object.__setattr__(self, "_facets", tuple(sorted(facets)))
        object.__setattr__(self, "_equations", tuple(sorted(equations)))
        object.__setattr__(self, "_dim", dim)

    def __setattr__(self, name, value):
        raise AttributeError("Polytope is immutable")

    @property
    def ambient_dim(self):
        return self._ambient

    @property
    def vertices(self):
        return self._vertices

    @property
    def facets(self):
        """Halfspaces (integer normal, rational offset): normal . x <= offset."""
        return self._facets

    @property
    def equations(self):
        """Affine-hull equalities (integer normal, rational offset)."""
        return self._equations

    @property
    def dim(self):
        """Intrinsic (affine-hull) dimension."""
        return self._dim

    def num_vertices(self):
        return len(self._vertices)

    def num_facets(self):
        return len(self._facets)

    def contains(self, point):
        point = _as_point(point)
        if len(point) != self._ambient:
            raise ValueError("dimension mismatch")
        for n, c in self._equations:
            if _dot(n, point) != c:
                return False
        return all(_dot(n, point) <= c for n, c in self._facets)

    def is_centrally_symmetric(self):
        vs = set(self._vertices)
        return all(tuple(-x for x in v) in vs for v in vs)

    def scaled(self, k):
        """Dilate by a positive rational factor about the origin."""
        k = _frac(k)
        if k <= 0:
            raise ValueError("scale factor must be positive")
        return Polytope(
            self._ambient,
            [tuple(k * x for x in v) for v in self._vertices],
            [(n, k * c) for n, c in self._facets],
            [(n, k * c) for n, c in self._equations],
            self._dim,
        )

    def __repr__(self):
        return (
            f"<Polytope dim {self._dim} in R^{self._ambient}: "
            f"{len(self._vertices)} vertices, {len(self._facets)} facets>"
        )


def hull(points):
    """Convex hull of a nonempty point set, with exact V- and H-representations."""
    pts = [_as_point(p) for p in points]
    if not pts:
        raise ValueError("hull of an empty point set")
    ambient = len(pts[0])
    if any(len(p) != ambient for p in pts):
        raise ValueError("dimension mismatch among input points")
    pts = sorted(set(pts))
    p0 = pts[0]

    # Greedy affinely independent basis, in sorted point order for determinism.
    basis = []
    for p in pts[1:]:
        v = tuple(a - b for a, b in zip(p, p0))
        if _rank(basis + [v]) > len(basis):
            basis.append(v)
    d = len(basis)

    equations = [
        (n, Fraction(_dot(n, p0))) for n in _nullspace(basis, ambient)
    ]

    if d == 0:
        return Polytope(ambient, [p0], [], equations, 0)

    # Reduced integer coordinates in the affine hull.
    reduced = [_solve_in_span(basis, tuple(a - b for a, b in zip(p, p0))) for p in pts]
    scale = 1
    for y in reduced:
        for c in y:
            scale = scale * c.denominator // _igcd(scale, c.denominator)
    ipts = [tuple(int(c * scale) for c in y) for y in reduced]

    facets_red = _enumerate_facets(ipts, d)

    # A point is a vertex iff its active facet normals span the reduced space.
    vertices = []
    for idx, y in enumerate(ipts):
        active = [n for n, c in facets_red if _dot(n, y) == c]
        if len(active) >= d and _rank(active) == d:
            vertices.append(pts[idx])
    if d == 1:
        # In one reduced dimension the two facets are single coordinates.
        vertices = [pts[idx] for idx, y in enumerate(ipts)
                    if any(_dot(n, y) == c for n, c in facets_red)]

    facets = [_lift_facet(n, c, basis, p0, scale, ambient) for n, c in facets_red]
    return Polytope(ambient, vertices, facets, equations, d)


def _enumerate_facets(ipts, d):
    """All supporting hyperplanes through d of the integer points."""
    found = {}
    m = len(ipts)
    for combo in combinations(range(m), d):
        base = ipts[combo[0]]
        rows = [
            [ipts[c][i] - base[i] for i in range(d)] for c in combo[1:]
        ]
        normal = _cofactor_normal(rows)
        if not any(normal):
            continue
        offset = _dot(normal, base)
        above = below = False
        for p in ipts:
            s = _dot(normal, p)
            if s > offset:
                above = True
            elif s < offset:
                below = True
            if above and below:
                break
        if above and below:
            continue
        if not above:
            key = _canon_halfspace(normal, Fraction(offset))
        else:
            key = _canon_halfspace(tuple(-v for v in normal), Fraction(-offset))
        found[key] = True
    return [(n, c) for n, c in found]


def _lift_facet(n_red, c_red, basis, p0, scale, ambient):
    """Express a reduced-coordinate facet as an ambient halfspace."""
    # Reduced coords y of x satisfy x = p0 + sum y_j basis_j, ints used y*scale.
    # Left inverse G of the basis matrix: rows g_j with g_j . basis_k = delta.
    k = len(basis)
    gram = [[_dot(basis[i], basis[j]) for j in range(k)] for i in range(k)]
    # Solve gram * a_j = e_j, then g_j = sum a_j[i] basis_i.
    n_amb = [Fraction(0)] * ambient
    for j in range(k):
        rhs = [Fraction(1) if i == j else Fraction(0) for i in range(k)]
        aug = [list(map(Fraction, gram[i])) + [rhs[i]] for i in range(k)]
        ech, pivots = _echelon(aug)
        a = [Fraction(0)] * k
        for row, pc in zip(ech, pivots):
            a[pc] = row[k] / row[pc]
        g_j = [sum(a[i] * basis[i][t] for i in range(k)) for t in range(ambient)]
        for t in range(ambient):
            n_amb[t] += n_red[j] * g_j[t]
    offset = Fraction(c_red, scale) + _dot(n_amb, p0)
    return _canon_halfspace(n_amb, offset)


def face_of(P, functional):
    """The face of P on which the functional is maximized."""
    functional = _as_point(functional)
    if len(functional) != P.ambient_dim:
        raise ValueError("functional dimension mismatch")
    values = [_dot(functional, v) for v in P.vertices]
    top = max(values)
    face_vertices = tuple(v for v, s in zip(P.vertices, values) if s == top)
    base = face_vertices[0]
    diffs = [tuple(a - b for a, b in zip(v, base)) for v in face_vertices[1:]]
    return Face(functional, face_vertices, _rank(diffs))


def _reduced_vertex_coords(P):
    """Integer coordinates of the vertices inside the affine hull of P."""
    vs = P.vertices
    p0 = vs[0]
    basis = []
    for p in vs[1:]:
        v = tuple(a - b for a, b in zip(p, p0))
        if _rank(basis + [v]) > len(basis):
            basis.append(v)
    reduced = [
        _solve_in_span(basis, tuple(a - b for a, b in zip(p, p0))) for p in vs
    ]
    scale = 1
    for y in reduced:
        for c in y:
            scale = scale * c.denominator // _igcd(scale, c.denominator)
    return [tuple(int(c * scale) for c in y) for y in reduced]


def _phase1_feasible(rows, rhs):
    """Exact feasibility of rows . x = rhs, x >= 0, via phase-1 simplex (Bland)."""
    m = len(rows)
    n = len(rows[0])
    tab = []
    for i in range(m):
        row = [_frac(v) for v in rows[i]]
        b = _frac(rhs[i])
        if b < 0:
            row = [-v for v in row]
            b = -b
        art = [Fraction(1) if j == i else Fraction(0) for j in range(m)]
        tab.append(row + art + [b])
    basis = [n + i for i in range(m)]
    width = n + m
    # Reduced cost of column j for min sum(artificials): z_j = sum of rows
    # where the basic variable is artificial.
    while True:
        enter = None
        for j in range(width):
            if j in basis:
                continue
            z = sum(tab[i][j] for i in range(m) if basis[i] >= n)
            cost = (Fraction(1) if j >= n else Fraction(0)) - z
            if cost < 0:
                enter = j
                break  # Bland: first improving column
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][width] / tab[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            break  # unbounded improving direction cannot happen in phase 1
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leave])]
        basis[leave] = enter
    infeasibility = sum(tab[i][width] for i in range(m) if basis[i] >= n)
    return infeasibility == 0


def _adjacent_lp(ipts, i, j):
    """Some functional is maximized over the points exactly on pair (i, j).

    Feasibility of: phi.(v - w) = 0 and phi.(v - u) >= 1 for all other
    points u, decided by exact linear programming with phi split into
    nonnegative parts and surplus variables.
    """
    d = len(ipts[0])
    v, w = ipts[i], ipts[j]
    others = [u for k, u in enumerate(ipts) if k not in (i, j)]
    nslack = len(others)
    rows = []
    rhs = []
    diff = [v[t] - w[t] for t in range(d)]
    rows.append(diff + [-x for x in diff] + [0] * nslack)
    rhs.append(0)
    for s, u in enumerate(others):
        duv = [v[t] - u[t] for t in range(d)]
        slack = [0] * nslack
        slack[s] = -1
        rows.append(duv + [-x for x in duv] + slack)
        rhs.append(1)
    return _phase1_feasible(rows, rhs)


def vertex_valence(P, v):
    """Number of edges of P incident to the vertex v.

    A vertex pair spans an edge iff some functional is maximized exactly on
    that pair, decided by exact linear programming over the vertex set.
    """
    v = _as_point(v)
    if v not in P.vertices:
        raise ValueError(f"{v} is not a vertex")
    if P.dim <= 0:
        return 0
    ipts = _reduced_vertex_coords(P)
    i = P.vertices.index(v)
    return sum(
        1 for j in range(len(ipts)) if j != i and _adjacent_lp(ipts, i, j)
    )


def edges(P):
    """All edges as pairs of vertices, by the same LP criterion as valences."""
    if P.dim <= 0:
        return ()
    ipts = _reduced_vertex_coords(P)
    out = []
    for i, j in combinations(range(len(ipts)), 2):
        if _adjacent_lp(ipts, i, j):
            out.append((P.vertices[i], P.vertices[j]))
    return tuple(out)


def vertex_facet_count(P, v):
    """Number of facets through v (the alternative reading of valence)."""
    v = _as_point(v)
    if v not in P.vertices:
        raise ValueError(f"{v} is not a vertex")
    return sum(1 for n, c in P.facets if _dot(n, v) == c)


def difference_body(P):
    """Hull of all differences of vertices of P; centrally symmetric.

    For a centrally symmetric P convexity forces P + P = 2P, so the body is
    the dilation by 2; otherwise the pairwise differences are hulled.
    """
    if P.is_centrally_symmetric():
        return P.scaled(2)
    diffs = set()
    for g in P.vertices:
        for h in P.vertices:
            diffs.add(tuple(a - b for a, b in zip(g, h)))
    return hull(diffs)


def polar_dual(P):
    """The polar body {phi : phi . p <= 1 on P}; involution on bodies with 0 inside."""
    if P.dim != P.ambient_dim:
        raise ValueError("origin not interior (polytope is not full-dimensional)")
    if any(c <= 0 for _, c in P.facets):
        raise ValueError("origin not interior")
    vertices = [tuple(Fraction(a) / c for a in n) for n, c in P.facets]
    facets = [_canon_halfspace(v, Fraction(1)) for v in P.vertices]
    return Polytope(P.ambient_dim, vertices, facets, [], P.ambient_dim)


def product_with_segment(Q, axis, halfwidth):
    """The prism Q x [-halfwidth, +halfwidth] along the given axis direction.

    Q must lie in the hyperplane through the origin orthogonal to axis.
    """
    axis = _as_point(axis)
    halfwidth = _frac(halfwidth)
    if len(axis) != Q.ambient_dim or not any(axis):
        raise ValueError("axis must be a nonzero vector of the ambient dimension")
    if halfwidth <= 0:
        raise ValueError("halfwidth must be positive")
    if any(_dot(axis, v) != 0 for v in Q.vertices):
        raise ValueError("polytope is not orthogonal to the axis")
    shift = tuple(halfwidth * a for a in axis)
    vertices = [tuple(x + s for x, s in zip(v, shift)) for v in Q.vertices]
    vertices += [tuple(x - s for x, s in zip(v, shift)) for v in Q.vertices]
    cap = _dot(axis, axis) * halfwidth
    facets = list(Q.facets)
    facets.append(_canon_halfspace(axis, cap))
    facets.append(_canon_halfspace(tuple(-a for a in axis), cap))
    # The affine hull gains the axis direction.
    p0 = Q.vertices[0]
    directions = [tuple(a - b for a, b in zip(v, p0)) for v in Q.vertices[1:]]
    directions.append(axis)
    equations = [
        (n, Fraction(_dot(n, p0))) for n in _nullspace(directions, Q.ambient_dim)
    ]
    return Polytope(Q.ambient_dim, vertices, facets, equations, Q.dim + 1)


def polytope_equal(P, Q):
    """Exact equality as sets of vertices."""
    if P.ambient_dim != Q.ambient_dim:
        raise ValueError("dimension mismatch")
    return set(P.vertices) == set(Q.vertices)


def _frac_str(q):
    q = _frac(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def to_text(P):
    """Serialize: header, vertex lines, facet lines; rationals printed as p/q."""
    lines = [f"polytope {P.ambient_dim}"]
    for v in P.vertices:
        lines.append("v " + " ".join(_frac_str(c) for c in v))
    for n, c in P.facets:
        lines.append("f " + " ".join(str(a) for a in n) + " " + _frac_str(c))
    return "\n".join(lines) + "\n"


def from_text(text):
    """Parse the to_text format; the hull is rebuilt from the vertex lines."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty polytope text")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "polytope":
        raise ValueError(f"bad polytope header: {lines[0]!r}")
    dim = int(header[1])
    points = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "v":
            if len(parts) != dim + 1:
                raise ValueError(f"bad vertex line: {ln!r}")
            points.append(tuple(Fraction(s) for s in parts[1:]))
        elif parts[0] != "f":
            raise ValueError(f"bad polytope line: {ln!r}")
    if not points:
        raise ValueError("polytope text has no vertices")
    return hull(points)
