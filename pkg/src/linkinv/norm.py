"""The polyhedral norm determined by a Newton polyhedron.

The norm of a class phi against a polynomial p is the width of the support
of p in the direction phi: max phi(g - h) over support points g, h.  Its
unit ball is the polar dual of the difference body of the Newton
polyhedron.  Classes in the open cone over a top-dimensional ball face are
recognized by their dual vertex, the unique support maximizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from . import polytope
from .polytope import Polytope, _as_point, _dot, _nullspace


@dataclass(frozen=True)
class DualVertexResult:
    """Outcome of maximizing a class over the Newton polyhedron's vertices.

    kind is "unique" (strict maximizer), "boundary" (tie between two or
    more vertices) or "zero" (the zero class); vertices holds the
    maximizer(s) as integer exponent vectors.
    """

    kind: str
    vertices: tuple

    @classmethod
    def unique(cls, v):
        return cls("unique", (tuple(v),))

    @classmethod
    def boundary(cls, vs):
        return cls("boundary", tuple(sorted(tuple(v) for v in vs)))

    @classmethod
    def zero(cls):
        return cls("zero", ())

    def is_unique(self):
        return self.kind == "unique"

    @property
    def vertex(self):
        if self.kind != "unique":
            raise ValueError(f"dual vertex is not unique: {self.kind}")
        return self.vertices[0]


@dataclass(frozen=True)
class NormBall:
    """Unit ball data of the polytope norm of a polynomial.

    ball is the bounded section of the unit ball inside the span of the
    difference body; recession lists primitive directions of norm zero
    (empty when the norm is a genuine norm, in which case ball is the full
    unit ball).
    """

    ball: Polytope
    newton: Polytope
    difference: Polytope
    recession: tuple

    def contains(self, phi):
        """Membership in the true unit ball: phi(d) <= 1 on the difference body."""
        phi = _as_point(phi)
        return all(_dot(phi, d) <= 1 for d in self.difference.vertices)


def newton_polytope(p):
    """Convex hull of the exponent vectors of the support of p."""
    if p.is_zero():
        raise ValueError("zero polynomial has no Newton polytope")
    return polytope.hull(p.support())


def poly_norm(p, phi):
    """max over support points g, h of phi(g - h); exact and nonnegative."""
    if p.is_zero():
        raise ValueError("zero polynomial has no norm")
    phi = _as_point(phi)
    if len(phi) != p.arity:
        raise ValueError("class length must equal polynomial arity")
    values = [_dot(phi, g) for g in p.support()]
    return max(values) - min(values)


def unit_ball(p):
    """Polar dual of the difference body, with degenerate directions flagged."""
    newton = newton_polytope(p)
    diff = polytope.difference_body(newton)
    ambient = p.arity
    if diff.dim == ambient:
        ball = polytope.polar_dual(diff)
        recession = ()
    else:
        # Norm-zero directions: the orthogonal complement of span(diff).
        span_dirs = [v for v in diff.vertices if any(v)]
        recession = tuple(_nullspace(span_dirs, ambient)) if span_dirs else tuple(
            _nullspace([], ambient)
        )
        ball = _polar_in_span(diff, ambient)
    return NormBall(ball=ball, newton=newton, difference=diff, recession=recession)


def _polar_in_span(diff, ambient):
    """Polar of a degenerate symmetric body taken inside its own span."""
    if diff.dim == 0:
        return polytope.hull([(Fraction(0),) * ambient])
    # Work in coordinates of span(diff): basis from vertex directions.
    dirs = []
    for v in diff.vertices:
        if polytope._rank(dirs + [v]) > len(dirs):
            dirs.append(v)
    reduced = [polytope._solve_in_span(dirs, v) for v in diff.vertices]
    sub = polytope.hull(reduced)
    polar = polytope.polar_dual(sub)
    # Lift polar vertices back: y in reduced coords represents the ambient
    # functional sum y_j g_j with g_j the dual basis rows; equivalently the
    # unique vector in span(dirs) pairing correctly with every direction.
    k = len(dirs)
    gram = [[_dot(dirs[i], dirs[j]) for j in range(k)] for i in range(k)]
    lifted = []
    for y in polar.vertices:
        aug = [list(map(Fraction, gram[i])) + [y[i]] for i in range(k)]
        ech, pivots = polytope._echelon(aug)
        a = [Fraction(0)] * k
        for row, pc in zip(ech, pivots):
            a[pc] = row[k] / row[pc]
        lifted.append(
            tuple(sum(a[i] * dirs[i][t] for i in range(k)) for t in range(ambient))
        )
    return polytope.hull(lifted)


def dual_vertex(p, phi):
    """Strict maximizer of phi over the Newton polyhedron's vertices, or the tie set."""
    phi = _as_point(phi)
    if len(phi) != p.arity:
        raise ValueError("class length must equal polynomial arity")
    if not any(phi):
        return DualVertexResult.zero()
    newton = newton_polytope(p)
    values = [(_dot(phi, v), v) for v in newton.vertices]
    top = max(s for s, _ in values)
    winners = [tuple(int(c) for c in v) for s, v in values if s == top]
    if len(winners) == 1:
        return DualVertexResult.unique(winners[0])
    return DualVertexResult.boundary(winners)


def in_cone_over_face(p, phi, v):
    """phi lies in the open cone over the top-dimensional ball face dual to v."""
    v = tuple(int(c) for c in v)
    newton = newton_polytope(p)
    if _as_point(v) not in newton.vertices:
        raise ValueError(f"{v} is not a vertex of the Newton polytope")
    result = dual_vertex(p, phi)
    return result.is_unique() and result.vertex == v


def chi_complexity(component_eulers):
    """Sum of -chi over the components of negative Euler characteristic."""
    return sum(-chi for chi in component_eulers if chi < 0)


def subspace_restriction_check(p):
    """Whether the unit ball is the product of its t = 0 slice and [-1/2, 1/2].

    The slice of the ball by the hyperplane orthogonal to the last variable
    equals the polar of the projected difference body (section of a polar is
    the polar of the projection), which is how it is computed here.
    Returns (verdict, report); the report carries both H-representations.
    """
    if p.arity != 4:
        raise ValueError("product check requires arity 4 (variables x, y, z, t)")
    axis = (0, 0, 0, 1)
    report = {}
    t_norm = poly_norm(p, axis)
    report["t_norm"] = t_norm
    if t_norm == 0:
        report["degenerate"] = "norm vanishes on the t direction; no interval factor"
        return False, report
    nb = unit_ball(p)
    if nb.recession:
        report["degenerate"] = "unit ball is unbounded in norm-zero directions"
        return False, report
    ball = nb.ball
    # Slice at t = 0 via duality: polar of the projection of the difference body.
    projected = {v[:3] for v in nb.difference.vertices}
    diff3 = polytope.hull(projected)
    if diff3.dim < 3:
        report["degenerate"] = "slice of the ball is not 3-dimensional"
        return False, report
    slice3 = polytope.polar_dual(diff3)
    embedded = polytope.hull(
        [tuple(v) + (Fraction(0),) for v in slice3.vertices]
    )
    prism = polytope.product_with_segment(embedded, axis, Fraction(1, 2))
    verdict = polytope.polytope_equal(prism, ball)
    report["ball_vertices"] = len(ball.vertices)
    report["ball_facets"] = [
        " ".join(map(str, n)) + f" <= {c}" for n, c in ball.facets
    ]
    report["product_facets"] = [
        " ".join(map(str, n)) + f" <= {c}" for n, c in prism.facets
    ]
    report["slice_vertices"] = len(slice3.vertices)
    return verdict, report


@dataclass(frozen=True)
class FiberedClass:
    """A class the literature asserts to be fibered, with its dual vertex."""

    cohomology_class: tuple
    dual_vertex: tuple
    note: str


def fibered_annotations():
    """The bundled list of known fibered classes of the four-component link.

    Pure data: fiberedness is never decided computationally here, since it
    needs 3-manifold input beyond the polynomial.
    """
    text = resources.files("linkinv.data").joinpath("fibered_classes.txt").read_text()
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 2)
        cls = tuple(int(v) for v in parts[0].split(","))
        dv = tuple(int(v) for v in parts[1].split(","))
        note = parts[2] if len(parts) > 2 else ""
        out.append(FiberedClass(cls, dv, note))
    return tuple(out)
