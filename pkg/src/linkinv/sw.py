"""Seiberg-Witten polynomial bookkeeping and the valence distinction.

The SW polynomial of the fibered 4-manifold built on the link is the
Alexander polynomial with every variable squared.  Basic classes are its
support points; the ones with coefficient +/-1 are the vertices of its
Newton polyhedron.  The canonical class attached to a fibered class is
twice the dual vertex, and two candidate canonical classes are told apart
by their valence as vertices of that polyhedron.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import laurent, norm, polytope


@dataclass(frozen=True)
class BasicClassReport:
    """Support points with coefficient +/-1, and the excluded others."""

    classes: tuple
    excluded: tuple

    def count(self):
        return len(self.classes)


@dataclass(frozen=True)
class CanonicalClassReport:
    """Canonical class of the structure induced by a fibered class."""

    source_class: tuple
    dual_vertex: tuple
    canonical_class: tuple
    valence: int


@dataclass(frozen=True)
class ValenceComparison:
    """Valences of two vertices of the SW Newton polyhedron."""

    vertex1: tuple
    valence1: int
    vertex2: tuple
    valence2: int

    @property
    def distinct(self):
        return self.valence1 != self.valence2


def sw_polynomial(delta):
    """The SW polynomial: every variable of the Alexander polynomial squared."""
    if delta.is_zero():
        raise ValueError("zero polynomial")
    return laurent.substitute_powers(delta, 2)


def basic_classes_unit_coeff(sw):
    """All support points with coefficient exactly +1 or -1, others listed apart."""
    classes = []
    excluded = []
    for exps, coeff in sw.terms():
        if coeff in (1, -1):
            classes.append((exps, coeff))
        else:
            excluded.append((exps, coeff))
    return BasicClassReport(classes=tuple(classes), excluded=tuple(excluded))


def canonical_class(delta, phi):
    """Twice the dual vertex of phi, with its valence in the SW Newton polytope.

    Only defined when phi has a unique dual vertex (a class in an open
    fibered cone); boundary or zero classes raise.
    """
    result = norm.dual_vertex(delta, phi)
    if not result.is_unique():
        raise ValueError(
            f"canonical class undefined: dual vertex is {result.kind}"
        )
    v = result.vertex
    doubled = tuple(2 * a for a in v)
    sw = sw_polynomial(delta)
    sw_newton = norm.newton_polytope(sw)
    valence = polytope.vertex_valence(sw_newton, doubled)
    return CanonicalClassReport(
        source_class=tuple(phi),
        dual_vertex=v,
        canonical_class=doubled,
        valence=valence,
    )


def valence_distinct(sw, v1, v2):
    """Compare the valences of two vertices of the SW Newton polytope."""
    sw_newton = norm.newton_polytope(sw)
    v1 = tuple(int(a) for a in v1)
    v2 = tuple(int(a) for a in v2)
    val1 = polytope.vertex_valence(sw_newton, v1)
    val2 = polytope.vertex_valence(sw_newton, v2)
    return ValenceComparison(vertex1=v1, valence1=val1, vertex2=v2, valence2=val2)
