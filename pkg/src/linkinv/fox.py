"""Free groups, PD codes, Wirtinger presentations and Fox calculus.

The multivariable Alexander polynomial is computed along the standard
route: planar-diagram code -> Wirtinger presentation -> matrix of
abelianized Fox derivatives -> column-deleted determinants -> division by
(variable - 1) -> gcd -> unit normalization.

PD text format (one fixed convention): a crossing line

    X <under_in> <over_in> <under_out> <over_out> <sign>

names the four edges around a crossing by role; edges are broken at every
crossing passage, so each label appears exactly twice, once incoming and
once outgoing.  The sign is the usual crossing sign for the drawn
orientations.  Any globally consistent sign convention yields the same
polynomial up to units, which the normalization absorbs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from . import laurent, surgery
from .laurent import LaurentPoly


class InternalConsistencyError(Exception):
    """Cross-checks that must agree (per-column quotients) failed to."""


@dataclass(frozen=True)
class FreeWord:
    """A word in a free group: a sequence of (generator index, +/-1) letters."""

    letters: tuple

    def __init__(self, letters):
        letters = tuple((int(g), int(e)) for g, e in letters)
        if any(e not in (1, -1) for _, e in letters):
            raise ValueError("letter exponents must be +1 or -1")
        object.__setattr__(self, "letters", letters)

    def free_reduce(self):
        out = []
        for g, e in self.letters:
            if out and out[-1] == (g, -e):
                out.pop()
            else:
                out.append((g, e))
        return FreeWord(out)

    def inverse(self):
        return FreeWord([(g, -e) for g, e in reversed(self.letters)])

    def __mul__(self, other):
        return FreeWord(self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(
            f"x{g + 1}" if e == 1 else f"x{g + 1}^-1" for g, e in self.letters
        )


def parse_word(text):
    """Parse a word like 'x1 x2 x1^-1 x2^-1' (powers expand into letters)."""
    letters = []
    for token in text.split():
        if not token.startswith("x"):
            raise ValueError(f"bad word token: {token!r}")
        body = token[1:]
        power = 1
        if "^" in body:
            body, p = body.split("^", 1)
            power = int(p)
        g = int(body) - 1
        if g < 0 or power == 0:
            raise ValueError(f"bad word token: {token!r}")
        sign = 1 if power > 0 else -1
        letters.extend([(g, sign)] * abs(power))
    return FreeWord(letters)


@dataclass(frozen=True)
class GroupPresentation:
    """Generators, relator words, and the abelianization onto Z^mu.

    abelianization[g] is the exponent vector that generator g maps to; at
    construction every relator is checked to abelianize to zero and the
    abelianization is checked to be surjective (by Smith normal form).
    """

    num_generators: int
    relators: tuple
    abelianization: tuple

    def __init__(self, num_generators, relators, abelianization):
        relators = tuple(
            r if isinstance(r, FreeWord) else FreeWord(r) for r in relators
        )
        abelianization = tuple(tuple(int(v) for v in a) for a in abelianization)
        if len(abelianization) != num_generators:
            raise ValueError("abelianization must map every generator")
        arity = len(abelianization[0]) if abelianization else 0
        if arity < 1 or any(len(a) != arity for a in abelianization):
            raise ValueError("abelianization vectors must have uniform length >= 1")
        for r in relators:
            total = [0] * arity
            for g, e in r.letters:
                if not 0 <= g < num_generators:
                    raise ValueError(f"relator uses generator {g} out of range")
                for i in range(arity):
                    total[i] += e * abelianization[g][i]
            if any(total):
                raise ValueError(f"relator {r} does not abelianize to zero")
        cols = [list(a) for a in abelianization]
        rows = [[cols[g][i] for g in range(num_generators)] for i in range(arity)]
        _, D, _ = surgery.smith_normal_form(rows)
        factors = [D[i][i] for i in range(min(arity, num_generators))]
        if sum(1 for d in factors if d == 1) != arity or any(
            d not in (0, 1) for d in factors
        ):
            raise ValueError("abelianization is not surjective onto Z^mu")
        object.__setattr__(self, "num_generators", num_generators)
        object.__setattr__(self, "relators", relators)
        object.__setattr__(self, "abelianization", abelianization)

    @property
    def arity(self):
        return len(self.abelianization[0])


@dataclass(frozen=True)
class Crossing:
    """One crossing: edge labels by role, plus the crossing sign."""

    under_in: int
    over_in: int
    under_out: int
    over_out: int
    sign: int


@dataclass(frozen=True)
class PDCode:
    """A validated planar-diagram code with its component assignment."""

    crossings: tuple
    components: tuple  # tuple of edge-label tuples, one per component, in order

    @property
    def num_crossings(self):
        return len(self.crossings)

    @property
    def num_components(self):
        return len(self.components)


def parse_pd(text):
    """Parse and validate PD text (see the module docstring for the format)."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty pd text")
    header = lines[0].split()
    if len(header) != 3 or header[0] != "pd":
        raise ValueError(f"bad pd header: {lines[0]!r}")
    ncross, ncomp = int(header[1]), int(header[2])
    if ncross < 1:
        raise ValueError("crossing count must be >= 1")
    crossings = []
    declared = []
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "X":
            if len(parts) != 6:
                raise ValueError(f"bad crossing line: {ln!r}")
            a, b, c, d = (int(v) for v in parts[1:5])
            sign = int(parts[5])
            if sign not in (1, -1):
                raise ValueError(f"bad crossing sign in: {ln!r}")
            crossings.append(Crossing(a, b, c, d, sign))
        elif parts[0] == "comp":
            declared.append(tuple(int(v) for v in parts[1:]))
        else:
            raise ValueError(f"bad pd line: {ln!r}")
    if len(crossings) != ncross:
        raise ValueError("crossing count does not match header")

    counts = {}
    for x in crossings:
        for e in (x.under_in, x.over_in, x.under_out, x.over_out):
            counts[e] = counts.get(e, 0) + 1
    bad = [e for e, c in counts.items() if c != 2]
    if bad:
        raise ValueError(f"arc labels must appear exactly twice; bad: {sorted(bad)}")

    successor = {}
    seen_in = set()
    seen_out = set()
    for x in crossings:
        for e_in, e_out in ((x.under_in, x.under_out), (x.over_in, x.over_out)):
            if e_in in seen_in or e_out in seen_out:
                raise ValueError("inconsistent edge roles in pd code")
            seen_in.add(e_in)
            seen_out.add(e_out)
            successor[e_in] = e_out
    if seen_in != seen_out:
        raise ValueError("every edge must occur once incoming and once outgoing")

    cycles = []
    remaining = set(successor)
    while remaining:
        start = min(remaining)
        cycle = [start]
        remaining.discard(start)
        e = successor[start]
        while e != start:
            cycle.append(e)
            remaining.discard(e)
            e = successor[e]
        cycles.append(tuple(cycle))

    if declared:
        if len(declared) != len(cycles):
            raise ValueError("declared components do not match diagram cycles")
        matched = []
        used = set()
        for comp in declared:
            hit = None
            for idx, cyc in enumerate(cycles):
                if idx in used or len(cyc) != len(comp) or set(cyc) != set(comp):
                    continue
                k = cyc.index(comp[0])
                if tuple(cyc[(k + i) % len(cyc)] for i in range(len(cyc))) == comp:
                    hit = idx
                    break
            if hit is None:
                raise ValueError(f"component {comp} is not a cycle of the diagram")
            used.add(hit)
            matched.append(comp)
        components = tuple(matched)
    else:
        components = tuple(cycles)
    if len(components) != ncomp:
        raise ValueError("component count does not match header")
    return PDCode(crossings=tuple(crossings), components=components)


def pd_to_text(pd):
    lines = [f"pd {pd.num_crossings} {pd.num_components}"]
    for x in pd.crossings:
        lines.append(
            f"X {x.under_in} {x.over_in} {x.under_out} {x.over_out} {x.sign}"
        )
    for comp in pd.components:
        lines.append("comp " + " ".join(str(e) for e in comp))
    return "\n".join(lines) + "\n"


def _edge_arcs(pd):
    """Merge edges through over-passages; returns {edge: arc index}.

    Arcs are the Wirtinger generators: maximal runs of edges not broken by
    an undercrossing.  Arc indices follow the smallest edge label in each
    class, so generator numbering is deterministic.
    """
    parent = {}

    def find(e):
        root = e
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(e, e) != e:
            parent[e], e = root, parent[e]
        return root

    for x in pd.crossings:
        for e in (x.under_in, x.over_in, x.under_out, x.over_out):
            parent.setdefault(e, e)
    for x in pd.crossings:
        ri, ro = find(x.over_in), find(x.over_out)
        if ri != ro:
            parent[max(ri, ro)] = min(ri, ro)
    roots = sorted({find(e) for e in parent})
    index = {r: i for i, r in enumerate(roots)}
    return {e: index[find(e)] for e in parent}


def wirtinger_from_pd(pd):
    """Wirtinger presentation: one generator per arc, one relator per crossing.

    The relator at a crossing with over arc c, incoming under arc a and
    outgoing under arc b is c a c^-1 b^-1 for a positive crossing and
    c^-1 a c b^-1 for a negative one.  Each arc generator abelianizes to
    the standard basis vector of its component, so mu = component count.
    """
    arc_of = _edge_arcs(pd)
    num_arcs = max(arc_of.values()) + 1
    comp_of_edge = {}
    for ci, comp in enumerate(pd.components):
        for e in comp:
            comp_of_edge[e] = ci
    mu = pd.num_components
    arc_comp = {}
    for e, a in arc_of.items():
        c = comp_of_edge[e]
        if arc_comp.setdefault(a, c) != c:
            raise ValueError("arc crosses components; pd code is inconsistent")
    ab = []
    for a in range(num_arcs):
        vec = [0] * mu
        vec[arc_comp[a]] = 1
        ab.append(tuple(vec))
    relators = []
    for x in pd.crossings:
        c = arc_of[x.over_in]
        a = arc_of[x.under_in]
        b = arc_of[x.under_out]
        if x.sign == 1:
            word = [(c, 1), (a, 1), (c, -1), (b, -1)]
        else:
            word = [(c, -1), (a, 1), (c, 1), (b, -1)]
        relators.append(FreeWord(word))
    return GroupPresentation(num_arcs, relators, ab)


def fox_derivative_abelianized(word, g, ab):
    """Abelianized Fox derivative of a word with respect to generator g.

    Satisfies dg/dg = 1, dh/dg = 0 for h != g, d(g^-1)/dg = -g^-1, and the
    product rule d(uv)/dg = du/dg + u dv/dg, with group elements pushed
    through the abelianization (so values are Laurent monomial sums).
    """
    ab = tuple(tuple(int(v) for v in a) for a in ab)
    arity = len(ab[0])
    if not 0 <= g < len(ab):
        raise ValueError(f"generator {g} out of range")
    result = {}
    prefix = [0] * arity

    def bump(exps, c):
        key = tuple(exps)
        s = result.get(key, 0) + c
        if s:
            result[key] = s
        else:
            result.pop(key, None)

    for h, e in word.letters:
        if e == 1:
            if h == g:
                bump(prefix, 1)
            for i in range(arity):
                prefix[i] += ab[h][i]
        else:
            for i in range(arity):
                prefix[i] -= ab[h][i]
            if h == g:
                bump(prefix, -1)
    return LaurentPoly(arity, result)


@dataclass(frozen=True)
class AlexanderMatrix:
    """Matrix of abelianized Fox derivatives: rows = relators, cols = generators."""

    rows: tuple
    arity: int

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)


def alexander_matrix(pres):
    """Full Fox-derivative matrix of a presentation."""
    rows = []
    for r in pres.relators:
        rows.append(
            tuple(
                fox_derivative_abelianized(r, g, pres.abelianization)
                for g in range(pres.num_generators)
            )
        )
    return AlexanderMatrix(rows=tuple(rows), arity=pres.arity)


def _clear_row_monomials(row):
    """Multiply a row by a monomial so all entries have nonnegative exponents."""
    arity = row[0].arity
    mins = [0] * arity
    for entry in row:
        for exps in entry.support():
            for i, e in enumerate(exps):
                if e < mins[i]:
                    mins[i] = e
    if not any(mins):
        return row
    shift = tuple(-m for m in mins)
    return tuple(entry.shifted(shift) for entry in row)


def det_bareiss(rows):
    """Fraction-free Bareiss determinant of a square Laurent-polynomial matrix.

    Rows are first cleared of monomial denominators (the determinant is
    then correct up to a unit, which every caller normalizes away).
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    arity = rows[0][0].arity
    M = [list(_clear_row_monomials(tuple(row))) for row in rows]
    if n == 1:
        return M[0][0]
    sign = 1
    prev = LaurentPoly.one(arity)
    for k in range(n - 1):
        pivot = None
        best = None
        for i in range(k, n):
            entry = M[i][k]
            if not entry.is_zero():
                size = entry.num_terms()
                if best is None or size < best:
                    best = size
                    pivot = i
        if pivot is None:
            return LaurentPoly.zero(arity)
        if pivot != k:
            M[k], M[pivot] = M[pivot], M[k]
            sign = -sign
        pkk = M[k][k]
        for i in range(k + 1, n):
            mik = M[i][k]
            for j in range(k + 1, n):
                num = pkk * M[i][j] - mik * M[k][j]
                M[i][j] = laurent.divide_exact(num, prev) if not num.is_zero() else num
            M[i][k] = LaurentPoly.zero(arity)
        prev = pkk
    result = M[n - 1][n - 1]
    return result if sign == 1 else -result


def det_minor_expansion(rows):
    """Cross-check determinant by first-row cofactor expansion (small matrices)."""
    n = len(rows)
    arity = rows[0][0].arity
    if n == 1:
        return rows[0][0]
    total = LaurentPoly.zero(arity)
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        sub = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * det_minor_expansion(sub)
        total = total + (term if j % 2 == 0 else -term)
    return total


def alexander_polynomial(pres, drop_relator=None):
    """Multivariable Alexander polynomial of a deficiency-one presentation.

    One redundant relator is dropped (the last, unless drop_relator says
    otherwise); for each column j the determinant D_j of the square matrix
    with column j removed is divided by (variable of generator j) - 1 when
    mu >= 2 (for knots the minors already equal the polynomial up to
    units), and the unit-normalized gcd over the columns is returned.  For
    mu >= 2 the per-column quotients must agree up to units.
    """
    matrix = alexander_matrix(pres)
    nrel, ngen = matrix.shape
    mu = pres.arity
    rows = list(matrix.rows)
    if nrel == ngen:
        idx = nrel - 1 if drop_relator is None else drop_relator
        rows = rows[:idx] + rows[idx + 1:]
    elif nrel != ngen - 1:
        raise ValueError(
            f"presentation matrix is {nrel}x{ngen}; not square after deleting a column"
        )
    quotients = []
    for j in range(ngen):
        sub = [row[:j] + row[j + 1:] for row in rows]
        dj = det_bareiss(sub)
        if mu >= 2:
            if dj.is_zero():
                quotients.append(dj)
                continue
            divisor = LaurentPoly.monomial(mu, pres.abelianization[j]) - 1
            quotients.append(laurent.divide_exact(dj, divisor))
        else:
            quotients.append(dj)
    nonzero = [q for q in quotients if not q.is_zero()]
    if not nonzero:
        return LaurentPoly.zero(mu)
    if mu >= 2:
        canon = {laurent.normalize_units(q) for q in nonzero}
        if len(canon) != 1:
            raise InternalConsistencyError(
                "per-column quotients disagree up to units"
            )
    return laurent.normalize_units(reduce(laurent.gcd, nonzero))


def linking_numbers(pd):
    """Pairwise linking numbers: half the signed count of inter-component crossings."""
    comp_of_edge = {}
    for ci, comp in enumerate(pd.components):
        for e in comp:
            comp_of_edge[e] = ci
    n = pd.num_components
    twice = [[0] * n for _ in range(n)]
    for x in pd.crossings:
        cu = comp_of_edge[x.under_in]
        co = comp_of_edge[x.over_in]
        if cu != co:
            twice[cu][co] += x.sign
            twice[co][cu] += x.sign
    for i in range(n):
        for j in range(n):
            if twice[i][j] % 2 != 0:
                raise ValueError("odd signed crossing count between components")
    return tuple(tuple(v // 2 for v in row) for row in twice)


def presentation_to_text(pres):
    lines = [f"gen {pres.num_generators}"]
    for g, vec in enumerate(pres.abelianization):
        lines.append(f"ab {g + 1} " + " ".join(str(v) for v in vec))
    for r in pres.relators:
        lines.append(f"rel {r}")
    return "\n".join(lines) + "\n"


def presentation_from_text(text):
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty presentation text")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "gen":
        raise ValueError(f"bad presentation header: {lines[0]!r}")
    n = int(header[1])
    ab = {}
    relators = []
    for ln in lines[1:]:
        parts = ln.split(None, 1)
        if parts[0] == "ab":
            fields = ln.split()
            g = int(fields[1]) - 1
            ab[g] = tuple(int(v) for v in fields[2:])
        elif parts[0] == "rel":
            relators.append(parse_word(parts[1]))
        else:
            raise ValueError(f"bad presentation line: {ln!r}")
    if sorted(ab) != list(range(n)):
        raise ValueError("abelianization must cover generators 1..n")
    return GroupPresentation(n, relators, [ab[g] for g in range(n)])
