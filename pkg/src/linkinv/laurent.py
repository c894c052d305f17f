"""Exact Laurent polynomials with integer coefficients in several variables.

A polynomial is a finite map from integer exponent vectors to nonzero
integer coefficients; the zero polynomial is the empty map.  The variable
order for the four-variable link polynomial is fixed as (x, y, z, t), and
all exponent vectors in this package use that order.

Coefficients are arbitrary-precision integers throughout; rationals only
appear when a polynomial is evaluated at a rational point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd


class NondivisibleError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def _check_same_arity(p, q):
    if p.arity != q.arity:
        raise ValueError(f"arity mismatch: {p.arity} != {q.arity}")


class LaurentPoly:
    """Immutable Laurent polynomial over the integers.

    Terms are held as a dict {exponent tuple: coefficient}; zero
    coefficients are never stored.  All operations return new values, so
    instances are safe to share between threads.
    """

    __slots__ = ("_arity", "_terms")

    def __init__(self, arity, terms=None):
        if arity < 1:
            raise ValueError("arity must be >= 1")
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != arity:
                raise ValueError(f"exponent vector {exps} has length != {arity}")
            coeff = int(coeff)
            if coeff != 0:
                clean[exps] = coeff
        object.__setattr__(self, "_arity", arity)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def zero(cls, arity):
        return cls(arity, {})

    @classmethod
    def constant(cls, arity, c):
        return cls(arity, {(0,) * arity: c})

    @classmethod
    def one(cls, arity):
        return cls.constant(arity, 1)

    @classmethod
    def monomial(cls, arity, exps, coeff=1):
        return cls(arity, {tuple(exps): coeff})

    @classmethod
    def variable(cls, arity, i, power=1):
        exps = [0] * arity
        exps[i] = power
        return cls(arity, {tuple(exps): 1})

    @property
    def arity(self):
        return self._arity

    def terms(self):
        """Terms as (exponent vector, coefficient) pairs, sorted lexicographically."""
        return tuple(sorted(self._terms.items()))

    def support(self):
        return tuple(sorted(self._terms))

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), 0)

    def is_zero(self):
        return not self._terms

    def num_terms(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._arity == other._arity and self._terms == other._terms

    def __hash__(self):
        return hash((self._arity, frozenset(self._terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self._arity, other)
        _check_same_arity(self, other)
        out = dict(self._terms)
        for exps, c in other._terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return LaurentPoly(self._arity, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self._arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self._arity, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self._arity)
            return LaurentPoly(
                self._arity, {e: c * other for e, c in self._terms.items()}
            )
        _check_same_arity(self, other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return LaurentPoly(self._arity, out)

    __rmul__ = __mul__

    def shifted(self, exps):
        """Multiply by the monomial with the given exponent vector."""
        exps = tuple(exps)
        return LaurentPoly(
            self._arity,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self._terms.items()},
        )

    def inverted(self):
        """Substitute every variable by its inverse."""
        return LaurentPoly(
            self._arity, {tuple(-a for a in e): c for e, c in self._terms.items()}
        )

    def __repr__(self):
        return f"LaurentPoly({self._arity}, {dict(sorted(self._terms.items()))!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        names = _variable_names(self._arity)
        parts = []
        for exps, coeff in sorted(self._terms.items(), reverse=True):
            mono = " ".join(
                f"{names[i]}^{e}" if e != 1 else names[i]
                for i, e in enumerate(exps)
                if e != 0
            )
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)} {mono}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = (first_sign if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _variable_names(arity):
    if arity <= 4:
        return ("x", "y", "z", "t")[:arity]
    return tuple(f"x{i + 1}" for i in range(arity))


def add(p, q):
    """Sum of two polynomials of the same arity."""
    return p + q


def mul(p, q):
    """Product of two polynomials of the same arity."""
    return p * q


def substitute_powers(p, k):
    """Substitute each variable by its k-th power (scales all exponents by k)."""
    if k < 1:
        raise ValueError("power must be >= 1")
    return LaurentPoly(
        p.arity, {tuple(k * a for a in e): c for e, c in p.terms()}
    )


def evaluate(p, point):
    """Evaluate exactly at a point of nonzero rationals."""
    point = tuple(Fraction(v) for v in point)
    if len(point) != p.arity:
        raise ValueError("point length must equal arity")
    if any(v == 0 for v in point):
        raise ValueError("point entries must be nonzero (negative exponents occur)")
    total = Fraction(0)
    for exps, coeff in p.terms():
        value = Fraction(coeff)
        for base, e in zip(point, exps):
            value *= base ** e
        total += value
    return total


def mt_link_polynomial():
    """The four-variable Alexander polynomial of the Borromean-rings-plus-axis link.

    Variables in the order (x, y, z, t); x, y, z belong to the meridians of
    the three rings and t to the meridian of the axis.
    """
    terms = {(0, 0, 0, 0): -4}
    for e in [(0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)]:
        terms[e] = 1
        terms[tuple(-a for a in e)] = 1
    for e in [(1, 1, 0, 0), (0, 1, 1, 0), (1, 0, 1, 0)]:
        terms[e] = -1
        terms[tuple(-a for a in e)] = -1
    terms[(1, 1, 1, 0)] = 1
    terms[(-1, -1, -1, 0)] = 1
    return LaurentPoly(4, terms)


def is_symmetric(p):
    """Test whether p(inverse variables) equals +/- monomial * p.

    Returns (flag, sign, shift): when flag is true, inverting every
    variable of p gives sign * x^shift * p exactly.
    """
    if p.is_zero():
        return True, 1, (0,) * p.arity
    q = p.inverted()
    lead_p = max(p.support())
    lead_q = max(q.support())
    cp = p.coefficient(lead_p)
    cq = q.coefficient(lead_q)
    if abs(cp) != abs(cq):
        return False, 0, None
    sign = 1 if cp == cq else -1
    shift = tuple(a - b for a, b in zip(lead_q, lead_p))
    if q == (sign * p).shifted(shift):
        return True, sign, shift
    return False, 0, None


def normalize_units(p):
    """Canonical representative of the unit class {+/- monomial * p}.

    The support is translated so that in every variable the minimum
    exponent is the negative of the maximum when all the per-variable
    widths are even, and otherwise so that all exponents are nonnegative
    with at least one zero per variable; the sign is then fixed so the
    lexicographically largest term has positive coefficient.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no unit normalization")
    support = p.support()
    mins = [min(e[i] for e in support) for i in range(p.arity)]
    maxs = [max(e[i] for e in support) for i in range(p.arity)]
    if all((hi - lo) % 2 == 0 for lo, hi in zip(mins, maxs)):
        shift = tuple(-(lo + hi) // 2 for lo, hi in zip(mins, maxs))
    else:
        shift = tuple(-lo for lo in mins)
    q = p.shifted(shift)
    if q.coefficient(max(q.support())) < 0:
        q = -q
    return q


def _to_nonnegative(p):
    """Translate support into the nonnegative orthant; returns (dict, shift)."""
    support = p.support()
    mins = tuple(min(e[i] for e in support) for i in range(p.arity))
    return {tuple(a - b for a, b in zip(e, mins)): c for e, c in p.terms()}, mins


def divide_exact(p, q):
    """Return r with r * q = p, or raise NondivisibleError.

    Division is performed in the ordinary polynomial ring after shifting
    both supports to the nonnegative orthant; monomial shifts are units and
    are restored on the result.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    _check_same_arity(p, q)
    if p.is_zero():
        return LaurentPoly.zero(p.arity)
    pn, sp = _to_nonnegative(p)
    qn, sq = _to_nonnegative(q)
    quot = _dict_divide_exact(pn, qn, p.arity)
    if quot is None:
        raise NondivisibleError("polynomials do not divide exactly")
    shift = tuple(a - b for a, b in zip(sp, sq))
    return LaurentPoly(p.arity, quot).shifted(shift)


def _dict_divide_exact(pn, qn, arity):
    """Exact division of nonnegative-support term dicts; None if inexact."""
    lead_q = max(qn)
    cq = qn[lead_q]
    rem = dict(pn)
    quot = {}
    while rem:
        lead_r = max(rem)
        exps = tuple(a - b for a, b in zip(lead_r, lead_q))
        if any(e < 0 for e in exps):
            return None
        cr = rem[lead_r]
        if cr % cq != 0:
            return None
        c = cr // cq
        quot[exps] = quot.get(exps, 0) + c
        for eq, cc in qn.items():
            key = tuple(a + b for a, b in zip(exps, eq))
            s = rem.get(key, 0) - c * cc
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    return quot


def gcd(p, q):
    """Greatest common divisor in the integer Laurent ring, unit-normalized.

    Computed by recursive content/primitive-part reduction: the main
    variable is eliminated with a primitive pseudo-remainder sequence and
    the coefficient gcds recurse on one variable fewer, down to integer
    gcds.  Integer content is preserved.
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    _check_same_arity(p, q)
    if p.is_zero():
        return normalize_units(q)
    if q.is_zero():
        return normalize_units(p)
    pn, _ = _to_nonnegative(p)
    qn, _ = _to_nonnegative(q)
    g = _dict_gcd(pn, qn, p.arity)
    return normalize_units(LaurentPoly(p.arity, g))


def _strip_var(d):
    """Split a term dict by its first variable: degree -> dict in the rest."""
    out = {}
    for exps, c in d.items():
        out.setdefault(exps[0], {})[exps[1:]] = c
    return out


def _join_var(coeffs):
    out = {}
    for deg, sub in coeffs.items():
        for exps, c in sub.items():
            out[(deg,) + exps] = c
    return out


def _dict_add(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _dict_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            key = tuple(u + v for u, v in zip(e1, e2))
            s = out.get(key, 0) + c1 * c2
            if s:
                out[key] = s
            else:
                del out[key]
    return out


def _dict_neg(a):
    return {e: -c for e, c in a.items()}


def _dict_gcd(a, b, arity):
    """gcd of two nonzero term dicts with nonnegative exponents."""
    if arity == 0:
        g = _igcd(a.get((), 0), b.get((), 0))
        return {(): g} if g else {}
    fa = _strip_var(a)
    fb = _strip_var(b)
    if len(fa) == 1 and 0 in fa and len(fb) == 1 and 0 in fb:
        # main variable absent from both: recurse directly
        return _join_var({0: _dict_gcd(fa[0], fb[0], arity - 1)})
    cont_a, pp_a = _content_primitive(fa, arity)
    cont_b, pp_b = _content_primitive(fb, arity)
    cont = _dict_gcd(cont_a, cont_b, arity - 1)
    f, g = pp_a, pp_b
    if _deg(f) < _deg(g):
        f, g = g, f
    while g:
        r = _pseudo_rem(f, g, arity)
        f = g
        if r:
            _, g = _content_primitive(_strip_var(r), arity)
        else:
            g = {}
    # f is the last nonzero remainder; its content is spurious
    _, f = _content_primitive(_strip_var(f), arity)
    return _dict_mul(f, _join_var({0: cont}))


def _deg(d):
    return max(e[0] for e in d) if d else -1


def _content_primitive(stripped, arity):
    """Content and primitive part of a stripped poly in its main variable."""
    coeffs = list(stripped.values())
    cont = coeffs[0]
    for c in coeffs[1:]:
        cont = _dict_gcd(cont, c, arity - 1)
    pp = {
        deg: _dict_divide_exact(sub, cont, arity - 1)
        for deg, sub in stripped.items()
    }
    return cont, _join_var(pp)


def _lead_coeff(d):
    """Leading coefficient of d in its main variable, as a dict one variable down."""
    deg = _deg(d)
    return {e[1:]: c for e, c in d.items() if e[0] == deg}


def _pseudo_rem(f, g, arity):
    """Pseudo-remainder of f by g in the main variable (both nonzero)."""
    dg = _deg(g)
    lcg = _join_var({0: _lead_coeff(g)})
    r = dict(f)
    while r and _deg(r) >= dg:
        dr = _deg(r)
        lcr = _join_var({dr - dg: _lead_coeff(r)})
        r = _dict_add(_dict_mul(lcg, r), _dict_neg(_dict_mul(lcr, g)))
    return r


def to_text(p):
    """Serialize as text: header line, then one term per line sorted lex."""
    lines = [f"laurent {p.arity}"]
    for exps, coeff in p.terms():
        lines.append(" ".join([str(coeff)] + [str(e) for e in exps]))
    return "\n".join(lines) + "\n"


def from_text(text):
    """Parse the serialization produced by to_text; round-trips bit-exactly."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty laurent text")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "laurent":
        raise ValueError(f"bad laurent header: {lines[0]!r}")
    arity = int(header[1])
    terms = {}
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != arity + 1:
            raise ValueError(f"bad term line: {ln!r}")
        coeff = int(parts[0])
        exps = tuple(int(v) for v in parts[1:])
        if exps in terms:
            raise ValueError(f"duplicate exponent vector {exps}")
        terms[exps] = coeff
    return LaurentPoly(arity, terms)
