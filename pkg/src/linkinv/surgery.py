"""Integral surgery bookkeeping: linking matrices, framings and homology.

The first homology of the surgered manifold is presented by the matrix
with the framings on the diagonal and the linking numbers off it, columns
read as relations on the meridian generators.  Invariants come from an
exact Smith normal form with unimodular certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd as _igcd


def _as_int_matrix(rows):
    return tuple(tuple(int(v) for v in row) for row in rows)


@dataclass(frozen=True)
class LinkingData:
    """Symmetric linking matrix with zero diagonal, plus surgery framings."""

    lk: tuple
    framings: tuple

    def __init__(self, lk, framings=None):
        lk = _as_int_matrix(lk)
        n = len(lk)
        if any(len(row) != n for row in lk):
            raise ValueError("linking matrix must be square")
        for i in range(n):
            if lk[i][i] != 0:
                raise ValueError("linking matrix must have zero diagonal")
            for j in range(n):
                if lk[i][j] != lk[j][i]:
                    raise ValueError("linking matrix must be symmetric")
        if framings is None:
            framings = canonical_framings(lk)
        framings = tuple(int(v) for v in framings)
        if len(framings) != n:
            raise ValueError("framing vector length must match component count")
        object.__setattr__(self, "lk", lk)
        object.__setattr__(self, "framings", framings)

    @property
    def n(self):
        return len(self.lk)


@dataclass(frozen=True)
class AbelianGroupInvariants:
    """Rank and torsion (in divisibility order) of a finitely generated group."""

    rank: int
    torsion: tuple

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError("torsion coefficients must form a divisibility chain")

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def canonical_framings(lk):
    """p_i = -(sum of the off-diagonal entries of row i)."""
    lk = _as_int_matrix(lk)
    n = len(lk)
    for i in range(n):
        if lk[i][i] != 0:
            raise ValueError("linking matrix must have zero diagonal")
        for j in range(n):
            if lk[i][j] != lk[j][i]:
                raise ValueError("linking matrix must be symmetric")
    return tuple(-sum(lk[i][j] for j in range(n) if j != i) for i in range(n))


def surgery_presentation(data):
    """Presentation matrix of H1 of the surgered manifold (columns = relations)."""
    n = data.n
    return tuple(
        tuple(data.framings[i] if i == j else data.lk[i][j] for j in range(n))
        for i in range(n)
    )


def smith_normal_form(M):
    """Smith normal form with certificates: returns (U, D, V) with D = U M V.

    D is diagonal with a nonnegative divisibility chain d1 | d2 | ...; U and
    V are unimodular.  Pivoting picks the smallest nonzero absolute value
    with a deterministic tie-break (lowest row, then column), so the
    certificates are reproducible.
    """
    A = [list(row) for row in _as_int_matrix(M)]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    U = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    V = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        A[dst] = [a + c * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in A:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    def find_pivot(k):
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                a = abs(A[i][j])
                if a and (best is None or a < best[0]):
                    best = (a, i, j)
        return best

    k = 0
    while k < min(rows, cols):
        found = find_pivot(k)
        if found is None:
            break
        _, pi, pj = found
        if pi != k:
            swap_rows(pi, k)
        if pj != k:
            swap_cols(pj, k)
        # Clear row and column k; restart if a division leaves a remainder
        # elsewhere (the pivot then shrinks, so this terminates).
        dirty = True
        while dirty:
            dirty = False
            for i in range(k + 1, rows):
                if A[i][k]:
                    q = A[i][k] // A[k][k]
                    add_row(k, i, -q)
                    if A[i][k]:
                        swap_rows(i, k)
                        dirty = True
            for j in range(k + 1, cols):
                if A[k][j]:
                    q = A[k][j] // A[k][k]
                    add_col(k, j, -q)
                    if A[k][j]:
                        swap_cols(j, k)
                        dirty = True
        if A[k][k] < 0:
            negate_row(k)
        # Enforce divisibility of the remaining block by the pivot.
        offender = None
        for i in range(k + 1, rows):
            for j in range(k + 1, cols):
                if A[i][j] % A[k][k] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, k, 1)
            continue
        k += 1

    return (
        tuple(tuple(r) for r in U),
        tuple(tuple(r) for r in A),
        tuple(tuple(r) for r in V),
    )


def h1_of_surgery(data):
    """Cokernel invariants of the surgery presentation matrix."""
    M = surgery_presentation(data)
    _, D, _ = smith_normal_form(M)
    n = data.n
    diag = [D[i][i] for i in range(n)]
    rank = sum(1 for d in diag if d == 0)
    torsion = tuple(d for d in diag if d > 1)
    return AbelianGroupInvariants(rank=rank, torsion=torsion)


def meridian_order(data, i):
    """Order of the i-th meridian class in H1 of the surgered manifold.

    Returns 0 for infinite order (a nonzero coordinate against a zero
    invariant factor in Smith coordinates), otherwise the finite order.
    """
    n = data.n
    if not 0 <= i < n:
        raise IndexError(f"component index {i} out of range")
    M = surgery_presentation(data)
    U, D, _ = smith_normal_form(M)
    # Class of e_i in Z^n / im(M) maps to column i of U in Z^n / im(D).
    y = [U[k][i] for k in range(n)]
    order = 1
    for k in range(n):
        d = D[k][k]
        if d == 0:
            if y[k] != 0:
                return 0
        elif d > 1 and y[k] % d != 0:
            part = d // _igcd(d, y[k] % d)
            order = order * part // _igcd(order, part)
    return order


@dataclass(frozen=True)
class GluingMatrix:
    """A 3x3 unimodular matrix acting on the gluing data of a boundary torus."""

    rows: tuple

    def __init__(self, rows):
        rows = _as_int_matrix(rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("gluing matrix must be 3x3")
        if _det3(rows) not in (1, -1):
            raise ValueError("gluing matrix must be unimodular")
        object.__setattr__(self, "rows", rows)

    def det(self):
        return _det3(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def is_fiber_block_form(g):
    """Matches the gluing-ambiguity shape: rows (a b 0 / d e 0 / g h 1), det 1."""
    m = g.rows
    return m[0][2] == 0 and m[1][2] == 0 and m[2][2] == 1 and _det3(m) == 1


def compose_gluings(g1, g2):
    """Matrix product of two gluing matrices (both must be unimodular)."""
    a, b = g1.rows, g2.rows
    prod = tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )
    return GluingMatrix(prod)


def gluing_inverse(g):
    """Exact inverse via the adjugate; unimodularity makes it integral."""
    m = g.rows
    det = _det3(m)
    cof = [
        [
            (m[(i + 1) % 3][(j + 1) % 3] * m[(i + 2) % 3][(j + 2) % 3]
             - m[(i + 1) % 3][(j + 2) % 3] * m[(i + 2) % 3][(j + 1) % 3])
            for j in range(3)
        ]
        for i in range(3)
    ]
    inv = tuple(tuple(cof[j][i] * det for j in range(3)) for i in range(3))
    return GluingMatrix(inv)


def matrix_to_text(M):
    M = _as_int_matrix(M)
    rows = len(M)
    cols = len(M[0]) if rows else 0
    lines = [f"mat {rows} {cols}"]
    for row in M:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def matrix_from_text(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    header = lines[0].split()
    if len(header) != 3 or header[0] != "mat":
        raise ValueError(f"bad matrix header: {lines[0]!r}")
    rows, cols = int(header[1]), int(header[2])
    if len(lines) != rows + 1:
        raise ValueError("matrix row count does not match header")
    M = []
    for ln in lines[1:]:
        row = tuple(int(v) for v in ln.split())
        if len(row) != cols:
            raise ValueError(f"bad matrix row: {ln!r}")
        M.append(row)
    return tuple(M)


def link_from_text(text):
    """Parse a surgery description: 'link n', 'lk i j v' and 'frame i p' lines.

    Indices are 1-based; framings default to the canonical ones.
    """
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty link text")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "link":
        raise ValueError(f"bad link header: {lines[0]!r}")
    n = int(header[1])
    lk = [[0] * n for _ in range(n)]
    frames = {}
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "lk" and len(parts) == 4:
            i, j, v = int(parts[1]) - 1, int(parts[2]) - 1, int(parts[3])
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise ValueError(f"bad lk line: {ln!r}")
            lk[i][j] = v
            lk[j][i] = v
        elif parts[0] == "frame" and len(parts) == 3:
            i, p = int(parts[1]) - 1, int(parts[2])
            if not 0 <= i < n:
                raise ValueError(f"bad frame line: {ln!r}")
            frames[i] = p
        else:
            raise ValueError(f"bad link line: {ln!r}")
    framings = list(canonical_framings(lk))
    for i, p in frames.items():
        framings[i] = p
    return LinkingData(lk, framings)
