"""Exact linear algebra over the rationals (rank, RREF, nullspace, primitivization)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def primitive(vec) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers (empty/zero vectors pass through)."""
    fr = [Fraction(x) for x in vec]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def primitive_signed(vec) -> tuple[int, ...]:
    """primitive() with the first nonzero entry made positive."""
    v = primitive(vec)
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


def rref(rows) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot column indices)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def nullspace(rows, ncols: int | None = None) -> list[tuple[int, ...]]:
    """Primitive integer basis of {x : rows @ x = 0}, one vector per free column.

    Deterministic: basis vectors ordered by free column index, sign fixed.
    """
    rows = list(rows)
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for an empty system")
        ncols = len(rows[0])
    red, pivots = rref(rows)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][free]
        basis.append(primitive_signed(v))
    return basis


class Echelon:
    """Incremental echelon form for streaming rank queries."""

    def __init__(self):
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def reduce(self, row) -> list[Fraction]:
        v = [Fraction(x) for x in row]
        for r, c in zip(self.rows, self.pivots):
            if v[c] != 0:
                f = v[c]
                v = [a - f * b for a, b in zip(v, r)]
        return v

    def add(self, row) -> bool:
        """Insert row; True if it increased the rank."""
        v = self.reduce(row)
        c = next((i for i, x in enumerate(v) if x != 0), None)
        if c is None:
            return False
        inv = 1 / v[c]
        self.rows.append([x * inv for x in v])
        self.pivots.append(c)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def independent_subset(rows) -> list[int]:
    """Indices of a maximal linearly independent subset, greedily in input order."""
    ech = Echelon()
    return [i for i, row in enumerate(rows) if ech.add(row)]


def in_span(vec, rows) -> bool:
    """Exact membership of vec in the row space of rows."""
    base = [list(r) for r in rows]
    return rank(base) == rank(base + [list(vec)])
