"""Exact vectors on unordered pairs and on arcs of a complete graph.

Three indexed families live here: PairVector (coordinates d_(ij) on unordered
pairs), ArcVector (coordinates g_ij on ordered pairs) and QnVector, the split
form (symmetric part + point weights, gauge sum(w) = 0) of a vector of the
weighted subspace Q_n inside arc space.  All coordinates are Fractions and all
operations are exact; coordinate order is lexicographic and fixed once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg


def vpoints(n: int) -> tuple[int, ...]:
    """The point set V = {1..n}."""
    return tuple(range(1, n + 1))


def vpoints0(n: int) -> tuple[int, ...]:
    """V together with the distinguished point 0."""
    return tuple(range(0, n + 1))


@lru_cache(maxsize=None)
def pair_list(points: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for a, i in enumerate(points) for j in points[a + 1:])


@lru_cache(maxsize=None)
def arc_list(points: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in points for j in points if i != j)


@lru_cache(maxsize=None)
def pair_index(points: tuple[int, ...]) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(pair_list(points))}


@lru_cache(maxsize=None)
def arc_index(points: tuple[int, ...]) -> dict[tuple[int, int], int]:
    return {a: k for k, a in enumerate(arc_list(points))}


def _frtuple(xs) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in xs)


@dataclass(frozen=True)
class PairVector:
    """Vector indexed by unordered pairs (ij), i < j, of a fixed point set."""

    points: tuple[int, ...]
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != len(pair_list(self.points)):
            raise ValueError("coordinate count does not match the point set")

    @classmethod
    def zero(cls, points) -> "PairVector":
        points = tuple(points)
        return cls(points, _frtuple([0] * len(pair_list(points))))

    @classmethod
    def from_map(cls, points, entries) -> "PairVector":
        points = tuple(points)
        idx = pair_index(points)
        coords = [Fraction(0)] * len(idx)
        for (i, j), val in entries.items():
            coords[idx[(i, j) if i < j else (j, i)]] = Fraction(val)
        return cls(points, tuple(coords))

    def __getitem__(self, pair) -> Fraction:
        i, j = pair
        if i == j:
            raise KeyError(pair)
        return self.coords[pair_index(self.points)[(i, j) if i < j else (j, i)]]

    def __add__(self, other: "PairVector") -> "PairVector":
        self._check(other)
        return PairVector(self.points, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "PairVector") -> "PairVector":
        self._check(other)
        return PairVector(self.points, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "PairVector":
        return PairVector(self.points, tuple(-a for a in self.coords))

    def scale(self, c) -> "PairVector":
        c = Fraction(c)
        return PairVector(self.points, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def _check(self, other):
        if self.points != other.points:
            raise ValueError("point sets differ")


@dataclass(frozen=True)
class ArcVector:
    """Vector indexed by ordered pairs ij, i != j, of a fixed point set."""

    points: tuple[int, ...]
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != len(arc_list(self.points)):
            raise ValueError("coordinate count does not match the point set")

    @classmethod
    def zero(cls, points) -> "ArcVector":
        points = tuple(points)
        return cls(points, _frtuple([0] * len(arc_list(points))))

    @classmethod
    def from_map(cls, points, entries) -> "ArcVector":
        points = tuple(points)
        idx = arc_index(points)
        coords = [Fraction(0)] * len(idx)
        for arc, val in entries.items():
            coords[idx[arc]] = Fraction(val)
        return cls(points, tuple(coords))

    def __getitem__(self, arc) -> Fraction:
        return self.coords[arc_index(self.points)[arc]]

    def __add__(self, other: "ArcVector") -> "ArcVector":
        self._check(other)
        return ArcVector(self.points, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "ArcVector") -> "ArcVector":
        self._check(other)
        return ArcVector(self.points, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "ArcVector":
        return ArcVector(self.points, tuple(-a for a in self.coords))

    def scale(self, c) -> "ArcVector":
        c = Fraction(c)
        return ArcVector(self.points, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def _check(self, other):
        if self.points != other.points:
            raise ValueError("point sets differ")


@dataclass(frozen=True)
class QnVector:
    """Element of Q_n: symmetric part on pairs of V plus weights with sum(w) = 0."""

    n: int
    sym: PairVector
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if self.sym.points != vpoints(self.n):
            raise ValueError("symmetric part must live on V = {1..n}")
        if len(self.weights) != self.n:
            raise ValueError("need one weight per point")
        if sum(self.weights) != 0:
            raise ValueError("weights out of gauge: sum(w) != 0")

    @classmethod
    def make(cls, sym: PairVector, weights) -> "QnVector":
        """Build with the additive-constant gauge applied to the weights."""
        w = _frtuple(weights)
        n = len(w)
        shift = sum(w) / n
        return cls(n, sym, tuple(x - shift for x in w))

    @classmethod
    def zero(cls, n: int) -> "QnVector":
        return cls(n, PairVector.zero(vpoints(n)), _frtuple([0] * n))

    def weight(self, i: int) -> Fraction:
        return self.weights[i - 1]

    def __add__(self, other: "QnVector") -> "QnVector":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return QnVector(self.n, self.sym + other.sym,
                        tuple(a + b for a, b in zip(self.weights, other.weights)))

    def __sub__(self, other: "QnVector") -> "QnVector":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        return QnVector(self.n, self.sym - other.sym,
                        tuple(a - b for a, b in zip(self.weights, other.weights)))

    def __neg__(self) -> "QnVector":
        return QnVector(self.n, -self.sym, tuple(-a for a in self.weights))

    def scale(self, c) -> "QnVector":
        c = Fraction(c)
        return QnVector(self.n, self.sym.scale(c), tuple(c * a for a in self.weights))

    def transpose(self) -> "QnVector":
        """The image under q -> q*: same symmetric part, negated weights."""
        return QnVector(self.n, self.sym, tuple(-a for a in self.weights))

    def is_symmetric(self) -> bool:
        return all(a == 0 for a in self.weights)

    def is_zero(self) -> bool:
        return self.sym.is_zero() and self.is_symmetric()


# -- scalar products ---------------------------------------------------------

def pair_inner(d: PairVector, t: PairVector) -> Fraction:
    d._check(t)
    return sum((a * b for a, b in zip(d.coords, t.coords)), Fraction(0))


def arc_inner(f: ArcVector, g: ArcVector) -> Fraction:
    f._check(g)
    return sum((a * b for a, b in zip(f.coords, g.coords)), Fraction(0))


# -- transpose / symmetric split / phi ---------------------------------------

def transpose(g: ArcVector) -> ArcVector:
    """g* with (g*)_ij = g_ji."""
    idx = arc_index(g.points)
    return ArcVector(g.points, tuple(g.coords[idx[(j, i)]] for (i, j) in arc_list(g.points)))


def split(g: ArcVector) -> tuple[ArcVector, ArcVector]:
    """Decompose g = g^s + g^a into symmetric and antisymmetric parts."""
    gt = transpose(g)
    half = Fraction(1, 2)
    sym = ArcVector(g.points, tuple(half * (a + b) for a, b in zip(g.coords, gt.coords)))
    asym = ArcVector(g.points, tuple(half * (a - b) for a, b in zip(g.coords, gt.coords)))
    return sym, asym


def phi(d: PairVector) -> ArcVector:
    """The isomorphism onto symmetric arc vectors: phi(d)_ij = phi(d)_ji = d_(ij)."""
    idx = pair_index(d.points)
    return ArcVector(d.points, tuple(
        d.coords[idx[(i, j) if i < j else (j, i)]] for (i, j) in arc_list(d.points)))


def phi_inverse(g: ArcVector) -> PairVector:
    idx = arc_index(g.points)
    for (i, j) in pair_list(g.points):
        if g.coords[idx[(i, j)]] != g.coords[idx[(j, i)]]:
            raise ValueError("not symmetric")
    return PairVector(g.points, tuple(g.coords[idx[p]] for p in pair_list(g.points)))


# -- the weight basis and the circuit side ------------------------------------

def weight_basis(k: int, n: int) -> ArcVector:
    """The potential vector q(k): +1 on arcs kj, -1 on arcs jk."""
    if not 1 <= k <= n:
        raise ValueError(f"point {k} out of range 1..{n}")
    entries = {}
    for j in vpoints(n):
        if j != k:
            entries[(k, j)] = 1
            entries[(j, k)] = -1
    return ArcVector.from_map(vpoints(n), entries)


def bicircuit_vector(cycle, n: int) -> ArcVector:
    """Characteristic vector of the oriented bicircuit through the given vertex cycle."""
    cyc = list(cycle)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise ValueError("a bicircuit needs at least 3 distinct vertices")
    entries = {}
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        entries[(a, b)] = 1
        entries[(b, a)] = -1
    return ArcVector.from_map(vpoints(n), entries)


def bitriangle_equalities(n: int) -> list[ArcVector]:
    """Fundamental bitriangle vectors T(1ij): a basis of the circuit space.

    (x, f^T) = 0 over all of them characterizes membership of x in Q_n.
    """
    return [bicircuit_vector((1, i, j), n)
            for i in range(2, n + 1) for j in range(i + 1, n + 1)]


# -- Q_n: expansion, projection, membership, scalar product -------------------

def expand(q: QnVector) -> ArcVector:
    """Arc coordinates q_ij = q_(ij) + w_i - w_j."""
    idx = pair_index(q.sym.points)
    w = q.weights
    return ArcVector(q.sym.points, tuple(
        q.sym.coords[idx[(i, j) if i < j else (j, i)]] + w[i - 1] - w[j - 1]
        for (i, j) in arc_list(q.sym.points)))


def project_to_Qn(g: ArcVector) -> tuple[QnVector, ArcVector]:
    """Canonical representative in Q_n plus the circuit-space residual.

    The weight of point i is (1/n) * sum_j antisym(g)_ij, which is the exact
    orthogonal projection onto the weight space (and already in gauge, since
    the antisymmetric entries cancel in pairs).
    """
    n = len(g.points)
    sym, asym = split(g)
    idx = arc_index(g.points)
    weights = []
    for i in g.points:
        s = sum((asym.coords[idx[(i, j)]] for j in g.points if j != i), Fraction(0))
        weights.append(s / n)
    canon = QnVector(n, phi_inverse(sym), tuple(weights))
    residual = g - expand(canon)
    return canon, residual


def is_in_Qn(g: ArcVector) -> bool:
    """Membership of g in Q_n via the fundamental bitriangle equalities."""
    n = len(g.points)
    return all(arc_inner(g, t) == 0 for t in bitriangle_equalities(n))


def qn_inner(g: QnVector, q: QnVector) -> Fraction:
    """The Q_n product: sum over pairs of g_(ij) q_(ij) plus n * sum_i v_i w_i.

    Equals half the plain arc scalar product of the expansions.  Both
    arguments must be in the sum-zero weight gauge.
    """
    if g.n != q.n:
        raise ValueError("dimension mismatch")
    if sum(g.weights) != 0 or sum(q.weights) != 0:
        raise ValueError("weights out of gauge: sum != 0")
    s = pair_inner(g.sym, q.sym)
    s += g.n * sum((a * b for a, b in zip(g.weights, q.weights)), Fraction(0))
    return s


# -- dimension bookkeeping -----------------------------------------------------

def qn_dim(n: int) -> int:
    return n * (n + 1) // 2 - 1


def circuit_dim(n: int) -> int:
    return n * (n - 1) // 2 - (n - 1)


def qn_basis_rank(n: int) -> int:
    """Exact rank of {phi(e_(ij))} united with {q(k)} inside arc space."""
    rows = [phi(PairVector.from_map(vpoints(n), {p: 1})).coords for p in pair_list(vpoints(n))]
    rows += [weight_basis(k, n).coords for k in vpoints(n)]
    return linalg.rank(rows)


def circuit_rank(n: int) -> int:
    """Exact rank of all bitriangle vectors (they span the circuit space)."""
    rows = [bicircuit_vector((i, j, k), n).coords
            for i in vpoints(n) for j in vpoints(n) for k in vpoints(n)
            if i < j and j < k]
    return linalg.rank(rows)
