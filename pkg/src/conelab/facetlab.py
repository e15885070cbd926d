"""Facet machinery: roots, the projections pi and psi, facet transport,
switching, and classification of projected hypermetric facets.

Facet vectors of cones on V u {0} are PairVectors; facet vectors of the
projected cones are QnVectors, normalized to primitive integer coordinates in
the (sym, n*weights) representation with the sign fixed by validity.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from . import linalg
from .generators import cut_vector, ocut_qn, subsets
from .vectors import (ArcVector, PairVector, QnVector, pair_list,
                      project_to_Qn, qn_inner, vpoints, vpoints0)

MAX_ROOT_SCAN = 8


@dataclass(frozen=True)
class FacetRecord:
    """A facet vector with its root set and classification flags."""

    vector: PairVector | QnVector
    n: int                              # |V|
    roots: frozenset[frozenset[int]]
    trivial_roots: frozenset[frozenset[int]]
    contains_l0: bool
    symmetric: bool
    zero_lifting: bool
    orbit_id: str | None = None


def _check_root_scan(n: int, limit: int | None):
    cap = MAX_ROOT_SCAN if limit is None else limit
    if n > cap:
        raise ValueError(f"root scan over 2^{n} subsets exceeds the cap {cap}")


def roots(f, n: int, *, limit: int | None = None) -> frozenset[frozenset[int]]:
    """Exhaustive root scan: subsets S of V with (f, generator(S)) = 0.

    f is a PairVector on V u {0} (roots against cut vectors) or a QnVector
    (roots against ocut vectors).  Raises with a witness if f is negative on
    some generator.
    """
    _check_root_scan(n, limit)
    out = []
    for S in subsets(vpoints(n)):
        if isinstance(f, QnVector):
            val = qn_inner(f, ocut_qn(S, n))
        else:
            val = sum((f[p] for p in pair_list(f.points)
                       if (p[0] in S) != (p[1] in S)), Fraction(0))
        if val < 0:
            raise ValueError(f"not a valid inequality: negative on S={sorted(S)}")
        if val == 0:
            out.append(frozenset(S))
    return frozenset(out)


def facet_record(vector, n: int, *, limit: int | None = None,
                 orbit_id: str | None = None) -> FacetRecord:
    rs = roots(vector, n, limit=limit)
    if isinstance(vector, QnVector):
        trivial = frozenset({frozenset(), frozenset(vpoints(n))})
        symmetric = vector.is_symmetric()
        contains_l0 = True              # c(V) = 0 lies on every facet
    else:
        trivial = frozenset({frozenset()})
        f0 = [vector[(0, i)] for i in vpoints(n)]
        symmetric = all(x == 0 for x in f0)
        contains_l0 = frozenset(vpoints(n)) in rs
    return FacetRecord(vector, n, rs, trivial, contains_l0, symmetric,
                       zero_lifting=symmetric, orbit_id=orbit_id)


# -- projections ----------------------------------------------------------------

def pi_project(x: PairVector) -> PairVector:
    """Projection along the ray of e_0: e_(0i) -> e_(0i) - (1/n) e_0."""
    if x.points[0] != 0:
        raise ValueError("pi acts on vectors over V u {0}")
    n = len(x.points) - 1
    shift = sum((x[(0, i)] for i in vpoints(n)), Fraction(0)) / n
    entries = {p: x[p] for p in pair_list(x.points)}
    for i in vpoints(n):
        entries[(0, i)] = x[(0, i)] - shift
    return PairVector.from_map(x.points, entries)


def psi_point(x: PairVector) -> QnVector:
    """The map into Q_n: q_(ij) = x_(ij), w_i = x_(0i) (gauge-shifted)."""
    if x.points[0] != 0:
        raise ValueError("psi acts on vectors over V u {0}")
    n = len(x.points) - 1
    sym = PairVector(vpoints(n), tuple(x[p] for p in pair_list(vpoints(n))))
    return QnVector.make(sym, [x[(0, i)] for i in vpoints(n)])


# -- canonical facet vectors -----------------------------------------------------

def canonical_facet(q: QnVector) -> QnVector:
    """Primitive integer coordinates in the (sym, n*weights) representation."""
    combined = list(q.sym.coords) + [q.n * w for w in q.weights]
    prim = linalg.primitive(combined)
    if all(x == 0 for x in prim):
        return QnVector.zero(q.n)
    scale = next(Fraction(p, c) for p, c in zip(prim, [Fraction(x) for x in combined]) if c != 0)
    if scale < 0:
        raise ValueError("orientation flip during normalization")
    k = len(q.sym.coords)
    sym = PairVector(vpoints(q.n), tuple(Fraction(x) for x in prim[:k]))
    w = tuple(Fraction(x, q.n) for x in prim[k:])
    return QnVector(q.n, sym, w)


def qn_from_arc_facet(coords, n: int, *, strict: bool = True) -> QnVector:
    """Canonical QnVector of a facet vector given in arc coordinates.

    With strict=True the input must already lie in Q_n (true for facet
    vectors computed inside the Q_n-embedded cones).  strict=False accepts
    any representative of the functional modulo the circuit space (such as
    the raw t_ijk / e_ij rows) and drops the residual, which does not change
    values on Q_n.
    """
    v = ArcVector(vpoints(n), tuple(Fraction(c) for c in coords))
    canon, res = project_to_Qn(v)
    if strict and not res.is_zero():
        raise ValueError("vector not in Q_n: nonzero circuit residual")
    return canonical_facet(canon)


def arc_coords_of_facet(g: QnVector) -> tuple[int, ...]:
    """Primitive arc-space representative of a canonical facet vector."""
    from .vectors import expand
    return linalg.primitive(expand(g).coords)


def combined_tuple(g: QnVector) -> tuple[int, ...]:
    """(sym, n*weights) as a plain integer tuple (canonical facets only)."""
    combined = list(g.sym.coords) + [g.n * w for w in g.weights]
    out = []
    for x in combined:
        fx = Fraction(x)
        if fx.denominator != 1:
            raise ValueError("facet vector is not canonical (non-integer entries)")
        out.append(int(fx))
    return tuple(out)


def qn_from_combined(t, n: int) -> QnVector:
    k = n * (n - 1) // 2
    sym = PairVector(vpoints(n), tuple(Fraction(x) for x in t[:k]))
    return QnVector(n, sym, tuple(Fraction(x, n) for x in t[k:]))


# -- transport between Con_{n+1} and psi(Con_{n+1}) ------------------------------

def transport_facet(f: PairVector) -> QnVector | None:
    """Facet vector of the projected cone, or None when f misses the ray of e_0.

    Transport applies iff sum_i f_(0i) = 0; then the image inequality is
    sum f_(ij) q_(ij) + sum f_(0i) w_i >= 0 with canonical weights f_(0i)/n.
    """
    if f.points[0] != 0:
        raise ValueError("transport acts on facet vectors over V u {0}")
    n = len(f.points) - 1
    f0 = [f[(0, i)] for i in vpoints(n)]
    if sum(f0) != 0:
        return None
    sym = PairVector(vpoints(n), tuple(f[p] for p in pair_list(vpoints(n))))
    return canonical_facet(QnVector(n, sym, tuple(Fraction(x, n) for x in f0)))


def untransport_facet(g: QnVector) -> PairVector:
    """The facet vector of Con_{n+1} a canonical g came from: f^V = sym, f_(0i) = n v_i."""
    t = combined_tuple(g)
    k = g.n * (g.n - 1) // 2
    entries = {}
    for p, x in zip(pair_list(vpoints(g.n)), t[:k]):
        entries[p] = x
    for i, x in zip(vpoints(g.n), t[k:]):
        entries[(0, i)] = x
    return PairVector.from_map(vpoints0(g.n), entries)


# -- switching --------------------------------------------------------------------

def switch_pair_vector(f: PairVector, T) -> PairVector:
    """Sign flip on the pairs crossing T (the cut-cone switching map)."""
    T = frozenset(T)
    ent = {}
    for p in pair_list(f.points):
        ent[p] = -f[p] if (p[0] in T) != (p[1] in T) else f[p]
    return PairVector.from_map(f.points, ent)


def switch_facet(rec: FacetRecord, T) -> FacetRecord:
    """Switched facet by a root T; roots map by symmetric difference.

    Cut-side records need T in R(F); projected records need both T and its
    complement in R(G) (the image is a facet iff the complement is a root).
    """
    T = frozenset(T)
    V = frozenset(vpoints(rec.n))
    if not T <= V:
        raise ValueError("T must be a subset of V")
    if T not in rec.roots:
        raise ValueError("T not a root")
    if isinstance(rec.vector, QnVector):
        if (V - T) not in rec.roots:
            raise ValueError("complement of T not a root")
        f = untransport_facet(rec.vector)
        g = transport_facet(switch_pair_vector(f, T))
        assert g is not None      # sum over (0i) still vanishes after a V-subset flip
        vec = g
    else:
        vec = switch_pair_vector(rec.vector, T)
    new_roots = frozenset(frozenset(S ^ T) for S in rec.roots)
    out = facet_record(vec, rec.n)
    if out.roots != new_roots:
        raise AssertionError("switched root set does not match S -> S delta T")
    return out


# -- classification -----------------------------------------------------------------

def classify_facet(g: QnVector) -> dict:
    """Symmetric (= zero-lifting) vs asymmetric, with the relevant companion.

    Symmetric facets report the underlying facet vector on V they zero-lift;
    asymmetric facets report the partner facet vector g*.
    """
    if g.is_symmetric():
        return {"kind": "symmetric", "zero_lifting": True, "base": g.sym}
    return {"kind": "asymmetric", "zero_lifting": False,
            "partner": canonical_facet(g.transpose())}


def classify_hyp_projection(b) -> tuple[str, QnVector | None]:
    """Fate of a hypermetric facet (b_0 first) under psi.

    mu = sum over V: hypermetric image for (mu=1, b_0=0), a distortion of a
    negative-type inequality for (mu=0, b_0=1), not a facet otherwise.
    """
    b = [int(x) for x in b]
    if sum(b) != 1:
        raise ValueError("not hypermetric type (entries must sum to 1)")
    b0, bv = b[0], b[1:]
    n = len(bv)
    mu = sum(bv)
    if not ((mu == 1 and b0 == 0) or (mu == 0 and b0 == 1)):
        return "not_a_facet", None
    sym = PairVector.from_map(vpoints(n), {
        (i, j): -bv[i - 1] * bv[j - 1] for (i, j) in pair_list(vpoints(n))})
    w = [Fraction(-b0 * x, n) for x in bv]
    vec = canonical_facet(QnVector.make(sym, w))
    kind = "hypermetric" if b0 == 0 else "negative_type_distortion"
    return kind, vec


# -- recovering hypermetric b-types ---------------------------------------------

def _divisors(v: int):
    v = abs(v)
    out = [d for d in range(1, v + 1) if v % d == 0]
    return out + [-d for d in out]


def b_from_pair_vector(f: PairVector, target_sum: int) -> tuple[int, ...] | None:
    """Solve f_(ij) = -b_i b_j for integer b with the given sum, if possible."""
    pts = f.points
    vals = {}
    for p in pair_list(pts):
        x = Fraction(f[p])
        if x.denominator != 1:
            return None
        vals[p] = int(x)
    pivot = next((p for p in pair_list(pts) if vals[p] != 0), None)
    if pivot is None:
        return None
    p0 = pivot[0]
    for cand in _divisors(vals[pivot]):
        b = {p0: cand}
        ok = True
        for q in pts:
            if q == p0:
                continue
            v = vals[(p0, q) if p0 < q else (q, p0)]
            if v % cand != 0:
                ok = False
                break
            b[q] = -v // cand
        if not ok:
            continue
        if sum(b.values()) != target_sum:
            continue
        if all(vals[(i, j)] == -b[i] * b[j] for (i, j) in pair_list(pts)):
            return tuple(b[p] for p in pts)
    return None


def b_of_facet(g: QnVector) -> tuple[int, tuple[int, ...]] | None:
    """(b_0, b over V) of a projected hypermetric/negative-type facet, or None."""
    g = canonical_facet(g)
    if g.is_symmetric():
        b = b_from_pair_vector(g.sym, 1)
        return (0, b) if b is not None else None
    t = combined_tuple(g)
    k = g.n * (g.n - 1) // 2
    bv = tuple(-x for x in t[k:])
    if sum(bv) != 0:
        return None
    for (i, j), x in zip(pair_list(vpoints(g.n)), t[:k]):
        if x != -bv[i - 1] * bv[j - 1]:
            return None
    return (1, bv)


def b_label(b) -> str:
    """Compressed descending label, e.g. (1^2,0,-1)."""
    xs = sorted((int(v) for v in b), reverse=True)
    parts = []
    i = 0
    while i < len(xs):
        j = i
        while j < len(xs) and xs[j] == xs[i]:
            j += 1
        parts.append(f"{xs[i]}^{j - i}" if j - i > 1 else f"{xs[i]}")
        i = j
    return "(" + ",".join(parts) + ")"
