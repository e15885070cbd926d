"""Generator vectors and definitional cone descriptions.

Cut-type vectors (cut, symmetric cut, weight cut, ocut), hypermetric vectors
f(b) with their switching, and the H/V representations of every cone family
the toolkit knows: MET, QMET, WMET, DWMET, UWMET, HYP, CUT, CUT_SYM, OCUT,
WQMET, WQHYP.

Point conventions: the distinguished point is 0.  For the cones on unordered
pairs (MET/HYP/CUT) the ConeId carries the total point count m and the ground
set is {0, .., m-1} with V = {1, .., m-1}; for the weighted-metric cones and
all arc-space cones it carries n = |V| and the ground set is {0..n} / {1..n}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg
from .polyhedra import Cone, arcs_ambient, make_cone, pairs_ambient
from .vectors import (ArcVector, PairVector, QnVector, bitriangle_equalities,
                      expand, pair_list, vpoints, vpoints0, weight_basis)

FAMILIES = ("MET", "QMET", "WMET", "DWMET", "UWMET", "HYP",
            "CUT", "CUT_SYM", "OCUT", "WQMET", "WQHYP")

GENERATOR_KINDS = ("CUT", "OCUT", "SYMCUT", "WCUT", "HYPERMETRIC", "TRIANGLE", "NONNEG")


@dataclass(frozen=True)
class ConeId:
    family: str
    n: int
    B: int | None = None    # hypermetric degree bound (HYP / WQHYP only)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown cone family {self.family!r}")
        if self.n < 2:
            raise ValueError("need at least 2 points")

    def __str__(self):
        return f"{self.family}_{self.n}" + (f"(B={self.B})" if self.B else "")


@dataclass(frozen=True)
class GeneratorSpec:
    """Addressable generator: a cut-type subset or a hypermetric b sequence."""

    kind: str
    S: tuple[int, ...] = ()
    b: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "HYPERMETRIC" and sum(self.b) not in (0, 1):
            raise ValueError("not negative/hypermetric type")


def subsets(points, *, nonempty=False, proper=False):
    """All subsets of a point tuple, in bitmask (lexicographic) order."""
    points = tuple(points)
    full = (1 << len(points)) - 1
    for mask in range(full + 1):
        if (nonempty and mask == 0) or (proper and mask == full):
            continue
        yield frozenset(p for i, p in enumerate(points) if mask >> i & 1)


# -- generator vectors --------------------------------------------------------

def cut_vector(S, n: int, with_zero: bool = False) -> PairVector:
    """delta(S): 1 exactly on the pairs crossing S (S a subset of V = {1..n})."""
    S = frozenset(S)
    points = vpoints0(n) if with_zero else vpoints(n)
    if not S <= set(vpoints(n)):
        raise ValueError("S must be a subset of V")
    entries = {}
    for (i, j) in pair_list(points):
        if (i in S) != (j in S):
            entries[(i, j)] = 1
    return PairVector.from_map(points, entries)


def sym_cut_vector(S, n: int) -> ArcVector:
    """delta^O(S) = phi(delta(S)): 1 on both arcs of every crossing pair."""
    S = frozenset(S)
    entries = {}
    for i in vpoints(n):
        for j in vpoints(n):
            if i != j and (i in S) != (j in S):
                entries[(i, j)] = 1
    return ArcVector.from_map(vpoints(n), entries)


def weight_cut_vector(S, n: int) -> ArcVector:
    """q(S) = sum of q(k) over k in S; antisymmetric and modular in S."""
    S = frozenset(S)
    entries = {}
    for i in S:
        for j in vpoints(n):
            if j not in S and j != i:
                entries[(i, j)] = 1
                entries[(j, i)] = -1
    return ArcVector.from_map(vpoints(n), entries)


def ocut_vector(S, n: int) -> ArcVector:
    """c(S): 1 exactly on the arcs leaving S."""
    S = frozenset(S)
    entries = {}
    for i in S:
        for j in vpoints(n):
            if j not in S:
                entries[(i, j)] = 1
    return ArcVector.from_map(vpoints(n), entries)


def ocut_qn(S, n: int) -> QnVector:
    """c(S) in split form: sym part delta(S)/2, weight 1/2 on S (gauged)."""
    d = cut_vector(S, n).scale(Fraction(1, 2))
    w = [Fraction(1, 2) if i in frozenset(S) else Fraction(0) for i in vpoints(n)]
    return QnVector.make(d, w)


def hypermetric_vector(b, points=None) -> PairVector:
    """f(b) with f(b)_(ij) = -b_i b_j; b must sum to 0 (negative type) or 1."""
    b = [int(x) for x in b]
    if sum(b) not in (0, 1):
        raise ValueError("not negative/hypermetric type")
    if points is None:
        points = vpoints(len(b))
    points = tuple(points)
    if len(points) != len(b):
        raise ValueError("b length does not match the point set")
    pos = {p: k for k, p in enumerate(points)}
    entries = {(i, j): -b[pos[i]] * b[pos[j]] for (i, j) in pair_list(points)}
    return PairVector.from_map(points, entries)


def switch_b(b, S, points=None) -> tuple[int, ...]:
    """Sign flip of b on S; S must be b-balanced (sum of b over S is 0)."""
    b = [int(x) for x in b]
    if points is None:
        points = vpoints(len(b))
    points = tuple(points)
    S = frozenset(S)
    if not S <= set(points):
        raise ValueError("S outside the point set of b")
    if sum(x for p, x in zip(points, b) if p in S) != 0:
        raise ValueError("S not b-balanced")
    return tuple(-x if p in S else x for p, x in zip(points, b))


def triangle_pair_vector(i: int, j: int, k: int, points) -> PairVector:
    """Facet vector of d_(ik) + d_(kj) - d_(ij) >= 0 (k the midpoint)."""
    return PairVector.from_map(tuple(points), {(i, k): 1, (k, j): 1, (i, j): -1})


def triangle_arc_vector(i: int, j: int, k: int, n: int) -> ArcVector:
    """t_ijk = e_ij + e_jk - e_ik: facet vector of q_ij + q_jk >= q_ik."""
    return ArcVector.from_map(vpoints(n), {(i, j): 1, (j, k): 1, (i, k): -1})


def generator_vector(spec: GeneratorSpec, n: int):
    if spec.kind == "CUT":
        return cut_vector(spec.S, n)
    if spec.kind == "OCUT":
        return ocut_vector(spec.S, n)
    if spec.kind == "SYMCUT":
        return sym_cut_vector(spec.S, n)
    if spec.kind == "WCUT":
        return weight_cut_vector(spec.S, n)
    if spec.kind == "HYPERMETRIC":
        return hypermetric_vector(spec.b)
    if spec.kind == "TRIANGLE":
        i, j, k = spec.S
        return triangle_arc_vector(i, j, k, n)
    if spec.kind == "NONNEG":
        i, j = spec.S
        return ArcVector.from_map(vpoints(n), {(i, j): 1})
    raise ValueError(spec.kind)


# -- transported hypermetric inequalities (arc-space representatives) ---------

def hyp_arc_vector(b0: int, bv, n: int) -> ArcVector:
    """Arc representative of the projected hypermetric inequality.

    For b on V u {0} with b_0 + sum(bv) = 1, the image inequality is
    -sum b_i b_j q_(ij) - b_0 sum b_i w_i >= 0; its canonical vector has
    sym part -b_i b_j and weights -b_0 b_i / n.
    """
    bv = [int(x) for x in bv]
    sym = hypermetric_vector([0] + bv, points=vpoints0(n))
    symv = PairVector(vpoints(n), tuple(sym[(i, j)] for (i, j) in pair_list(vpoints(n))))
    w = [Fraction(-b0 * x, n) for x in bv]
    return expand(QnVector.make(symv, w))


# -- cone construction ---------------------------------------------------------

def default_hyp_bound(m: int) -> int:
    """|b_i| bound making the HYP description exact: 1 up to 5 points, 2 at 6.

    Beyond 6 points the bounded description is an inner approximation of the
    facet list (outer as a cone) and is marked so in the metadata.
    """
    return 1 if m <= 5 else 2


def hypermetric_b_list(m: int, B: int) -> list[tuple[int, ...]]:
    """All b in {-B..B}^m with sum 1 and at least two nonzero entries."""
    out = []
    for b in product(range(-B, B + 1), repeat=m):
        if sum(b) == 1 and sum(1 for x in b if x) >= 2:
            out.append(b)
    return out


def build_cone(cid: ConeId, *, limit: int = 8) -> Cone:
    """Definitional representation of a cone family.

    V-representations for CUT / CUT_SYM / OCUT, H-representations for the
    rest.  `limit` caps the subset/b enumeration (default 8 points, hard cap
    16).
    """
    fam, n = cid.family, cid.n
    if limit > 16:
        raise ValueError("enumeration limit capped at 16")
    meta = {"family": fam, "n": n}

    if fam in ("CUT", "CUT_SYM", "OCUT"):
        nv = n - 1 if fam == "CUT" else n
        if nv > limit:
            raise ValueError(
                f"{fam}_{n} needs 2^{nv} generators; raise limit (<=16) to build")
    if fam in ("MET", "HYP") and n > limit:
        raise ValueError(f"{fam}_{n} exceeds the configured limit {limit}")

    if fam == "CUT":
        nv = n - 1
        rays = [cut_vector(S, nv, with_zero=True).coords
                for S in subsets(vpoints(nv), nonempty=True)]
        return make_cone(pairs_ambient(vpoints0(nv)), rays=rays, meta=meta)

    if fam == "CUT_SYM":
        rays = [sym_cut_vector(S, n).coords
                for S in subsets(vpoints(n), nonempty=True, proper=True)]
        return make_cone(arcs_ambient(vpoints(n)), rays=rays, meta=meta)

    if fam == "OCUT":
        rays = [ocut_vector(S, n).coords
                for S in subsets(vpoints(n), nonempty=True, proper=True)]
        return make_cone(arcs_ambient(vpoints(n)), rays=rays, meta=meta)

    if fam == "MET":
        pts = tuple(range(n))
        ineqs = [triangle_pair_vector(i, j, k, pts).coords
                 for i in pts for j in pts for k in pts
                 if i < j and k != i and k != j]
        return make_cone(pairs_ambient(pts), inequalities=ineqs, meta=meta)

    if fam == "HYP":
        B = cid.B or default_hyp_bound(n)
        meta["B"] = B
        meta["exact"] = n <= 5 or (n == 6 and B >= 2)
        pts = tuple(range(n))
        ineqs = [hypermetric_vector(b, points=pts).coords
                 for b in hypermetric_b_list(n, B)]
        return make_cone(pairs_ambient(pts), inequalities=ineqs, meta=meta)

    if fam in ("WMET", "DWMET", "UWMET"):
        pts = vpoints0(n)
        tri_v = [triangle_pair_vector(i, j, k, pts).coords
                 for i in vpoints(n) for j in vpoints(n) for k in vpoints(n)
                 if i < j and k != i and k != j]
        pos = [PairVector.from_map(pts, {(0, i): 1}).coords for i in vpoints(n)]
        # (ij)-type d_(ij) + d_(j0) - d_(i0) >= 0: midpoint j of the path i..0
        down = [triangle_pair_vector(i, 0, j, pts).coords
                for i in vpoints(n) for j in vpoints(n) if i != j]
        # (ij0)-type d_(i0) + d_(0j) - d_(ij) >= 0: midpoint 0
        up = [triangle_pair_vector(i, j, 0, pts).coords
              for i in vpoints(n) for j in vpoints(n) if i < j]
        if fam == "WMET":
            ineqs = tri_v + pos
        elif fam == "DWMET":
            ineqs = tri_v + down + pos
        else:
            ineqs = pos + up
        return make_cone(pairs_ambient(pts), inequalities=ineqs, meta=meta)

    if fam == "QMET":
        nonneg = [ArcVector.from_map(vpoints(n), {(i, j): 1}).coords
                  for i in vpoints(n) for j in vpoints(n) if i != j]
        tri = [triangle_arc_vector(i, j, k, n).coords
               for i in vpoints(n) for j in vpoints(n) for k in vpoints(n)
               if len({i, j, k}) == 3]
        return make_cone(arcs_ambient(vpoints(n)), inequalities=nonneg + tri, meta=meta)

    if fam == "WQMET":
        base = build_cone(ConeId("QMET", n), limit=limit)
        eqs = [t.coords for t in bitriangle_equalities(n)]
        return make_cone(arcs_ambient(vpoints(n)), equalities=eqs,
                         inequalities=base.inequalities, meta=meta)

    if fam == "WQHYP":
        B = cid.B or default_hyp_bound(n + 1)
        meta["B"] = B
        meta["exact"] = n + 1 <= 5 or (n + 1 == 6 and B >= 2)
        ineqs = []
        for b in hypermetric_b_list(n + 1, B):
            b0, bv = b[0], b[1:]
            if b0 in (0, 1):        # exactly the inequalities orthogonal to e_0
                ineqs.append(hyp_arc_vector(b0, bv, n).coords)
        eqs = [t.coords for t in bitriangle_equalities(n)]
        return make_cone(arcs_ambient(vpoints(n)), equalities=eqs,
                         inequalities=ineqs, meta=meta)

    raise ValueError(f"unknown cone family {fam!r}")


# -- weighted quasi-metrics from metrics --------------------------------------

def wqm_from_metric(d: PairVector) -> QnVector:
    """The weighted quasi-metric of a metric on V u {0}: q_(ij) = d_(ij), w_i = d_(0i).

    The expansion then satisfies q_ij = d_ij + d_i0 - d_j0 up to the weight
    gauge.  Raises if d violates a triangle inequality.
    """
    pts = d.points
    if pts[0] != 0:
        raise ValueError("metric must live on V u {0}")
    n = len(pts) - 1
    for i in pts:
        for j in pts:
            for k in pts:
                if i < j and k != i and k != j:
                    if d[(i, k)] + d[(k, j)] < d[(i, j)]:
                        raise ValueError(
                            f"triangle violated: d({i},{k}) + d({k},{j}) < d({i},{j})")
    sym = PairVector(vpoints(n), tuple(d[(i, j)] for (i, j) in pair_list(vpoints(n))))
    return QnVector.make(sym, [d[(0, i)] for i in vpoints(n)])
