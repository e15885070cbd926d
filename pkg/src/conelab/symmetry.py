"""Group actions on facet vectors, canonical forms, orbits, switching classes.

The groups are the declared ones from the theory: coordinate permutations of
the point set (Sigma_m on cones over V u {0}, Sigma_n on the projected cones)
optionally extended by the reversal involution q -> q* (the Sigma_2 factor;
it negates weights).  Heavy lifting happens on plain integer tuples via
precomputed index maps; orbit partition of an invariant facet list is done by
union-find closure under group generators and falls back to full expansion
when the input set is not closed.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import permutations

from .facetlab import combined_tuple, facet_record, qn_from_combined, switch_pair_vector
from .vectors import (ArcVector, PairVector, QnVector, arc_list, pair_index,
                      pair_list, vpoints)


@dataclass(frozen=True)
class GroupElement:
    """A relabeling of the sorted point list, plus the optional reversal."""

    points: tuple[int, ...]
    perm: tuple[int, ...]               # image of points[a] is perm[a]
    reversed: bool = False

    def __post_init__(self):
        if sorted(self.perm) != sorted(self.points):
            raise ValueError("perm must permute the point set")

    def apply(self, p: int) -> int:
        return self.perm[self.points.index(p)]

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        """Composition with act(a * b, v) == act(a, act(b, v)).

        The action sigma(q)_ij = q_{sigma(i)sigma(j)} pulls labels back, so
        the composed relabeling is sigma_b then sigma_a on indices.
        """
        if self.points != other.points:
            raise ValueError("group elements over different point sets")
        perm = tuple(other.apply(q) for q in self.perm)
        return GroupElement(self.points, perm, self.reversed ^ other.reversed)

    def inverse(self) -> "GroupElement":
        inv = [0] * len(self.points)
        for a, img in enumerate(self.perm):
            inv[self.points.index(img)] = self.points[a]
        return GroupElement(self.points, tuple(inv), self.reversed)


def identity(points) -> GroupElement:
    points = tuple(points)
    return GroupElement(points, points)


def symmetric_group(points, reversal: bool = False):
    """All elements of Sigma(points), doubled by reversal when asked."""
    points = tuple(points)
    for perm in permutations(points):
        yield GroupElement(points, perm)
        if reversal:
            yield GroupElement(points, perm, True)


def group_generators(points, reversal: bool = False) -> list[GroupElement]:
    points = tuple(points)
    gens = []
    if len(points) >= 2:
        swapped = (points[1], points[0]) + points[2:]
        gens.append(GroupElement(points, swapped))
        gens.append(GroupElement(points, points[1:] + points[:1]))
    if reversal:
        gens.append(GroupElement(points, points, True))
    return gens or [identity(points)]


def act(e: GroupElement, v):
    """sigma(q)_ij = q_{sigma(i) sigma(j)}, then the transpose when reversed."""
    if isinstance(v, PairVector):
        if e.reversed:
            raise ValueError("reversal does not act on pair vectors")
        if v.points != e.points:
            raise ValueError("dimension mismatch")
        return PairVector(v.points, tuple(
            v[(e.apply(i), e.apply(j))] for (i, j) in pair_list(v.points)))
    if isinstance(v, ArcVector):
        if v.points != e.points:
            raise ValueError("dimension mismatch")
        if e.reversed:
            return ArcVector(v.points, tuple(
                v[(e.apply(j), e.apply(i))] for (i, j) in arc_list(v.points)))
        return ArcVector(v.points, tuple(
            v[(e.apply(i), e.apply(j))] for (i, j) in arc_list(v.points)))
    if isinstance(v, QnVector):
        if vpoints(v.n) != e.points:
            raise ValueError("dimension mismatch")
        sym = PairVector(v.sym.points, tuple(
            v.sym[(e.apply(i), e.apply(j))] for (i, j) in pair_list(v.sym.points)))
        w = tuple(v.weight(e.apply(i)) for i in e.points)
        if e.reversed:
            w = tuple(-x for x in w)
        return QnVector(v.n, sym, w)
    raise TypeError(f"cannot act on {type(v).__name__}")


# -- fast tuple-level action ---------------------------------------------------

def _sort_key(v):
    if isinstance(v, QnVector):
        return (v.sym.coords, v.weights)
    return v.coords


def canonical_form(v, *, reversal: bool = False):
    """Lexicographically minimal image over the group (full orbit expansion)."""
    points = vpoints(v.n) if isinstance(v, QnVector) else v.points
    best = None
    for e in symmetric_group(points, reversal and not isinstance(v, PairVector)):
        img = act(e, v)
        if best is None or _sort_key(img) < _sort_key(best):
            best = img
    return best


class TupleAction:
    """Index/sign maps turning a group into functions on integer tuples.

    layout "pairs": coordinates are unordered pairs of `points` (reversal not
    allowed).  layout "combined": a canonical facet tuple (sym block over
    pairs of V, then n weight entries); reversal negates the weight block.
    """

    def __init__(self, points, layout: str, reversal: bool = False):
        self.points = tuple(points)
        self.layout = layout
        self.reversal = reversal
        if layout not in ("pairs", "combined"):
            raise ValueError(layout)
        self.generator_maps = [self._map_of(e) for e in
                               group_generators(self.points, reversal)]
        self._all_maps = None

    def _map_of(self, e: GroupElement):
        pl = pair_list(self.points)
        pidx = pair_index(self.points)
        pmap = []
        for (i, j) in pl:
            a, b = e.apply(i), e.apply(j)
            pmap.append(pidx[(a, b) if a < b else (b, a)])
        if self.layout == "pairs":
            if e.reversed:
                raise ValueError("reversal does not act on pair layouts")
            return (tuple(pmap), 1)
        k = len(pl)
        wmap = [k + self.points.index(e.apply(p)) for p in self.points]
        return (tuple(pmap) + tuple(wmap), -1 if e.reversed else 1)

    def all_maps(self):
        if self._all_maps is None:
            self._all_maps = [self._map_of(e) for e in
                              symmetric_group(self.points, self.reversal)]
        return self._all_maps

    def apply(self, m, t: tuple) -> tuple:
        idx, sign = m
        if sign == 1 or self.layout == "pairs":
            return tuple(t[i] for i in idx)
        k = len(pair_list(self.points))
        return tuple(t[i] for i in idx[:k]) + tuple(-t[i] for i in idx[k:])

    def canonical(self, t: tuple) -> tuple:
        return min(self.apply(m, t) for m in self.all_maps())


@dataclass
class Orbit:
    canonical: tuple
    members: tuple[int, ...]            # indices into the input list
    orbit_id: str

    @property
    def size(self) -> int:
        return len(self.members)


def _orbit_id(canonical: tuple) -> str:
    return hashlib.sha256(repr(canonical).encode()).hexdigest()[:12]


def orbit_partition_tuples(tuples, action: TupleAction) -> list[Orbit]:
    """Partition a list of integer tuples into group orbits.

    Union-find closure under the generators when the list is setwise
    invariant; falls back to grouping by full canonical form otherwise.
    Orbits are sorted by canonical representative.
    """
    tuples = [tuple(t) for t in tuples]
    index = {}
    for i, t in enumerate(tuples):
        index.setdefault(t, i)
    parent = list(range(len(tuples)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    closed = True
    for i, t in enumerate(tuples):
        for m in action.generator_maps:
            j = index.get(action.apply(m, t))
            if j is None:
                closed = False
                break
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
        if not closed:
            break

    groups: dict[tuple, list[int]] = {}
    if closed:
        # duplicates of the same tuple share a union-find root via `index`
        for i, t in enumerate(tuples):
            ri, rj = find(i), find(index[t])
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
        roots: dict[int, list[int]] = {}
        for i in range(len(tuples)):
            roots.setdefault(find(i), []).append(i)
        for root, members in roots.items():
            groups[action.canonical(tuples[root])] = members
    else:
        for i, t in enumerate(tuples):
            groups.setdefault(action.canonical(t), []).append(i)

    return [Orbit(c, tuple(sorted(m)), _orbit_id(c))
            for c, m in sorted(groups.items())]


def orbit_partition(vectors, *, reversal: bool = False) -> list[Orbit]:
    """Spec-level orbit partition of facet vectors (PairVector or QnVector)."""
    vectors = list(vectors)
    if not vectors:
        return []
    first = vectors[0]
    if isinstance(first, QnVector):
        action = TupleAction(vpoints(first.n), "combined", reversal)
        tuples = [combined_tuple(v) for v in vectors]
    else:
        if reversal:
            raise ValueError("reversal does not act on pair vectors")
        action = TupleAction(first.points, "pairs")
        tuples = [tuple(int(x) for x in v.coords) for v in vectors]
    return orbit_partition_tuples(tuples, action)


def switching_classes(vectors, n: int) -> tuple[list[Orbit], list[list[int]]]:
    """Orbits of Cut_{n+1} facets and their fusion under root switchings.

    Returns (orbits under Sigma_{n+1}, classes as lists of orbit positions).
    Two facets have the same type iff a permutation plus a switching by a
    root maps one to the other.
    """
    vectors = list(vectors)
    points = vectors[0].points
    action = TupleAction(points, "pairs")
    tuples = [tuple(int(x) for x in v.coords) for v in vectors]
    orbits = orbit_partition_tuples(tuples, action)

    member_orbit = {}
    for k, o in enumerate(orbits):
        for i in o.members:
            member_orbit[tuples[i]] = k
    parent = list(range(len(orbits)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for k, o in enumerate(orbits):
        rep = vectors[o.members[0]]
        rec = facet_record(rep, n)
        for T in rec.roots:
            if not T:
                continue
            img = switch_pair_vector(rep, T)
            j = member_orbit.get(tuple(int(x) for x in img.coords))
            if j is None:
                raise AssertionError("switched facet left the facet set")
            ri, rj = find(k), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

    classes: dict[int, list[int]] = {}
    for k in range(len(orbits)):
        classes.setdefault(find(k), []).append(k)
    return orbits, [sorted(v) for v in sorted(classes.values())]
