"""Cones with exact H/V representations and the conversions between them.

A Cone stores primitive integer vectors in a fixed lexicographic coordinate
order given by its ambient space (unordered pairs or arcs of a point set).
v_to_h / h_to_v run the double description engine; certification (is_facet,
incidence, membership) is done by direct exact evaluation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from fractions import Fraction

from . import dd, linalg
from .vectors import ArcVector, PairVector, arc_list, pair_list

log = logging.getLogger("conelab")


@dataclass(frozen=True)
class Ambient:
    kind: str                  # "pairs" | "arcs"
    points: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("pairs", "arcs"):
            raise ValueError(f"unknown ambient kind {self.kind!r}")

    @property
    def dim(self) -> int:
        if self.kind == "pairs":
            return len(pair_list(self.points))
        return len(arc_list(self.points))

    def labels(self) -> list[str]:
        if self.kind == "pairs":
            return [f"{i},{j}" for i, j in pair_list(self.points)]
        return [f"{i}>{j}" for i, j in arc_list(self.points)]

    def vector(self, coords) -> PairVector | ArcVector:
        coords = tuple(Fraction(c) for c in coords)
        if self.kind == "pairs":
            return PairVector(self.points, coords)
        return ArcVector(self.points, coords)


def pairs_ambient(points) -> Ambient:
    return Ambient("pairs", tuple(points))


def arcs_ambient(points) -> Ambient:
    return Ambient("arcs", tuple(points))


@dataclass(frozen=True)
class Cone:
    """Polyhedral cone; either representation side may be absent (None)."""

    ambient: Ambient
    equalities: tuple[tuple[int, ...], ...] = ()
    inequalities: tuple[tuple[int, ...], ...] | None = None
    rays: tuple[tuple[int, ...], ...] | None = None
    lineality: tuple[tuple[int, ...], ...] = ()
    rays_minimal: bool = False
    ineqs_minimal: bool = False
    meta: dict = field(default_factory=dict, compare=False)


def make_cone(ambient, *, equalities=(), inequalities=None, rays=None,
              meta=None, **flags) -> Cone:
    """Primitivize and sort every vector side of a cone description."""
    eqs = tuple(sorted({linalg.primitive(e) for e in equalities if any(linalg.primitive(e))}))
    ine = None if inequalities is None else dd.prepare_inequalities(inequalities)
    ray = None if rays is None else dd.prepare_inequalities(rays)
    return Cone(ambient, eqs, ine, ray, meta=dict(meta or {}), **flags)


def v_to_h(cone: Cone, *, jobs: int = 1, checkpoint=None, log_cb=None,
           max_steps: int | None = None) -> Cone:
    """Add the certified minimal facet description (within the linear hull)."""
    if not cone.rays:
        raise ValueError("v_to_h needs a nonempty ray list")
    span_rows = list(cone.rays) + list(cone.lineality)
    hull_eqs = linalg.nullspace(span_rows, ncols=cone.ambient.dim)
    res = dd.double_description(
        cone.rays, cone.ambient.dim,
        equalities=list(hull_eqs) + list(cone.lineality),
        jobs=jobs, checkpoint=checkpoint, log=log_cb, max_steps=max_steps)
    if res.lineality:
        raise ValueError("inconsistent V-representation: dual cone not pointed")
    return replace(cone, inequalities=tuple(sorted(res.rays)), ineqs_minimal=True,
                   equalities=tuple(sorted(hull_eqs)))


def h_to_v(cone: Cone, *, jobs: int = 1, checkpoint=None, log_cb=None,
           max_steps: int | None = None) -> Cone:
    """Add the certified minimal ray list (plus lineality basis if not pointed)."""
    if cone.inequalities is None:
        raise ValueError("h_to_v needs an inequality list")
    res = dd.double_description(
        cone.inequalities, cone.ambient.dim, equalities=cone.equalities,
        jobs=jobs, checkpoint=checkpoint, log=log_cb, max_steps=max_steps)
    if res.lineality:
        log.warning("cone %s has nonzero lineality (dim %d); reporting basis",
                    cone.meta.get("family", "?"), len(res.lineality))
    return replace(cone, rays=tuple(sorted(res.rays)), lineality=res.lineality,
                   rays_minimal=True)


def dim(cone: Cone) -> int:
    """Dimension of the linear hull."""
    if cone.rays is not None:
        return linalg.rank(list(cone.rays) + list(cone.lineality))
    if cone.inequalities:
        return dim(h_to_v(cone))
    # bare subspace: equalities only
    return cone.ambient.dim - linalg.rank(cone.equalities) if cone.equalities \
        else cone.ambient.dim


def is_facet(f, cone: Cone) -> tuple[bool, tuple[int, ...]]:
    """Validity plus incident-ray rank test; witness = incident ray indices."""
    if not cone.rays_minimal:
        raise ValueError("is_facet needs certified rays")
    f = linalg.primitive(f)
    incident = []
    for i, r in enumerate(cone.rays):
        s = sum(x * y for x, y in zip(f, r))
        if s < 0:
            return False, ()
        if s == 0:
            incident.append(i)
    # validity makes rank <= dim-1 automatic, so stop as soon as it is reached
    want = dim(cone) - 1
    ech = linalg.Echelon()
    for row in list(cone.lineality) + [cone.rays[i] for i in incident]:
        ech.add(row)
        if ech.rank == want:
            return True, tuple(incident)
    return ech.rank == want, tuple(incident)


def membership(x, cone: Cone):
    """Classify a point against the H-representation.

    Returns (status, violated, tight): status is "interior", "boundary" or
    "outside"; violated/tight list the offending or supporting constraint
    indices ("eq:i" / "ineq:i").
    """
    if cone.inequalities is None:
        raise ValueError("membership needs an H-representation")
    x = [Fraction(v) for v in x]
    violated, tight = [], []
    for i, e in enumerate(cone.equalities):
        if sum(a * b for a, b in zip(e, x)) != 0:
            violated.append(f"eq:{i}")
    for i, a in enumerate(cone.inequalities):
        s = sum(p * q for p, q in zip(a, x))
        if s < 0:
            violated.append(f"ineq:{i}")
        elif s == 0:
            tight.append(f"ineq:{i}")
    if violated:
        return "outside", violated, tight
    return ("boundary" if tight else "interior"), violated, tight


def incidence(cone: Cone) -> list[tuple[int, ...]]:
    """Per facet: the tuple of incident ray indices ((f, r) = 0 exactly)."""
    if cone.inequalities is None or cone.rays is None:
        raise ValueError("incidence needs both representations")
    out = []
    for f in cone.inequalities:
        inc = tuple(i for i, r in enumerate(cone.rays)
                    if sum(x * y for x, y in zip(f, r)) == 0)
        out.append(inc)
    return out
