"""Cached, resumable cone conversions and the batch facet pipelines."""

from __future__ import annotations

from fractions import Fraction

from .cache import Cache, ENGINE_VERSION
from .conefile import cone_from_dict, cone_to_dict
from .facetlab import combined_tuple, transport_facet
from .polyhedra import Cone, h_to_v, v_to_h
from .vectors import PairVector, vpoints0


def conversion_key(cone: Cone, direction: str, cache: Cache) -> str:
    side = cone.rays if direction == "v_to_h" else cone.inequalities
    return cache.key_for({
        "op": direction,
        "engine": ENGINE_VERSION,
        "ambient": {"kind": cone.ambient.kind, "points": list(cone.ambient.points)},
        "equalities": [list(r) for r in cone.equalities],
        "rows": [list(r) for r in side],
        "lineality": [list(r) for r in cone.lineality],
    })


def convert(cone: Cone, direction: str, *, cache: Cache | None = None,
            jobs: int = 1, resume: bool = False, checkpoint_every: int = 1,
            max_steps: int | None = None, log_cb=None) -> Cone:
    """v_to_h / h_to_v with content-addressed caching and checkpoint/resume.

    Without `resume` a stale checkpoint for the same key is discarded.  On a
    cache hit the stored result is returned as-is (it is bit-identical to a
    fresh run by construction).
    """
    if direction not in ("v_to_h", "h_to_v"):
        raise ValueError(f"unknown direction {direction!r}")
    op = v_to_h if direction == "v_to_h" else h_to_v
    if cache is None:
        return op(cone, jobs=jobs, log_cb=log_cb, max_steps=max_steps)
    key = conversion_key(cone, direction, cache)
    hit = cache.get(key)
    if hit is not None:
        got = cone_from_dict(hit)
        return got
    ckpt = cache.checkpoint(key, every=checkpoint_every)
    if not resume:
        ckpt.clear()
    out = op(cone, jobs=jobs, checkpoint=ckpt, log_cb=log_cb, max_steps=max_steps)
    cache.put(key, cone_to_dict(out))
    return out


def facet_vectors(cone: Cone) -> list[PairVector]:
    """Facet rows of a pair-space cone as PairVectors."""
    return [PairVector(cone.ambient.points, tuple(Fraction(x) for x in f))
            for f in cone.inequalities]


def transported_facets(cone: Cone, n: int):
    """(facet index, canonical combined tuple) for facets containing the e_0 ray."""
    out = []
    for i, f in enumerate(cone.inequalities):
        vec = PairVector(vpoints0(n), tuple(Fraction(x) for x in f))
        g = transport_facet(vec)
        if g is not None:
            out.append((i, combined_tuple(g)))
    return out
