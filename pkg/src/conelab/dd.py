"""Exact double description: rays of {x : E x = 0, A x >= 0}.

All vectors are primitive integer tuples; arithmetic is exact (numpy int64
batches carry an overflow guard and fall back to Python big ints).

Constraints are processed in a fixed order: ascending maximum coefficient,
then lexicographic.  Small-coefficient rows build well-behaved intermediate
cones before the exotic dense rows arrive; pure lexicographic order makes
highly redundant inputs such as the bounded hypermetric descriptions blow up
mid-run.  The order is a function of the input set only, and ray lists are
re-sorted after every insertion, so output and trajectory are bitwise
reproducible across backends and worker counts.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd

import numpy as np

from . import kernels, linalg

_I64_SAFE = 2 ** 62


class ResourceCap(Exception):
    """Raised when the insertion budget runs out; progress is checkpointed."""


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _reduce_row(row) -> tuple[int, ...]:
    g = 0
    for x in row:
        g = gcd(g, x)
    if g > 1:
        return tuple(int(x) // g for x in row)
    return tuple(int(x) for x in row)


def _int_matrix(rows):
    """Rows as an int64 matrix, or None if any entry does not fit."""
    try:
        m = np.array(rows, dtype=np.int64)
    except OverflowError:
        return None
    return m


@dataclass
class DDResult:
    rays: tuple[tuple[int, ...], ...]
    lineality: tuple[tuple[int, ...], ...]
    zsets: tuple[int, ...]              # bitmask over `ineqs`, aligned with rays
    ineqs: tuple[tuple[int, ...], ...]  # in processed order


class _State:
    """Mutable engine state; serializable for checkpoint/resume."""

    def __init__(self, dim, lineality, rays, zsets, t, dim_cur):
        self.dim = dim
        self.lineality = lineality          # list of int tuples
        self.rays = rays                    # list of int tuples
        self.zsets = zsets                  # list of python ints
        self.t = t                          # number of inequalities processed
        self.dim_cur = dim_cur

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "lineality": [list(v) for v in self.lineality],
            "rays": [list(v) for v in self.rays],
            "zsets": list(self.zsets),
            "t": self.t,
            "dim_cur": self.dim_cur,
        }

    @classmethod
    def from_dict(cls, d) -> "_State":
        return cls(d["dim"], [tuple(v) for v in d["lineality"]],
                   [tuple(v) for v in d["rays"]], [int(z) for z in d["zsets"]],
                   d["t"], d["dim_cur"])


def _insert_key(v: tuple[int, ...]):
    return (max(abs(x) for x in v), v)


def prepare_inequalities(ineqs) -> tuple[tuple[int, ...], ...]:
    """Primitivize, dedupe, and fix the insertion order (gentlest first)."""
    seen = {}
    for a in ineqs:
        v = linalg.primitive(a)
        if any(v):
            seen[v] = None
    return tuple(sorted(seen, key=_insert_key))


def _exact_rank(rows) -> int:
    ech = linalg.Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def _batch_dots(a, rays, rmat):
    """Exact dot of every ray with a; int64 fast path when provably safe."""
    if rmat is not None and rays:
        maxa = max(abs(x) for x in a) or 1
        maxr = int(np.abs(rmat).max()) or 1
        if len(a) * maxa * maxr < _I64_SAFE:
            return np.asarray(rmat @ np.array(a, dtype=np.int64), dtype=np.int64).tolist()
    return [_dot(a, r) for r in rays]


def _combine_batch(pairs, dots, rays, rmat):
    """New rays (a.r+) r- - (a.r-) r+ for the adjacent (p, m) index pairs."""
    out = []
    safe = False
    if rmat is not None and pairs:
        maxd = max(max(abs(dots[p]), abs(dots[m])) for p, m in pairs)
        maxr = int(np.abs(rmat).max()) or 1
        safe = 2 * maxd * maxr < _I64_SAFE
    if safe:
        parr = np.array([p for p, _ in pairs], dtype=np.int64)
        marr = np.array([m for _, m in pairs], dtype=np.int64)
        dp = np.array([dots[p] for p, _ in pairs], dtype=np.int64)
        dm = np.array([dots[m] for _, m in pairs], dtype=np.int64)
        new = dp[:, None] * rmat[marr] - dm[:, None] * rmat[parr]
        g = np.gcd.reduce(np.abs(new), axis=1)
        g[g == 0] = 1
        new //= g[:, None]
        for row in new:
            out.append(tuple(int(x) for x in row))
    else:
        for p, m in pairs:
            row = [dots[p] * y - dots[m] * x for x, y in zip(rays[p], rays[m])]
            out.append(_reduce_row(row))
    return out


def _find_adjacent(state: _State, ipos, ineg, jobs: int):
    """Adjacent (p, m) ray-index pairs for the current insertion."""
    min_bits = max(state.dim_cur - len(state.lineality) - 2, 0)
    words = max((state.t + 63) // 64, 1)
    Z = kernels.pack_zsets(state.zsets, words)
    ineg_arr = np.array(ineg, dtype=np.int64)

    def run(chunk):
        res = []
        for p in chunk:
            hits = kernels.adjacent_negatives(Z, p, ineg_arr, min_bits)
            res.extend((p, int(ineg_arr[h])) for h in hits)
        return res

    if jobs <= 1 or len(ipos) < 2 * jobs:
        return run(ipos)
    size = (len(ipos) + jobs - 1) // jobs
    chunks = [ipos[i:i + size] for i in range(0, len(ipos), size)]
    pairs = []
    with ThreadPoolExecutor(max_workers=jobs) as ex:
        for part in ex.map(run, chunks):
            pairs.extend(part)
    return pairs


def _sort_records(state: _State):
    order = sorted(range(len(state.rays)), key=lambda i: state.rays[i])
    state.rays = [state.rays[i] for i in order]
    state.zsets = [state.zsets[i] for i in order]


def _insert(state: _State, a, jobs: int):
    t = state.t
    # lineality pivot: the constraint slices the lineality space
    piv = next((i for i, l in enumerate(state.lineality) if _dot(a, l) != 0), None)
    if piv is not None:
        l0 = state.lineality[piv]
        if _dot(a, l0) < 0:
            l0 = tuple(-x for x in l0)
        al0 = _dot(a, l0)
        newlin = []
        for i, l in enumerate(state.lineality):
            if i == piv:
                continue
            al = _dot(a, l)
            newlin.append(linalg.primitive_signed(
                [al0 * x - al * y for x, y in zip(l, l0)]))
        state.lineality = sorted(newlin)
        newrays = []
        for r in state.rays:
            ar = _dot(a, r)
            newrays.append(_reduce_row([al0 * x - ar * y for x, y in zip(r, l0)]))
        state.rays = newrays
        state.zsets = [z | (1 << t) for z in state.zsets]
        state.rays.append(l0)
        state.zsets.append((1 << t) - 1)   # tight at everything before, not at t
        state.t = t + 1
        _sort_records(state)
        return

    rmat = _int_matrix(state.rays) if state.rays else None
    dots = _batch_dots(a, state.rays, rmat)
    ipos = [i for i, d in enumerate(dots) if d > 0]
    ineg = [i for i, d in enumerate(dots) if d < 0]

    if not ineg:
        for i, d in enumerate(dots):
            if d == 0:
                state.zsets[i] |= 1 << t
        state.t = t + 1
        return

    if not ipos:
        # implicit equality on the new cone: dimension may drop
        keep = [i for i, d in enumerate(dots) if d == 0]
        state.rays = [state.rays[i] for i in keep]
        state.zsets = [state.zsets[i] | (1 << t) for i in keep]
        state.dim_cur = len(state.lineality) + _exact_rank(state.rays)
        state.t = t + 1
        _sort_records(state)
        return

    pairs = _find_adjacent(state, ipos, ineg, jobs)
    born = _combine_batch(pairs, dots, state.rays, rmat)
    born_z = [(state.zsets[p] & state.zsets[m]) | (1 << t) for p, m in pairs]

    keep_rays, keep_z = [], []
    for i, d in enumerate(dots):
        if d > 0:
            keep_rays.append(state.rays[i])
            keep_z.append(state.zsets[i])
        elif d == 0:
            keep_rays.append(state.rays[i])
            keep_z.append(state.zsets[i] | (1 << t))
    state.rays = keep_rays + born
    state.zsets = keep_z + born_z
    state.t = t + 1
    _sort_records(state)


def double_description(ineqs, dim: int, equalities=(), *, jobs: int = 1,
                       checkpoint=None, log=None, max_steps: int | None = None
                       ) -> DDResult:
    """Extreme rays (and lineality) of {x in R^dim : E x = 0, A x >= 0}.

    `checkpoint`, when given, is an object with load()/save(dict)/clear();
    the state is saved after every insertion and a partial run resumes from
    the last saved state.  `max_steps` bounds the insertions of this call:
    when exceeded the state is saved and ResourceCap is raised.
    """
    ineqs = prepare_inequalities(ineqs)
    eqs = [linalg.primitive(e) for e in equalities if any(linalg.primitive(e))]

    state = None
    if checkpoint is not None:
        saved = checkpoint.load()
        if saved is not None:
            state = _State.from_dict(saved)
    if state is None:
        if eqs:
            lin = linalg.nullspace(eqs, ncols=dim)
        else:
            lin = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
        state = _State(dim, sorted(lin), [], [], 0, len(lin))

    steps = 0
    while state.t < len(ineqs):
        if max_steps is not None and steps >= max_steps:
            if checkpoint is not None:
                flush = getattr(checkpoint, "flush", checkpoint.save)
                flush(state.to_dict())
            raise ResourceCap(
                f"stopped after {steps} insertions at t={state.t}/{len(ineqs)}")
        _insert(state, ineqs[state.t], jobs)
        steps += 1
        if log is not None:
            log(state.t, len(ineqs), len(state.rays))
        if checkpoint is not None:
            checkpoint.save(state.to_dict())

    lin_rows, _ = linalg.rref(state.lineality) if state.lineality else ([], [])
    lineality = tuple(linalg.primitive_signed(r) for r in lin_rows)
    if checkpoint is not None:
        checkpoint.clear()
    return DDResult(tuple(state.rays), lineality, tuple(state.zsets), ineqs)
