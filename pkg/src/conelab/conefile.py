"""Cone files and orbit reports: structured, versioned, lossless text formats.

Rationals are serialized as strings "p/q" (or "p" when integral), vectors in
the fixed lexicographic coordinate order of the ambient space; files are
self-describing (header carries family, point set and creation parameters).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__
from .polyhedra import Ambient, Cone

CONE_FORMAT = "conelab-cone/1"
REPORT_FORMAT = "conelab-orbits/1"


def rational_str(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def parse_rational(s: str):
    f = Fraction(s)
    return int(f) if f.denominator == 1 else f


def _rows_out(rows):
    return [[rational_str(x) for x in row] for row in rows]


def _rows_in(rows):
    return tuple(tuple(parse_rational(x) for x in row) for row in rows)


def dumps_canonical(obj) -> bytes:
    """Deterministic JSON bytes: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()


def cone_to_dict(cone: Cone, *, with_incidence=False) -> dict:
    d = {
        "format": CONE_FORMAT,
        "tool": {"name": "conelab", "version": __version__},
        "family": cone.meta.get("family"),
        "n": cone.meta.get("n"),
        "params": {k: v for k, v in cone.meta.items() if k not in ("family", "n")},
        "ambient": {"kind": cone.ambient.kind, "points": list(cone.ambient.points),
                    "labels": cone.ambient.labels()},
        "flags": {"rays_minimal": cone.rays_minimal, "ineqs_minimal": cone.ineqs_minimal},
        "equalities": _rows_out(cone.equalities),
        "inequalities": None if cone.inequalities is None else _rows_out(cone.inequalities),
        "rays": None if cone.rays is None else _rows_out(cone.rays),
        "lineality": _rows_out(cone.lineality),
    }
    if with_incidence:
        from .polyhedra import incidence
        d["incidence"] = [list(rows) for rows in incidence(cone)]
    return d


def cone_from_dict(d: dict) -> Cone:
    if d.get("format") != CONE_FORMAT:
        raise ValueError(f"not a cone file (format {d.get('format')!r})")
    amb = Ambient(d["ambient"]["kind"], tuple(d["ambient"]["points"]))
    meta = {"family": d.get("family"), "n": d.get("n")} | dict(d.get("params") or {})
    return Cone(
        ambient=amb,
        equalities=_rows_in(d["equalities"]),
        inequalities=None if d["inequalities"] is None else _rows_in(d["inequalities"]),
        rays=None if d["rays"] is None else _rows_in(d["rays"]),
        lineality=_rows_in(d["lineality"]),
        rays_minimal=d["flags"]["rays_minimal"],
        ineqs_minimal=d["flags"]["ineqs_minimal"],
        meta={k: v for k, v in meta.items() if v is not None},
    )


def write_cone(cone: Cone, path, *, with_incidence=False) -> Path:
    path = Path(path)
    path.write_text(json.dumps(cone_to_dict(cone, with_incidence=with_incidence),
                               indent=1, sort_keys=True) + "\n")
    return path


def read_cone(path) -> Cone:
    return cone_from_dict(json.loads(Path(path).read_text()))


@dataclass
class OrbitReport:
    cone: str
    group: str
    total: int
    orbits: list[dict]          # orbit_id, size, representative, b_label, flags

    def to_dict(self) -> dict:
        return {
            "format": REPORT_FORMAT,
            "tool": {"name": "conelab", "version": __version__},
            "cone": self.cone,
            "group": self.group,
            "total_facets": self.total,
            "orbit_count": len(self.orbits),
            "orbits": self.orbits,
        }

    def json_bytes(self) -> bytes:
        return dumps_canonical(self.to_dict())

    def csv_text(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["orbit_id", "size", "b_label", "symmetric", "zero_lifting",
                    "representative"])
        for o in self.orbits:
            w.writerow([o["orbit_id"], o["size"], o.get("b_label") or "",
                        int(o["symmetric"]), int(o["zero_lifting"]),
                        " ".join(o["representative"])])
        return buf.getvalue()

    def write(self, prefix) -> list[Path]:
        prefix = Path(prefix)
        jp = prefix.with_suffix(".json")
        cp = prefix.with_suffix(".csv")
        jp.write_bytes(self.json_bytes() + b"\n")
        cp.write_text(self.csv_text())
        return [jp, cp]
