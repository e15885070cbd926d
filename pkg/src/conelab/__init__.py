"""conelab: exact cones of weighted quasi-metrics, oriented cuts and their facets."""

__version__ = "0.1.0"

from .vectors import (ArcVector, PairVector, QnVector, arc_inner, expand,
                      is_in_Qn, pair_inner, phi, phi_inverse, project_to_Qn,
                      qn_inner, split, transpose, weight_basis)
from .generators import (ConeId, GeneratorSpec, build_cone, cut_vector,
                         hypermetric_vector, ocut_vector, sym_cut_vector,
                         switch_b, weight_cut_vector, wqm_from_metric)
from .polyhedra import Cone, dim, h_to_v, incidence, is_facet, membership, v_to_h

__all__ = [
    "ArcVector", "PairVector", "QnVector", "arc_inner", "expand", "is_in_Qn",
    "pair_inner", "phi", "phi_inverse", "project_to_Qn", "qn_inner", "split",
    "transpose", "weight_basis",
    "ConeId", "GeneratorSpec", "build_cone", "cut_vector", "hypermetric_vector",
    "ocut_vector", "sym_cut_vector", "switch_b", "weight_cut_vector",
    "wqm_from_metric",
    "Cone", "dim", "h_to_v", "incidence", "is_facet", "membership", "v_to_h",
    "__version__",
]
