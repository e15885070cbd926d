import random

import pytest

from conelab.facetlab import qn_from_arc_facet, transport_facet
from conelab.generators import (ConeId, build_cone, ocut_qn, ocut_vector,
                                triangle_pair_vector)
from conelab.polyhedra import v_to_h
from conelab.symmetry import (GroupElement, TupleAction, act, canonical_form,
                              group_generators, identity, orbit_partition,
                              orbit_partition_tuples, switching_classes,
                              symmetric_group)
from conelab.vectors import PairVector, vpoints, vpoints0


def test_identity_and_composition():
    pts = vpoints(4)
    e = identity(pts)
    v = ocut_vector({1, 3}, 4)
    assert act(e, v) == v
    rng = random.Random(0)
    elems = list(symmetric_group(pts, reversal=True))
    for _ in range(15):
        g1, g2 = rng.choice(elems), rng.choice(elems)
        assert act(g1 * g2, v) == act(g1, act(g2, v))
    g = rng.choice(elems)
    assert act(g.inverse(), act(g, v)) == v


def test_act_relabels_subsets():
    n = 3
    swap12 = GroupElement(vpoints(n), (2, 1, 3))
    assert act(swap12, ocut_vector({1}, n)) == ocut_vector({2}, n)
    # the paper convention sigma(q)_ij = q_{sigma(i)sigma(j)} pulls labels back
    rev = GroupElement(vpoints(n), vpoints(n), True)
    for S in ({1}, {1, 2}, {2, 3}):
        Sbar = set(vpoints(n)) - S
        assert act(rev, ocut_vector(S, n)) == ocut_vector(Sbar, n)
        q = ocut_qn(S, n)
        assert act(rev, q) == ocut_qn(Sbar, n)


def test_act_dimension_mismatch():
    with pytest.raises(ValueError, match="mismatch"):
        act(identity(vpoints(3)), ocut_vector({1}, 4))


def test_canonical_form_constant_on_orbits():
    rng = random.Random(1)
    n = 4
    elems = list(symmetric_group(vpoints(n), reversal=True))
    for S in ({1}, {1, 2}, {1, 2, 3}):
        q = ocut_qn(S, n).scale(2)
        base = canonical_form(q, reversal=True)
        for _ in range(10):
            e = rng.choice(elems)
            assert canonical_form(act(e, q), reversal=True) == base


def test_met4_triangles_single_orbit():
    m4 = v_to_h(build_cone(ConeId("CUT", 4)))
    vecs = [PairVector(vpoints0(3), tuple(map(int, f))) for f in m4.inequalities]
    # oracle: explicit orbit expansion of one triangle facet
    tri = triangle_pair_vector(1, 2, 3, vpoints0(3))
    orbit = {act(e, tri).coords for e in symmetric_group(vpoints0(3))}
    assert {v.coords for v in vecs} == orbit
    parts = orbit_partition(vecs)
    assert len(parts) == 1 and parts[0].size == 12


def test_asymmetric_pair_same_orbit_only_with_reversal():
    n = 4
    g = transport_facet(triangle_pair_vector(1, 0, 2, vpoints0(n)))
    gstar = transport_facet(triangle_pair_vector(2, 0, 1, vpoints0(n)))
    both = canonical_form(g, reversal=True), canonical_form(gstar, reversal=True)
    assert both[0] == both[1]
    # under plain permutations they are still one orbit here: g* = g with i,j swapped
    assert canonical_form(g) == canonical_form(gstar)


def test_ocut3_orbits():
    o3 = v_to_h(build_cone(ConeId("OCUT", 3)))
    facets = [qn_from_arc_facet(f, 3) for f in o3.inequalities]
    parts = orbit_partition(facets, reversal=True)
    assert len(parts) == 2
    assert sorted(p.size for p in parts) == [3, 6]
    assert sum(p.size for p in parts) == len(o3.inequalities)
    ids = {p.orbit_id for p in parts}
    assert len(ids) == 2


def test_orbit_partition_noninvariant_fallback():
    # a list that is not setwise invariant still partitions correctly
    n = 3
    vecs = [ocut_qn({1}, n).scale(2), ocut_qn({2}, n).scale(2)]
    parts = orbit_partition(vecs, reversal=False)
    assert len(parts) == 1 and parts[0].size == 2


def test_switching_classes_small_cuts():
    c4 = v_to_h(build_cone(ConeId("CUT", 4)))
    vecs = [PairVector(vpoints0(3), tuple(map(int, f))) for f in c4.inequalities]
    orbits, classes = switching_classes(vecs, 3)
    assert len(orbits) == 1 and len(classes) == 1

    c5 = v_to_h(build_cone(ConeId("CUT", 5)))
    vecs = [PairVector(vpoints0(4), tuple(map(int, f))) for f in c5.inequalities]
    orbits, classes = switching_classes(vecs, 4)
    assert len(orbits) == 2            # triangular and pentagonal
    assert sorted(len(o.members) for o in orbits) == [10, 30]
    assert len(classes) == 2           # they are not switching-equivalent


def test_tuple_action_matches_vector_action():
    n = 4
    action = TupleAction(vpoints(n), "combined", reversal=True)
    from conelab.facetlab import combined_tuple
    g = transport_facet(triangle_pair_vector(1, 0, 2, vpoints0(n)))
    t = combined_tuple(g)
    best = action.canonical(t)
    want = combined_tuple(canonical_form(g, reversal=True))
    assert best == want
