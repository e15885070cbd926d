from fractions import Fraction

import pytest

from conelab.facetlab import (b_from_pair_vector, b_label, b_of_facet,
                              canonical_facet, classify_facet,
                              classify_hyp_projection, combined_tuple,
                              facet_record, pi_project, psi_point,
                              qn_from_arc_facet, qn_from_combined, roots,
                              switch_facet, switch_pair_vector,
                              transport_facet, untransport_facet)
from conelab.generators import (ConeId, build_cone, cut_vector, hypermetric_vector,
                                ocut_qn, triangle_pair_vector)
from conelab.polyhedra import v_to_h
from conelab.vectors import (PairVector, QnVector, expand, pair_list, vpoints,
                             vpoints0, weight_basis)


def test_roots_cut4_triangle():
    f = PairVector.from_map(vpoints0(3), {(1, 3): 1, (2, 3): 1, (1, 2): -1})
    rs = roots(f, 3)
    want = {frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 3}),
            frozenset({2, 3}), frozenset({1, 2, 3})}
    assert rs == want


def test_roots_always_contain_empty_and_error_on_invalid():
    n = 4
    c5 = v_to_h(build_cone(ConeId("CUT", 5)))
    for f in c5.inequalities[:5]:
        vec = PairVector(vpoints0(n), tuple(Fraction(x) for x in f))
        rs = roots(vec, n)
        assert frozenset() in rs
    bad = PairVector.from_map(vpoints0(3), {(1, 2): -1})
    with pytest.raises(ValueError, match="negative on S"):
        roots(bad, 3)


def test_facet_record_flags():
    n = 3
    tri = PairVector.from_map(vpoints0(n), {(1, 3): 1, (2, 3): 1, (1, 2): -1})
    rec = facet_record(tri, n)
    assert rec.contains_l0 and rec.symmetric and rec.zero_lifting
    down = triangle_pair_vector(1, 0, 2, vpoints0(n))    # d_(12)+d_(20)-d_(10)
    rec2 = facet_record(down, n)
    assert rec2.contains_l0 and not rec2.symmetric


def test_pi_project():
    n = 2
    e0 = cut_vector({1, 2}, n, with_zero=True)
    assert pi_project(e0).is_zero()
    x = PairVector.from_map(vpoints0(n), {(1, 2): 5})
    assert pi_project(x) == x
    e01 = PairVector.from_map(vpoints0(n), {(0, 1): 1})
    want = PairVector.from_map(vpoints0(n), {(0, 1): Fraction(1, 2), (0, 2): Fraction(-1, 2)})
    assert pi_project(e01) == want
    # pi is idempotent and kills exactly the e_0 direction
    assert pi_project(pi_project(e01)) == pi_project(e01)


def test_psi_point_examples():
    n = 4
    for S in ({1}, {1, 2}, {2, 3, 4}):
        q = psi_point(cut_vector(S, n, with_zero=True))
        assert q == ocut_qn(S, n).scale(2)
    assert psi_point(cut_vector(set(vpoints(n)), n, with_zero=True)).is_zero()
    d = PairVector.from_map(vpoints0(n), {(0, i): 7 for i in vpoints(n)}
                            | {(1, 2): 1})
    q = psi_point(d)
    assert q.is_symmetric() and q.sym == PairVector.from_map(vpoints(n), {(1, 2): 1})


def test_transport_triangles():
    n = 4
    pts = vpoints0(n)
    # 0 not involved: zero-lifting, the same triangle vector
    t = triangle_pair_vector(1, 2, 3, pts)
    g = transport_facet(t)
    assert g is not None and g.is_symmetric()
    assert g.sym == PairVector.from_map(vpoints(n), {(1, 3): 1, (3, 2): 1, (1, 2): -1})
    # d_(12) + d_(20) - d_(10) >= 0 transports to q_21 >= 0: the nonnegativity
    # facet g(2,1) with weights (w_2, w_1) = (1/n, -1/n)
    down = triangle_pair_vector(1, 0, 2, pts)
    g = transport_facet(down)
    assert g is not None and not g.is_symmetric()
    assert combined_tuple(g) == tuple(
        (1 if p == (1, 2) else 0) for p in pair_list(vpoints(n))) + (-1, 1, 0, 0)
    # the canonical vector from the theory: (e_ij+e_ji) + (1/n)(q(i)-q(j)) for ij=21
    from conelab.vectors import ArcVector
    base = ArcVector.from_map(vpoints(n), {(1, 2): 1, (2, 1): 1})
    want = (weight_basis(2, n) - weight_basis(1, n)).scale(Fraction(1, n))
    assert expand(g) == base + want
    # d_(i0) + d_(j0) - d_(ij) >= 0 misses the e_0 ray: not transported
    up = triangle_pair_vector(1, 2, 0, pts)
    assert transport_facet(up) is None


def test_untransport_roundtrip():
    n = 4
    for f in (triangle_pair_vector(1, 2, 3, vpoints0(n)),
              triangle_pair_vector(1, 0, 2, vpoints0(n)),
              triangle_pair_vector(3, 0, 1, vpoints0(n))):
        g = transport_facet(f)
        assert untransport_facet(g) == f


def test_switch_pair_vector_identity():
    n = 4
    f = hypermetric_vector((1, 1, -1, -1), points=vpoints(n))
    assert switch_pair_vector(f, ()) == f
    from conelab.generators import switch_b
    T = {1, 3}
    assert switch_pair_vector(f, T) == hypermetric_vector(switch_b((1, 1, -1, -1), T),
                                                          points=vpoints(n))


def test_switch_facet_cut_side():
    n = 3
    tri = PairVector.from_map(vpoints0(n), {(1, 3): 1, (2, 3): 1, (1, 2): -1})
    rec = facet_record(tri, n)
    out = switch_facet(rec, frozenset())
    assert out.vector == rec.vector and out.roots == rec.roots
    # switching by V realizes f* = f^V - f^0
    recd = facet_record(triangle_pair_vector(1, 0, 2, vpoints0(n)), n)
    assert frozenset(vpoints(n)) in recd.roots
    sw = switch_facet(recd, vpoints(n))
    assert sw.vector == triangle_pair_vector(2, 0, 1, vpoints0(n))
    not_root = next(S for S in (frozenset({1}), frozenset({2}), frozenset({3}))
                    if S not in recd.roots)
    with pytest.raises(ValueError, match="not a root"):
        switch_facet(recd, not_root)


def test_switch_facet_ocut_side():
    n = 4
    down = triangle_pair_vector(1, 0, 2, vpoints0(n))
    g = transport_facet(down)
    rec = facet_record(g, n)
    V = frozenset(vpoints(n))
    assert V in rec.roots and frozenset() in rec.roots
    sw = switch_facet(rec, V)
    assert sw.vector == canonical_facet(g.transpose())
    assert sw.roots == frozenset(frozenset(V - S) for S in rec.roots)


def test_classify_facet():
    n = 4
    tri = transport_facet(triangle_pair_vector(1, 2, 3, vpoints0(n)))
    info = classify_facet(tri)
    assert info["kind"] == "symmetric" and info["zero_lifting"]
    assert info["base"] == tri.sym
    g = transport_facet(triangle_pair_vector(1, 0, 2, vpoints0(n)))
    info = classify_facet(g)
    assert info["kind"] == "asymmetric"
    assert info["partner"] == canonical_facet(g.transpose())


def test_classify_hyp_projection():
    n = 5
    kind, vec = classify_hyp_projection((0, 1, 1, 0, 0, -1))
    assert kind == "hypermetric" and vec.is_symmetric()
    kind, vec = classify_hyp_projection((1, 1, 0, 0, 0, -1))
    assert kind == "negative_type_distortion" and not vec.is_symmetric()
    kind, vec = classify_hyp_projection((2, 1, 0, 0, 0, -2))
    assert kind == "not_a_facet" and vec is None
    with pytest.raises(ValueError, match="hypermetric"):
        classify_hyp_projection((1, 1, -3))


def test_canonical_facet_and_combined():
    n = 3
    g = QnVector.make(PairVector.from_map(vpoints(n), {(1, 2): Fraction(2, 3)}),
                      [Fraction(2, 9), Fraction(-2, 9), 0])
    c = canonical_facet(g)
    t = combined_tuple(c)
    assert t == (1, 0, 0, 1, -1, 0)
    assert qn_from_combined(t, n) == c


def test_qn_from_arc_facet():
    n = 3
    o3 = v_to_h(build_cone(ConeId("OCUT", n)))
    for f in o3.inequalities:
        g = qn_from_arc_facet(f, n)
        # round trip through arc coordinates stays the same facet
        from conelab.facetlab import arc_coords_of_facet
        assert qn_from_arc_facet(arc_coords_of_facet(g), n) == g


def test_b_recovery_and_labels():
    assert b_from_pair_vector(hypermetric_vector((1, 1, -1)), 1) == (1, 1, -1)
    assert b_from_pair_vector(hypermetric_vector((2, 1, 1, -1, -1, -1)), 1) == \
        (2, 1, 1, -1, -1, -1)
    n = 4
    g = transport_facet(triangle_pair_vector(1, 0, 2, vpoints0(n)))
    assert b_of_facet(g) == (1, (1, -1, 0, 0))
    tri = transport_facet(triangle_pair_vector(1, 2, 3, vpoints0(n)))
    assert b_of_facet(tri) == (0, (1, 1, -1, 0))
    assert b_label((1, 1, 0, -1)) == "(1^2,0,-1)"
    assert b_label((-1, 2, 1, -1, -1)) == "(2,1,-1^3)"
