import random
from fractions import Fraction
from itertools import combinations

import pytest

from conelab.generators import (ConeId, GeneratorSpec, build_cone, cut_vector,
                                generator_vector, hyp_arc_vector,
                                hypermetric_b_list, hypermetric_vector,
                                ocut_vector, subsets, switch_b, sym_cut_vector,
                                triangle_arc_vector, weight_cut_vector,
                                wqm_from_metric)
from conelab.polyhedra import membership
from conelab.vectors import (ArcVector, PairVector, arc_inner, expand,
                             is_in_Qn, transpose, vpoints, vpoints0,
                             weight_basis)
from conelab import linalg


def all_subsets(n):
    return list(subsets(vpoints(n)))


def test_cut_vector_examples():
    assert cut_vector((), 4, with_zero=True).is_zero()
    n = 3
    e0 = cut_vector({1, 2, 3}, n, with_zero=True)
    assert e0 == PairVector.from_map(vpoints0(n), {(0, 1): 1, (0, 2): 1, (0, 3): 1})
    v = cut_vector({1}, 3)
    assert v == PairVector.from_map(vpoints(3), {(1, 2): 1, (1, 3): 1})


def test_ocut_vector_examples():
    assert ocut_vector({1, 2}, 2).is_zero()
    assert ocut_vector({1}, 2) == ArcVector.from_map(vpoints(2), {(1, 2): 1})
    for n in (3, 4):
        for S in all_subsets(n):
            Sbar = set(vpoints(n)) - S
            assert ocut_vector(S, n) + ocut_vector(Sbar, n) == sym_cut_vector(S, n)
            assert ocut_vector(S, n) - ocut_vector(Sbar, n) == weight_cut_vector(S, n)
            assert transpose(ocut_vector(S, n)) == ocut_vector(Sbar, n)
            assert is_in_Qn(ocut_vector(S, n))


def test_weight_cut_examples_and_modularity():
    n = 4
    for k in vpoints(n):
        assert weight_cut_vector({k}, n) == weight_basis(k, n)
    assert weight_cut_vector(set(vpoints(n)), n).is_zero()
    # oracle: brute-force evaluation of both sides over all S, T
    for S in all_subsets(4):
        for T in all_subsets(4):
            lhs = weight_cut_vector(S, 4) + weight_cut_vector(T, 4)
            rhs = weight_cut_vector(S & T, 4) + weight_cut_vector(S | T, 4)
            assert lhs == rhs


def test_ocut_submodular_coordinatewise():
    for n in (3, 4):
        for S in all_subsets(n):
            for T in all_subsets(n):
                diff = (ocut_vector(S, n) + ocut_vector(T, n)
                        - ocut_vector(S & T, n) - ocut_vector(S | T, n))
                assert all(x >= 0 for x in diff.coords)


def test_cut_weightcut_orthogonality():
    n = 4
    for S in all_subsets(n):
        for T in all_subsets(n):
            assert arc_inner(sym_cut_vector(S, n), weight_cut_vector(T, n)) == 0


def test_ocut_vectors_span_Qn():
    for n in (3, 4, 5):
        rows = [ocut_vector(S, n).coords for S in all_subsets(n)]
        assert linalg.rank(rows) == n * (n + 1) // 2 - 1


def test_hypermetric_vector():
    f = hypermetric_vector((1, 1, -1))
    assert f == PairVector.from_map(vpoints(3), {(1, 2): -1, (1, 3): 1, (2, 3): 1})
    tri = hypermetric_vector((1, 1, 0, 0, -1))
    assert tri[(1, 2)] == -1 and tri[(1, 5)] == 1 and tri[(3, 4)] == 0
    b = (2, 1, 1, -1, -1, -1)
    f6 = hypermetric_vector(b)
    for (i, j) in [(1, 2), (1, 4), (4, 5), (2, 3)]:
        assert f6[(i, j)] == -b[i - 1] * b[j - 1]
    with pytest.raises(ValueError, match="hypermetric"):
        hypermetric_vector((1, 1, -1, -3))


def test_switch_b():
    assert switch_b((1, 1, -1, -1), {1, 3}) == (-1, 1, 1, -1)
    assert switch_b((1, 1, -1, -1), ()) == (1, 1, -1, -1)
    b = (1, 1, -1, -1, 1)   # over V u {0} with b_0 = 1: sum over V is 0
    out = switch_b(b, {1, 2, 3, 4}, points=vpoints0(4))
    assert out == (1, -1, 1, 1, -1)
    with pytest.raises(ValueError, match="balanced"):
        switch_b((1, 1, -1), {1})


def test_build_cut_cone_counts():
    c4 = build_cone(ConeId("CUT", 4))
    assert len(c4.rays) == 7
    assert linalg.rank(c4.rays) == 6
    c5 = build_cone(ConeId("CUT", 5))
    assert len(c5.rays) == 15 and linalg.rank(c5.rays) == 10


def test_build_ocut_counts():
    o3 = build_cone(ConeId("OCUT", 3))
    assert len(o3.rays) == 6
    o4 = build_cone(ConeId("OCUT", 4))
    assert len(o4.rays) == 14


def test_build_wqmet():
    w3 = build_cone(ConeId("WQMET", 3))
    assert len(w3.equalities) == 1
    # 6 nonnegativity + 6 ordered triangles on 3 points
    assert len(w3.inequalities) == 12
    for S in all_subsets(3):
        status, violated, _ = membership(ocut_vector(S, 3).coords, w3)
        assert not violated and status in ("interior", "boundary")


def test_build_cone_errors():
    with pytest.raises(ValueError, match="family"):
        ConeId("NOPE", 4)
    with pytest.raises(ValueError, match="limit"):
        build_cone(ConeId("OCUT", 12))


def test_met_nonneg_implied_by_ij_and_ij0():
    # (ij) + (ij0) = 2 d_(j0): each nonnegativity row is a nonneg combination
    n = 4
    pts = vpoints0(n)
    from conelab.generators import triangle_pair_vector
    for i in vpoints(n):
        for j in vpoints(n):
            if i == j:
                continue
            down = triangle_pair_vector(i, 0, j, pts)   # d_(ij)+d_(j0)-d_(i0)
            up = triangle_pair_vector(i, j, 0, pts)     # d_(i0)+d_(0j)-d_(ij)
            s = down + up
            assert s == PairVector.from_map(pts, {(0, j): 2})


def test_generator_spec_dispatch():
    n = 4
    assert generator_vector(GeneratorSpec("CUT", S=(1, 2)), n) == cut_vector({1, 2}, n)
    assert generator_vector(GeneratorSpec("OCUT", S=(1,)), n) == ocut_vector({1}, n)
    assert generator_vector(GeneratorSpec("WCUT", S=(2,)), n) == weight_basis(2, n)
    assert generator_vector(GeneratorSpec("SYMCUT", S=(1, 3)), n) == sym_cut_vector({1, 3}, n)
    t = generator_vector(GeneratorSpec("TRIANGLE", S=(1, 2, 3)), n)
    assert t == triangle_arc_vector(1, 2, 3, n)
    e = generator_vector(GeneratorSpec("NONNEG", S=(2, 1)), n)
    assert e == ArcVector.from_map(vpoints(n), {(2, 1): 1})
    with pytest.raises(ValueError, match="hypermetric"):
        GeneratorSpec("HYPERMETRIC", b=(1, 1))


def test_wqm_from_metric():
    n = 4
    # equal distances to 0: the result is the symmetric metric itself
    d = PairVector.from_map(vpoints0(n), {(i, j): 2 for (i, j) in
                                          [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]}
                            | {(0, i): 3 for i in vpoints(n)})
    q = wqm_from_metric(d)
    assert all(w == 0 for w in q.weights)
    assert expand(q) == ArcVector(vpoints(n), tuple(Fraction(2) for _ in range(12)))

    # d = delta(S) gives 2c(S) after the psi convention
    for S in ({1}, {1, 3}, {2, 3, 4}):
        q = wqm_from_metric(cut_vector(S, n, with_zero=True))
        assert expand(q) == ocut_vector(S, n).scale(2)

    bad = PairVector.from_map(vpoints0(2), {(1, 2): 5, (0, 1): 1, (0, 2): 1})
    with pytest.raises(ValueError, match="triangle"):
        wqm_from_metric(bad)


def test_wqm_random_metric_membership():
    # random metrics on 4+1 points: membership checked on the expanded arcs
    rng = random.Random(7)
    n = 4
    w4 = build_cone(ConeId("WQMET", n))
    for _ in range(10):
        pts = vpoints0(n)
        # shortest-path closure of a random symmetric weight matrix
        dist = {p: {q: Fraction(rng.randint(1, 20)) for q in pts if q != p} for p in pts}
        for p in pts:
            for q in pts:
                if q != p:
                    dist[q][p] = dist[p][q]
        for k in pts:
            for i in pts:
                for j in pts:
                    if len({i, j, k}) == 3 and dist[i][k] + dist[k][j] < dist[i][j]:
                        dist[i][j] = dist[i][k] + dist[k][j]
        d = PairVector.from_map(pts, {(i, j): dist[i][j]
                                      for (i, j) in combinations(pts, 2)})
        q = wqm_from_metric(d)
        status, violated, _ = membership(expand(q).coords, w4)
        assert status in ("interior", "boundary") and not violated


def test_hyp_arc_vector_is_in_Qn():
    n = 4
    for b in hypermetric_b_list(n + 1, 1):
        if b[0] in (0, 1):
            v = hyp_arc_vector(b[0], b[1:], n)
            assert is_in_Qn(v)
