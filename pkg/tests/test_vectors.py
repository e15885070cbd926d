import random
from fractions import Fraction

import pytest

from conelab.vectors import (ArcVector, PairVector, QnVector, arc_inner,
                             arc_list, bicircuit_vector, bitriangle_equalities,
                             circuit_dim, circuit_rank, expand, is_in_Qn,
                             pair_inner, phi, phi_inverse, project_to_Qn,
                             qn_basis_rank, qn_dim, qn_inner, split, transpose,
                             vpoints, weight_basis)
from conelab.generators import ocut_qn, ocut_vector, sym_cut_vector, weight_cut_vector


def rand_arc(n, rng):
    return ArcVector(vpoints(n), tuple(
        Fraction(rng.randint(-60, 60), rng.randint(1, 9)) for _ in arc_list(vpoints(n))))


def rand_qn(n, rng):
    canon, _ = project_to_Qn(rand_arc(n, rng))
    return canon


def test_transpose_basis_and_involution():
    e12 = ArcVector.from_map(vpoints(3), {(1, 2): 1})
    e21 = ArcVector.from_map(vpoints(3), {(2, 1): 1})
    assert transpose(e12) == e21
    rng = random.Random(1)
    for _ in range(20):
        g = rand_arc(4, rng)
        assert transpose(transpose(g)) == g


def test_transpose_symmetric_fixed_and_qk_negated():
    d = PairVector.from_map(vpoints(3), {(1, 2): 2, (1, 3): 5, (2, 3): -1})
    assert transpose(phi(d)) == phi(d)
    # q(k) is antisymmetric: entrywise from its definition, q(k)* = -q(k)
    for n in (3, 4, 5):
        for k in vpoints(n):
            q = weight_basis(k, n)
            assert transpose(q) == -q


def test_split_definition_and_orthogonality():
    e12 = ArcVector.from_map(vpoints(3), {(1, 2): 1})
    s, a = split(e12)
    assert s == ArcVector.from_map(vpoints(3), {(1, 2): Fraction(1, 2), (2, 1): Fraction(1, 2)})
    assert a == ArcVector.from_map(vpoints(3), {(1, 2): Fraction(1, 2), (2, 1): Fraction(-1, 2)})
    rng = random.Random(2)
    for _ in range(20):
        g = rand_arc(5, rng)
        s, a = split(g)
        assert s + a == g
        assert transpose(s) == s
        assert transpose(a) == -a
        assert arc_inner(s, a) == 0


def test_split_of_cut_type_vectors():
    n = 4
    for S in ({1}, {2, 3}, {1, 4}):
        s, a = split(sym_cut_vector(S, n))
        assert s == sym_cut_vector(S, n) and a.is_zero()
        cs, ca = split(ocut_vector(S, n))
        assert cs == sym_cut_vector(S, n).scale(Fraction(1, 2))
        assert ca == weight_cut_vector(S, n).scale(Fraction(1, 2))


def test_phi_and_inverse():
    n = 3
    e = PairVector.from_map(vpoints(n), {(1, 2): 1})
    assert phi(e) == ArcVector.from_map(vpoints(n), {(1, 2): 1, (2, 1): 1})
    assert phi(PairVector.zero(vpoints(n))).is_zero()
    rng = random.Random(3)
    d = PairVector(vpoints(4), tuple(Fraction(rng.randint(-9, 9)) for _ in range(6)))
    assert phi_inverse(phi(d)) == d
    with pytest.raises(ValueError, match="not symmetric"):
        phi_inverse(ArcVector.from_map(vpoints(3), {(1, 2): 1}))


def test_weight_basis_values_and_identities():
    q1 = weight_basis(1, 3)
    assert q1 == ArcVector.from_map(vpoints(3), {(1, 2): 1, (1, 3): 1, (2, 1): -1, (3, 1): -1})
    with pytest.raises(ValueError):
        weight_basis(4, 3)
    for n in (2, 3, 4, 5, 6):
        total = ArcVector.zero(vpoints(n))
        for k in vpoints(n):
            total = total + weight_basis(k, n)
        assert total.is_zero()
        for k in vpoints(n):
            assert arc_inner(weight_basis(k, n), weight_basis(k, n)) == 2 * (n - 1)
            for l in vpoints(n):
                if l != k:
                    assert arc_inner(weight_basis(k, n), weight_basis(l, n)) == -2


def test_project_to_Qn_examples():
    n = 4
    g = ArcVector.from_map(vpoints(n), {(1, 2): 2})
    canon, res = project_to_Qn(g)
    assert canon.sym == PairVector.from_map(vpoints(n), {(1, 2): 1})
    assert canon.weights == (Fraction(1, n), Fraction(-1, n), 0, 0)
    # residual equals 2e_12 - (e_12+e_21) - (1/n)(q(1)-q(2))
    want = g - phi(canon.sym) - (weight_basis(1, n) - weight_basis(2, n)).scale(Fraction(1, n))
    assert res == want
    assert expand(canon) + res == g

    t = ArcVector.from_map(vpoints(n), {(1, 2): 1, (2, 3): 1, (1, 3): -1})
    canon, _ = project_to_Qn(t)
    tT = transpose(t)
    assert phi(canon.sym) == (t + tT).scale(Fraction(1, 2))
    assert all(w == 0 for w in canon.weights)

    f = bicircuit_vector((1, 2, 3), n)
    canon, res = project_to_Qn(f)
    assert canon.sym.is_zero() and all(w == 0 for w in canon.weights)
    assert res == f


def test_project_residual_orthogonal_and_idempotent():
    rng = random.Random(4)
    for n in (3, 4, 5):
        for _ in range(10):
            g = rand_arc(n, rng)
            canon, res = project_to_Qn(g)
            for p in vpoints(n):
                assert arc_inner(res, weight_basis(p, n)) == 0
            for (i, j) in [(1, 2), (2, 3)]:
                assert arc_inner(res, phi(PairVector.from_map(vpoints(n), {(i, j): 1}))) == 0
            again, res2 = project_to_Qn(expand(canon))
            assert again == canon and res2.is_zero()


def test_qn_inner_examples_and_oracle():
    for n in (3, 4, 5):
        for k in vpoints(n):
            canon, res = project_to_Qn(weight_basis(k, n))
            assert res.is_zero()
            assert qn_inner(canon, canon) == n - 1
    rng = random.Random(5)
    for n in (3, 4, 5, 6):
        z = QnVector.zero(n)
        assert qn_inner(rand_qn(n, rng), z) == 0
        for _ in range(25):
            g, q = rand_qn(n, rng), rand_qn(n, rng)
            # oracle: direct summation over all n(n-1) arcs
            assert qn_inner(g, q) * 2 == arc_inner(expand(g), expand(q))
    bad = QnVector(3, PairVector.zero(vpoints(3)), (Fraction(0), Fraction(0), Fraction(0)))
    object.__setattr__(bad, "weights", (Fraction(1), Fraction(0), Fraction(0)))
    with pytest.raises(ValueError, match="gauge"):
        qn_inner(bad, QnVector.zero(3))


def test_is_in_Qn():
    n = 4
    for S in ({1}, {1, 3}, {2, 3, 4}):
        assert is_in_Qn(ocut_vector(S, n))
        assert is_in_Qn(phi(cut := PairVector.from_map(vpoints(n), {(1, 2): 3})))
    assert not is_in_Qn(bicircuit_vector((1, 2, 3), n))
    rng = random.Random(6)
    for _ in range(10):
        g = rand_arc(4, rng)
        _, res = project_to_Qn(g)
        assert is_in_Qn(g) == res.is_zero()


def test_dimension_ranks():
    for n in range(3, 8):
        assert qn_basis_rank(n) == qn_dim(n) == n * (n + 1) // 2 - 1
        assert circuit_rank(n) == circuit_dim(n) == n * (n - 1) // 2 - (n - 1)
        assert qn_dim(n) + circuit_dim(n) == n * (n - 1)


def test_bitriangle_equalities_count():
    for n in (3, 4, 5):
        eqs = bitriangle_equalities(n)
        assert len(eqs) == n * (n - 1) // 2 - (n - 1)
        for t in eqs:
            assert transpose(t) == -t


def test_ocut_qn_matches_arc_form():
    for n in (3, 4):
        for S in ({1}, {2, 3}, {1, 3}):
            assert expand(ocut_qn(S, n)) == ocut_vector(S, n)
