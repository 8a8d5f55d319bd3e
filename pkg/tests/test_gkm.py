from itertools import combinations

import pytest

from petersonring import gkm
from petersonring.presentation import PresentationSpec, all_specs
from petersonring.rootsystem import build_root_system
from petersonring.weyl import identity, longest_parabolic, simple_reflection


def test_a2_fixed_points(a2):
    pts = gkm.fixed_points(PresentationSpec(a2, {1, 2}, set()))
    assert [p.key for p in pts] == ["{}", "{1}", "{2}", "{1,2}"]


def test_single_fixed_point_when_i_equals_j(a3):
    assert len(gkm.fixed_points(PresentationSpec(a3, {2}, {2}))) == 1


def test_fixed_points_of_richardson_stratum(a3):
    pts = gkm.fixed_points(PresentationSpec(a3, {1, 2, 3}, {1, 3}))
    assert [p.key for p in pts] == ["{1,3}", "{1,2,3}"]


def test_chern_at_identity(a2):
    weight = a2.fundamental_weight(1)
    assert gkm.restrict_chern(weight, identity(a2)) == gkm.tpoly(-1)


def test_chern_of_root_in_k_is_t(a3):
    w = longest_parabolic({1, 2}, a3)
    for j in (1, 2):
        assert gkm.restrict_chern(a3.simple_root(j), w) == gkm.tpoly(1)


def test_chern_of_weight_at_reflection(a2):
    # s_1 w_1 = w_1 - a_1 = (-1/3, 1/3), so -pi(...) = 0
    assert gkm.restrict_chern(a2.fundamental_weight(1), simple_reflection(1, a2)).is_zero()


def test_schubert_restrictions(a3):
    for i in a3.indices:
        assert gkm.restrict_schubert_simple(i, identity(a3)).is_zero()
        assert gkm.restrict_schubert_simple(i, simple_reflection(i, a3)) == gkm.tpoly(1)
        assert gkm.restrict_schubert_simple(i, longest_parabolic(set(a3.indices) - {i}, a3)).is_zero()


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "A4", "B4", "C4", "D4", "F4"])
def test_billey_and_triangularity(name):
    data = build_root_system(name)
    idx = list(data.indices)
    for r in range(len(idx) + 1):
        for K in combinations(idx, r):
            w = longest_parabolic(K, data)
            for i in idx:
                a = gkm.restrict_schubert_simple(i, w)
                assert a == gkm.billey_simple(i, w)
                assert a.is_zero() == (i not in K)


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2", "A3", "B3", "C3"])
def test_relations_vanish(name):
    for spec in all_specs(build_root_system(name)):
        rep = gkm.check_relations(spec)
        assert rep.passed, rep.failures


def test_g2_quadratic_identity():
    data = build_root_system("G2")
    rep = gkm.check_relations(PresentationSpec(data, {1, 2}, set()))
    assert rep.quadratic_checked and rep.passed


def test_a2_degree_two_rank(a2):
    rep = gkm.check_iso_degreewise(PresentationSpec(a2, {1, 2}, set()), 4)
    assert rep.passed
    assert rep.degrees[0] == {"degree": 0, "basis_size": 1, "rank": 1, "hilbert_coefficient": 1}
    assert rep.degrees[1]["basis_size"] == 3 and rep.degrees[1]["rank"] == 3


def test_point_spec_iso(a3):
    rep = gkm.check_iso_degreewise(PresentationSpec(a3, {1, 2}, {1, 2}), 8)
    assert rep.passed and all(d["basis_size"] == 1 for d in rep.degrees)


def test_wrong_generator_detected(a2):
    # the nonequivariant form does not vanish at every fixed point
    from petersonring.presentation import varpi
    bad = varpi(a2, 1, 3)
    pts = gkm.fixed_points(PresentationSpec(a2, {1, 2}, set()))
    assert any(gkm.localize(bad, p.element) for p in pts)


def test_restriction_vector_json(a2):
    spec = PresentationSpec(a2, {1, 2}, set())
    vec = gkm.peterson_class(1, spec)
    assert vec.to_json() == {"{}": "0", "{1}": "t", "{2}": "0", "{1,2}": "2*t"}
