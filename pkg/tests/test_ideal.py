from math import comb

import pytest

from helpers import random_poly, seeded
from tautjac.errors import CapExceeded, CapTooSmall, InvalidGenus
from tautjac.ideal import RelationIdeal
from tautjac.lie import LieContext, descent_op
from tautjac.poly import (
    Poly,
    enumerate_monomials,
    mono_pdeg,
    mono_qdeg,
    p,
    q,
)


def test_build_validation():
    with pytest.raises(InvalidGenus):
        RelationIdeal.build(1, 5)
    with pytest.raises(CapTooSmall):
        RelationIdeal.build(3, 3)


def test_descent_images_of_weight3_at_genus2():
    # full hand oracle: images of the ten weight-3 monomials
    d = descent_op(LieContext(2, 5))
    expected = {
        p(3): -q(2),
        q(3): Poly.zero(),
        p(1) * p(2): p(2) - p(1) * q(1),
        p(1) * q(2): Poly.zero(),
        p(2) * q(1): q(2) - q(1) ** 2,
        q(1) * q(2): Poly.zero(),
        p(1) ** 3: Poly.zero(),
        p(1) ** 2 * q(1): Poly.zero(),
        p(1) * q(1) ** 2: Poly.zero(),
        q(1) ** 3: Poly.zero(),
    }
    assert len(expected) == len(enumerate_monomials(3))
    for f, image in expected.items():
        assert d.apply(f) == image, f


def test_genus2_quotient(ideal_g2):
    dims = ideal_g2.quotient_dims()
    assert (dims[0], dims[1], dims[2]) == (1, 2, 2)
    assert all(dims[w] == 0 for w in range(3, 6))
    basis = ideal_g2.relation_basis(2)
    assert len(basis) == 3
    for f in (q(2), q(1) ** 2, p(2) - p(1) * q(1)):
        assert ideal_g2.contains(f)
    # the span is exactly three-dimensional: p1^2 and p1*q1 survive
    assert not ideal_g2.contains(p(1) ** 2)
    assert not ideal_g2.contains(p(1) * q(1))
    assert [str(m) for m in map(Poly.monomial, ideal_g2.quotient_basis(2))] == [
        "p1*q1",
        "p1^2",
    ]


def test_genus3_members(ideal_g3):
    members = [
        q(3),
        q(1) * q(2),
        q(1) ** 3,
        q(2) - q(1) ** 2 / 4,
        p(3) - p(1) * q(1) ** 2 / 4,
        p(2) * q(1) - 3 * p(1) * q(1) ** 2 / 4,
        p(3) - p(1) * q(2),
    ]
    for f in members:
        assert ideal_g3.contains(f), f


def test_genus3_normal_forms(ideal_g3):
    assert ideal_g3.normal_form(p(2) * q(1)) == 3 * p(1) * q(1) ** 2 / 4
    assert ideal_g3.normal_form(q(2)) == q(1) ** 2 / 4
    assert ideal_g3.normal_form(Poly.zero()) == Poly.zero()
    assert ideal_g3.normal_form(p(3)) == p(1) * q(1) ** 2 / 4


def test_genus3_descent_chain(ideal_g3):
    # the chain that produces q2 = q1^2/4
    d = descent_op(LieContext(3, 6))
    step1 = d.apply(p(2) ** 2)
    assert step1 == 6 * p(3) - 2 * p(2) * q(1)
    step2 = d.apply(step1)
    assert step2 == -8 * q(2) + 2 * q(1) ** 2
    assert ideal_g3.contains(step2)


@pytest.mark.parametrize("g", [2, 3, 4, 5, 6])
def test_qg_membership(g):
    ideal = RelationIdeal.build(g, g + 1, check=False)
    assert ideal.contains(q(g))


def test_pg_and_piq_relations():
    for g in (2, 3, 4, 5):
        ideal = RelationIdeal.build(g, g + 3, check=False)
        assert ideal.contains(p(g) - p(1) * q(g - 1))
        for i in range(1, g):
            if i == 1:
                f = p(1) * q(g - 1) - g * p(1) * q(g - 1) + comb(g - 1, 1) * p(1) * q(g - 1)
            else:
                f = (
                    p(i) * q(g - i)
                    - p(1) * q(i - 1) * q(g - i)
                    + comb(g - 1, i) * p(1) * q(g - 1)
                )
            assert ideal.contains(f), (g, i)


def test_weight_g_pure_q_monomials_vanish():
    for g in (3, 4, 5):
        ideal = RelationIdeal.build(g, g + 1, check=False)
        for m in enumerate_monomials(g):
            if mono_pdeg(m) == 0:
                assert ideal.contains(Poly.monomial(m)), m


def _capped(f, cap):
    return Poly({m: c for m, c in f.terms.items() if sum(i * e for i, _k, e in m) <= cap})


def test_normal_form_properties(ideal_g3):
    rng = seeded(5)
    for _ in range(30):
        f = _capped(random_poly(rng), ideal_g3.source_cap)
        g = _capped(random_poly(rng), ideal_g3.source_cap)
        nf = ideal_g3.normal_form(f)
        assert ideal_g3.normal_form(nf) == nf
        assert ideal_g3.contains(f - nf)
        assert ideal_g3.normal_form(f + g) == nf + ideal_g3.normal_form(g)
    assert ideal_g3.normal_form(Poly.zero()) == Poly.zero()


def test_cap_errors(ideal_g2):
    heavy = p(3) ** 2  # weight 6 > cap 5
    with pytest.raises(CapExceeded):
        ideal_g2.contains(heavy)
    with pytest.raises(CapExceeded):
        ideal_g2.normal_form(heavy)
    with pytest.raises(CapExceeded):
        ideal_g2.quotient_dimension(6)
    # the vanishing-aware reducer accepts any weight
    assert ideal_g2.reduce(heavy) == Poly.zero()


def test_quotient_dimension_trivials(ideal_g2, ideal_g3):
    for ideal in (ideal_g2, ideal_g3):
        assert ideal.quotient_dimension(0) == 1
        assert ideal.quotient_dimension(ideal.genus + 1) == 0


def test_monotonicity_in_cap():
    small = RelationIdeal.build(3, 4, check=False)
    large = RelationIdeal.build(3, 6, check=False)
    for w in range(5):
        assert large.quotient_dimension(w) <= small.quotient_dimension(w)
        for row in small.relation_basis(w):
            assert large.contains(row)


def test_stability_assertions(ideal_g2, ideal_g3):
    ideal_g2.check_stability()
    ideal_g3.check_stability()


def test_build_is_deterministic():
    a = RelationIdeal.build(3, 6, check=False)
    b = RelationIdeal.build(3, 6, check=False)
    assert a.to_json() == b.to_json()


def test_generator_bounds_small_genus():
    for g in (2, 3, 4, 5):
        ideal = RelationIdeal.build(g, g + 3, check=False)
        # q_n for 2n >= g+1 reduces to lower q's
        n = (g + 1 + 1) // 2
        for k in range(n, g + 1):
            nf = ideal.normal_form(q(k))
            for m in nf.terms:
                assert mono_pdeg(m) == 0
                assert all(i < k for i, _k, _e in m)
        # p_n for 2n >= g+2 lands in the ideal generated by the q's
        n = (g + 2 + 1) // 2
        for k in range(n, g + 1):
            nf = ideal.normal_form(p(k))
            assert nf != p(k)
            for m in nf.terms:
                assert mono_qdeg(m) >= 1, (g, k, nf)


def test_json_round_trip(ideal_g3):
    data = ideal_g3.to_json_dict()
    clone = RelationIdeal.from_json_dict(data)
    assert clone.genus == ideal_g3.genus
    assert clone.source_cap == ideal_g3.source_cap
    assert clone.to_json() == ideal_g3.to_json()
    assert clone.normal_form(p(2) * q(1)) == ideal_g3.normal_form(p(2) * q(1))
    assert clone.quotient_dims() == ideal_g3.quotient_dims()


def test_json_schema_shape(ideal_g2):
    data = ideal_g2.to_json_dict()
    assert data["format-version"] == 1
    assert data["genus"] == 2
    assert data["source_cap"] == 5
    assert data["monomial_order"] == "plex-interleaved-v1"
    assert [b["w"] for b in data["weights"]] == list(range(6))
    block = data["weights"][2]
    assert block["quotient_dim"] == 2
    # rows sorted by leading (pivot) monomial, largest first: q2 > p2 > q1^2
    assert [[t["monomial"] for t in rel] for rel in block["relations"]] == [
        ["q2"],
        ["p2", "p1*q1"],
        ["q1^2"],
    ]
    assert block["relations"][1][1]["coeff"] == "-1"


def test_from_json_rejects_bad_data(ideal_g2):
    data = ideal_g2.to_json_dict()
    data["format-version"] = 99
    with pytest.raises(ValueError):
        RelationIdeal.from_json_dict(data)
    data = ideal_g2.to_json_dict()
    data["monomial_order"] = "other"
    with pytest.raises(ValueError):
        RelationIdeal.from_json_dict(data)
    data = ideal_g2.to_json_dict()
    data["weights"][2]["quotient_dim"] = 4
    with pytest.raises(ValueError):
        RelationIdeal.from_json_dict(data)


def test_relation_rows_are_rref(ideal_g3):
    for w in range(ideal_g3.source_cap + 1):
        rows = ideal_g3.relation_basis(w)
        pivots = [max(r.terms) for r in rows if r.terms]
        assert len(pivots) == len(set(pivots))
        for r in rows:
            piv = max(r.terms)
            assert r.terms[piv] == 1
            for other in rows:
                if other is not r:
                    assert piv not in other.terms
