from math import comb, factorial

import pytest

from tautjac.errors import InvalidGenus, VerificationFailure
from tautjac.lie import (
    LieContext,
    cartan_eigenvalue,
    density_op,
    descent_op,
    field_op,
    raw_field_op,
    run_bracket_suite,
    sl2_triple,
    verify_bracket,
)
from tautjac.operators import Operator, commutator, mul_op, op_equal
from tautjac.poly import Poly, enumerate_monomials, mono_sdeg, p, q


def test_context_validation():
    with pytest.raises(InvalidGenus):
        LieContext(1, 8)
    with pytest.raises(ValueError):
        LieContext(2, 0)


@pytest.mark.parametrize("g", [2, 3, 5])
def test_descent_on_known_relations(g):
    ctx = LieContext(g, 12)
    d = descent_op(ctx)
    assert d.apply(p(1) * p(g)) == p(g) - p(1) * q(g - 1)
    for n in range(2, 7):
        assert d.apply(q(1) * p(n)) == q(n) - q(1) * q(n - 1)
    assert d.apply(q(1) * p(1)) == (1 - g) * q(1)
    assert d.apply(q(1) ** 3) == Poly.zero()
    assert d.apply(p(g + 1)) == -q(g)


@pytest.mark.parametrize("g", [2, 3, 5])
def test_descent_on_powers_of_p1(g):
    ctx = LieContext(g, 10)
    d = descent_op(ctx)
    for k in range(1, 7):
        assert d.apply(p(1) ** k) == k * (k - 1 - g) * p(1) ** (k - 1)


def test_descent_kills_pure_q_polynomials():
    ctx = LieContext(3, 9)
    d = descent_op(ctx)
    for f in (q(1), q(2) * q(3), q(1) ** 2 * q(4), Poly.one()):
        assert d.apply(f) == Poly.zero()


def test_descent_weight_shift_uniform():
    d = descent_op(LieContext(4, 9))
    assert d.weight_shifts() == [-1]


def test_field_constructors():
    ctx = LieContext(3, 10)
    assert field_op(0, 3, ctx) == mul_op(factorial(3) * p(2))
    assert field_op(0, 3, ctx).window is None
    assert op_equal(field_op(2, 0, ctx), 2 * descent_op(ctx), 10)
    assert field_op(1, 1, ctx).apply(p(2)) == (3 - 3) * p(2)
    assert field_op(1, 1, LieContext(5, 10)).apply(p(2)) == 2 * p(2)
    # zero outside the admissible range
    for m, n in ((-1, 4), (4, -1), (1, 0), (0, 1), (0, 0), (1, 1 - 2)):
        assert field_op(m, n, ctx).is_zero() or m + n >= 2
    assert field_op(1, 0, ctx).is_zero()
    assert field_op(0, 1, ctx).is_zero()


def test_field_weight_shifts_uniform():
    ctx = LieContext(3, 9)
    for m in range(7):
        for n in range(7 - m):
            op = field_op(m, n, ctx)
            if not op.is_zero():
                assert op.weight_shifts() == [n - 1], (m, n)
            opd = density_op(m, n, ctx)
            if not opd.is_zero():
                assert opd.weight_shifts() == [n], (m, n)


def test_density_constructors():
    ctx = LieContext(4, 10)
    assert density_op(0, 2, ctx) == mul_op(2 * q(2))
    assert density_op(0, 0, ctx) == mul_op(Poly.constant(4))
    y10 = density_op(1, 0, ctx)
    for i in range(1, 6):
        assert y10.apply(p(i)) == -q(i)
        assert y10.apply(q(i)) == Poly.zero()
    assert density_op(-1, 0, ctx).is_zero()
    assert density_op(0, -1, ctx).is_zero()
    got = commutator(density_op(1, 2, ctx), density_op(2, 1, ctx))
    assert op_equal(got, Operator.zero(), got.window)


def test_raw_field_members():
    ctx = LieContext(3, 8)
    for n in range(2, 5):
        assert raw_field_op(0, n, ctx) == field_op(0, n, ctx)
    e, f, h = sl2_triple(ctx)
    expected = (-h) + mul_op(Poly.constant(3))
    assert op_equal(raw_field_op(1, 1, ctx), expected, 8)


@pytest.mark.parametrize("g", [2, 3, 5])
def test_raw_field_bracket_sweep(g):
    ctx = LieContext(g, 8)
    reports = verify_bracket("raw_field", {"max_order": 5}, ctx)
    assert reports and all(r["status"] == "ok" for r in reports)


@pytest.mark.parametrize("g", [2, 3, 5])
def test_sl2_identities(g):
    ctx = LieContext(g, 10)
    reports = verify_bracket("sl2", {"max_order": 8}, ctx)
    assert reports and all(r["status"] == "ok" for r in reports)


def test_sl2_actions_explicit():
    g = 3
    ctx = LieContext(g, 10)
    e, f, h = sl2_triple(ctx)
    assert e.apply(q(2)) == p(1) * q(2)
    assert f.apply(p(1)) == Poly.constant(g)  # q0 -> g
    for n in range(2, 8):
        assert f.apply(p(n)) == q(n - 1)
        assert f.apply(q(n)) == Poly.zero()
    assert h.apply(p(1)) == (2 - g) * p(1)
    # double bracket values on specific orders
    fp2 = commutator(f, mul_op(p(2)))
    got = commutator(fp2, mul_op(p(3)))
    expected = mul_op(-comb(5, 3) * p(4))
    assert op_equal(got, expected, got.window)
    got = commutator(fp2, mul_op(q(3)))
    expected = mul_op(-comb(4, 2) * q(4))
    assert op_equal(got, expected, got.window)


def test_cartan_diagonal_action():
    g = 4
    ctx = LieContext(g, 8)
    _e, _f, h = sl2_triple(ctx)
    for w in range(7):
        for m in enumerate_monomials(w):
            f = Poly.monomial(m)
            assert h.apply(f) == cartan_eigenvalue(w, mono_sdeg(m), g) * f


def test_grading_sweep():
    ctx = LieContext(3, 9)
    reports = verify_bracket("grading", {"max_order": 4, "max_weight": 6}, ctx)
    assert reports and all(r["status"] == "ok" for r in reports)


def test_structure_constant_examples():
    ctx = LieContext(3, 10)
    got = commutator(field_op(1, 2, ctx), field_op(2, 1, ctx))
    assert op_equal(got, 3 * field_op(2, 2, ctx), got.window)
    got = commutator(field_op(0, 2, ctx), field_op(2, 0, ctx))
    assert op_equal(got, 4 * field_op(1, 1, ctx), got.window)


def test_descent_preserves_p1_free_subring():
    ctx = LieContext(3, 12)
    d = descent_op(ctx)
    samples = [
        p(2) ** 2,
        p(2) * p(3) * q(1),
        p(4) + q(2) * p(2),
        q(1) * q(2) * p(5),
    ]
    for f in samples:
        for m in d.apply(f).terms:
            assert all(not (i == 1 and k == "p") for i, k, _e in m), (f, m)


def test_operators_genus_free_except_known_members():
    base = LieContext(2, 8)
    other = LieContext(10, 8)
    for m in range(5):
        for n in range(5 - m):
            fsame = field_op(m, n, base).terms == field_op(m, n, other).terms
            assert fsame == ((m, n) not in {(1, 1), (2, 0)}) or m + n < 2
            dsame = density_op(m, n, base).terms == density_op(m, n, other).terms
            assert dsame == ((m, n) != (0, 0))


def test_run_bracket_suite_small():
    summary = run_bracket_suite([2, 5], max_order=3, window=6, jobs=1)
    assert summary["failures"] == []
    assert summary["checked"] == sum(summary["counts"].values())
    # both genera got every pair
    for kind in ("field_field", "field_density", "density_density"):
        assert summary["counts"]["%s@g2" % kind] == summary["counts"]["%s@g5" % kind]


def test_verification_failure_carries_counterexample():
    err = VerificationFailure({"identity": "x", "status": "fail"}, difference=None)
    assert err.entry["identity"] == "x"
    assert "identity" in str(err)
