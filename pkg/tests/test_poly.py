import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conicline.errors import DegenerateLine, FieldMismatch
from conicline.numbers import QQ, NumberField, PrimeField
from conicline.poly import (
    HomPoly,
    monomial_basis,
    monomial_index,
    partials,
    product,
    res_wrt,
    restrict_to_line,
)
from conicline.verify import euler_relation_holds

X, Y, Z = (HomPoly.variable(i, QQ) for i in range(3))


def form(draw_coeffs, deg, field=QQ):
    return HomPoly(dict(zip(monomial_basis(deg), draw_coeffs)), deg, field)


coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def test_monomial_basis_size_and_index():
    for r in range(6):
        basis = monomial_basis(r)
        assert len(basis) == (r + 1) * (r + 2) // 2
        assert all(sum(e) == r for e in basis)
        idx = monomial_index(r)
        assert [idx[e] for e in basis] == list(range(len(basis)))


def test_exponent_degree_checked():
    with pytest.raises(ValueError):
        HomPoly({(1, 0, 0): 1}, 2, QQ)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda d: st.tuples(st.just(d), st.lists(coeff, min_size=15, max_size=15))))
def test_euler_relation(data):
    deg, cs = data
    assert euler_relation_holds(form(cs, deg))


def test_euler_relation_over_number_field():
    K = NumberField([-3, 0, 1])
    s = K.gen
    f = HomPoly({(2, 0, 0): s, (0, 1, 1): 1 + s, (0, 0, 2): K(-2)}, 2, K)
    x, y, z = (HomPoly.variable(i, K) for i in range(3))
    fx, fy, fz = partials(f)
    assert x * fx + y * fy + z * fz == 2 * f


@settings(max_examples=30, deadline=None)
@given(st.lists(coeff, min_size=6, max_size=6), st.lists(coeff, min_size=3, max_size=3))
def test_product_rule(c2, c1):
    f, g = form(c2, 2), form(c1, 1)
    for i in range(3):
        assert (f * g).derivative(i) == f.derivative(i) * g + f * g.derivative(i)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        HomPoly.variable(0, QQ) * HomPoly.variable(0, PrimeField(1000003))


def test_restrict_tangent_line_gives_double_root():
    conic = HomPoly.conic([1, 1, -1, 0, 0, 0], QQ)
    r = restrict_to_line(conic, [1, 0, -1])
    # x = z on x^2 + y^2 = z^2 leaves y^2, i.e. t^2 in the (s : t : s) chart
    assert not r.contained
    assert r.form.coeffs == (0, 0, 1)


def test_restrict_contained_line():
    f = HomPoly.linear(1, 0, -1, QQ) * HomPoly.variable(1, QQ)
    assert restrict_to_line(f, [1, 0, -1]).contained


def test_degenerate_line():
    with pytest.raises(DegenerateLine):
        restrict_to_line(X, [0, 0, 0])


def test_restriction_points_lie_on_line():
    rng = random.Random(1)
    for _ in range(20):
        L = [Fraction(rng.randint(-4, 4)) for _ in range(3)]
        if not any(L):
            continue
        r = restrict_to_line(X, L)
        s, t = Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5))
        pt = r.point(s, t)
        assert sum(a * b for a, b in zip(L, pt)) == 0


def test_res_wrt_of_two_lines_vanishes_at_intersection():
    f = HomPoly.linear(1, 1, -3, QQ)
    g = HomPoly.linear(1, -1, -1, QQ)  # meet at (2 : 1 : 1)
    r = res_wrt(f, g, 0)
    assert r.deg == 1
    assert r(0, Fraction(1), Fraction(1)) == 0


def test_res_wrt_tangent_conics():
    # two conics tangent at (1:0:1) and (-1:0:1): the x-projection sees each tangency as a double root
    c1 = HomPoly.conic([1, 1, -1, 0, 0, 0], QQ)
    c2 = HomPoly.conic([1, 4, -1, 0, 0, 0], QQ)
    r = res_wrt(c1, c2, 1)
    assert r == 9 * (X * X - Z * Z) * (X * X - Z * Z)


def test_product_of_components():
    f = product([X, Y, Z], QQ)
    assert f.coeffs == {(1, 1, 1): 1} and f.deg == 3
