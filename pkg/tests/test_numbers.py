import random
from fractions import Fraction

import flint
import pytest
from hypothesis import given, settings, strategies as st

from conicline.errors import BadPrime, DivisionByZero, FieldMismatch
from conicline.numbers import (
    QQ,
    ExtField,
    NumberField,
    PrimeField,
    Reduction,
    UniPoly,
    ext_roots,
    factor_univariate,
    format_rational,
    is_irreducible,
    is_prime,
    parse_rational,
    reduce_mod_p,
    resultant,
)
from conicline.numbers.finite import crt, rational_reconstruction

P = 1000003
small = st.integers(-50, 50)


def test_parse_and_format_rational():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational(4) == 4
    assert format_rational(Fraction(3)) == "3/1"
    with pytest.raises(ValueError):
        parse_rational("1/0")
    with pytest.raises(TypeError):
        parse_rational(1.5)


def test_is_prime_matches_flint():
    for n in list(range(-3, 2000)) + [2**61 - 1, 2**62 - 57, 1000003 * 1000033]:
        assert is_prime(n) == (n > 1 and flint.fmpz(n).is_prime())


def test_prime_field_rejects_composites():
    with pytest.raises(BadPrime):
        PrimeField(1000)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, P - 1), st.integers(0, P - 1))
def test_prime_field_inverse_and_distributivity(a, b):
    F = PrimeField(P)
    x, y = F(a), F(b)
    assert x * x.inverse() == F.one
    assert (x + y) * x == x * x + y * x


def test_division_by_zero_in_prime_field():
    F = PrimeField(P)
    with pytest.raises(DivisionByZero):
        F.one / F.zero


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        PrimeField(P)(PrimeField(1000033)(1))


def test_rational_reconstruction_round_trip():
    n = 1000003 * 1000033
    for q in (Fraction(3, 7), Fraction(-22, 5), Fraction(0), Fraction(1, 999)):
        a = q.numerator * pow(q.denominator, -1, n) % n
        assert rational_reconstruction(a, n) == q


def test_crt():
    x, n = crt([2, 3, 2], [3, 5, 7])
    assert (x % n, n) == (23, 105)


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=2, max_size=5), st.lists(small, min_size=2, max_size=5))
def test_unipoly_divmod_identity(a, b):
    F = PrimeField(P)
    f, g = UniPoly(a, F), UniPoly(b, F)
    if g.is_zero():
        return
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


def test_resultant_of_linear_factors():
    # monic f: res(f, g) is the product of g over the roots of f
    f = UniPoly([-2, 1], QQ)
    g = UniPoly([-5, 1], QQ)
    assert resultant(f, g) == g(Fraction(2))


def test_resultant_matches_flint():
    rng = random.Random(3)
    for _ in range(10):
        a = [rng.randint(-5, 5) for _ in range(4)] + [1]
        b = [rng.randint(-5, 5) for _ in range(3)] + [1]
        mine = resultant(UniPoly(a, QQ), UniPoly(b, QQ))
        mat = flint.fmpq_mat(7, 7)
        for i in range(3):
            for j, c in enumerate(reversed(a)):
                mat[i, i + j] = c
        for i in range(4):
            for j, c in enumerate(reversed(b)):
                mat[3 + i, i + j] = c
        assert mine == Fraction(int(mat.det().p), int(mat.det().q))


def test_factorization_matches_flint():
    rng = random.Random(7)
    F = PrimeField(P)
    for _ in range(15):
        coeffs = [rng.randrange(P) for _ in range(rng.randint(2, 9))] + [1]
        f = UniPoly(coeffs, F)
        mine = sorted((tuple(c.value for c in g.coeffs), e) for g, e in factor_univariate(f))
        _, theirs = flint.nmod_poly(coeffs, P).factor()
        theirs = sorted((tuple(int(c) for c in g.coeffs()), e) for g, e in theirs)
        assert mine == theirs
        for g, _ in factor_univariate(f):
            assert is_irreducible(g)


def test_ext_field_arithmetic():
    E = ExtField.canonical(101, 4)
    g = E.gen
    assert g ** E.order == g
    assert g * g.inverse() == E.one
    assert g.frobenius(4) == g


def test_ext_roots_of_irreducible_quadratic():
    F = PrimeField(P)
    # x^2 - r for a non-residue r has no roots in F_p but two in F_{p^2} and F_{p^12}
    r = next(v for v in range(2, 100) if pow(v, (P - 1) // 2, P) == P - 1)
    f = UniPoly([-r, 0, 1], F)
    assert ext_roots(f, 1) == []
    roots = ext_roots(f, 12)
    assert len(roots) == 2
    for z, mult in roots:
        assert mult == 1 and z * z == z.field.one * r


def test_number_field_arithmetic():
    K = NumberField([-3, 0, 1], "Q(sqrt3)")
    s = K.gen
    assert s * s == K(3)
    assert (1 + s) * (1 + s).inverse() == K.one
    with pytest.raises(ValueError):
        NumberField([1, 2, 1])  # (x + 1)^2 is not squarefree
    with pytest.raises(ValueError):
        NumberField([1, 2])  # not monic


def test_reduction_is_a_ring_map():
    K = NumberField([1, 1, 1], "Q(w)")
    w = K.gen
    p = next(q for q in range(1000003, 1001000, 2) if is_prime(q) and q % 3 == 1)
    red = Reduction(K, p)
    a, b = 2 * w + Fraction(1, 3), w - 5
    assert red(a * b) == red(a) * red(b)
    assert red(a + b) == red(a) + red(b)
    assert red(w) ** 3 == red(K.one)


def test_reduction_into_extension_when_no_root():
    K = NumberField([1, 1, 1], "Q(w)")
    p = next(q for q in range(1000003, 1001000, 2) if is_prime(q) and q % 3 == 2)
    with pytest.raises(BadPrime):
        Reduction(K, p)
    red = Reduction(K, p, extension_degree=2)
    assert red(K.gen) ** 3 == red.target.one


def test_reduce_mod_p_denominator():
    assert reduce_mod_p(Fraction(1, 2), 13).value == 7
    with pytest.raises(BadPrime):
        reduce_mod_p(Fraction(1, 13), 13)
