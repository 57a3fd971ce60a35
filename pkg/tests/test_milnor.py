import os

import flint
import pytest

from conicline.classify import analyze_catalog_entry
from conicline.geometry import catalog, census
from conicline.milnor import (
    FREE,
    NEARLY_FREE,
    NEITHER,
    Jacobian,
    _certified_annihilator,
    freeness,
    global_tau,
    mdr,
    milnor_hilbert,
    resolution_shape,
    syzygy_matrix,
)
from conicline.numbers import QQ, NumberField
from conicline.poly import HomPoly, partials

X, Y, Z = (HomPoly.variable(i, QQ) for i in range(3))


def test_three_lines_in_general_position_are_free():
    fr = freeness(X * Y * Z)
    assert fr.verdict == FREE and fr.exponents == (1, 1) and fr.tau == 3


def test_smooth_cubic_is_neither():
    f = X * X * X + Y * Y * Y + Z * Z * Z
    fr = freeness(f)
    assert fr.tau == 0 and fr.verdict == NEITHER


def test_mdr_witness_is_a_syzygy():
    f = catalog("CL5").polynomial()
    syz = mdr(f)
    fx, fy, fz = partials(f)
    a, b, c = syz.witness
    assert syz.r == 2
    assert (a * fx + b * fy + c * fz).is_zero()


def test_milnor_hilbert_starts_like_the_polynomial_ring():
    f = catalog("CL3").polynomial()
    h = milnor_hilbert(f, 6)
    m = f.deg
    for q in range(m - 1):
        assert h[q] == (q + 1) * (q + 2) // 2
    assert h[6] == global_tau(f) == 3


@pytest.mark.parametrize("name,exps", [("CL3", (1, 1)), ("CL4", (1, 2)), ("CL5", (2, 2)), ("CL5'", (2, 2))])
def test_small_catalog_freeness(name, exps):
    _, c, fr = analyze_catalog_entry(name)
    assert fr.verdict == FREE and fr.exponents == exps
    assert fr.routes == {"saturation": True, "tjurina": True}
    d1, d2 = exps
    assert d1 * d1 + d1 * d2 + d2 * d2 == c.tau == fr.tau


def test_cl7_resolution():
    _, _, fr = analyze_catalog_entry("CL7")
    assert fr.resolution == "0 -> S^2(-9) -> S^3(-6) -> S -> M(f) -> 0"
    assert resolution_shape(5, 1, 3) == "0 -> S(-5) + S(-7) -> S^3(-4) -> S -> M(f) -> 0"


def test_cl2_is_nearly_free():
    fr = freeness(catalog("CL2").polynomial())
    assert fr.verdict == NEARLY_FREE
    assert max(fr.n_dims.values()) == 1 and any(fr.n_dims.values())
    assert "tjurina" not in fr.routes


def test_cl1_is_free_although_out_of_class():
    arr = catalog("CL1")
    fr = freeness(arr.polynomial(), census(arr))
    assert fr.verdict == FREE and fr.exponents == (2, 3)


@pytest.mark.parametrize("name", ["CL5", "CL7", "CL2"])
def test_modular_and_exact_annihilators_span_the_same_space(name):
    J = Jacobian(catalog(name).polynomial())
    for D in range(J.m - 1, 2 * J.m):
        mod = J.annihilator(D, modular=True)
        exact = J.annihilator(D, modular=False)
        assert len(mod) == len(exact)
        if mod:
            both = flint.fmpz_mat(mod + exact)
            assert both.rank() == len(mod)


def test_certified_annihilator_rejects_nothing_it_should_accept():
    mat = flint.fmpz_mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    ann = _certified_annihilator(mat)
    assert len(ann) == 1
    assert (mat * flint.fmpz_mat(ann).transpose()).is_zero()


def test_irrational_coefficients_use_blocks():
    K = NumberField([-3, 0, 1])
    x, y, z = (HomPoly.variable(i, K) for i in range(3))
    f = (x - K.gen * y) * y * z
    J = Jacobian(f)
    assert J.n == 2
    assert syzygy_matrix(f, 1).shape == (2 * 10, 3 * 2 * 3)
    fr = freeness(f)
    assert fr.verdict == FREE and fr.exponents == (1, 1)


def test_rational_product_over_number_field_is_scalar():
    assert Jacobian(catalog("CL7").polynomial()).n == 1


def test_degree_one_rejected():
    with pytest.raises(ValueError):
        Jacobian(X)


@pytest.mark.skipif(not os.environ.get("CONICLINE_SLOW"), reason="about a minute; set CONICLINE_SLOW=1")
def test_twelve_generic_lines_routes_agree():
    arr = catalog("12-generic-lines")
    fr = freeness(arr.polynomial(), census(arr))
    assert fr.verdict == NEITHER and fr.tau == 66
    assert fr.routes == {"saturation": False, "tjurina": False}
