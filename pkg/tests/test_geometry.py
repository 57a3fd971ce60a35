import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conicline.errors import (
    ArrangementFormatError,
    CombinatorialViolation,
    DuplicateComponent,
    SingularConic,
    UnknownName,
    ValidationError,
    ZeroComponent,
)
from conicline.geometry import (
    NODE,
    OUT,
    TACNODE,
    TRIPLE,
    Arrangement,
    bezout_check,
    catalog,
    census,
    classify_point,
    combinatorial_check,
    exact_census,
    expected,
    from_json_dict,
    loads,
    names,
    validate,
    validation_issues,
)
from conicline.geometry.arrangement import CONIC, Component
from conicline.geometry.tangents import common_tangents, contact_with_line, dual_conic
from conicline.numbers import QQ

UNIT = [1, 1, -1, 0, 0, 0]  # x^2 + y^2 = z^2


def arrangement(lines, conics=()):
    return Arrangement(QQ, lines, conics)


def test_catalog_names_and_unknown():
    assert {"CL1", "CL2", "CL3", "CL4", "CL5", "CL5'", "CL7", "dual-hesse"} <= set(names())
    with pytest.raises(UnknownName):
        catalog("CL6")


@pytest.mark.parametrize("name", ["CL3", "CL4", "CL5", "CL5'", "CL7", "dual-hesse", "A0-6", "A0-7"])
def test_catalog_census_matches_expected(name):
    arr = catalog(name)
    c = census(arr)
    assert c.counts == expected(name).counts
    assert bezout_check(c, [comp.degree for comp in arr.components])
    combinatorial_check(c, arr.d, arr.k)


def test_json_round_trip_keeps_digest():
    for name in ("CL3", "CL7", "dual-hesse"):
        arr = catalog(name)
        again = loads(arr.dumps())
        assert again.digest() == arr.digest()
        assert census(again).counts == census(arr).counts


def test_power_basis_coefficients_accepted():
    data = json.loads(catalog("CL7").dumps())
    assert any(isinstance(v, list) for row in data["lines"] for v in row)
    assert from_json_dict(data).d == 3


@pytest.mark.parametrize(
    "text",
    [
        "[]",
        '{"field": {"minpoly": ["0/1", "1/1"]}, "lines": [[1, 0]], "conics": []}',
        '{"field": {"minpoly": ["0/1", "1/1"]}, "lines": [["a", 0, 1]], "conics": []}',
        '{"field": {"minpoly": ["1/1", "2/1", "1/1"]}, "lines": [], "conics": []}',
        '{"lines": [], "conics": []}',
        "{",
    ],
)
def test_malformed_json_rejected(text):
    with pytest.raises(ArrangementFormatError):
        loads(text)


def test_validation_reports_every_issue():
    arr = arrangement([[1, 0, 0], [2, 0, 0], [0, 0, 0]], [[1, 0, 0, 0, 0, 0]])
    issues = validation_issues(arr)
    kinds = {type(i) for i in issues}
    assert kinds == {DuplicateComponent, ZeroComponent, SingularConic}
    with pytest.raises(ValidationError) as info:
        validate(arr)
    assert len(info.value.issues) == 3


def test_tangent_line_gives_tacnode_and_secant_gives_nodes():
    assert census(arrangement([[1, 0, -1]], [UNIT])).counts == (0, 1, 0)
    assert census(arrangement([[2, 0, -1]], [UNIT])).counts == (2, 0, 0)


def test_moving_the_cl3_line_to_a_secant_changes_the_census():
    data = json.loads(catalog("CL3").dumps())
    data["lines"][0] = ["2/1", "0/1", "-1/1"]
    assert census(from_json_dict(data)).counts == (2, 0, 0)


def test_quadruple_point_is_out_of_class():
    for name in ("CL1", "CL2"):
        c = census(catalog(name))
        assert not c.in_class and c.tau is None
        (bad,) = c.out_of_class
        assert bad.multiplicity == 4 and tuple(bad.coords) == (0, 0, 1)
        with pytest.raises(ValueError):
            combinatorial_check(c, 2, 2)


def test_three_concurrent_lines_are_an_ordinary_triple_point():
    c = census(arrangement([[1, 0, 0], [0, 1, 0], [1, 1, 0]]))
    assert c.counts == (0, 0, 1)
    assert c.points[0].local_type == TRIPLE


def test_four_concurrent_lines_are_out_of_class():
    c = census(arrangement([[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 0]]))
    assert [p.local_type for p in c.points] == [OUT]


def test_classify_point_rules():
    assert classify_point((0, 1), {(0, 1): 1}, [1, 2])[0] == NODE
    assert classify_point((0, 1), {(0, 1): 2}, [1, 2])[0] == TACNODE
    assert classify_point((0, 1, 2), {(0, 1): 1, (0, 2): 1, (1, 2): 1}, [1, 1, 2])[0] == TRIPLE
    assert classify_point((0, 1, 2), {(0, 1): 1, (0, 2): 2, (1, 2): 1}, [1, 2, 2])[0] == OUT


def test_combinatorial_check_detects_wrong_counts():
    c = census(catalog("CL5"))
    with pytest.raises(CombinatorialViolation):
        combinatorial_check(c, 2, 1)


@settings(max_examples=8, deadline=None)
@given(st.integers(0, 10**6))
def test_census_independent_of_seed(seed):
    arr = catalog("CL4")
    assert census(arr, seed=seed).signature() == census(arr, seed=0).signature()


@pytest.mark.parametrize("name", ["CL3", "CL4", "CL5", "CL5'", "A0-6"])
def test_exact_census_agrees_with_modular(name):
    arr = catalog(name)
    assert exact_census(arr).signature() == census(arr).signature()
    assert census(arr, exact=True).mode == "exact"


def test_exact_coordinates_lie_on_components():
    arr = catalog("CL5")
    polys = arr.component_polys()
    for p in census(arr).points:
        assert p.coords is not None
        for i in p.incident:
            assert polys[i](*p.coords) == 0


def test_common_tangents_of_concentric_circles_touching():
    a = Component(CONIC, (1, 1, -1, 0, 0, 0))
    b = Component(CONIC, (1, 4, -1, 0, 0, 0))
    res = common_tangents(a, b)
    assert res["exact"]
    lines = sorted(tuple(l) for l, _ in res["lines"])
    assert lines == [(-1, 0, 1), (1, 0, 1)]
    for line, mult in res["lines"]:
        assert mult == 2
        assert contact_with_line(a.poly(QQ), line) == 2


def test_dual_of_dual_is_proportional():
    c = Component(CONIC, (Fraction(1), Fraction(2), Fraction(-3), Fraction(1), Fraction(0), Fraction(1)))
    dd = dual_conic(dual_conic(c))
    ratio = dd.coeffs[0] / c.coeffs[0]
    assert all(x == ratio * y for x, y in zip(dd.coeffs, c.coeffs))
