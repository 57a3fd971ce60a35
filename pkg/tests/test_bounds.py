from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from conicline.bounds import (
    A1,
    A3,
    D4,
    CentralMultiple,
    bounds_report,
    check_hirzebruch,
    check_orbifold_my,
    check_semicontinuity,
    deg_B,
    hirzebruch_from_orbifold,
    monomial_spectrum,
    orbifold_contribution,
    orbifold_euler,
    spectral_window_sums,
    spectrum,
    split_degree,
    thom_sebastiani,
)
from conicline.classify import analyze_catalog_entry, catalog_census
from conicline.errors import AlphaOutOfRange
from conicline.geometry import NODE, TACNODE, TRIPLE, Census, SingularPoint

F = Fraction


def fake_census(d, k, n2, t, n3):
    """A census with the given counts; incidences are placeholders."""
    pts = [SingularPoint((0, 1), {}, NODE) for _ in range(n2)]
    pts += [SingularPoint((0, 1), {}, TACNODE) for _ in range(t)]
    pts += [SingularPoint((0, 1, 2), {}, TRIPLE) for _ in range(n3)]
    return Census(d, k, pts, {})


def test_spectra_of_named_types():
    assert spectrum(A1).entries == ((F(1), 1),)
    assert spectrum(A3).entries == ((F(3, 4), 1), (F(1), 1), (F(5, 4), 1))
    assert spectrum(D4) == spectrum(CentralMultiple(3))


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 15))
def test_central_spectrum_is_thom_sebastiani_of_monomials(m):
    sp = spectrum(CentralMultiple(m))
    assert sp == thom_sebastiani(monomial_spectrum(m), monomial_spectrum(m))
    assert sp.total == (m - 1) ** 2 and sp.is_symmetric()


def test_deg_B_windows():
    assert [deg_B(spectrum(s), F(1, 3), F(4, 3)) for s in (A1, A3, D4)] == [1, 3, 4]
    assert [deg_B(spectrum(s), F(-1, 3), F(2, 3)) for s in (A1, A3, D4)] == [0, 0, 1]
    with pytest.raises(ValueError):
        deg_B(spectrum(A1), 1, 1)


def test_central_multiple_needs_two_lines():
    with pytest.raises(ValueError):
        CentralMultiple(1)


def test_split_degree():
    assert [split_degree(m) for m in (1, 3, 4, 7, 9, 12)] == [(0, 1), (0, 3), (1, 1), (2, 1), (2, 3), (3, 3)]
    with pytest.raises(ValueError):
        split_degree(0)


def test_cl7_semicontinuity_numbers():
    _, c, _ = analyze_catalog_entry("CL7")
    rep = {e.name: e for e in check_semicontinuity(7, 2, c)}
    assert (rep["t_plus_n3_bound"].lhs, rep["t_plus_n3_bound"].rhs) == (8, 10)
    assert (rep["tau_spectral_bound"].lhs, rep["tau_spectral_bound"].rhs) == (27, 29)
    assert all(e.holds for e in rep.values())


def test_dual_hesse_triple_point_bound():
    rep = bounds_report(catalog_census("dual-hesse"))
    e = rep["triple_point_bound"]
    assert (e.lhs, e.rhs, e.holds) == (12, 15, True)


def test_window_sums_match_closed_forms():
    for name in ("CL5", "CL7", "dual-hesse"):
        for per_point, closed in spectral_window_sums(catalog_census(name)).values():
            assert per_point == closed


def test_orbifold_contributions_at_quarter():
    q = F(1, 4)
    assert [orbifold_contribution(s, q) for s in (A1, A3, D4)] == [F(21, 16), F(3), F(261, 64)]
    assert orbifold_euler(D4, q)[1] is True


def test_orbifold_alpha_range():
    with pytest.raises(AlphaOutOfRange):
        orbifold_euler(A3, F(1, 3))
    with pytest.raises(ValueError):
        orbifold_euler(CentralMultiple(5), F(1, 4))


def test_orbifold_not_applicable_for_small_degree():
    e = check_orbifold_my(7, fake_census(3, 2, 0, 5, 3))
    assert not e.applicable and e.holds is None


def test_large_instances_satisfy_both_inequalities():
    for name in ("12-generic-lines", "6-generic-conics", "6-conics-3-bitangent-pairs"):
        c = catalog_census(name)
        rep = bounds_report(c)
        assert rep["hirzebruch"].holds and rep["orbifold_my"].holds
        rel = hirzebruch_from_orbifold(c.d, c.k, c)
        assert rel["consistent"]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 8), st.integers(2, 8), st.integers(0, 20), st.integers(0, 20))
def test_hirzebruch_slack_is_sixteen_orbifold_slacks(d, k, t, n3):
    m = d + 2 * k
    # the relation uses the count identity, so n2 is solved from it
    n2 = m * (m - 1) // 2 - k - 2 * t - 3 * n3
    assume(m >= 12 and n2 >= 0)
    c = fake_census(d, k, n2, t, n3)
    rel = hirzebruch_from_orbifold(d, k, c)
    assert rel["consistent"]
    assert check_hirzebruch(d, k, c).applicable


def test_report_json_uses_rational_strings():
    _, c, fr = analyze_catalog_entry("CL5")
    out = bounds_report(c, fr).to_json()
    first = out[0]
    assert first["name"] == "t_plus_n3_bound" and "/" in first["lhs"]
    names = [e["name"] for e in out]
    assert "free_degree_ceiling" in names and "arnold_mdr" in names


def test_out_of_class_census_rejected():
    with pytest.raises(ValueError):
        bounds_report(catalog_census("CL1"))
