import pytest
from hypothesis import assume, given, settings, strategies as st

from conicline.classify import (
    EMPTY,
    EXCLUDED,
    REALIZABLE,
    RULES,
    Candidate,
    admissible_pairs,
    apply_prunes,
    classify_pair,
    enumerate_candidates,
    enumerate_naive,
    intersection_count,
    survivors,
    verified_realizations,
    verify_classification,
)


def test_one_candidate_for_conic_and_line():
    (c,) = enumerate_candidates(1, 1)
    assert c.key() == (0, 1, 0, 1, 1)


def test_cl7_counts_among_candidates():
    keys = {c.key() for c in enumerate_candidates(3, 2)}
    assert (0, 5, 3, 3, 3) in keys


def test_enumeration_order_is_d1_t_n3():
    cands = enumerate_candidates(3, 2)
    assert [(c.d1, c.t, c.n3) for c in cands] == sorted((c.d1, c.t, c.n3) for c in cands)


def test_bad_arguments():
    with pytest.raises(ValueError):
        enumerate_candidates(-1, 2)
    with pytest.raises(ValueError):
        enumerate_candidates(0, 1)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 9), st.integers(0, 4))
def test_enumeration_matches_naive_oracle(d, k):
    assume(3 <= d + 2 * k <= 10)
    assert {c.key() for c in enumerate_candidates(d, k)} == enumerate_naive(d, k)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 7), st.integers(1, 4))
def test_candidates_satisfy_both_identities(d, k):
    assume(d + 2 * k >= 3)
    for c in enumerate_candidates(d, k):
        assert c.n2 + 2 * c.t + 3 * c.n3 == intersection_count(d, k)
        assert c.d1 ** 2 + c.d1 * c.d2 + c.d2 ** 2 == c.tau


def test_realized_configurations_survive_every_rule():
    real = verified_realizations()
    assert set(real.values()) == {"CL3", "CL4", "CL5", "CL5'", "CL7"}
    for (d, k, n2, t, n3, d1, d2), name in real.items():
        c = apply_prunes(Candidate(d, k, n2, t, n3, d1, d2))
        assert c.survives, (name, c.pruned_by)


def test_rules_have_unique_names_and_heuristics_flagged():
    names = [r.name for r in RULES]
    assert len(names) == len(set(names))
    assert {r.name for r in RULES if r.heuristic} == {"tangency_capacity", "bitangent_pairs"}


def test_degree_rule_prunes_everything_beyond_nine():
    for c in map(apply_prunes, enumerate_candidates(8, 1)):
        assert "degree_at_most_9" in c.pruned_by


def test_realizable_pairs():
    table = admissible_pairs()
    status = {(r.d, r.k): r.status for r in table}
    assert {p for p, s in status.items() if s == REALIZABLE} == {(1, 1), (2, 1), (3, 1), (3, 2)}
    assert all(s in (EXCLUDED, EMPTY) for (d, _), s in status.items() if d >= 4)


def test_pair_report_json():
    rep = classify_pair(3, 2).to_json()
    assert rep["status"] == REALIZABLE and rep["m"] == 7
    names = {c["realization"] for c in rep["survivors"]}
    assert "CL7" in names
    for c in rep["candidates"]:
        assert isinstance(c["pruned_by"], list)


def test_no_survivors_past_nine():
    for m in range(10, 14):
        for k in range(m // 2 + 1):
            assert survivors(m - 2 * k, k) == []


def test_classification_cases_and_groups():
    rep = verify_classification()
    assert [c["name"] for c in rep["cases"]] == ["CL3", "CL4", "CL5", "CL5'", "CL7"]
    for g in rep["groups"]:
        assert isinstance(g["free"], bool) and g["members"]
