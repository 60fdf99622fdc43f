import pytest
from hypothesis import given, settings, strategies as st

from dslab.extremal import (DIGRAPH_RULES, avoidance_check, build_digraph, collapse_runs, deletions, ex_brute,
                            is_strongly_connected, kv_closure, minimality_check, phi5_report, replay,
                            validate_witness)
from dslab.sequences import contains, is_c_regular, normalize, to_text


@pytest.mark.parametrize("p,n,v", [("abab", 2, 3), ("ababa", 2, 4), ("aa", 3, 3), ("abab", 3, 5), ("ababa", 3, 8),
                                   ("ab", 3, 0)])
def test_ex_exact_values(p, n, v):
    r = ex_brute(p, n, 20)
    assert (r.kind, r.value) == ("exact", v)
    assert validate_witness(p, n, r)


def test_ex_witness_rechecked_independently():
    r = ex_brute("ababa", 2, 20)
    assert to_text(r.witness) == "abab"
    assert is_c_regular(r.witness, 2) and not contains("ababa", r.witness)


def test_ex_cap_gives_lower_bound():
    assert ex_brute("abcabc", 3, 20).value == 5
    r = ex_brute("abcabc", 3, 4)
    assert r.kind == "at_least" and r.value == 4


def test_ex_argument_checks():
    with pytest.raises(ValueError):
        ex_brute("ab", 0)
    with pytest.raises(ValueError):
        ex_brute("ab", 2, 31)


@pytest.mark.parametrize("p,q", [("abab", "ababa"), ("aba", "abab")])
def test_ex_monotone(p, q):
    for n in (2, 3):
        assert ex_brute(p, n, 20).value <= ex_brute(q, n, 20).value


def test_deletions_distinct():
    d = deletions("abcacbc")
    assert len(d) == len({s for _, s in d}) <= 7
    assert normalize("bcacbc") in {s for _, s in d}


def test_avoidance_on_small_grid():
    r = avoidance_check(["ababa", "abcacbc", "abcdbdadbcd"], [(1, 1, 1), (2, 1, 1), (2, 2, 1)])
    assert r["ok"] and not r["skipped"]


def test_avoidance_reports_embedding():
    r = avoidance_check(["abab"], [(2, 2, 1)])
    assert not r["ok"] and r["violations"][0]["positions"]


def test_avoidance_skips_huge_points():
    r = avoidance_check(["ababa"], [(2, 2, 2)])
    assert r["skipped"] == [(2, 2, 2)] and r["ok"]


def test_minimality_ababa():
    r = minimality_check("ababa", [(1, 1, 1), (2, 1, 1), (2, 2, 1), (3, 1, 1)])
    found = {row["sub"]: row["found_in"] for row in r["rows"]}
    assert found == {"abab": (2, 2, 1), "aaba": (3, 1, 1), "abba": (2, 1, 1), "abaa": (3, 1, 1)}


@pytest.mark.parametrize("s,sc", [("ababa", True), ("abcbadadabcd", True), ("abcbadadbcd", True), ("a", True),
                                  ("abab", False), ("abc", False)])
def test_digraph_literal_rule(s, sc):
    assert is_strongly_connected(build_digraph(s)) is sc


def test_digraph_rule_disagreement_is_recorded():
    # the literal rule finds G(abcdbdadbcd) strongly connected; vuvu-only does not
    assert is_strongly_connected(build_digraph("abcdbdadbcd", "literal"))
    assert not is_strongly_connected(build_digraph("abcdbdadbcd", "alternation"))


def test_digraph_collapses_runs():
    assert collapse_runs("aabbbab") == normalize("abab")
    assert build_digraph("aabbaabbaa").edges == build_digraph("ababa").edges


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=10), st.permutations(range(4)), st.sampled_from(sorted(DIGRAPH_RULES)))
def test_digraph_renaming_equivariant(s, perm, rule):
    g = build_digraph(s, rule)
    h = build_digraph([perm[x] for x in s], rule)
    assert {(perm[a], perm[b]) for a, b in g.edges} == set(h.edges)
    assert is_strongly_connected(g) == is_strongly_connected(h)


def test_kv_closure_small():
    items = kv_closure(2, 1, 6)
    seqs = {it.sequence for it in items}
    assert normalize("aaa") in seqs and normalize("abaab") in seqs
    for it in items:
        assert replay(it.derivation) == it.sequence
        assert not contains("ababa", it.sequence)
        assert len(it.sequence) <= 6
    assert [it.depth for it in items] == sorted(it.depth for it in items)


def test_kv_item_dict():
    it = next(i for i in kv_closure(1, 1, 5) if i.sequence == normalize("abaab"))
    d = it.as_dict()
    assert d["derivation"] == ["axiom a^3", "rule1 pos=0 k=1"]


def test_phi5():
    r = phi5_report()
    assert r["ok"]
    assert r["rows"]["pi2"]["sequence"] == "abcacbc"
    assert all(r["reversals"].values())
