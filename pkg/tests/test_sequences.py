import pytest
from hypothesis import given, settings, strategies as st

from dslab.sequences import (Matcher, TextIndex, alphabet_size, as_seq, contains, contains_oracle,
                             contains_plain, embedding, is_c_regular, is_palindrome, normalize, reverse, to_text)


def seqs(max_len, max_sym):
    return st.lists(st.integers(0, max_sym - 1), max_size=max_len).map(tuple)


def test_as_seq_forms_agree():
    assert as_seq("abcacbc") == as_seq("0 1 2 0 2 1 2") == (0, 1, 2, 0, 2, 1, 2)
    assert as_seq("") == ()
    with pytest.raises(ValueError):
        as_seq("ab-c")


def test_normalize_and_text():
    assert normalize("cbcab") == (0, 1, 0, 2, 1)
    assert to_text((0, 1, 2)) == "abc"
    assert to_text((0, 30)) == "0 30"
    assert alphabet_size("abcacbc") == 3


@pytest.mark.parametrize("s,c,want", [("abab", 2, True), ("aa", 2, False), ("abca", 3, True),
                                      ("abcb", 3, False), ("", 5, True)])
def test_regularity(s, c, want):
    assert is_c_regular(s, c) is want


def test_regularity_rejects_bad_c():
    with pytest.raises(ValueError):
        is_c_regular("ab", 0)


def test_palindromes():
    assert is_palindrome("ababa")
    assert is_palindrome("abadadbd")
    assert is_palindrome("abc")  # distinct symbols: reversal is a renaming
    assert not is_palindrome("aab")
    assert normalize(reverse("abcacbc")) == normalize("abacabc")


@pytest.mark.parametrize("p,t,want", [
    ("ababa", "abcacbc", False),
    ("abab", "abcacbc", True),
    ("abcacbc", "abcacbc", True),
    ("aa", "ab", False),
    ("", "abc", True),
    ("abc", "", False),
])
def test_contains_examples(p, t, want):
    assert contains(p, t) is want
    assert contains_oracle(p, t) is want


def test_plain_is_not_isomorphic():
    assert not contains_plain("ba", "ab")
    assert contains("ba", "ab")


def test_oracle_caps():
    with pytest.raises(ValueError):
        contains_oracle("ab", "a" * 15)
    with pytest.raises(ValueError):
        contains_oracle("ab", "abcdef")


def test_embedding_is_a_witness():
    t = as_seq("abcdbdadbcd")
    occ = embedding("ababa", t)
    assert occ == sorted(occ)
    assert normalize([t[k] for k in occ]) == normalize("ababa")


def test_text_index_reuse():
    idx = TextIndex("abcacbc")
    assert contains("abab", idx) and not contains("ababa", idx)
    m = Matcher("abcabc", idx)
    m.find()
    assert m.nodes >= 0


@settings(max_examples=400, deadline=None)
@given(seqs(6, 4), seqs(12, 5))
def test_matcher_agrees_with_oracle(p, t):
    assert contains(p, t) == contains_oracle(p, t)


@settings(max_examples=200, deadline=None)
@given(seqs(12, 5))
def test_every_subsequence_is_contained(t):
    sub = t[::2]
    assert contains(sub, t)


@settings(max_examples=200, deadline=None)
@given(seqs(5, 3), seqs(10, 4))
def test_renaming_invariance(p, t):
    renamed = tuple(3 - x for x in t)
    assert contains(p, t) == contains(p, renamed) == contains(reverse(p), reverse(t))
