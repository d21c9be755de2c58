import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import codes, words
from thmonoid.core import (
    AlphabetError,
    DomainError,
    ParseError,
    RuleNotApplicable,
    all_prefix_codes,
    alphabet,
    code_extend_step,
    code_restrict_step,
    complement_code,
    dict_leq,
    ends_equal,
    ends_subset,
    format_code,
    ideal_intersection,
    is_antichain,
    is_maximal,
    is_maximal_kraft,
    is_maximal_saturated,
    kraft_sum,
    parse_code,
    prefix_in,
    prune,
    words_of_length,
)
from thmonoid.oracles import ends_subset_by_paths


def in_ideal(w, P):
    return prefix_in(w, P) is not None


def test_alphabet_bounds():
    assert alphabet(2) == "ab"
    with pytest.raises(AlphabetError):
        alphabet(1)
    with pytest.raises(AlphabetError):
        alphabet(27)


@pytest.mark.parametrize("u,v,want", [("a", "ba", True), ("ab", "ab", True), ("bb", "ba", False), ("a", "ab", True)])
def test_dict_leq(u, v, want):
    assert dict_leq(u, v) is want


@pytest.mark.parametrize(
    "S,want",
    [({"a", "ab", "b"}, {"a", "b"}), (set(), set()), ({"aa", "a", "ab", "ba"}, {"a", "ba"})],
)
def test_prune_examples(S, want):
    assert prune(S) == frozenset(want)


def test_prune_matches_ideal_enumeration():
    S = {"aa", "a", "ab", "ba"}
    for w in words_of_length(2, 3):
        assert in_ideal(w, S) == in_ideal(w, prune(S))


@pytest.mark.parametrize("P,want", [({""}, True), ({"aa", "ab", "b"}, True), ({"aa", "b"}, False), (set(), False)])
def test_is_maximal_examples(P, want):
    assert is_maximal(P, 2) is want
    assert is_maximal_kraft(P, 2) is want


def test_kraft_is_exact():
    assert kraft_sum({"aa", "ab", "b"}, 2) == 1
    assert kraft_sum({"a", "bc"}, 3).denominator == 9


@pytest.mark.parametrize(
    "P,Q,want", [({"a"}, {"ab", "b"}, {"ab"}), ({""}, {"ab", "b"}, {"ab", "b"}), ({"a"}, {"b"}, set())]
)
def test_ideal_intersection_examples(P, Q, want):
    assert ideal_intersection(P, Q) == frozenset(want)


def test_complement_examples():
    assert complement_code({"ab"}, {"a"}, 2) == frozenset({"aa"})
    assert complement_code({"a", "b"}, {""}, 2) == frozenset()
    assert ends_equal(complement_code({"aa"}, {""}, 2), {"ab", "b"}, 2)


def test_complement_requires_inclusion():
    with pytest.raises(DomainError):
        complement_code({"a"}, {"b"}, 2)


@pytest.mark.parametrize(
    "Q,P,want", [({"ab"}, {"a"}, True), ({"a"}, {"aa", "ab"}, True), ({"a"}, {"aa"}, False), (set(), {"a"}, True)]
)
def test_ends_subset_examples(Q, P, want):
    assert ends_subset(Q, P, 2) is want


@pytest.mark.parametrize("P,Q,want", [({""}, {"a", "b"}, True), ({"a"}, {"aa", "ab"}, True), ({"a"}, {"b"}, False)])
def test_ends_equal_examples(P, Q, want):
    assert ends_equal(P, Q, 2) is want


def test_rewrite_steps():
    assert code_restrict_step({"a", "b"}, "a", 2) == frozenset({"aa", "ab", "b"})
    assert code_extend_step({"aa", "ab", "b"}, "a", 2) == frozenset({"a", "b"})
    with pytest.raises(RuleNotApplicable):
        code_restrict_step(set(), "a", 2)
    with pytest.raises(RuleNotApplicable):
        code_extend_step({"aa", "b"}, "a", 2)


def test_code_text_roundtrip():
    for P in all_prefix_codes(2, 2):
        assert parse_code(format_code(P), 2) == P
    assert parse_code("{-}", 2) == frozenset({""})
    with pytest.raises(ParseError):
        parse_code("{a,ab}", 2)
    with pytest.raises(ParseError):
        parse_code("{c}", 2)


def test_all_prefix_codes_counts():
    assert len(all_prefix_codes(2, 2)) == 26
    assert len(all_prefix_codes(2, 3)) == 677
    assert len(all_prefix_codes(3, 2)) == 730


@given(st.sets(words(3, 4)))
def test_prune_is_idempotent_antichain(S):
    P = prune(S)
    assert is_antichain(P) and prune(P) == P
    assert all(in_ideal(w, P) == in_ideal(w, S) for w in words_of_length(3, 4))


@given(st.sampled_from([2, 3]).flatmap(lambda k: st.tuples(st.just(k), codes(k, 3), codes(k, 3))))
def test_ends_subset_matches_path_oracle(args):
    k, P, Q = args
    assert ends_subset(Q, P, k) == ends_subset_by_paths(Q, P, k)


@given(st.sampled_from([2, 3]).flatmap(lambda k: st.tuples(st.just(k), codes(k, 3), codes(k, 3))))
def test_intersection_generates_meet_of_ideals(args):
    k, P, Q = args
    R = ideal_intersection(P, Q)
    assert R <= P | Q and is_antichain(R)
    for w in words_of_length(k, 3):
        assert in_ideal(w, R) == (in_ideal(w, P) and in_ideal(w, Q))


@given(st.sampled_from([2, 3]).flatmap(lambda k: st.tuples(st.just(k), codes(k, 3), codes(k, 3))))
def test_complement_partitions_ends(args):
    k, P, Q = args
    P = ideal_intersection(P, Q)
    if not P:
        return
    C = complement_code(P, Q, k)
    L = max(len(w) for w in P | Q | C | {""})
    for w in words_of_length(k, L):
        assert not (in_ideal(w, C) and in_ideal(w, P))
        assert (in_ideal(w, C) or in_ideal(w, P)) == in_ideal(w, Q)


@given(st.sampled_from([2, 3]).flatmap(lambda k: st.tuples(st.just(k), codes(k, 3))))
def test_kraft_matches_saturation(args):
    k, P = args
    assert is_maximal_kraft(P, k) == is_maximal_saturated(P, k)


@given(codes(2, 3), st.lists(st.tuples(st.booleans(), st.integers(0, 50)), max_size=6))
def test_rewrite_chains_keep_ends(P, moves):
    cur = P
    for restrict, pick in moves:
        if restrict and cur:
            cur = code_restrict_step(cur, sorted(cur)[pick % len(cur)], 2)
        else:
            parents = sorted({w[:-1] for w in cur if w and all(w[:-1] + a in cur for a in "ab")})
            if parents:
                cur = code_extend_step(cur, parents[pick % len(parents)], 2)
        assert ends_equal(cur, P, 2)
