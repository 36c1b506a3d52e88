import itertools

import pytest
from hypothesis import given, settings, strategies as st

from raaggrowth import (
    AlphabetMismatch,
    Dfa,
    OrderedAlphabet,
    SimpleGraph,
    all_words_dfa,
    complement_lang,
    concat,
    count_words,
    cyc_perm,
    empty_language_dfa,
    epsilon_dfa,
    equivalent,
    geo_fsa,
    growth_series,
    intersect,
    map_letters,
    minimize,
    shortlex_fsa,
    single_word_dfa,
    support_require,
    union,
)
from raaggrowth.series import RationalFunction


AB = OrderedAlphabet(("a", "b"))  # 4 letters
A1 = OrderedAlphabet(("a",))      # 2 letters


@st.composite
def random_dfas(draw, alphabet=AB, max_states=6):
    n = draw(st.integers(min_value=1, max_value=max_states))
    table = [draw(st.integers(0, n - 1)) for _ in range(n * alphabet.size)]
    accepting = [q for q in range(n) if draw(st.booleans())]
    return Dfa(alphabet, n, table, 0, accepting)


def brute_counts(dfa, max_len):
    counts = []
    for length in range(max_len + 1):
        total = 0
        for word in itertools.product(range(dfa.alphabet.size), repeat=length):
            total += dfa.accepts(word)
        counts.append(total)
    return counts


# -- basic constructions -----------------------------------------------------

def test_all_words_counts():
    assert list(count_words(all_words_dfa(AB), 4)) == [1, 4, 16, 64, 256]


def test_epsilon_and_empty():
    assert list(count_words(epsilon_dfa(AB), 3)) == [1, 0, 0, 0]
    assert list(count_words(empty_language_dfa(AB), 3)) == [0, 0, 0, 0]


def test_single_word():
    d = single_word_dfa(AB, (0, 3))
    assert d.accepts((0, 3))
    assert not d.accepts((3, 0)) and not d.accepts(()) and not d.accepts((0, 3, 0))


# -- boolean operations -------------------------------------------------------

def test_intersect_with_all_words_is_identity():
    d = single_word_dfa(AB, (1, 2))
    assert equivalent(intersect(d, all_words_dfa(AB)), d)


def test_complement_involution():
    d = single_word_dfa(AB, (0,))
    assert equivalent(complement_lang(complement_lang(d)), d)


def test_support_intersection_count():
    # words over {a,a^-1,b,b^-1} containing both an a-letter and a b-letter
    d = intersect(support_require(AB, 0), support_require(AB, 1))
    assert count_words(d, 2)[2] == 8
    assert brute_counts(d, 2) == [0, 0, 8]


def test_alphabet_mismatch_raises():
    with pytest.raises(AlphabetMismatch):
        intersect(all_words_dfa(AB), all_words_dfa(A1))


@settings(max_examples=60, deadline=None)
@given(random_dfas(), random_dfas())
def test_de_morgan(a, b):
    lhs = complement_lang(union(a, b))
    rhs = intersect(complement_lang(a), complement_lang(b))
    assert equivalent(lhs, rhs)


@settings(max_examples=60, deadline=None)
@given(random_dfas())
def test_operation_counts_match_enumeration(d):
    other = complement_lang(d)
    for result in (d, other, intersect(d, other), union(d, other)):
        assert list(count_words(result, 5)) == brute_counts(result, 5)


# -- concatenation ------------------------------------------------------------

def test_concat_epsilon_identity():
    d = single_word_dfa(AB, (2, 1))
    assert equivalent(concat(d, epsilon_dfa(AB)), d)
    assert equivalent(concat(epsilon_dfa(AB), d), d)


def test_concat_two_letters():
    xy = concat(single_word_dfa(AB, (0,)), single_word_dfa(AB, (1,)))
    assert equivalent(xy, single_word_dfa(AB, (0, 1)))


def test_concat_counts_convolution_on_prefix_code():
    # {a, ba} is a prefix code: concatenation counts are the convolution
    left = union(single_word_dfa(AB, (0,)), single_word_dfa(AB, (2, 0)))
    right = union(single_word_dfa(AB, (1,)), single_word_dfa(AB, (3, 3)))
    product = concat(left, right)
    lc = list(count_words(left, 6))
    rc = list(count_words(right, 6))
    expected = [sum(lc[i] * rc[n - i] for i in range(n + 1)) for n in range(7)]
    assert list(count_words(product, 6)) == expected
    assert brute_counts(product, 5) == expected[:6]


# -- cyclic permutation closure ----------------------------------------------

def test_cyc_perm_of_single_word():
    d = cyc_perm(single_word_dfa(AB, (0, 1)))
    expected = union(single_word_dfa(AB, (0, 1)), single_word_dfa(AB, (1, 0)))
    assert equivalent(d, expected)


def test_cyc_perm_idempotent():
    d = union(single_word_dfa(AB, (0, 1, 2)), single_word_dfa(AB, (3,)))
    once = cyc_perm(d)
    assert equivalent(once, cyc_perm(once))


def test_cyc_perm_contains_original():
    d = union(single_word_dfa(AB, (0, 0, 1)), epsilon_dfa(AB))
    closed = cyc_perm(d)
    for word in d.words_up_to(4):
        assert closed.accepts(word)


def test_cyc_perm_matches_brute_force():
    base = union(single_word_dfa(AB, (0, 1)), single_word_dfa(AB, (2, 2, 1)))
    closed = cyc_perm(base)
    words = set(base.words_up_to(5))
    rotations = {w[k:] + w[:k] for w in words for k in range(max(len(w), 1))}
    for word in itertools.chain.from_iterable(
        itertools.product(range(4), repeat=n) for n in range(5)
    ):
        assert closed.accepts(word) == (word in rotations)


def test_cyc_perm_fixes_conjugacy_geodesics():
    from raaggrowth import conjgeo_fsa

    g = SimpleGraph.make(["a", "b", "c"], [["a", "b"]])
    d = conjgeo_fsa(g)
    assert equivalent(cyc_perm(d), d)


# -- counting and growth series ----------------------------------------------

def test_count_words_shortlex_z():
    g = SimpleGraph.make(["a"], [])
    assert list(count_words(shortlex_fsa(g), 6)) == [1, 2, 2, 2, 2, 2, 2]


def test_count_words_geodesics_z2():
    g = SimpleGraph.make(["a", "b"], [["a", "b"]])
    assert list(count_words(geo_fsa(g), 2)) == [1, 4, 12]


def test_growth_series_all_words():
    for alphabet in (A1, AB):
        rf = growth_series(all_words_dfa(alphabet))
        assert rf.equals(RationalFunction.make([1], [1, -alphabet.size]))


def test_growth_series_empty_and_epsilon():
    assert growth_series(empty_language_dfa(AB)).equals(RationalFunction.make([0]))
    assert growth_series(epsilon_dfa(AB)).equals(RationalFunction.make([1]))


def test_growth_series_finite_language():
    d = union(single_word_dfa(AB, (0, 1)), single_word_dfa(AB, (2,)))
    assert growth_series(d).equals(RationalFunction.make([0, 1, 1]))


def test_growth_series_of_zn_shortlex():
    zz = RationalFunction.make([1, 1], [1, -1])
    for n in range(1, 4):
        labels = [f"v{i}" for i in range(n)]
        g = SimpleGraph.make(
            labels, [[labels[i], labels[j]] for i in range(n) for j in range(i + 1, n)]
        )
        assert growth_series(shortlex_fsa(g)).equals(zz ** n)


@settings(max_examples=40, deadline=None)
@given(random_dfas())
def test_growth_series_expansion_matches_counts(d):
    rf = growth_series(d)
    assert rf.expand(20).coefficients == tuple(count_words(d, 20))


# -- minimization and equivalence ----------------------------------------------

def test_minimize_idempotent_and_canonical():
    d = single_word_dfa(AB, (0, 1, 0))
    m = minimize(d)
    assert minimize(m).encode() == m.encode()


def test_minimized_all_words_single_state():
    bloated = Dfa(AB, 3, [1, 2, 1, 2, 2, 1, 2, 1, 0, 0, 2, 2], 0, {0, 1, 2})
    assert minimize(bloated).n_states == 1


@settings(max_examples=60, deadline=None)
@given(random_dfas())
def test_minimize_preserves_counts(d):
    assert list(count_words(minimize(d), 12)) == list(count_words(d, 12))


def test_equivalent_examples():
    d = single_word_dfa(AB, (0, 1))
    assert equivalent(d, minimize(d))
    assert not equivalent(single_word_dfa(AB, (0, 1)), single_word_dfa(AB, (1, 0)))


# -- letter embedding and serialization ---------------------------------------

def test_map_letters_embedding():
    sub = OrderedAlphabet(("a",))
    target = OrderedAlphabet(("a", "b"))
    d = all_words_dfa(sub)
    embedded = map_letters(d, target, {0: 0, 1: 1})  # target a-letters to themselves
    assert embedded.accepts((0, 1, 0))
    assert not embedded.accepts((2,))  # b-letter unmapped, falls in the sink


def test_json_roundtrip():
    d = minimize(single_word_dfa(AB, (3, 0)))
    doc = d.to_json_dict()
    back = Dfa.from_json_dict(doc)
    assert equivalent(d, back)
