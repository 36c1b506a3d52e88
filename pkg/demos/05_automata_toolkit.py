"""The underlying automata toolkit.

Everything upstream reduces to complete deterministic automata with boolean
operations, concatenation, cyclic-permutation closure, minimization, and
exact growth-series extraction.  This script exercises the toolkit on toy
languages where every answer is easy to verify by hand.
"""

from raaggrowth import (
    OrderedAlphabet,
    all_words_dfa,
    complement_lang,
    concat,
    count_words,
    cyc_perm,
    equivalent,
    growth_series,
    intersect,
    minimize,
    single_word_dfa,
    union,
)

ab = OrderedAlphabet(("a", "b"))  # letters: a, a^-1, b, b^-1
print("Alphabet letters:", [ab.name(x) for x in range(ab.size)])
print()

print("All words over 4 letters grow like 4^n, generating function 1/(1-4z):")
everything = all_words_dfa(ab)
print("  counts:", list(count_words(everything, 5)))
print("  growth:", growth_series(everything))
print()

print("Cyclic permutation closure of the single word a b:")
word = single_word_dfa(ab, (0, 2))
closed = cyc_perm(word)
rotations = union(single_word_dfa(ab, (0, 2)), single_word_dfa(ab, (2, 0)))
print("  closure == {ab, ba}:", equivalent(closed, rotations))
print("  closing again changes nothing:", equivalent(cyc_perm(closed), closed))
print()

print("Concatenation of prefix codes convolves the counts:")
left = union(single_word_dfa(ab, (0,)), single_word_dfa(ab, (2, 0)))
right = single_word_dfa(ab, (1,))
product = concat(left, right)
print("  counts:", list(count_words(product, 4)))
print()

print("Boolean algebra with automatic minimization:")
not_empty = complement_lang(single_word_dfa(ab, ()))
print("  complement of the empty-word language accepts 'a':", not_empty.accepts((0,)))
both = intersect(everything, not_empty)
print("  intersect with everything is a no-op:", equivalent(both, not_empty))
print("  minimized all-words automaton has", minimize(everything).n_states, "state")
print()

print("Growth extraction is exact at any coefficient size; counts of the")
print("16-letter all-words language at degree 60 have ~70 digits:")
wide = all_words_dfa(OrderedAlphabet(tuple("abcdefgh")))
value = count_words(wide, 60)[60]
print("  16^60 =", value)
print("  growth:", growth_series(wide))
