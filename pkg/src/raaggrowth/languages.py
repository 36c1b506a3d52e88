"""Automata for the word languages attached to a right-angled Artin group.

Given a defining graph, this module builds complete DFAs for:

* ``geo_fsa``      -- geodesic words (no shuffle sequence creates a cancelling
                      pair), as an intersection of per-vertex checkers;
* ``shortlex_fsa`` -- shortlex normal forms: geodesics that are also
                      lexicographically least in their shuffle class, cut out
                      by forbidden-factor automata (``lex_threat``);
* ``cycsl_fsa``    -- words all of whose rotations are shortlex normal forms;
* ``conjgeo_fsa``  -- conjugacy geodesics = words all of whose rotations are
                      geodesic;
* ``lprime_fsa``   -- words with a cancelling generator pair up to rotation
                      and shuffling, used for the inclusion-exclusion route to
                      the conjugacy geodesic growth series.

The cyclically-constrained languages use the identity
``CycL = X* \\ CycPerm(X* \\ L)`` with the cyclic-permutation closure from
``automata.cyc_perm``.
"""

from __future__ import annotations

from .automata import (
    Dfa,
    all_words_dfa,
    complement_lang,
    count_words,
    cyc_perm,
    growth_series,
    intersect,
    intersect_all,
    minimize,
)
from .graphs import GraphError, OrderedAlphabet, SimpleGraph
from .series import RationalFunction


# ---------------------------------------------------------------------------
# geodesic checkers
# ---------------------------------------------------------------------------

def geo_checker(g: SimpleGraph, alphabet: OrderedAlphabet, v: int) -> Dfa:
    """Five-state checker rejecting words where some shuffle cancels an x_v pair.

    States: 0 clean / 1 pending x_v / 2 pending x_v^-1 / 3 blocked by a
    non-commuting letter / 4 reject sink.  Letters of vertices adjacent to v
    keep the pending letter shuffleable; other vertices' letters block it.
    The blocked state is instantiated even when v is adjacent to everything
    (minimization removes it later).
    """
    if not 0 <= v < g.n_vertices:
        raise GraphError(f"unknown vertex index {v}")
    q1, q2, q3, q4, sink = range(5)
    pos, neg = alphabet.vertex_letters(v)
    rows = {q1: {}, q2: {}, q3: {}, q4: {}, sink: {}}
    for x in range(alphabet.size):
        w = alphabet.vertex(x)
        if w == v:
            if x == pos:
                rows[q1][x], rows[q2][x], rows[q3][x], rows[q4][x] = q2, q2, sink, q2
            else:
                rows[q1][x], rows[q2][x], rows[q3][x], rows[q4][x] = q3, sink, q3, q3
        elif g.adjacent(v, w):
            rows[q1][x], rows[q2][x], rows[q3][x], rows[q4][x] = q1, q2, q3, q4
        else:
            rows[q1][x], rows[q2][x], rows[q3][x], rows[q4][x] = q4, q4, q4, q4
        rows[sink][x] = sink
    table = [rows[q][x] for q in range(5) for x in range(alphabet.size)]
    return Dfa(alphabet, 5, table, q1, {q1, q2, q3, q4})


def geo_fsa(g: SimpleGraph) -> Dfa:
    """Geodesic words of the group: intersection of all per-vertex checkers."""
    alphabet = g.alphabet()
    if g.n_vertices == 0:
        return all_words_dfa(alphabet)
    return intersect_all(geo_checker(g, alphabet, v) for v in range(g.n_vertices))


# ---------------------------------------------------------------------------
# shortlex normal forms
# ---------------------------------------------------------------------------

def lex_threat(g: SimpleGraph, alphabet: OrderedAlphabet, a: int, b: int) -> Dfa:
    """Avoid the factor b s a with a < b commuting and s commuting with a.

    A word is lexicographically least in its shuffle class exactly when it
    has no factor ``b s a`` where ``a < b``, the vertices of a and b are
    adjacent, and every letter of ``s`` has a vertex adjacent to a's vertex:
    such a factor lets ``a`` shuffle left past everything, producing a smaller
    word.  One three-state automaton per ordered letter pair.
    """
    if not a < b:
        raise ValueError("lex_threat needs a < b")
    va, vb = alphabet.vertex(a), alphabet.vertex(b)
    if va == vb:
        raise ValueError("lex_threat letters must sit on distinct vertices")
    if not g.adjacent(va, vb):
        raise ValueError("lex_threat letters must sit on adjacent vertices")
    idle, threat, dead = range(3)
    table = []
    for q in range(3):
        for x in range(alphabet.size):
            if q == idle:
                table.append(threat if x == b else idle)
            elif q == threat:
                if x == a:
                    table.append(dead)
                elif g.adjacent(alphabet.vertex(x), va):
                    table.append(threat)
                else:
                    table.append(idle)
            else:
                table.append(dead)
    return Dfa(alphabet, 3, table, idle, {idle, threat})


def shortlex_fsa(g: SimpleGraph) -> Dfa:
    """Shortlex normal forms: geodesics minimal in their shuffle class."""
    alphabet = g.alphabet()
    result = geo_fsa(g)
    for u, w in sorted(g.edges):
        for a in alphabet.vertex_letters(u):
            for b in alphabet.vertex_letters(w):
                lo, hi = min(a, b), max(a, b)
                result = intersect(result, lex_threat(g, alphabet, lo, hi))
    return result


# ---------------------------------------------------------------------------
# support constraints
# ---------------------------------------------------------------------------

def support_require(alphabet: OrderedAlphabet, v: int) -> Dfa:
    """Words containing at least one letter of vertex v (two-state automaton)."""
    if not 0 <= 2 * v < alphabet.size:
        raise GraphError(f"unknown vertex index {v}")
    table = []
    for q in range(2):
        for x in range(alphabet.size):
            if q == 0:
                table.append(1 if alphabet.vertex(x) == v else 0)
            else:
                table.append(1)
    return Dfa(alphabet, 2, table, 0, {1})


def support_exact(language: Dfa, alphabet: OrderedAlphabet, subset) -> Dfa:
    """Restrict to words whose support is exactly ``subset``."""
    subset = set(subset)
    result = language
    for v in sorted(subset):
        result = intersect(result, support_require(alphabet, v))
    for v in range(alphabet.size // 2):
        if v not in subset:
            result = intersect(result, complement_lang(support_require(alphabet, v)))
    return result


# ---------------------------------------------------------------------------
# cyclically constrained languages
# ---------------------------------------------------------------------------

def cycsl_fsa(g: SimpleGraph) -> Dfa:
    """Words all of whose cyclic permutations are shortlex normal forms."""
    return complement_lang(cyc_perm(complement_lang(shortlex_fsa(g))))


def conjgeo_fsa(g: SimpleGraph) -> Dfa:
    """Conjugacy geodesic words (= words with every rotation geodesic)."""
    return complement_lang(cyc_perm(complement_lang(geo_fsa(g))))


def cycsl_support_series(g: SimpleGraph, subset, max_degree: int):
    """Exact growth data of the cyclically-shortlex words with support ``subset``.

    The subset must be indecomposable.  The computation happens over the
    restricted alphabet of the induced subgraph (the languages restrict
    compatibly), which keeps the cyclic closure small.  Returns the reduced
    rational growth function and the counts up to ``max_degree``.
    """
    subset = sorted(set(subset))
    if not subset:
        raise GraphError("support subset must be nonempty")
    if not g.is_indecomposable(subset):
        raise GraphError(f"subset {subset} is decomposable")
    induced = g.induced_subgraph(subset)
    full_support = support_exact(cycsl_fsa(induced), induced.alphabet(), range(len(subset)))
    return growth_series(full_support), count_words(full_support, max_degree)


def cycsl_support_fsa(g: SimpleGraph, subset) -> Dfa:
    """Automaton behind :func:`cycsl_support_series` (restricted alphabet)."""
    subset = sorted(set(subset))
    if not g.is_indecomposable(subset):
        raise GraphError(f"subset {subset} is decomposable")
    induced = g.induced_subgraph(subset)
    return support_exact(cycsl_fsa(induced), induced.alphabet(), range(len(subset)))


# ---------------------------------------------------------------------------
# inclusion-exclusion route to the conjugacy geodesic series
# ---------------------------------------------------------------------------

def lprime_fsa(g: SimpleGraph, v: int) -> Dfa:
    """Words w1 x_v^e w2 x_v^-e w3 with w1, w3 over the neighbors of v.

    These are exactly the words that, after some rotation and shuffling,
    contain a cancelling x_v pair.  Because w1 may only use letters of
    vertices adjacent to v, the opening x_v^e must be the first letter whose
    vertex is not a neighbor of v; symmetrically for the closing letter.
    """
    if not 0 <= v < g.n_vertices:
        raise GraphError(f"unknown vertex index {v}")
    alphabet = g.alphabet()
    nbrs = g.neighbors(v)
    pos, neg = alphabet.vertex_letters(v)
    start, open_pos, closed_pos, open_neg, closed_neg, dead = range(6)
    table = []
    for q in range(6):
        for x in range(alphabet.size):
            w = alphabet.vertex(x)
            if q == start:
                if x == pos:
                    table.append(open_pos)
                elif x == neg:
                    table.append(open_neg)
                elif w in nbrs:
                    table.append(start)
                else:
                    table.append(dead)
            elif q == open_pos:
                table.append(closed_pos if x == neg else open_pos)
            elif q == closed_pos:
                if x == pos:
                    table.append(open_pos)
                elif x == neg or w in nbrs:
                    table.append(closed_pos)
                else:
                    table.append(open_pos)
            elif q == open_neg:
                table.append(closed_neg if x == pos else open_neg)
            elif q == closed_neg:
                if x == neg:
                    table.append(open_neg)
                elif x == pos or w in nbrs:
                    table.append(closed_neg)
                else:
                    table.append(open_neg)
            else:
                table.append(dead)
    return Dfa(alphabet, 6, table, start, {closed_pos, closed_neg})


def conjgeo_series_incl_excl(g: SimpleGraph) -> RationalFunction:
    """Conjugacy geodesic growth series by inclusion-exclusion over vertices.

    Independent of the cyclic-closure route: subtracts, for every vertex
    subset S, the geodesics that carry a shuffle-rotatable cancelling pair at
    each vertex of S, with alternating signs.
    """
    geo = geo_fsa(g)
    lprimes = [minimize(lprime_fsa(g, v)) for v in range(g.n_vertices)]
    total = RationalFunction.make([0])
    n = g.n_vertices
    for mask in range(1 << n):
        automaton = geo
        bits = 0
        for v in range(n):
            if mask >> v & 1:
                automaton = intersect(automaton, lprimes[v])
                bits += 1
        term = growth_series(automaton)
        total = total + term if bits % 2 == 0 else total - term
    return total


def conjgeo_counts_incl_excl(g: SimpleGraph, max_degree: int) -> list[int]:
    """Truncated counts from the inclusion-exclusion identity (for tests)."""
    return list(conjgeo_series_incl_excl(g).expand(max_degree).coefficients)
