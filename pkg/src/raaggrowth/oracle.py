"""Brute-force ground truth at desk scale, independent of the automata.

Words are tuples of letters.  Normal forms are computed by exhaustive
cancellation followed by greedy extraction of the least front-movable letter
(the lexicographically least representative of the shuffle class).  Conjugacy
data comes from explicit rotation/shuffle searches.  Everything here is
deliberately naive and capped; it exists to validate the automata pipeline,
so it must not share code with it.
"""

from __future__ import annotations

from .graphs import SimpleGraph

ORACLE_MAX_LENGTH = 8


class OracleBound(ValueError):
    """Requested enumeration exceeds the hard desk-scale cap."""


def _check_cap(n: int):
    if n > ORACLE_MAX_LENGTH:
        raise OracleBound(f"oracle enumeration capped at length {ORACLE_MAX_LENGTH}, got {n}")
    if n < 0:
        raise OracleBound("length bound must be nonnegative")


# ---------------------------------------------------------------------------
# normal forms
# ---------------------------------------------------------------------------

def _cancel_once(g: SimpleGraph, word):
    """Remove one cancelling pair x ... x^-1 whose gap commutes with x."""
    alphabet = g.alphabet()
    for i, x in enumerate(word):
        v = alphabet.vertex(x)
        inverse = alphabet.inverse(x)
        for j in range(i + 1, len(word)):
            w = alphabet.vertex(word[j])
            if word[j] == inverse:
                return word[:i] + word[i + 1:j] + word[j + 1:]
            if w != v and not g.adjacent(v, w):
                break  # this letter sits between any farther pair as well
    return None


def normal_form(g: SimpleGraph, word) -> tuple:
    """Shortlex normal form of the group element spelled by ``word``.

    First cancels generator/inverse pairs (allowed whenever everything in
    between commutes with the cancelling vertex, same-vertex letters
    included), then repeatedly emits the least letter that can be shuffled to
    the front.
    """
    alphabet = g.alphabet()
    word = tuple(word)
    while True:
        shorter = _cancel_once(g, word)
        if shorter is None:
            break
        word = shorter
    remaining = list(word)
    out = []
    while remaining:
        best = None
        for p, x in enumerate(remaining):
            v = alphabet.vertex(x)
            movable = all(
                alphabet.vertex(y) != v and g.adjacent(alphabet.vertex(y), v)
                for y in remaining[:p]
            )
            if movable and (best is None or x < remaining[best]):
                best = p
        out.append(remaining.pop(best))
    return tuple(out)


def is_geodesic(g: SimpleGraph, word) -> bool:
    return len(normal_form(g, word)) == len(word)


def is_shortlex(g: SimpleGraph, word) -> bool:
    return normal_form(g, word) == tuple(word)


# ---------------------------------------------------------------------------
# conjugacy machinery
# ---------------------------------------------------------------------------

def _rotations(word):
    return [word[k:] + word[:k] for k in range(len(word))] or [word]


def cyclically_reduce(g: SimpleGraph, word) -> tuple:
    """Rotate and renormalize until no rotation shortens the word.

    The fixed point has every rotation geodesic, so its length is the minimal
    length in the conjugacy class.
    """
    word = normal_form(g, word)
    while True:
        for rotated in _rotations(word):
            candidate = normal_form(g, rotated)
            if len(candidate) < len(word):
                word = candidate
                break
        else:
            return word


def conjugacy_min_length(g: SimpleGraph, word) -> int:
    return len(cyclically_reduce(g, word))


def is_conjugacy_geodesic(g: SimpleGraph, word) -> bool:
    return conjugacy_min_length(g, word) == len(word)


def conjugacy_class_words(g: SimpleGraph, word) -> frozenset:
    """All minimal-length words in the conjugacy class of ``word``.

    Breadth-first closure of one cyclically reduced representative under
    single-letter rotation and single adjacent-vertex transposition; conjugate
    minimal words are connected by interleaved rotations and shuffles.
    """
    alphabet = g.alphabet()
    start = cyclically_reduce(g, word)
    if not start:
        return frozenset({start})
    seen = {start}
    stack = [start]
    while stack:
        w = stack.pop()
        nxt = w[1:] + w[:1]
        if nxt not in seen:
            seen.add(nxt)
            stack.append(nxt)
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            va, vb = alphabet.vertex(a), alphabet.vertex(b)
            if va != vb and g.adjacent(va, vb):
                swapped = w[:k] + (b, a) + w[k + 2:]
                if swapped not in seen:
                    seen.add(swapped)
                    stack.append(swapped)
    return frozenset(seen)


def conjugacy_key(g: SimpleGraph, word, _cache=None) -> tuple:
    """Canonical representative (lex-least minimal word) of the class."""
    start = cyclically_reduce(g, word)
    if _cache is not None and start in _cache:
        return _cache[start]
    closure = conjugacy_class_words(g, start)
    key = min(closure)
    if _cache is not None:
        for member in closure:
            _cache[member] = key
    return key


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def enumerate_elements(g: SimpleGraph, max_length: int) -> list[set]:
    """Normal forms of all group elements of length <= max_length, by length.

    Grown by appending letters to shorter normal forms; every element of
    length k extends one of length k-1, so the sweep is exhaustive.
    """
    _check_cap(max_length)
    size = g.alphabet().size
    by_length = [{()}]
    known = {()}
    frontier = [()]
    for length in range(1, max_length + 1):
        new = set()
        for w in frontier:
            for x in range(size):
                nf = normal_form(g, w + (x,))
                if len(nf) == length and nf not in known:
                    known.add(nf)
                    new.add(nf)
        by_length.append(new)
        frontier = sorted(new)
    return by_length


def element_counts(g: SimpleGraph, max_length: int) -> list[int]:
    return [len(layer) for layer in enumerate_elements(g, max_length)]


def enumerate_classes(g: SimpleGraph, max_length: int) -> list[int]:
    """Number of conjugacy classes whose minimal length is k, for k <= max_length."""
    _check_cap(max_length)
    counts = [0] * (max_length + 1)
    cache = {}
    seen_keys = set()
    for layer in enumerate_elements(g, max_length):
        for w in layer:
            key = conjugacy_key(g, w, cache)
            if key not in seen_keys:
                seen_keys.add(key)
                counts[len(key)] += 1
    return counts


# ---------------------------------------------------------------------------
# finite-language helpers
# ---------------------------------------------------------------------------

def cycrep_bruteforce(words) -> set:
    """Lexicographically least rotation of each rotation class.

    The input must be closed under rotation.
    """
    words = {tuple(w) for w in words}
    for w in words:
        for r in _rotations(w):
            if r not in words:
                raise ValueError(f"input not closed under rotation: missing {r} from {w}")
    return {min(_rotations(w)) for w in words}


def prim_bruteforce(words) -> set:
    """Words that are not proper powers of shorter members."""
    words = {tuple(w) for w in words}
    if () in words:
        raise ValueError("primitive-word computation requires the empty word excluded")
    out = set()
    for w in words:
        n = len(w)
        is_power = False
        for d in range(1, n):
            if n % d == 0 and w[:d] in words and w[:d] * (n // d) == w:
                is_power = True
                break
        if not is_power:
            out.add(w)
    return out
