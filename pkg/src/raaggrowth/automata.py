"""Complete deterministic finite automata with exact growth-series extraction.

Every language in the pipeline is carried by a complete DFA over an
``OrderedAlphabet`` (letters are ints ``0..size-1``).  Automata are immutable;
all operations return fresh values, minimized eagerly so that repeated
products and closures stay tractable.

Minimized automata are renumbered canonically (breadth-first from the initial
state in letter order), so two automata accept the same language exactly when
their encodings coincide.

``growth_series`` produces the generating function counting accepted words by
length, as an exact integer rational function.  It works for any coefficient
size: counts are computed with Python big ints, a candidate linear recurrence
is found by Berlekamp-Massey over the rationals, and the candidate is then
*proved* against the transition matrix (vector or full-sequence residual
check) before the reduced fraction is returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .graphs import OrderedAlphabet
from .series import RationalFunction


class AlphabetMismatch(ValueError):
    """Operands of a language operation live over different alphabets."""


def _require_same_alphabet(a: "Dfa", b: "Dfa"):
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch("automata are defined over different alphabets")


@dataclass(frozen=True)
class LengthCounts:
    """Number of accepted words of each length 0..max_degree."""

    counts: tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, n: int) -> int:
        return self.counts[n]

    def __iter__(self):
        return iter(self.counts)


class Dfa:
    """Complete DFA: total transition table, one initial state, accept set."""

    __slots__ = ("alphabet", "n_states", "transitions", "initial", "accepting")

    def __init__(self, alphabet: OrderedAlphabet, n_states: int, transitions, initial: int, accepting):
        self.alphabet = alphabet
        self.n_states = n_states
        self.transitions = tuple(transitions)  # row-major: state * size + letter
        self.initial = initial
        self.accepting = frozenset(accepting)
        size = alphabet.size
        if len(self.transitions) != n_states * size:
            raise ValueError("transition table size does not match state count")
        if not 0 <= initial < max(n_states, 1):
            raise ValueError("initial state out of range")
        for t in self.transitions:
            if not 0 <= t < n_states:
                raise ValueError("transition target out of range")
        for q in self.accepting:
            if not 0 <= q < n_states:
                raise ValueError("accepting state out of range")

    def delta(self, state: int, letter: int) -> int:
        return self.transitions[state * self.alphabet.size + letter]

    def accepts(self, word) -> bool:
        q = self.initial
        size = self.alphabet.size
        for x in word:
            q = self.transitions[q * size + x]
        return q in self.accepting

    def encode(self) -> tuple:
        """Hashable identity; canonical after minimize()."""
        return (self.alphabet.labels, self.n_states, self.transitions, self.initial,
                tuple(sorted(self.accepting)))

    def words_up_to(self, max_length: int):
        """Yield all accepted words of length <= max_length (lexicographic per length).

        Prefixes that cannot reach an accepting state anymore are pruned.
        """
        size = self.alphabet.size
        live = _coreachable(self)
        layer = [((), self.initial)] if self.initial in live else []
        for length in range(max_length + 1):
            for word, q in layer:
                if q in self.accepting:
                    yield word
            if length == max_length:
                break
            layer = [
                (word + (x,), target)
                for word, q in layer
                for x in range(size)
                if (target := self.transitions[q * size + x]) in live
            ]

    def to_json_dict(self) -> dict:
        return {
            "alphabet": list(self.alphabet.labels),
            "states": self.n_states,
            "initial": self.initial,
            "accepting": sorted(self.accepting),
            "transitions": [
                list(self.transitions[q * self.alphabet.size:(q + 1) * self.alphabet.size])
                for q in range(self.n_states)
            ],
        }

    @staticmethod
    def from_json_dict(doc: dict) -> "Dfa":
        alphabet = OrderedAlphabet(tuple(doc["alphabet"]))
        rows = doc["transitions"]
        flat = [t for row in rows for t in row]
        return Dfa(alphabet, doc["states"], flat, doc["initial"], doc["accepting"])


# ---------------------------------------------------------------------------
# elementary automata
# ---------------------------------------------------------------------------

def all_words_dfa(alphabet: OrderedAlphabet) -> Dfa:
    return Dfa(alphabet, 1, [0] * alphabet.size, 0, {0})


def empty_language_dfa(alphabet: OrderedAlphabet) -> Dfa:
    return Dfa(alphabet, 1, [0] * alphabet.size, 0, set())


def epsilon_dfa(alphabet: OrderedAlphabet) -> Dfa:
    size = alphabet.size
    table = [1] * size + [1] * size
    return Dfa(alphabet, 2, table, 0, {0})


def single_word_dfa(alphabet: OrderedAlphabet, word) -> Dfa:
    """DFA accepting exactly one word."""
    word = tuple(word)
    size = alphabet.size
    n = len(word) + 2  # chain plus sink
    sink = n - 1
    table = [sink] * (n * size)
    for i, x in enumerate(word):
        table[i * size + x] = i + 1
    return minimize(Dfa(alphabet, n, table, 0, {len(word)}))


# ---------------------------------------------------------------------------
# minimization and canonical form
# ---------------------------------------------------------------------------

def _restrict_reachable(dfa: Dfa) -> Dfa:
    size = dfa.alphabet.size
    order = [dfa.initial]
    index = {dfa.initial: 0}
    for q in order:
        base = q * size
        for x in range(size):
            t = dfa.transitions[base + x]
            if t not in index:
                index[t] = len(order)
                order.append(t)
    table = []
    for q in order:
        base = q * size
        table.extend(index[dfa.transitions[base + x]] for x in range(size))
    accepting = {index[q] for q in dfa.accepting if q in index}
    return Dfa(dfa.alphabet, len(order), table, 0, accepting)


def minimize(dfa: Dfa) -> Dfa:
    """Unique minimal complete DFA with canonical breadth-first numbering."""
    dfa = _restrict_reachable(dfa)
    n = dfa.n_states
    size = dfa.alphabet.size
    if n == 0:
        return dfa

    # Hopcroft partition refinement
    incoming = [[[] for _ in range(n)] for _ in range(size)]
    for q in range(n):
        base = q * size
        for x in range(size):
            incoming[x][dfa.transitions[base + x]].append(q)

    accepting = set(dfa.accepting)
    rest = set(range(n)) - accepting
    partition = []
    if accepting:
        partition.append(set(accepting))
    if rest:
        partition.append(set(rest))
    block_of = [0] * n
    for b, block in enumerate(partition):
        for q in block:
            block_of[q] = b
    work = deque(range(len(partition)))
    in_work = [True] * len(partition)

    while work:
        a = work.popleft()
        in_work[a] = False
        splitter = list(partition[a])
        for x in range(size):
            preimage = set()
            for q in splitter:
                preimage.update(incoming[x][q])
            if not preimage:
                continue
            touched = {}
            for p in preimage:
                touched.setdefault(block_of[p], set()).add(p)
            for b, inside in touched.items():
                block = partition[b]
                if len(inside) == len(block):
                    continue
                block -= inside
                new_index = len(partition)
                partition.append(inside)
                in_work.append(False)
                for p in inside:
                    block_of[p] = new_index
                if in_work[b]:
                    work.append(new_index)
                    in_work[new_index] = True
                else:
                    smaller = new_index if len(inside) <= len(block) else b
                    work.append(smaller)
                    in_work[smaller] = True

    # canonical BFS renumbering of the quotient
    rep_delta = {}
    for b, block in enumerate(partition):
        q = next(iter(block))
        base = q * size
        rep_delta[b] = [block_of[dfa.transitions[base + x]] for x in range(size)]
    start = block_of[dfa.initial]
    order = [start]
    number = {start: 0}
    for b in order:
        for x in range(size):
            t = rep_delta[b][x]
            if t not in number:
                number[t] = len(order)
                order.append(t)
    table = []
    for b in order:
        table.extend(number[t] for t in rep_delta[b])
    accepting_blocks = {number[block_of[q]] for q in dfa.accepting}
    return Dfa(dfa.alphabet, len(order), table, 0, accepting_blocks)


def equivalent(a: Dfa, b: Dfa) -> bool:
    """Language equality via canonical minimal forms."""
    _require_same_alphabet(a, b)
    return minimize(a).encode() == minimize(b).encode()


# ---------------------------------------------------------------------------
# boolean operations
# ---------------------------------------------------------------------------

def _product(a: Dfa, b: Dfa, keep) -> Dfa:
    _require_same_alphabet(a, b)
    size = a.alphabet.size
    start = (a.initial, b.initial)
    index = {start: 0}
    order = [start]
    table = []
    for p, q in order:
        pa = p * size
        qb = q * size
        for x in range(size):
            t = (a.transitions[pa + x], b.transitions[qb + x])
            if t not in index:
                index[t] = len(order)
                order.append(t)
            table.append(index[t])
    accepting = {
        i for i, (p, q) in enumerate(order) if keep(p in a.accepting, q in b.accepting)
    }
    return minimize(Dfa(a.alphabet, len(order), table, 0, accepting))


def intersect(a: Dfa, b: Dfa) -> Dfa:
    return _product(a, b, lambda x, y: x and y)


def union(a: Dfa, b: Dfa) -> Dfa:
    return _product(a, b, lambda x, y: x or y)


def difference(a: Dfa, b: Dfa) -> Dfa:
    return _product(a, b, lambda x, y: x and not y)


def complement_lang(a: Dfa) -> Dfa:
    flipped = set(range(a.n_states)) - a.accepting
    return minimize(Dfa(a.alphabet, a.n_states, a.transitions, a.initial, flipped))


def intersect_all(automata) -> Dfa:
    automata = list(automata)
    if not automata:
        raise ValueError("intersect_all needs at least one automaton")
    out = automata[0]
    for other in automata[1:]:
        out = intersect(out, other)
    return out


# ---------------------------------------------------------------------------
# nondeterministic automata and determinization
# ---------------------------------------------------------------------------

class Nfa:
    """NFA with epsilon moves; intermediate form for concatenation/closure."""

    __slots__ = ("alphabet", "n_states", "transitions", "eps", "initials", "accepting")

    def __init__(self, alphabet, n_states, transitions, eps, initials, accepting):
        self.alphabet = alphabet
        self.n_states = n_states
        self.transitions = transitions  # list per state: dict letter -> tuple of targets
        self.eps = eps                  # list per state: tuple of targets
        self.initials = frozenset(initials)
        self.accepting = frozenset(accepting)

    def _closure(self, states) -> frozenset:
        out = set(states)
        stack = list(states)
        while stack:
            q = stack.pop()
            for t in self.eps[q]:
                if t not in out:
                    out.add(t)
                    stack.append(t)
        return frozenset(out)

    def determinize(self) -> Dfa:
        size = self.alphabet.size
        start = self._closure(self.initials)
        index = {start: 0}
        order = [start]
        table = []
        for subset in order:
            for x in range(size):
                targets = set()
                for q in subset:
                    targets.update(self.transitions[q].get(x, ()))
                t = self._closure(targets)
                if t not in index:
                    index[t] = len(order)
                    order.append(t)
                table.append(index[t])
        accepting = {i for i, subset in enumerate(order) if subset & self.accepting}
        return Dfa(self.alphabet, len(order), table, 0, accepting)


def _concat_nfa(a: Dfa, b: Dfa) -> Nfa:
    _require_same_alphabet(a, b)
    size = a.alphabet.size
    offset = a.n_states
    transitions = []
    eps = []
    for q in range(a.n_states):
        base = q * size
        transitions.append({x: (a.transitions[base + x],) for x in range(size)})
        eps.append((offset + b.initial,) if q in a.accepting else ())
    for q in range(b.n_states):
        base = q * size
        transitions.append({x: (offset + b.transitions[base + x],) for x in range(size)})
        eps.append(())
    accepting = {offset + q for q in b.accepting}
    return Nfa(a.alphabet, offset + b.n_states, transitions, eps, {a.initial}, accepting)


def concat(a: Dfa, b: Dfa) -> Dfa:
    """Language concatenation L(a)L(b)."""
    return minimize(_concat_nfa(a, b).determinize())


# ---------------------------------------------------------------------------
# cyclic permutation closure
# ---------------------------------------------------------------------------

def _coreachable(dfa: Dfa) -> set:
    size = dfa.alphabet.size
    incoming = [[] for _ in range(dfa.n_states)]
    for q in range(dfa.n_states):
        base = q * size
        for x in range(size):
            incoming[dfa.transitions[base + x]].append(q)
    seen = set(dfa.accepting)
    stack = list(dfa.accepting)
    while stack:
        q = stack.pop()
        for p in incoming[q]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def cyc_perm(a: Dfa) -> Dfa:
    """Closure of L(a) under cyclic permutation: {vu : uv in L(a)}.

    Built as the union over states q of Suffixes(a, q) . Prefixes(a, q),
    where Suffixes re-roots the initial state at q and Prefixes re-roots
    acceptance at q.  Pieces with equal languages are merged up front.
    """
    a = minimize(a)
    coreach = _coreachable(a)
    result = empty_language_dfa(a.alphabet)
    seen_pieces = set()
    for q in range(a.n_states):
        if q not in coreach:
            continue  # Suffixes(a, q) is empty
        suffixes = minimize(Dfa(a.alphabet, a.n_states, a.transitions, q, a.accepting))
        prefixes = minimize(Dfa(a.alphabet, a.n_states, a.transitions, a.initial, {q}))
        piece = concat(suffixes, prefixes)
        key = piece.encode()
        if key in seen_pieces:
            continue
        seen_pieces.add(key)
        result = union(result, piece)
    return result


# ---------------------------------------------------------------------------
# alphabet embedding
# ---------------------------------------------------------------------------

def map_letters(dfa: Dfa, target: OrderedAlphabet, letter_map) -> Dfa:
    """Reinterpret over ``target``; unmapped target letters go to a dead sink.

    ``letter_map`` maps target letters to letters of ``dfa``'s alphabet.
    """
    size = target.size
    sink = dfa.n_states
    table = []
    for q in range(dfa.n_states):
        for x in range(size):
            local = letter_map.get(x)
            table.append(dfa.delta(q, local) if local is not None else sink)
    table.extend([sink] * size)
    return minimize(Dfa(target, sink + 1, table, dfa.initial, dfa.accepting))


# ---------------------------------------------------------------------------
# counting and growth series
# ---------------------------------------------------------------------------

def count_words(dfa: Dfa, max_degree: int) -> LengthCounts:
    """Accepted-word counts by length, exact big-int dynamic programming."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    size = dfa.alphabet.size
    transitions = dfa.transitions
    y = [1 if q in dfa.accepting else 0 for q in range(dfa.n_states)]
    counts = [y[dfa.initial]]
    for _ in range(max_degree):
        y = [
            sum(y[t] for t in transitions[q * size:(q + 1) * size])
            for q in range(dfa.n_states)
        ]
        counts.append(y[dfa.initial])
    return LengthCounts(tuple(counts))


def _berlekamp_massey(sequence):
    """Shortest LFSR over Q: C with C[0]=1, sum_i C[i]*s[n-i] = 0 for n >= len(C)-1."""
    C = [Fraction(1)]
    B = [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    for n, s_n in enumerate(sequence):
        d = Fraction(s_n)
        for i in range(1, L + 1):
            d += C[i] * sequence[n - i]
        if d == 0:
            m += 1
            continue
        coef = d / b
        if 2 * L <= n:
            T = list(C)
            while len(C) < len(B) + m:
                C.append(Fraction(0))
            for i, c in enumerate(B):
                C[i + m] -= coef * c
            L = n + 1 - L
            B = T
            b = d
            m = 1
        else:
            while len(C) < len(B) + m:
                C.append(Fraction(0))
            for i, c in enumerate(B):
                C[i + m] -= coef * c
            m += 1
    # the connection polynomial has degree <= L; keep exactly L+1 taps
    # (trailing zeros are meaningful: the recurrence order is L, not deg C)
    for extra in C[L + 1:]:
        assert extra == 0
    del C[L + 1:]
    while len(C) < L + 1:
        C.append(Fraction(0))
    return C


class _TrimmedCounting:
    """Count DP on the trim part (reachable and co-reachable) of a DFA."""

    def __init__(self, dfa: Dfa):
        size = dfa.alphabet.size
        reachable = set()
        stack = [dfa.initial]
        while stack:
            q = stack.pop()
            if q in reachable:
                continue
            reachable.add(q)
            base = q * size
            stack.extend(dfa.transitions[base + x] for x in range(size))
        trim = sorted(reachable & _coreachable(dfa))
        self.empty = dfa.initial not in trim
        if self.empty:
            return
        index = {q: i for i, q in enumerate(trim)}
        self.n = len(trim)
        self.outgoing = []  # per trim state, list of trim targets (with multiplicity)
        for q in trim:
            base = q * size
            self.outgoing.append(
                [index[t] for x in range(size) if (t := dfa.transitions[base + x]) in index]
            )
        self.initial = index[dfa.initial]
        self.v0 = [1 if q in dfa.accepting else 0 for q in trim]
        self.vector = list(self.v0)
        self.counts = [self.vector[self.initial]]

    def step_vector(self, y):
        return [sum(y[t] for t in row) for row in self.outgoing]

    def extend_to(self, k: int):
        while len(self.counts) <= k:
            self.vector = self.step_vector(self.vector)
            self.counts.append(self.vector[self.initial])

    def krylov(self, depth: int):
        """Vectors v, Mv, ..., M^depth v."""
        out = [list(self.v0)]
        for _ in range(depth):
            out.append(self.step_vector(out[-1]))
        return out


def growth_series(dfa: Dfa) -> RationalFunction:
    """Exact rational generating function of the accepted-word counts.

    A Berlekamp-Massey candidate recurrence is certified before use: either a
    matrix-side residual vanishes (which proves the recurrence for every
    degree), or the counts are extended to the unconditional cut-off
    ``#trim states + order`` and checked term by term.
    """
    dfa = minimize(dfa)
    work = _TrimmedCounting(dfa)
    if work.empty:
        return RationalFunction.make([0])

    window = 32
    while True:
        work.extend_to(window - 1)
        connection = _berlekamp_massey(work.counts[:window])
        order = len(connection) - 1
        if 2 * order + 4 > window and window < 2 * work.n + 4:
            window = min(max(window * 2, 2 * order + 8), 2 * work.n + 4)
            continue
        denominator = _fractions_to_int_poly(connection)
        if _certified(work, denominator):
            break
        if window >= 2 * work.n + 4:
            raise AssertionError("recurrence certification failed past the safe bound")
        window = min(window * 2, 2 * work.n + 4)

    order = len(denominator) - 1
    numerator = []
    for m in range(order):
        acc = 0
        for i in range(min(m, order) + 1):
            acc += denominator[i] * work.counts[m - i]
        numerator.append(acc)
    return RationalFunction.make(numerator, denominator)


def _fractions_to_int_poly(fracs):
    """Clear denominators, preserving length (trailing zeros carry the order)."""
    lcm = 1
    for c in fracs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    return [int(c * lcm) for c in fracs]


def _certified(work: _TrimmedCounting, denominator) -> bool:
    """Prove that the candidate denominator annihilates the count sequence."""
    order = len(denominator) - 1
    if order == 0:
        # an order-0 recurrence claims the zero series: check every count
        work.extend_to(work.n + 1)
        return all(c == 0 for c in work.counts)
    krylov = work.krylov(order)
    residual = [0] * work.n
    for m, y in enumerate(krylov):
        c = denominator[order - m]
        if c:
            for i in range(work.n):
                residual[i] += c * y[i]
    if all(r == 0 for r in residual):
        return True
    # fall back: verify term by term beyond the unconditional bound
    limit = work.n + order + 1
    work.extend_to(limit)
    for n in range(order, limit + 1):
        acc = 0
        for i in range(order + 1):
            acc += denominator[i] * work.counts[n - i]
        if acc != 0:
            return False
    return True
