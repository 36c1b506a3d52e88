"""Standard and geodesic growth series of small right-angled Artin groups.

A right-angled Artin group is given by a finite simple graph: one generator
per vertex, generators of adjacent vertices commute.  The extremes are the
free abelian group (complete graph) and the free group (edgeless graph).
This script builds the word acceptors for several small groups and extracts
their exact rational growth series.
"""

from raaggrowth import (
    SimpleGraph,
    count_words,
    geo_fsa,
    geodesic_series,
    shortlex_fsa,
    spherical_growth_series,
)


def show(title, rf, degree=8):
    series = ", ".join(str(c) for c in rf.expand(degree).coefficients)
    print(f"  {title}")
    print(f"    rational: num={list(rf.num)} den={list(rf.den)}")
    print(f"    series:   {series}, ...")


def complete_graph(n):
    labels = [f"a{i}" for i in range(n)]
    return SimpleGraph.make(labels, [[labels[i], labels[j]] for i in range(n) for j in range(i + 1, n)])


print("Free abelian groups Z^n: every element has a unique sorted spelling,")
print("so the standard growth series is ((1+z)/(1-z))^n.")
for n in (1, 2, 3):
    show(f"Z^{n} standard growth", spherical_growth_series(complete_graph(n)))
print()

print("Geodesic growth counts all minimal spellings; for Z^n it grows like n^k:")
for n in (1, 2, 3):
    show(f"Z^{n} geodesic growth", geodesic_series(complete_graph(n)))
print()

print("The free group F_2 (edgeless graph) has 4*3^(k-1) elements of length k:")
f2 = SimpleGraph.make(["x", "y"], [])
show("F_2 standard growth", spherical_growth_series(f2))
print()

print("A mixed example: the path a-b-c-d (a,b commute; b,c commute; c,d commute).")
path4 = SimpleGraph.make(["a", "b", "c", "d"], [["a", "b"], ["b", "c"], ["c", "d"]])
show("path RAAG standard growth", spherical_growth_series(path4))
show("path RAAG geodesic growth", geodesic_series(path4))
print()

print("Counts come straight from the automata as exact big integers:")
sl = shortlex_fsa(path4)
geo = geo_fsa(path4)
print("  shortlex acceptor states:", sl.n_states)
print("  element counts:   ", list(count_words(sl, 10)))
print("  geodesic counts:  ", list(count_words(geo, 10)))
