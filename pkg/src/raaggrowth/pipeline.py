"""Assembly of the growth-series endpoints.

The spherical conjugacy growth series of a right-angled Artin group is

    1 + sum over nonempty vertex subsets U, with complement components
    (U_1, ..., U_m), of the product rho(F_1) ... rho(F_m),

where F_i is the growth series of the cyclically-shortlex words supported
exactly on U_i.  Each distinct indecomposable block is computed once (over
its restricted alphabet) and cached; the subset sum then only multiplies and
adds truncated series.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .automata import count_words, growth_series
from .graphs import GraphError, SimpleGraph, isomorphism_key
from .languages import (
    conjgeo_fsa,
    conjgeo_series_incl_excl,
    cycsl_support_fsa,
    geo_fsa,
    shortlex_fsa,
)
from .series import PowerSeries, RationalFunction, neck, rho


@dataclass
class ConjGrowthReport:
    """Spherical conjugacy growth data for one graph at one truncation degree."""

    graph: SimpleGraph
    degree: int
    sigma_tilde: PowerSeries
    per_subset: dict  # block (vertex tuple) -> (RationalFunction, rho PowerSeries)
    automaton_states: dict = field(default_factory=dict)  # block -> #states
    timings: dict = field(default_factory=dict)           # block -> seconds

    def to_json_dict(self) -> dict:
        def block_name(block):
            return "{" + ",".join(self.graph.vertices[v] for v in block) + "}"

        return {
            "degree": self.degree,
            "sigma_tilde": self.sigma_tilde.to_strings(),
            "per_subset": {
                block_name(block): {
                    "rational": rf.to_json_dict(),
                    "rho": series.to_strings(),
                }
                for block, (rf, series) in sorted(self.per_subset.items())
            },
        }


def spherical_conj_series(
    g: SimpleGraph,
    degree: int,
    max_vertices: int = 8,
    collapse_isomorphic: bool = False,
) -> ConjGrowthReport:
    """Spherical conjugacy growth series, truncated at ``degree``.

    ``collapse_isomorphic`` additionally shares work between blocks whose
    induced subgraphs are isomorphic (brute-force canonical form); off by
    default so that the per-subset report stays directly auditable.
    """
    if degree < 0:
        raise ValueError("truncation degree must be nonnegative")
    n = g.n_vertices
    if n > max_vertices:
        raise GraphError(f"graph has {n} vertices, above the configured bound {max_vertices}")

    per_subset = {}
    automaton_states = {}
    timings = {}
    shared = {}  # isomorphism key -> block whose data is reused

    def block_rho(block: tuple) -> PowerSeries:
        if block in per_subset:
            return per_subset[block][1]
        if collapse_isomorphic:
            iso = isomorphism_key(g.induced_subgraph(block))
            if iso in shared:
                source = shared[iso]
                per_subset[block] = per_subset[source]
                automaton_states[block] = automaton_states[source]
                timings[block] = 0.0
                return per_subset[block][1]
        started = time.perf_counter()
        automaton = cycsl_support_fsa(g, block)
        rf = growth_series(automaton)
        counts = count_words(automaton, degree)
        rho_series = rho(PowerSeries(tuple(counts)))
        per_subset[block] = (rf, rho_series)
        automaton_states[block] = automaton.n_states
        timings[block] = time.perf_counter() - started
        if collapse_isomorphic:
            shared[iso] = block
        return rho_series

    total = PowerSeries.one(degree)
    for mask in range(1, 1 << n):
        subset = [v for v in range(n) if mask >> v & 1]
        product = PowerSeries.one(degree)
        for block in g.decompose(subset):
            product = product * block_rho(block)
        total = total + product

    assert total[0] == 1 and all(c >= 0 for c in total.coefficients)
    return ConjGrowthReport(g, degree, total, per_subset, automaton_states, timings)


def spherical_growth_series(g: SimpleGraph) -> RationalFunction:
    """Standard growth series: one shortlex normal form per element."""
    return growth_series(shortlex_fsa(g))


def geodesic_series(g: SimpleGraph) -> RationalFunction:
    return growth_series(geo_fsa(g))


def conj_geodesic_series(g: SimpleGraph, method: str = "direct") -> RationalFunction:
    """Conjugacy geodesic growth series.

    ``direct`` builds the conjugacy geodesic automaton through the cyclic
    closure; ``incl-excl`` evaluates the alternating sum over vertex subsets.
    The two routes are independent and must agree.
    """
    if method == "direct":
        return growth_series(conjgeo_fsa(g))
    if method == "incl-excl":
        return conjgeo_series_incl_excl(g)
    raise ValueError(f"unknown method {method!r}; expected 'direct' or 'incl-excl'")


# ---------------------------------------------------------------------------
# closed-form cross-check expressions
# ---------------------------------------------------------------------------

def _rf(num, den) -> RationalFunction:
    return RationalFunction.make(num, den)


_ONE_MINUS_Z = (1, -1)


def part1_crosscheck(expr: str, degree: int) -> PowerSeries:
    """Evaluate a built-in necklace-form series for cross-checking.

    Known families:

    * ``free-<k>``      -- free group of rank k;
    * ``z-star-z-<n>``  -- free product of Z with Z^n;
    * ``path4``         -- the four-vertex path a-b-c-d.

    These come from the recursive free-splitting formula for the conjugacy
    growth series and are independent of the subset/rho pipeline.
    """
    zz = _rf((1, 1), _ONE_MINUS_Z)  # (1+z)/(1-z)

    if expr.startswith("free-"):
        k = int(expr.split("-", 1)[1])
        if k < 1:
            raise ValueError("free rank must be >= 1")
        total = _rf((1, 2 * k - 1), _ONE_MINUS_Z).expand(degree)
        for j in range(1, k):
            den = _poly_mul_small(_ONE_MINUS_Z, (1, -(2 * j - 1)))
            total = total + neck(_rf((0, 0, 4 * j), den).expand(degree))
        return total

    if expr.startswith("z-star-z-"):
        n = int(expr.rsplit("-", 1)[1])
        if n < 1:
            raise ValueError("abelian rank must be >= 1")
        abelian = (zz ** n).expand(degree)
        loop = _rf((0, 2), _ONE_MINUS_Z).expand(degree)  # 2z/(1-z)
        arg = (abelian - PowerSeries.one(degree)) * loop
        return loop + abelian + neck(arg)

    if expr == "path4":
        head = _rf((1, 6, 5), _poly_mul_small(_ONE_MINUS_Z, _ONE_MINUS_Z)).expand(degree)
        factor = _rf((1, 3), _ONE_MINUS_Z).expand(degree)
        neck1 = neck(_rf((0, 0, 4), _poly_mul_small(_ONE_MINUS_Z, _ONE_MINUS_Z)).expand(degree))
        neck2 = neck(_rf((0, 0, 8), _poly_mul_small(_ONE_MINUS_Z, (1, -3))).expand(degree))
        return head + factor * neck1 + neck2

    raise ValueError(f"unknown closed-form family {expr!r}")


def _poly_mul_small(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def detect_part1_family(g: SimpleGraph) -> str | None:
    """Match a graph against the built-in closed-form families."""
    n = g.n_vertices
    if n >= 1 and not g.edges:
        return f"free-{n}"
    for v in range(n):
        others = [w for w in range(n) if w != v]
        if g.neighbors(v):
            continue
        complete = all(g.adjacent(u, w) for i, u in enumerate(others) for w in others[i + 1:])
        if complete and len(others) >= 1:
            return f"z-star-z-{len(others)}"
    if n == 4 and len(g.edges) == 3:
        degrees = sorted(sum(1 for e in g.edges if v in e) for v in range(4))
        if degrees == [1, 1, 2, 2] and len(g.connected_components()) == 1:
            return "path4"
    return None
