"""Exact growth, geodesic and conjugacy growth series of right-angled Artin groups."""

from .automata import (
    AlphabetMismatch,
    Dfa,
    LengthCounts,
    Nfa,
    all_words_dfa,
    complement_lang,
    concat,
    count_words,
    cyc_perm,
    empty_language_dfa,
    epsilon_dfa,
    equivalent,
    growth_series,
    intersect,
    map_letters,
    minimize,
    single_word_dfa,
    union,
)
from .graphs import (
    GraphError,
    OrderedAlphabet,
    SimpleGraph,
    SubsetDecomposition,
    graph_to_json,
    parse_graph,
)
from .languages import (
    conjgeo_fsa,
    conjgeo_series_incl_excl,
    cycsl_fsa,
    cycsl_support_fsa,
    cycsl_support_series,
    geo_checker,
    geo_fsa,
    lex_threat,
    lprime_fsa,
    shortlex_fsa,
    support_exact,
    support_require,
)
from .oracle import (
    conjugacy_key,
    conjugacy_min_length,
    cyclically_reduce,
    cycrep_bruteforce,
    element_counts,
    enumerate_classes,
    enumerate_elements,
    is_conjugacy_geodesic,
    is_geodesic,
    is_shortlex,
    normal_form,
    prim_bruteforce,
)
from .pipeline import (
    ConjGrowthReport,
    conj_geodesic_series,
    detect_part1_family,
    geodesic_series,
    part1_crosscheck,
    spherical_conj_series,
    spherical_growth_series,
)
from .series import (
    NonIntegralCoefficient,
    PowerSeries,
    RationalFunction,
    euler_phi,
    neck,
    rat_eq,
    rho,
    rho_integral_form,
    series_add,
    series_mul,
    substitute_power,
)

__version__ = "0.1.0"
