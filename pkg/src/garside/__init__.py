"""Garside-theory engine for braid groups.

Left normal forms over the permutation-braid alphabet, the piece-rotation
rigidification test with blocking-braid machinery, exact census and uniform
sampling of spheres and balls in the Cayley graph, and a generically
quadratic conjugacy solver with verifiable certificates.
"""

from .simple import (
    ArtinWord,
    SimpleBraid,
    all_simples,
    complement_simple,
    delta,
    finishing_set,
    identity_simple,
    is_left_weighted,
    left_divides,
    meet,
    multiply_simple,
    proper_simples,
    right_divides,
    sigma,
    simple_from_letters,
    simple_to_canonical_word,
    starting_set,
    tau_simple,
)
from .normal import (
    EmptyNormalFormError,
    NormalForm,
    complement,
    conjugate,
    contains_factor_subword,
    cycling,
    delta_nf,
    final_factor,
    from_simple,
    gcd,
    identity_nf,
    initial_factor,
    inverse,
    is_in_normal_form_as_concatenation,
    is_rigid,
    max_simple_suffix,
    multiply,
    noncrossing_pair_exists,
    normalize,
    normalize_letters,
    parse_normal_form,
    power,
    render,
    rigid_orbit,
    rigid_orbit_with_conjugators,
    tau_conjugate,
    word_of,
)
from .genericity import (
    DEFAULT_SCHEME,
    FLOOR_BALANCED,
    PAPER_CEILING,
    PieceDecomposition,
    SchemeDegenerateError,
    TooShortError,
    blocking_braid,
    decompose,
    is_nonintrusive,
    middle_fifth,
    observation_test,
    prefix_of_complement,
    search_blocking_braids,
    symmetric_criterion,
    verify_blocking,
)
from .conjugacy import (
    CERTIFIED,
    CONJUGATE,
    NOT_CONJUGATE,
    RIGID_NO_CERT,
    UNKNOWN,
    ConjugacyAnswer,
    ConjugacyCertificate,
    default_witness_patterns,
    fast_rigid_conjugate,
    solve_conjugacy,
    strict_witness_patterns,
    verify_conjugator,
)
from .census import (
    SampleConfig,
    TransitionGraph,
    count_ball,
    count_sphere,
    enumerate_ball,
    enumerate_sphere,
    growth_rate,
    sample_ball,
    sample_sphere,
    sample_spheres,
    transition_graph,
)
from .experiments import (
    EXPERIMENT_KINDS,
    DecayFit,
    ExperimentRow,
    UndefinedFitError,
    fit_decay,
    monotone_within_ci,
    rows_to_csv,
    rows_to_json,
    run_experiment,
    wilson_interval,
)

__version__ = "0.1.0"
