"""Arithmetical invariants of zero-sum monoids over f.g. abelian groups."""

from .cache import cache_dir, cached_enumerate_atoms, load_atoms, store_atoms
from .errors import (
    ArithInvError,
    IncompatibleElementsError,
    IncompatibleFactorizationsError,
    InvalidAtomError,
    InvalidInstanceError,
    InvalidSpecError,
    InvalidTargetError,
    InvariantViolationError,
    NonDivisorError,
    NotEnumerableError,
    NotZeroSumError,
    ParseError,
    SizeLimitError,
    UnsupportedGroupError,
)
from .factorize import (
    AtomEnumeration,
    FactorizationSet,
    atoms_dividing,
    catenary,
    davenport,
    distance,
    enumerate_atoms,
    factorization_count,
    factorizations,
    is_atom,
    length_set,
    min_max_lengths,
    minimal_relations,
    seed_engine_atoms,
)
from .group import (
    INFINITE,
    GroupElement,
    GroupSpec,
    format_group_spec,
    parse_element,
    parse_group_spec,
    render_element,
)
from .invariants import (
    ScanBound,
    ScanReport,
    ca_scan,
    daleth_star,
    davenport_star,
    delta_of,
    delta_scan,
    elasticity,
    elasticity_of,
    elasticity_scan,
    find_elasticity_witness,
    r_scan,
    rho_group,
    split_weighted_sum,
    zero_sum_sequences,
)
from .sequence import (
    Alphabet,
    Sequence,
    block_alphabet,
    krull_alphabet,
    parse_sequence,
)
from .tame import ta_scan, tame, tame_local_scan
from .verify import SUITE_VERSION, Check, run_suite, suite_description, suite_names
from .witnesses import (
    Witness,
    WitnessReport,
    catenary_two_witness,
    integer_catenary_witnesses,
    plus_minus_alphabet,
    plus_minus_factorizations,
    rank3_tame_two_witness,
    reflection_tame_witness,
    tame_two_case_witness,
    two_group_tame_family,
    two_primes_witness,
    verify_tame_unique_route,
    verify_witness,
)

__version__ = "0.1.0"
