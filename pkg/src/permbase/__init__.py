"""permbase: witnesses that at most five conjugates of a solvable
permutation subgroup of S_n or A_n (n >= 5) intersect trivially, together
with an independent brute-force oracle that re-verifies every claim."""

from .cosets import (
    ALTERNATING,
    SYMMETRIC,
    Coset,
    CosetSpace,
    CosetTuple,
    act,
    canonical_rep,
    same_orbit,
    tuple_stabilizer_is_trivial,
)
from .groups import (
    BlockSystem,
    PermGroup,
    StabilizerChain,
    intersect,
    intersect_conjugates,
)
from .oracle import (
    Caps,
    RegResult,
    VerificationReport,
    min_base_search,
    reg_count,
    reg_count_exact,
    verify_certificate,
)
from .perms import (
    Permutation,
    compose,
    conjugate,
    cycle_structure,
    parity,
    parse_cycles,
    perm_from_cycles,
    transposition,
)
from .witness import (
    WitnessCertificate,
    alternating_adjust,
    intransitive_witness,
    pad_base_to_regulars,
    primitive_witness,
    semiregular_witness,
    solve,
    transitive_witness,
)
from . import corpus, errors

__all__ = [
    "ALTERNATING",
    "SYMMETRIC",
    "BlockSystem",
    "Caps",
    "Coset",
    "CosetSpace",
    "CosetTuple",
    "PermGroup",
    "Permutation",
    "RegResult",
    "StabilizerChain",
    "VerificationReport",
    "WitnessCertificate",
    "act",
    "alternating_adjust",
    "canonical_rep",
    "compose",
    "conjugate",
    "corpus",
    "cycle_structure",
    "errors",
    "intersect",
    "intersect_conjugates",
    "intransitive_witness",
    "min_base_search",
    "pad_base_to_regulars",
    "parity",
    "parse_cycles",
    "perm_from_cycles",
    "primitive_witness",
    "reg_count",
    "reg_count_exact",
    "same_orbit",
    "semiregular_witness",
    "solve",
    "transitive_witness",
    "transposition",
    "tuple_stabilizer_is_trivial",
    "verify_certificate",
]
