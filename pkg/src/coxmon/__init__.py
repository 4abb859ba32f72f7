"""Coxeter graphs, their groups with exact arithmetic, positive braid
monoids, and admissible partitions with the morphisms they induce."""

from .graphs import (
    INFINITY,
    CoxeterGraph,
    automorphisms,
    bipartite_classes,
    classify_spherical,
    coxeter_number,
    graph_from_json,
    is_infinite,
    is_isomorphic,
    is_spherical,
    isomorphisms,
    named_graph,
    parse_graph,
    positive_root_count,
)
from .exact import ExactScalar, field_for_modulus
from .elements import (
    canonical_word,
    descents,
    element_from_word,
    generator,
    identity_element,
    is_compatible,
    length,
    longest_element,
    order_of,
    support,
    tits_oracle,
    word_reduce,
)
from .monoid import (
    FractionPair,
    PosBraid,
    StepBudgetExceeded,
    braid_from_json,
    braid_from_word,
    braid_identity,
    braid_reverse,
    braid_to_json,
    cancel,
    default_step_bound,
    divides,
    gcd,
    irreducible_fraction,
    lcm,
    lcm_atoms,
    lift,
    multiply,
)
from .partitions import (
    AdmissibilityVerdict,
    BlockPartition,
    ClassificationReport,
    ExhaustiveFiniteCertificate,
    IncompatibleWord,
    LiftCertificate,
    OrbitCertificate,
    PartitionType,
    bipartite_partition,
    block_partition,
    certify_by_lift,
    check_admissible,
    check_pair,
    classify_2partitions,
    lift_partition,
    orbit_partition,
    pair_order,
    parse_partition,
    partition_from_json,
    partition_type,
    product_split_check,
    replay_witness,
)
from .morphisms import (
    AdmissibleMorphism,
    BurstResult,
    FoldingReport,
    apply_morphism,
    build_morphism,
    burst,
    burst_base_multiplicity,
    check_folding,
    compose,
    fixed_submonoid_check,
    is_lcm_partition,
    verify_burst,
    verify_respects_lcm,
    verify_respects_normal_forms,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
