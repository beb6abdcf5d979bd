"""Semisimple abelian group algebras, their primitive idempotents and the
classification of minimal codes up to group-automorphism equivalence."""

from .errors import (
    AlgebraMismatch,
    BadDivisor,
    CharDividesOrder,
    DegreeMismatch,
    DimensionTooLarge,
    DomainError,
    FieldMismatch,
    GroupMismatch,
    GroupTooLarge,
    HIsWholeGroup,
    HypothesisFails,
    NoRootsOfUnity,
    NoUniqueSubgroup,
    NonPrimeP,
    NotASubgroup,
    NotCocyclic,
    NotCoprime,
    NotIdempotent,
    ReducibleModulus,
)
from .finite_field import (
    FieldCtx,
    FieldScalar,
    divisor_count,
    element_of_order,
    euler_phi,
    field_make,
    mul_order,
    splitting_field,
)
from .abelian_group import (
    AbelianGroup,
    Automorphism,
    Character,
    GroupElement,
    Subgroup,
    abelian_groups_of_order,
    all_subgroups,
    annihilator,
    aut_generators,
    automorphisms,
    brute_force_automorphisms,
    characters,
    cocyclic_subgroups,
    cyclic_subgroups,
    group_make,
    power_automorphisms,
    quotient_type,
    sharp,
    subgroup_orbits,
    subgroup_product,
    sylow_decompose,
)
from .group_algebra import (
    AlgebraElement,
    GroupAlgebra,
    PrimitiveIdempotent,
    apply_automorphism,
    cocyclic_idempotent,
    cocyclic_idempotent_family,
    generator_sum,
    get_algebra,
    hat,
    idempotent_group,
    phi_subgroup,
    primitive_idempotents,
)
from .codes import (
    ClassificationReport,
    MinimalCode,
    WeightDistribution,
    classify,
    equivalent,
    homocyclic_factorization,
    min_weight,
    min_weight_or_bound,
    minimal_code,
    tau_sweep,
    verify_tables,
    weight_distribution,
)

__all__ = [name for name in dir() if not name.startswith("_")]
