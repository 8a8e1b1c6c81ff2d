"""Exact computation with finite group actions.

Orbits, stabilizers, and fixed-point counts; the space of invariant
functions with its indicator basis and exact Hermitian inner product;
orbit-average Fourier projection and Bessel's inequality; restriction and
induction across invariant subsets with Frobenius reciprocity; and the
converse construction realizing any partition as the orbits of a
permutation group. All arithmetic is over the Gaussian rationals, so every
identity is checked exactly.
"""

from .actions import (
    GroupAction,
    Partition,
    are_equivalent,
    conjugation_action,
    coset_action,
    translation_action,
    trivial_action,
    validate_action,
)
from .corpus import (
    CorpusEntry,
    NON_FREE_FAMILIES,
    build,
    corpus_names,
    default_entries,
    group_by_name,
    small_group_catalog,
)
from .errors import OrbitspaceError
from .groups import (
    DEFAULT_CLOSURE_CAP,
    FiniteGroup,
    Subgroup,
    automorphism_group,
    cyclic_group,
    direct_product,
    from_generators,
    group_from_table,
    whole_group,
)
from .partitions import (
    cell_transpositions,
    count_cell_preserving,
    group_from_partition,
    preserves_cells,
    realized_order,
)
from .resind import (
    InvariantSubset,
    SubsetFunction,
    extend_by_zero,
    induce,
    invariant_subset,
    reciprocity_check,
    restrict,
    subset_inner_product,
)
from .scalars import GaussianRational, Rational, parse_rational
from .spaces import (
    Decomposition,
    FourierCoefficient,
    InvariantCertificate,
    PointFunction,
    act_on_function,
    bessel_check,
    decompose,
    fourier_coefficients,
    fourier_projection,
    indicator_basis,
    inner_product,
    is_invariant,
    norm_squared,
    perp_zero_sum_check,
    strict_bessel_witness,
    unitarity_check,
    value_sum,
)

__all__ = [
    "CorpusEntry",
    "DEFAULT_CLOSURE_CAP",
    "Decomposition",
    "FiniteGroup",
    "FourierCoefficient",
    "GaussianRational",
    "GroupAction",
    "InvariantCertificate",
    "InvariantSubset",
    "NON_FREE_FAMILIES",
    "OrbitspaceError",
    "Partition",
    "PointFunction",
    "Rational",
    "Subgroup",
    "SubsetFunction",
    "act_on_function",
    "are_equivalent",
    "automorphism_group",
    "bessel_check",
    "build",
    "cell_transpositions",
    "conjugation_action",
    "corpus_names",
    "coset_action",
    "count_cell_preserving",
    "cyclic_group",
    "decompose",
    "default_entries",
    "direct_product",
    "extend_by_zero",
    "fourier_coefficients",
    "fourier_projection",
    "from_generators",
    "group_by_name",
    "group_from_partition",
    "group_from_table",
    "indicator_basis",
    "induce",
    "inner_product",
    "invariant_subset",
    "is_invariant",
    "norm_squared",
    "parse_rational",
    "perp_zero_sum_check",
    "preserves_cells",
    "realized_order",
    "reciprocity_check",
    "restrict",
    "small_group_catalog",
    "strict_bessel_witness",
    "subset_inner_product",
    "translation_action",
    "trivial_action",
    "unitarity_check",
    "validate_action",
    "value_sum",
    "whole_group",
]
