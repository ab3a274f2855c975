from .exclusion import (
    BosonicPartition,
    HeightSeries,
    PartitionMethod,
    SpectralFunction,
    bosonic_partition,
    bosonic_partition_dual_product,
    excitations_to_levels,
    excitations_to_occupations,
    exclusion_configurations,
    exclusion_partition,
    grand_partition_exclusion,
    height_generating_function,
    levels_to_excitations,
    levels_to_occupations,
    q_binomial,
    q_factorial,
)
from .secular import (
    SecularMatrix,
    duality_holds,
    fraction_free_det,
    secular_det_direct,
    secular_det_recursive,
    secular_det_tilde,
    secular_family,
    secular_methods,
)
