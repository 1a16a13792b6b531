"""Sidon sets of order h, generalized Sidon sets B_{h,k}, and the matroid of
B_h subsets inside a B_{2h-1,h-1} set."""

from .combinat import (
    DEFAULT_CAP,
    GroundSet,
    HMultiset,
    enumerate_h_multisets,
    h_fold_sumset,
    multiset_intersection_size,
    representation_function,
    sum_buckets,
)
from .errors import (
    ArithmeticOverflow,
    IntegrityError,
    NotGeneralizedSidonError,
    ResourceLimitError,
    SidonError,
    UsageError,
)
from .group import INTEGERS, AmbientGroup, CyclicMod, Integers
from .matroid import (
    MuCovering,
    PartitionMu,
    RankProfile,
    SidonMatroid,
    disjointify,
    matroid_partition,
    new_matroid,
)
from .sidon import (
    DoubleRepresentation,
    bh_witness,
    bhk_witness,
    classify_max_k,
    extend_bhk,
    find_proper_double_representations,
    is_bh,
    is_bhk,
    reduce_to_proper,
    subtraction_algorithm,
)

__version__ = "0.1.0"
