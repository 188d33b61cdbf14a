"""omvlab: online Boolean matrix-vector multiplication engines, the
reductions from vector products to dynamic problems, and instrumented
reference oracles that let each reduction's decode correctness and
operation counts be checked mechanically at desk scale."""

from .bitcore import (
    BoolMatrix,
    BoolVector,
    DimensionError,
    OmvInstance,
    lift_vectors,
    mat_vec,
    matrix_from_text,
    matrix_to_text,
    or_accumulate,
    symmetrize,
    vec_mat_vec,
    vector_from_text,
    vector_to_text,
)
from .engines import (
    EngineStats,
    OmvEngine,
    lookup_engine,
    majority_vote,
    naive_engine,
    parse_engine_spec,
    tiled_engine,
)
from .oumv import (
    Cnf2Formula,
    Cnf2QueryAdapter,
    EngineOuMvOracle,
    GraphQueryAdapter,
    MatrixOuMvOracle,
    OuMvOracle,
    WitnessSet,
    list_witnesses,
    omv_via_oumv,
    witness_budget,
)

__version__ = "0.1.0"
