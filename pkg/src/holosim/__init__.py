"""holosim: exact decision procedures for holomorphic similarity of matrix families.

The package decides local holomorphic similarity of polynomial matrix
families through two constructive criteria (a locally constant intertwiner
dimension, and a kernel-extension test from the local Smith form), builds
the rigid two-parameter counterexample family with its curve-germ jet
obstructions, verifies finite-covering cocycle data and assembles global
similarities from local ones, and certifies the winding-number obstruction
of the two-chart sphere example.  All algebra is exact over the Gaussian
rationals; floats appear only in sampled-loop winding numbers.
"""

from .algebra import (
    GaussianRational,
    MatrixFamily,
    MultiPoly,
    PointedRational,
    TruncatedSeries,
    VariableContext,
    certify_nonvanishing_on_segment,
    context,
    evaluate,
    exact_kernel,
    generic_rank,
    parse_scalar,
    vanishing_order,
)
from .cocycle import (
    Covering,
    GlobalSimilarity,
    MatrixCocycle,
    Splitting,
    assemble_global_similarity,
    verify_cocycle,
    verify_commutant_valued,
    verify_equivalence,
)
from .curves import (
    CurveSpec,
    FullGerm,
    JetSystem,
    LineUnion,
    LocalPair,
    MonomialCusp,
    ObstructionReport,
    curve_similarity_obstruction,
    local_pair,
    obstruction_kernel,
    restrict_to_curve,
)
from .smith import (
    LocalMatrix,
    LocalSmithForm,
    determinantal_orders,
    kernel_extension_through,
    local_smith_form,
    smith_similarity,
    wasow_similarity,
)
from .sylvester import (
    IntertwinerMatrix,
    JumpLocus,
    build_intertwiner,
    intertwiner_dimension_at,
    jump_locus,
    wasow_criterion,
)
from .topology import (
    CutoffFunction,
    PiecewisePath,
    SampledLoop,
    SphereExample,
    gcom_path,
    multiplicative_cutoff,
    sphere_example,
    splitting_obstruction,
    winding_number,
)

__version__ = "0.1.0"
