"""Point-like self-adjoint extensions of the 1D free Schrodinger operator.

Junction matrices, their scattering matrices, the mass-jump correspondence,
the finite-width flux regularization and the spin-current classification.
"""
from .core import (
    SP2,
    BoundaryData,
    InvalidParameter,
    JunctionMatrix,
    NotSymplectic,
    PointlikeError,
    apply_junction,
    compose,
    current,
    validate_symplectic,
)
from .extensions import (
    Chart,
    DeltaOne,
    DeltaPotential,
    DeltaPrime,
    ExtensionClass,
    MagneticFlux,
    Raw,
    flux_of_x3,
    generator,
    generator_gram,
    junction_of,
)
from .massjump import InvalidMu, b_of_mu, massjump_junction, rescale_junction, x2_of_mu
from .regularization import (
    ResolutionError,
    StripProblem,
    convergence_study,
    regularized_junction,
    strip_transfer,
)
from .scattering import (
    ChannelProbabilities,
    ScatteringMatrix,
    SingularMatching,
    closed_form_smatrix,
    reflection_transmission,
    smatrix,
    time_reversal_check,
)
from .spincurrent import (
    ClassificationReport,
    SpinorBoundaryData,
    UnclassifiedMatrix,
    classify,
    preserves_pairing,
    spin_term_jumps,
)

__version__ = "0.1.0"
