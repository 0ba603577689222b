"""lseries_lab: exact Dirichlet characters, real-axis L-series evaluation,
and formal bilinear-geometry audits of truncated series identities.

The package is pure standard-library Python.  Modules:

* :mod:`~lseries_lab.characters` -- exact character tables, the Kronecker
  symbol, conductors, deterministic enumerations.
* :mod:`~lseries_lab.lseries`    -- partial sums, Euler-Maclaurin Hurwitz
  zeta continuation, L-evaluation with error estimates, zero scanning.
* :mod:`~lseries_lab.resolution` -- amplitude/phase factor vectors of a
  truncation, formal norms/cosines, phase-sum divergence witnesses.
* :mod:`~lseries_lab.cgeom`      -- unconjugated bilinear geometry in C^n
  and the frozen golden worked examples.
* :mod:`~lseries_lab.rotation`   -- step profiles, barycenters, and the
  Pappus V = 2 pi eta S identity at finite truncation.
* :mod:`~lseries_lab.audit`      -- the eight-claim truncation audit and the
  real-character non-vanishing survey.
* :mod:`~lseries_lab.cli`        -- the ``lseries-lab`` data-export CLI.
"""

from .audit import CLAIM_IDS, ClaimResult, SurveyRow, nonvanishing_survey, run_audit
from .cgeom import (
    CVector,
    TriangleReport,
    bilinear_dot,
    cosine_theorem_check,
    formal_norm_sq,
    principal_sqrt,
    triangle_area,
    triangle_report,
    verify_appendix,
)
from .characters import (
    DirichletCharacter,
    char_value,
    conductor,
    enumerate_characters,
    enumerate_real_characters,
    kronecker_symbol,
    principal_character,
    unit_group_structure,
)
from .lseries import (
    LEvaluation,
    LPoint,
    ScanResult,
    evaluate,
    hurwitz_zeta,
    partial_sum,
    scan_zeros,
)
from .resolution import (
    AMPLITUDE_CHI,
    PHASE_CHI,
    ResolutionVectors,
    build_vectors,
    formal_cosine,
    formal_norm,
    phase_series_sums,
    reconstruct_identity,
)
from .rotation import (
    PappusReport,
    StepProfile,
    barycenter,
    cylinder_volume,
    pappus_check,
    rect_area,
    step_profile,
    transformed_equation_residual,
)

__version__ = "0.1.0"
