"""Hydrogen bound-state spectrum under a real deformation of its symmetry algebra.

The package evaluates q-brackets [x] = sinh(s x)/sinh(s), builds the
deformed angular-momentum matrices they weight, and derives the bound
energies E/Ry = -2/D with D = 8[j][j+1] - 4[m]([m+1]+[m-1]) + 8m^2 + 2,
including the partial degeneracy breaking (one sublevel per |m|, with
multiplicity 4 or 1) and the resulting line splittings.
"""

from .qnum import (
    DeformationParameter,
    QNumberOverflowError,
    SpinLabel,
    qnumber,
    qnumber_series_coeffs,
)
from .irreps import (
    IrrepMatrices,
    VerificationReport,
    build_irrep,
    casimir_identity_report,
    casimir_standard,
    casimir_symmetrized,
    verify_commutators,
    verify_so4_limit,
)
from .spectrum import (
    EnergyLevel,
    NonPositiveDenominatorError,
    QuantumState,
    UnitsConfig,
    degeneracy_summary,
    denominator,
    energy,
    energy_undeformed,
    enumerate_states,
    level_table,
)
from .lines import (
    DegenerateTransitionError,
    ScanRow,
    TransitionLine,
    series_table,
    splitting_scan,
    transition,
)

__version__ = "0.1.0"

__all__ = [
    "DeformationParameter",
    "DegenerateTransitionError",
    "EnergyLevel",
    "IrrepMatrices",
    "NonPositiveDenominatorError",
    "QNumberOverflowError",
    "QuantumState",
    "ScanRow",
    "SpinLabel",
    "TransitionLine",
    "UnitsConfig",
    "VerificationReport",
    "build_irrep",
    "casimir_identity_report",
    "casimir_standard",
    "casimir_symmetrized",
    "degeneracy_summary",
    "denominator",
    "energy",
    "energy_undeformed",
    "enumerate_states",
    "level_table",
    "qnumber",
    "qnumber_series_coeffs",
    "series_table",
    "splitting_scan",
    "transition",
    "verify_commutators",
    "verify_so4_limit",
]
