"""Explicit matrix representations of the deformed angular-momentum algebra.

On the spin-j module (dimension 2j + 1, basis ordered by descending
weight m) the generators act as

    Iz |m> = m |m>,
    I+ |m> = sqrt([j+m+1][j-m]) |m+1>,      I- = (I+)^dagger,

with [x] the q-bracket of :mod:`qhydrogen.qnum`.  This normalisation
closes into

    [Iz, I+-] = +-I+-,        [I+, I-] = [2 Iz],

where [2 Iz] is the diagonal bracket of the doubled weight, entrywise
[2m].  (The shorthand "2[Iz]" seen for this relation coincides with
[2 Iz] only at q = 1; the ladder action above fixes the [2m] form, see
docs/derivations.md.)  Verification helpers check these relations and
the two quadratic invariants numerically, and the q = 1 tensor-product
recombination into the rotation/Runge-Lenz pattern.

Matrices are dense complex and marked read-only, so built values can be
shared freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .qnum import DeformationParameter, SpinLabel, qnumber

ComplexMatrix = NDArray[np.complex128]

__all__ = [
    "ComplexMatrix",
    "IrrepMatrices",
    "VerificationReport",
    "build_irrep",
    "casimir_identity_report",
    "casimir_standard",
    "casimir_symmetrized",
    "verify_commutators",
    "verify_so4_limit",
]


@dataclass(frozen=True, eq=False)
class IrrepMatrices:
    """Generator matrices on one spin-j module, basis ordered by descending m."""

    j: SpinLabel
    d: DeformationParameter
    iz: ComplexMatrix
    iplus: ComplexMatrix
    iminus: ComplexMatrix

    @property
    def dim(self) -> int:
        return self.j.twice_j + 1


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one operator-identity check.

    ``max_abs_deviation`` is the largest entry of the residual after
    dividing by max(1, largest magnitude on either side): identities
    between O(1) matrices are judged absolutely, while strongly
    deformed irreps (entries growing like e^(2sj)) are judged relative
    to their own scale.
    """

    relation_name: str
    max_abs_deviation: float
    tolerance: float
    passed: bool


def _max_abs(a: ComplexMatrix) -> float:
    return float(np.max(np.abs(a))) if a.size else 0.0


def _report(name: str, lhs: ComplexMatrix, rhs: ComplexMatrix, tol: float) -> VerificationReport:
    scale = max(1.0, _max_abs(lhs), _max_abs(rhs))
    deviation = _max_abs(lhs - rhs) / scale
    return VerificationReport(name, deviation, float(tol), deviation <= float(tol))


def _commutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    return a @ b - b @ a


def build_irrep(j: SpinLabel, d: DeformationParameter) -> IrrepMatrices:
    """Construct Iz, I+, I- on the spin-j module.

    The raising weight between |m> and |m+1> is sqrt([j+m+1][j-m]); the
    bracket arguments are assembled from twice-integers so they are
    exact, and the radicand is asserted non-negative (guaranteed for
    real q > 0) rather than clamped.
    """
    tj = j.twice_j
    dim = tj + 1
    iz = np.zeros((dim, dim), dtype=np.complex128)
    iplus = np.zeros((dim, dim), dtype=np.complex128)
    for k, tm in enumerate(j.twice_m_values()):
        iz[k, k] = tm / 2.0
        if k > 0:
            # Column k holds |m>, row k-1 holds |m+1>.
            raise_arg = (tj + tm) // 2 + 1  # j + m + 1
            lower_arg = (tj - tm) // 2  # j - m
            radicand = qnumber(raise_arg, d) * qnumber(lower_arg, d)
            assert radicand >= 0.0, (
                f"negative ladder radicand {radicand!r} at twice_j={tj}, twice_m={tm}"
            )
            iplus[k - 1, k] = math.sqrt(radicand)
    iminus = iplus.conj().T.copy()
    for a in (iz, iplus, iminus):
        a.setflags(write=False)
    return IrrepMatrices(j=j, d=d, iz=iz, iplus=iplus, iminus=iminus)


def verify_commutators(r: IrrepMatrices, tol: float) -> list[VerificationReport]:
    """Check the three defining relations on explicitly built matrices.

    Relations: [Iz, I+] = +I+, [Iz, I-] = -I-, and [I+, I-] = [2 Iz]
    with the right side the entrywise bracket of the doubled diagonal
    of Iz (the value [2m] at weight m).
    """
    doubled = np.diag(
        np.array([qnumber(tm, r.d) for tm in r.j.twice_m_values()], dtype=np.complex128)
    )
    return [
        _report("[Iz,I+] = +I+", _commutator(r.iz, r.iplus), r.iplus, tol),
        _report("[Iz,I-] = -I-", _commutator(r.iz, r.iminus), -r.iminus, tol),
        _report("[I+,I-] = [2Iz]", _commutator(r.iplus, r.iminus), doubled, tol),
    ]


def casimir_standard(r: IrrepMatrices) -> ComplexMatrix:
    """The invariant I- I+ + [Iz][Iz + 1], equal to [j][j+1] Id on the module.

    [Iz][Iz + 1] is the diagonal matrix with entries [m][m+1]; the
    telescoping identity [j+m+1][j-m] + [m][m+1] = [j][j+1] makes the
    sum a multiple of the identity (docs/derivations.md).
    """
    diag = np.array(
        [qnumber(tm / 2.0, r.d) * qnumber(tm / 2.0 + 1.0, r.d) for tm in r.j.twice_m_values()],
        dtype=np.complex128,
    )
    return r.iminus @ r.iplus + np.diag(diag)


def casimir_symmetrized(r: IrrepMatrices) -> ComplexMatrix:
    """The symmetrized quadratic (I+ I- + I- I+)/2 + Iz^2.

    Diagonal in the weight basis with entry

        [j][j+1] - [m]([m+1] + [m-1])/2 + m^2

    at weight m; this is the per-copy quantity whose doubled value on
    the constrained two-copy states feeds the energy denominator.
    """
    return (r.iplus @ r.iminus + r.iminus @ r.iplus) / 2.0 + r.iz @ r.iz


def casimir_identity_report(r: IrrepMatrices, tol: float) -> VerificationReport:
    """Report for casimir_standard(r) == [j][j+1] * Identity."""
    tj = r.j.twice_j
    eigenvalue = qnumber(tj / 2.0, r.d) * qnumber(tj / 2.0 + 1.0, r.d)
    expected = eigenvalue * np.eye(r.dim, dtype=np.complex128)
    return _report("I-I+ + [Iz][Iz+1] = [j][j+1] Id", casimir_standard(r), expected, tol)


def _cartesian(r: IrrepMatrices) -> tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix]:
    x = (r.iplus + r.iminus) / 2.0
    y = (r.iplus - r.iminus) / 2.0j
    return x, y, np.asarray(r.iz)


def verify_so4_limit(j1: SpinLabel, j2: SpinLabel, tol: float) -> list[VerificationReport]:
    """Check the undeformed two-copy recombination on the product module.

    At q = 1 (forced internally; the recombination is only claimed
    undeformed) the sums and differences

        L = I (x) 1 + 1 (x) J,        M~ = I (x) 1 - 1 (x) J

    of Cartesian components close into the rotation/rescaled-Runge-Lenz
    pattern: [La, Lb] = i e_abc Lc, [La, M~b] = i e_abc M~c and
    [M~a, M~b] = i e_abc Lc.  One report per cyclic pair per family,
    nine in total.
    """
    undeformed = DeformationParameter(1.0)
    r1 = build_irrep(j1, undeformed)
    r2 = build_irrep(j2, undeformed)
    eye1 = np.eye(r1.dim, dtype=np.complex128)
    eye2 = np.eye(r2.dim, dtype=np.complex128)
    first = _cartesian(r1)
    second = _cartesian(r2)
    ell = [np.kron(a, eye2) + np.kron(eye1, b) for a, b in zip(first, second)]
    mtilde = [np.kron(a, eye2) - np.kron(eye1, b) for a, b in zip(first, second)]

    axes = "xyz"
    cyclic = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    reports = []
    for a, b, c in cyclic:
        name = f"[L{axes[a]},L{axes[b]}] = i L{axes[c]}"
        reports.append(_report(name, _commutator(ell[a], ell[b]), 1j * ell[c], tol))
    for a, b, c in cyclic:
        name = f"[L{axes[a]},M{axes[b]}] = i M{axes[c]}"
        reports.append(_report(name, _commutator(ell[a], mtilde[b]), 1j * mtilde[c], tol))
    for a, b, c in cyclic:
        name = f"[M{axes[a]},M{axes[b]}] = i L{axes[c]}"
        reports.append(_report(name, _commutator(mtilde[a], mtilde[b]), 1j * ell[c], tol))
    return reports
