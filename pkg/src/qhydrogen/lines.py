"""Transition energies between bound levels and deformation scans.

Levels compute energies; lines are their observable differences.  No
selection rules are applied anywhere here: the deformed theory comes
with no transition operator, so every level pair is emitted and callers
filter.  Wavenumbers use the configured Rydberg constant in 1/cm and
wavelengths the identity wavelength_nm * wavenumber_per_cm = 1e7.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .qnum import DeformationParameter, QNumberOverflowError, SpinLabel
from .spectrum import NonPositiveDenominatorError, UnitsConfig, energy, energy_undeformed

LevelKey = tuple[SpinLabel, int]

# |ln q| beyond which e^s itself leaves double precision.
_MAX_ABS_S = 709.0

__all__ = [
    "DegenerateTransitionError",
    "LevelKey",
    "ScanRow",
    "TransitionLine",
    "series_table",
    "splitting_scan",
    "transition",
]


class DegenerateTransitionError(ValueError):
    """Both endpoints have exactly equal energy; there is no line."""

    def __init__(self, first: LevelKey, second: LevelKey) -> None:
        self.first = first
        self.second = second
        super().__init__(
            f"levels (twice_j={first[0].twice_j}, twice_abs_m={first[1]}) and "
            f"(twice_j={second[0].twice_j}, twice_abs_m={second[1]}) are degenerate"
        )


@dataclass(frozen=True)
class TransitionLine:
    """One spectral line between two (j, |m|) levels.

    ``delta_energy`` is in the output unit of the UnitsConfig used to
    build the line; ``wavenumber_per_cm`` and ``wavelength_nm`` are
    always present and satisfy wavelength * wavenumber = 1e7.
    """

    upper: LevelKey
    lower: LevelKey
    delta_energy: float
    wavenumber_per_cm: float
    wavelength_nm: float


@dataclass(frozen=True)
class ScanRow:
    """One (s, |m|) point of a splitting scan, energies in Rydberg.

    ``flag`` is empty for a clean evaluation; otherwise it names the
    failure ("overflow" or "nonpositive_denominator") and the float
    fields are None, so long scans survive unphysical points.
    """

    s: float
    q: float | None
    twice_j: int
    twice_abs_m: int
    energy_ry: float | None
    deviation_ry: float | None
    flag: str


def transition(
    upper: LevelKey,
    lower: LevelKey,
    d: DeformationParameter,
    units: UnitsConfig | None = None,
) -> TransitionLine:
    """Line between two levels, ordered internally by energy.

    The arguments need not be ordered; the returned ``upper`` is the
    endpoint with the higher energy.  Raises
    :class:`DegenerateTransitionError` when the two energies are
    exactly equal.
    """
    units = units or UnitsConfig()
    e_first = energy(upper[0], upper[1], d)
    e_second = energy(lower[0], lower[1], d)
    if e_first == e_second:
        raise DegenerateTransitionError(upper, lower)
    if e_first < e_second:
        upper, lower = lower, upper
        e_first, e_second = e_second, e_first
    delta_ry = e_first - e_second
    wavenumber = delta_ry * units.rydberg_per_cm
    return TransitionLine(
        upper=upper,
        lower=lower,
        delta_energy=units.convert(delta_ry),
        wavenumber_per_cm=wavenumber,
        wavelength_nm=1e7 / wavenumber,
    )


def series_table(
    lower_j: SpinLabel,
    lower_twice_abs_m: int,
    j_max: SpinLabel,
    d: DeformationParameter,
    units: UnitsConfig | None = None,
) -> list[TransitionLine]:
    """All lines from levels above the given lower level down to it.

    Candidate upper levels are every deformed (j, |m|) with j <= j_max
    and energy strictly above the lower level.  Exactly coincident
    candidates (the m-split sublevels merge at q = 1) produce a single
    line, keeping the smallest (j, |m|) as the label.  Sorted by
    ascending transition energy; empty if nothing lies above.
    """
    if j_max < lower_j:
        raise ValueError(
            f"j_max (twice_j={j_max.twice_j}) must be >= lower level spin "
            f"(twice_j={lower_j.twice_j})"
        )
    units = units or UnitsConfig()
    e_lower = energy(lower_j, lower_twice_abs_m, d)
    uppers: list[tuple[float, LevelKey]] = []
    seen: set[float] = set()
    for tj in range(j_max.twice_j + 1):
        j = SpinLabel(tj)
        for tam in range(tj % 2, tj + 1, 2):
            e = energy(j, tam, d)
            if e > e_lower and e not in seen:
                seen.add(e)
                uppers.append((e, (j, tam)))
    uppers.sort(key=lambda item: item[0])
    return [transition(key, (lower_j, lower_twice_abs_m), d, units) for _, key in uppers]


def splitting_scan(j: SpinLabel, s_values: list[float]) -> list[ScanRow]:
    """Deviation of each (j, |m|) energy from -1/(2j+1)^2 versus s = ln q.

    One row per s value (in input order) per |m| (ascending).  Rows are
    in Rydberg throughout, matching the scan CSV schema.  Evaluation
    failures flag the row instead of aborting the scan.
    """
    e_flat = energy_undeformed(j)
    rows: list[ScanRow] = []
    for s in s_values:
        s = float(s)
        if not math.isfinite(s):
            raise ValueError(f"s values must be finite, got {s!r}")
        d = None
        if abs(s) <= _MAX_ABS_S:
            d = DeformationParameter.from_s(s)
        for tam in range(j.twice_j % 2, j.twice_j + 1, 2):
            if d is None:
                rows.append(ScanRow(s, None, j.twice_j, tam, None, None, "overflow"))
                continue
            try:
                e = energy(j, tam, d)
            except QNumberOverflowError:
                rows.append(ScanRow(s, d.q, j.twice_j, tam, None, None, "overflow"))
            except NonPositiveDenominatorError:
                rows.append(
                    ScanRow(s, d.q, j.twice_j, tam, None, None, "nonpositive_denominator")
                )
            else:
                rows.append(ScanRow(s, d.q, j.twice_j, tam, e, e - e_flat, ""))
    return rows
