"""Frölicher defects and E1-degeneration.

The Frölicher spectral sequence of a compact complex manifold degenerates at
``E1`` exactly when ``b_k = sum_{p+q=k} h^{p,q}`` for every ``k``; the
difference is always non-negative and is what :func:`frolicher_defect`
returns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .blowup import BlowUpSpec, blow_up
from .diamond import DefectVector, ManifoldModel, defect_vector, effective_betti, hodge_symmetric
from .errors import BettiRequiredError, DimensionMismatchError


@dataclass(frozen=True)
class DegeneracyReport:
    name: str
    defect: DefectVector
    degenerate: bool
    first_failing_k: Optional[int]


def frolicher_defect(m: ManifoldModel) -> DefectVector:
    betti = effective_betti(m)
    if betti is None:
        raise BettiRequiredError(m.name)
    return defect_vector(m.diamond, betti)


def degenerates_at_E1(m: ManifoldModel) -> DegeneracyReport:
    d = frolicher_defect(m)
    k = next((k for k, x in enumerate(d) if x > 0), None)
    # negative entries only occur on validation-bypassed models
    degenerate = d.is_zero()
    if not degenerate and k is None:
        k = d.first_nonzero()
    return DegeneracyReport(m.name, d, degenerate, k)


def check_defect_identity(spec: BlowUpSpec, result: ManifoldModel) -> bool:
    """Whether ``d(Bl)[k] = d(X)[k] + sum_{l=1}^{r-1} d(Z)[k-2l]`` for all ``k``."""
    x, z, r = spec.ambient, spec.center, spec.codim
    if result.dim != x.dim:
        raise DimensionMismatchError(
            f"result has dimension {result.dim}, ambient has {x.dim}"
        )
    dt, dx, dz = frolicher_defect(result), frolicher_defect(x), frolicher_defect(z)
    return all(
        dt[k] == dx[k] + sum(dz[k - 2 * l] for l in range(1, r))
        for k in range(2 * x.dim + 1)
    )


def propagate_degeneracy(spec: BlowUpSpec):
    """E1 verdicts ``(blow-up, ambient, center)``; the first is the AND of the others."""
    result = blow_up(spec)
    return (
        degenerates_at_E1(result).degenerate,
        degenerates_at_E1(spec.ambient).degenerate,
        degenerates_at_E1(spec.center).degenerate,
    )


def ddbar_necessary(m: ManifoldModel) -> bool:
    """Necessary conditions for the ddbar-lemma: E1-degeneration and Hodge symmetry.

    A ``True`` answer does not certify the ddbar-lemma.  Hodge asymmetry is
    decided without Betti data; otherwise Betti data is required.
    """
    if not hodge_symmetric(m.diamond):
        return False
    return degenerates_at_E1(m).degenerate
