"""Blow-up / blow-down scripts and bimeromorphic invariant audits.

A bimeromorphic map between compact complex manifolds factors into blow-ups
and blow-downs along smooth centers.  A :class:`FactorizationScript` is such a
chain written down explicitly; running it tracks the invariants of every
intermediate manifold.

Blow-down feasibility is purely arithmetic: the center's shifted
contributions must subtract without leaving a negative entry.  Whether the
center is geometrically contractible is not decidable from this data.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .blowup import BlowUpSpec, blow_up, blow_up_diamond
from .diamond import (
    BettiVector,
    Flags,
    HodgeDiamond,
    ManifoldModel,
    effective_betti,
    validate_model,
)
from .errors import (
    CodimensionError,
    DimensionMismatchError,
    InapplicableStepError,
    PreconditionError,
    ValidationError,
)


class Direction(enum.Enum):
    BLOW_UP = "blowup"
    BLOW_DOWN = "blowdown"


@dataclass(frozen=True)
class FactorizationStep:
    direction: Direction
    center: ManifoldModel

    @classmethod
    def up(cls, center):
        return cls(Direction.BLOW_UP, center)

    @classmethod
    def down(cls, center):
        return cls(Direction.BLOW_DOWN, center)


@dataclass(frozen=True)
class FactorizationScript:
    start: ManifoldModel
    steps: tuple = ()
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))


@dataclass(frozen=True)
class AuditEntry:
    invariant: str
    left: Optional[int]
    right: Optional[int]

    @property
    def equal(self) -> Optional[bool]:
        if self.left is None or self.right is None:
            return None
        return self.left == self.right


@dataclass(frozen=True)
class InvariantAuditReport:
    left_name: str
    right_name: str
    entries: tuple = field(default=())

    @property
    def all_equal(self) -> bool:
        """No entry differs.  Entries with unknown values do not count against it."""
        return all(e.equal is not False for e in self.entries)

    @property
    def complete(self) -> bool:
        return all(e.equal is not None for e in self.entries)

    def failures(self) -> list:
        return [e for e in self.entries if e.equal is False]


def _blow_down(current: ManifoldModel, z: ManifoldModel) -> ManifoldModel:
    r = current.dim - z.dim
    if r < 2:
        raise CodimensionError(f"codimension must be >= 2, got {r}")
    z = validate_model(z)
    n = current.dim
    zero_x = HodgeDiamond.zero(n)
    contribution = blow_up_diamond(zero_x, z.diamond, r)
    h = [
        [current.diamond[p, q] - contribution[p, q] for q in range(n + 1)]
        for p in range(n + 1)
    ]
    for p in range(n + 1):
        for q in range(n + 1):
            if h[p][q] < 0:
                raise InapplicableStepError(
                    f"blowing down {z.name} leaves h^{{{p},{q}}} = {h[p][q]} < 0"
                )
    bt, bz = effective_betti(current), effective_betti(z)
    betti = None
    if bt is not None and bz is not None:
        b = [bt[k] - sum(bz[k - 2 * l] for l in range(1, r)) for k in range(2 * n + 1)]
        if min(b) < 0:
            k = min(range(len(b)), key=lambda i: (b[i] >= 0, i))
            raise InapplicableStepError(
                f"blowing down {z.name} leaves b_{k} = {b[k]} < 0"
            )
        betti = BettiVector(n, b)

    # Bl(X) has a property iff both X and Z have it (E1, ddbar); Fujiki is bimeromorphic
    def down(value, center_value):
        if value is True:
            return True
        if value is False and center_value is True:
            return False
        return None

    f = current.flags
    flags = Flags(
        kaehler=None,
        fujiki=f.fujiki,
        ddbar=down(f.ddbar, z.flags.ddbar),
        e1_degenerate=down(f.e1_degenerate, z.flags.e1_degenerate),
    )
    result = ManifoldModel(
        name=f"Bd({current.name}; {z.name})",
        dim=n,
        diamond=HodgeDiamond(n, h),
        betti=betti,
        flags=flags,
        connected=current.connected,
        notes=(f"assumes {current.name} is a blow-up along a copy of {z.name}",),
    )
    try:
        return validate_model(result)
    except ValidationError as exc:
        raise InapplicableStepError(f"blowing down {z.name}: {exc}") from exc


def apply_step(current: ManifoldModel, step: FactorizationStep) -> ManifoldModel:
    if step.center.dim > current.dim - 2:
        raise InapplicableStepError(
            f"center {step.center.name} of dimension {step.center.dim} has codimension"
            f" {current.dim - step.center.dim} < 2 in {current.name}"
        )
    if step.direction is Direction.BLOW_UP:
        return blow_up(BlowUpSpec(current, step.center))
    return _blow_down(current, step.center)


def run_script(script: FactorizationScript):
    """Apply every step; returns ``(final, trace)`` with ``trace[0]`` the start."""
    current = validate_model(script.start)
    trace = [current]
    for index, step in enumerate(script.steps):
        try:
            current = apply_step(current, step)
        except InapplicableStepError as exc:
            raise InapplicableStepError(str(exc), index) from exc
        except (PreconditionError, ValidationError) as exc:
            raise InapplicableStepError(str(exc), index) from exc
        trace.append(current)
    return current, trace


def count_delta(script: FactorizationScript) -> int:
    """Number of blow-ups minus number of blow-downs in a valid script.

    With connected centers this is the change in ``h^{1,1}`` (and in ``b_2``).
    """
    for index, step in enumerate(script.steps):
        if not step.center.connected or step.center.diamond[0, 0] != 1:
            raise PreconditionError(f"step {index}: center {step.center.name} is not connected")
    run_script(script)
    ups = sum(step.direction is Direction.BLOW_UP for step in script.steps)
    return ups - (len(script.steps) - ups)


def invariant_audit(a: ManifoldModel, b: ManifoldModel) -> InvariantAuditReport:
    """Compare the bimeromorphic invariants ``h^{p,0}``, ``h^{0,q}``, ``b_1``, ``b_2 - h^{1,1}``."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"dimension mismatch: {a.dim} vs {b.dim}")
    n = a.dim
    entries = [AuditEntry(f"h^{{{p},0}}", a.h(p, 0), b.h(p, 0)) for p in range(n + 1)]
    entries += [AuditEntry(f"h^{{0,{q}}}", a.h(0, q), b.h(0, q)) for q in range(1, n + 1)]
    ba, bb = effective_betti(a), effective_betti(b)

    def b1(betti):
        return None if betti is None else betti[1]

    def b2_minus_h11(betti, m):
        return None if betti is None else betti[2] - m.h(1, 1)

    entries.append(AuditEntry("b_1", b1(ba), b1(bb)))
    entries.append(AuditEntry("b_2 - h^{1,1}", b2_minus_h11(ba, a), b2_minus_h11(bb, b)))
    return InvariantAuditReport(a.name, b.name, tuple(entries))


def script_contract(script: FactorizationScript):
    """Run a script and check every identity its endpoints must satisfy.

    Returns ``(final, trace, delta, audit_report, problems)`` where
    ``problems`` lists the failed checks (empty for a consistent engine).
    """
    final, trace = run_script(script)
    delta = count_delta(script)
    start = trace[0]
    problems = []
    if final.h(1, 1) - start.h(1, 1) != delta:
        problems.append(
            f"h^{{1,1}} delta {final.h(1, 1) - start.h(1, 1)} != count delta {delta}"
        )
    bs, bf = effective_betti(start), effective_betti(final)
    if bs is not None and bf is not None and bf[2] - bs[2] != delta:
        problems.append(f"b_2 delta {bf[2] - bs[2]} != count delta {delta}")
    report = invariant_audit(start, final)
    problems += [f"{e.invariant}: {e.left} != {e.right}" for e in report.failures()]
    return final, trace, delta, report, problems

