"""Dimension arithmetic for finite exact sequences.

An exact sequence of finite-dimensional vector spaces flanked by zeros has
vanishing alternating sum of dimensions.  A sequence here is a list whose
entries are non-negative integers or :data:`UNKNOWN`.

The relative Dolbeault cohomology of a pair ``(M, N)`` sits in the long
exact sequence

    ... -> H^{p,q}(M,N) -> H^{p,q}(M) -> H^{p,q}(N) -> H^{p,q+1}(M,N) -> ...

which for fixed ``p`` is finite (``0 <= q <= dim M``).  Outside the range
``p, q <= dim N`` the relative group equals ``H^{p,q}(M)``; inside, the
sequence pins the relative dimensions down only up to the ranks of the
restriction maps, which dimension data cannot supply.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .blowup import BlowUpSpec, blow_up, exceptional_divisor
from .diamond import ManifoldModel
from .errors import DimensionMismatchError, InconsistentDataError, PreconditionError

UNKNOWN = None


def _check_known(seq):
    for i, x in enumerate(seq):
        if x is not UNKNOWN and x < 0:
            raise PreconditionError(f"entry {i} is negative ({x})")


def _alternating(entries):
    return sum((-1) ** i * x for i, x in enumerate(entries))


def alternating_sum_check(seq) -> bool:
    """
    >>> alternating_sum_check([1, 2, 3, 2, 0])
    True
    >>> alternating_sum_check([1, 1, 1])
    False
    """
    if any(x is UNKNOWN for x in seq):
        raise PreconditionError("sequence contains an unknown entry")
    _check_known(seq)
    return _alternating(seq) == 0


def solve_unknown(seq) -> int:
    """The value of the single unknown that makes the alternating sum vanish.

    >>> solve_unknown([1, UNKNOWN, 3, 2, 0])
    2
    """
    _check_known(seq)
    holes = [i for i, x in enumerate(seq) if x is UNKNOWN]
    if len(holes) != 1:
        raise PreconditionError(f"expected exactly one unknown, found {len(holes)}")
    (i,) = holes
    rest = _alternating(0 if x is UNKNOWN else x for x in seq)
    value = -rest * (-1) ** i
    if value < 0:
        raise InconsistentDataError(
            f"unknown at position {i} would have to be {value} < 0"
        )
    return value


def fill(seq, value):
    return [value if x is UNKNOWN else x for x in seq]


def relative_dims_trivial_range(m: ManifoldModel, sub: ManifoldModel) -> dict:
    """``(p, q) -> dim H^{p,q}(M, N)`` where it is forced, else :data:`UNKNOWN`."""
    if sub.dim >= m.dim:
        raise DimensionMismatchError(
            f"submanifold dimension {sub.dim} must be below {m.dim}"
        )
    k = sub.dim
    return {
        (p, q): m.h(p, q) if (p > k or q > k) else UNKNOWN
        for p in range(m.dim + 1)
        for q in range(m.dim + 1)
    }


def relative_row(relative, total, sub, p: int, n: int) -> list:
    """Fixed-``p`` long exact sequence laid out as ``[R_0, M_0, N_0, R_1, ...]``."""
    row = []
    for q in range(n + 1):
        row += [relative.get((p, q), UNKNOWN), total(p, q), sub(p, q)]
    return row


@dataclass(frozen=True)
class SplicedRow:
    """The two long exact sequences for a fixed ``p``, sharing relative terms."""

    p: int
    relative: tuple
    lower: tuple
    upper: tuple
    solved_index: Optional[int]


def splice_blow_up_rows(spec: BlowUpSpec, result: Optional[ManifoldModel] = None):
    """Assemble the LES rows of ``(X, Z)`` and ``(Bl, E)`` with equal relative terms.

    Relative terms fixed by either trivial range are filled in (and must agree
    between the two pairs).  Of the remaining unknowns all but one are set to
    zero and the last is solved from the ``(X, Z)`` row, choosing a position
    whose sign admits a non-negative value.  Raises
    :class:`InconsistentDataError` when no non-negative completion exists.
    """
    x, z = spec.ambient, spec.center
    xt = result if result is not None else blow_up(spec)
    e = exceptional_divisor(spec)
    n = x.dim
    rel_xz = relative_dims_trivial_range(x, z)
    rel_te = relative_dims_trivial_range(xt, e)
    rows = []
    for p in range(n + 1):
        relative = {}
        for q in range(n + 1):
            a, b = rel_xz[p, q], rel_te[p, q]
            if a is not UNKNOWN and b is not UNKNOWN and a != b:
                raise InconsistentDataError(
                    f"relative dimension at ({p},{q}) forced to both {a} and {b}"
                )
            relative[p, q] = a if a is not UNKNOWN else b
        lower = relative_row(relative, x.h, z.h, p, n)
        upper = relative_row(relative, xt.h, e.h, p, n)
        holes = [q for q in range(n + 1) if relative[p, q] is UNKNOWN]
        solved = None
        if holes:
            known = _alternating(fill(lower, 0))
            # the unknown at q sits at position 3q, sign (-1)^q
            wanted = [q for q in holes if known == 0 or (-1) ** q * known < 0]
            if not wanted:
                raise InconsistentDataError(
                    f"row p={p}: no non-negative choice of relative dimensions"
                )
            solved = wanted[0]
            for q in holes:
                if q != solved:
                    relative[p, q] = 0
            lower = relative_row(relative, x.h, z.h, p, n)
            relative[p, solved] = solve_unknown(lower)
            lower = relative_row(relative, x.h, z.h, p, n)
            upper = relative_row(relative, xt.h, e.h, p, n)
        rows.append(
            SplicedRow(
                p=p,
                relative=tuple(relative[p, q] for q in range(n + 1)),
                lower=tuple(lower),
                upper=tuple(upper),
                solved_index=solved,
            )
        )
    return rows


def cokernel_windows(spec: BlowUpSpec, result: Optional[ManifoldModel] = None):
    """Short exact sequences ``0 -> Z -> E -> Q -> 0`` and ``0 -> X -> Bl -> Q -> 0``.

    Pullback along the blow-up is injective on Dolbeault cohomology, and the
    two cokernels ``Q`` agree; ``Q`` is solved from the first sequence and
    substituted into the second.  Yields ``((p, q), q_dim, lower, upper)``.
    """
    x, z = spec.ambient, spec.center
    xt = result if result is not None else blow_up(spec)
    e = exceptional_divisor(spec)
    out = []
    for p in range(x.dim + 1):
        for q in range(x.dim + 1):
            lower = [0, z.h(p, q), e.h(p, q), UNKNOWN, 0]
            cok = solve_unknown(lower)
            upper = [0, x.h(p, q), xt.h(p, q), cok, 0]
            out.append(((p, q), cok, fill(lower, cok), upper))
    return out
