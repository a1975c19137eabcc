"""Hodge diamonds, Betti vectors and manifold models.

Everything here is an immutable value.  Indices outside the valid range read
as zero, so formulas that shift a diamond never need bounds checks.

A :class:`HodgeDiamond` of complex dimension ``n`` stores the square matrix
``h[p][q]`` with ``0 <= p, q <= n``; ``h[p][q]`` is the dimension of the
``(p, q)`` Dolbeault cohomology.  :class:`BettiVector` stores ``b[0..2n]``.

    >>> curve = HodgeDiamond.from_matrix([[1, 2], [2, 1]])
    >>> curve[1, 0], curve[5, 5]
    (2, 0)
    >>> euler_p(curve)
    (-1, 1)
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatchError, ValidationError

FLAG_NAMES = ("kaehler", "fujiki", "ddbar", "e1_degenerate")


def _as_int(value, what):
    if isinstance(value, bool):
        raise ValidationError(f"{what} must be an integer, got {value!r}")
    try:
        return operator.index(value)
    except TypeError:
        raise ValidationError(f"{what} must be an integer, got {value!r}") from None


@dataclass(frozen=True)
class HodgeDiamond:
    n: int
    h: tuple

    def __post_init__(self):
        n = _as_int(self.n, "dimension")
        if n < 0:
            raise ValidationError(f"dimension must be non-negative, got {n}")
        rows = tuple(tuple(_as_int(x, "Hodge number") for x in row) for row in self.h)
        if len(rows) != n + 1 or any(len(row) != n + 1 for row in rows):
            raise ValidationError(
                f"Hodge matrix of a {n}-dimensional manifold must be {n + 1}x{n + 1}"
            )
        for p, row in enumerate(rows):
            for q, x in enumerate(row):
                if x < 0:
                    raise ValidationError(f"negative Hodge number h^{{{p},{q}}} = {x}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "h", rows)

    @classmethod
    def from_matrix(cls, rows) -> "HodgeDiamond":
        """Build from a square row-major matrix ``rows[p][q]``."""
        if hasattr(rows, "tolist"):
            rows = rows.tolist()
        rows = [list(r) for r in rows]
        if not rows:
            raise ValidationError("empty Hodge matrix")
        return cls(len(rows) - 1, rows)

    @classmethod
    def zero(cls, n: int) -> "HodgeDiamond":
        return cls(n, [[0] * (n + 1) for _ in range(n + 1)])

    def __getitem__(self, index) -> int:
        p, q = index
        if 0 <= p <= self.n and 0 <= q <= self.n:
            return self.h[p][q]
        return 0

    def to_lists(self) -> list:
        return [list(row) for row in self.h]

    def total(self) -> int:
        return sum(map(sum, self.h))

    def degree_sums(self) -> tuple:
        """``sum_{p+q=k} h[p][q]`` for ``k = 0..2n``."""
        n = self.n
        return tuple(
            sum(self[p, k - p] for p in range(max(0, k - n), min(k, n) + 1))
            for k in range(2 * n + 1)
        )

    def __str__(self):
        from .render import render_diamond

        return "\n".join(render_diamond(self))


@dataclass(frozen=True)
class BettiVector:
    n: int
    b: tuple

    def __post_init__(self):
        n = _as_int(self.n, "dimension")
        values = tuple(_as_int(x, "Betti number") for x in self.b)
        if len(values) != 2 * n + 1:
            raise ValidationError(
                f"Betti vector of a {n}-dimensional manifold needs {2 * n + 1} entries,"
                f" got {len(values)}"
            )
        for k, x in enumerate(values):
            if x < 0:
                raise ValidationError(f"negative Betti number b_{k} = {x}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "b", values)

    @classmethod
    def from_list(cls, values) -> "BettiVector":
        values = list(values)
        if len(values) % 2 != 1:
            raise ValidationError(f"Betti vector must have odd length, got {len(values)}")
        return cls((len(values) - 1) // 2, values)

    def __getitem__(self, k: int) -> int:
        if 0 <= k <= 2 * self.n:
            return self.b[k]
        return 0

    def __iter__(self):
        return iter(self.b)

    def __len__(self):
        return len(self.b)


@dataclass(frozen=True)
class Flags:
    """Tri-state structural flags; ``None`` means unknown."""

    kaehler: Optional[bool] = None
    fujiki: Optional[bool] = None
    ddbar: Optional[bool] = None
    e1_degenerate: Optional[bool] = None

    @classmethod
    def all_true(cls) -> "Flags":
        return cls(True, True, True, True)

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in FLAG_NAMES}

    def known(self) -> dict:
        return {k: v for k, v in self.as_dict().items() if v is not None}


@dataclass(frozen=True)
class DefectVector:
    """``d[k] = sum_{p+q=k} h[p][q] - b[k]``.  Signed so invalid data stays visible."""

    n: int
    d: tuple

    def __getitem__(self, k: int) -> int:
        if 0 <= k <= 2 * self.n:
            return self.d[k]
        return 0

    def __iter__(self):
        return iter(self.d)

    def __len__(self):
        return len(self.d)

    def is_zero(self) -> bool:
        return not any(self.d)

    def first_nonzero(self) -> Optional[int]:
        return next((k for k, x in enumerate(self.d) if x), None)


@dataclass(frozen=True)
class ManifoldModel:
    """A compact complex manifold known only through its numerical invariants.

    Constructing the dataclass directly checks shapes only.  Use
    :func:`make_model` (or :func:`validate_model`) for the full invariant
    check and flag inference.
    """

    name: str
    dim: int
    diamond: HodgeDiamond
    betti: Optional[BettiVector] = None
    flags: Flags = field(default_factory=Flags)
    connected: bool = True
    betti_derived: bool = False
    notes: tuple = field(default=(), compare=False)
    source: str = field(default="", compare=False)

    def __post_init__(self):
        if self.diamond.n != self.dim:
            raise ValidationError(
                f"{self.name}: diamond has dimension {self.diamond.n}, model says {self.dim}"
            )
        if self.betti is not None and self.betti.n != self.dim:
            raise ValidationError(
                f"{self.name}: Betti vector has dimension {self.betti.n}, model says {self.dim}"
            )

    def h(self, p: int, q: int) -> int:
        return self.diamond[p, q]

    def b(self, k: int) -> int:
        if self.betti is None:
            from .errors import BettiRequiredError

            raise BettiRequiredError(self.name)
        return self.betti[k]


# -- bigraded arithmetic ---------------------------------------------------


def shift(d: HodgeDiamond, i: int, target_dim: int) -> HodgeDiamond:
    """Place ``d`` at offset ``(i, i)`` inside a diamond of dimension ``target_dim``."""
    if i < 0:
        raise ValueError("shift must be non-negative")
    if target_dim < d.n + i:
        raise DimensionMismatchError(
            f"cannot shift a {d.n}-dimensional diamond by {i} into dimension {target_dim}"
        )
    return HodgeDiamond(
        target_dim,
        [[d[p - i, q - i] for q in range(target_dim + 1)] for p in range(target_dim + 1)],
    )


def direct_sum(a: HodgeDiamond, b: HodgeDiamond) -> HodgeDiamond:
    if a.n != b.n:
        raise DimensionMismatchError(f"dimension mismatch: {a.n} vs {b.n}")
    return HodgeDiamond(a.n, [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a.h, b.h)])


def serre_symmetric(d: HodgeDiamond) -> bool:
    n = d.n
    return all(d[p, q] == d[n - p, n - q] for p in range(n + 1) for q in range(n + 1))


def hodge_symmetric(d: HodgeDiamond) -> bool:
    return first_hodge_asymmetry(d) is None


def first_hodge_asymmetry(d: HodgeDiamond):
    for p in range(d.n + 1):
        for q in range(p):
            if d[p, q] != d[q, p]:
                return p, q
    return None


def euler_p(d: HodgeDiamond) -> tuple:
    """``chi_p = sum_q (-1)^q h[p][q]`` for ``p = 0..n``."""
    return tuple(sum((-1) ** q * x for q, x in enumerate(row)) for row in d.h)


def topological_euler(b: BettiVector) -> int:
    return sum((-1) ** k * x for k, x in enumerate(b.b))


def anti_diagonal_sums(d: HodgeDiamond) -> dict:
    """Map ``k -> sum_{p-q=k} h[p][q]`` for ``k = -n..n`` (HKR dimensions)."""
    n = d.n
    return {
        k: sum(d[p, p - k] for p in range(n + 1))
        for k in range(-n, n + 1)
    }


def defect_vector(d: HodgeDiamond, b: BettiVector) -> DefectVector:
    if d.n != b.n:
        raise DimensionMismatchError(f"dimension mismatch: {d.n} vs {b.n}")
    return DefectVector(d.n, tuple(s - x for s, x in zip(d.degree_sums(), b.b)))


def derived_betti(d: HodgeDiamond) -> BettiVector:
    """Betti numbers forced by E1-degeneration."""
    return BettiVector(d.n, d.degree_sums())


def betti_sum(a: BettiVector, b: BettiVector) -> BettiVector:
    if a.n != b.n:
        raise DimensionMismatchError(f"dimension mismatch: {a.n} vs {b.n}")
    return BettiVector(a.n, [x + y for x, y in zip(a.b, b.b)])


# -- tri-state logic -------------------------------------------------------


def and3(*values):
    """Kleene conjunction: False dominates, then unknown."""
    if any(v is False for v in values):
        return False
    if any(v is None for v in values):
        return None
    return True


# -- validation and flag inference -----------------------------------------

# (premise flag, conclusion flag): premise=True forces conclusion=True, and
# conclusion=False forces premise=False.
_IMPLICATIONS = (
    ("kaehler", "fujiki"),
    ("fujiki", "ddbar"),
    ("ddbar", "e1_degenerate"),
)


def effective_betti(m: ManifoldModel) -> Optional[BettiVector]:
    if m.betti is not None:
        return m.betti
    if m.flags.e1_degenerate:
        return derived_betti(m.diamond)
    return None


def _basic_violations(m: ManifoldModel, betti: Optional[BettiVector]) -> list:
    out = []
    h00 = m.diamond[0, 0]
    if m.connected and h00 != 1:
        out.append(f"connected model must have h^{{0,0}} = 1, got {h00}")
    elif not m.connected and h00 < 1:
        out.append(f"h^{{0,0}} counts components and must be >= 1, got {h00}")
    if betti is None:
        return out
    if betti[0] != h00:
        out.append(f"b_0 = {betti[0]} must equal h^{{0,0}} = {h00}")
    sums = m.diamond.degree_sums()
    for k in range(2 * m.dim + 1):
        if betti[k] > sums[k]:
            out.append(
                f"Frölicher inequality violated at k={k}: b_{k} = {betti[k]} > {sums[k]}"
            )
    for k in range(m.dim):
        if betti[k] != betti[2 * m.dim - k]:
            out.append(
                f"Poincaré symmetry violated at k={k}: b_{k} = {betti[k]}"
                f" != b_{2 * m.dim - k} = {betti[2 * m.dim - k]}"
            )
    return out


def _infer(m: ManifoldModel):
    """Close the flags under the implication chain and the numerical evidence.

    Returns ``(flags, conflicts)``.  Only unknown flags are ever filled in;
    a forced value clashing with a known one is reported as a conflict.
    """
    values = m.flags.as_dict()
    reasons = {k: f"{k}={'true' if v else 'false'} (given)" for k, v in values.items() if v is not None}
    conflicts = []

    def force(name, value, reason):
        current = values[name]
        if current is None:
            values[name] = value
            reasons[name] = reason
            return True
        if current != value:
            msg = f"{reason} contradicts {reasons[name]}"
            if "Hodge symmetry" in reason or "Hodge symmetry" in reasons[name]:
                msg = "Hodge-symmetry contradiction: " + msg
            elif "defect" in reason or "defect" in reasons[name]:
                msg = "E1-degeneracy contradiction: " + msg
            else:
                msg = "flag contradiction: " + msg
            if msg not in conflicts:
                conflicts.append(msg)
        return False

    asym = first_hodge_asymmetry(m.diamond)
    if asym is not None:
        p, q = asym
        force(
            "ddbar",
            False,
            f"Hodge symmetry fails (h^{{{p},{q}}} = {m.diamond[p, q]}"
            f" != h^{{{q},{p}}} = {m.diamond[q, p]})",
        )
    if m.betti is not None:
        defect = defect_vector(m.diamond, m.betti)
        k = defect.first_nonzero()
        if k is None:
            force("e1_degenerate", True, "Frölicher defect is zero")
        else:
            force("e1_degenerate", False, f"Frölicher defect is nonzero at k={k}")

    # stop at the first conflict: later ones are echoes of it
    changed = not conflicts
    while changed:
        changed = False
        for a, b in _IMPLICATIONS:
            if values[a] is True and not conflicts:
                changed |= force(b, True, f"{b}=true (implied by {a}=true)")
            if values[b] is False and not conflicts:
                changed |= force(a, False, f"{a}=false (implied by {b}=false)")
    return Flags(**values), conflicts


def model_violations(m: ManifoldModel) -> list:
    """Every invariant the model breaks, as human-readable strings."""
    flags, conflicts = _infer(m)
    betti = m.betti
    if betti is None and flags.e1_degenerate:
        betti = derived_betti(m.diamond)
    return _basic_violations(m, betti) + conflicts


def validate_model(m: ManifoldModel) -> ManifoldModel:
    """Check every invariant and return the model with inferred flags.

    Raises :class:`ValidationError` listing all violations at once.
    """
    flags, conflicts = _infer(m)
    betti, derived = m.betti, m.betti_derived
    if betti is None and flags.e1_degenerate:
        betti, derived = derived_betti(m.diamond), True
    violations = _basic_violations(m, betti) + conflicts
    if violations:
        raise ValidationError(f"{m.name}: " + "; ".join(violations), violations)
    return replace(m, flags=flags, betti=betti, betti_derived=derived)


def make_model(
    name: str,
    hodge,
    betti: Optional[Sequence[int]] = None,
    flags: Optional[dict] = None,
    connected: bool = True,
    notes: Iterable[str] = (),
    source: str = "",
) -> ManifoldModel:
    """Validated constructor from plain Python data.

    >>> m = make_model("P1", [[1, 0], [0, 1]], flags={"kaehler": True})
    >>> m.betti.b, m.betti_derived
    ((1, 0, 1), True)
    """
    diamond = hodge if isinstance(hodge, HodgeDiamond) else HodgeDiamond.from_matrix(hodge)
    if betti is not None and not isinstance(betti, BettiVector):
        betti = BettiVector.from_list(betti)
    if isinstance(flags, Flags):
        fl = flags
    else:
        flags = dict(flags or {})
        unknown = set(flags) - set(FLAG_NAMES)
        if unknown:
            raise ValidationError(f"{name}: unknown flags {sorted(unknown)}")
        fl = Flags(**flags)
    model = ManifoldModel(
        name=name,
        dim=diamond.n,
        diamond=diamond,
        betti=betti,
        flags=fl,
        connected=connected,
        notes=tuple(notes),
        source=source,
    )
    return validate_model(model)


def disjoint_union(models: Sequence[ManifoldModel], name: Optional[str] = None) -> ManifoldModel:
    """Disjoint union of equidimensional models (e.g. a disconnected center)."""
    models = list(models)
    if not models:
        raise ValueError("need at least one component")
    dims = {m.dim for m in models}
    if len(dims) != 1:
        raise DimensionMismatchError(f"components have different dimensions {sorted(dims)}")
    if len(models) == 1 and name is None:
        return models[0]
    diamond = models[0].diamond
    for m in models[1:]:
        diamond = direct_sum(diamond, m.diamond)
    bettis = [effective_betti(m) for m in models]
    betti = None
    if all(b is not None for b in bettis):
        betti = bettis[0]
        for b in bettis[1:]:
            betti = betti_sum(betti, b)
    flags = Flags(**{k: and3(*(getattr(m.flags, k) for m in models)) for k in FLAG_NAMES})
    union = ManifoldModel(
        name=name or " + ".join(m.name for m in models),
        dim=models[0].dim,
        diamond=diamond,
        betti=betti,
        flags=flags,
        connected=len(models) == 1 and models[0].connected,
    )
    return validate_model(union)
