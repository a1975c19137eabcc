"""Blow-ups along smooth centers, at the level of Hodge and Betti numbers.

For the blow-up of an ``n``-fold ``X`` along a center ``Z`` of codimension
``r >= 2``::

    h^{p,q}(Bl) = h^{p,q}(X) + sum_{i=1}^{r-1} h^{p-i,q-i}(Z)
    b_k(Bl)     = b_k(X)     + sum_{l=1}^{r-1} b_{k-2l}(Z)

and the exceptional divisor is the projectivised normal bundle, a
``P^{r-1}``-bundle over ``Z``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence, Union

from .diamond import (
    BettiVector,
    Flags,
    HodgeDiamond,
    ManifoldModel,
    and3,
    anti_diagonal_sums,
    disjoint_union,
    effective_betti,
    validate_model,
)
from .errors import (
    CodimensionError,
    ContractError,
    DimensionMismatchError,
    PreconditionError,
    ValidationError,
)


@dataclass(frozen=True)
class BlowUpSpec:
    """An ambient manifold together with a center to blow up.

    ``center`` may be a sequence of equidimensional components; they are
    blown up component by component, which at this level means summing
    their contributions.  ``propagate_kaehler`` controls whether a Kähler
    ambient marks the blow-up Kähler.
    """

    ambient: ManifoldModel
    center: Union[ManifoldModel, Sequence[ManifoldModel]]
    propagate_kaehler: bool = True

    def __post_init__(self):
        center = self.center
        if not isinstance(center, ManifoldModel):
            center = disjoint_union(list(center))
        x = validate_model(self.ambient)
        z = validate_model(center)
        r = x.dim - z.dim
        if r == 1:
            raise CodimensionError(
                "codimension must be >= 2: blowing up a divisor changes nothing"
                f" ({z.name} has codimension 1 in {x.name})"
            )
        if r < 2:
            raise CodimensionError(
                f"codimension must be >= 2, got {r} ({z.name} in {x.name})"
            )
        # a submanifold of a Kähler (resp. Fujiki) manifold is Kähler (resp. Fujiki)
        forced = {k: True for k in ("kaehler", "fujiki") if getattr(x.flags, k)}
        for k in forced:
            if getattr(z.flags, k) is False:
                raise ValidationError(
                    f"{z.name}: {k}=false cannot be a submanifold of {x.name} ({k}=true)"
                )
        if forced:
            z = validate_model(replace(z, flags=replace(z.flags, **forced)))
        object.__setattr__(self, "ambient", x)
        object.__setattr__(self, "center", z)

    @property
    def codim(self) -> int:
        return self.ambient.dim - self.center.dim


def _base_diamond(base) -> HodgeDiamond:
    return base.diamond if isinstance(base, ManifoldModel) else base


def projective_bundle(base, rank: int) -> HodgeDiamond:
    """Hodge diamond of the projectivisation of a rank-``rank`` bundle.

    >>> from hodgeblow.catalog import point
    >>> projective_bundle(point(), 3).h
    ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    """
    if rank < 1:
        raise PreconditionError(f"rank must be >= 1, got {rank}")
    d = _base_diamond(base)
    m = d.n + rank - 1
    return HodgeDiamond(
        m,
        [
            [sum(d[p - i, q - i] for i in range(rank)) for q in range(m + 1)]
            for p in range(m + 1)
        ],
    )


def projective_bundle_betti(b: BettiVector, rank: int) -> BettiVector:
    if rank < 1:
        raise PreconditionError(f"rank must be >= 1, got {rank}")
    m = b.n + rank - 1
    return BettiVector(m, [sum(b[k - 2 * i] for i in range(rank)) for k in range(2 * m + 1)])


def exceptional_divisor(spec: BlowUpSpec) -> ManifoldModel:
    z, r = spec.center, spec.codim
    bz = effective_betti(z)
    e = ManifoldModel(
        name=f"E({spec.ambient.name}; {z.name})",
        dim=spec.ambient.dim - 1,
        diamond=projective_bundle(z, r),
        betti=None if bz is None else projective_bundle_betti(bz, r),
        flags=z.flags,
        connected=z.connected,
        notes=(f"P^{r - 1}-bundle over {z.name}",),
    )
    return validate_model(e)


def blow_up_diamond(x: HodgeDiamond, z: HodgeDiamond, r: int) -> HodgeDiamond:
    if x.n - z.n != r:
        raise DimensionMismatchError(
            f"codimension {r} does not match dimensions {x.n} and {z.n}"
        )
    if r < 2:
        raise CodimensionError(f"codimension must be >= 2, got {r}")
    n = x.n
    return HodgeDiamond(
        n,
        [
            [x[p, q] + sum(z[p - i, q - i] for i in range(1, r)) for q in range(n + 1)]
            for p in range(n + 1)
        ],
    )


def de_rham_blow_up(bx: BettiVector, bz: BettiVector, r: int) -> BettiVector:
    """Betti numbers of the blow-up.

    >>> de_rham_blow_up(BettiVector(3, (1, 0, 1, 0, 1, 0, 1)), BettiVector(0, (1,)), 3).b
    (1, 0, 2, 0, 2, 0, 1)
    """
    if r < 2:
        raise CodimensionError(f"codimension must be >= 2, got {r}")
    if bx.n - bz.n != r:
        raise DimensionMismatchError(
            f"codimension {r} does not match dimensions {bx.n} and {bz.n}"
        )
    n = bx.n
    return BettiVector(
        n, [bx[k] + sum(bz[k - 2 * l] for l in range(1, r)) for k in range(2 * n + 1)]
    )


def blow_up(spec: BlowUpSpec) -> ManifoldModel:
    x, z, r = spec.ambient, spec.center, spec.codim
    bx, bz = effective_betti(x), effective_betti(z)
    betti = de_rham_blow_up(bx, bz, r) if bx is not None and bz is not None else None
    flags = Flags(
        kaehler=True if (spec.propagate_kaehler and x.flags.kaehler) else None,
        fujiki=x.flags.fujiki,
        ddbar=and3(x.flags.ddbar, z.flags.ddbar),
        e1_degenerate=and3(x.flags.e1_degenerate, z.flags.e1_degenerate),
    )
    result = ManifoldModel(
        name=f"Bl({x.name}; {z.name})",
        dim=x.dim,
        diamond=blow_up_diamond(x.diamond, z.diamond, r),
        betti=betti,
        flags=flags,
        connected=x.connected,
        notes=(
            f"assumes {z.name} embeds in {x.name} as a closed submanifold of codimension {r}",
        ),
    )
    try:
        return validate_model(result)
    except ValidationError as exc:
        raise ContractError(f"blow-up output failed validation: {exc}") from exc


def hochschild_blow_up(spec: BlowUpSpec):
    """Both sides of ``HH_k(Bl) = HH_k(X) + (r-1) HH_k(Z)`` on ``k = -n..n``."""
    x, z, r = spec.ambient, spec.center, spec.codim
    left = anti_diagonal_sums(blow_up(spec).diamond)
    hx, hz = anti_diagonal_sums(x.diamond), anti_diagonal_sums(z.diamond)
    right = {k: hx[k] + (r - 1) * hz.get(k, 0) for k in range(-x.dim, x.dim + 1)}
    return left, right


def point_blow_up(x: ManifoldModel) -> ManifoldModel:
    from .catalog import point

    if x.dim < 2:
        raise PreconditionError(f"blowing up a point needs dimension >= 2, got {x.dim}")
    return blow_up(BlowUpSpec(x, point()))
