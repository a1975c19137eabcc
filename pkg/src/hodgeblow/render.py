"""Text rendering of Hodge diamonds.

Row ``k`` (top row ``k = 0``) lists ``h[p][q]`` with ``p + q = k``, ``p``
decreasing left to right, each row centred on the widest one.
"""

from __future__ import annotations

from .diamond import HodgeDiamond
from .errors import ValidationError


def diamond_rows(d: HodgeDiamond) -> list:
    n = d.n
    return [
        [d[p, k - p] for p in range(min(k, n), max(0, k - n) - 1, -1)]
        for k in range(2 * n + 1)
    ]


def render_diamond(d: HodgeDiamond) -> list:
    texts = [" ".join(str(x) for x in row) for row in diamond_rows(d)]
    width = max(len(t) for t in texts)
    return [t.center(width).rstrip() for t in texts]


def parse_rendered(lines) -> HodgeDiamond:
    """Inverse of :func:`render_diamond`."""
    rows = [[int(tok) for tok in line.split()] for line in lines if line.strip()]
    if len(rows) % 2 != 1:
        raise ValidationError(f"a rendered diamond has an odd number of rows, got {len(rows)}")
    n = (len(rows) - 1) // 2
    h = [[0] * (n + 1) for _ in range(n + 1)]
    for k, row in enumerate(rows):
        ps = list(range(min(k, n), max(0, k - n) - 1, -1))
        if len(row) != len(ps):
            raise ValidationError(f"row {k} should have {len(ps)} entries, got {len(row)}")
        for p, x in zip(ps, row):
            h[p][k - p] = x
    return HodgeDiamond(n, h)
