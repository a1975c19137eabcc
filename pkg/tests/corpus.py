"""Seeded random models and specs for property and acceptance tests."""

import random

from hodgeblow import BlowUpSpec, make_model


def degree_sums(h):
    n = len(h) - 1
    return [sum(h[p][k - p] for p in range(max(0, k - n), min(k, n) + 1)) for k in range(2 * n + 1)]


def random_matrix(rng, n, hi=9):
    """Entries in [0, hi], h00 = 1, h_nn >= 1."""
    h = [[rng.randint(0, hi) for _ in range(n + 1)] for _ in range(n + 1)]
    h[0][0] = 1
    h[n][n] = rng.randint(1, hi) if n else 1
    return h


def symmetric_matrix(rng, n, hi=9, hodge=True, serre=True):
    h = [[None] * (n + 1) for _ in range(n + 1)]
    for p in range(n + 1):
        for q in range(n + 1):
            if h[p][q] is not None:
                continue
            orbit = {(p, q)}
            if hodge:
                orbit |= {(q, p) for p, q in list(orbit)}
            if serre:
                orbit |= {(n - p, n - q) for p, q in list(orbit)}
            if hodge:
                orbit |= {(q, p) for p, q in list(orbit)}
            value = rng.randint(0, hi)
            for a, b in orbit:
                h[a][b] = value
    h[0][0] = 1
    if serre:
        h[n][n] = 1
    elif n:
        h[n][n] = max(h[n][n], 1)
    return h


def random_betti(rng, h, zero_defect=False):
    """Poincaré-symmetric Betti numbers obeying the Frölicher inequality."""
    n = len(h) - 1
    s = degree_sums(h)
    b = [0] * (2 * n + 1)
    for k in range(n + 1):
        cap = min(s[k], s[2 * n - k])
        b[k] = b[2 * n - k] = cap if zero_defect else rng.randint(0, cap)
    b[0] = b[2 * n] = h[0][0]
    return b


def random_model(rng, n, name="M", hi=9, betti=True):
    h = random_matrix(rng, n, hi)
    return make_model(name, h, betti=random_betti(rng, h) if betti else None)


def planted_model(rng, n, name, degenerate):
    """Serre-symmetric diamond with a chosen (zero or non-zero) defect vector.

    A point cannot carry a defect, so ``degenerate`` is ignored for ``n == 0``.
    """
    degenerate = degenerate or n == 0
    while True:
        h = symmetric_matrix(rng, n, hodge=rng.random() < 0.5)
        s = degree_sums(h)
        d = [0] * (2 * n + 1)
        if not degenerate:
            for k in range(1, n + 1):
                cap = min(s[k], s[2 * n - k])
                d[k] = d[2 * n - k] = rng.randint(0, min(cap, 3))
        if degenerate or any(d):
            break
    b = [x - y for x, y in zip(s, d)]
    return make_model(name, h, betti=b), d


def random_spec(rng, max_dim=6, codims=(2, 4), betti=True, sym=None):
    n = rng.randint(codims[0], max_dim)
    r = rng.randint(codims[0], min(codims[1], n))
    if sym is None:
        x = random_model(rng, n, "X", betti=betti)
        z = random_model(rng, n - r, "Z", betti=betti)
    else:
        hodge, serre = sym
        hx = symmetric_matrix(rng, n, hodge=hodge, serre=serre)
        hz = symmetric_matrix(rng, n - r, hodge=hodge, serre=serre)
        x = make_model("X", hx, betti=random_betti(rng, hx) if betti and serre else None)
        z = make_model("Z", hz, betti=random_betti(rng, hz) if betti and serre else None)
    return BlowUpSpec(x, z)


def corpus(seed, size, **kw):
    rng = random.Random(seed)
    return [random_spec(rng, **kw) for _ in range(size)]


def random_script(rng, catalog, max_len=6):
    """A valid script over catalog models: blow-downs only undo earlier blow-ups."""
    from hodgeblow import FactorizationScript, FactorizationStep

    starts = [m for m in catalog.values() if m.dim >= 2]
    start = rng.choice(starts)
    centers = [m for m in catalog.values() if m.dim <= start.dim - 2]
    steps, pending = [], []
    for _ in range(rng.randint(0, max_len)):
        if pending and rng.random() < 0.4:
            z = pending.pop(rng.randrange(len(pending)))
            steps.append(FactorizationStep.down(z))
        else:
            z = rng.choice(centers)
            pending.append(z)
            steps.append(FactorizationStep.up(z))
    return FactorizationScript(start, tuple(steps), name="random")
