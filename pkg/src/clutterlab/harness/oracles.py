"""Brute-force references, deliberately naive.

Nothing here shares code paths with the production searches beyond the
``Clutter``/``SetSystem`` containers.
"""
from __future__ import annotations

from itertools import product

import numpy as np

from ..clutter_core import INF, Clutter
from ..structure import SetSystem


def covers_by_enumeration(c: Clutter) -> list[int]:
    return [b for b in range(1 << c.ground_size) if all(m & b for m in c.members)]


def blocker_by_enumeration(c: Clutter) -> Clutter:
    covers = covers_by_enumeration(c)
    cover_set = set(covers)
    minimal = []
    for b in covers:
        # minimal iff dropping any single element breaks coverage
        if all((b & ~(1 << i)) not in cover_set for i in range(c.ground_size) if b >> i & 1):
            minimal.append(b)
    return Clutter._from_masks(c.ground_size, minimal)


def covering_number_by_enumeration(c: Clutter):
    covers = covers_by_enumeration(c)
    return min((bin(b).count("1") for b in covers), default=INF)


def minimum_covers_by_enumeration(c: Clutter) -> list[int]:
    covers = covers_by_enumeration(c)
    tau = min(bin(b).count("1") for b in covers)
    return sorted(b for b in covers if bin(b).count("1") == tau)


def connectivity_by_enumeration(s: SetSystem):
    """Minimum |I| + |J| over all 3^d assignments, no pruning, via numpy."""
    d = s.dimension
    pts = np.array(s.masks(), dtype=np.int64)
    best = INF
    if len(pts) == 0:
        return 0
    assignments = np.array(list(product((0, 1, 2), repeat=d)), dtype=np.int64).reshape(3 ** d, d)
    weights = 1 << np.arange(d, dtype=np.int64)
    imask = ((assignments == 1) * weights).sum(axis=1)
    jmask = ((assignments == 2) * weights).sum(axis=1)
    sizes = (assignments != 0).sum(axis=1)
    # violated[a, p]: point p sits in the forbidden subcube of assignment a
    violated = ((pts[None, :] & imask[:, None]) == 0) & ((pts[None, :] & jmask[:, None]) == jmask[:, None])
    valid = ~violated.any(axis=1)
    if valid.any():
        best = int(sizes[valid].min())
    return best
