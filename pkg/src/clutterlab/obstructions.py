"""Deltas, blockers of extended odd holes, and cleanness by minor enumeration."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .clutter_core import (
    Clutter,
    MinorSpec,
    blocker,
    full_mask,
    minor,
    popcount,
    to_elements,
)

DEFAULT_MAX_N = 12


class BudgetExceeded(ValueError):
    pass


class ObstructionKind(str, enum.Enum):
    DELTA = "DELTA"
    BLOCKER_OF_EXTENDED_ODD_HOLE = "BLOCKER_OF_EXTENDED_ODD_HOLE"


@dataclass(frozen=True)
class ObstructionWitness:
    kind: ObstructionKind
    minor_spec: MinorSpec
    dimension: int

    def line(self) -> str:
        """``kind dim I J`` with comma-separated element lists, ``-`` when empty."""
        def fmt(mask):
            return ",".join(map(str, to_elements(mask))) or "-"

        return f"{self.kind.value} {self.dimension} {fmt(self.minor_spec.delete)} {fmt(self.minor_spec.contract)}"

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "dimension": self.dimension,
            "delete": list(to_elements(self.minor_spec.delete)),
            "contract": list(to_elements(self.minor_spec.contract)),
        }


def recognize_delta(c: Clutter) -> Optional[int]:
    n = c.ground_size
    if n < 3 or len(c.members) != n:
        return None
    members = set(c.members)
    everything = full_mask(n)
    for hub in range(n):
        h = 1 << hub
        if everything & ~h not in members:
            continue
        if all(h | (1 << v) in members for v in range(n) if v != hub):
            return n
    return None


def is_extended_odd_hole(h: Clutter) -> Optional[int]:
    """Dimension n if the minimum members of ``h`` are the edges of one odd
    cycle through all n >= 5 elements, else None."""
    n = h.ground_size
    if n < 5 or n % 2 == 0 or not h.members:
        return None
    smallest = min(popcount(m) for m in h.members)
    if smallest != 2:
        return None
    edges = [m for m in h.members if popcount(m) == 2]
    if len(edges) != n:
        return None
    adj: list[list[int]] = [[] for _ in range(n)]
    for e in edges:
        u, v = (x - 1 for x in to_elements(e))
        adj[u].append(v)
        adj[v].append(u)
    if any(len(a) != 2 for a in adj):
        return None
    # 2-regular: one spanning cycle iff walking from 0 returns after n steps
    prev, cur, steps = -1, 0, 0
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        prev, cur = cur, nxt
        steps += 1
        if cur == 0:
            break
    return n if steps == n else None


def recognize_blocker_of_extended_odd_hole(c: Clutter) -> Optional[int]:
    return is_extended_odd_hole(blocker(c))


def minor_specs(n: int) -> Iterator[MinorSpec]:
    """All disjoint (I, J) over [n], by increasing |I| + |J|.

    Within a size, the removed set runs through ``combinations`` order and the
    split into (I, J) runs over I ⊆ removed in increasing mask order.
    """
    for k in range(n + 1):
        for removed in combinations(range(n), k):
            rmask = 0
            for e in removed:
                rmask |= 1 << e
            sub = 0
            while True:
                yield MinorSpec(sub, rmask & ~sub)
                if sub == rmask:
                    break
                sub = (sub - rmask) & rmask


def find_obstruction(c: Clutter) -> Optional[ObstructionWitness]:
    n = c.ground_size
    b = blocker(c)
    for spec in minor_specs(n):
        r = n - spec.size()
        if r < 3:
            # sizes only grow from here on
            break
        m = minor(c, spec)
        if len(m.members) == r:
            dim = recognize_delta(m)
            if dim is not None:
                return ObstructionWitness(ObstructionKind.DELTA, spec, dim)
        if r >= 5 and r % 2:
            # b(c \ I / J) = b(c) \ J / I
            dim = is_extended_odd_hole(minor(b, MinorSpec(spec.contract, spec.delete)))
            if dim is not None:
                return ObstructionWitness(ObstructionKind.BLOCKER_OF_EXTENDED_ODD_HOLE, spec, dim)
    return None


def is_clean(c: Clutter, budget: Optional[int] = None) -> tuple[bool, Optional[ObstructionWitness]]:
    limit = DEFAULT_MAX_N if budget is None else budget
    if c.ground_size > limit:
        raise BudgetExceeded(f"ground size {c.ground_size} exceeds enumeration bound {limit}")
    w = find_obstruction(c)
    return w is None, w


def witness_holds(c: Clutter, w: ObstructionWitness) -> bool:
    m = minor(c, w.minor_spec)
    if w.kind is ObstructionKind.DELTA:
        return recognize_delta(m) == w.dimension
    return recognize_blocker_of_extended_odd_hole(m) == w.dimension
