"""Rainbow covering number, its three relaxations, and set-system connectivity.

Every parameter is computed by its own search; nothing here uses one
parameter to shortcut another.  Unreachable minima are ``INF``.

Witness tie-break: among optimal certificates, the one whose vertex set has the
least characteristic vector in lexicographic order (the same order used for
clutter members).  GSC inequalities are ordered by their sorted index support,
then coordinate by coordinate with "in I" before "in J".
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Optional, Sequence

from .clutter_core import (
    INF,
    Clutter,
    ClutterError,
    ext_json,
    is_cover,
    lex_key,
    popcount,
    to_elements,
)
from .structure import (
    MinCoverGraph,
    SetSystem,
    StructureError,
    core,
    min_cover_graph,
    setcore,
)


class EmptyCore(StructureError):
    pass


class NotACover(ClutterError):
    pass


class IndexOutOfRange(ValueError):
    pass


class Side(str, enum.Enum):
    SKIP = "-"
    U = "U"
    V = "V"


@dataclass(frozen=True)
class SidePattern:
    choice: tuple[Side, ...]

    @classmethod
    def parse(cls, text: str) -> "SidePattern":
        return cls(tuple(Side(ch) for ch in text))

    def __str__(self) -> str:
        return "".join(s.value for s in self.choice)

    def chosen(self) -> list[int]:
        return [i for i, s in enumerate(self.choice) if s is not Side.SKIP]

    def size(self) -> int:
        return len(self.chosen())

    def union(self, g: MinCoverGraph) -> int:
        out = 0
        for (u, v), s in zip(g.components, self.choice):
            if s is Side.U:
                out |= u
            elif s is Side.V:
                out |= v
        return out


@dataclass(frozen=True)
class GscInequality:
    """sum_{i in positive} x_i + sum_{j in negated} (1 - x_j) >= 1, 1-based."""

    positive: frozenset = frozenset()
    negated: frozenset = frozenset()

    def __post_init__(self):
        if self.positive & self.negated:
            raise ValueError("positive and negated index sets intersect")

    @property
    def size(self) -> int:
        return len(self.positive) + len(self.negated)

    def to_json(self) -> dict:
        return {"I": sorted(self.positive), "J": sorted(self.negated)}

    def __str__(self) -> str:
        terms = [f"x{i}" for i in sorted(self.positive)]
        terms += [f"(1-x{j})" for j in sorted(self.negated)]
        return (" + ".join(terms) or "0") + " >= 1"


# -- clutter side --------------------------------------------------------------

def is_rainbow_cover(c: Clutter, g: MinCoverGraph, b: int) -> bool:
    if not is_cover(c, b):
        return False
    return all(popcount(b & comp) <= 1 for comp in g.component_masks())


def _one_per_component(targets: Sequence[int], g: MinCoverGraph, n: int):
    """Smallest vertex set with at most one vertex per component meeting every
    target; returns (size, lex-least witness mask) or (INF, None).

    Partial selections are dropped once some target misses the selection and
    every component still undecided.
    """
    comps = g.component_masks()
    d = len(comps)
    verts = [[1 << (e - 1) for e in to_elements(cm)] for cm in comps]
    # reach[i] = union of components i..d-1
    reach = [0] * (d + 1)
    for i in range(d - 1, -1, -1):
        reach[i] = reach[i + 1] | comps[i]
    targets = list(targets)

    for k in range(d + 1):
        found: list[int] = []

        def dfs(i: int, sel: int, left: int) -> None:
            if any(not t & (sel | reach[i]) for t in targets):
                return
            if i == d or left == 0:
                if all(t & sel for t in targets):
                    found.append(sel)
                return
            if d - i > left:
                dfs(i + 1, sel, left)
            for bit in verts[i]:
                dfs(i + 1, sel | bit, left - 1)

        dfs(0, 0, k)
        if found:
            return k, min(found, key=lambda m: lex_key(m, n))
    return INF, None


def rainbow_covering_number(c: Clutter, g: MinCoverGraph):
    """μ(c) and a lex-least minimum rainbow cover (mask), or (INF, None)."""
    return _one_per_component(c.members, g, c.ground_size)


def mu1(c: Clutter, g: MinCoverGraph, core_members: Optional[Sequence[int]] = None):
    """Smallest monochromatic cover of the core; minimal such covers take at
    most one vertex per component, so the rainbow search applies to core members."""
    members = core(c) if core_members is None else core_members
    if not members:
        raise EmptyCore("core is empty")
    return _one_per_component(members, g, c.ground_size)


def _patterns_by_union(c: Clutter, g: MinCoverGraph):
    """Covering side patterns, grouped by number of chosen components."""
    d = g.d
    by_size: dict[int, list[tuple[int, SidePattern]]] = {}
    for choice in product((Side.SKIP, Side.U, Side.V), repeat=d):
        p = SidePattern(choice)
        u = p.union(g)
        if is_cover(c, u):
            by_size.setdefault(p.size(), []).append((u, p))
    return by_size


def _least(c: Clutter, entries):
    return min(entries, key=lambda e: (lex_key(e[0], c.ground_size), str(e[1])))[1]


def mu2(c: Clutter, g: MinCoverGraph):
    """Fewest components met by a monochromatic cover, with a SidePattern."""
    by_size = _patterns_by_union(c, g)
    if not by_size:
        return INF, None
    k = min(by_size)
    return k, _least(c, by_size[k])


def is_irreducible(c: Clutter, g: MinCoverGraph, p: SidePattern) -> bool:
    if not is_cover(c, p.union(g)):
        raise NotACover(f"pattern {p} does not cover the clutter")
    for i in p.chosen():
        flipped = list(p.choice)
        flipped[i] = Side.V if p.choice[i] is Side.U else Side.U
        if is_cover(c, SidePattern(tuple(flipped)).union(g)):
            return False
    return True


def mu3(c: Clutter, g: MinCoverGraph):
    by_size = _patterns_by_union(c, g)
    for k in sorted(by_size):
        good = [(u, p) for u, p in by_size[k] if is_irreducible(c, g, p)]
        if good:
            return k, _least(c, good)
    return INF, None


# -- set-system side -------------------------------------------------------------

def gsc_valid(s: SetSystem, q: GscInequality) -> bool:
    """No point of s lies in the subcube {x_I = 0, x_J = 1}."""
    for i in q.positive | q.negated:
        if not 1 <= i <= s.dimension:
            raise IndexOutOfRange(f"index {i} outside [1, {s.dimension}]")
    for p in s.points:
        if all(p[i - 1] == 0 for i in q.positive) and all(p[j - 1] == 1 for j in q.negated):
            return False
    return True


def connectivity(s: SetSystem):
    """λ(s) with the least valid GSC inequality, by increasing support size.

    For a support T the inequality with sign pattern σ on T is valid iff σ is
    not the restriction of any point to T.  Full cube -> (INF, None); empty
    set-system -> (0, empty inequality).
    """
    d = s.dimension
    if not s.points:
        return 0, GscInequality()
    for k in range(1, d + 1):
        for support in combinations(range(d), k):
            seen = {tuple(p[i] for i in support) for p in s.points}
            if len(seen) == 1 << k:
                continue
            # product order puts x_i = 0 (i in I) before x_i = 1 (i in J)
            sigma = next(x for x in product((0, 1), repeat=k) if x not in seen)
            return k, GscInequality(
                frozenset(i + 1 for i, x in zip(support, sigma) if x == 0),
                frozenset(i + 1 for i, x in zip(support, sigma) if x == 1),
            )
    assert s.is_cube(), "every proper subset of the cube misses a full-support pattern"
    return INF, None


# -- translations -------------------------------------------------------------

def cover_to_gsc(g: MinCoverGraph, b: int) -> GscInequality:
    """One-vertex-per-component set -> GSC inequality: a vertex in V_i puts i
    in I, a vertex in U_i puts i in J."""
    pos, neg = set(), set()
    for i, (u, v) in enumerate(g.components, 1):
        if b & v:
            pos.add(i)
        elif b & u:
            neg.add(i)
    return GscInequality(frozenset(pos), frozenset(neg))


def gsc_to_cover(g: MinCoverGraph, q: GscInequality) -> int:
    """Inverse direction, taking the smallest vertex of the indicated side."""
    b = 0
    for i, (u, v) in enumerate(g.components, 1):
        side = v if i in q.positive else u if i in q.negated else 0
        if side:
            b |= side & -side
    return b


def monochromatic_pattern(g: MinCoverGraph, b: int) -> Optional[SidePattern]:
    """A pattern whose union contains b, if b lies in one side per component."""
    out = []
    for u, v in g.components:
        if not b & (u | v):
            out.append(Side.SKIP)
        elif b & u == b & (u | v):
            out.append(Side.U)
        elif b & v == b & (u | v):
            out.append(Side.V)
        else:
            return None
    return SidePattern(tuple(out))


# -- report -------------------------------------------------------------------

@dataclass
class ParamReport:
    mu: float | int
    mu1: float | int
    mu2: float | int
    mu3: float | int
    lam: float | int
    rainbow_cover: Optional[int] = None
    core_cover: Optional[int] = None
    mu2_pattern: Optional[SidePattern] = None
    mu3_pattern: Optional[SidePattern] = None
    gsc: Optional[GscInequality] = None
    setcore: Optional[SetSystem] = field(default=None, repr=False)

    def values(self) -> tuple:
        return (self.mu, self.mu1, self.mu2, self.mu3, self.lam)

    def all_equal(self) -> bool:
        return len(set(self.values())) == 1

    def to_json(self) -> dict:
        def els(m):
            return None if m is None else list(to_elements(m))

        return {
            "mu": ext_json(self.mu),
            "mu1": ext_json(self.mu1),
            "mu2": ext_json(self.mu2),
            "mu3": ext_json(self.mu3),
            "lambda": ext_json(self.lam),
            "witnesses": {
                "rainbow_cover": els(self.rainbow_cover),
                "core_cover": els(self.core_cover),
                "mu2_pattern": None if self.mu2_pattern is None else str(self.mu2_pattern),
                "mu3_pattern": None if self.mu3_pattern is None else str(self.mu3_pattern),
                "gsc": None if self.gsc is None else self.gsc.to_json(),
            },
        }


def param_report(c: Clutter, g: Optional[MinCoverGraph] = None) -> ParamReport:
    if g is None:
        g = min_cover_graph(c)
    core_members = core(c)
    mu, rb = rainbow_covering_number(c, g)
    m1, cc = mu1(c, g, core_members)
    m2, p2 = mu2(c, g)
    m3, p3 = mu3(c, g)
    s = setcore(c, g)
    lam, q = connectivity(s)
    return ParamReport(mu, m1, m2, m3, lam, rb, cc, p2, p3, q, s)
