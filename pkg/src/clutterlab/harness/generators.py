"""Instance supply: exhaustive antichain enumeration, seeded random clutters,
and the named families (deltas, odd holes, cuboids).

Random draws use numpy's PCG64 bit generator (PCG-XSL-RR 128/64), seeded
directly with the 64-bit config seed.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from ..clutter_core import Clutter, lex_key, popcount, to_mask
from ..structure import SetSystem

ENUMERATION_BOUND = 6
DEEP_EXHAUSTIVE_N = 6
DEFAULT_EXHAUSTIVE_N = 5
# failed draws in a row before a random clutter stops growing
MAX_REJECTIONS = 64


class GeneratorError(ValueError):
    pass


class BoundExceeded(GeneratorError):
    pass


class SizeRangeInfeasible(GeneratorError):
    pass


class BadDimension(GeneratorError):
    pass


class Kind(str, enum.Enum):
    EXHAUSTIVE = "EXHAUSTIVE"
    RANDOM = "RANDOM"
    FAMILY = "FAMILY"


@dataclass(frozen=True)
class Family:
    name: str  # DELTA, ODD_HOLE or CUBOID
    n: int = 0
    points: Optional[SetSystem] = None

    def label(self) -> str:
        if self.name == "CUBOID":
            return f"CUBOID(d={self.points.dimension}, |S|={len(self.points.points)})"
        return f"{self.name}({self.n})"


@dataclass(frozen=True)
class GeneratorConfig:
    kind: Kind
    n: int = 0
    count: int = 1
    seed: Optional[int] = None
    family: Optional[Family] = None
    member_size_range: Optional[tuple[int, int]] = None
    # number of member draws per random clutter; default (1, 2n)
    member_count_range: Optional[tuple[int, int]] = None
    deep: bool = False
    # RANDOM: ground sizes cycled through per instance, overriding n
    ns: tuple[int, ...] = field(default=())
    # RANDOM: "uniform" member draws, or "cuboid" (random blown-up cuboid
    # plus a few uniform extra members)
    model: str = "uniform"

    def check(self) -> None:
        if self.kind is Kind.RANDOM:
            if self.seed is None or self.count is None:
                raise GeneratorError("RANDOM config needs seed and count")
            if self.model not in ("uniform", "cuboid"):
                raise GeneratorError(f"unknown random model {self.model!r}")
        elif self.kind is Kind.EXHAUSTIVE:
            bound = DEEP_EXHAUSTIVE_N if self.deep else DEFAULT_EXHAUSTIVE_N
            if self.n > bound:
                raise BoundExceeded(
                    f"exhaustive sweep over n={self.n} exceeds bound {bound}"
                    + ("" if self.deep else " (pass deep=True for n=6)")
                )
        elif self.family is None:
            raise GeneratorError("FAMILY config needs a family")

    def to_json(self) -> dict:
        out = {"kind": self.kind.value, "n": self.n, "count": self.count, "seed": self.seed}
        if self.kind is Kind.RANDOM:
            out["model"] = self.model
        if self.ns:
            out["ns"] = list(self.ns)
        if self.family is not None:
            out["family"] = self.family.label()
        if self.member_size_range is not None:
            out["member_size_range"] = list(self.member_size_range)
        if self.member_count_range is not None:
            out["member_count_range"] = list(self.member_count_range)
        return out


def enumerate_clutters(n: int, bound: int = ENUMERATION_BOUND) -> Iterator[Clutter]:
    """Every antichain of subsets of [n], each once, in a fixed order.

    Subsets are offered in order of (size, mask); a subset may join unless it
    contains one already chosen.  ``blocked`` is a bitset over all 2^n subsets
    holding the up-closure of the chosen sets.
    """
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds enumeration bound {bound}")
    subsets = sorted(range(1 << n), key=lambda s: (popcount(s), s))
    up = {}
    for s in subsets:
        u = 0
        for t in range(1 << n):
            if t & s == s:
                u |= 1 << t
        up[s] = u
    total = len(subsets)

    def rec(i: int, chosen: list[int], blocked: int) -> Iterator[list[int]]:
        if i == total:
            yield chosen
            return
        s = subsets[i]
        yield from rec(i + 1, chosen, blocked)
        if not blocked >> s & 1:
            chosen.append(s)
            yield from rec(i + 1, chosen, blocked | up[s])
            chosen.pop()

    for members in rec(0, [], 0):
        yield Clutter._from_masks(n, list(members))


def _size_range(config: GeneratorConfig, n: int) -> tuple[int, int]:
    lo, hi = config.member_size_range or (1, n)
    if lo < 0 or lo > hi or hi > n:
        raise SizeRangeInfeasible(f"member sizes {lo}..{hi} infeasible over {n} elements")
    return lo, hi


def _draw_clutter(rng: np.random.Generator, n: int, config: GeneratorConfig) -> Clutter:
    lo, hi = _size_range(config, n)
    clo, chi = config.member_count_range or (1, max(1, 2 * n))
    draws = int(rng.integers(clo, chi + 1))
    members: list[int] = []
    rejected = 0
    while len(members) < draws and rejected < MAX_REJECTIONS:
        size = int(rng.integers(lo, hi + 1))
        m = to_mask(int(x) + 1 for x in rng.choice(n, size=size, replace=False))
        if any(a & m == a or a & m == m for a in members):
            rejected += 1
            continue
        rejected = 0
        members.append(m)
    return Clutter._from_masks(n, members)


def _draw_cuboid(rng: np.random.Generator, n: int, config: GeneratorConfig) -> Clutter:
    """Split [n] into d = n // 2 components with nonempty sides U_i, V_i, keep
    a random nonempty set of points, and add each point as the union of its
    sides (V_i where p_i = 1).  Then up to n extra uniform members."""
    d = max(1, n // 2)
    order = [int(x) for x in rng.permutation(n)]
    # two slots per component get one element each, the rest land anywhere
    slots = [[] for _ in range(2 * d)]
    for k, e in enumerate(order):
        slot = k if k < 2 * d else int(rng.integers(0, 2 * d))
        slots[slot].append(e)
    sides = [(to_mask(x + 1 for x in slots[2 * i]), to_mask(x + 1 for x in slots[2 * i + 1])) for i in range(d)]
    keep = rng.random(1 << d) < rng.uniform(0.3, 0.9)
    members: list[int] = []
    for code in range(1 << d):
        if keep[code]:
            members.append(sum(sides[i][code >> i & 1] for i in range(d)))
    if not members:
        members.append(sum(u for u, _ in sides))
    extras = int(rng.integers(0, n + 1))
    lo, hi = _size_range(config, n)
    for _ in range(extras):
        size = int(rng.integers(lo, hi + 1))
        m = to_mask(int(x) + 1 for x in rng.choice(n, size=size, replace=False))
        if not any(a & m == a or a & m == m for a in members):
            members.append(m)
    return Clutter._from_masks(n, members)


def random_clutters(config: GeneratorConfig) -> Iterator[Clutter]:
    """``config.count`` clutters from a single seeded stream.

    Each clutter draws a target member count, then draws members (uniform size
    in range, uniform subset of that size), rejecting any draw comparable to a
    member already taken.  Growth stops after MAX_REJECTIONS rejections in a row.
    """
    if config.seed is None:
        raise GeneratorError("RANDOM config needs a seed")
    rng = np.random.Generator(np.random.PCG64(config.seed))
    ns = config.ns or (config.n,)
    for n in ns:
        _size_range(config, n)
    draw = _draw_cuboid if config.model == "cuboid" else _draw_clutter
    for k in range(config.count):
        yield draw(rng, ns[k % len(ns)], config)


def random_clutter(config: GeneratorConfig) -> Clutter:
    return next(random_clutters(config))


def delta(n: int) -> Clutter:
    if n < 3:
        raise BadDimension("delta needs n >= 3")
    members = [to_mask((1, v)) for v in range(2, n + 1)] + [to_mask(range(2, n + 1))]
    return Clutter._from_masks(n, members)


def odd_hole(n: int) -> Clutter:
    if n < 5 or n % 2 == 0:
        raise BadDimension("odd hole needs odd n >= 5")
    return Clutter._from_masks(n, [to_mask((i, i % n + 1)) for i in range(1, n + 1)])


def cuboid(s: SetSystem) -> Clutter:
    """Member for point p holds 2i-1 when p_i = 1 and 2i when p_i = 0."""
    if len(set(s.points)) != len(s.points):
        raise BadDimension("cuboid needs distinct points")
    members = []
    for p in s.points:
        members.append(to_mask(2 * i + (1 if x == 1 else 2) for i, x in enumerate(p)))
    return Clutter._from_masks(2 * s.dimension, members)


def make_family(family: Family) -> Clutter:
    if family.name == "DELTA":
        return delta(family.n)
    if family.name == "ODD_HOLE":
        return odd_hole(family.n)
    if family.name == "CUBOID":
        if family.points is None:
            raise BadDimension("CUBOID needs a set-system")
        return cuboid(family.points)
    raise GeneratorError(f"unknown family {family.name!r}")


def f6_points() -> SetSystem:
    pts = [p for p in np.ndindex(2, 2, 2) if sum(p) in (1, 2)]
    return SetSystem.of(3, pts)


def f6() -> Clutter:
    """Cuboid of the weight-1-or-2 points of {0,1}^3."""
    return cuboid(f6_points())


def instances(config: GeneratorConfig) -> Iterator[Clutter]:
    config.check()
    if config.kind is Kind.EXHAUSTIVE:
        for n in range(config.n + 1):
            yield from enumerate_clutters(n)
    elif config.kind is Kind.RANDOM:
        yield from random_clutters(config)
    else:
        yield make_family(config.family)


def sort_key(c: Clutter) -> tuple:
    return (c.ground_size, len(c.members), tuple(lex_key(m, c.ground_size) for m in c.members))
