"""Clutters, covers, blockers and minors.

Sets of elements are stored as int bitmasks: element ``i`` (1-based) is bit
``i - 1``.  A :class:`Clutter` keeps its members in canonical order, which is
lexicographic on characteristic vectors ``(x_1, ..., x_n)``; two clutters are
equal iff their ground sizes and member tuples are equal.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

INF = math.inf


class ClutterError(ValueError):
    pass


class NotAntichain(ClutterError):
    pass


class DuplicateMember(ClutterError):
    pass


class ElementOutOfRange(ClutterError):
    pass


class InfiniteCoveringNumber(ClutterError):
    pass


class InvalidMinorSpec(ClutterError):
    pass


# -- bitmask helpers ---------------------------------------------------------

def to_mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def to_elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lex_key(mask: int, n: int) -> int:
    """Sort key making integer order equal lexicographic order of the
    characteristic vector (x_1, ..., x_n), so {2} sorts before {1}."""
    return int(format(mask, f"0{n}b")[::-1], 2) if n else 0


def full_mask(n: int) -> int:
    return (1 << n) - 1


def minimal_sets(masks: Iterable[int]) -> list[int]:
    """Inclusion-wise minimal sets of a family (duplicates collapse)."""
    kept: list[int] = []
    for m in sorted(set(masks), key=popcount):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


# -- extended naturals -------------------------------------------------------

def ext_str(value) -> str:
    return "inf" if value == INF else str(int(value))


def ext_json(value):
    return "inf" if value == INF else int(value)


def ext_from_json(value):
    return INF if value == "inf" else int(value)


# -- core types ----------------------------------------------------------------

@dataclass(frozen=True)
class Clutter:
    ground_size: int
    members: tuple[int, ...]

    @classmethod
    def from_sets(cls, ground_size: int, raw_members: Iterable[Iterable[int]]) -> "Clutter":
        return validate(ground_size, raw_members)

    @classmethod
    def _from_masks(cls, ground_size: int, masks: Iterable[int]) -> "Clutter":
        # trusted path: masks must already form an antichain of distinct sets
        return cls(ground_size, tuple(sorted(masks, key=lambda m: lex_key(m, ground_size))))

    def member_sets(self) -> list[tuple[int, ...]]:
        return [to_elements(m) for m in self.members]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.member_sets())
        return f"Clutter(n={self.ground_size}, [{body}])"


@dataclass(frozen=True)
class MinorSpec:
    delete: int = 0
    contract: int = 0

    @classmethod
    def of(cls, delete: Iterable[int] = (), contract: Iterable[int] = ()) -> "MinorSpec":
        return cls(to_mask(delete), to_mask(contract))

    def check(self, ground_size: int) -> None:
        if self.delete & self.contract:
            raise InvalidMinorSpec("delete and contract sets intersect")
        if (self.delete | self.contract) >> ground_size:
            raise InvalidMinorSpec("minor spec outside ground set")

    def size(self) -> int:
        return popcount(self.delete) + popcount(self.contract)


def validate(ground_size: int, raw_members: Iterable[Iterable[int]]) -> Clutter:
    """Build a canonical clutter, rejecting anything that is not an antichain."""
    if ground_size < 0:
        raise ElementOutOfRange(f"negative ground size {ground_size}")
    masks = []
    seen = set()
    for raw in raw_members:
        raw = list(raw)
        for e in raw:
            if not isinstance(e, int) or not 1 <= e <= ground_size:
                raise ElementOutOfRange(f"element {e!r} not in [1, {ground_size}]")
        m = to_mask(raw)
        if m in seen:
            raise DuplicateMember(f"duplicate member {sorted(set(raw))}")
        seen.add(m)
        masks.append(m)
    for a in masks:
        for b in masks:
            if a != b and a & b == a:
                raise NotAntichain(f"member {to_elements(a)} is contained in {to_elements(b)}")
    return Clutter._from_masks(ground_size, masks)


def is_cover(c: Clutter, b: int) -> bool:
    return all(m & b for m in c.members)


def blocker(c: Clutter) -> Clutter:
    """Clutter of minimal covers, built one member at a time.

    The running family holds the minimal transversals of the members seen so
    far; it starts as {∅}, the blocker of the memberless clutter.
    """
    family = [0]
    for member in sorted(c.members, key=popcount):
        hit = [t for t in family if t & member]
        missed = [t for t in family if not t & member]
        if not missed:
            continue
        bits = [1 << i for i in range(c.ground_size) if member >> i & 1]
        grown = set()
        for t in missed:
            for bit in bits:
                new = t | bit
                # any t' ⊆ new already hitting the member makes new redundant
                if not any(h & new == h for h in hit):
                    grown.add(new)
        family = hit + minimal_sets(grown)
    return Clutter._from_masks(c.ground_size, family)


def covering_number(c: Clutter):
    """τ(c) as an int, or INF when the clutter has ∅ as its only member."""
    b = blocker(c)
    if not b.members:
        return INF
    return min(popcount(m) for m in b.members)


def minimum_covers(c: Clutter) -> list[int]:
    tau = covering_number(c)
    if tau == INF:
        raise InfiniteCoveringNumber("clutter {∅} has no cover")
    return [m for m in blocker(c).members if popcount(m) == tau]


def minor_labels(ground_size: int, spec: MinorSpec) -> tuple[int, ...]:
    """Original element for each new index: result[k - 1] is relabeled to k."""
    gone = spec.delete | spec.contract
    return tuple(e for e in range(1, ground_size + 1) if not gone >> (e - 1) & 1)


def _compress(mask: int, kept_bits: Sequence[int]) -> int:
    out = 0
    for k, bit in enumerate(kept_bits):
        if mask >> bit & 1:
            out |= 1 << k
    return out


def minor(c: Clutter, spec: MinorSpec) -> Clutter:
    """c ∖ delete / contract, re-indexed order-preservingly onto [1, n']."""
    spec.check(c.ground_size)
    kept = [e - 1 for e in minor_labels(c.ground_size, spec)]
    raw = [m & ~spec.contract for m in c.members if not m & spec.delete]
    return Clutter._from_masks(len(kept), [_compress(m, kept) for m in minimal_sets(raw)])


def relabel(c: Clutter, perm: Sequence[int]) -> Clutter:
    """Apply a ground-set permutation given as perm[i - 1] = image of i."""
    images = []
    for m in c.members:
        images.append(to_mask(perm[e - 1] for e in to_elements(m)))
    return Clutter._from_masks(c.ground_size, images)
