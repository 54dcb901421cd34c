"""Tangled clutters: the minimum-cover graph, core, setcore and side minors."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .clutter_core import (
    Clutter,
    MinorSpec,
    covering_number,
    minor,
    popcount,
    to_elements,
)


class StructureError(ValueError):
    pass


class NotTangled(StructureError):
    pass


class NotBipartite(StructureError):
    """Minimum covers contain an odd cycle; ``walk`` is a closed walk of odd
    length given as a vertex list whose first and last entries coincide."""

    def __init__(self, walk: Sequence[int]):
        self.walk = tuple(walk)
        super().__init__(f"minimum-cover graph has odd closed walk {list(self.walk)}")


class GraphConnected(StructureError):
    pass


class EmptySetSystem(StructureError):
    pass


class NonInjectiveSetcore(StructureError):
    pass


def _pair_covers(c: Clutter) -> list[tuple[int, int]]:
    n = c.ground_size
    out = []
    for u, v in combinations(range(n), 2):
        pair = (1 << u) | (1 << v)
        if all(m & pair for m in c.members):
            out.append((u + 1, v + 1))
    return out


def is_tangled(c: Clutter) -> bool:
    if covering_number(c) != 2:
        return False
    touched = 0
    for u, v in _pair_covers(c):
        touched |= (1 << (u - 1)) | (1 << (v - 1))
    return touched == (1 << c.ground_size) - 1


@dataclass(frozen=True)
class MinCoverGraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    # (U_i, V_i) masks; U_i holds the component's smallest vertex
    components: tuple[tuple[int, int], ...]

    @property
    def d(self) -> int:
        return len(self.components)

    def component_masks(self) -> list[int]:
        return [u | v for u, v in self.components]

    def to_json(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "d": self.d,
            "edges": [list(e) for e in self.edges],
            "components": [
                {"U": list(to_elements(u)), "V": list(to_elements(v))} for u, v in self.components
            ],
        }


def _odd_walk(parent: dict, x: int, y: int) -> list[int]:
    def to_root(v):
        path = [v]
        while parent[v] is not None:
            v = parent[v]
            path.append(v)
        return path

    px, py = to_root(x), to_root(y)
    # x and y share a BFS root; walk x -> root -> y -> x has odd length
    return px + py[::-1][1:] + [x]


def min_cover_graph(c: Clutter) -> MinCoverGraph:
    if not is_tangled(c):
        raise NotTangled("clutter is not tangled")
    n = c.ground_size
    edges = _pair_covers(c)
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    components = []
    for root in range(1, n + 1):
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        sides = [0, 0]
        queue = deque([root])
        while queue:
            x = queue.popleft()
            sides[color[x]] |= 1 << (x - 1)
            for y in adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    parent[y] = x
                    queue.append(y)
                elif color[y] == color[x]:
                    raise NotBipartite(_odd_walk(parent, x, y))
        components.append((sides[0], sides[1]))
    return MinCoverGraph(n, tuple(edges), tuple(components))


def core(c: Clutter) -> list[int]:
    if not is_tangled(c):
        raise NotTangled("clutter is not tangled")
    covers = [(1 << (u - 1)) | (1 << (v - 1)) for u, v in _pair_covers(c)]
    return [m for m in c.members if all(popcount(m & b) == 1 for b in covers)]


def core_by_component_formula(c: Clutter, g: MinCoverGraph) -> list[int]:
    """Members whose trace on every component is exactly one full side."""
    if not is_tangled(c):
        raise NotTangled("clutter is not tangled")
    out = []
    for m in c.members:
        if all(m & (u | v) in (u, v) for u, v in g.components):
            out.append(m)
    return out


@dataclass(frozen=True)
class SetSystem:
    dimension: int
    points: tuple[tuple[int, ...], ...] = field(default=())

    @classmethod
    def of(cls, dimension: int, points) -> "SetSystem":
        pts = [tuple(int(x) for x in p) for p in points]
        for p in pts:
            if len(p) != dimension or any(x not in (0, 1) for x in p):
                raise ValueError(f"point {p} is not a 0/1 vector of length {dimension}")
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points")
        return cls(dimension, tuple(sorted(pts)))

    @classmethod
    def cube(cls, dimension: int) -> "SetSystem":
        return cls(dimension, tuple(product((0, 1), repeat=dimension)))

    def masks(self) -> list[int]:
        """Points as masks with coordinate i (1-based) on bit i - 1."""
        return [sum(x << i for i, x in enumerate(p)) for p in self.points]

    def is_cube(self) -> bool:
        return len(self.points) == 1 << self.dimension

    def to_json(self) -> dict:
        return {"dimension": self.dimension, "points": ["".join(map(str, p)) for p in self.points]}


def setcore_points(g: MinCoverGraph, members: Sequence[int]) -> list[tuple[int, ...]]:
    pts = []
    for m in members:
        pts.append(tuple(0 if m & (u | v) == u else 1 for u, v in g.components))
    return pts


def setcore(c: Clutter, g: MinCoverGraph | None = None) -> SetSystem:
    if g is None:
        g = min_cover_graph(c)
    members = core(c)
    pts = setcore_points(g, members)
    if len(set(pts)) != len(pts):
        raise NonInjectiveSetcore("two core members share a component trace")
    return SetSystem.of(g.d, pts)


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull, by exact Gaussian elimination."""
    if not points:
        return -1
    base = points[0]
    rows = [[Fraction(a - b) for a, b in zip(p, base)] for p in points[1:]]
    rank = 0
    ncols = len(base)
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / pr[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], pr)]
        rank += 1
    return rank


@dataclass
class GeometryReport:
    nonempty: bool
    no_duplicated_coordinates: bool
    full_dimensional: bool
    lambda_at_least_3: bool
    affine_rank: int
    connectivity: float | int
    complementary_coordinate_pairs: list[tuple[int, int]]

    @property
    def passed(self) -> bool:
        return (
            self.nonempty
            and self.no_duplicated_coordinates
            and self.full_dimensional
            and self.lambda_at_least_3
        )

    def to_json(self) -> dict:
        from .clutter_core import ext_json

        return {
            "nonempty": self.nonempty,
            "no_duplicated_coordinates": self.no_duplicated_coordinates,
            "full_dimensional": self.full_dimensional,
            "lambda_at_least_3": self.lambda_at_least_3,
            "affine_rank": self.affine_rank,
            "lambda": ext_json(self.connectivity),
            "complementary_coordinate_pairs": [list(p) for p in self.complementary_coordinate_pairs],
            "passed": self.passed,
        }


def check_setcore_geometry(s: SetSystem) -> GeometryReport:
    from .params import connectivity

    if not s.points:
        raise EmptySetSystem("set-system has no points")
    d = s.dimension
    cols = [tuple(p[i] for p in s.points) for i in range(d)]
    dup = any(cols[i] == cols[j] for i, j in combinations(range(d), 2))
    compl = [
        (i + 1, j + 1)
        for i, j in combinations(range(d), 2)
        if all(a != b for a, b in zip(cols[i], cols[j]))
    ]
    rank = affine_rank(s.points)
    lam, _ = connectivity(s)
    return GeometryReport(
        nonempty=True,
        no_duplicated_coordinates=not dup,
        full_dimensional=rank == d,
        lambda_at_least_3=d < 3 or lam >= 3,
        affine_rank=rank,
        connectivity=lam,
        complementary_coordinate_pairs=compl,
    )


def side_minor(c: Clutter, g: MinCoverGraph, component: int, kept_side: str) -> Clutter:
    """Contract the kept side of a component and delete the other one.

    ``component`` is 1-based, ``kept_side`` is ``"U"`` or ``"V"``.
    """
    return minor(c, side_minor_spec(g, component, kept_side))


def side_minor_spec(g: MinCoverGraph, component: int, kept_side: str) -> MinorSpec:
    if g.d < 2:
        raise GraphConnected("minimum-cover graph is connected")
    if not 1 <= component <= g.d:
        raise ValueError(f"component {component} not in [1, {g.d}]")
    u, v = g.components[component - 1]
    if kept_side == "U":
        return MinorSpec(delete=v, contract=u)
    if kept_side == "V":
        return MinorSpec(delete=u, contract=v)
    raise ValueError(f"kept_side must be 'U' or 'V', got {kept_side!r}")


def core_clutter(c: Clutter) -> Clutter:
    return Clutter._from_masks(c.ground_size, core(c))

