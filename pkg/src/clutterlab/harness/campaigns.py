"""Verification campaigns over generated clutters.

Each check is a named function ``check(inst, arg) -> list[(expected, actual)]``
returning one pair per failure.  A violation records the clutter text, the
check name and its argument, so :func:`replay` can re-run it standalone.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, Optional

import numpy as np

from ..clutter_core import (
    Clutter,
    MinorSpec,
    blocker,
    covering_number,
    ext_str,
    is_cover,
    minor,
    minor_labels,
    popcount,
    to_elements,
    validate,
)
from ..obstructions import is_clean
from ..params import (
    Side,
    SidePattern,
    connectivity,
    cover_to_gsc,
    gsc_to_cover,
    gsc_valid,
    is_irreducible,
    is_rainbow_cover,
    monochromatic_pattern,
    param_report,
)
from ..structure import (
    NotBipartite,
    SetSystem,
    check_setcore_geometry,
    core,
    core_by_component_formula,
    is_tangled,
    min_cover_graph,
    setcore,
    side_minor_spec,
)
from ..textio import format_clutter, parse_clutter
from .generators import GeneratorConfig, instances
from .oracles import connectivity_by_enumeration

DEFAULT_VIOLATION_CAP = 100
DUALITY_SPECS_PER_INSTANCE = 10
LAMBDA_ORACLE_MAX_D = 8


class Instance:
    """Lazily computed structure of one clutter."""

    def __init__(self, c: Clutter, clean_budget: Optional[int] = None):
        self.c = c
        self.clean_budget = clean_budget

    @cached_property
    def tangled(self) -> bool:
        return is_tangled(self.c)

    @cached_property
    def clean(self) -> bool:
        return is_clean(self.c, self.clean_budget)[0]

    @cached_property
    def graph(self):
        return min_cover_graph(self.c)

    @cached_property
    def core(self) -> list[int]:
        return core(self.c)

    @cached_property
    def setcore(self) -> SetSystem:
        return setcore(self.c, self.graph)

    @cached_property
    def report(self):
        return param_report(self.c, self.graph)


# -- checks ---------------------------------------------------------------------

def chk_bipartite(inst: Instance, arg=None):
    try:
        inst.graph
    except NotBipartite as exc:
        return [("bipartite", f"odd walk {list(exc.walk)}")]
    return []


def chk_theorem(inst: Instance, arg=None):
    r = inst.report
    if r.mu != r.lam:
        return [("mu = lambda", f"mu={ext_str(r.mu)} lambda={ext_str(r.lam)}")]
    return []


def chk_five_way(inst: Instance, arg=None):
    r = inst.report
    if not r.all_equal():
        vals = " ".join(f"{k}={ext_str(v)}" for k, v in zip(("mu", "mu1", "mu2", "mu3", "lambda"), r.values()))
        return [("mu = mu1 = mu2 = mu3 = lambda", vals)]
    return []


def chk_geometry(inst: Instance, arg=None):
    rep = check_setcore_geometry(inst.setcore)
    out = []
    for name in ("nonempty", "no_duplicated_coordinates", "full_dimensional", "lambda_at_least_3"):
        if not getattr(rep, name):
            out.append((f"{name}", f"false (rank={rep.affine_rank}, lambda={ext_str(rep.connectivity)})"))
    return out


def chk_core_tau(inst: Instance, arg=None):
    tau = covering_number(Clutter._from_masks(inst.c.ground_size, inst.core))
    return [] if tau == 2 else [("tau(core) = 2", ext_str(tau))]


def chk_core_equivalence(inst: Instance, arg=None):
    a = inst.core
    b = core_by_component_formula(inst.c, inst.graph)
    return [] if a == b else [(_sets(a), _sets(b))]


def chk_setcore_count(inst: Instance, arg=None):
    n = len(inst.setcore.points)
    return [] if n == len(inst.core) else [(len(inst.core), n)]


def chk_corollary(inst: Instance, arg=None):
    s = inst.setcore
    if s.dimension <= 2 and not s.is_cube():
        return [(f"{{0,1}}^{s.dimension}", s.to_json()["points"])]
    return []


def chk_orientation(inst: Instance, arg=None):
    rev = validate(inst.c.ground_size, [to_elements(m) for m in reversed(inst.c.members)])
    s = setcore(rev)
    return [] if s == inst.setcore else [(inst.setcore.to_json(), s.to_json())]


def chk_deletion_contraction(inst: Instance, arg=None):
    g = inst.graph
    if g.d < 2:
        return []
    out = []
    for comp in range(1, g.d + 1):
        for side in ("U", "V"):
            spec = side_minor_spec(g, comp, side)
            m = minor(inst.c, spec)
            tag = f"component {comp} keep {side}"
            if not is_tangled(m):
                out.append((f"{tag}: tangled", "not tangled"))
                continue
            if not is_clean(m, inst.clean_budget)[0]:
                out.append((f"{tag}: clean", "not clean"))
            labels = minor_labels(inst.c.ground_size, spec)
            image = set()
            for cm in inst.core:
                if cm & spec.delete:
                    continue
                rest = cm & ~spec.contract
                image.add(sum(1 << k for k, e in enumerate(labels) if rest >> (e - 1) & 1))
            extra = [x for x in core(m) if x not in image]
            if extra:
                out.append((f"{tag}: core(minor) within image of core", f"extra {_sets(extra)}"))
    return out


def chk_setcore0(inst: Instance, arg=None):
    g = inst.graph
    part = {}
    for i, (u, v) in enumerate(g.components):
        for e in to_elements(u):
            part[e] = (i, 0)
        for e in to_elements(v):
            part[e] = (i, 1)
    out = []
    n = inst.c.ground_size
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u == v or part[u] == part[v]:
                continue
            bu, bv = 1 << (u - 1), 1 << (v - 1)
            if not any(m & bu and not m & bv for m in inst.core):
                out.append((f"core member with {u} but not {v}", "none"))
    return out


def _minimal_cover(c: Clutter, b: int) -> bool:
    if not is_cover(c, b):
        return False
    return all(not is_cover(c, b & ~(1 << i)) for i in range(c.ground_size) if b >> i & 1)


def chk_irred_mono(inst: Instance, arg=None):
    c, g = inst.c, inst.graph
    out = []
    for choice in product((Side.SKIP, Side.U, Side.V), repeat=g.d):
        p = SidePattern(choice)
        if not p.chosen() or not is_cover(c, p.union(g)) or not is_irreducible(c, g, p):
            continue
        sides = [g.components[i][0 if p.choice[i] is Side.U else 1] for i in p.chosen()]
        options = [[1 << (e - 1) for e in to_elements(s)] for s in sides]
        if not any(_minimal_cover(c, sum(pick)) for pick in product(*options)):
            out.append((f"pattern {p}: minimal cover one per chosen side", "none"))
    return out


def chk_mu1_at_least_3(inst: Instance, arg=None):
    m1 = inst.report.mu1
    return [] if m1 >= 3 else [("mu1 >= 3 or inf", ext_str(m1))]


def chk_mu_chain(inst: Instance, arg=None):
    r = inst.report
    out = []
    for (a, an), (b, bn) in [
        ((r.mu1, "mu1"), (r.mu2, "mu2")),
        ((r.mu2, "mu2"), (r.mu3, "mu3")),
        ((r.mu3, "mu3"), (r.mu, "mu")),
        ((r.mu, "mu"), (r.mu1, "mu1")),
    ]:
        if not a >= b:
            out.append((f"{an} >= {bn}", f"{an}={ext_str(a)} {bn}={ext_str(b)}"))
    return out


def chk_mu1_lambda(inst: Instance, arg=None):
    r, g, s = inst.report, inst.graph, inst.setcore
    out = []
    if r.mu1 != r.lam:
        out.append(("mu1 = lambda", f"mu1={ext_str(r.mu1)} lambda={ext_str(r.lam)}"))
    if r.core_cover is not None:
        q = cover_to_gsc(g, r.core_cover)
        if not gsc_valid(s, q) or q.size != r.mu1:
            out.append(("core cover translates to valid GSC", str(q)))
    if r.gsc is not None:
        b = gsc_to_cover(g, r.gsc)
        if not all(m & b for m in inst.core) or popcount(b) != r.lam:
            out.append(("GSC translates to core cover", _sets([b])))
    return out


def chk_rainbow_mono(inst: Instance, arg=None):
    b = inst.report.rainbow_cover
    if b is None:
        return []
    p = monochromatic_pattern(inst.graph, b)
    if p is None or not is_cover(inst.c, p.union(inst.graph)):
        return [("rainbow witness monochromatic", _sets([b]))]
    return []


def chk_witnesses(inst: Instance, arg=None):
    r, c, g = inst.report, inst.c, inst.graph
    out = []
    if r.rainbow_cover is not None and (
        not is_rainbow_cover(c, g, r.rainbow_cover) or popcount(r.rainbow_cover) != r.mu
    ):
        out.append(("rainbow witness valid", _sets([r.rainbow_cover])))
    if r.core_cover is not None and (
        not all(m & r.core_cover for m in inst.core) or popcount(r.core_cover) != r.mu1
    ):
        out.append(("core cover witness valid", _sets([r.core_cover])))
    if r.mu2_pattern is not None and (
        not is_cover(c, r.mu2_pattern.union(g)) or r.mu2_pattern.size() != r.mu2
    ):
        out.append(("mu2 pattern covers", str(r.mu2_pattern)))
    if r.mu3_pattern is not None and (
        not is_cover(c, r.mu3_pattern.union(g))
        or not is_irreducible(c, g, r.mu3_pattern)
        or r.mu3_pattern.size() != r.mu3
    ):
        out.append(("mu3 pattern irreducible cover", str(r.mu3_pattern)))
    if r.gsc is not None and (not gsc_valid(inst.setcore, r.gsc) or r.gsc.size != r.lam):
        out.append(("GSC witness valid", str(r.gsc)))
    return out


def chk_lambda_oracle(inst: Instance, arg=None):
    s = inst.setcore
    if s.dimension > LAMBDA_ORACLE_MAX_D:
        return []
    lam, _ = connectivity(s)
    ref = connectivity_by_enumeration(s)
    return [] if lam == ref else [(ext_str(ref), ext_str(lam))]


def chk_involution(inst: Instance, arg=None):
    bb = blocker(blocker(inst.c))
    return [] if bb == inst.c else [(repr(inst.c), repr(bb))]


def chk_duality(inst: Instance, arg):
    """``arg`` is a list of (delete, contract) mask pairs."""
    out = []
    b = blocker(inst.c)
    for i, j in arg:
        lhs = blocker(minor(inst.c, MinorSpec(i, j)))
        rhs = minor(b, MinorSpec(j, i))
        if lhs != rhs:
            out.append((f"b(c\\{to_elements(i)}/{to_elements(j)}) = {rhs!r}", repr(lhs)))
    return out


CHECKS: dict[str, Callable] = {
    "graph_bipartite": chk_bipartite,
    "theorem_mu_eq_lambda": chk_theorem,
    "five_way_equality": chk_five_way,
    "setcore_geometry": chk_geometry,
    "core_tau_two": chk_core_tau,
    "core_formula_equivalence": chk_core_equivalence,
    "setcore_point_count": chk_setcore_count,
    "corollary_small_d": chk_corollary,
    "orientation_stability": chk_orientation,
    "deletion_contraction": chk_deletion_contraction,
    "setcore0": chk_setcore0,
    "irred_mono": chk_irred_mono,
    "mu1_at_least_3": chk_mu1_at_least_3,
    "mu_chain": chk_mu_chain,
    "mu1_equals_lambda_translation": chk_mu1_lambda,
    "rainbow_monochromatic": chk_rainbow_mono,
    "witness_revalidation": chk_witnesses,
    "lambda_oracle": chk_lambda_oracle,
    "blocker_involution": chk_involution,
    "minor_duality": chk_duality,
}

THEOREM_CHECKS = ("graph_bipartite", "setcore_geometry", "five_way_equality")
LEMMA_CHECKS = (
    "core_formula_equivalence",
    "setcore_point_count",
    "core_tau_two",
    "corollary_small_d",
    "setcore_geometry",
    "orientation_stability",
    "deletion_contraction",
    "setcore0",
    "irred_mono",
    "mu1_at_least_3",
    "mu_chain",
    "theorem_mu_eq_lambda",
    "mu1_equals_lambda_translation",
    "rainbow_monochromatic",
    "witness_revalidation",
    "lambda_oracle",
)
ALL_INSTANCE_CHECKS = ("blocker_involution", "minor_duality")


def _sets(masks) -> list:
    return [list(to_elements(m)) for m in masks]


# -- reports ------------------------------------------------------------------

@dataclass
class Violation:
    clutter: str
    check: str
    expected: object
    actual: object
    arg: object = None

    def to_json(self) -> dict:
        out = {"clutter": self.clutter, "check": self.check, "expected": self.expected, "actual": self.actual}
        if self.arg is not None:
            out["arg"] = [[list(to_elements(i)), list(to_elements(j))] for i, j in self.arg]
        return out


@dataclass
class VerificationReport:
    config: dict
    instances_total: int = 0
    tangled_count: int = 0
    clean_tangled_count: int = 0
    violations: int = 0
    violation_details: list[Violation] = field(default_factory=list)
    check_counts: dict[str, int] = field(default_factory=dict)
    violations_by_check: dict[str, int] = field(default_factory=dict)
    runtime_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def to_json(self, with_runtime: bool = True) -> dict:
        out = {
            "config": self.config,
            "instances_total": self.instances_total,
            "tangled_count": self.tangled_count,
            "clean_tangled_count": self.clean_tangled_count,
            "violations": self.violations,
            "violation_details": [v.to_json() for v in self.violation_details],
            "check_counts": dict(sorted(self.check_counts.items())),
            "violations_by_check": dict(sorted(self.violations_by_check.items())),
            "passed": self.passed,
        }
        if with_runtime:
            out["runtime_ms"] = round(self.runtime_ms, 1)
        return out


class _Campaign:
    def __init__(self, config: GeneratorConfig, cap: int, clean_budget: Optional[int]):
        self.report = VerificationReport(config.to_json())
        self.cap = cap
        self.clean_budget = clean_budget

    def run(self, inst: Instance, name: str, arg=None) -> None:
        self.report.check_counts[name] = self.report.check_counts.get(name, 0) + 1
        for expected, actual in CHECKS[name](inst, arg):
            self.report.violations += 1
            by = self.report.violations_by_check
            by[name] = by.get(name, 0) + 1
            if len(self.report.violation_details) < self.cap:
                self.report.violation_details.append(
                    Violation(format_clutter(inst.c), name, expected, actual, arg)
                )

    def clean_tangled(self, inst: Instance) -> bool:
        if not inst.tangled:
            return False
        self.report.tangled_count += 1
        if not inst.clean:
            return False
        self.report.clean_tangled_count += 1
        return True


def verify_theorem(
    config: GeneratorConfig,
    cap: int = DEFAULT_VIOLATION_CAP,
    clean_budget: Optional[int] = None,
) -> VerificationReport:
    start = time.perf_counter()
    camp = _Campaign(config, cap, clean_budget)
    for c in instances(config):
        camp.report.instances_total += 1
        inst = Instance(c, clean_budget)
        if not camp.clean_tangled(inst):
            continue
        camp.run(inst, "graph_bipartite")
        try:
            inst.graph
        except NotBipartite:
            continue
        for name in THEOREM_CHECKS[1:]:
            camp.run(inst, name)
    camp.report.runtime_ms = (time.perf_counter() - start) * 1e3
    return camp.report


def random_minor_specs(rng: np.random.Generator, n: int, count: int) -> list[tuple[int, int]]:
    """Each element independently kept, deleted or contracted."""
    out = []
    for _ in range(count):
        roles = rng.integers(0, 3, size=n)
        i = sum(1 << k for k in range(n) if roles[k] == 1)
        j = sum(1 << k for k in range(n) if roles[k] == 2)
        out.append((i, j))
    return out


def verify_blocker_laws(
    config: GeneratorConfig,
    cap: int = DEFAULT_VIOLATION_CAP,
    duality_specs: int = DUALITY_SPECS_PER_INSTANCE,
) -> VerificationReport:
    """Involution and minor duality only, on every generated instance."""
    start = time.perf_counter()
    camp = _Campaign(config, cap, None)
    spec_rng = np.random.Generator(np.random.PCG64([config.seed or 0, 1]))
    for c in instances(config):
        camp.report.instances_total += 1
        inst = Instance(c)
        camp.run(inst, "blocker_involution")
        camp.run(inst, "minor_duality", random_minor_specs(spec_rng, c.ground_size, duality_specs))
    camp.report.runtime_ms = (time.perf_counter() - start) * 1e3
    return camp.report


def verify_lemmas(
    config: GeneratorConfig,
    cap: int = DEFAULT_VIOLATION_CAP,
    clean_budget: Optional[int] = None,
    duality_specs: int = DUALITY_SPECS_PER_INSTANCE,
) -> VerificationReport:
    start = time.perf_counter()
    camp = _Campaign(config, cap, clean_budget)
    # minor specs come from their own stream so instance generation is unaffected
    spec_rng = np.random.Generator(np.random.PCG64([config.seed or 0, 1]))
    for c in instances(config):
        camp.report.instances_total += 1
        inst = Instance(c, clean_budget)
        camp.run(inst, "blocker_involution")
        camp.run(inst, "minor_duality", random_minor_specs(spec_rng, c.ground_size, duality_specs))
        if not camp.clean_tangled(inst):
            continue
        camp.run(inst, "graph_bipartite")
        try:
            inst.graph
        except NotBipartite:
            continue
        for name in LEMMA_CHECKS:
            camp.run(inst, name)
    camp.report.runtime_ms = (time.perf_counter() - start) * 1e3
    return camp.report


def replay(v: Violation, clean_budget: Optional[int] = None) -> list:
    """Re-run one recorded violation; a faithful record returns a non-empty list."""
    inst = Instance(parse_clutter(v.clutter), clean_budget)
    return CHECKS[v.check](inst, v.arg)


def verify_minors_exhaustively(c: Clutter) -> list:
    """Duality over every disjoint (I, J); for unit-scale clutters only."""
    n = c.ground_size
    pairs = []
    for roles in product(range(3), repeat=n):
        i = sum(1 << k for k in range(n) if roles[k] == 1)
        j = sum(1 << k for k in range(n) if roles[k] == 2)
        pairs.append((i, j))
    return chk_duality(Instance(c), pairs)
