"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line (also echoed in the terminal summary)
and then asserts.  Run with ``pytest tests/test_acceptance.py`` or ``-m acceptance``.
"""
import time

import numpy as np
import pytest

from clutterlab.clutter_core import Clutter, blocker, is_cover, lex_key, popcount, relabel, to_elements, to_mask
from clutterlab.harness.campaigns import verify_blocker_laws, verify_lemmas, verify_theorem
from clutterlab.harness.generators import (
    GeneratorConfig,
    Kind,
    delta,
    enumerate_clutters,
    f6,
    f6_points,
    odd_hole,
    random_clutters,
)
from clutterlab.harness.oracles import blocker_by_enumeration, connectivity_by_enumeration
from clutterlab.obstructions import is_clean, recognize_blocker_of_extended_odd_hole, recognize_delta
from clutterlab.params import connectivity, gsc_valid, is_rainbow_cover, param_report
from clutterlab.structure import SetSystem, core, is_tangled, min_cover_graph, setcore

from naive import (
    clean_by_brute_force,
    core_by_definition,
    lambda_loops,
    mu1_brute,
    mu2_brute,
    mu3_brute,
    mu_brute,
    tangled_by_definition,
)

pytestmark = pytest.mark.acceptance

SWEEP = GeneratorConfig(Kind.EXHAUSTIVE, n=5, seed=0)
RANDOM_LEMMAS = GeneratorConfig(Kind.RANDOM, ns=(6, 7), count=10_000, seed=2024)
# uniform draws at n <= 7 never give d >= 3; this stream does
RANDOM_CUBOID = GeneratorConfig(Kind.RANDOM, ns=(6, 7), count=1_000, seed=2024, model="cuboid")


def _timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


@pytest.fixture(scope="module")
def lemma_reports():
    """Lemma campaign over the n <= 5 sweep and the random streams, run once."""
    out = {}
    for name, cfg in (("sweep", SWEEP), ("random", RANDOM_LEMMAS), ("cuboid", RANDOM_CUBOID)):
        out[name] = _timed(verify_lemmas, cfg)
    return out


def _tally(reports, *checks):
    ran = sum(r.check_counts.get(ch, 0) for r, _ in reports.values() for ch in checks)
    bad = sum(r.violations_by_check.get(ch, 0) for r, _ in reports.values() for ch in checks)
    return ran, bad


def _clean_tangled(reports):
    return sum(r.clean_tangled_count for r, _ in reports.values())


def test_c01_blocker_involution_and_duality(acceptance_line):
    sweep, t1 = _timed(verify_blocker_laws, SWEEP)
    rand, t2 = _timed(verify_blocker_laws, GeneratorConfig(Kind.RANDOM, ns=(6, 7, 8), count=10_000, seed=2024))
    total = t1 + t2
    ok = sweep.passed and rand.passed and rand.instances_total == 10_000 and total < 60
    ok = ok and sum(1 for _ in enumerate_clutters(5)) == 7581
    acceptance_line(
        1,
        "b(b(C)) = C and b(C\\I/J) = b(C)/I\\J",
        ok,
        f"{sweep.instances_total} sweep + {rand.instances_total} random, "
        f"{sweep.violations + rand.violations} violations, {total:.1f}s",
    )
    assert ok


def test_c02_main_theorem_sweep(acceptance_line):
    rep, t = _timed(verify_theorem, SWEEP)
    ok = rep.passed and rep.clean_tangled_count > 0 and t < 120
    acceptance_line(
        2,
        "mu = mu1 = mu2 = mu3 = lambda on clean tangled n <= 5",
        ok,
        f"{rep.clean_tangled_count} clean tangled of {rep.instances_total}, {rep.violations} violations, {t:.1f}s",
    )
    assert ok


def test_c03_f6_fixture(acceptance_line):
    c = f6()
    g = min_cover_graph(c)
    pts = f6_points()
    failures = []

    def expect(name, got, want):
        if got != want:
            failures.append(f"{name}: {got!r} != {want!r}")

    # brute-force confirmation first
    expect("clean (oracle)", clean_by_brute_force(c), True)
    expect("tangled (oracle)", tangled_by_definition(c), True)
    expect("|core| (oracle)", len(core_by_definition(c)), 6)
    oracle_values = (mu_brute(c, g), mu1_brute(c, g), mu2_brute(c, g), mu3_brute(c, g), lambda_loops(pts))
    expect("parameters (oracle)", oracle_values, (3,) * 5)
    expect("lambda (numpy oracle)", connectivity_by_enumeration(pts), 3)
    rainbow = [b for b in range(1 << 6) if is_cover(c, b) and all(popcount(b & m) <= 1 for m in g.component_masks())]
    least = min((b for b in rainbow if popcount(b) == 3), key=lambda b: lex_key(b, 6))
    expect("least rainbow cover (oracle)", to_elements(least), (2, 4, 6))

    # production
    expect("is_clean", is_clean(c)[0], True)
    expect("is_tangled", is_tangled(c), True)
    expect("d", g.d, 3)
    expect("|core|", len(core(c)), 6)
    expect("setcore", set(setcore(c, g).points), set(pts.points))
    r = param_report(c, g)
    expect("parameters", r.values(), (3,) * 5)
    expect("rainbow witness", to_elements(r.rainbow_cover), (2, 4, 6))
    expect("rainbow witness valid", is_rainbow_cover(c, g, r.rainbow_cover), True)
    expect("gsc size", r.gsc.size, 3)
    expect("gsc valid", gsc_valid(setcore(c, g), r.gsc), True)

    ok = not failures
    acceptance_line(3, "F6 fixture", ok, "; ".join(failures) or f"values 3,3,3,3,3, rainbow {{2,4,6}}, gsc {r.gsc}")
    assert ok, failures


def test_c04_corollary_small_d(acceptance_line, lemma_reports):
    ran, bad = _tally(lemma_reports, "corollary_small_d")
    ok = ran > 0 and bad == 0
    acceptance_line(4, "setcore = {0,1}^d when d <= 2", ok, f"{ran} instances, {bad} violations")
    assert ok


def test_c05_core_formula_equivalence(acceptance_line, lemma_reports):
    ran, bad = _tally(lemma_reports, "core_formula_equivalence")
    ok = ran == _clean_tangled(lemma_reports) > 0 and bad == 0
    acceptance_line(5, "core by definition = core by component formula", ok, f"{ran} instances, {bad} violations")
    assert ok


def test_c06_setcore_geometry(acceptance_line, lemma_reports):
    ran, bad = _tally(lemma_reports, "setcore_geometry", "core_tau_two")
    ok = ran == 2 * _clean_tangled(lemma_reports) > 0 and bad == 0
    acceptance_line(
        6,
        "setcore nonempty, distinct columns, rank d, tau(core) = 2, lambda >= 3 for d >= 3",
        ok,
        f"{ran // 2} instances, {bad} violations",
    )
    assert ok


def test_c07_deletion_contraction(acceptance_line, lemma_reports):
    ran, bad = _tally(lemma_reports, "deletion_contraction")
    ok = ran > 0 and bad == 0
    acceptance_line(7, "side minors clean, tangled, core within image", ok, f"{ran} instances, {bad} violations")
    assert ok


def test_c08_lemma_suite(acceptance_line, lemma_reports):
    checks = ("setcore0", "irred_mono", "mu1_at_least_3", "mu_chain", "rainbow_monochromatic")
    ran, bad = _tally(lemma_reports, *checks)
    rand = lemma_reports["random"][0]
    ok = bad == 0 and ran == len(checks) * _clean_tangled(lemma_reports) and rand.instances_total == 10_000
    ok = ok and all(r.passed for r, _ in lemma_reports.values())
    secs = sum(t for _, t in lemma_reports.values())
    acceptance_line(
        8,
        "setcore0, irred-mono, mu1 >= 3, mu chain, rainbow => monochromatic",
        ok,
        f"{_clean_tangled(lemma_reports)} clean tangled instances, {bad} violations, {secs:.1f}s",
    )
    assert ok


def test_c09_recognizers(acceptance_line):
    start = time.perf_counter()
    rng = np.random.Generator(np.random.PCG64(9))
    failures = []
    for n in range(3, 11):
        base = delta(n)
        for _ in range(100):
            perm = [int(x) + 1 for x in rng.permutation(n)]
            if recognize_delta(relabel(base, perm)) != n:
                failures.append(f"delta {n} perm {perm}")
    for n in (5, 7, 9):
        b = blocker(odd_hole(n))
        if recognize_blocker_of_extended_odd_hole(b) != n:
            failures.append(f"b(odd hole {n})")
    c4 = Clutter._from_masks(4, [to_mask(e) for e in ({1, 2}, {2, 3}, {3, 4}, {1, 4})])
    for name, c in (("C4", c4), ("F6", f6())):
        if recognize_delta(c) is not None or recognize_blocker_of_extended_odd_hole(c) is not None:
            failures.append(f"{name} recognized")
    secs = time.perf_counter() - start
    ok = not failures and secs < 10
    acceptance_line(9, "obstruction recognizers", ok, "; ".join(failures[:5]) or f"800 relabelings, {secs:.2f}s")
    assert ok, failures


def _random_setsystems(rng, count, max_d):
    for _ in range(count):
        d = int(rng.integers(0, max_d + 1))
        density = rng.random()
        keep = rng.random(1 << d) < density
        pts = [tuple(x >> i & 1 for i in range(d)) for x in range(1 << d) if keep[x]]
        yield SetSystem.of(d, pts)


def test_c10_oracle_equivalence(acceptance_line):
    start = time.perf_counter()
    cfg = GeneratorConfig(Kind.RANDOM, ns=tuple(range(1, 13)), count=1_000, seed=10)
    bad_blocker = sum(1 for c in random_clutters(cfg) if blocker(c) != blocker_by_enumeration(c))
    rng = np.random.Generator(np.random.PCG64(10))
    bad_lambda = 0
    for s in _random_setsystems(rng, 1_000, 8):
        if connectivity(s)[0] != connectivity_by_enumeration(s):
            bad_lambda += 1
    secs = time.perf_counter() - start
    ok = bad_blocker == 0 and bad_lambda == 0 and secs < 120
    acceptance_line(
        10,
        "blocker vs 2^n enumeration, lambda vs 3^d enumeration",
        ok,
        f"1000 + 1000 instances, {bad_blocker} + {bad_lambda} mismatches, {secs:.1f}s",
    )
    assert ok


def test_c11_dedekind_counts(acceptance_line):
    counts = [sum(1 for _ in enumerate_clutters(n)) for n in range(6)]
    ok = counts == [2, 3, 6, 20, 168, 7581]
    acceptance_line(11, "clutter counts for n = 0..5", ok, ", ".join(map(str, counts)))
    assert ok
