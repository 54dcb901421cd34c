import pytest

from clutterlab.clutter_core import Clutter, blocker, is_cover, validate
from clutterlab.harness.campaigns import (
    Violation,
    replay,
    verify_lemmas,
    verify_minors_exhaustively,
    verify_theorem,
)
from clutterlab.harness.generators import (
    BadDimension,
    BoundExceeded,
    Family,
    GeneratorConfig,
    GeneratorError,
    Kind,
    SizeRangeInfeasible,
    cuboid,
    delta,
    enumerate_clutters,
    f6,
    f6_points,
    make_family,
    odd_hole,
    random_clutter,
    random_clutters,
)
from clutterlab.obstructions import is_clean, recognize_blocker_of_extended_odd_hole
from clutterlab.structure import SetSystem, is_tangled
from clutterlab.textio import format_clutter


class TestEnumerate:
    def test_n0(self):
        assert list(enumerate_clutters(0)) == [Clutter(0, ()), Clutter(0, (0,))]

    def test_n2(self):
        got = set(enumerate_clutters(2))
        want = {
            validate(2, []),
            validate(2, [[]]),
            validate(2, [{1}]),
            validate(2, [{2}]),
            validate(2, [{1}, {2}]),
            validate(2, [{1, 2}]),
        }
        assert got == want and len(list(enumerate_clutters(2))) == 6

    @pytest.mark.parametrize("n,count", [(0, 2), (1, 3), (2, 6), (3, 20), (4, 168)])
    def test_dedekind(self, n, count):
        cs = list(enumerate_clutters(n))
        assert len(cs) == len(set(cs)) == count

    def test_n3_matches_brute_force(self):
        # every family of subsets of [3], kept when it is an antichain
        subsets = list(range(8))
        brute = set()
        for fam in range(1 << 8):
            ms = [s for s in subsets if fam >> s & 1]
            if all(a == b or a & b != a for a in ms for b in ms):
                brute.add(Clutter._from_masks(3, ms))
        assert set(enumerate_clutters(3)) == brute

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            next(enumerate_clutters(7))

    def test_deterministic(self):
        assert list(enumerate_clutters(4)) == list(enumerate_clutters(4))


class TestRandom:
    def test_valid_and_deterministic(self):
        cfg = GeneratorConfig(Kind.RANDOM, n=6, count=1, seed=42, member_size_range=(2, 3))
        c = random_clutter(cfg)
        validate(c.ground_size, c.member_sets())
        assert all(2 <= len(s) <= 3 for s in c.member_sets())
        assert random_clutter(cfg) == c

    def test_infeasible(self):
        with pytest.raises(SizeRangeInfeasible):
            random_clutter(GeneratorConfig(Kind.RANDOM, n=4, seed=1, member_size_range=(5, 5)))

    def test_reproducible_stream(self):
        cfg = GeneratorConfig(Kind.RANDOM, n=5, count=30, seed=7)
        assert list(random_clutters(cfg)) == list(random_clutters(cfg))
        other = GeneratorConfig(Kind.RANDOM, n=5, count=30, seed=8)
        assert list(random_clutters(cfg)) != list(random_clutters(other))

    def test_cuboid_model(self):
        cfg = GeneratorConfig(Kind.RANDOM, ns=(6, 7), count=40, seed=3, model="cuboid")
        cs = list(random_clutters(cfg))
        assert [c.ground_size for c in cs[:4]] == [6, 7, 6, 7]
        for c in cs:
            validate(c.ground_size, c.member_sets())

    def test_needs_seed(self):
        with pytest.raises(GeneratorError):
            random_clutter(GeneratorConfig(Kind.RANDOM, n=4))


class TestFamilies:
    def test_delta3(self):
        assert make_family(Family("DELTA", 3)) == validate(3, [{1, 2}, {1, 3}, {2, 3}])

    def test_odd_hole5(self):
        want = validate(5, [{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}])
        assert make_family(Family("ODD_HOLE", 5)) == want

    def test_f6(self):
        want = validate(6, [{2, 4, 5}, {2, 3, 6}, {1, 4, 6}, {2, 3, 5}, {1, 4, 5}, {1, 3, 6}])
        assert make_family(Family("CUBOID", points=f6_points())) == want == f6()

    @pytest.mark.parametrize("fam", [Family("DELTA", 2), Family("ODD_HOLE", 4), Family("ODD_HOLE", 3), Family("CUBOID")])
    def test_bad_dimension(self, fam):
        with pytest.raises(BadDimension):
            make_family(fam)

    def test_cuboid_tangled_when_coordinates_vary(self):
        # each coordinate takes both values, and the point set is closed under complement
        for s in (f6_points(), SetSystem.cube(2), SetSystem.cube(3)):
            assert is_tangled(cuboid(s))

    def test_cuboid_not_tangled_with_constant_coordinate(self):
        # coordinate 1 always 1: element 1 alone is a cover
        c = cuboid(SetSystem.of(2, [(1, 0), (1, 1)]))
        assert is_cover(c, 1)
        assert not is_tangled(c)


class TestCampaigns:
    def test_theorem_exhaustive_n4(self):
        rep = verify_theorem(GeneratorConfig(Kind.EXHAUSTIVE, n=4))
        assert rep.passed and rep.instances_total == 2 + 3 + 6 + 20 + 168

    def test_theorem_f6_family(self):
        rep = verify_theorem(GeneratorConfig(Kind.FAMILY, family=Family("CUBOID", points=f6_points())))
        assert rep.clean_tangled_count == 1 and rep.passed

    def test_theorem_delta4_skipped(self):
        rep = verify_theorem(GeneratorConfig(Kind.FAMILY, family=Family("DELTA", 4)))
        assert rep.instances_total == 1 and rep.clean_tangled_count == 0 and rep.passed

    def test_lemmas_exhaustive_n4(self):
        rep = verify_lemmas(GeneratorConfig(Kind.EXHAUSTIVE, n=4, seed=0))
        assert rep.passed
        assert rep.check_counts["blocker_involution"] == rep.instances_total

    def test_lemmas_cuboid_random(self):
        rep = verify_lemmas(GeneratorConfig(Kind.RANDOM, ns=(6, 7), count=60, seed=1, model="cuboid"))
        assert rep.passed and rep.clean_tangled_count > 10

    def test_odd_hole_blocker_is_obstruction(self):
        h = odd_hole(5)
        b = blocker(h)
        assert recognize_blocker_of_extended_odd_hole(b) == 5
        assert is_clean(b)[0] is False
        rep = verify_lemmas(GeneratorConfig(Kind.FAMILY, family=Family("ODD_HOLE", 5)))
        assert rep.passed

    def test_exhaustive_bound(self):
        with pytest.raises(BoundExceeded):
            verify_theorem(GeneratorConfig(Kind.EXHAUSTIVE, n=6))

    def test_determinism(self):
        cfg = GeneratorConfig(Kind.RANDOM, ns=(6, 7), count=40, seed=9, model="cuboid")
        a = verify_lemmas(cfg).to_json(with_runtime=False)
        b = verify_lemmas(cfg).to_json(with_runtime=False)
        assert a == b

    def test_replay_of_passing_record_is_empty(self):
        v = Violation(format_clutter(validate(2, [{1}, {2}])), "corollary_small_d", None, None)
        assert replay(v) == []

    def test_violations_are_recorded_and_replay(self, monkeypatch):
        from clutterlab.harness import campaigns

        def broken(inst, arg=None):
            return [("never", "always")] if inst.c.ground_size == 4 else []

        monkeypatch.setitem(campaigns.CHECKS, "blocker_involution", broken)
        rep = verify_lemmas(GeneratorConfig(Kind.EXHAUSTIVE, n=4, seed=0), cap=5)
        assert not rep.passed
        assert rep.violations == 168 and len(rep.violation_details) == 5
        for v in rep.violation_details:
            assert replay(v) == [("never", "always")]

    def test_duality_all_specs(self):
        for c in (f6(), odd_hole(5), delta(4)):
            assert verify_minors_exhaustively(c) == []


def test_lemmas_random_n7_seed1():
    rep = verify_lemmas(GeneratorConfig(Kind.RANDOM, n=7, count=10_000, seed=1))
    assert rep.instances_total == 10_000 and rep.passed, rep.violations_by_check
