import pytest

from jointfix import (
    GenSpec,
    build_map,
    join_translation_family,
    make_instance,
    make_standard_poset,
    random_commuting_family,
)
from jointfix.errors import BadSpec, NotALattice
from jointfix.generators import KINDS, power_family, random_isotone_map, random_poset
from jointfix.mappings import is_commutative_family, is_isotone
from jointfix.oracle import brute_force_fixed_points
from jointfix.poset import build_poset
from jointfix.rng import SplitMix64

from strategies import LATTICE_SPECS


class TestStandardPosets:
    def test_powerset(self):
        p = make_standard_poset(GenSpec("powerset", 2))
        assert len(p) == 4
        assert p.labels[p.bottom] == "{}" and p.labels[p.top] == "{1,2}"

    def test_divisor(self):
        p = make_standard_poset(GenSpec("divisor", 12))
        assert p.labels == ("1", "2", "3", "4", "6", "12")
        for a in p.labels:
            for b in p.labels:
                assert p.leq(a, b) == (int(b) % int(a) == 0)
        assert p.labels[p.bottom] == "1"

    def test_singleton_chain(self):
        assert len(make_standard_poset(GenSpec("chain", 1))) == 1

    def test_product_is_componentwise(self):
        p = make_standard_poset(GenSpec("product", 2, 3))
        assert len(p) == 6
        assert p.leq("(0,1)", "(1,2)") and not p.leq("(1,0)", "(0,2)")

    def test_m3_and_n5_are_lattices(self):
        m3 = make_standard_poset(GenSpec("diamond-M3"))
        n5 = make_standard_poset(GenSpec("pentagon-N5"))
        assert m3.is_complete_lattice() and n5.is_complete_lattice()
        assert n5.leq("a", "b") and not n5.comparable("b", "c")
        assert not any(m3.comparable(x, y) for x, y in [("a", "b"), ("a", "c"), ("b", "c")])

    def test_antichain_plus_bottom(self):
        p = make_standard_poset(GenSpec("antichain-plus-bottom", 2))
        assert p.is_chain_complete() and not p.is_complete_lattice()

    @pytest.mark.parametrize("spec", [
        GenSpec("chain", 0), GenSpec("powerset", 7), GenSpec("product", 9, 9),
        GenSpec("random", 65), GenSpec("hypercube", 3),
    ])
    def test_bad_specs(self, spec):
        with pytest.raises(BadSpec):
            make_standard_poset(spec)

    @pytest.mark.parametrize("kind", KINDS)
    def test_every_kind_builds(self, kind):
        p = make_standard_poset(GenSpec(kind, 3, 2, rng_seed=5))
        assert len(p) >= 1

    def test_random_posets_have_bottom(self):
        for seed in range(200):
            p = random_poset(1 + seed % 12, seed)
            assert p.labels[p.bottom] == "0"


class TestJoinTranslations:
    def test_powerset(self):
        p = make_standard_poset(GenSpec("powerset", 2))
        fam = join_translation_family(p, ["{1}", "{2}"])
        assert [p.labels[x] for x in brute_force_fixed_points(fam)] == ["{1,2}"]

    def test_bottom_translation_is_identity(self):
        p = make_standard_poset(GenSpec("powerset", 2))
        fam = join_translation_family(p, [p.bottom])
        assert brute_force_fixed_points(fam) == (0, 1, 2, 3)

    def test_divisor(self):
        p = make_standard_poset(GenSpec("divisor", 12))
        fam = join_translation_family(p, ["2", "3"])
        assert [p.labels[x] for x in brute_force_fixed_points(fam)] == ["6", "12"]

    def test_requires_joins(self, vposet):
        with pytest.raises(NotALattice):
            join_translation_family(vposet, ["a"])

    def test_fixed_points_form_principal_filter(self):
        rng = SplitMix64(2024)
        for _ in range(200):
            p = make_standard_poset(rng.choice(LATTICE_SPECS))
            subset = [rng.below(len(p)) for _ in range(1 + rng.below(3))]
            fam = join_translation_family(p, subset)
            assert brute_force_fixed_points(fam) == p.up_set(p.sup_subset(subset))


class TestRandomFamilies:
    def test_power_example(self):
        p = make_standard_poset(GenSpec("chain", 4))
        f = build_map(p, "f", {"0": "1", "1": "2", "2": "3", "3": "3"})
        fam = power_family(f, 2)
        assert [g.table for g in fam] == [(1, 2, 3, 3), (2, 3, 3, 3)]
        assert fam.names == ("f", "f^2")

    def test_powers_drop_repeats(self):
        p = make_standard_poset(GenSpec("chain", 3))
        f = build_map(p, "f", {"0": "2", "1": "2", "2": "2"})
        assert len(power_family(f, 3)) == 1

    def test_reproducible(self):
        p = make_standard_poset(GenSpec("powerset", 3))
        a = random_commuting_family(p, "join-translations", 2, 42)
        b = random_commuting_family(p, "join-translations", 2, 42)
        assert [f.table for f in a] == [f.table for f in b]
        assert a.names == b.names

    @pytest.mark.parametrize("strategy", ["powers", "join-translations"])
    def test_always_commutative_and_isotone(self, strategy):
        for seed in range(1000):
            if strategy == "powers":
                p = random_poset(2 + seed % 11, seed * 7919)
            else:
                p = make_standard_poset(LATTICE_SPECS[seed % len(LATTICE_SPECS)])
            fam = random_commuting_family(p, strategy, 1 + seed % 3, seed)
            assert is_commutative_family(fam)
            assert all(is_isotone(f) for f in fam)

    def test_random_isotone_map_on_bowtie(self):
        # a, b both below c and d: images of a and b may lack a common upper bound
        p = build_poset(["0", "a", "b", "c", "d", "e"],
                        [("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("a", "d"), ("b", "d"),
                         ("c", "e"), ("d", "e")])
        rng = SplitMix64(3)
        for _ in range(300):
            assert is_isotone(random_isotone_map(p, rng))

    def test_unknown_strategy(self, chain3):
        with pytest.raises(BadSpec):
            random_commuting_family(chain3, "shuffle", 2, 0)

    def test_join_strategy_needs_lattice(self, vposet):
        with pytest.raises(NotALattice):
            random_commuting_family(vposet, "join-translations", 2, 0)


def test_make_instance_is_deterministic():
    spec = GenSpec("random", 9, rng_seed=77)
    p1, f1, m1 = make_instance(spec, "powers", 3)
    p2, f2, m2 = make_instance(spec, "powers", 3)
    assert p1 == p2 and [f.table for f in f1] == [f.table for f in f2] and m1 == m2
    assert m1["rng"] == "splitmix64"
    assert m1["generator"]["strategy"] == "powers"
