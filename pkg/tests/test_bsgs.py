import random

import pytest

import bruteforce as bf
from solvrad.bsgs import (
    CapExceededError,
    GeneratorSet,
    MembershipError,
    build_bsgs,
    centralizer,
    class_of,
    conjugacy_classes,
    enumerate_elements,
    normal_closure,
    random_element,
    same_subgroup,
)
from solvrad.perm import DegreeMismatchError, Permutation, parse_cycles

SMALL_SPECS = [
    "S(3)", "S(4)", "S(5)", "A(4)", "A(5)", "C(12)", "D(4)", "D(5)", "D(6)",
    "PSL2(5)", "PSL2(7)", "direct(C(4),S(3))", "direct(C(5),A(5))",
]


def brute_elements(group):
    return bf.closure([g.images for g in group.generators], group.degree)


class TestBuild:
    def test_s5_order(self, group_of):
        assert group_of("S(5)").order == 120

    def test_trivial_group(self):
        g = build_bsgs(GeneratorSet(4, []))
        assert g.order == 1
        assert g.base == ()

    def test_mixed_degrees_rejected(self):
        with pytest.raises(DegreeMismatchError):
            GeneratorSet(4, [parse_cycles("(1,2)", 4), parse_cycles("(1,2)", 5)])

    @pytest.mark.parametrize("spec", SMALL_SPECS)
    def test_order_matches_brute_force_closure(self, spec, group_of):
        g = group_of(spec)
        assert g.order == len(brute_elements(g))

    @pytest.mark.parametrize("spec", ["S(4)", "A(5)", "D(6)", "PSL2(5)"])
    def test_strong_generators_are_members(self, spec, group_of):
        g = group_of(spec)
        for s in g.strong_generators:
            assert g.contains(s)

    def test_order_is_product_of_orbit_sizes(self, group_of):
        g = group_of("S(5)")
        n = 1
        for t in g.transversals:
            n *= len(t)
        assert n == g.order


class TestContains:
    def test_even_permutation_in_a5(self, group_of):
        assert group_of("A(5)").contains(parse_cycles("(1,2,3)", 5))

    def test_odd_permutation_not_in_a5(self, group_of):
        assert not group_of("A(5)").contains(parse_cycles("(1,2)", 5))

    def test_identity_always_member(self, group_of):
        for spec in ("S(4)", "C(12)", "PSL2(5)"):
            g = group_of(spec)
            assert g.contains(Permutation.identity(g.degree))

    @pytest.mark.parametrize("spec", ["S(4)", "A(5)", "D(6)", "direct(C(4),S(3))"])
    def test_sound_and_complete_vs_brute_force(self, spec, group_of):
        g = group_of(spec)
        members = brute_elements(g)
        assert {p.images for p in enumerate_elements(g)} == members
        rng = random.Random(11)
        for _ in range(50):
            images = list(range(1, g.degree + 1))
            rng.shuffle(images)
            p = Permutation(images)
            assert g.contains(p) == (p.images in members)

    def test_degree_mismatch(self, group_of):
        with pytest.raises(DegreeMismatchError):
            group_of("S(4)").contains(parse_cycles("(1,2)", 5))


class TestNormalClosure:
    def test_three_cycle_closes_to_a5(self, group_of):
        nc = normal_closure(group_of("S(5)"), [parse_cycles("(1,2,3)", 5)])
        assert nc.order == 60
        # confirm by element count of the brute-force closure of all conjugates
        s5 = brute_elements(group_of("S(5)"))
        conjugates = {bf.conj(a, (2, 3, 1, 4, 5)) for a in s5}
        assert len(bf.span(conjugates, 5)) == 60

    def test_identity_seed_gives_trivial_group(self, group_of):
        nc = normal_closure(group_of("S(4)"), [Permutation.identity(4)])
        assert nc.order == 1

    def test_central_factor_of_direct_product(self, group_of):
        g = group_of("direct(C(5),A(5))")
        nc = normal_closure(g, [parse_cycles("(1,2,3,4,5)", 10)])
        assert nc.order == 5

    def test_seed_not_member_rejected(self, group_of):
        with pytest.raises(MembershipError):
            normal_closure(group_of("A(5)"), [parse_cycles("(1,2)", 5)])

    @pytest.mark.parametrize("spec,seed", [("S(5)", "(1,2)"), ("A(5)", "(1,2,3)")])
    def test_conjugation_invariance(self, spec, seed, group_of):
        g = group_of(spec)
        nc = normal_closure(g, [parse_cycles(seed, g.degree)])
        for a in g.generators:
            for s in nc.generators:
                assert nc.contains(a * s * a.inverse())


class TestCentralizer:
    def test_five_cycle_in_s5(self, group_of):
        c = centralizer(group_of("S(5)"), parse_cycles("(1,2,3,4,5)", 5))
        assert c.order == 5

    def test_identity_centralizer_is_whole_group(self, group_of):
        g = group_of("S(4)")
        c = centralizer(g, Permutation.identity(4))
        assert same_subgroup(c, g)

    def test_double_transposition_in_s4(self, group_of):
        c = centralizer(group_of("S(4)"), parse_cycles("(1,2)(3,4)", 4))
        assert c.order == 8

    def test_matches_brute_force(self, group_of):
        g = group_of("D(6)")
        x = parse_cycles("(1,2,3,4,5,6)", 6)
        c = centralizer(g, x)
        brute = bf.centralizer_set(brute_elements(g), x.images)
        assert {p.images for p in enumerate_elements(c)} == brute

    def test_elements_commute_with_x(self, group_of):
        g = group_of("S(5)")
        x = parse_cycles("(1,2)(3,4)", 5)
        c = centralizer(g, x)
        for p in enumerate_elements(c):
            assert p * x == x * p

    def test_non_member_rejected(self, group_of):
        with pytest.raises(MembershipError):
            centralizer(group_of("A(5)"), parse_cycles("(1,2)", 5))


class TestConjugacyClasses:
    def test_s4_class_sizes(self, classes_of):
        assert sorted(c.class_size for c in classes_of("S(4)")) == [1, 3, 6, 6, 8]

    def test_abelian_group_has_singletons(self, classes_of):
        cls = classes_of("C(5)")
        assert len(cls) == 5
        assert all(c.class_size == 1 for c in cls)

    def test_a5_class_sizes(self, classes_of):
        assert sorted(c.class_size for c in classes_of("A(5)")) == [1, 12, 12, 15, 20]

    @pytest.mark.parametrize("spec", ["S(4)", "A(5)", "D(6)", "direct(C(4),S(3))"])
    def test_classes_partition_the_group(self, spec, group_of, classes_of):
        g = group_of(spec)
        cls = classes_of(spec)
        assert sum(c.class_size for c in cls) == g.order
        seen = set()
        for c in cls:
            for e in c.elements:
                assert e not in seen
                seen.add(e)

    def test_matches_brute_force_partition(self, group_of, classes_of):
        g = group_of("S(4)")
        brute = {frozenset(c) for c in bf.classes_set(brute_elements(g))}
        mine = {frozenset(p.images for p in c.elements) for c in classes_of("S(4)")}
        assert mine == brute

    def test_elements_share_cycle_type(self, classes_of):
        for c in classes_of("S(5)"):
            want = c.representative.cycle_type()
            assert all(e.cycle_type() == want for e in c.elements)

    def test_orbit_stabilizer_for_every_class(self, group_of, classes_of):
        for spec in ("S(4)", "S(5)", "A(5)", "D(6)", "PSL2(5)"):
            g = group_of(spec)
            for c in classes_of(spec):
                cz = centralizer(g, c.representative)
                assert c.class_size * cz.order == g.order

    def test_cap_exceeded(self, group_of):
        with pytest.raises(CapExceededError):
            conjugacy_classes(group_of("S(5)"), element_cap=100)

    def test_representative_is_lex_minimal(self, classes_of):
        for c in classes_of("S(4)"):
            assert min(e.images for e in c.elements) == c.representative.images

    def test_conjugator_maps_rep_to_member(self, group_of, classes_of):
        g = group_of("S(5)")
        for c in classes_of("S(5)"):
            h = c.elements[-1]
            x = c.conjugator(h)
            assert x * c.representative * x.inverse() == h

    def test_class_of_single_element(self, group_of, classes_of):
        g = group_of("A(5)")
        p = parse_cycles("(1,2,3,4,5)", 5)
        c = class_of(g, p)
        match = [d for d in classes_of("A(5)") if d.representative == c.representative]
        assert len(match) == 1
        assert {e.images for e in c.elements} == {
            e.images for e in match[0].elements
        }


class TestRandomGeneratorStress:
    """Arbitrary seeded generator sets, cross-checked against brute force."""

    @pytest.mark.parametrize("seed", range(40))
    def test_order_membership_enumeration(self, seed):
        rng = random.Random(seed)
        degree = rng.randint(2, 7)
        gens = []
        for _ in range(rng.randint(1, 3)):
            images = list(range(1, degree + 1))
            rng.shuffle(images)
            gens.append(Permutation(images))
        g = build_bsgs(GeneratorSet(degree, gens))
        brute = bf.closure([p.images for p in gens], degree)
        assert g.order == len(brute)
        assert {p.images for p in enumerate_elements(g)} == brute

    @pytest.mark.parametrize("seed", range(15))
    def test_normal_closure_matches_brute_force(self, seed):
        rng = random.Random(100 + seed)
        degree = rng.randint(3, 6)
        gens = []
        for _ in range(2):
            images = list(range(1, degree + 1))
            rng.shuffle(images)
            gens.append(Permutation(images))
        g = build_bsgs(GeneratorSet(degree, gens))
        elements = sorted(bf.closure([p.images for p in gens], degree))
        seed_el = Permutation(list(elements[rng.randrange(len(elements))]))
        nc = normal_closure(g, [seed_el])
        conjugates = {bf.conj(a, seed_el.images) for a in elements}
        brute = bf.span(conjugates, degree)
        assert {p.images for p in enumerate_elements(nc)} == brute

    @pytest.mark.parametrize("seed", range(15))
    def test_centralizer_matches_brute_force(self, seed):
        rng = random.Random(200 + seed)
        degree = rng.randint(3, 6)
        gens = []
        for _ in range(2):
            images = list(range(1, degree + 1))
            rng.shuffle(images)
            gens.append(Permutation(images))
        g = build_bsgs(GeneratorSet(degree, gens))
        elements = sorted(bf.closure([p.images for p in gens], degree))
        x = Permutation(list(elements[rng.randrange(len(elements))]))
        c = centralizer(g, x)
        brute = bf.centralizer_set(set(elements), x.images)
        assert {p.images for p in enumerate_elements(c)} == brute


class TestRandomAndEnumerate:
    def test_samples_are_members(self, group_of):
        g = group_of("A(5)")
        rng = random.Random(3)
        for _ in range(100):
            assert g.contains(random_element(g, rng))

    def test_fixed_seed_reproducible_sequence(self, group_of):
        g = group_of("S(5)")
        rng1, rng2 = random.Random(42), random.Random(42)
        s1 = [random_element(g, rng1) for _ in range(20)]
        s2 = [random_element(g, rng2) for _ in range(20)]
        assert s1 == s2

    def test_coupon_collector_s4(self, group_of):
        g = group_of("S(4)")
        rng = random.Random(5)
        seen = {random_element(g, rng).images for _ in range(10 * g.order)}
        assert len(seen) == g.order

    def test_trivial_group_sampling(self):
        g = build_bsgs(GeneratorSet(3, []))
        assert random_element(g, 0) == Permutation.identity(3)

    def test_uniformity_with_fixed_seed(self, group_of):
        # exact transversal sampling: frequencies over S(3) stay balanced
        g = group_of("S(3)")
        rng = random.Random(123)
        counts = {}
        n = 6000
        for _ in range(n):
            key = random_element(g, rng).images
            counts[key] = counts.get(key, 0) + 1
        assert len(counts) == 6
        assert max(counts.values()) - min(counts.values()) < 200

    def test_enumerate_s3(self, group_of):
        els = list(enumerate_elements(group_of("S(3)")))
        assert len(els) == 6
        assert len({e.images for e in els}) == 6

    def test_enumerate_trivial(self):
        g = build_bsgs(GeneratorSet(2, []))
        assert list(enumerate_elements(g)) == [Permutation.identity(2)]

    def test_enumerate_cap(self, group_of):
        with pytest.raises(CapExceededError):
            list(enumerate_elements(group_of("S(5)"), cap=50))

    @pytest.mark.parametrize("spec", ["S(4)", "D(6)", "PSL2(5)"])
    def test_enumerate_count_equals_order(self, spec, group_of):
        g = group_of(spec)
        els = list(enumerate_elements(g))
        assert len(els) == g.order
        assert len({e.images for e in els}) == g.order

    def test_enumerate_sz8_under_cap(self, sz8):
        count = sum(1 for _ in enumerate_elements(sz8, cap=50_000))
        assert count == 29120
