import itertools

import pytest

from localelab import frames
from localelab import sublocales as subl
from localelab.sublocales import (CapExceeded, MixedFrames,
                                  NotASublocale, Nucleus, Sublocale)

import oracle


def members(frame, mask):
    return Sublocale(frame, frames.elements_of_mask(mask))


class TestSublocaleValidation:
    def test_must_contain_top(self, chain3):
        with pytest.raises(NotASublocale):
            Sublocale(chain3, {0})

    def test_must_be_meet_closed(self, square):
        p, q = sorted(frames.primes(square))
        with pytest.raises(NotASublocale):
            Sublocale(square, {p, q, square.top})

    def test_must_be_implication_closed(self, square):
        p, q = sorted(frames.primes(square))
        # {0, q, 1} fails: p -> 0 = q is in, but q -> 0 = p is not
        with pytest.raises(NotASublocale):
            Sublocale(square, {square.bottom, q, square.top})

    def test_out_of_range(self, chain3):
        with pytest.raises(NotASublocale):
            Sublocale(chain3, {7})


class TestEnumeration:
    def test_three_chain_is_the_four_bruteforce_subsets(self, chain3):
        expected = oracle.assembly_bruteforce(chain3)
        got = sorted(s.mask for s in subl.enumerate_assembly(chain3))
        assert got == expected
        assert len(got) == 4
        sets = {s.members for s in subl.enumerate_assembly(chain3)}
        assert sets == {frozenset({2}), frozenset({0, 2}),
                        frozenset({1, 2}), frozenset({0, 1, 2})}

    def test_two_chain(self, chain2):
        assert {s.members for s in subl.enumerate_assembly(chain2)} == \
            {frozenset({1}), frozenset({0, 1})}

    def test_square(self, square):
        assert len(subl.enumerate_assembly(square)) == 4

    def test_matches_bruteforce_on_corpus(self, small_corpus):
        for f in (f for f in small_corpus if f.n <= 10):
            assert sorted(s.mask for s in subl.enumerate_assembly(f)) == \
                oracle.assembly_bruteforce(f)

    def test_cap_exceeded(self, square):
        with pytest.raises(CapExceeded) as exc:
            subl.enumerate_assembly(square, cap=2)
        assert exc.value.count == 3


class TestGenerate:
    def test_empty_seed_gives_zero(self, chain3):
        assert subl.generate_sublocale(chain3, ()).members == {chain3.top}

    def test_bottom_seed_in_chain(self, chain3):
        assert subl.generate_sublocale(chain3, {0}).members == {0, 2}

    def test_full_seed_gives_whole(self, chain3):
        assert subl.generate_sublocale(chain3, range(3)) == subl.whole(chain3)

    def test_closure_is_smallest(self, small_corpus):
        for f in (f for f in small_corpus if f.n <= 8):
            masks = oracle.assembly_bruteforce(f)
            for seed_mask in range(1 << f.n):
                got = subl.generate_sublocale(
                    f, frames.elements_of_mask(seed_mask))
                smallest = min((m for m in masks if m & seed_mask == seed_mask),
                               key=lambda m: bin(m).count("1"))
                assert got.mask == smallest


class TestNucleus:
    def test_identity_nucleus_gives_whole(self, chain3):
        nu = Nucleus(chain3, range(3))
        assert subl.nucleus_to_sublocale(nu) == subl.whole(chain3)

    def test_constant_top_gives_zero(self, chain3):
        nu = Nucleus(chain3, [2, 2, 2])
        assert subl.nucleus_to_sublocale(nu) == subl.zero(chain3)

    def test_formula_on_chain(self, chain3):
        nu = subl.sublocale_to_nucleus(Sublocale(chain3, {0, 2}))
        assert nu(1) == 2 and nu(0) == 0

    def test_invalid_nucleus_rejected(self, chain3):
        with pytest.raises(ValueError):
            Nucleus(chain3, [0, 0, 2])     # not inflationary at 1

    def test_roundtrip_both_ways(self, small_corpus):
        for f in (f for f in small_corpus if f.n <= 8):
            for s in subl.enumerate_assembly(f):
                nu = subl.sublocale_to_nucleus(s)
                assert subl.nucleus_to_sublocale(nu) == s
                assert subl.sublocale_to_nucleus(
                    subl.nucleus_to_sublocale(nu)) == nu


class TestOpenClosedBoolean:
    def test_three_chain_examples(self, chain3):
        assert subl.open_sublocale(chain3, 1).members == {0, 2}
        assert subl.closed_sublocale(chain3, 0) == subl.whole(chain3)
        assert subl.closed_sublocale(chain3, 2) == subl.zero(chain3)
        assert subl.boolean_sublocale(chain3, 0).members == {0, 2}
        assert subl.boolean_sublocale(chain3, 1).members == {1, 2}

    def test_all_validate_on_corpus(self, small_corpus):
        for f in small_corpus:
            for a in range(f.n):
                subl.open_sublocale(f, a)
                subl.closed_sublocale(f, a)
                subl.boolean_sublocale(f, a)

    def test_one_point_sublocales_of_primes(self, small_corpus):
        for f in small_corpus:
            for p in frames.primes(f):
                assert subl.boolean_sublocale(f, p).members == {p, f.top}


class TestJoinMeet:
    def test_chain_join(self, chain3):
        a = Sublocale(chain3, {0, 2})
        b = Sublocale(chain3, {1, 2})
        assert subl.sublocale_join(chain3, [a, b]) == subl.whole(chain3)

    def test_zero_is_join_unit(self, small_corpus):
        for f in (f for f in small_corpus if f.n <= 6):
            for s in subl.enumerate_assembly(f):
                assert subl.sublocale_join(f, [s, subl.zero(f)]) == s

    def test_empty_meet_is_whole(self, chain3):
        assert subl.sublocale_meet(chain3, []) == subl.whole(chain3)

    def test_empty_join_is_zero(self, chain3):
        assert subl.sublocale_join(chain3, []) == subl.zero(chain3)

    def test_mixed_frames_rejected(self, chain3, square):
        with pytest.raises(MixedFrames):
            subl.sublocale_join(chain3, [subl.whole(chain3),
                                         subl.whole(square)])

    def test_join_matches_bruteforce(self, small_corpus):
        for f in (f for f in small_corpus if f.n <= 6):
            assembly = list(subl.enumerate_assembly(f))
            for a, b in itertools.product(assembly, repeat=2):
                assert subl.sublocale_join(f, [a, b]) == \
                    oracle.join_bruteforce(f, [a, b])


class TestClosureDensity:
    def test_boolean_bottom_is_dense(self, small_corpus):
        for f in small_corpus:
            assert subl.is_dense(subl.boolean_sublocale(f, f.bottom))

    def test_chain_closed_is_closed(self, chain3):
        s = Sublocale(chain3, {1, 2})
        assert subl.closure(s) == s

    def test_whole_dense_and_codense(self, small_corpus):
        for f in small_corpus:
            assert subl.is_dense(subl.whole(f))
            assert subl.is_codense(subl.whole(f))

    def test_closure_is_upset_of_meet(self, small_corpus):
        for f in (f for f in small_corpus if f.n <= 8):
            for s in subl.enumerate_assembly(f):
                c = subl.closure(s)
                assert c.members == {x for x in range(f.n)
                                     if f.leq[f.meet_of(s.members), x]}
                assert s.members <= c.members

    def test_zero_codense_iff_trivial(self, chain3):
        # on a chain with 0 < a < 1, nu of {1} sends a to 1
        assert not subl.is_codense(subl.zero(chain3))


class TestDifference:
    def test_difference_zero_iff_subset(self, small_corpus):
        for f in (f for f in small_corpus if f.n <= 6):
            assembly = list(subl.enumerate_assembly(f))
            for s, t in itertools.product(assembly, repeat=2):
                d = subl.difference(s, t)
                assert (d == subl.zero(f)) == (s.members <= t.members)

    def test_complement_of_closed_is_open(self, chain3):
        assert subl.complement_of(subl.closed_sublocale(chain3, 1)) == \
            subl.open_sublocale(chain3, 1)

    def test_matches_least_solution_oracle(self, small_corpus):
        for f in (f for f in small_corpus if f.n <= 5):
            masks = oracle.assembly_bruteforce(f)
            assembly = list(subl.enumerate_assembly(f))
            for s, t in itertools.product(assembly, repeat=2):
                assert subl.difference(s, t) == \
                    oracle.least_difference(f, masks, s, t)

    def test_distributes_over_intersections(self, square):
        assembly = list(subl.enumerate_assembly(square))
        for s, t, r in itertools.product(assembly, repeat=3):
            lhs = subl.difference(s, subl.sublocale_meet(square, [t, r]))
            rhs = subl.sublocale_join(
                square, [subl.difference(s, t), subl.difference(s, r)])
            assert lhs == rhs

    def test_supplement_joins_to_whole(self, small_corpus):
        for f in (f for f in small_corpus if f.n <= 6):
            for s in subl.enumerate_assembly(f):
                assert subl.sublocale_join(f, [s, subl.supplement(s)]) == \
                    subl.whole(f)

    def test_finite_assemblies_are_boolean(self, small_corpus):
        # every sublocale of a finite frame is complemented
        for f in (f for f in small_corpus if f.n <= 6):
            for s in subl.enumerate_assembly(f):
                c = subl.complement_of(s)
                assert subl.sublocale_meet(f, [s, c]) == subl.zero(f)
                assert subl.sublocale_join(f, [s, c]) == subl.whole(f)


class TestAssemblyOrder:
    def test_three_chain_order_frame(self, chain3):
        assembly = subl.enumerate_assembly(chain3)
        order = assembly.order_frame
        assert order.n == 4
        assert assembly[order.top] == subl.zero(chain3)
        assert assembly[order.bottom] == subl.whole(chain3)

    def test_meet_join_agree_with_set_ops(self, small_corpus):
        for f in (f for f in small_corpus if f.n <= 6):
            assembly = subl.enumerate_assembly(f)
            order = assembly.order_frame
            for i, s in enumerate(assembly):
                for j, t in enumerate(assembly):
                    assert assembly[int(order.join[i, j])].members == \
                        s.members & t.members
                    assert assembly[int(order.meet[i, j])] == \
                        subl.sublocale_join(f, [s, t])

    def test_zero_dimensionality(self, small_corpus):
        # every sublocale is the meet of the basic complemented ones above it
        for f in (f for f in small_corpus if f.n <= 6):
            basics = [subl.sublocale_join(
                f, [subl.open_sublocale(f, x), subl.closed_sublocale(f, y)])
                for x in range(f.n) for y in range(f.n)]
            for s in subl.enumerate_assembly(f):
                acc = frozenset(range(f.n))
                for b in basics:
                    if s.members <= b.members:
                        acc &= b.members
                assert acc == s.members
