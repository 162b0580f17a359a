"""Canonical forms, isomorphism, automorphisms, induced containment."""

import math
import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    brute_contains_induced,
    brute_isomorphic,
    perm_images,
)
from tourneykit import (
    InfeasibleSizeError,
    Tournament,
    automorphism_order,
    canonical_form,
    contains_induced,
    is_isomorphic,
    make_M,
    make_T,
    make_cyclic,
    make_moon_tower,
    pair_count,
    random_tournament,
)


def tournaments(max_n=7):
    return st.integers(0, max_n).flatmap(
        lambda n: st.builds(
            Tournament, st.just(n), st.integers(0, (1 << pair_count(n)) - 1)
        )
    )


class TestCanonicalForm:
    def test_relabelling_invariance(self):
        rng = random.Random(0)
        for _ in range(100):
            n = rng.randrange(0, 9)
            t = random_tournament(n, rng)
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_form(t) == canonical_form(t.relabel(perm))

    def test_idempotent(self):
        rng = random.Random(1)
        for _ in range(60):
            t = random_tournament(rng.randrange(0, 10), rng)
            form = canonical_form(t)
            assert canonical_form(form.to_tournament()) == form

    def test_three_vertex_classes(self):
        forms = {canonical_form(Tournament(3, b)) for b in range(8)}
        assert len(forms) == 2

    def test_four_vertex_classes(self):
        forms = {canonical_form(Tournament(4, b)) for b in range(64)}
        assert len(forms) == 4

    def test_line_is_lexicographic_minimum(self):
        # full brute-force check of the canonical target on all 4-vertex codes
        for code in range(64):
            line = canonical_form(Tournament(4, code)).bits
            best = min(
                Tournament(4, img).body_line() for img in perm_images(4, code)
            )
            assert line == best

    def test_line_is_lexicographic_minimum_n5(self):
        from itertools import permutations

        perms = [list(p) for p in permutations(range(5))]
        for code in range(1 << 10):
            t = Tournament(5, code)
            got = canonical_form(t).bits
            assert got == min(t.relabel(p).body_line() for p in perms)

    def test_dominates_random_relabellings_on_hard_hosts(self):
        rng = random.Random(3)
        for t in (make_cyclic(16), make_moon_tower(3)):
            line = canonical_form(t).bits
            for _ in range(2000):
                p = list(range(t.n))
                rng.shuffle(p)
                assert line <= t.relabel(p).body_line()

    def test_serializes_as_trn_body(self):
        t = make_cyclic(5)
        form = canonical_form(t)
        assert form.to_tournament().body_line() == form.bits


class TestIsomorphism:
    def test_relabelled_copy(self):
        t = random_tournament(7, 5)
        assert is_isomorphic(t, t.relabel([3, 1, 0, 6, 2, 5, 4]))

    def test_different_three_vertex(self):
        assert not is_isomorphic(make_T((1, 1, 1)), make_T((3,)))

    def test_m_family_base_is_triangle(self):
        assert is_isomorphic(make_M((1, 1, 1), 1), make_T((3,)))

    @given(tournaments(5), tournaments(5))
    @settings(max_examples=120, deadline=None)
    def test_agrees_with_permutation_search(self, t1, t2):
        assert is_isomorphic(t1, t2) == brute_isomorphic(t1, t2)


class TestAutomorphisms:
    def test_rigid_linear_order(self):
        for n in range(1, 8):
            assert automorphism_order(make_T((1,) * n)) == 1

    def test_cyclic_triangle(self):
        assert automorphism_order(make_T((3,))) == 3

    def test_moon_tower_level_two(self):
        assert automorphism_order(make_moon_tower(2)) == 81

    def test_rotational_prime_tournament(self):
        # quadratic-residue tournament on 11 vertices has 55 automorphisms
        qr = {1, 3, 4, 5, 9}
        paley = Tournament.from_beats(11, lambda i, j: (j - i) % 11 in qr)
        assert automorphism_order(paley) == 55

    def test_divides_factorial(self):
        rng = random.Random(2)
        for _ in range(60):
            n = rng.randrange(1, 8)
            t = random_tournament(n, rng)
            assert math.factorial(n) % automorphism_order(t) == 0

    def test_counts_all_fixing_permutations(self):
        rng = random.Random(3)
        for _ in range(20):
            n = rng.randrange(1, 6)
            t = random_tournament(n, rng)
            brute = sum(
                1 for p in permutations(range(n)) if t.relabel(list(p)) == t
            )
            assert automorphism_order(t) == brute

    def test_bound_enforced(self):
        with pytest.raises(InfeasibleSizeError):
            automorphism_order(make_moon_tower(3))


class TestContainment:
    def test_self_containment_is_identity(self):
        t = random_tournament(6, 9)
        w = contains_induced(t, t)
        assert w is not None and w.assignment == tuple(range(6))

    def test_acyclic_host_has_no_triangle(self):
        assert contains_induced(make_T((1,) * 5), make_T((3,))) is None

    def test_cyclic_host_contains_cycle(self):
        for n in (2, 3, 4, 5):
            w = contains_induced(make_M((1, 0, 0), n), make_cyclic(2 * n))
            assert w is not None
            assert w.validate(make_M((1, 0, 0), n), pattern=make_cyclic(2 * n))

    def test_known_embedding_of_cyclic_in_flag_host(self):
        # x_2, x_4, ..., x_2n then y_1..y_n induce the cyclic tournament
        for n in (3, 4, 5):
            host = make_M((1, 0, 0), n)
            subset = [2 * i + 1 for i in range(n)] + [2 * n + i for i in range(n)]
            assert is_isomorphic(host.induced(subset), make_cyclic(2 * n))

    @given(tournaments(6), tournaments(4))
    @settings(max_examples=80, deadline=None)
    def test_agrees_with_subset_scan(self, t, h):
        got = contains_induced(t, h)
        assert (got is not None) == brute_contains_induced(t, h)
        if got is not None:
            assert got.validate(t, pattern=h)

    def test_witness_subsets_match_canonical_scan(self):
        rng = random.Random(4)
        for _ in range(20):
            t = random_tournament(7, rng)
            h = random_tournament(4, rng)
            present = canonical_form(h).bits in {
                canonical_form(t.induced(c)).bits
                for c in combinations(range(7), 4)
            }
            assert (contains_induced(t, h) is not None) == present
