"""Core tournament type: encoding, elementary operations, serialization."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_has_cyclic_triangle, brute_strongly_connected
from tourneykit import (
    Tournament,
    canonical_form,
    concat,
    make_T,
    make_cyclic,
    pair_count,
    random_tournament,
    read_edge_list,
)


def tournaments(max_n=8):
    return st.integers(0, max_n).flatmap(
        lambda n: st.builds(
            Tournament,
            st.just(n),
            st.integers(0, (1 << pair_count(n)) - 1),
        )
    )


def transitive(n):
    return make_T((1,) * n)


class TestEncoding:
    def test_every_pair_oriented_once(self):
        rng = random.Random(0)
        for _ in range(200):
            t = random_tournament(rng.randrange(0, 9), rng)
            for u in range(t.n):
                for v in range(u + 1, t.n):
                    assert t.beats(u, v) != t.beats(v, u)

    def test_out_degrees_sum(self):
        for n in range(9):
            t = random_tournament(n, 42)
            assert sum(t.out_degrees()) == n * (n - 1) // 2

    def test_no_self_loops(self):
        t = random_tournament(5, 1)
        with pytest.raises(ValueError):
            t.beats(2, 2)

    def test_small_sizes_are_legal(self):
        assert Tournament(0).is_transitive()
        assert Tournament(0).is_strongly_connected()
        assert Tournament(1).is_transitive()
        assert Tournament(1).is_strongly_connected()


class TestInduced:
    def test_restriction_of_linear_order(self):
        assert transitive(5).induced([0, 2, 4]) == transitive(3)

    def test_identity_subset(self):
        t = random_tournament(7, 3)
        assert t.induced(range(7)) == t

    def test_two_subsets_of_triangle(self):
        cyc = make_T((3,))
        # only one tournament on 2 vertices, up to isomorphism
        forms = {canonical_form(cyc.induced(pair)) for pair in ([0, 1], [0, 2], [1, 2])}
        assert len(forms) == 1

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            transitive(3).induced([0, 3])
        with pytest.raises(ValueError):
            transitive(3).induced([0, 0, 1])

    @given(tournaments(), st.data())
    @settings(max_examples=80, deadline=None)
    def test_composition(self, t, data):
        outer = sorted(
            data.draw(st.sets(st.integers(0, max(t.n - 1, 0)), max_size=t.n))
        ) if t.n else []
        inner_idx = sorted(
            data.draw(st.sets(st.integers(0, max(len(outer) - 1, 0)),
                              max_size=len(outer)))
        ) if outer else []
        via_two = t.induced(outer).induced(inner_idx)
        composed = t.induced([outer[i] for i in inner_idx])
        assert via_two == composed


class TestDegreesAndPredicates:
    def test_source_degree(self):
        assert transitive(4).out_degree(0) == 3

    def test_triangle_degrees(self):
        cyc = make_T((3,))
        assert [cyc.out_degree(v) for v in range(3)] == [1, 1, 1]

    def test_cyclic4_first_vertex(self):
        assert make_cyclic(4).out_degree(0) == 2

    def test_transitive_predicate(self):
        assert transitive(6).is_transitive()
        assert not make_T((3,)).is_transitive()
        assert not make_cyclic(6).is_transitive()

    def test_transitive_iff_no_cyclic_triangle_exhaustive(self):
        for n in range(6):
            for code in range(1 << pair_count(n)):
                t = Tournament(n, code)
                assert t.is_transitive() == (not brute_has_cyclic_triangle(t))

    @given(tournaments(7))
    @settings(max_examples=150, deadline=None)
    def test_transitive_iff_no_cyclic_triangle(self, t):
        assert t.is_transitive() == (not brute_has_cyclic_triangle(t))

    def test_strong_connectivity_examples(self):
        assert make_T((3,)).is_strongly_connected()
        assert make_cyclic(4).is_strongly_connected()
        for n in range(2, 7):
            assert not transitive(n).is_strongly_connected()

    @given(tournaments(7))
    @settings(max_examples=120, deadline=None)
    def test_strong_connectivity_vs_bipartition(self, t):
        assert t.is_strongly_connected() == brute_strongly_connected(t)


class TestConcat:
    def test_two_singles(self):
        assert concat(Tournament(1), Tournament(1)) == transitive(2)

    def test_transitive_blocks(self):
        assert concat(transitive(3), transitive(4)) == transitive(7)

    def test_triangles_give_stacked_pair(self):
        got = concat(make_T((3,)), make_T((3,)))
        assert canonical_form(got) == canonical_form(make_T((3, 3)))

    @given(tournaments(5), tournaments(5))
    @settings(max_examples=60, deadline=None)
    def test_restrictions_recover_parts(self, g1, g2):
        w = concat(g1, g2)
        assert w.induced(range(g1.n)) == g1
        assert w.induced(range(g1.n, g1.n + g2.n)) == g2
        for i in range(g1.n):
            for j in range(g1.n, w.n):
                assert w.beats(i, j)


class TestSerialization:
    def test_trn_round_trip(self):
        for n in (0, 1, 2, 5, 9):
            t = random_tournament(n, n)
            assert Tournament.from_trn(t.to_trn()) == t

    def test_trn_shape(self):
        text = make_T((1, 3)).to_trn()
        lines = text.splitlines()
        assert lines[0] == "4"
        assert len(lines[1]) == 6 and set(lines[1]) <= {"0", "1"}

    def test_trn_rejects_bad_body(self):
        with pytest.raises(ValueError):
            Tournament.from_trn("3\n01")
        with pytest.raises(ValueError):
            Tournament.from_trn("2\n2")

    def test_edge_list(self):
        t = read_edge_list("0 1\n2 0\n1 2\n")
        assert canonical_form(t) == canonical_form(make_T((3,)))

    def test_edge_list_rejects_incomplete(self):
        with pytest.raises(ValueError):
            read_edge_list("0 1\n1 2\n")

    def test_edge_list_rejects_double_orientation(self):
        with pytest.raises(ValueError):
            read_edge_list("0 1\n1 0\n")
