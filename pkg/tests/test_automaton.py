import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rvacheck import (
    AlphabetSpec,
    Automaton,
    BLANK,
    STAR,
    is_weak,
    predecessor_lists,
    sccs,
    trim_accessible,
)
from rvacheck.oracle import gen_random_weak


class TestAlphabet:
    def test_star_is_last(self):
        spec = AlphabetSpec(2, 1)
        assert spec.letter_index(STAR) == 2
        assert list(spec.letters()) == [(0,), (1,), STAR]

    def test_component_zero_major_order(self):
        spec = AlphabetSpec(2, 2)
        assert spec.letter_index((1, 0)) == 2
        assert spec.letter_index((0, 1)) == 1

    def test_fixed_component_indexing(self):
        spec = AlphabetSpec(2, 2, fixed=frozenset({0}))
        assert spec.num_letters == 3
        assert spec.letter_index((BLANK, 1)) in (0, 1)
        with pytest.raises(ValueError):
            spec.letter_index((1, 1))

    @pytest.mark.parametrize(
        "spec",
        [
            AlphabetSpec(2, 1),
            AlphabetSpec(3, 2),
            AlphabetSpec(2, 3, fixed=frozenset({1})),
            AlphabetSpec(3, 2, "sequential"),
            AlphabetSpec(2, 2, "sequential", frozenset({1})),
        ],
    )
    def test_index_bijection(self, spec):
        seen = [spec.letter_index(a) for a in spec.letters()]
        assert sorted(seen) == list(range(spec.num_letters))
        for i in range(spec.num_letters):
            assert spec.letter_index(spec.letter_at(i)) == i

    def test_letter_counts(self):
        assert AlphabetSpec(3, 2).num_letters == 10
        assert AlphabetSpec(3, 2, "sequential").num_letters == 4
        assert AlphabetSpec(2, 3, fixed=frozenset({2})).num_letters == 5

    def test_parse_format_round_trip(self):
        spec = AlphabetSpec(3, 2)
        for letter in spec.letters():
            assert spec.parse_letter(spec.format_letter(letter)) == letter

    def test_bad_specs(self):
        with pytest.raises(ValueError):
            AlphabetSpec(1, 1)
        with pytest.raises(ValueError):
            AlphabetSpec(2, 0)
        with pytest.raises(ValueError):
            AlphabetSpec(2, 2, fixed=frozenset({5}))
        with pytest.raises(ValueError):
            AlphabetSpec(2, 3, "sequential", frozenset({0}))


class TestSteps:
    def test_fig2_single_steps(self, fig2):
        assert fig2.step(0, (2,)) == 3
        assert fig2.step(0, (0,)) == 1

    def test_fig2_run_prefix(self, fig2):
        assert fig2.run_prefix(0, [(0,), (1,)]) == 3
        assert fig2.run_prefix(4, []) == 4

    def test_run_prefix_fold_law(self, fig2):
        letters = list(fig2.alphabet.letters())
        for u, v in itertools.product(
            itertools.product(letters, repeat=2), itertools.product(letters, repeat=1)
        ):
            assert fig2.run_prefix(0, u + v) == fig2.run_prefix(fig2.run_prefix(0, u), v)

    def test_sink_stays_put(self, fig2):
        for letter in fig2.alphabet.letters():
            assert fig2.step(6, letter) == 6

    def test_totality_validated(self):
        spec = AlphabetSpec(2, 1)
        with pytest.raises(ValueError):
            Automaton(spec, 2, 0, frozenset(), [[0, 1, 5], [0, 0, 0]])
        with pytest.raises(ValueError):
            Automaton(spec, 2, 0, frozenset(), [[0, 1], [0, 0, 0]])


class TestSccs:
    def test_fig2_classification(self, fig2):
        info = sccs(fig2)
        groups = {frozenset(c) for c in info.components}
        assert groups == {
            frozenset({0}),
            frozenset({1, 2}),
            frozenset({3, 4}),
            frozenset({5}),
            frozenset({6}),
        }
        by_state = {q: info.scc_of[q] for q in range(7)}
        assert info.is_transient(by_state[0])
        assert info.is_rejecting_recurrent(by_state[1])
        assert info.is_rejecting_recurrent(by_state[3])
        assert info.is_accepting_recurrent(by_state[5])
        assert info.is_rejecting_recurrent(by_state[6])

    def test_single_accepting_loop(self):
        spec = AlphabetSpec(2, 1)
        aut = Automaton(spec, 1, 0, frozenset({0}), [[0, 0, 0]])
        info = sccs(aut)
        assert info.num_sccs == 1 and info.is_accepting_recurrent(0)

    def test_dag_automaton_all_transient_but_sink(self):
        spec = AlphabetSpec(2, 1)
        delta = [[1, 1, 1], [2, 2, 2], [2, 2, 2]]
        info = sccs(Automaton(spec, 3, 0, frozenset(), delta))
        flags = [info.is_transient(info.scc_of[q]) for q in range(3)]
        assert flags == [True, True, False]

    @given(st.integers(0, 500), st.integers(1, 10), st.sampled_from([2, 3]))
    @settings(max_examples=60, deadline=None)
    def test_matches_networkx(self, seed, n, base):
        aut = gen_random_weak(n, base, 1, "parallel", seed)
        info = sccs(aut)
        graph = nx.DiGraph()
        graph.add_nodes_from(range(n))
        for q in range(n):
            for t in aut.delta[q]:
                graph.add_edge(q, t)
        expected = {frozenset(c) for c in nx.strongly_connected_components(graph)}
        assert {frozenset(c) for c in info.components} == expected
        # reverse topological: every edge leaving a component goes to an
        # earlier-emitted component
        for cid, comp in enumerate(info.components):
            for q in comp:
                for t in aut.delta[q]:
                    assert info.scc_of[t] <= cid


class TestWeakness:
    def test_fig2_weak(self, fig2):
        assert is_weak(fig2)

    def test_mixed_scc_not_weak(self):
        spec = AlphabetSpec(2, 1)
        delta = [[1, 1, 1], [0, 0, 0]]
        aut = Automaton(spec, 2, 0, frozenset({0}), delta)
        assert not is_weak(aut)

    def test_empty_accepting_weak(self):
        spec = AlphabetSpec(2, 1)
        aut = Automaton(spec, 1, 0, frozenset(), [[0, 0, 0]])
        assert is_weak(aut)

    @given(st.integers(0, 300), st.integers(1, 8))
    @settings(max_examples=40, deadline=None)
    def test_generated_always_weak(self, seed, n):
        assert is_weak(gen_random_weak(n, 2, 1, "parallel", seed))


class TestLassoAcceptance:
    def test_fig2_paper_words(self, fig2):
        assert fig2.accepts_lasso([(2,), STAR], [(1,)])
        assert not fig2.accepts_lasso([(0,)], [(1,)])
        assert not fig2.accepts_lasso([], [(0,), (1,)])

    def test_period_must_be_nonempty(self, fig2):
        with pytest.raises(ValueError):
            fig2.accepts_lasso([(0,)], [])

    @given(st.integers(0, 200), st.data())
    @settings(max_examples=60, deadline=None)
    def test_rotation_and_unrolling_invariance(self, seed, data):
        aut = gen_random_weak(data.draw(st.integers(1, 6)), 2, 1, "parallel", seed)
        letters = list(aut.alphabet.letters())
        u = data.draw(st.lists(st.sampled_from(letters), max_size=4))
        v = data.draw(st.lists(st.sampled_from(letters), min_size=1, max_size=3))
        base = aut.accepts_lasso(u, v)
        assert aut.accepts_lasso(u + v, v) == base
        assert aut.accepts_lasso(u, v + v) == base
        assert aut.accepts_lasso(u + v[:1], v[1:] + v[:1]) == base


class TestTrim:
    def test_identity_when_all_reachable(self, fig2):
        trimmed, mapping = trim_accessible(fig2)
        assert trimmed.n == 7
        assert mapping == {q: q for q in range(7)}

    def test_drops_unreachable(self):
        spec = AlphabetSpec(2, 1)
        delta = [[0, 0, 1], [1, 1, 1], [0, 1, 2]]  # state 2 unreachable
        aut = Automaton(spec, 3, 0, frozenset({1}), delta)
        trimmed, mapping = trim_accessible(aut)
        assert trimmed.n == 2
        assert set(mapping) == {0, 1}
        letters = list(spec.letters())
        for u in itertools.product(letters, repeat=2):
            for v in itertools.product(letters, repeat=2):
                assert aut.accepts_lasso(u, v) == trimmed.accepts_lasso(u, v)

    def test_predecessors(self, fig2):
        preds = predecessor_lists(fig2)
        assert preds[3] == [0, 1, 2, 3, 4]
        assert 5 in preds[6] and 6 in preds[6]
