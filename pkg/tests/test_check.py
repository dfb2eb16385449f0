import pytest

from rvacheck import (
    AlphabetSpec,
    Automaton,
    check_rva_complement_parallel,
    check_rva_dim1,
    check_rva_parallel,
    check_rva_sequential,
    minimize_weak,
    saturation_oracle,
    trim_accessible,
)
from rvacheck.oracle import expand_witness, gen_known_rva, gen_random_weak
from rvacheck.words import lasso_to_pair, value_real


def single_value_automaton():
    """Accepts 0^*1*0^w (the value 1) but not the dual 0^**1^w."""
    spec = AlphabetSpec(2, 1)
    delta = [[0, 1, 3], [3, 3, 2], [2, 3, 3], [3, 3, 3]]
    return Automaton(spec, 4, 0, frozenset({2}), delta)


def dim1_gap_automaton():
    """Weak, minimal, shape-valid, zero-looped; accepts one encoding of 6
    while rejecting the dual.  The two fixed-digit languages that differ
    are both nonempty, so a dead-state comparison alone cannot see it."""
    spec = AlphabetSpec(2, 1)
    q0, p, x, y, z, x1, y0, d = range(8)
    delta = [
        [q0, p, d],
        [x, y, d],
        [d, d, x1],
        [z, d, y0],
        [d, d, y0],
        [d, x1, d],
        [y0, d, d],
        [d, d, d],
    ]
    return Automaton(spec, 8, q0, frozenset({x1, y0}), delta)


class TestParallelCheck:
    def test_seven_state_example_rejected(self, fig2):
        verdict = check_rva_parallel(fig2)
        assert not verdict.answer
        assert verdict.witness.kind == "zero-loop-broken"
        pair = expand_witness(verdict, "parallel")
        assert pair.verify(verdict.minimized)
        assert value_real(lasso_to_pair(pair.accepted), fig2.alphabet) == (
            value_real(lasso_to_pair(pair.rejected), fig2.alphabet)
        )

    def test_full_space_families_accepted(self):
        for b in (2, 3):
            for d in (1, 2, 3):
                assert check_rva_parallel(gen_known_rva("full-space", b, d)).answer

    def test_pair_mismatch_witness(self):
        verdict = check_rva_parallel(single_value_automaton())
        assert not verdict.answer
        assert verdict.witness.kind == "pair-mismatch"
        pair = expand_witness(verdict, "parallel")
        assert pair is not None and pair.verify(verdict.minimized)

    def test_not_weak_witness(self):
        spec = AlphabetSpec(2, 1)
        aut = Automaton(spec, 2, 0, frozenset({0}), [[1, 1, 1], [0, 0, 0]])
        verdict = check_rva_parallel(aut)
        assert not verdict.answer and verdict.witness.kind == "not-weak"

    def test_shape_witness(self):
        spec = AlphabetSpec(2, 1)
        aut = Automaton(spec, 1, 0, frozenset({0}), [[0, 0, 0]])
        verdict = check_rva_parallel(aut)
        assert not verdict.answer and verdict.witness.kind == "not-shape"

    def test_rejects_wrong_alphabet(self):
        seq = gen_known_rva("full-space", 2, 2, "sequential")
        with pytest.raises(ValueError):
            check_rva_parallel(seq)

    def test_minimality_insensitive(self, fig2):
        trimmed, _ = trim_accessible(fig2)
        minimal = minimize_weak(trimmed).target
        assert check_rva_parallel(fig2).answer == check_rva_parallel(minimal).answer
        box = gen_known_rva("unit-box", 2, 2)
        small = minimize_weak(box).target
        assert check_rva_parallel(box).answer == check_rva_parallel(small).answer

    def test_deterministic(self, fig2):
        a = check_rva_parallel(fig2)
        b = check_rva_parallel(fig2)
        assert a.to_dict() == b.to_dict()


class TestSequentialCheck:
    def test_full_space_families_accepted(self):
        for b in (2, 3):
            for d in (1, 2, 3):
                aut = gen_known_rva("full-space", b, d, "sequential")
                assert check_rva_sequential(aut).answer

    def test_first_digit_mutant_rejected(self):
        for d in (1, 2):
            aut = gen_known_rva("full-space", 2, d, "sequential")
            delta = [list(row) for row in aut.delta]
            delta[0][1] = aut.n - 1  # digit 1 from the initial state dies
            mutant = Automaton(aut.alphabet, aut.n, 0, aut.accepting, delta)
            verdict = check_rva_sequential(mutant)
            assert not verdict.answer
            oracle = saturation_oracle(mutant)
            assert not oracle.answer
            assert oracle.witness.verify(mutant)

    def test_agrees_with_parallel_in_dimension_one(self):
        spec_pairs = 0
        for seed in range(60):
            n = 1 + seed % 8
            seq = gen_random_weak(n, 2, 1, "sequential", seed)
            par = Automaton(
                AlphabetSpec(2, 1, "parallel"),
                seq.n,
                seq.initial,
                seq.accepting,
                seq.delta,
            )
            assert check_rva_sequential(seq).answer == check_rva_parallel(par).answer
            spec_pairs += 1
        assert spec_pairs == 60

    def test_zero_loop_checked_over_whole_block(self):
        # accepts encodings shifted by one digit: 0^d loop broken
        aut = gen_known_rva("full-space", 2, 2, "sequential")
        delta = [list(row) for row in aut.delta]
        delta[1][0] = 1  # second zero sticks instead of returning
        mutant = Automaton(aut.alphabet, aut.n, 0, aut.accepting, delta)
        verdict = check_rva_sequential(mutant)
        assert not verdict.answer


class TestDim1Check:
    def test_matches_parallel_on_corpus(self):
        for b in (2, 3):
            for seed in range(60):
                aut = gen_random_weak(1 + seed % 8, b, 1, "parallel", seed)
                assert check_rva_dim1(aut).answer == check_rva_parallel(aut).answer

    def test_catches_nonempty_language_mismatch(self):
        aut = dim1_gap_automaton()
        assert minimize_weak(aut).target.n == aut.n  # already minimal
        verdict = check_rva_dim1(aut)
        assert not verdict.answer and verdict.witness.kind == "pair-mismatch"
        assert not check_rva_parallel(aut).answer
        oracle = saturation_oracle(aut)
        assert not oracle.answer and oracle.witness.verify(aut)

    def test_emptiness_comparison_alone_would_miss_it(self):
        from rvacheck.fixing import fix_parallel
        from rvacheck.shape import empty_states

        aut = dim1_gap_automaton()
        hi = fix_parallel(aut, 0, 1).automaton
        lo = fix_parallel(aut, 0, 0).automaton
        dead_hi, dead_lo = empty_states(hi), empty_states(lo)
        assert all(
            (aut.delta[q][0] in dead_hi) == (aut.delta[q][1] in dead_lo)
            for q in range(aut.n)
        )

    def test_single_state_accept_all_rejected(self):
        spec = AlphabetSpec(2, 1)
        aut = Automaton(spec, 1, 0, frozenset({0}), [[0, 0, 0]])
        verdict = check_rva_dim1(aut)
        assert not verdict.answer and verdict.witness.kind == "not-shape"

    def test_works_on_sequential_alphabet(self):
        aut = gen_known_rva("zero-only", 3, 1, "sequential")
        assert check_rva_dim1(aut).answer

    def test_dimension_guard(self):
        aut = gen_known_rva("full-space", 2, 2)
        with pytest.raises(ValueError):
            check_rva_dim1(aut)


class TestComplementCheck:
    def test_full_family_accepted(self):
        for b in (2, 3):
            for d in (1, 2, 3):
                aut = gen_known_rva("complement-full", b, d)
                assert check_rva_complement_parallel(aut).answer

    def test_non_sign_prefix_rejected(self):
        aut = gen_known_rva("complement-full", 3, 1)
        delta = [list(row) for row in aut.delta]
        delta[0][1] = 1  # middle digit 1 suddenly allowed up front
        mutant = Automaton(aut.alphabet, aut.n, 0, aut.accepting, delta)
        verdict = check_rva_complement_parallel(mutant)
        assert not verdict.answer
        assert verdict.witness.kind == "complement-prefix"
        bad = expand_witness(verdict, "complement")
        assert bad is not None and bad.kind == "shape-violation"
        word = bad.word
        assert verdict.minimized.accepts_lasso(word.prefix, word.period)

    def test_sign_absorption_mutant(self):
        # a single sign digit reaches a live state but a repeated one dies,
        # so the sign extensions of one real are classified differently
        spec = AlphabetSpec(2, 1)
        root, s1, s2, tail, dead = range(5)
        delta = [
            [s1, dead, dead],
            [s2, dead, tail],
            [s2, s2, dead],
            [tail, tail, dead],
            [dead, dead, dead],
        ]
        aut = Automaton(spec, 5, root, frozenset({tail}), delta)
        verdict = check_rva_complement_parallel(aut)
        assert not verdict.answer
        assert verdict.witness.kind == "zero-loop-broken"
        pair = expand_witness(verdict, "complement")
        assert pair is not None and pair.kind == "equal-value-pair"
        m = verdict.minimized
        assert m.accepts_lasso(pair.accepted.prefix, pair.accepted.period)
        assert not m.accepts_lasso(pair.rejected.prefix, pair.rejected.period)

    def test_zero_sign_padding_mutant(self):
        # 0 encoded only through the all-zero sign: condition on the two
        # all-sign fixings from the root must fail
        spec = AlphabetSpec(2, 1)
        root, zeros, nines, tail, dead = range(5)
        delta = [
            [zeros, nines, dead],
            [zeros, dead, tail],   # 0-signed words: fractional free
            [nines, dead, dead],   # 1-signed words never accept
            [tail, tail, dead],
            [dead, dead, dead],
        ]
        aut = Automaton(spec, 5, root, frozenset({tail}), delta)
        verdict = check_rva_complement_parallel(aut)
        assert not verdict.answer
        assert verdict.witness.kind in (
            "complement-initial-language",
            "pair-mismatch",
        )

    def test_alphabet_guard(self):
        seq = gen_known_rva("full-space", 2, 2, "sequential")
        with pytest.raises(ValueError):
            check_rva_complement_parallel(seq)


class TestCrossValidation:
    def test_checks_agree_with_oracle_sample(self):
        for b, d, enc in ((2, 1, "parallel"), (2, 2, "parallel"), (3, 1, "sequential"), (2, 2, "sequential")):
            check = check_rva_parallel if enc == "parallel" else check_rva_sequential
            for seed in range(40):
                aut = gen_random_weak(1 + seed % 8, b, d, enc, seed)
                verdict = check(aut)
                if verdict.answer:
                    assert saturation_oracle(aut).answer, (b, d, enc, seed)
                else:
                    expansion = expand_witness(verdict, enc)
                    if verdict.witness.kind == "not-shape":
                        assert expansion is not None
                    if expansion is not None and expansion.kind == "equal-value-pair":
                        assert expansion.verify(verdict.minimized)
