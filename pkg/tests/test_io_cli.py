import json
import subprocess
import sys

import pytest

from rvacheck import (
    AutomatonFormatError,
    parse_automaton,
    serialize_automaton,
)
from rvacheck.cli import main
from rvacheck.oracle import gen_known_rva, gen_random_weak
from tests.conftest import FIG2_PATH


class TestFormat:
    def test_fig2_file(self, fig2):
        assert fig2.n == 7
        assert fig2.alphabet.num_letters == 4
        assert fig2.accepting == frozenset({0, 5})

    def test_round_trip_fig2(self, fig2):
        again = parse_automaton(serialize_automaton(fig2))
        assert again.structurally_equal(fig2)

    def test_round_trip_families_and_corpus(self):
        samples = [
            gen_known_rva("full-space", 2, 2),
            gen_known_rva("unit-box", 3, 2, "sequential"),
            gen_known_rva("complement-full", 2, 2),
        ]
        samples += [
            gen_random_weak(1 + s % 8, 2 + s % 2, 1 + s % 2, "parallel", s)
            for s in range(10)
        ]
        for aut in samples:
            text = serialize_automaton(aut)
            again = parse_automaton(text)
            assert again.structurally_equal(aut)
            assert serialize_automaton(again) == text

    def test_missing_transition_reported(self, fig2_text):
        pruned = "\n".join(
            line for line in fig2_text.splitlines() if not line.startswith("3 1 ")
        )
        with pytest.raises(AutomatonFormatError) as err:
            parse_automaton(pruned)
        assert "state 3" in str(err.value) and "1" in str(err.value)

    def test_completion_adds_sink(self, fig2_text):
        pruned = "\n".join(
            line for line in fig2_text.splitlines() if not line.startswith("3 1 ")
        )
        aut = parse_automaton(pruned, complete_with_sink=True)
        assert aut.n == 8
        assert aut.delta[3][aut.alphabet.letter_index((1,))] == 7
        assert 7 not in aut.accepting

    def test_complete_automaton_gains_no_sink(self, fig2_text):
        aut = parse_automaton(fig2_text, complete_with_sink=True)
        assert aut.n == 7

    def test_duplicate_transition_rejected(self, fig2_text):
        doubled = fig2_text + "\n0 0 -> 2\n"
        with pytest.raises(AutomatonFormatError) as err:
            parse_automaton(doubled)
        assert "duplicate" in str(err.value)

    def test_digit_out_of_range(self):
        text = FIG2_PATH.read_text().replace("base: 3", "base: 2")
        with pytest.raises(AutomatonFormatError):
            parse_automaton(text)

    def test_error_carries_line_number(self):
        text = (
            "rva-automaton v1\nbase: x\ndim: 1\nencoding: parallel\n"
            "states: 1\ninitial: 0\naccepting:\ntransitions:\n"
        )
        with pytest.raises(AutomatonFormatError) as err:
            parse_automaton(text)
        assert err.value.line == 2


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "rvacheck.cli", *argv],
        capture_output=True,
        text=True,
    )
    return proc


class TestCli:
    def test_check_failure_exit_code_and_witness(self):
        proc = run_cli("check", str(FIG2_PATH), "--mode", "parallel", "--json")
        assert proc.returncode == 1
        payload = json.loads(proc.stdout)
        assert payload["answer"] is False
        assert payload["witness"]["kind"] == "zero-loop-broken"
        assert payload["witness"]["expansion"]["kind"] == "equal-value-pair"
        assert payload["stats"]["states"] == 7
        assert payload["stats"]["time_ms"] >= 0

    def test_check_success_exit_code(self, tmp_path):
        target = tmp_path / "full.rva"
        run = run_cli("gen", "--kind", "full-space", "--base", "2", "--dim", "1",
                      "-o", str(target))
        assert run.returncode == 0
        proc = run_cli("check", str(target), "--mode", "parallel")
        assert proc.returncode == 0
        assert "yes" in proc.stdout

    def test_check_modes_cover_dim1_and_complement(self, tmp_path):
        full = tmp_path / "full.rva"
        run_cli("gen", "--kind", "full-space", "-o", str(full))
        assert run_cli("check", str(full), "--mode", "dim1").returncode == 0
        comp = tmp_path / "comp.rva"
        run_cli("gen", "--kind", "complement-full", "-o", str(comp))
        assert run_cli("check", str(comp), "--mode", "complement").returncode == 0

    def test_usage_error_exit_code(self, tmp_path):
        missing = tmp_path / "nope.rva"
        proc = run_cli("check", str(missing), "--mode", "parallel")
        assert proc.returncode == 2
        bad = tmp_path / "bad.rva"
        bad.write_text("not an automaton\n")
        proc = run_cli("classify", str(bad))
        assert proc.returncode == 2
        assert "error" in proc.stderr

    def test_minimize_prints_classes(self, tmp_path):
        out = tmp_path / "min.rva"
        proc = run_cli("minimize", str(FIG2_PATH), "-o", str(out), "--json")
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["states"] == 5
        classes = {frozenset(v) for v in payload["classes"].values()}
        assert classes == {
            frozenset({0, 2}),
            frozenset({1}),
            frozenset({3, 4}),
            frozenset({5}),
            frozenset({6}),
        }
        small = parse_automaton(out.read_text())
        assert small.n == 5

    def test_eval_word(self):
        accept = run_cli("eval", str(FIG2_PATH), "--word", "2 * / 1")
        assert accept.returncode == 0 and "accepted" in accept.stdout
        reject = run_cli("eval", str(FIG2_PATH), "--word", "0 / 1")
        assert reject.returncode == 1 and "rejected" in reject.stdout

    def test_oracle_command(self, tmp_path):
        proc = run_cli("oracle", str(FIG2_PATH), "--json")
        assert proc.returncode == 1
        payload = json.loads(proc.stdout)
        assert payload["witness"]["kind"] == "equal-value-pair"
        full = tmp_path / "full.rva"
        run_cli("gen", "--kind", "full-space", "-o", str(full))
        proc = run_cli("oracle", str(full), "--bound", "6", "--seed", "1")
        assert proc.returncode == 0

    def test_classify_reports_shape(self):
        proc = run_cli("classify", str(FIG2_PATH), "--json")
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["weak"] is True
        assert payload["d_parallel"] is True

    def test_in_process_entry_point(self, capsys):
        code = main(["classify", str(FIG2_PATH)])
        assert code == 0
        out = capsys.readouterr().out
        assert "weak: True" in out
