import io
import os

import pytest

from localelab import cli, frames

import mutants

CHAIN3_TEXT = "elements: 3\ncover: 0 1\ncover: 1 2\nlabel: 1 a\n"


def run(argv):
    out = io.StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def chain3_file(tmp_path):
    path = tmp_path / "chain3.frame"
    path.write_text(CHAIN3_TEXT)
    return str(path)


class TestAnalyze:
    def test_text_report(self, chain3_file):
        code, text = run(["analyze", chain3_file])
        assert code == cli.EXIT_OK
        assert "subfit: false" in text
        assert "closed_joins: 3" in text
        assert "smooth: 4" in text
        assert "DISAGREE" not in text
        assert text.count("AGREE") == 15    # 14 rows plus the verdict

    def test_keyvalue_report(self, chain3_file):
        code, text = run(["analyze", chain3_file, "--format", "keyvalue"])
        assert code == cli.EXIT_OK
        assert "agree_all=true" in text
        assert "row.all_eq_closedjoins.relation=false" in text
        assert "row.all_eq_closedjoins.property=false" in text

    def test_parse_error_exit_code(self, tmp_path):
        bad = tmp_path / "bad.frame"
        bad.write_text("elements: 2\nfoo: 1\n")
        code, text = run(["analyze", str(bad)])
        assert code == cli.EXIT_PARSE
        assert "line 2" in text

    def test_rejection_report(self, tmp_path):
        bad = tmp_path / "m3.frame"
        bad.write_text("elements: 5\ncover: 0 1\ncover: 0 2\ncover: 0 3\n"
                       "cover: 1 4\ncover: 2 4\ncover: 3 4\n")
        code, text = run(["analyze", str(bad)])
        assert code == cli.EXIT_PARSE
        assert "not distributive" in text

    def test_cap_exceeded_degrades(self, chain3_file):
        code, text = run(["analyze", chain3_file, "--cap", "2"])
        assert code == cli.EXIT_CAP
        assert "cap exceeded" in text
        assert "subfit: false" in text      # frame-level facts still emitted

    def test_determinism(self, chain3_file):
        a = run(["analyze", chain3_file, "--format", "keyvalue"])
        b = run(["analyze", chain3_file, "--format", "keyvalue"])
        assert a == b


class TestVerify:
    def test_small_run_passes(self, tmp_path):
        code, text = run(["verify", "--count", "10", "--bound", "3",
                          "--out-dir", str(tmp_path)])
        assert code == cli.EXIT_OK
        assert "result: PASS" in text
        assert "failures: 0" in text

    def test_empty_run_warns(self):
        code, text = run(["verify", "--count", "0"])
        assert code == cli.EXIT_OK
        assert "vacuous" in text

    def test_deterministic_output(self, tmp_path):
        args = ["verify", "--count", "6", "--bound", "3", "--seed", "5",
                "--out-dir", str(tmp_path)]
        assert run(args) == run(args)

    def test_bound_guard(self):
        code, text = run(["verify", "--bound", "9", "--count", "1"])
        assert code == cli.EXIT_PARSE
        assert "--bound" in text

    def test_cap_guard(self):
        code, text = run(["verify", "--cap", "0", "--count", "1"])
        assert code == cli.EXIT_PARSE

    def test_failure_writes_reloadable_witness(self, tmp_path, monkeypatch):
        mutants.underreport_covered_primes(monkeypatch)
        code, text = run(["verify", "--count", "8", "--bound", "3",
                          "--out-dir", str(tmp_path)])
        assert code == cli.EXIT_FAIL
        assert "result: FAIL" in text
        witnesses = [p for p in os.listdir(tmp_path)
                     if p.startswith("witness_")]
        assert witnesses
        reloaded = frames.load_frame(os.path.join(tmp_path, witnesses[0]))
        assert reloaded.n >= 1


class TestRemark:
    def test_default_transcript(self):
        code, text = run(["remark"])
        assert code == cli.EXIT_OK
        assert "is_D(S) = true" in text
        assert "is_D(T) = true" in text
        assert "S intersect T = bottom: yes" in text
        assert "covered primes of S intersect T: {bottom}" in text
        assert "bottom in covered primes of the chain: false" in text
        assert "verdict: S intersect T is not a D-sublocale" in text
        for n in (16, 32, 64):
            assert f"truncation N={n}: agree" in text

    def test_whole_chain_variant(self):
        desc = "tail: offset=1 pattern=1 ; bottom: yes"
        code, text = run(["remark", "--s-desc", desc, "--t-desc", desc])
        assert code == cli.EXIT_OK
        assert "verdict: S intersect T is a D-sublocale" in text

    def test_malformed_description(self):
        code, text = run(["remark", "--s-desc", "tail: offset=x pattern=1"])
        assert code == cli.EXIT_PARSE

    def test_non_sublocale_rejected(self):
        code, text = run(["remark", "--s-desc",
                          "tail: offset=1 pattern=1 ; bottom: no"])
        assert code == cli.EXIT_PARSE
        assert "not a sublocale" in text

    def test_custom_truncation(self):
        code, text = run(["remark", "--truncate", "16"])
        assert code == cli.EXIT_OK
        assert "truncation N=16: agree" in text
        assert "N=32" not in text


class TestRandom:
    def test_deterministic_bytes(self, tmp_path):
        d1, d2 = tmp_path / "a", tmp_path / "b"
        run(["random", "--seed", "42", "--count", "4", "--out-dir", str(d1)])
        run(["random", "--seed", "42", "--count", "4", "--out-dir", str(d2)])
        for name in os.listdir(d1):
            assert (d1 / name).read_bytes() == (d2 / name).read_bytes()

    def test_bound_one_gives_two_chains(self, tmp_path):
        code, text = run(["random", "--seed", "7", "--count", "5",
                          "--bound", "1", "--out-dir", str(tmp_path)])
        assert code == cli.EXIT_OK
        for name in os.listdir(tmp_path):
            f = frames.load_frame(str(tmp_path / name))
            assert f.n == 2

    def test_files_reload(self, tmp_path):
        run(["random", "--seed", "3", "--count", "6", "--bound", "5",
             "--out-dir", str(tmp_path)])
        for name in sorted(os.listdir(tmp_path)):
            frames.load_frame(str(tmp_path / name))


GOLDEN_FRAME_DOT = """digraph frame {
  rankdir=BT;
  n0 [label="0"];
  n1 [label="a"];
  n2 [label="2"];
  n0 -> n1;
  n1 -> n2;
}
"""

GOLDEN_ASSEMBLY_DOT = """digraph assembly {
  rankdir=BT;
  n0 [label="{0,a,2}", shape=box];
  n1 [label="{0,2}", shape=ellipse, style=filled];
  n2 [label="{a,2}", shape=box, style=filled];
  n3 [label="{2}", shape=box];
  n1 -> n0;
  n2 -> n0;
  n3 -> n1;
  n3 -> n2;
}
"""


class TestDot:
    def test_golden_three_chain(self, chain3_file, tmp_path):
        code, text = run(["dot", chain3_file, "--out-dir", str(tmp_path)])
        assert code == cli.EXIT_OK
        frame_dot = (tmp_path / "chain3.frame.dot").read_text()
        assembly_dot = (tmp_path / "chain3.assembly.dot").read_text()
        assert frame_dot == GOLDEN_FRAME_DOT
        assert assembly_dot == GOLDEN_ASSEMBLY_DOT

    def test_assembly_is_four_node_diamond(self, chain3_file, tmp_path):
        run(["dot", chain3_file, "--out-dir", str(tmp_path)])
        text = (tmp_path / "chain3.assembly.dot").read_text()
        assert text.count("[label=") == 4
        assert text.count("->") == 4

    def test_cap_exceeded(self, chain3_file, tmp_path):
        code, text = run(["dot", chain3_file, "--out-dir", str(tmp_path),
                          "--cap", "1"])
        assert code == cli.EXIT_CAP


class TestEnvironment:
    def test_cap_env_default(self, chain3_file, monkeypatch):
        monkeypatch.setenv(cli.CAP_ENV, "2")
        code, text = run(["analyze", chain3_file])
        assert code == cli.EXIT_CAP

    def test_cap_flag_overrides_env(self, chain3_file, monkeypatch):
        monkeypatch.setenv(cli.CAP_ENV, "2")
        code, text = run(["analyze", chain3_file, "--cap", "64"])
        assert code == cli.EXIT_OK

    def test_bad_env_value(self, chain3_file, monkeypatch):
        monkeypatch.setenv(cli.CAP_ENV, "many")
        code, text = run(["analyze", chain3_file])
        assert code == cli.EXIT_PARSE
