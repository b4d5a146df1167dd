"""Command-line interface: outputs, formats, seeds, and exit codes."""

import json

import pytest

from gtsec.cli import main
from gtsec.posets import import_poset


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTrees:
    def test_n7_lists_eleven(self, capsys):
        code, out, _ = run(capsys, "trees", "--n", "7")
        assert code == 0
        assert out.startswith("11 non-isomorphic trees")
        assert len(out.strip().splitlines()) == 12

    def test_n2_single(self, capsys):
        code, out, _ = run(capsys, "trees", "--n", "2")
        assert code == 0 and out.startswith("1 ")

    def test_bad_n_exits_2(self, capsys):
        code, _, err = run(capsys, "trees", "--n", "99")
        assert code == 2
        assert "order" in err

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "trees", "--n", "4", "--format", "json")
        data = json.loads(out)
        assert data["count"] == 2


class TestPosets:
    def test_n7_dot_files_and_summary(self, capsys, tmp_path):
        code, out, _ = run(capsys, "posets", "--n", "7", "--format", "dot", "--out", str(tmp_path))
        assert code == 0
        summary = json.loads(out)
        assert sorted(summary["sizes"]) == [3, 4, 4]
        assert summary["disjoint"] is True
        files = list(tmp_path.glob("poset_7_*.dot"))
        assert len(files) == 3
        assert all("digraph" in f.read_text() for f in files)

    def test_n4_json_roundtrips(self, capsys, tmp_path):
        code, out, _ = run(capsys, "posets", "--n", "4", "--format", "json", "--out", str(tmp_path))
        assert code == 0
        (f,) = tmp_path.glob("poset_4_*.json")
        p = import_poset(f.read_text())
        assert len(p.nodes) == 2

    def test_bounds_exit_2(self, capsys):
        code, _, err = run(capsys, "posets", "--n", "3")
        assert code == 2


class TestPoly:
    def test_builtin_spider(self, capsys):
        code, out, _ = run(capsys, "poly", "--builtin", "spider-1-2-3")
        assert code == 0
        assert "t^6*y^3" in out
        assert "alpha=2" in out

    def test_builtin_path4(self, capsys):
        code, out, _ = run(capsys, "poly", "--builtin", "path-4")
        assert "t^3*y + 2*t^2 + 3*t + 1" in out
        assert "alpha=2" in out

    def test_malformed_file_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.tree"
        bad.write_text("3\n0 1\n")
        code, _, err = run(capsys, "poly", "--tree-file", str(bad))
        assert code == 2
        assert err.startswith("error:")

    def test_missing_input_exits_2(self, capsys):
        code, _, err = run(capsys, "poly")
        assert code == 2


class TestMaximin:
    def test_equal_weight_value(self, capsys):
        code, out, _ = run(capsys, "maximin", "--builtin", "path-6", "--weights", "0.5")
        data = json.loads(out)
        assert code == 0
        assert data["value"] == pytest.approx(0.2, abs=1e-12)

    def test_exhaustive_equals_restricted(self, capsys):
        _, out1, _ = run(capsys, "maximin", "--builtin", "spider-1-2-3", "--seed", "4", "--exhaustive")
        _, out2, _ = run(capsys, "maximin", "--builtin", "spider-1-2-3", "--seed", "4", "--restricted")
        v1, v2 = json.loads(out1)["value"], json.loads(out2)["value"]
        assert v1 == pytest.approx(v2, abs=1e-12)

    def test_seed_echoed_and_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("GTSEC_SEED", "321")
        code, out, _ = run(capsys, "maximin", "--builtin", "path-4")
        assert json.loads(out)["seed"] == 321

    def test_weighted_file_input(self, capsys, tmp_path):
        f = tmp_path / "wt.txt"
        f.write_text("3\n0 1 0.9\n1 2 0.1\n")
        code, out, _ = run(capsys, "maximin", "--tree-file", str(f))
        assert code == 0
        assert 0.0 < json.loads(out)["value"] < 1.0

    def test_missing_file_exits_2(self, capsys):
        code, _, err = run(capsys, "maximin", "--tree-file", "/nonexistent/x.tree")
        assert code == 2


class TestVerify:
    def test_recursion_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "recursion", "--n", "6")
        assert code == 0
        assert out.startswith("[PASS] recursion")

    def test_grafting_suite_small(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "grafting", "--n", "5",
            "--trials", "500", "--seed", "1",
        )
        assert code == 0
        assert "0 violations" in out

    def test_leaders_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "leaders", "--n", "9")
        assert code == 0

    def test_determinism_given_seed(self, capsys):
        _, out1, _ = run(capsys, "verify", "--suite", "cutpaste", "--trials", "400", "--seed", "9")
        _, out2, _ = run(capsys, "verify", "--suite", "cutpaste", "--trials", "400", "--seed", "9")
        assert out1 == out2

    def test_unknown_suite_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "nonsense"])
        assert exc.value.code == 2

    def test_failing_suite_exits_1(self, capsys, monkeypatch):
        import gtsec.verify as verify_mod

        def failing(**kwargs):
            return verify_mod.SuiteReport("recursion", False, "forced failure", {})

        monkeypatch.setitem(verify_mod.SUITES, "recursion", failing)
        code, out, _ = run(capsys, "verify", "--suite", "recursion")
        assert code == 1
        assert out.startswith("[FAIL]")


class TestCensus:
    def test_csv_output(self, capsys):
        code, out, _ = run(capsys, "census", "--n-min", "4", "--n-max", "6")
        assert code == 0
        assert out.splitlines()[0] == "n,leader_count,codes,poset_sizes,agreement"
