"""Command-line interface: outputs, exit codes, interactive play."""

import json

from click.testing import CliRunner

from pizzagame.cli import main
from pizzagame.harness import CLAIMS, Claim, ClaimResult, load_fixture

WITNESS15 = load_fixture("witness_15")
WITNESS15_INLINE = "inline:" + ",".join(str(s) for s in WITNESS15["sizes"])


def run(*args, **kwargs):
    return CliRunner().invoke(main, list(args), **kwargs)


class TestSolve:
    def test_even_four(self):
        result = run("solve", "inline:1,0,1,0")
        assert result.exit_code == 0
        assert "value 2 of total 2" in result.output

    def test_single_piece(self):
        result = run("solve", "inline:5")
        assert result.exit_code == 0
        assert "value 5 of total 5" in result.output

    def test_witness(self):
        result = run("solve", WITNESS15_INLINE)
        assert result.exit_code == 0
        assert "value 4 of total 9" in result.output
        assert "ratio 4/9" in result.output

    def test_json_output(self):
        result = run("solve", "inline:1,0,1,0", "--json")
        payload = json.loads(result.output)
        assert payload["value"] == 2
        assert payload["total"] == 2
        assert payload["ratio"] == {"num": 1, "den": 1}
        assert len(payload["line"]) == 4

    def test_file_input(self, tmp_path):
        path = tmp_path / "pizza.txt"
        path.write_text("2,1,0,2\n")
        result = run("solve", str(path))
        assert result.exit_code == 0
        assert "value 3 of total 5" in result.output

    def test_parse_error_exit_code(self):
        result = run("solve", "inline:1,-2")
        assert result.exit_code == 2
        assert "negative" in result.output


class TestAnalyze:
    def test_uniform_five(self):
        result = run("analyze", "inline:1,1,1,1,1")
        assert result.exit_code == 0
        assert "hardness easy" in result.output
        assert "best follow value 3" in result.output

    def test_tightness_parts(self):
        result = run("analyze", "inline:0,4,0,1,4,1,0,4,0", "--json")
        payload = json.loads(result.output)
        assert payload["hardness"] == "hard"
        sizes = payload["tripartition"]["sizes"]
        assert (
            sizes["b_major"],
            sizes["b_minor"],
            sizes["m_major"],
            sizes["m_minor"],
            sizes["w_major"],
            sizes["w_minor"],
        ) == (4, 0, 4, 0, 4, 2)

    def test_even_pizza_reports_witness(self):
        result = run("analyze", "inline:1,0,1,0", "--json")
        payload = json.loads(result.output)
        assert payload["hardness"] == "easy"
        assert payload["fb_witness"] == 0


class TestStrategy:
    def test_best_of_four(self):
        result = run("strategy", WITNESS15_INLINE, "best-of-four", "--json")
        payload = json.loads(result.output)
        assert payload["value"] == 4
        assert 9 * payload["value"] >= 4 * payload["total"]

    def test_even_on_odd_fails(self):
        result = run("strategy", "inline:1,1,1", "even")
        assert result.exit_code == 1
        assert "even" in result.output

    def test_bob_guard(self):
        cuts = ",".join(str(c) for c in WITNESS15["thick_cuts"])
        result = run("strategy", WITNESS15_INLINE, f"bob:interval-guard:{cuts}")
        assert result.exit_code == 0
        assert "bob guaranteed 5 of total 9" in result.output


class TestVerify:
    def test_even_half(self):
        result = run("verify", "--claim", "even-half", "--ns", "2,4,6,8", "--alphabet", "0,1,2")
        assert result.exit_code == 0
        assert "claim even-half: ok" in result.output

    def test_report_file(self, tmp_path):
        out = tmp_path / "report.json"
        result = run(
            "verify", "--claim", "four-ninths-optimal",
            "--ns", "3,5", "--alphabet", "0,1", "--out", str(out),
        )
        assert result.exit_code == 0
        payload = json.loads(out.read_text())
        assert payload["ok"] is True

    def test_list_claims(self):
        result = run("verify", "--claim", "x", "--list-claims")
        assert result.exit_code == 0
        assert "four-ninths-optimal" in result.output

    def test_violation_exit_code(self, monkeypatch):
        monkeypatch.setitem(
            CLAIMS,
            "test-nothing-passes",
            Claim("test-nothing-passes", "", lambda p: ClaimResult(ok=False)),
        )
        result = run("verify", "--claim", "test-nothing-passes", "--ns", "2", "--alphabet", "0,1")
        assert result.exit_code == 3
        assert "VIOLATIONS" in result.output

    def test_random_family(self):
        result = run(
            "verify", "--claim", "one-third", "--random-count", "20",
            "--random-n", "7", "--random-max", "3", "--seed", "5",
        )
        assert result.exit_code == 0


class TestSearch:
    def test_follow_third(self):
        result = run("search", "--n", "9", "--alphabet", "0,1", "--predicate", "follow-third")
        assert result.exit_code == 0
        assert "0,0,1,0,0,1,0,0,1" in result.output

    def test_infeasible_exit_code(self):
        result = run("search", "--n", "30", "--alphabet", "0,1", "--predicate", "four-ninths-tight")
        assert result.exit_code == 4

    def test_out_file(self, tmp_path):
        out = tmp_path / "found.json"
        result = run(
            "search", "--n", "9", "--alphabet", "0,1",
            "--predicate", "follow-third", "--out", str(out),
        )
        assert result.exit_code == 0
        payload = json.loads(out.read_text())
        assert payload["found"] == [[0, 0, 1, 0, 0, 1, 0, 0, 1]]

    def test_minimality_scan_flag(self, tmp_path):
        checkpoint = tmp_path / "scan.ndjson"
        result = run(
            "search", "--minimality", "--alphabet", "0,1",
            "--n-max", "6", "--checkpoint", str(checkpoint),
        )
        assert result.exit_code == 0
        assert "0 findings" in result.output
        assert checkpoint.exists()


class TestPlay:
    def test_hint_following_human_achieves_optimal(self):
        result = run(
            "play", "inline:1,0,1,0", "--as", "alice",
            "--opponent", "optimal", "--hints",
            input="0\n2\n",
        )
        assert result.exit_code == 0
        assert "final scores: alice 2, bob 0" in result.output
        assert "you ate 2 of 2" in result.output

    def test_illegal_entry_reprompts(self):
        result = run(
            "play", "inline:1,0,1,0", "--as", "alice",
            "--opponent", "optimal",
            input="7\n0\n9\n2\n",
        )
        assert result.exit_code == 0
        assert "illegal" in result.output
        assert "final scores" in result.output

    def test_playing_as_bob(self):
        # engine (alice, optimal) opens; scripted human bob finishes the game
        result = run(
            "play", "inline:1,0,1", "--as", "bob", "--opponent", "optimal",
            input="1\n2\n0\n",
        )
        assert result.exit_code == 0
        assert "engine opens" in result.output
        assert "final scores" in result.output

    def test_scores_sum_to_total(self):
        result = run(
            "play", "inline:2,3,1,0,4", "--as", "alice",
            "--opponent", "optimal", "--hints",
            input="0\n1\n4\n2\n3\n",
        )
        assert result.exit_code == 0
        line = next(
            l for l in result.output.splitlines() if l.startswith("final scores")
        )
        alice = int(line.split("alice ")[1].split(",")[0])
        bob = int(line.split("bob ")[1])
        assert alice + bob == 10
