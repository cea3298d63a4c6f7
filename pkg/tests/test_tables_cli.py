import json

import pytest

from adcodes import get_code, parse_code_file, reduce_mod_stabilizer, parse_pauli
from adcodes.cli import main
from adcodes.tables import PAPER_TABLE, build_outer, build_rows, constructible_pairs

GOLDEN_10_1 = [
    "XXZIZIXXII",
    "IIXXZIZIXX",
    "XXIIXXZIZI",
    "ZIXXIIXXZI",
    "-ZZIIIIIIII",
    "-IIZZIIIIII",
    "-IIIIZZIIII",
    "-IIIIIIZZII",
    "-IIIIIIIIZZ",
]


class TestTables:
    def test_paper_table_shape(self):
        assert len(PAPER_TABLE) == 60
        assert PAPER_TABLE[(1, 2)] == (10, "4")
        assert PAPER_TABLE[(1, 3)] == (20, "7")

    def test_constructible_pairs(self):
        assert constructible_pairs() == [
            (1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 2), (4, 1)
        ]

    def test_outer_recipes_meet_distance(self):
        for k, t in constructible_pairs():
            label, outer = build_outer(k, t)
            assert outer.k == k
            assert 2 * outer.n == PAPER_TABLE[(k, t)][0], (k, t, label)

    def test_uncovered_row_is_paper_only(self):
        rows, _ = build_rows(k=5, t=1)
        assert len(rows) == 1
        assert rows[0].source == "paper-only"
        assert not rows[0].certified

    def test_small_constructed_rows_certified(self):
        rows, reports = build_rows(k=2, t=1)
        (row,) = rows
        assert row.source == "constructed"
        assert row.certified
        assert row.n == row.paper_n == 8
        assert reports[(2, 1)].passed


class TestCli:
    def test_validate_database_name(self, capsys):
        assert main(["validate", "five_1_3"]) == 0
        assert "pass" in capsys.readouterr().out

    def test_validate_failing_file(self, tmp_path, capsys):
        bad = tmp_path / "bad.code"
        bad.write_text("CODE n=2 k=0 name=bad\nSTABILIZER\nXI\nZI\nLOGICAL_X\nLOGICAL_Z\n")
        assert main(["validate", str(bad)]) == 1
        assert "FAIL" in capsys.readouterr().out

    def test_malformed_file_is_usage_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.code"
        bad.write_text("CODE n=2 k=1\nSTABILIZER\n-ZQ\nLOGICAL_X\nXX\nLOGICAL_Z\nZI\n")
        assert main(["validate", str(bad)]) == 2
        assert "line 3" in capsys.readouterr().err

    def test_unknown_code_name(self, capsys):
        assert main(["validate", "nope_9_9"]) == 2

    def test_concat_writes_golden_group(self, tmp_path, capsys):
        out = tmp_path / "ten.code"
        assert main(["concat", "five_1_3", "--out", str(out)]) == 0
        code = parse_code_file(out.read_text())
        assert (code.n, code.k) == (10, 1)
        for s in GOLDEN_10_1:
            lc = reduce_mod_stabilizer(code, parse_pauli(s))
            assert lc.in_group and lc.phase.k == 0

    def test_concat_params(self, capsys):
        assert main(["concat", "five_1_3", "--params", "--d", "3"]) == 0
        assert "correcting t=2" in capsys.readouterr().out

    def test_concat_c4_2_2_gives_eight_two(self, tmp_path):
        out = tmp_path / "eight.code"
        assert main(["concat", "c4_2_2", "--out", str(out)]) == 0
        code = parse_code_file(out.read_text())
        assert (code.n, code.k) == (8, 2)

    def test_concat_invalid_outer_fails(self, tmp_path, capsys):
        bad = tmp_path / "bad.code"
        bad.write_text("CODE n=2 k=0 name=bad\nSTABILIZER\nXI\nZI\nLOGICAL_X\nLOGICAL_Z\n")
        assert main(["concat", str(bad)]) == 1
        assert "invalid" in capsys.readouterr().err

    def test_verify_pass_and_fail_exit_codes(self, tmp_path, capsys):
        assert main(["verify", "shor_9_1", "--t", "2"]) == 0
        assert main(["verify", "leung_4_1", "--t", "2"]) == 1

    def test_verify_json_identical_across_jobs(self, tmp_path):
        paths = []
        for jobs in (1, 2):
            p = tmp_path / f"r{jobs}.json"
            assert main(["verify", "shor_9_1", "--t", "2", "--jobs", str(jobs),
                         "--json", str(p)]) == 0
            paths.append(p.read_bytes())
        assert paths[0] == paths[1]

    def test_verify_budget_error(self, capsys):
        assert main(["verify", "shor_9_1", "--t", "2", "--budget", "10"]) == 1
        assert "resource" in capsys.readouterr().err

    def test_distance_command(self, capsys):
        assert main(["distance", "five_1_3", "--w-max", "3"]) == 0
        assert "distance 3" in capsys.readouterr().out

    def test_tables_filtered(self, capsys, tmp_path):
        csv = tmp_path / "rows.csv"
        assert main(["tables", "--k", "1", "--t", "2", "--csv", str(csv)]) == 0
        out = capsys.readouterr().out
        assert "constructed" in out and "five_1_3" in out
        lines = csv.read_text().strip().splitlines()
        assert lines[0] == "n,k,t,source,outer_code,paper_n,certified"
        assert lines[1].startswith("10,1,2,constructed")

    def test_channel_command(self, capsys):
        assert main(["channel", "--lemma", "dualrail", "--gamma", "0.3"]) == 0
        assert main(["channel", "--lemma", "qutrit3", "--gamma", "0.5"]) == 0
        out = capsys.readouterr().out
        assert "pass" in out

    def test_fidelity_writes_reports(self, tmp_path, capsys):
        out_dir = tmp_path / "reports"
        rc = main([
            "fidelity", "--code", "leung_4_1", "--t", "1",
            "--gammas", "0.001", "0.002", "0.004",
            "--out-dir", str(out_dir),
        ])
        assert rc == 0
        csv = out_dir / "fidelity_leung_4_1.csv"
        summary = out_dir / "fidelity_leung_4_1.json"
        figure = out_dir / "fidelity_leung_4_1.png"
        assert csv.exists() and summary.exists() and figure.exists()
        assert csv.read_text().splitlines()[0] == "gamma,infidelity"
        data = json.loads(summary.read_text())
        assert abs(data["exponent"] - 2.0) < 0.2
        assert figure.stat().st_size > 1000

    def test_export_json(self, capsys):
        assert main(["export-json", "dualrail"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["stabilizer"] == ["-ZZ"]
