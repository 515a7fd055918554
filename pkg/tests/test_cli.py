import json

import pytest

import sidon as sd
from sidon.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    assert code == 0, out
    return json.loads(out)


class TestVerify:
    def test_sidon_set(self, capsys):
        code, out = run_cli(capsys, "verify", "--set", "1,2,5,7")
        assert code == 0
        assert out == '{"is_sidon": true, "mode": "strict"}'

    def test_violation_reports_witness(self, capsys):
        obj = run_json(capsys, "verify", "--set", "1,2,3")
        assert obj == {"is_sidon": False, "mode": "strict", "witness": [1, 3, 2, 2]}

    def test_weak_mode(self, capsys):
        obj = run_json(capsys, "verify", "--set", "4,5,8,10,16", "--weak")
        assert obj["is_sidon"] and obj["mode"] == "weak"

    def test_roundtrips_through_parser(self, capsys):
        obj = run_json(capsys, "verify", "--set", "1,2,3")
        assert sd.parse_set(",".join(map(str, obj["witness"][:2]))).elements == (1, 3)


class TestSinger:
    def test_difference_set_only(self, capsys):
        obj = run_json(capsys, "singer", "--p", "7")
        assert obj["p"] == 7 and obj["q"] == 57
        assert len(obj["D"]) == 8 and "translates" not in obj

    def test_translates(self, capsys):
        obj = run_json(capsys, "singer", "--p", "2", "--translates")
        assert len(obj["translates"]) == 3
        union = sorted(x for t in obj["translates"] for x in t)
        assert sorted(set(union)) == list(range(1, 8))

    def test_not_prime(self, capsys):
        code, _ = run_cli(capsys, "singer", "--p", "6")
        assert code == 1


class TestConstruct:
    def test_auto(self, capsys, tmp_path):
        csv_path = tmp_path / "rows.csv"
        obj = run_json(
            capsys, "construct", "--i1", "1:45", "--i2", "53:90",
            "--csv", str(csv_path),
        )
        assert obj["size"] >= 8 and obj["verified"]
        assert obj["n1"] == 45 and obj["n2"] == 38 and obj["gap_start"] == 53
        check = sd.is_sidon(sd.IntegerSet(tuple(obj["set"])))
        assert check.is_sidon
        run_json(
            capsys, "construct", "--i1", "1:45", "--i2", "53:90",
            "--csv", str(csv_path),
        )
        lines = csv_path.read_text().strip().splitlines()
        assert lines[0] == "n1,n2,gap_start,alpha,beta,method,size,ratio"
        assert len(lines) == 3  # header + two appended rows

    def test_explicit_method(self, capsys):
        obj = run_json(capsys, "construct", "--i1", "1:45", "--i2", "53:90",
                       "--method", "ii")
        assert obj["method"] == "case_ii"

    def test_inapplicable_method(self, capsys):
        code, _ = run_cli(capsys, "construct", "--i1", "1:20", "--i2", "25:34",
                          "--method", "iiia")
        assert code == 1

    def test_bad_interval_literal(self, capsys):
        code, _ = run_cli(capsys, "construct", "--i1", "1-45", "--i2", "53:90")
        assert code == 1


class TestBound:
    def test_explicit_u(self, capsys, tmp_path):
        csv_path = tmp_path / "bounds.csv"
        obj = run_json(capsys, "bound", "--n", "100", "--k", "2", "--u", "10",
                       "--csv", str(csv_path))
        assert obj["bound"] == 18.0 and obj["regime"] == "explicit_u"
        assert csv_path.read_text().startswith("n,k,u,bound,regime")

    def test_theorem_default(self, capsys):
        obj = run_json(capsys, "bound", "--n", "10000", "--k", "2")
        assert obj["regime"] in ("case_ii", "case_iii")

    def test_optimize(self, capsys):
        obj = run_json(capsys, "bound", "--n", "100", "--k", "2", "--optimize")
        assert obj["regime"] == "optimal_scan" and obj["bound"] <= 18.0

    def test_u_out_of_range(self, capsys):
        code, _ = run_cli(capsys, "bound", "--n", "100", "--k", "2", "--u", "100")
        assert code == 1


class TestSolve:
    def test_set(self, capsys):
        obj = run_json(capsys, "solve", "--set", "1,2,5")
        assert obj["optimum"] == 3 and obj["complete"]

    def test_intervals(self, capsys):
        obj = run_json(capsys, "solve", "--intervals", "1:7,20:26")
        assert obj["optimum"] >= 4
        assert sd.is_sidon(obj["witness"]).is_sidon

    def test_naive(self, capsys):
        obj = run_json(capsys, "solve", "--set", "4,5,8,10,16", "--naive")
        assert obj["optimum"] == 4

    def test_requires_exactly_one_input(self, capsys):
        assert run_cli(capsys, "solve")[0] == 1
        assert run_cli(capsys, "solve", "--set", "1,2", "--intervals", "1:5")[0] == 1

    def test_timeout_exit_code(self, capsys):
        code, out = run_cli(capsys, "solve", "--intervals", "1:80",
                            "--timeout", "0.02")
        assert code == 2
        assert json.loads(out)["complete"] is False


class TestExp:
    def test_strict_witness(self, capsys):
        obj = run_json(capsys, "exp", "--n", "3", "--base", "2")
        assert obj["verdict"] is False
        assert obj["witness"] == [4, 16, 10, 10]
        assert obj["set"] == [4, 5, 8, 10, 16]

    def test_weak_witness_n6(self, capsys):
        # 4+36 = 8+32 = 40 is the smallest weak collision at n = 6
        obj = run_json(capsys, "exp", "--n", "6", "--base", "2", "--weak")
        assert obj["verdict"] is False
        assert obj["witness"] == [4, 36, 8, 32]

    def test_overflow_exit_code(self, capsys):
        assert run_cli(capsys, "exp", "--n", "100", "--base", "2")[0] == 2


class TestOptimizeConstants:
    def test_reports_point(self, capsys, tmp_path):
        surface = tmp_path / "surface.csv"
        plot = tmp_path / "surface.png"
        obj = run_json(capsys, "optimize-constants", "--grid-step", "0.01",
                       "--surface-csv", str(surface), "--plot", str(plot))
        assert obj["guarantee"] == pytest.approx(0.8761, abs=5e-3)
        assert "case_bounds" in obj and "region_minima" in obj
        assert surface.read_text().startswith("alpha0,beta0,guarantee")
        assert plot.stat().st_size > 0


class TestSweep:
    def test_writes_sorted_csv(self, capsys, tmp_path):
        out = tmp_path / "sweep.csv"
        obj = run_json(capsys, "sweep", "--n", "400",
                       "--alpha", "0.5:1.0:0.25", "--beta", "0.5:1.5:0.5",
                       "--out", str(out))
        assert obj["rows"] == 9
        lines = out.read_text().strip().splitlines()
        assert lines[0] == "alpha,beta,n1,n2,method,size,ratio,upper_bound"
        assert len(lines) == 10

    def test_rerun_is_byte_identical(self, capsys, tmp_path):
        out = tmp_path / "sweep.csv"
        args = ("sweep", "--n", "400", "--alpha", "0.5:1.0:0.25",
                "--beta", "0.5:1.5:0.5", "--out", str(out))
        run_json(capsys, *args)
        first = out.read_bytes()
        run_json(capsys, *args)
        assert out.read_bytes() == first

    def test_method_filter_and_plot(self, capsys, tmp_path):
        out = tmp_path / "sweep.csv"
        plot = tmp_path / "sweep.png"
        run_json(capsys, "sweep", "--n", "400", "--alpha", "0.5:0.5:0.1",
                 "--beta", "1.0:1.5:0.5", "--out", str(out),
                 "--methods", "i,iiia", "--plot", str(plot))
        body = out.read_text()
        assert "case_ii," not in body
        assert plot.stat().st_size > 0

    def test_bad_grid(self, capsys, tmp_path):
        code, _ = run_cli(capsys, "sweep", "--n", "400", "--alpha", "1:0:1",
                          "--beta", "0.5:1.5:0.5", "--out", str(tmp_path / "x.csv"))
        assert code == 1

    def test_too_small_n(self, capsys, tmp_path):
        code, _ = run_cli(capsys, "sweep", "--n", "10", "--alpha", "0.5:1.0:0.5",
                          "--beta", "0.5:1.5:0.5", "--out", str(tmp_path / "x.csv"))
        assert code == 1


class TestUsage:
    def test_unknown_flag(self, capsys):
        assert run_cli(capsys, "verify", "--bogus")[0] == 1

    def test_missing_subcommand(self, capsys):
        assert run_cli(capsys)[0] == 1

    def test_unknown_subcommand(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == 1
