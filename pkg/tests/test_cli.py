import json

import pytest

from blocksep.cli import main
from blocksep.qseries import euler_inverse

TABLE1_B = "1 2 4 7 12 19 31 47 72 107 157"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSeq:
    def test_plain_limit_10(self, capsys):
        code, out, _ = run(capsys, "seq", "--limit", "10")
        assert code == 0
        assert out == TABLE1_B + "\n"

    def test_limit_0(self, capsys):
        code, out, _ = run(capsys, "seq", "--limit", "0")
        assert code == 0 and out == "1\n"

    def test_method_all_agrees(self, capsys):
        code, out, _ = run(capsys, "seq", "--limit", "10", "--method", "all")
        assert code == 0
        assert out == TABLE1_B + "\n"

    def test_each_method_same_output(self, capsys):
        outputs = set()
        for method in ("matrix", "recurrence", "symmetric", "bruteforce"):
            code, out, _ = run(capsys, "seq", "--limit", "12", "--method", method)
            assert code == 0
            outputs.add(out)
        assert len(outputs) == 1

    def test_bfile_format(self, capsys):
        code, out, _ = run(capsys, "seq", "--limit", "3", "--format", "bfile")
        assert code == 0
        assert out == "0 1\n1 2\n2 4\n3 7\n"

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "seq", "--limit", "2", "--format", "csv")
        assert code == 0
        assert out == "n,b\n0,1\n1,2\n2,4\n"

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "seq", "--limit", "4", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {"n", "values", "method", "checks"}
        assert doc["n"] == 4
        assert doc["values"] == [1, 2, 4, 7, 12]
        assert doc["method"] == "matrix"

    def test_bruteforce_refuses_beyond_cap(self, capsys):
        code, _, err = run(capsys, "seq", "--limit", "70", "--method", "bruteforce")
        assert code == 2
        assert "cap" in err

    def test_cap_override_allows(self, capsys):
        code, out, _ = run(
            capsys, "seq", "--limit", "26", "--method", "bruteforce",
            "--cap-enum", "26",
        )
        assert code == 0
        assert out.startswith("1 2 4 7")

    def test_parallel_matches_serial(self, capsys):
        code, serial, _ = run(capsys, "seq", "--limit", "30", "--method", "all")
        assert code == 0
        code, parallel, _ = run(
            capsys, "seq", "--limit", "30", "--method", "all", "--parallel"
        )
        assert code == 0
        assert serial == parallel


class TestTable:
    def test_plain_reproduces_rows(self, capsys):
        code, out, _ = run(capsys, "table", "--limit", "10")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 4
        assert lines[1].split() == ["p(n)", "1", "1", "2", "3", "5", "7",
                                    "11", "15", "22", "30", "42"]
        assert lines[2].split() == ["p~(n)", "1", "2", "4", "8", "14", "24",
                                    "40", "64", "100", "154", "232"]
        assert lines[3].split() == ["b(n)"] + TABLE1_B.split()

    def test_csv_b_row(self, capsys):
        code, out, _ = run(capsys, "table", "--limit", "10", "--format", "csv")
        assert code == 0
        rows = {line.split(",")[0]: line for line in out.splitlines()}
        assert rows["b"] == "b," + TABLE1_B.replace(" ", ",")
        assert rows["p"] == "p,1,1,2,3,5,7,11,15,22,30,42"
        assert rows["p~"] == "p~,1,2,4,8,14,24,40,64,100,154,232"

    def test_limit_0_single_column(self, capsys):
        code, out, _ = run(capsys, "table", "--limit", "0")
        assert code == 0
        values = [line.split()[-1] for line in out.splitlines()[1:]]
        assert values == ["1", "1", "1"]

    def test_sandwich_in_every_column(self, capsys):
        code, out, _ = run(capsys, "table", "--limit", "30", "--format", "json")
        doc = json.loads(out)
        for p, pbar, b in zip(doc["values"]["p"], doc["values"]["pbar"],
                              doc["values"]["b"]):
            assert p <= b <= pbar

    def test_bfile_is_usage_error(self, capsys):
        code, _, err = run(capsys, "table", "--limit", "3", "--format", "bfile")
        assert code == 2 and "format" in err


class TestVerify:
    def test_all_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--limit", "30")
        assert code == 0
        assert out.splitlines()[-1] == "result: pass"
        assert all(
            line.endswith("pass") for line in out.splitlines() if line.startswith("check")
        )

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "verify", "--limit", "20", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert set(doc) == {"n", "values", "method", "checks"}
        names = [c["name"] for c in doc["checks"]]
        assert names == [
            "cross_method_equality",
            "oracle_weighted_count",
            "oracle_explicit_listing",
            "bivariate_oracle",
            "sandwich",
        ]
        for c in doc["checks"]:
            assert c["status"] == "pass"
            assert ".." in c["range"]

    def test_inject_fault_detected(self, capsys):
        code, out, _ = run(capsys, "verify", "--limit", "10", "--inject-fault")
        assert code == 1
        assert "result: fail" in out
        assert "cross_method_equality" in out

    def test_inject_fault_json(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--limit", "10", "--inject-fault", "--format", "json"
        )
        assert code == 1
        doc = json.loads(out)
        statuses = {c["name"]: c["status"] for c in doc["checks"]}
        assert statuses["cross_method_equality"] == "fail"


class TestDecorations:
    def test_r3(self, capsys):
        code, out, _ = run(capsys, "decorations", "3")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 6
        assert lines[-1] == "count 5"
        assert lines[0] == "000  {}  [0][0][0]"
        assert lines[4] == "101  {1,3}  [10][10]"

    def test_r0(self, capsys):
        code, out, _ = run(capsys, "decorations", "0")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 2
        assert lines[0] == "-  {}  -"
        assert lines[1] == "count 1"

    def test_r5_count(self, capsys):
        code, out, _ = run(capsys, "decorations", "5")
        assert code == 0
        assert out.splitlines()[-1] == "count 13"

    def test_cap_exceeded(self, capsys):
        code, _, err = run(capsys, "decorations", "26")
        assert code == 2 and "cap" in err

    def test_json(self, capsys):
        code, out, _ = run(capsys, "decorations", "2", "--format", "json")
        doc = json.loads(out)
        assert doc["count"] == 3
        assert doc["values"][1] == {
            "word": "01", "independent_set": [2], "tiling": ["0", "10"],
        }


class TestBivariate:
    def test_row_sums_match_seq(self, capsys):
        code, out, _ = run(capsys, "bivariate", "--limit", "10", "--format", "json")
        doc = json.loads(out)
        sums = [sum(row) for row in doc["values"]]
        assert sums == [1, 2, 4, 7, 12, 19, 31, 47, 72, 107, 157]

    def test_column0_is_p(self, capsys):
        code, out, _ = run(capsys, "bivariate", "--limit", "10", "--format", "json")
        doc = json.loads(out)
        assert [row[0] for row in doc["values"]] == list(euler_inverse(10).coeffs)

    def test_n5_row(self, capsys):
        code, out, _ = run(capsys, "bivariate", "--limit", "5")
        assert code == 0
        row5 = out.splitlines()[5]
        assert row5.startswith("5: ")
        assert sum(int(v) for v in row5[3:].split()) == 19

    def test_csv_padded(self, capsys):
        code, out, _ = run(capsys, "bivariate", "--limit", "6", "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "n,m=0,m=1,m=2"
        assert lines[1] == "0,1,0,0"
        assert lines[-1] == "6,11,19,1"


class TestList:
    def test_n5_has_19_items(self, capsys):
        code, out, _ = run(capsys, "list", "--limit", "5")
        assert code == 0
        lines = out.splitlines()
        assert lines[-1] == "count 19"
        assert len(lines) == 20
        assert "2+2+1~" in lines
        assert "2~+2+1" in lines
        assert "2~+2+1~" not in lines

    def test_n0_empty_partition(self, capsys):
        code, out, _ = run(capsys, "list", "--limit", "0")
        assert out.splitlines() == ["(empty)", "count 1"]

    def test_n1(self, capsys):
        code, out, _ = run(capsys, "list", "--limit", "1")
        assert out.splitlines() == ["1", "1~", "count 2"]

    def test_json_blocks(self, capsys):
        code, out, _ = run(capsys, "list", "--limit", "2", "--format", "json")
        doc = json.loads(out)
        assert doc["count"] == 4
        overlined = [
            v["rendered"] for v in doc["values"]
            if any(b["overlined"] for b in v["blocks"])
        ]
        assert overlined == ["2~", "1~+1"]

    def test_cap_exceeded(self, capsys):
        code, _, err = run(capsys, "list", "--limit", "21")
        assert code == 2 and "cap" in err


class TestConfigPlumbing:
    def test_env_limit(self, capsys, monkeypatch):
        monkeypatch.setenv("BLOCKSEP_LIMIT", "3")
        code, out, _ = run(capsys, "seq")
        assert out == "1 2 4 7\n"

    def test_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("BLOCKSEP_LIMIT", "3")
        code, out, _ = run(capsys, "seq", "--limit", "1")
        assert out == "1 2\n"

    def test_env_format(self, capsys, monkeypatch):
        monkeypatch.setenv("BLOCKSEP_FORMAT", "bfile")
        code, out, _ = run(capsys, "seq", "--limit", "1")
        assert out == "0 1\n1 2\n"

    def test_bad_env_method(self, capsys, monkeypatch):
        monkeypatch.setenv("BLOCKSEP_METHOD", "magic")
        code, _, err = run(capsys, "seq", "--limit", "1")
        assert code == 2 and "method" in err

    def test_bad_env_limit(self, capsys, monkeypatch):
        monkeypatch.setenv("BLOCKSEP_LIMIT", "ten")
        code, _, err = run(capsys, "seq")
        assert code == 2

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "out.txt"
        code, out, _ = run(capsys, "seq", "--limit", "3", "--output", str(target))
        assert code == 0 and out == ""
        assert target.read_text() == "1 2 4 7\n"

    def test_negative_limit_rejected(self, capsys):
        code, _, err = run(capsys, "seq", "--limit", "-1")
        assert code == 2

    def test_determinism(self, capsys):
        _, first, _ = run(capsys, "verify", "--limit", "15", "--format", "json")
        _, second, _ = run(capsys, "verify", "--limit", "15", "--format", "json")
        assert first == second

    def test_unknown_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["seq", "--bogus"])
        assert exc.value.code == 2
