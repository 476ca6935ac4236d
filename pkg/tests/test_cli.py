import io
import json

from fibsum.cli import main
from fibsum.linalg import determinant_exact, entry_sum, invert_unit_triangular
from fibsum.matrixio import format_matrix, parse_matrix

from fixtures import BANDED_9_L2


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


class TestBasicCommands:
    def test_fib(self, capsys):
        code, out, _ = run(capsys, "fib", "10")
        assert code == 0 and out.strip() == "55"

    def test_fib_json(self, capsys):
        code, payload, _ = run_json(capsys, "fib", "6")
        assert code == 0 and payload == {"k": 6, "value": 8}

    def test_identities(self, capsys):
        code, out, _ = run(capsys, "identities", "--max-n", "60")
        assert code == 0
        assert "PASS" in out

    def test_version(self, capsys):
        code, out, _ = run(capsys, "--version")
        assert code == 0 and out.startswith("fibsum ")

    def test_subcommand_version(self, capsys):
        code, out, _ = run(capsys, "construct", "--version")
        assert code == 0 and out.startswith("fibsum ")

    def test_no_subcommand_prints_help(self, capsys):
        code, out, _ = run(capsys)
        assert code == 1
        assert "SUBCOMMAND" in out


class TestConstructCommands:
    def test_construct_text_round_trip(self, capsys):
        code, out, _ = run(capsys, "construct", "--n", "7", "--sum", "10")
        assert code == 0
        rows = parse_matrix(out)
        assert entry_sum(invert_unit_triangular(rows)) == 10
        assert "# inverse entry sum = 10" in out

    def test_construct_json_schema(self, capsys):
        code, payload, _ = run_json(capsys, "construct", "--n", "6", "--sum", "-3")
        assert code == 0
        assert set(payload) == {"n", "matrix", "inverse", "sum"}
        assert payload["sum"] == -3
        assert entry_sum(payload["inverse"]) == -3

    def test_construct_out_of_range_exits_1(self, capsys):
        code, _, err = run(capsys, "construct", "--n", "7", "--sum", "11")
        assert code == 1
        assert "[-6, 10]" in err

    def test_extremal_matches_reference(self, capsys):
        code, payload, _ = run_json(capsys, "extremal", "--n", "9", "--l", "2")
        assert code == 0
        assert payload["matrix"] == BANDED_9_L2
        assert payload["sum"] == 23

    def test_wmatrix(self, capsys):
        code, payload, _ = run_json(capsys, "wmatrix", "--n", "5", "--det", "6")
        assert code == 0
        assert payload["det"] == 6
        assert determinant_exact(payload["matrix"]) == 6
        assert payload["sum"] is not None

    def test_wmatrix_singular_target(self, capsys):
        code, payload, _ = run_json(capsys, "wmatrix", "--n", "5", "--det", "0")
        assert code == 0
        assert payload["det"] == 0
        assert payload["inverse"] is None and payload["sum"] is None


class TestInvert:
    def test_invert_identity_from_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(format_matrix(
            [[1 if i == j else 0 for j in range(5)] for i in range(5)])))
        code, out, _ = run(capsys, "invert")
        assert code == 0
        assert parse_matrix(out) == [[1 if i == j else 0 for j in range(5)]
                                     for i in range(5)]
        assert "# entry sum = 5" in out

    def test_invert_file_round_trip(self, capsys, tmp_path):
        src = tmp_path / "m.txt"
        src.write_text("# comment\n3\n1 1 1\n0 1 0\n0 0 1\n")
        dst = tmp_path / "inv.txt"
        code, _, _ = run(capsys, "invert", "--in", str(src), "--out", str(dst))
        assert code == 0
        assert parse_matrix(dst.read_text()) == [[1, -1, -1], [0, 1, 0], [0, 0, 1]]

    def test_invert_missing_file_exits_3(self, capsys, tmp_path):
        code, _, err = run(capsys, "invert", "--in", str(tmp_path / "nope.txt"))
        assert code == 3

    def test_invert_malformed_exits_3(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("2\n1 0\n"))
        code, _, err = run(capsys, "invert")
        assert code == 3

    def test_invert_non_triangular_exits_1(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("2\n1 1\n1 1\n"))
        code, _, _ = run(capsys, "invert")
        assert code == 1

    def test_invert_rational_matrix(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin",
                            io.StringIO("3\n1 1/2 0\n0 1 1/3\n0 0 1\n"))
        code, payload, _ = run_json(capsys, "invert")
        assert code == 0
        assert payload["inverse"][0] == [1, "-1/2", "1/6"]
        assert payload["sum"] == "7/3"


class TestEnumerate:
    def test_triangular_json_schema(self, capsys):
        code, payload, _ = run_json(capsys, "enumerate", "--family", "triangular",
                                    "--n", "4", "--jobs", "1")
        assert code == 0
        assert payload["family"] == "triangular"
        assert payload["min"] == 0 and payload["max"] == 4
        assert payload["achieved"] == [0, 1, 2, 3, 4]
        assert payload["counts"] == {"0": 1, "1": 20, "2": 30, "3": 12, "4": 1}
        assert set(payload["witnesses"]) == {"0", "1", "2", "3", "4"}

    def test_w_family(self, capsys):
        code, payload, _ = run_json(capsys, "enumerate", "--family", "w",
                                    "--n", "3", "--jobs", "1")
        assert code == 0
        assert payload["achieved"] == [2, 3, 4]

    def test_general_family_rational_keys(self, capsys):
        code, payload, _ = run_json(capsys, "enumerate", "--family", "general",
                                    "--n", "3", "--jobs", "1")
        assert code == 0
        assert payload["min"] == 1 and payload["max"] == 3
        assert "3/2" in payload["counts"]

    def test_json_to_file(self, capsys, tmp_path):
        out = tmp_path / "report.json"
        code = main(["enumerate", "--family", "triangular", "--n", "3",
                     "--jobs", "1", "--json", str(out)])
        capsys.readouterr()
        assert code == 0
        payload = json.loads(out.read_text())
        assert payload["counts"] == {"1": 3, "2": 4, "3": 1}

    def test_byte_identical_runs(self, capsys):
        _, out1, _ = run(capsys, "enumerate", "--family", "triangular",
                         "--n", "5", "--jobs", "1", "--json")
        _, out2, _ = run(capsys, "enumerate", "--family", "triangular",
                         "--n", "5", "--jobs", "2", "--json")
        assert out1 == out2

    def test_bad_n_exits_1(self, capsys):
        code, _, err = run(capsys, "enumerate", "--family", "triangular",
                           "--n", "12", "--jobs", "1")
        assert code == 1


class TestSearch:
    def test_n3_max(self, capsys):
        code, payload, _ = run_json(capsys, "search", "--n", "3",
                                    "--direction", "max", "--restarts", "8",
                                    "--seed", "1")
        assert code == 0
        assert payload["best_sum"] == 3

    def test_reproducible(self, capsys):
        args = ("search", "--n", "4", "--direction", "min", "--restarts", "6",
                "--seed", "9", "--json")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2


class TestVerify:
    def test_theorem_suite_n6(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "theorem", "--n", "6")
        assert code == 0
        assert "PASS theorem-range" in out
        assert "[-3, 7]" in out

    def test_corollaries_suite(self, capsys):
        code, payload, _ = run_json(capsys, "verify", "--suite", "corollaries",
                                    "--n", "60")
        assert code == 0
        assert payload["failed"] == 0
        names = {c["name"] for c in payload["checks"]}
        assert names == {"lemma1-identities", "corollary3-identity",
                         "corollary4-identity"}

    def test_pattern_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "pattern", "--n", "12")
        assert code == 0

    def test_remark_suite(self, capsys):
        code, payload, _ = run_json(capsys, "verify", "--suite", "remark",
                                    "--n", "8", "--count", "40")
        assert code == 0
        assert payload["failed"] == 0

    def test_gsampling_suite(self, capsys):
        code, _, _ = run(capsys, "verify", "--suite", "gsampling", "--n", "5",
                         "--samples", "50")
        assert code == 0


class TestArgumentErrors:
    def test_unknown_flag_exits_1(self, capsys):
        code, _, err = run(capsys, "construct", "--n", "5", "--sum", "2",
                           "--bogus")
        assert code == 1

    def test_missing_required_exits_1(self, capsys):
        code, _, _ = run(capsys, "construct", "--n", "5")
        assert code == 1

    def test_unknown_subcommand_exits_1(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 1
