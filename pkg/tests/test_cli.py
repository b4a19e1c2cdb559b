import json
import subprocess
import sys

import pytest

from numsgp import cli
from numsgp.report import Report


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, out, json.loads(out)


def test_analyze_json(capsys):
    code, out, data = run_json(capsys, "analyze", "22", "28", "47", "53")
    assert code == 0
    assert data["pf"] == [25, 258, 283]
    assert data["classification"] == "almost-symmetric" and data["type"] == 3
    assert data["alphas"] == [14, 11, 2, 2]


def test_json_round_trip_is_byte_identical(capsys):
    for argv in (["analyze", "22", "28", "47", "53"], ["ideal", "18", "21", "23", "26"],
                 ["verify", "5", "6", "8", "9"], ["rf", "9", "22", "46", "57"]):
        _, out, data = run_json(capsys, *argv)
        assert cli.dumps(data) + "\n" == out
        assert json.dumps(data, sort_keys=True, separators=(",", ":"),
                          ensure_ascii=False) + "\n" == out


def test_large_ints_become_strings():
    assert cli.dumps({"x": 2**53, "y": 2**53 + 1, "z": -(2**60)}) == \
        '{"x":9007199254740992,"y":"9007199254740993","z":"-1152921504606846976"}'
    with pytest.raises(TypeError):
        cli.dumps({"x": 0.5})


def test_ideal_reports_relation(capsys):
    code, _, data = run_json(capsys, "ideal", "18", "21", "23", "26")
    assert code == 0
    assert data["mu"] == 7 and data["relation_n1_n4_eq_n2_n3"] is True
    assert data["generator_count"]["verdict"] == "PASS"
    code, text = run(capsys, "ideal", "18", "21", "23", "26")
    assert "mu: 7" in text and "relation_n1_n4_eq_n2_n3: True" in text


def test_family_pass(capsys):
    code, _, data = run_json(capsys, "family", "--a", "3", "--b", "4", "--d", "1", "--steps", "5")
    assert code == 0 and data["verify"]["verdict"] == "PASS"
    assert data["generators"] == [10, 11, 13, 14]


def test_precondition_exit_codes(capsys):
    assert run(capsys, "komeda", "5", "6", "8", "9")[0] == 2
    assert run(capsys, "analyze", "4", "6")[0] == 2
    assert run(capsys, "family", "--a", "9", "--b", "5", "--d", "3")[0] == 2
    code, out, data = run_json(capsys, "rf", "5", "6", "8", "9", "--f", "5")
    assert code == 2 and data["error"] == "precondition"


def test_komeda_and_rf(capsys):
    code, _, data = run_json(capsys, "komeda", "5", "6", "7", "9")
    assert code == 0 and data["structure"]["verdict"] == "PASS"
    code, _, data = run_json(capsys, "rf", "7", "12", "13", "22", "--f", "15")
    assert code == 0
    assert sorted(r["degree"] for r in data["rf"][0]["relations"]) == [26, 34, 35, 36, 44, 50]


def test_fail_exit_code(monkeypatch, capsys):
    def broken(H):
        rep = Report("broken")
        rep.fail("forced")
        return rep

    monkeypatch.setitem(cli.lemmas.CHECKS, "broken", broken)
    assert run(capsys, "verify", "5", "6", "8", "9")[0] == 3


def test_internal_error_exit_code(monkeypatch, capsys):
    def boom(args):
        raise RuntimeError("boom")

    monkeypatch.setattr(cli, "cmd_analyze", boom)
    parser = cli.build_parser
    monkeypatch.setattr(cli, "build_parser", lambda: _rebind(parser(), boom))
    assert run(capsys, "analyze", "3", "5")[0] == 1


def _rebind(parser, fn):
    parser._subparsers._group_actions[0].choices["analyze"].set_defaults(func=fn)
    return parser


def test_verify_corpus(tmp_path, capsys):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("# a few semigroups\n5 6 8 9\n5, 6, 7, 9  # pseudo-symmetric\n\n4 6\n")
    code, _, data = run_json(capsys, "verify", "--corpus", str(corpus))
    assert code == 0 and data["count"] == 3 and data["failed"] == []
    assert [r["generators"] for r in data["results"]] == [[4, 6]]  # the gcd error


def test_scan_resumes(tmp_path, capsys):
    out = tmp_path / "scan.jsonl"
    assert run(capsys, "scan", "10", "11", "13", "14", "--m-max", "9", "--out", str(out))[0] == 0
    code, _, data = run_json(capsys, "scan", "10", "11", "13", "14", "--m-max", "20",
                             "--out", str(out))
    assert code == 0 and data["m_from"] == 10
    lines = out.read_text().splitlines()
    ms = [json.loads(line)["m"] for line in lines]
    assert ms == list(range(21))
    assert [json.loads(line)["m"] for line in lines if json.loads(line)["type"] == 3
            and json.loads(line)["classification"] == "almost-symmetric"] == [0, 4, 8, 12, 16, 20]


def test_search_odd(capsys):
    code, _, data = run_json(capsys, "search-odd", "--bound", "30")
    assert code == 0 and data["details"]["all_odd"] == [[15, 23, 27, 29]]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "numsgp", "analyze", "5", "6", "8", "9",
                          "--format", "json"], capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["pf"] == [3, 4, 7]
