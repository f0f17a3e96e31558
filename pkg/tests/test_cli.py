import csv
import dataclasses
import io
import json

import pytest

from ghw import cli, formulas

# ---- field and spec resolution ---------------------------------------------


def test_rejects_non_prime_power_size(capsys):
    ret = cli.main(["params", "--q", "12", "--m", "3", "--sets", "1,2,3"])
    assert ret == 2
    assert "prime power" in capsys.readouterr().err


def test_rejects_ambiguous_extension(capsys):
    ret = cli.main(["params", "--q", "16", "--e", "2", "--m", "2", "--sets", "1,2"])
    assert ret == 2
    assert "ambiguous" in capsys.readouterr().err


def test_field_size_implies_extension(capsys):
    ret = cli.main(
        ["hierarchy", "--q", "4", "--m", "3", "--sets", "1,2;2,3", "--format", "json"]
    )
    assert ret == 0
    payload = json.loads(capsys.readouterr().out)
    assert (payload["q"], payload["e"]) == (4, 2)
    assert payload["hierarchy"] == [12, 24, 27]
    assert payload["method"] == "both"


def test_prime_with_degree_builds_extension(capsys):
    ret = cli.main(
        ["params", "--q", "3", "--e", "2", "--m", "2", "--sets", "1,2", "--format", "json"]
    )
    assert ret == 0
    payload = json.loads(capsys.readouterr().out)
    assert (payload["q"], payload["e"]) == (9, 2)
    assert (payload["n"], payload["k"], payload["d1"]) == (81, 2, 72)


def test_rejects_malformed_sets(capsys):
    assert cli.main(["params", "--q", "2", "--m", "3", "--sets", "1,,2"]) == 2
    assert cli.main(["params", "--q", "2", "--m", "3", "--sets", "1,4"]) == 2
    assert "error:" in capsys.readouterr().err


def test_missing_arguments_exit_like_argparse():
    with pytest.raises(SystemExit) as exc:
        cli.main(["hierarchy", "--q", "2"])
    assert exc.value.code == 2


def test_verbose_reports_dropped_generator(capsys):
    ret = cli.main(
        ["params", "--q", "2", "--m", "3", "--sets", "1,2;1,2,3", "--verbose"]
    )
    assert ret == 0
    assert "dropped" in capsys.readouterr().err


# ---- output formats ---------------------------------------------------------


def test_hierarchy_json_shape(capsys):
    ret = cli.main(
        ["hierarchy", "--q", "2", "--m", "5", "--sets", "1,2,3;3,4,5", "--format", "json"]
    )
    assert ret == 0
    line = capsys.readouterr().out.strip()
    payload = json.loads(line)
    assert json.dumps(payload) == line
    assert list(payload) == [
        "q",
        "e",
        "m",
        "sets",
        "complement",
        "n",
        "k",
        "hierarchy",
        "provenance",
        "method",
        "elapsed_ms",
    ]
    assert payload["hierarchy"] == [4, 6, 10, 12, 13]
    assert payload["sets"] == [[1, 2, 3], [3, 4, 5]]
    assert payload["complement"] is False
    for key in ("q", "e", "m", "n", "k", "elapsed_ms"):
        assert isinstance(payload[key], int)
    assert all(isinstance(d, int) for d in payload["hierarchy"])
    assert len(payload["provenance"]) == payload["k"]


def test_hierarchy_csv_shape(capsys):
    ret = cli.main(
        ["hierarchy", "--q", "2", "--m", "4", "--sets", "1,2,3,4", "--format", "csv"]
    )
    assert ret == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0] == ["r", "d_r", "provenance", "method"]
    assert len(rows) == 5
    assert [row[1] for row in rows[1:]] == ["8", "12", "14", "15"]
    assert {row[3] for row in rows[1:]} == {"both"}


def test_hierarchy_text_mentions_parameters(capsys):
    ret = cli.main(["hierarchy", "--q", "2", "--m", "4", "--sets", "1,2,3,4"])
    assert ret == 0
    out = capsys.readouterr().out
    assert out.startswith("[16, 4] code over GF(2)")
    assert "r=1" in out and "d_r=8" in out


def test_params_on_verified_complement(capsys):
    ret = cli.main(
        ["params", "--q", "2", "--m", "5", "--sets", "2,3,4", "--complement", "--format", "json"]
    )
    assert ret == 0
    payload = json.loads(capsys.readouterr().out)
    assert (payload["n"], payload["k"], payload["d1"]) == (24, 5, 12)
    assert payload["method"] == "formula"


def test_params_falls_back_to_search(capsys):
    ret = cli.main(
        ["params", "--q", "2", "--m", "4", "--sets", "1,2", "--format", "json"]
    )
    assert ret == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["method"] == "prop1-search"
    assert (payload["n"], payload["k"], payload["d1"]) == (4, 2, 2)


def test_count_subspaces_json(capsys):
    ret = cli.main(["count-subspaces", "--q", "2", "--m", "4", "--format", "json"])
    assert ret == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["total"] == 66
    assert payload["rows"][0] == {"r": 1, "count": 15}
    ret = cli.main(
        ["count-subspaces", "--q", "2", "--m", "4", "--r", "2", "--sets", "1,2", "--format", "json"]
    )
    assert ret == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["rows"] == [{"r": 2, "count": 35, "search_ops": 35 * 4 * 4}]
    assert payload["total"] == 35


# ---- exit codes under failure ----------------------------------------------


def test_formula_unavailable_exits_five(capsys):
    ret = cli.main(
        ["hierarchy", "--q", "2", "--m", "4", "--sets", "1,2", "--method", "formula"]
    )
    assert ret == 5
    assert "no closed form applies" in capsys.readouterr().err
    # the search has no coverage requirement
    assert cli.main(
        ["hierarchy", "--q", "2", "--m", "4", "--sets", "1,2", "--method", "brute"]
    ) == 0


def test_enumeration_cap_exits_three(capsys):
    ret = cli.main(
        ["hierarchy", "--q", "2", "--m", "4", "--sets", "1,2,3,4",
         "--method", "brute", "--max-enum", "2"]
    )
    assert ret == 3
    assert "error:" in capsys.readouterr().err


def test_cap_environment_variable(capsys, monkeypatch):
    monkeypatch.setenv("GHW_MAX_ENUM", "2")
    argv = ["hierarchy", "--q", "2", "--m", "4", "--sets", "1,2,3,4", "--method", "brute"]
    assert cli.main(argv) == 3
    capsys.readouterr()
    # an explicit flag wins over the environment
    assert cli.main(argv + ["--max-enum", "100000"]) == 0


def test_cross_check_mismatch_exits_four(capsys, monkeypatch):
    real = formulas.rows_full_space

    def shifted(q, m):
        rows = real(q, m)
        orig = rows[0].value
        rows[0] = dataclasses.replace(rows[0], value=lambda r: orig(r) + 1)
        return rows

    monkeypatch.setattr(formulas, "rows_full_space", shifted)
    ret = cli.main(["hierarchy", "--q", "2", "--m", "3", "--sets", "1,2,3"])
    assert ret == 4
    err = capsys.readouterr().err
    assert err.startswith("verification mismatch:")
    record = json.loads(err.split(":", 1)[1])
    assert (record["r"], record["formula"], record["search"]) == (1, 5, 4)


# ---- the built-in reference suite ------------------------------------------


def test_reference_filter(capsys):
    ret = cli.main(["verify-paper", "--only", "thm3"])
    assert ret == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 2
    assert "2 cases: 2 passed, 0 failed" in out


def test_reference_filter_without_match(capsys):
    assert cli.main(["verify-paper", "--only", "nosuchcase"]) == 2


def test_reference_catches_broken_table(capsys, monkeypatch):
    real = formulas.rows_two_overlapping

    def broken(q, m, a1, a2, t12):
        rows = real(q, m, a1, a2, t12)
        orig = rows[1].value
        rows[1] = dataclasses.replace(rows[1], value=lambda r: orig(r) + 1)
        return rows

    monkeypatch.setattr(formulas, "rows_two_overlapping", broken)
    ret = cli.main(["verify-paper"])
    assert ret == 4
    out = capsys.readouterr().out
    fail_lines = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert len(fail_lines) == 1
    assert "thm2" in fail_lines[0]
    assert "T2" in out
    assert "12 passed, 1 failed" in out
