"""File formats, subcommands, exit codes, and report determinism."""

from __future__ import annotations

import json

import pytest

import matroidcc as mc
from matroidcc import cli


def write(tmp_path, name: str, doc: dict) -> str:
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


U32_DOC = {
    "format": "circuits",
    "name": "u3_2",
    "ground": ["a", "b", "c"],
    "circuits": [["a", "b", "c"]],
}

FANO_DOC = {
    "format": "matrix",
    "name": "fano",
    "field": 2,
    "labels": [str(i) for i in range(1, 8)],
    "rows": [
        [0, 0, 0, 1, 1, 1, 1],
        [0, 1, 1, 0, 0, 1, 1],
        [1, 0, 1, 0, 1, 0, 1],
    ],
}

K4_DOC = {
    "format": "graph",
    "name": "k4",
    "vertices": 4,
    "edges": [
        [0, 1, "e12"], [0, 2, "e13"], [0, 3, "e14"],
        [1, 2, "e23"], [1, 3, "e24"], [2, 3, "e34"],
    ],
}


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


def test_parse_circuits_file(tmp_path):
    m = cli.parse_matroid(write(tmp_path, "u3_2.json", U32_DOC))
    assert m.is_uniform(3, 2) and m.name == "u3_2"


def test_parse_matrix_file_builds_fano(tmp_path):
    m = cli.parse_matroid(write(tmp_path, "fano.json", FANO_DOC))
    assert (m.size, m.rank(), len(m.circuits)) == (7, 3, 14)


def test_parse_graph_file(tmp_path):
    m = cli.parse_matroid(write(tmp_path, "k4.json", K4_DOC))
    assert (m.size, m.rank(), len(m.circuits)) == (6, 3, 7)


def test_parse_rejects_axiom_violations(tmp_path):
    doc = {
        "format": "circuits",
        "ground": ["a", "b"],
        "circuits": [["a"], ["a", "b"]],
    }
    with pytest.raises(mc.AxiomError):
        cli.parse_matroid(write(tmp_path, "bad.json", doc))


def test_parse_rejects_malformed_and_degenerate(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{ not json", encoding="utf-8")
    with pytest.raises(mc.ParseError):
        cli.parse_matroid(path)
    with pytest.raises(mc.ParseError):
        cli.parse_matroid(
            write(tmp_path, "empty.json",
                  {"format": "circuits", "ground": [], "circuits": []})
        )
    with pytest.raises(mc.ParseError):
        cli.parse_matroid(
            write(tmp_path, "unknown.json", {"format": "nope"})
        )
    loops = {
        "format": "circuits",
        "ground": ["a", "b"],
        "circuits": [["a"], ["b"]],
    }
    with pytest.raises(mc.ParseError):
        cli.parse_matroid(write(tmp_path, "rank0.json", loops))


def test_parse_caps_large_ground(tmp_path):
    doc = {
        "format": "circuits",
        "ground": [f"x{i}" for i in range(65)],
        "circuits": [],
    }
    with pytest.raises(mc.CapExceeded):
        cli.parse_matroid(write(tmp_path, "big.json", doc))


def test_round_trip_preserves_canonical_circuits(tmp_path):
    for m in (mc.named("fano"), mc.uniform(5, 2), mc.named("vamos")):
        path = tmp_path / "roundtrip.json"
        cli.write_matroid(m, path)
        back = cli.parse_matroid(path)
        assert back == m


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_fano_exits_zero(tmp_path, capsys):
    path = write(tmp_path, "fano.json", FANO_DOC)
    out = tmp_path / "report.json"
    rc = cli.main(["verify", path, "--json", str(out)])
    assert rc == 0
    text = capsys.readouterr().out
    assert "fano" in text and "k=4" in text
    doc = json.loads(out.read_text())
    assert doc["report_version"] == 1
    entry = doc["entries"][0]
    assert entry["name"] == "fano"
    assert entry["achieved_sizes"] == [2, 4]
    assert entry["conjecture"][0]["k"] == 4
    assert entry["conjecture"][0]["oracle_ok"] is True
    witness = entry["conjecture"][0]["witness"]
    assert len(witness["intersection"]) == 2
    assert entry["property_suites"] == {
        "ce_families": "pass",
        "circuit_pairs": "pass",
        "rank2_circuits": "pass",
    }
    assert "ms" not in entry  # timings stay out of the machine report


def test_verify_bad_axioms_exits_two(tmp_path, capsys):
    doc = {
        "format": "circuits",
        "ground": ["a", "b"],
        "circuits": [["a"], ["a", "b"]],
    }
    rc = cli.main(["verify", write(tmp_path, "bad.json", doc)])
    capsys.readouterr()
    assert rc == 2


def test_verify_cap_exits_three(tmp_path, capsys):
    path = write(tmp_path, "fano.json", FANO_DOC)
    rc = cli.main(["verify", path, "--cap", "1"])
    capsys.readouterr()
    assert rc == 3


def test_exit_code_mapping():
    assert cli._exit_code_for(mc.CapExceeded("x")) == 3
    assert cli._exit_code_for(mc.TheoremViolation("x")) == 1
    assert cli._exit_code_for(mc.ExtractionFailed("x")) == 1
    assert cli._exit_code_for(mc.LiftFailed("x")) == 1
    assert cli._exit_code_for(mc.ParseError("x")) == 2
    assert cli._exit_code_for(mc.AxiomError(mc.AxiomReport(False, "C1"))) == 2


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------


def test_catalog_contents_and_determinism(tmp_path, capsys):
    out1 = tmp_path / "cat1"
    out2 = tmp_path / "cat2"
    assert cli.main(["catalog", "--out", str(out1)]) == 0
    assert cli.main(["catalog", "--out", str(out2)]) == 0
    capsys.readouterr()
    files1 = sorted(p.name for p in out1.glob("*.json"))
    files2 = sorted(p.name for p in out2.glob("*.json"))
    assert files1 == files2
    assert len(files1) >= 30
    assert "u10_5.json" in files1 and "fano.json" in files1
    for name in files1:
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()
    # Every file parses and passes validation at ingestion.
    for name in files1:
        m = cli.parse_matroid(out1 / name)
        assert mc.validate_circuit_axioms(m.circuits).ok


def test_catalog_u105_verifies_all_three(tmp_path, capsys):
    out = tmp_path / "cat"
    cli.main(["catalog", "--out", str(out)])
    report = mc.verify_conjecture(cli.parse_matroid(out / "u10_5.json"))
    capsys.readouterr()
    assert [e.k for e in report.entries] == [4, 5, 6]


# ---------------------------------------------------------------------------
# inspect
# ---------------------------------------------------------------------------


def test_inspect_cc_sizes(tmp_path, capsys):
    path = write(tmp_path, "fano.json", FANO_DOC)
    assert cli.main(["inspect", path, "--cc-sizes"]) == 0
    assert capsys.readouterr().out.strip() == "2,4"


def test_inspect_dual_of_u42_round_trips(tmp_path, capsys):
    m = mc.uniform(4, 2)
    src = tmp_path / "u4_2.json"
    cli.write_matroid(m, src)
    out = tmp_path / "dual.json"
    assert cli.main(["inspect", str(src), "--dual", "--out", str(out)]) == 0
    capsys.readouterr()
    assert cli.parse_matroid(out) == m  # self-dual


def test_inspect_cocircuits_of_k4(tmp_path, capsys):
    path = write(tmp_path, "k4.json", K4_DOC)
    assert cli.main(["inspect", path, "--cocircuits"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    sizes = sorted(line.count(",") + 1 for line in lines)
    assert sizes == [3, 3, 3, 3, 4, 4, 4]


def test_inspect_minor_writes_file(tmp_path, capsys):
    path = write(tmp_path, "u3_2.json", U32_DOC)
    out = tmp_path / "minor.json"
    rc = cli.main(["inspect", path, "--minor", "del=a", "--out", str(out)])
    capsys.readouterr()
    assert rc == 0
    m = cli.parse_matroid(out)
    assert m.ground.labels == ("b", "c") and len(m.circuits) == 0


def test_inspect_oxley_prints_x_and_y(tmp_path, capsys):
    path = write(tmp_path, "fano.json", FANO_DOC)
    cc = mc.find_intersection_of_size(cli.parse_matroid(path), 4)
    arg = "circuit=%s;cocircuit=%s" % (
        ",".join(cc.circuit.labels()),
        ",".join(cc.cocircuit.labels()),
    )
    assert cli.main(["inspect", path, "--oxley", arg]) == 0
    out = capsys.readouterr().out
    assert "X: " in out and "Y: " in out and "rank 3" in out


def test_inspect_summary_default(tmp_path, capsys):
    path = write(tmp_path, "u3_2.json", U32_DOC)
    assert cli.main(["inspect", path]) == 0
    assert "3 elements" in capsys.readouterr().out


def test_inspect_circuits(tmp_path, capsys):
    path = write(tmp_path, "u3_2.json", U32_DOC)
    assert cli.main(["inspect", path, "--circuits"]) == 0
    assert capsys.readouterr().out.strip() == "{a,b,c}"


def test_inspect_hyperplanes(tmp_path, capsys):
    doc = {
        "format": "circuits",
        "name": "u4_2",
        "ground": ["1", "2", "3", "4"],
        "circuits": [["1", "2", "3"], ["1", "2", "4"], ["1", "3", "4"], ["2", "3", "4"]],
    }
    path = write(tmp_path, "u4_2.json", doc)
    assert cli.main(["inspect", path, "--hyperplanes"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == ["{1}", "{2}", "{3}", "{4}"]


def test_verify_timings_flag_adds_ms(tmp_path, capsys):
    path = write(tmp_path, "fano.json", FANO_DOC)
    out = tmp_path / "timed.json"
    assert cli.main(["verify", path, "--json", str(out), "--timings"]) == 0
    capsys.readouterr()
    entry = json.loads(out.read_text())["entries"][0]
    assert "ms" in entry and entry["ms"] >= 0
