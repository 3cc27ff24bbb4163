import io

import pytest

from cli import main
from constructors import catalog, catalog_lookup, construct, special
from graph_io import emit_graph6, parse_graph6
from graph_core import is_isomorphic
from models import GraphFamily

DW5 = emit_graph6(construct(GraphFamily.DOUBLE_WHEEL, 5))
C29 = emit_graph6(construct(GraphFamily.SQUARE, 9))
J = emit_graph6(special("J"))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_catalog_graph(capsys):
    code, out, _ = run(capsys, "classify", DW5)
    assert code == 0
    assert out.strip() == "4-connected: yes; W6-minor-free: yes; catalog: DW_5"


def test_classify_graph_with_w6(capsys):
    code, out, _ = run(capsys, "classify", C29)
    assert code == 0
    assert out.startswith("4-connected: yes; W6-minor-free: no; certificate: ")


def test_classify_named_input(capsys):
    code, out, _ = run(capsys, "classify", "--named", "K43_41")
    assert code == 0
    assert out.strip().endswith("catalog: K43_41")


def test_minor_exit_codes(capsys):
    code, out, _ = run(capsys, "minor", C29, "--pattern", "w6")
    assert code == 0
    assert out.splitlines()[0].startswith("h-vertex 0:")
    code, out, _ = run(capsys, "minor", DW5)
    assert (code, out.strip()) == (1, "none")
    code, out, _ = run(capsys, "minor", "--named", "petersen", "--pattern", "k5", "--topological")
    assert (code, out.strip()) == (1, "no")


def test_connectivity_command(capsys):
    code, out, _ = run(capsys, "connectivity", "--named", "W:6", "--k", "4")
    assert code == 1
    assert out.splitlines()[0] == "connectivity: 3"
    code, _, _ = run(capsys, "connectivity", DW5, "--k", "4")
    assert code == 0


def test_hamilton_command(capsys):
    code, out, _ = run(capsys, "hamilton", "--named", "C:6")
    assert (code, out.strip()) == (0, "0 1 2 3 4 5")
    code, out, _ = run(capsys, "hamilton", J)
    assert (code, out.strip()) == (1, "none")


def test_splits_command(capsys):
    code, out, _ = run(capsys, "splits", "--named", "C2_5", "--4conn")
    assert code == 0
    assert len(out.splitlines()) == 3
    code, out, _ = run(capsys, "splits", "--named", "C2_6", "--w6-free", "--planar")
    found = [parse_graph6(line) for line in out.splitlines()]
    assert len(found) == 1 and is_isomorphic(found[0], construct(GraphFamily.DOUBLE_WHEEL, 5))


def test_planarity_filter_applies_without_w6_free(capsys):
    _, everything, _ = run(capsys, "splits", "--named", "K6_minus_e")
    code, planar, _ = run(capsys, "splits", "--named", "K6_minus_e", "--planar")
    assert code == 0
    # contracting the new edge of a split gives K6 minus an edge back, and contractions keep planarity
    assert planar == ""
    _, nonplanar, _ = run(capsys, "splits", "--named", "K6_minus_e", "--nonplanar")
    assert nonplanar == everything


def test_chain_command(capsys):
    code, out, _ = run(capsys, "chain", "--named", "K6")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 and lines[1].startswith("contract (0,1) -> ")
    code, out, _ = run(capsys, "chain", DW5, "--target", "c26")
    assert code == 0
    code, _, err = run(capsys, "chain", "--named", "C2_8", "--target", "c26")
    assert code == 2 and "error" in err


def test_catalog_formats(capsys):
    code, out, _ = run(capsys, "catalog", "--format", "graph6")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert len(rows) == 14
    assert [name for name, _ in rows] == [entry.name for entry in catalog()]
    assert rows[0] == ["C2_5", "D~{"]
    for name, text in rows:
        assert catalog_lookup(parse_graph6(text)) == name
    code, out, _ = run(capsys, "catalog", "--format", "dot")
    assert out.count("graph ") == 14


def test_generate_cubic_command(capsys):
    code, out, _ = run(capsys, "generate-cubic", "--max-n", "8")
    assert code == 0
    # K33, the cube and the Wagner graph
    assert len(out.splitlines()) == 3


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "classify", "D~")
    assert code == 2
    assert "byte 2" in err


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["classify"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["minor", DW5, "--pattern", "k7"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["classify", DW5, "--named", "K6"])
    assert info.value.code == 2


def test_batch_mode_keeps_input_order(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(f"{J}\nD~\n{DW5}\n"))
    code, out, _ = run(capsys, "hamilton", "--stdin")
    lines = out.splitlines()
    assert code == 2
    assert lines[0] == "none"
    assert lines[1].startswith("line 2: byte 2:")
    assert lines[2].split()[0] == "0"


def test_batch_mode_from_file(capsys, tmp_path):
    path = tmp_path / "input.g6"
    path.write_text(f"{DW5}\n{C29}\n")
    code, out, _ = run(capsys, "minor", "--file", str(path), "--topological", "--pattern", "k4")
    assert code == 0
    assert out.splitlines() == ["yes", "yes"]


def test_verify_theorem_command(capsys, tmp_path):
    report = tmp_path / "report.txt"
    code, out, _ = run(capsys, "verify-theorem", "--max-n", "6", "--report", str(report),
                       "--cache-dir", str(tmp_path / "cache"))
    assert code == 0
    assert "status: ok" in out
    assert report.read_text().strip() == out.strip()


def test_workers_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("W6LAB_WORKERS", "2")
    monkeypatch.setattr("sys.stdin", io.StringIO(f"{DW5}\n{C29}\n"))
    code, out, _ = run(capsys, "classify", "--stdin")
    assert code == 0
    assert out.splitlines()[0].endswith("catalog: DW_5")
