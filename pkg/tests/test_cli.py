import io
import json

import pytest

from sunlet_factors.cli import cli_main
from sunlet_factors.constructions import odd_square_covering
from sunlet_factors.serialize import to_json


def run(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------------------------------------------
# build
# ------------------------------------------------------------------


def test_build_json_to_stdout(capsys):
    code, out, _ = run(capsys, "build", "--theorem", "3", "--n", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["theorem"] == "T3" and doc["domain"] == {"s": 4, "p": 4}


def test_build_writes_files(tmp_path, capsys):
    for fmt, needle in (("json", '"schemaVersion"'), ("dot", "digraph"), ("svg", "<svg")):
        target = tmp_path / f"out.{fmt}"
        code, _, _ = run(capsys, "build", "--theorem", "2", "--n", "2", "--format", fmt, "--out", str(target))
        assert code == 0
        assert needle in target.read_text()


def test_build_svg_layouts_differ(capsys):
    _, flat, _ = run(capsys, "build", "--theorem", "1", "--n", "4", "--format", "svg", "--layout", "flat")
    _, annular, _ = run(capsys, "build", "--theorem", "1", "--n", "4", "--format", "svg", "--layout", "annular")
    assert flat != annular and flat.count("<circle") == annular.count("<circle") == 16


def test_build_theorem_1_out_of_range_exits_3(capsys):
    code, _, err = run(capsys, "build", "--theorem", "1", "--n", "2")
    assert code == 3
    assert "parameter" in err


def test_build_output_is_deterministic(capsys):
    _, a, _ = run(capsys, "build", "--theorem", "3", "--n", "3", "--format", "dot")
    _, b, _ = run(capsys, "build", "--theorem", "3", "--n", "3", "--format", "dot")
    assert a == b


def test_build_with_embedded_report(capsys):
    code, out, _ = run(capsys, "build", "--theorem", "2", "--n", "2", "--report")
    assert code == 0
    assert json.loads(out)["report"]["rOnVertices"] == 2


# ------------------------------------------------------------------
# verify
# ------------------------------------------------------------------


def test_build_then_verify_pipeline(tmp_path, capsys):
    doc = tmp_path / "covering.json"
    code, _, _ = run(capsys, "build", "--theorem", "3", "--n", "2", "--out", str(doc))
    assert code == 0
    code, out, _ = run(capsys, "verify", "--in", str(doc))
    assert code == 0
    assert json.loads(out)["isEdgeBijective"] is True


def test_verify_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(to_json(odd_square_covering(2))))
    code, out, _ = run(capsys, "verify", "--in", "-")
    assert code == 0
    assert json.loads(out)["rOnVertices"] == 2


def test_verify_tampered_document_exits_2(tmp_path, capsys):
    doc = json.loads(to_json(odd_square_covering(2)))
    doc["vertexMap"][0] = [0, 0]  # collide with another fiber
    target = tmp_path / "tampered.json"
    target.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "--in", str(target))
    assert code == 2
    report = json.loads(out)
    assert report["rOnVertices"] is None or not report["isHomomorphism"]


def test_verify_invalid_document_exits_1(tmp_path, capsys):
    target = tmp_path / "broken.json"
    target.write_text("{not json")
    code, _, err = run(capsys, "verify", "--in", str(target))
    assert code == 1
    assert "invalid document" in err


def test_verify_missing_file_exits_1(capsys):
    code, _, _ = run(capsys, "verify", "--in", "/nonexistent/file.json")
    assert code == 1


def test_verify_full_reports_more_counterexamples(tmp_path, capsys):
    doc = json.loads(to_json(odd_square_covering(2)))
    doc["vertexMap"] = [[0, 0]] * len(doc["vertexMap"])
    target = tmp_path / "collapsed.json"
    target.write_text(json.dumps(doc))
    code_a, out_a, _ = run(capsys, "verify", "--in", str(target))
    code_b, out_b, _ = run(capsys, "verify", "--in", str(target), "--full")
    assert code_a == code_b == 2
    assert len(json.loads(out_b)["failures"]) > len(json.loads(out_a)["failures"])


# ------------------------------------------------------------------
# oracle
# ------------------------------------------------------------------


def test_oracle_fsm_count_prints_2(capsys):
    code, out, _ = run(capsys, "oracle", "fsm-count", "--p", "5")
    assert code == 0 and out.strip() == "2"


def test_oracle_fsm_count_rejects_bad_p(capsys):
    code, _, _ = run(capsys, "oracle", "fsm-count", "--p", "2")
    assert code == 3


def test_oracle_expand_h(capsys):
    code, out, _ = run(capsys, "oracle", "expand-h", "--n", "3")
    assert code == 0
    assert out.strip() == "(0,0) (0,1) (0,2) (1,2) (1,0) (1,1) (2,1) (2,2) (2,0)"


def test_oracle_staircases(capsys):
    code, out, _ = run(capsys, "oracle", "staircases", "--n", "2")
    assert code == 0
    assert "staircase 0: (0,0) (1,0)" in out
    assert "tiling: ok" in out


def test_oracle_decompose_with_limit(capsys):
    code, out, _ = run(capsys, "oracle", "decompose", "--p", "4", "--q", "4", "--sunlet", "4", "--limit", "3")
    assert code == 0 and "solutions: 3" in out


def test_oracle_decompose_json_output(capsys):
    code, out, _ = run(capsys, "oracle", "decompose", "--p", "3", "--q", "3", "--sunlet", "4", "--json")
    assert code == 0
    lines = out.strip().splitlines()
    assert json.loads(lines[0]) == []
    assert lines[1] == "solutions: 0"


def test_oracle_decompose_bound_exit_3(capsys):
    code, _, err = run(capsys, "oracle", "decompose", "--p", "5", "--q", "5", "--sunlet", "5")
    assert code == 3 and "bound" in err


# ------------------------------------------------------------------
# usage errors
# ------------------------------------------------------------------


def test_unknown_flag_exits_1(capsys):
    assert run(capsys, "build", "--bogus")[0] == 1


def test_missing_subcommand_exits_1(capsys):
    assert run(capsys)[0] == 1


def test_bad_theorem_value_exits_1(capsys):
    assert run(capsys, "build", "--theorem", "4", "--n", "3")[0] == 1


def test_help_exits_0(capsys):
    assert run(capsys, "--help")[0] == 0


@pytest.mark.parametrize("fmt", ["json", "dot", "svg"])
def test_every_format_verifies_or_renders_each_theorem(capsys, fmt):
    for theorem, n in (("1", "3"), ("2", "2"), ("3", "2")):
        code, out, _ = run(capsys, "build", "--theorem", theorem, "--n", n, "--format", fmt)
        assert code == 0 and out
