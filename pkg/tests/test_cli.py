import json

import pytest

from bcintegrate.cli import EXIT_CONFLICTS, EXIT_ERROR, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def library_args(data_dir, *extra):
    return [
        "integrate",
        "--domain", str(data_dir / "library.onto.json"),
        "--components", str(data_dir / "lib1.json"), str(data_dir / "lib2.json"),
        *extra,
    ]


def test_integrate_library(capsys, data_dir, tmp_path):
    report = tmp_path / "r.json"
    merged = tmp_path / "m.json"
    code, out, _ = run(capsys, *library_args(
        data_dir, "--report", str(report), "--merged", str(merged)))
    assert code == EXIT_OK
    assert "Synonymous: 1" in out
    assert "HomonymNamingConflict: 1" in out
    assert "Different: 2" in out
    data = json.loads(report.read_text())
    assert data["summary"]["Synonymous"] == 1
    merged_data = json.loads(merged.read_text())
    assert len(merged_data["unresolved_conflicts"]) == 1


def test_fail_on_conflict_exit_code(capsys, data_dir):
    code, _, _ = run(capsys, *library_args(data_dir, "--fail-on-conflict"))
    assert code == EXIT_CONFLICTS


def test_missing_ontology_path(capsys, data_dir, tmp_path):
    code, _, err = run(
        capsys, "integrate",
        "--domain", str(tmp_path / "nope.json"),
        "--components", str(data_dir / "lib1.json"), str(data_dir / "lib2.json"),
    )
    assert code == EXIT_ERROR
    assert "nope.json" in err


def test_single_system_input(capsys, data_dir):
    code, _, err = run(
        capsys, "integrate",
        "--domain", str(data_dir / "library.onto.json"),
        "--components", str(data_dir / "lib1.json"),
    )
    assert code == EXIT_ERROR
    assert "2 systems" in err


def test_output_path_must_differ_from_input(capsys, data_dir):
    code, _, err = run(capsys, *library_args(
        data_dir, "--report", str(data_dir / "lib1.json")))
    assert code == EXIT_ERROR
    assert "also an input" in err


def test_integrate_json_format(capsys, data_dir):
    code, out, _ = run(capsys, *library_args(data_dir, "--format", "json"))
    assert code == EXIT_OK
    data = json.loads(out)
    assert len(data["verdicts"]) == 4


def test_integrate_accepts_xml(capsys, data_dir):
    code, out, _ = run(
        capsys, "integrate",
        "--domain", str(data_dir / "library.onto.json"),
        "--components", str(data_dir / "lib1.xml"), str(data_dir / "lib2.json"),
    )
    assert code == EXIT_OK
    assert "Synonymous: 1" in out


def test_similarity_person_reader(capsys, data_dir):
    code, out, _ = run(
        capsys, "similarity", "Lib1:Person", "Lib2:Reader",
        "--domain", str(data_dir / "library.onto.json"),
        "--components", str(data_dir / "lib1.json"), str(data_dir / "lib2.json"),
    )
    assert code == EXIT_OK
    assert "score: 1" in out
    assert "consulting" in out


def test_similarity_prints_exact_rational(capsys, data_dir):
    code, out, _ = run(
        capsys, "similarity", "S1:client", "S2:client",
        "--domain", str(data_dir / "empty.onto.json"),
        "--components", str(data_dir / "client_s1.json"), str(data_dir / "client_s2.json"),
    )
    assert code == EXIT_OK
    assert "score: 1/2" in out
    assert "0.5" not in out


def test_similarity_self_is_one(capsys, data_dir):
    code, out, _ = run(
        capsys, "similarity", "Lib1:Person", "Lib1:Person",
        "--components", str(data_dir / "lib1.json"),
    )
    assert code == EXIT_OK
    assert "score: 1" in out


def test_similarity_json_mode(capsys, data_dir):
    code, out, _ = run(
        capsys, "similarity", "S1:client", "S2:client", "--format", "json",
        "--domain", str(data_dir / "empty.onto.json"),
        "--components", str(data_dir / "client_s1.json"), str(data_dir / "client_s2.json"),
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["score"] == "1/2"


def test_similarity_unknown_reference_lists_available(capsys, data_dir):
    code, _, err = run(
        capsys, "similarity", "Lib1:Nobody", "Lib2:Reader",
        "--components", str(data_dir / "lib1.json"), str(data_dir / "lib2.json"),
    )
    assert code == EXIT_ERROR
    assert "Lib1:Person" in err


def test_validate_ok(capsys, data_dir):
    code, out, _ = run(
        capsys, "validate",
        "--domain", str(data_dir / "library.onto.json"),
        "--components", str(data_dir / "lib1.json"),
    )
    assert code == EXIT_OK
    assert "ok" in out


def test_validate_reports_problems(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"system": "S1", "components": [{"name": "X", "kind": "gizmo"}]}')
    code, out, _ = run(capsys, "validate", "--components", str(bad))
    assert code == EXIT_ERROR
    assert "gizmo" in out


def test_figures_directory(capsys, data_dir, tmp_path):
    figures = tmp_path / "figs"
    code, _, _ = run(capsys, *library_args(data_dir, "--figures", str(figures)))
    assert code == EXIT_OK
    assert (figures / "verdicts.csv").exists()
    assert (figures / "summary.png").exists()
    pngs = list(figures.glob("matrix_*.png"))
    assert len(pngs) == 4
    csv_text = (figures / "verdicts.csv").read_text()
    assert "HomonymNamingConflict" in csv_text
    assert "2/3" in csv_text


def test_byte_identical_outputs(capsys, data_dir, tmp_path):
    paths = []
    for run_id in (1, 2):
        report = tmp_path / f"r{run_id}.json"
        merged = tmp_path / f"m{run_id}.json"
        code, _, _ = run(capsys, *library_args(
            data_dir, "--report", str(report), "--merged", str(merged)))
        assert code == EXIT_OK
        paths.append((report.read_bytes(), merged.read_bytes()))
    assert paths[0] == paths[1]
