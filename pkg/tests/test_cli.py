"""Command-line interface: output formats, exit codes, determinism."""

import json

import pytest

from phispec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_spectrum_markdown(capsys):
    code, out, err = run(capsys, "spectrum", "--family", "complete:23",
                         "--weight", "isi")
    assert code == 0
    assert "| 242 | 1 |" in out
    assert "| -11 | 22 |" in out
    assert "energy: 484" in out
    assert "spectral radius: 242" in out
    assert err == ""


def test_spectrum_json(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "complete:23",
                       "--weight", "isi", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["eigenvalues"][0]["value"] == pytest.approx(242.0)
    assert payload["eigenvalues"][1]["multiplicity"] == 22
    assert payload["energy"] == pytest.approx(484.0)
    assert payload["spectral_radius"] == pytest.approx(242.0)


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "crown:3,2",
                       "--weight", "isi", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "value,multiplicity"
    assert len(lines) == 5, "hexagon spectrum has four groups"


def test_spectrum_from_edge_list(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("n 3\n0 1\n1 2\n0 2\n")
    code, out, _ = run(capsys, "spectrum", "--edges", str(f), "--weight", "adj")
    assert code == 0
    assert "| 2 | 1 |" in out
    assert "| -1 | 2 |" in out


def test_compare_tripartite(capsys):
    code, out, _ = run(capsys, "compare", "--family", "tripartite:3",
                       "--weight", "isi", "--delete-cross-edge")
    assert code == 0
    assert "| energy | 36 | 37.5126 | 1.5126" in out
    assert "verdict: increased" in out
    assert "ratio test: n/a" in out


def test_compare_complete_has_ratio(capsys):
    code, out, _ = run(capsys, "compare", "--family", "complete:23",
                       "--weight", "isi", "--delete-edge")
    assert code == 0
    assert "ratio test: inconclusive" in out
    assert "verdict: decreased" in out
    assert "480.372" in out


def test_compare_star_add_leaf(capsys):
    code, out, _ = run(capsys, "compare", "--family", "star:5",
                       "--weight", "isi", "--add-leaf-edge")
    assert code == 0
    assert "| energy | 3.2 | 5.79971 |" in out
    assert "verdict: increased" in out


def test_compare_disconnection_note(capsys):
    code, out, _ = run(capsys, "compare", "--family", "star:5",
                       "--weight", "isi", "--delete-edge", "--edge", "0,1")
    assert code == 0
    assert "disconnected" in out


def test_compare_csv_schema(capsys):
    code, out, _ = run(capsys, "compare", "--family", "complete:25",
                       "--weight", "isi", "--delete-edge", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("family,n,weight,E_before,E_after,delta")
    assert len(lines) == 2
    assert lines[1].startswith("complete:25,25,ISI,576")


def test_compare_json(capsys):
    code, out, _ = run(capsys, "compare", "--family", "star:5",
                       "--weight", "isi", "--add-leaf-edge", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "increased"
    assert payload["ratio_test"] is None
    assert payload["delta_energy"] == pytest.approx(5.79971 - 3.2, abs=5e-4)
    assert payload["spectrum_before"]["energy"] == pytest.approx(3.2)


def test_compare_edge_list_addition(tmp_path, capsys):
    f = tmp_path / "p3.txt"
    f.write_text("0 1\n1 2\n")
    code, out, _ = run(capsys, "compare", "--edges", str(f), "--weight", "adj",
                       "--add-edge", "--edge", "0,2")
    assert code == 0
    assert "| energy | 2.82843 | 4 |" in out


def test_compare_flag_validation(capsys):
    code, _, err = run(capsys, "compare", "--family", "complete:5",
                       "--weight", "isi", "--delete-edge", "--add-edge")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "compare", "--family", "complete:5",
                       "--weight", "isi")
    assert code == 2
    code, _, err = run(capsys, "compare", "--family", "complete:5",
                       "--weight", "isi", "--add-leaf-edge")
    assert code == 2 and "star" in err
    code, _, err = run(capsys, "compare", "--family", "complete:5",
                       "--weight", "isi", "--add-edge")
    assert code == 2 and "--edge" in err


def test_tables_tripartite(capsys):
    code, out, _ = run(capsys, "tables", "--which", "tripartite")
    assert code == 0
    for cell in ("36", "64", "100", "144", "324", "900",
                 "37.5126", "67.3097", "105.166", "151.06", "336.858", "924.671"):
        assert cell in out


def test_tables_star(capsys):
    code, out, _ = run(capsys, "tables", "--which", "star")
    assert code == 0
    for cell in ("3.2", "5.7496", "19.7008", "5.79971", "22.2053"):
        assert cell in out


def test_tables_complete_reference_markers(capsys):
    code, out, _ = run(capsys, "tables", "--which", "complete")
    assert code == 0
    lines = out.splitlines()
    isi_row = next(l for l in lines if l.startswith("| ISI"))
    assert "matches" in isi_row
    r_row = next(l for l in lines if l.startswith("| R "))
    assert "none" in r_row and "unchanged@tol" in r_row
    assert sum("diverges" in l for l in lines if l.startswith("|")) == 8
    assert any("transposed at the source" in l for l in lines)


def test_tables_complete_other_order(capsys):
    code, out, _ = run(capsys, "tables", "--which", "complete", "--n", "10")
    assert code == 0
    assert "diverges" not in out
    assert "matches" not in out.replace("none", "")


def test_tables_csv(capsys):
    code, out, _ = run(capsys, "tables", "--which", "complete", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 11
    assert lines[0].endswith(",reference")


def test_tables_reject_json(capsys):
    code, _, err = run(capsys, "tables", "--which", "star", "--format", "json")
    assert code == 2 and "md and csv" in err


def test_integrality_exact_yes(capsys):
    code, out, _ = run(capsys, "integrality", "--family", "complete:23",
                       "--weight", "isi")
    assert code == 0
    assert "integral: yes" in out
    assert "method: exact" in out
    assert "note" not in out


def test_integrality_exact_no(capsys):
    code, out, _ = run(capsys, "integrality", "--family", "crown:2,2",
                       "--weight", "isi")
    assert code == 0
    assert "integral: no" in out
    assert "witness: 0.5" in out


def test_integrality_numeric_fallback(capsys):
    code, out, _ = run(capsys, "integrality", "--family", "starplus:5",
                       "--weight", "isi", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["integral"] is False
    assert payload["method"] == "numeric-tol"
    assert "heuristic" in payload["note"]


def test_integrality_edge_list_is_numeric(tmp_path, capsys):
    f = tmp_path / "k3.txt"
    f.write_text("0 1\n1 2\n0 2\n")
    code, out, _ = run(capsys, "integrality", "--edges", str(f), "--weight", "adj")
    assert code == 0
    assert "integral: yes" in out
    assert "method: numeric-tol" in out
    assert "heuristic" in out


def test_exit_codes_for_bad_input(capsys):
    assert run(capsys, "spectrum", "--weight", "isi")[0] == 2
    assert run(capsys, "spectrum", "--family", "complete:23",
               "--weight", "nope")[0] == 2
    assert run(capsys, "spectrum", "--family", "ring:4", "--weight", "isi")[0] == 2
    assert run(capsys, "spectrum", "--family", "complete:0", "--weight", "isi")[0] == 2
    assert run(capsys, "spectrum", "--edges", "/no/such/file",
               "--weight", "isi")[0] == 2
    code, _, err = run(capsys, "compare", "--family", "complete:4",
                       "--weight", "isi", "--delete-edge", "--edge", "zz")
    assert code == 2 and "U,V" in err


def test_family_and_edges_are_exclusive(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("0 1\n")
    code, _, err = run(capsys, "spectrum", "--family", "complete:3",
                       "--edges", str(f), "--weight", "isi")
    assert code == 2 and "exactly one" in err


def test_tol_env_override(monkeypatch, capsys):
    # an absurdly wide tolerance merges the whole spectrum into one group
    monkeypatch.setenv("PHISPEC_TOL", "1000")
    _, out, _ = run(capsys, "spectrum", "--family", "complete:23",
                    "--weight", "isi", "--format", "csv")
    assert len(out.strip().splitlines()) == 2
    monkeypatch.setenv("PHISPEC_TOL", "not-a-number")
    code, _, err = run(capsys, "spectrum", "--family", "complete:23",
                       "--weight", "isi")
    assert code == 2 and "PHISPEC_TOL" in err


def test_tol_flag_beats_env(monkeypatch, capsys):
    monkeypatch.setenv("PHISPEC_TOL", "1000")
    _, out, _ = run(capsys, "spectrum", "--family", "complete:23",
                    "--weight", "isi", "--format", "csv",
                    "--grouping-tol", "1e-7")
    assert len(out.strip().splitlines()) == 3


def test_output_to_file(tmp_path, capsys):
    target = tmp_path / "out.md"
    code, out, _ = run(capsys, "tables", "--which", "star", "--out", str(target))
    assert code == 0
    assert out == ""
    assert "22.2053" in target.read_text()


def test_deterministic_output(capsys):
    a = run(capsys, "tables", "--which", "complete")[1]
    b = run(capsys, "tables", "--which", "complete")[1]
    assert a == b
    c = run(capsys, "compare", "--family", "tripartite:4", "--weight", "isi",
            "--delete-cross-edge", "--format", "json")[1]
    d = run(capsys, "compare", "--family", "tripartite:4", "--weight", "isi",
            "--delete-cross-edge", "--format", "json")[1]
    assert c == d
