"""Command-line behavior: exit codes, output formats, option wiring."""

import json

import pytest

from ethicskb.cli import main


def test_kb_validate_valid_tree_is_silent(fixtures_dir, capsys):
    exit_code = main(["kb-validate", str(fixtures_dir / "kb" / "census-mini.json")])
    captured = capsys.readouterr()
    assert exit_code == 0
    assert captured.out == "" and captured.err == ""


def test_kb_validate_names_the_violation(malformed_dir, capsys):
    exit_code = main(["kb-validate", str(malformed_dir / "cycle_self_loop.json")])
    captured = capsys.readouterr()
    assert exit_code == 1
    assert "cycle" in captured.err
    assert "cycle_self_loop.json" in captured.err


def test_kb_validate_bad_json(tmp_path, capsys):
    path = tmp_path / "junk.json"
    path.write_text("}{", encoding="utf-8")
    assert main(["kb-validate", str(path)]) == 1
    assert "junk.json" in capsys.readouterr().err


def test_kb_render_filters_by_verdict(fixtures_dir, capsys):
    exit_code = main([
        "kb-render", str(fixtures_dir / "kb" / "ethics-practices.json"),
        "--verdict", "demanded",
    ])
    captured = capsys.readouterr()
    assert exit_code == 0
    lines = captured.out.strip().splitlines()
    assert any("Feasibly minimize data collected/stored" in line for line in lines)
    assert all("— Demanded" in line for line in lines)


def test_kb_render_provenance_filter(fixtures_dir, capsys):
    exit_code = main([
        "kb-render", str(fixtures_dir / "kb" / "ethics-practices.json"),
        "--provenance", "standards",
    ])
    captured = capsys.readouterr()
    assert exit_code == 0
    assert len(captured.out.strip().splitlines()) == 3


def test_kb_render_empty_filter_fails(fixtures_dir, capsys):
    exit_code = main([
        "kb-render", str(fixtures_dir / "kb" / "census-mini.json"),
        "--provenance", "standards",
    ])
    assert exit_code == 1
    assert capsys.readouterr().err


def test_compare_text_report(fixtures_dir, capsys):
    exit_code = main(["compare", str(fixtures_dir / "census")])
    captured = capsys.readouterr()
    assert exit_code == 0
    assert "Observation comparison: census" in captured.out
    assert "+170%" in captured.out


def test_compare_json_to_file_and_determinism(fixtures_dir, tmp_path):
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    assert main(["compare", str(fixtures_dir / "encore"), "--format", "json",
                 "--out", str(out_a)]) == 0
    assert main(["compare", str(fixtures_dir / "encore"), "--format", "json",
                 "--out", str(out_b)]) == 0
    assert out_a.read_bytes() == out_b.read_bytes()
    doc = json.loads(out_a.read_text())
    assert doc["bundle"] == "encore"
    assert doc["stages"][2]["gains"]["coverage"] == 380


def test_compare_zero_plus_alpha_weight_makes_coverage_the_unique_count(
    fixtures_dir, tmp_path
):
    out = tmp_path / "weighted.json"
    assert main(["compare", str(fixtures_dir / "census"), "--format", "json",
                 "--weight-plus-alpha", "0", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    for stage in doc["stages"]:
        for side in ("E", "T"):
            assert stage["sides"][side]["coverage"] == stage["sides"][side]["counts"]["unique"]


def test_compare_missing_bundle_fails(tmp_path, capsys):
    assert main(["compare", str(tmp_path / "nope")]) == 1
    assert "nope" in capsys.readouterr().err


def test_compare_broken_bundle_names_file_and_id(fixtures_dir, tmp_path, capsys):
    bundle = tmp_path / "broken"
    bundle.mkdir()
    for name in ("dataset_e.json", "dataset_t.json", "mapping_e_to_t.json",
                 "mapping_t_to_e.json"):
        bundle.joinpath(name).write_text(
            (fixtures_dir / "census" / name).read_text(), encoding="utf-8"
        )
    mapping = json.loads((bundle / "mapping_e_to_t.json").read_text())
    mapping["records"][0]["primary_item"] = "ghost-01"
    (bundle / "mapping_e_to_t.json").write_text(json.dumps(mapping), encoding="utf-8")
    assert main(["compare", str(bundle)]) == 1
    err = capsys.readouterr().err
    assert "ghost-01" in err and "broken" in err


def test_compare_csv_format(fixtures_dir, capsys):
    assert main(["compare", str(fixtures_dir / "census"), "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "bundle,stage,side,metric,value,formatted"
    assert "census,no_redundancy,gain,coverage,170,+170%" in out


def test_unknown_subcommand_exits_with_usage():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
