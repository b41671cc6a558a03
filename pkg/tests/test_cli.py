from __future__ import annotations

import stat
from pathlib import Path

from oodoc.cli import main
from oodoc.xmlio import parse_model, serialize_model

from conftest import FIXTURE_DIR, PROJECT_NAME, load_fixture_project


def run(capsys, *argv) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def analyze_into(capsys, out_dir: Path, *extra) -> tuple[int, str, str]:
    return run(
        capsys,
        "analyze",
        str(FIXTURE_DIR),
        "-o",
        str(out_dir),
        "--name",
        PROJECT_NAME,
        *extra,
    )


def tree_bytes(root: Path) -> dict[str, bytes]:
    return {
        p.relative_to(root).as_posix(): p.read_bytes()
        for p in sorted(root.rglob("*"))
        if p.is_file()
    }


def test_analyze_produces_all_outputs(tmp_path, capsys):
    out = tmp_path / "out"
    code, stdout, _ = analyze_into(capsys, out)
    assert code == 0
    assert "NoM 29" in stdout
    assert (out / "model.xml").is_file()
    assert (out / "metrics.txt").read_text(encoding="utf-8").splitlines()[4] == "NoM 29"
    docs = out / "docs"
    for name in ("package", "class-info", "class-dependency", "class-content", "method-dependency"):
        assert (docs / f"{name}.dot").is_file()
    per_class = sorted(p.name for p in (docs / "method-info").glob("*.dot"))
    assert len(per_class) == 6
    assert "Drawing.Shapes.coreFrame.MyShape.dot" in per_class
    assert len(list((docs / "method-content").glob("*.dot"))) == 6
    project = parse_model((out / "model.xml").read_text(encoding="utf-8"))
    assert project.name == PROJECT_NAME


def test_analyze_twice_is_byte_identical(tmp_path, capsys):
    first = tmp_path / "a"
    second = tmp_path / "b"
    assert analyze_into(capsys, first)[0] == 0
    assert analyze_into(capsys, second)[0] == 0
    assert tree_bytes(first) == tree_bytes(second)


def test_analyze_empty_directory_fails(tmp_path, capsys):
    empty = tmp_path / "empty"
    empty.mkdir()
    code, _, stderr = run(capsys, "analyze", str(empty))
    assert code == 2
    assert "no source files" in stderr


def test_analyze_single_document_selection(tmp_path, capsys):
    out = tmp_path / "out"
    code, _, _ = analyze_into(capsys, out, "--documents", "class-dependency")
    assert code == 0
    produced = [p.relative_to(out / "docs").as_posix() for p in (out / "docs").rglob("*.dot")]
    assert produced == ["class-dependency.dot"]


def test_analyze_merged_method_documents(tmp_path, capsys):
    out = tmp_path / "out"
    code, _, _ = analyze_into(
        capsys, out, "--documents", "method-info,method-content", "--merge-method-docs"
    )
    assert code == 0
    produced = sorted(
        p.relative_to(out / "docs").as_posix() for p in (out / "docs").rglob("*.dot")
    )
    assert produced == ["method-content.dot", "method-info.dot"]


def test_analyze_strict_fails_on_bad_file(tmp_path, capsys):
    src = tmp_path / "src"
    src.mkdir()
    (src / "Good.java").write_text("class Good {}", encoding="utf-8")
    (src / "Bad.java").write_text("class Bad { void m() {", encoding="utf-8")
    out = tmp_path / "out"
    code, _, stderr = run(capsys, "analyze", str(src), "-o", str(out))
    assert code == 0
    assert "parse failure" in stderr
    code, _, _ = run(capsys, "analyze", str(src), "-o", str(out), "--strict")
    assert code == 2


def test_unknown_document_kind_is_usage_error(tmp_path, capsys):
    code, _, stderr = run(
        capsys, "analyze", str(FIXTURE_DIR), "-o", str(tmp_path), "--documents", "wiggle"
    )
    assert code == 1
    assert "wiggle" in stderr


def test_missing_subcommand_is_usage_error(capsys):
    assert run(capsys)[0] == 1
    assert run(capsys, "frobnicate")[0] == 1


def test_metrics_subcommand(tmp_path, capsys):
    json_path = tmp_path / "metrics.json"
    code, stdout, _ = run(
        capsys, "metrics", str(FIXTURE_DIR), "--json", str(json_path)
    )
    assert code == 0
    assert "NoM 29" in stdout
    assert "NoA 14" in stdout
    import json

    assert json.loads(json_path.read_text(encoding="utf-8"))["noc"] == 6


def test_document_subcommand_requires_documents(tmp_path, capsys):
    code, _, _ = run(capsys, "document", str(FIXTURE_DIR), "-o", str(tmp_path))
    assert code == 1


def test_document_subcommand_writes_requested(tmp_path, capsys):
    out = tmp_path / "out"
    code, _, _ = run(
        capsys, "document", str(FIXTURE_DIR), "-o", str(out), "--documents", "package"
    )
    assert code == 0
    assert (out / "docs" / "package.dot").is_file()


def test_evaluate_gold_against_itself(tmp_path, capsys):
    gold = tmp_path / "gold.xml"
    gold.write_text(serialize_model(load_fixture_project()), encoding="utf-8")
    code, stdout, _ = run(
        capsys, "evaluate", "--retrieved", str(gold), "--reference", str(gold)
    )
    assert code == 0
    assert "precision 1.0000" in stdout
    assert "recall 1.0000" in stdout


def _write_link_pair(tmp_path) -> tuple[Path, Path]:
    """Two models whose link overlap is 90 of 95: the reference holds 93
    attributes + class + package (95 links); the retrieved drops five
    attributes."""

    def model(attr_count: int) -> str:
        attrs = "".join(
            f'<Attribute Name="f{i}" DeclaredType="int" AccessLevel="private" IsStatic="false"/>'
            for i in range(attr_count)
        )
        return (
            '<Project ProjectName="links" LinesOfCode="0"><Packages>'
            '<Package PackageName="p"><Classes>'
            '<Class ClassName="A" classAccessLevel="public" IsInterface="false">'
            f"<SuperInterfaces/><Attributes>{attrs}</Attributes><Methods/>"
            "</Class></Classes></Package></Packages></Project>"
        )

    reference = tmp_path / "reference.xml"
    retrieved = tmp_path / "retrieved.xml"
    reference.write_text(model(93), encoding="utf-8")
    retrieved.write_text(model(88), encoding="utf-8")
    return retrieved, reference


def test_evaluate_worked_example_pair(tmp_path, capsys):
    retrieved, reference = _write_link_pair(tmp_path)
    code, stdout, _ = run(
        capsys, "evaluate", "--retrieved", str(retrieved), "--reference", str(reference)
    )
    assert code == 0
    assert "retrieved 90" in stdout
    assert "relevant 95" in stdout
    assert "precision 1.0000" in stdout
    assert "recall 0.9474" in stdout


def test_evaluate_fail_under_thresholds(tmp_path, capsys):
    retrieved, reference = _write_link_pair(tmp_path)
    code, _, _ = run(
        capsys,
        "evaluate",
        "--retrieved", str(retrieved),
        "--reference", str(reference),
        "--fail-under", "1.0", "1.0",
    )
    assert code == 3
    code, _, _ = run(
        capsys,
        "evaluate",
        "--retrieved", str(retrieved),
        "--reference", str(reference),
        "--fail-under", "1.0", "0.9",
    )
    assert code == 0


def test_evaluate_malformed_xml_fails(tmp_path, capsys):
    bad = tmp_path / "bad.xml"
    bad.write_text("<Project", encoding="utf-8")
    code, _, stderr = run(
        capsys, "evaluate", "--retrieved", str(bad), "--reference", str(bad)
    )
    assert code == 2
    assert "error" in stderr


def _fake_renderer(tmp_path) -> Path:
    script = tmp_path / "fake-dot"
    script.write_text(
        "#!/usr/bin/env python3\n"
        "import sys\n"
        "args = sys.argv[1:]\n"
        "out = args[args.index('-o') + 1]\n"
        "open(out, 'w').write('<svg/>')\n",
        encoding="utf-8",
    )
    script.chmod(script.stat().st_mode | stat.S_IEXEC)
    return script


def test_render_with_external_renderer(tmp_path, capsys):
    out = tmp_path / "out"
    assert analyze_into(capsys, out, "--documents", "package")[0] == 0
    renderer = _fake_renderer(tmp_path)
    code, _, _ = run(capsys, "render", str(out / "docs"), "--renderer", str(renderer))
    assert code == 0
    assert (out / "docs" / "package.svg").read_text(encoding="utf-8") == "<svg/>"


def test_render_uses_environment_variable(tmp_path, capsys, monkeypatch):
    out = tmp_path / "out"
    assert analyze_into(capsys, out, "--documents", "package")[0] == 0
    monkeypatch.setenv("OODOC_RENDERER", str(_fake_renderer(tmp_path)))
    code, _, _ = run(capsys, "render", str(out / "docs"))
    assert code == 0
    assert (out / "docs" / "package.svg").is_file()


def test_render_without_renderer_is_usage_error(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("OODOC_RENDERER", raising=False)
    code, _, stderr = run(capsys, "render", str(tmp_path))
    assert code == 1
    assert "OODOC_RENDERER" in stderr


def test_analyze_render_failure_is_warning_unless_strict(tmp_path, capsys):
    out = tmp_path / "out"
    broken = tmp_path / "broken"
    broken.write_text("#!/bin/sh\nexit 9\n", encoding="utf-8")
    broken.chmod(broken.stat().st_mode | stat.S_IEXEC)
    code, _, stderr = analyze_into(
        capsys, out, "--documents", "package", "--render", "--renderer", str(broken)
    )
    assert code == 0
    assert "renderer" in stderr
    code, _, _ = analyze_into(
        capsys,
        tmp_path / "out2",
        "--documents", "package", "--render", "--renderer", str(broken), "--strict",
    )
    assert code == 2


def test_outputs_never_land_in_input_root(tmp_path, capsys):
    src = tmp_path / "src"
    src.mkdir()
    (src / "A.java").write_text("package p; class A {}", encoding="utf-8")
    before = set(p.as_posix() for p in src.rglob("*"))
    out = tmp_path / "out"
    assert run(capsys, "analyze", str(src), "-o", str(out))[0] == 0
    after = set(p.as_posix() for p in src.rglob("*"))
    assert before == after
