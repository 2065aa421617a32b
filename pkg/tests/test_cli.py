import io
import re
import shlex
from pathlib import Path

import pytest

from origami_mv.cli import run
from origami_mv.crease_model import parse_cpt, serialize_cpt
from origami_mv.example_data import sample_miura_coloring, single_vertex_pattern

README = Path(__file__).parent.parent / "README.md"


def invoke(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def readme_examples():
    """(command, expected stdout) pairs from the README console blocks, in order."""
    examples = []
    for block in re.findall(r"```console\n(.*?)```", README.read_text(encoding="utf-8"), re.S):
        command, output = None, []
        for line in block.splitlines():
            if line.startswith("$ "):
                if command is not None:
                    examples.append((command, output))
                command, output = line[2:], []
            else:
                output.append(line)
        if command is not None:
            examples.append((command, output))
    return [(command, "".join(line + "\n" for line in output)) for command, output in examples]


def test_readme_examples(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "grid.txt").write_text(sample_miura_coloring, encoding="utf-8")

    examples = readme_examples()
    assert len(examples) > 10
    for command, expected in examples:
        argv = shlex.split(command)
        assert argv[0] == "origami-mv"
        code, out, err = invoke(*argv[1:])
        assert code == 0, f"{command}: {err}"
        assert out == expected, command


def test_generated_file_matches_golden(tmp_path, golden):
    target = tmp_path / "m22.cpt"
    assert invoke("gen", "miura", "--rows", "2", "--cols", "2", "-o", str(target))[0] == 0
    assert target.read_text(encoding="utf-8") == golden("miura_2x2.cpt")


def test_gen_to_stdout_with_metadata(tmp_path):
    meta = tmp_path / "meta.txt"
    code, out, _ = invoke("gen", "square-twist", "--rows", "1", "--cols", "2", "--metadata", str(meta))
    assert code == 0
    pattern, mv = parse_cpt(out)
    assert len(pattern.creases) == 8 * 2 + 2 + 4
    assert mv is None
    assert meta.read_text(encoding="utf-8") == (
        "family=square-twist\nrows=1\ncols=2\npitch=4\ncreases=22\ntwist_vertices=8\n")


def test_count_methods_agree(tmp_path):
    target = tmp_path / "s11.cpt"
    invoke("gen", "square-twist", "--rows", "1", "--cols", "1", "-o", str(target))
    assert invoke("count", str(target))[1] == "16\n"
    assert invoke("count", str(target), "--method", "enumerate")[1] == "16\n"


def test_enumerate_split_matches_sequential(tmp_path):
    target = tmp_path / "m33.cpt"
    invoke("gen", "miura", "--rows", "3", "--cols", "3", "-o", str(target))
    _, sequential, _ = invoke("enumerate", str(target))
    _, split, _ = invoke("enumerate", str(target), "--split-bits", "2")
    assert split == sequential
    assert sequential.count("\n\n") == 81
    out_file = tmp_path / "all.txt"
    assert invoke("enumerate", str(target), "--limit", "5", "-o", str(out_file))[1] == ""
    assert out_file.read_text(encoding="utf-8").count("\n\n") == 4


def test_linegraph_dot(tmp_path, golden):
    target = tmp_path / "m22.cpt"
    target.write_text(golden("miura_2x2.cpt"), encoding="utf-8")
    code, out, _ = invoke("linegraph", str(target), "--dot")
    assert code == 0
    assert out == (
        "graph origami_line_graph {\n"
        '  c0 [label="0"];\n'
        '  c1 [label="1"];\n'
        '  c2 [label="2"];\n'
        '  c3 [label="3"];\n'
        "}\n"
    )


def test_render_to_file(tmp_path, golden):
    source = tmp_path / "m22.cpt"
    source.write_text(golden("miura_2x2.cpt"), encoding="utf-8")
    target = tmp_path / "m22.svg"
    assert invoke("render", str(source), "-o", str(target)) == (0, "", "")
    assert target.read_text(encoding="utf-8").count("<line ") == 4


def test_lieb_plot(tmp_path):
    chart = tmp_path / "lieb.png"
    code, out, _ = invoke("lieb", "--max-n", "3", "--plot", str(chart))
    assert code == 0
    assert out.splitlines()[-1].startswith("3\t82\t")
    assert chart.exists()


@pytest.mark.parametrize("method", ["brute", "transfer", "matrix"])
def test_colorings(method):
    assert invoke("colorings", "--rows", "3", "--cols", "4", "--method", method)[1] == "374\n"


def test_validate_failure_exit_code(tmp_path):
    target = tmp_path / "cross.cpt"
    target.write_text(
        "CPT 1\nvertices 4\n0 0 0 B\n1 2 2 B\n2 0 2 B\n3 2 0 B\nedges 2\n0 0 1 U\n1 2 3 U\n",
        encoding="utf-8")
    code, out, _ = invoke("validate", str(target))
    assert code == 1
    assert out == "error: creases 0 and 1 cross\nfailed\n"


def test_validate_warnings_still_succeed(tmp_path):
    target = tmp_path / "odd.cpt"
    target.write_text(serialize_cpt(single_vertex_pattern([120, 120, 120])), encoding="utf-8")
    code, out, _ = invoke("validate", str(target))
    assert code == 0
    assert out == (
        "vertex 0: degree 3 (odd), angle sum ok\n"
        "warning: vertex 0: odd degree 3\n"
        "passed with warnings\n"
    )


def test_domain_error_exit_code(tmp_path):
    target = tmp_path / "six.cpt"
    target.write_text(serialize_cpt(single_vertex_pattern([60] * 6)), encoding="utf-8")
    code, out, err = invoke("count", str(target))
    assert code == 1
    assert out == ""
    assert err.startswith("error: vertex 0 has degree 6")


def test_parse_error_exit_code(tmp_path):
    target = tmp_path / "bad.cpt"
    target.write_text("CPT 1\nvertices x\n", encoding="utf-8")
    code, _, err = invoke("count", str(target))
    assert code == 2
    assert err == "error: line 2: vertices count must be an integer\n"
    target.write_text("CPT 1\nvertices 1\n\u00b2 0 0 B\nedges 0\n", encoding="utf-8")
    code, _, err = invoke("count", str(target))
    assert code == 2
    assert err.startswith("error: line 3: expected a non-negative integer id")


def test_missing_file_exit_code(tmp_path):
    code, _, err = invoke("validate", str(tmp_path / "nope.cpt"))
    assert code == 2
    assert err.startswith("error: ")


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["gen", "cube", "--rows", "1", "--cols", "1"],
    ["gen", "miura", "--rows", "0", "--cols", "2"],
    ["count", "x.cpt", "--method", "guess"],
    ["vertex", "90,ninety,90,90"],
    ["miura"],
])
def test_usage_errors(argv):
    code, out, err = invoke(*argv)
    assert code == 2
    assert out == ""
    assert err.startswith("usage error: ")


def test_help_exits_cleanly(capsys):
    assert invoke("--help")[0] == 0


def test_vertex_domain_errors():
    assert invoke("vertex", "90,90,90,80")[0] == 1
    code, _, err = invoke("vertex", "120,60,90,90")
    assert code == 1
    assert "alternating" in err
    for angles in ("inf,90,90,90", "nan,90,90,90"):
        code, _, err = invoke("vertex", angles)
        assert code == 1
        assert "finite" in err


def test_miura_to_coloring_rejects_other_patterns(tmp_path, golden):
    target = tmp_path / "m22.cpt"
    target.write_text(golden("miura_2x2.cpt"), encoding="utf-8")
    code, _, err = invoke("miura", "to-coloring", str(target), "--rows", "2", "--cols", "2")
    assert code == 1
    assert "every crease" in err
    code, _, err = invoke("miura", "to-coloring", str(target), "--rows", "3", "--cols", "2")
    assert code == 1
    assert "not the 3x2 Miura-ori" in err


def test_from_coloring_rejects_improper_grid(tmp_path):
    grid = tmp_path / "grid.txt"
    grid.write_text("00\n12\n", encoding="utf-8")
    code, _, err = invoke("miura", "from-coloring", str(grid))
    assert code == 2
    assert "not proper" in err


def test_miura_count_methods():
    for method in ("transfer", "brute", "enumerate"):
        assert invoke("miura", "count", "--rows", "2", "--cols", "3", "--method", method)[1] == "18\n"


@pytest.mark.parametrize("argv", [
    ["gen", "miura", "--rows", "2", "--cols", "2"],
    ["validate", "m22.cpt"],
    ["render", "m22.cpt"],
    ["verify", "m22.cpt"],
    ["linegraph", "m22.cpt"],
    ["linegraph", "m22.cpt", "--dot"],
    ["count", "m22.cpt", "--method", "enumerate"],
    ["enumerate", "m22.cpt"],
    ["vertex", "60,60,120,120"],
    ["miura", "from-coloring", "grid.txt"],
    ["miura", "to-coloring", "m22_mv.cpt", "--rows", "2", "--cols", "2"],
    ["miura", "count", "--rows", "2", "--cols", "3"],
    ["colorings", "--rows", "2", "--cols", "2"],
    ["lieb", "--max-n", "2"],
])
def test_out_option_matches_stdout(argv, tmp_path, monkeypatch, golden):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "m22.cpt").write_text(golden("miura_2x2.cpt"), encoding="utf-8")
    (tmp_path / "grid.txt").write_text(sample_miura_coloring, encoding="utf-8")
    assert invoke("miura", "from-coloring", "grid.txt", "-o", "m22_mv.cpt")[0] == 0

    code, printed, _ = invoke(*argv)
    assert code == 0
    assert printed

    target = tmp_path / "result.out"
    assert invoke(*argv, "--out", str(target)) == (0, "", "")
    assert target.read_text(encoding="utf-8") == printed
