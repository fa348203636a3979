"""Command line behavior: outputs, file round-trips, exit codes."""

import json

import pytest

from simposets import InvalidGluingError, Poset, boolean_lattice, parse_facet_string
from simposets.cli import run


@pytest.fixture()
def poset_file(tmp_path):
    def write(poset, name="p.json"):
        path = tmp_path / name
        path.write_text(poset.to_json())
        return str(path)

    return write


def test_check_simplicial_on_boolean_lattice(poset_file, capsys):
    path = poset_file(boolean_lattice(4))
    assert run(["check", "--poset", path, "--test", "simplicial"]) == 0
    assert capsys.readouterr().out == "true\n"


def test_check_faceposet_inline_complex(capsys):
    assert run(["check", "--complex", "a*b*c,b*c*d", "--test", "faceposet"]) == 0
    assert capsys.readouterr().out == "true\n"


def test_check_faceposet_false_on_doubled_edge(poset_file, capsys, two_points_two_edges):
    path = poset_file(two_points_two_edges)
    assert run(["check", "--poset", path, "--test", "faceposet"]) == 0
    assert capsys.readouterr().out == "false\n"


def test_check_complex_file(tmp_path, capsys):
    path = tmp_path / "c.json"
    path.write_text(parse_facet_string("a*b,b*c").to_json())
    assert run(["check", "--complex", str(path), "--test", "simplicial"]) == 0
    assert capsys.readouterr().out == "true\n"


def test_check_missing_file_is_io_error(capsys):
    assert run(["check", "--poset", "/nonexistent/p.json", "--test", "simplicial"]) == 1
    assert "error:" in capsys.readouterr().err


def test_check_malformed_json_is_io_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert run(["check", "--poset", str(path), "--test", "simplicial"]) == 1


def test_check_wrong_schema_is_io_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"elements": ["0"]}))
    assert run(["check", "--poset", str(path), "--test", "simplicial"]) == 1


def test_check_faceposet_on_nonsimplicial_is_precondition_error(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(
        json.dumps(
            {
                "elements": ["0", "a", "b", "c", "t"],
                "covers": [["0", "a"], ["0", "b"], ["0", "c"], ["a", "t"], ["b", "t"], ["c", "t"]],
            }
        )
    )
    assert run(["check", "--poset", str(path), "--test", "faceposet"]) == 2
    assert "error:" in capsys.readouterr().err


def _write_glue_inputs(tmp_path, atom_map):
    a = tmp_path / "a.json"
    a.write_text(boolean_lattice(4).to_json())
    spec = tmp_path / "spec.json"
    spec.write_text(
        json.dumps(
            {
                "facet_map": {"x1*x2*x3": "x1*x2*x3", "x2*x3*x4": "x2*x3*x4"},
                "atom_map": atom_map,
            }
        )
    )
    return str(a), str(spec)


def test_glue_delta_writes_result(tmp_path, capsys):
    a, spec = _write_glue_inputs(
        tmp_path, {"x1": "x1", "x2": "x2", "x3": "x3", "x4": "x4"}
    )
    out = tmp_path / "glued.json"
    assert run(["glue-delta", "--a", a, "--b", a, "--spec", spec, "--out", str(out)]) == 0
    glued = Poset.from_json(out.read_text())
    assert len(glued) == 20
    assert len(glued.maximal_elements()) == 2


def test_glue_delta_invalid_spec_exits_3(tmp_path, capsys):
    a, spec = _write_glue_inputs(
        tmp_path, {"x1": "x2", "x2": "x3", "x3": "x4", "x4": "x1"}
    )
    out = tmp_path / "glued.json"
    assert run(["glue-delta", "--a", a, "--b", a, "--spec", spec, "--out", str(out)]) == 3
    assert capsys.readouterr().err == InvalidGluingError.MESSAGE + "\n"
    assert not out.exists()


def test_glue_delta_unknown_facet_exits_3(tmp_path, capsys):
    a = tmp_path / "a.json"
    a.write_text(boolean_lattice(2).to_json())
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"facet_map": {"zz": "x1"}, "atom_map": {}}))
    out = tmp_path / "out.json"
    assert run(["glue-delta", "--a", str(a), "--b", str(a), "--spec", str(spec), "--out", str(out)]) == 3


def test_glue_delta_malformed_spec_exits_1(tmp_path, capsys):
    a = tmp_path / "a.json"
    a.write_text(boolean_lattice(2).to_json())
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"facet_map": {}}))
    out = tmp_path / "out.json"
    assert run(["glue-delta", "--a", str(a), "--b", str(a), "--spec", str(spec), "--out", str(out)]) == 1


def test_glue_theta_inline_complexes(tmp_path, capsys):
    out = tmp_path / "theta.json"
    code = run(["glue-theta", "--a", "a*b*c*x,a*b*c*y", "--b", "a*b,b*c,a*c", "--out", str(out)])
    assert code == 0
    assert run(["check", "--poset", str(out), "--test", "faceposet"]) == 0
    assert capsys.readouterr().out == "false\n"


def test_ideal_prints_generators(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(parse_facet_string("a*b").face_poset().to_json())
    assert run(["ideal", "--poset", str(path)]) == 0
    assert capsys.readouterr().out == "x[a]*x[b] - x[a*b]\n"


def test_reduce_prints_monomials(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(parse_facet_string("a*b*c,b*c*d").face_poset().to_json())
    assert run(["reduce", "--poset", str(path)]) == 0
    assert capsys.readouterr().out == "x[a]*x[d]\n"


def test_reduce_requires_face_poset(poset_file, capsys, two_points_two_edges):
    path = poset_file(two_points_two_edges)
    assert run(["reduce", "--poset", path]) == 2


def test_random_stdout_json(capsys):
    assert run(["random", "--n", "4", "--p1", "0.5", "--p2", "0.5", "--seed", "3", "--count", "5"]) == 0
    batch = json.loads(capsys.readouterr().out)
    assert batch["samples"] == 5
    assert len(batch["per_sample"]) == 5


def test_random_is_byte_deterministic(capsys):
    argv = ["random", "--n", "5", "--p1", "0.5", "--p2", "0.5", "--seed", "7", "--count", "50"]
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first


def test_random_tally_and_out_file(tmp_path, capsys):
    out = tmp_path / "batch.json"
    argv = [
        "random", "--n", "4", "--p1", "0.5", "--p2", "0.5",
        "--seed", "11", "--count", "6", "--tally", "--out", str(out),
    ]
    assert run(argv) == 0
    batch = json.loads(out.read_text())
    printed = capsys.readouterr().out
    assert printed == f"faceposet: {batch['face_poset_count']}/6\n"


def test_random_rejects_oversize_n(capsys):
    assert run(["random", "--n", "13", "--p1", "0.5", "--p2", "0.5", "--seed", "1"]) == 2


def test_random_rejects_bad_probability(capsys):
    assert run(["random", "--n", "4", "--p1", "1.5", "--p2", "0.5", "--seed", "1"]) == 2


def test_export_dot(tmp_path, capsys):
    path = tmp_path / "p.json"
    path.write_text(boolean_lattice(2).to_json())
    assert run(["export-dot", "--poset", str(path)]) == 0
    dot = capsys.readouterr().out
    assert dot.startswith("digraph poset {")
    assert '"x1" -> "x1*x2";' in dot


def test_unknown_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as e:
        run(["frobnicate"])
    assert e.value.code == 2


def test_check_requires_exactly_one_input(capsys):
    with pytest.raises(SystemExit) as e:
        run(["check", "--test", "simplicial"])
    assert e.value.code == 2
