import json

import pytest

from cubicgeom.cli import main, load_points, build_parser


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_construct_text(capsys):
    code, out = _run(capsys, "construct")
    assert code == 0
    assert "27 lines:" in out


def test_configurations_json(capsys):
    code, out = _run(capsys, "configurations", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert data["tritangent_planes"] == 45
    assert data["double_sixes"] == 36
    assert data["trieder_pairs"] == 120
    assert data["triads"] == 40


def test_group_json(capsys):
    code, out = _run(capsys, "group", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["order"] == 51840
    assert data["orbits"] == {"lines": 27, "double_sixes": 36,
                              "tritangents": 45, "triads": 40}


def test_malformed_json_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    code = main(["construct", "--input", str(bad)])
    assert code == 2


def test_degenerate_points_exit_1(tmp_path):
    deg = tmp_path / "deg.json"
    deg.write_text(json.dumps({
        "schema": 1,
        "points": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"],
                   ["1", "1", "1"], ["1", "2", "3"], ["1", "2", "3"]]}))
    code = main(["construct", "--input", str(deg)])
    assert code == 1


def test_load_points_with_extension(tmp_path):
    data = {"schema": 1,
            "field": {"levels": [["1", "0", "1"]]},
            "points": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"],
                       ["1", "1", "1"],
                       [["1", "0"], ["1", "1"], ["2", "-1"]],
                       [["1", "0"], ["1", "-1"], ["2", "1"]]]}
    path = tmp_path / "gauss.json"
    path.write_text(json.dumps(data))
    pts = load_points(str(path))
    assert pts.tower.height == 1


def test_output_file_written(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code = main(["group", "--format", "json", "--output", str(out_path)])
    assert code == 0
    assert json.loads(out_path.read_text())["order"] == 51840


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["construct", "--bogus"])


def test_determinism_two_runs(capsys):
    _, out1 = _run(capsys, "cayley-salmon", "--format", "json")
    _, out2 = _run(capsys, "cayley-salmon", "--format", "json")
    assert out1 == out2
