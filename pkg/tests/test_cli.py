import json
from xml.etree import ElementTree
from lattice_trig import create_app

QUADRANGLE = {"vertices": [[4, -1], [0, 0], [2, 3], [3, 3]]}
PENTAGON = {"vertices": [[8, 0], [0, 0], [2, 3], [3, 4], [5, 3]]}
QUADRANGLE_SEQUENCE = {
    "angles": [
        {"lls": [1, 3, 1, 1, 1]},
        {"itan": [3, 1]},
        {"lls": [1, 2, 1]},
        {"itan": [15, 4]},
    ],
    "curvatures": [-1, -2, -1, -1],
}


def invoke(app, *args, input=None):
    runner = app.test_cli_runner()
    if input is not None and not isinstance(input, (str, bytes)):
        input = json.dumps(input)
    return runner.invoke(args=["lattice_trig", *args], input=input)


def test_analyze(app):
    result = invoke(app, "analyze", input=QUADRANGLE)
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["vertices"] == QUADRANGLE["vertices"]
    assert report["angles"][0] == {"itan": [14, 11], "lls": [1, 3, 1, 1, 1]}
    assert report["curvatures"] == [-1, -2, -1, -1]
    assert report["edge_lengths"] == [1, 1, 1, 1]
    assert report["prefix_continuants"] == [14, -1, -15, 0]
    assert report["sign_changes"] == 1
    assert report["winding_half_turns"] == 2
    assert report["cusps"] == 4
    assert report["feasibility"]["feasible"] is True
    assert report["feasibility"]["curvature_expected"] == -1
    assert report["diagram"]["lls"][-1] == -1


def test_analyze_anchor(app):
    result = invoke(app, "analyze", "--anchor", "2", input=QUADRANGLE)
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["curvatures"] == [-2, -1, -1, -1]
    assert report["angles"][0]["itan"] == [3, 1]


def test_analyze_svg(app, tmp_path):
    svg = tmp_path / "quadrangle.svg"
    result = invoke(app, "analyze", "--svg", str(svg), input=QUADRANGLE)
    assert result.exit_code == 0
    assert ElementTree.parse(svg).getroot().tag == "{http://www.w3.org/2000/svg}svg"


def test_analyze_input_file(app, tmp_path):
    path = tmp_path / "pentagon.json"
    path.write_text(json.dumps(PENTAGON))
    result = invoke(app, "analyze", "--input", str(path), "--json-indent", "0")
    assert result.exit_code == 0
    assert json.loads(result.output)["curvatures"] == [-2, -4, -2, -3, 0]


def test_analyze_errors(app):
    result = invoke(
        app, "analyze", input={"vertices": [[0, 0], [2, 0], [1, 1], [2, 2], [0, 2]]}
    )
    assert result.exit_code == 3
    assert json.loads(result.output)["error"] == "NotLocallyConvexError"

    result = invoke(app, "analyze", input="{not json")
    assert result.exit_code == 2
    assert json.loads(result.output)["error"] == "JSONDecodeError"

    result = invoke(app, "analyze", input=json.dumps(QUADRANGLE).encode() + b"\xff")
    assert result.exit_code == 2
    assert json.loads(result.output)["error"] == "UnicodeDecodeError"

    result = invoke(app, "analyze", input={"points": []})
    assert result.exit_code == 2
    assert json.loads(result.output)["error"] == "ValidationError"


def test_check(app):
    result = invoke(app, "check", input=QUADRANGLE_SEQUENCE)
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["feasible"] is True
    assert report["prefix_continuants"] == [14, -1, -15, 0]

    wrong = dict(QUADRANGLE_SEQUENCE, curvatures=[-1, -2, -1, -2])
    result = invoke(app, "check", input=wrong)
    assert result.exit_code == 1
    report = json.loads(result.output)
    assert report["feasible"] is False
    assert report["closure_ok"] is True
    assert report["curvature_ok"] is False

    result = invoke(app, "check", "--locally-convex", input=QUADRANGLE_SEQUENCE)
    assert result.exit_code == 0
    assert json.loads(result.output)["winding_ok"] is None


def test_check_errors(app):
    result = invoke(
        app,
        "check",
        input={"angles": [{"itan": [2, 2]}] * 3, "curvatures": [0, 0, 0]},
    )
    assert result.exit_code == 3
    assert json.loads(result.output)["error"] == "InvalidFractionError"

    result = invoke(
        app, "check", input={"angles": [{"itan": [1, 1]}] * 3, "curvatures": []}
    )
    assert result.exit_code == 2


def test_complete(app):
    data = {
        "angles": QUADRANGLE_SEQUENCE["angles"][:3],
        "curvatures": [-1, -2],
        "cyclic": False,
    }
    result = invoke(app, "complete", input=data)
    assert result.exit_code == 0
    assert json.loads(result.output) == {
        "x": -1,
        "beta": {"itan": [15, 4], "lls": [3, 1, 3]},
        "y": -1,
    }

    result = invoke(app, "complete", input=QUADRANGLE_SEQUENCE)
    assert result.exit_code == 3
    assert json.loads(result.output)["error"] == "SequenceShapeError"


def test_synthesize(app, tmp_path):
    svg = tmp_path / "synthesized.svg"
    result = invoke(app, "synthesize", "--svg", str(svg), input=QUADRANGLE_SEQUENCE)
    assert result.exit_code == 0
    assert json.loads(result.output) == {
        "vertices": [[1, 0], [0, 0], [11, -14], [12, -15]]
    }
    assert ElementTree.parse(svg).getroot().tag == "{http://www.w3.org/2000/svg}svg"

    wrong = dict(QUADRANGLE_SEQUENCE, curvatures=[-1, -2, -1, -2])
    result = invoke(app, "synthesize", input=wrong)
    assert result.exit_code == 1
    assert json.loads(result.output)["feasible"] is False


def test_sail(app):
    result = invoke(app, "sail", input={"points": [[1, 0], [0, 0], [5, 7]]})
    assert result.exit_code == 0
    assert json.loads(result.output) == {
        "vertices": [[1, 0], [1, 1], [5, 7]],
        "lls": [1, 2, 2],
        "itan": [7, 5],
    }

    result = invoke(app, "sail", input={"itan": [15, 4]})
    assert result.exit_code == 0
    assert json.loads(result.output)["vertices"] == [[1, 0], [1, 3], [4, 15]]

    result = invoke(app, "sail", input={"points": [[1, 0], [0, 0], [-3, 0]]})
    assert result.exit_code == 3
    assert json.loads(result.output)["error"] == "DegenerateAngleError"


def test_diagram(app, tmp_path):
    svg = tmp_path / "diagram.svg"
    result = invoke(app, "diagram", "--svg", str(svg), input=PENTAGON)
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["vertices"] == [
        [1, 0], [1, 1], [2, 3], [-1, -1], [2, -1], [-1, 1], [-1, 0]
    ]
    assert report["edge_vertices"] == [True, False, True, True, True, True, True]
    assert report["lls"] == [1, 1, 1, -2, 1, -4, 3, -2, 1, -3, 1, 0]
    assert report["winding_half_turns"] == 3
    assert ElementTree.parse(svg).getroot().tag == "{http://www.w3.org/2000/svg}svg"


def test_congruent(app):
    data = {
        "first": {"vertices": [[0, 0], [2, 0], [1, 1]]},
        "second": {"vertices": [[0, 0], [2, 0], [0, 2]]},
    }
    result = invoke(app, "congruent", input=data)
    assert result.exit_code == 1
    assert json.loads(result.output) == {
        "congruent": False,
        "asca_congruent": False,
    }

    data = {
        "first": QUADRANGLE,
        "second": {"vertices": [[3, 3], [4, -1], [0, 0], [2, 3]]},
    }
    result = invoke(app, "congruent", input=data)
    assert result.exit_code == 0
    assert json.loads(result.output) == {
        "congruent": True,
        "asca_congruent": None,
    }

    result = invoke(app, "congruent", input=dict(data, anchored=True))
    assert result.exit_code == 1


def test_enumerate(app):
    result = invoke(app, "enumerate", "--bbox", "1", "-n", "3")
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["count"] == 4
    assert {"vertices": [[0, 0], [1, 0], [0, 1]]} in report["polygons"]

    result = invoke(app, "enumerate", "--bbox", "1", "-n", "4")
    assert json.loads(result.output) == {
        "count": 1,
        "polygons": [{"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}],
    }


def test_enumerate_in_parallel(app):
    single = invoke(app, "enumerate", "-b", "3", "-n", "4")
    parallel = invoke(app, "enumerate", "-b", "3", "-n", "4", "-p", "2")
    assert parallel.exit_code == 0
    assert parallel.output == single.output


def test_enumerate_in_one_process(app, mocker):
    executor = mocker.patch("lattice_trig.cli.ProcessPoolExecutor")
    result = invoke(app, "enumerate", "-b", "2", "-n", "3", "-p", "1")
    assert result.exit_code == 0
    assert json.loads(result.output)["count"] > 0
    executor.assert_not_called()


def test_enumerate_errors(app):
    result = invoke(app, "enumerate", "--bbox", "5", "-n", "3")
    assert result.exit_code == 2
    assert json.loads(result.output)["error"] == "BadParameter"

    result = invoke(app, "enumerate", "--bbox", "2", "-n", "2")
    assert result.exit_code == 2


def test_big_integers_in_output():
    app = create_app({"TESTING": True, "APP_BIGINT_BITS": 3})
    with app.app_context():
        result = invoke(app, "sail", input={"itan": [15, 4]})
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["itan"] == [{"bigint": True, "value": "15"}, 4]
