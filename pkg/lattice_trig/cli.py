import json
import logging
import sys
import click
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from typing import List, Optional, Tuple
from flask import current_app
from flask.cli import ScriptInfo, with_appcontext
from marshmallow import Schema, ValidationError
from lattice_trig.core import (
    InfeasibleSequenceError,
    LatticeError,
    RationalAngle,
    SequenceShapeError,
)
from lattice_trig.curvature import (
    cusp_count,
    edge_lengths,
    sail_diagram,
    sequence_of_polygon,
    sign_changes,
    winding_half_turns,
)
from lattice_trig.oracle import (
    canonical_congruence,
    enumerate_convex_polygons,
)
from lattice_trig.sails import (
    iarctan_angle,
    itan,
    sail_vertices,
)
from lattice_trig.synthesis import synthesize_polygon
from lattice_trig.theorems import (
    FeasibilityReport,
    asca_congruent,
    check_feasibility,
    complete_sequence,
)
from lattice_trig import schemas
from lattice_trig import rendering

EXIT_NEGATIVE = 1
EXIT_PARSE_ERROR = 2
EXIT_LATTICE_ERROR = 3

logger = logging.getLogger(__name__)


def _json_indent(json_indent: Optional[int]) -> int:
    if json_indent is None:
        return current_app.config["APP_JSON_INDENT"]

    return json_indent


def _emit(schema_class, data, json_indent: Optional[int]) -> None:
    schema: Schema = schema_class(
        bigint_bits=current_app.config["APP_BIGINT_BITS"]
    )
    click.echo(
        json.dumps(
            schema.dump(data),
            indent=_json_indent(json_indent),
            sort_keys=True,
        )
    )


def _fail(kind: str, message: str, exit_code: int, json_indent) -> None:
    logger.info("Command failed with %s: %s", kind, message)
    _emit(
        schemas.ErrorReportSchema,
        {"error": kind, "message": message},
        json_indent,
    )
    sys.exit(exit_code)


@contextmanager
def _reporting_errors(json_indent: Optional[int]):
    try:
        yield
    except ValidationError as e:
        _fail(
            "ValidationError",
            json.dumps(e.messages, sort_keys=True),
            EXIT_PARSE_ERROR,
            json_indent,
        )
    except LatticeError as e:
        _fail(type(e).__name__, str(e), EXIT_LATTICE_ERROR, json_indent)
    except json.JSONDecodeError as e:
        _fail("JSONDecodeError", str(e), EXIT_PARSE_ERROR, json_indent)
    except UnicodeDecodeError as e:
        _fail("UnicodeDecodeError", str(e), EXIT_PARSE_ERROR, json_indent)


def _load(input_file, schema_class) -> dict:
    schema = schema_class()
    return schema.load(json.load(input_file))


def _write_svg(svg_file, text: str) -> None:
    if svg_file is not None:
        svg_file.write(text)


def _dump_feasibility(report: FeasibilityReport) -> dict:
    data = report._asdict()
    data["feasible"] = report.feasible
    return data


def _dump_diagram(diagram) -> dict:
    edge_indices = set(diagram.edge_vertex_indices)
    try:
        winding = winding_half_turns(diagram.line)
    except LatticeError:
        winding = None

    return {
        "vertices": schemas.dump_points(diagram.vertices),
        "edge_vertices": [
            i in edge_indices for i in range(len(diagram.vertices))
        ],
        "lls": list(diagram.lls),
        "winding_half_turns": winding,
    }


def _input_option(f):
    return click.option(
        "-i",
        "--input",
        "input_file",
        type=click.File("r"),
        default="-",
        help="The file to read the JSON document from (default: stdin).",
    )(f)


def _json_indent_option(f):
    return click.option(
        "--json-indent",
        type=click.IntRange(min=0),
        help=(
            "The indentation of the JSON output. If not specified, the"
            " value of the APP_JSON_INDENT environment variable will be"
            " used, defaulting to 2 if empty."
        ),
    )(f)


def _svg_option(f):
    return click.option(
        "--svg",
        "svg_file",
        type=click.File("w"),
        help="Also write a static SVG rendering to this file.",
    )(f)


def _anchor_option(f):
    return click.option(
        "-a",
        "--anchor",
        type=int,
        default=1,
        show_default=True,
        help="The position in the vertex list of the vertex of the first"
        " angle.",
    )(f)


@click.group("lattice_trig")
def lattice_trig():
    """Compute lattice-trigonometric invariants of integer polygons."""


@lattice_trig.command("analyze")
@with_appcontext
@_input_option
@_anchor_option
@_svg_option
@_json_indent_option
def analyze(input_file, anchor, svg_file, json_indent):
    """Compute the angle-curvature sequence and the sail diagram of a
    convex polygon.

    The input is a polygon document: {"vertices": [[x, y], ...]}.

    """

    config = current_app.config
    with _reporting_errors(json_indent):
        polygon = schemas.parse_polygon(
            _load(input_file, schemas.PolygonDocumentSchema)
        )
        sequence = sequence_of_polygon(polygon, anchor)
        diagram = sail_diagram(polygon, anchor)
        report = check_feasibility(sequence)
        _write_svg(
            svg_file,
            rendering.render_polygon_svg(
                polygon,
                cell_size=config["APP_SVG_CELL_SIZE"],
                max_dots=config["APP_SVG_MAX_DOTS"],
            ),
        )

    diagram_data = _dump_diagram(diagram)
    _emit(
        schemas.AnalyzeReportSchema,
        {
            "vertices": schemas.dump_points(polygon.vertices),
            "angles": [schemas.dump_angle(a) for a in sequence.angles],
            "curvatures": list(sequence.curvatures),
            "edge_lengths": list(edge_lengths(polygon, anchor)),
            "prefix_continuants": list(report.prefix_continuants),
            "sign_changes": sign_changes(report.prefix_continuants),
            "winding_half_turns": diagram_data["winding_half_turns"],
            "cusps": cusp_count(sequence),
            "diagram": diagram_data,
            "feasibility": _dump_feasibility(report),
        },
        json_indent,
    )


@lattice_trig.command("check")
@with_appcontext
@_input_option
@_json_indent_option
@click.option(
    "--locally-convex",
    is_flag=True,
    default=False,
    help="Do not require the polygon to be convex, only locally convex.",
)
def check(input_file, json_indent, locally_convex):
    """Check whether an angle-curvature sequence is realizable by a
    convex lattice polygon.

    Exits with 0 when the sequence is feasible, and with 1 when it is
    not.

    """

    with _reporting_errors(json_indent):
        sequence = schemas.parse_sequence(
            _load(input_file, schemas.SequenceDocumentSchema)
        )
        report = check_feasibility(
            sequence, require_convex=not locally_convex
        )

    _emit(
        schemas.FeasibilityReportSchema,
        _dump_feasibility(report),
        json_indent,
    )
    if not report.feasible:
        sys.exit(EXIT_NEGATIVE)


@lattice_trig.command("complete")
@with_appcontext
@_input_option
@_json_indent_option
def complete(input_file, json_indent):
    """Complete an open angle-curvature sequence to a closed one.

    The input must be a sequence document with "cyclic": false. The
    output gives the two missing curvatures, x and y, and the missing
    angle, beta.

    """

    with _reporting_errors(json_indent):
        data = _load(input_file, schemas.SequenceDocumentSchema)
        sequence = schemas.parse_sequence(data)
        if sequence.cyclic:
            raise SequenceShapeError(
                "a cyclic sequence was given where an open one is required"
            )
        completion = complete_sequence(sequence.angles, sequence.curvatures)

    _emit(
        schemas.CompletionReportSchema,
        {
            "x": completion.x,
            "beta": schemas.dump_angle(completion.beta),
            "y": completion.y,
        },
        json_indent,
    )


@lattice_trig.command("synthesize")
@with_appcontext
@_input_option
@_svg_option
@_json_indent_option
def synthesize(input_file, svg_file, json_indent):
    """Construct a convex lattice polygon with the given angle-curvature
    sequence.

    Exits with 1 when the sequence is not feasible.

    """

    config = current_app.config
    infeasible = None
    with _reporting_errors(json_indent):
        sequence = schemas.parse_sequence(
            _load(input_file, schemas.SequenceDocumentSchema)
        )
        try:
            polygon = synthesize_polygon(sequence)
        except InfeasibleSequenceError as e:
            infeasible = e

    if infeasible is not None:
        logger.info("The sequence is not feasible.")
        _emit(
            schemas.FeasibilityReportSchema,
            _dump_feasibility(infeasible.report),
            json_indent,
        )
        sys.exit(EXIT_NEGATIVE)

    _write_svg(
        svg_file,
        rendering.render_polygon_svg(
            polygon,
            cell_size=config["APP_SVG_CELL_SIZE"],
            max_dots=config["APP_SVG_MAX_DOTS"],
        ),
    )
    _emit(
        schemas.PolygonDocumentSchema,
        {"vertices": schemas.dump_points(polygon.vertices)},
        json_indent,
    )


@lattice_trig.command("sail")
@with_appcontext
@_input_option
@_json_indent_option
def sail(input_file, json_indent):
    """Compute the sail of an angle.

    The input is an angle document, for example {"points": [[1, 0], [0,
    0], [5, 7]]}. Angles given by "itan" or "lls" are placed in the
    position iarctan(p/q).

    """

    with _reporting_errors(json_indent):
        data = _load(input_file, schemas.AngleDocumentSchema)
        if "points" in data:
            angle = RationalAngle(*schemas._points(data["points"]))
        else:
            normalized = schemas.parse_angle(data)
            angle = iarctan_angle(normalized.p, normalized.q)
        result = sail_vertices(angle)
        tangent = itan(angle)

    _emit(
        schemas.SailReportSchema,
        {
            "vertices": schemas.dump_points(result.vertices),
            "lls": list(result.lls),
            "itan": [tangent.num, tangent.den],
        },
        json_indent,
    )


@lattice_trig.command("diagram")
@with_appcontext
@_input_option
@_anchor_option
@_svg_option
@_json_indent_option
@click.option(
    "--no-normalize",
    is_flag=True,
    default=False,
    help="Keep the sails in the coordinates of the input polygon.",
)
def diagram(input_file, anchor, svg_file, json_indent, no_normalize):
    """Compute the sail diagram of a convex polygon."""

    config = current_app.config
    with _reporting_errors(json_indent):
        polygon = schemas.parse_polygon(
            _load(input_file, schemas.PolygonDocumentSchema)
        )
        result = sail_diagram(polygon, anchor, normalize=not no_normalize)
        _write_svg(
            svg_file,
            rendering.render_diagram_svg(
                result,
                cell_size=config["APP_SVG_CELL_SIZE"],
                max_dots=config["APP_SVG_MAX_DOTS"],
            ),
        )

    _emit(schemas.DiagramReportSchema, _dump_diagram(result), json_indent)


@lattice_trig.command("congruent")
@with_appcontext
@_input_option
@_json_indent_option
def congruent(input_file, json_indent):
    """Decide whether two polygons are integer congruent.

    The input is {"first": {"vertices": ...}, "second": {"vertices":
    ...}, "anchored": false}. For two triangles, the output also gives
    the verdict of the angle-side-curvature-angle rule. Exits with 1
    when the polygons are not congruent.

    """

    with _reporting_errors(json_indent):
        data = _load(input_file, schemas.TrianglePairDocumentSchema)
        first = schemas.parse_polygon(data["first"])
        second = schemas.parse_polygon(data["second"])
        anchored = data["anchored"]
        result = canonical_congruence(first, second, anchored=anchored)
        asca = None
        if len(first.vertices) == 3 and len(second.vertices) == 3:
            asca = asca_congruent(first.vertices, second.vertices)

    _emit(
        schemas.CongruenceReportSchema,
        {"congruent": result, "asca_congruent": asca},
        json_indent,
    )
    if not result:
        sys.exit(EXIT_NEGATIVE)


def _enumerate_shard(
    bbox: int, n: int, index: int, count: int
) -> List[Tuple[Tuple[int, int], ...]]:
    return [
        tuple((v.x, v.y) for v in p.vertices)
        for p in enumerate_convex_polygons(bbox, n, shard=(index, count))
    ]


@lattice_trig.command("enumerate")
@with_appcontext
@_json_indent_option
@click.option(
    "-b", "--bbox", type=int, required=True, help="The size of the box."
)
@click.option(
    "-n",
    "--vertices",
    type=int,
    required=True,
    help="The number of vertices of the polygons.",
)
@click.option(
    "-p",
    "--processes",
    type=int,
    help=(
        "The number of worker processes."
        " If not specified, the value of the APP_ENUMERATE_PROCESSES"
        " environment variable will be used, defaulting to 1 if empty."
    ),
)
def enumerate_polygons(json_indent, bbox, vertices, processes):
    """Enumerate the convex lattice polygons in a box, up to translation.

    The maximal box size is given by the APP_ENUMERATE_MAX_BBOX
    environment variable (default 8).

    """

    config = current_app.config
    max_bbox = config["APP_ENUMERATE_MAX_BBOX"]
    if not 1 <= bbox <= max_bbox:
        _fail(
            "BadParameter",
            f"the box size must be between 1 and {max_bbox}",
            EXIT_PARSE_ERROR,
            json_indent,
        )
    if vertices < 3:
        _fail(
            "BadParameter",
            "a polygon has at least 3 vertices",
            EXIT_PARSE_ERROR,
            json_indent,
        )

    processes = processes or config["APP_ENUMERATE_PROCESSES"]
    if processes == 1:
        polygons = _enumerate_shard(bbox, vertices, 0, 1)
    else:
        with ProcessPoolExecutor(max_workers=processes) as executor:
            shards = executor.map(
                _enumerate_shard,
                [bbox] * processes,
                [vertices] * processes,
                range(processes),
                [processes] * processes,
            )
            polygons = [p for shard in shards for p in shard]

    polygons.sort()
    logger.info(
        "Enumerated %i convex %i-gons in a box of size %i.",
        len(polygons),
        vertices,
        bbox,
    )
    _emit(
        schemas.EnumerationReportSchema,
        {
            "count": len(polygons),
            "polygons": [
                {"vertices": [list(v) for v in p]} for p in polygons
            ],
        },
        json_indent,
    )


def main():  # pragma: no cover
    """The entry point of the `lattice-trig` console script."""

    from lattice_trig import create_app

    lattice_trig.main(
        prog_name="lattice-trig", obj=ScriptInfo(create_app=create_app)
    )
