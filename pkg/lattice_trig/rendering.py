import io
from typing import Iterable, Sequence, Tuple
import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Polygon
from lattice_trig.core import LatticePoint
from lattice_trig.curvature import (
    BrokenLine,
    SailDiagram,
    VertexLabels,
    check_locally_convex,
)
from lattice_trig.sails import sail_vertices

SVG_RC_PARAMS = {
    "svg.hashsalt": "lattice-trig",
    "svg.fonttype": "none",
}
MARGIN = 1


def _bounds(points: Iterable[LatticePoint]) -> Tuple[int, int, int, int]:
    points = list(points)
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    return (
        min(xs) - MARGIN,
        max(xs) + MARGIN,
        min(ys) - MARGIN,
        max(ys) + MARGIN,
    )


def _new_figure(bounds, cell_size: float, max_dots: int):
    x0, x1, y0, y1 = bounds
    width, height = x1 - x0, y1 - y0
    fig = Figure(figsize=(width * cell_size, height * cell_size))
    ax = fig.add_axes((0, 0, 1, 1))
    ax.set_xlim(x0, x1)
    ax.set_ylim(y0, y1)
    ax.set_aspect("equal")
    ax.axis("off")

    if (width + 1) * (height + 1) <= max_dots:
        xs, ys = [], []
        for x in range(x0, x1 + 1):
            for y in range(y0, y1 + 1):
                xs.append(x)
                ys.append(y)
        ax.scatter(xs, ys, s=3, color="0.6", zorder=1)

    return fig, ax


def _to_svg(fig: Figure) -> str:
    with matplotlib.rc_context(SVG_RC_PARAMS):
        buffer = io.StringIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})

    return buffer.getvalue()


def _polyline(ax, points: Sequence[LatticePoint], **kwargs) -> None:
    ax.plot([p.x for p in points], [p.y for p in points], **kwargs)


def render_polygon_svg(
    p: BrokenLine,
    cell_size: float = 0.5,
    max_dots: int = 10000,
    with_sails: bool = True,
) -> str:
    """Draw the polygon, the lattice points around it, and the sails of
    its angles.

    """

    fig, ax = _new_figure(_bounds(p.vertices), cell_size, max_dots)
    ax.add_patch(
        Polygon(
            [tuple(v) for v in p.vertices],
            closed=p.closed,
            fill=False,
            edgecolor="black",
            linewidth=1.5,
            zorder=2,
        )
    )

    if with_sails:
        check_locally_convex(p)
        labels = VertexLabels(p, 1)
        for i in range(1, labels.n + 1):
            sail = sail_vertices(labels.angle(i))
            _polyline(ax, sail.vertices, color="tab:blue", zorder=3)

    return _to_svg(fig)


def render_diagram_svg(
    diagram: SailDiagram, cell_size: float = 0.5, max_dots: int = 10000
) -> str:
    """Draw a sail diagram with its edge vertices and the origin."""

    vertices = diagram.vertices
    center = diagram.line.center
    fig, ax = _new_figure(
        _bounds(list(vertices) + [center]), cell_size, max_dots
    )
    _polyline(ax, vertices, color="black", linewidth=1.5, zorder=2)
    edge_vertices = diagram.edge_vertices
    ax.scatter(
        [p.x for p in edge_vertices],
        [p.y for p in edge_vertices],
        s=16,
        color="tab:red",
        zorder=3,
    )
    ax.scatter([center.x], [center.y], marker="+", s=64, color="black")
    return _to_svg(fig)
