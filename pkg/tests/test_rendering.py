import pytest
from xml.etree import ElementTree
from lattice_trig.core import NotLocallyConvexError
from lattice_trig.curvature import BrokenLine, sail_diagram
from lattice_trig.rendering import render_diagram_svg, render_polygon_svg

SVG_TAG = "{http://www.w3.org/2000/svg}svg"


def parse(svg):
    return ElementTree.fromstring(svg.encode("utf-8"))


def test_render_polygon(quadrangle):
    svg = render_polygon_svg(quadrangle)
    assert svg.startswith("<?xml")
    root = parse(svg)
    assert root.tag == SVG_TAG
    assert root.get("version") == "1.1"
    assert svg == render_polygon_svg(quadrangle)


def test_render_polygon_without_sails():
    p = BrokenLine.polygon((0, 0), (2, 0), (1, 1), (2, 2), (0, 2))
    with pytest.raises(NotLocallyConvexError):
        render_polygon_svg(p)
    root = parse(render_polygon_svg(p, with_sails=False, max_dots=0))
    assert root.tag == SVG_TAG


def test_render_diagram(pentagon):
    svg = render_diagram_svg(sail_diagram(pentagon), cell_size=1.0)
    root = parse(svg)
    assert root.tag == SVG_TAG
    assert any(e.tag.endswith("path") for e in root.iter())
