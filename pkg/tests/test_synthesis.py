import pytest
from lattice_trig.core import (
    FanError,
    InfeasibleSequenceError,
    LatticePoint as P,
    LatticeVector as V,
)
from lattice_trig.sails import angle_from_lls
from lattice_trig.curvature import (
    AngleCurvatureSequence,
    check_locally_convex,
    sequence_of_polygon,
)
from lattice_trig.synthesis import (
    EdgeDirectionFan,
    check_fan,
    close_fan,
    directions_from_sequence,
    synthesize_polygon,
)
from lattice_trig.oracle import enumerate_convex_polygons


def fan(*pairs):
    return EdgeDirectionFan(tuple(V(*p) for p in pairs))


def test_directions_from_sequence(quadrangle, pentagon):
    assert directions_from_sequence(sequence_of_polygon(quadrangle)) == fan(
        (11, -14), (1, -1), (-11, 15), (-1, 0)
    )
    assert directions_from_sequence(sequence_of_polygon(pentagon)) == fan(
        (2, -3), (1, -1), (2, 1), (1, 1), (-1, 0)
    )


def test_directions_of_infeasible_sequence():
    s = AngleCurvatureSequence(
        tuple(angle_from_lls(lls) for lls in [(1, 3, 1, 1, 1), (3,), (1, 2, 1), (3, 1, 3)]),
        (-1, -2, -1, -2),
    )
    with pytest.raises(InfeasibleSequenceError) as e:
        directions_from_sequence(s)
    assert not e.value.report.curvature_ok
    with pytest.raises(InfeasibleSequenceError):
        synthesize_polygon(s)


def test_check_fan():
    check_fan(fan((1, 0), (0, 1), (-1, -1)))
    with pytest.raises(FanError):
        check_fan(fan((1, 0), (0, 1)))
    with pytest.raises(FanError):
        check_fan(fan((2, 0), (0, 1), (-1, -1)))
    with pytest.raises(FanError):
        check_fan(fan((1, 0), (-1, -1), (0, 1)))
    with pytest.raises(FanError, match="2 full turns"):
        check_fan(
            fan(
                (1, 0), (0, 1), (-1, 0), (0, -1),
                (1, 0), (0, 1), (-1, 0), (0, -1),
            )
        )


def test_close_fan():
    assert close_fan(fan((1, 0), (0, 1), (-1, -1))) == [1, 1, 1]
    assert close_fan(fan((1, 0), (0, 1), (-1, 0), (0, -1))) == [1, 1, 1, 1]
    assert close_fan(fan((1, 0), (-1, 2), (0, -1))) == [1, 1, 2]
    assert close_fan(fan((11, -14), (1, -1), (-11, 15), (-1, 0))) == [1, 1, 1, 1]


def test_close_fan_weights(pentagon):
    f = directions_from_sequence(sequence_of_polygon(pentagon))
    weights = close_fan(f)
    assert all(t > 0 for t in weights)
    assert sum(t * v.dx for t, v in zip(weights, f.directions)) == 0
    assert sum(t * v.dy for t, v in zip(weights, f.directions)) == 0


def test_synthesize_quadrangle(quadrangle):
    s = sequence_of_polygon(quadrangle)
    p = synthesize_polygon(s)
    assert p.closed
    assert p.vertices == (P(1, 0), P(0, 0), P(11, -14), P(12, -15))
    assert sequence_of_polygon(p) == s


def test_synthesize_pentagon(pentagon):
    s = sequence_of_polygon(pentagon)
    p = synthesize_polygon(s)
    assert p.vertices[1] == P(0, 0)
    check_locally_convex(p)
    assert sequence_of_polygon(p) == s


@pytest.mark.parametrize("n", [3, 4, 5])
def test_synthesize_enumerated_polygons(n):
    for polygon in enumerate_convex_polygons(3, n):
        s = sequence_of_polygon(polygon)
        assert sequence_of_polygon(synthesize_polygon(s)) == s
