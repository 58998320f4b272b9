import logging
import math
from fractions import Fraction
from typing import List, NamedTuple, Tuple
from lattice_trig.core import (
    ORIGIN,
    FanError,
    InfeasibleSequenceError,
    LatticePoint,
    LatticeVector,
    det,
)
from lattice_trig.contfrac import continuant_pair
from lattice_trig.curvature import (
    AngleCurvatureSequence,
    BrokenLine,
    lls_of_acs,
)
from lattice_trig.theorems import check_feasibility

logger = logging.getLogger(__name__)


class EdgeDirectionFan(NamedTuple):
    """Primitive edge directions of a convex polygon, in strictly
    counterclockwise order, making exactly one full turn.

    """

    directions: Tuple[LatticeVector, ...]


def _is_upper(v: LatticeVector) -> bool:
    return v.dy > 0 or (v.dy == 0 and v.dx > 0)


def check_fan(f: EdgeDirectionFan) -> None:
    d = f.directions
    n = len(d)
    if n < 3:
        raise FanError("a fan of a polygon has at least 3 directions")

    turns = 0
    for i in range(n):
        u, v = d[i], d[(i + 1) % n]
        if not u.is_primitive:
            raise FanError(f"{tuple(u)} is not a primitive vector")
        if det(u, v) <= 0:
            raise FanError(
                f"the directions {tuple(u)} and {tuple(v)} are not in"
                " strictly counterclockwise order"
            )
        if not _is_upper(u) and _is_upper(v):
            turns += 1

    if turns != 1:
        raise FanError(f"the directions make {turns} full turns instead of 1")


def directions_from_sequence(s: AngleCurvatureSequence) -> EdgeDirectionFan:
    """Return the edge directions of a convex polygon realizing `s`.

    The edge vertices of the sail diagram are `B_j = (K(lls(S_1^j)[1:]),
    K(lls(S_1^j)))`. Undoing the central symmetry of the even sails
    gives the directions of a clockwise polygon, which is then reflected.

    """

    report = check_feasibility(s)
    if not report.feasible:
        raise InfeasibleSequenceError(report)

    directions = []
    for j in range(1, s.n + 1):
        x, y = continuant_pair(lls_of_acs(s, 1, j))
        if j % 2 == 0:
            x, y = -x, -y
        directions.append(LatticeVector(x, -y))

    fan = EdgeDirectionFan(tuple(directions))
    check_fan(fan)
    return fan


def _bracket(d: Tuple[LatticeVector, ...], target: LatticeVector) -> int:
    n = len(d)
    for j in range(n):
        if det(d[j], target) >= 0 and det(target, d[(j + 1) % n]) >= 0:
            return j

    raise FanError(f"no pair of directions brackets {tuple(target)}")


def close_fan(f: EdgeDirectionFan) -> List[int]:
    """Return positive integer weights `t_i` with `sum(t_i * d_i) == 0`.

    Starting from unit weights, the residual is cancelled by adding to
    the pair of adjacent directions whose cone contains its opposite.

    """

    check_fan(f)
    d = f.directions
    n = len(d)
    weights = [Fraction(1)] * n
    while True:
        rx = sum(t * v.dx for t, v in zip(weights, d))
        ry = sum(t * v.dy for t, v in zip(weights, d))
        if rx == 0 and ry == 0:
            break

        target = LatticeVector(-rx, -ry)
        j = _bracket(d, target)
        k = (j + 1) % n
        area = det(d[j], d[k])
        weights[j] += Fraction(det(target, d[k]), area)
        weights[k] += Fraction(det(d[j], target), area)

    scale = math.lcm(*(t.denominator for t in weights))
    integral = [int(t * scale) for t in weights]
    g = math.gcd(*integral)
    result = [t // g for t in integral]
    logger.debug("Closed a fan of %i directions with weights %s.", n, result)
    return result


def synthesize_polygon(s: AngleCurvatureSequence) -> BrokenLine:
    """Return a convex counterclockwise polygon realizing `s`.

    The vertices are listed as `A_n, A_1, ..., A_{n-1}`, with `A_1` at
    the origin, so that the angle at the second listed vertex is `a_1`.

    """

    fan = directions_from_sequence(s)
    weights = close_fan(fan)
    points = [ORIGIN]
    for t, v in zip(weights[:-1], fan.directions[:-1]):
        points.append(points[-1].moved(v.scaled(t)))

    vertices: Tuple[LatticePoint, ...] = (points[-1],) + tuple(points[:-1])
    return BrokenLine(vertices, True)
