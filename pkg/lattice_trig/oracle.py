"""Brute-force ground truth for the continued-fraction machinery.

Nothing here uses continuants: sails are convex hulls of lattice points,
polygons are enumerated exhaustively, and congruence is decided by
solving for the affine map.

"""

import functools
import logging
from typing import Iterator, List, Optional, Sequence, Tuple
from lattice_trig.core import (
    ORIGIN,
    LatticePoint,
    LatticeVector,
    RationalAngle,
    UnimodularMap,
    det,
    ensure_proper,
    int_length,
    map_to_x_axis,
    primitive,
    sign,
)
from lattice_trig.sails import Sail
from lattice_trig.curvature import (
    BrokenLine,
    check_locally_convex,
    edge_lengths,
    sequence_of_polygon,
)

logger = logging.getLogger(__name__)


def _cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> int:
    return det(o.vector_to(a), o.vector_to(b))


def convex_hull(points: Sequence[LatticePoint]) -> List[LatticePoint]:
    """Return the vertices of the convex hull in clockwise order, without
    collinear points.

    """

    points = sorted(set(points))
    if len(points) < 3:
        return list(points)

    upper: List[LatticePoint] = []
    for p in points:
        while len(upper) > 1 and _cross(upper[-2], upper[-1], p) >= 0:
            upper.pop()
        upper.append(p)

    lower: List[LatticePoint] = []
    for p in reversed(points):
        while len(lower) > 1 and _cross(lower[-2], lower[-1], p) >= 0:
            lower.pop()
        lower.append(p)

    return upper + lower[1:-1]


def _sail_lls(vertices: Sequence[LatticePoint]) -> Tuple[int, ...]:
    lls = [int_length(vertices[0], vertices[1])]
    for a, b, c in zip(vertices, vertices[1:], vertices[2:]):
        sine = abs(
            det(primitive(b.vector_to(a)), primitive(b.vector_to(c)))
        )
        lls.append(sine)
        lls.append(int_length(b, c))

    return tuple(lls)


def sail_bruteforce(a: RationalAngle) -> Sail:
    """Return the sail of `a` as the chain of bounded hull edges of the
    lattice points in the triangle spanned by the primitive vectors of
    the two edges, the vertex excluded.

    """

    ensure_proper(a)
    u = primitive(a.ray_a)
    w = primitive(a.ray_b)
    turn = sign(det(u, w))
    origin_side = sign(det(w.plus(u.negated()), u.negated()))

    points = []
    xs = [0, u.dx, w.dx]
    ys = [0, u.dy, w.dy]
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            v = LatticeVector(x, y)
            if v.is_zero:
                continue
            if turn * det(u, v) < 0 or turn * det(v, w) < 0:
                continue
            if origin_side * det(w.plus(u.negated()), v.plus(u.negated())) < 0:
                continue
            points.append(LatticePoint(x, y))

    hull = convex_hull(points)
    start, end = LatticePoint(*u), LatticePoint(*w)
    if len(hull) <= 2:
        chain = [start, end]
    else:
        m = len(hull)
        i = hull.index(start)
        step = 1 if hull[(i + 1) % m] != end else -1
        chain = [start]
        while chain[-1] != end:
            i = (i + step) % m
            chain.append(hull[i])

    vertices = tuple(a.vertex.moved(p.as_vector()) for p in chain)
    return Sail(vertices, _sail_lls(vertices))


def _angular_key(u: LatticePoint, v: LatticePoint) -> int:
    d = det(u.as_vector(), v.as_vector())
    if d != 0:
        return -d
    return (u.x * u.x + u.y * u.y) - (v.x * v.x + v.y * v.y)


def enumerate_convex_polygons(
    bbox_size: int, n: int, shard: Optional[Tuple[int, int]] = None
) -> Iterator[BrokenLine]:
    """Generate every convex lattice `n`-gon fitting in the box
    `[0, bbox_size]^2`, up to translation.

    Each polygon is listed counterclockwise, starting from its
    lexicographically smallest vertex, and translated so that its
    smallest coordinates are zero. With `shard=(index, count)`, only
    polygons whose second vertex has a position congruent to `index`
    modulo `count` in the internal candidate order are generated.

    """

    candidates = sorted(
        (
            LatticePoint(x, y)
            for x in range(0, bbox_size + 1)
            for y in range(-bbox_size, bbox_size + 1)
            if x > 0 or y > 0
        ),
        key=functools.cmp_to_key(_angular_key),
    )
    index, count = shard if shard is not None else (0, 1)
    emitted = 0

    def extend(chain: List[LatticePoint], start: int, low: int, high: int):
        nonlocal emitted
        prev, last = chain[-2], chain[-1]
        if len(chain) == n:
            if (
                _cross(prev, last, ORIGIN) > 0
                and _cross(last, ORIGIN, chain[1]) > 0
            ):
                emitted += 1
                yield BrokenLine(
                    tuple(LatticePoint(p.x, p.y - low) for p in chain), True
                )
            return

        for k in range(start, len(candidates)):
            p = candidates[k]
            if det(last.as_vector(), p.as_vector()) <= 0:
                continue
            if _cross(prev, last, p) <= 0:
                continue
            new_low, new_high = min(low, p.y), max(high, p.y)
            if new_high - new_low > bbox_size:
                continue
            chain.append(p)
            yield from extend(chain, k + 1, new_low, new_high)
            chain.pop()

    for k, first in enumerate(candidates):
        if k % count != index:
            continue
        low, high = min(0, first.y), max(0, first.y)
        if high - low > bbox_size:
            continue
        yield from extend([ORIGIN, first], k + 1, low, high)

    logger.debug(
        "Enumerated %i convex %i-gons in a box of size %i.",
        emitted,
        n,
        bbox_size,
    )


def congruence_map(
    p: Sequence[LatticePoint], q: Sequence[LatticePoint]
) -> Optional[UnimodularMap]:
    """Return the lattice-preserving affine map sending `p[i]` to `q[i]`
    for every `i`, or `None` if there is no such map.

    The first three points of `p` must not be collinear.

    """

    if len(p) != len(q) or len(p) < 3:
        return None

    b, c = p[0].vector_to(p[1]), p[0].vector_to(p[2])
    b2, c2 = q[0].vector_to(q[1]), q[0].vector_to(q[2])
    area = det(b, c)
    if area == 0:
        return None

    # M = Q * adj(P) / det(P), with P = [b c] and Q = [b2 c2] as columns.
    numerators = (
        b2.dx * c.dy - c2.dx * b.dy,
        -b2.dx * c.dx + c2.dx * b.dx,
        b2.dy * c.dy - c2.dy * b.dy,
        -b2.dy * c.dx + c2.dy * b.dx,
    )
    if any(x % area != 0 for x in numerators):
        return None

    ma, mb, mc, md = (x // area for x in numerators)
    if abs(ma * md - mb * mc) != 1:
        return None

    m = UnimodularMap(
        ma,
        mb,
        mc,
        md,
        q[0].x - (ma * p[0].x + mb * p[0].y),
        q[0].y - (mc * p[0].x + md * p[0].y),
    )
    if any(m.apply(x) != y for x, y in zip(p, q)):
        return None

    return m


def _cyclic_orders(
    q: BrokenLine, anchored: bool
) -> Iterator[Tuple[LatticePoint, ...]]:
    vertices = q.vertices
    orders = [vertices] if anchored else [vertices, vertices[::-1]]
    for order in orders:
        for k in range(len(order)):
            yield order[k:] + order[:k]


def canonical_congruence(
    p: BrokenLine, q: BrokenLine, anchored: bool = False
) -> bool:
    """Decide whether the polygons `p` and `q` are integer congruent.

    With `anchored=True` the map must send each vertex of `p` to the
    vertex of `q` at the same position.

    """

    if len(p.vertices) != len(q.vertices):
        return False

    if anchored:
        return congruence_map(p.vertices, q.vertices) is not None

    return any(
        congruence_map(p.vertices, order) is not None
        for order in _cyclic_orders(q, anchored)
    )


def invariant_congruence(p: BrokenLine, q: BrokenLine) -> bool:
    """Decide congruence of two convex polygons by comparing their
    angle-curvature sequences together with their edge lengths.

    """

    if len(p.vertices) != len(q.vertices):
        return False

    check_locally_convex(p)
    check_locally_convex(q)
    reference = (sequence_of_polygon(p, 1), edge_lengths(p, 1))
    for order in _cyclic_orders(q, False):
        other = BrokenLine(order, True)
        if (sequence_of_polygon(other, 1), edge_lengths(other, 1)) == reference:
            return True

    return False


def triangle_normal_form(
    t: Tuple[LatticePoint, LatticePoint, LatticePoint]
) -> Tuple[int, int, int]:
    """Return a complete congruence invariant of the ordered triangle
    ABC: `(il(AB), |y|, x mod |y|)`, where `(x, y)` is the image of AC
    under a map sending the primitive vector of AB to (1, 0).

    """

    a, b, c = t
    length = int_length(a, b)
    x, y = map_to_x_axis(primitive(a.vector_to(b))).apply_vector(
        a.vector_to(c)
    )
    if y == 0:
        ensure_proper(RationalAngle(b, a, c))

    return length, abs(y), x % abs(y)
