from typing import NamedTuple, Sequence, Tuple
from lattice_trig.core import (
    ORIGIN,
    REFLECTION,
    AngleKind,
    DegenerateAngleError,
    LatticePoint,
    RationalAngle,
    SequenceShapeError,
    UnimodularMap,
    ensure_proper,
    map_to_x_axis,
    primitive,
)
from lattice_trig.contfrac import (
    IntSeq,
    ProjRational,
    _check_fraction,
    cf_eval,
    cf_expand_odd,
    continuant_pair,
)

UNIT_X = LatticePoint(1, 0)


class NormalizedAngle(NamedTuple):
    """The canonical form `iarctan(p/q)` of a rational angle.

    `map` sends the vertex of the source angle to the origin, its first
    edge through (1, 0), and its second edge through (q, p). When the
    source angle is negatively oriented, `map` includes the reflection
    `(x, y) -> (x, -y)` and `orientation_flipped` is set.

    """

    p: int
    q: int
    map: UnimodularMap
    orientation_flipped: bool = False

    @property
    def itan(self) -> ProjRational:
        return ProjRational(self.p, self.q)

    @property
    def lls(self) -> IntSeq:
        return cf_expand_odd(self.p, self.q)

    @property
    def key(self) -> Tuple[int, int]:
        return self.p, self.q


class Sail(NamedTuple):
    vertices: Tuple[LatticePoint, ...]
    lls: IntSeq


def normalize_angle(a: RationalAngle) -> NormalizedAngle:
    ensure_proper(a)
    u = primitive(a.ray_a)
    w = primitive(a.ray_b)
    linear = map_to_x_axis(u)
    x0, y0 = linear.apply_vector(w)

    flipped = y0 < 0
    if flipped:
        linear = REFLECTION.compose(linear)
        y0 = -y0

    p = y0
    q = (x0 - 1) % p + 1
    shear = UnimodularMap(1, (q - x0) // p, 0, 1)
    linear = shear.compose(linear)

    shifted_vertex = linear.apply(a.vertex)
    m = linear.then_translate(ORIGIN.vector_to(shifted_vertex).negated())
    return NormalizedAngle(p, q, m, flipped)


def itan(a: RationalAngle) -> ProjRational:
    return normalize_angle(a).itan


def lls_of_angle(a: RationalAngle) -> IntSeq:
    return normalize_angle(a).lls


def canonical_sail_points(lls: Sequence[int]) -> Tuple[LatticePoint, ...]:
    """Return the sail vertices of `iarctan(cf_eval(lls))`.

    The vertices are `A_0 = (1, 0)` and `A_i = (K(a_1..a_{2i-2}),
    K(a_0..a_{2i-2}))` for `i = 1, ..., n+1`, where `lls` has length
    `2n + 1`.

    """

    if len(lls) % 2 == 0:
        raise SequenceShapeError("the LLS sequence of an angle has odd length")

    points = [UNIT_X]
    for end in range(1, len(lls) + 1, 2):
        x, y = continuant_pair(lls[:end])
        points.append(LatticePoint(x, y))

    return tuple(points)


def sail_vertices(a: RationalAngle) -> Sail:
    normalized = normalize_angle(a)
    lls = normalized.lls
    back = normalized.map.inverse()
    vertices = tuple(back.apply(v) for v in canonical_sail_points(lls))
    return Sail(vertices, lls)


def iarctan_angle(p: int, q: int) -> RationalAngle:
    _check_fraction(p, q)
    return RationalAngle(UNIT_X, ORIGIN, LatticePoint(q, p))


def canonical_angle(p: int, q: int) -> NormalizedAngle:
    return normalize_angle(iarctan_angle(p, q))


def angle_from_lls(lls: Sequence[int]) -> NormalizedAngle:
    """Return the angle whose LLS sequence is the given odd-length
    sequence of positive integers.

    """

    if len(lls) % 2 == 0:
        raise SequenceShapeError("the LLS sequence of an angle has odd length")
    if any(a <= 0 for a in lls):
        raise SequenceShapeError(
            "the LLS sequence of an angle has positive elements"
        )

    value = cf_eval(lls)
    return canonical_angle(value.num, value.den)


def angle_from_sequence(s: Sequence[int]) -> NormalizedAngle:
    """Return the angle `((1, 0), (0, 0), C)`, where `C = (K(s[1:]),
    K(s))`, in its normalized form.

    The elements of `s` may be arbitrary integers. `C` is read
    projectively, so `C` and `-C` give the same angle.

    """

    if len(s) % 2 == 0:
        raise SequenceShapeError(
            f"expected a sequence of odd length, got {len(s)} elements"
        )

    x, y = continuant_pair(s)
    if y < 0:
        x, y = -x, -y
    angle = RationalAngle(UNIT_X, ORIGIN, LatticePoint(x, y))
    kind = angle.kind
    if kind is not AngleKind.PROPER:
        raise DegenerateAngleError(
            kind, f"the sequence defines a {kind.value} angle"
        )

    return normalize_angle(angle)
