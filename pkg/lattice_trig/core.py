import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Tuple


class LatticeError(ValueError):
    """The input does not describe a valid lattice-geometric object."""


class ZeroVectorError(LatticeError):
    pass


class DegenerateAngleError(LatticeError):
    def __init__(self, kind: "AngleKind", message: str = ""):
        super().__init__(message or f"the angle is {kind.value}")
        self.kind = kind


class InvalidFractionError(LatticeError):
    pass


class NotLocallyConvexError(LatticeError):
    pass


class VortexError(LatticeError):
    pass


class SequenceShapeError(LatticeError):
    pass


class InfeasibleSequenceError(LatticeError):
    def __init__(self, report, message: str = "the sequence is infeasible"):
        super().__init__(message)
        self.report = report


class CompletionError(LatticeError):
    pass


class FanError(LatticeError):
    pass


class AngleKind(Enum):
    ZERO = "zero"
    STRAIGHT = "straight"
    PROPER = "proper"


class Orientation(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NONE = "none"


class LatticeVector(NamedTuple):
    dx: int
    dy: int

    def negated(self) -> "LatticeVector":
        return LatticeVector(-self.dx, -self.dy)

    def scaled(self, k: int) -> "LatticeVector":
        return LatticeVector(k * self.dx, k * self.dy)

    def plus(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.dx + other.dx, self.dy + other.dy)

    @property
    def is_zero(self) -> bool:
        return self.dx == 0 and self.dy == 0

    @property
    def is_primitive(self) -> bool:
        return gcd(self.dx, self.dy) == 1


class LatticePoint(NamedTuple):
    x: int
    y: int

    def moved(self, v: LatticeVector) -> "LatticePoint":
        return LatticePoint(self.x + v.dx, self.y + v.dy)

    def vector_to(self, other: "LatticePoint") -> LatticeVector:
        return LatticeVector(other.x - self.x, other.y - self.y)

    def as_vector(self) -> LatticeVector:
        return LatticeVector(self.x, self.y)


ORIGIN = LatticePoint(0, 0)


@dataclass(frozen=True)
class UnimodularMap:
    """An element of Aff(2, Z): `p -> [[a, b], [c, d]] p + (tx, ty)`."""

    a: int = 1
    b: int = 0
    c: int = 0
    d: int = 1
    tx: int = 0
    ty: int = 0

    def __post_init__(self):
        if abs(self.a * self.d - self.b * self.c) != 1:
            raise LatticeError(
                "the linear part of a unimodular map must have determinant"
                " +1 or -1"
            )

    @property
    def determinant(self) -> int:
        return self.a * self.d - self.b * self.c

    def apply_vector(self, v: LatticeVector) -> LatticeVector:
        return LatticeVector(
            self.a * v.dx + self.b * v.dy, self.c * v.dx + self.d * v.dy
        )

    def apply(self, p: LatticePoint) -> LatticePoint:
        return LatticePoint(
            self.a * p.x + self.b * p.y + self.tx,
            self.c * p.x + self.d * p.y + self.ty,
        )

    def compose(self, first: "UnimodularMap") -> "UnimodularMap":
        """Return the map that applies `first`, then `self`."""

        return UnimodularMap(
            a=self.a * first.a + self.b * first.c,
            b=self.a * first.b + self.b * first.d,
            c=self.c * first.a + self.d * first.c,
            d=self.c * first.b + self.d * first.d,
            tx=self.a * first.tx + self.b * first.ty + self.tx,
            ty=self.c * first.tx + self.d * first.ty + self.ty,
        )

    def inverse(self) -> "UnimodularMap":
        # The inverse of a matrix with determinant e = +-1 is e * adj.
        e = self.determinant
        a, b, c, d = e * self.d, -e * self.b, -e * self.c, e * self.a
        return UnimodularMap(
            a=a,
            b=b,
            c=c,
            d=d,
            tx=-(a * self.tx + b * self.ty),
            ty=-(c * self.tx + d * self.ty),
        )

    def then_translate(self, v: LatticeVector) -> "UnimodularMap":
        return UnimodularMap(
            self.a, self.b, self.c, self.d, self.tx + v.dx, self.ty + v.dy
        )


IDENTITY = UnimodularMap()
REFLECTION = UnimodularMap(1, 0, 0, -1)
CENTRAL_SYMMETRY = UnimodularMap(-1, 0, 0, -1)


class RationalAngle(NamedTuple):
    edge_a: LatticePoint
    vertex: LatticePoint
    edge_b: LatticePoint

    @property
    def ray_a(self) -> LatticeVector:
        return self.vertex.vector_to(self.edge_a)

    @property
    def ray_b(self) -> LatticeVector:
        return self.vertex.vector_to(self.edge_b)

    @property
    def kind(self) -> AngleKind:
        u, v = self.ray_a, self.ray_b
        if u.is_zero or v.is_zero:
            raise ZeroVectorError("an edge point coincides with the vertex")

        if det(u, v) != 0:
            return AngleKind.PROPER
        if dot(u, v) > 0:
            return AngleKind.ZERO
        return AngleKind.STRAIGHT

    def swapped(self) -> "RationalAngle":
        return RationalAngle(self.edge_b, self.vertex, self.edge_a)

    def mapped(self, m: UnimodularMap) -> "RationalAngle":
        return RationalAngle(
            m.apply(self.edge_a), m.apply(self.vertex), m.apply(self.edge_b)
        )


def ensure_proper(angle: RationalAngle) -> None:
    kind = angle.kind
    if kind is not AngleKind.PROPER:
        raise DegenerateAngleError(kind)


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return `(g, s, t)` such that `s * a + t * b == g == gcd(a, b)`."""

    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t

    if old_r < 0:
        return -old_r, -old_s, -old_t

    return old_r, old_s, old_t


def primitive(v: LatticeVector) -> LatticeVector:
    g = gcd(v.dx, v.dy)
    if g == 0:
        raise ZeroVectorError("the zero vector has no direction")

    return LatticeVector(v.dx // g, v.dy // g)


def det(u: LatticeVector, v: LatticeVector) -> int:
    return u.dx * v.dy - u.dy * v.dx


def dot(u: LatticeVector, v: LatticeVector) -> int:
    return u.dx * v.dx + u.dy * v.dy


def sign(x: int) -> int:
    return (x > 0) - (x < 0)


def int_length(p: LatticePoint, q: LatticePoint) -> int:
    g = gcd(q.x - p.x, q.y - p.y)
    if g == 0:
        raise ZeroVectorError("the endpoints of the segment coincide")

    return g


def int_sine(angle: RationalAngle) -> int:
    ensure_proper(angle)
    return abs(det(primitive(angle.ray_a), primitive(angle.ray_b)))


def int_distance(
    p: LatticePoint, line: Tuple[LatticePoint, LatticePoint]
) -> int:
    l1, l2 = line
    direction = primitive(l1.vector_to(l2))
    return abs(det(direction, l1.vector_to(p)))


def orientation(angle: RationalAngle) -> Orientation:
    s = sign(det(angle.ray_a, angle.ray_b))
    if s > 0:
        return Orientation.POSITIVE
    if s < 0:
        return Orientation.NEGATIVE
    return Orientation.NONE


def apply_map(m: UnimodularMap, p: LatticePoint) -> LatticePoint:
    return m.apply(p)


def map_to_x_axis(u: LatticeVector) -> UnimodularMap:
    """Return a linear map of determinant 1 sending the primitive `u`
    to (1, 0).

    """

    g, s, t = extended_gcd(u.dx, u.dy)
    if g != 1:
        raise LatticeError(f"{tuple(u)} is not a primitive vector")

    return UnimodularMap(s, t, -u.dy, u.dx)
