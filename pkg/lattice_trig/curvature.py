from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple
from lattice_trig.core import (
    ORIGIN,
    REFLECTION,
    LatticePoint,
    LatticeVector,
    NotLocallyConvexError,
    Orientation,
    RationalAngle,
    SequenceShapeError,
    UnimodularMap,
    VortexError,
    ZeroVectorError,
    det,
    dot,
    int_length,
    orientation,
    primitive,
    sign,
)
from lattice_trig.contfrac import (
    IntSeq,
    concat,
    prefix_continuants_of,
)
from lattice_trig.sails import (
    NormalizedAngle,
    normalize_angle,
    sail_vertices,
)


class BrokenLine(NamedTuple):
    """A broken line `A_0 A_1 ... A_{n+1}`, or a polygon when `closed`.

    The vertices of a polygon are read cyclically, so that the first
    listed vertex is `A_0 = A_n` when the anchor is 1.

    """

    vertices: Tuple[LatticePoint, ...]
    closed: bool = True

    @classmethod
    def polygon(cls, *points: Tuple[int, int]) -> "BrokenLine":
        return cls(tuple(LatticePoint(*p) for p in points), True)

    @classmethod
    def open_line(cls, *points: Tuple[int, int]) -> "BrokenLine":
        return cls(tuple(LatticePoint(*p) for p in points), False)

    def mapped(self, m: UnimodularMap) -> "BrokenLine":
        return BrokenLine(tuple(m.apply(v) for v in self.vertices), self.closed)


@dataclass(frozen=True, eq=False)
class AngleCurvatureSequence:
    """Alternating angles and chord curvatures.

    An open sequence `(a_1, k_1, ..., k_{n-1}, a_n)` belongs to a broken
    line, a cyclic one `(a_1, k_1, ..., a_n, k_n)` to a polygon. Angles
    are compared by their integer tangents only, so that congruent
    angles in different positions are equal.

    """

    angles: Tuple[NormalizedAngle, ...]
    curvatures: Tuple[int, ...]
    cyclic: bool = True

    def __post_init__(self):
        object.__setattr__(self, "angles", tuple(self.angles))
        object.__setattr__(self, "curvatures", tuple(self.curvatures))
        n = len(self.angles)
        expected = n if self.cyclic else n - 1
        if n < 1 or len(self.curvatures) != expected:
            form = "cyclic" if self.cyclic else "open"
            raise SequenceShapeError(
                f"an {form} sequence with {n} angles must have"
                f" {expected} curvatures, got {len(self.curvatures)}"
            )

    @property
    def n(self) -> int:
        return len(self.angles)

    @property
    def key(self) -> Tuple:
        return (
            tuple(a.key for a in self.angles),
            self.curvatures,
            self.cyclic,
        )

    def __eq__(self, other):
        if not isinstance(other, AngleCurvatureSequence):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def angle(self, i: int) -> NormalizedAngle:
        """Return `a_i`, counting from 1."""

        return self.angles[i - 1]

    def rotated(self, k: int) -> "AngleCurvatureSequence":
        """Re-anchor a cyclic sequence so that `a_{k+1}` comes first."""

        if not self.cyclic:
            raise SequenceShapeError("only cyclic sequences can be rotated")

        k %= self.n
        return AngleCurvatureSequence(
            self.angles[k:] + self.angles[:k],
            self.curvatures[k:] + self.curvatures[:k],
            True,
        )

    def equals_up_to_rotation(self, other: "AngleCurvatureSequence") -> bool:
        if not (self.cyclic and other.cyclic) or self.n != other.n:
            return self == other

        return any(self == other.rotated(k) for k in range(other.n))


class VortexBrokenLine(NamedTuple):
    vertices: Tuple[LatticePoint, ...]
    center: LatticePoint = ORIGIN

    @property
    def radii(self) -> List[LatticeVector]:
        return [self.center.vector_to(v) for v in self.vertices]


class SailDiagram(NamedTuple):
    line: VortexBrokenLine
    edge_vertex_indices: Tuple[int, ...]
    lls: IntSeq

    @property
    def vertices(self) -> Tuple[LatticePoint, ...]:
        return self.line.vertices

    @property
    def edge_vertices(self) -> Tuple[LatticePoint, ...]:
        return tuple(self.line.vertices[i] for i in self.edge_vertex_indices)


def _sail_neighbour(angle: RationalAngle) -> LatticePoint:
    """Return the lattice point of the sail of `angle` that follows the
    sail vertex lying on the first edge.

    """

    vertices = sail_vertices(angle).vertices
    first = vertices[0]
    return first.moved(primitive(first.vector_to(vertices[1])))


def _check_chord(
    a: LatticePoint, b: LatticePoint, c: LatticePoint, d: LatticePoint
) -> Orientation:
    try:
        first = orientation(RationalAngle(a, b, c))
        second = orientation(RationalAngle(b, c, d))
    except ZeroVectorError as e:
        raise NotLocallyConvexError(
            "consecutive vertices must be distinct"
        ) from e

    if first is Orientation.NONE or second is Orientation.NONE:
        raise NotLocallyConvexError("three consecutive points are collinear")
    if first is not second:
        raise NotLocallyConvexError("the broken line is not locally convex")

    return first


def chord_curvature(
    a: LatticePoint, b: LatticePoint, c: LatticePoint, d: LatticePoint
) -> int:
    """Return the chord curvature of the broken line ABCD.

    `B'` is the lattice point next to `B` on the sail of the angle at
    `B`, walking away from the chord BC; `C'` is defined in the same way
    at `C`.

    """

    _check_chord(a, b, c, d)
    b_prime = _sail_neighbour(RationalAngle(c, b, a))
    c_prime = _sail_neighbour(RationalAngle(b, c, d))
    chord = int_length(b, c)
    if b_prime == c_prime:
        return chord - 2

    s = sign(dot(b.vector_to(c), b_prime.vector_to(c_prime)))
    return chord - s * int_length(b_prime, c_prime) - 2


def chord_curvature_by_determinant(
    a: LatticePoint, b: LatticePoint, c: LatticePoint, d: LatticePoint
) -> int:
    """Return the chord curvature of ABCD, computed as the LLS element of
    the two-sail diagram at the vertex shared by the two sails.

    """

    turn = _check_chord(a, b, c, d)
    e = primitive(b.vector_to(c))

    # The point next to b + e on the sail of the angle at b, relative to b.
    first_sail = sail_vertices(RationalAngle(a, b, c)).vertices
    end, before_end = first_sail[-1], first_sail[-2]
    before = b.vector_to(end.moved(primitive(end.vector_to(before_end))))

    # The point next to c - e on the sail of the angle at c, relative to c,
    # turned by the central symmetry.
    second_sail = sail_vertices(RationalAngle(b, c, d)).vertices
    start, after_start = second_sail[0], second_sail[1]
    after = c.vector_to(
        start.moved(primitive(start.vector_to(after_start)))
    ).negated()

    value = det(before.plus(e.negated()), after.plus(e.negated()))
    return value if turn is Orientation.POSITIVE else -value


def check_locally_convex(line: BrokenLine) -> Orientation:
    """Return the common orientation of the angles of `line`.

    For closed lines this also verifies that the polygon is convex,
    that is, every vertex lies strictly on the same side of every edge.

    """

    vertices = line.vertices
    m = len(vertices)
    if line.closed:
        if m < 3:
            raise NotLocallyConvexError("a polygon has at least 3 vertices")
        triples = [
            (vertices[i - 1], vertices[i], vertices[(i + 1) % m])
            for i in range(m)
        ]
    else:
        if m < 3:
            raise NotLocallyConvexError(
                "a broken line has at least 3 vertices"
            )
        triples = [
            (vertices[i - 1], vertices[i], vertices[i + 1])
            for i in range(1, m - 1)
        ]

    orientations = set()
    for a, b, c in triples:
        try:
            orientations.add(orientation(RationalAngle(a, b, c)))
        except ZeroVectorError as e:
            raise NotLocallyConvexError(
                "consecutive vertices must be distinct"
            ) from e

    if Orientation.NONE in orientations:
        raise NotLocallyConvexError("three consecutive points are collinear")
    if len(orientations) != 1:
        raise NotLocallyConvexError("the broken line is not locally convex")

    turn = orientations.pop()
    if line.closed:
        expected = -1 if turn is Orientation.POSITIVE else 1
        for i in range(m):
            p, q = vertices[i], vertices[(i + 1) % m]
            edge = p.vector_to(q)
            for v in vertices:
                if v in (p, q):
                    continue
                if sign(det(edge, p.vector_to(v))) != expected:
                    raise NotLocallyConvexError("the polygon is not convex")

    return turn


class VertexLabels:
    """Cyclic (or linear) access to the labelled vertices `A_i`."""

    def __init__(self, line: BrokenLine, anchor: int):
        self.vertices = line.vertices
        self.closed = line.closed
        m = len(self.vertices)
        if self.closed:
            if not 0 <= anchor < m:
                raise SequenceShapeError(
                    f"the anchor must be in 0..{m - 1}, got {anchor}"
                )
            self.n = m
            self.offset = anchor - 1
        else:
            self.n = m - 2
            self.offset = 0

    def __getitem__(self, i: int) -> LatticePoint:
        if self.closed:
            return self.vertices[(self.offset + i) % self.n]
        return self.vertices[i]

    def angle(self, i: int) -> RationalAngle:
        return RationalAngle(self[i - 1], self[i], self[i + 1])


def sequence_of_polygon(
    p: BrokenLine, anchor: int = 1
) -> AngleCurvatureSequence:
    """Return the angle-curvature sequence of a convex polygon (or of a
    locally convex broken line, when `p` is not closed).

    For polygons, the angle at `p.vertices[anchor]` comes first.

    """

    check_locally_convex(p)
    labels = VertexLabels(p, anchor)
    n = labels.n
    angles = tuple(normalize_angle(labels.angle(i)) for i in range(1, n + 1))
    last = n if p.closed else n - 1
    curvatures = tuple(
        chord_curvature(
            labels[i - 1], labels[i], labels[i + 1], labels[i + 2]
        )
        for i in range(1, last + 1)
    )
    return AngleCurvatureSequence(angles, curvatures, p.closed)


def edge_lengths(p: BrokenLine, anchor: int = 1) -> IntSeq:
    """Return the integer lengths `il(A_i A_{i+1})`, `i = 1, ..., n`."""

    labels = VertexLabels(p, anchor)
    if p.closed:
        indices = range(1, labels.n + 1)
    else:
        indices = range(0, labels.n + 1)

    return tuple(int_length(labels[i], labels[i + 1]) for i in indices)


def cusp_count(s: AngleCurvatureSequence) -> int:
    return sum(1 for k in s.curvatures if k < 0)


def lls_of_acs(s: AngleCurvatureSequence, j: int, k: int) -> IntSeq:
    if not 1 <= j <= k <= s.n:
        raise SequenceShapeError(
            f"expected 1 <= j <= k <= {s.n}, got j={j}, k={k}"
        )

    parts = [s.angle(j).lls]
    for i in range(j, k):
        parts.append((s.curvatures[i - 1],))
        parts.append(s.angle(i + 1).lls)

    return concat(*parts)


def sign_changes(s: Sequence[int]) -> int:
    nonzero = [x for x in s if x != 0]
    return sum(1 for x, y in zip(nonzero, nonzero[1:]) if (x < 0) != (y < 0))


def prefix_continuants(s: AngleCurvatureSequence) -> IntSeq:
    """Return `K(lls(S_1^j))` for `j = 1, ..., n`."""

    prefixes = prefix_continuants_of(lls_of_acs(s, 1, s.n))
    result = []
    end = -1
    for j in range(1, s.n + 1):
        end += len(s.angle(j).lls)
        result.append(prefixes[end])
        end += 1

    return tuple(result)


def check_vortex(v: VortexBrokenLine) -> None:
    radii = v.radii
    if len(radii) < 2:
        raise VortexError("a vortex broken line has at least 2 vertices")

    for u, w in zip(radii, radii[1:]):
        if det(u, w) <= 0:
            raise VortexError(
                f"the edge {tuple(u)} -> {tuple(w)} does not turn"
                " counterclockwise around the center"
            )


def _sine_quotient(
    previous: LatticeVector,
    current: LatticeVector,
    following: LatticeVector,
    before_length: int,
    after_length: int,
) -> int:
    numerator = det(
        previous.plus(current.negated()), following.plus(current.negated())
    )
    denominator = before_length * after_length
    if numerator % denominator != 0:
        raise VortexError(
            f"the sine quotient {numerator}/{denominator} is not an integer"
        )

    return numerator // denominator


def lls_of_vortex(
    v: VortexBrokenLine, wrap_to: Optional[LatticePoint] = None
) -> IntSeq:
    """Return the LLS sequence of a vortex broken line.

    Even entries are `det(OA_k, OA_{k+1})`, odd entries are the sine
    quotients `det(A_{k+1}A_k, A_{k+1}A_{k+2}) / (a_{2k} * a_{2k+2})`.
    When `wrap_to` is given, it is used as the vertex following the
    last one, and the corresponding odd entry is appended.

    """

    check_vortex(v)
    radii = v.radii
    lengths = [det(u, w) for u, w in zip(radii, radii[1:])]

    result = [lengths[0]]
    for k in range(1, len(radii) - 1):
        result.append(
            _sine_quotient(
                radii[k - 1],
                radii[k],
                radii[k + 1],
                lengths[k - 1],
                lengths[k],
            )
        )
        result.append(lengths[k])

    if wrap_to is not None:
        following = v.center.vector_to(wrap_to)
        closing_length = det(radii[-1], following)
        if closing_length <= 0:
            raise VortexError("the wrapping vertex breaks the vortex condition")
        result.append(
            _sine_quotient(
                radii[-2], radii[-1], following, lengths[-1], closing_length
            )
        )

    return tuple(result)


def sail_diagram(
    p: BrokenLine, anchor: int = 1, normalize: bool = True
) -> SailDiagram:
    """Return the sail diagram of a convex polygon or of a locally convex
    broken line.

    The sail of the angle at `A_i` is shifted to the origin, turned by
    the central symmetry for even `i`, and glued to the previous one.
    Negatively oriented inputs are reflected first. With `normalize`,
    the diagram is moved by the map that normalizes the first angle, so
    that it starts at (1, 0).

    """

    if check_locally_convex(p) is Orientation.NEGATIVE:
        p = p.mapped(REFLECTION)

    labels = VertexLabels(p, anchor)
    n = labels.n
    points: List[LatticeVector] = []
    edge_vertex_indices = []
    for i in range(1, n + 1):
        center = labels[i]
        relative = [
            center.vector_to(v) for v in sail_vertices(labels.angle(i)).vertices
        ]
        if i % 2 == 0:
            relative = [v.negated() for v in relative]

        if points:
            if points[-1] != relative[0]:
                raise VortexError(
                    f"the sail of the angle at A_{i} does not start where"
                    " the previous sail ends"
                )
            points.extend(relative[1:])
        else:
            points.extend(relative)
            edge_vertex_indices.append(0)
        edge_vertex_indices.append(len(points) - 1)

    if normalize:
        m = normalize_angle(labels.angle(1)).map
        linear = UnimodularMap(m.a, m.b, m.c, m.d)
        points = [linear.apply_vector(v) for v in points]

    vertices = tuple(LatticePoint(v.dx, v.dy) for v in points)
    line = VortexBrokenLine(vertices, ORIGIN)
    wrap_to = None
    if p.closed:
        wrap_to = vertices[1] if n % 2 == 0 else LatticePoint(
            -vertices[1].x, -vertices[1].y
        )

    return SailDiagram(
        line, tuple(edge_vertex_indices), lls_of_vortex(line, wrap_to)
    )


def winding_half_turns(v: VortexBrokenLine) -> int:
    """Return twice the winding number of a vortex broken line whose
    endpoints lie on the horizontal line through its center.

    """

    check_vortex(v)
    radii = v.radii
    if radii[0].dy != 0 or radii[-1].dy != 0:
        raise VortexError(
            "the winding number is computed only for lines whose endpoints"
            " lie on the horizontal axis"
        )

    ys = [radii[0].dy]
    for u, w in zip(radii, radii[1:]):
        edge = w.plus(u.negated())
        step = primitive(edge)
        count = edge.dx // step.dx if step.dx else edge.dy // step.dy
        ys.extend(u.dy + k * step.dy for k in range(1, count + 1))

    return sign_changes(ys) + 1


def hat_points(diagram: SailDiagram) -> List[Tuple[int, LatticePoint]]:
    """Return `(i, B_i + (B_i^- -> B_i))` for the interior edge vertices
    `B_i` of the diagram, where `B_i^-` is the lattice point preceding
    `B_i` on the diagram.

    """

    vertices = diagram.vertices
    result = []
    indices = diagram.edge_vertex_indices
    for i, position in enumerate(indices[1:-1], start=1):
        b = vertices[position]
        before = b.moved(primitive(b.vector_to(vertices[position - 1])))
        result.append((i, b.moved(before.vector_to(b))))

    return result


def edge_vertex_neighbours(
    diagram: SailDiagram, i: int
) -> Tuple[LatticePoint, LatticePoint, LatticePoint]:
    """Return `(B_i^-, B_i, B_i^+)` for an interior edge vertex `B_i`."""

    indices = diagram.edge_vertex_indices
    if not 1 <= i < len(indices) - 1:
        raise SequenceShapeError(f"B_{i} is not an interior edge vertex")

    vertices = diagram.vertices
    position = indices[i]
    b = vertices[position]
    before = b.moved(primitive(b.vector_to(vertices[position - 1])))
    after = b.moved(primitive(b.vector_to(vertices[position + 1])))
    return before, b, after
