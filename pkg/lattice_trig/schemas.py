import re
from typing import List, Tuple
from marshmallow import (
    Schema,
    fields,
    validate,
    validates_schema,
    ValidationError,
)
from lattice_trig.core import LatticePoint, RationalAngle
from lattice_trig.sails import (
    NormalizedAngle,
    angle_from_lls,
    canonical_angle,
    normalize_angle,
)
from lattice_trig.curvature import AngleCurvatureSequence, BrokenLine

DEFAULT_BIGINT_BITS = 53
INTEGER_REGEX = re.compile(r"^-?[0-9]+$")


class BigInteger(fields.Field):
    """An arbitrary-precision integer.

    Loads JSON numbers, decimal strings, and `{"bigint": true, "value":
    "<digits>"}` objects. Dumps integers whose magnitude does not fit in
    the configured number of bits as such objects.

    """

    default_error_messages = {"invalid": "Not a valid integer."}

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None

        bits = getattr(self.root, "bigint_bits", DEFAULT_BIGINT_BITS)
        if abs(value) >= 2**bits:
            return {"bigint": True, "value": str(value)}

        return value

    def _deserialize(self, value, attr, data, **kwargs):
        if isinstance(value, dict) and value.get("bigint") is True:
            value = value.get("value")

        if isinstance(value, bool):
            raise self.make_error("invalid")
        if isinstance(value, int):
            return value
        if isinstance(value, str) and INTEGER_REGEX.match(value):
            return int(value)

        raise self.make_error("invalid")


class NestedDocument(fields.Nested):
    @property
    def schema(self):
        schema = super().schema
        schema.bigint_bits = getattr(
            self.root, "bigint_bits", DEFAULT_BIGINT_BITS
        )
        return schema


def _point_field(**kwargs):
    return fields.List(
        BigInteger(), validate=validate.Length(equal=2), **kwargs
    )


class DocumentSchema(Schema):
    def __init__(self, *args, bigint_bits: int = DEFAULT_BIGINT_BITS, **kw):
        super().__init__(*args, **kw)
        self.bigint_bits = bigint_bits


class PolygonDocumentSchema(DocumentSchema):
    vertices = fields.List(
        _point_field(),
        required=True,
        validate=validate.Length(min=3),
        metadata=dict(
            description="The vertices of the polygon, in cyclic order.",
            example=[[4, -1], [0, 0], [2, 3], [3, 3]],
        ),
    )


class AngleDocumentSchema(DocumentSchema):
    itan = fields.List(
        BigInteger(),
        validate=validate.Length(equal=2),
        metadata=dict(
            description="The integer tangent `[p, q]`, with p >= q >= 1.",
            example=[15, 4],
        ),
    )
    lls = fields.List(
        BigInteger(),
        validate=validate.Length(min=1),
        metadata=dict(
            description="The LLS sequence of the angle.",
            example=[3, 1, 3],
        ),
    )
    points = fields.List(
        _point_field(),
        validate=validate.Length(equal=3),
        metadata=dict(
            description=(
                "Three lattice points: a point on the first edge, the"
                " vertex, and a point on the second edge."
            ),
            example=[[1, 0], [0, 0], [5, 7]],
        ),
    )

    @validates_schema
    def validate_single_form(self, data, **kwargs):
        given = [key for key in ("itan", "lls", "points") if key in data]
        if len(given) != 1:
            raise ValidationError(
                "Exactly one of itan, lls, or points must be given."
            )


class SequenceDocumentSchema(DocumentSchema):
    angles = fields.List(
        NestedDocument(AngleDocumentSchema),
        required=True,
        validate=validate.Length(min=1),
    )
    curvatures = fields.List(BigInteger(), required=True)
    cyclic = fields.Boolean(load_default=True)

    @validates_schema
    def validate_counts(self, data, **kwargs):
        n = len(data.get("angles", []))
        m = len(data.get("curvatures", []))
        cyclic = data.get("cyclic", True)
        expected = n if cyclic else n - 1
        if m != expected:
            form = "cyclic" if cyclic else "open"
            raise ValidationError(
                f"An {form} sequence with {n} angles must have {expected}"
                f" curvatures, got {m}.",
                "curvatures",
            )


class TrianglePairDocumentSchema(DocumentSchema):
    first = NestedDocument(PolygonDocumentSchema, required=True)
    second = NestedDocument(PolygonDocumentSchema, required=True)
    anchored = fields.Boolean(load_default=False)


class AngleReportSchema(DocumentSchema):
    itan = fields.List(BigInteger())
    lls = fields.List(BigInteger())


class FeasibilityReportSchema(DocumentSchema):
    feasible = fields.Boolean()
    closure_ok = fields.Boolean()
    closure_value = BigInteger()
    curvature_ok = fields.Boolean()
    curvature_expected = BigInteger(allow_none=True)
    curvature_actual = BigInteger()
    curvature_numerator = BigInteger()
    curvature_denominator = BigInteger()
    winding_ok = fields.Boolean(allow_none=True)
    sign_changes = fields.Integer()
    required_sign_changes = fields.Integer()
    prefix_continuants = fields.List(BigInteger())
    diagnostic = fields.String(allow_none=True)


class DiagramReportSchema(DocumentSchema):
    vertices = fields.List(_point_field())
    edge_vertices = fields.List(fields.Boolean())
    lls = fields.List(BigInteger())
    winding_half_turns = fields.Integer(allow_none=True)


class AnalyzeReportSchema(DocumentSchema):
    vertices = fields.List(_point_field())
    angles = fields.List(NestedDocument(AngleReportSchema))
    curvatures = fields.List(BigInteger())
    edge_lengths = fields.List(BigInteger())
    prefix_continuants = fields.List(BigInteger())
    sign_changes = fields.Integer()
    winding_half_turns = fields.Integer(allow_none=True)
    cusps = fields.Integer()
    diagram = NestedDocument(DiagramReportSchema)
    feasibility = NestedDocument(FeasibilityReportSchema)


class CompletionReportSchema(DocumentSchema):
    x = BigInteger()
    beta = NestedDocument(AngleReportSchema)
    y = BigInteger()


class SailReportSchema(DocumentSchema):
    vertices = fields.List(_point_field())
    lls = fields.List(BigInteger())
    itan = fields.List(BigInteger())


class CongruenceReportSchema(DocumentSchema):
    congruent = fields.Boolean()
    asca_congruent = fields.Boolean(allow_none=True)


class EnumerationReportSchema(DocumentSchema):
    count = fields.Integer()
    polygons = fields.List(NestedDocument(PolygonDocumentSchema))


class ErrorReportSchema(DocumentSchema):
    error = fields.String(required=True)
    message = fields.String(required=True)


def _points(pairs: List[List[int]]) -> Tuple[LatticePoint, ...]:
    return tuple(LatticePoint(x, y) for x, y in pairs)


def parse_polygon(data: dict) -> BrokenLine:
    return BrokenLine(_points(data["vertices"]), True)


def parse_angle(data: dict) -> NormalizedAngle:
    if "itan" in data:
        p, q = data["itan"]
        return canonical_angle(p, q)
    if "lls" in data:
        return angle_from_lls(data["lls"])

    return normalize_angle(RationalAngle(*_points(data["points"])))


def parse_sequence(data: dict) -> AngleCurvatureSequence:
    return AngleCurvatureSequence(
        tuple(parse_angle(a) for a in data["angles"]),
        tuple(data["curvatures"]),
        data["cyclic"],
    )


def dump_angle(angle: NormalizedAngle) -> dict:
    return {"itan": [angle.p, angle.q], "lls": list(angle.lls)}


def dump_points(points) -> List[List[int]]:
    return [[p.x, p.y] for p in points]
