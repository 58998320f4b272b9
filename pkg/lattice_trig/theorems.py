import logging
from typing import NamedTuple, Optional, Sequence, Tuple
from lattice_trig.core import (
    CompletionError,
    DegenerateAngleError,
    LatticePoint,
    RationalAngle,
    SequenceShapeError,
    int_length,
)
from lattice_trig.contfrac import (
    IntSeq,
    concat,
    continuant,
    floor_div,
    negate,
    reverse,
)
from lattice_trig.sails import (
    NormalizedAngle,
    angle_from_sequence,
    normalize_angle,
)
from lattice_trig.curvature import (
    AngleCurvatureSequence,
    chord_curvature,
    lls_of_acs,
    prefix_continuants,
    sign_changes,
)

logger = logging.getLogger(__name__)

Triangle = Tuple[LatticePoint, LatticePoint, LatticePoint]


class FeasibilityReport(NamedTuple):
    closure_ok: bool
    closure_value: int
    curvature_ok: bool
    curvature_expected: Optional[int]
    curvature_actual: int
    curvature_numerator: int
    curvature_denominator: int
    winding_ok: Optional[bool]
    sign_changes: int
    required_sign_changes: int
    prefix_continuants: IntSeq
    diagnostic: Optional[str] = None

    @property
    def feasible(self) -> bool:
        return (
            self.closure_ok
            and self.curvature_ok
            and self.winding_ok is not False
        )


class Completion(NamedTuple):
    x: int
    beta: NormalizedAngle
    y: int

    def assemble(
        self,
        angles: Sequence[NormalizedAngle],
        curvatures: Sequence[int],
    ) -> AngleCurvatureSequence:
        return AngleCurvatureSequence(
            tuple(angles) + (self.beta,),
            tuple(curvatures) + (self.x, self.y),
            True,
        )


def next_curvature(u: Sequence[int]) -> Tuple[Optional[int], int, int]:
    """Return `(-floor(K(u, 1) / K(u)), K(u, 1), K(u))`.

    This is the only curvature that can follow the broken line with LLS
    sequence `u`, when the broken line closes up. When `K(u) == 0` the
    first element is `None`.

    """

    numerator = continuant(concat(u, (1,)))
    denominator = continuant(u)
    if denominator == 0:
        return None, numerator, denominator

    return -floor_div(numerator, denominator), numerator, denominator


def check_feasibility(
    s: AngleCurvatureSequence, require_convex: bool = True
) -> FeasibilityReport:
    """Check whether `s` is the angle-curvature sequence of a convex
    lattice polygon.

    With `require_convex=False`, the sign-change condition is skipped,
    and a feasible report means that `s` belongs to a closed locally
    convex broken line.

    """

    if not s.cyclic:
        raise SequenceShapeError(
            "an open sequence was given where a cyclic one is required"
        )
    if s.n < 3:
        raise SequenceShapeError(f"expected at least 3 angles, got {s.n}")

    n = s.n
    closure_value = continuant(lls_of_acs(s, 1, n))
    expected, numerator, denominator = next_curvature(lls_of_acs(s, 2, n))
    actual = s.curvatures[-1]
    diagnostic = None
    if expected is None:
        diagnostic = (
            "K(lls(S_2^n)) is zero, so no curvature can close the sequence"
        )

    prefix = prefix_continuants(s)
    changes = sign_changes(prefix)
    winding_ok = changes == n - 3 if require_convex else None
    report = FeasibilityReport(
        closure_ok=closure_value == 0,
        closure_value=closure_value,
        curvature_ok=expected is not None and expected == actual,
        curvature_expected=expected,
        curvature_actual=actual,
        curvature_numerator=numerator,
        curvature_denominator=denominator,
        winding_ok=winding_ok,
        sign_changes=changes,
        required_sign_changes=n - 3,
        prefix_continuants=prefix,
        diagnostic=diagnostic,
    )
    logger.debug("Checked a sequence of %i angles: %s", n, report)
    return report


def complete_sequence(
    angles: Sequence[NormalizedAngle], curvatures: Sequence[int]
) -> Completion:
    """Find `(x, beta, y)` such that `(a_1, k_1, ..., a_n, x, beta, y)`
    is the angle-curvature sequence of a closed broken line.

    """

    if len(angles) < 2:
        raise SequenceShapeError(
            f"expected at least 2 angles, got {len(angles)}"
        )

    s = AngleCurvatureSequence(tuple(angles), tuple(curvatures), False)
    n = s.n
    u = lls_of_acs(s, 1, n)
    x, _, _ = next_curvature(u)
    if x is None:
        raise CompletionError(
            "K(U) is zero, so the broken line can not be completed"
        )

    try:
        beta = angle_from_sequence(negate(reverse(u)))
    except DegenerateAngleError as e:
        raise CompletionError(
            f"the completing angle is {e.kind.value}"
        ) from e

    v = concat(lls_of_acs(s, 2, n), (x,), beta.lls)
    y, _, _ = next_curvature(v)
    if y is None:
        raise CompletionError(
            "K(V) is zero, so the broken line can not be completed"
        )

    logger.debug(
        "Completed %i angles with x=%i, beta=%i/%i, y=%i.",
        n,
        x,
        beta.p,
        beta.q,
        y,
    )
    return Completion(x, beta, y)


def closing_curvature_of_reversal(u: Sequence[int]) -> int:
    """Return the curvature `y` of a completion, computed from the LLS
    sequence `u` of the open input alone.

    This reads the open broken line backwards, so `y` is the curvature
    that follows it, and equals `ceil(K(-u^t, -1) / K(-u^t))`.

    """

    w = negate(reverse(u))
    denominator = continuant(w)
    if denominator == 0:
        raise CompletionError("K(U) is zero")

    return -floor_div(-continuant(concat(w, (-1,))), denominator)


def _check_triangle(t: Triangle) -> None:
    a, b, c = t
    normalize_angle(RationalAngle(a, b, c))


def asca_signature(t: Triangle) -> Tuple:
    """Return the angle-side-curvature-angle data of the ordered
    triangle ABC: the angles at B and at A, the integer length of AB
    and the chord curvature of CABC.

    """

    _check_triangle(t)
    a, b, c = t
    return (
        normalize_angle(RationalAngle(a, b, c)).key,
        normalize_angle(RationalAngle(b, a, c)).key,
        int_length(a, b),
        chord_curvature(c, a, b, c),
    )


def asca_congruent(t1: Triangle, t2: Triangle) -> bool:
    return asca_signature(t1) == asca_signature(t2)
