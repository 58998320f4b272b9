from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Tuple
from lattice_trig.core import InvalidFractionError, LatticeError, gcd

IntSeq = Tuple[int, ...]


class ProjRational(NamedTuple):
    """A point of the projective line over Q; `den == 0` is infinity.

    Use `ProjRational.of()` to obtain the canonical form (coprime, with
    a nonnegative denominator).

    """

    num: int
    den: int

    @classmethod
    def of(cls, num: int, den: int) -> "ProjRational":
        g = gcd(num, den)
        if g == 0:
            raise LatticeError("0/0 is not a projective rational")

        if den < 0 or (den == 0 and num < 0):
            g = -g

        return cls(num // g, den // g)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def reciprocal(self) -> "ProjRational":
        return ProjRational.of(self.den, self.num)

    def plus_int(self, a: int) -> "ProjRational":
        if self.is_infinite:
            return self

        return ProjRational.of(a * self.den + self.num, self.den)

    def as_fraction(self) -> Fraction:
        if self.is_infinite:
            raise ZeroDivisionError("infinity is not a fraction")

        return Fraction(self.num, self.den)

    def __str__(self):
        return "inf" if self.is_infinite else f"{self.num}/{self.den}"


INFINITY = ProjRational(1, 0)


def concat(*seqs: Iterable[int]) -> IntSeq:
    result = []
    for s in seqs:
        result.extend(s)

    return tuple(result)


def reverse(s: Sequence[int]) -> IntSeq:
    return tuple(reversed(s))


def negate(s: Sequence[int]) -> IntSeq:
    return tuple(-x for x in s)


def continuant(s: Sequence[int]) -> int:
    before, current = 0, 1
    for x in s:
        before, current = current, x * current + before

    return current


def prefix_continuants_of(s: Sequence[int]) -> IntSeq:
    """Return `(K(s[:1]), K(s[:2]), ..., K(s))`."""

    result = []
    before, current = 0, 1
    for x in s:
        before, current = current, x * current + before
        result.append(current)

    return tuple(result)


def continuant_pair(s: Sequence[int]) -> Tuple[int, int]:
    """Return `(K(s[1:]), K(s))`, read off a product of 2x2 matrices.

    The product of the matrices `[[b, 1], [1, 0]]` over `b` in `s` has
    the first column `(K(b_0..b_k), K(b_1..b_k))`. For the empty
    sequence the product is the identity, which gives `(0, 1)`.

    """

    m00, m01, m10, m11 = 1, 0, 0, 1
    for b in s:
        m00, m01 = m00 * b + m01, m00
        m10, m11 = m10 * b + m11, m10

    return m10, m00


def cf_eval(s: Sequence[int]) -> ProjRational:
    """Evaluate `[a_0; a_1 : ... : a_n]` with `1/0 = inf`, `a + inf =
    inf` and `1/inf = 0`. The empty expansion evaluates to infinity.

    """

    if not s:
        return INFINITY

    value = ProjRational.of(s[-1], 1)
    for a in reversed(s[:-1]):
        value = value.reciprocal().plus_int(a)

    return value


def _check_fraction(p: int, q: int) -> None:
    if not (p >= q >= 1 and gcd(p, q) == 1):
        raise InvalidFractionError(
            f"expected coprime p >= q >= 1, got p={p}, q={q}"
        )


def regular_expansion(p: int, q: int) -> IntSeq:
    """Euclid's algorithm for p/q, with q >= 1."""

    quotients = []
    while True:
        a, r = divmod(p, q)
        quotients.append(a)
        if r == 0:
            return tuple(quotients)
        p, q = q, r


def cf_expand_odd(p: int, q: int) -> IntSeq:
    _check_fraction(p, q)
    expansion = regular_expansion(p, q)
    if len(expansion) % 2 == 0:
        expansion = expansion[:-1] + (expansion[-1] - 1, 1)

    return expansion


def floor_div(p: int, q: int) -> int:
    if q == 0:
        raise InvalidFractionError("division by zero")

    return p // q
