import pytest
from hypothesis import assume, given, settings, strategies as st
from lattice_trig.core import (
    AngleKind,
    DegenerateAngleError,
    InvalidFractionError,
    LatticePoint as P,
    LatticeVector as V,
    RationalAngle,
    SequenceShapeError,
    UnimodularMap,
    det,
    extended_gcd,
    gcd,
    int_distance,
    primitive,
)
from lattice_trig.contfrac import ProjRational, cf_eval, cf_expand_odd
from lattice_trig.sails import (
    angle_from_lls,
    angle_from_sequence,
    canonical_angle,
    canonical_sail_points,
    iarctan_angle,
    itan,
    lls_of_angle,
    normalize_angle,
    sail_vertices,
)
from lattice_trig.oracle import sail_bruteforce

coordinates = st.integers(min_value=-25, max_value=25)


@st.composite
def proper_angles(draw):
    b = P(draw(coordinates), draw(coordinates))
    u = V(draw(coordinates), draw(coordinates))
    w = V(draw(coordinates), draw(coordinates))
    assume(det(u, w) != 0)
    return RationalAngle(b.moved(u), b, b.moved(w))


def angle(a, b, c):
    return RationalAngle(P(*a), P(*b), P(*c))


def points(*pairs):
    return tuple(P(*p) for p in pairs)


def test_normalize_angle():
    n = normalize_angle(angle((1, 0), (0, 0), (-11, 15)))
    assert n.key == (15, 4)
    assert normalize_angle(angle((1, 0), (0, 0), (1, 1))).key == (1, 1)
    assert normalize_angle(angle((8, 0), (0, 0), (2, 3))).key == (3, 2)


def test_normalization_map():
    a = angle((4, -1), (0, 0), (3, 3))
    n = normalize_angle(a)
    assert n.map.apply(a.vertex) == P(0, 0)
    assert det(n.map.apply(a.edge_a).as_vector(), P(1, 0).as_vector()) == 0
    assert n.map.apply(a.edge_a).x > 0
    tip = n.map.apply(a.edge_b).as_vector()
    assert primitive(tip) == primitive(P(n.q, n.p).as_vector())


def test_normalize_negatively_oriented_angle():
    n = normalize_angle(angle((0, 1), (0, 0), (1, 0)))
    assert n.key == (1, 1)
    assert n.orientation_flipped
    assert not normalize_angle(angle((1, 0), (0, 0), (0, 1))).orientation_flipped


def test_normalize_degenerate_angle():
    with pytest.raises(DegenerateAngleError) as e:
        normalize_angle(angle((1, 0), (0, 0), (-2, 0)))
    assert e.value.kind is AngleKind.STRAIGHT


def test_itan():
    assert itan(angle((4, -1), (0, 0), (2, 3))) == ProjRational(14, 11)
    assert itan(angle((1, 0), (0, 0), (0, 1))) == ProjRational(1, 1)
    assert itan(angle((1, 0), (0, 0), (5, 7))) == ProjRational(7, 5)


def test_lls_of_angle():
    assert lls_of_angle(angle((1, 0), (0, 0), (5, 7))) == (1, 2, 2)
    assert lls_of_angle(angle((2, 3), (3, 3), (4, -1))) == (1, 2, 1)
    assert lls_of_angle(angle((0, 0), (2, 3), (3, 3))) == (3,)
    assert lls_of_angle(angle((1, 0), (0, 0), (1, 1))) == (1,)


def test_sail_vertices():
    s = sail_vertices(angle((1, 0), (0, 0), (5, 7)))
    assert s.vertices == points((1, 0), (1, 1), (5, 7))
    assert s.lls == (1, 2, 2)
    s = sail_vertices(angle((1, 0), (0, 0), (2, 3)))
    assert s.vertices == points((1, 0), (1, 1), (2, 3))
    s = sail_vertices(angle((1, 0), (0, 0), (1, 1)))
    assert s.vertices == points((1, 0), (1, 1))
    s = sail_vertices(iarctan_angle(15, 4))
    assert s.vertices == points((1, 0), (1, 3), (4, 15))


def test_sail_vertices_of_shifted_angle():
    s = sail_vertices(angle((12, 3), (2, 3), (7, 10)))
    assert s.vertices == points((3, 3), (3, 4), (7, 10))


def test_canonical_sail_points():
    assert canonical_sail_points((3, 1, 3)) == points((1, 0), (1, 3), (4, 15))
    with pytest.raises(SequenceShapeError):
        canonical_sail_points((1, 1))


def test_iarctan_angle():
    assert iarctan_angle(1, 1) == angle((1, 0), (0, 0), (1, 1))
    assert iarctan_angle(7, 5) == angle((1, 0), (0, 0), (5, 7))
    assert iarctan_angle(15, 4) == angle((1, 0), (0, 0), (4, 15))
    with pytest.raises(InvalidFractionError):
        iarctan_angle(4, 6)


def test_angle_from_sequence():
    assert angle_from_sequence((-1, -2, -1, 2, -3, 1, -1, -1, -1, -3, -1)).key == (
        15,
        4,
    )
    assert angle_from_sequence((1,)).key == (1, 1)
    assert angle_from_sequence((3, 1, 3)).key == (15, 4)
    assert angle_from_sequence((-1, -1, -1)).key == (3, 1)
    with pytest.raises(SequenceShapeError):
        angle_from_sequence((1, 2))
    with pytest.raises(DegenerateAngleError):
        angle_from_sequence((0,))


def test_angle_from_lls():
    assert angle_from_lls((1, 3, 1, 1, 1)).key == (14, 11)
    assert canonical_angle(14, 11).lls == (1, 3, 1, 1, 1)
    with pytest.raises(SequenceShapeError):
        angle_from_lls((1, 1))
    with pytest.raises(SequenceShapeError):
        angle_from_lls((1, -1, 1))


@given(proper_angles())
@settings(max_examples=500, deadline=None)
def test_sail_vertices_match_convex_hull(a):
    assert sail_vertices(a) == sail_bruteforce(a)


@given(proper_angles())
def test_lls_evaluates_to_itan(a):
    assert cf_eval(lls_of_angle(a)) == itan(a)


@given(proper_angles())
def test_sail_edges_are_at_unit_distance(a):
    vertices = sail_vertices(a).vertices
    for u, w in zip(vertices, vertices[1:]):
        assert int_distance(a.vertex, (u, w)) == 1


@given(
    proper_angles(),
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=-5, max_value=5),
)
def test_itan_is_a_congruence_invariant(a, x, y, k):
    g, s, t = extended_gcd(x, y)
    if g != 1:
        x, y, s, t = 1, 0, 1, 0
    m = UnimodularMap(x, y, -t + k * x, s + k * y, k, -k)
    assert normalize_angle(a.mapped(m)).key == normalize_angle(a).key


@given(st.integers(min_value=1, max_value=200), st.integers(min_value=1, max_value=200))
def test_lls_of_iarctan(p, q):
    if q > p or gcd(p, q) != 1:
        return

    assert lls_of_angle(iarctan_angle(p, q)) == cf_expand_odd(p, q)
    assert canonical_angle(p, q).key == (p, q)


@pytest.mark.slow
def test_small_fractions_match_convex_hull():
    for p in range(1, 41):
        for q in range(1, p + 1):
            if gcd(p, q) == 1:
                a = iarctan_angle(p, q)
                assert sail_vertices(a) == sail_bruteforce(a)
