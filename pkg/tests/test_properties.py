"""Property-based tests for the algebra, maps, and serialization."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from legch.algebra import (
    AlgebraMap,
    Poly,
    add,
    compose,
    mul,
    poly_from_str,
    poly_to_str,
)
from legch.dga import Dga, Generator, check_dga, degree_from_rotation, shrink

LETTERS = ("a", "b", "c", "d", "e")

words = st.lists(st.sampled_from(LETTERS), max_size=3).map(tuple)
polys = st.lists(words, max_size=6).map(lambda ws: Poly.from_words(ws))
small_maps = st.dictionaries(
    st.sampled_from(LETTERS), polys, max_size=3
).map(AlgebraMap)
# iterated composition multiplies image sizes, so keep these tiny
tiny_words = st.lists(st.sampled_from(LETTERS), max_size=2).map(tuple)
tiny_polys = st.lists(tiny_words, max_size=2).map(lambda ws: Poly.from_words(ws))
tiny_maps = st.dictionaries(
    st.sampled_from(LETTERS), tiny_polys, max_size=2
).map(AlgebraMap)


class TestRingAxioms:
    @given(polys, polys, polys)
    def test_add_associative(self, p, q, r):
        assert add(add(p, q), r) == add(p, add(q, r))

    @given(polys, polys)
    def test_add_commutative(self, p, q):
        assert add(p, q) == add(q, p)

    @given(polys)
    def test_characteristic_two(self, p):
        assert not add(p, p)

    @given(polys, polys, polys)
    def test_mul_associative(self, p, q, r):
        assert mul(mul(p, q), r) == mul(p, mul(q, r))

    @given(polys, polys, polys)
    def test_distributive(self, p, q, r):
        assert mul(p, add(q, r)) == add(mul(p, q), mul(p, r))
        assert mul(add(p, q), r) == add(mul(p, r), mul(q, r))

    @given(polys)
    def test_units(self, p):
        assert mul(Poly.one(), p) == p == mul(p, Poly.one())
        assert not mul(Poly.zero(), p)
        assert add(Poly.zero(), p) == p


class TestMaps:
    @given(small_maps, polys, polys)
    def test_homomorphism(self, m, p, q):
        assert m.apply(mul(p, q)) == mul(m.apply(p), m.apply(q))
        assert m.apply(add(p, q)) == add(m.apply(p), m.apply(q))

    @given(small_maps, small_maps, polys)
    def test_compose_is_application(self, f, g, p):
        assert compose(f, g).apply(p) == f.apply(g.apply(p))

    @settings(deadline=None)
    @given(tiny_maps, tiny_maps, tiny_maps, tiny_polys)
    def test_compose_associative(self, f, g, h, p):
        lhs = compose(compose(f, g), h)
        rhs = compose(f, compose(g, h))
        assert lhs.apply(p) == rhs.apply(p)

    @given(small_maps, polys)
    def test_identity_neutral(self, m, p):
        i = AlgebraMap.identity()
        assert compose(i, m).apply(p) == m.apply(p) == compose(m, i).apply(p)


class TestLengthAndSlices:
    @given(words, polys, words)
    def test_sandwich_preserves_length(self, u, p, v):
        sandwich = mul(mul(Poly.word(*u), p), Poly.word(*v))
        assert sandwich.length() == p.length()

    @given(polys, st.sampled_from(LETTERS))
    def test_tau_bounded_by_length(self, p, g):
        assert 0 <= p.tau(g) <= p.length()

    @given(polys, st.sampled_from(LETTERS))
    def test_tau_of_marker_free_poly(self, p, g):
        if g not in p.alphabet():
            assert p.tau(g) == p.length()


class TestSerialization:
    @given(polys)
    def test_round_trip(self, p):
        assert poly_from_str(poly_to_str(p)) == p

    @given(polys)
    def test_canonical(self, p):
        assert poly_to_str(poly_from_str(poly_to_str(p))) == poly_to_str(p)


heights = st.fractions(min_value=Fraction(1, 8), max_value=Fraction(64))
factors = st.fractions(min_value=Fraction(1, 8), max_value=Fraction(1))


class TestShrink:
    @given(heights, heights, factors)
    def test_preserves_validity(self, hx, hy, u):
        dga = Dga(
            (Generator("x", 1, hy + hx), Generator("y", 0, hy)),
            {"x": Poly.gen("y")},
            True,
        )
        assert check_dga(dga).ok
        assert check_dga(shrink(dga, u)).ok

    @given(heights, factors, factors)
    def test_composes_multiplicatively(self, h, u, v):
        dga = Dga((Generator("x", 0, h),), {}, True)
        assert shrink(shrink(dga, u), v) == shrink(dga, u * v)


class TestRotationDegrees:
    @given(st.integers(min_value=-50, max_value=50))
    def test_inverse(self, k):
        r = Fraction(2 * k + 1, 4)
        d = degree_from_rotation(r)
        assert r == Fraction(-2 * d - 1, 4)
