"""Unit tests for path matrices, torus knots, tangles, and connected sums."""

import pytest

from legch import algebra
from legch.algebra import Poly, add, mul, poly_from_str, poly_to_str
from legch.builders import (
    ClosureReferenced,
    EmptyList,
    EvenParameter,
    NotDegreeOne,
    PrefixCollision,
    TooSmall,
    connect_sum,
    fibonacci_lengths,
    is_even_delta_class,
    path_matrix,
    tangle_from_dict,
    tangle_from_knot,
    tangle_to_dict,
    torus_knot_dga,
    torus_tangle,
)
from legch.dga import Dga, Generator, check_dga


def P(text):
    return poly_from_str(text)


class TestPathMatrix:
    def test_n1(self):
        m = path_matrix(1)
        assert m[1, 1] == P("b1")
        assert m[1, 2] == P("1")
        assert m[2, 1] == P("1")
        assert m[2, 2] == P("0")

    def test_trefoil_entries(self):
        m = path_matrix(3)
        assert poly_to_str(m[1, 1]) == "b1 + b3 + b1 b2 b3"
        assert poly_to_str(m[1, 2]) == "1 + b1 b2"
        assert poly_to_str(m[2, 1]) == "1 + b2 b3"
        assert poly_to_str(m[2, 2]) == "b2"

    def test_n5_lengths(self):
        assert path_matrix(5).lengths() == (8, 5, 5, 3)

    def test_too_small(self):
        with pytest.raises(TooSmall):
            path_matrix(0)


class TestFibonacci:
    def test_values(self):
        assert fibonacci_lengths(3) == (3, 2, 2, 1)
        assert fibonacci_lengths(1) == (1, 1, 1, 0)
        assert fibonacci_lengths(10) == (89, 55, 55, 34)

    def test_matches_path_matrix(self):
        for n in range(1, 13):
            assert path_matrix(n).lengths() == fibonacci_lengths(n)


class TestTorusKnot:
    def test_trefoil_differentials(self):
        dga = torus_knot_dga(3)
        assert poly_to_str(dga.d("a1")) == "1 + b1 + b3 + b1 b2 b3"
        assert poly_to_str(dga.d("a2")) == "b2 + b1 b2 + b2 b3 + b2 b3 b1 b2"
        assert dga.rotation_zero
        assert [g.degree for g in dga.generators] == [0, 0, 0, 1, 1]

    def test_n5_length(self):
        assert torus_knot_dga(5).d("a1").length() == 9

    def test_errors(self):
        with pytest.raises(EvenParameter):
            torus_knot_dga(4)
        with pytest.raises(TooSmall):
            torus_knot_dga(1)

    @pytest.mark.parametrize("n", [3, 5, 7, 9, 11, 13])
    def test_certified_lengths_against_expansion(self, n, monkeypatch):
        # oracle: fully explicit arithmetic with the structural shortcuts
        # disabled must agree with the certified symbolic construction
        certified = torus_knot_dga(n).d("a2").length()
        monkeypatch.setattr(algebra, "LAZY_THRESHOLD", 10**9)
        monkeypatch.setattr(algebra, "EXPANSION_CAP", 10**9)
        m = path_matrix(n)
        brute = add(Poly.one(), add(m[2, 2], mul(m[2, 1], m[1, 2])))
        assert brute.is_explicit
        assert certified == brute.length()

    def test_valid(self):
        for n in (3, 5, 7, 9):
            assert check_dga(torus_knot_dga(n)).ok


class TestTangle:
    def test_trefoil_word(self):
        t = torus_tangle(3, "")
        assert poly_to_str(t.word) == "1 + b2 + b1 b2 + b2 b3 + b2 b3 b1 b2"
        assert t.word.length() == 5
        assert t.internal.names == frozenset({"b1", "b2", "b3", "a1"})

    def test_prefixing(self):
        t = torus_tangle(3, "k1")
        assert "k1.b2" in t.word.alphabet()
        assert t.internal.names == frozenset({"k1.b1", "k1.b2", "k1.b3", "k1.a1"})

    def test_empty_tangle(self):
        dga = Dga((Generator("a", 1),), {}, True)
        t = tangle_from_knot(dga, "a", "")
        assert t.word == Poly.one()

    def test_odd_word_lengths(self):
        for n in (3, 7, 9):
            assert torus_tangle(n, "").word.length() % 2 == 1

    def test_closure_referenced(self):
        dga = Dga(
            (Generator("a", 1), Generator("x", 2)),
            {"x": Poly.gen("a")},
            True,
        )
        with pytest.raises(ClosureReferenced):
            tangle_from_knot(dga, "a", "")

    def test_not_degree_one(self):
        with pytest.raises(NotDegreeOne):
            tangle_from_knot(torus_knot_dga(3), "b1", "")

    def test_json_round_trip(self):
        t = torus_tangle(3, "k1")
        back = tangle_from_dict(tangle_to_dict(t))
        assert back.word == t.word
        assert back.internal == t.internal
        assert back.prefix == "k1"


class TestConnectSum:
    def test_single_trefoil_recovers_knot(self):
        dga = connect_sum([torus_tangle(3, "")], closure_name="a2")
        reference = torus_knot_dga(3)
        assert dga.names == reference.names
        assert dga.d("a2") == reference.d("a2")
        assert dga.d("a1") == reference.d("a1")

    def test_double_trefoil(self):
        dga = connect_sum([torus_tangle(3, "k1"), torus_tangle(3, "k2")])
        # each word has 5 words including the unit; the two units' product
        # cancels the explicit 1, leaving 5*5 - 1 words
        assert dga.d("a").length() == 24
        assert check_dga(dga).ok

    def test_closure_formula(self):
        t1, t2 = torus_tangle(3, "k1"), torus_tangle(3, "k2")
        dga = connect_sum([t1, t2])
        assert dga.d("a") == add(Poly.one(), mul(t1.word, t2.word))

    def test_associativity_of_words(self):
        ts = [torus_tangle(3, f"k{i}") for i in (1, 2, 3)]
        flat = connect_sum(ts)
        paired = add(
            Poly.one(), mul(mul(ts[0].word, ts[1].word), ts[2].word)
        )
        assert flat.d("a") == paired

    def test_internal_differentials_unchanged(self):
        t = torus_tangle(3, "k1")
        dga = connect_sum([t, torus_tangle(3, "k2")])
        for name, image in t.internal.differential.items():
            assert dga.d(name) == image

    def test_errors(self):
        with pytest.raises(EmptyList):
            connect_sum([])
        with pytest.raises(PrefixCollision):
            connect_sum([torus_tangle(3, "k1"), torus_tangle(5, "k1")])


class TestEvenDeltaClass:
    def test_torus_examples(self):
        assert is_even_delta_class(torus_knot_dga(3))[0]
        ok, report = is_even_delta_class(torus_knot_dga(5))
        assert not ok
        assert any("7" in r for r in report)

    def test_criterion(self):
        for n in range(3, 22, 2):
            assert is_even_delta_class(torus_knot_dga(n))[0] == (n % 3 != 2)

    def test_connected_sum_closed(self):
        dga = connect_sum([torus_tangle(3, "k1"), torus_tangle(9, "k2")])
        assert is_even_delta_class(dga)[0]

    def test_negative_degree_rejected(self):
        dga = Dga((Generator("c", -1),), {}, True)
        assert not is_even_delta_class(dga)[0]
