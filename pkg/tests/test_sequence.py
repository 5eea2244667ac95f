"""Alphabets and multiset sequences."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arithinv.errors import (
    IncompatibleElementsError,
    InvalidSpecError,
    NonDivisorError,
    ParseError,
)
from arithinv.group import GroupSpec, parse_group_spec
from arithinv.sequence import (
    Alphabet,
    Sequence,
    block_alphabet,
    krull_alphabet,
    parse_sequence,
)

C5 = parse_group_spec("C5")
A5 = block_alphabet(C5)
Z = parse_group_spec("Z")
AZ = block_alphabet([Z.element([1]), Z.element([-1]), Z.element([3])])


class TestAlphabet:
    def test_block_alphabet_orders_letters_canonically(self):
        assert A5.labels == ("0", "g", "2g", "3g", "4g")
        # construction order must not matter
        shuffled = block_alphabet(list(C5.elements())[::-1])
        assert shuffled == A5

    def test_block_alphabet_collapses_duplicates(self):
        g = C5.element([1])
        assert block_alphabet([g, g, C5.element([6])]).labels == ("g",)

    def test_krull_alphabet_labels(self):
        g = C5.element([1])
        h = C5.element([2])
        a = krull_alphabet([g, h], {g: 3})
        assert a.labels == ("g#1", "g#2", "g#3", "2g")
        assert a.class_of("g#2") == g

    def test_duplicate_labels_rejected(self):
        g = C5.element([1])
        with pytest.raises(InvalidSpecError):
            Alphabet(C5, (("p", g), ("p", g)))

    def test_content_hash_is_stable_and_discriminating(self):
        assert A5.content_hash() == block_alphabet(C5).content_hash()
        assert A5.content_hash() != block_alphabet(parse_group_spec("C7")).content_hash()
        g = C5.element([1])
        assert (Alphabet(C5, (("p", g), ("q", g))).content_hash()
                != Alphabet(C5, (("p", g),)).content_hash())


class TestSequenceAlgebra:
    def test_mul_divides_div(self):
        s = A5.seq({"g": 2, "2g": 1})
        t = A5.seq({"g": 1})
        assert (s * t).exponents == A5.seq({"g": 3, "2g": 1}).exponents
        assert t.divides(s)
        assert not s.divides(t)
        assert (s / t) == A5.seq({"g": 1, "2g": 1})
        with pytest.raises(NonDivisorError):
            t / s

    def test_pow(self):
        assert A5.seq({"g": 2}) ** 3 == A5.seq({"g": 6})
        assert (A5.seq({"g": 2}) ** 0).is_empty()

    def test_len_and_class_sum(self):
        s = A5.seq({"g": 3, "2g": 1})
        assert len(s) == 4
        assert s.class_sum() == C5.zero()
        assert A5.seq({"g": 1}).class_sum() == C5.element([1])
        assert A5.empty().class_sum().is_zero()

    def test_neg_maps_to_inverse_classes(self):
        s = A5.seq({"g": 2, "2g": 1})
        assert -s == A5.seq({"4g": 2, "3g": 1})
        restricted = block_alphabet([Z.element([1])])
        with pytest.raises(InvalidSpecError):
            -restricted.seq({"g": 1})

    def test_subsequences(self):
        s = A5.seq({"g": 2, "2g": 1})
        subs = list(s.subsequences())
        assert len(subs) == 6  # (2+1)*(1+1)
        assert A5.empty() in subs and s in subs
        assert all(t.divides(s) for t in subs)

    def test_cross_alphabet_rejected(self):
        with pytest.raises(IncompatibleElementsError):
            A5.seq({"g": 1}) * AZ.seq({"g": 1})

    def test_support(self):
        assert A5.seq({"g": 2, "3g": 1}).support() == ("g", "3g")


class TestSequenceText:
    def test_render(self):
        assert A5.seq({"g": 3, "2g": 1}).render() == "g^3·2g"
        assert AZ.seq({"-g": 2, "g": 1}).render() == "(-g)^2·g"
        assert A5.empty().render() == "1"

    @pytest.mark.parametrize("text,expected", [
        ("g^3·2g", {"g": 3, "2g": 1}),
        ("g^3 2g", {"g": 3, "2g": 1}),
        ("g*g*2g", {"g": 2, "2g": 1}),
        ("(-g)^2", {"4g": 2}),     # resolves via the element expression -g = 4g
        ("7g", {"2g": 1}),
        ("0", {"0": 1}),
        ("1", {}),
        ("g^0", {}),
    ])
    def test_parse(self, text, expected):
        assert parse_sequence(A5, text) == A5.seq(expected)

    def test_parse_round_trip(self):
        for s in [A5.seq({"g": 2, "2g": 5}), AZ.seq({"-g": 3, "3g": 1}), A5.empty()]:
            assert parse_sequence(s.alphabet, s.render()) == s

    def test_parse_krull_labels(self):
        g = C5.element([1])
        a = krull_alphabet([g], {g: 2})
        assert parse_sequence(a, "g#1^2·g#2") == a.seq({"g#1": 2, "g#2": 1})
        # a bare element expression resolves to the first letter of the class
        assert parse_sequence(a, "g^3") == a.seq({"g#1": 3})

    def test_parse_basis_aliases(self):
        a = block_alphabet(parse_group_spec("C2^2"))
        assert parse_sequence(a, "e1·e2·e0^2") == a.seq({"(1,0)": 1, "(0,1)": 1, "(1,1)": 2})
        with pytest.raises(ParseError):
            parse_sequence(a, "e3")

    def test_parse_rejects(self):
        with pytest.raises(ParseError):
            parse_sequence(A5, "")
        with pytest.raises(ParseError):
            parse_sequence(A5, "h^2")
        with pytest.raises(ParseError):
            parse_sequence(AZ, "2g")  # Z alphabet restricted to {g,-g,3g}


@st.composite
def c5_sequences(draw):
    return Sequence(A5, tuple(draw(st.integers(0, 4)) for _ in range(len(A5))))


class TestSequenceProperties:
    @given(c5_sequences(), c5_sequences())
    @settings(max_examples=60, deadline=None)
    def test_class_sum_is_a_homomorphism(self, s, t):
        assert (s * t).class_sum() == s.class_sum() + t.class_sum()

    @given(c5_sequences(), c5_sequences())
    @settings(max_examples=60, deadline=None)
    def test_product_then_quotient_round_trips(self, s, t):
        assert (s * t) / t == s
        assert t.divides(s * t)

    @given(c5_sequences())
    @settings(max_examples=60, deadline=None)
    def test_neg_is_an_involution_with_opposite_sum(self, s):
        assert -(-s) == s
        assert (-s).class_sum() == -(s.class_sum())
        assert len(-s) == len(s)

    @given(c5_sequences())
    @settings(max_examples=30, deadline=None)
    def test_subsequence_count_matches_exponents(self, s):
        expected = 1
        for e in s.exponents:
            expected *= e + 1
        count = sum(1 for _ in s.subsequences())
        assert count == expected

    @given(c5_sequences())
    @settings(max_examples=60, deadline=None)
    def test_render_parse_round_trip(self, s):
        assert parse_sequence(A5, s.render()) == s
