"""Factorization engine versus hand-derived values and the brute-force oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arithinv.errors import (
    IncompatibleFactorizationsError,
    NotEnumerableError,
    NotZeroSumError,
    SizeLimitError,
)
from arithinv.factorize import (
    FactorizationSet,
    atoms_dividing,
    catenary,
    davenport,
    distance,
    enumerate_atoms,
    factorization_count,
    factorizations,
    is_atom,
    length_set,
    min_max_lengths,
    minimal_relations,
)
from arithinv.group import GroupSpec, parse_group_spec
from arithinv.oracle import (
    naive_atoms,
    naive_catenary,
    naive_factorizations,
    naive_is_atom,
    naive_length_set,
    naive_minimal_relations,
)
from arithinv.sequence import Alphabet, Sequence, block_alphabet, parse_sequence

C3 = parse_group_spec("C3")
C4 = parse_group_spec("C4")
C5 = parse_group_spec("C5")
Z = parse_group_spec("Z")
A3 = block_alphabet(C3)
A4 = block_alphabet(C4)
A5 = block_alphabet(C5)


def multisets(fs: FactorizationSet) -> list[tuple[tuple[int, ...], ...]]:
    """Factorizations as sorted atom-vector multisets, for oracle comparison."""
    out = []
    for row in fs.vectors:
        parts = []
        for atom, mult in zip(fs.atoms, row):
            parts.extend([atom.exponents] * mult)
        out.append(tuple(sorted(parts)))
    return sorted(out)


class TestIsAtom:
    def test_known_atoms_c3(self):
        assert is_atom(A3.seq({"g": 3}))
        assert is_atom(A3.seq({"g": 1, "2g": 1}))
        assert is_atom(A3.seq({"0": 1}))
        assert not is_atom(A3.seq({"g": 3, "2g": 3}))
        assert not is_atom(A3.seq({"g": 1}))      # not zero-sum
        assert not is_atom(A3.empty())
        assert not is_atom(A3.seq({"0": 2}))

    def test_zero_letter_spoils_minimality(self):
        assert not is_atom(A3.seq({"0": 1, "g": 3}))

    def test_matches_oracle_on_census(self):
        for a in (A3, A4):
            for s in a.seq({label: 2 for label in a.labels}).subsequences():
                if len(s) <= 6:
                    assert is_atom(s) == naive_is_atom(s)

    def test_infinite_order_classes(self):
        az = block_alphabet([Z.element([1]), Z.element([-1]), Z.element([3])])
        assert is_atom(az.seq({"g": 1, "-g": 1}))
        assert is_atom(az.seq({"3g": 1, "-g": 3}))
        assert not is_atom(az.seq({"3g": 1, "-g": 4, "g": 1}))


class TestAtomEnumeration:
    def test_c3_atoms_exactly(self):
        atoms, dav = enumerate_atoms(A3)
        assert {a.render() for a in atoms} == {"0", "g^3", "g·2g", "2g^3"}
        assert dav == 3

    def test_c2c2_atoms_exactly(self):
        a = block_alphabet(parse_group_spec("C2^2"))
        atoms, dav = enumerate_atoms(a)
        rendered = {atom.render() for atom in atoms}
        assert rendered == {"(0,0)", "(0,1)^2", "(1,0)^2", "(1,1)^2", "(0,1)·(1,0)·(1,1)"}
        assert dav == 3

    def test_c5_census(self):
        atoms, dav = enumerate_atoms(A5)
        assert len(atoms) == 15
        assert dav == 5
        assert A5.seq({"g": 1, "4g": 1}) in atoms
        assert A5.seq({"g": 2, "3g": 1}) in atoms
        assert A5.seq({"3g": 1, "4g": 3}) in atoms
        # beyond the two-letter pairs, no atom mixes a class with its inverse
        for atom in atoms:
            if len(atom) > 2:
                labels = set(atom.support())
                assert not ({"g", "4g"} <= labels or {"2g", "3g"} <= labels)

    def test_matches_naive_enumeration(self):
        for spec in (C3, C4, parse_group_spec("C2^2")):
            a = block_alphabet(spec)
            fast, dav = enumerate_atoms(a)
            slow = naive_atoms(a, dav + 1)
            assert sorted(s.exponents for s in fast) == sorted(s.exponents for s in slow)

    @pytest.mark.parametrize("text,expected", [
        ("C2", 2), ("C3", 3), ("C4", 4), ("C5", 5), ("C6", 6), ("C7", 7),
        ("C2^2", 3), ("C2^3", 4), ("C2^4", 5), ("C3^2", 5),
    ])
    def test_davenport(self, text, expected):
        assert davenport(block_alphabet(parse_group_spec(text))) == expected

    def test_infinite_alphabet_rejected(self):
        az = block_alphabet([Z.element([1]), Z.element([-1])])
        with pytest.raises(NotEnumerableError):
            enumerate_atoms(az)

    def test_krull_doubled_class(self):
        g = parse_group_spec("C2").element([1])
        a = Alphabet(g.spec, (("p", g), ("q", g)))
        atoms, dav = enumerate_atoms(a)
        assert {atom.render() for atom in atoms} == {"p^2", "p·q", "q^2"}
        assert dav == 2


class TestFactorizations:
    def test_two_routes_c3(self):
        b = A3.seq({"g": 3, "2g": 3})
        fs = factorizations(b)
        assert len(fs) == 2
        assert fs.lengths() == (2, 3)
        assert length_set(b) == frozenset({2, 3})
        assert min_max_lengths(b) == (2, 3)
        assert factorization_count(b) == 4 - 2  # two of the four length choices coincide

    def test_empty_element(self):
        fs = factorizations(A3.empty())
        assert len(fs) == 1
        assert fs.lengths() == (0,)
        assert length_set(A3.empty()) == frozenset({0})

    def test_not_zero_sum_rejected(self):
        with pytest.raises(NotZeroSumError):
            factorizations(A3.seq({"g": 1}))
        with pytest.raises(NotZeroSumError):
            length_set(A3.seq({"g": 2}))

    def test_size_limit(self):
        b = A3.seq({"g": 9, "2g": 9})  # 4 factorizations
        assert factorization_count(b) == 4
        with pytest.raises(SizeLimitError) as info:
            factorizations(b, max_factorizations=3)
        assert info.value.count == 4
        assert len(factorizations(b, max_factorizations=None)) == 4

    def test_matches_oracle_c4(self):
        b = A4.seq({"g": 4, "2g": 2, "3g": 4})
        assert multisets(factorizations(b)) == naive_factorizations(b)
        assert len(factorizations(b)) == 5

    def test_infinite_order_element(self):
        w = _chain_element(3)
        fs = factorizations(w)
        assert len(fs) == 2
        assert sorted(fs.lengths()) == [2, 4]

    def test_every_row_multiplies_back(self):
        b = A4.seq({"g": 4, "2g": 2, "3g": 4})
        fs = factorizations(b)
        for i in range(len(fs)):
            prod = b.alphabet.empty()
            for atom in fs.factorization(i):
                prod = prod * atom
            assert prod == b


def _chain_element(n: int) -> Sequence:
    """g^n·(-g)^n·(ng)·(-ng) over the integers."""
    a = block_alphabet([Z.element([1]), Z.element([-1]), Z.element([n]), Z.element([-n])])
    return a.seq({"g": n, "-g": n, f"{n}g": 1, f"-{n}g": 1})


W_ELEMENT_CLASSES = [-1, -4, 2, 3]


def _w_element() -> Sequence:
    a = block_alphabet([Z.element([k]) for k in W_ELEMENT_CLASSES])
    return a.seq({"-g": 2, "-4g": 2, "2g": 2, "3g": 2})


class TestAtomsDividing:
    def test_w_element_atoms(self):
        atoms = atoms_dividing(_w_element())
        rendered = {a.render() for a in atoms}
        assert rendered == {
            "(-4g)·(-g)·2g·3g",
            "(-g)^2·2g",
            "(-4g)^2·2g·3g^2",
            "(-4g)·2g^2",
            "(-4g)·(-g)^2·3g^2",
        }

    def test_consistent_with_enumeration_on_finite(self):
        b = A4.seq({"g": 2, "2g": 1, "3g": 2})
        atoms, _ = enumerate_atoms(A4)
        assert set(atoms_dividing(b)) == {a for a in atoms if a.divides(b)}


class TestDistance:
    def test_manual_example(self):
        b = A3.seq({"g": 3, "2g": 3})
        fs = factorizations(b)
        za, zb = fs.factorization(0), fs.factorization(1)
        assert distance(za, zb) == 3  # no common atoms, lengths 2 and 3
        assert distance(za, za) == 0

    def test_incompatible_products(self):
        fs1 = factorizations(A3.seq({"g": 3}))
        fs2 = factorizations(A3.seq({"2g": 3}))
        with pytest.raises(IncompatibleFactorizationsError):
            distance(fs1.factorization(0), fs2.factorization(0))

    def test_metric_axioms_on_c4_element(self):
        fs = factorizations(A4.seq({"g": 4, "2g": 2, "3g": 4}))
        zs = [fs.factorization(i) for i in range(len(fs))]
        D = fs.distance_matrix()
        for i, zi in enumerate(zs):
            for j, zj in enumerate(zs):
                assert D[i, j] == distance(zi, zj)
                assert D[i, j] == D[j, i]
                assert (D[i, j] == 0) == (i == j)
                if i != j:
                    assert D[i, j] >= 2
                for k in range(len(zs)):
                    assert D[i, j] <= D[i, k] + D[k, j]


class TestCatenaryAndRelations:
    def test_c3_pair(self):
        b = A3.seq({"g": 3, "2g": 3})
        assert catenary(b) == 3
        assert minimal_relations(b) == (3,)

    def test_c4_element_catenary_three(self):
        b = A4.seq({"g": 4, "2g": 2, "3g": 4})
        assert catenary(b) == 3
        assert naive_catenary(b) == 3
        assert minimal_relations(b) == naive_minimal_relations(b)

    def test_w_element_three_routes_pairwise_two(self):
        w = _w_element()
        fs = factorizations(w)
        assert len(fs) == 3
        D = fs.distance_matrix()
        assert all(D[i, j] == 2 for i in range(3) for j in range(3) if i != j)
        assert catenary(w) == 2
        assert minimal_relations(w) == (2,)

    def test_chain_element_distance(self):
        for n in (2, 3, 4):
            b = _chain_element(n)
            assert catenary(b) == n + 1
            assert minimal_relations(b) == (n + 1,)

    def test_single_factorization_is_zero(self):
        assert catenary(A3.seq({"g": 3})) == 0
        assert minimal_relations(A3.seq({"g": 3})) == ()
        assert catenary(A3.empty()) == 0

    def test_krull_two_primes_c2(self):
        g = parse_group_spec("C2").element([1])
        a = Alphabet(g.spec, (("p", g), ("q", g)))
        b = a.seq({"p": 2, "q": 2})
        assert catenary(b) == 2
        assert minimal_relations(b) == (2,)


@st.composite
def c4_zero_sum(draw):
    """Zero-sum sequences over {g, 2g, 3g} in C4, length at most 7."""
    a = block_alphabet([C4.element([1]), C4.element([2]), C4.element([3])])
    vec = [draw(st.integers(0, 2)) for _ in range(3)]
    s = Sequence(a, tuple(vec))
    total = s.class_sum()
    if not total.is_zero():
        i = a.first_index_of_class(-total)
        vec[i] += 1
    return Sequence(a, tuple(vec))


class TestAgainstOracle:
    @given(c4_zero_sum())
    @settings(max_examples=40, deadline=None)
    def test_factorizations_match(self, b):
        assert multisets(factorizations(b)) == naive_factorizations(b)

    @given(c4_zero_sum())
    @settings(max_examples=40, deadline=None)
    def test_lengths_match(self, b):
        assert length_set(b) == naive_length_set(b)
        if length_set(b):
            assert min_max_lengths(b) == (min(length_set(b)), max(length_set(b)))

    @given(c4_zero_sum())
    @settings(max_examples=30, deadline=None)
    def test_catenary_and_relations_match(self, b):
        assert catenary(b) == naive_catenary(b)
        assert minimal_relations(b) == naive_minimal_relations(b)

    @given(c4_zero_sum(), c4_zero_sum())
    @settings(max_examples=30, deadline=None)
    def test_length_sets_superadditive(self, b1, b2):
        sums = {x + y for x in length_set(b1) for y in length_set(b2)}
        assert sums <= length_set(b1 * b2)
