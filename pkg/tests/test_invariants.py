"""Scans, exact invariants, and the weighted-split construction."""

import random
from fractions import Fraction

import pytest

from arithinv.errors import (
    InvalidInstanceError,
    InvalidTargetError,
    NotEnumerableError,
)
from arithinv.invariants import (
    ScanBound,
    ScanReport,
    ca_scan,
    daleth_star,
    davenport_star,
    delta_of,
    delta_scan,
    elasticity,
    elasticity_of,
    elasticity_scan,
    find_elasticity_witness,
    r_scan,
    rho_group,
    split_weighted_sum,
    zero_sum_sequences,
)
from arithinv.factorize import length_set
from arithinv.group import GroupSpec, parse_group_spec
from arithinv.oracle import naive_split_weighted_sum
from arithinv.sequence import Alphabet, block_alphabet, parse_sequence

C2 = parse_group_spec("C2")
C3 = parse_group_spec("C3")
C5 = parse_group_spec("C5")
A2 = block_alphabet(C2)
A3 = block_alphabet(C3)
A5 = block_alphabet(C5)


class TestBasics:
    def test_delta_of(self):
        assert delta_of({2, 3}) == frozenset({1})
        assert delta_of({2, 3, 5, 9}) == frozenset({1, 2, 4})
        assert delta_of({4}) == frozenset()
        assert delta_of(set()) == frozenset()

    def test_elasticity_of(self):
        assert elasticity_of({2, 3}) == Fraction(3, 2)
        assert elasticity_of({0}) == 1
        assert elasticity_of({7}) == 1
        with pytest.raises(InvalidInstanceError):
            elasticity_of(set())

    def test_elasticity_of_element(self):
        assert elasticity(A5.seq({"g": 5, "4g": 5})) == Fraction(5, 2)
        assert elasticity(A5.seq({"g": 5})) == 1
        assert elasticity(A5.empty()) == 1

    @pytest.mark.parametrize("text,expected", [
        ("C2", 2), ("C5", 5), ("C7", 7), ("C2^3", 4), ("C2^4", 5),
        ("C3^2", 5), ("C2xC4", 5), ("C1", 1),
    ])
    def test_davenport_star(self, text, expected):
        assert davenport_star(parse_group_spec(text)) == expected

    def test_davenport_star_needs_finite(self):
        with pytest.raises(NotEnumerableError):
            davenport_star(parse_group_spec("Z"))

    def test_rho_group(self):
        assert rho_group(C5) == Fraction(5, 2)
        assert rho_group(C2) == 1
        assert rho_group(parse_group_spec("C1")) == 1
        assert rho_group(parse_group_spec("C2^3")) == 2


class TestZeroSumEnumeration:
    def test_c3_up_to_three(self):
        seqs = list(zero_sum_sequences(A3, 3))
        rendered = [s.render() for s in seqs]
        assert rendered[0] == "1"
        assert len(seqs) == 8
        assert len(set(seqs)) == 8
        lengths = [len(s) for s in seqs]
        assert lengths == sorted(lengths)
        assert all(s.class_sum().is_zero() for s in seqs)

    def test_support_restriction(self):
        seqs = list(zero_sum_sequences(A3, 6, support=("g",)))
        assert [s.render() for s in seqs] == ["1", "g^3", "g^6"]

    def test_infinite_needs_support(self):
        z = parse_group_spec("Z")
        az = block_alphabet([z.element([1]), z.element([-1])])
        with pytest.raises(NotEnumerableError):
            list(zero_sum_sequences(az, 4))
        seqs = list(zero_sum_sequences(az, 4, support=("g", "-g")))
        assert [s.render() for s in seqs] == ["1", "(-g)·g", "(-g)^2·g^2"]


class TestDeltaScan:
    def test_c3(self):
        report = delta_scan(A3, 9)
        assert report.values == (1,)
        assert report.complete
        assert report.annotations["min_equals_gcd"] is True
        assert report.annotations["pair_gap_check"] == "ok"
        witness = report.witnesses[1]
        assert 1 in delta_of(length_set(witness))

    def test_c2_empty_and_complete(self):
        report = delta_scan(A2, 8)
        assert report.values == ()
        assert report.complete

    def test_small_bound_skips_pair_gap_check(self):
        report = delta_scan(A3, 4)
        assert "skipped" in report.annotations["pair_gap_check"]
        assert not report.complete or report.values == (1,)

    def test_jobs_do_not_change_results(self):
        assert delta_scan(A3, 9, jobs=3).to_json() == delta_scan(A3, 9).to_json()

    def test_report_json_schema(self):
        data = delta_scan(A3, 9).to_json()
        assert data["schema"] == 1
        assert data["invariant"] == "delta"
        assert data["group"] == "C3"
        assert data["bound"] == 9
        assert data["values"] == [1]
        assert data["complete"] is True
        assert set(data["witnesses"]) == {"1"}
        assert "exponents" in data["witnesses"]["1"]


class TestDalethStar:
    def test_c3(self):
        report = daleth_star(A3)
        assert report.values == (3,)
        assert report.complete
        assert report.witnesses[3] == A3.seq({"g": 3, "2g": 3})

    def test_c2c2(self):
        report = daleth_star(block_alphabet(parse_group_spec("C2^2")))
        assert report.values == (3,)

    def test_c2c2c2(self):
        report = daleth_star(block_alphabet(parse_group_spec("C2^3")))
        assert report.values == (3, 4)
        assert report.complete

    def test_c2_empty(self):
        assert daleth_star(A2).values == ()


class TestRelationScans:
    def test_c3_catenary_set(self):
        report = ca_scan(A3, 9)
        assert report.values == (3,)
        assert report.complete

    def test_c3_relation_set(self):
        report = r_scan(A3, 9)
        assert report.values == (3,)
        assert report.complete

    def test_c2_empty(self):
        report = ca_scan(A2, 8)
        assert report.values == ()
        assert report.complete

    def test_krull_two_primes_c2(self):
        g = C2.element([1])
        a = Alphabet(C2, (("p", g), ("q", g)))
        report = ca_scan(a, 8)
        assert report.values == (2,)
        assert report.complete

    def test_catenary_subset_of_relations(self):
        ca = ca_scan(A5, 8)
        r = r_scan(A5, 8)
        assert set(ca.values) <= set(r.values)
        if ca.values:
            assert max(ca.values) == max(r.values)

    def test_factorization_cap_skips(self):
        report = ca_scan(A3, ScanBound(9, max_factorization_count=1))
        assert report.annotations.get("skipped_oversized", 0) > 0


class TestElasticityScan:
    def test_c3(self):
        report = elasticity_scan(A3, 6)
        assert report.values == (Fraction(1), Fraction(3, 2))
        assert not report.complete
        assert report.witnesses[Fraction(3, 2)] == A3.seq({"g": 3, "2g": 3})

    def test_c2_complete(self):
        report = elasticity_scan(A2, 8)
        assert report.values == (Fraction(1),)
        assert report.complete

    def test_json_uses_fraction_strings(self):
        data = elasticity_scan(A3, 6).to_json()
        assert data["values"] == ["1", "3/2"]


class TestElasticityWitness:
    def test_extreme(self):
        b = find_elasticity_witness(A5, Fraction(5, 2), 12)
        assert b is not None and elasticity(b) == Fraction(5, 2)
        assert len(b) <= 12

    def test_intermediate(self):
        b = find_elasticity_witness(A5, Fraction(3, 2), 10)
        assert b is not None and elasticity(b) == Fraction(3, 2)

    def test_three_letter_support(self):
        b = find_elasticity_witness(A5, Fraction(9, 4), 20)
        assert b is not None and elasticity(b) == Fraction(9, 4)

    def test_unreachable_returns_none(self):
        assert find_elasticity_witness(A5, Fraction(3), 20) is None   # above the ceiling
        assert find_elasticity_witness(A5, Fraction(7, 3), 20) is None  # needs length 28

    def test_one(self):
        b = find_elasticity_witness(A5, 1, 10)
        assert b is not None and not b.is_empty() and elasticity(b) == 1

    def test_below_one_rejected(self):
        with pytest.raises(InvalidTargetError):
            find_elasticity_witness(A5, Fraction(1, 2), 10)


class TestSplitWeightedSum:
    def check(self, weights, amounts, columns):
        got = split_weighted_sum(weights, amounts, columns)
        product = 1
        for a in weights:
            product *= a
        assert len(got) == columns
        for column in got:
            assert all(c >= 0 for c in column)
            assert sum(a * c for a, c in zip(weights, column)) == product
        totals = [sum(col[i] for col in got) for i in range(len(weights))]
        assert tuple(totals) == tuple(amounts)

    def test_single_weight(self):
        self.check((4,), (3,), 3)

    def test_two_weights(self):
        self.check((2, 3), (3, 4), 3)
        self.check((2, 5), (10, 2), 3)

    def test_three_weights(self):
        self.check((2, 3, 5), (15, 10, 6), 3)
        self.check((1, 2, 3), (6, 0, 0), 1)

    @staticmethod
    def random_column(rng, weights, product):
        while True:
            rest = product
            col = []
            for a in weights[:-1]:
                c = rng.randint(0, rest // a)
                col.append(c)
                rest -= c * a
            if rest % weights[-1] == 0:
                return col + [rest // weights[-1]]

    def test_matches_oracle_existence(self):
        rng = random.Random(7)
        for _ in range(60):
            n = rng.randint(1, 3)
            weights = tuple(sorted(rng.sample(range(1, 13), n)))
            product = 1
            for a in weights:
                product *= a
            if product > 120:
                continue
            columns = rng.randint(1, 3)
            # summing random valid columns guarantees the precondition
            amounts = [0] * n
            for _ in range(columns):
                for i, c in enumerate(self.random_column(rng, weights, product)):
                    amounts[i] += c
            self.check(weights, tuple(amounts), columns)
            assert naive_split_weighted_sum(weights, tuple(amounts), columns) is not None

    def test_bad_instances_rejected(self):
        with pytest.raises(InvalidInstanceError):
            split_weighted_sum((2, 3), (1, 1), 2)  # weighted total mismatch
        with pytest.raises(InvalidInstanceError):
            split_weighted_sum((0, 3), (3, 0), 1)
        with pytest.raises(InvalidInstanceError):
            split_weighted_sum((2,), (-2,), 1)
        with pytest.raises(InvalidInstanceError):
            split_weighted_sum((2,), (2,), 0)
