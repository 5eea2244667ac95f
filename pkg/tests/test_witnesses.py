"""Tests for the predicted-value constructions and their verifiers."""
import pytest

from arithinv.errors import (
    InvalidInstanceError,
    NotZeroSumError,
    SizeLimitError,
    UnsupportedGroupError,
)
from arithinv.factorize import factorizations, is_atom
from arithinv.group import GroupSpec
from arithinv.sequence import Sequence
from arithinv.witnesses import (
    Witness,
    catenary_two_witness,
    integer_catenary_witnesses,
    plus_minus_alphabet,
    plus_minus_factorizations,
    rank3_tame_two_witness,
    reflection_tame_witness,
    tame_two_case_witness,
    two_group_tame_family,
    two_primes_witness,
    verify_tame_unique_route,
    verify_witness,
)

C5 = GroupSpec(0, (5,))
C233 = GroupSpec(0, (3, 3))
C2_3 = GroupSpec(0, (2, 2, 2))


def assert_ok(witness, **kwargs):
    report = verify_witness(witness, **kwargs)
    assert report.ok, report.summary()
    return report


class TestCatenaryTwo:
    @pytest.mark.parametrize("spec", [
        GroupSpec(0, (4,)),
        GroupSpec(0, (5,)),
        GroupSpec(0, (6,)),
        GroupSpec(0, (3, 3)),
        GroupSpec(0, (2, 2, 2)),
        GroupSpec(0, (2, 2, 6)),
        GroupSpec(0, (3, 12)),
    ])
    def test_constructions_verify(self, spec):
        w = catenary_two_witness(spec)
        assert w.predicted == 2
        report = assert_ok(w)
        assert report.method == "enumerate"

    @pytest.mark.parametrize("spec", [
        GroupSpec(0, ()),
        GroupSpec(0, (2,)),
        GroupSpec(0, (3,)),
        GroupSpec(0, (2, 2)),
    ])
    def test_unsupported_groups(self, spec):
        with pytest.raises(UnsupportedGroupError):
            catenary_two_witness(spec)


class TestIntegerCatenary:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_chain_has_unbounded_catenary(self, n):
        chain, window = integer_catenary_witnesses(n)
        assert chain.predicted == n + 1
        assert_ok(chain)
        assert window.predicted == 2
        assert_ok(window)

    def test_window_has_three_factorizations(self):
        _, window = integer_catenary_witnesses(2)
        fs = factorizations(window.element)
        assert len(fs) == 3
        D = fs.distance_matrix()
        assert all(D[i][j] == 2 for i in range(3) for j in range(3) if i != j)

    def test_small_n_rejected(self):
        with pytest.raises(InvalidInstanceError):
            integer_catenary_witnesses(1)


class TestReflection:
    @pytest.mark.parametrize("spec,m", [
        (C5, 3), (C5, 4), (C5, 5),
        (C2_3, 3), (C2_3, 4),
        (C233, 3), (C233, 4), (C233, 5),
    ])
    def test_reflection_is_tame_degree_m(self, spec, m):
        w = reflection_tame_witness(spec, m)
        assert len(w.atom) == m and is_atom(w.atom)
        assert w.element == w.atom * (-w.atom)
        assert_ok(w)

    def test_m_below_three_rejected(self):
        with pytest.raises(InvalidInstanceError):
            reflection_tame_witness(C5, 2)

    def test_m_above_longest_atom_rejected(self):
        with pytest.raises(InvalidInstanceError):
            reflection_tame_witness(C233, 6)  # longest atom there has length 5


class TestFixedTameCases:
    @pytest.mark.parametrize("case", ["c6", "c3c3", "z"])
    def test_tame_two_cases(self, case):
        w = tame_two_case_witness(case)
        assert w.predicted == 2
        assert_ok(w)

    def test_unknown_case_rejected(self):
        with pytest.raises(InvalidInstanceError):
            tame_two_case_witness("c7")

    def test_rank_three(self):
        w = rank3_tame_two_witness()
        assert w.predicted == 2
        assert_ok(w)

    @pytest.mark.parametrize("n", [2, 3, 4, 6])
    def test_two_letters_in_one_class(self, n):
        w = two_primes_witness(n)
        assert w.predicted == 2
        assert_ok(w)

    def test_two_primes_needs_order_two(self):
        with pytest.raises(InvalidInstanceError):
            two_primes_witness(1)


class TestTwoGroupFamily:
    @pytest.mark.parametrize("variant,r,nu,predicted", [
        ("even", 4, 1, 9), ("even", 4, 2, 8), ("even", 4, 3, 7), ("even", 4, 4, 6),
        ("chain0", 4, 1, 5), ("chain0", 4, 2, 4),
        ("odd", 5, 1, 11), ("odd", 5, 4, 8),
        # the longest factorization here beats the route, so only
        # full enumeration certifies this member
        ("chain2", 6, 4, 11),
    ])
    def test_small_members_verify_by_enumeration(self, variant, r, nu, predicted):
        w = two_group_tame_family(variant, r, nu)
        assert w.predicted == predicted
        report = assert_ok(w)
        assert report.method == "enumerate"

    @pytest.mark.parametrize("variant,r,nu,predicted", [
        ("even", 6, 1, 19),
        ("chain2", 6, 1, 14),
        ("odd", 7, 1, 22),
    ])
    def test_large_members_verify_by_unique_route(self, variant, r, nu, predicted):
        w = two_group_tame_family(variant, r, nu)
        assert w.predicted == predicted
        report = verify_tame_unique_route(w)
        assert report.ok, report.summary()
        assert report.method == "unique-route"

    def test_route_and_base_are_factorizations(self):
        w = two_group_tame_family("even", 4, 2)
        for z in (w.base, w.route):
            prod = w.alphabet.empty()
            for atom in z:
                assert is_atom(atom)
                prod = prod * atom
            assert prod == w.element
        assert w.atom in w.route
        assert not set(w.base) & set(w.route)
        assert len(w.route) == w.predicted

    def test_cap_falls_back_to_unique_route(self):
        w = two_group_tame_family("even", 4, 1)
        report = verify_witness(w, max_factorizations=2)
        assert report.ok and report.method == "unique-route"

    @pytest.mark.parametrize("variant,r,nu", [
        ("even", 5, 1),     # r must be even
        ("even", 2, 1),     # r must be >= 4
        ("even", 4, 5),     # nu out of range
        ("odd", 4, 1),      # r must be odd
        ("odd", 5, 5),      # nu out of range
        ("chain2", 8, 1),   # r must be 2 mod 4
        ("chain2", 6, 5),   # nu out of range
        ("chain0", 6, 1),   # r must be 0 mod 4
        ("chain0", 4, 3),   # nu out of range
        ("spiral", 4, 1),   # no such variant
    ])
    def test_bad_parameters_rejected(self, variant, r, nu):
        with pytest.raises(InvalidInstanceError):
            two_group_tame_family(variant, r, nu)


class TestUniqueRouteChecks:
    def test_wrong_prediction_reported(self):
        w = two_group_tame_family("even", 4, 1)
        tampered = Witness(
            name=w.name, claim=w.claim, kind=w.kind, alphabet=w.alphabet,
            element=w.element, predicted=w.predicted + 1, atom=w.atom,
            base=w.base, route=w.route)
        report = verify_tame_unique_route(tampered)
        assert not report.ok and report.computed == w.predicted

    def test_shared_atom_detected(self):
        w = two_group_tame_family("even", 4, 1)
        tampered = Witness(
            name=w.name, claim=w.claim, kind=w.kind, alphabet=w.alphabet,
            element=w.element, predicted=w.predicted, atom=w.atom,
            base=w.route, route=w.route)
        report = verify_tame_unique_route(tampered)
        assert not report.ok and "share" in report.detail

    def test_wrong_product_detected(self):
        w = two_group_tame_family("even", 4, 1)
        tampered = Witness(
            name=w.name, claim=w.claim, kind=w.kind, alphabet=w.alphabet,
            element=w.element, predicted=w.predicted, atom=w.atom,
            base=w.base[:-1], route=w.route)
        report = verify_tame_unique_route(tampered)
        assert not report.ok and "multiply" in report.detail

    def test_missing_route_raises(self):
        w = reflection_tame_witness(C5, 3)  # carries no base/route
        with pytest.raises(InvalidInstanceError):
            verify_tame_unique_route(w)

    def test_cap_without_route_reraises(self):
        w = reflection_tame_witness(C5, 5)  # 2 factorizations
        with pytest.raises(SizeLimitError):
            verify_witness(w, max_factorizations=1)


class TestWitnessValidation:
    def test_unknown_kind_rejected(self):
        w = catenary_two_witness(GroupSpec(0, (5,)))
        with pytest.raises(InvalidInstanceError):
            Witness(name="x", claim="x", kind="mystery", alphabet=w.alphabet,
                    element=w.element, predicted=2)

    def test_tame_without_atom_rejected(self):
        w = catenary_two_witness(GroupSpec(0, (5,)))
        with pytest.raises(InvalidInstanceError):
            Witness(name="x", claim="x", kind="tame", alphabet=w.alphabet,
                    element=w.element, predicted=2)

    def test_report_summary_mentions_status(self):
        report = verify_witness(catenary_two_witness(GroupSpec(0, (5,))))
        assert "ok" in report.summary()


class TestPlusMinus:
    def test_alphabet_doubles_the_class_at_two(self):
        alpha, tset = plus_minus_alphabet(2)
        assert tset == frozenset({2})
        assert len(alpha) == 2
        assert alpha.class_of("e") == alpha.class_of("-e")

    def test_alphabet_splits_classes_above_two(self):
        alpha, tset = plus_minus_alphabet(5)
        assert tset == frozenset({5})
        assert alpha.class_of("e") != alpha.class_of("-e")

    def test_small_order_rejected(self):
        with pytest.raises(InvalidInstanceError):
            plus_minus_alphabet(1)

    @staticmethod
    def _multiset(fs):
        return sorted(sorted(a.render() for a in fs.factorization(i))
                      for i in range(len(fs)))

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_closed_form_matches_enumeration(self, d):
        alpha, _ = plus_minus_alphabet(d)
        for s in range(0, 3 * d + 1):
            for t in range(0, 3 * d + 1):
                if (s - t) % d:
                    continue
                closed = plus_minus_factorizations(s, t, d)
                vec = [0, 0]
                vec[alpha.index("e")] = s
                vec[alpha.index("-e")] = t
                generic = factorizations(Sequence(alpha, tuple(vec)))
                assert self._multiset(closed) == self._multiset(generic), (d, s, t)

    def test_factorization_count_is_linear_in_overlap(self):
        # e^6 (-e)^6 at d = 3: one factorization per pair-block count 0, 3, 6
        fs = plus_minus_factorizations(6, 6, 3)
        assert len(fs) == 3
        assert sorted(fs.lengths()) == [4, 5, 6]

    def test_unbalanced_counts_rejected(self):
        with pytest.raises(NotZeroSumError):
            plus_minus_factorizations(4, 3, 3)

    def test_negative_counts_rejected(self):
        with pytest.raises(InvalidInstanceError):
            plus_minus_factorizations(-1, 2, 3)

    def test_empty_element(self):
        fs = plus_minus_factorizations(0, 0, 4)
        assert len(fs) == 1 and fs.lengths() == (0,)
