import pytest

from nsg import (
    BoundTooSmallError,
    ChainNotSortedError,
    NotInSubsetError,
    NumericalSemigroup,
    betti_elements,
    classify,
    enumerate_by_genus,
    exponent_sequence,
    exponent_support,
    leq,
    residual_coefficients,
    restricted_factorizations,
    verify_theorems,
)
from nsg.bettiposet import OrderedSubset


class TestOrder:
    def test_examples(self, glued):
        assert leq(glued, 24, 36)
        assert not leq(glued, 36, 50)
        assert not leq(glued, 50, 36)
        assert leq(glued, 36, 36)

    def test_reflexive_antisymmetric_transitive(self, five_gen):
        elements = five_gen.elements_up_to(60)
        subset = OrderedSubset(five_gen, elements)
        for a in elements:
            assert subset.leq(a, a)
        for a in elements:
            for b in elements:
                if a != b and subset.leq(a, b):
                    assert not subset.leq(b, a)
        for a in elements[:20]:
            for b in elements[:20]:
                for c in elements[:20]:
                    if subset.leq(a, b) and subset.leq(b, c):
                        assert subset.leq(a, c)


class TestDownSet:
    def test_example(self, five_gen):
        betti = OrderedSubset(five_gen, betti_elements(five_gen))
        assert tuple(betti.down_set(57)) == (30, 32, 57)
        assert tuple(betti.down_set(48)) == (32, 48)
        assert tuple(betti.down_set(30)) == (30,)

    def test_missing_element(self, five_gen):
        betti = OrderedSubset(five_gen, betti_elements(five_gen))
        with pytest.raises(NotInSubsetError):
            betti.down_set(31)


class TestUSet:
    def test_example(self, five_gen):
        betti = OrderedSubset(five_gen, betti_elements(five_gen))
        assert tuple(betti.u_set()) == (30, 32, 34, 35, 36, 48)

    def test_chain_is_fixed(self, s469):
        betti = OrderedSubset(s469, betti_elements(s469))
        assert tuple(betti.u_set()) == tuple(betti)

    def test_support_prefix(self, s357):
        support = exponent_support(s357, 30)
        subset = OrderedSubset(s357, [d for d in support.members if d <= 30])
        assert tuple(subset.u_set()) == (10, 12, 14)

    def test_minimals_preserved(self, five_gen, s357):
        for S in (five_gen, s357):
            betti = OrderedSubset(S, betti_elements(S))
            assert betti.minimals() == betti.u_set().minimals()

    def test_totally_ordered_iff_u_is(self):
        for S in enumerate_by_genus(7):
            betti = OrderedSubset(S, betti_elements(S))
            assert betti.is_totally_ordered() == betti.u_set().is_totally_ordered()


class TestHasse:
    def test_glued_covers(self, glued):
        diagram = OrderedSubset(glued, betti_elements(glued)).hasse()
        assert diagram.covers == ((24, 36), (24, 50))
        assert diagram.is_forest

    def test_five_gen_covers(self, five_gen):
        diagram = OrderedSubset(five_gen, betti_elements(five_gen)).hasse()
        assert diagram.covers == ((30, 57), (32, 48), (32, 57))
        assert not diagram.is_forest

    def test_singleton(self):
        S = NumericalSemigroup(3, 5)
        diagram = OrderedSubset(S, betti_elements(S)).hasse()
        assert diagram.covers == ()
        assert diagram.is_forest

    def test_forest_iff_all_downsets_chains(self):
        for S in enumerate_by_genus(7):
            betti = OrderedSubset(S, betti_elements(S))
            assert betti.hasse().is_forest == (
                tuple(betti.u_set()) == tuple(betti)
            )

    def test_dot(self, glued):
        dot = OrderedSubset(glued, betti_elements(glued)).hasse().to_dot()
        assert '"24" -> "36";' in dot
        assert '"24" -> "50";' in dot
        assert dot.startswith("digraph hasse {")


class TestExponentSupport:
    def test_prefix_of_unbounded_support(self, s357):
        support = exponent_support(s357, 30)
        assert support.members[:5] == (10, 12, 14, 17, 19)
        assert not support.exact

    def test_exact_for_finite_support(self, glued):
        support = exponent_support(glued)
        assert support.members == (24, 36, 50)
        assert support.exact

    def test_trivial(self, naturals):
        support = exponent_support(naturals)
        assert support.members == () and support.exact

    def test_bound_too_small(self, s357):
        with pytest.raises(BoundTooSmallError):
            exponent_support(s357, 5)

    def test_members_in_semigroup_with_two_factorizations(self, five_gen):
        from nsg import denumerant

        support = exponent_support(five_gen)
        for d in support.members:
            if d <= support.bound:
                assert d in five_gen
                assert denumerant(five_gen, d) >= 2


class TestResidualCoefficients:
    def test_counted_example(self, s456):
        series = residual_coefficients(s456, (10,), 25)
        assert series.coefficients[20] == 3

    def test_empty_chain_is_indicator(self, s456):
        series = residual_coefficients(s456, (), 30)
        assert list(series.coefficients) == s456.hilbert_prefix(30)

    def test_unsorted_chain_raises(self, s469):
        with pytest.raises(ChainNotSortedError):
            residual_coefficients(s469, (18, 12), 40)

    def test_non_u_element_raises(self, five_gen):
        with pytest.raises(ValueError):
            residual_coefficients(five_gen, (57,), 60)

    def test_restricted_count_bridge(self, s469, five_gen):
        # coefficients equal restricted-factorization counts whenever the
        # chain is a full down-set and a single minimal element sits below s
        cases = [(s469, (12, 18)), (five_gen, (32, 48))]
        for S, chain in cases:
            catalog = betti_elements(S)
            minimals = OrderedSubset(S, catalog).minimals()
            bound = S.frobenius + 2 * S.max_generator
            series = residual_coefficients(S, chain, bound)
            b1 = chain[0]
            for s in range(bound + 1):
                if s not in S:
                    continue
                below = [m for m in minimals if leq(S, m, s)]
                if below != [b1]:
                    continue
                assert series.coefficients[s] == len(
                    restricted_factorizations(S, s, set(chain))
                ), (S, s)


class TestClassify:
    def test_469(self, s469):
        flags = classify(s469)
        assert flags.betti_sorted
        assert not flags.betti_divisible
        assert not flags.unique_betti
        assert flags.betti_forest and flags.e_forest

    def test_23(self):
        flags = classify(NumericalSemigroup(2, 3))
        assert flags.betti_sorted and flags.betti_divisible and flags.unique_betti

    def test_five_gen(self, five_gen):
        flags = classify(five_gen)
        assert not flags.betti_sorted
        assert not flags.betti_divisible
        assert not flags.unique_betti
        assert not flags.betti_forest
        assert flags.e_forest is False

    def test_undecided_prefix_reports_none(self, s357):
        # truncated support with no violation: forest-ness stays undecided
        assert classify(s357).e_forest is None

    def test_divisible_example(self):
        flags = classify(NumericalSemigroup(4, 6, 9))
        assert not flags.betti_divisible
        flags = classify(NumericalSemigroup(2, 3))
        assert flags.betti_divisible

    def test_sorted_iff_support_sorted_on_finite_support(self):
        for S in enumerate_by_genus(7):
            flags = classify(S)  # internal asserts cross-check the claim
            support = exponent_support(S)
            if support.exact:
                subset = OrderedSubset(S, support.members)
                assert flags.betti_sorted == subset.is_totally_ordered()


class TestVerifyTheorems:
    def test_examples_pass(self, s357, five_gen, naturals):
        for S in (s357, five_gen, naturals):
            report = verify_theorems(S)
            assert report.all_pass, report

    def test_exponent_values_check(self, s357):
        report = verify_theorems(s357)
        sequence = exponent_sequence(s357)
        by_id = {c.check_id: c for c in report.checks}
        assert by_id["exponent-values-at-generators-and-gaps"].passed
        assert sequence[10] == sequence[12] == sequence[14] == 1

    def test_bound_too_small(self, s357):
        with pytest.raises(BoundTooSmallError):
            verify_theorems(s357, 3)

    def test_json_shape(self, s469):
        data = verify_theorems(s469).to_json_dict()
        assert set(data) == {"generators", "bound", "checks"}
        for check in data["checks"]:
            assert set(check) == {"check_id", "statement_ref", "pass", "witness"}

    def test_small_family_sweep(self):
        for S in enumerate_by_genus(8):
            assert verify_theorems(S).all_pass, S
