from math import comb

import pytest

from nsg import (
    NotAMemberError,
    NotIsolatedBettiError,
    NumericalSemigroup,
    betti_elements,
    betti_search_bound,
    denumerant,
    denumerant_series,
    enumerate_by_genus,
    factorization_graph,
    factorizations,
    isolated_factorizations,
    minimal_presentation,
    presentation_size,
    restricted_factorizations,
)
from nsg import intpoly
from nsg.bettiposet import OrderedSubset


def value_of(S, vector):
    return sum(e * g for e, g in zip(vector, S.generators))


class TestFactorizations:
    def test_examples(self, s456):
        assert factorizations(s456, 10) == [(1, 0, 1), (0, 2, 0)]
        assert factorizations(s456, 12) == [(3, 0, 0), (0, 0, 2)]
        assert factorizations(NumericalSemigroup(2, 3), 1) == []

    def test_zero_and_generators(self, s456):
        assert factorizations(s456, 0) == [(0, 0, 0)]
        assert factorizations(s456, 5) == [(0, 1, 0)]
        assert factorizations(s456, -2) == []

    def test_descending_order_and_values(self, five_gen):
        for s in (30, 48, 57, 70):
            vectors = factorizations(five_gen, s)
            assert vectors == sorted(vectors, reverse=True)
            assert all(value_of(five_gen, v) == s for v in vectors)

    def test_denumerant(self, s456, s357):
        assert denumerant(s456, 10) == 2
        assert denumerant(s357, 6) == 1
        assert denumerant(s357, 0) == 1
        assert denumerant(s357, 1) == 0

    def test_series_matches_enumeration(self, five_gen):
        bound = 60
        series = denumerant_series(five_gen, bound)
        for s in range(bound + 1):
            assert series[s] == len(factorizations(five_gen, s))

    def test_series_matches_product_expansion(self, s469):
        bound = betti_search_bound(s469)
        series = denumerant_series(s469, bound)
        product = [1] + [0] * bound
        for g in s469.generators:
            product = intpoly.mul_one_minus_xk_pow(product, g, -1, bound)
        assert product == series


class TestGraph:
    def test_disconnected_example(self, s469):
        graph = factorization_graph(s469, 18)
        assert graph.vertices == ((3, 1, 0), (0, 3, 0), (0, 0, 2))
        assert graph.r_classes == ((0, 1), (2,))
        assert graph.n_classes == 2

    def test_two_singletons(self, s357):
        graph = factorization_graph(s357, 10)
        assert graph.n_classes == 2
        assert all(len(c) == 1 for c in graph.r_classes)

    def test_generator_is_connected(self, s357):
        for g in s357.generators:
            graph = factorization_graph(s357, g)
            assert graph.n_classes == 1
            assert graph.vertices == (tuple(1 if x == g else 0 for x in s357.generators),)

    def test_non_member_raises(self, s357):
        with pytest.raises(NotAMemberError):
            factorization_graph(s357, 4)

    def test_dot_output(self, s469):
        dot = factorization_graph(s469, 18).to_dot()
        assert '"3,1,0" -- "0,3,0"' in dot
        assert dot.startswith("graph factorizations_18 {")


class TestBettiCatalog:
    def test_357(self, s357):
        catalog = betti_elements(s357)
        assert sorted(catalog) == [10, 12, 14]
        assert all(data.nc == 2 and data.isolated_count == 2 for data in catalog.values())

    def test_five_generators(self, five_gen):
        assert sorted(betti_elements(five_gen)) == [30, 32, 34, 35, 36, 48, 57]

    def test_two_generators(self):
        for a, b in ((2, 3), (3, 5), (4, 9)):
            assert sorted(betti_elements(NumericalSemigroup(a, b))) == [a * b]

    def test_trivial_has_none(self, naturals):
        assert betti_elements(naturals) == {}

    def test_keys_within_window(self, five_gen):
        catalog = betti_elements(five_gen)
        for b in catalog:
            assert 2 * five_gen.multiplicity <= b <= betti_search_bound(five_gen)

    def test_connected_above_bound(self, s357, s456):
        # the search bound is conservative: a window above it stays connected
        for S in (s357, s456):
            bound = betti_search_bound(S)
            for s in range(bound + 1, bound + S.max_generator + 1):
                assert factorization_graph(S, s).n_classes == 1


class TestIsolated:
    def test_all_isolated_at_minimal(self, s456):
        assert isolated_factorizations(s456, 10) == factorizations(s456, 10)

    def test_57_has_isolated(self, five_gen):
        assert isolated_factorizations(five_gen, 57) == [(0, 0, 0, 0, 3)]

    def test_generator_trivially_isolated(self, s357):
        assert isolated_factorizations(s357, 3) == [(1, 0, 0)]

    def test_minimality_characterization(self, five_gen):
        # a factorization is non-isolated iff it strictly dominates an
        # isolated factorization of some Betti element
        catalog = betti_elements(five_gen)
        pool = [
            x
            for b in catalog
            for x in isolated_factorizations(five_gen, b)
        ]
        for s in range(70):
            if s not in five_gen:
                continue
            graph = factorization_graph(five_gen, s)
            isolated = set(graph.isolated())
            for z in graph.vertices:
                dominates = any(
                    all(a >= b for a, b in zip(z, x)) and z != x for x in pool
                )
                assert (z not in isolated) == dominates

    def test_betti_minimal_equivalence(self, five_gen, s456):
        # minimal Betti elements = elements with >= 2 factorizations, all isolated
        for S in (five_gen, s456):
            catalog = betti_elements(S)
            minimals = set(OrderedSubset(S, catalog).minimals())
            for b, data in catalog.items():
                all_isolated = data.isolated_count == data.nc == len(data.factorizations)
                assert (b in minimals) == all_isolated

    def test_chain_nonminimal_has_one_big_class(self, five_gen, s469):
        # elements of the chain-downset part that are not minimal have exactly
        # one non-singleton class
        for S in (five_gen, s469):
            catalog = betti_elements(S)
            subset = OrderedSubset(S, catalog)
            minimals = set(subset.minimals())
            for b in subset.u_set():
                if b in minimals:
                    continue
                graph = factorization_graph(S, b)
                assert sum(1 for c in graph.r_classes if len(c) > 1) == 1
                assert graph.n_classes - 1 == len(graph.isolated())

    def test_disjoint_supports_down_the_order(self, five_gen):
        catalog = betti_elements(five_gen)
        for b1 in catalog:
            for b2 in catalog:
                if b1 == b2 or (b2 - b1) not in five_gen:
                    continue
                for x in factorizations(five_gen, b1):
                    for y in isolated_factorizations(five_gen, b2):
                        assert not any(p and q for p, q in zip(x, y))


class TestMinimalPresentation:
    def test_sizes(self, s357, s469):
        assert len(minimal_presentation(s357)) == 3
        assert len(minimal_presentation(s469)) == 2

    def test_two_generator_pair(self):
        S = NumericalSemigroup(3, 5)
        presentation = minimal_presentation(S)
        assert presentation.by_element == {15: (((5, 0), (0, 3)),)}

    def test_pairs_factor_the_same_element(self, five_gen):
        presentation = minimal_presentation(five_gen)
        for b, chains in presentation.by_element.items():
            for x, y in chains:
                assert value_of(five_gen, x) == value_of(five_gen, y) == b

    def test_size_formula(self, five_gen):
        catalog = betti_elements(five_gen)
        assert len(minimal_presentation(five_gen)) == sum(
            data.nc - 1 for data in catalog.values()
        )

    def test_presentation_size_early_exit(self, five_gen):
        full = presentation_size(five_gen)
        assert presentation_size(five_gen, stop_above=full) == full
        assert presentation_size(five_gen, stop_above=2) > 2


class TestRestrictedFactorizations:
    def test_everything_example(self, s456):
        assert restricted_factorizations(s456, 72, {10, 12}) == factorizations(s456, 72)

    def test_counted_example(self, s456):
        result = restricted_factorizations(s456, 20, {10})
        assert result == [(2, 0, 2), (1, 2, 1), (0, 4, 0)]
        assert len(result) == comb(3, 2)

    def test_empty_restriction(self, s456, s357):
        assert restricted_factorizations(s456, 10, set()) == []
        assert restricted_factorizations(s357, 6, set()) == factorizations(s357, 6)

    def test_bad_restriction_raises(self, s456):
        with pytest.raises(NotIsolatedBettiError):
            restricted_factorizations(s456, 20, {9})  # 9 is not a Betti element
        with pytest.raises(NotAMemberError):
            restricted_factorizations(s456, 3, {10})

    def test_binomial_count_at_betti_minimal(self, s456, s357):
        for S, b in ((s456, 10), (s456, 12), (s357, 10)):
            data = betti_elements(S)[b]
            apery = set(S.apery_set(b))
            counts = denumerant_series(S, betti_search_bound(S))
            for s in range(betti_search_bound(S) + 1):
                if s not in S:
                    continue
                q, w = 0, s
                while w not in apery:
                    w -= b
                    q += 1
                expected = comb(data.isolated_count + q - 1, q) if counts[w] == 1 else 0
                assert len(restricted_factorizations(S, s, {b})) == expected

    def test_union_recurrence_inequality(self, s456):
        # adding one Betti element to the restriction obeys the convolution bound
        i12 = betti_elements(s456)[12].isolated_count
        for s in range(0, 50):
            if s not in s456:
                continue
            lhs = len(restricted_factorizations(s456, s, {10, 12}))
            rhs = 0
            j = 0
            while s - j * 12 >= 0:
                if (s - j * 12) in s456:
                    rhs += len(restricted_factorizations(s456, s - j * 12, {10})) * comb(
                        i12 + j - 1, j
                    )
                j += 1
            assert lhs <= rhs

    def test_chain_recurrence_equality(self, five_gen):
        # restriction along a chain down-set: the convolution bound is exact
        u = 48
        chain = {32, 48}
        i_u = betti_elements(five_gen)[u].isolated_count
        for s in range(0, 75):
            if s not in five_gen:
                continue
            lhs = len(restricted_factorizations(five_gen, s, chain))
            rhs = 0
            j = 0
            while s - j * u >= 0:
                if (s - j * u) in five_gen:
                    rhs += len(
                        restricted_factorizations(five_gen, s - j * u, {32})
                    ) * comb(i_u + j - 1, j)
                j += 1
            assert lhs == rhs


class TestUniqueFactorizationIdentity:
    def test_apery_intersection(self, s357, s456, five_gen):
        # elements with a unique factorization = intersection of the Apery
        # sets over Betti elements = same over minimal Betti elements only
        for S in (s357, s456, five_gen):
            catalog = betti_elements(S)
            top = S.frobenius + max(catalog)
            counts = denumerant_series(S, top)
            unique = {m for m in range(top + 1) if counts[m] == 1}
            over_all = set.intersection(*(set(S.apery_set(b)) for b in catalog))
            minimals = OrderedSubset(S, catalog).minimals()
            over_minimals = set.intersection(*(set(S.apery_set(b)) for b in minimals))
            assert unique == over_all == over_minimals


class TestSmallFamilySweep:
    def test_graph_partition_invariants(self):
        for S in enumerate_by_genus(6):
            catalog = betti_elements(S)
            for b, data in catalog.items():
                graph = factorization_graph(S, b)
                indices = sorted(i for cls in graph.r_classes for i in cls)
                assert indices == list(range(len(graph.vertices)))
                assert data.nc >= 2
