from itertools import permutations

import pytest
from hypothesis import given, settings

from indicated_coloring.families import complete, cycle, path, paw, star
from indicated_coloring.graphs import Graph, GraphError, lexicographic_product
from indicated_coloring.parameters import (
    ParamReport,
    SizeBoundExceeded,
    back_degrees,
    chromatic_number,
    clique_number,
    coloring_number,
    degeneracy_order,
    degree_stats,
    param_report,
)

from strategies_hyp import graphs


def test_degree_stats_examples():
    assert degree_stats(path(3)) == (1, 2)
    assert degree_stats(complete(4)) == (3, 3)
    assert degree_stats(paw()) == (1, 3)


def test_degree_stats_empty():
    with pytest.raises(GraphError):
        degree_stats(Graph(0))


class TestDegeneracyOrder:
    def test_k3_back_degrees(self):
        order = degeneracy_order(complete(3))
        assert sorted(order) == [0, 1, 2]
        assert max(back_degrees(complete(3), order)) <= 2

    def test_star_ends_with_leaf(self):
        order = degeneracy_order(star(4))
        assert order[-1] != 0  # a leaf is peeled first, so it closes the order
        assert max(back_degrees(star(4), order)) == 1

    def test_c5_back_degree(self):
        order = degeneracy_order(cycle(5))
        assert max(back_degrees(cycle(5), order)) == 2

    def test_empty(self):
        with pytest.raises(GraphError):
            degeneracy_order(Graph(0))


class TestColoringNumber:
    def test_examples(self):
        assert coloring_number(path(4)) == 2
        assert coloring_number(complete(5)) == 5
        assert coloring_number(lexicographic_product(cycle(5), complete(2))) == 6

    def test_matches_ordering_form_on_small_graphs(self):
        # col(G) = 1 + min over orderings of the max back degree
        from indicated_coloring.corpus import connected_graphs

        for n in range(1, 6):
            for g in connected_graphs(n):
                best = min(
                    max(back_degrees(g, list(p)))
                    for p in permutations(range(g.n))
                )
                assert coloring_number(g) == 1 + best

    def test_peel_order_achieves_col(self):
        for g in [path(4), cycle(5), paw(), complete(4)]:
            order = degeneracy_order(g)
            assert 1 + max(back_degrees(g, order)) == coloring_number(g)


class TestCliqueNumber:
    def test_examples(self):
        assert clique_number(cycle(5)) == 2
        assert clique_number(paw()) == 3
        assert clique_number(lexicographic_product(cycle(5), complete(2))) == 4

    def test_bound(self):
        with pytest.raises(SizeBoundExceeded):
            clique_number(Graph(5), bound=4)


class TestChromaticNumber:
    def test_examples(self):
        assert chromatic_number(cycle(5)) == 3
        assert chromatic_number(lexicographic_product(path(3), complete(2))) == 4
        assert chromatic_number(lexicographic_product(cycle(5), complete(2))) == 5

    def test_bound(self):
        with pytest.raises(SizeBoundExceeded):
            chromatic_number(Graph(5), bound=4)


@given(graphs(max_n=8))
@settings(max_examples=60, deadline=None)
def test_parameter_chain(g):
    r = param_report(g)  # constructor asserts omega <= chi <= col <= Delta+1
    assert isinstance(r, ParamReport)


@given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=3))
@settings(max_examples=40, deadline=None)
def test_geller_stahl_identity(g, h):
    # chi(G[H]) = chi(G[K_l]) when chi(H) = l
    ell = chromatic_number(h)
    lhs = chromatic_number(lexicographic_product(g, h))
    rhs = chromatic_number(lexicographic_product(g, complete(ell)))
    assert lhs == rhs
