import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indicated_coloring.corpus import all_graphs
from indicated_coloring.families import complete, cycle, path, star
from indicated_coloring.graphs import (
    Graph,
    complement,
    complete_expansion,
    independent_expansion,
)
from indicated_coloring.isomorphism import canonical_form, canonical_graph, is_isomorphic
from indicated_coloring.parameters import SizeBoundExceeded

from strategies_hyp import graphs


def shuffled_copy(g, seed):
    rng = random.Random(seed)
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def test_c5_self_complementary():
    assert is_isomorphic(cycle(5), complement(cycle(5)))


def test_degree_sequence_mismatch():
    assert not is_isomorphic(path(4), star(3))


def test_complement_duality_example():
    lhs = complement(independent_expansion(path(3), [2, 1, 2]))
    rhs = complete_expansion(complement(path(3)), [2, 1, 2])
    assert is_isomorphic(lhs, rhs)


def test_same_degree_sequence_not_isomorphic():
    # C6 vs two triangles: both 2-regular on 6 vertices
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_isomorphic(cycle(6), two_triangles)
    assert canonical_form(cycle(6)) != canonical_form(two_triangles)


def test_bound():
    with pytest.raises(SizeBoundExceeded):
        is_isomorphic(Graph(13), Graph(13))
    assert is_isomorphic(Graph(13), Graph(13), bound=13)


@given(graphs(max_n=7), st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_relabeling_is_isomorphic(g, seed):
    h = shuffled_copy(g, seed)
    assert is_isomorphic(g, h)
    assert canonical_form(g) == canonical_form(h)
    assert canonical_graph(g) == canonical_graph(h)


@given(graphs(max_n=5), st.lists(st.integers(1, 2), min_size=5, max_size=5))
@settings(max_examples=40, deadline=None)
def test_complement_duality_random(g, sizes):
    sizes = sizes[: g.n]
    lhs = complement(independent_expansion(g, sizes))
    rhs = complete_expansion(complement(g), sizes)
    assert is_isomorphic(lhs, rhs)


def test_canonical_forms_separate_corpus():
    # canonical form is a complete isomorphism invariant on the enumeration
    for n in range(1, 6):
        forms = {canonical_form(g) for g in all_graphs(n)}
        assert len(forms) == len(all_graphs(n))
