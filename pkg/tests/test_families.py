import pytest

from indicated_coloring.families import (
    bull,
    claw,
    complete,
    complete_multipartite,
    cycle,
    dart,
    diamond,
    family_generator,
    kite,
    p2_p3_union_complement,
    p5_complement,
    path,
    paw,
    star,
)
from indicated_coloring.graphs import GraphError


def degrees(g):
    return tuple(sorted(g.degree(v) for v in range(g.n)))


def test_path():
    g = path(4)
    assert g.n == 4 and g.edge_count() == 3
    assert [g.degree(v) for v in range(4)] == [1, 2, 2, 1]


def test_cycle_requires_three():
    with pytest.raises(GraphError):
        cycle(2)


def test_paw():
    g = paw()
    assert g.n == 4 and g.edge_count() == 4
    assert degrees(g) == (1, 2, 2, 3)


def test_kite_dart_shapes():
    # both extend the diamond by one pendant; they differ by attachment point
    assert degrees(diamond()) == (2, 2, 3, 3)
    assert degrees(kite()) == (1, 2, 3, 3, 3)
    assert degrees(dart()) == (1, 2, 2, 3, 4)


def test_bull_and_claw():
    assert degrees(bull()) == (1, 1, 2, 3, 3)
    assert claw() == star(3)


def test_star_center_is_zero():
    g = star(4)
    assert g.degree(0) == 4
    assert all(g.degree(v) == 1 for v in range(1, 5))


def test_complement_families():
    assert degrees(p5_complement()) == (2, 2, 2, 3, 3)
    assert p2_p3_union_complement().edge_count() == 7


def test_complete_multipartite():
    g = complete_multipartite([2, 3])
    assert g.n == 5 and g.edge_count() == 6
    assert not g.has_edge(0, 1) and g.has_edge(0, 2)


def test_family_generator_tags():
    assert family_generator("P", [4]) == path(4)
    assert family_generator("C", [5]) == cycle(5)
    assert family_generator("K", [3]) == complete(3)
    assert family_generator("K", [1, 3]) == star(3)
    assert family_generator("paw") == paw()
    assert family_generator("p5bar") == p5_complement()


def test_family_generator_errors():
    with pytest.raises(GraphError):
        family_generator("Q", [3])
    with pytest.raises(GraphError):
        family_generator("C", [2])
    with pytest.raises(GraphError):
        family_generator("paw", [2])
