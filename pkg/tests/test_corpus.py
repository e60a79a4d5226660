from indicated_coloring.corpus import (
    EXPECTED_CONNECTED,
    EXPECTED_COUNTS,
    all_graphs,
    connected_graphs,
    graphs_upto,
)


def test_counts_match_known_sequences():
    for n in range(1, 7):
        assert len(all_graphs(n)) == EXPECTED_COUNTS[n]
        assert len(connected_graphs(n)) == EXPECTED_CONNECTED[n]


def test_graphs_upto():
    assert len(graphs_upto(4)) == 1 + 1 + 2 + 6
    assert len(graphs_upto(3, connected=False)) == 1 + 2 + 4


def test_representatives_are_distinct():
    from indicated_coloring.isomorphism import canonical_form

    seen = set()
    for g in graphs_upto(5, connected=False):
        key = canonical_form(g)
        assert key not in seen
        seen.add(key)
