import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indicated_coloring.corpus import connected_graphs
from indicated_coloring.families import complete, cycle, path, star
from indicated_coloring.graphs import Graph, complete_expansion, lexicographic_product
from indicated_coloring.parameters import (
    SizeBoundExceeded,
    chromatic_number,
    coloring_number,
)
from indicated_coloring.solver import (
    GameState,
    IllegalMoveError,
    Limits,
    Outcome,
    Policy,
    PolicyError,
    Searcher,
    Transcript,
    ann_wins,
    blocked_vertices,
    canonical_key,
    extract_policy,
    indicated_chromatic_number,
    play_game,
    state_class_masks,
)
from indicated_coloring.strategies import all_ben_lines, optimal_ben

from oracle import brute_force_ann_wins


def state_with(graph, k, assignments):
    s = GameState.new(graph, k)
    for v, c in assignments:
        s = s.apply(v, c)
    return s


class TestGameState:
    def test_apply_validates(self):
        s = GameState.new(path(3), 2)
        s = s.apply(0, 1)
        with pytest.raises(ValueError):
            s.apply(0, 2)  # already colored
        with pytest.raises(ValueError):
            s.apply(1, 1)  # improper
        with pytest.raises(ValueError):
            s.apply(1, 3)  # outside palette

    def test_history_replays_to_coloring(self):
        s = state_with(path(3), 2, [(0, 1), (2, 2)])
        replay = GameState.new(path(3), 2)
        for v, c in s.history:
            replay = replay.apply(v, c)
        assert replay.colors == s.colors


class TestBlockedVertices:
    def test_k3_two_colored_no_block(self):
        s = state_with(complete(3), 3, [(0, 1), (1, 2)])
        assert blocked_vertices(s) == frozenset()

    def test_p3_center_blocked(self):
        s = state_with(path(3), 2, [(0, 1), (2, 2)])
        assert blocked_vertices(s) == frozenset({1})

    def test_large_palette_never_blocks(self):
        g = star(3)
        k = 5  # k > Delta: neighborhoods cannot carry all colors
        s = state_with(g, k, [(1, 1), (2, 2), (3, 3)])
        assert blocked_vertices(s) == frozenset()


class TestCanonicalKey:
    def test_color_swap_collides(self):
        g = path(3)
        a = state_with(g, 2, [(0, 1), (2, 2)])
        b = state_with(g, 2, [(0, 2), (2, 1)])
        assert canonical_key(a) == canonical_key(b)

    def test_different_support_differs(self):
        g = path(2)
        a = state_with(g, 2, [(0, 1)])
        b = state_with(g, 2, [(1, 1)])
        assert canonical_key(a) != canonical_key(b)

    def test_k_is_part_of_key(self):
        g = path(2)
        assert canonical_key(GameState.new(g, 2)) != canonical_key(GameState.new(g, 3))


class TestAnnWins:
    def test_examples(self):
        assert ann_wins(complete(3), 3).outcome is Outcome.ANN_WINS
        assert ann_wins(cycle(5), 2).outcome is Outcome.BEN_WINS
        assert ann_wins(cycle(5), 3).outcome is Outcome.ANN_WINS

    def test_product_block_pattern(self):
        g = lexicographic_product(path(3), complete(2))
        assert ann_wins(g, 3).outcome is Outcome.BEN_WINS
        assert ann_wins(g, 4).outcome is Outcome.ANN_WINS

    def test_resource_limit_outcome(self):
        g = lexicographic_product(cycle(5), complete(2))
        v = ann_wins(g, 5, Limits(max_states=10, max_millis=60_000))
        assert v.outcome is Outcome.RESOURCE_LIMIT

    def test_vertex_bound_is_an_error(self):
        with pytest.raises(SizeBoundExceeded):
            ann_wins(Graph(13), 1, Limits(max_vertices=12))

    def test_determinism(self):
        g = lexicographic_product(path(3), complete(2))
        a = ann_wins(g, 4)
        b = ann_wins(g, 4)
        assert a.outcome is b.outcome and a.states == b.states


def test_oracle_equivalence_small():
    # quick slice of the acceptance law: memoized solver == plain brute force
    for n in range(1, 6):
        for g in connected_graphs(n):
            for k in range(chromatic_number(g), coloring_number(g) + 1):
                want = brute_force_ann_wins(g, k)
                got = ann_wins(g, k).outcome
                assert got is (Outcome.ANN_WINS if want else Outcome.BEN_WINS)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_color_permutation_symmetry(data):
    # renaming colors in a reachable state never changes the game value
    graphs = [g for g in connected_graphs(4)] + [g for g in connected_graphs(5)]
    g = data.draw(st.sampled_from(graphs))
    k = data.draw(st.integers(2, 4))
    rng = random.Random(data.draw(st.integers(0, 10_000)))
    state = GameState.new(g, k)
    for _ in range(data.draw(st.integers(0, g.n))):
        moves = [(v, c) for v in state.uncolored()
                 for c in state.available_colors(v)]
        if not moves:
            break
        state = state.apply(*rng.choice(moves))
    perm = list(range(1, k + 1))
    rng.shuffle(perm)
    permuted = GameState(
        g, k,
        tuple(None if c is None else perm[c - 1] for c in state.colors))
    assert canonical_key(permuted) == canonical_key(state)
    s1 = Searcher(g, k)
    s2 = Searcher(g, k)
    assert s1.value(state_class_masks(state)) == s2.value(state_class_masks(permuted))


class TestIndicatedChromaticNumber:
    def test_p4(self):
        r = indicated_chromatic_number(path(4))
        assert r.chi_i == 2 and r.winning_set == frozenset({2}) and r.k_range == (2, 2)

    def test_c5(self):
        r = indicated_chromatic_number(cycle(5))
        assert r.chi_i == 3 and r.winning_set == frozenset({3})

    def test_expansion_with_explicit_kmax(self):
        g = complete_expansion(path(3), [2, 2, 2])
        r = indicated_chromatic_number(g, k_max=6)
        assert r.chi_i == 4 and r.winning_set == frozenset({4, 5, 6})
        assert r.is_interval()

    def test_chain_on_corpus(self):
        for g in connected_graphs(5):
            r = indicated_chromatic_number(g)
            chi, col = r.k_range
            assert r.chi_i is not None and chi <= r.chi_i <= col

    def test_unknowns_marked(self):
        g = lexicographic_product(cycle(5), complete(2))
        r = indicated_chromatic_number(g, limits=Limits(max_states=5))
        assert r.unknown and r.chi_i is None

    def test_winning_set_deterministic(self):
        g = complete_expansion(path(3), [2, 2, 2])
        a = indicated_chromatic_number(g, k_max=6)
        b = indicated_chromatic_number(g, k_max=6)
        assert a.winning_set == b.winning_set and a.chi_i == b.chi_i


class TestExtractPolicy:
    def test_k3_any_presentation_legal(self):
        pol = extract_policy(complete(3), 3)
        t = play_game(complete(3), 3, pol, optimal_ben(complete(3), 3))
        assert t.outcome is Outcome.ANN_WINS

    def test_c5_beats_every_ben_line(self):
        pol = extract_policy(cycle(5), 3)
        bad, lines = all_ben_lines(cycle(5), 3, pol)
        assert bad is None and lines > 0

    def test_p4_two_colors_all_lines(self):
        pol = extract_policy(path(4), 2)
        bad, _ = all_ben_lines(path(4), 2, pol)
        assert bad is None

    def test_fails_on_losing_position(self):
        with pytest.raises(PolicyError):
            extract_policy(cycle(5), 2)


class LeavesFirstAnn(Policy):
    side = "ann"
    name = "leaves-first"

    def choose(self, state, presented=None):
        for v in (0, 2, 1):
            if state.colors[v] is None:
                return v
        raise PolicyError("done")


class FixedColorsBen(Policy):
    side = "ben"
    name = "fixed"

    def __init__(self, colors):
        self.colors = list(colors)

    def choose(self, state, presented=None):
        return self.colors[len(state.history)]


class TestPlayGame:
    def test_k2_two_moves(self):
        g = path(2)
        t = play_game(g, 2, extract_policy(g, 2), optimal_ben(g, 2))
        assert t.outcome is Outcome.ANN_WINS and len(t.moves) == 2

    def test_p3_canonical_block(self):
        g = path(3)
        t = play_game(g, 2, LeavesFirstAnn(), FixedColorsBen([1, 2]))
        assert t.outcome is Outcome.BEN_WINS
        assert t.blocked_witness == 1  # the center
        assert len(t.moves) == 2

    def test_c5_policy_vs_optimal(self):
        g = cycle(5)
        t = play_game(g, 3, extract_policy(g, 3), optimal_ben(g, 3))
        assert t.outcome is Outcome.ANN_WINS

    def test_illegal_ben_move_names_side(self):
        g = path(3)
        with pytest.raises(IllegalMoveError) as err:
            play_game(g, 2, LeavesFirstAnn(), FixedColorsBen([1, 1, 1]))
        assert err.value.side == "ben"

    def test_illegal_ann_move_names_side(self):
        class BadAnn(Policy):
            side = "ann"
            name = "bad"

            def choose(self, state, presented=None):
                return 0  # re-presents vertex 0 forever

        g = path(3)
        with pytest.raises(IllegalMoveError) as err:
            play_game(g, 2, BadAnn(), optimal_ben(g, 2))
        assert err.value.side == "ann"

    def test_side_mismatch(self):
        g = path(3)
        with pytest.raises(ValueError):
            play_game(g, 2, optimal_ben(g, 2), optimal_ben(g, 2))


class TestTranscript:
    def test_json_round_trip(self):
        t = Transcript(2, ((0, 1), (2, 2)), Outcome.BEN_WINS, 1)
        assert t.to_json_dict() == {
            "k": 2, "moves": [{"v": 0, "c": 1}, {"v": 2, "c": 2}],
            "outcome": "ben", "blocked": 1}
        assert Transcript.from_json_dict(t.to_json_dict()) == t

    def test_ben_win_requires_witness(self):
        with pytest.raises(ValueError):
            Transcript(2, (), Outcome.BEN_WINS, None)

    def test_transcripts_replay_properly(self):
        # every transcript from play_game replays to a proper coloring and
        # any BenWins ending carries a verifiable blocked vertex
        for g in connected_graphs(4):
            for k in range(chromatic_number(g), coloring_number(g) + 1):
                try:
                    ann = extract_policy(g, k)
                except PolicyError:
                    ann = None
                if ann is None:
                    continue
                t = play_game(g, k, ann, optimal_ben(g, k))
                state = GameState.new(g, k)
                for v, c in t.moves:
                    state = state.apply(v, c)  # raises if improper
                if t.outcome is Outcome.BEN_WINS:
                    assert t.blocked_witness in blocked_vertices(state)
