import pytest
from hypothesis import given, settings, strategies as st

from simplegames.constructions import example_proper6_game, gn2_game, proper6_guard_game
from simplegames.enumeration import (
    NOT_ROUGHLY_WEIGHTED,
    CounterexampleError,
    antichain_games,
    bruteforce_tables,
    canonical_table,
    compute_f_of_n,
    compute_g_of_n,
    dual_table,
    enumerate_games,
    game_to_table,
    monotone_tables,
    self_dual_tables,
    self_dual_tables_by_pairs,
    sweep,
    verdict,
    verify_small_player_theorems,
)
from simplegames.game_core import SimpleGame, SizeCapError, classify, dual, find_special_players
from simplegames.lp_solver import Representation, check_rough

GAME_COUNTS = {1: 1, 2: 4, 3: 18, 4: 166, 5: 7579}
SELF_DUAL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 12, 5: 81, 6: 2646}


@pytest.mark.parametrize("n", range(1, 6))
def test_game_counts(n):
    assert sum(1 for _ in enumerate_games(n)) == GAME_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 5))
def test_three_enumerations_agree(n):
    tables = sorted(game_to_table(g) for g in enumerate_games(n))
    assert tables == bruteforce_tables(n)
    assert tables == sorted(game_to_table(g) for g in antichain_games(n))


def test_antichain_count_five():
    assert sum(1 for _ in antichain_games(5)) == GAME_COUNTS[5]


@pytest.mark.parametrize("n", range(1, 7))
def test_self_dual_counts(n):
    a = self_dual_tables(n)
    assert len(a) == SELF_DUAL_COUNTS[n]
    assert a == self_dual_tables_by_pairs(n)


def test_monotone_tables_dedekind():
    assert [len(monotone_tables(n)) for n in range(5)] == [2, 3, 6, 20, 168]


@pytest.mark.parametrize("n", range(1, 6))
def test_closed_under_duality(n):
    tables = {game_to_table(g) for g in enumerate_games(n)}
    assert all(dual_table(n, t) in tables for t in tables)
    flt = sorted(game_to_table(g) for g in enumerate_games(n, "proper"))
    assert sorted(dual_table(n, t) for t in flt) == sorted(game_to_table(g) for g in enumerate_games(n, "strong"))


def test_filters():
    assert sum(1 for _ in enumerate_games(5, "constant-sum")) == SELF_DUAL_COUNTS[5]
    both = list(enumerate_games(4, "proper,strong"))
    assert all(classify(g).proper or classify(g).strong for g in both)
    with pytest.raises(ValueError):
        list(enumerate_games(3, "bogus"))
    with pytest.raises(SizeCapError):
        next(enumerate_games(6))
    with pytest.raises(SizeCapError):
        next(enumerate_games(7, "constant_sum"))


def test_canonical_table_is_relabel_invariant():
    g = SimpleGame.from_coalitions(4, [[1, 2], [3]])
    assert canonical_table(g) == canonical_table(g.relabel([4, 3, 2, 1]))
    # 18 labeled three-player games fall into 8 isomorphism classes
    classes = {canonical_table(g) for g in enumerate_games(3)}
    assert len(classes) == 8


class TestSweeps:
    def test_n4(self):
        rep = sweep(4)
        assert (rep.weighted, rep.roughly_weighted_only, rep.not_roughly_weighted) == (148, 18, 0)

    @pytest.mark.slow
    def test_n5(self):
        rep = sweep(5)
        assert (rep.weighted, rep.roughly_weighted_only, rep.not_roughly_weighted) == (3285, 3734, 560)
        assert rep.total_games == GAME_COUNTS[5]
        assert rep.as_dict()["not_roughly_weighted"] == 560

    @pytest.mark.slow
    def test_small_player_theorems(self):
        reports = verify_small_player_theorems()
        assert all(r.not_roughly_weighted == 0 for r in reports[:6])
        assert [r.not_roughly_weighted for r in reports[6:]] == [1, 1, 1]

    def test_guards_are_tight(self):
        for g in (gn2_game(5), example_proper6_game(), proper6_guard_game()):
            assert verdict(g) == NOT_ROUGHLY_WEIGHTED
        assert classify(proper6_guard_game()).proper


def test_counterexample_error_is_assertion():
    assert issubclass(CounterexampleError, AssertionError)


# -- propositions checked over the whole small-game space -----------------------------

FIVE = list(enumerate_games(5))


def test_special_players_force_rough():
    for g in FIVE:
        sp = find_special_players(g)
        if sp.weak_dictators or sp.vetoers or sp.has_losing_n_minus_1:
            assert isinstance(check_rough(g), Representation)


def test_two_player_winning_proper_is_rough():
    for g in FIVE:
        if classify(g).proper and g.min_winning_size <= 2:
            assert isinstance(check_rough(g), Representation)


def test_strong_with_large_losing_is_rough():
    for g in FIVE:
        if classify(g).strong and g.max_losing_size >= g.n - 2:
            assert isinstance(check_rough(g), Representation)


@st.composite
def proper_six_with_pair(draw):
    # an intersecting family containing {1,2}; its upward closure is proper
    chosen = [0b11]
    for c in draw(st.lists(st.integers(1, 63), max_size=12)):
        if all(c & d for d in chosen):
            chosen.append(c)
    return SimpleGame.from_winning(6, chosen)


@given(proper_six_with_pair())
@settings(max_examples=150)
def test_two_player_winning_proper_six(g):
    assert classify(g).proper
    assert isinstance(check_rough(g), Representation)


@given(proper_six_with_pair())
@settings(max_examples=50)
def test_dual_statement_strong_six(g):
    d = dual(g)
    assert classify(d).strong and d.max_losing_size >= 4
    assert isinstance(check_rough(d), Representation)


# -- f(n) and g(n) -------------------------------------------------------------------

def test_f_of_n_small():
    assert compute_f_of_n(3) == (None, None)
    val, g = compute_f_of_n(4)
    assert val == 2 and verdict(g) != "weighted"


@pytest.mark.slow
def test_f_of_5():
    val, _ = compute_f_of_n(5)
    assert val == 2 and val >= (5 - 1) // 2


@pytest.mark.slow
def test_g_of_5():
    val, g = compute_g_of_n(5)
    assert val == 17 and val >= 2 * 5 + 3


def test_caps():
    with pytest.raises(SizeCapError):
        compute_f_of_n(6)
    with pytest.raises(SizeCapError):
        compute_g_of_n(6)
