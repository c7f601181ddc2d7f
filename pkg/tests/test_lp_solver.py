from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_weighted
from simplegames.constructions import example2_game, fano, gn2_game, projective_game, un_security_council
from simplegames.enumeration import enumerate_games
from simplegames.game_core import SimpleGame
from simplegames.lp_solver import (
    ROUGH,
    WEIGHTED,
    FarkasWitness,
    FlavorMismatchError,
    Representation,
    check_rough,
    check_weighted,
    elimination_witness,
    format_representation,
    format_witness,
    normalize_witness,
    parse_representation,
    parse_witness,
    repair_nonnegative,
    solve_homogeneous_system,
    solve_strict_system,
    verify_representation,
    witness_certificate,
)
from simplegames.trade_algebra import ideal_members, verify_certificate
from strategies import games

SMALL_GAMES = [g for n in range(1, 5) for g in enumerate_games(n)]


class TestFixtures:
    def test_un_council(self):
        g = un_security_council()
        rep = check_weighted(g)
        assert isinstance(rep, Representation) and rep.flavor == WEIGHTED
        assert verify_representation(g, rep)
        assert verify_representation(g, Representation([7] * 5 + [1] * 10, 39))

    def test_dictator(self):
        rep = check_weighted(SimpleGame.from_coalitions(2, [[1]]))
        assert rep.weights == (1, 0) and rep.quota == 1

    def test_example2(self):
        g = example2_game()
        ones = [1] * 6
        assert verify_representation(g, Representation(ones, 3, ROUGH))
        assert not verify_representation(g, Representation(ones, 3, WEIGHTED))
        wit = check_weighted(g)
        assert isinstance(wit, FarkasWitness) and wit.kind == WEIGHTED
        assert verify_certificate(g, witness_certificate(g, wit))
        assert verify_representation(g, check_rough(g))

    def test_fano_witness_has_seven_pairs(self):
        g = fano()
        wit = check_rough(g)
        assert isinstance(wit, FarkasWitness)
        assert wit.u == (1,) * 7 and wit.size == 7
        assert all(g.is_winning(x) and not g.is_winning(y) for x, y, _ in wit.terms)
        cert = normalize_witness(g, wit)
        assert len(cert) == 8 and cert.potent and verify_certificate(g, cert)

    def test_fano_zero_weights_rejected(self):
        assert not verify_representation(fano(), Representation([0] * 7, 1, ROUGH))
        assert not verify_representation(fano(), Representation([0] * 7, 0, ROUGH))

    def test_gn2_normalized_witness(self):
        g = gn2_game(5)
        cert = normalize_witness(g, check_rough(g))
        assert cert.potent and verify_certificate(g, cert)
        assert len(cert) == 25  # LP mass 12 with half-integral multipliers, doubled

    def test_projective_3_not_rough(self):
        g = projective_game(3)
        wit = check_rough(g)
        assert isinstance(wit, FarkasWitness)
        assert verify_certificate(g, normalize_witness(g, wit))

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            verify_representation(fano(), Representation([-1] + [1] * 6, 1))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            verify_representation(fano(), Representation([1] * 6, 1))


@pytest.mark.parametrize("g", SMALL_GAMES, ids=str)
def test_exclusivity_small(g):
    w = check_weighted(g)
    r = check_rough(g)
    if isinstance(w, Representation):
        assert verify_representation(g, w)
        assert isinstance(r, Representation)
    else:
        assert w.kind == WEIGHTED and verify_certificate(g, witness_certificate(g, w))
    if isinstance(r, Representation):
        assert verify_representation(g, r)
    else:
        assert verify_certificate(g, normalize_witness(g, r))


@pytest.mark.parametrize("g", [g for g in SMALL_GAMES if g.n <= 3] + SMALL_GAMES[::12], ids=str)
def test_weightedness_matches_small_integer_search(g):
    assert isinstance(check_weighted(g), Representation) == brute_weighted(g)


@given(games(max_n=5), st.fractions(min_value=Fraction(1, 7), max_value=7))
@settings(max_examples=60)
def test_scaling(g, factor):
    for res in (check_weighted(g), check_rough(g)):
        if isinstance(res, Representation):
            assert verify_representation(g, res.scaled(factor))


@given(games(max_n=5))
@settings(max_examples=60)
def test_witness_integrality(g):
    for res in (check_weighted(g), check_rough(g)):
        if isinstance(res, FarkasWitness):
            assert all(isinstance(r, int) and r > 0 for *_, r in res.terms)
            total = [sum(r * v[i] for v, r in res.vectors) + res.u[i] for i in range(g.n)]
            assert not any(total)


def _explicit_rows(g, mode):
    return [tuple(v) for v in ideal_members(g, mode)]


@pytest.mark.parametrize("g", SMALL_GAMES[::3], ids=str)
def test_restriction_soundness(g):
    # all of I(G) with free weights versus minimal winning x maximal losing with x >= 0
    full = _explicit_rows(g, "all")
    small = _explicit_rows(g, "min_win_cross_max_losing")
    assert solve_strict_system(full)[0] == solve_strict_system(small)[0]
    assert solve_homogeneous_system(full)[0] == solve_homogeneous_system(small)[0]
    assert (solve_strict_system(small)[0] == "solution") == isinstance(check_weighted(g), Representation)
    assert (solve_homogeneous_system(small)[0] == "solution") == isinstance(check_rough(g), Representation)


@given(st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3), min_size=1, max_size=5))
@settings(max_examples=150)
def test_elimination_agrees_with_simplex(rows):
    elim = elimination_witness(rows)
    status, data = solve_homogeneous_system(rows)
    assert (elim is None) == (status == "solution")
    if elim is not None:
        r, u = elim
        assert all(x >= 0 for x in r) and all(x >= 1 for x in u)
        for j in range(3):
            assert sum(ri * row[j] for ri, row in zip(r, rows)) + u[j] == 0
    else:
        x = data
        assert any(x) and all(v >= 0 for v in x)
        assert all(sum(a * b for a, b in zip(row, x)) >= 0 for row in rows)


@given(st.lists(st.lists(st.integers(-2, 2), min_size=3, max_size=3), min_size=1, max_size=6))
@settings(max_examples=100)
def test_strict_system_certificates(rows):
    status, data = solve_strict_system(rows)
    if status == "solution":
        assert all(v >= 0 for v in data)
        assert all(sum(a * b for a, b in zip(row, data)) >= 1 for row in rows)
    else:
        assert any(data) and all(r >= 0 for r in data)
        assert all(sum(r * row[j] for r, row in zip(data, rows)) <= 0 for j in range(3))


def test_nonnegativity_repair():
    # free-sign solution for the game won by {1} or {2,3}: player 4 irrelevant
    g = SimpleGame.from_coalitions(4, [[1], [2, 3]])
    raw = [2, 1, 1, -5]
    rep = repair_nonnegative(raw, 2)
    assert rep.weights == (2, 1, 1, 0)
    assert verify_representation(g, rep)


class TestFormats:
    def test_inline(self):
        rep = parse_representation("[3; 1 1 1 1 1 1] rough")
        assert rep == Representation([1] * 6, 3, ROUGH)
        assert parse_representation("[39; 7,7,7,7,7,1,1,1,1,1,1,1,1,1,1]").flavor == WEIGHTED

    def test_keyed_round_trip(self):
        rep = Representation([Fraction(1, 2), 3, 0], Fraction(7, 3), ROUGH)
        assert parse_representation(format_representation(rep)) == rep

    def test_flavor_mismatch(self):
        with pytest.raises(FlavorMismatchError):
            parse_representation("[3; 1 1] rough", flavor=WEIGHTED)

    def test_witness_round_trip(self):
        for g in (fano(), gn2_game(5), example2_game()):
            for res in (check_weighted(g), check_rough(g)):
                if isinstance(res, FarkasWitness):
                    assert parse_witness(format_witness(res)) == res
