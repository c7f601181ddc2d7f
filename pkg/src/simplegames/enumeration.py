"""Exhaustive sweeps over small games.

Games are enumerated as monotone truth tables: bit x of the integer ``t``
is set iff coalition x wins.  The empty table and the table with ∅ winning
are not simple games and are skipped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from simplegames.game_core import SimpleGame, SizeCapError, classify, format_game
from simplegames.lp_solver import Representation, check_rough, check_weighted, normalize_witness
from simplegames.trade_algebra import verify_certificate

FILTERS = ("proper", "strong", "constant_sum")
MAX_UNFILTERED = 5
MAX_CONSTANT_SUM = 6


class CounterexampleError(AssertionError):
    """A sweep found a game contradicting the theorem it was checking."""


# -- monotone truth tables --------------------------------------------------------------

def monotone_tables(n: int) -> list[int]:
    """All monotone Boolean functions of n variables (constants included), sorted."""
    if n == 0:
        return [0, 1]
    lower = monotone_tables(n - 1)
    half = 1 << (n - 1)
    return sorted(f0 | (f1 << half) for f0 in lower for f1 in lower if f0 & ~f1 == 0)


def table_to_game(n: int, t: int) -> SimpleGame:
    win = np.array([(t >> x) & 1 for x in range(1 << n)], dtype=bool)
    return SimpleGame.from_table(n, win)


def game_to_table(game: SimpleGame) -> int:
    return sum(1 << int(x) for x in np.flatnonzero(game.winning_table))


def dual_table(n: int, t: int) -> int:
    """X wins in the dual iff its complement loses."""
    full = (1 << n) - 1
    return sum(1 << x for x in range(1 << n) if not (t >> (full ^ x)) & 1)


def _is_simple(t: int) -> bool:
    return t != 0 and not t & 1


# -- a second, independent strategy: antichains of nonempty coalitions ------------------

def antichain_games(n: int) -> Iterator[SimpleGame]:
    """Every nonempty antichain of nonempty coalitions, by depth-first inclusion."""
    subsets = list(range(1, 1 << n))
    chosen: list[int] = []

    def rec(i: int):
        if i == len(subsets):
            if chosen:
                yield SimpleGame(n, tuple(chosen))
            return
        s = subsets[i]
        if all(s & c != c and s & c != s for c in chosen):
            chosen.append(s)
            yield from rec(i + 1)
            chosen.pop()
        yield from rec(i + 1)

    yield from rec(0)


def bruteforce_tables(n: int) -> list[int]:
    """Monotone families by testing every family of coalitions (n <= 4)."""
    if n > 4:
        raise SizeCapError("brute-force family enumeration is limited to n <= 4")
    size = 1 << n
    covers = [(x, x | (1 << i)) for x in range(size) for i in range(n) if not x >> i & 1]
    return [t for t in range(1 << size)
            if _is_simple(t) and all(not (t >> a) & 1 or (t >> b) & 1 for a, b in covers)]


# -- constant-sum (self-dual) games -------------------------------------------------------

def self_dual_tables(n: int) -> list[int]:
    """Constant-sum games on n players from intersecting monotone g on n-1 players.

    f restricted to coalitions without player n is g, and with player n it is
    the dual of g; f is monotone iff g lies below its dual.
    """
    if n < 1:
        return []
    m = n - 1
    half = 1 << m
    out = []
    for g in monotone_tables(m):
        gd = dual_table(m, g) if m else (0 if g else 1)
        if g & ~gd == 0:
            out.append(g | (gd << half))
    return sorted(out)


def self_dual_tables_by_pairs(n: int) -> list[int]:
    """Same set by orienting each complementary pair, with monotonicity backtracking."""
    size = 1 << n
    full = size - 1
    reps = sorted((x for x in range(size) if x < full ^ x), key=lambda x: (bin(x).count("1"), x))
    state = [None] * size
    out = []

    def consistent(x: int) -> bool:
        v = state[x]
        if v:
            return all(state[y] is not False for y in range(size) if y & x == x)
        return all(state[y] is not True for y in range(size) if y & x == y)

    def rec(i: int):
        if i == len(reps):
            out.append(sum(1 << x for x in range(size) if state[x]))
            return
        x = reps[i]
        for win in (False, True):
            state[x], state[full ^ x] = win, not win
            if consistent(x) and consistent(full ^ x):
                rec(i + 1)
        state[x] = state[full ^ x] = None

    rec(0)
    return sorted(out)


# -- public enumeration ---------------------------------------------------------------

def _parse_filter(flt) -> frozenset:
    if flt is None:
        return frozenset()
    if isinstance(flt, str):
        flt = [f for f in flt.replace("-", "_").split(",") if f]
    names = frozenset(flt) - {"none"}
    bad = names - set(FILTERS)
    if bad:
        raise ValueError(f"unknown filter {sorted(bad)}")
    return names


def _matches(game: SimpleGame, names: frozenset) -> bool:
    if not names:
        return True
    cls = classify(game)
    have = {"proper": cls.proper, "strong": cls.strong, "constant_sum": cls.constant_sum}
    return any(have[f] for f in names)


def enumerate_games(n: int, flt=None) -> Iterator[SimpleGame]:
    """Every simple game on n labeled players having at least one filter class.

    An empty filter (or "none") keeps everything.
    """
    names = _parse_filter(flt)
    if n < 1:
        raise ValueError("n must be positive")
    if names == {"constant_sum"}:
        if n > MAX_CONSTANT_SUM:
            raise SizeCapError(f"constant-sum enumeration is limited to n <= {MAX_CONSTANT_SUM}")
        for t in self_dual_tables(n):
            yield table_to_game(n, t)
        return
    if n > MAX_UNFILTERED:
        raise SizeCapError(f"enumeration is limited to n <= {MAX_UNFILTERED}")
    for t in monotone_tables(n):
        if _is_simple(t):
            g = table_to_game(n, t)
            if _matches(g, names):
                yield g


def canonical_table(game: SimpleGame) -> int:
    """Least truth table over all relabelings (n <= 6)."""
    n = game.n
    if n > 6:
        raise SizeCapError("canonical form is limited to n <= 6")
    best = None
    for perm in itertools.permutations(range(1, n + 1)):
        t = game_to_table(game.relabel(perm))
        if best is None or t < best:
            best = t
    return best


# -- sweeps --------------------------------------------------------------------------

WEIGHTED = "weighted"
ROUGHLY_WEIGHTED = "roughly_weighted"
NOT_ROUGHLY_WEIGHTED = "not_roughly_weighted"


def verdict(game: SimpleGame) -> str:
    if isinstance(check_weighted(game), Representation):
        return WEIGHTED
    if isinstance(check_rough(game), Representation):
        return ROUGHLY_WEIGHTED
    return NOT_ROUGHLY_WEIGHTED


@dataclass
class EnumerationReport:
    n: int
    filter: tuple[str, ...]
    total_games: int = 0
    weighted: int = 0
    roughly_weighted_only: int = 0
    not_roughly_weighted: int = 0
    extremal_examples: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "filter": list(self.filter),
            "total_games": self.total_games,
            "weighted": self.weighted,
            "roughly_weighted_only": self.roughly_weighted_only,
            "not_roughly_weighted": self.not_roughly_weighted,
            "extremal_examples": [format_game(g) for g, *_ in self.extremal_examples],
        }


def sweep(n: int, flt=None, games: Iterable[SimpleGame] | None = None) -> EnumerationReport:
    """Classify every game; non-RW games are kept with a verified potent certificate."""
    names = _parse_filter(flt)
    rep = EnumerationReport(n, tuple(sorted(names)) or ("none",))
    for g in (enumerate_games(n, names) if games is None else games):
        rep.total_games += 1
        v = verdict(g)
        if v == WEIGHTED:
            rep.weighted += 1
        elif v == ROUGHLY_WEIGHTED:
            rep.roughly_weighted_only += 1
        else:
            rep.not_roughly_weighted += 1
            cert = normalize_witness(g, check_rough(g))
            if not verify_certificate(g, cert):
                raise AssertionError("potent certificate failed verification")
            rep.extremal_examples.append((g, cert))
    return rep


def verify_small_player_theorems() -> list[EnumerationReport]:
    """No non-RW games for n <= 4, for proper-or-strong n = 5 and constant-sum n = 6.

    Also confirms the guards matter: the 5-player game with minimal winning
    {1,2}, {3,4,5}, the listed 6-player fixture and a proper 6-player game
    are not roughly weighted.
    """
    from simplegames.constructions import example_proper6_game, gn2_game, proper6_guard_game

    jobs = [(n, None) for n in range(1, 5)] + [(5, ("proper", "strong")), (6, ("constant_sum",))]
    reports = []
    for n, flt in jobs:
        rep = sweep(n, flt)
        if rep.not_roughly_weighted:
            g = rep.extremal_examples[0][0]
            raise CounterexampleError(f"not roughly weighted:\n{format_game(g)}")
        reports.append(rep)
    for g in (gn2_game(5), example_proper6_game(), proper6_guard_game()):
        tight = sweep(g.n, games=[g])
        if tight.not_roughly_weighted != 1:
            raise CounterexampleError(f"expected a non-RW game:\n{format_game(g)}")
        reports.append(tight)
    return reports


def compute_f_of_n(n: int, max_len: int = 16):
    """max f(G) over non-weighted n-player games, with a game attaining it (None if all weighted)."""
    from simplegames.cert_search import compute_f

    if n > MAX_UNFILTERED:
        raise SizeCapError(f"f(n) is computed only for n <= {MAX_UNFILTERED}")
    best, arg = None, None
    for g in enumerate_games(n):
        if isinstance(check_weighted(g), Representation):
            continue
        r = compute_f(g, max_len=max_len)
        if not r.exact:
            raise SizeCapError("search cap reached while computing f(n)")
        if best is None or r.value > best:
            best, arg = r.value, g
    return best, arg


def compute_g_of_n(n: int, max_len: int = 20):
    """max g(G) over non-roughly-weighted n-player games, with a game attaining it."""
    from simplegames.cert_search import compute_g

    if n > MAX_UNFILTERED:
        raise SizeCapError(f"g(n) is computed only for n <= {MAX_UNFILTERED}")
    best, arg = None, None
    for g in enumerate_games(n):
        if isinstance(check_rough(g), Representation):
            continue
        r = compute_g(g, max_len=max_len)
        if not r.exact:
            raise SizeCapError("search cap reached while computing g(n)")
        if best is None or r.value > best:
            best, arg = r.value, g
    return best, arg
