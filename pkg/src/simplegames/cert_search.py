"""Shortest certificates: f(G), g(G), k-trade robustness and the bound formulas.

Normal form used throughout: winners are minimal winning coalitions.  If a
winner X_i strictly contains a minimal winning X, every player a in X_i \\ X
also occurs in some loser (the counts balance), and deleting a from both keeps
X_i winning and that loser losing.  Length is unchanged, and a potent
certificate keeps its reserved (P, ∅) pair.

Given the winners, the losers must split the count vector c into exactly k
losing sets.  If some split exists, one exists whose first loser is a maximal
element of {M ∩ supp(c) : M maximal losing}: grow the first loser towards
such a set by stealing each missing player from another loser.  That set must
also contain every player a with c_a = k, who sits in all k losers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from simplegames.game_core import SimpleGame, grand, maximize, popcount
from simplegames.lp_solver import Representation, check_rough, check_weighted
from simplegames.trade_algebra import Certificate, verify_certificate

UNBOUNDED = math.inf
DEFAULT_MAX_LEN = 16
DEFAULT_BUDGET = 3_000_000
ROBUST_MAX_PLAYERS = 12
ROBUST_MAX_K = 20


class InconclusiveError(RuntimeError):
    """The search hit a cap before it could decide."""


class _BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a shortest-certificate search.

    ``value`` is the exact length, UNBOUNDED, or None when the cap or node
    budget was hit first; ``lower_bound`` is then the best proven bound.
    """

    value: float | int | None
    exact: bool
    lower_bound: float | int
    certificate: Certificate | None = None

    def __int__(self):
        if not self.exact or self.value is UNBOUNDED:
            raise ValueError("no finite exact value")
        return int(self.value)


@dataclass(frozen=True)
class RobustnessReport:
    f_value: float | int | None
    g_value: float | int | None
    search_cap: int
    exact: bool
    f_certificate: Certificate | None = None
    g_certificate: Certificate | None = None


@dataclass(frozen=True)
class BoundReport:
    n: int
    tz_upper: int
    coord_sum_lower_g: float | int


# -- bounds ------------------------------------------------------------------------

def taylor_zwicker_cap(n: int) -> int:
    """(n+1)·⌈n^(n/2)⌉, the trade-robustness length that forces weightedness."""
    if n < 1:
        raise ValueError("n must be positive")
    p = n ** n
    root = math.isqrt(p)
    if root * root != p:
        root += 1
    return (n + 1) * root


def coord_sum_lower_bound_g(game: SimpleGame):
    """Every member of I(G) has coordinate sum >= -d; a potent certificate needs ⌈n/d⌉+1 pairs."""
    d = game.max_losing_size - game.min_winning_size
    if d <= 0:
        return UNBOUNDED
    return -(-game.n // d) + 1


def bound_report(game: SimpleGame) -> BoundReport:
    return BoundReport(game.n, taylor_zwicker_cap(game.n), coord_sum_lower_bound_g(game))


# -- the search engine ---------------------------------------------------------------

class _Searcher:
    """Depth-first search over winner multisets with memoized loser splitting."""

    def __init__(self, game: SimpleGame, winners: Sequence[int], extra: int,
                 loser_alphabet: Sequence[int] | None, budget: int):
        self.game = game
        self.n = game.n
        self.winners = list(winners)
        self.extra = extra  # 1 for potent searches (the v_{P,∅} seed), else 0
        self.alphabet = None if loser_alphabet is None else sorted(set(loser_alphabet))
        self.budget = budget
        self.nodes = 0
        self.win_rows = np.array([[(x >> i) & 1 for i in range(self.n)] for x in self.winners],
                                 dtype=np.int64).reshape(len(self.winners), self.n)
        mw = game.min_winning
        self.mw_rows = np.array([[(m >> i) & 1 for i in range(self.n)] for m in mw], dtype=np.int64)
        self.mw_slack = np.array([popcount(m) - 1 for m in mw], dtype=np.int64)
        self.max_lose = game.max_losing
        if self.alphabet is None:
            self.lose_cap = game.max_losing_size
        else:
            self.lose_cap = max((popcount(y) for y in self.alphabet), default=0)

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExceeded

    def search(self, k: int) -> tuple[list[int], list[int]] | None:
        """Winners and losers of a k-pair transform, or None."""
        self._split.cache_clear()
        start = np.full(self.n, self.extra, dtype=np.int64)
        if np.any(start > k):
            return None
        chosen: list[int] = []

        def dfs(first: int, c: np.ndarray):
            self.tick()
            depth = len(chosen)
            if depth == k:
                losers = self._split(tuple(int(v) for v in c), k)
                return None if losers is None else list(losers)
            for idx in range(first, len(self.winners)):
                nc = c + self.win_rows[idx]
                if nc.max() > k:
                    continue
                if int(nc.sum()) > k * self.lose_cap:
                    continue
                if self.mw_rows.size and np.any(self.mw_rows @ nc > k * self.mw_slack):
                    continue
                chosen.append(self.winners[idx])
                found = dfs(idx, nc)
                if found is not None:
                    return found
                chosen.pop()
            return None

        losers = dfs(0, start)
        if losers is None:
            return None
        return list(chosen), losers

    @lru_cache(maxsize=None)
    def _split(self, c: tuple[int, ...], k: int) -> tuple[int, ...] | None:
        self.tick()
        if k == 0:
            return () if not any(c) else None
        if max(c) > k or sum(c) > k * self.lose_cap:
            return None
        supp = sum(1 << i for i, v in enumerate(c) if v)
        if self.alphabet is not None:
            return self._split_alphabet(c, k, supp)
        if not supp:
            return (0,) * k
        forced = sum(1 << i for i, v in enumerate(c) if v == k)
        cands = maximize(m & supp for m in self.max_lose if m & forced == forced)
        for y in sorted(cands, key=lambda m: (-popcount(m), m)):
            rest = tuple(v - ((y >> i) & 1) for i, v in enumerate(c))
            sub = self._split(rest, k - 1)
            if sub is not None:
                return (y,) + sub
        return None

    def _split_alphabet(self, c, k, supp):
        if not supp:
            return (0,) * k if 0 in self.alphabet else None
        low = supp & -supp
        for y in self.alphabet:
            if y & low and y & supp == y:
                rest = tuple(v - ((y >> i) & 1) for i, v in enumerate(c))
                if min(rest) < 0:
                    continue
                sub = self._split(rest, k - 1)
                if sub is not None:
                    return (y,) + sub
        return None


def _tight_alphabets(game: SimpleGame, rep: Representation):
    """Coalitions on the threshold of a rough representation of a non-weighted game.

    Summing weights over a certificate gives sum w(X_i) = sum w(Y_i) with
    w(X_i) >= q >= w(Y_i), so every coalition involved weighs exactly q.
    """
    from simplegames.lp_solver import coalition_weights

    table, den = coalition_weights(game.n, list(rep.weights))
    q = rep.quota * den
    if q.denominator != 1:
        return [], []
    on = table == int(q)
    win = game.winning_table
    winners = [x for x in game.min_winning if on[x]]
    losers = [int(y) for y in np.flatnonzero(on & ~win)]
    return winners, losers


def _run(game: SimpleGame, potent: bool, k_start: int, max_len: int, budget: int,
         use_lp: bool) -> SearchResult:
    extra = 1 if potent else 0
    winners = list(game.min_winning)
    alphabet = None
    if use_lp and not potent:
        rough = check_rough(game)
        if isinstance(rough, Representation):
            winners, alphabet = _tight_alphabets(game, rough)
    searcher = _Searcher(game, winners, extra, alphabet, budget)
    k = k_start
    try:
        while k + extra <= max_len:
            found = searcher.search(k)
            if found is not None:
                wins, loses = found
                if potent:
                    wins.append(grand(game.n))
                    loses.append(0)
                cert = Certificate.from_sequences(game.n, wins, loses, potent=potent)
                if not verify_certificate(game, cert):
                    raise AssertionError("search produced an invalid certificate")
                return SearchResult(k + extra, True, k + extra, cert)
            k += 1
    except _BudgetExceeded:
        pass
    return SearchResult(None, False, k + extra)


def compute_f(game: SimpleGame, max_len: int = DEFAULT_MAX_LEN, budget: int = DEFAULT_BUDGET,
              use_lp: bool = True) -> SearchResult:
    """Length of the shortest certificate of non-weightedness (UNBOUNDED if weighted)."""
    if use_lp and isinstance(check_weighted(game), Representation):
        return SearchResult(UNBOUNDED, True, UNBOUNDED)
    return _run(game, False, 2, max_len, budget, use_lp)


def compute_g(game: SimpleGame, max_len: int = DEFAULT_MAX_LEN, budget: int = DEFAULT_BUDGET,
              use_lp: bool = True) -> SearchResult:
    """Length of the shortest potent certificate, (P, ∅) included (UNBOUNDED if roughly weighted)."""
    low = coord_sum_lower_bound_g(game)
    if low is UNBOUNDED:
        return SearchResult(UNBOUNDED, True, UNBOUNDED)
    if use_lp and isinstance(check_rough(game), Representation):
        return SearchResult(UNBOUNDED, True, UNBOUNDED)
    return _run(game, True, max(low - 1, 2), max_len, budget, use_lp)


def is_k_trade_robust(game: SimpleGame, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff no certificate of non-weightedness has length <= k."""
    if k < 1:
        raise ValueError("k must be positive")
    if game.n > ROBUST_MAX_PLAYERS or k > ROBUST_MAX_K:
        raise InconclusiveError(f"robustness search is capped at n <= {ROBUST_MAX_PLAYERS}, k <= {ROBUST_MAX_K}")
    res = compute_f(game, max_len=k, budget=budget)
    if res.exact:
        return res.value > k
    if res.lower_bound > k:
        return True
    raise InconclusiveError(f"node budget exhausted before deciding {k}-trade robustness")


def robustness_report(game: SimpleGame, max_len: int = DEFAULT_MAX_LEN,
                      budget: int = DEFAULT_BUDGET) -> RobustnessReport:
    f = compute_f(game, max_len, budget)
    g = compute_g(game, max_len, budget)
    if f.exact and g.exact and g.value is not UNBOUNDED:
        if f.value is UNBOUNDED or f.value > g.value - 1:
            raise AssertionError("f <= g - 1 violated")
    return RobustnessReport(f.value, g.value, max_len, f.exact and g.exact, f.certificate, g.certificate)
