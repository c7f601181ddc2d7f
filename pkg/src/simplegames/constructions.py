"""Builders for the concrete game families and the Fishburn doubling construction."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from simplegames.game_core import (
    GameError,
    SimpleGame,
    coalition,
    complement,
    grand,
    minimize,
)
from simplegames.trade_algebra import Certificate, TernaryVector

FANO_LINES = ((1, 2, 3), (3, 4, 5), (1, 5, 6), (1, 4, 7), (2, 5, 7), (3, 6, 7), (2, 4, 6))
RELATIONS_MAX_PLAYERS = 12


def fano() -> SimpleGame:
    """Seven points, the lines of the Fano plane winning."""
    return SimpleGame.from_coalitions(7, FANO_LINES)


# -- Hadamard games ----------------------------------------------------------------

def sylvester(k: int) -> np.ndarray:
    """Sylvester Hadamard matrix of order 2^k."""
    h = np.array([[1]], dtype=np.int64)
    for _ in range(k):
        h = np.block([[h, h], [h, -h]])
    return h


def hadamard_game(k: int) -> SimpleGame:
    """Rows of the Sylvester matrix of order 2^k, first row and column removed.

    The +1 entries of each remaining row form a minimal winning coalition.
    Order 4 (k=2) is rejected: its rows are singletons that do not intersect.
    """
    if not 3 <= k <= 4:
        raise GameError(f"hadamard_game supports k in 3..4, got {k}")
    h = sylvester(k)
    n = h.shape[0] - 1
    rows = [coalition((j for j in range(1, n + 1) if h[i, j] == 1), n) for i in range(1, n + 1)]
    return SimpleGame(n, tuple(minimize(rows)))


# -- cyclic and projective games -----------------------------------------------------

def _shift(mask: int, s: int, n: int) -> int:
    full = grand(n)
    s %= n
    return ((mask << s) | (mask >> (n - s))) & full


def cyclic_game(pattern: Iterable[int], n: int) -> SimpleGame:
    """All cyclic shifts of ``pattern`` (players 1..n) as generators of W."""
    mask = coalition(pattern, n)
    if not mask:
        raise GameError("pattern must be nonempty")
    return SimpleGame(n, tuple(minimize(_shift(mask, s, n) for s in range(n))))


def perfect_difference_set(q: int) -> tuple[int, ...]:
    """Least (q+1)-subset of Z_v, v = q²+q+1, whose differences hit each nonzero residue once."""
    v = q * q + q + 1
    for cand in itertools.combinations(range(v), q + 1):
        diffs = {(a - b) % v for a in cand for b in cand if a != b}
        if len(diffs) == v - 1:
            return cand
    raise GameError(f"no perfect difference set modulo {v}")


def projective_game(q: int) -> SimpleGame:
    """Points of a cyclic projective plane of order q, lines winning."""
    if q not in (2, 3):
        raise GameError(f"projective_game supports q in (2, 3), got {q}")
    v = q * q + q + 1
    base = perfect_difference_set(q)
    lines = [coalition(((d + s) % v + 1 for d in base), v) for s in range(v)]
    return SimpleGame(v, tuple(minimize(lines)))


def gn2_game(n: int) -> SimpleGame:
    """{1,2} and {3,4,5} win, as does every coalition of four or more."""
    if n < 5:
        raise GameError("gn2_game needs n >= 5")
    a, b = coalition((1, 2), n), coalition((3, 4, 5), n)
    quads = [coalition(s, n) for s in itertools.combinations(range(1, n + 1), 4)]
    return SimpleGame(n, tuple(minimize([a, b] + quads)))


def gn2_certificate(n: int) -> Certificate:
    """Potent certificate of length 2n+3 for gn2_game(n)."""
    if n < 5:
        raise GameError("gn2_certificate needs n >= 5")
    c = lambda *p: coalition(p, n)  # noqa: E731
    if n == 5:
        wins = [c(1, 2)] * 5 + [c(3, 4, 5)] * 7
        loses = [c(2, 3, 5)] * 4 + [c(2, 3, 4)] * 2 + [c(1, 3, 4)] * 2 + [c(1, 4, 5)] * 4
    else:
        wins = [c(1, 2)] * n + [c(3, 4, 5)] * (n + 2)
        loses = ([c(2, 3, 5)] * 3 + [c(2, 3, 4)] * 3 + [c(2, 3, j) for j in range(6, n + 1)]
                 + [c(1, 3, 4), c(1, 3, 5)] + [c(1, 4, 5)] * (n - 1))
    return Certificate.from_sequences(n, wins + [grand(n)], loses + [0], potent=True)


# -- fixtures ----------------------------------------------------------------------

EXAMPLE2_TRIPLES = ((1, 2, 4), (1, 3, 6), (2, 3, 5), (1, 4, 5), (2, 5, 6), (3, 4, 6))


def example2_game() -> SimpleGame:
    """Constant-sum 6-player game: all 4-sets, six listed triples and four completions.

    For each complementary pair of triples not covered by the list, the
    complement of the lexicographically least member wins.
    """
    n = 6
    listed = [coalition(t, n) for t in EXAMPLE2_TRIPLES]
    covered = set(listed) | {complement(x, n) for x in listed}
    extra = []
    for t in itertools.combinations(range(1, n + 1), 3):
        m = coalition(t, n)
        if m not in covered:
            covered |= {m, complement(m, n)}
            extra.append(complement(m, n))
    quads = [coalition(s, n) for s in itertools.combinations(range(1, n + 1), 4)]
    return SimpleGame(n, tuple(minimize(listed + extra + quads)))


def example_proper6_game() -> SimpleGame:
    return SimpleGame.from_coalitions(6, [(1, 2, 3), (3, 4, 5), (1, 5, 6), (2, 4, 6), (1, 2, 6)])


def proper6_guard_game() -> SimpleGame:
    """{1,2,3}, {3,4,5}, {1,5,6}, {2,4,6}: pairwise intersecting, hence proper, and not roughly weighted.

    The listed 6-player fixture is not proper itself ({1,2,6} and {3,4,5} are
    complementary winners); dropping {1,2,6} gives a proper game with the
    same conclusion.
    """
    return SimpleGame.from_coalitions(6, [(1, 2, 3), (3, 4, 5), (1, 5, 6), (2, 4, 6)])


def example_proper6_certificate() -> Certificate:
    n = 6
    c = lambda *p: coalition(p, n)  # noqa: E731
    wins = [c(1, 2, 3), c(3, 4, 5), c(3, 4, 5), c(1, 5, 6), c(2, 4, 6), c(1, 2, 6), grand(n)]
    loses = [c(1, 2, 4, 5)] * 2 + [c(1, 3, 4, 6)] * 2 + [c(2, 3, 5, 6)] * 2 + [0]
    return Certificate.from_sequences(n, wins, loses, potent=True)


def fano_certificate() -> Certificate:
    """Lines against their complements, plus (P, ∅)."""
    g = fano()
    return rotation_certificate(g)


def un_security_council() -> SimpleGame:
    """Five permanent members (players 1..5) and ten others; all five plus four others win."""
    n = 15
    perm = tuple(range(1, 6))
    return SimpleGame.from_coalitions(n, [perm + s for s in itertools.combinations(range(6, 16), 4)])


def rotation_certificate(game: SimpleGame) -> Certificate:
    """(X_1..X_m, P^{m-2r}; X_1^c..X_m^c, ∅^{m-2r}) for a game whose m minimal
    winning sets cover every player exactly r times, with m > 2r.

    Valid whenever the minimal winning sets pairwise intersect.
    """
    n = game.n
    mw = list(game.min_winning)
    counts = {sum((x >> i) & 1 for x in mw) for i in range(n)}
    if len(counts) != 1:
        raise GameError("minimal winning coalitions do not cover players uniformly")
    r = counts.pop()
    pad = len(mw) - 2 * r
    if pad < 1:
        raise GameError("no padding pair: the rotation transform would not be potent")
    wins = mw + [grand(n)] * pad
    loses = [complement(x, n) for x in mw] + [0] * pad
    return Certificate.from_sequences(n, wins, loses, potent=True)


# -- Fishburn systems and doubling ------------------------------------------------------

def _canonical(v: Sequence[int]) -> TernaryVector:
    for c in v:
        if c:
            return tuple(v) if c > 0 else tuple(-x for x in v)
    return tuple(v)


def find_relations(w: Sequence[int]) -> list[TernaryVector]:
    """All nonzero v in {-1,0,1}^n with v·w = 0, one per ± pair, first nonzero entry +1."""
    n = len(w)
    if n > RELATIONS_MAX_PLAYERS:
        raise GameError(f"find_relations is limited to n <= {RELATIONS_MAX_PLAYERS}")
    if any(int(x) <= 0 for x in w):
        raise ValueError("weights must be positive integers")
    grid = np.array(list(itertools.product((-1, 0, 1), repeat=n)), dtype=np.int64)
    dots = grid @ np.array([int(x) for x in w], dtype=np.int64)
    out = set()
    for row in grid[dots == 0]:
        if row.any():
            out.add(_canonical(tuple(int(c) for c in row)))
    return sorted(out, reverse=True)


def rank(vectors: Sequence[Sequence[int]]) -> int:
    """Exact rank over the rationals."""
    rows = [[Fraction(c) for c in v] for v in vectors]
    r = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def _zero_sum_signs(relations: Sequence[TernaryVector]) -> tuple[int, ...] | None:
    n = len(relations[0])
    for tail in itertools.product((1, -1), repeat=len(relations) - 1):
        signs = (1,) + tail
        if all(sum(s * v[i] for s, v in zip(signs, relations)) == 0 for i in range(n)):
            return signs
    return None


def _proper_subsets_independent(relations: Sequence[TernaryVector]) -> bool:
    k = len(relations)
    return all(rank(sub) == k - 1 for sub in itertools.combinations(relations, k - 1)) if k > 1 else True


def check_fishburn(w: Sequence[int], k: int) -> bool:
    """Exactly k relations, summing to zero under some signs, every proper subset independent."""
    rels = find_relations(w)
    if len(rels) != k or k < 1:
        return False
    return _zero_sum_signs(rels) is not None and _proper_subsets_independent(rels)


@dataclass(frozen=True)
class FishburnSystem:
    weights: tuple[int, ...]
    relations: tuple[TernaryVector, ...] = field(default=())

    @property
    def k(self) -> int:
        return len(self.relations)

    @property
    def n(self) -> int:
        return len(self.weights)

    @classmethod
    def from_weights(cls, w: Sequence[int], k: int) -> "FishburnSystem":
        if not check_fishburn(w, k):
            raise GameError(f"weights {tuple(w)} do not satisfy Fishburn's condition of order {k}")
        rels = find_relations(w)
        signs = _zero_sum_signs(rels)
        return cls(tuple(int(x) for x in w),
                   tuple(tuple(s * c for c in v) for s, v in zip(signs, rels)))

    @classmethod
    def from_relations(cls, w: Sequence[int], relations: Sequence[Sequence[int]]) -> "FishburnSystem":
        """Use explicit signs and order; they must be the full relation set summing to zero."""
        rels = tuple(tuple(int(c) for c in v) for v in relations)
        if sorted(_canonical(v) for v in rels) != sorted(find_relations(w)):
            raise GameError("relations are not exactly the relation set of the weights")
        if any(sum(v[i] for v in rels) for i in range(len(w))):
            raise GameError("relations do not sum to zero")
        if not _proper_subsets_independent(rels):
            raise GameError("a proper subset of the relations is linearly dependent")
        return cls(tuple(int(x) for x in w), rels)


@dataclass(frozen=True)
class DoublingResult:
    game: SimpleGame
    weights: tuple[int, ...]
    threshold: int
    winners: tuple[int, ...]  # X_i' (positive parts plus heavy player)
    losers: tuple[int, ...]   # Y_i'

    def certificate(self) -> Certificate:
        return Certificate.from_sequences(self.game.n, self.winners, self.losers)


def doubling(system: FishburnSystem, threshold: int | None = None) -> DoublingResult:
    """Game on n+k players: one heavy player per relation, weight N - s_i.

    Weight above N wins and below N loses; on N exactly, the positive side of
    each relation (with its heavy player) wins and the negative side loses.
    """
    w = system.weights
    n, k = system.n, system.k
    if n <= 2:
        raise GameError("doubling needs n > 2")
    total = sum(w)
    big = 2 * total + 1 if threshold is None else int(threshold)
    if big <= 2 * total:
        raise GameError(f"threshold must exceed 2·w(P) = {2 * total}")
    m = n + k
    weights = list(w)
    winners, losers = [], []
    for i, v in enumerate(system.relations):
        pos = coalition((j + 1 for j, c in enumerate(v) if c > 0), m)
        neg = coalition((j + 1 for j, c in enumerate(v) if c < 0), m)
        s = sum(w[j] for j, c in enumerate(v) if c > 0)
        weights.append(big - s)
        heavy = 1 << (n + i)
        winners.append(pos | heavy)
        losers.append(neg | heavy)
    from simplegames.lp_solver import coalition_weights

    table, _ = coalition_weights(m, [Fraction(x) for x in weights])
    on = np.flatnonzero(table == big)
    if sorted(int(x) for x in on) != sorted(winners + losers):
        raise GameError(f"{len(on)} coalitions weigh the threshold, expected exactly {2 * k}")
    win = table > big
    win[winners] = True
    return DoublingResult(SimpleGame.from_table(m, win), tuple(weights), big, tuple(winners), tuple(losers))


def doubling_game(system: FishburnSystem, threshold: int | None = None) -> SimpleGame:
    return doubling(system, threshold).game


REFERENCE_RELATIONS = ((1, 0, 1, -1, 0), (1, -1, -1, 1, 0), (-1, 1, -1, -1, 1), (-1, 0, 1, 1, -1))


def reference_doubling_system() -> FishburnSystem:
    """(1,2,5,6,10) with its four relations signed so the winners are 46, 237, 1348, 159."""
    return FishburnSystem.from_relations((1, 2, 5, 6, 10), [tuple(-c for c in v) for v in REFERENCE_RELATIONS])

