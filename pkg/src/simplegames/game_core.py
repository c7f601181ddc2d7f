"""Coalitions, simple games, structural predicates and duality.

A coalition is a Python ``int`` used as a bitmask: player ``i`` (1-based)
is bit ``i - 1``.  A game is stored only through its minimal winning
coalitions; winning/losing tables are materialized on demand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence, Union

import numpy as np

MAX_PLAYERS = 32
SWEEP_LIMIT = 20

Coalition = Union[int, Iterable[int]]


class GameError(ValueError):
    """Malformed game data."""


class ParseError(GameError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SizeCapError(GameError):
    """Requested operation exceeds a hard size cap."""


# -- coalition helpers -------------------------------------------------------

def grand(n: int) -> int:
    return (1 << n) - 1


def complement(mask: int, n: int) -> int:
    return grand(n) & ~mask


def members(mask: int) -> tuple[int, ...]:
    """1-based players of a coalition, increasing."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def bits(mask: int) -> Iterator[int]:
    """0-based bit indices of ``mask``."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def coalition(players: Iterable[int], n: int | None = None) -> int:
    mask = 0
    for p in players:
        if not isinstance(p, (int, np.integer)) or p < 1 or (n is not None and p > n):
            raise GameError(f"player index {p!r} out of range 1..{n}")
        mask |= 1 << (int(p) - 1)
    return mask


def as_mask(x: Coalition, n: int) -> int:
    """Accept a bitmask or an iterable of 1-based players; range-checked."""
    if isinstance(x, (int, np.integer)):
        mask = int(x)
        if mask < 0 or mask >> n:
            raise GameError(f"coalition {mask:#x} has players outside 1..{n}")
        return mask
    return coalition(x, n)


def coalition_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return popcount(mask), members(mask)


def format_coalition(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


def minimize(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal elements of a family, in canonical order."""
    kept: list[int] = []
    for m in sorted(set(masks), key=coalition_key):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def maximize(masks: Iterable[int]) -> list[int]:
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: (-popcount(x), members(x))):
        if not any(k & m == m for k in kept):
            kept.append(m)
    return kept


def upward_closure_table(n: int, generators: Iterable[int]) -> np.ndarray:
    """Boolean table over all 2^n coalitions: True on supersets of a generator."""
    table = np.zeros(1 << n, dtype=bool)
    gens = list(generators)
    if gens:
        table[gens] = True
    for i in range(n):
        view = table.reshape(-1, 2, 1 << i)
        view[:, 1, :] |= view[:, 0, :]
    return table


def minimal_transversals(family: Sequence[int]) -> list[int]:
    """Minimal sets meeting every member of ``family`` (Berge's algorithm)."""
    trans = [0]
    for m in family:
        keep = [t for t in trans if t & m]
        grown = [t | (1 << b) for t in trans if not t & m for b in bits(m)]
        trans = minimize(keep + grown)
    return trans


# -- the game ----------------------------------------------------------------

@dataclass(frozen=True)
class SimpleGame:
    """A simple game on players 1..n given by its minimal winning coalitions.

    The antichain is validated, never silently repaired; use
    :meth:`from_winning` to build a game from an arbitrary winning family.
    """

    n: int
    min_winning: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if not isinstance(n, int) or not 1 <= n <= MAX_PLAYERS:
            raise SizeCapError(f"player count must be in 1..{MAX_PLAYERS}, got {n!r}")
        mw = tuple(int(m) for m in self.min_winning)
        if not mw:
            raise GameError("a simple game needs at least one minimal winning coalition")
        for m in mw:
            if m == 0:
                raise GameError("the empty coalition cannot be winning")
            if m >> n:
                raise GameError(f"coalition {format_coalition(m)} has players outside 1..{n}")
        if len(set(mw)) != len(mw):
            raise GameError("duplicate minimal winning coalition")
        ordered = sorted(mw, key=coalition_key)
        for i, a in enumerate(ordered):
            for b in ordered[i + 1:]:
                if a & b == a:
                    raise GameError(
                        f"not an antichain: {format_coalition(a)} is contained in {format_coalition(b)}"
                    )
        object.__setattr__(self, "min_winning", tuple(ordered))

    # constructors

    @classmethod
    def from_coalitions(cls, n: int, sets: Iterable[Iterable[int]]) -> "SimpleGame":
        return cls(n, tuple(coalition(s, n) for s in sets))

    @classmethod
    def from_winning(cls, n: int, winning: Iterable[Coalition]) -> "SimpleGame":
        """Normalizing constructor: any family generating W by upward closure."""
        return cls(n, tuple(minimize(as_mask(x, n) for x in winning)))

    @classmethod
    def from_table(cls, n: int, table: np.ndarray) -> "SimpleGame":
        """Build from a monotone boolean table of length 2^n."""
        table = np.asarray(table, dtype=bool)
        if table.shape != (1 << n,):
            raise GameError("table length must be 2^n")
        closed = upward_closure_table(n, np.flatnonzero(table))
        if not np.array_equal(closed, table):
            raise GameError("winning table is not monotone")
        wins = np.flatnonzero(table)
        mins = [int(x) for x in wins if not any(table[int(x) & ~(1 << b)] for b in bits(int(x)))]
        return cls(n, tuple(mins))

    @classmethod
    def from_predicate(cls, n: int, is_win: Callable[[int], bool]) -> "SimpleGame":
        _check_sweep(n)
        table = np.fromiter((bool(is_win(x)) for x in range(1 << n)), dtype=bool, count=1 << n)
        return cls.from_table(n, table)

    # derived data

    @property
    def grand(self) -> int:
        return grand(self.n)

    def is_winning(self, x: Coalition) -> bool:
        mask = as_mask(x, self.n)
        return any(m & mask == m for m in self.min_winning)

    def is_losing(self, x: Coalition) -> bool:
        return not self.is_winning(x)

    @cached_property
    def winning_table(self) -> np.ndarray:
        _check_sweep(self.n)
        table = upward_closure_table(self.n, self.min_winning)
        table.setflags(write=False)
        return table

    @cached_property
    def max_losing(self) -> tuple[int, ...]:
        """Maximal losing coalitions (complements of minimal blocking sets)."""
        full = self.grand
        return tuple(sorted((full & ~t for t in minimal_transversals(self.min_winning)),
                            key=lambda x: (-popcount(x), members(x))))

    @cached_property
    def min_winning_size(self) -> int:
        return min(popcount(m) for m in self.min_winning)

    @cached_property
    def max_losing_size(self) -> int:
        return max(popcount(m) for m in self.max_losing)

    def winning(self) -> Iterator[int]:
        return (int(x) for x in np.flatnonzero(self.winning_table))

    def losing(self) -> Iterator[int]:
        return (int(x) for x in np.flatnonzero(~self.winning_table))

    def count_winning(self) -> int:
        return int(self.winning_table.sum())

    def relabel(self, perm: Sequence[int]) -> "SimpleGame":
        """Apply a permutation given as ``perm[i-1] = image of player i``."""
        return SimpleGame(self.n, tuple(coalition((perm[p - 1] for p in members(m)), self.n)
                                        for m in self.min_winning))

    def __str__(self) -> str:
        return f"SimpleGame(n={self.n}, min_winning=[{', '.join(map(format_coalition, self.min_winning))}])"


def _check_sweep(n: int) -> None:
    if n > SWEEP_LIMIT:
        raise SizeCapError(f"full 2^n sweep is limited to n <= {SWEEP_LIMIT}, got n={n}")


# -- operations ----------------------------------------------------------------

def is_winning(game: SimpleGame, x: Coalition) -> bool:
    return game.is_winning(x)


@dataclass(frozen=True)
class GameClass:
    proper: bool
    strong: bool

    @property
    def constant_sum(self) -> bool:
        return self.proper and self.strong

    def as_dict(self) -> dict:
        return {"proper": self.proper, "strong": self.strong, "constant_sum": self.constant_sum}


def _pairwise_intersecting(family: Sequence[int]) -> bool:
    return all(a & b for i, a in enumerate(family) for b in family[i:])


def classify(game: SimpleGame) -> GameClass:
    if game.n <= SWEEP_LIMIT:
        win = game.winning_table
        comp = win[::-1]
        return GameClass(proper=not bool(np.any(win & comp)), strong=not bool(np.any(~win & ~comp)))
    # X, X^c both winning iff two minimal winning coalitions are disjoint
    return GameClass(proper=_pairwise_intersecting(game.min_winning),
                     strong=_pairwise_intersecting(dual(game).min_winning))


def dual(game: SimpleGame) -> SimpleGame:
    """G* = (P, L^c): winning sets are those meeting every minimal winning coalition."""
    return SimpleGame(game.n, tuple(minimal_transversals(game.min_winning)))


def dual_bruteforce(game: SimpleGame) -> SimpleGame:
    win = game.winning_table
    return SimpleGame.from_table(game.n, ~win[::-1])


@dataclass(frozen=True)
class SpecialPlayers:
    weak_dictators: frozenset
    vetoers: frozenset
    has_losing_n_minus_1: bool


def find_special_players(game: SimpleGame) -> SpecialPlayers:
    weak = frozenset(members(m)[0] for m in game.min_winning if popcount(m) == 1)
    common = game.grand
    for m in game.min_winning:
        common &= m
    vetoers = frozenset(members(common))
    full = game.grand
    # P \ {i} is losing iff i lies in every minimal winning coalition
    losing_big = any(not game.is_winning(full & ~(1 << i)) for i in range(game.n))
    if losing_big != bool(vetoers):
        raise AssertionError("vetoer and (n-1)-losing checks disagree")
    return SpecialPlayers(weak, vetoers, losing_big)


# -- isomorphism ------------------------------------------------------------------

def _profile(game: SimpleGame, player: int) -> tuple:
    bit = 1 << (player - 1)
    return tuple(sorted(popcount(m) for m in game.min_winning if m & bit))


def find_isomorphism(a: SimpleGame, b: SimpleGame) -> tuple[int, ...] | None:
    """Permutation ``perm`` with ``a.relabel(perm) == b``, or None."""
    if a.n != b.n or len(a.min_winning) != len(b.min_winning):
        return None
    if sorted(map(popcount, a.min_winning)) != sorted(map(popcount, b.min_winning)):
        return None
    n = a.n
    prof_a = [_profile(a, p) for p in range(1, n + 1)]
    prof_b = [_profile(b, p) for p in range(1, n + 1)]
    target = set(b.min_winning)
    perm = [0] * n
    used = [False] * (n + 1)

    def consistent(k: int) -> bool:
        # minimal winning sets of ``a`` already fully mapped must land in ``b``
        newest = 1 << (k - 1)
        lo = (1 << k) - 1
        for m in a.min_winning:
            if m & newest and not m & ~lo:
                if coalition(perm[p - 1] for p in members(m)) not in target:
                    return False
        return True

    def extend(k: int) -> bool:
        if k == n:
            return a.relabel(perm) == b
        for q in range(1, n + 1):
            if used[q] or prof_a[k] != prof_b[q - 1]:
                continue
            perm[k] = q
            used[q] = True
            if consistent(k + 1) and extend(k + 1):
                return True
            used[q] = False
        return False

    return tuple(perm) if extend(0) else None


def are_isomorphic(a: SimpleGame, b: SimpleGame) -> bool:
    return find_isomorphism(a, b) is not None


# -- text format ----------------------------------------------------------------------

_PLAYERS_RE = re.compile(r"players\s*:\s*(\S+)\s*$")
_MINWIN_RE = re.compile(r"minwin\s*:(.*)$")


def format_game(game: SimpleGame) -> str:
    lines = [f"players: {game.n}"]
    lines += ["minwin: " + " ".join(map(str, members(m))) for m in game.min_winning]
    return "\n".join(lines) + "\n"


def parse_game(text: str) -> SimpleGame:
    n = None
    sets: list[tuple[int, int]] = []  # (mask, line number)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        body = line.strip()
        if n is None:
            mt = _PLAYERS_RE.match(body)
            if not mt:
                raise ParseError("expected 'players: <n>' as the first line", lineno, col)
            try:
                n = int(mt.group(1))
            except ValueError:
                raise ParseError(f"bad player count {mt.group(1)!r}", lineno, col + body.index(mt.group(1)))
            if not 1 <= n <= MAX_PLAYERS:
                raise ParseError(f"player count must be in 1..{MAX_PLAYERS}", lineno, col)
            continue
        mt = _MINWIN_RE.match(body)
        if not mt:
            raise ParseError(f"unrecognized line {body!r}", lineno, col)
        tokens = mt.group(1).split()
        if not tokens:
            raise ParseError("empty coalition cannot be minimal winning", lineno, col)
        players = []
        offset = col + body.index(":") + 1
        for tok in tokens:
            tcol = offset + raw[offset - 1:].index(tok)
            try:
                p = int(tok)
            except ValueError:
                raise ParseError(f"bad player {tok!r}", lineno, tcol)
            if not 1 <= p <= n:
                raise ParseError(f"player {p} out of range 1..{n}", lineno, tcol)
            if players and p <= players[-1]:
                raise ParseError("players must be strictly increasing", lineno, tcol)
            players.append(p)
        sets.append((coalition(players), lineno))
    if n is None:
        raise ParseError("missing 'players:' line", 1)
    if not sets:
        raise ParseError("no minimal winning coalitions", len(text.splitlines()) or 1)
    for i, (a, la) in enumerate(sets):
        for b, lb in sets[i + 1:]:
            if a & b in (a, b):
                raise ParseError(
                    f"not an antichain: {format_coalition(a)} (line {la}) and "
                    f"{format_coalition(b)} (line {lb}) are nested", lb)
    return SimpleGame(n, tuple(m for m, _ in sets))
