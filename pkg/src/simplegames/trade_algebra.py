"""Ternary vectors, the ideal I(G), trading transforms, certificates, EL sequences."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from simplegames.game_core import (
    Coalition,
    GameError,
    ParseError,
    SimpleGame,
    as_mask,
    coalition,
    coalition_key,
    complement,
    format_coalition,
    grand,
)

TernaryVector = tuple[int, ...]
Multiset = tuple[tuple[int, int], ...]

IDEAL_MODES = (
    "all",
    "min_win_cross_all_losing",
    "all_winning_cross_max_losing",
    "min_win_cross_max_losing",
)


class InvalidTransformError(ValueError):
    """The two sides of a transform have different lengths or do not balance."""


class RoleMismatchError(ValueError):
    """A coalition does not have the role (winning/losing/blocking) claimed for it."""


def vector_of_pair(x: Coalition, y: Coalition, n: int) -> TernaryVector:
    """chi(X) - chi(Y) as a length-n tuple over {-1, 0, 1}."""
    xm, ym = as_mask(x, n), as_mask(y, n)
    return tuple(((xm >> i) & 1) - ((ym >> i) & 1) for i in range(n))


def vector_sum(vectors: Iterable[Sequence[int]], n: int) -> tuple[int, ...]:
    total = [0] * n
    for v in vectors:
        for i, c in enumerate(v):
            total[i] += c
    return tuple(total)


def ideal_pairs(game: SimpleGame, restrict: str = "all") -> Iterator[tuple[int, int]]:
    """(X, Y) pairs with X winning and Y losing, per restriction mode."""
    if restrict not in IDEAL_MODES:
        raise ValueError(f"unknown restriction {restrict!r}")
    if restrict in ("all", "min_win_cross_all_losing", "all_winning_cross_max_losing"):
        game.winning_table  # enforces the sweep cap
    winners = game.min_winning if restrict.startswith("min_win") else tuple(game.winning())
    losers = game.max_losing if restrict.endswith("max_losing") else tuple(game.losing())
    for x in winners:
        for y in losers:
            yield x, y


def ideal_members(game: SimpleGame, restrict: str = "all") -> Iterator[TernaryVector]:
    """Distinct vectors v_{X,Y} of I(G) (or of the chosen restriction)."""
    seen = set()
    for x, y in ideal_pairs(game, restrict):
        v = vector_of_pair(x, y, game.n)
        if v not in seen:
            seen.add(v)
            yield v


def is_ideal(vectors: Iterable[Sequence[int]], n: int) -> bool:
    """Closed under adding any unit vector e_i that keeps the result in T^n."""
    s = {tuple(v) for v in vectors}
    for v in s:
        if len(v) != n:
            raise ValueError("vector length does not match n")
        for i in range(n):
            if v[i] < 1 and v[:i] + (v[i] + 1,) + v[i + 1:] not in s:
                return False
    return True


# -- multisets -----------------------------------------------------------------

def to_multiset(seq: Iterable[int]) -> Multiset:
    counts = Counter(int(m) for m in seq)
    return tuple(sorted(counts.items(), key=lambda kv: coalition_key(kv[0])))


def expand(ms: Multiset) -> list[int]:
    return [m for m, c in ms for _ in range(c)]


@dataclass(frozen=True)
class TradingTransform:
    """Two multisets of coalitions over players 1..n."""

    n: int
    winners: Multiset
    losers: Multiset

    def __post_init__(self):
        for side in (self.winners, self.losers):
            for m, c in side:
                if c < 1:
                    raise ValueError("multiplicities must be positive")
                if m < 0 or m >> self.n:
                    raise GameError(f"coalition {m:#x} outside 1..{self.n}")
        object.__setattr__(self, "winners", to_multiset(expand(self.winners)))
        object.__setattr__(self, "losers", to_multiset(expand(self.losers)))

    @classmethod
    def from_sequences(cls, n: int, winners: Iterable[Coalition], losers: Iterable[Coalition]) -> "TradingTransform":
        return cls(n, to_multiset(as_mask(x, n) for x in winners), to_multiset(as_mask(y, n) for y in losers))

    def __len__(self) -> int:
        return sum(c for _, c in self.winners)

    def pairs(self) -> list[tuple[int, int]]:
        return list(zip(expand(self.winners), expand(self.losers)))


def validate_transform(t: TradingTransform) -> bool:
    """True iff the per-player counts on both sides agree.

    Computed twice, as the vector sum of v_{X_i,Y_i} and as raw occurrence
    counts; the two routes must agree.
    """
    wins, loses = expand(t.winners), expand(t.losers)
    if len(wins) != len(loses):
        raise InvalidTransformError(f"unequal lengths {len(wins)} and {len(loses)}")
    by_vectors = not any(vector_sum((vector_of_pair(x, y, t.n) for x, y in zip(wins, loses)), t.n))
    by_counts = all(
        sum((x >> i) & 1 for x in wins) == sum((y >> i) & 1 for y in loses) for i in range(t.n)
    )
    if by_vectors != by_counts:
        raise AssertionError("vector-sum and count-balance checks disagree")
    return by_counts


@dataclass(frozen=True)
class Certificate:
    transform: TradingTransform
    potent: bool = False

    @property
    def n(self) -> int:
        return self.transform.n

    def __len__(self) -> int:
        return len(self.transform)

    @classmethod
    def from_sequences(cls, n: int, winners, losers, potent: bool | None = None) -> "Certificate":
        t = TradingTransform.from_sequences(n, winners, losers)
        if potent is None:
            potent = _has_grand_and_empty(t)
        return cls(t, potent)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]], potent: bool = False) -> "Certificate":
        pairs = list(pairs)
        wins = [x for x, _ in pairs]
        loses = [y for _, y in pairs]
        if potent:
            wins.append(grand(n))
            loses.append(0)
        return cls(TradingTransform.from_sequences(n, wins, loses), potent)


def _has_grand_and_empty(t: TradingTransform) -> bool:
    return any(m == grand(t.n) for m, _ in t.winners) and any(m == 0 for m, _ in t.losers)


def verify_certificate(game: SimpleGame, cert: Certificate) -> bool:
    """Roles and balance; raises InvalidTransformError if the transform is malformed."""
    t = cert.transform
    if t.n != game.n:
        raise InvalidTransformError(f"certificate is over {t.n} players, game has {game.n}")
    if not validate_transform(t):
        raise InvalidTransformError("trading transform does not balance")
    if not all(game.is_winning(m) for m, _ in t.winners):
        return False
    if any(game.is_winning(m) for m, _ in t.losers):
        return False
    if cert.potent and not _has_grand_and_empty(t):
        return False
    return True


# -- certificate text format -------------------------------------------------------

_COAL_RE = re.compile(r"\{([^}]*)\}(?:\^(\d+))?$")


def format_multiset_entry(mask: int, mult: int) -> str:
    return format_coalition(mask) + (f"^{mult}" if mult != 1 else "")


def format_certificate(cert: Certificate) -> str:
    t = cert.transform
    lines = [f"players: {t.n}", f"potent: {'true' if cert.potent else 'false'}", "winners:"]
    lines += [format_multiset_entry(m, c) for m, c in t.winners]
    lines.append("losers:")
    lines += [format_multiset_entry(m, c) for m, c in t.losers]
    return "\n".join(lines) + "\n"


def parse_coalition_token(tok: str, n: int, lineno: int = 1) -> tuple[int, int]:
    mt = _COAL_RE.match(tok.replace(" ", ""))
    if not mt:
        raise ParseError(f"bad coalition {tok!r}", lineno)
    body = mt.group(1).strip()
    try:
        players = [int(p) for p in body.split(",")] if body else []
        mask = coalition(players, n)
    except (ValueError, GameError) as exc:
        raise ParseError(str(exc), lineno)
    return mask, int(mt.group(2) or 1)


def parse_certificate(text: str) -> Certificate:
    n = None
    potent = None
    section = None
    sides: dict[str, list[tuple[int, int]]] = {"winners": [], "losers": []}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key = line.split(":", 1)[0].strip() if ":" in line and not line.startswith("{") else None
        if key == "players":
            n = int(line.split(":", 1)[1])
        elif key == "potent":
            val = line.split(":", 1)[1].strip().lower()
            if val not in ("true", "false"):
                raise ParseError(f"potent must be true or false, got {val!r}", lineno)
            potent = val == "true"
        elif key in ("winners", "losers"):
            section = key
        elif line.startswith("{"):
            if section is None or n is None:
                raise ParseError("coalition outside a winners:/losers: section", lineno)
            sides[section].append(parse_coalition_token(line, n, lineno))
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise ParseError("missing 'players:' line", 1)
    t = TradingTransform(n, tuple(sides["winners"]), tuple(sides["losers"]))
    if potent is None:
        potent = _has_grand_and_empty(t)
    return Certificate(t, potent)


# -- EL sequences ------------------------------------------------------------------

WINNING = "winning"
BLOCKING = "blocking"


@dataclass(frozen=True)
class ELSequence:
    n: int
    coalitions: tuple[int, ...]
    roles: tuple[str, ...]

    def __post_init__(self):
        if len(self.coalitions) != len(self.roles) or len(self.coalitions) % 2:
            raise ValueError("EL sequence needs an even number of coalitions with one role each")
        if any(r not in (WINNING, BLOCKING) for r in self.roles):
            raise ValueError("roles must be 'winning' or 'blocking'")
        if self.roles.count(WINNING) != self.roles.count(BLOCKING):
            raise ValueError("EL sequence needs as many winning as blocking entries")

    @property
    def degree(self) -> int:
        return len(self.coalitions) // 2


def el_from_potent(cert: Certificate) -> ELSequence:
    """Drop (P, ∅) and pair the remaining winners with complements of the losers."""
    if not cert.potent:
        raise ValueError("certificate is not potent")
    t = cert.transform
    if not validate_transform(t):
        raise InvalidTransformError("trading transform does not balance")
    full = grand(t.n)
    wins, loses = expand(t.winners), expand(t.losers)
    wins.remove(full)
    loses.remove(0)
    if not wins:
        raise InvalidTransformError("(P; ∅) alone is not a trading transform")
    blocks = [complement(y, t.n) for y in loses]
    return ELSequence(t.n, tuple(wins) + tuple(blocks),
                      (WINNING,) * len(wins) + (BLOCKING,) * len(blocks))


def violates_at_least_half(game: SimpleGame, seq: ELSequence) -> bool:
    """True iff every player occurs in fewer than half of the 2k coalitions."""
    for mask, role in zip(seq.coalitions, seq.roles):
        if role == WINNING and not game.is_winning(mask):
            raise RoleMismatchError(f"{format_coalition(mask)} is not winning")
        if role == BLOCKING and game.is_winning(complement(mask, game.n)):
            raise RoleMismatchError(f"{format_coalition(mask)} is not blocking")
    k = seq.degree
    return all(sum((m >> i) & 1 for m in seq.coalitions) < k for i in range(game.n))
