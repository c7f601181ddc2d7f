"""Exact rational feasibility for weightedness and rough weightedness.

Both questions are homogeneous linear systems over the vectors of I(G).
They are decided through the LP dual, which always starts feasible at the
slack basis:

* weighted:  max 1·y  s.t.  sum_j y_j v_j <= 1,  y >= 0
  bounded  <=> weights x >= 0 with v·x >= 1 exist (x = simplex multipliers);
  unbounded ray => sum r_j v_j <= 0, the Farkas witness.
* rough:     max t    s.t.  sum_j y_j v_j + t·1 <= 0,  t <= 1,  y, t >= 0
  optimum 0 => x >= 0, x != 0 with v·x >= 0;  optimum > 0 => sum y_j v_j + u = 0
  with u >= t·1 > 0.

Columns y_j range over v_{X,Y} with X minimal winning and Y maximal losing,
and are generated on demand: the most attractive column is the pair
minimizing x(X) - x(Y), which is a min over W^m and a max over L^max.
Leaving rows use the lexicographic ratio rule, so no basis repeats.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Hashable, Sequence, Union

import numpy as np

from simplegames.game_core import (
    SWEEP_LIMIT,
    GameError,
    ParseError,
    SimpleGame,
    SizeCapError,
    bits,
    format_coalition,
)
from simplegames.trade_algebra import (
    Certificate,
    TernaryVector,
    parse_coalition_token,
    vector_of_pair,
    verify_certificate,
)

WEIGHTED = "weighted"
ROUGH = "rough"


class InternalConsistencyError(AssertionError):
    """An invariant that the mathematics guarantees did not hold."""


# -- revised simplex -------------------------------------------------------------

Column = tuple[Hashable, Sequence[Fraction], Fraction]


@dataclass
class _LPResult:
    status: str  # "optimal" | "unbounded"
    duals: list[Fraction]
    values: dict  # basic column key -> value
    ray: dict | None = None


def _maximize(b: Sequence[Fraction], fixed: Sequence[Column],
              generate: Callable[[list[Fraction]], Column | None]) -> _LPResult:
    """max c·y subject to A y <= b, y >= 0 with b >= 0, starting from slacks.

    ``fixed`` columns are always priced; ``generate(duals)`` returns the best
    column of an implicit family (or None).
    """
    m = len(b)
    one, zero = Fraction(1), Fraction(0)
    binv = [[one if i == j else zero for j in range(m)] for i in range(m)]
    xb = [Fraction(v) for v in b]
    basis: list[Hashable] = [("slack", i) for i in range(m)]
    costs: dict[Hashable, Fraction] = {("slack", i): zero for i in range(m)}
    while True:
        cb = [costs[k] for k in basis]
        duals = [sum((cb[i] * binv[i][j] for i in range(m) if cb[i]), zero) for j in range(m)]
        entering = None
        best = zero
        for k in range(m):
            if -duals[k] > best:
                best = -duals[k]
                entering = (("slack", k), [one if i == k else zero for i in range(m)], zero)
        candidates = list(fixed)
        extra = generate(duals)
        if extra is not None:
            candidates.append(extra)
        for key, col, cost in candidates:
            d = cost - sum((duals[i] * c for i, c in enumerate(col) if c), zero)
            if d > best:
                best = d
                entering = (key, col, cost)
        if entering is None:
            return _LPResult("optimal", duals, dict(zip(basis, xb)))
        key, col, cost = entering
        costs[key] = Fraction(cost)
        direction = [sum((binv[i][j] * c for j, c in enumerate(col) if c), zero) for i in range(m)]
        leave = None
        leave_key = None
        for i in range(m):
            if direction[i] > 0:
                lex = tuple([xb[i] / direction[i]] + [binv[i][j] / direction[i] for j in range(m)])
                if leave_key is None or lex < leave_key:
                    leave, leave_key = i, lex
        if leave is None:
            ray = {key: one}
            for i in range(m):
                if direction[i]:
                    ray[basis[i]] = ray.get(basis[i], zero) - direction[i]
            return _LPResult("unbounded", duals, dict(zip(basis, xb)), ray)
        piv = direction[leave]
        row = [v / piv for v in binv[leave]]
        binv[leave] = row
        xb[leave] = xb[leave] / piv
        for i in range(m):
            f = direction[i]
            if i != leave and f:
                binv[i] = [a - f * r for a, r in zip(binv[i], row)]
                xb[i] -= f * xb[leave]
        basis[leave] = key


def _subset_sums(weights: Sequence[Fraction], masks: Sequence[int]) -> list[Fraction]:
    return [sum((weights[b] for b in bits(m)), Fraction(0)) for m in masks]


def _pair_generator(game: SimpleGame, cost: Fraction, pad: int):
    """Best (X, Y) column for duals: argmin x(X) over W^m, argmax x(Y) over L^max."""
    wins, loses = game.min_winning, game.max_losing
    n = game.n

    def generate(duals):
        x = duals[:n]
        ws = _subset_sums(x, wins)
        ls = _subset_sums(x, loses)
        i = min(range(len(ws)), key=ws.__getitem__)
        j = max(range(len(ls)), key=ls.__getitem__)
        col = tuple(Fraction(c) for c in vector_of_pair(wins[i], loses[j], n)) + (Fraction(0),) * pad
        return (wins[i], loses[j]), col, cost

    return generate


def _row_generator(rows: Sequence[Sequence[Fraction]], cost: Fraction, pad: int):
    def generate(duals):
        best, best_i = None, None
        for i, r in enumerate(rows):
            d = cost - sum((duals[j] * c for j, c in enumerate(r) if c), Fraction(0))
            if best is None or d > best:
                best, best_i = d, i
        if best_i is None:
            return None
        return best_i, tuple(Fraction(c) for c in rows[best_i]) + (Fraction(0),) * pad, cost

    return generate


def _integerize(values: Sequence[Fraction]) -> list[int]:
    """Smallest positive integer multiple of a rational vector."""
    den = 1
    for v in values:
        den = den * Fraction(v).denominator // math.gcd(den, Fraction(v).denominator)
    ints = [int(Fraction(v) * den) for v in values]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints] if g > 1 else ints


# -- representations -------------------------------------------------------------

@dataclass(frozen=True)
class Representation:
    weights: tuple[Fraction, ...]
    quota: Fraction
    flavor: str = WEIGHTED

    def __post_init__(self):
        if self.flavor not in (WEIGHTED, ROUGH):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        object.__setattr__(self, "quota", Fraction(self.quota))

    def weight(self, mask: int) -> Fraction:
        return sum((self.weights[b] for b in bits(mask)), Fraction(0))

    def scaled(self, factor) -> "Representation":
        factor = Fraction(factor)
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return Representation(tuple(w * factor for w in self.weights), self.quota * factor, self.flavor)

    def __str__(self) -> str:
        return f"[{_fmt(self.quota)}; {', '.join(map(_fmt, self.weights))}] ({self.flavor})"


def _fmt(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def coalition_weights(n: int, weights: Sequence[Fraction]) -> tuple[np.ndarray, int]:
    """Integer weight of every coalition (scaled by a common denominator)."""
    if n > SWEEP_LIMIT:
        raise SizeCapError(f"full sweep limited to n <= {SWEEP_LIMIT}")
    den = 1
    for w in weights:
        den = den * w.denominator // math.gcd(den, w.denominator)
    ints = [int(w * den) for w in weights]
    dtype = np.int64 if max((abs(v) for v in ints), default=0) * max(n, 1) < 2 ** 62 else object
    table = np.zeros(1 << n, dtype=dtype)
    for i, w in enumerate(ints):
        view = table.reshape(-1, 2, 1 << i)
        view[:, 1, :] += w
    return table, den


def verify_representation(game: SimpleGame, rep: Representation) -> bool:
    """Full 2^n sweep of the threshold condition for the representation's flavor."""
    if len(rep.weights) != game.n:
        raise ValueError(f"{len(rep.weights)} weights for {game.n} players")
    if any(w < 0 for w in rep.weights):
        raise ValueError("negative weight in representation")
    table, den = coalition_weights(game.n, list(rep.weights))
    q = rep.quota * den
    win = game.winning_table
    if rep.flavor == WEIGHTED:
        return bool(np.array_equal(win, table >= q))
    if rep.quota == 0 and not any(rep.weights):
        return False
    return bool(not np.any(~win & (table > q)) and not np.any(win & (table < q)))


def repair_nonnegative(weights: Sequence, quota, flavor: str = WEIGHTED) -> Representation:
    """Reset negative weights to zero; the same quota keeps the verdict.

    Winning weights only grow, and a losing Y keeps the weight of Y minus its
    negative players, itself a losing coalition.
    """
    return Representation(tuple(max(Fraction(w), Fraction(0)) for w in weights), Fraction(quota), flavor)


# -- Farkas witnesses ------------------------------------------------------------

@dataclass(frozen=True)
class FarkasWitness:
    """sum r_i v_{X_i,Y_i} + u = 0 with X_i winning and Y_i losing.

    ``kind`` is "weighted" (u = 0: no weights) or "rough" (u >= 1 everywhere:
    no rough weights).  Terms keep their coalition pairs so a trading
    transform can be read off directly.
    """

    n: int
    terms: tuple[tuple[int, int, int], ...]
    u: tuple[int, ...]
    kind: str

    def __post_init__(self):
        merged = Counter()
        for x, y, r in self.terms:
            if r < 0:
                raise ValueError("multiplicities must be nonnegative")
            if r:
                merged[(x, y)] += r
        terms = tuple(sorted(((x, y, r) for (x, y), r in merged.items())))
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "u", tuple(int(v) for v in self.u))
        if tuple(self.residual()) != tuple(-v for v in self.u):
            raise InternalConsistencyError("sum r_i v_i + u != 0")
        if self.kind == WEIGHTED:
            if any(self.u) or sum(r for *_, r in terms) < 2:
                raise InternalConsistencyError("weighted witness needs u = 0 and sum r >= 2")
        elif self.kind == ROUGH:
            if any(v < 1 for v in self.u):
                raise InternalConsistencyError("rough witness needs u >= 1")
        else:
            raise ValueError(f"unknown witness kind {self.kind!r}")

    def residual(self) -> list[int]:
        total = [0] * self.n
        for x, y, r in self.terms:
            for b in bits(x & ~y):
                total[b] += r
            for b in bits(y & ~x):
                total[b] -= r
        return total

    @property
    def vectors(self) -> list[tuple[TernaryVector, int]]:
        return [(vector_of_pair(x, y, self.n), r) for x, y, r in self.terms]

    @property
    def size(self) -> int:
        return sum(r for *_, r in self.terms)

    def holds_for(self, game: SimpleGame) -> bool:
        return all(game.is_winning(x) and not game.is_winning(y) for x, y, _ in self.terms)


def _absorb(n: int, terms: Counter, u: list[int], floor: int) -> None:
    """Move unit vectors from u into member vectors with a -1 there (stays in I(G))."""
    for i in range(n):
        bit = 1 << i
        while u[i] > floor:
            donor = next((k for k in sorted(terms) if terms[k] and k[1] & bit and not k[0] & bit), None)
            if donor is None:
                raise InternalConsistencyError(f"cannot absorb e_{i + 1}")
            terms[donor] -= 1
            if not terms[donor]:
                del terms[donor]
            terms[(donor[0], donor[1] & ~bit)] += 1
            u[i] -= 1


def _witness_from(game: SimpleGame, ys: dict, kind: str) -> FarkasWitness:
    keys = sorted(k for k, v in ys.items() if v > 0)
    mult = _integerize([ys[k] for k in keys])
    terms = Counter({k: r for k, r in zip(keys, mult) if r})
    u = [0] * game.n
    for (x, y), r in terms.items():
        for i, c in enumerate(vector_of_pair(x, y, game.n)):
            u[i] -= r * c
    if any(v < 0 for v in u):
        raise InternalConsistencyError("extracted combination is not <= 0")
    if kind == WEIGHTED:
        _absorb(game.n, terms, u, 0)
    elif any(v < 1 for v in u):
        raise InternalConsistencyError("rough witness slack not positive")
    return FarkasWitness(game.n, tuple((x, y, r) for (x, y), r in terms.items()), tuple(u), kind)


# -- the two checks ------------------------------------------------------------------

@lru_cache(maxsize=None)
def check_weighted(game: SimpleGame) -> Union[Representation, FarkasWitness]:
    """Weighted representation [q; w] or a witness sum r_i v_i = 0."""
    if game.n > SWEEP_LIMIT:
        raise SizeCapError(f"check_weighted is limited to n <= {SWEEP_LIMIT}")
    n = game.n
    res = _maximize([Fraction(1)] * n, (), _pair_generator(game, Fraction(1), 0))
    if res.status == "unbounded":
        ys = {k: v for k, v in res.ray.items() if not (isinstance(k, tuple) and k[0] == "slack")}
        wit = _witness_from(game, ys, WEIGHTED)
        if not wit.holds_for(game):
            raise InternalConsistencyError("weighted witness uses wrong coalitions")
        return wit
    weights = [Fraction(v) for v in _integerize(res.duals)]
    quota = min(sum((weights[b] for b in bits(x)), Fraction(0)) for x in game.min_winning)
    rep = Representation(tuple(weights), quota, WEIGHTED)
    if not verify_representation(game, rep):
        raise InternalConsistencyError("LP weights failed the full sweep")
    return rep


@lru_cache(maxsize=None)
def check_rough(game: SimpleGame) -> Union[Representation, FarkasWitness]:
    """Rough representation or a witness sum r_i v_i + u = 0 with u >= 1."""
    if game.n > SWEEP_LIMIT:
        raise SizeCapError(f"check_rough is limited to n <= {SWEEP_LIMIT}")
    n = game.n
    one = Fraction(1)
    b = [Fraction(0)] * n + [one]
    t_col = ("t", (one,) * (n + 1), one)
    res = _maximize(b, (t_col,), _pair_generator(game, Fraction(0), 1))
    if res.status != "optimal":
        raise InternalConsistencyError("rough LP cannot be unbounded")
    if res.values.get("t", 0) > 0:
        # t* = 1 by homogeneity; a second pass with objective M·t - sum(y)
        # keeps t = 1 and returns the least total multiplicity
        mass = sum(v for k, v in res.values.items() if k != "t" and k[0] != "slack")
        t_col = ("t", (one,) * (n + 1), mass + 1)
        res = _maximize(b, (t_col,), _pair_generator(game, Fraction(-1), 1))
        if res.values.get("t", 0) != 1:
            raise InternalConsistencyError("minimum-mass pass lost feasibility")
        ys = {k: v for k, v in res.values.items() if k != "t" and not k[0] == "slack"}
        wit = _witness_from(game, ys, ROUGH)
        if not wit.holds_for(game):
            raise InternalConsistencyError("rough witness uses wrong coalitions")
        return wit
    weights = [Fraction(v) for v in _integerize(res.duals[:n])]
    lo = max(sum((weights[b] for b in bits(y)), Fraction(0)) for y in game.max_losing)
    hi = min(sum((weights[b] for b in bits(x)), Fraction(0)) for x in game.min_winning)
    if lo > hi:
        raise InternalConsistencyError("rough LP weights do not separate")
    rep = Representation(tuple(weights), (lo + hi) / 2, ROUGH)
    if not verify_representation(game, rep):
        raise InternalConsistencyError("rough LP weights failed the full sweep")
    return rep


def is_weighted(game: SimpleGame) -> bool:
    return isinstance(check_weighted(game), Representation)


def is_roughly_weighted(game: SimpleGame) -> bool:
    return isinstance(check_rough(game), Representation)


def normalize_witness(game: SimpleGame, wit: FarkasWitness) -> Certificate:
    """Absorb u down to the all-ones vector and append (P, ∅): a potent certificate."""
    if any(v < 1 for v in wit.u):
        raise ValueError("witness slack must be >= 1 in every coordinate")
    terms = Counter({(x, y): r for x, y, r in wit.terms})
    u = list(wit.u)
    _absorb(game.n, terms, u, 1)
    pairs = [(x, y) for (x, y), r in sorted(terms.items()) for _ in range(r)]
    cert = Certificate.from_pairs(game.n, pairs, potent=True)
    if not verify_certificate(game, cert):
        raise InternalConsistencyError("normalized witness is not a potent certificate")
    return cert


def witness_certificate(game: SimpleGame, wit: FarkasWitness) -> Certificate:
    """The certificate of non-weightedness read off a witness (weighted kind)."""
    if wit.kind == ROUGH:
        return normalize_witness(game, wit)
    pairs = [(x, y) for x, y, r in wit.terms for _ in range(r)]
    cert = Certificate.from_pairs(game.n, pairs)
    if not verify_certificate(game, cert):
        raise InternalConsistencyError("witness does not induce a certificate")
    return cert


# -- explicit row systems -----------------------------------------------------------

def solve_strict_system(rows: Sequence[Sequence]) -> tuple[str, list]:
    """x >= 0 with a·x >= 1 for every row, or r >= 0 (integers, not all 0) with sum r a <= 0."""
    rows = [tuple(Fraction(c) for c in r) for r in rows]
    if not rows:
        raise ValueError("empty system")
    n = len(rows[0])
    res = _maximize([Fraction(1)] * n, (), _row_generator(rows, Fraction(1), 0))
    if res.status == "optimal":
        return "solution", res.duals
    r = [Fraction(0)] * len(rows)
    for k, v in res.ray.items():
        if not (isinstance(k, tuple) and k[0] == "slack"):
            r[k] = v
    return "witness", _integerize(r)


def solve_homogeneous_system(rows: Sequence[Sequence]) -> tuple[str, list]:
    """Nonzero x >= 0 with a·x >= 0 for every row, or (r, u): sum r a + u = 0, u >= 1."""
    rows = [tuple(Fraction(c) for c in r) for r in rows]
    if not rows:
        raise ValueError("empty system")
    n = len(rows[0])
    one = Fraction(1)
    res = _maximize([Fraction(0)] * n + [one], [("t", (one,) * (n + 1), one)],
                    _row_generator(rows, Fraction(0), 1))
    if res.values.get("t", 0) > 0:
        r = [Fraction(0)] * len(rows)
        for k, v in res.values.items():
            if isinstance(k, int):
                r[k] = v
        ints = _integerize(r)
        u = [-sum(ri * row[j] for ri, row in zip(ints, rows)) for j in range(n)]
        scale = 1
        for v in u:
            scale = scale * Fraction(v).denominator // math.gcd(scale, Fraction(v).denominator)
        return "witness", ([ri * scale for ri in ints], [int(v * scale) for v in u])
    return "solution", res.duals[:n]


def elimination_witness(rows: Sequence[Sequence]) -> tuple[list[int], list[int]] | None:
    """Inductive elimination for A x >= 0 having only x = 0 as nonnegative solution.

    Returns integer multipliers r >= 0 and u >= 1 with sum r_i a_i + u = 0,
    or None when a nonzero x >= 0 exists.  Exponential; a cross-check only.
    """
    rows = [tuple(Fraction(c) for c in r) for r in rows]
    if not rows:
        return None
    r = _elim(rows)
    if r is None:
        return None
    ints = _integerize(r)
    n = len(rows[0])
    s = [sum(ri * row[j] for ri, row in zip(ints, rows)) for j in range(n)]
    den = 1
    for v in s:
        den = den * Fraction(v).denominator // math.gcd(den, Fraction(v).denominator)
    ints = [ri * den for ri in ints]
    u = [int(-v * den) for v in s]
    if any(v < 1 for v in u):
        raise InternalConsistencyError("elimination produced nonpositive slack")
    return ints, u


def _combo(r: Sequence[Fraction], rows: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    n = len(rows[0])
    return [sum((ri * row[j] for ri, row in zip(r, rows) if ri), Fraction(0)) for j in range(n)]


def _elim(rows: list[tuple[Fraction, ...]]) -> list[Fraction] | None:
    """Multipliers with sum r_i a_i < 0 in every coordinate, or None."""
    n = len(rows[0])
    m = len(rows)
    if n == 1:
        for i, row in enumerate(rows):
            if row[0] < 0:
                return [Fraction(int(k == i)) for k in range(m)]
        return None
    for j in range(n):
        col = [row[j] for row in rows]
        if all(c <= 0 for c in col):
            if all(c == 0 for c in col):
                return None  # x = e_j
            reduced = [row[:j] + row[j + 1:] for row in rows]
            sub = _elim(reduced)
            if sub is None:
                return None
            total = _combo(sub, rows)
            if total[j] < 0:
                return sub
            i = next(k for k, c in enumerate(col) if c < 0)
            # add row i once; scale the rest so the other coordinates stay negative
            big = max([Fraction(1)] + [rows[i][k] / -total[k] + 1 for k in range(n) if k != j])
            return [big * s + (1 if k == i else 0) for k, s in enumerate(sub)]
    first = _eliminate_variable(rows, 0)
    if first is None:
        return None
    second = _eliminate_variable(rows, 1)
    if second is None:
        return None
    return [a + b for a, b in zip(first, second)]


def _eliminate_variable(rows: list[tuple[Fraction, ...]], j: int) -> list[Fraction] | None:
    """Fourier-Motzkin step on x_j; result is < 0 off coordinate j and <= 0 on it."""
    pos = [i for i, row in enumerate(rows) if row[j] > 0]
    neg = [i for i, row in enumerate(rows) if row[j] < 0]
    zero = [i for i, row in enumerate(rows) if row[j] == 0]
    if not neg:
        return None  # x = e_j

    def drop(row):
        return row[:j] + row[j + 1:]

    derived: list[tuple[Fraction, ...]] = []
    origin: list[dict[int, Fraction]] = []
    for p in pos:
        for q in neg:
            a, b = 1 / rows[p][j], 1 / -rows[q][j]
            derived.append(tuple(a * x + b * y for x, y in zip(drop(rows[p]), drop(rows[q]))))
            origin.append({p: a, q: b})
    for q in neg:
        b = 1 / -rows[q][j]
        derived.append(tuple(b * y for y in drop(rows[q])))
        origin.append({q: b})
    for z in zero:
        derived.append(drop(rows[z]))
        origin.append({z: Fraction(1)})
    sub = _elim(derived)
    if sub is None:
        return None
    r = [Fraction(0)] * len(rows)
    for coef, src in zip(sub, origin):
        for i, f in src.items():
            r[i] += coef * f
    return r


# -- text formats --------------------------------------------------------------------

def format_representation(rep: Representation) -> str:
    return (f"flavor: {rep.flavor}\nquota: {_fmt(rep.quota)}\n"
            f"weights: {' '.join(_fmt(w) for w in rep.weights)}\n")


_INLINE_RE = re.compile(r"^\s*\[\s*([^;\]]+)\s*;\s*([^\]]*)\]\s*(\w+)?\s*$")


def parse_representation(text: str, flavor: str | None = None) -> Representation:
    """Parse the keyed format or the inline ``[q; w1 w2 ...] flavor`` form."""
    mt = _INLINE_RE.match(text.strip()) if "\n" not in text.strip() else None
    try:
        if mt:
            quota = Fraction(mt.group(1).strip())
            weights = tuple(Fraction(w) for w in re.split(r"[,\s]+", mt.group(2).strip()) if w)
            found = mt.group(3)
        else:
            fields = {}
            for lineno, raw in enumerate(text.splitlines(), start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if ":" not in line:
                    raise ParseError(f"unrecognized line {line!r}", lineno)
                key, val = (s.strip() for s in line.split(":", 1))
                fields[key] = (val, lineno)
            if "quota" not in fields or "weights" not in fields:
                raise ParseError("representation needs 'quota:' and 'weights:' lines", 1)
            quota = Fraction(fields["quota"][0])
            weights = tuple(Fraction(w) for w in fields["weights"][0].split())
            found = fields.get("flavor", (None,))[0]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), 1)
    if found is not None and found not in (WEIGHTED, ROUGH):
        raise ParseError(f"unknown flavor {found!r}", 1)
    if found is not None and flavor is not None and found != flavor:
        raise FlavorMismatchError(f"representation is {found}, requested {flavor}")
    return Representation(weights, quota, found or flavor or WEIGHTED)


class FlavorMismatchError(GameError):
    pass


def format_witness(wit: FarkasWitness) -> str:
    lines = [f"kind: {wit.kind}", f"players: {wit.n}"]
    for x, y, r in wit.terms:
        v = " ".join(map(str, vector_of_pair(x, y, wit.n)))
        lines.append(f"v: {v} ^{r} from {format_coalition(x)} {format_coalition(y)}")
    lines.append("u: " + " ".join(map(str, wit.u)))
    return "\n".join(lines) + "\n"


def parse_witness(text: str) -> FarkasWitness:
    kind = n = u = None
    terms = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, val = (s.strip() for s in line.partition(":"))
        if key == "kind":
            kind = val
        elif key == "players":
            n = int(val)
        elif key == "u":
            u = tuple(int(v) for v in val.split())
        elif key == "v":
            mt = re.match(r"([-\d\s]+)\^(\d+)\s+from\s+(\{[^}]*\})\s+(\{[^}]*\})$", val)
            if not mt or n is None:
                raise ParseError(f"bad term {val!r}", lineno)
            x, _ = parse_coalition_token(mt.group(3), n, lineno)
            y, _ = parse_coalition_token(mt.group(4), n, lineno)
            if tuple(int(c) for c in mt.group(1).split()) != vector_of_pair(x, y, n):
                raise ParseError("vector does not match its coalition pair", lineno)
            terms.append((x, y, int(mt.group(2))))
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if kind is None or n is None or u is None:
        raise ParseError("witness needs kind:, players: and u: lines", 1)
    return FarkasWitness(n, tuple(terms), u, kind)
