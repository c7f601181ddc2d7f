"""Independent brute-force oracles used only by the tests."""

from __future__ import annotations

import itertools

import numpy as np

from simplegames.game_core import SimpleGame


def ideal_vectors(game: SimpleGame) -> np.ndarray:
    """Every distinct chi(X) - chi(Y), X winning, Y losing, by direct enumeration."""
    n = game.n
    chars = np.array([[(x >> i) & 1 for i in range(n)] for x in range(1 << n)], dtype=np.int64)
    win = np.array([game.is_winning(x) for x in range(1 << n)])
    diffs = chars[win][:, None, :] - chars[~win][None, :, :]
    return np.unique(diffs.reshape(-1, n), axis=0)


def shortest_sum(game: SimpleGame, potent: bool, max_pairs: int, chunk: int = 4096) -> int | None:
    """Least j >= 1 with j members of I(G) summing to 0 (or to -1 when potent).

    Layered breadth-first search over partial sums, keeping only sums that can
    still reach the target in the remaining steps (per coordinate, and by
    coordinate total). Returns the certificate length (j, or j + 1 counting
    (P, ∅)) or None if none up to max_pairs.
    """
    n = game.n
    vecs = ideal_vectors(game)
    sums = vecs.sum(axis=1)
    lo_step, hi_step = int(sums.min()), int(sums.max())
    target = np.full(n, -1 if potent else 0, dtype=np.int64)
    t_sum = int(target.sum())
    base = 2 * max_pairs + 3
    off = max_pairs + 1
    weights = base ** np.arange(n, dtype=np.int64)
    states = np.zeros((1, n), dtype=np.int64)
    for j in range(1, max_pairs + 1):
        rem = max_pairs - j
        codes = []
        for start in range(0, len(states), chunk):
            cand = (states[start:start + chunk, None, :] + vecs[None, :, :]).reshape(-1, n)
            tot = cand.sum(axis=1)
            keep = np.all(np.abs(cand - target) <= rem, axis=1)
            keep &= (tot + rem * lo_step <= t_sum) & (tot + rem * hi_step >= t_sum)
            codes.append(np.unique((cand[keep] + off) @ weights))
        codes = np.unique(np.concatenate(codes))
        if not len(codes):
            return None
        states = _decode(codes, n, base, off)
        if np.any(np.all(states == target, axis=1)):
            return j + (1 if potent else 0)
    return None


def _decode(codes: np.ndarray, n: int, base: int, off: int) -> np.ndarray:
    out = np.empty((len(codes), n), dtype=np.int64)
    rest = codes.copy()
    for i in range(n):
        out[:, i] = rest % base - off
        rest //= base
    return out


def brute_weighted(game: SimpleGame, max_weight: int = 6) -> bool:
    """Search small integer weights directly (complete for n <= 4)."""
    n = game.n
    masks = range(1 << n)
    win = [game.is_winning(x) for x in masks]
    for w in itertools.product(range(max_weight + 1), repeat=n):
        tot = [sum(w[i] for i in range(n) if x >> i & 1) for x in masks]
        lo = max((t for t, v in zip(tot, win) if not v), default=-1)
        hi = min(t for t, v in zip(tot, win) if v)
        if lo < hi:
            return True
    return False
