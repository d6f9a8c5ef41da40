"""NumPy fallback for the all-pairs intersection kernel."""

from __future__ import annotations

import numpy as np

_BLOCK = 1024


def _same_line_overlap(key, lo, hi) -> np.ndarray:
    out = []
    n = len(key)
    for start in range(0, n, _BLOCK):
        rows = np.arange(start, min(n, start + _BLOCK))
        hit = (
            (key[rows, None] == key[None, :])
            & (lo[rows, None] <= hi[None, :])
            & (lo[None, :] <= hi[rows, None])
            & (rows[:, None] < np.arange(n)[None, :])
        )
        i, j = np.nonzero(hit)
        out.append(np.stack([rows[i], j], axis=1))
    return np.concatenate(out) if out else np.zeros((0, 2), dtype=np.int64)


def naive_pairs(vy, vlo, vhi, ex, elo, ehi):
    """Index pairs (bar, bar), (edge, edge) and (edge, bar) that intersect."""
    vy, vlo, vhi, ex, elo, ehi = (np.asarray(a, dtype=np.int64) for a in (vy, vlo, vhi, ex, elo, ehi))
    vv = _same_line_overlap(vy, vlo, vhi)
    # open intervals with integer ends overlap iff the doubled, shrunken closed ones do
    ee = _same_line_overlap(ex, 2 * elo + 1, 2 * ehi - 1)
    out = []
    for start in range(0, len(ex), _BLOCK):
        rows = np.arange(start, min(len(ex), start + _BLOCK))
        hit = (
            (elo[rows, None] < vy[None, :])
            & (vy[None, :] < ehi[rows, None])
            & (vlo[None, :] <= ex[rows, None])
            & (ex[rows, None] <= vhi[None, :])
        )
        i, j = np.nonzero(hit)
        out.append(np.stack([rows[i], j], axis=1))
    ve = np.concatenate(out) if out else np.zeros((0, 2), dtype=np.int64)
    return vv.astype(np.int64), ee.astype(np.int64), ve.astype(np.int64)
