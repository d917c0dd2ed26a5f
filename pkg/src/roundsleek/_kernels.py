"""Hot loops of the grid brute-force oracle.

Numba-compiled when available; set ``ROUNDSLEEK_PURE_NUMPY=1`` to force
the vectorised numpy versions (they return identical arrays).
"""
from __future__ import annotations

import os

import numpy as np

PURE_NUMPY = os.environ.get("ROUNDSLEEK_PURE_NUMPY", "") not in ("", "0")

try:  # pragma: no cover - depends on the environment
    if PURE_NUMPY:
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False


def _members_numpy(values, lo, hi, lo_closed, hi_closed, lo_inf, hi_inf):
    out = np.zeros(values.shape[0], dtype=np.bool_)
    for i in range(lo.shape[0]):
        above = lo_inf[i] | (values > lo[i]) | (lo_closed[i] & (values == lo[i]))
        below = hi_inf[i] | (values < hi[i]) | (hi_closed[i] & (values == hi[i]))
        out |= above & below
    return out


def _scan_numpy(samples, in_x, gap_in_x, delta):
    """Per sample: does X meet ``(s - delta, s)`` / ``(s, s + delta)``, and does X have points left / right.

    Gap ``j`` is the open stretch between samples ``j`` and ``j + 1``;
    ``gap_in_x[j]`` says whether X contains it.
    """
    n = samples.shape[0]
    idx = np.arange(n)
    first = np.searchsorted(samples, samples - delta, side="right")
    last = np.searchsorted(samples, samples + delta, side="left") - 1
    cs = np.concatenate(([0], np.cumsum(in_x, dtype=np.int64)))
    cg = np.concatenate(([0], np.cumsum(gap_in_x, dtype=np.int64)))
    left = (cs[idx] - cs[first]) + (cg[idx] - cg[np.maximum(first - 1, 0)])
    right = (cs[last + 1] - cs[idx + 1]) + (cg[np.minimum(last, n - 2) + 1] - cg[idx])
    any_left = (cs[idx] + cg[idx]) > 0
    any_right = ((cs[n] - cs[idx + 1]) + (cg[n - 1] - cg[idx])) > 0
    return left > 0, right > 0, any_left, any_right


if HAVE_NUMBA:

    @njit(cache=True)
    def _members_numba(values, lo, hi, lo_closed, hi_closed, lo_inf, hi_inf):
        out = np.zeros(values.shape[0], dtype=np.bool_)
        for j in range(values.shape[0]):
            v = values[j]
            for i in range(lo.shape[0]):
                if not lo_inf[i] and (v < lo[i] or (v == lo[i] and not lo_closed[i])):
                    continue
                if not hi_inf[i] and (v > hi[i] or (v == hi[i] and not hi_closed[i])):
                    continue
                out[j] = True
                break
        return out

    @njit(cache=True)
    def _scan_numba(samples, in_x, gap_in_x, delta):
        n = samples.shape[0]
        near_left = np.zeros(n, dtype=np.bool_)
        near_right = np.zeros(n, dtype=np.bool_)
        any_left = np.zeros(n, dtype=np.bool_)
        any_right = np.zeros(n, dtype=np.bool_)
        seen = False
        for i in range(n):
            any_left[i] = seen
            if in_x[i] or (i < n - 1 and gap_in_x[i]):
                seen = True
        seen = False
        for i in range(n - 1, -1, -1):
            any_right[i] = seen
            if in_x[i] or (i > 0 and gap_in_x[i - 1]):
                seen = True
        for i in range(n):
            s = samples[i]
            j = i - 1
            while j >= 0:
                # gap j sits in (samples[j], samples[j+1]) and reaches into (s - delta, s)
                if gap_in_x[j] and samples[j + 1] > s - delta:
                    near_left[i] = True
                    break
                if samples[j] <= s - delta:
                    break
                if in_x[j]:
                    near_left[i] = True
                    break
                j -= 1
            j = i
            while j < n - 1:
                if gap_in_x[j] and samples[j] < s + delta:
                    near_right[i] = True
                    break
                if samples[j + 1] >= s + delta:
                    break
                if in_x[j + 1]:
                    near_right[i] = True
                    break
                j += 1
        return near_left, near_right, any_left, any_right


def members(values, lo, hi, lo_closed, hi_closed, lo_inf, hi_inf):
    if HAVE_NUMBA and not PURE_NUMPY:
        return _members_numba(values, lo, hi, lo_closed, hi_closed, lo_inf, hi_inf)
    return _members_numpy(values, lo, hi, lo_closed, hi_closed, lo_inf, hi_inf)


def scan(samples, in_x, gap_in_x, delta):
    if HAVE_NUMBA and not PURE_NUMPY:
        return _scan_numba(samples, in_x, gap_in_x, np.int64(delta))
    return _scan_numpy(samples, in_x, gap_in_x, delta)
