"""Reachability over the cover digraph of P(n) restricted to an interval.

A saturated path from ``lo`` to ``hi`` adds one element of ``hi - lo`` at a
time. Both kernels return a table indexed by the full mask:

* ``co_reach``: entry m is set iff m is not blocked and some saturated path
  from m to ``hi`` avoids ``blocked``.
* ``forward_reach``: entry m is set iff m is not blocked and some saturated
  path from ``lo`` to m avoids ``blocked``.

Small grounds use a pure-Python bytearray sweep; from ``NUMPY_MIN_GROUND``
on, a level-by-level numpy sweep does the same work in O(n * 2^n) vector ops.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .lattice_core import elements

NUMPY_MIN_GROUND = 13


def _check_interval(lo, hi):
    if lo & hi != lo:
        raise ValueError(f"interval bounds {lo:#x}, {hi:#x} are not nested")


def co_reach(n, blocked, lo, hi, backend=None):
    _check_interval(lo, hi)
    if _pick(n, backend) == "numpy":
        return _co_reach_numpy(n, blocked, lo, hi)
    return _co_reach_python(n, blocked, lo, hi)


def forward_reach(n, blocked, lo, hi, backend=None):
    _check_interval(lo, hi)
    if _pick(n, backend) == "numpy":
        return _forward_reach_numpy(n, blocked, lo, hi)
    return _forward_reach_python(n, blocked, lo, hi)


def walk_up(table, lo, hi):
    """Elements added along the path lo -> hi taking the smallest usable element each step.

    ``table`` must be a ``co_reach`` table with ``table[lo]`` set.
    """
    path = []
    m = lo
    while m != hi:
        for e in elements(hi & ~m):
            if table[m | (1 << e)]:
                path.append(e)
                m |= 1 << e
                break
        else:
            raise AssertionError("walk_up called from a dead position")
    return path


def _pick(n, backend):
    if backend is None:
        return "numpy" if n >= NUMPY_MIN_GROUND else "python"
    if backend not in ("python", "numpy"):
        raise ValueError(f"unknown backend {backend!r}")
    return backend


def _co_reach_python(n, blocked, lo, hi):
    table = bytearray(1 << n)
    free = hi & ~lo
    bits = [1 << e for e in elements(free)]
    sub = free
    # descending submasks: supersets are finished before their subsets
    while True:
        m = lo | sub
        if m not in blocked:
            if m == hi:
                table[m] = 1
            else:
                for b in bits:
                    if not m & b and table[m | b]:
                        table[m] = 1
                        break
        if not sub:
            break
        sub = (sub - 1) & free
    return table


def _forward_reach_python(n, blocked, lo, hi):
    table = bytearray(1 << n)
    free = hi & ~lo
    bits = [1 << e for e in elements(free)]
    sub = 0
    while True:
        m = lo | sub
        if m not in blocked:
            if m == lo:
                table[m] = 1
            else:
                for b in bits:
                    if m & b and table[m ^ b]:
                        table[m] = 1
                        break
        if sub == free:
            break
        sub = (sub - free) & free
    return table


@lru_cache(maxsize=2)
def _levels(n):
    dtype = np.int32 if n < 31 else np.int64
    masks = np.arange(1 << n, dtype=dtype)
    counts = np.bitwise_count(masks)
    return tuple(masks[counts == k] for k in range(n + 1))


def _allowed(n, blocked):
    allowed = np.ones(1 << n, dtype=bool)
    if blocked:
        allowed[np.fromiter(blocked, dtype=np.int64, count=len(blocked))] = False
    return allowed


def _in_interval(idx, lo, hi):
    return idx[((idx & lo) == lo) & ((idx | hi) == hi)]


def _co_reach_numpy(n, blocked, lo, hi):
    allowed = _allowed(n, blocked)
    table = np.zeros(1 << n, dtype=bool)
    table[hi] = allowed[hi]
    bits = [1 << e for e in elements(hi & ~lo)]
    levels = _levels(n)
    for k in range(hi.bit_count() - 1, lo.bit_count() - 1, -1):
        idx = _in_interval(levels[k], lo, hi)
        acc = np.zeros(idx.shape, dtype=bool)
        for b in bits:
            acc |= ((idx & b) == 0) & table[idx | b]
        table[idx] = acc & allowed[idx]
    return table


def _forward_reach_numpy(n, blocked, lo, hi):
    allowed = _allowed(n, blocked)
    table = np.zeros(1 << n, dtype=bool)
    table[lo] = allowed[lo]
    bits = [1 << e for e in elements(hi & ~lo)]
    levels = _levels(n)
    for k in range(lo.bit_count() + 1, hi.bit_count() + 1):
        idx = _in_interval(levels[k], lo, hi)
        acc = np.zeros(idx.shape, dtype=bool)
        for b in bits:
            acc |= ((idx & b) != 0) & table[idx & ~b]
        table[idx] = acc & allowed[idx]
    return table
