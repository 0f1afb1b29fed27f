"""Exhaustive census of all families over P(n) for tiny n.

Family number ``i`` (0 <= i < 2^(2^n)) contains mask m iff bit m of i is set,
and families are visited in that numeric order.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .cutset_analysis import (
    contains_maximal_antichain,
    is_cutset,
    is_nontrivial,
    sole_meeting_members,
)
from .errors import CapacityError, UsageError
from .lattice_core import Family

MAX_SURVEY_GROUND = 4

log = logging.getLogger(__name__)


@dataclass
class SurveyReport:
    n: int
    families_examined: int = 0
    cutsets: int = 0
    nontrivial_cutsets: int = 0
    minimal_cutsets: int = 0
    minimal_nontrivial_cutsets: int = 0
    dsw_checked: int = 0
    dsw_failures: list = field(default_factory=list)
    minimal_only: bool = False
    elapsed: float = 0.0

    def merge(self, other: SurveyReport) -> SurveyReport:
        if other.n != self.n or other.minimal_only != self.minimal_only:
            raise UsageError("cannot merge reports of different surveys")
        return SurveyReport(
            n=self.n,
            families_examined=self.families_examined + other.families_examined,
            cutsets=self.cutsets + other.cutsets,
            nontrivial_cutsets=self.nontrivial_cutsets + other.nontrivial_cutsets,
            minimal_cutsets=self.minimal_cutsets + other.minimal_cutsets,
            minimal_nontrivial_cutsets=self.minimal_nontrivial_cutsets + other.minimal_nontrivial_cutsets,
            dsw_checked=self.dsw_checked + other.dsw_checked,
            dsw_failures=self.dsw_failures + other.dsw_failures,
            minimal_only=self.minimal_only,
            elapsed=self.elapsed + other.elapsed,
        )

    def counts(self) -> dict:
        """The deterministic part of the report (everything except timing)."""
        return {
            "n": self.n,
            "families_examined": self.families_examined,
            "cutsets": self.cutsets,
            "nontrivial_cutsets": self.nontrivial_cutsets,
            "minimal_cutsets": self.minimal_cutsets,
            "minimal_nontrivial_cutsets": self.minimal_nontrivial_cutsets,
            "dsw_checked": self.dsw_checked,
            "dsw_failures": len(self.dsw_failures),
            "minimal_only": self.minimal_only,
        }


def family_from_index(n: int, index: int) -> Family:
    members = []
    m = 0
    while index:
        if index & 1:
            members.append(m)
        index >>= 1
        m += 1
    return Family(n, tuple(members))


def family_count(n: int) -> int:
    _check(n)
    return 1 << (1 << n)


def _check(n):
    if not isinstance(n, int) or n < 0:
        raise UsageError(f"ground size must be a non-negative integer, got {n!r}")
    if n > MAX_SURVEY_GROUND:
        raise CapacityError("survey ground size", MAX_SURVEY_GROUND, n)


def census_range(n: int, start: int, stop: int, minimal_only: bool = False) -> SurveyReport:
    """Census of families with index in [start, stop).

    Every non-trivial cutset is checked for a maximal antichain; with
    ``minimal_only`` only the minimal non-trivial cutsets are (which suffices,
    since every cutset contains a minimal one).
    """
    _check(n)
    t0 = time.perf_counter()
    rep = SurveyReport(n=n, minimal_only=minimal_only)
    for index in range(start, stop):
        fam = family_from_index(n, index)
        rep.families_examined += 1
        if not is_cutset(fam):
            continue
        rep.cutsets += 1
        nontrivial = is_nontrivial(fam)
        minimal = len(sole_meeting_members(fam)) == len(fam)
        rep.nontrivial_cutsets += nontrivial
        rep.minimal_cutsets += minimal
        rep.minimal_nontrivial_cutsets += minimal and nontrivial
        if nontrivial and (minimal or not minimal_only):
            rep.dsw_checked += 1
            if contains_maximal_antichain(fam) is None:
                log.error("family %s is a cutset with no maximal antichain", fam)
                rep.dsw_failures.append(fam)
    rep.elapsed = time.perf_counter() - t0
    return rep


def census(n: int, minimal_only: bool = False, workers: int = 1, chunks: int = 16) -> SurveyReport:
    """Classify every family over P(n); see :func:`census_range`."""
    total = family_count(n)
    t0 = time.perf_counter()
    if workers <= 1 or total < chunks:
        rep = census_range(n, 0, total, minimal_only)
    else:
        step = -(-total // chunks)
        bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(census_range, [n] * len(bounds), [lo for lo, _ in bounds],
                                  [hi for _, hi in bounds], [minimal_only] * len(bounds)))
        rep = parts[0]
        for part in parts[1:]:
            rep = rep.merge(part)
    rep.elapsed = time.perf_counter() - t0
    if rep.dsw_failures:
        log.error("%d cutsets over P(%d) contain no maximal antichain", len(rep.dsw_failures), n)
    return rep


def dsw_check(n: int) -> bool:
    """True iff every non-trivial cutset of P(n) contains a maximal antichain."""
    return not census(n).dsw_failures
