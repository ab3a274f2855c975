"""
Brute-force path counts: the ground truth every generating function is checked against.

A path is a sequence of unit up/down steps between the floor 0 and the
ceiling k. An up-step from height j adds j plaquettes to the area statistic A,
a down-step from j adds j - 1 (total area under the path minus l/2). A
touchdown is a down-step that lands on 0.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from dyckgen.algebra import LSeries
from dyckgen.config import load_guards
from dyckgen.constants import METHOD_ORACLE
from dyckgen.errors import GuardExceeded, SpecOutOfRange, Unreachable
from dyckgen.genfun import GenFun, GenSpec, prefactor
from dyckgen.touchdown import TouchdownSeries

logger = logging.getLogger(__name__)

Row = Tuple[int, ...]


def _ceiling(k: Optional[int], m: int, n: int, l_max: int) -> int:
    top = max(m, n) + l_max if k is None else k
    for name, height in (("m", m), ("n", n)):
        if not 0 <= height <= top:
            raise SpecOutOfRange(f"{name}={height} is outside [0, {top}]")
    if l_max < 0:
        raise SpecOutOfRange(f"l_max must be >= 0, got {l_max}")
    return top


@dataclass
class PathTable:
    """
    counts[l, A, s] is the number of paths from m to n with l steps, area A
    (plaquettes) and s touchdowns. k is None for unbounded paths.
    """
    k: Optional[int]
    m: int
    n: int
    l_max: int
    counts: np.ndarray

    @property
    def ceiling(self) -> int:
        return _ceiling(self.k, self.m, self.n, self.l_max)

    def count(self, l: int, A: int, s: Optional[int] = None) -> int:
        if l > self.l_max or l < 0 or A < 0 or A >= self.counts.shape[1]:
            return 0
        if s is None:
            return int(sum(self.counts[l, A, :]))
        if s < 0 or s >= self.counts.shape[2]:
            return 0
        return int(self.counts[l, A, s])

    def rows(self, touchdowns: bool = True) -> List[Row]:
        """Nonzero entries as (l, A, s, count), or (l, A, count) summed over s."""
        out = []
        for l in range(self.counts.shape[0]):
            for A in range(self.counts.shape[1]):
                if touchdowns:
                    for s in range(self.counts.shape[2]):
                        if self.counts[l, A, s]:
                            out.append((l, A, s, int(self.counts[l, A, s])))
                else:
                    total = int(sum(self.counts[l, A, :]))
                    if total:
                        out.append((l, A, total))
        return out

    def totals(self) -> List[int]:
        """Number of paths of each length l = 0..l_max (theta = t = 1)."""
        return [int(sum(self.counts[l].flat)) for l in range(self.l_max + 1)]

    def max_area(self, l: int) -> Optional[int]:
        areas = [A for A in range(self.counts.shape[1]) if any(self.counts[l, A, :])]
        return max(areas) if areas else None

    def to_terms(self) -> List[Row]:
        return self.rows(touchdowns=True)

    @classmethod
    def from_terms(cls, k: Optional[int], m: int, n: int, l_max: int, rows: Iterable[Row]) -> "PathTable":
        """Inverse of `to_terms`; rows are (l, A, s, count)."""
        rows = list(rows)
        a_dim = max((r[1] for r in rows), default=0) + 1
        s_dim = max((r[2] for r in rows), default=0) + 1
        counts = np.zeros((l_max + 1, a_dim, s_dim), dtype=object)
        for l, A, s, count in rows:
            counts[l, A, s] += int(count)
        return cls(k, m, n, l_max, counts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PathTable):
            return NotImplemented
        return (self.k, self.m, self.n, self.l_max) == (other.k, other.m, other.n, other.l_max) \
            and self.to_terms() == other.to_terms()


def enumerate_paths(k: Optional[int], m: int, n: int, l_max: int) -> PathTable:
    """
    Forward dynamic programming over (height, A, s), one layer per step.

    Parameters:
    k (int or None): Ceiling; None for unbounded paths.
    m (int): Start height.
    n (int): End height.
    l_max (int): Longest path length tabulated.

    Returns:
    PathTable: exact counts for every l <= l_max.
    """
    ceiling = _ceiling(k, m, n, l_max)
    guards = load_guards()
    guards.enforce("l_max", l_max, guards.oracle_max_len, GuardExceeded)

    found: Dict[Tuple[int, int, int], int] = {}
    layer: Dict[Tuple[int, int, int], int] = {(m, 0, 0): 1}
    for l in range(l_max + 1):
        for (h, A, s), c in layer.items():
            if h == n:
                found[(l, A, s)] = found.get((l, A, s), 0) + c
        if l == l_max:
            break
        nxt: Dict[Tuple[int, int, int], int] = {}
        for (h, A, s), c in layer.items():
            if h < ceiling:
                key = (h + 1, A + h, s)
                nxt[key] = nxt.get(key, 0) + c
            if h > 0:
                key = (h - 1, A + h - 1, s + (h == 1))
                nxt[key] = nxt.get(key, 0) + c
        layer = nxt
    logger.debug(f"enumerate_paths: k={k}, m={m}, n={n}, l_max={l_max}, {len(found)} cells")
    return PathTable.from_terms(k, m, n, l_max, [key + (c,) for key, c in sorted(found.items())])


def max_area(k: Optional[int], m: int, n: int, l: int) -> int:
    """Largest area (plaquettes) over all paths of exactly l steps from m to n."""
    ceiling = _ceiling(k, m, n, l)
    best: List[Optional[int]] = [None] * (ceiling + 1)
    best[m] = 0
    for _ in range(l):
        nxt: List[Optional[int]] = [None] * (ceiling + 1)
        for h, A in enumerate(best):
            if A is None:
                continue
            if h < ceiling and (nxt[h + 1] is None or A + h > nxt[h + 1]):
                nxt[h + 1] = A + h
            if h > 0 and (nxt[h - 1] is None or A + h - 1 > nxt[h - 1]):
                nxt[h - 1] = A + h - 1
        best = nxt
    if best[n] is None:
        raise Unreachable(f"No path of {l} steps from {m} to {n} under ceiling {ceiling}")
    return best[n]


def genfun_from_table(table: PathTable, touchdowns: bool = False) -> Union[GenFun, TouchdownSeries]:
    """Package the counts as a series for comparison with genfun / tilde_genfun."""
    spec = GenSpec(table.k, table.m, table.n, table.l_max)
    rows = table.to_terms()
    if touchdowns:
        terms = {}
        for l, A, s, c in rows:
            terms[(l, A, s)] = terms.get((l, A, s), 0) + c
        return TouchdownSeries(spec, LSeries.from_touchdown_terms(terms, order=table.l_max), METHOD_ORACLE)
    terms = {}
    for l, A, s, c in rows:
        terms[(l, A)] = terms.get((l, A), 0) + c
    return GenFun(spec, LSeries.from_terms(terms, order=table.l_max), prefactor(table.m, table.n), METHOD_ORACLE)
