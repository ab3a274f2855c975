"""
Exact checks of the reflection duality and the recursion relations between
meander generating functions.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from dyckgen.algebra import LSeries
from dyckgen.errors import SpecOutOfRange
from dyckgen.genfun import GenSpec, genfun, genfun_excursion

logger = logging.getLogger(__name__)


@dataclass
class IdentityResult:
    name: str
    params: Dict[str, object]
    passed: bool
    mismatch: Optional[str] = None

    def to_dict(self) -> dict:
        return {"identity": self.name, "params": self.params, "passed": self.passed, "mismatch": self.mismatch}


def compare_series(name: str, params: Dict[str, object], left: LSeries, right: LSeries) -> IdentityResult:
    diff = left.first_difference(right)
    if diff is None:
        return IdentityResult(name, params, True)
    l, lhs, rhs = diff
    mismatch = f"zeta^{l}: {lhs} != {rhs}"
    logger.warning(f"{name} {params} fails at {mismatch}")
    return IdentityResult(name, params, False, mismatch)


def duality_result(spec: GenSpec) -> IdentityResult:
    """G_{k,mn}(zeta, theta) against G_{k;k-m,k-n}(zeta theta^(k-1), theta^-1)."""
    left = genfun(spec).series
    right = genfun(spec.dual()).series.invert().substitute_scale(spec.k - 1)
    return compare_series("duality", {"k": spec.k, "m": spec.m, "n": spec.n, "L": spec.L}, left, right)


def check_duality(spec: GenSpec) -> bool:
    if spec.unbounded:
        raise SpecOutOfRange("The reflection dual needs a finite ceiling")
    return duality_result(spec).passed


@dataclass
class RecursionReport:
    spec: GenSpec
    results: List[IdentityResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[IdentityResult]:
        return [r for r in self.results if not r.passed]

    def __bool__(self) -> bool:
        return self.passed


def _G(k: int, m: int, n: int, L: int) -> LSeries:
    return genfun(GenSpec(k, m, n, L)).series


def _Gk(k: int, L: int, scale: int = 0) -> LSeries:
    return genfun_excursion(k, L).series.substitute_scale(scale)


def check_recursions(spec: GenSpec) -> RecursionReport:
    """
    Verify, to order L, every recursion applicable to (k, m, n):

      last-step:     G_{k,mn} = zeta theta^(n-1) G_{k;m,n-1} G_{k-n}(zeta theta^n)       (m < n)
      intermediate:  G_{k,mn} = zeta theta^l G_{k;l+1,n} G_{l;m,l}                      (m <= l < n)
      three-term:    G_{k,mn} = zeta theta^(n-1) G_{k;m,n-1} + zeta theta^n G_{k;m,n+1}  (m < n < k)
      first-passage: G_k = 1 + zeta^2 G_{k-1}(zeta theta) G_k                          (k >= 1)
    """
    ordered = spec.ordered().bounded()
    k, m, n, L = ordered.k, ordered.m, ordered.n, ordered.L
    report = RecursionReport(spec)
    target = _G(k, m, n, L)
    params = {"k": k, "m": m, "n": n, "L": L}

    if m < n:
        right = (_G(k, m, n - 1, L) * _Gk(k - n, L, scale=n)).times_monomial(1, n - 1)
        report.results.append(compare_series("last-step", params, target, right))
        for level in range(m, n):
            right = (_G(k, level + 1, n, L) * _G(level, m, level, L)).times_monomial(1, level)
            report.results.append(compare_series("intermediate", dict(params, level=level), target, right))
    if m < n < k:
        right = _G(k, m, n - 1, L).times_monomial(1, n - 1) + _G(k, m, n + 1, L).times_monomial(1, n)
        report.results.append(compare_series("three-term", params, target, right))
    if k >= 1:
        Gk = _Gk(k, L)
        right = 1 + (_Gk(k - 1, L, scale=1) * Gk).times_monomial(2, 0)
        report.results.append(compare_series("first-passage", {"k": k, "L": L}, Gk, right))
    return report
