"""
Meander generating functions G_{k,mn}(zeta, theta).

G_{k,mn} counts paths of unit up/down steps between the floor 0 and the
ceiling k, from height m to height n, by length (zeta) and by area
(theta, in plaquettes, minus l/2). Everything is a ratio of secular
determinants F_j evaluated at rescaled arguments.
"""
import enum
import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Dict, Iterator, Optional, Tuple

from dyckgen.algebra import LSeries, QLaurent, as_rat
from dyckgen.constants import DOUBLE_STEP_DIAMOND, METHOD_CONTINUED_FRACTION, METHOD_DETERMINANT, STEP_PLAQUETTE
from dyckgen.errors import SpecOutOfRange
from dyckgen.spectral import secular_det_recursive

logger = logging.getLogger(__name__)


class ConventionTag(enum.Enum):
    STEP_PLAQUETTE = STEP_PLAQUETTE
    DOUBLE_STEP_DIAMOND = DOUBLE_STEP_DIAMOND


@dataclass(frozen=True)
class GenSpec:
    """
    k is the ceiling, or None for unbounded paths. For unbounded paths the
    effective ceiling is L + max(m, n), which no path of at most L steps can reach.
    """
    k: Optional[int]
    m: int
    n: int
    L: int
    convention: ConventionTag = ConventionTag.STEP_PLAQUETTE

    def __post_init__(self):
        if self.L < 0:
            raise SpecOutOfRange(f"Truncation order must be >= 0, got {self.L}")
        if self.k is not None and self.k < 0:
            raise SpecOutOfRange(f"Ceiling must be >= 0, got {self.k}")
        top = self.ceiling
        for name, height in (("m", self.m), ("n", self.n)):
            if not 0 <= height <= top:
                raise SpecOutOfRange(f"{name}={height} is outside [0, {top}]")

    @property
    def unbounded(self) -> bool:
        return self.k is None

    @property
    def ceiling(self) -> int:
        return self.L + max(self.m, self.n) if self.k is None else self.k

    def ordered(self) -> "GenSpec":
        """The same spec with m <= n."""
        return self if self.m <= self.n else replace(self, m=self.n, n=self.m)

    def bounded(self) -> "GenSpec":
        return self if self.k is not None else replace(self, k=self.ceiling)

    def dual(self) -> "GenSpec":
        """Reflection about the median: (k, m, n) -> (k, k-m, k-n)."""
        if self.k is None:
            raise SpecOutOfRange("The reflection dual needs a finite ceiling")
        return replace(self, m=self.k - self.m, n=self.k - self.n)


def prefactor(m: int, n: int) -> Tuple[int, int]:
    """(zeta exponent, theta exponent) = (|n-m|, |n-m|(n+m-1)/2) of the staircase from min to max."""
    lo, hi = sorted((m, n))
    d = hi - lo
    return d, d * (hi + lo - 1) // 2


@dataclass(frozen=True)
class GenFun:
    spec: GenSpec
    series: LSeries
    prefactor: Tuple[int, int]
    method: str = METHOD_DETERMINANT

    def coefficient(self, l: int) -> QLaurent:
        return self.series.coefficient(l)

    def terms(self) -> Iterator[Tuple[int, int, Fraction]]:
        for l, area, _, coeff in self.series.terms():
            yield l, area, coeff


def _F(j: int, L: int, scale: int = 0) -> LSeries:
    return secular_det_recursive(j, L).substitute_scale(scale)


def genfun(spec: GenSpec) -> GenFun:
    """
    G = zeta^(n-m) theta^((n-m)(n+m-1)/2) F_{m-1}(zeta) F_{k-n-1}(zeta theta^(n+1)) / F_k(zeta),
    with m and n swapped first when m > n.
    """
    ordered = spec.ordered()
    k, m, n, L = ordered.ceiling, ordered.m, ordered.n, ordered.L
    d, area = prefactor(m, n)
    body = _F(m - 1, L) * _F(k - n - 1, L, scale=n + 1) / _F(k, L)
    logger.debug(f"genfun: k={k}, m={m}, n={n}, L={L}")
    return GenFun(spec, body.times_monomial(d, area), (d, area))


def genfun_excursion(k: Optional[int], L: int) -> GenFun:
    """G_k = F_{k-1}(zeta theta) / F_k for paths from the floor back to the floor."""
    spec = GenSpec(k, 0, 0, L)
    k = spec.ceiling
    return GenFun(spec, _F(k - 1, L, scale=1) / _F(k, L), (0, 0))


def genfun_ceiling(k: int, L: int) -> GenFun:
    """G_{k,kk} = F_{k-1} / F_k for paths from the ceiling back to the ceiling."""
    spec = GenSpec(k, k, k, L)
    return GenFun(spec, _F(k - 1, L) / _F(k, L), (0, 0))


def continued_fraction(k: Optional[int], L: int) -> LSeries:
    """
    G_k as the k-level continued fraction 1/(1 - z/(1 - zq/(... /(1 - z q^(k-1))))),
    evaluated bottom-up with z = zeta^2, q = theta^2. k = 0 is the empty fraction 1.
    """
    k = GenSpec(k, 0, 0, L).ceiling
    current = LSeries.one(L)
    for i in range(k - 1, -1, -1):
        current = LSeries.one(L) / (LSeries.one(L) - current.times_monomial(2, 2 * i))
    return current


def genfun_continued(spec: GenSpec) -> GenFun:
    """
    G_{k,mn} assembled from continued-fraction excursions: for m = 0,
    G_{k,0n} = G_k prod_{j=1}^{n} zeta theta^(j-1) G_{k-j}(zeta theta^j); for n = k the
    reflection dual of that. Other endpoints raise SpecOutOfRange.
    """
    ordered = spec.ordered()
    k, m, n, L = ordered.ceiling, ordered.m, ordered.n, ordered.L
    if m == 0:
        series = continued_fraction(k, L)
        for j in range(1, n + 1):
            series = series * continued_fraction(k - j, L).substitute_scale(j)
            series = series.times_monomial(1, j - 1)
    elif n == k and not spec.unbounded:
        mirrored = genfun_continued(replace(ordered, m=k - n, n=k - m)).series
        series = mirrored.invert().substitute_scale(k - 1)
    else:
        raise SpecOutOfRange(f"The continued-fraction route needs an endpoint on the floor or ceiling, got m={m}, n={n}, k={k}")
    return GenFun(spec, series, prefactor(m, n), METHOD_CONTINUED_FRACTION)


@dataclass(frozen=True)
class WeightedGenFun:
    """
    G_{k,mn} with separate up-step and down-step weights. Each (l, A) coefficient
    carries zeta_u^((l+n-m)/2) zeta_d^((l-n+m)/2).
    """
    base: GenFun

    @property
    def spec(self) -> GenSpec:
        return self.base.spec

    def exponents(self, l: int) -> Tuple[int, int]:
        """(up steps, down steps) of every length-l path."""
        d = self.spec.n - self.spec.m
        assert (l + d) % 2 == 0, f"Length {l} has the wrong parity for n-m={d}"
        return (l + d) // 2, (l - d) // 2

    def terms(self) -> Iterator[Tuple[int, int, int, Fraction]]:
        """(up exponent, down exponent, A, coeff)."""
        for l, area, coeff in self.base.terms():
            up, down = self.exponents(l)
            yield up, down, area, coeff

    def coefficients(self) -> Dict[Tuple[int, int], QLaurent]:
        """{(up exponent, down exponent): theta polynomial}."""
        out = {}
        for l, c in enumerate(self.base.series.coeffs):
            if c:
                out[self.exponents(l)] = c
        return out

    def at(self, up, down) -> LSeries:
        """
        Specialize zeta_u = up * zeta and zeta_d = down * zeta for exact rationals up and down.
        """
        up, down = as_rat(up), as_rat(down)
        out = {}
        for l, c in enumerate(self.base.series.coeffs):
            if c:
                u, v = self.exponents(l)
                out[l] = c.scale(up ** u * down ** v)
        return LSeries(out, order=self.base.series.order)


def genfun_weighted(spec: GenSpec) -> WeightedGenFun:
    return WeightedGenFun(genfun(spec))
