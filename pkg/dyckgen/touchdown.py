"""
Touchdown-weighted generating functions.

Every down-step that lands on the floor carries the marker t (the start of
the path never does). F~_k is the secular determinant with the marker on the
(0, 1) entry; setting t = 1 recovers every untagged quantity.
"""
import logging
from dataclasses import dataclass
from typing import Optional

from dyckgen.algebra import LSeries, Scalar, TQLaurent
from dyckgen.config import load_guards
from dyckgen.errors import HeightTooLarge, InvalidHeight, SpecOutOfRange
from dyckgen.genfun import GenSpec, genfun, genfun_excursion, prefactor
from dyckgen.spectral import SecularMatrix, secular_det_recursive

logger = logging.getLogger(__name__)

T = TQLaurent.marker()
ONE_MINUS_T = TQLaurent.one() - T

TILDE_METHODS = ("recursion", "top-row", "determinant")


@dataclass(frozen=True)
class TouchdownSeries:
    spec: GenSpec
    series: LSeries
    method: str = "ratio"

    def at_t(self, value: Scalar) -> LSeries:
        return self.series.at_t(value)


def _F(j: int, L: int, scale: int = 0) -> LSeries:
    return secular_det_recursive(j, L).substitute_scale(scale)


def tilde_secular(k: int, L: int, t: Optional[Scalar] = None, method: str = "recursion") -> LSeries:
    """
    F~_k(t, zeta, theta), with F~_{-1} = F~_0 = 1.

    recursion:   t F_k + (1-t) F_{k-1}(zeta theta)
    top-row:     F_{k-1}(zeta theta) - t zeta^2 F_{k-2}(zeta theta^2)
    determinant: det(1 - zeta H~_k) by fraction-free elimination
    """
    if k < -1:
        raise InvalidHeight(f"Ceiling height must be >= -1, got {k}")
    if k <= 0:
        result = LSeries.one(L, TQLaurent)
    elif method == "recursion":
        result = _F(k, L) * T + _F(k - 1, L, scale=1) * ONE_MINUS_T
    elif method == "top-row":
        result = _F(k - 1, L, scale=1).lift() - (_F(k - 2, L, scale=2) * T).times_monomial(2, 0)
    elif method == "determinant":
        guards = load_guards()
        guards.enforce("k", k, guards.direct_det_max_height, HeightTooLarge)
        det = SecularMatrix(k, marked=True).determinant()
        result = LSeries.from_touchdown_terms(det, order=L)
    else:
        raise ValueError(f"Unknown method {method!r}; expected one of {TILDE_METHODS}")
    return result if t is None else result.at_t(t)


def _marked_excursion_ratio(G: LSeries) -> LSeries:
    """t + (1-t) G."""
    return G * ONE_MINUS_T + T


def tilde_from_excursion(G: LSeries) -> LSeries:
    """G~ = G / (t + (1-t) G) for any excursion series G."""
    return G.lift() / _marked_excursion_ratio(G)


def tilde_genfun(k: Optional[int], m: int, n: int, L: int, t: Optional[Scalar] = None, method: str = "ratio") -> TouchdownSeries:
    """
    G~_{k,mn}; the coefficient of t^s zeta^l theta^A counts paths with s touchdowns.

    ratio:      G_{k,mn} (t + (1-t) G_{m-1}) / (t + (1-t) G_k), with G_{-1} = 1
    structural: zeta^(n-m) theta^((n-m)(n+m-1)/2) F~_{m-1} F_{k-n-1}(zeta theta^(n+1)) / F~_k
    """
    if m > n:
        raise SpecOutOfRange(f"Touchdown series need m <= n, got m={m}, n={n}")
    spec = GenSpec(k, m, n, L)
    k = spec.ceiling
    if method == "ratio":
        G = genfun(spec).series
        start = LSeries.one(L) if m == 0 else genfun_excursion(m - 1, L).series
        series = G * _marked_excursion_ratio(start) / _marked_excursion_ratio(genfun_excursion(k, L).series)
    elif method == "structural":
        d, area = prefactor(m, n)
        body = tilde_secular(m - 1, L) * _F(k - n - 1, L, scale=n + 1) / tilde_secular(k, L)
        series = body.times_monomial(d, area)
    else:
        raise ValueError(f"Unknown method {method!r}; expected 'ratio' or 'structural'")
    series = series.lift()
    logger.debug(f"tilde_genfun: k={k}, m={m}, n={n}, L={L}, method={method}")
    return TouchdownSeries(spec, series if t is None else series.at_t(t), method)


def tilde_genfun_openend(k: Optional[int], L: int, t: Optional[Scalar] = None, method: str = "divide") -> TouchdownSeries:
    """
    Excursions without counting the final touchdown: 1 + (G~_k - 1)/t, or
    equivalently 1 + (G_k - 1)/(t + (1-t) G_k).
    """
    spec = GenSpec(k, 0, 0, L)
    if k is not None and k < 1:
        raise SpecOutOfRange(f"Open-ended touchdown series need k >= 1, got {k}")
    if method == "divide":
        tilde = tilde_genfun(k, 0, 0, L).series
        series = (tilde - 1).divide_by_t() + 1
    elif method == "ratio":
        G = genfun_excursion(k, L).series
        series = (G - 1).lift() / _marked_excursion_ratio(G) + 1
    else:
        raise ValueError(f"Unknown method {method!r}; expected 'divide' or 'ratio'")
    return TouchdownSeries(spec, series if t is None else series.at_t(t), method)
