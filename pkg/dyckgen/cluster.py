"""
Cluster expansion of the exclusion-2 grand potential.

ln G and ln F_k expand in powers of z = zeta^2 with coefficients p_a(q) that
are sums over integer compositions of a, weighted by the exclusion-2 cluster
coefficients c_2. All q-polynomials here use q (diamond) exponents.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, List, Optional, Tuple

from dyckgen.algebra import LSeries, QLaurent, series_exp
from dyckgen.errors import SpecOutOfRange
from dyckgen.genfun import prefactor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Composition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        assert all(p >= 1 for p in self.parts), f"Composition parts must be positive: {self.parts}"

    @property
    def a(self) -> int:
        return sum(self.parts)

    @property
    def j(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        """sum_i (i-1) l_i."""
        return sum(i * part for i, part in enumerate(self.parts))


def _colex(a: int, max_parts: Optional[int]) -> Iterator[Tuple[int, ...]]:
    if a == 0:
        yield ()
        return
    if max_parts == 0:
        return
    rest = None if max_parts is None else max_parts - 1
    for last in range(1, a + 1):
        for prefix in _colex(a - last, rest):
            yield prefix + (last,)


def compositions(a: int, max_parts: Optional[int] = None) -> Iterator[Composition]:
    """Stream the compositions of a with at most `max_parts` parts, in colexicographic order."""
    if a < 1:
        raise SpecOutOfRange(f"Compositions need a >= 1, got {a}")
    for parts in _colex(a, max_parts):
        yield Composition(parts)


def c2(comp: Composition) -> Fraction:
    """(1/l_1) prod_{i=1}^{j-1} binom(l_i + l_{i+1} - 1, l_{i+1})."""
    parts = comp.parts
    value = Fraction(1, parts[0])
    for left, right in zip(parts, parts[1:]):
        value *= comb(left + right - 1, right)
    return value


def c2_factorial(comp: Composition) -> Fraction:
    """
    prod_{i=1}^{j-1} (l_i + l_{i+1} - 1)! / (prod_{i=2}^{j-1} (l_i - 1)! prod_{i=1}^{j} l_i!).

    For j = 1 the middle product runs over the reversed range i = 2..0 and
    contributes 1/(l_1 - 1)!.
    """
    parts = comp.parts
    numerator = 1
    for left, right in zip(parts, parts[1:]):
        numerator *= factorial(left + right - 1)
    denominator = 1
    for part in parts:
        denominator *= factorial(part)
    if len(parts) == 1:
        return Fraction(numerator * factorial(parts[0] - 1), denominator)
    for part in parts[1:-1]:
        denominator *= factorial(part - 1)
    return Fraction(numerator, denominator)


@dataclass(frozen=True)
class PPolynomial:
    """
    z^a coefficient of a log generating function. `context` is (k, m, n), or
    None for unbounded excursions.
    """
    a: int
    value: QLaurent
    context: Optional[Tuple[int, int, int]] = None

    @property
    def degree(self) -> Optional[int]:
        return self.value.degree()


def _p_sum(a: int, max_parts: Optional[int], r_range=None) -> QLaurent:
    """sum over compositions of c_2 q^(weight) times the r-sum q^(r a) for r in r_range(j)."""
    terms = {}
    for comp in compositions(a, max_parts):
        coeff = c2(comp)
        shifts = [0] if r_range is None else r_range(comp.j)
        for r in shifts:
            exponent = comp.weight + r * a
            terms[exponent] = terms.get(exponent, 0) + coeff
    return QLaurent(terms)


def log_genfun_unbounded(a_max: int) -> List[PPolynomial]:
    """[p_1, ..., p_{a_max}] with ln G(z, q) = sum_a z^a p_a(q) for unbounded excursions."""
    if a_max < 1:
        raise SpecOutOfRange(f"a_max must be >= 1, got {a_max}")
    return [PPolynomial(a, _p_sum(a, None)) for a in range(1, a_max + 1)]


def log_secular(k: int, a_max: int, via_division: bool = False) -> List[QLaurent]:
    """
    Coefficients of z^1 .. z^a_max in ln F_k.

    The z^a coefficient is -sum_{j<=k} c_2 q^(weight) (1 - q^((k-j+1)a)) / (1 - q^a),
    expanded as the geometric sum over r = 0..k-j. With `via_division` the
    bracket is divided out exactly instead, which raises on any remainder.
    """
    if k < 1:
        raise SpecOutOfRange(f"log_secular needs k >= 1, got {k}")
    out = []
    for a in range(1, a_max + 1):
        if via_division:
            total = QLaurent.zero()
            for comp in compositions(a, k):
                bracket = QLaurent({0: 1, (k - comp.j + 1) * a: -1})
                total = total + bracket.shift(comp.weight).scale(c2(comp))
            out.append(-total.divide_one_minus_power(a))
        else:
            out.append(-_p_sum(a, k, lambda j: range(0, k - j + 1)))
    return out


@dataclass(frozen=True)
class RestrictedLog:
    """
    ln G_{k,mn} = log_z ln z + log_q ln q + sum_a z^a p_{k,mn;a}(q), with log_z = (n-m)/2
    and log_q = (n-m)(n+m-1)/4.
    """
    k: int
    m: int
    n: int
    polynomials: Tuple[PPolynomial, ...]

    @property
    def log_z(self) -> Fraction:
        return Fraction(self.n - self.m, 2)

    @property
    def log_q(self) -> Fraction:
        return Fraction((self.n - self.m) * (self.n + self.m - 1), 4)

    def to_series(self, L: Optional[int] = None) -> LSeries:
        """exp of the expansion as a series in zeta (plaquette convention)."""
        return exp_log_series([p.value for p in self.polynomials], prefactor(self.m, self.n), L)


def log_genfun_restricted(k: int, m: int, n: int, a_max: int) -> RestrictedLog:
    """
    p_{k,mn;a} = sum over compositions with j <= k parts of c_2 q^(weight) sum_{r=max(m-j,0)}^{min(k-j,n)} q^(r a).
    """
    if not 0 <= m <= n <= k:
        raise SpecOutOfRange(f"Need 0 <= m <= n <= k, got k={k}, m={m}, n={n}")
    if a_max < 1:
        raise SpecOutOfRange(f"a_max must be >= 1, got {a_max}")
    polys = tuple(
        PPolynomial(a, _p_sum(a, k, lambda j: range(max(m - j, 0), min(k - j, n) + 1)), (k, m, n))
        for a in range(1, a_max + 1))
    return RestrictedLog(k, m, n, polys)


def exp_log_series(polys: List[QLaurent], pre: Tuple[int, int] = (0, 0), L: Optional[int] = None) -> LSeries:
    """
    zeta^d theta^A exp(sum_a zeta^(2a) p_a(theta^2)) for pre = (d, A), at order L
    (default: the order the polynomials determine, d + 2 len(polys)).
    """
    d, area = pre
    order = d + 2 * len(polys) if L is None else L
    inner_order = max(order - d, 0)
    if len(polys) < inner_order // 2:
        raise SpecOutOfRange(f"{len(polys)} log coefficients cannot reach zeta order {order}")
    log = LSeries({2 * a: p.dilate(2) for a, p in enumerate(polys, start=1) if 2 * a <= inner_order}, order=inner_order)
    body = series_exp(log)
    return body.with_order(order).times_monomial(d, area)


def degree_formula(k: Optional[int], n: int, a: int) -> Tuple[int, int]:
    """
    q-degree of p_{k,mn;a} in diamonds, and which branch produced it:
    1 for a <= k-n (a(a-1)/2 + a n), else 2 ((k-n-1)(2a-k+n)/2 + a n).
    """
    if k is None or a <= k - n:
        return a * (a - 1) // 2 + a * n, 1
    return (k - n - 1) * (2 * a - k + n) // 2 + a * n, 2


@dataclass
class DegreeCheck:
    k: Optional[int]
    m: int
    n: int
    a: int
    degree: Optional[int]
    expected: int
    branch: int
    oracle_max_area: Optional[int] = None

    @property
    def expected_max_area(self) -> int:
        """Maximal area in plaquettes: twice the degree plus the staircase prefactor."""
        return 2 * self.expected + prefactor(self.m, self.n)[1]

    @property
    def passed(self) -> bool:
        if self.degree != self.expected:
            return False
        return self.oracle_max_area is None or self.oracle_max_area == self.expected_max_area

    def __bool__(self) -> bool:
        return self.passed


def degree_check(k: Optional[int], m: int, n: int, a: int, with_oracle: bool = True) -> DegreeCheck:
    """
    Compare the q-degree of p_{k,mn;a} with the two-branch degree formula, and
    the formula's maximal area with the oracle's maximal-area path of length 2a + n - m.
    """
    from dyckgen.oracle import max_area

    m, n = sorted((m, n))
    # a + n is the highest level any path of length 2a + n - m from m to n can touch
    ceiling = a + n if k is None else k
    poly = log_genfun_restricted(ceiling, m, n, a).polynomials[-1]
    expected, branch = degree_formula(k, n, a)
    check = DegreeCheck(k, m, n, a, poly.degree, expected, branch)
    if with_oracle:
        check.oracle_max_area = max_area(ceiling, m, n, 2 * a + n - m)
    logger.debug(f"degree_check: {check}")
    return check
