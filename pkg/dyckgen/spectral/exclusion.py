"""
Exclusion-statistics reading of F_k.

F_k is the grand partition function of exclusion-2 particles on the k
equidistant levels s(n) = q^n, with fugacity -z. Bosonization maps N such
particles onto N bosons on k - 2(N-1) levels, whose partition function is a
Gaussian binomial. All q-polynomials here carry exponents in q (diamond)
units; `.dilate(2)` converts them to plaquettes.
"""
import enum
import logging
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator, List, Sequence, Tuple

from dyckgen.algebra import LSeries, QLaurent, series_div
from dyckgen.config import load_guards
from dyckgen.errors import GuardExceeded, InvalidHeight

logger = logging.getLogger(__name__)


class PartitionMethod(enum.Enum):
    OCCUPATION = "occupation"
    EXCITATION = "excitation"
    QBINOMIAL = "qbinomial"
    PRODUCT_FORMULA = "product-formula"


@dataclass(frozen=True)
class SpectralFunction:
    """Truncated harmonic spectrum s(n) = theta^(2n), n = 0..k-1, with fugacity x = -zeta^2."""
    k: int

    def level(self, n: int) -> QLaurent:
        if not 0 <= n < self.k:
            raise InvalidHeight(f"Level {n} outside 0..{self.k - 1}")
        return QLaurent.monomial(2 * n)

    def levels(self) -> List[QLaurent]:
        return [self.level(n) for n in range(self.k)]

    def fugacity(self, order: int) -> LSeries:
        return LSeries.monomial(2, 0, order, coeff=-1)


@dataclass(frozen=True)
class BosonicPartition:
    k: int
    N: int
    value: QLaurent

    def in_plaquettes(self) -> QLaurent:
        return self.value.dilate(2)


def q_bracket(j: int) -> QLaurent:
    """[j]_q = 1 + q + ... + q^(j-1)."""
    return QLaurent({e: 1 for e in range(j)})


def q_factorial(n: int) -> QLaurent:
    out = QLaurent.one()
    for j in range(2, n + 1):
        out = out * q_bracket(j)
    return out


def q_binomial(n: int, r: int) -> QLaurent:
    """
    Gaussian binomial [n choose r]_q by the product formula, cancelling one
    (1 - q^j) factor at a time so every intermediate stays a polynomial.
    """
    if r < 0 or n < 0 or r > n:
        return QLaurent.zero()
    r = min(r, n - r)
    out = QLaurent.one()
    for j in range(1, r + 1):
        out = (out - out.shift(n - r + j)).divide_one_minus_power(j)
    return out


def _check_levels(k: int, N: int) -> None:
    if k < 1 or N < 0:
        raise InvalidHeight(f"Need k >= 1 and N >= 0, got k={k}, N={N}")


def levels_to_excitations(levels: Sequence[int], k: int) -> Tuple[int, ...]:
    """
    Sorted boson levels l_1 <= ... <= l_N (in 0..k-1) to excitation numbers
    (m_0, ..., m_N): m_i = l_{N-i+1} - l_{N-i} with l_0 = 0, and m_0 = k - 1 - l_N.
    """
    padded = (0,) + tuple(sorted(levels))
    N = len(padded) - 1
    return (k - 1 - padded[N],) + tuple(padded[N - i + 1] - padded[N - i] for i in range(1, N + 1))


def excitations_to_levels(excitations: Sequence[int]) -> Tuple[int, ...]:
    """Inverse of `levels_to_excitations` (k is recovered as sum(m) + 1)."""
    m = tuple(excitations)
    N = len(m) - 1
    levels, total = [], 0
    for p in range(1, N + 1):
        total += m[N - p + 1]
        levels.append(total)
    return tuple(levels)


def levels_to_occupations(levels: Sequence[int], k: int) -> Tuple[int, ...]:
    """Occupation numbers n_i = #{j : l_j = i} for i = 0..k-1."""
    occupations = [0] * k
    for level in levels:
        occupations[level] += 1
    return tuple(occupations)


def excitations_to_occupations(excitations: Sequence[int]) -> Tuple[int, ...]:
    k = sum(excitations) + 1
    return levels_to_occupations(excitations_to_levels(excitations), k)


def _enumerate_occupation(k: int, N: int) -> QLaurent:
    terms = {}
    for levels in combinations_with_replacement(range(k), N):
        energy = sum(levels)
        terms[energy] = terms.get(energy, 0) + 1
    return QLaurent(terms)


def _enumerate_excitation(k: int, N: int) -> QLaurent:
    # k - 1 excitation quanta, each of size 0..N; m_i counts quanta of size i
    terms = {}
    for quanta in combinations_with_replacement(range(N + 1), k - 1):
        m = [quanta.count(i) for i in range(N + 1)]
        energy = sum(i * m_i for i, m_i in enumerate(m))
        terms[energy] = terms.get(energy, 0) + 1
    return QLaurent(terms)


def _factorial_ratio(k: int, N: int) -> QLaurent:
    """[k+N-1]! / ([N]! [k-1]!), dividing out one bracket [j] = (1-q^j)/(1-q) at a time."""
    out = q_factorial(k + N - 1)
    for j in list(range(2, N + 1)) + list(range(2, k)):
        out = (out - out.shift(1)).divide_one_minus_power(j)
    return out


def bosonic_partition(k: int, N: int, method: PartitionMethod = PartitionMethod.PRODUCT_FORMULA) -> BosonicPartition:
    """
    Z^B_{k,N}(q): N bosons on the levels 0..k-1 of the truncated spectrum.

    Parameters:
    k (int): Number of levels, k >= 1.
    N (int): Particle number, N >= 0.
    method (PartitionMethod): Which route computes it. The enumerative methods
        are guarded to k*N within the configured budget.

    Returns:
    BosonicPartition: value as a polynomial in q.
    """
    _check_levels(k, N)
    method = PartitionMethod(method)
    if method in (PartitionMethod.OCCUPATION, PartitionMethod.EXCITATION):
        guards = load_guards()
        guards.enforce("k*N", k * N, guards.enum_partition_budget, GuardExceeded)

    if method is PartitionMethod.OCCUPATION:
        value = _enumerate_occupation(k, N)
    elif method is PartitionMethod.EXCITATION:
        value = _enumerate_excitation(k, N)
    elif method is PartitionMethod.QBINOMIAL:
        value = _factorial_ratio(k, N)
    else:
        value = QLaurent.one()
        for j in range(1, N + 1):
            value = (value - value.shift(j + k - 1)).divide_one_minus_power(j)
    return BosonicPartition(k, N, value)


def bosonic_partition_dual_product(k: int, N: int) -> BosonicPartition:
    """Z^B_{k,N} as prod_{j=1}^{k-1} (1 - q^(j+N)) / (1 - q^j)."""
    _check_levels(k, N)
    value = QLaurent.one()
    for j in range(1, k):
        value = (value - value.shift(j + N)).divide_one_minus_power(j)
    return BosonicPartition(k, N, value)


def exclusion_configurations(k: int, N: int) -> Iterator[Tuple[int, ...]]:
    """Level sets of N exclusion-2 particles on 0..k-1: no two on equal or adjacent levels."""
    for levels in combinations(range(k), N):
        if all(b - a >= 2 for a, b in zip(levels, levels[1:])):
            yield levels


def exclusion_partition(k: int, N: int, enumerate_levels: bool = False) -> QLaurent:
    """
    Z^(2)_{k,N}(q) = q^(N(N-1)) Z^B_{k-2(N-1),N}(q), or by direct enumeration of
    the admissible level sets.
    """
    if k < 0 or N < 0:
        raise InvalidHeight(f"Need k >= 0 and N >= 0, got k={k}, N={N}")
    if enumerate_levels:
        terms = {}
        for levels in exclusion_configurations(k, N):
            terms[sum(levels)] = terms.get(sum(levels), 0) + 1
        return QLaurent(terms)
    if N == 0:
        return QLaurent.one()
    bosonic_levels = k - 2 * (N - 1)
    if bosonic_levels < 1:
        return QLaurent.zero()
    return q_binomial(bosonic_levels + N - 1, N).shift(N * (N - 1))


def grand_partition_exclusion(k: int, L: int) -> LSeries:
    """
    F_k = sum_N (-z)^N q^(N(N-1)) [k-N+1 choose N]_q with z = zeta^2, q = theta^2.
    """
    if k < 0:
        raise InvalidHeight(f"Ceiling height must be >= 0, got {k}")
    coeffs = {}
    N = 0
    while 2 * N <= L and k - N + 1 >= N:
        weight = q_binomial(k - N + 1, N).shift(N * (N - 1)).dilate(2)
        coeffs[2 * N] = weight.scale((-1) ** N)
        N += 1
    return LSeries(coeffs, order=L)


@dataclass(frozen=True)
class HeightSeries:
    """[w^k] H(w, z, q) for k = 0..w_order, each a series in zeta of order `order`."""
    w_order: int
    order: int
    rows: Tuple[LSeries, ...]

    def coefficient(self, k: int) -> LSeries:
        if not 0 <= k <= self.w_order:
            raise IndexError(f"w^{k} is outside 0..{self.w_order}")
        return self.rows[k]


def _inverse_pochhammer(N: int, w_order: int) -> LSeries:
    """1/(w; q)_{N+1} as a series in w (coefficients in theta, q = theta^2)."""
    pochhammer = LSeries.one(w_order)
    for i in range(N + 1):
        pochhammer = pochhammer * LSeries({0: 1, 1: QLaurent.monomial(2 * i, -1)}, order=w_order)
    return series_div(LSeries.one(w_order), pochhammer)


def height_generating_function(w_order: int, L: int) -> HeightSeries:
    """
    H(w, z, q) = -1/w + (1/w) sum_N (-w^2 z)^N q^(N(N-1)) / (w; q)_{N+1}.

    The w-coefficients are read off the sum one power higher, so the -1/w
    term cancels the N = 0 constant.
    """
    rows: List[dict] = [dict() for _ in range(w_order + 1)]
    N = 0
    while 2 * N <= L and 2 * N <= w_order + 1:
        inverse = _inverse_pochhammer(N, w_order + 1 - 2 * N)
        sign = (-1) ** N
        for k in range(w_order + 1):
            j = k + 1 - 2 * N
            if j < 0:
                continue
            coeff = inverse.coefficient(j).shift(2 * N * (N - 1)).scale(sign)
            rows[k][2 * N] = coeff
        N += 1
    logger.debug(f"height_generating_function: w_order={w_order}, L={L}, {N} particle sectors")
    return HeightSeries(w_order, L, tuple(LSeries(row, order=L) for row in rows))
