"""
Secular determinants F_k = det(1 - zeta H_k) of the height-restricted walk.

Three routes are provided: the top-row recursion (memoized), a fraction-free
determinant of the tridiagonal matrix over an exact polynomial ring, and the
determinant of the down-step-only matrix written in (z, q).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import ring

from dyckgen.algebra import LSeries
from dyckgen.config import load_guards
from dyckgen.errors import HeightTooLarge, InvalidHeight

logger = logging.getLogger(__name__)

Monomials = Dict[Tuple[int, ...], Fraction]


def fraction_free_det(cells: Sequence[Sequence[Monomials]], gens: str) -> Monomials:
    """
    Determinant of a square matrix of sparse polynomials over QQ[gens].

    Parameters:
    cells: Square matrix; each cell maps an exponent tuple (one entry per generator) to its coefficient.
    gens (str): Comma separated generator names, e.g. "zeta,theta".

    Returns:
    dict: exponent tuple -> Fraction of the determinant.
    """
    R, *_ = ring(gens, QQ)
    n = len(cells)
    rows = []
    for row in cells:
        assert len(row) == n, f"Matrix is not square: row of length {len(row)} in a {n}x{n} matrix"
        rows.append([R.from_dict({e: QQ(c.numerator, c.denominator) for e, c in cell.items()}) for cell in row])
    # Bareiss elimination over the polynomial ring: only exact divisions occur
    det = DomainMatrix(rows, (n, n), R.to_domain()).det()
    return {tuple(e): Fraction(int(c.numerator), int(c.denominator)) for e, c in det.terms()}


@dataclass(frozen=True)
class SecularMatrix:
    """
    D_k = 1 - zeta H_k on the levels 0..k. With `marked` the (0, 1) entry
    carries the touchdown marker t, giving 1 - zeta H~_k.
    """
    k: int
    marked: bool = False

    @property
    def size(self) -> int:
        return self.k + 1

    @property
    def gens(self) -> str:
        return "zeta,theta,t" if self.marked else "zeta,theta"

    def cell(self, i: int, j: int) -> Monomials:
        pad = (0,) if self.marked else ()
        if i == j:
            return {(0, 0) + pad: Fraction(1)}
        if abs(i - j) != 1:
            return {}
        level = min(i, j)
        if self.marked and (i, j) == (0, 1):
            return {(1, 0, 1): Fraction(-1)}
        return {(1, level) + pad: Fraction(-1)}

    @property
    def entries(self) -> Tuple[Tuple[LSeries, ...], ...]:
        """The cells as order-1 series (unmarked matrices only)."""
        assert not self.marked, "Series cells are only defined for the unmarked matrix"
        return tuple(
            tuple(LSeries.from_terms({e: c for e, c in self.cell(i, j).items()}, order=1) for j in range(self.size))
            for i in range(self.size))

    def determinant(self) -> Monomials:
        return fraction_free_det([[self.cell(i, j) for j in range(self.size)] for i in range(self.size)], self.gens)


def _check_height(k: int, floor: int = -1) -> None:
    if not isinstance(k, int) or k < floor:
        raise InvalidHeight(f"Ceiling height must be an integer >= {floor}, got {k!r}")


@lru_cache(maxsize=None)
def _secular_polynomial(k: int) -> LSeries:
    """F_k exactly, as a series of order max(k + 1, 0)."""
    order = max(k + 1, 0)
    if k <= 0:
        return LSeries.one(order)
    prev = _secular_polynomial(k - 1).with_order(order).substitute_scale(1)
    prev2 = _secular_polynomial(k - 2).with_order(order).substitute_scale(2).shift(2)
    return prev - prev2


def secular_det_recursive(k: int, L: int) -> LSeries:
    """F_k(zeta, theta) from F_k = F_{k-1}(zeta theta) - zeta^2 F_{k-2}(zeta theta^2), at order L."""
    _check_height(k)
    return _secular_polynomial(k).with_order(L)


def secular_det_direct(k: int, L: Optional[int] = None) -> LSeries:
    """
    F_k as the determinant of the (k+1)x(k+1) secular matrix by fraction-free elimination.
    """
    _check_height(k, floor=0)
    guards = load_guards()
    guards.enforce("k", k, guards.direct_det_max_height, HeightTooLarge)
    det = SecularMatrix(k).determinant()
    logger.debug(f"secular_det_direct: k={k}, {len(det)} terms")
    return LSeries.from_terms(det, order=k + 1 if L is None else L)


def secular_det_tilde(k: int, L: Optional[int] = None) -> LSeries:
    """
    Determinant of the down-step-only matrix (diagonal 1, superdiagonal -1,
    (n, n-1) entry -z q^(n-1)).

    Returns a series in z with coefficients in q. Use `.dilate(2)` to compare
    it with F_k(zeta, theta).
    """
    _check_height(k, floor=0)
    guards = load_guards()
    guards.enforce("k", k, guards.direct_det_max_height, HeightTooLarge)
    size = k + 1

    def cell(i: int, j: int) -> Monomials:
        if i == j:
            return {(0, 0): Fraction(1)}
        if j == i + 1:
            return {(0, 0): Fraction(-1)}
        if j == i - 1:
            return {(1, i - 1): Fraction(-1)}
        return {}

    det = fraction_free_det([[cell(i, j) for j in range(size)] for i in range(size)], "z,q")
    return LSeries.from_terms(det, order=(k + 1) // 2 if L is None else L)


def duality_holds(k: int, L: Optional[int] = None) -> bool:
    """F_k(zeta theta^(k-1), theta^-1) == F_k(zeta, theta)."""
    F = secular_det_recursive(k, k + 1 if L is None else L)
    return F.invert().substitute_scale(k - 1) == F


def secular_family(k_max: int, L: int) -> List[LSeries]:
    """[F_0, ..., F_{k_max}] at order L."""
    return [secular_det_recursive(k, L) for k in range(k_max + 1)]


def secular_methods() -> Dict[str, Callable[[int, int], LSeries]]:
    """Every independent route to F_k, keyed by name, each taking (k, L)."""
    from dyckgen.spectral.exclusion import grand_partition_exclusion, height_generating_function

    return {
        "recursive": secular_det_recursive,
        "direct": lambda k, L: secular_det_direct(k, L),
        "tilde": lambda k, L: secular_det_tilde(k, L // 2).dilate(2).with_order(L),
        "exclusion": grand_partition_exclusion,
        "height": lambda k, L: height_generating_function(k, L).coefficient(k),
    }
