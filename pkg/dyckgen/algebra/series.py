"""
Truncated power series in the step variable zeta with Laurent coefficients.

An `LSeries` of order L stores the coefficients of zeta^0 .. zeta^L. The
coefficient ring is `QLaurent` (theta dependence) or `TQLaurent` (theta and
the touchdown marker t); mixing the two lifts to `TQLaurent`. Arithmetic
truncates at the smaller order and never looks past it.
"""
import logging
from fractions import Fraction
from typing import Callable, Iterator, List, Mapping, Optional, Sequence, Tuple, Type, Union

from dyckgen.algebra.laurent import QLaurent, Scalar, TQLaurent, as_rat
from dyckgen.errors import BadConstantTerm, NonUnitConstantTerm

logger = logging.getLogger(__name__)

Ring = Union[Type[QLaurent], Type[TQLaurent]]
Term = Tuple[int, int, Optional[int], Fraction]


def _common_ring(r1: Ring, r2: Ring) -> Ring:
    return TQLaurent if TQLaurent in (r1, r2) else QLaurent


class LSeries:
    __slots__ = ("order", "coeffs", "ring")

    def __init__(self, coeffs: Union[Sequence, Mapping[int, object]], order: Optional[int] = None, ring: Ring = QLaurent):
        """
        Parameters:
        coeffs: Either a sequence c[0], c[1], ... or a mapping {l: c_l}. Entries may be ring elements
            or exact rationals.
        order (int, optional): Truncation order L. Defaults to the highest index supplied.
        ring: QLaurent or TQLaurent.
        """
        if isinstance(coeffs, Mapping):
            items = dict(coeffs)
            if order is None:
                order = max(items) if items else 0
            dense = [items.get(l, 0) for l in range(order + 1)]
            if any(l < 0 for l in items):
                raise ValueError(f"Negative zeta exponent in {sorted(items)}")
        else:
            dense = list(coeffs)
            if order is None:
                order = max(len(dense) - 1, 0)
            dense = dense[:order + 1] + [0] * (order + 1 - len(dense))
        if order < 0:
            raise ValueError(f"Truncation order must be non-negative, got {order}")
        self.order = order
        self.ring = ring
        self.coeffs: Tuple = tuple(ring.coerce(c) for c in dense)

    @classmethod
    def _from_clean(cls, coeffs: List, order: int, ring: Ring) -> "LSeries":
        obj = cls.__new__(cls)
        obj.order = order
        obj.ring = ring
        obj.coeffs = tuple(coeffs)
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, order: int, ring: Ring = QLaurent) -> "LSeries":
        return cls._from_clean([ring.zero()] * (order + 1), order, ring)

    @classmethod
    def one(cls, order: int, ring: Ring = QLaurent) -> "LSeries":
        return cls.constant(1, order, ring)

    @classmethod
    def constant(cls, value, order: int, ring: Ring = QLaurent) -> "LSeries":
        return cls._from_clean([ring.coerce(value)] + [ring.zero()] * order, order, ring)

    @classmethod
    def monomial(cls, l: int, area: int, order: int, coeff: Scalar = 1) -> "LSeries":
        """coeff * zeta^l * theta^area, truncated at `order`."""
        out = [QLaurent.zero()] * (order + 1)
        if l <= order:
            out[l] = QLaurent.monomial(area, coeff)
        return cls._from_clean(out, order, QLaurent)

    @classmethod
    def from_terms(cls, terms: Mapping[Tuple[int, int], Scalar], order: int) -> "LSeries":
        """Build from {(l, A): coeff}; terms with l > order are dropped."""
        buckets = {}
        for (l, area), coeff in terms.items():
            if l <= order:
                buckets.setdefault(l, {})[area] = coeff
        return cls({l: QLaurent(c) for l, c in buckets.items()}, order=order)

    @classmethod
    def from_touchdown_terms(cls, terms: Mapping[Tuple[int, int, int], Scalar], order: int) -> "LSeries":
        """Build from {(l, A, s): coeff} with the touchdown marker t^s."""
        buckets = {}
        for (l, area, s), coeff in terms.items():
            if l <= order:
                buckets.setdefault(l, {}).setdefault(s, {})[area] = coeff
        return cls(
            {l: TQLaurent({s: QLaurent(c) for s, c in by_s.items()}) for l, by_s in buckets.items()},
            order=order, ring=TQLaurent)

    # -- inspection -------------------------------------------------------

    def coefficient(self, l: int):
        if l < 0:
            return self.ring.zero()
        if l > self.order:
            raise IndexError(f"zeta^{l} is beyond the truncation order {self.order}")
        return self.coeffs[l]

    def terms(self) -> Iterator[Term]:
        """
        Yield (l, A, s, coeff) for every nonzero coefficient, s being None for
        series without the touchdown marker.
        """
        for l, c in enumerate(self.coeffs):
            if self.ring is TQLaurent:
                for s, qc in c.items():
                    for area, value in qc.items():
                        yield l, area, s, value
            else:
                for area, value in c.items():
                    yield l, area, None, value

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.coeffs) if self.ring is QLaurent else all(
            qc.is_polynomial() for c in self.coeffs for _, qc in c.items())

    def totals(self) -> List[Fraction]:
        """Coefficients of zeta^l at theta = 1 (and t = 1)."""
        if self.ring is TQLaurent:
            return [c.at_t(1).at_one() for c in self.coeffs]
        return [c.at_one() for c in self.coeffs]

    def first_difference(self, other: "LSeries") -> Optional[Tuple[int, object, object]]:
        """The first (l, left, right) where the coefficients differ, up to the common order."""
        for l in range(min(self.order, other.order) + 1):
            left, right = self.coeffs[l], other.coeffs[l]
            if self.ring is not other.ring:
                left, right = TQLaurent.coerce(left), TQLaurent.coerce(right)
            if left != right:
                return l, left, right
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, LSeries):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    # -- reshaping --------------------------------------------------------

    def with_order(self, order: int) -> "LSeries":
        """
        Truncate or zero-pad to `order`. Padding is exact only when the series
        is a polynomial of degree <= self.order (as F_k is).
        """
        if order <= self.order:
            return LSeries._from_clean(list(self.coeffs[:order + 1]), order, self.ring)
        return LSeries._from_clean(list(self.coeffs) + [self.ring.zero()] * (order - self.order), order, self.ring)

    def lift(self, ring: Ring = TQLaurent) -> "LSeries":
        if ring is self.ring:
            return self
        return LSeries._from_clean([ring.coerce(c) for c in self.coeffs], self.order, ring)

    def map_coeffs(self, fn: Callable, ring: Optional[Ring] = None) -> "LSeries":
        return LSeries._from_clean([fn(c) for c in self.coeffs], self.order, ring or self.ring)

    def times_monomial(self, l: int = 0, area: int = 0) -> "LSeries":
        """Multiply by zeta^l theta^area (l >= 0), keeping the order."""
        if l < 0:
            raise ValueError(f"Cannot shift by a negative zeta power: {l}")
        zero = self.ring.zero()
        out = [zero] * min(l, self.order + 1) + [c.shift(area) for c in self.coeffs[:max(self.order + 1 - l, 0)]]
        return LSeries._from_clean(out, self.order, self.ring)

    def shift(self, l: int) -> "LSeries":
        return self.times_monomial(l, 0)

    def substitute_scale(self, j: int) -> "LSeries":
        """zeta -> zeta * theta^j."""
        if j == 0:
            return self
        return LSeries._from_clean([c.shift(j * l) for l, c in enumerate(self.coeffs)], self.order, self.ring)

    def invert(self) -> "LSeries":
        """theta -> theta^-1."""
        return LSeries._from_clean([c.invert() for c in self.coeffs], self.order, self.ring)

    def dilate(self, factor: int) -> "LSeries":
        """
        zeta -> zeta^factor and theta -> theta^factor. With factor 2 this maps a
        series written in (z, q) onto the (zeta, theta) convention.
        """
        order = self.order * factor
        out = [self.ring.zero()] * (order + 1)
        for l, c in enumerate(self.coeffs):
            out[l * factor] = c.dilate(factor)
        return LSeries._from_clean(out, order, self.ring)

    def at_t(self, value: Scalar) -> "LSeries":
        """Specialize the touchdown marker."""
        if self.ring is QLaurent:
            return self
        return LSeries._from_clean([c.at_t(value) for c in self.coeffs], self.order, QLaurent)

    def divide_by_t(self) -> "LSeries":
        return LSeries._from_clean([TQLaurent.coerce(c).divide_by_t() for c in self.coeffs], self.order, TQLaurent)

    # -- ring -------------------------------------------------------------

    def _binary(self, other, op) -> "LSeries":
        if not isinstance(other, LSeries):
            other = LSeries.constant(other, self.order, self.ring if not isinstance(other, TQLaurent) else TQLaurent)
        ring = _common_ring(self.ring, other.ring)
        order = min(self.order, other.order)
        a, b = self.lift(ring), other.lift(ring)
        return LSeries._from_clean([op(a.coeffs[l], b.coeffs[l]) for l in range(order + 1)], order, ring)

    def __add__(self, other) -> "LSeries":
        return self._binary(other, lambda x, y: x + y)

    __radd__ = __add__

    def __sub__(self, other) -> "LSeries":
        return self._binary(other, lambda x, y: x - y)

    def __rsub__(self, other) -> "LSeries":
        return (-self) + other

    def __neg__(self) -> "LSeries":
        return LSeries._from_clean([-c for c in self.coeffs], self.order, self.ring)

    def __mul__(self, other) -> "LSeries":
        if isinstance(other, LSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return series_mul(self, LSeries.constant(other, self.order, TQLaurent if isinstance(other, TQLaurent) else self.ring))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / as_rat(other))
        if not isinstance(other, LSeries):
            other = LSeries.constant(other, self.order, TQLaurent if isinstance(other, TQLaurent) else self.ring)
        return series_div(self, other)

    def scale(self, factor: Scalar) -> "LSeries":
        return LSeries._from_clean([c.scale(factor) for c in self.coeffs], self.order, self.ring)

    # -- display ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"LSeries(order={self.order}, ring={self.ring.__name__}, coeffs={list(self.coeffs)!r})"

    def __str__(self) -> str:
        parts = []
        for l, c in enumerate(self.coeffs):
            if not c:
                continue
            if l == 0:
                parts.append(f"({c})")
            else:
                parts.append(f"({c})*ζ^{l}")
        return " + ".join(parts or ["0"]) + f" + O(ζ^{self.order + 1})"


def _aligned(a: LSeries, b: LSeries):
    ring = _common_ring(a.ring, b.ring)
    order = min(a.order, b.order)
    return a.lift(ring), b.lift(ring), order, ring


def series_mul(a: LSeries, b: LSeries) -> LSeries:
    """Cauchy product truncated at min(L_a, L_b)."""
    a, b, order, ring = _aligned(a, b)
    out = []
    for l in range(order + 1):
        total = ring.zero()
        for i in range(l + 1):
            x, y = a.coeffs[i], b.coeffs[l - i]
            if x and y:
                total = total + x * y
        out.append(total)
    return LSeries._from_clean(out, order, ring)


def series_div(a: LSeries, b: LSeries) -> LSeries:
    """
    The series r with r * b = a up to truncation.

    Raises NonUnitConstantTerm unless the constant coefficient of `b` is a
    single nonzero rational at theta^0 (and t^0).
    """
    a, b, order, ring = _aligned(a, b)
    b0 = b.coeffs[0].scalar()
    if not b0:
        raise NonUnitConstantTerm(f"Divisor constant term must be a nonzero rational, got {b.coeffs[0]}")
    inv = 1 / b0
    out = []
    for l in range(order + 1):
        acc = a.coeffs[l]
        for i in range(1, l + 1):
            if b.coeffs[i] and out[l - i]:
                acc = acc - b.coeffs[i] * out[l - i]
        out.append(acc.scale(inv) if inv != 1 else acc)
    return LSeries._from_clean(out, order, ring)


def series_log(a: LSeries) -> LSeries:
    """ln a for a series with constant term exactly 1."""
    if a.coeffs[0].scalar() != 1:
        raise BadConstantTerm(f"log needs constant term 1, got {a.coeffs[0]}")
    ring = a.ring
    g = [ring.zero()]
    for l in range(1, a.order + 1):
        acc = ring.zero()
        for i in range(1, l):
            if g[i] and a.coeffs[l - i]:
                acc = acc + (g[i] * a.coeffs[l - i]).scale(i)
        g.append(a.coeffs[l] - acc.scale(Fraction(1, l)))
    logger.debug(f"series_log: order {a.order}")
    return LSeries._from_clean(g, a.order, ring)


def series_exp(a: LSeries) -> LSeries:
    """exp a for a series with constant term exactly 0."""
    if a.coeffs[0]:
        raise BadConstantTerm(f"exp needs constant term 0, got {a.coeffs[0]}")
    ring = a.ring
    h = [ring.one()]
    for l in range(1, a.order + 1):
        acc = ring.zero()
        for i in range(1, l + 1):
            if a.coeffs[i] and h[l - i]:
                acc = acc + (a.coeffs[i] * h[l - i]).scale(i)
        h.append(acc.scale(Fraction(1, l)))
    logger.debug(f"series_exp: order {a.order}")
    return LSeries._from_clean(h, a.order, ring)


def substitute_scale(a: LSeries, j: int) -> LSeries:
    """zeta -> zeta * theta^j: the coefficient of zeta^l picks up theta^(j*l)."""
    return a.substitute_scale(j)


def invert_q(a):
    """theta -> theta^-1 on a QLaurent, TQLaurent or LSeries."""
    return a.invert()
