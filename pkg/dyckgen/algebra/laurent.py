"""
Exact Laurent polynomials in the area variable.

`QLaurent` holds the theta (plaquette) dependence of a generating-function
coefficient; `TQLaurent` adds a polynomial dependence on the touchdown
marker t. Both expose the same small ring protocol (`zero`, `one`, `+`, `-`,
`*`, `scale`, `shift`, `invert`, `dilate`, `scalar`) so that `LSeries` can be
built over either.
"""
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

Rat = Fraction
Scalar = Union[int, Fraction]


def as_rat(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"Expected an exact rational, got {type(value).__name__}: {value!r}")


def _power_label(symbol: str, exponent: int) -> str:
    if exponent == 1:
        return symbol
    return f"{symbol}^{exponent}"


class QLaurent:
    """Sparse Laurent polynomial sum_A c_A theta^A with Fraction coefficients."""

    __slots__ = ("_terms",)

    symbol = "θ"

    def __init__(self, terms: Optional[Mapping[int, Scalar]] = None):
        clean: Dict[int, Fraction] = {}
        if terms:
            for exponent, coeff in terms.items():
                coeff = as_rat(coeff)
                if coeff:
                    clean[int(exponent)] = coeff
        self._terms = clean

    @classmethod
    def _from_clean(cls, terms: Dict[int, Fraction]) -> "QLaurent":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "QLaurent":
        return cls._from_clean({})

    @classmethod
    def one(cls) -> "QLaurent":
        return cls._from_clean({0: Fraction(1)})

    @classmethod
    def constant(cls, value: Scalar) -> "QLaurent":
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int = 0, coeff: Scalar = 1) -> "QLaurent":
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, value) -> "QLaurent":
        if isinstance(value, QLaurent):
            return value
        return cls.constant(value)

    # -- inspection -------------------------------------------------------

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        """(exponent, coefficient) pairs in increasing exponent order."""
        for exponent in sorted(self._terms):
            yield exponent, self._terms[exponent]

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    def scalar(self) -> Optional[Fraction]:
        """The value if this is a constant (theta^0 only), else None."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and 0 in self._terms:
            return self._terms[0]
        return None

    def degree(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def low_degree(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._terms)

    def at_one(self) -> Fraction:
        """Evaluate at theta = 1."""
        return sum(self._terms.values(), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, QLaurent):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == QLaurent.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- ring -------------------------------------------------------------

    def __add__(self, other) -> "QLaurent":
        if isinstance(other, (int, Fraction)):
            other = QLaurent.constant(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        out = dict(self._terms)
        for exponent, coeff in other._terms.items():
            total = out.get(exponent, 0) + coeff
            if total:
                out[exponent] = total
            else:
                out.pop(exponent, None)
        return QLaurent._from_clean(out)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent._from_clean({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "QLaurent":
        if isinstance(other, (int, Fraction)):
            other = QLaurent.constant(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QLaurent":
        return (-self) + other

    def __mul__(self, other) -> "QLaurent":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        if not self._terms or not other._terms:
            return QLaurent.zero()
        out: Dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QLaurent._from_clean({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "QLaurent":
        if power < 0:
            raise ValueError("Negative powers are only defined for monomials; use invert()")
        result = QLaurent.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def scale(self, factor: Scalar) -> "QLaurent":
        factor = as_rat(factor)
        if not factor:
            return QLaurent.zero()
        return QLaurent._from_clean({e: c * factor for e, c in self._terms.items()})

    def shift(self, j: int) -> "QLaurent":
        """Multiply by theta^j."""
        if j == 0:
            return self
        return QLaurent._from_clean({e + j: c for e, c in self._terms.items()})

    def invert(self) -> "QLaurent":
        """theta -> theta^-1."""
        return QLaurent._from_clean({-e: c for e, c in self._terms.items()})

    def dilate(self, factor: int) -> "QLaurent":
        """theta -> theta^factor (e.g. q = theta^2 gives factor 2)."""
        return QLaurent._from_clean({e * factor: c for e, c in self._terms.items()})

    def contract(self, factor: int) -> "QLaurent":
        """Inverse of `dilate`; every exponent must be divisible by `factor`."""
        out = {}
        for e, c in self._terms.items():
            if e % factor:
                raise ValueError(f"Exponent {e} is not divisible by {factor}")
            out[e // factor] = c
        return QLaurent._from_clean(out)

    def divide_one_minus_power(self, j: int) -> "QLaurent":
        """
        Exact quotient by (1 - theta^j), j >= 1.

        Raises ValueError if (1 - theta^j) does not divide this polynomial.
        """
        if j < 1:
            raise ValueError(f"Divisor exponent must be positive, got {j}")
        if not self._terms:
            return self
        lo, hi = min(self._terms), max(self._terms)
        quotient: Dict[int, Fraction] = {}
        # P = (1 - x^j) Q  =>  Q_e = P_e + Q_{e-j}
        for e in range(lo, hi - j + 1):
            c = self._terms.get(e, 0) + quotient.get(e - j, 0)
            if c:
                quotient[e] = c
        result = QLaurent._from_clean(quotient)
        if result - result.shift(j) != self:
            raise ValueError(f"{self} is not divisible by (1 - {_power_label(self.symbol, j)})")
        return result

    # -- display ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"QLaurent({dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exponent, coeff in self.items():
            if exponent == 0:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(_power_label(self.symbol, exponent))
            else:
                parts.append(f"{coeff}*{_power_label(self.symbol, exponent)}")
        return " + ".join(parts).replace("+ -", "- ")


class TQLaurent:
    """Polynomial sum_s t^s c_s(theta) in the touchdown marker t."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[int, object]] = None):
        clean: Dict[int, QLaurent] = {}
        if terms:
            for s, coeff in terms.items():
                if s < 0:
                    raise ValueError(f"Negative power of t: {s}")
                coeff = QLaurent.coerce(coeff)
                if coeff:
                    clean[int(s)] = coeff
        self._terms = clean

    @classmethod
    def _from_clean(cls, terms: Dict[int, QLaurent]) -> "TQLaurent":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "TQLaurent":
        return cls._from_clean({})

    @classmethod
    def one(cls) -> "TQLaurent":
        return cls._from_clean({0: QLaurent.one()})

    @classmethod
    def constant(cls, value: Scalar) -> "TQLaurent":
        return cls({0: QLaurent.constant(value)})

    @classmethod
    def marker(cls) -> "TQLaurent":
        """The touchdown marker t itself."""
        return cls._from_clean({1: QLaurent.one()})

    @classmethod
    def coerce(cls, value) -> "TQLaurent":
        if isinstance(value, TQLaurent):
            return value
        return cls({0: QLaurent.coerce(value)})

    def items(self) -> Iterator[Tuple[int, QLaurent]]:
        for s in sorted(self._terms):
            yield s, self._terms[s]

    def coefficient(self, s: int) -> QLaurent:
        return self._terms.get(s, QLaurent.zero())

    def scalar(self) -> Optional[Fraction]:
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and 0 in self._terms:
            return self._terms[0].scalar()
        return None

    def t_degree(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def at_t(self, value: Scalar) -> QLaurent:
        """Specialize the marker to an exact rational value."""
        value = as_rat(value)
        total = QLaurent.zero()
        for s, coeff in self._terms.items():
            total = total + coeff.scale(value ** s)
        return total

    def divide_by_t(self) -> "TQLaurent":
        if 0 in self._terms:
            raise ValueError(f"{self} is not divisible by t")
        return TQLaurent._from_clean({s - 1: c for s, c in self._terms.items()})

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, TQLaurent):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, QLaurent)):
            return self._terms == TQLaurent.coerce(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "TQLaurent":
        if isinstance(other, (int, Fraction, QLaurent)):
            other = TQLaurent.coerce(other)
        if not isinstance(other, TQLaurent):
            return NotImplemented
        out = dict(self._terms)
        for s, coeff in other._terms.items():
            total = out[s] + coeff if s in out else coeff
            if total:
                out[s] = total
            else:
                out.pop(s, None)
        return TQLaurent._from_clean(out)

    __radd__ = __add__

    def __neg__(self) -> "TQLaurent":
        return TQLaurent._from_clean({s: -c for s, c in self._terms.items()})

    def __sub__(self, other) -> "TQLaurent":
        if isinstance(other, (int, Fraction, QLaurent)):
            other = TQLaurent.coerce(other)
        if not isinstance(other, TQLaurent):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "TQLaurent":
        return (-self) + other

    def __mul__(self, other) -> "TQLaurent":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, QLaurent):
            other = TQLaurent.coerce(other)
        if not isinstance(other, TQLaurent):
            return NotImplemented
        out: Dict[int, QLaurent] = {}
        for s1, c1 in self._terms.items():
            for s2, c2 in other._terms.items():
                product = c1 * c2
                out[s1 + s2] = out[s1 + s2] + product if s1 + s2 in out else product
        return TQLaurent._from_clean({s: c for s, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "TQLaurent":
        factor = as_rat(factor)
        if not factor:
            return TQLaurent.zero()
        return TQLaurent._from_clean({s: c.scale(factor) for s, c in self._terms.items()})

    def shift(self, j: int) -> "TQLaurent":
        return TQLaurent._from_clean({s: c.shift(j) for s, c in self._terms.items()})

    def invert(self) -> "TQLaurent":
        return TQLaurent._from_clean({s: c.invert() for s, c in self._terms.items()})

    def dilate(self, factor: int) -> "TQLaurent":
        return TQLaurent._from_clean({s: c.dilate(factor) for s, c in self._terms.items()})

    def __repr__(self) -> str:
        return f"TQLaurent({dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for s, coeff in self.items():
            if s == 0:
                parts.append(f"({coeff})")
            else:
                parts.append(f"{_power_label('t', s)}*({coeff})")
        return " + ".join(parts)


