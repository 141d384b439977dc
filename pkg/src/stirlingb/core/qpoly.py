"""Exact polynomials in q with checked 64-bit integer coefficients.

QPoly is the value type of every q-Stirling number in the package; TPoly is a
polynomial in t whose coefficients are QPoly and carries the product
(generating-function) identities.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from stirlingb.core.errors import ArithmeticOverflowError, DomainError

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

Scalar = Union[int, "QPoly"]


def _checked(values: Iterable[int], operation: str) -> tuple[int, ...]:
    """Strip trailing zeros and reject any coefficient outside int64."""
    coeffs = list(values)
    for value in coeffs:
        if value < INT64_MIN or value > INT64_MAX:
            raise ArithmeticOverflowError(operation, value)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class QPoly:
    """Univariate integer polynomial in q, ascending coefficient order."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _checked(self.coeffs, "construct"))

    @classmethod
    def zero(cls) -> "QPoly":
        return cls(())

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def constant(cls, value: int) -> "QPoly":
        return cls((value,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "QPoly":
        """Return coefficient * q^exponent."""
        if exponent < 0:
            raise DomainError(f"monomial exponent must be >= 0, got {exponent}")
        return cls((0,) * exponent + (coefficient,))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "QPoly":
        """Sum q^e over a stream of exponents (a generating function)."""
        counts: dict[int, int] = {}
        for e in exponents:
            counts[e] = counts.get(e, 0) + 1
        if not counts:
            return cls.zero()
        dense = [0] * (max(counts) + 1)
        for e, c in counts.items():
            dense[e] = c
        return cls(tuple(dense))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @staticmethod
    def _coerce(other: Scalar) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly.constant(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Scalar) -> "QPoly":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, rhs.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(_checked(out, "add"))

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(_checked((-c for c in self.coeffs), "neg"))

    def __sub__(self, other: Scalar) -> "QPoly":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        a, b = list(self.coeffs), rhs.coeffs
        if len(a) < len(b):
            a.extend([0] * (len(b) - len(a)))
        for i, c in enumerate(b):
            a[i] -= c
        return QPoly(_checked(a, "sub"))

    def __rsub__(self, other: Scalar) -> "QPoly":
        lhs = self._coerce(other)
        if lhs is NotImplemented:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: Scalar) -> "QPoly":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, rhs.coeffs
        if not a or not b:
            return QPoly.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return QPoly(_checked(out, "mul"))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QPoly":
        if exponent < 0:
            raise DomainError(f"pow exponent must be >= 0, got {exponent}")
        result = QPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def substitute_q_power(self, e: int) -> "QPoly":
        """Replace q by q^e."""
        if e < 1:
            raise DomainError(f"substitution power must be >= 1, got {e}")
        if not self.coeffs:
            return self
        top = self.degree * e
        if top > INT64_MAX:
            raise ArithmeticOverflowError("substitute_q_power", top)
        out = [0] * (top + 1)
        for d, c in enumerate(self.coeffs):
            out[d * e] = c
        return QPoly(tuple(out))

    def eval_at_one(self) -> int:
        """Sum of coefficients, i.e. the value at q = 1."""
        total = sum(self.coeffs)
        if total < INT64_MIN or total > INT64_MAX:
            raise ArithmeticOverflowError("eval_at_one", total)
        return total

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {"coeffs": list(self.coeffs)}

    def __str__(self) -> str:
        """Render as "c0 + c1*q + c2*q^2", omitting zero terms and unit factors."""
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                body = str(abs(c))
            else:
                var = "q" if d == 1 else f"q^{d}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def q_bracket(n: int) -> QPoly:
    """Return [n]_q = 1 + q + ... + q^(n-1); the zero polynomial for n = 0."""
    if n < 0:
        raise DomainError(f"q_bracket needs n >= 0, got {n}")
    return QPoly((1,) * n)


def _qpoly_checked(values: Iterable[QPoly]) -> tuple[QPoly, ...]:
    coeffs = list(values)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class TPoly:
    """Polynomial in t with QPoly coefficients, ascending degree in t."""

    coeffs: tuple[QPoly, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _qpoly_checked(self.coeffs))

    @classmethod
    def one(cls) -> "TPoly":
        return cls((QPoly.one(),))

    @classmethod
    def t_power(cls, k: int) -> "TPoly":
        return cls((QPoly.zero(),) * k + (QPoly.one(),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> QPoly:
        """Coefficient of t^k (zero outside the stored range)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return QPoly.zero()

    def __add__(self, other: "TPoly") -> "TPoly":
        size = max(len(self.coeffs), len(other.coeffs))
        return TPoly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(size)))

    def scale(self, factor: QPoly) -> "TPoly":
        return TPoly(tuple(c * factor for c in self.coeffs))

    def times_linear(self, constant: QPoly) -> "TPoly":
        """Multiply by (t + constant)."""
        if not self.coeffs:
            return self
        out = [QPoly.zero()] * (len(self.coeffs) + 1)
        for k, c in enumerate(self.coeffs):
            out[k + 1] = out[k + 1] + c
            out[k] = out[k] + c * constant
        return TPoly(tuple(out))

    def __mul__(self, other: "TPoly") -> "TPoly":
        if not self.coeffs or not other.coeffs:
            return TPoly()
        out = [QPoly.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return TPoly(tuple(out))

    def to_dict(self) -> dict:
        """Convert to dictionary."""
        return {"t_coeffs": [c.to_dict() for c in self.coeffs]}

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            var = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            terms.append(f"({c})" + (f"*{var}" if var else ""))
        return " + ".join(terms)


def expand_linear_factors(constants: Sequence[QPoly]) -> TPoly:
    """Expand the product of (t + c) over the given constants; [] gives 1."""
    result = TPoly.one()
    for c in constants:
        result = result.times_linear(c)
    return result
