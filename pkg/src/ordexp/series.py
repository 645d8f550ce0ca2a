"""Truncated formal power series in one grading parameter over an operator algebra.

A series of order D keeps coefficients c_0..c_D and drops everything above.
Coefficients may be plain numbers, Matrix, or FreeElement; mixing backends in
one arithmetic expression raises BackendMismatch. exp/log/inverse work degree
by degree and are exact for exact coefficients: exp needs a vanishing constant
term, log needs a unit constant term, and inverse needs an invertible one.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BackendMismatch, DimensionMismatch
from .freealg import FreeElement
from .matrix import Matrix

_SCALARS = (int, Fraction, float)


def zero_like(x):
    if isinstance(x, Matrix):
        return Matrix.zeros(x.rows, x.cols)
    if isinstance(x, FreeElement):
        return FreeElement.zero()
    if isinstance(x, _SCALARS):
        return 0.0 if isinstance(x, float) else Fraction(0)
    raise BackendMismatch(f"unknown operator type {type(x).__name__}")


def one_like(x):
    if isinstance(x, Matrix):
        if not x.is_square():
            raise DimensionMismatch("identity only exists for square matrices")
        return Matrix.identity(x.rows)
    if isinstance(x, FreeElement):
        return FreeElement.one()
    if isinstance(x, _SCALARS):
        return 1.0 if isinstance(x, float) else Fraction(1)
    raise BackendMismatch(f"unknown operator type {type(x).__name__}")


def is_zero_op(x) -> bool:
    if isinstance(x, Matrix):
        return x.is_zero()
    return not x


def is_exact_op(x) -> bool:
    if isinstance(x, Matrix):
        return x.is_exact()
    return not isinstance(x, float)


def _check_compatible(a, b):
    if isinstance(a, Matrix) != isinstance(b, Matrix) or isinstance(a, FreeElement) != isinstance(b, FreeElement):
        raise BackendMismatch(f"{type(a).__name__} vs {type(b).__name__}")
    if isinstance(a, Matrix) and (a.rows != b.rows or a.cols != b.cols):
        raise DimensionMismatch(f"{a.rows}x{a.cols} vs {b.rows}x{b.cols}")


class AlphaSeries:
    """Coefficient list c_0..c_D; all arithmetic truncates at D."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise DimensionMismatch("series needs at least the constant coefficient")
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int):
        if 0 <= k <= self.order:
            return self.coeffs[k]
        return zero_like(self.coeffs[0])

    @staticmethod
    def one(order: int, like) -> "AlphaSeries":
        z = zero_like(like)
        return AlphaSeries([one_like(like)] + [z] * order)

    @staticmethod
    def zero(order: int, like) -> "AlphaSeries":
        z = zero_like(like)
        return AlphaSeries([z] * (order + 1))

    @staticmethod
    def from_parts(order: int, parts: dict, like) -> "AlphaSeries":
        """Series with the given degree -> coefficient entries, zeros elsewhere."""
        cs = [zero_like(like) for _ in range(order + 1)]
        for d, c in parts.items():
            if 0 <= d <= order:
                cs[d] = c
        return AlphaSeries(cs)

    def _binop_check(self, other: "AlphaSeries"):
        if self.order != other.order:
            raise DimensionMismatch(f"series orders differ: {self.order} vs {other.order}")
        _check_compatible(self.coeffs[0], other.coeffs[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlphaSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "AlphaSeries":
        if not isinstance(other, AlphaSeries):
            return NotImplemented
        self._binop_check(other)
        return AlphaSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other) -> "AlphaSeries":
        if not isinstance(other, AlphaSeries):
            return NotImplemented
        self._binop_check(other)
        return AlphaSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "AlphaSeries":
        return AlphaSeries([-a for a in self.coeffs])

    def scale(self, s) -> "AlphaSeries":
        return AlphaSeries([c * s for c in self.coeffs])

    def __mul__(self, other) -> "AlphaSeries":
        if isinstance(other, _SCALARS):
            return self.scale(other)
        if not isinstance(other, AlphaSeries):
            return NotImplemented
        self._binop_check(other)
        D = self.order
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(D + 1):
            acc = None
            for k in range(n + 1):
                if is_zero_op(a[k]) or is_zero_op(b[n - k]):
                    continue
                term = a[k] * b[n - k]
                acc = term if acc is None else acc + term
            out.append(acc if acc is not None else zero_like(a[0]))
        return AlphaSeries(out)

    def __rmul__(self, other) -> "AlphaSeries":
        if isinstance(other, _SCALARS):
            return self.scale(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return all(is_zero_op(c) for c in self.coeffs)

    def truncate(self, order: int) -> "AlphaSeries":
        if order <= self.order:
            return AlphaSeries(self.coeffs[:order + 1])
        z = zero_like(self.coeffs[0])
        return AlphaSeries(self.coeffs + (z,) * (order - self.order))

    def flip(self) -> "AlphaSeries":
        """Substitute alpha -> -alpha."""
        return AlphaSeries([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    def _frac(self, num: int, den: int):
        return num / den if not is_exact_op(self.coeffs[0]) else Fraction(num, den)

    def exp(self) -> "AlphaSeries":
        if not is_zero_op(self.coeffs[0]):
            raise BackendMismatch("exp needs a vanishing constant term")
        D = self.order
        result = AlphaSeries.one(D, self.coeffs[0])
        term = result
        for k in range(1, D + 1):
            term = (term * self).scale(self._frac(1, k))
            result = result + term
        return result

    def log(self) -> "AlphaSeries":
        u = self - AlphaSeries.one(self.order, self.coeffs[0])
        if not is_zero_op(u.coeffs[0]):
            raise BackendMismatch("log needs constant term equal to the identity")
        D = self.order
        result = AlphaSeries.zero(D, self.coeffs[0])
        power = AlphaSeries.one(D, self.coeffs[0])
        for k in range(1, D + 1):
            power = power * u
            result = result + power.scale(self._frac((-1) ** (k + 1), k))
        return result

    def inverse(self) -> "AlphaSeries":
        """Multiplicative inverse; the constant term must be invertible."""
        c0 = self.coeffs[0]
        D = self.order
        if isinstance(c0, Matrix):
            c0inv = c0.inverse()
            unit = AlphaSeries([c0inv * c for c in self.coeffs])
        elif isinstance(c0, FreeElement):
            if list(c0.terms.keys()) != [()]:
                raise BackendMismatch("free-element series invert only over a scalar constant term")
            c0inv = FreeElement({(): 1 / c0.terms[()]})
            unit = AlphaSeries([c0inv * c for c in self.coeffs])
        else:
            if not c0:
                raise BackendMismatch("series with zero constant term has no inverse")
            c0inv = 1.0 / c0 if isinstance(c0, float) else Fraction(1) / c0
            unit = self.scale(c0inv)
        # unit = 1 + u, so unit^{-1} is the alternating Neumann sum, and
        # self^{-1} = unit^{-1} c0^{-1} from self = c0 * unit.
        u = unit - AlphaSeries.one(D, c0)
        result = AlphaSeries.one(D, c0)
        power = AlphaSeries.one(D, c0)
        for k in range(1, D + 1):
            power = power * u
            result = result + power.scale((-1) ** k)
        if isinstance(c0inv, (Matrix, FreeElement)):
            return AlphaSeries([c * c0inv for c in result.coeffs])
        return result.scale(c0inv)

    def __str__(self) -> str:
        return " + ".join(f"a^{k} ({c})" for k, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"AlphaSeries(order={self.order})"


def ad(a, b):
    return a * b - b * a


def ad_pow(a, b, n: int):
    """Iterated commutator [a,[a,...[a,b]]] with n brackets; n=0 returns b."""
    if n < 0:
        raise BackendMismatch("ad power needs n >= 0")
    out = b
    for _ in range(n):
        out = ad(a, out)
    return out
