"""Rota-Baxter operators and the splitting structures they induce.

Two operators are provided. The strict partial sum on site sequences,
R(f)_n = f_1 + ... + f_{n-1}, satisfies the Rota-Baxter identity of weight 1:

    R(a) R(b) = R( R(a) b + a R(b) + a b ).

The integral-from-the-base-point on operator polynomials satisfies the same
identity with weight 0. Both checks are exact.

The partial sum splits the sitewise product into three tridendriform pieces

    (a < b)_n = a_n R(b)_n,   (a > b)_n = R(a)_n b_n,   (a . b)_n = a_n b_n,

whose sum is the associative sitewise product, and induces a left pre-Lie
product (a |> b)_n = [R(a)_n, b_n] + a_n b_n together with its right-handed
mirror (a <| b)_n = [a_n, R(b)_n] + a_n b_n.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BackendMismatch, DimensionMismatch
from .poly import Poly
from .series import is_zero_op, zero_like

_SCALARS = (int, Fraction, float)


class SiteSequence:
    """A finite sequence of operators indexed by sites 1..N (stored 0-based)."""

    __slots__ = ("values",)

    def __init__(self, values):
        values = tuple(values)
        if not values:
            raise DimensionMismatch("a site sequence needs at least one site")
        self.values = values

    @property
    def n_sites(self) -> int:
        return len(self.values)

    def at(self, n: int):
        """1-based access, matching the indices in the formulas."""
        if not 1 <= n <= len(self.values):
            raise DimensionMismatch(f"site {n} out of 1..{len(self.values)}")
        return self.values[n - 1]

    def _check(self, other: "SiteSequence"):
        if len(self.values) != len(other.values):
            raise DimensionMismatch("site counts differ")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SiteSequence):
            return NotImplemented
        return len(self.values) == len(other.values) and all(
            a == b for a, b in zip(self.values, other.values)
        )

    def __add__(self, other) -> "SiteSequence":
        if not isinstance(other, SiteSequence):
            return NotImplemented
        self._check(other)
        return SiteSequence(a + b for a, b in zip(self.values, other.values))

    def __sub__(self, other) -> "SiteSequence":
        if not isinstance(other, SiteSequence):
            return NotImplemented
        self._check(other)
        return SiteSequence(a - b for a, b in zip(self.values, other.values))

    def __neg__(self) -> "SiteSequence":
        return SiteSequence(-a for a in self.values)

    def __mul__(self, other):
        """Sitewise product with another sequence, or scalar scaling."""
        if isinstance(other, SiteSequence):
            self._check(other)
            return SiteSequence(a * b for a, b in zip(self.values, other.values))
        if isinstance(other, _SCALARS):
            return SiteSequence(a * other for a in self.values)
        return NotImplemented

    def __rmul__(self, other) -> "SiteSequence":
        if isinstance(other, _SCALARS):
            return SiteSequence(a * other for a in self.values)
        return NotImplemented

    def is_zero(self) -> bool:
        return all(is_zero_op(v) for v in self.values)

    def __str__(self) -> str:
        return "[" + "; ".join(str(v) for v in self.values) + "]"

    def __repr__(self) -> str:
        return f"SiteSequence({self})"


def partial_sum(seq: SiteSequence, n: int):
    """Strict prefix sum f_1 + ... + f_{n-1}; the empty sum is the zero operator."""
    acc = zero_like(seq.values[0])
    for v in seq.values[: n - 1]:
        acc = acc + v
    return acc


class PartialSumOp:
    """Weight-1 Rota-Baxter operator: strict partial summation along sites."""

    weight = Fraction(1)

    def __call__(self, seq: SiteSequence) -> SiteSequence:
        out = []
        acc = zero_like(seq.values[0])
        for v in seq.values:
            out.append(acc)
            acc = acc + v
        return SiteSequence(out)


class IntegralOp:
    """Weight-0 Rota-Baxter operator: integral from the base point, on polynomials."""

    weight = Fraction(0)

    def __init__(self, x0=Fraction(0)):
        self.x0 = x0

    def __call__(self, p: Poly) -> Poly:
        return p.integrate(self.x0)


def rb_residual(rb, a, b):
    """R(a)R(b) - R(R(a)b + aR(b) + weight*ab); identically zero for a true operator."""
    ra, rbv = rb(a), rb(b)
    inner = ra * b + a * rbv
    if rb.weight:
        inner = inner + (a * b) * rb.weight
    return ra * rbv - rb(inner)


def trid_prec(a: SiteSequence, b: SiteSequence) -> SiteSequence:
    """(a < b)_n = a_n (b_1 + ... + b_{n-1})."""
    r = PartialSumOp()(b)
    return SiteSequence(x * y for x, y in zip(a.values, r.values))


def trid_succ(a: SiteSequence, b: SiteSequence) -> SiteSequence:
    """(a > b)_n = (a_1 + ... + a_{n-1}) b_n."""
    r = PartialSumOp()(a)
    return SiteSequence(x * y for x, y in zip(r.values, b.values))


def trid_dot(a: SiteSequence, b: SiteSequence, weight=Fraction(1)) -> SiteSequence:
    """(a . b)_n = weight * a_n b_n."""
    out = SiteSequence(x * y for x, y in zip(a.values, b.values))
    if weight != 1:
        out = out * weight
    return out


def trid_star(a: SiteSequence, b: SiteSequence) -> SiteSequence:
    """The associative sum < + > + . of the three splitting pieces."""
    return trid_prec(a, b) + trid_succ(a, b) + trid_dot(a, b)


def trid_apply(kind: str, a: SiteSequence, b: SiteSequence, n: int | None = None):
    """One splitting piece by name ('prec', 'succ', 'dot', 'star'); site value if n given."""
    table = {"prec": trid_prec, "succ": trid_succ, "dot": trid_dot, "star": trid_star}
    if kind not in table:
        raise BackendMismatch(f"unknown tridendriform piece {kind!r}")
    seq = table[kind](a, b)
    return seq if n is None else seq.at(n)


def prelie_left(a: SiteSequence, b: SiteSequence) -> SiteSequence:
    """(a |> b)_n = [a_1+...+a_{n-1}, b_n] + a_n b_n."""
    r = PartialSumOp()(a)
    return SiteSequence(
        s * y - y * s + x * y for s, x, y in zip(r.values, a.values, b.values)
    )


def prelie_right(a: SiteSequence, b: SiteSequence) -> SiteSequence:
    """(a <| b)_n = [a_n, b_1+...+b_{n-1}] + a_n b_n."""
    r = PartialSumOp()(b)
    return SiteSequence(
        x * s - s * x + x * y for s, x, y in zip(r.values, a.values, b.values)
    )


def check_tridendriform(a: SiteSequence, b: SiteSequence, c: SiteSequence) -> list[SiteSequence]:
    """Residuals of the seven splitting axioms; all zero over a Rota-Baxter product.

    1. (a<b)<c = a<(b*c)        5. (a>b).c = a>(b.c)
    2. (a>b)<c = a>(b<c)        6. (a<b).c = a.(b>c)
    3. a>(b>c) = (a*b)>c        7. (a.b)<c = a.(b<c)
    4. (a.b).c = a.(b.c)
    """
    p, s, d = trid_prec, trid_succ, trid_dot

    def star(x, y):
        return p(x, y) + s(x, y) + d(x, y)

    return [
        p(p(a, b), c) - p(a, star(b, c)),
        p(s(a, b), c) - s(a, p(b, c)),
        s(a, s(b, c)) - s(star(a, b), c),
        d(d(a, b), c) - d(a, d(b, c)),
        d(s(a, b), c) - s(a, d(b, c)),
        d(p(a, b), c) - d(a, s(b, c)),
        p(d(a, b), c) - d(a, p(b, c)),
    ]


def check_prelie_left(a: SiteSequence, b: SiteSequence, c: SiteSequence) -> SiteSequence:
    """Left pre-Lie residual: the associator of |> must be symmetric in a, b."""
    t = prelie_left
    return t(t(a, b), c) - t(a, t(b, c)) - (t(t(b, a), c) - t(b, t(a, c)))


def check_prelie_right(a: SiteSequence, b: SiteSequence, c: SiteSequence) -> SiteSequence:
    """Right pre-Lie residual: the associator of <| must be symmetric in b, c."""
    t = prelie_right
    return t(t(a, b), c) - t(a, t(b, c)) - (t(t(a, c), b) - t(a, t(c, b)))
