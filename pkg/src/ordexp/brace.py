"""Pre-Lie flows, the brace product, and BCH composition.

Degree truncation makes the carrier a nilpotent pre-Lie algebra, so the
exponential flow W(a) = a + a|>a/2! + a|>(a|>a)/3! + ... is a bijection.
Its inverse Omega and the product a o b = a + e^{L_Omega(a)}(b) give a
left brace on the same underlying addition. The BCH composition C(a, b)
with W(a) o W(b) = W(C(a, b)) is read off from log(exp exp) in the free
associative algebra and reduced to nested brackets, so no BCH coefficient
is ever hand-coded.
"""

from fractions import Fraction

from .errors import BackendMismatch, DimensionMismatch
from .freealg import FreeElement
from .series import AlphaSeries


def _zero_of(value):
    return value * Fraction(0)


class GradedPreLieElement:
    """Element of a pre-Lie algebra graded by degrees 1..order.

    Components beyond the truncation order are discarded. The pre-Lie
    product is a bilinear callable on component values; component values
    only need addition, subtraction, scalar multiples, and is_zero.
    """

    __slots__ = ("order", "product", "components", "like")

    def __init__(self, order, components, product, like=None):
        if order < 1:
            raise DimensionMismatch("truncation order must be at least 1")
        clean = {}
        for d, v in components.items():
            if d < 1:
                raise DimensionMismatch("pre-Lie components start at degree 1")
            if d <= order and not v.is_zero():
                clean[d] = v
        if like is None:
            if not clean:
                raise DimensionMismatch("an all-zero element needs a like value")
            like = _zero_of(next(iter(clean.values())))
        self.order = order
        self.product = product
        self.components = clean
        self.like = like

    @staticmethod
    def homogeneous(value, degree, order, product) -> "GradedPreLieElement":
        return GradedPreLieElement(
            order, {degree: value}, product, like=_zero_of(value)
        )

    def zero(self) -> "GradedPreLieElement":
        return GradedPreLieElement(self.order, {}, self.product, like=self.like)

    def component(self, degree: int):
        return self.components.get(degree, self.like)

    def is_zero(self) -> bool:
        return not self.components

    def _check(self, other: "GradedPreLieElement"):
        if not isinstance(other, GradedPreLieElement):
            raise BackendMismatch(f"expected a graded element, got {type(other).__name__}")
        if self.order != other.order:
            raise BackendMismatch(f"truncation {self.order} vs {other.order}")
        if self.product is not other.product:
            raise BackendMismatch("elements carry different pre-Lie products")

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedPreLieElement):
            return NotImplemented
        return self.order == other.order and self.components == other.components

    __hash__ = None

    def __add__(self, other) -> "GradedPreLieElement":
        self._check(other)
        out = dict(self.components)
        for d, v in other.components.items():
            out[d] = out[d] + v if d in out else v
        return GradedPreLieElement(self.order, out, self.product, like=self.like)

    def __sub__(self, other) -> "GradedPreLieElement":
        return self + (-other)

    def __neg__(self) -> "GradedPreLieElement":
        return self.scale(Fraction(-1))

    def scale(self, s) -> "GradedPreLieElement":
        return GradedPreLieElement(
            self.order,
            {d: v * s for d, v in self.components.items()},
            self.product,
            like=self.like,
        )

    def prod(self, other) -> "GradedPreLieElement":
        """Bilinear extension of the pre-Lie product; degrees add."""
        self._check(other)
        out = {}
        for d1, v1 in self.components.items():
            for d2, v2 in other.components.items():
                d = d1 + d2
                if d > self.order:
                    continue
                w = self.product(v1, v2)
                out[d] = out[d] + w if d in out else w
        return GradedPreLieElement(self.order, out, self.product, like=self.like)

    def bracket(self, other) -> "GradedPreLieElement":
        """[a, b] = a|>b - b|>a, the Lie bracket induced on the carrier."""
        return self.prod(other) - other.prod(self)

    def __repr__(self) -> str:
        degs = ",".join(str(d) for d in sorted(self.components))
        return f"GradedPreLieElement(order={self.order}, degrees=[{degs}])"


def _retruncate(a: GradedPreLieElement, order) -> GradedPreLieElement:
    if order is None or order == a.order:
        return a
    return GradedPreLieElement(order, a.components, a.product, like=a.like)


def exp_flow(a: GradedPreLieElement, b: GradedPreLieElement) -> GradedPreLieElement:
    """e^{L_a}(b) = b + a|>b + a|>(a|>b)/2! + ...; finite by truncation."""
    a._check(b)
    out = b
    term = b
    for k in range(1, a.order + 1):
        term = a.prod(term).scale(Fraction(1, k))
        if term.is_zero():
            break
        out = out + term
    return out


def w_map(a: GradedPreLieElement, order=None) -> GradedPreLieElement:
    """The flow W(a) = a + a|>a/2! + a|>(a|>a)/3! + ..., right-nested."""
    a = _retruncate(a, order)
    out = a
    term = a
    for k in range(2, a.order + 1):
        term = a.prod(term).scale(Fraction(1, k))
        if term.is_zero():
            break
        out = out + term
    return out


def omega_map(b: GradedPreLieElement, order=None) -> GradedPreLieElement:
    """The compositional inverse of w_map, solved degree by degree.

    Each fixed-point sweep x <- b - (W(x) - x) settles one more degree,
    since the degree-d part of W(x) - x only involves lower degrees of x.
    """
    b = _retruncate(b, order)
    x = b
    for _ in range(b.order):
        x = b - (w_map(x) - x)
    return x


def bch(a: GradedPreLieElement, b: GradedPreLieElement, order=None) -> GradedPreLieElement:
    """BCH composition C(a, b) in the Lie algebra induced by the carrier.

    log(exp(x)exp(y)) is expanded in the free associative algebra; each
    word is a Lie-series term, so the left-nested bracketing scaled by
    1/length projects it to brackets, which are then evaluated on a, b.
    """
    a = _retruncate(a, order)
    b = _retruncate(b, order)
    a._check(b)
    depth = a.order
    one = FreeElement.one()
    ex = AlphaSeries.from_parts(depth, {1: FreeElement.gen("x")}, like=one).exp()
    ey = AlphaSeries.from_parts(depth, {1: FreeElement.gen("y")}, like=one).exp()
    logs = (ex * ey).log()
    letters = {"x": a, "y": b}
    out = a.zero()
    for k in range(1, depth + 1):
        for word, coeff in logs.coeff(k).terms.items():
            acc = letters[word[0].name]
            for letter in word[1:]:
                acc = acc.bracket(letters[letter.name])
            out = out + acc.scale(coeff * Fraction(1, len(word)))
    return out


def brace_mul(a: GradedPreLieElement, b: GradedPreLieElement, order=None) -> GradedPreLieElement:
    """The brace product a o b = a + e^{L_Omega(a)}(b)."""
    a = _retruncate(a, order)
    b = _retruncate(b, order)
    a._check(b)
    return a + exp_flow(omega_map(a), b)


def left_brace_residual(a, b, c) -> GradedPreLieElement:
    """a o (b+c) + a - a o b - a o c; zero in a left brace."""
    return brace_mul(a, b + c) + a - brace_mul(a, b) - brace_mul(a, c)


def circle_assoc_residual(a, b, c) -> GradedPreLieElement:
    """(a o b) o c - a o (b o c); zero since the flows form a group."""
    return brace_mul(brace_mul(a, b), c) - brace_mul(a, brace_mul(b, c))


def flow_composition_residual(a, b) -> GradedPreLieElement:
    """W(a) o W(b) - W(C(a, b)); zero by the BCH composition law."""
    return brace_mul(w_map(a), w_map(b)) - w_map(bch(a, b))
