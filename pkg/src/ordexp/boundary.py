"""Gauge sequences and double-row monodromies on a finite chain.

A gauge transformation intertwines two chains of local transition
operators: a sequence of invertible operators G_n relates the families
L_n and Lhat_n when

    G_{n+1} = Lhat_n G_n L_n^{-1},        n = 1..N.

Given both families and an initial value G_1, the whole sequence follows
in closed form from the two prefix products,

    G_n = That_n G_1 T_n^{-1},   T_{n+1} = L_n T_n,   That_{n+1} = Lhat_n That_n,

and `gauge_solve` builds it that way, then re-checks the difference
equation site by site and reports the residuals.

A double-row monodromy sandwiches a boundary operator K between a
forward and a backward ordered product,

    B_{n+1} = T_{n+1} K That_{n+1},   T_{n+1} = L_n ... L_1,
                                      That_{n+1} = Lhat_1 ... Lhat_n,

which solves the two-sided difference equation

    B_{n+1} = L_n B_n Lhat_n,   B_1 = K.

`double_row_monodromy` builds the sequence and reports the residuals of
that equation.  The reflection choice Lhat(alpha) = L^{-1}(-alpha),
realized by `reflection_hat`, produces a backward family from a forward
one by series inversion at negated coupling.

Everything here is truncated power-series arithmetic over whatever
operator backend the families carry, so the residual checks are exact
for exact inputs.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionMismatch, SingularOperator, UnsupportedOrder
from .expansion import BACKWARD, FORWARD, SiteOperatorFamily
from .freealg import FreeElement
from .matrix import Matrix
from .series import AlphaSeries, _check_compatible, is_zero_op


def _op_max_abs(op):
    if isinstance(op, Matrix):
        return op.max_abs()
    if isinstance(op, FreeElement):
        return max((abs(c) for c in op.terms.values()), default=Fraction(0))
    return abs(op)


def _series_max_abs(series: AlphaSeries):
    return max(_op_max_abs(c) for c in series.coeffs)


def _require_invertible(op, what: str):
    """Invertibility of a single operator, by backend.

    Matrices must be nonsingular, scalars nonzero, and free elements need
    a nonzero coefficient on the empty word (the series-inverse criterion).
    """
    if isinstance(op, Matrix):
        op.inverse()
        return
    if isinstance(op, FreeElement):
        if not op.terms.get((), 0):
            raise SingularOperator(f"{what} needs a nonzero scalar part")
        return
    if not op:
        raise SingularOperator(f"{what} must be nonzero")


def _check_order(order: int):
    if order < 1:
        raise UnsupportedOrder("truncation order must be at least 1")


class GaugeProblem:
    """Two same-size families, an invertible initial value, and a truncation."""

    __slots__ = ("forward", "target", "initial", "order")

    def __init__(self, forward: SiteOperatorFamily, target: SiteOperatorFamily,
                 initial, order: int):
        if forward.n_sites != target.n_sites:
            raise DimensionMismatch(
                f"family sizes differ: {forward.n_sites} vs {target.n_sites}")
        _check_compatible(forward.like, target.like)
        _check_compatible(initial, forward.like)
        _require_invertible(initial, "gauge initial value")
        _check_order(order)
        self.forward = forward
        self.target = target
        self.initial = initial
        self.order = order


class BoundaryProblem:
    """Forward and backward families with a boundary operator between them.

    The boundary operator may be handed over as a coupling series or as a
    single constant operator; its constant term must be invertible.
    """

    __slots__ = ("forward", "backward", "boundary", "order")

    def __init__(self, forward: SiteOperatorFamily, backward: SiteOperatorFamily,
                 boundary, order: int):
        if forward.n_sites != backward.n_sites:
            raise DimensionMismatch(
                f"family sizes differ: {forward.n_sites} vs {backward.n_sites}")
        _check_compatible(forward.like, backward.like)
        _check_order(order)
        if isinstance(boundary, AlphaSeries):
            boundary = boundary.truncate(order)
        else:
            boundary = AlphaSeries.from_parts(order, {0: boundary}, like=forward.like)
        _check_compatible(boundary.coeff(0), forward.like)
        _require_invertible(boundary.coeff(0), "boundary operator constant term")
        self.forward = forward
        self.backward = backward
        self.boundary = boundary
        self.order = order


class GaugeReport:
    """Gauge sequence G_1..G_{N+1} and the difference-equation residuals.

    `gauges[n-1]` is G_n; `residuals[n-1]` is G_{n+1} - Lhat_n G_n L_n^{-1}.
    """

    __slots__ = ("gauges", "residuals")

    def __init__(self, gauges, residuals):
        self.gauges = list(gauges)
        self.residuals = list(residuals)

    def is_zero(self) -> bool:
        return all(r.is_zero() for r in self.residuals)

    def max_abs(self):
        if not self.residuals:
            return Fraction(0)
        return max(_series_max_abs(r) for r in self.residuals)


class BoundaryReport:
    """Double-row sequence B_1..B_{N+1} and the residuals of its recursion.

    `rows[n-1]` is B_n; `residuals[n-1]` is B_{n+1} - L_n B_n Lhat_n.
    """

    __slots__ = ("rows", "residuals")

    def __init__(self, rows, residuals):
        self.rows = list(rows)
        self.residuals = list(residuals)

    def is_zero(self) -> bool:
        return all(r.is_zero() for r in self.residuals)

    def max_abs(self):
        if not self.residuals:
            return Fraction(0)
        return max(_series_max_abs(r) for r in self.residuals)


def gauge_solve(p: GaugeProblem) -> GaugeReport:
    """Gauge sequence from the prefix products, with residuals re-checked.

    The construction G_n = That_n G_1 T_n^{-1} satisfies the difference
    equation identically, so nonzero residuals indicate a broken
    invertibility assumption rather than a bad problem.
    """
    D = p.order
    g1 = AlphaSeries.from_parts(D, {0: p.initial}, like=p.forward.like)
    gauges = []
    t = AlphaSeries.one(D, like=p.forward.like)
    t_hat = AlphaSeries.one(D, like=p.target.like)
    for n in range(1, p.forward.n_sites + 2):
        gauges.append(t_hat * g1 * t.inverse())
        if n <= p.forward.n_sites:
            t = p.forward.lax_series(n, D) * t
            t_hat = p.target.lax_series(n, D) * t_hat
    residuals = []
    for n in range(1, p.forward.n_sites + 1):
        step = p.target.lax_series(n, D) * gauges[n - 1] * p.forward.lax_series(n, D).inverse()
        residuals.append(gauges[n] - step)
    return GaugeReport(gauges, residuals)


def double_row_monodromy(p: BoundaryProblem) -> BoundaryReport:
    """Double-row sequence B_n = T_n K That_n with its recursion residuals.

    The forward factor grows on the left, the backward factor on the
    right, so B_{n+1} = L_n B_n Lhat_n holds by associativity alone; the
    residuals are computed from independently assembled products.
    """
    D = p.order
    rows = [p.boundary]
    t = AlphaSeries.one(D, like=p.forward.like)
    t_hat = AlphaSeries.one(D, like=p.backward.like)
    for n in range(1, p.forward.n_sites + 1):
        t = p.forward.lax_series(n, D) * t
        t_hat = t_hat * p.backward.lax_series(n, D)
        rows.append(t * p.boundary * t_hat)
    residuals = []
    for n in range(1, p.forward.n_sites + 1):
        step = p.forward.lax_series(n, D) * rows[n - 1] * p.backward.lax_series(n, D)
        residuals.append(rows[n] - step)
    return BoundaryReport(rows, residuals)


def reflection_hat(fam: SiteOperatorFamily, order: int) -> SiteOperatorFamily:
    """Backward family Lhat(alpha) = L^{-1}(-alpha), truncated.

    Each site's series is inverted after negating the coupling, and the
    resulting coefficients through `order` become the new family; the
    canonical direction flips.  Applying the map twice returns the
    original family up to the same truncation.
    """
    _check_order(order)
    entries = {}
    for site in range(1, fam.n_sites + 1):
        hat = fam.lax_series(site, order).flip().inverse()
        for m in range(1, order + 1):
            c = hat.coeff(m)
            if not is_zero_op(c):
                entries[(site, m)] = c
    direction = BACKWARD if fam.direction == FORWARD else FORWARD
    return SiteOperatorFamily(fam.n_sites, entries, direction=direction, like=fam.like)
