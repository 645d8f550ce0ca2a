"""Ordered-product expansions on a finite chain.

A chain of N sites carries one local transition operator per site,
given as a polynomial in the coupling:

    site n:  1 + sum_m alpha^m L_n^{(m)}

The full transition operator is the ordered product of the local ones.
Two orderings occur: "forward" multiplies site N leftmost, "backward"
multiplies site 1 leftmost.  This module expands the ordered product in
powers of alpha (the discrete time-ordered series), converts it to the
logarithm (the discrete Magnus series), and evaluates the closed
commutator and pre-Lie formulas for the first three logarithm
coefficients so they can be compared against the series oracle.

Operators are polymorphic: exact scalars, Matrix, or FreeElement all
work, as long as one kind is used per family.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import combinations

from .errors import DimensionMismatch, SingularOperator, UnsupportedOrder
from .rotabaxter import SiteSequence, prelie_left, prelie_right, trid_prec, trid_succ
from .series import AlphaSeries, _check_compatible, one_like, zero_like

FORWARD = "forward"
BACKWARD = "backward"


def compositions(total: int, parts: int):
    """Yield tuples of `parts` positive integers summing to `total`."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _comm(a, b):
    return a * b - b * a


class SiteOperatorFamily:
    """The local expansion data of a chain: operator L_n^{(m)} per site and degree.

    `entries` maps (site, degree) to an operator; missing pairs are zero.
    Sites are 1-based.  `direction` fixes which ordered product the family
    canonically builds.  `like` is a template operator fixing the backend
    shape; it is inferred from the entries when omitted.
    """

    __slots__ = ("n_sites", "entries", "direction", "like")

    def __init__(self, n_sites, entries, direction=FORWARD, like=None):
        if n_sites < 0:
            raise DimensionMismatch("need a nonnegative number of sites")
        if direction not in (FORWARD, BACKWARD):
            raise ValueError(f"unknown direction {direction!r}")
        clean = {}
        for (site, degree), op in entries.items():
            if not 1 <= site <= n_sites:
                raise DimensionMismatch(f"site {site} outside 1..{n_sites}")
            if degree < 1:
                raise DimensionMismatch(f"degree {degree} must be positive")
            clean[(site, degree)] = op
        if like is None:
            if not clean:
                raise DimensionMismatch("empty family needs an explicit template")
            like = next(iter(clean.values()))
        for op in clean.values():
            _check_compatible(op, like)
        self.n_sites = n_sites
        self.entries = clean
        self.direction = direction
        self.like = like

    def entry(self, site: int, degree: int):
        op = self.entries.get((site, degree))
        return zero_like(self.like) if op is None else op

    def max_degree(self) -> int:
        return max((d for (_, d) in self.entries), default=0)

    def degree_sequence(self, degree: int) -> SiteSequence:
        """All sites' operators of one degree, as a site sequence."""
        return SiteSequence([self.entry(n, degree) for n in range(1, self.n_sites + 1)])

    def lax_series(self, site: int, order: int) -> AlphaSeries:
        parts = {m: self.entry(site, m) for m in range(1, order + 1)}
        series = AlphaSeries.from_parts(order, parts, like=self.like)
        return series + AlphaSeries.one(order, like=self.like)

    def reversed(self) -> "SiteOperatorFamily":
        """The same local data read in the opposite site order."""
        flipped = {
            (self.n_sites + 1 - site, degree): op
            for (site, degree), op in self.entries.items()
        }
        other = BACKWARD if self.direction == FORWARD else FORWARD
        return SiteOperatorFamily(self.n_sites, flipped, direction=other, like=self.like)


def ordered_product(family: SiteOperatorFamily, order: int, descending: bool) -> AlphaSeries:
    result = AlphaSeries.one(order, like=family.like)
    sites = range(family.n_sites, 0, -1) if descending else range(1, family.n_sites + 1)
    for site in sites:
        result = result * family.lax_series(site, order)
    return result


def monodromy(family: SiteOperatorFamily, order: int) -> AlphaSeries:
    """Ordered product of all local operators, per the family's direction."""
    return ordered_product(family, order, descending=family.direction == FORWARD)


def prefix_monodromy(family: SiteOperatorFamily, upto: int, order: int) -> AlphaSeries:
    """Partial ordered product over sites 1..upto-1.

    Satisfies T_1 = 1 and T_{n+1} = L_n T_n (forward) or T_{n+1} = T_n L_n
    (backward), so `upto = n_sites + 1` reproduces the full product.
    """
    if not 1 <= upto <= family.n_sites + 1:
        raise DimensionMismatch(f"prefix end {upto} outside 1..{family.n_sites + 1}")
    result = AlphaSeries.one(order, like=family.like)
    for site in range(1, upto):
        lax = family.lax_series(site, order)
        result = lax * result if family.direction == FORWARD else result * lax
    return result


def _sum_sites(seq: SiteSequence):
    return reduce(lambda a, b: a + b, seq.values)


def dyson_terms(family: SiteOperatorFamily, order: int, method: str = "direct"):
    """Coefficients [T^(0)=1, T^(1), ..., T^(order)] of the ordered product.

    `method="direct"` enumerates site-ordered products per degree
    composition; `method="tridendriform"` folds the same compositions
    through the half-shuffle actions (right-nested for forward families,
    left-nested for backward ones).  Both agree with `monodromy`.
    """
    if method == "direct":
        return _dyson_direct(family, order)
    if method == "tridendriform":
        return _dyson_trid(family, order)
    raise ValueError(f"unknown method {method!r}")


def _dyson_direct(family, order):
    terms = [one_like(family.like)]
    for m in range(1, order + 1):
        total = zero_like(family.like)
        for k in range(1, m + 1):
            for comp in compositions(m, k):
                for sites in combinations(range(1, family.n_sites + 1), k):
                    factors = [family.entry(sites[i], comp[i]) for i in range(k)]
                    if any(_is_zero(f) for f in factors):
                        continue
                    if family.direction == FORWARD:
                        factors = factors[::-1]
                    total = total + reduce(lambda a, b: a * b, factors)
        terms.append(total)
    return terms


def _dyson_trid(family, order):
    seqs = {d: family.degree_sequence(d) for d in range(1, order + 1)}
    terms = [one_like(family.like)]
    for m in range(1, order + 1):
        total = zero_like(family.like)
        for k in range(1, m + 1):
            for comp in compositions(m, k):
                if family.direction == FORWARD:
                    word = seqs[comp[0]]
                    for degree in comp[1:]:
                        word = trid_prec(seqs[degree], word)
                else:
                    word = seqs[comp[0]]
                    for degree in comp[1:]:
                        word = trid_succ(word, seqs[degree])
                total = total + _sum_sites(word)
        terms.append(total)
    return terms


def _is_zero(op):
    if hasattr(op, "is_zero"):
        zero = op.is_zero
        return zero() if callable(zero) else zero
    return not op


def pi_table(dyson: list, order: int) -> dict:
    """Power table of the series tail: pi[(n, k)] = coefficient of alpha^n in (T-1)^k."""
    table = {}
    for n in range(1, order + 1):
        table[(n, 1)] = dyson[n]
    for k in range(2, order + 1):
        for n in range(k, order + 1):
            total = None
            for m in range(1, n - k + 2):
                piece = table[(m, 1)] * table[(n - m, k - 1)]
                total = piece if total is None else total + piece
            table[(n, k)] = total
    return table


def magnus_from_dyson(dyson: list, order: int) -> list:
    """Logarithm coefficients [Q^(1), ..., Q^(order)] via the power table."""
    table = pi_table(dyson, order)
    out = []
    for m in range(1, order + 1):
        total = None
        for k in range(1, m + 1):
            signed = Fraction((-1) ** (k + 1), k) * table[(m, k)]
            total = signed if total is None else total + signed
        out.append(total)
    return out


def magnus_oracle(family: SiteOperatorFamily, order: int) -> list:
    """Logarithm coefficients of the ordered product, straight from the series."""
    series = monodromy(family, order).log()
    return [series.coeff(m) for m in range(1, order + 1)]


def magnus_closed_form(family: SiteOperatorFamily, order: int = 3, style: str = "explicit"):
    """Closed-form logarithm coefficients [Q^(1), ..., Q^(order)], order <= 3.

    `style="explicit"` evaluates the nested-commutator formulas,
    `style="prelie"` the pre-Lie ones (left action for forward families,
    right action for backward ones).
    """
    if not 1 <= order <= 3:
        raise UnsupportedOrder(f"closed forms cover orders 1..3, got {order}")
    if style not in ("explicit", "prelie"):
        raise ValueError(f"unknown style {style!r}")
    out = [_sum_sites(family.degree_sequence(1))]
    if order >= 2:
        if style == "explicit":
            q2 = _magnus2_explicit(family)
        else:
            q2 = _magnus2_prelie(family)
        out.append(q2)
    if order >= 3:
        if style == "explicit":
            q3 = _magnus3_explicit(family)
        else:
            q3 = _magnus3_prelie(family)
        out.append(q3)
    return out


def _magnus2_explicit(family):
    half = Fraction(1, 2)
    x = {n: family.entry(n, 1) for n in range(1, family.n_sites + 1)}
    total = zero_like(family.like)
    for n in range(1, family.n_sites + 1):
        for n1 in range(1, n):
            if family.direction == FORWARD:
                total = total + half * _comm(x[n], x[n1])
            else:
                total = total + half * _comm(x[n1], x[n])
        total = total - half * (x[n] * x[n])
        total = total + family.entry(n, 2)
    return total


def _magnus3_explicit(family):
    sixth = Fraction(1, 6)
    third = Fraction(1, 3)
    half = Fraction(1, 2)
    forward = family.direction == FORWARD
    x = {n: family.entry(n, 1) for n in range(1, family.n_sites + 1)}
    y = {n: family.entry(n, 2) for n in range(1, family.n_sites + 1)}
    total = zero_like(family.like)
    for n in range(1, family.n_sites + 1):
        for n1 in range(1, n):
            for n2 in range(n1 + 1, n):
                if forward:
                    total = total + sixth * (
                        _comm(x[n], _comm(x[n2], x[n1])) + _comm(_comm(x[n], x[n2]), x[n1])
                    )
                else:
                    total = total + sixth * (
                        _comm(x[n1], _comm(x[n2], x[n])) + _comm(_comm(x[n1], x[n2]), x[n])
                    )
        for m in range(1, n):
            if forward:
                total = total + sixth * (x[m] * _comm(x[m], x[n]) + _comm(x[m], x[n]) * x[n])
                total = total + sixth * (_comm(x[m], x[n] * x[n]) + _comm(x[m] * x[m], x[n]))
                total = total - half * (_comm(x[m], y[n]) + _comm(y[m], x[n]))
            else:
                total = total + sixth * (x[n] * _comm(x[n], x[m]) + _comm(x[n], x[m]) * x[m])
                total = total + sixth * (_comm(x[n], x[m] * x[m]) + _comm(x[n] * x[n], x[m]))
                total = total - half * (_comm(x[n], y[m]) + _comm(y[n], x[m]))
        total = total + third * (x[n] * x[n] * x[n])
        total = total + family.entry(n, 3)
        total = total - half * (x[n] * y[n] + y[n] * x[n])
    return total


def _prelie(family):
    return prelie_left if family.direction == FORWARD else prelie_right


def _magnus2_prelie(family):
    act = _prelie(family)
    s1 = family.degree_sequence(1)
    seq = Fraction(-1, 2) * act(s1, s1)
    return _sum_sites(seq) + _sum_sites(family.degree_sequence(2))


def _magnus3_prelie(family):
    act = _prelie(family)
    s1 = family.degree_sequence(1)
    s2 = family.degree_sequence(2)
    inner = act(s1, s1)
    if family.direction == FORWARD:
        cubic = Fraction(1, 4) * act(inner, s1) + Fraction(1, 12) * act(s1, inner)
    else:
        cubic = Fraction(1, 12) * act(inner, s1) + Fraction(1, 4) * act(s1, inner)
    mixed = Fraction(-1, 2) * (act(s2, s1) + act(s1, s2))
    return _sum_sites(cubic) + _sum_sites(mixed) + _sum_sites(family.degree_sequence(3))


def closed_form_defects(family: SiteOperatorFamily, order: int = 3, style: str = "explicit"):
    """Difference of each closed-form coefficient from the series oracle.

    Returns a list of (degree, residual) pairs; a faithful closed form
    gives residual zero at every degree.
    """
    closed = magnus_closed_form(family, order=order, style=style)
    oracle = magnus_oracle(family, order)
    return [(m + 1, closed[m] - oracle[m]) for m in range(order)]


def factorized_generators(m_ops: list, l_ops: list):
    """Dressed one-site generators of the factorized expansion.

    With invertible frame factors M_n and perturbations L_n the product
    over sites of (M_n + alpha L_n) equals the plain frame product
    multiplied by an ordered series in the dressed generators

        P_n = (M_N ... M_{n+1}) L_n (M_N ... M_n)^{-1}.

    Returns the list [P_1, ..., P_N].  Raises SingularOperator naming the
    site whose frame factor cannot be inverted.
    """
    if len(m_ops) != len(l_ops):
        raise DimensionMismatch("need one frame factor per perturbation")
    n_sites = len(m_ops)
    inverses = []
    for site, op in enumerate(m_ops, start=1):
        try:
            inverses.append(_invert(op))
        except (SingularOperator, ZeroDivisionError):
            raise SingularOperator(f"frame factor at site {site} is not invertible")
    generators = []
    for n in range(1, n_sites + 1):
        left = None
        for k in range(n_sites, n, -1):
            left = m_ops[k - 1] if left is None else left * m_ops[k - 1]
        dressed = l_ops[n - 1] if left is None else left * l_ops[n - 1]
        for k in range(n, n_sites + 1):
            dressed = dressed * inverses[k - 1]
        generators.append(dressed)
    return generators


def _invert(op):
    if hasattr(op, "inverse"):
        return op.inverse()
    if not op:
        raise SingularOperator("zero scalar")
    if isinstance(op, Fraction) or isinstance(op, int):
        return Fraction(1, 1) / Fraction(op)
    return 1.0 / op


class ExpansionResult:
    """Bundle of Dyson terms, the splitting table, and logarithm coefficients.

    `dyson[m]` is T^(m) (index 0 holds the unit), `pi_table[(n, k)]` the
    k-block refinement of T^(n), and `q_list[m-1]` the order-m logarithm
    coefficient recovered from the table.
    """

    __slots__ = ("family", "order", "dyson", "pi_table", "q_list")

    def __init__(self, family, order, dyson, pi_table, q_list):
        self.family = family
        self.order = order
        self.dyson = dyson
        self.pi_table = pi_table
        self.q_list = q_list


def expand_family(family: SiteOperatorFamily, order: int,
                  method: str = "direct") -> ExpansionResult:
    """Compute the full ordered-product expansion data for a site family."""
    terms = dyson_terms(family, order, method=method)
    table = pi_table(terms, order)
    q_list = magnus_from_dyson(terms, order)
    return ExpansionResult(family, order, terms, table, q_list)


class FactorizedResult:
    """Outcome of the frame-dressed expansion of an ordered product.

    `generators` are the dressed one-site operators, `q_list` the
    logarithm coefficients of their linear-family expansion, `series`
    the reassembled product exp(sum alpha^m Q^(m)) times the frame
    product, and `residual` the difference from the direct product
    (zero when the dressing identity holds).
    """

    __slots__ = ("generators", "q_list", "series", "residual")

    def __init__(self, generators, q_list, series, residual):
        self.generators = generators
        self.q_list = q_list
        self.series = series
        self.residual = residual


def factorized_expansion(m_ops: list, l_ops: list, order: int) -> FactorizedResult:
    """Expand the ordered product of (M_n + alpha L_n) through dressed generators.

    The dressed generators P_n reduce the product to a purely linear chain
    (1 + alpha P_n), whose logarithm is computed and exponentiated back;
    multiplying by the frame product M_N ... M_1 must reproduce the direct
    expansion exactly.
    """
    if not m_ops:
        raise DimensionMismatch("need at least one site")
    like = l_ops[0]
    generators = factorized_generators(m_ops, l_ops)
    n_sites = len(m_ops)
    dressed = SiteOperatorFamily(
        n_sites,
        {(n, 1): generators[n - 1] for n in range(1, n_sites + 1)},
        direction=FORWARD,
        like=like,
    )
    q_list = magnus_oracle(dressed, order)
    exp_q = AlphaSeries.from_parts(
        order, dict(enumerate(q_list, start=1)), like=like
    ).exp()
    frame = None
    for op in reversed(m_ops):
        frame = op if frame is None else frame * op
    series = exp_q * AlphaSeries.from_parts(order, {0: frame}, like=like)
    residual = factorized_direct(m_ops, l_ops, order) - series
    return FactorizedResult(generators, q_list, series, residual)


def factorized_direct(m_ops: list, l_ops: list, order: int) -> AlphaSeries:
    """Ordered product of (M_n + alpha L_n), multiplied out term by term."""
    if not m_ops:
        raise DimensionMismatch("need at least one site")
    like = l_ops[0]
    result = AlphaSeries.one(order, like=like)
    for site in range(len(m_ops), 0, -1):
        lax = AlphaSeries.from_parts(
            order, {0: m_ops[site - 1], 1: l_ops[site - 1]}, like=like
        )
        result = result * lax
    return result
