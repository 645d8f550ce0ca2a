"""Deterministic case generation for the verification suites.

All pseudo-randomness flows through one fixed, documented algorithm:
CPython's Mersenne Twister as exposed by `random.Random`, drawn only
through `randint`.  A 64-bit seed therefore reproduces every sampled
case bit-for-bit on any platform.

Streams are hierarchical: `split(label)` derives an independent child
stream whose seed is a SHA-256 digest of the parent seed and the label.
Suites draw each check from its own labeled stream, so adding or
reordering one check never shifts the samples of another.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .errors import SingularOperator
from .expansion import FORWARD, SiteOperatorFamily
from .freealg import FreeElement
from .matrix import Matrix
from .poly import Poly
from .rotabaxter import SiteSequence

MASK64 = 2**64 - 1


class SampleSource:
    """Seeded draw stream with labeled, order-independent substreams."""

    __slots__ = ("seed", "_rng")

    def __init__(self, seed: int):
        self.seed = int(seed) & MASK64
        self._rng = random.Random(self.seed)

    def split(self, label: str) -> "SampleSource":
        digest = hashlib.sha256(f"{self.seed}:{label}".encode()).digest()
        return SampleSource(int.from_bytes(digest[:8], "big"))

    def integer(self, low: int, high: int) -> int:
        return self._rng.randint(low, high)

    def fraction(self, bound: int = 3) -> Fraction:
        return Fraction(self.integer(-bound, bound))

    def nonzero_fraction(self, bound: int = 3) -> Fraction:
        while True:
            f = self.fraction(bound)
            if f:
                return f

    def matrix(self, size: int = 2, bound: int = 3) -> Matrix:
        return Matrix(
            [
                [self.fraction(bound) for _ in range(size)]
                for _ in range(size)
            ]
        )

    def invertible_matrix(self, size: int = 2, bound: int = 3) -> Matrix:
        # Rejection sampling; random integer matrices are rarely singular.
        while True:
            m = self.matrix(size, bound)
            try:
                m.inverse()
            except SingularOperator:
                continue
            return m

    def sequence(self, n_sites: int, size: int = 2, bound: int = 3) -> SiteSequence:
        return SiteSequence([self.matrix(size, bound) for _ in range(n_sites)])

    def free_sequence(self, n_sites: int, tag: str, bound: int = 3) -> SiteSequence:
        """Per site, a random combination of two letters named after the tag."""
        values = []
        for n in range(1, n_sites + 1):
            v = FreeElement.gen(f"{tag}1", site=n) * self.fraction(bound)
            v = v + FreeElement.gen(f"{tag}2", site=n) * self.fraction(bound)
            values.append(v)
        return SiteSequence(values)

    def matrix_family(self, n_sites: int, degrees=(1,), size: int = 2,
                      bound: int = 3, direction=FORWARD) -> SiteOperatorFamily:
        entries = {
            (n, d): self.matrix(size, bound)
            for n in range(1, n_sites + 1)
            for d in degrees
        }
        return SiteOperatorFamily(
            n_sites, entries, direction=direction, like=Matrix.identity(size)
        )

    def poly(self, degree: int = 3, bound: int = 3) -> Poly:
        return Poly({d: self.fraction(bound) for d in range(degree + 1)})

    def subset(self, items) -> tuple:
        """Nonempty subset, drawn element by element."""
        items = tuple(items)
        while True:
            chosen = tuple(x for x in items if self.integer(0, 1))
            if chosen:
                return chosen
