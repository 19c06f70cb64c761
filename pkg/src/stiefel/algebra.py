"""Cohomology rings of Stiefel varieties W(n, m).

H(W(n, m); R) is the free module over the modeled base ring on squarefree
monomials in generators rho_{n-m+1}, ..., rho_n, where rho_i has bidegree
(2i-1, i).  Multiplication is graded-commutative with the squaring rule

    rho_i^2 = {-1} rho_{2i-1}   when 2i-1 <= n,      rho_i^2 = 0 otherwise.

Monomials are tuples of strictly increasing generator indices; the empty
tuple is the unit.  Elements are kept in a unique normal form, so equality
of elements is structural equality.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .coefficients import Bidegree, CoeffRing, FieldProfile, MCoefficient
from .errors import ContextMismatch, InvalidGenerator, InvalidPresentation

Monomial = tuple[int, ...]


def monomial_bidegree(mono: Monomial) -> Bidegree:
    """Sum of (2i-1, i) over the generator indices of the monomial."""
    return Bidegree(sum(2 * i - 1 for i in mono), sum(mono))


@dataclass(frozen=True)
class StiefelPresentation:
    """Presentation data for H(W(n, m); R).

    A value object: two presentations with the same ambient dimension,
    frame length, coefficient ring and field profile are the same ring.
    """

    n: int
    m: int
    ring: CoeffRing = CoeffRing()
    profile: FieldProfile = FieldProfile()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidPresentation(f"n must be at least 1, got n={self.n}")
        if self.m < 0:
            raise InvalidPresentation(f"m must be nonnegative, got m={self.m}")
        if self.m > self.n:
            raise InvalidPresentation(f"m > n: a full-rank {self.n}x{self.m} matrix cannot exist")

    @property
    def generators(self) -> range:
        """Generator indices n-m+1 .. n."""
        return range(self.n - self.m + 1, self.n + 1)

    def is_generator(self, i: int) -> bool:
        return self.n - self.m + 1 <= i <= self.n

    def zero(self) -> "Element":
        return Element(self, ())

    def scalar(self, c: MCoefficient) -> "Element":
        if c.ring != self.ring or c.profile != self.profile:
            raise ContextMismatch("scalar coefficient from a different context")
        return Element(self, (((), c),))

    def unit(self, c: int = 1) -> "Element":
        return self.scalar(MCoefficient.integer(self.ring, self.profile, c))

    def minus_one(self, power: int = 1) -> "Element":
        """The base class {-1}^power as a ring element."""
        return self.scalar(MCoefficient.minus_one(self.ring, self.profile, power))

    def gen(self, i: int) -> "Element":
        if not self.is_generator(i):
            raise InvalidGenerator(f"rho_{i} is not a generator of W({self.n},{self.m})")
        return Element(self, (((i,), MCoefficient.one(self.ring, self.profile)),))

    def monomial(self, indices: Iterable[int], coeff: int | MCoefficient = 1) -> "Element":
        mono = tuple(indices)
        if not isinstance(coeff, MCoefficient):
            coeff = MCoefficient.integer(self.ring, self.profile, coeff)
        return Element(self, ((mono, coeff),))

    def gen_square(self, i: int) -> "Element":
        """The value of rho_i^2 forced by the defining relation."""
        if not self.is_generator(i):
            raise InvalidGenerator(f"rho_{i} is not a generator of W({self.n},{self.m})")
        if 2 * i - 1 > self.n:
            return self.zero()
        return self.minus_one() * self.gen(2 * i - 1)


@dataclass(frozen=True)
class Element:
    """A class in H(W(n, m); R), in normal form.

    terms pairs squarefree monomials with nonzero MCoefficients, stored
    sorted by (length, indices) so that equal elements compare equal.  An
    element may be inhomogeneous; it is then the sum of its homogeneous
    parts.
    """

    pres: StiefelPresentation
    terms: tuple[tuple[Monomial, MCoefficient], ...]

    def __post_init__(self) -> None:
        acc: dict[Monomial, MCoefficient] = {}
        for mono, c in self.terms:
            mono = tuple(mono)
            if list(mono) != sorted(set(mono)):
                raise ValueError(f"monomial indices must be strictly increasing, got {mono}")
            for i in mono:
                if not self.pres.is_generator(i):
                    raise InvalidGenerator(
                        f"rho_{i} is not a generator of W({self.pres.n},{self.pres.m})")
            if c.ring != self.pres.ring or c.profile != self.pres.profile:
                raise ContextMismatch("coefficient from a different context")
            acc[mono] = acc[mono] + c if mono in acc else c
        normal = tuple(sorted(((m, c) for m, c in acc.items() if c),
                              key=lambda t: (len(t[0]), t[0])))
        object.__setattr__(self, "terms", normal)

    def _require_same_ring(self, other: "Element") -> None:
        if self.pres != other.pres:
            raise ContextMismatch(
                f"elements live in different rings: W({self.pres.n},{self.pres.m}) over "
                f"{self.pres.ring.name} vs W({other.pres.n},{other.pres.m}) over "
                f"{other.pres.ring.name}")

    def __add__(self, other: "Element") -> "Element":
        self._require_same_ring(other)
        return Element(self.pres, self.terms + other.terms)

    def __neg__(self) -> "Element":
        return Element(self.pres, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, MCoefficient)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same_ring(other)
        acc: dict[Monomial, MCoefficient] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                nf = _normal_word(self.pres.n, m1 + m2)
                if nf is None:
                    continue
                mono, sign, twist = nf
                c = c1 * c2
                if sign < 0:
                    c = -c
                if twist:
                    c = c.shift(twist)
                acc[mono] = acc[mono] + c if mono in acc else c
        return Element(self.pres, tuple(acc.items()))

    def __rmul__(self, other) -> "Element":
        if isinstance(other, (int, MCoefficient)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: int | MCoefficient) -> "Element":
        if isinstance(c, int):
            c = MCoefficient.integer(self.pres.ring, self.pres.profile, c)
        return Element(self.pres, tuple((m, cc * c) for m, cc in self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, mono: Iterable[int]) -> MCoefficient:
        mono = tuple(mono)
        for m, c in self.terms:
            if m == mono:
                return c
        return MCoefficient.zero(self.pres.ring, self.pres.profile)

    def bidegrees(self) -> set[Bidegree]:
        """Bidegrees of the homogeneous constituents, one per monomial and
        {-1}-power (a single {-1}^k factor contributes (k, k))."""
        out = set()
        for mono, c in self.terms:
            base = monomial_bidegree(mono)
            for k, _ in c.terms:
                out.add(base + (k, k))
        return out

    def is_homogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1

    def homogeneous_part(self, bd) -> "Element":
        bd = Bidegree(*bd)
        picked = []
        for mono, c in self.terms:
            base = monomial_bidegree(mono)
            keep = tuple((k, ck) for k, ck in c.terms if base + (k, k) == bd)
            if keep:
                picked.append((mono, MCoefficient(self.pres.ring, self.pres.profile, keep)))
        return Element(self.pres, tuple(picked))


def _sorted_with_sign(word: list[int]) -> tuple[list[int], int]:
    """Stable insertion sort counting transpositions.

    Every generator has odd cohomological degree, so each adjacent swap
    contributes a factor -1 (the exterior-algebra convention).
    """
    w = list(word)
    sign = 1
    for i in range(1, len(w)):
        j = i
        while j and w[j - 1] > w[j]:
            w[j - 1], w[j] = w[j], w[j - 1]
            sign = -sign
            j -= 1
    return w, sign


def _normal_word(n: int, word: Sequence[int]) -> tuple[Monomial, int, int] | None:
    """Normal form of a product of generators inside W(n, *).

    Returns (monomial, sign, twist) meaning the product equals
    sign * {-1}^twist * monomial, or None when the product is zero.
    Repeated indices are contracted smallest first via
    rho_i rho_i -> {-1} rho_{2i-1} (zero when 2i-1 > n); every contraction
    shortens the word, so rewriting terminates.
    """
    w, sign = _sorted_with_sign(list(word))
    twist = 0
    while True:
        dup = next((t for t in range(len(w) - 1) if w[t] == w[t + 1]), None)
        if dup is None:
            return tuple(w), sign, twist
        i = w[dup]
        if 2 * i - 1 > n:
            return None
        w[dup:dup + 2] = [2 * i - 1]
        twist += 1
        w, s = _sorted_with_sign(w)
        sign *= s


def all_monomials(pres: StiefelPresentation) -> list[Monomial]:
    """All squarefree monomials (the M-module basis), shortest first."""
    gens = list(pres.generators)
    out: list[Monomial] = []
    for r in range(len(gens) + 1):
        out.extend(itertools.combinations(gens, r))
    return out


def basis_in_bidegree(pres: StiefelPresentation, bd) -> list[tuple[Monomial, int]]:
    """Basis lines (monomial, k) of the (p, q) graded piece, k the {-1}-power.

    A line with k = 0 carries a copy of R and one with k >= 1 a copy of
    R/2R; lines whose coefficient group vanishes (R/2R = 0, or -1 a square)
    are omitted.  Negative weight gives the empty list, per the vanishing
    range of the theory.
    """
    bd = Bidegree(*bd)
    if bd.q < 0:
        return []
    torsion_lines = (not pres.profile.minus_one_is_square
                     and pres.ring.reduce_mod_two(1) != 0)
    out = []
    for mono in all_monomials(pres):
        base = monomial_bidegree(mono)
        k = bd.p - base.p
        if k < 0 or bd.q - base.q != k:
            continue
        if k >= 1 and not torsion_lines:
            continue
        out.append((mono, k))
    out.sort(key=lambda line: (line[1], line[0]))
    return out


def basis_element(pres: StiefelPresentation, mono: Monomial, k: int) -> Element:
    """The basis-line generator {-1}^k * mono with unit coefficient."""
    return pres.monomial(mono, MCoefficient(pres.ring, pres.profile, ((k, 1),)))


def poincare_polynomial(pres: StiefelPresentation) -> dict[Bidegree, int]:
    """Multiset of M-basis bidegrees with multiplicities: the expansion of
    the product of (1 + T^(2i-1, i)) over the generators."""
    series = {Bidegree(0, 0): 1}
    for i in pres.generators:
        step = Bidegree(2 * i - 1, i)
        nxt = dict(series)
        for bd, mult in series.items():
            nxt[bd + step] = nxt.get(bd + step, 0) + mult
        series = nxt
    return series


def _random_scalar(rng: random.Random, ring: CoeffRing, k: int) -> int:
    if k >= 1:
        return rng.randint(0, 1)
    if ring.modulus == 0:
        return rng.randint(-4, 4)
    return rng.randint(0, ring.modulus - 1)


def random_element(pres: StiefelPresentation, bidegree=None, seed: int = 0) -> Element:
    """Deterministic pseudo-random normal-form element.

    With a bidegree, the result is homogeneous and supported on the basis
    lines of that graded piece.  The same seed always yields the same
    element.
    """
    rng = random.Random(seed)
    terms: list[tuple[Monomial, MCoefficient]] = []
    if bidegree is not None:
        for mono, k in basis_in_bidegree(pres, bidegree):
            c = MCoefficient(pres.ring, pres.profile, ((k, _random_scalar(rng, pres.ring, k)),))
            if c:
                terms.append((mono, c))
    else:
        gens = list(pres.generators)
        for _ in range(rng.randint(1, 3)):
            mono = tuple(i for i in gens if rng.random() < 0.5)
            ks = rng.sample((0, 1, 2), rng.randint(1, 2))
            c = MCoefficient(pres.ring, pres.profile,
                             tuple((k, _random_scalar(rng, pres.ring, k)) for k in sorted(ks)))
            if c:
                terms.append((mono, c))
    return Element(pres, tuple(terms))
