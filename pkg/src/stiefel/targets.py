"""The comparison target: H(G_m x P^{n-1}) with the Tate product rule.

As an algebra over the modeled base this is

    M[sigma, eta] / (sigma^2 - {-1} sigma, eta^n),
    |sigma| = (1, 1),  |eta| = (2, 1),

the tensor product of H(G_m) = M[sigma]/(sigma^2 - {-1} sigma) with the
truncated polynomial ring H(P^{n-1}) = M[eta]/(eta^n).  The reduced
cohomology of the Tate suspension of P^{n-1} with a disjoint basepoint is
the ideal of terms divisible by sigma, where the suspension product rule
(sigma x)(sigma y) = {-1} sigma (x y) follows from sigma^2 = {-1} sigma.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .coefficients import Bidegree, CoeffRing, FieldProfile, MCoefficient, binom_mod
from .errors import ContextMismatch, InadmissibleOperation, InvalidPresentation

# a monomial sigma^s eta^e is keyed by (s, e) with s in {0, 1}, 0 <= e < n
PGmKey = tuple[int, int]


def pgm_key_bidegree(key: PGmKey) -> Bidegree:
    s, e = key
    return Bidegree(s + 2 * e, s + e)


@dataclass(frozen=True)
class PGmPresentation:
    """Presentation data for H(G_m x P^{n-1}; R); a value object."""

    n: int
    ring: CoeffRing = CoeffRing()
    profile: FieldProfile = FieldProfile()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidPresentation(f"n must be at least 1, got n={self.n}")

    def zero(self) -> "PGmElement":
        return PGmElement(self, ())

    def scalar(self, c: MCoefficient) -> "PGmElement":
        if c.ring != self.ring or c.profile != self.profile:
            raise ContextMismatch("scalar coefficient from a different context")
        return PGmElement(self, (((0, 0), c),))

    def unit(self, c: int = 1) -> "PGmElement":
        return self.scalar(MCoefficient.integer(self.ring, self.profile, c))

    def minus_one(self, power: int = 1) -> "PGmElement":
        return self.scalar(MCoefficient.minus_one(self.ring, self.profile, power))

    def term(self, s: int, e: int, coeff: int | MCoefficient = 1) -> "PGmElement":
        if not isinstance(coeff, MCoefficient):
            coeff = MCoefficient.integer(self.ring, self.profile, coeff)
        return PGmElement(self, (((s, e), coeff),))

    def sigma(self) -> "PGmElement":
        return self.term(1, 0)

    def eta(self, e: int = 1) -> "PGmElement":
        """eta^e, which is zero once e reaches the truncation degree n."""
        if e >= self.n:
            return self.zero()
        return self.term(0, e)


@dataclass(frozen=True)
class PGmElement:
    """An element of H(G_m x P^{n-1}; R) in normal form: nonzero
    MCoefficients on monomials sigma^s eta^e with s <= 1 and e < n."""

    pres: PGmPresentation
    terms: tuple[tuple[PGmKey, MCoefficient], ...]

    def __post_init__(self) -> None:
        acc: dict[PGmKey, MCoefficient] = {}
        for (s, e), c in self.terms:
            if s not in (0, 1):
                raise ValueError(f"sigma exponent must be 0 or 1, got {s}")
            if not 0 <= e < self.pres.n:
                raise ValueError(f"eta exponent out of range: {e} (n={self.pres.n})")
            if c.ring != self.pres.ring or c.profile != self.pres.profile:
                raise ContextMismatch("coefficient from a different context")
            key = (s, e)
            acc[key] = acc[key] + c if key in acc else c
        normal = tuple(sorted(((k, c) for k, c in acc.items() if c)))
        object.__setattr__(self, "terms", normal)

    def _require_same_ring(self, other: "PGmElement") -> None:
        if self.pres != other.pres:
            raise ContextMismatch("elements live in different Tate target rings")

    def __add__(self, other: "PGmElement") -> "PGmElement":
        self._require_same_ring(other)
        return PGmElement(self.pres, self.terms + other.terms)

    def __neg__(self) -> "PGmElement":
        return PGmElement(self.pres, tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: "PGmElement") -> "PGmElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, MCoefficient)):
            return self.scale(other)
        if not isinstance(other, PGmElement):
            return NotImplemented
        self._require_same_ring(other)
        acc: dict[PGmKey, MCoefficient] = {}
        for (s1, e1), c1 in self.terms:
            for (s2, e2), c2 in other.terms:
                e = e1 + e2
                if e >= self.pres.n:
                    continue
                c = c1 * c2
                s = s1 + s2
                if s == 2:
                    # sigma^2 = {-1} sigma; eta is even, so no signs arise
                    s, c = 1, c.shift(1)
                key = (s, e)
                acc[key] = acc[key] + c if key in acc else c
        return PGmElement(self.pres, tuple(acc.items()))

    def __rmul__(self, other) -> "PGmElement":
        if isinstance(other, (int, MCoefficient)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: int | MCoefficient) -> "PGmElement":
        if isinstance(c, int):
            c = MCoefficient.integer(self.pres.ring, self.pres.profile, c)
        return PGmElement(self.pres, tuple((k, cc * c) for k, cc in self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, key: PGmKey) -> MCoefficient:
        for k, c in self.terms:
            if k == key:
                return c
        return MCoefficient.zero(self.pres.ring, self.pres.profile)

    def reduced_part(self) -> "PGmElement":
        """The component in the image of the Tate suspension: sigma-divisible terms."""
        return PGmElement(self.pres, tuple((k, c) for k, c in self.terms if k[0] == 1))

    def is_reduced(self) -> bool:
        return all(s == 1 for (s, _), _ in self.terms)

    def bidegrees(self) -> set[Bidegree]:
        out = set()
        for key, c in self.terms:
            base = pgm_key_bidegree(key)
            for k, _ in c.terms:
                out.add(base + (k, k))
        return out

    def is_homogeneous(self) -> bool:
        return len(self.bidegrees()) <= 1


def _require_mod2_ring(pres: PGmPresentation) -> None:
    if pres.ring.modulus != 2:
        raise InadmissibleOperation(
            f"Steenrod squares need Z/2 coefficients, ring is {pres.ring.name}")


def sq_projective(i: int, j: int, pres: PGmPresentation) -> PGmElement:
    """Sq^{2i} on the hyperplane power eta^j: binom(j, i) eta^{j+i} mod 2,
    truncated at eta^n.  The odd squares vanish on these classes."""
    _require_mod2_ring(pres)
    if pres.profile.characteristic == 2:
        raise InadmissibleOperation("Steenrod squares are unavailable in characteristic 2")
    if i < 0 or j < 0:
        raise ValueError("operation and power indices must be nonnegative")
    if j + i >= pres.n or binom_mod(j, i, 2) == 0:
        return pres.zero()
    return pres.term(0, j + i)


def total_square_oracle(j: int, pres: PGmPresentation) -> PGmElement:
    """(eta + eta^2)^j by honest repeated multiplication in the truncated
    ring; the independent cross-check for sq_projective."""
    _require_mod2_ring(pres)
    if j < 0:
        raise ValueError("power must be nonnegative")
    out = pres.unit()
    base = pres.eta(1) + pres.eta(2)
    for _ in range(j):
        out = out * base
    return out


def basis_in_bidegree(pres: PGmPresentation, bd) -> list[tuple[PGmKey, int]]:
    """Basis lines ((s, e), k) of the (p, q) graded piece, k the {-1}-power;
    same conventions as the Stiefel-side enumeration."""
    bd = Bidegree(*bd)
    if bd.q < 0:
        return []
    torsion_lines = (not pres.profile.minus_one_is_square
                     and pres.ring.reduce_mod_two(1) != 0)
    out = []
    for s in (0, 1):
        for e in range(pres.n):
            base = pgm_key_bidegree((s, e))
            k = bd.p - base.p
            if k < 0 or bd.q - base.q != k:
                continue
            if k >= 1 and not torsion_lines:
                continue
            out.append(((s, e), k))
    out.sort(key=lambda line: (line[1], line[0]))
    return out


def basis_element(pres: PGmPresentation, key: PGmKey, k: int) -> PGmElement:
    """The basis-line generator {-1}^k sigma^s eta^e with unit coefficient."""
    return pres.term(key[0], key[1], MCoefficient(pres.ring, pres.profile, ((k, 1),)))


def random_element(pres: PGmPresentation, bidegree=None, seed: int = 0) -> PGmElement:
    """Deterministic pseudo-random element, homogeneous when a bidegree is given."""
    from .algebra import _random_scalar

    rng = random.Random(seed)
    terms: list[tuple[PGmKey, MCoefficient]] = []
    if bidegree is not None:
        for key, k in basis_in_bidegree(pres, bidegree):
            c = MCoefficient(pres.ring, pres.profile, ((k, _random_scalar(rng, pres.ring, k)),))
            if c:
                terms.append((key, c))
    else:
        for _ in range(rng.randint(1, 3)):
            key = (rng.randint(0, 1), rng.randrange(pres.n))
            ks = rng.sample((0, 1, 2), rng.randint(1, 2))
            c = MCoefficient(pres.ring, pres.profile,
                             tuple((k, _random_scalar(rng, pres.ring, k)) for k in sorted(ks)))
            if c:
                terms.append((key, c))
    return PGmElement(pres, tuple(terms))
