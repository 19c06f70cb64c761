"""Coefficient arithmetic for the motivic base ring.

Only the subring of the base ring generated by the weight-(1,1) class {-1}
is modeled; every relation and operation formula on the Stiefel rings
involves nothing else.  An MCoefficient is a finite sum

    c_0 + c_1 {-1} + c_2 {-1}^2 + ...

with c_0 in the coefficient ring R (the integers or Z/m) and, because
2 {-1} = 0, every higher c_k in R/2R.  When -1 is a square in the ground
field, {-1} itself vanishes and all positive powers are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ContextMismatch


@dataclass(frozen=True)
class CoeffRing:
    """The coefficient ring R: modulus 0 means Z, otherwise Z/modulus."""

    modulus: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError(f"modulus must be 0 (meaning Z) or at least 2, got {self.modulus}")

    @property
    def name(self) -> str:
        return "Z" if self.modulus == 0 else f"Z/{self.modulus}"

    def reduce(self, c: int) -> int:
        """Canonical representative of c in R."""
        return c if self.modulus == 0 else c % self.modulus

    def reduce_mod_two(self, c: int) -> int:
        """Canonical representative of c in R/2R, where the positive
        {-1}-powers live.

        R/2R is Z/2 when R is Z or Z/even; it vanishes for Z/odd, since 2
        is then invertible.
        """
        if self.modulus and self.modulus % 2:
            return 0
        return c % 2

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class FieldProfile:
    """Recorded facts about the ground field k.

    minus_one_is_square kills the class {-1} outright.  characteristic,
    when recorded, gates the operations: Steenrod squares need char k != 2
    and the reduced powers at an odd prime p need char k != p.  None means
    nothing is recorded and no gate applies.
    """

    minus_one_is_square: bool = False
    characteristic: int | None = None


class Bidegree(NamedTuple):
    """Cohomological (degree, weight) pair; adds componentwise."""

    p: int
    q: int

    def __add__(self, other) -> "Bidegree":  # type: ignore[override]
        return Bidegree(self.p + other[0], self.q + other[1])

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


@dataclass(frozen=True)
class MCoefficient:
    """Element of the modeled base ring, in normal form.

    terms holds (k, c_k) pairs sorted by k with every stored c_k nonzero;
    the constructor accepts any (k, c) sequence and normalizes it, merging
    repeated powers, reducing c_0 in R and c_k (k >= 1) in R/2R.
    """

    ring: CoeffRing
    profile: FieldProfile
    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        acc: dict[int, int] = {}
        for k, c in self.terms:
            if k < 0:
                raise ValueError("negative power of {-1}")
            acc[k] = acc.get(k, 0) + c
        out = []
        for k in sorted(acc):
            if k and self.profile.minus_one_is_square:
                continue
            c = self.ring.reduce(acc[k]) if k == 0 else self.ring.reduce_mod_two(acc[k])
            if c:
                out.append((k, c))
        object.__setattr__(self, "terms", tuple(out))

    @classmethod
    def zero(cls, ring: CoeffRing, profile: FieldProfile) -> "MCoefficient":
        return cls(ring, profile)

    @classmethod
    def one(cls, ring: CoeffRing, profile: FieldProfile) -> "MCoefficient":
        return cls(ring, profile, ((0, 1),))

    @classmethod
    def integer(cls, ring: CoeffRing, profile: FieldProfile, c: int) -> "MCoefficient":
        return cls(ring, profile, ((0, c),))

    @classmethod
    def minus_one(cls, ring: CoeffRing, profile: FieldProfile, power: int = 1) -> "MCoefficient":
        """The class {-1}^power."""
        return cls(ring, profile, ((power, 1),))

    def _require_same_context(self, other: "MCoefficient") -> None:
        if self.ring != other.ring or self.profile != other.profile:
            raise ContextMismatch(
                f"coefficients from different contexts: {self.ring.name}/{self.profile} "
                f"vs {other.ring.name}/{other.profile}")

    def __add__(self, other: "MCoefficient") -> "MCoefficient":
        self._require_same_context(other)
        return MCoefficient(self.ring, self.profile, self.terms + other.terms)

    def __neg__(self) -> "MCoefficient":
        return MCoefficient(self.ring, self.profile, tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: "MCoefficient") -> "MCoefficient":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MCoefficient(self.ring, self.profile,
                                tuple((k, c * other) for k, c in self.terms))
        if not isinstance(other, MCoefficient):
            return NotImplemented
        self._require_same_context(other)
        prods = tuple((k1 + k2, c1 * c2) for k1, c1 in self.terms for k2, c2 in other.terms)
        return MCoefficient(self.ring, self.profile, prods)

    __rmul__ = __mul__

    def shift(self, power: int) -> "MCoefficient":
        """Multiply by {-1}^power."""
        return MCoefficient(self.ring, self.profile,
                            tuple((k + power, c) for k, c in self.terms))

    def coefficient(self, k: int) -> int:
        for kk, c in self.terms:
            if kk == k:
                return c
        return 0

    def powers(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def binom_mod(a: int, b: int, p: int) -> int:
    """Binomial coefficient C(a, b) modulo a prime, by Lucas' theorem.

    Works digit by digit in base p; each digit binomial is evaluated by the
    multiplicative formula with a Fermat inverse, so nothing here shares a
    code path with the big-integer factorial oracle used to test it.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if a < 0 or b < 0:
        raise ValueError("binomial arguments must be nonnegative")
    result = 1
    while a or b:
        ad, a = a % p, a // p
        bd, b = b % p, b // p
        if bd > ad:
            return 0
        num = den = 1
        for t in range(bd):
            num = num * (ad - t) % p
            den = den * (t + 1) % p
        result = result * num * pow(den, -1, p) % p
    return result
