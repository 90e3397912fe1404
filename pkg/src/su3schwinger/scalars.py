"""Exact scalar arithmetic: rationals and the field Q(i, sqrt3).

All coefficients in the package live in one of two rings:

* ``QQ`` -- arbitrary-precision rationals, backed by :class:`fractions.Fraction`
  (canonical form: positive denominator, gcd-reduced).
* ``EXT`` -- the degree-4 extension Q(i, sqrt3), the smallest field containing
  every Gell-Mann matrix entry and structure constant.  Elements are stored as
  four rational components ``w + x*i + y*sqrt3 + z*i*sqrt3``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


def rational_normalize(num: int, den: int) -> Fraction:
    """Canonical rational num/den (positive denominator, reduced).

    Raises:
        DomainError: if ``den`` is zero.
    """
    if den == 0:
        raise DomainError("rational denominator must be nonzero")
    return Fraction(num, den)


def rational_str(value: Fraction | int) -> str:
    """Serialize a rational as "p/q", or "p" alone when q == 1."""
    return str(Fraction(value))


class ExtScalar:
    """An element w + x*i + y*sqrt3 + z*i*sqrt3 of Q(i, sqrt3).

    Immutable.  Multiplication enforces i**2 = -1 and sqrt3**2 = 3; nonzero
    elements are invertible (the ring is a field).
    """

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        object.__setattr__(self, "w", Fraction(w))
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))
        object.__setattr__(self, "z", Fraction(z))

    def __setattr__(self, name, value):
        raise AttributeError("ExtScalar is immutable")

    @classmethod
    def from_rational(cls, q) -> "ExtScalar":
        """Embed a rational; the embedding is a ring homomorphism."""
        return cls(Fraction(q))

    @property
    def is_rational(self) -> bool:
        return not (self.x or self.y or self.z)

    def rational_part(self) -> Fraction:
        """The rational value of an element with x = y = z = 0."""
        if not self.is_rational:
            raise DomainError(f"{self} is not rational")
        return self.w

    def __bool__(self) -> bool:
        return bool(self.w or self.x or self.y or self.z)

    def __eq__(self, other) -> bool:
        other = _as_ext(other)
        if other is NotImplemented:
            return NotImplemented
        return (
            self.w == other.w
            and self.x == other.x
            and self.y == other.y
            and self.z == other.z
        )

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    def __add__(self, other) -> "ExtScalar":
        other = _as_ext(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtScalar(
            self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z
        )

    __radd__ = __add__

    def __neg__(self) -> "ExtScalar":
        return ExtScalar(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        other = _as_ext(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "ExtScalar":
        if isinstance(other, (int, Fraction)):
            # componentwise scaling; also the fast path used by ladder actions
            return ExtScalar(
                self.w * other, self.x * other, self.y * other, self.z * other
            )
        if not isinstance(other, ExtScalar):
            return NotImplemented
        w1, x1, y1, z1 = self.w, self.x, self.y, self.z
        w2, x2, y2, z2 = other.w, other.x, other.y, other.z
        return ExtScalar(
            w1 * w2 - x1 * x2 + 3 * (y1 * y2 - z1 * z2),
            w1 * x2 + x1 * w2 + 3 * (y1 * z2 + z1 * y2),
            w1 * y2 + y1 * w2 - (x1 * z2 + z1 * x2),
            w1 * z2 + z1 * w2 + x1 * y2 + y1 * x2,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "ExtScalar":
        """Complex conjugate: i -> -i, sqrt3 fixed."""
        return ExtScalar(self.w, -self.x, self.y, -self.z)

    def _conj_sqrt3(self) -> "ExtScalar":
        return ExtScalar(self.w, self.x, -self.y, -self.z)

    def inverse(self) -> "ExtScalar":
        """Multiplicative inverse of a nonzero element.

        Computed from the product of the three nontrivial Galois conjugates;
        the field norm is a nonzero rational.
        """
        if not self:
            raise DomainError("zero has no inverse")
        cofactor = self.conjugate() * self._conj_sqrt3() * self.conjugate()._conj_sqrt3()
        norm = self * cofactor
        # the norm is Galois-invariant, hence rational
        assert norm.is_rational
        return cofactor * (1 / norm.w)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DomainError("division by zero")
            return self * (Fraction(1) / other)
        if not isinstance(other, ExtScalar):
            return NotImplemented
        return self * other.inverse()

    def to_json(self) -> list[str]:
        """Serialize as four canonical rational strings [w, x, y, z]."""
        return [rational_str(c) for c in (self.w, self.x, self.y, self.z)]

    def __str__(self) -> str:
        parts = []
        for coeff, unit in ((self.w, ""), (self.x, "i"), (self.y, "v3"), (self.z, "iv3")):
            if coeff:
                parts.append(f"{coeff}{unit}" if unit else f"{coeff}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"ExtScalar({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"


def _as_ext(value):
    if isinstance(value, ExtScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return ExtScalar(value)
    return NotImplemented


EXT_ZERO = ExtScalar()
EXT_ONE = ExtScalar(1)
I = ExtScalar(0, 1)
SQRT3 = ExtScalar(0, 0, 1)


class Ring:
    """Coefficient-ring descriptor carried by every state vector."""

    __slots__ = ("name", "zero", "one")

    def __init__(self, name, zero, one):
        self.name = name
        self.zero = zero
        self.one = one

    def __repr__(self):
        return f"<ring {self.name}>"

    def coerce(self, value):
        raise NotImplementedError

    def conj(self, value):
        raise NotImplementedError

    def coeff_json(self, value):
        raise NotImplementedError


class _RationalRing(Ring):
    __slots__ = ()

    def __init__(self):
        super().__init__("Q", Fraction(0), Fraction(1))

    def coerce(self, value):
        if type(value) is Fraction:
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise DomainError(f"not a rational coefficient: {value!r}")

    def conj(self, value):
        return value

    def coeff_json(self, value):
        return rational_str(value)


class _ExtRing(Ring):
    __slots__ = ()

    def __init__(self):
        super().__init__("Q(i,sqrt3)", EXT_ZERO, EXT_ONE)

    def coerce(self, value):
        if type(value) is ExtScalar:
            return value
        if isinstance(value, (int, Fraction)):
            return ExtScalar(value)
        raise DomainError(f"not a Q(i,sqrt3) coefficient: {value!r}")

    def conj(self, value):
        return value.conjugate()

    def coeff_json(self, value):
        return value.to_json()


QQ = _RationalRing()
EXT = _ExtRing()
