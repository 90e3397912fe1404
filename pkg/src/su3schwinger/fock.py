"""Two-triplet bosonic Fock space in the unnormalized monomial basis.

A basis monomial is a product of creation operators on the vacuum, recorded
as six exponents.  No 1/sqrt(n!) normalization is applied: creation acts as
plain exponent increment, annihilation as the formal derivative, and the
inner product carries the factorial weights instead.  This keeps every
coefficient of the irrep constructions rational.
"""

from __future__ import annotations

from math import factorial
from typing import Iterable, NamedTuple

from .errors import DomainError
from .scalars import QQ, Ring

SPECIES = ("a", "b")


class FockMonomial(NamedTuple):
    """Exponents of the six creation operators applied to the vacuum.

    Ordering (and hence serialization order) is lexicographic on the
    concatenated 6-tuple ``a_exp + b_exp``.
    """

    a_exp: tuple[int, int, int]
    b_exp: tuple[int, int, int]

    @property
    def n_a(self) -> int:
        return sum(self.a_exp)

    @property
    def n_b(self) -> int:
        return sum(self.b_exp)

    @property
    def total(self) -> int:
        return self.n_a + self.n_b

    def exponent(self, species: str, index: int) -> int:
        exps = self.a_exp if species == "a" else self.b_exp
        return exps[index - 1]

    def shifted(self, species: str, index: int, delta: int) -> "FockMonomial":
        """Copy with one exponent changed by ``delta`` (may not go negative)."""
        exps = list(self.a_exp if species == "a" else self.b_exp)
        exps[index - 1] += delta
        if exps[index - 1] < 0:
            raise DomainError("negative occupation")
        new = tuple(exps)
        if species == "a":
            return FockMonomial(new, self.b_exp)
        return FockMonomial(self.a_exp, new)

    def norm_weight(self) -> int:
        """Product of exponent factorials; the squared norm of the monomial."""
        w = 1
        for e in self.a_exp + self.b_exp:
            w *= factorial(e)
        return w

    def __str__(self) -> str:
        return "{} {} {} | {} {} {}".format(*self.a_exp, *self.b_exp)

    def to_json(self) -> list[list[int]]:
        return [list(self.a_exp), list(self.b_exp)]


VACUUM = FockMonomial((0, 0, 0), (0, 0, 0))


def _check_mode(species: str, index: int) -> None:
    if species not in SPECIES:
        raise DomainError(f"unknown species {species!r}")
    if index not in (1, 2, 3):
        raise DomainError(f"mode index out of range: {index}")


class StateVector:
    """Finite sparse linear combination of Fock monomials with exact coefficients.

    Immutable value type: all operations return new vectors.  Zero
    coefficients are pruned, so equality is plain term-map equality.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms=None, _trusted=False):
        object.__setattr__(self, "ring", ring)
        if terms is None:
            pruned = {}
        elif _trusted:
            pruned = {m: c for m, c in terms.items() if c}
        else:
            pruned = {}
            for mono, coeff in terms.items():
                coeff = ring.coerce(coeff)
                if coeff:
                    pruned[mono] = coeff
        object.__setattr__(self, "terms", pruned)

    def __setattr__(self, name, value):
        raise AttributeError("StateVector is immutable")

    @classmethod
    def zero(cls, ring: Ring = QQ) -> "StateVector":
        return cls(ring)

    @classmethod
    def basis(cls, mono: FockMonomial, ring: Ring = QQ) -> "StateVector":
        return cls(ring, {mono: ring.one}, _trusted=True)

    @classmethod
    def vacuum(cls, ring: Ring = QQ) -> "StateVector":
        return cls.basis(VACUUM, ring)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.name, frozenset(self.terms.items())))

    def __add__(self, other: "StateVector") -> "StateVector":
        self._check_ring(other)
        merged = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = merged.get(mono)
            acc = coeff if acc is None else acc + coeff
            if acc:
                merged[mono] = acc
            elif mono in merged:
                del merged[mono]
        return StateVector(self.ring, merged, _trusted=True)

    def __neg__(self) -> "StateVector":
        return StateVector(
            self.ring, {m: -c for m, c in self.terms.items()}, _trusted=True
        )

    def __sub__(self, other: "StateVector") -> "StateVector":
        return self + (-other)

    def scale(self, scalar) -> "StateVector":
        scalar = self.ring.coerce(scalar)
        if not scalar:
            return StateVector.zero(self.ring)
        return StateVector(
            self.ring, {m: scalar * c for m, c in self.terms.items()}, _trusted=True
        )

    def __rmul__(self, scalar) -> "StateVector":
        return self.scale(scalar)

    def coefficient(self, mono: FockMonomial):
        return self.terms.get(mono, self.ring.zero)

    def sorted_terms(self):
        """Terms in canonical (lexicographic monomial) order."""
        return sorted(self.terms.items())

    def _check_ring(self, other: "StateVector") -> None:
        if self.ring is not other.ring:
            raise DomainError(
                f"ring mismatch: {self.ring.name} vs {other.ring.name}"
            )

    def to_terms_json(self) -> list[dict]:
        return [
            {"mono": mono.to_json(), "coeff": self.ring.coeff_json(coeff)}
            for mono, coeff in self.sorted_terms()
        ]

    def __repr__(self) -> str:
        if not self.terms:
            return "StateVector<0>"
        body = " + ".join(f"({c})|{m}>" for m, c in self.sorted_terms())
        return f"StateVector<{body}>"


def apply_creation(species: str, index: int, state: StateVector) -> StateVector:
    """Multiply by the creation operator for one mode (exponent increment)."""
    _check_mode(species, index)
    out = {}
    for mono, coeff in state.terms.items():
        out[mono.shifted(species, index, +1)] = coeff
    return StateVector(state.ring, out, _trusted=True)


def apply_annihilation(species: str, index: int, state: StateVector) -> StateVector:
    """Formal derivative: e * (exponent e decremented); kills e = 0 monomials."""
    _check_mode(species, index)
    out = {}
    for mono, coeff in state.terms.items():
        e = mono.exponent(species, index)
        if e:
            out[mono.shifted(species, index, -1)] = coeff * e
    return StateVector(state.ring, out, _trusted=True)


def inner_product(s1: StateVector, s2: StateVector):
    """Factorial-weighted inner product <s1|s2>, conjugate-linear in s1.

    On basis monomials: <M|M'> = delta_{M,M'} * prod(exponent!).  Conjugation
    acts on i and fixes sqrt3 (identity on rationals).
    """
    s1._check_ring(s2)
    ring = s1.ring
    total = ring.zero
    small, big = (s1, s2) if len(s1.terms) <= len(s2.terms) else (s2, s1)
    for mono, _ in small.terms.items():
        c1 = s1.terms.get(mono)
        c2 = s2.terms.get(mono)
        if c1 is not None and c2 is not None:
            total = total + ring.conj(c1) * c2 * mono.norm_weight()
    return total


def occupation_split(state: StateVector) -> list[tuple[int, int, StateVector]]:
    """Partition a vector into homogeneous (N_a, N_b) pieces, sorted by label."""
    parts: dict[tuple[int, int], dict] = {}
    for mono, coeff in state.terms.items():
        parts.setdefault((mono.n_a, mono.n_b), {})[mono] = coeff
    return [
        (na, nb, StateVector(state.ring, terms, _trusted=True))
        for (na, nb), terms in sorted(parts.items())
    ]


def to_ext(state: StateVector) -> StateVector:
    """Embed a rational vector into the Q(i, sqrt3) ring."""
    from .scalars import EXT, ExtScalar

    if state.ring is EXT:
        return state
    return StateVector(
        EXT,
        {m: ExtScalar.from_rational(c) for m, c in state.terms.items()},
        _trusted=True,
    )


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def monomials_with_total(total: int) -> list[FockMonomial]:
    """All monomials with exactly the given total occupation, in sorted order."""
    out = []
    for na in range(total + 1):
        nb = total - na
        for a_exp in _compositions(na, 3):
            for b_exp in _compositions(nb, 3):
                out.append(FockMonomial(a_exp, b_exp))
    return sorted(out)


def monomials_up_to(max_total: int) -> list[FockMonomial]:
    """All monomials with total occupation <= max_total, in sorted order."""
    out = []
    for t in range(max_total + 1):
        out.extend(monomials_with_total(t))
    return sorted(out)


def sector_monomials(n_a: int, n_b: int) -> list[FockMonomial]:
    """All monomials of the homogeneous (N_a, N_b) sector, in sorted order."""
    return sorted(
        FockMonomial(a, b)
        for a in _compositions(n_a, 3)
        for b in _compositions(n_b, 3)
    )


def doublet_monomials(max_n: int) -> list[FockMonomial]:
    """Monomials of the SU(2) sector: modes a1, a2 only, total <= max_n."""
    out = []
    for n in range(max_n + 1):
        for n1 in range(n + 1):
            out.append(FockMonomial((n1, n - n1, 0), (0, 0, 0)))
    return sorted(out)
