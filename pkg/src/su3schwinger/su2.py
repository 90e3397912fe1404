"""SU(2) sector: the doublet construction on modes a1, a2.

Serves as a small-group cross-check of the Fock/operator machinery.  States
live in the same 6-mode space with the b modes (and a3) pinned to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .fock import FockMonomial, StateVector, doublet_monomials
from .linalg import exact_rank, gram_matrix
from .operators import LinearOperator, ladder_products, number_function
from .scalars import QQ


@dataclass(frozen=True)
class SU2State:
    """A fully symmetric doublet-index state: j = n/2, m = (n1 - n2)/2."""

    indices: tuple[int, ...]
    vector: StateVector

    @property
    def n(self) -> int:
        return len(self.indices)

    @property
    def j(self) -> Fraction:
        return Fraction(self.n, 2)

    @property
    def m(self) -> Fraction:
        ones = sum(1 for i in self.indices if i == 1)
        return Fraction(2 * ones - self.n, 2)

    def to_json_dict(self) -> dict:
        return {
            "indices": list(self.indices),
            "j": str(self.j),
            "m": str(self.m),
            "terms": self.vector.to_terms_json(),
        }


def su2_irrep_state(indices) -> SU2State:
    """Product of doublet creation operators on the vacuum (empty tuple -> |0>)."""
    indices = tuple(indices)
    for i in indices:
        if i not in (1, 2):
            raise DomainError(f"doublet index out of range: {i}")
    mono_a = (indices.count(1), indices.count(2), 0)
    return SU2State(indices, StateVector.basis(FockMonomial(mono_a, (0, 0, 0)), QQ))


def su2_generators() -> tuple[LinearOperator, LinearOperator, LinearOperator, LinearOperator]:
    """(J_plus, J_minus, J_3, J_squared) as Pauli bilinears on modes a1, a2.

    J_squared is the closed-form number function (N/2)(N/2 + 1); see
    :func:`su2_casimir_bilinear` for the bilinear realization.
    """
    j_plus = ladder_products([(Fraction(1), (("+", "a", 1), ("-", "a", 2)))])
    j_minus = ladder_products([(Fraction(1), (("+", "a", 2), ("-", "a", 1)))])
    j_3 = ladder_products(
        [
            (Fraction(1, 2), (("+", "a", 1), ("-", "a", 1))),
            (Fraction(-1, 2), (("+", "a", 2), ("-", "a", 2))),
        ]
    )
    j_sq = number_function(lambda na, nb: Fraction(na, 2) * (Fraction(na, 2) + 1))
    return j_plus, j_minus, j_3, j_sq


def su2_casimir_bilinear() -> LinearOperator:
    """J.J built from the generators: J3^2 + (J+J- + J-J+)/2."""
    j_plus, j_minus, j_3, _ = su2_generators()
    return j_3 * j_3 + Fraction(1, 2) * (j_plus * j_minus + j_minus * j_plus)


def su2_gram_rank(n: int) -> int:
    """Exact Gram rank of all 2**n index-tuple states; equals n + 1."""
    from itertools import product

    states = [su2_irrep_state(t).vector for t in product((1, 2), repeat=n)]
    return exact_rank(gram_matrix(states))


def su2_monomials(max_n: int):
    """Doublet-sector basis monomials with occupation <= max_n."""
    return doublet_monomials(max_n)
