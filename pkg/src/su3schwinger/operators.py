"""Composable linear operators on the Fock space.

Operators are evaluable closures, not symbolic expressions: every identity is
checked by applying both sides to a finite set of states and comparing
exactly.  The workhorses are sums of ladder-operator products (used for the
Sp(2,R) triple and both generator bases) and diagonal number-function
multipliers.  Composition is right-to-left: ``(p * q)(s) == p(q(s))``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .fock import StateVector, apply_annihilation, apply_creation
from .reports import CheckRecord, failure_payload
from .scalars import EXT, ExtScalar, I, QQ


class LinearOperator:
    """A linear map StateVector -> StateVector."""

    __slots__ = ("_fn",)

    def __init__(self, fn):
        self._fn = fn

    def __call__(self, state: StateVector) -> StateVector:
        return self._fn(state)

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(lambda s, p=self, q=other: p(s) + q(s))

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        return LinearOperator(lambda s, p=self, q=other: p(s) - q(s))

    def __neg__(self) -> "LinearOperator":
        return LinearOperator(lambda s, p=self: -p(s))

    def __mul__(self, other):
        if isinstance(other, LinearOperator):
            # composition: rightmost factor acts first
            return LinearOperator(lambda s, p=self, q=other: p(q(s)))
        return LinearOperator(lambda s, p=self, c=other: p(s).scale(c))

    def __rmul__(self, scalar):
        return LinearOperator(lambda s, p=self, c=scalar: p(s).scale(c))

    def __pow__(self, exponent: int) -> "LinearOperator":
        if exponent < 0:
            raise DomainError("operator powers must be non-negative")
        if exponent == 0:
            return identity()
        op = self
        for _ in range(exponent - 1):
            op = op * self
        return op


def identity() -> LinearOperator:
    return LinearOperator(lambda s: s)


def zero_operator() -> LinearOperator:
    return LinearOperator(lambda s: StateVector.zero(s.ring))


def creation(species: str, index: int) -> LinearOperator:
    return LinearOperator(lambda s, sp=species, i=index: apply_creation(sp, i, s))


def annihilation(species: str, index: int) -> LinearOperator:
    return LinearOperator(lambda s, sp=species, i=index: apply_annihilation(sp, i, s))


def number_function(fn) -> LinearOperator:
    """Diagonal multiplier: each monomial is scaled by fn(N_a, N_b).

    ``fn`` returns a rational; evaluation happens on the state the operator
    receives at its position in a composition (rightmost factor first).
    """

    def apply(state: StateVector) -> StateVector:
        out = {}
        for mono, coeff in state.terms.items():
            value = fn(mono.n_a, mono.n_b)
            if value:
                out[mono] = value * coeff
        return StateVector(state.ring, out, _trusted=True)

    return LinearOperator(apply)


def ladder_products(terms) -> LinearOperator:
    """Sum of coefficient-weighted ladder products, applied monomial-wise.

    ``terms`` is a list of ``(coef, factors)`` with ``factors`` a sequence of
    ``(action, species, index)`` triples, action '+' for creation and '-' for
    annihilation, applied right-to-left.  A term with any ExtScalar
    coefficient requires vectors over the Q(i,sqrt3) ring.
    """
    compiled = []
    needs_ext = False
    for coef, factors in terms:
        if isinstance(coef, ExtScalar):
            needs_ext = True
        compiled.append((coef, tuple(reversed(tuple(factors)))))

    def apply(state: StateVector) -> StateVector:
        if needs_ext and state.ring is not EXT:
            raise DomainError("operator with Q(i,sqrt3) coefficients needs an EXT vector")
        out = {}
        for mono, coeff in state.terms.items():
            exps = list(mono.a_exp + mono.b_exp)
            for coef, factors in compiled:
                mult = 1
                work = exps.copy()
                for action, species, index in factors:
                    slot = index - 1 if species == "a" else index + 2
                    if action == "+":
                        work[slot] += 1
                    else:
                        e = work[slot]
                        if e == 0:
                            mult = 0
                            break
                        mult *= e
                        work[slot] = e - 1
                if not mult:
                    continue
                new_mono = mono.__class__(tuple(work[:3]), tuple(work[3:]))
                value = coef * mult * coeff
                acc = out.get(new_mono)
                acc = value if acc is None else acc + value
                if acc:
                    out[new_mono] = acc
                elif new_mono in out:
                    del out[new_mono]
        return StateVector(state.ring, out, _trusted=True)

    return LinearOperator(apply)


def commutator(p: LinearOperator, q: LinearOperator) -> LinearOperator:
    """The operator s -> p(q(s)) - q(p(s))."""
    return LinearOperator(lambda s: p(q(s)) - q(p(s)))


def number_a() -> LinearOperator:
    return number_function(lambda na, nb: Fraction(na))


def number_b() -> LinearOperator:
    return number_function(lambda na, nb: Fraction(nb))


def sp2r_triple() -> tuple[LinearOperator, LinearOperator, LinearOperator]:
    """The SU(3)-invariant triple (k_plus, k_minus, k_zero).

    k_plus = sum_g a+g b+g, k_minus = sum_g a_g b_g,
    k_zero = (N_a + N_b + 3)/2.
    """
    k_plus = ladder_products(
        [(Fraction(1), (("+", "a", g), ("+", "b", g))) for g in (1, 2, 3)]
    )
    k_minus = ladder_products(
        [(Fraction(1), (("-", "a", g), ("-", "b", g))) for g in (1, 2, 3)]
    )
    k_zero = number_function(lambda na, nb: Fraction(na + nb + 3, 2))
    return k_plus, k_minus, k_zero


# ---------------------------------------------------------------------------
# SU(3) generators
# ---------------------------------------------------------------------------

_H = Fraction(1, 2)
_S3 = Fraction(1, 3)  # 1/sqrt3 == (1/3) * sqrt3


def _ext(w=0, x=0, y=0, z=0):
    return ExtScalar(w, x, y, z)


# standard Gell-Mann matrices; rows/columns are triplet indices 1..3
GELL_MANN = (
    ((_ext(), _ext(1), _ext()), (_ext(1), _ext(), _ext()), (_ext(), _ext(), _ext())),
    ((_ext(), _ext(0, -1), _ext()), (_ext(0, 1), _ext(), _ext()), (_ext(), _ext(), _ext())),
    ((_ext(1), _ext(), _ext()), (_ext(), _ext(-1), _ext()), (_ext(), _ext(), _ext())),
    ((_ext(), _ext(), _ext(1)), (_ext(), _ext(), _ext()), (_ext(1), _ext(), _ext())),
    ((_ext(), _ext(), _ext(0, -1)), (_ext(), _ext(), _ext()), (_ext(0, 1), _ext(), _ext())),
    ((_ext(), _ext(), _ext()), (_ext(), _ext(), _ext(1)), (_ext(), _ext(1), _ext())),
    ((_ext(), _ext(), _ext()), (_ext(), _ext(), _ext(0, -1)), (_ext(), _ext(0, 1), _ext())),
    (
        (_ext(0, 0, _S3), _ext(), _ext()),
        (_ext(), _ext(0, 0, _S3), _ext()),
        (_ext(), _ext(), _ext(0, 0, -2 * _S3)),
    ),
)


class StructureConstantTable:
    """Totally antisymmetric SU(3) structure constants f^{abc}."""

    _BASE = {
        (1, 2, 3): _ext(1),
        (1, 4, 7): _ext(_H),
        (1, 5, 6): _ext(-_H),
        (2, 4, 6): _ext(_H),
        (2, 5, 7): _ext(_H),
        (3, 4, 5): _ext(_H),
        (3, 6, 7): _ext(-_H),
        (4, 5, 8): _ext(0, 0, _H),
        (6, 7, 8): _ext(0, 0, _H),
    }

    def __init__(self):
        table = {}
        for (a, b, c), value in self._BASE.items():
            for perm, sign in (
                ((a, b, c), 1), ((b, c, a), 1), ((c, a, b), 1),
                ((b, a, c), -1), ((a, c, b), -1), ((c, b, a), -1),
            ):
                table[perm] = value if sign == 1 else -value
        self._table = table

    def get(self, a: int, b: int, c: int) -> ExtScalar:
        for index in (a, b, c):
            if index not in range(1, 9):
                raise DomainError(f"adjoint index out of range: {index}")
        return self._table.get((a, b, c), ExtScalar())

    def nonzero_with(self, a: int, b: int):
        """Pairs (c, f^{abc}) with nonzero value, c ascending."""
        return [
            (c, self._table[(a, b, c)])
            for c in range(1, 9)
            if (a, b, c) in self._table
        ]


F_TABLE = StructureConstantTable()


def su3_generator_gellmann(a: int, lambdas=None) -> LinearOperator:
    """Q^a = a+ (lambda^a/2) a - b+ (transpose(lambda^a)/2) b, over Q(i,sqrt3).

    ``lambdas`` overrides the built-in matrices (used by negative controls).
    """
    if a not in range(1, 9):
        raise DomainError(f"adjoint index out of range: {a}")
    lam = (lambdas or GELL_MANN)[a - 1]
    terms = []
    for alpha in (1, 2, 3):
        for beta in (1, 2, 3):
            entry = lam[alpha - 1][beta - 1]
            if entry:
                terms.append((entry * _H, (("+", "a", alpha), ("-", "a", beta))))
            entry_t = lam[beta - 1][alpha - 1]
            if entry_t:
                terms.append((-(entry_t * _H), (("+", "b", alpha), ("-", "b", beta))))
    return ladder_products(terms)


def su3_generator_weyl(alpha: int, beta: int) -> LinearOperator:
    """E^alpha_beta = a+alpha a_beta - b+beta b^alpha, over the rationals."""
    for index in (alpha, beta):
        if index not in (1, 2, 3):
            raise DomainError(f"triplet index out of range: {index}")
    return ladder_products(
        [
            (Fraction(1), (("+", "a", alpha), ("-", "a", beta))),
            (Fraction(-1), (("+", "b", beta), ("-", "b", alpha))),
        ]
    )


def gellmann_as_weyl_combination(a: int) -> LinearOperator:
    """Q^a rebuilt as the explicit combination sum_{alpha,beta} (lambda^a_{alpha beta}/2) E^alpha_beta."""
    lam = GELL_MANN[a - 1]
    op = zero_operator()
    for alpha in (1, 2, 3):
        for beta in (1, 2, 3):
            entry = lam[alpha - 1][beta - 1]
            if entry:
                op = op + (entry * _H) * su3_generator_weyl(alpha, beta)
    return op


# ---------------------------------------------------------------------------
# Identity verifiers
# ---------------------------------------------------------------------------


def verify_covariance(testset, lambdas=None) -> list[CheckRecord]:
    """Check that a+ transforms as a triplet and b+ as an anti-triplet.

    For every a in 1..8 and triplet index alpha:
      [Q^a, a+alpha] = (1/2) sum_beta lambda^a_{beta alpha} a+beta
      [Q^a, b+alpha] = -(1/2) sum_beta lambda^a_{alpha beta} b+beta
    applied to every vector of ``testset`` (Q(i,sqrt3) ring), 48 cases total.
    """
    lam_set = lambdas or GELL_MANN
    records = []
    for a in range(1, 9):
        q_op = su3_generator_gellmann(a, lambdas=lam_set)
        lam = lam_set[a - 1]
        for alpha in (1, 2, 3):
            for species in ("a", "b"):
                lhs = commutator(q_op, creation(species, alpha))
                if species == "a":
                    rhs_terms = [
                        (lam[beta - 1][alpha - 1] * _H, (("+", "a", beta),))
                        for beta in (1, 2, 3)
                        if lam[beta - 1][alpha - 1]
                    ]
                else:
                    rhs_terms = [
                        (-(lam[alpha - 1][beta - 1] * _H), (("+", "b", beta),))
                        for beta in (1, 2, 3)
                        if lam[alpha - 1][beta - 1]
                    ]
                rhs = ladder_products(rhs_terms)
                records.append(
                    _check_on_testset(
                        f"covariance[a={a},{species}+,{alpha}]",
                        {"generator": a, "species": species, "index": alpha},
                        lhs,
                        rhs,
                        testset,
                    )
                )
    return records


def verify_lie_closure(ext_testset, rational_testset=()) -> list[CheckRecord]:
    """Check algebra closure in both bases.

    Gell-Mann basis on ``ext_testset``: [Q^a, Q^b] = i f^{abc} Q^c for all 28
    unordered pairs, plus [Q^a, N_a] = [Q^a, N_b] = 0.  Weyl basis on
    ``rational_testset``: [E^a_b, E^c_d] = d^c_b E^a_d - d^a_d E^c_b.
    """
    records = []
    q_ops = {a: su3_generator_gellmann(a) for a in range(1, 9)}
    for a in range(1, 9):
        for b in range(a + 1, 9):
            lhs = commutator(q_ops[a], q_ops[b])
            rhs = zero_operator()
            for c, f_abc in F_TABLE.nonzero_with(a, b):
                rhs = rhs + (I * f_abc) * q_ops[c]
            records.append(
                _check_on_testset(
                    f"closure.gellmann[{a},{b}]",
                    {"a": a, "b": b},
                    lhs,
                    rhs,
                    ext_testset,
                )
            )
    for a in range(1, 9):
        for label, num_op in (("Na", number_a()), ("Nb", number_b())):
            records.append(
                _check_on_testset(
                    f"closure.casimir[{a},{label}]",
                    {"a": a, "casimir": label},
                    commutator(q_ops[a], num_op),
                    zero_operator(),
                    ext_testset,
                )
            )
    if rational_testset:
        e_ops = {
            (al, be): su3_generator_weyl(al, be)
            for al in (1, 2, 3)
            for be in (1, 2, 3)
        }
        for (al, be), e1 in e_ops.items():
            for (ga, de), e2 in e_ops.items():
                rhs = zero_operator()
                if ga == be:
                    rhs = rhs + e_ops[(al, de)]
                if al == de:
                    rhs = rhs - e_ops[(ga, be)]
                records.append(
                    _check_on_testset(
                        f"closure.weyl[{al}{be},{ga}{de}]",
                        {"left": [al, be], "right": [ga, de]},
                        commutator(e1, e2),
                        rhs,
                        rational_testset,
                    )
                )
    return records


def _check_on_testset(check_id, params, lhs, rhs, testset) -> CheckRecord:
    for state in testset:
        difference = lhs(state) - rhs(state)
        if difference:
            return CheckRecord(
                check_id, params, False, failure_payload(state, difference)
            )
    return CheckRecord(check_id, params, True)
