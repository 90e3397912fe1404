"""Construction of every SU(3) irrep state by three independent routes.

The routes, all exact over the rationals:

* ``explicit``   -- the traceless tensor expansion: bare creation monomial
  plus delta-contraction corrections, one term per unordered set of disjoint
  (upper, lower) slot pairs, weighted by the descending-product coefficients.
* ``projection`` -- the invariant projector sum_r l_r k+^r k-^r applied to
  the bare monomial (truncates exactly at r = min(n, m)).
* ``isb``        -- products of the dressed (irreducible) creation operators
  A+ and B+ on the vacuum.

Agreement of the three routes is the package's central machine-checked fact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial

from .errors import DomainError, ResourceLimitError
from .fock import FockMonomial, StateVector, inner_product
from .linalg import exact_rank, gram_matrix, solve_exact
from .operators import (
    LinearOperator,
    annihilation,
    creation,
    number_function,
    sp2r_triple,
)
from .reports import CheckRecord, failure_payload
from .scalars import QQ

METHODS = ("explicit", "projection", "isb")

#: bump when the serialized state schema changes; part of every cache key
STATE_FORMAT_VERSION = 1

#: conservative default for combinatorially growing requests
DEFAULT_LIMIT = 5

K_PLUS, K_MINUS, K_ZERO = sp2r_triple()


@dataclass(frozen=True)
class IrrepRequest:
    """An (n, m) label with its upper and lower index tuples."""

    n: int
    m: int
    upper: tuple[int, ...] = ()
    lower: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise DomainError("irrep labels must be non-negative")
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        if len(self.upper) != self.n or len(self.lower) != self.m:
            raise DomainError(
                f"index tuple lengths {len(self.upper)},{len(self.lower)} "
                f"do not match labels ({self.n},{self.m})"
            )
        for index in self.upper + self.lower:
            if index not in (1, 2, 3):
                raise DomainError(f"triplet index out of range: {index}")

    def replace_indices(self, position: int, value: int, which: str) -> "IrrepRequest":
        if which == "upper":
            new = self.upper[:position] + (value,) + self.upper[position + 1:]
            return IrrepRequest(self.n, self.m, new, self.lower)
        new = self.lower[:position] + (value,) + self.lower[position + 1:]
        return IrrepRequest(self.n, self.m, self.upper, new)


@dataclass(frozen=True)
class IrrepState:
    """A constructed irrep basis state with provenance."""

    request: IrrepRequest
    vector: StateVector
    method: str

    @property
    def label(self) -> tuple[int, int]:
        return (self.request.n, self.request.m)

    def to_json_dict(self) -> dict:
        return {
            "label": [self.request.n, self.request.m],
            "upper": list(self.request.upper),
            "lower": list(self.request.lower),
            "method": self.method,
            "terms": self.vector.to_terms_json(),
        }


def tensor_monomial(req: IrrepRequest) -> StateVector:
    """The bare creation-operator monomial of a request, coefficient 1."""
    a_exp = [0, 0, 0]
    b_exp = [0, 0, 0]
    for index in req.upper:
        a_exp[index - 1] += 1
    for index in req.lower:
        b_exp[index - 1] += 1
    return StateVector.basis(FockMonomial(tuple(a_exp), tuple(b_exp)), QQ)


def coefficient_L(r: int, n: int, m: int) -> Fraction:
    """Scalar part of the r-th contraction coefficient of the tensor expansion.

    (-1)^r divided by the product of r descending factors
    (n+m+1)(n+m)...(n+m+2-r); the k+^r factor is applied separately.
    """
    if not 1 <= r <= min(n, m):
        raise DomainError(f"contraction order r={r} out of range for ({n},{m})")
    denom = 1
    for j in range(r):
        denom *= n + m + 1 - j
    return Fraction((-1) ** r, denom)


def coefficient_l(r: int, n: int, m: int) -> Fraction:
    """Projector coefficient l_r = (-1)^r / r! * (n+m+1-r)! / (n+m+1)!.

    Satisfies l_0 = 1 and r*(n+m+2-r)*l_r = -l_{r-1}, and relates to the
    tensor-expansion coefficients by l_r * r! == coefficient_L(r, n, m).
    """
    if r < 0 or r > n + m + 1:
        raise DomainError(f"projector order r={r} out of range for ({n},{m})")
    return Fraction(
        (-1) ** r * factorial(n + m + 1 - r), factorial(r) * factorial(n + m + 1)
    )


def pairing_patterns(n: int, m: int, r: int):
    """Unordered sets of r disjoint (upper slot, lower slot) pairs, each once.

    Canonical form: upper slots strictly increasing, lower slots a choice of
    r distinct values assigned to them in any order.  Yields tuples of
    1-based (l, k) pairs; there are C(n,r) * C(m,r) * r! of them.
    """
    for upper_slots in combinations(range(1, n + 1), r):
        for lower_choice in combinations(range(1, m + 1), r):
            for lower_slots in permutations(lower_choice):
                yield tuple(zip(upper_slots, lower_slots))


def irrep_explicit(req: IrrepRequest) -> IrrepState:
    """Traceless tensor expansion: contraction corrections added to the bare monomial."""
    total = tensor_monomial(req)
    for r in range(1, min(req.n, req.m) + 1):
        contracted = StateVector.zero(QQ)
        for pattern in pairing_patterns(req.n, req.m, r):
            if any(req.upper[l - 1] != req.lower[k - 1] for l, k in pattern):
                continue  # delta product vanishes
            upper_used = {l for l, _ in pattern}
            lower_used = {k for _, k in pattern}
            reduced = IrrepRequest(
                req.n - r,
                req.m - r,
                tuple(v for i, v in enumerate(req.upper, 1) if i not in upper_used),
                tuple(v for i, v in enumerate(req.lower, 1) if i not in lower_used),
            )
            contracted = contracted + tensor_monomial(reduced)
        if contracted:
            total = total + coefficient_L(r, req.n, req.m) * (K_PLUS ** r)(contracted)
    return IrrepState(req, total, "explicit")


def projector(n: int, m: int) -> LinearOperator:
    """The invariant projector sum_{r<=min(n,m)} l_r(n,m) k+^r k-^r."""

    def apply(state: StateVector) -> StateVector:
        result = state  # r = 0 term, l_0 = 1
        lowered = state
        for r in range(1, min(n, m) + 1):
            lowered = K_MINUS(lowered)
            if lowered.is_zero():
                break
            result = result + coefficient_l(r, n, m) * (K_PLUS ** r)(lowered)
        return result

    return LinearOperator(apply)


def projection_apply(req: IrrepRequest) -> IrrepState:
    """Projector route: apply the invariant projector to the bare monomial."""
    vector = projector(req.n, req.m)(tensor_monomial(req))
    return IrrepState(req, vector, "projection")


# ---------------------------------------------------------------------------
# Irreducible (dressed) Schwinger boson operators
# ---------------------------------------------------------------------------


def _inv_occupation_plus_one() -> LinearOperator:
    return number_function(lambda na, nb: Fraction(1, na + nb + 1))


def isb_A_dagger(alpha: int) -> LinearOperator:
    """A+alpha = a+alpha - 1/(N_a+N_b+1) k+ b^alpha (rightmost factor first)."""
    return creation("a", alpha) - _inv_occupation_plus_one() * K_PLUS * annihilation("b", alpha)


def isb_B_dagger(beta: int) -> LinearOperator:
    """B+beta = b+beta - 1/(N_a+N_b+1) k+ a_beta."""
    return creation("b", beta) - _inv_occupation_plus_one() * K_PLUS * annihilation("a", beta)


def isb_A(alpha: int) -> LinearOperator:
    """A_alpha = a_alpha - b+alpha k- 1/(N_a+N_b+1); adjoint of A+alpha."""
    return annihilation("a", alpha) - creation("b", alpha) * K_MINUS * _inv_occupation_plus_one()


def isb_B(beta: int) -> LinearOperator:
    """B^beta = b^beta - a+beta k- 1/(N_a+N_b+1); adjoint of B+beta."""
    return annihilation("b", beta) - creation("a", beta) * K_MINUS * _inv_occupation_plus_one()


def isb_contraction_AB() -> LinearOperator:
    """A.B = sum_g A_g B^g; annihilates every irrep state."""
    op = isb_A(1) * isb_B(1)
    for g in (2, 3):
        op = op + isb_A(g) * isb_B(g)
    return op


def isb_contraction_AdagBdag() -> LinearOperator:
    """A+.B+ = sum_g A+g B+g; annihilates every irrep state."""
    op = isb_A_dagger(1) * isb_B_dagger(1)
    for g in (2, 3):
        op = op + isb_A_dagger(g) * isb_B_dagger(g)
    return op


def irrep_isb(req: IrrepRequest) -> IrrepState:
    """Dressed-operator route: A+'s and B+'s applied directly to the vacuum."""
    state = StateVector.vacuum(QQ)
    for beta in reversed(req.lower):
        state = isb_B_dagger(beta)(state)
    for alpha in reversed(req.upper):
        state = isb_A_dagger(alpha)(state)
    return IrrepState(req, state, "isb")


_CONSTRUCTORS = {
    "explicit": irrep_explicit,
    "projection": projection_apply,
    "isb": irrep_isb,
}


def construct(req: IrrepRequest, method: str) -> IrrepState:
    """Build the requested state by the named method."""
    try:
        builder = _CONSTRUCTORS[method]
    except KeyError:
        raise DomainError(f"unknown construction method: {method!r}") from None
    return builder(req)


# ---------------------------------------------------------------------------
# Properties of constructed states
# ---------------------------------------------------------------------------


def trace_contract(state: IrrepState, l: int, k: int) -> StateVector:
    """Sum over g of the state family with upper slot l = lower slot k = g.

    Zero for every valid irrep state; nonzero on bare tensor monomials.
    """
    req = state.request
    if not 1 <= l <= req.n or not 1 <= k <= req.m:
        raise DomainError(f"contraction slots ({l},{k}) out of range for {req}")
    total = StateVector.zero(QQ)
    for g in (1, 2, 3):
        contracted_req = req.replace_indices(l - 1, g, "upper").replace_indices(
            k - 1, g, "lower"
        )
        total = total + construct(contracted_req, state.method).vector
    return total


def sp2r_weight(state: StateVector) -> tuple[Fraction, Fraction]:
    """The (k, m') weight of a single-tower state.

    m' is the k0 eigenvalue; k is recovered operationally as m' minus the
    number of k- applications needed to annihilate the state (0 for a fresh
    irrep state, rho for k+^rho applied to one).
    """
    if state.is_zero():
        raise DomainError("zero vector has no Sp(2,R) weight")
    totals = {mono.total for mono in state.terms}
    if len(totals) > 1:
        raise DomainError("state is not a k0 eigenstate")
    m_prime = Fraction(totals.pop() + 3, 2)
    rho = 0
    lowered = K_MINUS(state)
    while not lowered.is_zero():
        rho += 1
        lowered = K_MINUS(lowered)
    return (m_prime - rho, m_prime)


def tower_state(req: IrrepRequest, rho: int) -> StateVector:
    """k+^rho applied to the dressed-route irrep state."""
    if rho < 0:
        raise DomainError("tower power must be non-negative")
    return (K_PLUS ** rho)(irrep_isb(req).vector)


def dim_formula(n: int, m: int) -> int:
    """(n+1)(m+1)(n+m+2)/2, the standard dimension of the (n, m) irrep."""
    return (n + 1) * (m + 1) * (n + m + 2) // 2


def all_requests(n: int, m: int):
    """Every index-tuple request of the (n, m) sector, in lexicographic order."""
    for upper in product((1, 2, 3), repeat=n):
        for lower in product((1, 2, 3), repeat=m):
            yield IrrepRequest(n, m, upper, lower)


def sector_states(n: int, m: int, method: str = "isb") -> list[IrrepState]:
    return [construct(req, method) for req in all_requests(n, m)]


def gram_rank(n: int, m: int, *, limit: int = DEFAULT_LIMIT) -> int:
    """Exact rank of the Gram matrix of all 3^n 3^m dressed-route states.

    Equals dim_formula(n, m).  Raises ResourceLimitError for n + m beyond
    ``limit`` (the Gram matrix has 9^(n+m) entries).
    """
    if n + m > limit:
        raise ResourceLimitError(
            f"gram_rank({n},{m}) exceeds the configured bound n+m <= {limit}"
        )
    states = [s.vector for s in sector_states(n, m)]
    return exact_rank(gram_matrix(states))


def ladder_check(n: int, m: int) -> list[CheckRecord]:
    """Dressed creation operators as irrep ladders, checked sector-wide.

    For every (n, m) index tuple and every new index: A+ applied to the
    explicit-route state equals the explicit-route (n+1, m) state with the
    index prepended; mirror statement for B+ into (n, m+1).
    """
    records = []
    bases = [(req, irrep_explicit(req).vector) for req in all_requests(n, m)]
    for new_index in (1, 2, 3):
        for op_name, op, grown in (
            ("A+", isb_A_dagger(new_index), lambda r: IrrepRequest(
                n + 1, m, (new_index,) + r.upper, r.lower)),
            ("B+", isb_B_dagger(new_index), lambda r: IrrepRequest(
                n, m + 1, r.upper, (new_index,) + r.lower)),
        ):
            failure = None
            for req, base in bases:
                lifted = op(base)
                target = irrep_explicit(grown(req)).vector
                if lifted != target:
                    failure = failure_payload(base, lifted - target)
                    break
            records.append(
                CheckRecord(
                    f"ladder.{op_name}[({n},{m}),idx={new_index}]",
                    {"sector": [n, m], "op": op_name, "index": new_index},
                    failure is None,
                    failure,
                )
            )
    return records


def generator_closure_check(n: int, m: int) -> list[CheckRecord]:
    """Weyl generators map the (n, m) span into itself.

    Each image is expressed in the Gram basis by an exact linear solve and
    reconstructed; exact equality is required.
    """
    from .operators import su3_generator_weyl

    states = [s.vector for s in sector_states(n, m, "explicit")]
    gram = gram_matrix(states)
    records = []
    for alpha in (1, 2, 3):
        for beta in (1, 2, 3):
            op = su3_generator_weyl(alpha, beta)
            failure = None
            for state in states:
                image = op(state)
                rhs = [inner_product(s, image) for s in states]
                coeffs = solve_exact(gram, rhs)
                rebuilt = StateVector.zero(QQ)
                if coeffs is not None:
                    for c, s in zip(coeffs, states):
                        if c:
                            rebuilt = rebuilt + c * s
                if coeffs is None or rebuilt != image:
                    failure = failure_payload(state, image - rebuilt)
                    break
            records.append(
                CheckRecord(
                    f"span.weyl[({n},{m}),E{alpha}{beta}]",
                    {"sector": [n, m], "generator": [alpha, beta]},
                    failure is None,
                    failure,
                )
            )
    return records
