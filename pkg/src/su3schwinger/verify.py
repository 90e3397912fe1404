"""Verification suites: every operator identity as a machine-checked property.

Each suite function returns a list of check records; ``run_suite`` wraps one
(or all) of them in a timed report.  Bounds derive from a single ``max_total``
occupation cap; a few checks carry their own documented caps where the
underlying property is stated on a smaller family (Gram ranks at n+m <= 4,
dressed-commutator relations on irreps at n+m <= 3, span closure at n+m <= 2).
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import combinations
from math import factorial

from . import irreps
from .errors import DomainError
from .fock import (
    StateVector,
    apply_annihilation,
    apply_creation,
    inner_product,
    monomials_up_to,
    to_ext,
)
from .operators import (
    annihilation,
    commutator,
    creation,
    gellmann_as_weyl_combination,
    identity,
    sp2r_triple,
    su3_generator_gellmann,
    verify_covariance,
    verify_lie_closure,
    zero_operator,
)
from .reports import CheckRecord, VerificationReport, failure_payload
from .scalars import EXT, QQ
from .su2 import (
    su2_casimir_bilinear,
    su2_generators,
    su2_gram_rank,
    su2_irrep_state,
    su2_monomials,
)

MODES = tuple((species, index) for species in ("a", "b") for index in (1, 2, 3))


def _basis_states(max_total, ring=QQ):
    states = [StateVector.basis(m, QQ) for m in monomials_up_to(max_total)]
    if ring is EXT:
        return [to_ext(s) for s in states]
    return states


def _random_vectors(max_total, count, seed=20240607):
    rng = random.Random(seed)
    monos = monomials_up_to(max_total)
    out = []
    for _ in range(count):
        terms = {}
        for mono in rng.sample(monos, k=min(4, len(monos))):
            terms[mono] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        out.append(StateVector(QQ, terms))
    return out


def _operator_identity(check_id, params, lhs, rhs, states) -> CheckRecord:
    for state in states:
        difference = lhs(state) - rhs(state)
        if difference:
            return CheckRecord(check_id, params, False, failure_payload(state, difference))
    return CheckRecord(check_id, params, True)


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def suite_oscillator(max_total: int) -> list[CheckRecord]:
    records = []
    basis = _basis_states(max_total)
    randoms = _random_vectors(max_total, 6)

    # adjointness of creation/annihilation under the factorial inner product,
    # on random vector pairs (covers all cross terms by sesquilinearity)
    pairs = list(zip(randoms, randoms[1:] + randoms[:1]))
    for species, index in MODES:
        failure = None
        for s, t in pairs:
            lhs = inner_product(apply_creation(species, index, s), t)
            rhs = inner_product(s, apply_annihilation(species, index, t))
            if lhs != rhs:
                failure = {"mode": [species, index], "lhs": str(lhs), "rhs": str(rhs)}
                break
        records.append(
            CheckRecord(
                f"oscillator.adjoint[{species}{index}]",
                {"species": species, "index": index},
                failure is None,
                failure,
            )
        )

    # canonical commutation relations on every basis monomial
    for sp1, i1 in MODES:
        for sp2, i2 in MODES:
            delta = identity() if (sp1, i1) == (sp2, i2) else zero_operator()
            records.append(
                _operator_identity(
                    f"oscillator.ccr[{sp1}{i1},{sp2}{i2}]",
                    {"annihilate": [sp1, i1], "create": [sp2, i2]},
                    commutator(annihilation(sp1, i1), creation(sp2, i2)),
                    delta,
                    basis,
                )
            )

    # creation operators commute pairwise; annihilation likewise
    for kind, factory in (("create", creation), ("annihilate", annihilation)):
        for (sp1, i1), (sp2, i2) in combinations(MODES, 2):
            records.append(
                _operator_identity(
                    f"oscillator.commute-{kind}[{sp1}{i1},{sp2}{i2}]",
                    {"kind": kind, "modes": [[sp1, i1], [sp2, i2]]},
                    commutator(factory(sp1, i1), factory(sp2, i2)),
                    zero_operator(),
                    basis,
                )
            )

    # positivity of the norm on rational vectors
    failure = None
    for s in randoms + [StateVector.zero(QQ)]:
        norm_sq = inner_product(s, s)
        if (norm_sq <= 0 and not s.is_zero()) or (s.is_zero() and norm_sq != 0):
            failure = {"state": s.to_terms_json(), "norm_sq": str(norm_sq)}
            break
    records.append(
        CheckRecord("oscillator.norm-positive", {"vectors": len(randoms) + 1},
                    failure is None, failure)
    )
    return records


def suite_su2(max_n: int) -> list[CheckRecord]:
    records = []
    basis = [StateVector.basis(m, QQ) for m in su2_monomials(max_n)]
    j_plus, j_minus, j_3, j_sq = su2_generators()

    for check_id, lhs, rhs in (
        ("su2.bracket[J3,J+]", commutator(j_3, j_plus), j_plus),
        ("su2.bracket[J3,J-]", commutator(j_3, j_minus), -j_minus),
        ("su2.bracket[J+,J-]", commutator(j_plus, j_minus), Fraction(2) * j_3),
        ("su2.casimir-forms", su2_casimir_bilinear(), j_sq),
    ):
        records.append(_operator_identity(check_id, {"max_n": max_n}, lhs, rhs, basis))

    from itertools import product as iproduct

    for n in range(max_n + 1):
        eigenvalue = Fraction(n, 2) * (Fraction(n, 2) + 1)
        failure = None
        for tupl in iproduct((1, 2), repeat=n):
            state = su2_irrep_state(tupl).vector
            difference = j_sq(state) - eigenvalue * state
            if difference:
                failure = failure_payload(state, difference)
                break
        records.append(
            CheckRecord(
                f"su2.casimir-eigen[n={n}]",
                {"n": n, "eigenvalue": str(eigenvalue)},
                failure is None,
                failure,
            )
        )
        rank = su2_gram_rank(n)
        records.append(
            CheckRecord(
                f"su2.gram-rank[n={n}]",
                {"n": n, "rank": rank, "expected": n + 1},
                rank == n + 1,
                None if rank == n + 1 else {"rank": rank, "expected": n + 1},
            )
        )
    return records


def suite_algebra(max_total: int) -> list[CheckRecord]:
    ext_basis = _basis_states(max_total, EXT)
    rational_basis = _basis_states(max_total)
    records = verify_covariance(ext_basis)
    records += verify_lie_closure(ext_basis, rational_basis)
    # both generator bases span the same operators: Q^a as a lambda-weighted
    # combination of the rational-basis generators (checked on a small basis)
    small = _basis_states(min(max_total, 2), EXT)
    for a in range(1, 9):
        records.append(
            _operator_identity(
                f"algebra.weyl-gellmann[{a}]",
                {"a": a},
                su3_generator_gellmann(a),
                gellmann_as_weyl_combination(a),
                small,
            )
        )
    return records


def suite_sp2r(max_total: int) -> list[CheckRecord]:
    records = []
    basis = _basis_states(max_total)
    k_plus, k_minus, k_zero = sp2r_triple()
    for check_id, lhs, rhs in (
        ("sp2r.bracket[k-,k+]", commutator(k_minus, k_plus), Fraction(2) * k_zero),
        ("sp2r.bracket[k0,k+]", commutator(k_zero, k_plus), k_plus),
        ("sp2r.bracket[k0,k-]", commutator(k_zero, k_minus), -k_minus),
    ):
        records.append(
            _operator_identity(check_id, {"max_total": max_total}, lhs, rhs, basis)
        )
    ext_basis = _basis_states(max_total, EXT)
    for a in range(1, 9):
        q_op = su3_generator_gellmann(a)
        for name, invariant in (("k+", k_plus), ("k-", k_minus)):
            records.append(
                _operator_identity(
                    f"sp2r.invariant[Q{a},{name}]",
                    {"a": a, "invariant": name},
                    commutator(q_op, invariant),
                    zero_operator(),
                    ext_basis,
                )
            )
    return records


def _sectors(max_sum: int):
    for n in range(max_sum + 1):
        for m in range(max_sum + 1 - n):
            yield n, m


def suite_irreps(max_total: int) -> list[CheckRecord]:
    records = []

    for n, m in _sectors(max_total):
        family = {}
        failure = None
        for req in irreps.all_requests(n, m):
            explicit = irreps.irrep_explicit(req)
            family[(req.upper, req.lower)] = explicit.vector
            if failure is None:
                proj = irreps.projection_apply(req).vector
                isb = irreps.irrep_isb(req).vector
                if not (explicit.vector == proj == isb):
                    failure = {
                        "request": explicit.to_json_dict(),
                        "projection": proj.to_terms_json(),
                        "isb": isb.to_terms_json(),
                    }
        records.append(
            CheckRecord(
                f"irreps.three-path[({n},{m})]",
                {"sector": [n, m], "tuples": 3 ** (n + m)},
                failure is None,
                failure,
            )
        )

        # C1/C2: the vector depends only on the index multisets
        failure = None
        canonical = {}
        for (upper, lower), vector in family.items():
            key = (tuple(sorted(upper)), tuple(sorted(lower)))
            seen = canonical.setdefault(key, vector)
            if seen != vector:
                failure = failure_payload(vector, vector - seen)
                break
        records.append(
            CheckRecord(
                f"irreps.symmetric[({n},{m})]",
                {"sector": [n, m]},
                failure is None,
                failure,
            )
        )

        # C3 in both forms: every (l,k) contraction vanishes; k- annihilates
        failure = None
        if n >= 1 and m >= 1:
            for (upper, lower) in family:
                for l in range(1, n + 1):
                    for k in range(1, m + 1):
                        total = StateVector.zero(QQ)
                        for g in (1, 2, 3):
                            new_u = upper[: l - 1] + (g,) + upper[l:]
                            new_l = lower[: k - 1] + (g,) + lower[k:]
                            total = total + family[(new_u, new_l)]
                        if total:
                            failure = {"upper": list(upper), "lower": list(lower),
                                       "slots": [l, k],
                                       "residue": total.to_terms_json()}
                            break
                    if failure:
                        break
                if failure:
                    break
        records.append(
            CheckRecord(
                f"irreps.traceless[({n},{m})]", {"sector": [n, m]},
                failure is None, failure,
            )
        )

        failure = None
        for (upper, lower), vector in family.items():
            lowered = irreps.K_MINUS(vector)
            if lowered:
                failure = failure_payload(vector, lowered)
                break
        records.append(
            CheckRecord(
                f"irreps.kminus-annihilates[({n},{m})]", {"sector": [n, m]},
                failure is None, failure,
            )
        )

        # projector idempotence on already-projected states
        proj_op = irreps.projector(n, m)
        failure = None
        for (upper, lower), vector in family.items():
            reprojected = proj_op(vector)
            if reprojected != vector:
                failure = failure_payload(vector, reprojected - vector)
                break
        records.append(
            CheckRecord(
                f"irreps.idempotent[({n},{m})]", {"sector": [n, m]},
                failure is None, failure,
            )
        )

        # span completeness is a stated property only up to n+m <= 4
        if n + m <= min(max_total, 4):
            rank = irreps.gram_rank(n, m, limit=max(4, max_total))
            expected = irreps.dim_formula(n, m)
            records.append(
                CheckRecord(
                    f"irreps.gram-rank[({n},{m})]",
                    {"sector": [n, m], "rank": rank, "expected": expected},
                    rank == expected,
                    None if rank == expected else {"rank": rank, "expected": expected},
                )
            )
        if n + m <= min(max_total, 2):
            records.extend(irreps.generator_closure_check(n, m))

    records.extend(_coefficient_records(max(max_total, 8)))
    return records


def _coefficient_records(max_sum: int) -> list[CheckRecord]:
    records = []
    recurrence_fail = factorial_fail = shift_fail = None
    for n, m in _sectors(max_sum):
        if irreps.coefficient_l(0, n, m) != 1:
            recurrence_fail = {"sector": [n, m], "l0": str(irreps.coefficient_l(0, n, m))}
        for r in range(1, min(n, m) + 1):
            l_r = irreps.coefficient_l(r, n, m)
            l_prev = irreps.coefficient_l(r - 1, n, m)
            if r * (n + m + 2 - r) * l_r != -l_prev and recurrence_fail is None:
                recurrence_fail = {"sector": [n, m], "r": r}
            if l_r * factorial(r) != irreps.coefficient_L(r, n, m) and factorial_fail is None:
                factorial_fail = {"sector": [n, m], "r": r}
            if irreps.coefficient_l(r, n + 1, m) != Fraction(n + m + 2 - r, n + m + 2) * l_r \
                    and shift_fail is None:
                shift_fail = {"sector": [n, m], "r": r}
    records.append(CheckRecord("coeff.recurrence", {"max_sum": max_sum},
                               recurrence_fail is None, recurrence_fail))
    records.append(CheckRecord("coeff.factorial-ratio", {"max_sum": max_sum},
                               factorial_fail is None, factorial_fail))
    records.append(CheckRecord("coeff.shift", {"max_sum": max_sum},
                               shift_fail is None, shift_fail))
    return records


def suite_isb(max_total: int) -> list[CheckRecord]:
    records = []
    basis = _basis_states(max_total)

    ops = {
        "A+": {i: irreps.isb_A_dagger(i) for i in (1, 2, 3)},
        "B+": {i: irreps.isb_B_dagger(i) for i in (1, 2, 3)},
    }
    for kind, left, right, pairs in (
        ("[A+,A+]", "A+", "A+", combinations((1, 2, 3), 2)),
        ("[B+,B+]", "B+", "B+", combinations((1, 2, 3), 2)),
        ("[A+,B+]", "A+", "B+", [(i, j) for i in (1, 2, 3) for j in (1, 2, 3)]),
    ):
        for i, j in pairs:
            records.append(
                _operator_identity(
                    f"isb.comm{kind}[{i},{j}]",
                    {"kind": kind, "indices": [i, j]},
                    commutator(ops[left][i], ops[right][j]),
                    zero_operator(),
                    basis,
                )
            )

    # dressed commutator relations hold acting on irrep states (n+m <= 3)
    irrep_states = []
    for n, m in _sectors(min(max_total, 3)):
        irrep_states.extend(s.vector for s in irreps.sector_states(n, m, "explicit"))
    inv2 = irreps.number_function(lambda na, nb: Fraction(1, na + nb + 2))
    for alpha in (1, 2, 3):
        for beta in (1, 2, 3):
            delta = identity() if alpha == beta else zero_operator()
            relations = (
                ("isb.rel[A,A+]", commutator(irreps.isb_A(alpha), irreps.isb_A_dagger(beta)),
                 delta - inv2 * irreps.isb_B_dagger(alpha) * irreps.isb_B(beta)),
                ("isb.rel[A,B+]", commutator(irreps.isb_A(alpha), irreps.isb_B_dagger(beta)),
                 -(inv2 * irreps.isb_B_dagger(alpha) * irreps.isb_A(beta))),
                ("isb.rel[B,B+]", commutator(irreps.isb_B(alpha), irreps.isb_B_dagger(beta)),
                 delta - inv2 * irreps.isb_A_dagger(alpha) * irreps.isb_A(beta)),
            )
            for name, lhs, rhs in relations:
                records.append(
                    _operator_identity(
                        f"{name}[{alpha},{beta}]",
                        {"alpha": alpha, "beta": beta},
                        lhs,
                        rhs,
                        irrep_states,
                    )
                )

    # multiplicity-freeness: both invariant contractions kill every irrep state
    mf_states = []
    for n, m in _sectors(min(max_total, 4)):
        mf_states.extend(s.vector for s in irreps.sector_states(n, m, "explicit"))
    records.append(
        _operator_identity(
            "isb.multiplicity[A.B]", {"max_sum": min(max_total, 4)},
            irreps.isb_contraction_AB(), zero_operator(), mf_states,
        )
    )
    records.append(
        _operator_identity(
            "isb.multiplicity[A+.B+]", {"max_sum": min(max_total, 4)},
            irreps.isb_contraction_AdagBdag(), zero_operator(), mf_states,
        )
    )
    return records


def suite_ladder(max_total: int) -> list[CheckRecord]:
    records = []
    for n, m in _sectors(max_total):
        records.extend(irreps.ladder_check(n, m))
    return records


SUITES = {
    "oscillator": suite_oscillator,
    "su2": suite_su2,
    "algebra": suite_algebra,
    "sp2r": suite_sp2r,
    "irreps": suite_irreps,
    "isb": suite_isb,
    "ladder": suite_ladder,
}


def run_suite(name: str, max_total: int) -> VerificationReport:
    """Run one named suite (or 'all') and wrap the outcome in a timed report."""
    if max_total < 0:
        raise DomainError("max-total must be non-negative")
    start = time.perf_counter()
    if name == "all":
        checks = []
        for suite_name in SUITES:
            checks.extend(SUITES[suite_name](max_total))
    elif name in SUITES:
        checks = SUITES[name](max_total)
    else:
        raise DomainError(f"unknown suite: {name!r}")
    checks.sort(key=lambda c: c.check_id)
    return VerificationReport(name, checks, time.perf_counter() - start)
