"""Exact SU(3) irrep construction from two boson triplets, three ways.

Core surface: exact scalars (`scalars`), the sparse Fock space (`fock`),
composable operators and both generator bases (`operators`), the SU(2)
cross-check sector (`su2`), the three irrep constructions and dressed
operators (`irreps`), and machine-checked identity suites (`verify`).
"""

from .errors import DomainError, ResourceLimitError
from .fock import (
    FockMonomial,
    StateVector,
    VACUUM,
    apply_annihilation,
    apply_creation,
    inner_product,
    occupation_split,
)
from .irreps import (
    IrrepRequest,
    IrrepState,
    construct,
    coefficient_L,
    coefficient_l,
    dim_formula,
    gram_rank,
    irrep_explicit,
    irrep_isb,
    isb_A,
    isb_A_dagger,
    isb_B,
    isb_B_dagger,
    ladder_check,
    projection_apply,
    sp2r_weight,
    tensor_monomial,
    tower_state,
    trace_contract,
)
from .operators import (
    LinearOperator,
    commutator,
    sp2r_triple,
    su3_generator_gellmann,
    su3_generator_weyl,
    verify_covariance,
    verify_lie_closure,
)
from .scalars import EXT, ExtScalar, QQ, rational_normalize, rational_str
from .su2 import SU2State, su2_generators, su2_irrep_state
from .verify import run_suite

__version__ = "0.1.0"
