"""Exact-arithmetic symplectic cohomology invariants of Lie algebras.

Computes, over exact rationals, the de Rham (Chevalley-Eilenberg) Betti
numbers, symplectically harmonic numbers h_q, generalized coeffective
numbers (c^{(k)}_q and the quotient dimensions ĉ_{n-k+1}), and filtered
numbers č^{(k)}_q of a symplectic Lie algebra, verifies the identities
relating them, and classifies c/f/h-flexibility of invariant symplectic
structures.  A built-in catalog covers the six-dimensional symplectic
nilpotent Lie algebras.
"""

from .catalog import CatalogEntry, Table1Summary, catalog, find_entry, run_table1, six_dim_entries
from .coeffective import CoeffectiveLadder, c_hat_oracle, chi_k, coeffective_ladder
from .derham import (CohomologySpace, DeRhamCohomology, betti_numbers, cohomology_basis,
                     derham, lefschetz_on_cohomology, primitive_classes, truncated_dim)
from .exterior import ExteriorForm, FormParseError, parse_form
from .filtered import (FilteredLadder, filtered_chain_matrices, filtered_ladder,
                       filtered_les_oracle, operator_D)
from .flexibility import (FlexibilityVerdict, IdentityViolation, ScanConfig,
                          closed_two_form_space, oracle_checks, profile, scan)
from .harmonic import (HarmonicProfile, harmonic_numbers, harmonic_numbers_delta_oracle,
                       harmonic_profile)
from .liealgebra import (LieAlgebraSpec, SalamonParseError, ValidationReport, direct_sum,
                         from_structure_constants, parse_salamon, validate)
from .linalg import Matrix, Subspace, ratio
from .relations import RelationCheck, RelationSuiteResult, verify_relations
from .report import CohomologyReport
from .symplectic import NotSymplecticError, SymplecticForm, is_symplectic

__version__ = "0.1.0"

__all__ = [
    "CatalogEntry", "Table1Summary", "catalog", "find_entry", "run_table1",
    "six_dim_entries", "CoeffectiveLadder", "c_hat_oracle", "chi_k",
    "coeffective_ladder", "CohomologySpace", "DeRhamCohomology", "betti_numbers",
    "cohomology_basis", "derham", "lefschetz_on_cohomology", "primitive_classes",
    "truncated_dim", "ExteriorForm", "FormParseError", "parse_form",
    "FilteredLadder", "filtered_chain_matrices", "filtered_ladder",
    "filtered_les_oracle", "operator_D", "FlexibilityVerdict", "IdentityViolation",
    "ScanConfig", "closed_two_form_space", "oracle_checks", "profile", "scan",
    "HarmonicProfile", "harmonic_numbers", "harmonic_numbers_delta_oracle",
    "harmonic_profile", "LieAlgebraSpec", "SalamonParseError", "ValidationReport",
    "direct_sum", "from_structure_constants", "parse_salamon", "validate",
    "Matrix", "Subspace", "ratio", "RelationCheck", "RelationSuiteResult",
    "verify_relations", "CohomologyReport", "NotSymplecticError", "SymplecticForm",
    "is_symplectic",
]
