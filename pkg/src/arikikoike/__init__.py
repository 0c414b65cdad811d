"""Exact computations with Ariki-Koike algebras, their Specht modules and branching rules."""

from .algebra import (
    AlgebraContext,
    AlgebraElement,
    context_for,
    jucys_murphy,
    phi_map,
    pi_element,
    pi_factor,
    relations_selftest,
    simple_generator,
    twisted_z_element,
    v_element,
    x_multi,
    xy_element,
    y_multi,
    z_element,
)
from .branching import (
    BranchReport,
    NodeClassification,
    classify_nodes,
    modular_branching_check,
    ordinary_filtration,
    restriction_decomposition_check,
)
from .coefficients import (
    FieldSpec,
    Fp,
    ParameterSet,
    Residue,
    f5_parameters,
    generic_parameters,
    is_semisimple_regime,
    quantum_characteristic,
    residue,
    separation_product,
)
from .combinatorics import (
    Composition,
    IntervalVector,
    Multipartition,
    Node,
    Partition,
    dominance_le,
    dual_multipartition,
    enumerate_multipartitions,
)
from .errors import ContractError, OracleFault, RegimeError, SizeGuardError, VerificationError
from .linalg import SubmoduleBasis, Vector, hom_dimension, section_dimensions, submodule_closure, vectorize
from .specht import (
    SpechtReport,
    dimension_oracle,
    rank_one_check,
    simple_module,
    specht_module,
    twisted_specht_module,
    verify_standard_basis,
)
from .symmetric_group import Permutation

__version__ = "0.1.0"
