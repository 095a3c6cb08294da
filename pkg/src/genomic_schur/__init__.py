"""Genomic Schur functions, 0-Hecke modules on tableaux and the genome filtration."""
from .combinatorics import (
    Box, TwoRowPartition, comp_of, compositions, l_lambda, lambda_variant,
    par_candidates, set_of,
)
from .tableaux import (
    Tableau, descent_data, descent_set, enumerate_iglt, enumerate_syt, occurrences,
    repeated_values,
)
from .qsym import (
    QSymExpr, check_schur_expansion, expand_monomials, fundamental, genomic_component,
    genomic_schur, schur_via_syt,
)
from .hecke import HeckeModule, characteristic_by_descents, check_relations, g_module, x_module
from .bijection import phi, phi_inverse, psi_image_index
from .genome import (
    equivalence_classes, gamma_path, linear_extension, order_leq, sweep, verify_theorem,
)

__version__ = "0.1.0"
