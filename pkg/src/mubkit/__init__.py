"""Maximal mutually unbiased bases and partitioned unitary error bases from
finite fields, plus numerical verification of the algebra behind them."""

from .gf import FiniteField, new_field
from .cplx import (
    EigenDecomposition,
    adjoint,
    commutes,
    eig_hermitian,
    is_unitary,
    kron,
    matmul,
    phase_normalize,
    simultaneous_eigenbasis,
    trace,
    unit_root,
)
from .characters import (
    ControlledHadamard,
    Hadamard,
    additive_character_matrix,
    controlled_from_copies,
    is_controlled_hadamard,
    is_dephased,
    is_hadamard,
    mub_from_controlled_hadamard,
    multiplicative_character_matrix,
)
from .mub import MubFamily, bases_match, is_maximal_mub_family, is_mub_pair, mub_from_ueb
from .construct import (
    PartitionedUeb,
    conjugate_ueb,
    eigendata,
    is_latin_square,
    is_partitioned_ueb,
    is_ueb,
    shift_multiply_ueb,
    ueb_from_field,
    ueb_from_mub,
)
from .axioms import (
    StructureTensors,
    build_structure_tensors,
    ring_structure_tensors,
    run_axiom_suite,
    verify_auxiliary_identities,
    verify_bialgebra_and_complementarity,
    verify_field_equations,
    verify_frobenius,
)

__version__ = "0.1.0"

__all__ = [
    "FiniteField",
    "new_field",
    "EigenDecomposition",
    "matmul",
    "adjoint",
    "kron",
    "trace",
    "is_unitary",
    "commutes",
    "eig_hermitian",
    "simultaneous_eigenbasis",
    "phase_normalize",
    "unit_root",
    "Hadamard",
    "ControlledHadamard",
    "additive_character_matrix",
    "multiplicative_character_matrix",
    "is_hadamard",
    "is_dephased",
    "is_controlled_hadamard",
    "controlled_from_copies",
    "mub_from_controlled_hadamard",
    "MubFamily",
    "is_mub_pair",
    "is_maximal_mub_family",
    "bases_match",
    "mub_from_ueb",
    "PartitionedUeb",
    "ueb_from_field",
    "shift_multiply_ueb",
    "ueb_from_mub",
    "eigendata",
    "conjugate_ueb",
    "is_ueb",
    "is_partitioned_ueb",
    "is_latin_square",
    "StructureTensors",
    "build_structure_tensors",
    "ring_structure_tensors",
    "verify_frobenius",
    "verify_bialgebra_and_complementarity",
    "verify_field_equations",
    "verify_auxiliary_identities",
    "run_axiom_suite",
]
