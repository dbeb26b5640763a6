"""Exact linear relations, root spaces, singular chains and matrix pencils over Q(i)."""
from .exact import I, ONE, ZERO, GaussianRational, ParseError, arith, format_scalar, gq, parse
from .subspace import DimensionError, Matrix, Subspace, canonicalize, compare, image, preimage
from .relation import LinearRelation
from .rootspace import (
    INF,
    Chain,
    as_extended,
    confluent_block,
    confluent_vandermonde,
    confluent_vandermonde_det,
    extract_singular_chain,
    jordan_chain,
    jordan_extend_transform,
    kernel_sequence,
    root_space,
    shift_chain_matrix,
    shift_chain_transform,
    singular_chain_space,
)
from .pencil import (
    KcfSpec,
    KroneckerStructure,
    MatrixPencil,
    MultiIndex,
    kcf_generate,
    kronecker_structure,
    pencil_to_relation,
    relation_to_pencil,
    verify_kcf_subspaces,
)
from .spectrum import (
    PreconditionError,
    SpectrumReport,
    independence_certificate,
    is_eigenvalue,
    is_proper_eigenvalue,
    proper_point_spectrum,
    proper_spectrum_size,
)

__version__ = "0.1.0"
