"""Exact multilinear qubit encodings of lattice turn geometries."""

from .analysis import ChainCensus, TurnCensus, census_chains, census_turns, verify_published
from .chain import Conformation, decode_chain, export_xyz, self_avoiding
from .encoder import (
    Layout,
    QubitBudget,
    TurnEncoding,
    TurnRecord,
    coefficients,
    decode_turn,
    encode,
    encode_direct,
    encode_planar,
    qubit_budget,
)
from .errors import (
    BitstringFormatError,
    ContractError,
    DimensionError,
    InvalidSpecError,
    QLatticeError,
    ResourceLimitError,
    SpecParseError,
)
from .lattice import (
    DirectLatticeSpec,
    PlanarLatticeSpec,
    builtin_cubic_diag,
    builtin_fcc,
    degrees_of_freedom,
    direction_set,
    load_spec,
    validate,
)
from .multilinear import (
    BasisMatrix,
    MultilinearPolynomial,
    StateTable,
    basis_matrix,
    evaluate,
    format_poly,
    parse_poly,
    poly_add,
    poly_from_values,
    poly_mul,
    poly_scale,
    solve_coefficients,
    state_table,
)

__version__ = "0.1.0"
