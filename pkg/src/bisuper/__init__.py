"""Exact computations in free bicommutative superalgebras."""

from .characters import (
    Partition,
    double_multiplicity_series,
    multiplicity,
    partitions,
    schur,
    schur_expand,
    standard_tableaux,
    young_column_product,
    young_row_product,
)
from .core import (
    QQ,
    Field,
    Generator,
    Signature,
    SignatureMismatch,
    SuperPolynomial,
    TensorMonomial,
    enumerate_basis,
    mul,
    parity,
)
from .groebner import (
    GsBasis,
    MonomialOrder,
    compare,
    divides,
    lead,
    member,
    quotient_dims,
    reduce,
    truncated_basis,
    weight_preceq,
)
from .identities import Identity, check_identity
from .series import (
    RationalSeries,
    codimension,
    dim_component,
    gk_dimension_free,
    hilbert_free,
    pole_order_at_one,
)
from .terms import Leaf, Node, TermSyntaxError, multilinear_dimension, normalize, parse_term
from .textio import ParseError, format_polynomial, parse_polynomial

__version__ = "0.1.0"

__all__ = [
    "Field",
    "QQ",
    "Signature",
    "SignatureMismatch",
    "Generator",
    "TensorMonomial",
    "SuperPolynomial",
    "mul",
    "parity",
    "enumerate_basis",
    "parse_polynomial",
    "format_polynomial",
    "ParseError",
    "Leaf",
    "Node",
    "parse_term",
    "TermSyntaxError",
    "normalize",
    "multilinear_dimension",
    "Identity",
    "check_identity",
    "RationalSeries",
    "hilbert_free",
    "dim_component",
    "codimension",
    "pole_order_at_one",
    "gk_dimension_free",
    "MonomialOrder",
    "GsBasis",
    "compare",
    "lead",
    "divides",
    "reduce",
    "truncated_basis",
    "member",
    "quotient_dims",
    "weight_preceq",
    "Partition",
    "partitions",
    "schur",
    "young_row_product",
    "young_column_product",
    "multiplicity",
    "double_multiplicity_series",
    "schur_expand",
    "standard_tableaux",
]
