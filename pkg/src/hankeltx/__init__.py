"""Exact Hankel transforms of reverted series, binomial and aerating transforms."""

from .errors import (
    ConsistencyError,
    DivisionByZeroR,
    GapError,
    HankelError,
    IndexOutOfRange,
    InsufficientCoeffs,
    InsufficientPrefix,
    InvalidParams,
    InvalidScale,
    NotRevertible,
    ParseError,
    Unset,
)
from .seqcore import (
    Params,
    PowerSeries,
    Rat,
    Seq,
    catalan,
    catalan_seq,
    q_series,
    revert_series,
    scaled_catalan,
    shift,
    u_direct,
    u_sequence,
)
from .transforms import (
    OffsetList,
    SquareMatrix,
    aerate,
    aerate_alpha,
    binomial_matrix_section,
    binomial_transform,
    bordered_hankel_det,
    conjugate_identity_check,
    det_exact,
    hankel_like_det,
    hankel_matrix,
    hankel_transform,
    scale_pointwise,
)

__version__ = "0.1.0"
