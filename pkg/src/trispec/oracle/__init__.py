"""Ground-truth constructions and brute-force checks."""

from trispec.oracle.builders import (
    build_orthogonal2,
    build_orthogonal3,
    build_symmetric,
    build_symplectic2,
    build_unitary4,
)
from trispec.oracle.fields import (
    FormSpec,
    closed_form_singular,
    count_singular_points,
    recursion_singular,
    witt_sign_gf3,
)
from trispec.oracle.spectrum import (
    CapExceeded,
    NonIntegralSpectrum,
    NotRegular,
    NotStronglyRegular,
    exact_spectrum,
    nullity,
    verify_srg,
)

__all__ = [
    "CapExceeded",
    "FormSpec",
    "NonIntegralSpectrum",
    "NotRegular",
    "NotStronglyRegular",
    "build_orthogonal2",
    "build_orthogonal3",
    "build_symmetric",
    "build_symplectic2",
    "build_unitary4",
    "closed_form_singular",
    "count_singular_points",
    "exact_spectrum",
    "nullity",
    "recursion_singular",
    "verify_srg",
    "witt_sign_gf3",
]

from trispec.oracle.construct import NoOracle, diagram_matrix, has_oracle  # noqa: E402

__all__ += ["NoOracle", "diagram_matrix", "has_oracle"]
