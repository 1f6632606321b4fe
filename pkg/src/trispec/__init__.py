"""Exact spectra of 3-transposition diagrams."""

from trispec.core import (
    STAR,
    BitMatrix,
    CentralType,
    ExtendedParams,
    Spectrum,
    normalize,
    parse_central_type,
    spectrum_checksums,
)

__version__ = "0.1.0"

__all__ = [
    "STAR",
    "BitMatrix",
    "CentralType",
    "ExtendedParams",
    "Spectrum",
    "normalize",
    "parse_central_type",
    "spectrum_checksums",
]
