"""Explicit diagram for a central type, when one can be built."""

from __future__ import annotations

from typing import Optional

from trispec import catalog
from trispec.core import BitMatrix, CentralType
from trispec.exact import CapExceeded, dimension_cap
from trispec.lifts import lift_matrix, triple_matrix
from trispec.oracle.builders import (
    build_orthogonal2,
    build_orthogonal3,
    build_symmetric,
    build_symplectic2,
    build_unitary4,
)


class NoOracle(ValueError):
    pass


def _base_matrix(ct: CentralType) -> BitMatrix:
    fam, m, eps = ct.family, ct.m, ct.eps
    if fam == "PR1":
        return BitMatrix([[0]])
    if fam in ("PR2a", "PR2b"):
        return build_symmetric(m)
    if fam == "PR2c":
        return lift_matrix(build_symmetric(m), 2, 1)
    if fam == "PR2d":
        return lift_matrix(build_symmetric(m), 3, 1)
    if fam == "PR3":
        return build_orthogonal2(m, eps)
    if fam == "PR4":
        return build_symplectic2(m)
    if fam == "PR5":
        return build_orthogonal3(m, eps)
    if fam == "PR6":
        return build_unitary4(m)
    if fam == "PR7d":
        return triple_matrix(build_orthogonal2(4, 1))
    if fam == "PR7e":
        return triple_matrix(build_orthogonal3(8, 1))
    if fam == "PR8":
        return build_orthogonal3(6, -1)
    if fam == "PR9":
        return build_symplectic2(3)
    if fam == "PR10":
        return build_orthogonal2(4, 1)
    if fam == "PR11":
        return build_unitary4(5)
    if fam == "PR12":
        return lift_matrix(build_unitary4(3), 2, 2)
    raise NoOracle(f"no explicit construction for {ct} at this scale")


def has_oracle(ct: CentralType) -> bool:
    return ct.family not in ("PR7a", "PR7b", "PR7c")


def diagram_matrix(ct: CentralType, cap: Optional[int] = None) -> BitMatrix:
    """Build the diagram from a polar space or Sym(m) and the lift operators."""
    if not has_oracle(ct):
        raise NoOracle(f"no explicit construction for {ct} at this scale")
    n = catalog.size(ct)
    limit = dimension_cap(cap)
    if n > limit:
        raise CapExceeded(f"{ct} has {n} vertices, above the dimension cap {limit}")
    structure = catalog.lift_structure(ct)
    if structure is None:
        return _base_matrix(ct)
    base, p, e = structure
    return lift_matrix(_base_matrix(base), p, e)
