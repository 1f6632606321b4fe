"""Explicit diagrams: transpositions of Sym(m) and polar-space graphs over
GF(2), GF(3) and GF(4)."""

from __future__ import annotations

import itertools

import numpy as np

from trispec.core import BitMatrix
from trispec.oracle.fields import FormSpec, projective_points


def _from_mask(adj: np.ndarray) -> BitMatrix:
    a = adj.astype(np.uint8)
    np.fill_diagonal(a, 0)
    return BitMatrix(a)


def build_symmetric(m: int) -> BitMatrix:
    """Transpositions (i j) of Sym(m); two are adjacent when they share one point."""
    if m < 2:
        raise ValueError("m must be at least 2")
    pairs = list(itertools.combinations(range(m), 2))
    inc = np.zeros((len(pairs), m), dtype=np.int64)
    for idx, (i, j) in enumerate(pairs):
        inc[idx, i] = inc[idx, j] = 1
    return _from_mask(inc @ inc.T == 1)


def build_symplectic2(m: int) -> BitMatrix:
    """Nonzero vectors of GF(2)^{2m}, adjacent when not perpendicular."""
    if m < 1:
        raise ValueError("m must be at least 1")
    form = FormSpec.symplectic(m)
    pts = projective_points(2, 2 * m)
    return _from_mask(form.bilinear(pts, pts) != 0)


def build_orthogonal2(m: int, eps: int) -> BitMatrix:
    """Nonsingular vectors of a GF(2) quadratic space of type eps, adjacent
    when not perpendicular."""
    if m < 2:
        raise ValueError("m must be at least 2")
    form = FormSpec.quadratic(m, eps)
    pts = projective_points(2, 2 * m)
    singular_nonzero = int((form.value(pts) == 0).sum())
    if singular_nonzero != 2 ** (2 * m - 1) + eps * 2 ** (m - 1) - 1:
        raise AssertionError("quadratic form has the wrong Witt type")
    verts = pts[form.value(pts) == 1]
    return _from_mask(form.bilinear(verts, verts) != 0)


def build_unitary4(m: int) -> BitMatrix:
    """Isotropic points of the hermitian space GF(4)^m, adjacent when not
    perpendicular."""
    if m < 3:
        raise ValueError("m must be at least 3")
    form = FormSpec.hermitian(m)
    pts = projective_points(4, m)
    verts = pts[form.value(pts) == 0]
    return _from_mask(form.bilinear(verts, verts) != 0)


def build_orthogonal3(m: int, eps: int) -> BitMatrix:
    """Points x with f(x, x) = 1 of an orthogonal GF(3)^m space of sign eps,
    adjacent when not perpendicular."""
    if m < 3:
        raise ValueError("m must be at least 3")
    form = FormSpec.orthogonal3(m, eps)
    pts = projective_points(3, m)
    verts = pts[form.value(pts) == 1]
    return _from_mask(form.bilinear(verts, verts) != 0)
