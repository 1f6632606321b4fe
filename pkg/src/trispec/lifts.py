"""Block lifts of adjacency matrices and the matching maps on spectra."""

from __future__ import annotations

import numpy as np

from trispec.core import BitMatrix, Spectrum, SpectrumError, normalize, regular_spectrum


def lift2_matrix(m: BitMatrix) -> BitMatrix:
    """M (x) J_2: every vertex is doubled, copies are not adjacent."""
    a = m.array
    return BitMatrix._trusted(np.block([[a, a], [a, a]]))


def lift3_matrix(m: BitMatrix) -> BitMatrix:
    """(M + I) (x) J_3 - I: every vertex becomes a triangle."""
    a = m.array
    b = a + np.eye(m.n, dtype=np.uint8)
    return BitMatrix._trusted(np.block([[a, b, b], [b, a, b], [b, b, a]]))


def triple_matrix(m: BitMatrix) -> BitMatrix:
    """Three copies of M, all edges present between different copies."""
    a = m.array
    j = np.ones_like(a)
    return BitMatrix._trusted(np.block([[a, j, j], [j, a, j], [j, j, a]]))


def lift_matrix(m: BitMatrix, p: int, h: int) -> BitMatrix:
    step = {2: lift2_matrix, 3: lift3_matrix}.get(p)
    if step is None:
        raise ValueError("p must be 2 or 3")
    if h < 0:
        raise ValueError("h must be nonnegative")
    for _ in range(h):
        m = step(m)
    return m


def lift_spectrum(spec: Spectrum, n: int, p: int, h: int) -> tuple[Spectrum, int]:
    """Spectrum and size after ``h`` lifts of type ``p``.

    For p = 2 every eigenvalue is scaled by 2^h and the new eigenvalue 0
    fills the remaining room; for p = 3 the map is x -> 3^h (x + 1) - 1 with
    filler -1. Coincident values are merged.
    """
    if p not in (2, 3):
        raise ValueError("p must be 2 or 3")
    if h < 0:
        raise ValueError("h must be nonnegative")
    if spec.n != n:
        raise SpectrumError(f"spectrum has total multiplicity {spec.n}, expected {n}")
    if h == 0:
        return spec, n
    scale = p**h
    if p == 2:
        image = [(scale * e, mult) for e, mult in spec.entries]
        filler = 0
    else:
        image = [(scale * (e + 1) - 1, mult) for e, mult in spec.entries]
        filler = -1
    size = scale * n
    raw = image + [(filler, (scale - 1) * n)]
    if spec.degree is None:
        return normalize(raw, size, None), size
    return regular_spectrum(raw, size, image[spec.degree_index][0]), size


def triple_spectrum(spec: Spectrum, n: int, k: int) -> Spectrum:
    """Spectrum of M x 3 for a connected k-regular M on n vertices."""
    if spec.n != n:
        raise SpectrumError(f"spectrum has total multiplicity {spec.n}, expected {n}")
    if spec.degree is None or spec.degree != k:
        raise SpectrumError("triple_spectrum needs a connected regular spectrum of degree k")
    raw = [(k + 2 * n, 1), (-(n - k), 2)]
    raw += [(e, 3 * mult) for e, mult in spec.restricted]
    return normalize(raw, 3 * n, k + 2 * n)
