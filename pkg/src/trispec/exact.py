"""Exact linear algebra on integer matrices.

Two engines live here. The modular engine treats float64 as an exact
carrier for integers below 2**53 and combines residues by the Chinese
remainder theorem; it computes certified integer spectra of adjacency
matrices with a few BLAS products. The fraction-free (Bareiss) engine works
on Python integers and is used for ranks and symmetric pivot signs.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, prod
from typing import Optional, Sequence

import numpy as np
from sympy import prevprime
from sympy.ntheory.modular import crt

from trispec.core import BitMatrix, Spectrum, regular_spectrum, normalize

DEFAULT_CAP = 2500
_FLOAT_EXACT = 2**53


class NonIntegralSpectrum(ValueError):
    pass


class CapExceeded(ValueError):
    pass


def dimension_cap(override: Optional[int] = None) -> int:
    if override is not None:
        return override
    env = os.environ.get("TRISPEC_CAP")
    return int(env) if env else DEFAULT_CAP


def _primes_below(bound: int, count: int) -> list[int]:
    out, p = [], bound
    for _ in range(count):
        p = prevprime(p)
        out.append(p)
    return out


def _modmat(a: np.ndarray, p: int) -> np.ndarray:
    return np.mod(a, p)


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # entries in [0, p) and n * p**2 < 2**53, so every partial sum is exact
    return np.mod(a @ b, p)


def _krylov_minpoly(m: np.ndarray, p: int, max_deg: int, rng: random.Random) -> Optional[list[int]]:
    """Monic polynomial (low to high) annihilating a random vector mod p.

    Returns ``None`` when the Krylov space exceeds ``max_deg``.
    """
    n = m.shape[0]
    x = np.array([rng.randrange(p) for _ in range(n)], dtype=np.float64)
    basis: list[tuple[int, np.ndarray, list[int]]] = []
    for j in range(max_deg + 1):
        row = x.astype(np.int64)
        coeff = [0] * (j + 1)
        coeff[j] = 1
        for piv, brow, bco in basis:
            c = int(row[piv])
            if c:
                row = (row - c * brow) % p
                for i, v in enumerate(bco):
                    coeff[i] = (coeff[i] - c * v) % p
        nz = np.flatnonzero(row)
        if nz.size == 0:
            return coeff
        piv = int(nz[0])
        inv = pow(int(row[piv]), -1, p)
        basis.append((piv, (row * inv) % p, [(v * inv) % p for v in coeff]))
        x = _modmat(m @ x, p)
    return None


def _integer_roots(poly: list[int], p: int, bound: int) -> Optional[list[int]]:
    """Integer roots in [-bound, bound] of ``poly`` mod p, or ``None`` if the
    polynomial does not split into distinct such linear factors."""
    roots = []
    for r in range(-bound, bound + 1):
        acc = 0
        for c in reversed(poly):
            acc = (acc * r + c) % p
        if acc == 0:
            roots.append(r)
    return roots if len(roots) == len(poly) - 1 else None


def _lagrange_traces(roots: Sequence[int], traces: Sequence[int]) -> list[Fraction]:
    """Solve sum_r m_r r**j = traces[j] (j < len(roots)) by Lagrange idempotents."""
    out = []
    for r in roots:
        poly = [Fraction(1)]
        for s in roots:
            if s == r:
                continue
            nxt = [Fraction(0)] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] += c
                nxt[i] -= s * c
            poly = [c / (r - s) for c in nxt]
        out.append(sum(c * t for c, t in zip(poly, traces)))
    return out


@dataclass(frozen=True)
class _Certificate:
    roots: tuple[int, ...]
    traces: tuple[int, ...]


def _certify(a: np.ndarray, roots: list[int], bound: int, rng: random.Random) -> Optional[_Certificate]:
    """Check prod (A - rI) == 0 exactly and return the power traces tr(A^j)."""
    n = a.shape[0]
    d = len(roots)
    prod_bound = prod(bound + abs(r) for r in roots)
    trace_bound = n * bound ** max(d - 1, 0)
    need = 2 * max(prod_bound, trace_bound) + 1
    pmax = isqrt(_FLOAT_EXACT // max(n, 1)) - 1
    primes: list[int] = []
    p = pmax
    while prod(primes) <= need:
        p = prevprime(p)
        primes.append(p)
    residues: list[list[int]] = []
    eye = np.eye(n)
    for p in primes:
        # annihilator check
        q = _modmat(a - roots[0] * eye, p)
        for r in roots[1:]:
            q = _matmul_mod(q, _modmat(a - r * eye, p), p)
        if np.any(q):
            return None
        # power traces via tr(A^{2i}) = <A^i, A^i>, tr(A^{2i+1}) = <A^i, A^{i+1}>
        powers = [eye, _modmat(a, p)]
        while 2 * (len(powers) - 1) < d - 1:
            powers.append(_matmul_mod(powers[-1], powers[1], p))
        tr = []
        for j in range(d):
            x, y = powers[j // 2], powers[j - j // 2]
            tr.append(int(np.mod(x * y, p).astype(np.int64).sum()) % p)
        residues.append(tr)
    traces = []
    for j in range(d):
        value, modulus = crt(primes, [res[j] for res in residues])
        value, modulus = int(value), int(modulus)
        if value > modulus // 2:
            value -= modulus
        traces.append(value)
    return _Certificate(tuple(roots), tuple(traces))


def integer_spectrum_raw(a: np.ndarray, seed: int = 0, attempts: int = 4) -> list[tuple[int, int]]:
    """Exact integer spectrum of a symmetric integer matrix with zero-one
    entries off a small diagonal, as ``(eigenvalue, multiplicity)`` pairs.

    Every eigenvalue of a symmetric matrix is bounded by the largest absolute
    row sum, so only finitely many integer candidates exist. A random Krylov
    vector proposes candidate roots modulo a prime; the product of
    ``A - rI`` over the candidates is then shown to vanish exactly, and
    multiplicities follow from exact power traces.
    """
    a = np.asarray(a, dtype=np.float64)
    n = a.shape[0]
    if n == 0:
        return []
    bound = int(np.abs(a).sum(axis=1).max())
    rng = random.Random(seed)
    pmax = isqrt(_FLOAT_EXACT // n) - 1
    if pmax <= 2 * bound + 1:
        raise CapExceeded("matrix too large for the modular engine")
    primes = _primes_below(pmax, attempts)
    for p in primes:
        mp = _modmat(a, p)
        poly = _krylov_minpoly(mp, p, 2 * bound + 1, rng)
        if poly is None:
            raise NonIntegralSpectrum("more distinct eigenvalues than integer candidates")
        roots = _integer_roots(poly, p, bound)
        if roots is None:
            raise NonIntegralSpectrum("minimal polynomial has a non-integral factor")
        cert = _certify(a, roots, bound, rng)
        if cert is None:
            continue
        mults = _lagrange_traces(cert.roots, cert.traces)
        out = []
        for r, m in zip(cert.roots, mults):
            if m.denominator != 1 or m < 0:
                raise NonIntegralSpectrum("inconsistent multiplicities")
            if m:
                out.append((r, int(m)))
        if sum(m for _, m in out) != n:
            raise NonIntegralSpectrum("multiplicities do not sum to n")
        return out
    raise NonIntegralSpectrum("could not certify an integral eigenvalue set")


def exact_spectrum(m: BitMatrix, cap: Optional[int] = None) -> Spectrum:
    """Certified integer spectrum of an adjacency matrix.

    The degree entry is flagged only for connected regular graphs.
    """
    limit = dimension_cap(cap)
    if m.n > limit:
        raise CapExceeded(f"n={m.n} exceeds the dimension cap {limit}")
    raw = integer_spectrum_raw(m.array)
    k = m.regular_degree()
    if k is None:
        return normalize(raw, m.n, None)
    return regular_spectrum(raw, m.n, k)


# ---------------------------------------------------------------------------
# Fraction-free elimination
# ---------------------------------------------------------------------------


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    a = [list(map(int, r)) for r in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        pv = pr[col]
        for i in range(rank + 1, nrows):
            ri = a[i]
            f = ri[col]
            a[i] = [(pv * ri[j] - f * pr[j]) // prev for j in range(ncols)]
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def nullity(m: BitMatrix, r: int) -> int:
    """dim ker(M - rI) over the rationals."""
    a = m.array.astype(object) - r * np.eye(m.n, dtype=np.int64).astype(object)
    return m.n - bareiss_rank(a.tolist())


@dataclass(frozen=True)
class Inertia:
    status: str  # positive_definite | positive_semidefinite | indefinite
    radical_dim: int


def symmetric_pivot_inertia(a: np.ndarray) -> Inertia:
    """Decide positive (semi)definiteness of a symmetric integer matrix.

    Fraction-free symmetric elimination with diagonal pivots. Every entry of
    the working matrix is a bordered principal minor, equal to a Schur
    complement entry times the determinant of the pivots so far; while that
    determinant stays positive the signs can be read off directly.
    """
    w = np.array(a, dtype=object)
    n = w.shape[0]
    prev = 1
    while w.shape[0]:
        diag = np.array([w[i, i] for i in range(w.shape[0])], dtype=object)
        if any(x < 0 for x in diag):
            return Inertia("indefinite", 0)
        nz = [i for i, x in enumerate(diag) if x != 0]
        if not nz:
            if any(x != 0 for x in w.flat):
                return Inertia("indefinite", 0)
            rad = w.shape[0]
            return Inertia("positive_semidefinite" if rad else "positive_definite", rad)
        i = nz[0]
        piv = w[i, i]
        col = w[:, i].copy()
        keep = np.array([j for j in range(w.shape[0]) if j != i], dtype=np.int64)
        sub = w[np.ix_(keep, keep)]
        c = col[keep]
        w = (piv * sub - np.outer(c, c)) // prev
        prev = piv
    return Inertia("positive_definite", 0)
