"""Brute-force spectral and parameter checks on explicit matrices."""

from __future__ import annotations

import numpy as np

from trispec.core import BitMatrix, ExtendedParams
from trispec.exact import CapExceeded, NonIntegralSpectrum, exact_spectrum, nullity
from trispec.srg import extend


class NotRegular(ValueError):
    pass


class NotStronglyRegular(ValueError):
    pass


def verify_srg(m: BitMatrix) -> ExtendedParams:
    """Read (n, k, lambda, mu) off common-neighbour counts and check
    A^2 = kI + lambda A + mu (J - I - A) entrywise."""
    k = m.regular_degree()
    if k is None:
        raise NotRegular("graph is not regular")
    n = m.n
    a = m.array.astype(np.int64)
    if k == 0 or k == n - 1:
        raise NotStronglyRegular("empty and complete graphs are excluded")
    sq = (a.astype(np.float64) @ a.astype(np.float64)).astype(np.int64)
    adj = a.astype(bool)
    non = ~adj
    np.fill_diagonal(non, False)
    lam_vals = np.unique(sq[adj])
    mu_vals = np.unique(sq[non])
    if lam_vals.size != 1 or mu_vals.size != 1:
        raise NotStronglyRegular(
            f"common-neighbour counts vary: lambda in {lam_vals.tolist()[:4]}, mu in {mu_vals.tolist()[:4]}"
        )
    lam, mu = int(lam_vals[0]), int(mu_vals[0])
    expected = k * np.eye(n, dtype=np.int64) + lam * a + mu * (1 - np.eye(n, dtype=np.int64) - a)
    if not np.array_equal(sq, expected):
        raise NotStronglyRegular("matrix identity fails")
    return extend(n, k, lam, mu)


__all__ = [
    "CapExceeded",
    "NonIntegralSpectrum",
    "NotRegular",
    "NotStronglyRegular",
    "exact_spectrum",
    "nullity",
    "verify_srg",
]
