"""Parameter algebra for strongly regular graphs."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from trispec.core import ExtendedParams, InfeasibleParams, Spectrum, regular_spectrum


class HalfCase(ValueError):
    """The restricted eigenvalues are irrational."""


class NotTwoEigenvalue(ValueError):
    pass


class NonIntegral(ValueError):
    pass


def _check_basic(n: int, k: int, lam: int, mu: int) -> None:
    if not 0 < k < n - 1:
        raise InfeasibleParams(f"need 0 < k < n-1, got n={n}, k={k}")
    if not (0 <= mu <= k and 0 <= lam <= k - 1):
        raise InfeasibleParams(f"need 0 <= mu <= k and 0 <= lambda <= k-1, got lambda={lam}, mu={mu}")
    if mu * (n - k - 1) != k * (k - 1 - lam):
        raise InfeasibleParams(f"mu*l != k(k-1-lambda) for ({n},{k},{lam},{mu})")


def eigen_from_params(n: int, k: int, lam: int, mu: int) -> tuple[int, int, int, int]:
    """Restricted eigenvalues and multiplicities ``(r, s, f, g)``."""
    _check_basic(n, k, lam, mu)
    b = mu - lam
    disc = b * b - 4 * (mu - k)
    root = isqrt(disc)
    if root * root != disc or (root - b) % 2:
        raise HalfCase(f"({n},{k},{lam},{mu}) has irrational restricted eigenvalues")
    r = (-b + root) // 2
    s = (-b - root) // 2
    if r == s:
        raise InfeasibleParams("restricted eigenvalues coincide")
    f_num = -s * n + s - k
    g_num = r * n - r + k
    if f_num % (r - s) or g_num % (r - s):
        raise InfeasibleParams(f"non-integral multiplicities for ({n},{k},{lam},{mu})")
    f, g = f_num // (r - s), g_num // (r - s)
    if f < 0 or g < 0:
        raise InfeasibleParams(f"negative multiplicity for ({n},{k},{lam},{mu})")
    return r, s, f, g


def extend(n: int, k: int, lam: int, mu: int) -> ExtendedParams:
    r, s, f, g = eigen_from_params(n, k, lam, mu)
    return ExtendedParams(
        n=n, k=k, lam=lam, mu=mu,
        l=n - k - 1, lam_c=n - 2 * k + mu - 2, mu_c=n - 2 * k + lam,
        r=r, s=s, f=f, g=g,
    )


def params_from_spectrum(spec: Spectrum, n: int) -> ExtendedParams:
    """Recover (n, k, lambda, mu) from a connected two-eigenvalue spectrum."""
    if spec.n != n:
        raise InfeasibleParams(f"spectrum has total multiplicity {spec.n}, expected {n}")
    if spec.degree is None:
        raise NotTwoEigenvalue("spectrum has no distinguished degree")
    rest = spec.restricted
    if len(rest) != 2:
        raise NotTwoEigenvalue(f"{len(rest)} restricted eigenvalues, need 2")
    (r, f), (s, g) = rest
    k = spec.degree
    if any(Fraction(x).denominator != 1 for x in (k, r, s)):
        raise HalfCase("restricted eigenvalues are not integers")
    k, r, s = int(k), int(r), int(s)
    mu = k + r * s
    lam = mu + r + s
    p = extend(n, k, lam, mu)
    if (p.r, p.s, p.f, p.g) != (r, s, f, g):
        raise InfeasibleParams("spectrum is inconsistent with its derived parameters")
    return p


def complement_params(p: ExtendedParams) -> ExtendedParams:
    return ExtendedParams(
        n=p.n, k=p.l, lam=p.lam_c, mu=p.mu_c,
        l=p.k, lam_c=p.lam, mu_c=p.mu,
        r=-p.s - 1, s=-p.r - 1, f=p.g, g=p.f,
    )


def complement_spectrum(spec: Spectrum, n: int) -> Spectrum:
    """Spectrum of the complement of a connected regular graph.

    The complement may be disconnected (for instance a perfect matching), so
    the result is flagged connected only when its degree eigenvalue is simple.
    """
    if spec.n != n:
        raise InfeasibleParams(f"spectrum has total multiplicity {spec.n}, expected {n}")
    if spec.degree is None:
        raise InfeasibleParams("complement spectrum needs a regular connected graph")
    l = n - 1 - spec.degree
    raw = [(l, 1)] + [(-1 - r, m) for r, m in spec.restricted]
    return regular_spectrum(raw, n, l)


def size_from_local(kp: int, lam_p: int, mu_p: int) -> int:
    """Global size from the local parameters of the commuting graph."""
    if mu_p <= 0:
        raise NonIntegral("mu' must be positive")
    num = kp * (kp - 1 - lam_p)
    if num % mu_p:
        raise NonIntegral(f"{mu_p} does not divide {num}")
    return 1 + kp + num // mu_p


def is_imprimitive(p: ExtendedParams) -> bool:
    return p.imprimitive
