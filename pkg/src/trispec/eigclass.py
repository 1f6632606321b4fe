"""Minimal eigenvalues: the four-case classification, enumeration by a
lower bound, and Matsuo Gram matrix definiteness."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Union

import numpy as np

from trispec import catalog
from trispec.core import BitMatrix, CentralType, fmt_rational, parse_central_type, parse_rational
from trispec.exact import integer_spectrum_raw, NonIntegralSpectrum, symmetric_pivot_inertia

POSITIVE_DEFINITE = "positive_definite"
POSITIVE_SEMIDEFINITE = "positive_semidefinite"
INDEFINITE = "indefinite"


class Unrealizable(ValueError):
    pass


# ---------------------------------------------------------------------------
# Four cases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CaseTag:
    kind: str  # Moufang | Char2 | Char3 | Sporadic352
    exponent: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "Char2":
            return f"Char2(a={self.exponent})"
        if self.kind == "Char3":
            return f"Char3(b={self.exponent})"
        return self.kind


def _exact_log(x: int, base: int) -> Optional[int]:
    e = 0
    while x > 1 and x % base == 0:
        x //= base
        e += 1
    return e if x == 1 and e > 0 else None


def four_case_classify(rho: int) -> tuple[CaseTag, ...]:
    """Case tags for a minimal eigenvalue; -4 belongs to two cases."""
    rho = int(rho)
    if rho >= 0:
        raise ValueError("minimal eigenvalue must be negative")
    if rho == -1:
        return (CaseTag("Moufang"),)
    if rho == -352:
        return (CaseTag("Sporadic352"),)
    tags = []
    a = _exact_log(-rho, 2)
    if a is not None:
        tags.append(CaseTag("Char2", a))
    b = _exact_log(-rho - 1, 3)
    if b is not None:
        tags.append(CaseTag("Char3", b))
    if not tags:
        raise Unrealizable(f"{rho} is not -1, -2^a, -3^b-1 or -352")
    return tuple(tags)


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

SYMMETRIC_FAMILIES = ("PR2a", "PR2b", "PR2c", "PR2d")
_M_MIN = {"PR3": 3, "PR4": 3, "PR5": 5, "PR6": 3}
_H_ONLY = ("PR8", "PR9", "PR10", "PR11", "PR12")
_SINGLETONS = ("PR7a", "PR7b", "PR7c", "PR7d", "PR7e") + tuple(f"PR{i}" for i in range(13, 20))
# groups whose diagram appears under two labels; counted once, under the first
_MERGED = {CentralType("PR5", h=0, m=5, eps=1): CentralType("PR3", h=0, m=3, eps=-1)}
_LIMIT = 200


def _family_rho(family: str, h: int) -> int:
    return catalog.min_eigenvalue(CentralType(family, h=h, m=4))


def _individuals(t: int) -> Iterator[CentralType]:
    """Individual central types with minimal eigenvalue >= -t, in the
    classification ranges; every family's minimal eigenvalue is
    non-increasing in h and in m."""
    for family in ("PR3", "PR4", "PR5", "PR6"):
        signs = (1, -1) if family in ("PR3", "PR5") else (None,)
        for eps in signs:
            for h in range(_LIMIT):
                hit = False
                for m in range(_M_MIN[family], _LIMIT):
                    ct = CentralType(family, h=h, m=m, eps=eps)
                    if not ct.in_classification_range():
                        continue
                    if catalog.min_eigenvalue(ct) < -t:
                        break
                    hit = True
                    yield ct
                if not hit:
                    break
    for family in _H_ONLY:
        for h in range(1, _LIMIT):
            ct = CentralType(family, h=h)
            if catalog.min_eigenvalue(ct) < -t:
                break
            yield ct
    for family in _SINGLETONS:
        ct = CentralType(family)
        if catalog.min_eigenvalue(ct) >= -t:
            yield ct


@dataclass(frozen=True)
class FamilyRow:
    family: str
    h: int
    rho: int
    m_min: int = 4

    def __str__(self) -> str:
        return f"{self.family}(h={self.h})"

    @property
    def name(self) -> str:
        return catalog.family_display(self.family, self.h)

    def to_json_obj(self) -> dict:
        return {"family": self.family, "h": self.h, "rho": self.rho, "m": f">={self.m_min}"}


@dataclass(frozen=True)
class EnumerationReport:
    t: int
    moufang_class: bool
    symmetric_families: tuple[FamilyRow, ...]
    individuals: dict = field(default_factory=dict)  # rho -> tuple of canonical strings

    @property
    def S(self) -> int:
        return len(self.symmetric_families)

    @property
    def I(self) -> int:  # noqa: E743
        return sum(len(v) for v in self.individuals.values())

    def individual_set(self) -> set[str]:
        return {s for v in self.individuals.values() for s in v}

    def family_set(self) -> set[str]:
        return {str(f) for f in self.symmetric_families}

    def to_json_obj(self) -> dict:
        return {
            "t": self.t,
            "moufang_class": self.moufang_class,
            "symmetric_families": [f.to_json_obj() for f in self.symmetric_families],
            "individuals": {str(rho): list(v) for rho, v in sorted(self.individuals.items(), reverse=True)},
            "S": self.S,
            "I": self.I,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "EnumerationReport":
        fams = tuple(FamilyRow(f["family"], f["h"], f["rho"], int(f["m"].lstrip(">="))) for f in obj["symmetric_families"])
        inds = {int(k): tuple(v) for k, v in obj["individuals"].items()}
        report = cls(obj["t"], obj["moufang_class"], fams, inds)
        if report.S != obj["S"] or report.I != obj["I"]:
            raise ValueError("counts do not match the listed entries")
        return report


def enumerate_min_eig(t: int) -> EnumerationReport:
    """Every central type whose diagram has minimal eigenvalue >= -t."""
    if t < 1:
        raise ValueError("t must be positive")
    families = []
    for family in SYMMETRIC_FAMILIES:
        h0 = 0 if family == "PR2a" else 1
        for h in range(h0, _LIMIT):
            rho = _family_rho(family, h)
            if rho < -t:
                break
            families.append(FamilyRow(family, h, rho))
    families.sort(key=lambda f: (-f.rho, f.family, f.h))
    groups: dict[int, list[str]] = {}
    for ct in _individuals(t):
        if ct in _MERGED:
            continue
        groups.setdefault(catalog.min_eigenvalue(ct), []).append(str(ct))
    individuals = {rho: tuple(sorted(v, key=_sort_key)) for rho, v in sorted(groups.items(), reverse=True)}
    return EnumerationReport(t, True, tuple(families), individuals)


# ---------------------------------------------------------------------------
# Gram matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GramReport:
    eta: Fraction
    rho: int
    status: str
    radical_dim: int

    def to_json_obj(self) -> dict:
        return {
            "eta": fmt_rational(self.eta),
            "rho": self.rho,
            "status": self.status,
            "radical_dim": self.radical_dim,
        }


def _status(eta: Fraction, spec_entries) -> tuple[str, int]:
    values = [(1 + eta / 2 * e, m) for e, m in spec_entries]
    low = min(v for v, _ in values)
    if low > 0:
        return POSITIVE_DEFINITE, 0
    if low == 0:
        return POSITIVE_SEMIDEFINITE, sum(m for v, m in values if v == 0)
    return INDEFINITE, 0


def _as_eta(eta: Union[Fraction, int, str]) -> Fraction:
    return parse_rational(eta) if isinstance(eta, str) else Fraction(eta)


def gram_status(ct: CentralType, eta) -> GramReport:
    """Definiteness of I + (eta/2) H from the catalog spectrum of ct."""
    eta = _as_eta(eta)
    if eta in (0, 1):
        raise ValueError("eta must differ from 0 and 1")
    spec = catalog.spectrum(ct)
    status, rad = _status(eta, spec.entries)
    return GramReport(eta, int(spec.min_eigenvalue), status, rad)


ELIMINATION_LIMIT = 160


def gram_matrix_check(m: BitMatrix, eta, method: str = "auto") -> GramReport:
    """Definiteness of I + (eta/2) M computed on the matrix itself.

    The integer matrix 2q I + p M (eta = p/q) is examined either by
    fraction-free symmetric elimination with diagonal pivots or, for large
    matrices with integral spectrum, by a certified spectral decomposition.
    """
    eta = _as_eta(eta)
    if eta == 0:
        raise ValueError("eta must be nonzero")
    if method not in ("auto", "elimination", "spectral"):
        raise ValueError("method must be auto, elimination or spectral")
    p, q = eta.numerator, eta.denominator
    n = m.n
    g = 2 * q * np.eye(n, dtype=np.int64) + p * m.array.astype(np.int64)
    raw = None
    if method == "spectral" or (method == "auto" and n > ELIMINATION_LIMIT):
        try:
            raw = integer_spectrum_raw(m.array)
        except NonIntegralSpectrum:
            if method == "spectral":
                raise
    if raw is None:
        inertia = symmetric_pivot_inertia(g)
        status, rad = inertia.status, inertia.radical_dim
        rho = _min_eigenvalue_or_none(m)
    else:
        status, rad = _status(eta, raw)
        rho = min(e for e, _ in raw)
    return GramReport(eta, rho, status, rad)


def _min_eigenvalue_or_none(m: BitMatrix) -> Optional[int]:
    try:
        return min(e for e, _ in integer_spectrum_raw(m.array))
    except NonIntegralSpectrum:
        return None


# ---------------------------------------------------------------------------
# Matsuo candidates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatsuoReport:
    eta: Fraction
    t: int
    symplectic_only: bool
    moufang: tuple[str, ...]  # explicit members, or ("PR1(h>=1)",) for the whole class
    families: tuple[FamilyRow, ...]
    individuals: tuple[str, ...]
    statuses: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        return {
            "eta": fmt_rational(self.eta),
            "t": self.t,
            "symplectic_only": self.symplectic_only,
            "moufang": list(self.moufang),
            "families": [f.to_json_obj() for f in self.families],
            "individuals": list(self.individuals),
            "statuses": dict(sorted(self.statuses.items())),
            "S": len(self.families),
            "I": len(self.individuals),
        }


def matsuo_candidates(eta, symplectic_only: bool = False) -> MatsuoReport:
    """Central types whose Gram matrix I + (eta/2) H is not indefinite."""
    eta = _as_eta(eta)
    if eta in (0, 1):
        raise ValueError("eta must differ from 0 and 1")
    if eta < 0:
        raise ValueError("only positive eta is supported: the bound then falls on the degree")
    t = int(2 / eta)  # floor, since rho is an integer and rho >= -2/eta
    report = enumerate_min_eig(max(t, 1)) if t >= 1 else None
    if report is None:
        return MatsuoReport(eta, t, symplectic_only, (), (), ())
    statuses = {}
    families = []
    for row in report.symmetric_families:
        ct = CentralType(row.family, h=row.h, m=4)
        if symplectic_only and not catalog.symplectic_type(ct):
            continue
        families.append(row)
        statuses[str(row)] = gram_status(ct, eta).status
    individuals = []
    for name in sorted(report.individual_set(), key=_sort_key):
        ct = parse_central_type(name)
        if symplectic_only and not catalog.symplectic_type(ct):
            continue
        individuals.append(name)
        statuses[name] = gram_status(ct, eta).status
    if symplectic_only:
        # only Sym(3) is of Moufang and symplectic type at once
        moufang = tuple(
            str(ct) for ct in (CentralType("PR1", h=1), CentralType("PR1", h=2)) if catalog.symplectic_type(ct)
        )
    else:
        moufang = ("PR1(h>=1)",)
    return MatsuoReport(eta, t, symplectic_only, moufang, tuple(families), tuple(individuals), statuses)


def _sort_key(name: str):
    ct = parse_central_type(name)
    return (-catalog.min_eigenvalue(ct), ct.family, ct.h or 0, ct.m or 0, -(ct.eps or 0))
