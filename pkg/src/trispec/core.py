"""Shared value types: exact spectra, SRG parameter records, central types,
and symmetric 0/1 adjacency matrices."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np

Number = Union[int, Fraction]


class SpectrumError(ValueError):
    """Raised when a raw eigenvalue list cannot be normalized."""


class _Star:
    """Multiplicity placeholder: 'whatever makes the total equal n'."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "STAR"


STAR = _Star()


def fmt_rational(x: Number) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


# ---------------------------------------------------------------------------
# Spectrum
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset, sorted descending, with an optional Perron entry.

    ``degree_index`` points at the entry holding the degree of a connected
    regular graph; it is ``None`` for graphs that are not connected and
    regular (the Perron entry is then not distinguished).
    """

    entries: tuple[tuple[Fraction, int], ...]
    degree_index: Optional[int] = None

    def __post_init__(self) -> None:
        eigs = [e for e, _ in self.entries]
        if any(m <= 0 for _, m in self.entries):
            raise SpectrumError("multiplicities must be positive")
        if any(a <= b for a, b in zip(eigs, eigs[1:])):
            raise SpectrumError("entries must be strictly descending")
        if self.degree_index is not None:
            if self.degree_index != 0:
                raise SpectrumError("degree must be the largest eigenvalue")
            if self.entries[0][1] != 1:
                raise SpectrumError("degree entry must have multiplicity 1")

    @property
    def n(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def degree(self) -> Optional[Fraction]:
        if self.degree_index is None:
            return None
        return self.entries[self.degree_index][0]

    @property
    def restricted(self) -> tuple[tuple[Fraction, int], ...]:
        """Entries other than the Perron entry."""
        if self.degree_index is None:
            return self.entries
        return tuple(e for i, e in enumerate(self.entries) if i != self.degree_index)

    @property
    def min_eigenvalue(self) -> Fraction:
        return self.entries[-1][0]

    def multiplicity(self, eig: Number) -> int:
        eig = Fraction(eig)
        for e, m in self.entries:
            if e == eig:
                return m
        return 0

    def as_dict(self) -> dict[Fraction, int]:
        return dict(self.entries)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "degree": None if self.degree is None else fmt_rational(self.degree),
            "entries": [{"eig": fmt_rational(e), "mult": m} for e, m in self.entries],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Spectrum":
        entries = tuple((parse_rational(d["eig"]), int(d["mult"])) for d in obj["entries"])
        spec = cls(entries, 0 if obj.get("degree") is not None else None)
        if spec.n != obj["n"]:
            raise SpectrumError("total multiplicity does not match n")
        if obj.get("degree") is not None and spec.degree != parse_rational(obj["degree"]):
            raise SpectrumError("degree does not match the largest eigenvalue")
        return spec

    def render(self) -> str:
        """Angle-bracket form, e.g. ``<4; [0]^3, [-2]^2>``."""
        parts = [f"[{fmt_rational(e)}]^{m}" for e, m in self.restricted]
        if self.degree is None:
            return "<" + ", ".join(parts) + ">"
        head = fmt_rational(self.degree)
        return f"<{head}; " + ", ".join(parts) + ">" if parts else f"<{head}>"

    def __str__(self) -> str:
        return self.render()


def normalize(
    raw: Iterable[tuple[Number, object]],
    n: int,
    degree: Optional[Number],
    connected: bool = True,
) -> Spectrum:
    """Sort, merge and resolve a raw ``(eigenvalue, multiplicity)`` list.

    One multiplicity may be ``STAR``; it absorbs whatever is needed for the
    total to reach ``n``. Zero multiplicities are dropped. When ``degree`` is
    given and ``connected`` is true, the degree entry is flagged as the Perron
    entry.
    """
    merged: dict[Fraction, int] = {}
    star_eig: Optional[Fraction] = None
    for eig, mult in raw:
        eig = Fraction(eig)
        if mult is STAR:
            if star_eig is not None:
                raise SpectrumError("more than one star multiplicity")
            star_eig = eig
            merged.setdefault(eig, 0)
            continue
        if not isinstance(mult, (int, np.integer)) or isinstance(mult, bool):
            raise SpectrumError(f"multiplicity {mult!r} is not an integer")
        mult = int(mult)
        if mult < 0:
            raise SpectrumError(f"negative multiplicity {mult} for {eig}")
        merged[eig] = merged.get(eig, 0) + mult
    if star_eig is not None:
        rest = n - sum(merged.values())
        if rest < 0:
            raise SpectrumError(f"star multiplicity resolves to {rest}")
        merged[star_eig] += rest
    total = sum(merged.values())
    if total != n:
        raise SpectrumError(f"total multiplicity {total} != {n}")
    entries = tuple(sorted(((e, m) for e, m in merged.items() if m > 0), reverse=True))
    degree_index = None
    if degree is not None:
        degree = Fraction(degree)
        if degree not in merged or merged[degree] == 0:
            raise SpectrumError(f"degree {degree} does not occur in the spectrum")
        if connected:
            degree_index = 0
    return Spectrum(entries, degree_index)


def regular_spectrum(raw: Iterable[tuple[Number, object]], n: int, degree: Number) -> Spectrum:
    """Normalize the spectrum of a k-regular graph, flagging the degree entry
    exactly when it is simple (the number of components of a regular graph is
    the multiplicity of k)."""
    loose = normalize(raw, n, degree, connected=False)
    connected = loose.multiplicity(degree) == 1 and loose.entries[0][0] == Fraction(degree)
    return Spectrum(loose.entries, 0 if connected else None)


def renormalize(spec: Spectrum) -> Spectrum:
    return normalize(spec.entries, spec.n, spec.degree)


def spectrum_checksums(s: Spectrum, n: int, k: int) -> list[str]:
    """Violated trace identities for a k-regular graph on n vertices."""
    out = []
    total = s.n
    if total != n:
        out.append(f"total multiplicity {total} != n={n}")
    tr1 = sum(m * e for e, m in s.entries)
    if tr1 != 0:
        out.append(f"trace {fmt_rational(tr1)} != 0")
    tr2 = sum(m * e * e for e, m in s.entries)
    if tr2 != n * k:
        out.append(f"trace of square {fmt_rational(tr2)} != n*k={n * k}")
    if s.degree is not None and s.degree != k:
        out.append(f"degree {fmt_rational(s.degree)} != k={k}")
    return out


# ---------------------------------------------------------------------------
# Strongly regular parameters
# ---------------------------------------------------------------------------


class InfeasibleParams(ValueError):
    pass


@dataclass(frozen=True)
class ExtendedParams:
    """(n, k, lambda, mu; r^f, s^g) together with the complement-side l, lambda', mu'."""

    n: int
    k: int
    lam: int
    mu: int
    l: int
    lam_c: int
    mu_c: int
    r: int
    s: int
    f: int
    g: int

    def __post_init__(self) -> None:
        problems = self.violations()
        if problems:
            raise InfeasibleParams("; ".join(problems))

    def violations(self) -> list[str]:
        n, k, lam, mu = self.n, self.k, self.lam, self.mu
        r, s, f, g = self.r, self.s, self.f, self.g
        out = []
        if not 0 < k < n - 1:
            out.append("need 0 < k < n-1")
        if not (k >= mu >= 0 and k - 1 >= lam >= 0):
            out.append("need k >= mu >= 0 and k-1 >= lambda >= 0")
        if self.l != n - k - 1:
            out.append("l != n-k-1")
        if mu * self.l != k * (k - 1 - lam):
            out.append("mu*l != k(k-1-lambda)")
        if self.lam_c != n - 2 * k + mu - 2:
            out.append("lambda' != n-2k+mu-2")
        if self.mu_c != n - 2 * k + lam:
            out.append("mu' != n-2k+lambda")
        if r * r + (mu - lam) * r + (mu - k) != 0 or s * s + (mu - lam) * s + (mu - k) != 0:
            out.append("r, s are not roots of x^2+(mu-lambda)x+(mu-k)")
        if not (s <= 0 <= r <= k and s < r):
            out.append("need s <= 0 <= r <= k and s < r")
        if f < 0 or g < 0 or 1 + f + g != n:
            out.append("need f, g >= 0 and 1+f+g = n")
        if k + f * r + g * s != 0:
            out.append("k + fr + gs != 0")
        return out

    @property
    def imprimitive(self) -> bool:
        return self.mu == 0 or self.mu == self.k

    def spectrum(self) -> Spectrum:
        return normalize([(self.k, 1), (self.r, self.f), (self.s, self.g)], self.n, self.k)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "lambda": self.lam,
            "mu": self.mu,
            "l": self.l,
            "lambda_c": self.lam_c,
            "mu_c": self.mu_c,
            "r": self.r,
            "s": self.s,
            "f": self.f,
            "g": self.g,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "ExtendedParams":
        return cls(
            obj["n"], obj["k"], obj["lambda"], obj["mu"], obj["l"],
            obj["lambda_c"], obj["mu_c"], obj["r"], obj["s"], obj["f"], obj["g"],
        )

    def render(self) -> str:
        return (
            f"({self.n},{self.k},{self.lam},{self.mu}; "
            f"[{self.r}]^{self.f}, [{self.s}]^{self.g})"
        )


# ---------------------------------------------------------------------------
# Central types
# ---------------------------------------------------------------------------

FAMILIES = (
    "PR1", "PR2a", "PR2b", "PR2c", "PR2d", "PR3", "PR4", "PR5", "PR6",
    "PR7a", "PR7b", "PR7c", "PR7d", "PR7e",
    "PR8", "PR9", "PR10", "PR11", "PR12",
    "PR13", "PR14", "PR15", "PR16", "PR17", "PR18", "PR19",
)

# which of h, m, eps each family carries
_SHAPE = {
    "PR1": "h", "PR2a": "hm", "PR2b": "hm", "PR2c": "hm", "PR2d": "hm",
    "PR3": "hme", "PR4": "hm", "PR5": "hme", "PR6": "hm",
    "PR8": "h", "PR9": "h", "PR10": "h", "PR11": "h", "PR12": "h",
}

# smallest parameters at which the closed forms still describe a diagram
_EVAL_MIN = {
    "PR1": (0, None), "PR2a": (0, 3), "PR2b": (0, 3), "PR2c": (0, 3), "PR2d": (0, 3),
    "PR3": (0, 2), "PR4": (0, 1), "PR5": (0, 4), "PR6": (0, 3),
    "PR8": (0, None), "PR9": (0, None), "PR10": (0, None), "PR11": (0, None),
    "PR12": (0, None),
}

# classification ranges (h_min, m_min)
_CLASS_MIN = {
    "PR1": (1, None), "PR2a": (0, 4), "PR2b": (1, 4), "PR2c": (1, 4), "PR2d": (1, 4),
    "PR3": (0, 3), "PR4": (0, 3), "PR5": (0, 5), "PR6": (0, 3),
    "PR8": (1, None), "PR9": (1, None), "PR10": (1, None), "PR11": (1, None),
    "PR12": (1, None),
}


class OutOfRange(ValueError):
    pass


class ParseError(ValueError):
    pass


def family_params(family: str) -> str:
    """Subset of 'hme' naming the parameters the family takes."""
    return _SHAPE.get(family, "")


@dataclass(frozen=True, order=True)
class CentralType:
    """A family label with its integer parameters.

    Construction checks that the closed forms can be evaluated; use
    :meth:`in_classification_range` to ask whether the parameters are in the
    non-redundant ranges of the classification list.
    """

    family: str
    h: Optional[int] = None
    m: Optional[int] = None
    eps: Optional[int] = None
    alias_names: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise OutOfRange(f"unknown family {self.family!r}")
        shape = family_params(self.family)
        for name, flag in (("h", "h"), ("m", "m"), ("eps", "e")):
            value = getattr(self, name)
            if flag in shape and value is None:
                raise OutOfRange(f"{self.family} needs parameter {name}")
            if flag not in shape and value is not None:
                raise OutOfRange(f"{self.family} takes no parameter {name}")
        if self.eps is not None and self.eps not in (1, -1):
            raise OutOfRange("eps must be +1 or -1")
        if self.family in _EVAL_MIN:
            h_min, m_min = _EVAL_MIN[self.family]
            if self.h is not None and self.h < h_min:
                raise OutOfRange(f"{self.family}: h must be >= {h_min}")
            if self.m is not None and self.m < m_min:
                raise OutOfRange(f"{self.family}: m must be >= {m_min}")
        if not self.alias_names:
            from trispec.catalog import display_names

            object.__setattr__(self, "alias_names", display_names(self))

    def in_classification_range(self) -> bool:
        if self.family not in _CLASS_MIN:
            return True
        h_min, m_min = _CLASS_MIN[self.family]
        if self.h is not None and self.h < h_min:
            return False
        if self.m is not None and self.m < m_min:
            return False
        if self.family == "PR3" and (self.m, self.eps) == (3, 1):
            return False
        if self.family == "PR6" and (self.h, self.m) == (0, 3):
            return False
        return True

    def replace(self, **changes) -> "CentralType":
        data = {"family": self.family, "h": self.h, "m": self.m, "eps": self.eps}
        data.update(changes)
        return CentralType(**data)

    def __str__(self) -> str:
        parts = []
        if self.h is not None:
            parts.append(f"h={self.h}")
        if self.m is not None:
            parts.append(f"m={self.m}")
        if self.eps is not None:
            parts.append("eps=" + ("+" if self.eps > 0 else "-"))
        return self.family + (f"({','.join(parts)})" if parts else "")

    @property
    def name(self) -> str:
        return self.alias_names[0] if self.alias_names else str(self)


_CT_RE = re.compile(r"^\s*(PR\d+[a-e]?)\s*((?:\([^()]*\))*)\s*$")


def parse_central_type(text: str) -> CentralType:
    """Parse ``PR4(h=0,m=3)``, ``PR4(h=0)(m=3)``, ``PR5(m=6,eps=-)`` or ``PR7a``.

    A missing ``h`` defaults to 0 for families that carry one.
    """
    match = _CT_RE.match(text)
    if not match:
        raise ParseError(f"cannot parse central type {text!r}")
    family = match.group(1)
    if family not in FAMILIES:
        raise ParseError(f"unknown family {family!r}")
    values: dict[str, int] = {}
    groups = re.findall(r"\(([^()]*)\)", match.group(2))
    for group in groups:
        for item in filter(None, (x.strip() for x in group.split(","))):
            key, sep, val = item.partition("=")
            key, val = key.strip(), val.strip()
            if not sep or key not in ("h", "m", "eps") or key in values:
                raise ParseError(f"bad parameter {item!r} in {text!r}")
            if key == "eps":
                signs = {"+": 1, "-": -1, "+1": 1, "-1": -1, "−": -1}
                if val not in signs:
                    raise ParseError(f"bad sign {val!r}")
                values[key] = signs[val]
            else:
                try:
                    values[key] = int(val)
                except ValueError as exc:
                    raise ParseError(f"bad integer {val!r}") from exc
    if "h" in family_params(family):
        values.setdefault("h", 0)
    try:
        return CentralType(family, **values)
    except OutOfRange as exc:
        raise OutOfRange(f"{text}: {exc}") from exc


# ---------------------------------------------------------------------------
# Adjacency matrices
# ---------------------------------------------------------------------------


class BitMatrix:
    """Immutable symmetric 0/1 matrix with zero diagonal."""

    __slots__ = ("_a",)

    def __init__(self, data) -> None:
        a = np.array(data, dtype=np.uint8, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if a.size and a.max() > 1:
            raise ValueError("entries must be 0 or 1")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency matrix must be symmetric")
        if np.any(np.diagonal(a)):
            raise ValueError("adjacency matrix must have zero diagonal")
        a.flags.writeable = False
        self._a = a

    @classmethod
    def _trusted(cls, a: np.ndarray) -> "BitMatrix":
        obj = cls.__new__(cls)
        a = np.ascontiguousarray(a, dtype=np.uint8)
        a.flags.writeable = False
        obj._a = a
        return obj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "BitMatrix":
        a = np.zeros((n, n), dtype=np.uint8)
        for i, j in edges:
            a[i, j] = a[j, i] = 1
        return cls(a)

    @property
    def n(self) -> int:
        return self._a.shape[0]

    @property
    def array(self) -> np.ndarray:
        """Read-only uint8 view."""
        return self._a

    def degrees(self) -> np.ndarray:
        return self._a.sum(axis=1, dtype=np.int64)

    def regular_degree(self) -> Optional[int]:
        if self.n == 0:
            return None
        d = self.degrees()
        return int(d[0]) if np.all(d == d[0]) else None

    def is_connected(self) -> bool:
        n = self.n
        if n == 0:
            return False
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        frontier = seen.copy()
        while frontier.any():
            reach = self._a[frontier].any(axis=0) & ~seen
            seen |= reach
            frontier = reach
        return bool(seen.all())

    def complement(self) -> "BitMatrix":
        c = 1 - self._a
        np.fill_diagonal(c, 0)
        return BitMatrix._trusted(c)

    def edge_count(self) -> int:
        return int(self._a.sum(dtype=np.int64)) // 2

    def edges(self) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self._a, 1))
        return list(zip(iu.tolist(), ju.tolist()))

    def to_dimacs(self) -> str:
        lines = [f"p edge {self.n} {self.edge_count()}"]
        lines.extend(f"e {i + 1} {j + 1}" for i, j in self.edges())
        return "\n".join(lines) + "\n"

    def to_edge_list(self) -> str:
        return "".join(f"{i} {j}\n" for i, j in self.edges())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BitMatrix) and np.array_equal(self._a, other._a)

    def __hash__(self) -> int:
        return hash((self.n, self._a.tobytes()))

    def __repr__(self) -> str:
        return f"BitMatrix(n={self.n}, edges={self.edge_count()})"


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def all_ones(n: int) -> np.ndarray:
    return np.ones((n, n), dtype=np.uint8)


def dumps(obj) -> str:
    """Deterministic JSON."""
    return json.dumps(obj, sort_keys=True, indent=2)
