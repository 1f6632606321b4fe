"""Closed-form sizes and spectra for every central type, plus the rank 3
parameters of the base families."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from trispec.core import (
    FAMILIES,
    STAR,
    CentralType,
    ExtendedParams,
    OutOfRange,
    Spectrum,
    family_params,
    regular_spectrum,
)
from trispec.srg import complement_params, extend


class NotRank3(ValueError):
    pass


def _sign(eps: int) -> str:
    return "+" if eps > 0 else "-"


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

_SPORADIC = {
    "PR7a": (3510, [(2816, 1), (8, 3080), (-64, 429)]),
    "PR7b": (31671, [(28160, 1), (8, 30888), (-352, 782)]),
    "PR7c": (306936, [(275264, 1), (80, 249458), (-352, 57477)]),
    # triality diagrams M x 3 over O8+(2) and O8+(3): degree k + 2n
    "PR7d": (360, [(296, 1), (8, 105), (-4, 252), (-64, 2)]),
    "PR7e": (3240, [(2888, 1), (8, 2457), (-28, 780), (-352, 2)]),
}

_SPORADIC_PARAMS = {
    "PR7a": (3510, 2816, 2248, 2304),
    "PR7b": (31671, 28160, 25000, 25344),
    "PR7c": (306936, 275264, 246832, 247104),
}

# exotic central types with the same diagram as a split type
_EXOTIC = {
    "PR13": ("PR5", 2, 5, -1),
    "PR14": ("PR5", 2, 6, -1),
    "PR15": ("PR5", 1, 7, -1),
    "PR16": ("PR5", 1, 8, -1),
    "PR17": ("PR6", 2, 5, None),
    "PR18": ("PR6", 1, 7, None),
    "PR19": ("PR6", 3, 3, None),
}


def _pr5_base(m: int, eps: int) -> tuple[int, list]:
    if m % 2:
        a = 3 ** ((m - 3) // 2)
        b = 3 ** ((m - 1) // 2)
        n = (3 ** (m - 1) - eps * b) // 2
        k = 3 ** (m - 2) - 2 * eps * a - 1
        f = (3 ** (m - 1) - 1 - (eps - 1) * (b - 1)) // 4
        g = (3 ** (m - 1) - 1 - (eps + 1) * (b + 1)) // 4
        return n, [(k, 1), (a - 1, f), (-a - 1, g)]
    c = 3 ** ((m - 2) // 2)
    n = (3 ** (m - 1) - eps * c) // 2
    k = 3 ** (m - 2) - 1
    d = (3 ** (m // 2) - eps) * (c - eps) // 8
    e = (3**m - 9) // 8
    return n, [(k, 1), (-eps * c - 1, d), (eps * 3 ** ((m - 4) // 2) - 1, e)]


def _raw(ct: CentralType) -> tuple[int, list]:
    """(size, raw spectrum list with the degree first)."""
    fam, h, m, eps = ct.family, ct.h, ct.m, ct.eps
    if fam in _SPORADIC:
        n, raw = _SPORADIC[fam]
        return n, list(raw)
    if fam in _EXOTIC:
        return _raw(resolve_aliases(ct))
    if fam == "PR1":
        n = 3**h
        return n, [(n - 1, 1), (-1, STAR)]
    if fam == "PR2a":
        n = 2**h * m * (m - 1) // 2
        return n, [
            (2 ** (h + 1) * (m - 2), 1),
            (2**h * (m - 4), m - 1),
            (0, STAR),
            (-(2 ** (h + 1)), m * (m - 3) // 2),
        ]
    if fam == "PR2b":
        t = 3**h
        n = t * m * (m - 1) // 2
        return n, [
            (t * (2 * m - 3) - 1, 1),
            (t * (m - 3) - 1, m - 1),
            (-1, STAR),
            (-t - 1, m * (m - 3) // 2),
        ]
    if fam == "PR2c":
        t = 3**h
        n = t * m * (m - 1)
        return n, [
            (t * (4 * m - 7) - 1, 1),
            (t * (2 * m - 7) - 1, m - 1),
            (t - 1, m * (m - 1) // 2),
            (-1, STAR),
            (-3 * t - 1, m * (m - 3) // 2),
        ]
    if fam == "PR2d":
        t = 4**h
        n = 3 * t * m * (m - 1) // 2
        return n, [
            (t * (6 * m - 10), 1),
            (t * (3 * m - 10), m - 1),
            (0, STAR),
            (-t, m * (m - 1)),
            (-4 * t, m * (m - 3) // 2),
        ]
    if fam == "PR3":
        n = 2**h * (2 ** (2 * m - 1) - eps * 2 ** (m - 1))
        k = 2**h * (2 ** (2 * m - 2) - eps * 2 ** (m - 1))
        return n, [
            (k, 1),
            (eps * 2 ** (h + m - 1), (2**m - eps) * (2 ** (m - 1) - eps) // 3),
            (-eps * 2 ** (h + m - 2), (2 ** (2 * m) - 4) // 3),
            (0, STAR),
        ]
    if fam == "PR4":
        n = 2**h * (2 ** (2 * m) - 1)
        return n, [
            (2 ** (2 * m - 1 + h), 1),
            (2 ** (m - 1 + h), 2 ** (2 * m - 1) - 2 ** (m - 1) - 1),
            (0, STAR),
            (-(2 ** (m - 1 + h)), 2 ** (2 * m - 1) + 2 ** (m - 1) - 1),
        ]
    if fam == "PR5":
        n0, raw0 = _pr5_base(m, eps)
        t = 3**h
        raw = [(t * (x + 1) - 1, mult) for x, mult in raw0]
        return t * n0, raw + [(-1, STAR)]
    if fam == "PR6":
        n = 4**h * (2 ** (2 * m - 1) - 1 - (-2) ** (m - 1)) // 3
        d = 8 * (2 ** (2 * m - 3) - 1 - (-2) ** (m - 2)) // 9
        e = 4 * (2 ** (2 * m - 3) - 1 - 7 * (-2) ** (m - 3)) // 9
        return n, [
            (2 ** (2 * m - 3 + 2 * h), 1),
            (-((-2) ** (m - 3 + 2 * h)), d),
            (-((-2) ** (m - 2 + 2 * h)), e),
            (0, STAR),
        ]
    if fam == "PR8":
        t = 4**h
        return 126 * t, [(80 * t, 1), (8 * t, 35), (0, STAR), (-4 * t, 90)]
    if fam == "PR9":
        t = 3**h
        return 63 * t, [(11 * 3 * t - 1, 1), (5 * t - 1, 27), (-1, STAR), (-3 * t - 1, 35)]
    if fam == "PR10":
        t = 3**h
        return 120 * t, [(19 * 3 * t - 1, 1), (9 * t - 1, 35), (-1, STAR), (-3 * t - 1, 84)]
    if fam == "PR11":
        t = 9**h
        return 165 * t, [(129 * t - 1, 1), (9 * t - 1, 44), (-1, STAR), (-3 * t - 1, 120)]
    if fam == "PR12":
        t = 9**h
        return 36 * t, [(33 * t - 1, 1), (t - 1, 27), (-1, STAR), (-3 * t - 1, 8)]
    raise OutOfRange(f"unknown family {fam}")


def size(ct: CentralType) -> int:
    return _raw(ct)[0]


@lru_cache(maxsize=4096)
def spectrum(ct: CentralType) -> Spectrum:
    n, raw = _raw(ct)
    return regular_spectrum(raw, n, raw[0][0])


def degree(ct: CentralType) -> int:
    return int(_raw(ct)[1][0][0])


def min_eigenvalue(ct: CentralType) -> int:
    return int(spectrum(ct).min_eigenvalue)


# ---------------------------------------------------------------------------
# Aliases and lift structure
# ---------------------------------------------------------------------------


def resolve_aliases(ct: CentralType) -> CentralType:
    """Canonical representative with the identical diagram."""
    fam = ct.family
    if fam in _EXOTIC:
        base, h, m, eps = _EXOTIC[fam]
        return CentralType(base, h=h, m=m, eps=eps)
    if fam == "PR5" and ct.h == 0 and ct.m == 5:
        if ct.eps == 1:
            return CentralType("PR3", h=0, m=3, eps=-1)
        return CentralType("PR6", h=0, m=4)
    if fam == "PR6" and ct.h == 0 and ct.m == 3:
        return CentralType("PR1", h=2)
    if fam == "PR3" and (ct.m, ct.eps) == (3, 1):
        return CentralType("PR2a", h=ct.h, m=8)
    if fam == "PR3" and (ct.m, ct.eps) == (2, -1):
        return CentralType("PR2a", h=ct.h, m=5)
    if fam == "PR4" and ct.m == 2:
        return CentralType("PR2a", h=ct.h, m=6)
    return ct


def lift_structure(ct: CentralType) -> Optional[tuple[CentralType, int, int]]:
    """``(base, p, e)`` with spectrum(ct) = lift_spectrum(spectrum(base), p, e),
    where ``base`` is the same family at h = 0; ``None`` for unlifted types."""
    fam = ct.family
    if fam in _EXOTIC:
        return lift_structure(resolve_aliases(ct))
    if ct.h is None or ct.h == 0:
        return None
    base = ct.replace(h=0)
    p, e = {
        "PR1": (3, 1), "PR2a": (2, 1), "PR2b": (3, 1), "PR2c": (3, 1), "PR2d": (2, 2),
        "PR3": (2, 1), "PR4": (2, 1), "PR5": (3, 1), "PR6": (2, 2),
        "PR8": (2, 2), "PR9": (3, 1), "PR10": (3, 1), "PR11": (3, 2), "PR12": (3, 2),
    }[fam]
    return base, p, e * ct.h


def symplectic_type(ct: CentralType) -> bool:
    if ct.family in ("PR2a", "PR3", "PR4"):
        return True
    if ct.family == "PR1":
        return ct.h <= 1
    return False


def diagram_only(ct: CentralType) -> bool:
    """Evaluable, but outside the classification list."""
    return not ct.in_classification_range()


# ---------------------------------------------------------------------------
# Rank 3 parameters
# ---------------------------------------------------------------------------


def _diagram_nklm(ct: CentralType) -> tuple[int, int, int, int]:
    fam, h, m, eps = ct.family, ct.h, ct.m, ct.eps
    if fam in _SPORADIC_PARAMS:
        return _SPORADIC_PARAMS[fam]
    if h != 0 or fam not in ("PR2a", "PR3", "PR4", "PR5", "PR6"):
        raise NotRank3(f"{ct} is not a rank 3 base type")
    if fam == "PR2a":
        if m < 4:
            raise NotRank3("Sym(3) has a complete diagram")
        return m * (m - 1) // 2, 2 * (m - 2), m - 2, 4
    if fam == "PR3":
        return (
            2 ** (2 * m - 1) - eps * 2 ** (m - 1),
            2 ** (2 * m - 2) - eps * 2 ** (m - 1),
            2 ** (2 * m - 3) - eps * 2 ** (m - 2),
            2 ** (2 * m - 3) - eps * 2 ** (m - 1),
        )
    if fam == "PR4":
        if m < 2:
            raise NotRank3("Sp2(2) has a complete diagram")
        return 2 ** (2 * m) - 1, 2 ** (2 * m - 1), 2 ** (2 * m - 2), 2 ** (2 * m - 2)
    if fam == "PR5":
        n = size(ct)
        if m % 2:
            a = 3 ** ((m - 3) // 2)
            return n, 3 ** (m - 2) - 2 * eps * a - 1, 2 * (3 ** (m - 3) - eps * a - 1), 2 * (3 ** (m - 3) - eps * a)
        return n, 3 ** (m - 2) - 1, 2 * (3 ** (m - 3) - 1), 2 * (3 ** (m - 3) + eps * 3 ** ((m - 4) // 2))
    if m < 4:
        raise NotRank3("SU3(2)' has a complete diagram")
    return (
        size(ct),
        2 ** (2 * m - 3),
        3 * 2 ** (2 * m - 5) + (-2) ** (m - 3),
        3 * 2 ** (2 * m - 5),
    )


def extended_params(ct: CentralType, side: str = "diagram") -> ExtendedParams:
    """Extended parameters of a rank 3 diagram or of its complement."""
    if side not in ("diagram", "codiagram"):
        raise ValueError("side must be 'diagram' or 'codiagram'")
    p = extend(*_diagram_nklm(ct))
    spec = spectrum(ct)
    if spec.n != p.n or (spec.degree is not None and spec.degree != p.k):
        raise AssertionError(f"closed forms disagree for {ct}")
    return p if side == "diagram" else complement_params(p)


def is_rank3(ct: CentralType) -> bool:
    try:
        _diagram_nklm(ct)
    except NotRank3:
        return False
    return True


# ---------------------------------------------------------------------------
# Names
# ---------------------------------------------------------------------------


def _power(base: str, h: int, body: str) -> str:
    if h == 0:
        return body
    if h == 1:
        return f"{base}:{body}"
    return f"({base})^{h}:{body}"


def family_display(family: str, h: int) -> str:
    """Name of a symmetric-quotient family with m left symbolic."""
    base, body = {
        "PR2a": ("2^(m-1)", "Sym(m)"),
        "PR2b": ("3^(m-1)", "Sym(m)"),
        "PR2c": ("3^m", "2^(m-1):Sym(m)"),
        "PR2d": ("4^m", "3^(m-1):Sym(m)"),
    }[family]
    return _power(base, h, body)


def display_names(ct: CentralType) -> tuple[str, ...]:
    fam, h, m, eps = ct.family, ct.h, ct.m, ct.eps
    names: list[str] = []
    if fam == "PR1":
        names.append({0: "1", 1: "Sym(3)", 2: "SU3(2)'"}.get(h, f"3^{h - 1}:2 (Moufang, 3^{h} transpositions)"))
        if h == 1:
            names.append("W(A2)")
    elif fam == "PR2a":
        names.append(_power(f"2^{m - 1}", h, f"Sym({m})"))
        if h == 0:
            names.append(f"W(A{m - 1})")
        elif h == 1:
            names.append(f"W(D{m})")
    elif fam == "PR2b":
        names.append(_power(f"3^{m - 1}", h, f"Sym({m})"))
    elif fam == "PR2c":
        names.append(_power(f"3^{m}", h, f"2^{m - 1}:Sym({m})"))
    elif fam == "PR2d":
        names.append(_power(f"4^{m}", h, f"3^{m - 1}:Sym({m})"))
    elif fam == "PR3":
        names.append(_power(f"2^{2 * m}", h, f"O{2 * m}{_sign(eps)}(2)"))
        if h == 0 and (m, eps) == (3, -1):
            names += ["W(E6)", "Omega5+(3)"]
        if h == 0 and (m, eps) == (4, 1):
            names.append("W(E8)/2")
    elif fam == "PR4":
        names.append(_power(f"2^{2 * m}", h, f"Sp{2 * m}(2)"))
        if h == 0 and m == 3:
            names.append("W(E7)/2")
    elif fam == "PR5":
        names.append(_power(f"3^{m}", h, f"Omega{m}{_sign(eps)}(3)"))
        if h == 0 and (m, eps) == (5, 1):
            names += ["O6-(2)", "W(E6)"]
        if h == 0 and (m, eps) == (5, -1):
            names.append("2 x SU4(2)")
    elif fam == "PR6":
        names.append(_power(f"4^{m}", h, f"SU{m}(2)" + ("'" if m == 3 else "")))
    elif fam == "PR7a":
        names.append("Fi22")
    elif fam == "PR7b":
        names.append("Fi23")
    elif fam == "PR7c":
        names.append("Fi24")
    elif fam == "PR7d":
        names.append("O8+(2):Sym(3)")
    elif fam == "PR7e":
        names.append("O8+(3):Sym(3)")
    elif fam == "PR8":
        names.append(_power("4^6", h, "3.O6-(3)"))
    elif fam == "PR9":
        names.append(_power("3^7", h, "(2 x Sp6(2))"))
    elif fam == "PR10":
        names.append(_power("3^8", h, "(2.O8+(2))"))
    elif fam == "PR11":
        names.append(_power("9^5", h, "(2 x SU5(2))"))
    elif fam == "PR12":
        names.append(_power("9^5", h, "U:SU3(2)'"))
    else:
        names.append({
            "PR13": "(3^5.3^5):Omega5-(3)",
            "PR14": "(3^6.3^6):(3.Omega6-(3))",
            "PR15": "3^7.Omega7-(3)",
            "PR16": "3^8.Omega8-(3)",
            "PR17": "(4.4):SU5(2)",
            "PR18": "4^7.SU7(2)",
            "PR19": "T:SU3(2)'",
        }[fam])
    return tuple(names)


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

_NOTES = {
    "PR3": "(m, eps) = (2, *) and (3, +) are evaluated as diagrams only; (2, +) is disconnected",
    "PR6": "lambda of the rank 3 diagram is 3*2^(2m-5) + (-2)^(m-3), as produced by the GF(4) construction",
    "PR12": "normal subgroup displayed as 9^h with a 4^3 extension; the diagram does not depend on the choice",
}


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    parameters: str
    classification_range: dict
    evaluation_range: dict
    symplectic_type: object
    aliases: tuple[str, ...] = field(default=())
    notes: str = ""

    def to_json_obj(self) -> dict:
        return {
            "family": self.family,
            "param_ranges": {
                "classification": self.classification_range,
                "evaluation": self.evaluation_range,
            },
            "symplectic_type": self.symplectic_type,
            "aliases": list(self.aliases),
            "notes": self.notes,
        }


_CLASS_RANGE = {
    "PR1": {"h": ">=1"},
    "PR2a": {"h": ">=0", "m": ">=4"},
    "PR2b": {"h": ">=1", "m": ">=4"},
    "PR2c": {"h": ">=1", "m": ">=4"},
    "PR2d": {"h": ">=1", "m": ">=4"},
    "PR3": {"h": ">=0", "m": ">=3", "eps": "+-", "excluded": "(m,eps)=(3,+)"},
    "PR4": {"h": ">=0", "m": ">=3"},
    "PR5": {"h": ">=0", "m": ">=5", "eps": "+-"},
    "PR6": {"h": ">=0", "m": ">=3", "excluded": "(h,m)=(0,3)"},
    "PR8": {"h": ">=1"}, "PR9": {"h": ">=1"}, "PR10": {"h": ">=1"}, "PR11": {"h": ">=1"},
    "PR12": {"h": ">=1"},
}

_EVAL_RANGE = {
    "PR1": {"h": ">=0"},
    "PR2a": {"h": ">=0", "m": ">=3"}, "PR2b": {"h": ">=0", "m": ">=3"},
    "PR2c": {"h": ">=0", "m": ">=3"}, "PR2d": {"h": ">=0", "m": ">=3"},
    "PR3": {"h": ">=0", "m": ">=2", "eps": "+-"},
    "PR4": {"h": ">=0", "m": ">=1"},
    "PR5": {"h": ">=0", "m": ">=4", "eps": "+-"},
    "PR6": {"h": ">=0", "m": ">=3"},
    "PR8": {"h": ">=0"}, "PR9": {"h": ">=0"}, "PR10": {"h": ">=0"}, "PR11": {"h": ">=0"},
    "PR12": {"h": ">=0"},
}

_FAMILY_ALIASES = {
    "PR1": ("PR1(h=1) = Sym(3)", "PR1(h=2) = SU3(2)' = PR6(h=0,m=3)"),
    "PR2a": ("PR2a(h=0,m) = W(A_{m-1})", "PR2a(h=1,m) = W(D_m) = PR2c(h=0,m)"),
    "PR2b": ("PR2b(h=0,m) = PR2a(h=0,m)", "PR2b(h=1,m) = PR2d(h=0,m)"),
    "PR3": ("PR3(h,m=3,eps=+) = PR2a(h,m=8)", "PR3(h,m=2,eps=-) = PR2a(h,m=5)",
            "PR3(h=0,m=3,eps=-) = PR5(h=0,m=5,eps=+)"),
    "PR4": ("PR4(h,m=2) = PR2a(h,m=6)",),
    "PR5": ("PR5(h=0,m=5,eps=-) = PR6(h=0,m=4)",),
    "PR8": ("PR8(h=0) = PR5(h=0,m=6,eps=-)",),
    "PR9": ("PR9(h=0) = PR4(h=0,m=3)",),
    "PR10": ("PR10(h=0) = PR3(h=0,m=4,eps=+)",),
    "PR11": ("PR11(h=0) = PR6(h=0,m=5)",),
    "PR12": ("PR12(h=0) = 4^2 lift of PR6(h=0,m=3)",),
}


def catalog_entries() -> list[CatalogEntry]:
    out = []
    for fam in FAMILIES:
        shape = family_params(fam)
        if fam == "PR1":
            symp: object = "h<=1"
        else:
            symp = fam in ("PR2a", "PR3", "PR4")
        aliases = _FAMILY_ALIASES.get(fam, ())
        if fam in _EXOTIC:
            aliases = (str(resolve_aliases(CentralType(fam))),)
        out.append(
            CatalogEntry(
                family=fam,
                parameters=",".join({"h": "h", "m": "m", "e": "eps"}[c] for c in shape),
                classification_range=_CLASS_RANGE.get(fam, {}),
                evaluation_range=_EVAL_RANGE.get(fam, {}),
                symplectic_type=symp,
                aliases=aliases,
                notes=_NOTES.get(fam, ""),
            )
        )
    return out
