"""Small finite fields and the forms used to build polar-space graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

# GF(4) = {0, 1, w, w^2} encoded 0, 1, 2, 3 as polynomials in w over GF(2)
# (w = 2, w^2 = w + 1 = 3); addition is XOR.
_GF4_MUL = np.array(
    [[0, 0, 0, 0],
     [0, 1, 2, 3],
     [0, 2, 3, 1],
     [0, 3, 1, 2]],
    dtype=np.uint8,
)
_GF4_CONJ = np.array([0, 1, 3, 2], dtype=np.uint8)  # a -> a^2


def gf4_add(a, b):
    return np.bitwise_xor(a, b)


def gf4_mul(a, b):
    return _GF4_MUL[a, b]


def gf4_conj(a):
    return _GF4_CONJ[a]


FIELD_SIZE = {"GF2": 2, "GF3": 3, "GF4": 4}
KINDS = ("symplectic", "quadratic", "symmetric", "hermitian")


class DegenerateForm(ValueError):
    pass


def _rank_mod_p(rows: np.ndarray, p: int) -> int:
    a = np.array(rows, dtype=np.int64) % p
    rank = 0
    nrows, ncols = a.shape
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if a[i, col]), None)
        if piv is None:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        a[rank] = (a[rank] * pow(int(a[rank, col]), -1, p)) % p
        for i in range(nrows):
            if i != rank and a[i, col]:
                a[i] = (a[i] - a[i, col] * a[rank]) % p
        rank += 1
    return rank


@dataclass(frozen=True)
class FormSpec:
    """A nondegenerate form on GF(q)^dim.

    * ``GF2`` symplectic: f = sum x_{2i-1} y_{2i} + x_{2i} y_{2i-1}.
    * ``GF2`` quadratic: q = sum x_{2i-1} x_{2i}, plus x_1 + x_2 when eps = -1.
    * ``GF3`` symmetric: f = sum c_i x_i y_i with the diagonal ``coeffs``.
    * ``GF4`` hermitian: f = sum x_i conj(y_i).
    """

    field: str
    dim: int
    kind: str
    coeffs: tuple[int, ...] = ()
    eps: Optional[int] = None

    def __post_init__(self) -> None:
        if self.field not in FIELD_SIZE or self.kind not in KINDS:
            raise ValueError(f"unsupported form {self.field}/{self.kind}")
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        expected = {"symplectic": "GF2", "quadratic": "GF2", "symmetric": "GF3", "hermitian": "GF4"}
        if expected[self.kind] != self.field:
            raise ValueError(f"{self.kind} forms are only provided over {expected[self.kind]}")
        if self.kind in ("symplectic", "quadratic") and self.dim % 2:
            raise DegenerateForm("GF(2) alternating forms need even dimension")
        if self.kind == "quadratic" and self.eps not in (1, -1):
            raise ValueError("quadratic form needs eps = +1 or -1")
        if self.kind == "symmetric":
            if len(self.coeffs) != self.dim or any(c % 3 == 0 for c in self.coeffs):
                raise DegenerateForm("diagonal coefficients must be nonzero mod 3")
        if self.kind in ("symplectic", "quadratic", "symmetric"):
            p = FIELD_SIZE[self.field]
            if _rank_mod_p(self.gram(), p) != self.dim:
                raise DegenerateForm("Gram matrix is singular")

    # constructors -----------------------------------------------------------

    @classmethod
    def symplectic(cls, m: int) -> "FormSpec":
        return cls("GF2", 2 * m, "symplectic")

    @classmethod
    def quadratic(cls, m: int, eps: int) -> "FormSpec":
        return cls("GF2", 2 * m, "quadratic", eps=eps)

    @classmethod
    def hermitian(cls, dim: int) -> "FormSpec":
        return cls("GF4", dim, "hermitian")

    @classmethod
    def symmetric(cls, coeffs) -> "FormSpec":
        coeffs = tuple(int(c) % 3 for c in coeffs)
        return cls("GF3", len(coeffs), "symmetric", coeffs)

    @classmethod
    def orthogonal3(cls, dim: int, eps: int) -> "FormSpec":
        """diag(1,...,1) or diag(1,...,1,-1), whichever has Witt sign eps."""
        for last in (1, 2):
            form = cls.symmetric((1,) * (dim - 1) + (last,))
            if witt_sign_gf3(form) == eps:
                return form
        raise ValueError(f"no diagonal form of dimension {dim} with sign {eps}")

    # evaluation -------------------------------------------------------------

    @property
    def q(self) -> int:
        return FIELD_SIZE[self.field]

    def gram(self) -> np.ndarray:
        """Gram matrix of the (polar) bilinear form, for the prime fields."""
        if self.kind in ("symplectic", "quadratic"):
            g = np.zeros((self.dim, self.dim), dtype=np.int64)
            for i in range(0, self.dim, 2):
                g[i, i + 1] = g[i + 1, i] = 1
            return g
        if self.kind == "symmetric":
            return np.diag(np.array(self.coeffs, dtype=np.int64))
        raise ValueError("hermitian forms have no prime-field Gram matrix")

    def bilinear(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """f(x_i, y_j) for row vectors, as an integer matrix of field codes."""
        if self.kind == "hermitian":
            yc = gf4_conj(y)
            out = np.zeros((x.shape[0], y.shape[0]), dtype=np.uint8)
            for i in range(self.dim):
                out ^= _GF4_MUL[x[:, i][:, None], yc[:, i][None, :]]
            return out
        g = self.gram()
        return (x.astype(np.int64) @ g @ y.astype(np.int64).T) % self.q

    def value(self, x: np.ndarray) -> np.ndarray:
        """q(x) for quadratic forms and f(x, x) for the others, per row."""
        x = np.asarray(x)
        if self.kind == "quadratic":
            xi = x.astype(np.int64)
            val = (xi[:, 0::2] * xi[:, 1::2]).sum(axis=1)
            if self.eps == -1:
                val = val + xi[:, 0] + xi[:, 1]
            return val % 2
        if self.kind == "hermitian":
            return (np.count_nonzero(x, axis=1) % 2).astype(np.uint8)
        if self.kind == "symplectic":
            return np.zeros(x.shape[0], dtype=np.int64)
        xi = x.astype(np.int64)
        return (xi * xi * np.array(self.coeffs, dtype=np.int64)).sum(axis=1) % 3


@lru_cache(maxsize=None)
def _points_cached(q: int, dim: int) -> np.ndarray:
    rows = []
    for v in itertools.product(range(q), repeat=dim):
        nz = next((c for c in v if c), 0)
        if nz == 1:
            rows.append(v)
    arr = np.array(rows, dtype=np.uint8).reshape(-1, dim)
    arr.flags.writeable = False
    return arr


def projective_points(q: int, dim: int) -> np.ndarray:
    """Representatives of the 1-spaces of GF(q)^dim, first nonzero entry 1,
    in lexicographic order."""
    return _points_cached(q, dim)


def singular_points(form: FormSpec) -> np.ndarray:
    pts = projective_points(form.q, form.dim)
    return pts[form.value(pts) == 0]


def count_singular_points(form: FormSpec) -> int:
    """Brute-force number of singular (isotropic) 1-spaces."""
    return int(singular_points(form).shape[0])


def witt_sign_gf3(form: FormSpec) -> int:
    """Sign of a nondegenerate symmetric form over GF(3).

    Even dimension: read off the singular point count. Odd dimension: the
    sign of the even space obtained by adjoining a perpendicular vector e with
    f(e, e) = 1, so that the given space is e-perp inside it.
    """
    if form.kind != "symmetric":
        raise ValueError("GF(3) symmetric form expected")
    if form.dim % 2:
        return witt_sign_gf3(FormSpec.symmetric(form.coeffs + (1,)))
    m = form.dim
    base = (3 ** (m - 1) - 1) // 2
    diff = count_singular_points(form) - base
    unit = 3 ** ((m - 2) // 2)
    if diff == unit:
        return 1
    if diff == -unit:
        return -1
    raise DegenerateForm("singular point count does not match either sign")


def discriminant_gf3(form: FormSpec) -> int:
    det = 1
    for c in form.coeffs:
        det = det * c % 3
    return 1 if det == 1 else -1


def closed_form_singular(field: str, kind: str, dim: int, eps: Optional[int] = None) -> int:
    """Closed-form number of singular 1-spaces."""
    if field == "GF2" and kind == "symplectic":
        return 2**dim - 1
    if field == "GF2" and kind == "quadratic":
        m = dim // 2
        return 2 ** (2 * m - 1) + eps * 2 ** (m - 1) - 1
    if field == "GF4" and kind == "hermitian":
        return (2 ** (2 * dim - 1) - 1 - (-2) ** (dim - 1)) // 3
    if field == "GF3" and kind == "symmetric":
        base = (3 ** (dim - 1) - 1) // 2
        if dim % 2 == 0:
            base += eps * 3 ** ((dim - 2) // 2)
        return base
    raise ValueError(f"no closed form for {field}/{kind}")


def recursion_singular(field: str, kind: str, dim: int, eps: Optional[int] = None) -> int:
    """s_i = 1 + (s_2 - 1) q^{i-2} + q s_{i-2}, from the one- or two-dimensional start."""
    q = FIELD_SIZE[field]
    if field == "GF2":
        s2 = 3 if kind == "symplectic" else (2 if eps == 1 else 0)
        h2 = 3 if kind == "symplectic" else 2
        start_dim, s = 2, s2
    elif field == "GF4":
        h2 = 3
        start_dim, s = (1, 0) if dim % 2 else (2, 3)
    else:
        h2 = 2
        if dim % 2:
            start_dim, s = 1, 0
        else:
            start_dim, s = 2, (2 if eps == 1 else 0)
    i = start_dim
    while i < dim:
        i += 2
        s = 1 + (h2 - 1) * q ** (i - 2) + q * s
    if i != dim:
        raise ValueError("dimension parity does not match the start of the recursion")
    return s
