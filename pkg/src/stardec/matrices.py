"""Dense matrices over one *-ring, including 0-row and 0-column shapes.

A Matrix wraps a numpy array of shape (rows, cols, ncomp) holding the real
components of every entry.  Products, adjoints and direct sums are uniform
across rings thanks to the structure tensors in `scalars`.
"""

from __future__ import annotations

import numpy as np

from . import scalars as sc
from .errors import ParseError, RingMismatch, ShapeMismatch
from .scalars import RingId, Scalar


class Matrix:
    """Immutable-by-convention dense matrix over a *-ring."""

    __slots__ = ("ring", "comps")

    def __init__(self, ring: RingId, comps: np.ndarray):
        comps = np.asarray(comps, dtype=sc.dtype_of(ring))
        if comps.ndim != 3 or comps.shape[2] != sc.ncomp(ring):
            raise ShapeMismatch(
                f"component array must be (rows, cols, {sc.ncomp(ring)}), "
                f"got {comps.shape}"
            )
        self.ring = ring
        self.comps = comps

    # -- construction -------------------------------------------------

    @classmethod
    def zeros(cls, ring: RingId, rows: int, cols: int) -> "Matrix":
        return cls(ring, np.zeros((rows, cols, sc.ncomp(ring)), dtype=sc.dtype_of(ring)))

    @classmethod
    def identity(cls, ring: RingId, n: int) -> "Matrix":
        m = cls.zeros(ring, n, n)
        one = sc.one_vector(ring)
        for i in range(n):
            m.comps[i, i, :] = one
        return m

    @classmethod
    def from_scalars(cls, ring: RingId, rows) -> "Matrix":
        """Build from a list of lists of Scalar (all in `ring`)."""
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        m = cls.zeros(ring, nrows, ncols)
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ShapeMismatch("ragged rows")
            for j, s in enumerate(row):
                if s.ring is not ring:
                    raise RingMismatch(f"{s.ring.value} entry in {ring.value} matrix")
                m.comps[i, j, :] = s._vec()
        return m

    # -- basic queries -------------------------------------------------

    @property
    def rows(self) -> int:
        return self.comps.shape[0]

    @property
    def cols(self) -> int:
        return self.comps.shape[1]

    @property
    def shape(self):
        return (self.rows, self.cols)

    def entry(self, i: int, j: int) -> Scalar:
        return sc._from_vec(self.ring, self.comps[i, j])

    def copy(self) -> "Matrix":
        return Matrix(self.ring, self.comps.copy())

    def norm_max(self) -> float:
        """Max absolute value over all real components (0 for empty shapes)."""
        if self.comps.size == 0:
            return 0.0
        return float(np.max(np.abs(self.comps)))

    def approx_eq(self, other: "Matrix", tol: float = 1e-9) -> bool:
        if self.ring is not other.ring or self.shape != other.shape:
            return False
        if self.comps.size == 0:
            return True
        return float(np.max(np.abs(self.comps - other.comps))) <= tol

    def __add__(self, other: "Matrix") -> "Matrix":
        _check_ring(self, other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        return Matrix(self.ring, self.comps + other.comps)

    def __sub__(self, other: "Matrix") -> "Matrix":
        _check_ring(self, other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} - {other.shape}")
        return Matrix(self.ring, self.comps - other.comps)

    def __neg__(self) -> "Matrix":
        return Matrix(self.ring, -self.comps)

    def __repr__(self):
        return f"Matrix({self.ring.value}, {self.rows}x{self.cols})"


def _check_ring(a: Matrix, b: Matrix) -> None:
    if a.ring is not b.ring:
        raise RingMismatch(f"{a.ring.value} vs {b.ring.value}")


# -- core operations ----------------------------------------------------


def adjoint(m: Matrix) -> Matrix:
    """Conjugate transpose: (M*)_ij = (M_ji)*."""
    c = sc.CONJ_MATRIX[m.ring]
    if m.ring is RingId.INTEGER:
        c = sc.INT_CONJ_MATRIX
    return Matrix(m.ring, np.einsum("ija,ba->jib", m.comps, c))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Matrix product, respecting noncommutative scalar order."""
    _check_ring(a, b)
    if a.cols != b.rows:
        raise ShapeMismatch(f"{a.shape} @ {b.shape}")
    t = sc.MUL_TENSOR[a.ring]
    if a.ring is RingId.INTEGER:
        t = sc.INT_MUL_TENSOR
    out = np.einsum("ipa,pjb,abc->ijc", a.comps, b.comps, t)
    return Matrix(a.ring, out.astype(sc.dtype_of(a.ring), copy=False))


def direct_sum(a: Matrix, b: Matrix) -> Matrix:
    """Block-diagonal sum; 0-row/0-col operands act as row/col padding."""
    _check_ring(a, b)
    out = Matrix.zeros(a.ring, a.rows + b.rows, a.cols + b.cols)
    out.comps[: a.rows, : a.cols, :] = a.comps
    out.comps[a.rows :, a.cols :, :] = b.comps
    return out


def direct_sum_all(ring: RingId, mats) -> Matrix:
    out = Matrix.zeros(ring, 0, 0)
    for m in mats:
        out = direct_sum(out, m)
    return out


def is_unitary(m: Matrix, tol: float = 1e-9) -> bool:
    """True iff M M* and M* M are both within tol of the identity."""
    if m.rows != m.cols:
        return False
    ident = Matrix.identity(m.ring, m.rows)
    ma = adjoint(m)
    return (
        matmul(m, ma).approx_eq(ident, tol)
        and matmul(ma, m).approx_eq(ident, tol)
    )


def is_hermitian(m: Matrix, tol: float = 1e-9) -> bool:
    """True iff M is square and equals its adjoint within tol."""
    if m.rows != m.cols:
        return False
    return m.approx_eq(adjoint(m), tol)


def bordered(m: Matrix) -> Matrix:
    """The self-adjoint block matrix [[0, M*],[M, 0]] of shape (m+n)x(m+n)."""
    ma = adjoint(m)
    n, mm = m.cols, m.rows
    out = Matrix.zeros(m.ring, n + mm, n + mm)
    out.comps[:n, n:, :] = ma.comps
    out.comps[n:, :n, :] = m.comps
    return out


def scalar_multiple(m: Matrix, s: Scalar) -> Matrix:
    """Left scalar multiple s*M (componentwise via the structure tensor)."""
    if s.ring is not m.ring:
        raise RingMismatch(f"{s.ring.value} scalar on {m.ring.value} matrix")
    t = sc.MUL_TENSOR[m.ring]
    if m.ring is RingId.INTEGER:
        t = sc.INT_MUL_TENSOR
    out = np.einsum("a,ijb,abc->ijc", s._vec(), m.comps, t)
    return Matrix(m.ring, out.astype(sc.dtype_of(m.ring), copy=False))


# -- conversions between rings and plain numpy arrays --------------------


def to_real_array(m: Matrix) -> np.ndarray:
    """Real or integer matrix as a plain (rows, cols) float array."""
    if m.ring not in (RingId.REAL, RingId.INTEGER, RingId.ZERO):
        raise RingMismatch(f"{m.ring.value} is not a real-like ring")
    return m.comps[:, :, 0].astype(np.float64)


def to_int_array(m: Matrix) -> np.ndarray:
    if m.ring is not RingId.INTEGER:
        raise RingMismatch("not an integer matrix")
    return m.comps[:, :, 0].copy()


def to_complex_array(m: Matrix) -> np.ndarray:
    if m.ring is not RingId.COMPLEX:
        raise RingMismatch("not a complex matrix")
    return m.comps[:, :, 0] + 1j * m.comps[:, :, 1]


def to_dual_parts(m: Matrix):
    """Dual matrix as the pair (M0, M1) of real arrays, M = M0 + eps*M1."""
    if m.ring not in (RingId.DUAL_TRIVIAL, RingId.DUAL_CONJ):
        raise RingMismatch("not a dual matrix")
    return m.comps[:, :, 0].copy(), m.comps[:, :, 1].copy()


def to_complex_pair(m: Matrix):
    """Quaternion M = A + B*j or double-complex M = (A, B) as (A, B)."""
    if m.ring not in (RingId.QUATERNION, RingId.DOUBLE_COMPLEX):
        raise RingMismatch("no complex-pair form for this ring")
    a = m.comps[:, :, 0] + 1j * m.comps[:, :, 1]
    b = m.comps[:, :, 2] + 1j * m.comps[:, :, 3]
    return a, b


def from_real_array(ring: RingId, a: np.ndarray) -> Matrix:
    a = np.asarray(a, dtype=np.float64)
    comps = np.zeros(a.shape + (sc.ncomp(ring),))
    if ring is not RingId.ZERO:
        comps[:, :, 0] = a
    return Matrix(ring, comps)


def from_int_array(a: np.ndarray) -> Matrix:
    a = np.asarray(a)
    return Matrix(RingId.INTEGER, a.reshape(a.shape + (1,)).astype(np.int64))


def from_complex_array(a: np.ndarray) -> Matrix:
    a = np.asarray(a, dtype=np.complex128)
    return Matrix(RingId.COMPLEX, np.stack([a.real, a.imag], axis=-1))


def from_dual_parts(ring: RingId, m0: np.ndarray, m1: np.ndarray) -> Matrix:
    if ring not in (RingId.DUAL_TRIVIAL, RingId.DUAL_CONJ):
        raise RingMismatch("not a dual ring")
    return Matrix(ring, np.stack([np.asarray(m0, float), np.asarray(m1, float)], axis=-1))


def from_complex_pair(ring: RingId, a: np.ndarray, b: np.ndarray) -> Matrix:
    if ring not in (RingId.QUATERNION, RingId.DOUBLE_COMPLEX):
        raise RingMismatch("no complex-pair form for this ring")
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    return Matrix(ring, np.stack([a.real, a.imag, b.real, b.imag], axis=-1))


# -- quaternion embedding -------------------------------------------------


def chi_embedding(m: Matrix) -> np.ndarray:
    """Complex adjoint embedding chi(A + B j) = [[A, B], [-conj(B), conj(A)]].

    Multiplicative and adjoint-compatible: chi(MN) = chi(M) chi(N) and
    chi(M*) = chi(M)^H.
    """
    if m.ring is not RingId.QUATERNION:
        raise RingMismatch("chi embedding needs a quaternion matrix")
    a, b = to_complex_pair(m)
    return np.block([[a, b], [-b.conj(), a.conj()]])


def chi_fold(x: np.ndarray) -> Matrix:
    """Inverse of `chi_embedding` for arrays in the image of chi."""
    x = np.asarray(x, dtype=np.complex128)
    if x.shape[0] % 2 or x.shape[1] % 2:
        raise ShapeMismatch("chi image must have even dimensions")
    m2, n2 = x.shape
    a = x[: m2 // 2, : n2 // 2]
    b = x[: m2 // 2, n2 // 2 :]
    return from_complex_pair(RingId.QUATERNION, a, b)


# -- JSON ----------------------------------------------------------------


def matrix_to_json(m: Matrix) -> dict:
    entries = [
        [sc.scalar_to_json(m.entry(i, j)) for j in range(m.cols)]
        for i in range(m.rows)
    ]
    if m.rows == 0 or m.cols == 0:
        entries = []
    return {"ring": m.ring.value, "rows": m.rows, "cols": m.cols, "entries": entries}


def matrix_from_json(data: dict) -> Matrix:
    if not isinstance(data, dict):
        raise ParseError("matrix JSON must be an object")
    try:
        ring = sc.ring_from_name(data["ring"])
        rows = int(data["rows"])
        cols = int(data["cols"])
        entries = data["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed matrix JSON: {exc}") from exc
    if rows < 0 or cols < 0:
        raise ParseError("negative dimensions")
    m = Matrix.zeros(ring, rows, cols)
    if rows == 0 or cols == 0:
        if entries not in ([], [[]] * rows):
            raise ParseError("empty-dimension matrix must have empty entries")
        return m
    if len(entries) != rows:
        raise ParseError(f"expected {rows} rows, got {len(entries)}")
    for i, row in enumerate(entries):
        if len(row) != cols:
            raise ParseError(f"row {i}: expected {cols} entries, got {len(row)}")
        for j, item in enumerate(row):
            m.comps[i, j, :] = sc.scalar_from_json(ring, item)._vec()
    return m
