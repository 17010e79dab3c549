"""Scalar arithmetic and involution for the supported *-rings.

Every ring element is a vector of real components; multiplication is a
bilinear map given by a structure tensor and the involution is a linear
map on components.  This keeps matrix algebra uniform across rings: the
same einsum works for reals, complexes, dual numbers, quaternions and
pairs of complexes.

Component layouts:

    Zero              (a,)            the single element 0 (a is always 0)
    Real              (a,)
    Complex           (a, b)          a + b*i
    DualTrivial       (a, b)          a + b*eps,  eps^2 = 0,  z* = z
    DualConj          (a, b)          a + b*eps,  (a+b*eps)* = a - b*eps
    Quaternion        (a, b, c, d)    a + b*i + c*j + d*k
    DoubleComplexSwap (a, b, c, d)    the pair (a + b*i, c + d*i), (p,q)* = (q,p)
    IntegerTrivial    (n,)            exact 64-bit integer, z* = z
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import NotInvertible, ParseError, RingMismatch


class RingId(enum.Enum):
    ZERO = "zero"
    REAL = "real"
    COMPLEX = "complex"
    DUAL_TRIVIAL = "dual-trivial"
    DUAL_CONJ = "dual-conj"
    QUATERNION = "quaternion"
    DOUBLE_COMPLEX = "double-complex"
    INTEGER = "integer"


def _mul_tensor(ring: RingId) -> np.ndarray:
    """Structure tensor T with (x*y)[c] = sum_ab T[a,b,c] x[a] y[b]."""
    if ring in (RingId.REAL, RingId.INTEGER):
        t = np.zeros((1, 1, 1))
        t[0, 0, 0] = 1.0
        return t
    if ring is RingId.ZERO:
        return np.zeros((1, 1, 1))
    if ring is RingId.COMPLEX:
        t = np.zeros((2, 2, 2))
        t[0, 0, 0] = 1.0
        t[1, 1, 0] = -1.0
        t[0, 1, 1] = 1.0
        t[1, 0, 1] = 1.0
        return t
    if ring in (RingId.DUAL_TRIVIAL, RingId.DUAL_CONJ):
        t = np.zeros((2, 2, 2))
        t[0, 0, 0] = 1.0  # eps*eps = 0
        t[0, 1, 1] = 1.0
        t[1, 0, 1] = 1.0
        return t
    if ring is RingId.QUATERNION:
        # Basis 1, i, j, k with i^2 = j^2 = k^2 = ijk = -1.
        t = np.zeros((4, 4, 4))
        table = {
            (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
            (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
            (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
            (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
        }
        for (a, b), (c, s) in table.items():
            t[a, b, c] = s
        return t
    if ring is RingId.DOUBLE_COMPLEX:
        # Componentwise product of two complex numbers.
        t = np.zeros((4, 4, 4))
        for off in (0, 2):
            t[off, off, off] = 1.0
            t[off + 1, off + 1, off] = -1.0
            t[off, off + 1, off + 1] = 1.0
            t[off + 1, off, off + 1] = 1.0
        return t
    raise ValueError(ring)


def _conj_matrix(ring: RingId) -> np.ndarray:
    if ring in (RingId.ZERO, RingId.REAL, RingId.INTEGER, RingId.DUAL_TRIVIAL):
        return np.eye(_NCOMP[ring])
    if ring in (RingId.COMPLEX, RingId.DUAL_CONJ):
        return np.diag([1.0, -1.0])
    if ring is RingId.QUATERNION:
        return np.diag([1.0, -1.0, -1.0, -1.0])
    if ring is RingId.DOUBLE_COMPLEX:
        c = np.zeros((4, 4))
        c[0, 2] = c[1, 3] = c[2, 0] = c[3, 1] = 1.0
        return c
    raise ValueError(ring)


_NCOMP = {
    RingId.ZERO: 1,
    RingId.REAL: 1,
    RingId.COMPLEX: 2,
    RingId.DUAL_TRIVIAL: 2,
    RingId.DUAL_CONJ: 2,
    RingId.QUATERNION: 4,
    RingId.DOUBLE_COMPLEX: 4,
    RingId.INTEGER: 1,
}

MUL_TENSOR = {r: _mul_tensor(r) for r in RingId}
CONJ_MATRIX = {r: _conj_matrix(r) for r in RingId}
INT_MUL_TENSOR = MUL_TENSOR[RingId.INTEGER].astype(np.int64)
INT_CONJ_MATRIX = CONJ_MATRIX[RingId.INTEGER].astype(np.int64)


def ncomp(ring: RingId) -> int:
    """Number of real components per element of the ring."""
    return _NCOMP[ring]


def dtype_of(ring: RingId):
    return np.int64 if ring is RingId.INTEGER else np.float64


def is_exact(ring: RingId) -> bool:
    return ring is RingId.INTEGER


def one_vector(ring: RingId) -> np.ndarray:
    v = np.zeros(ncomp(ring), dtype=dtype_of(ring))
    if ring is not RingId.ZERO:
        v[0] = 1
    return v


def ring_from_name(name: str) -> RingId:
    for r in RingId:
        if r.value == name:
            return r
    raise ParseError(f"unknown ring tag {name!r}")


@dataclass(frozen=True)
class Scalar:
    """One element of a *-ring, stored as a tuple of real components."""

    ring: RingId
    comps: tuple

    def __post_init__(self):
        if len(self.comps) != ncomp(self.ring):
            raise ValueError(
                f"{self.ring.value} scalar needs {ncomp(self.ring)} components, "
                f"got {len(self.comps)}"
            )

    def _vec(self) -> np.ndarray:
        return np.array(self.comps, dtype=dtype_of(self.ring))

    def __add__(self, other: "Scalar") -> "Scalar":
        _check(self, other)
        return _from_vec(self.ring, self._vec() + other._vec())

    def __sub__(self, other: "Scalar") -> "Scalar":
        _check(self, other)
        return _from_vec(self.ring, self._vec() - other._vec())

    def __neg__(self) -> "Scalar":
        return _from_vec(self.ring, -self._vec())

    def __mul__(self, other: "Scalar") -> "Scalar":
        return mul(self, other)

    def is_zero(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self._vec()) <= tol))

    def approx_eq(self, other: "Scalar", tol: float = 1e-9) -> bool:
        _check(self, other)
        return bool(np.all(np.abs(self._vec() - other._vec()) <= tol))

    def __repr__(self):
        body = ", ".join(str(c) for c in self.comps)
        return f"Scalar({self.ring.value}; {body})"


def _check(x: Scalar, y: Scalar) -> None:
    if x.ring is not y.ring:
        raise RingMismatch(f"{x.ring.value} vs {y.ring.value}")


def _from_vec(ring: RingId, v: np.ndarray) -> Scalar:
    if ring is RingId.INTEGER:
        return Scalar(ring, tuple(int(c) for c in v))
    return Scalar(ring, tuple(float(c) for c in v))


def zero(ring: RingId) -> Scalar:
    return _from_vec(ring, np.zeros(ncomp(ring), dtype=dtype_of(ring)))


def one(ring: RingId) -> Scalar:
    return _from_vec(ring, one_vector(ring))


def conj(x: Scalar) -> Scalar:
    """Involution of the ring. Anti-multiplicative: (xy)* = y* x*."""
    c = CONJ_MATRIX[x.ring]
    if x.ring is RingId.INTEGER:
        c = INT_CONJ_MATRIX
    return _from_vec(x.ring, c @ x._vec())


def mul(x: Scalar, y: Scalar) -> Scalar:
    _check(x, y)
    t = MUL_TENSOR[x.ring]
    if x.ring is RingId.INTEGER:
        t = INT_MUL_TENSOR
    return _from_vec(x.ring, np.einsum("abc,a,b->c", t, x._vec(), y._vec()))


def add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def _invertible(x: Scalar) -> bool:
    v = x._vec()
    ring = x.ring
    if ring is RingId.ZERO:
        return False
    if ring in (RingId.REAL, RingId.COMPLEX, RingId.QUATERNION):
        return bool(np.any(v != 0))
    if ring in (RingId.DUAL_TRIVIAL, RingId.DUAL_CONJ):
        return v[0] != 0
    if ring is RingId.DOUBLE_COMPLEX:
        return (v[0] != 0 or v[1] != 0) and (v[2] != 0 or v[3] != 0)
    if ring is RingId.INTEGER:
        return v[0] in (1, -1)
    raise ValueError(ring)


def inv(x: Scalar) -> Scalar:
    """Multiplicative inverse; raises NotInvertible outside the unit group."""
    if not _invertible(x):
        raise NotInvertible(f"{x!r} is not invertible")
    if x.ring is RingId.INTEGER:
        return x  # the units of Z are self-inverse
    t = MUL_TENSOR[x.ring]
    # Left-multiplication matrix L[c,b] = sum_a T[a,b,c] x[a]; solve L y = 1.
    left = np.einsum("abc,a->cb", t, x._vec())
    y = np.linalg.solve(left, one_vector(x.ring))
    return _from_vec(x.ring, y)


def scalar_to_json(x: Scalar):
    """JSON payload per ring: the CLI wire encoding."""
    r = x.ring
    c = x.comps
    if r is RingId.INTEGER:
        return int(c[0])
    if r in (RingId.REAL, RingId.ZERO):
        return float(c[0])
    if r in (RingId.COMPLEX, RingId.DUAL_TRIVIAL, RingId.DUAL_CONJ):
        return [float(c[0]), float(c[1])]
    if r is RingId.QUATERNION:
        return [float(v) for v in c]
    if r is RingId.DOUBLE_COMPLEX:
        return [[float(c[0]), float(c[1])], [float(c[2]), float(c[3])]]
    raise ValueError(r)


def scalar_from_json(ring: RingId, data) -> Scalar:
    try:
        if ring is RingId.INTEGER:
            if isinstance(data, bool) or not isinstance(data, int):
                raise ParseError(f"integer scalar must be an int, got {data!r}")
            return Scalar(ring, (int(data),))
        if ring in (RingId.REAL, RingId.ZERO):
            val = float(data)
            if ring is RingId.ZERO and val != 0.0:
                raise ParseError("the zero ring has no nonzero elements")
            return Scalar(ring, (val if ring is RingId.REAL else 0.0,))
        if ring in (RingId.COMPLEX, RingId.DUAL_TRIVIAL, RingId.DUAL_CONJ):
            a, b = data
            return Scalar(ring, (float(a), float(b)))
        if ring is RingId.QUATERNION:
            a, b, c, d = data
            return Scalar(ring, (float(a), float(b), float(c), float(d)))
        if ring is RingId.DOUBLE_COMPLEX:
            (a, b), (c, d) = data
            return Scalar(ring, (float(a), float(b), float(c), float(d)))
    except ParseError:
        raise
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad {ring.value} scalar encoding {data!r}") from exc
    raise ValueError(ring)
