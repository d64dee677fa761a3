"""Fusion rings given by structure constants, and exact multiplication primitives.

A fusion ring of rank r is a based ring with basis e_0, ..., e_{r-1}, unit
e_0 (by normalization), a duality involution, and nonnegative integer
structure constants N[i][j][k] giving the multiplicity of e_k in e_i * e_j.
All arithmetic in this module is exact: products that would overflow int64
transparently fall back to Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import AmbiguousDual, DimensionMismatch, NoDual

# Headroom bound for exact int64 arithmetic; above it we switch to Python ints.
_INT64_SAFE = 2**62


def basis_vector(rank: int, i: int) -> np.ndarray:
    """Class vector of the i-th basis element."""
    v = np.zeros(rank, dtype=np.int64)
    v[i] = 1
    return v


def _max_abs(v: np.ndarray) -> int:
    if v.size == 0:
        return 0
    return max(abs(int(x)) for x in v.flat) if v.dtype == object else int(np.abs(v).max())


def exact_matvec(A: np.ndarray, v: np.ndarray) -> np.ndarray:
    """A @ v over the integers, exactly.

    Uses int64 while the result provably fits, otherwise Python-int (object
    dtype) arithmetic. A is expected small and nonnegative.
    """
    r = A.shape[1]
    if v.dtype != object:
        bound = _max_abs(v) * int(A.max(initial=0)) * r
        if bound < _INT64_SAFE:
            return A.astype(np.int64) @ v.astype(np.int64)
        v = v.astype(object)
    return A.astype(object).dot(v)


@dataclass(frozen=True, eq=False)
class FusionRing:
    """A based ring: labels, structure tensor N[i][j][k], duality, unit index.

    Instances are immutable; the structure tensor is stored read-only.
    Construction checks shapes only; the based-ring axioms are checked by
    :func:`validate`.
    """

    labels: tuple[str, ...]
    N: np.ndarray
    dual: tuple[int, ...]
    unit: int = 0
    name: str = ""

    def __post_init__(self):
        labels = tuple(str(s) for s in self.labels)
        object.__setattr__(self, "labels", labels)
        r = len(labels)
        if len(set(labels)) != r:
            raise ValueError("labels must be distinct")
        N = np.ascontiguousarray(np.asarray(self.N))
        if N.shape != (r, r, r):
            raise DimensionMismatch(f"structure tensor shape {N.shape} != ({r}, {r}, {r})")
        if not np.issubdtype(N.dtype, np.integer):
            if not np.all(N == np.rint(N)):
                raise ValueError("structure constants must be integers")
            N = N.astype(np.int64)
        if N.size and N.min() < 0:
            raise ValueError("structure constants must be nonnegative")
        N = N.astype(np.int64)
        N.setflags(write=False)
        object.__setattr__(self, "N", N)
        dual = tuple(int(d) for d in self.dual)
        if len(dual) != r or any(d < 0 or d >= r for d in dual):
            raise DimensionMismatch("dual must assign a basis index to every basis index")
        object.__setattr__(self, "dual", dual)
        if not 0 <= self.unit < r:
            raise DimensionMismatch(f"unit index {self.unit} out of range for rank {r}")

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no simple labeled {label!r}") from None

    def basis_vector(self, i: int) -> np.ndarray:
        return basis_vector(self.rank, i)

    def fusion_matrix(self, i: int) -> np.ndarray:
        """Matrix of left multiplication by e_i: A[k][j] = N[i][j][k].

        Column j holds the decomposition of e_i * e_j, so A @ v implements
        left multiplication by e_i on class vectors.
        """
        return self.N[i].T.copy()

    def multiply(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Product of two class vectors: (u*v)[k] = sum_ij u[i] v[j] N[i][j][k].

        Integer inputs are multiplied exactly; float/complex inputs use the
        same bilinear extension in floating point.
        """
        u = np.asarray(u)
        v = np.asarray(v)
        if u.shape != (self.rank,) or v.shape != (self.rank,):
            raise DimensionMismatch("class vectors must have length equal to the rank")
        if u.dtype == object or v.dtype == object:
            return self._multiply_exact(u.astype(object), v.astype(object))
        if np.issubdtype(u.dtype, np.integer) and np.issubdtype(v.dtype, np.integer):
            bound = _max_abs(u) * _max_abs(v) * int(self.N.max(initial=0)) * self.rank**2
            if bound >= _INT64_SAFE:
                return self._multiply_exact(u.astype(object), v.astype(object))
            u = u.astype(np.int64)
            v = v.astype(np.int64)
            nz_u = np.nonzero(u)[0]
            nz_v = np.nonzero(v)[0]
            if nz_u.size * nz_v.size <= self.rank:
                out = np.zeros(self.rank, dtype=np.int64)
                for i in nz_u:
                    out += u[i] * (v[nz_v] @ self.N[i][nz_v])
                return out
            return np.einsum("i,j,ijk->k", u, v, self.N)
        # float/complex inputs: plain bilinear extension, numpy promotes the dtype
        return np.einsum("i,j,ijk->k", u, v, self.N)

    def _multiply_exact(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        out = np.zeros(self.rank, dtype=object)
        for i in np.nonzero(u)[0]:
            for j in np.nonzero(v)[0]:
                out += int(u[i]) * int(v[j]) * self.N[i, j].astype(object)
        return out

    def tensor_power(self, i: int, n: int) -> np.ndarray:
        """Class of the n-th power of e_i; n = 0 gives the unit class."""
        if n < 0:
            raise ValueError("tensor power exponent must be nonnegative")
        A = self.fusion_matrix(i)
        v = self.basis_vector(self.unit)
        for _ in range(n):
            v = exact_matvec(A, v)
        return v

    def __repr__(self):
        name = f" {self.name!r}" if self.name else ""
        return f"<FusionRing{name} rank={self.rank} labels={list(self.labels)}>"


@dataclass
class ValidationReport:
    """Axiom-check outcome: one (axiom, witness) entry per violated axiom."""

    valid: bool
    violations: list[tuple[str, tuple[int, ...]]] = field(default_factory=list)


def _first_mismatch(diff: np.ndarray):
    idx = np.argwhere(diff)
    return tuple(int(x) for x in idx[0]) if idx.size else None


def validate(ring: FusionRing) -> ValidationReport:
    """Check unit law, associativity, duality, Frobenius reciprocity, involution.

    Returns a report listing every violated axiom with one witness index
    tuple; a valid ring returns an empty violation list.
    """
    N = ring.N
    r = ring.rank
    u = ring.unit
    if N.shape != (r, r, r):
        raise DimensionMismatch(f"structure tensor shape {N.shape} != rank {r}")
    dual = np.asarray(ring.dual)
    violations: list[tuple[str, tuple[int, ...]]] = []

    eye = np.eye(r, dtype=np.int64)
    bad = (N[u] != eye) | (N[:, u, :] != eye)
    w = _first_mismatch(bad)
    if w is not None:
        violations.append(("unit", w))

    lhs = np.einsum("ijm,mkl->ijkl", N, N)
    rhs = np.einsum("jkm,iml->ijkl", N, N)
    w = _first_mismatch(lhs != rhs)
    if w is not None:
        violations.append(("associativity", w))

    expected = np.zeros((r, r), dtype=np.int64)
    expected[np.arange(r), dual] = 1
    w = _first_mismatch(N[:, :, u] != expected)
    if w is not None:
        violations.append(("duality", w))

    frob = (N != N[dual].transpose(0, 2, 1)) | (N != N[:, dual, :].transpose(2, 1, 0))
    w = _first_mismatch(frob)
    if w is not None:
        violations.append(("frobenius", w))

    if sorted(ring.dual) != list(range(r)):
        counts = np.bincount(dual, minlength=r)
        violations.append(("involution", (int(np.argmax(counts != 1)),)))
    elif ring.dual[u] != u:
        violations.append(("involution", (u,)))
    else:
        bad = [i for i in range(r) if ring.dual[ring.dual[i]] != i]
        if bad:
            violations.append(("involution", (bad[0],)))

    return ValidationReport(valid=not violations, violations=violations)


def dual_from_structure(N: np.ndarray, unit: int) -> tuple[int, ...]:
    """Recover the duality permutation: dual(i) is the unique j with N[i][j][unit] = 1.

    Raises NoDual / AmbiguousDual when the unit column does not determine an
    involution candidate for some i.
    """
    N = np.asarray(N)
    r = N.shape[0]
    if N.shape != (r, r, r):
        raise DimensionMismatch(f"structure tensor shape {N.shape} is not cubic")
    dual = []
    for i in range(r):
        col = N[i, :, unit]
        hits = np.nonzero(col)[0]
        if hits.size == 0:
            raise NoDual(i)
        if hits.size > 1 or col[hits[0]] != 1:
            raise AmbiguousDual(i)
        dual.append(int(hits[0]))
    return tuple(dual)
