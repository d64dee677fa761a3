"""Spectral data of a commutative fusion ring.

Computes the Frobenius-Perron character (the unique basis-positive ring
homomorphism), the full character table by simultaneous diagonalization of
the commuting left-multiplication matrices, formal codegrees
f_t = sum_j mu_t(j) mu_t(j*), and the primitive central idempotents.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvergenceFailure,
    DegenerateCombination,
    DimensionMismatch,
    NonCommutative,
    SingularCharacterMatrix,
)
from .ring import FusionRing

#: equality tolerance for complex scalars
DEFAULT_EPS = 1e-9
#: tolerance for aggregate identities (sums over the whole basis)
AGGREGATE_EPS = 1e-8
#: seed of the random linear combination used for diagonalization
DEFAULT_SEED = 0

_MAX_RETRIES = 8
_POWER_ITERATION_CAP = 10_000


@dataclass
class FPData:
    """Frobenius-Perron dimensions of the simples and the global dimension."""

    dims: np.ndarray
    global_dim: float


@dataclass
class CharacterTable:
    """All ring homomorphisms to the complex numbers, one per row.

    Row 0 is the Frobenius-Perron character; the remaining rows are sorted
    lexicographically by (real, imaginary) parts of their value vectors.
    codegrees[t] = sum_j characters[t][j] * characters[t][dual(j)].
    """

    characters: np.ndarray
    codegrees: np.ndarray
    fp_index: int = 0

    @property
    def count(self) -> int:
        return self.characters.shape[0]


@dataclass
class IdempotentSet:
    """Primitive central idempotents E_t, one per character, rows over the basis."""

    idempotents: np.ndarray


def is_commutative(ring: FusionRing) -> bool:
    """True iff N[i][j][k] = N[j][i][k] for all i, j, k."""
    return bool(np.array_equal(ring.N, ring.N.transpose(1, 0, 2)))


def fp_character(ring: FusionRing, eps: float = DEFAULT_EPS,
                 max_iter: int = _POWER_ITERATION_CAP) -> FPData:
    """Frobenius-Perron dimensions via power iteration.

    The vector d of FP dimensions satisfies (A_i^T d)_j = d_i d_j for every
    fusion matrix A_i, hence is the principal eigenvector of the strictly
    positive matrix M[j][k] = sum_i N[i][j][k]. Iteration starts from the
    all-ones vector and stops when the componentwise relative change drops
    two orders of magnitude below eps (the spectral gap can amplify the
    stopping residual, so the margin keeps the returned dims accurate to
    eps); d is then normalized so that d[unit] = 1.
    """
    r = ring.rank
    M = ring.N.sum(axis=0).astype(float)
    threshold = eps * 1e-2
    v = np.ones(r)
    for _ in range(max_iter):
        w = M @ v
        w /= np.abs(w).max()
        if np.max(np.abs(w - v)) < threshold * np.max(np.abs(w)):
            v = w
            break
        v = w
    else:
        raise ConvergenceFailure(
            f"principal eigenvector did not stabilize in {max_iter} iterations")
    dims = v / v[ring.unit]
    if dims.min() <= 0:
        raise ConvergenceFailure("principal eigenvector is not strictly positive")
    return FPData(dims=dims, global_dim=float(np.sum(dims**2)))


def regular_element(ring: FusionRing, fp: FPData) -> np.ndarray:
    """The virtual regular element: sum_j FPdim(e_j) e_j."""
    return fp.dims.astype(float).copy()


def fpdim_of_class(fp: FPData, x: np.ndarray) -> float:
    """Linear extension of FPdim to class vectors."""
    return float(sum(float(c) * d for c, d in zip(x, fp.dims)))


def adjoint_class(ring: FusionRing) -> np.ndarray:
    """Class of the adjoint object: sum over simples j of e_j * e_{j*}."""
    out = np.zeros(ring.rank, dtype=np.int64)
    for j in range(ring.rank):
        out = out + ring.multiply(ring.basis_vector(j), ring.basis_vector(ring.dual[j]))
    return out


def bilinear_m(ring: FusionRing, u: np.ndarray, v: np.ndarray) -> int:
    """Hom-space pairing extended bilinearly; the simples are orthonormal."""
    u = np.asarray(u)
    v = np.asarray(v)
    if u.shape != (ring.rank,) or v.shape != (ring.rank,):
        raise DimensionMismatch("class vectors must have length equal to the rank")
    return int(sum(int(a) * int(b) for a, b in zip(u, v)))


def _multiplicativity_residual(ring: FusionRing, row: np.ndarray) -> float:
    outer = np.outer(row, row)
    images = np.einsum("ijk,k->ij", ring.N, row)
    return float(np.abs(outer - images).max())


def _sort_key(row: np.ndarray):
    return tuple((round(float(z.real), 9), round(float(z.imag), 9)) for z in row)


def build_table(ring: FusionRing, rows: np.ndarray, eps: float = DEFAULT_EPS) -> CharacterTable:
    """Assemble a canonical CharacterTable from raw character value rows.

    Verifies each row is a unit-normalized ring homomorphism, puts the
    basis-positive (Frobenius-Perron) character first, sorts the rest
    lexicographically, and computes the formal codegrees.
    """
    rows = np.asarray(rows, dtype=complex)
    r = ring.rank
    if rows.shape != (r, r):
        raise DimensionMismatch(f"expected {r} characters of length {r}, got {rows.shape}")
    cleaned = []
    for row in rows:
        if abs(row[ring.unit] - 1.0) > AGGREGATE_EPS:
            raise DegenerateCombination("character row is not normalized at the unit")
        if _multiplicativity_residual(ring, row) > AGGREGATE_EPS:
            raise DegenerateCombination("character row is not multiplicative")
        if np.abs(row.imag).max() < 1e-12 * max(1.0, np.abs(row).max()):
            row = row.real.astype(complex)
        cleaned.append(row)

    fp_rows = [t for t, row in enumerate(cleaned)
               if np.abs(row.imag).max() < AGGREGATE_EPS and row.real.min() > eps]
    if len(fp_rows) != 1:
        raise DegenerateCombination(
            f"expected exactly one basis-positive character, found {len(fp_rows)}")
    fp_row = cleaned.pop(fp_rows[0])
    ordered = [fp_row] + sorted(cleaned, key=_sort_key)
    characters = np.array(ordered)

    dual = list(ring.dual)
    codegrees_c = np.array([np.sum(row * row[dual]) for row in characters])
    if np.abs(codegrees_c.imag).max() > AGGREGATE_EPS or codegrees_c.real.min() <= 0:
        raise DegenerateCombination("formal codegrees are not real positive")
    codegrees = codegrees_c.real
    if abs(np.sum(1.0 / codegrees) - 1.0) > AGGREGATE_EPS:
        raise DegenerateCombination("codegree reciprocals do not sum to 1")
    return CharacterTable(characters=characters, codegrees=codegrees)


def character_table(ring: FusionRing, eps: float = DEFAULT_EPS,
                    seed: int = DEFAULT_SEED) -> CharacterTable:
    """Character table of a commutative fusion ring.

    The matrices A_i^T commute and share r one-dimensional eigenspaces;
    the common eigenvectors, normalized at the unit coordinate, are exactly
    the character value vectors. We diagonalize one random real linear
    combination (deterministic seed, default 0) and retry with seed+1, up
    to 8 times, on eigenvalue collision or any verification failure.
    """
    if not is_commutative(ring):
        raise NonCommutative("character table requires a commutative Grothendieck ring")
    r = ring.rank
    if r == 1:
        return CharacterTable(characters=np.ones((1, 1), dtype=complex),
                              codegrees=np.ones(1))

    last_error: Exception | None = None
    for attempt in range(_MAX_RETRIES + 1):
        rng = np.random.default_rng(seed + attempt)
        coeffs = rng.uniform(0.25, 1.0, size=r)
        # T[j][k] = sum_i c_i N[i][j][k] is the combination sum_i c_i A_i^T
        T = np.einsum("i,ijk->jk", coeffs, ring.N.astype(float))
        eigvals, eigvecs = np.linalg.eig(T)
        scale = max(1.0, float(np.abs(eigvals).max()))
        gaps = np.abs(eigvals[:, None] - eigvals[None, :])
        gaps[np.diag_indices(r)] = np.inf
        if gaps.min() < 1e-8 * scale:
            last_error = DegenerateCombination("eigenvalue collision in random combination")
            continue
        units = eigvecs[ring.unit, :]
        if np.abs(units).min() < 1e-12:
            last_error = DegenerateCombination("eigenvector vanishes at the unit coordinate")
            continue
        rows = (eigvecs / units[None, :]).T
        try:
            return build_table(ring, rows, eps=eps)
        except DegenerateCombination as exc:
            last_error = exc
            continue
    raise DegenerateCombination(
        f"no usable linear combination after {_MAX_RETRIES + 1} attempts: {last_error}")


def primitive_idempotents(ring: FusionRing, table: CharacterTable) -> IdempotentSet:
    """Solve mu_t(E_s) = delta_ts for the primitive central idempotents.

    With C[t][j] = mu_t(e_j) the idempotent E_s is the s-th column of C^-1;
    E_0 coincides with the regular element divided by the global dimension.
    """
    C = table.characters
    r = C.shape[0]
    if np.linalg.matrix_rank(C) < r or np.linalg.cond(C) > 1e12:
        raise SingularCharacterMatrix("character matrix is numerically singular")
    inv = np.linalg.inv(C)
    return IdempotentSet(idempotents=inv.T.copy())
