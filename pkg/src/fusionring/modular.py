"""Modular data: S-matrices, Verlinde reconstruction, and centralizers.

An S-matrix is accepted at any positive scale: symmetry, nondegeneracy
(S conj(S) is a positive multiple of the identity) and pseudo-unitarity
(unit row positive and proportional to the FP dimensions) are validated,
and the scale is absorbed into global_dim. Normalized rows of S are the
ring homomorphisms of the Grothendieck ring; their kernels and centers
give centralizers and projective centralizers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ClosureViolation,
    DegenerateCombination,
    DimensionMismatch,
    InternalInconsistency,
    InvalidRing,
    InvariantFailed,
    NonIntegral,
    ZeroEntry,
)
from .ring import FusionRing, dual_from_structure, validate
from .spectral import (
    AGGREGATE_EPS,
    DEFAULT_EPS,
    CharacterTable,
    FPData,
    build_table,
    fp_character,
)
from .subcat import Subcategory, closure_defect

_VERLINDE_INT_TOL = 1e-6


@dataclass
class ModularData:
    """A validated S-matrix bound to its fusion ring.

    global_dim is the scalar g with S conj(S) = g * I; for a quantum-trace
    normalized S it equals the global FP dimension, for a unitary S it is 1.
    """

    S: np.ndarray
    ring: FusionRing
    global_dim: float


def modular_data(ring: FusionRing, S: np.ndarray, eps: float = AGGREGATE_EPS) -> ModularData:
    """Validate an S-matrix against a ring and package it as ModularData."""
    S = np.asarray(S, dtype=complex)
    r = ring.rank
    if S.shape != (r, r):
        raise DimensionMismatch(f"S-matrix shape {S.shape} does not match rank {r}")
    scale = float(np.abs(S).max())
    if scale == 0.0:
        raise InvariantFailed("S-matrix is zero")
    if np.abs(S - S.T).max() > eps * scale:
        raise InvariantFailed("S-matrix is not symmetric")
    G = S @ S.conj()
    g = float(np.mean(np.diag(G)).real)
    if g <= 0 or np.abs(G - g * np.eye(r)).max() > eps * max(1.0, g):
        raise InvariantFailed("S conj(S) is not a positive multiple of the identity")
    row = S[ring.unit]
    if np.abs(row.imag).max() > eps * scale or row.real.min() <= 0:
        raise InvariantFailed("unit row of S is not strictly positive (pseudo-unitarity)")
    fp = fp_character(ring)
    dims = row.real / row.real[ring.unit]
    if np.abs(dims - fp.dims).max() > eps * max(1.0, fp.dims.max()):
        raise InvariantFailed("unit row of S is not proportional to the FP dimensions")
    return ModularData(S=S, ring=ring, global_dim=g)


def characters_from_smatrix(md: ModularData, eps: float = DEFAULT_EPS) -> CharacterTable:
    """Character table read off the S-matrix rows: s_t(Y) = S[t][Y] / S[t][unit]."""
    S = md.S
    r = md.ring.rank
    scale = float(np.abs(S).max())
    units = S[:, md.ring.unit]
    small = np.abs(units) < 1e-12 * scale
    if small.any():
        raise ZeroEntry(
            f"S[t][unit] vanishes for t={int(np.argmax(small))}; not pseudo-unitary")
    rows = S / units[:, None]
    try:
        return build_table(md.ring, rows, eps=eps)
    except DegenerateCombination as exc:
        raise InvariantFailed(f"S-matrix rows are not ring characters: {exc}") from exc


def verlinde_ring(S: np.ndarray, labels: tuple[str, ...] | None = None) -> FusionRing:
    """Reconstruct structure constants from a nondegenerate S-matrix.

    With U = S normalized to a unitary matrix, the structure constants are
    N[i][j][k] = sum_m U[i][m] U[j][m] conj(U[k][m]) / U[0][m], rounded to
    the nearest integer (tolerance 1e-6). The result must validate.
    """
    S = np.asarray(S, dtype=complex)
    r = S.shape[0]
    if S.shape != (r, r):
        raise DimensionMismatch("S-matrix must be square")
    G = S @ S.conj()
    g = float(np.mean(np.diag(G)).real)
    if g <= 0 or np.abs(G - g * np.eye(r)).max() > AGGREGATE_EPS * max(1.0, g):
        raise InvalidRing("S conj(S) is not a positive multiple of the identity")
    U = S / np.sqrt(g)
    if np.abs(U[0]).min() < 1e-12:
        raise InvalidRing("unit row of S has a vanishing entry")
    weights = U.conj() / U[0][None, :]
    Nc = np.einsum("im,jm,km->ijk", U, U, weights)
    Nr = np.rint(Nc.real)
    if np.abs(Nc - Nr).max() > _VERLINDE_INT_TOL:
        worst = np.unravel_index(np.argmax(np.abs(Nc - Nr)), Nc.shape)
        raise NonIntegral(
            f"Verlinde coefficient at {tuple(int(x) for x in worst)} is not integral: "
            f"{Nc[worst]:.8g}")
    N = Nr.astype(np.int64)
    if N.min() < 0:
        raise InvalidRing("Verlinde reconstruction produced negative multiplicities")
    if labels is None:
        labels = tuple(f"x{i}" for i in range(r))
    try:
        dual = dual_from_structure(N, 0)
    except Exception as exc:
        raise InvalidRing(f"reconstructed tensor has no duality: {exc}") from exc
    ring = FusionRing(labels=labels, N=N, dual=dual, unit=0)
    report = validate(ring)
    if not report.valid:
        axioms = ", ".join(name for name, _ in report.violations)
        raise InvalidRing(f"reconstructed ring violates: {axioms}")
    return ring


def _s_character(md: ModularData, i: int) -> np.ndarray:
    unit = md.ring.unit
    if abs(md.S[i, unit]) < 1e-12 * float(np.abs(md.S).max()):
        raise ZeroEntry(f"S[{i}][unit] vanishes")
    return md.S[i] / md.S[i, unit]


def centralizer(md: ModularData, i: int, eps: float = DEFAULT_EPS) -> Subcategory:
    """Simples centralizing e_i: the kernel of the S-matrix character of e_i."""
    fp = fp_character(md.ring)
    s = _s_character(md, i)
    members = [j for j in range(md.ring.rank) if abs(s[j] - fp.dims[j]) < eps]
    defect = closure_defect(md.ring, members)
    if defect is not None:
        kind, witness = defect
        raise ClosureViolation(f"centralizer not closed under {kind} at {witness}")
    return Subcategory(members=tuple(sorted(members)))


def projective_centralizer(md: ModularData, i: int, eps: float = DEFAULT_EPS) -> frozenset[int]:
    """Simples projectively centralizing e_i: |s_i(Y)| attains FPdim(Y)."""
    fp = fp_character(md.ring)
    s = _s_character(md, i)
    return frozenset(j for j in range(md.ring.rank) if abs(abs(s[j]) - fp.dims[j]) < eps)


def invertibles(ring: FusionRing, fp: FPData, eps: float = DEFAULT_EPS) -> frozenset[int]:
    """Simples of FP dimension 1; cross-checked exactly via e_j * e_{j*} = unit."""
    by_dim = frozenset(j for j in range(ring.rank) if abs(fp.dims[j] - 1.0) < eps)
    unit_vec = ring.basis_vector(ring.unit)
    exact = frozenset(
        j for j in range(ring.rank)
        if np.array_equal(
            ring.multiply(ring.basis_vector(j), ring.basis_vector(ring.dual[j])), unit_vec))
    if by_dim != exact:
        raise InternalInconsistency(
            f"dimension-1 set {sorted(by_dim)} disagrees with exact invertibles {sorted(exact)}")
    return exact
