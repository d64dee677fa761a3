"""Kernels and centers of objects and characters in a commutative fusion ring.

The kernel of a character is the set of simples on which it equals FPdim;
it always spans a fusion subcategory. The kernel of an object class is the
set of characters taking the FPdim value on it; the object is faithful
exactly when this kernel is trivial, and in that case every simple occurs
in some tensor power of the object (the Brauer property, verified here by
explicit power iteration).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CapExceeded, ClosureViolation, InternalInconsistency, ZeroClass
from .ring import FusionRing, exact_matvec
from .spectral import (
    DEFAULT_EPS,
    CharacterTable,
    FPData,
    fp_character,
    fpdim_of_class,
)
from .subcat import (
    Subcategory,
    closure_defect,
    generated_subcategory,
    is_faithful,
    restrict,
    restriction_order,
)


@dataclass
class BrauerReport:
    """Outcome of the tensor-power search for the constituents of one simple.

    exponents maps each simple found to the least n >= 0 at which it occurs
    in the n-th power of the generator; faithful_expected is the prediction
    from the kernel, faithful_actual the subcategory-closure fact.
    """

    faithful_expected: bool
    exponents: dict[int, int] = field(default_factory=dict)
    cap_used: int = 0
    faithful_actual: bool = True


def _check_class(ring: FusionRing, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x)
    if x.shape != (ring.rank,):
        raise ZeroClass("class vector has the wrong length")
    if all(int(c) == 0 for c in x):
        raise ZeroClass("class vector is zero")
    if any(int(c) < 0 for c in x):
        raise ValueError("object classes must have nonnegative coefficients")
    return x


def kernel_of_character(ring: FusionRing, fp: FPData, table: CharacterTable,
                        t: int, eps: float = DEFAULT_EPS) -> Subcategory:
    """Simples on which character t equals FPdim, as a closed subcategory."""
    mu = table.characters[t]
    members = [j for j in range(ring.rank) if abs(mu[j] - fp.dims[j]) < eps]
    defect = closure_defect(ring, members)
    if defect is not None:
        kind, witness = defect
        raise ClosureViolation(
            f"character kernel not closed under {kind} at {witness}; "
            "lower eps or re-examine the table")
    return Subcategory(members=tuple(sorted(members)))


def kernel_of_class(ring: FusionRing, fp: FPData, table: CharacterTable,
                    x: np.ndarray, eps: float = DEFAULT_EPS) -> frozenset[int]:
    """Characters taking the value FPdim(x) on the class x."""
    x = _check_class(ring, x)
    target = fpdim_of_class(fp, x)
    values = table.characters @ x.astype(complex)
    return frozenset(t for t in range(table.count) if abs(values[t] - target) < eps)


def center_of_class(ring: FusionRing, fp: FPData, table: CharacterTable,
                    x: np.ndarray, eps: float = DEFAULT_EPS) -> frozenset[int]:
    """Characters whose modulus on the class x attains FPdim(x)."""
    x = _check_class(ring, x)
    target = fpdim_of_class(fp, x)
    values = table.characters @ x.astype(complex)
    return frozenset(t for t in range(table.count) if abs(abs(values[t]) - target) < eps)


def default_brauer_cap(ring: FusionRing, i: int) -> int:
    """Wielandt-style cap: (r-1)^2 + 1 + ind on the generated subcategory."""
    from .grading import object_index

    r_sub = len(generated_subcategory(ring, [i]))
    return (r_sub - 1) ** 2 + 1 + object_index(ring, i)


def verify_brauer(ring: FusionRing, fp: FPData, table: CharacterTable,
                  i: int, cap: int | None = None,
                  eps: float = DEFAULT_EPS) -> BrauerReport:
    """Check the tensor-power property of e_i against its kernel.

    Iterates left multiplication by e_i, recording the first exponent at
    which each simple occurs. A trivial kernel must, and a nontrivial one
    must not, produce every simple; the subcategory-closure notion of
    faithfulness must agree with both. CapExceeded is raised when a
    predicted-faithful simple runs out of budget before covering the basis.
    """
    if cap is None:
        cap = default_brauer_cap(ring, i)
    if cap < 1:
        raise ValueError("cap must be at least 1")
    kernel = kernel_of_class(ring, fp, table, ring.basis_vector(i), eps=eps)
    faithful_expected = kernel == {table.fp_index}
    faithful_actual = is_faithful(ring, i)

    exponents: dict[int, int] = {ring.unit: 0}
    A = ring.fusion_matrix(i)
    v = ring.basis_vector(ring.unit)
    for n in range(1, cap + 1):
        v = exact_matvec(A, v)
        for k in map(int, np.nonzero(v)[0]):
            exponents.setdefault(k, n)
        if len(exponents) == ring.rank:
            break
    all_found = len(exponents) == ring.rank

    if faithful_expected and not all_found:
        raise CapExceeded(
            f"kernel of simple {i} is trivial but powers up to {cap} missed "
            f"{ring.rank - len(exponents)} simples (closure says faithful={faithful_actual})")
    if faithful_expected != all_found or faithful_expected != faithful_actual:
        raise InternalInconsistency(
            f"simple {i}: kernel-trivial={faithful_expected}, covered={all_found}, "
            f"closure-faithful={faithful_actual}")
    return BrauerReport(faithful_expected=faithful_expected, exponents=exponents,
                        cap_used=cap, faithful_actual=faithful_actual)


def kernel_via_subring_idempotents(ring: FusionRing, fp: FPData, table: CharacterTable,
                                   i: int, eps: float = DEFAULT_EPS) -> frozenset[int]:
    """Kernel of e_i through the idempotent of its generated subring.

    Forms the regular idempotent of C(e_i), embeds it in the ambient basis,
    and returns the characters evaluating to 1 on it; evaluation on a
    central idempotent is always 0 or 1.
    """
    sub = generated_subcategory(ring, [i])
    small = restrict(ring, sub)
    small_fp = fp_character(small, eps=eps)
    e = np.zeros(ring.rank, dtype=complex)
    for local, ambient in enumerate(restriction_order(ring, sub)):
        e[ambient] = small_fp.dims[local] / small_fp.global_dim
    values = table.characters @ e
    return frozenset(t for t in range(table.count) if abs(values[t] - 1.0) < max(eps, 1e-9))
