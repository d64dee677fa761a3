"""Imprimitivity index, object order, and the universal cyclic grading.

The index of a simple X is the period of the fusion digraph of X on the
subcategory it generates; it equals the number of maximal-modulus
eigenvalues of the fusion matrix and the order of the universal grading
group of that subcategory. The grading itself is computed combinatorially
from tensor-power exponents and cross-checked against the character whose
value on X is exp(2*pi*i/ind) * FPdim(X).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapExceeded, InternalInconsistency, MethodDisagreement
from .ring import FusionRing, exact_matvec
from .spectral import (
    DEFAULT_EPS,
    DEFAULT_SEED,
    AGGREGATE_EPS,
    CharacterTable,
    FPData,
    character_table,
    fp_character,
    is_commutative,
)
from .subcat import generated_subcategory, is_indecomposable_matrix, restrict, restriction_order


@dataclass
class GradingData:
    """Cyclic grading of the subcategory generated by one simple.

    grades maps each ambient simple index of that subcategory to its residue
    modulo the index; components[a] lists the simples of grade a. When the
    grading was confirmed against a character of the restricted ring,
    character_checked is True (it is False when that ring is noncommutative
    and only the exponent construction applies).
    """

    index: int
    order: int
    grades: dict[int, int]
    components: tuple[tuple[int, ...], ...]
    character_checked: bool = True


def _digraph_period(A: np.ndarray) -> int:
    """Period (gcd of cycle lengths) of the strongly connected digraph of A.

    Uses breadth-first levels from node 0: the period is the gcd of
    level(u) + 1 - level(v) over all edges u -> v.
    """
    n = A.shape[0]
    adj = [list(map(int, np.nonzero(A[:, j])[0])) for j in range(n)]
    level = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in level:
                    level[v] = level[u] + 1
                    nxt.append(v)
        frontier = nxt
    g = 0
    for u in range(n):
        for v in adj[u]:
            g = math.gcd(g, level[u] + 1 - level[v])
    return abs(g)


def object_index(ring: FusionRing, i: int) -> int:
    """Imprimitivity index of e_i: the period of its fusion digraph on C(e_i)."""
    sub = generated_subcategory(ring, [i])
    small = restrict(ring, sub)
    loc = restriction_order(ring, sub).index(i)
    A = small.fusion_matrix(loc)
    if not is_indecomposable_matrix(A):
        raise InternalInconsistency(
            "fusion matrix of a generator is not strongly connected on its own subcategory")
    return _digraph_period(A)


def object_order(ring: FusionRing, i: int, cap: int | None = None) -> int:
    """Least n >= 1 such that the n-th power of e_i contains the unit."""
    sub = generated_subcategory(ring, [i])
    if cap is None:
        r = len(sub)
        cap = r * r * object_index(ring, i) + r
    if cap < 1:
        raise ValueError("cap must be at least 1")
    A = ring.fusion_matrix(i)
    v = ring.basis_vector(ring.unit)
    for n in range(1, cap + 1):
        v = exact_matvec(A, v)
        if v[ring.unit] > 0:
            return n
    raise CapExceeded(f"unit not reached in powers of simple {i} up to {cap}")


def _exponent_grades(ring: FusionRing, i: int, members: tuple[int, ...], ind: int) -> dict[int, int]:
    """Grade each simple of C(e_i) by tensor-power exponent modulo ind."""
    grades: dict[int, int] = {ring.unit: 0}
    A = ring.fusion_matrix(i)
    v = ring.basis_vector(ring.unit)
    n = 0
    cap = len(members) * max(ind, 1) + 1
    while len(grades) < len(members) and n <= cap:
        n += 1
        v = exact_matvec(A, v)
        for k in map(int, np.nonzero(v)[0]):
            g = n % ind
            if k not in grades:
                grades[k] = g
            elif grades[k] != g:
                raise InternalInconsistency(
                    f"simple {k} occurs in powers of {i} at incompatible exponents mod {ind}")
    if len(grades) < len(members):
        raise InternalInconsistency("powers of the generator missed part of its subcategory")
    return grades


def universal_grading(ring: FusionRing, i: int,
                      fp: FPData | None = None,
                      table: CharacterTable | None = None,
                      eps: float = DEFAULT_EPS,
                      seed: int = DEFAULT_SEED) -> GradingData:
    """Universal cyclic grading of the subcategory generated by e_i.

    Grades are computed by the exponent construction (grade n mod ind for
    constituents of the n-th power) and, when the restricted ring is
    commutative, cross-checked against the character taking the value
    xi * FPdim on the generator, xi = exp(2*pi*i/ind). Disagreement between
    the two assignments raises MethodDisagreement. The ambient fp/table are
    reused when the generator is faithful in the ambient ring.
    """
    sub = generated_subcategory(ring, [i])
    order_list = restriction_order(ring, sub)
    ind = object_index(ring, i)
    o = object_order(ring, i)
    grades = _exponent_grades(ring, i, sub.members, ind)

    character_checked = False
    small = None
    if len(sub) == ring.rank and table is not None and fp is not None and is_commutative(ring):
        small, loc, small_fp, small_table = ring, i, fp, table
    else:
        candidate = restrict(ring, sub)
        if is_commutative(candidate):
            small = candidate
            loc = order_list.index(i)
            small_fp = fp_character(small, eps=eps)
            small_table = character_table(small, eps=eps, seed=seed)

    if small is not None:
        xi = np.exp(2j * np.pi / ind)
        target = xi * small_fp.dims[loc]
        hits = [t for t in range(small_table.count)
                if abs(small_table.characters[t, loc] - target) < AGGREGATE_EPS * max(1.0, abs(target))]
        if not hits:
            raise MethodDisagreement(
                f"no character takes the value xi*FPdim on the generator (ind={ind})")
        mu = small_table.characters[hits[0]]
        for local, ambient in enumerate(order_list):
            ratio = mu[local] / small_fp.dims[local]
            a = int(round((np.angle(ratio) / (2 * np.pi)) * ind)) % ind
            if abs(ratio - xi**a) > AGGREGATE_EPS:
                raise MethodDisagreement(
                    f"character value on simple {ambient} is not a power of xi")
            if a != grades[ambient]:
                raise MethodDisagreement(
                    f"simple {ambient}: exponent grade {grades[ambient]} vs character grade {a}")
        character_checked = True

    components = tuple(
        tuple(sorted(k for k, g in grades.items() if g == a)) for a in range(ind))
    return GradingData(index=ind, order=o, grades=grades,
                       components=components, character_checked=character_checked)
