"""Fusion subcategories generated by objects, restriction, and faithfulness.

A subcategory is represented by the set of basis indices of its simples;
it must contain the unit and be closed under duals and under constituents
of pairwise products. Faithfulness of a simple is equivalent to
indecomposability of its fusion matrix, which we test exactly by strong
connectivity of the fusion digraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import NotClosed
from .ring import FusionRing


@dataclass(frozen=True)
class Subcategory:
    """Sorted basis indices of the simples of a fusion subcategory."""

    members: tuple[int, ...]

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __len__(self) -> int:
        return len(self.members)


def closure_defect(ring: FusionRing, members: Iterable[int]):
    """First witness that `members` is not closed, or None if it is closed.

    Checks unit membership, duals, and constituents of pairwise products.
    """
    S = set(int(m) for m in members)
    if ring.unit not in S:
        return ("unit", (ring.unit,))
    for i in S:
        if ring.dual[i] not in S:
            return ("dual", (i,))
    for i in S:
        for j in S:
            for k in np.nonzero(ring.N[i, j])[0]:
                if int(k) not in S:
                    return ("product", (i, j, int(k)))
    return None


def generated_subcategory(ring: FusionRing, gens: Iterable[int]) -> Subcategory:
    """Least closed set of simples containing the generators and the unit."""
    S = set(int(g) for g in gens) | {ring.unit}
    while True:
        new = set()
        for i in S:
            if ring.dual[i] not in S:
                new.add(ring.dual[i])
        for i in S:
            for j in S:
                new.update(int(k) for k in np.nonzero(ring.N[i, j])[0] if int(k) not in S)
        if not new:
            return Subcategory(members=tuple(sorted(S)))
        S |= new


def is_faithful(ring: FusionRing, i: int) -> bool:
    """True iff the subcategory generated by e_i is the whole ring."""
    return len(generated_subcategory(ring, [i])) == ring.rank


def is_indecomposable_matrix(A: np.ndarray) -> bool:
    """Strong connectivity of the digraph with an edge j -> k when A[k][j] > 0.

    Equivalent to A admitting no partition of the index set into nonempty
    M, N with A[m][n] = 0 for m in M, n in N. Exact integer test, no
    floating point involved.
    """
    A = np.asarray(A)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("matrix must be square")
    fwd = [list(np.nonzero(A[:, j])[0]) for j in range(n)]
    bwd = [list(np.nonzero(A[j, :])[0]) for j in range(n)]
    for adj in (fwd, bwd):
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if int(v) not in seen:
                    seen.add(int(v))
                    stack.append(int(v))
        if len(seen) != n:
            return False
    return True


def restriction_order(ring: FusionRing, sub: Subcategory) -> list[int]:
    """Ambient indices of the subcategory members, unit first."""
    return [ring.unit] + [m for m in sub.members if m != ring.unit]


def restrict(ring: FusionRing, sub: Subcategory) -> FusionRing:
    """Fusion ring on the members of a closed subcategory, unit re-indexed to 0."""
    defect = closure_defect(ring, sub.members)
    if defect is not None:
        kind, witness = defect
        raise NotClosed(f"member set not closed under {kind}, witness {witness}")
    order = restriction_order(ring, sub)
    pos = {a: p for p, a in enumerate(order)}
    idx = np.asarray(order)
    N_sub = ring.N[np.ix_(idx, idx, idx)]
    labels = tuple(ring.labels[a] for a in order)
    dual = tuple(pos[ring.dual[a]] for a in order)
    return FusionRing(labels=labels, N=N_sub, dual=dual, unit=0)
