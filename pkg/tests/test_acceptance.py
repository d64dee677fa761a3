"""Acceptance suite: the contract checks, one test (and one printed line) each.

Run with `pytest tests/test_acceptance.py -v` (add -s to see the lines when
everything passes). Tolerances are fixed here and are not calibrated
anywhere else: 1e-9 for single scalars, 1e-8 for aggregate identities.
"""

import json
import math

import numpy as np
import pytest

from conftest import COMMUTATIVE_NAMES, entry, fp_of, ring_of, table_of
from fusionring import (
    FusionRing,
    adjoint_class,
    center_of_class,
    centralizer,
    character_table,
    characters_from_smatrix,
    fp_character,
    generated_subcategory,
    invertibles,
    is_faithful,
    is_indecomposable_matrix,
    kernel_of_class,
    kernel_via_subring_idempotents,
    load_ring,
    load_smatrix,
    object_index,
    object_order,
    primitive_idempotents,
    projective_centralizer,
    restrict,
    universal_grading,
    validate,
    verify_brauer,
    verlinde_ring,
)
from fusionring.errors import DualMismatch, NonCommutative, VerlindeMismatch
from fusionring.ring import exact_matvec
from fusionring.subcat import restriction_order

SCALAR_TOL = 1e-9
AGG_TOL = 1e-8
SQRT2 = math.sqrt(2.0)
SQRT5 = math.sqrt(5.0)


def _report(n, text):
    print(f"[acceptance] criterion {n}: PASS ({text})")


def _rows_as_set(table, tol=AGG_TOL):
    return [np.asarray(r) for r in table.characters]


def _match_rows(actual, expected, tol=AGG_TOL):
    used = set()
    for row in actual:
        hit = next((k for k, exp in enumerate(expected)
                    if k not in used and np.abs(np.asarray(row) - np.asarray(exp, dtype=complex)).max() < tol),
                   None)
        assert hit is not None, f"unmatched character row {np.round(row, 6)}"
        used.add(hit)
    assert len(used) == len(expected)


def test_criterion_1_ising_suite():
    ring, fp, table = ring_of("ising"), fp_of("ising"), table_of("ising")
    sigma, psi = ring.index_of("sigma"), ring.index_of("psi")
    assert abs(fp.dims[sigma] - SQRT2) < SCALAR_TOL
    _match_rows(table.characters, [(1, 1, SQRT2), (1, 1, -SQRT2), (1, -1, 0)])
    assert np.abs(np.sort(table.codegrees) - [2.0, 4.0, 4.0]).max() < AGG_TOL
    assert object_index(ring, sigma) == 2
    assert object_order(ring, sigma) == 2
    grading = universal_grading(ring, sigma, fp, table)
    assert grading.components == ((0, psi), (sigma,))
    assert is_faithful(ring, sigma)
    assert kernel_of_class(ring, fp, table, ring.basis_vector(sigma)) == {0}
    assert not is_faithful(ring, psi)
    assert len(kernel_of_class(ring, fp, table, ring.basis_vector(psi))) == 2
    _report(1, "Ising dims, characters, codegrees, grading, kernels")


def test_criterion_2_fibonacci_suite():
    ring, fp, table = ring_of("fibonacci"), fp_of("fibonacci"), table_of("fibonacci")
    tau = ring.index_of("tau")
    assert abs(fp.dims[tau] - (1 + SQRT5) / 2) < SCALAR_TOL
    expected = [(5 + SQRT5) / 2, (5 - SQRT5) / 2]
    assert np.abs(np.sort(table.codegrees) - np.sort(expected)).max() < AGG_TOL
    assert object_index(ring, tau) == 1
    assert object_order(ring, tau) == 2
    assert is_faithful(ring, tau)
    _report(2, "Fibonacci dims, codegrees, index, order")


def test_criterion_3_rep_s3():
    ring, fp, table = ring_of("rep_s3"), fp_of("rep_s3"), table_of("rep_s3")
    _match_rows(table.characters, [(1, 1, 2), (1, -1, 0), (1, 1, -1)])
    eps_idx = ring.index_of("eps")
    kernel = kernel_of_class(ring, fp, table, ring.basis_vector(eps_idx))
    # classes e and (123): the characters whose values are (1,1,2) and (1,1,-1)
    values = {tuple(np.round(table.characters[t].real).astype(int)) for t in kernel}
    assert values == {(1, 1, 2), (1, 1, -1)}
    V = ring.index_of("V")
    report = verify_brauer(ring, fp, table, V, cap=8)
    assert set(report.exponents) == {0, 1, 2}
    assert max(report.exponents.values()) <= 2
    assert object_index(ring, V) == 1
    _report(3, "Rep(S3) classical table, A3 kernel, tensor-power coverage")


def test_criterion_4_rep_q8():
    ring, fp, table = ring_of("rep_q8"), fp_of("rep_q8"), table_of("rep_q8")
    kernel = kernel_of_class(ring, fp, table, adjoint_class(ring))
    assert len(kernel) == 2
    V = ring.index_of("V")
    grading = universal_grading(ring, V, fp, table)
    assert object_index(ring, V) == 2 == grading.index == len(grading.components)
    assert grading.components[1] == (V,)
    _report(4, "Rep(Q8) center recovery and grading of C(V)")


def test_criterion_5_pointed_z12():
    name = "pointed_zn(12)"
    ring, fp, table = ring_of(name), fp_of(name), table_of(name)
    g = ring.index_of("g1")
    assert object_index(ring, g) == 12
    assert object_order(ring, g) == 12
    grading = universal_grading(ring, g, fp, table)
    assert all(len(comp) == 1 for comp in grading.components)
    assert len(grading.components) == grading.index == 12
    _report(5, "Z_12 generator: ind = order = grading group size = 12")


def test_criterion_6_theorem_sweep():
    checked = 0
    for name in COMMUTATIVE_NAMES:
        ring, fp, table = ring_of(name), fp_of(name), table_of(name)
        adj_kernel = kernel_of_class(ring, fp, table, adjoint_class(ring))
        center_meet = set(range(ring.rank))
        for i in range(ring.rank):
            e_i = ring.basis_vector(i)
            trivial_kernel = kernel_of_class(ring, fp, table, e_i) == {0}
            faithful = is_faithful(ring, i)
            indecomposable = is_indecomposable_matrix(ring.fusion_matrix(i))
            assert trivial_kernel == faithful == indecomposable, (name, i)
            report = verify_brauer(ring, fp, table, i)
            assert report.faithful_expected == faithful

            ind = object_index(ring, i)
            assert object_order(ring, i) % ind == 0, (name, i)

            cap = 3 * ring.rank * ind
            A = ring.fusion_matrix(i)
            v = ring.basis_vector(ring.unit)
            first = {ring.unit: 0}
            for n in range(1, cap + 1):
                v = exact_matvec(A, v)
                for k in map(int, np.nonzero(v)[0]):
                    if k in first:
                        assert (n - first[k]) % ind == 0, (name, i, k, n)
                    else:
                        first[k] = n

            sub = generated_subcategory(ring, [i])
            small = restrict(ring, sub)
            loc = restriction_order(ring, sub).index(i)
            small_fp = fp_character(small)
            small_table = character_table(small)
            centre = center_of_class(small, small_fp, small_table, small.basis_vector(loc))
            assert len(centre) == ind, (name, i)

            assert (kernel_via_subring_idempotents(ring, fp, table, i)
                    == kernel_of_class(ring, fp, table, e_i)), (name, i)

            xxstar = ring.multiply(e_i, ring.basis_vector(ring.dual[i]))
            center_i = center_of_class(ring, fp, table, e_i)
            assert kernel_of_class(ring, fp, table, xxstar) == center_i, (name, i)
            center_meet &= center_i
            checked += 1
        assert adj_kernel == center_meet, name
    _report(6, f"theorem sweep over {len(COMMUTATIVE_NAMES)} rings, {checked} simples, zero failures")


def test_criterion_7_spectral_identities():
    for name in COMMUTATIVE_NAMES:
        ring, fp, table = ring_of(name), fp_of(name), table_of(name)
        r = ring.rank
        C = table.characters
        assert np.abs(C.imag[np.ix_([0], range(r))]).max() < AGG_TOL  # FP row real
        assert table.codegrees.min() > 0
        gram = np.einsum("t,ti,tj->ij", 1.0 / table.codegrees, C, C.conj())
        assert np.abs(gram - np.eye(r)).max() < AGG_TOL, name
        assert abs(np.sum(1.0 / table.codegrees) - 1.0) < AGG_TOL, name
        adj_values = C @ adjoint_class(ring).astype(complex)
        assert np.abs(adj_values - table.codegrees).max() < AGG_TOL, name
        ids = primitive_idempotents(ring, table).idempotents
        for s in range(r):
            for t in range(r):
                prod = ring.multiply(ids[s], ids[t])
                expect = ids[s] if s == t else np.zeros(r)
                assert np.abs(prod - expect).max() < AGG_TOL, (name, s, t)
        assert np.abs(ids[0] - fp.dims / fp.global_dim).max() < AGG_TOL, name
    _report(7, f"spectral identities over {len(COMMUTATIVE_NAMES)} commutative rings")


def test_criterion_8_modular_suite():
    names = (["ising", "fibonacci"] + [f"su2_k({k})" for k in range(1, 7)]
             + [f"pointed_zn({n})" for n in range(1, 25)])
    for name in names:
        md = entry(name).smatrix
        ring, fp = md.ring, fp_of(name)
        rebuilt = verlinde_ring(md.S)
        assert np.array_equal(rebuilt.N, ring.N), name
        table = characters_from_smatrix(md)
        assert np.abs(table.characters - table_of(name).characters).max() < AGG_TOL, name
        inv = invertibles(ring, fp)
        for i in range(ring.rank):
            trivial = centralizer(md, i).members == (ring.unit,)
            assert trivial == is_faithful(ring, i), (name, i)
    ising_md = entry("ising").smatrix
    ising = ising_md.ring
    sigma, psi = ising.index_of("sigma"), ising.index_of("psi")
    assert centralizer(ising_md, sigma).members == (0,)
    assert projective_centralizer(ising_md, sigma) == {0, psi}
    assert invertibles(ising, fp_of("ising")) == {0, psi}
    for name, gen_label in (("ising", "sigma"), ("fibonacci", "tau")):
        md = entry(name).smatrix
        gen = md.ring.index_of(gen_label)
        spanned = generated_subcategory(md.ring, projective_centralizer(md, gen))
        assert set(spanned.members) == invertibles(md.ring, fp_of(name)), name
    _report(8, f"modular suite over {len(names)} S-matrices")


def test_criterion_9_robustness(tmp_path):
    ising = ring_of("ising")

    def tensor(name):
        N = np.array(ring_of(name).N)
        N.setflags(write=True)
        return N

    fixtures = []
    N = tensor("ising")
    N[0, 1, 2] = 1
    fixtures.append(("unit", FusionRing(labels=ising.labels, N=N, dual=(0, 1, 2))))
    N = tensor("ising")
    N[2, 2, 1] = 2
    fixtures.append(("associativity", FusionRing(labels=ising.labels, N=N, dual=(0, 1, 2))))
    z4 = ring_of("pointed_zn(4)")
    fixtures.append(("duality", FusionRing(labels=z4.labels, N=z4.N, dual=(0, 1, 2, 3))))
    z3 = ring_of("pointed_zn(3)")
    N = tensor("pointed_zn(3)")
    N[1, 1, 1] = 1
    fixtures.append(("frobenius", FusionRing(labels=z3.labels, N=N, dual=z3.dual)))
    fixtures.append(("involution", FusionRing(labels=z4.labels, N=z4.N, dual=(0, 2, 3, 1))))

    for axiom, broken in fixtures:
        report = validate(broken)
        assert not report.valid, axiom
        assert axiom in {name for name, _ in report.violations}, axiom

    with pytest.raises(NonCommutative):
        character_table(ring_of("vec_s3"))

    path = tmp_path / "dual.json"
    path.write_text(json.dumps({
        "name": "z3", "rank": 3, "labels": list(z3.labels), "unit": 0,
        "dual": [0, 1, 2], "N": z3.N.tolist()}))
    with pytest.raises(DualMismatch):
        load_ring(path)

    klein = np.array([[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]],
                     dtype=float) / 2.0
    spath = tmp_path / "s.json"
    spath.write_text(json.dumps(
        {"ring": "z4", "S": [[[x, 0.0] for x in row] for row in klein]}))
    with pytest.raises(VerlindeMismatch):
        load_smatrix(spath, ring_of("pointed_zn(4)"))
    _report(9, "five axiom fixtures, NonCommutative, DualMismatch, VerlindeMismatch")
