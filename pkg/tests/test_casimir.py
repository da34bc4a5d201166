import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsymlie import casimir as cas
from qsymlie import generators as g
from qsymlie import linalg as la
from qsymlie import reptheory as rt


def sum_of_two_body_squares(d, n):
    """A = sum over the d^2-1 traceless slots of F_(n-2, 2 at slot k)."""
    dim = d**n
    a = np.zeros((dim, dim), dtype=complex)
    for k in range(1, d * d):
        counts = [0] * (d * d)
        counts[0] = n - 2
        counts[k] = 2
        a += g.symmetric_sum(counts, d, n)
    return a


class TestCasimirSet:
    def test_qutrit_set(self):
        cs = cas.casimir_set(3, 2)
        assert cs.C3 is not None
        cs.check()

    def test_qubit_set_has_no_cubic(self):
        cs = cas.casimir_set(2, 3)
        assert cs.C3 is None
        cs.check()


class TestC2Identities:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_qubit_affine_form(self, n):
        c2 = cas.build_C2(2, n)
        a = sum_of_two_body_squares(2, n)
        assert np.linalg.norm(c2 - 3 * n * np.eye(2**n) - 2 * a) <= 1e-10

    @pytest.mark.parametrize("n", [2, 3])
    def test_qutrit_affine_form(self, n):
        c2 = cas.build_C2(3, n)
        a = sum_of_two_body_squares(3, n)
        assert np.linalg.norm(c2 - (16 * n / 3) * np.eye(3**n) - 2 * a) <= 1e-10

    def test_commutes_with_collectives_and_permutations(self):
        c2 = cas.build_C2(3, 3)
        for k in range(1, 9):
            f = g.hat_f(k, 3, 3)
            assert np.linalg.norm(c2 @ f - f @ c2) <= 1e-9
        for p in itertools.permutations(range(3)):
            u = g.permutation_operator(p, 3)
            assert np.linalg.norm(c2 @ u - u @ c2) <= 1e-9

    def test_qutrit_spectrum_clusters(self):
        w, _ = la.hermitian_eig(cas.build_C2(3, 3))
        cl = la.cluster_eigenvalues(w)
        assert sorted(cl.sizes) == [1, 10, 16]
        assert len(cl.clusters) == 3

    def test_four_qubit_spectrum_clusters(self):
        w, _ = la.hermitian_eig(cas.build_C2(2, 4))
        cl = la.cluster_eigenvalues(w, 1e-8)
        assert sorted(cl.sizes) == [2, 5, 9]


@pytest.fixture(scope="module")
def c3():
    return cas.build_C3(3, 3)


class TestC3:
    def test_hermitian(self, c3):
        assert la.is_hermitian(c3)

    def test_commutes_with_collectives(self, c3):
        for k in range(1, 9):
            f = g.hat_f(k, 3, 3)
            assert np.linalg.norm(c3 @ f - f @ c3) <= 1e-9

    def test_commutes_with_permutations_and_c2(self, c3):
        c2 = cas.build_C2(3, 3)
        assert np.linalg.norm(c2 @ c3 - c3 @ c2) <= 1e-9
        for p in itertools.permutations(range(3)):
            u = g.permutation_operator(p, 3)
            assert np.linalg.norm(c3 @ u - u @ c3) <= 1e-9

    def test_scalar_on_each_block(self, c3, qutrit_blocks):
        for b in qutrit_blocks:
            sub = b.basis.conj().T @ c3 @ b.basis
            lam = np.trace(sub) / b.block_dim
            assert np.linalg.norm(sub - lam * np.eye(b.block_dim)) <= 1e-9

    def test_rejects_other_d(self):
        with pytest.raises(ValueError):
            cas.build_C3(2, 3)


class Testc2Formula:
    def test_degenerate_pair(self):
        assert cas.c2_eigenvalue(5, 2) == 60
        assert cas.c2_eigenvalue(2, 5) == 60

    def test_trivial(self):
        assert cas.c2_eigenvalue(0, 0) == 0

    @given(st.integers(0, 20), st.integers(0, 20))
    @settings(max_examples=100, deadline=None)
    def test_symmetry(self, p, q):
        assert cas.c2_eigenvalue(p, q) == cas.c2_eigenvalue(q, p)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            cas.c2_eigenvalue(-1, 0)


def brute_force_equal_c2(p0, q0, box=40):
    target = cas.c2_eigenvalue(p0, q0)
    return sorted(
        (p, q)
        for p in range(box)
        for q in range(box)
        if cas.c2_eigenvalue(p, q) == target
    )


class TestDegeneracySearch:
    def test_example_pair(self):
        assert cas.degeneracy_search(5, 2) == [(2, 5), (5, 2)]
        assert cas.degeneracy_search(2, 5) == [(2, 5), (5, 2)]

    def test_origin(self):
        assert cas.degeneracy_search(0, 0) == [(0, 0)]

    @given(st.integers(0, 12), st.integers(0, 12))
    @settings(max_examples=60, deadline=None)
    def test_matches_brute_force(self, p0, q0):
        assert cas.degeneracy_search(p0, q0) == brute_force_equal_c2(p0, q0)

    def test_n12_degeneracy_is_admissible(self):
        # both (5,2) and (2,5) occur among the 12-qutrit labels, so C2 alone
        # cannot separate them there
        labels = rt.admissible_reps(12, 3)
        assert (5, 2) in labels and (2, 5) in labels
        assert cas.c2_eigenvalue(5, 2) == cas.c2_eigenvalue(2, 5)


class TestIsotypicBlocks:
    def test_three_qubits(self):
        blocks = cas.isotypic_blocks(2, 3)
        got = {b.label: (b.block_dim, b.irrep_dim, b.multiplicity) for b in blocks}
        assert got == {(2, 1): (4, 2, 2), (3, 0): (4, 4, 1)}

    def test_three_qutrits(self, qutrit_blocks):
        got = {b.label: (b.block_dim, b.irrep_dim, b.multiplicity) for b in qutrit_blocks}
        assert got == {
            (1, 1, 1): (1, 1, 1),
            (2, 1, 0): (16, 8, 2),
            (3, 0, 0): (10, 10, 1),
        }
        assert sum(b.block_dim for b in qutrit_blocks) == 27

    def test_bases_orthonormal_and_disjoint(self, qutrit_blocks):
        stacked = np.hstack([b.basis for b in qutrit_blocks])
        assert np.allclose(stacked.conj().T @ stacked, np.eye(27))

    def test_c2_scalar_per_block(self, qutrit_blocks):
        c2 = cas.build_C2(3, 3)
        for b in qutrit_blocks:
            sub = b.basis.conj().T @ c2 @ b.basis
            lam = np.trace(sub) / b.block_dim
            assert np.linalg.norm(sub - lam * np.eye(b.block_dim)) <= 1e-8

    def test_symmetric_sector_matches_dicke_span(self, qutrit_blocks):
        sym = next(b for b in qutrit_blocks if b.label == (3, 0, 0))
        _, dicke = g.dicke_basis(3, 3)
        # same projector
        assert np.allclose(sym.projector(), dicke @ dicke.conj().T, atol=1e-9)

    def test_c3_refinement_at_six_qutrits(self):
        # first C2-degenerate case: labels (4,1,1) and (3,3,0) share c2 = 18
        blocks = cas.isotypic_blocks(3, 6)
        got = {b.label: (b.block_dim, b.c3_refined) for b in blocks}
        assert got[(4, 1, 1)] == (100, True)
        assert got[(3, 3, 0)] == (50, True)
        assert sum(b.block_dim for b in blocks) == 729
        refined = [b for b in blocks if b.c3_refined]
        assert {b.c2_cluster_index for b in refined} == {refined[0].c2_cluster_index}

    def test_single_site_any_d(self):
        blocks = cas.isotypic_blocks(5, 1)
        assert len(blocks) == 1 and blocks[0].label == (1, 0, 0, 0, 0)
        assert blocks[0].block_dim == 5


class TestCenterBasis:
    def test_dimensions(self, qutrit_center):
        assert qutrit_center.dim == 3 == rt.center_dimension(3, 3)
        cb2 = cas.center_basis(2, 3)
        assert cb2.dim == 2 == rt.center_dimension(3, 2)

    def test_projector_algebra(self, qutrit_center):
        for i, p in enumerate(qutrit_center.elements):
            assert np.linalg.norm(p @ p - p) <= 1e-9
            for j, q in enumerate(qutrit_center.elements):
                if i != j:
                    assert np.linalg.norm(p @ q) <= 1e-9

    def test_commutes_with_symmetric_basis_three_qubits(self):
        cb = cas.center_basis(2, 3)
        for counts in g.multi_indices(2, 3):
            f = g.symmetric_sum(counts, 2, 3)
            for p in cb.elements:
                assert np.linalg.norm(f @ p - p @ f) <= 1e-9

    def test_sum_to_identity(self, qutrit_center):
        assert np.allclose(sum(qutrit_center.elements), np.eye(27), atol=1e-9)


class TestQubitCenterElement:
    def test_k0_is_identity(self):
        assert np.allclose(cas.qubit_center_element(4, 0), np.eye(16))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_k1_is_twice_the_two_body_sum(self, n):
        want = 2 * sum_of_two_body_squares(2, n)
        assert np.linalg.norm(cas.qubit_center_element(n, 1) - want) <= 1e-10

    @pytest.mark.parametrize("n,k", [(4, 0), (4, 1), (4, 2), (5, 2)])
    def test_lies_in_center_span(self, n, k):
        cb = cas.center_basis(2, n)
        x = cas.qubit_center_element(n, k)
        c, s = cas.center_project(x, cb)
        assert np.linalg.norm(s) <= 1e-9 * max(1.0, np.linalg.norm(x))

    def test_range_check(self):
        with pytest.raises(ValueError):
            cas.qubit_center_element(4, 3)


def two_body_diagonal_oracle(w):
    """Eigenvalue of the qutrit two-body coupling on a product state with
    occupation w: every pair of sites contributes via E3 (x) E3, summing to
    ((w1 - w2)^2 - (w1 + w2)) / 2."""
    return ((w[0] - w[1]) ** 2 - (w[0] + w[1])) // 2


class TestCenterProject:
    def test_identity_is_central(self, qutrit_center):
        c, s = cas.center_project(np.eye(27), qutrit_center)
        assert np.allclose(c, np.eye(27), atol=1e-9)
        assert np.linalg.norm(s) <= 1e-9

    def test_collective_has_no_center_part(self, qutrit_center):
        c, s = cas.center_project(g.hat_f(3, 3, 3), qutrit_center)
        assert np.linalg.norm(c) <= 1e-9

    def test_split_is_exact_and_orthogonal(self, qutrit_center, rng):
        x = rng.standard_normal((27, 27)) + 1j * rng.standard_normal((27, 27))
        c, s = cas.center_project(x, qutrit_center)
        assert np.allclose(c + s, x)
        for p in qutrit_center.elements:
            # remainder orthogonal to every projector and to i*projector
            assert abs(np.trace(s @ p)) <= 1e-9 * np.linalg.norm(x)

    def test_two_body_block_traces(self, qutrit_blocks, qutrit_center):
        # independent oracle: H is diagonal in the computational basis with
        # entries given by occupation counts; sum them over each block's
        # basis states
        h = g.two_body_hamiltonian(3, 3)
        occs, dicke = g.dicke_basis(3, 3)
        sym_trace = sum(two_body_diagonal_oracle(w) for w in occs)
        assert sym_trace == 5
        full_trace = 0
        coeffs = cas.center_coefficients(h, qutrit_center)
        by_label = dict(zip(qutrit_center.labels, coeffs))
        bd = dict(zip(qutrit_center.labels, qutrit_center.block_dims))
        assert by_label[(3, 0, 0)] * bd[(3, 0, 0)] == pytest.approx(5.0, abs=1e-9)
        assert by_label[(1, 1, 1)] * bd[(1, 1, 1)] == pytest.approx(-1.0, abs=1e-9)
        assert by_label[(2, 1, 0)] * bd[(2, 1, 0)] == pytest.approx(-4.0, abs=1e-9)
        assert sum(by_label[l] * bd[l] for l in by_label) == pytest.approx(
            full_trace, abs=1e-9
        )

    def test_two_body_center_component_is_one_dimensional(self, qutrit_center):
        h = g.two_body_hamiltonian(3, 3)
        c, _ = cas.center_project(h, qutrit_center)
        assert np.linalg.norm(c) > 1.0
        assert la.real_span_dim([c], 1e-9) == 1
