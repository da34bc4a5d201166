"""Casimir operators, isotypic blocks, and the center of the invariant algebra.

The quadratic Casimir C2 = sum_k (collective E_k)^2 acts as a scalar on each
isotypic block of the tensor-power decomposition, so clustering its spectrum
recovers the blocks.  Two non-isomorphic su(3) blocks can share a C2
eigenvalue (the quadratic eigenvalue c2(p,q) is symmetric in p,q); the cubic
Casimir C3 then refines the cluster.  Raw C2 eigenvalues are never compared
against c2(p,q) values, only their equality patterns are matched.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .linalg import (
    CLUSTER_TOL,
    RANK_TOL,
    DimensionMismatchError,
    _as_square,
    cluster_eigenvalues,
    hermitian_eig,
)
from .generators import (
    adjacent_transpositions,
    gell_mann_basis,
    hat_f,
    permutation_operator,
    structure_constants,
    symmetric_sum,
)
from .reptheory import (
    cg_decompose,
    content_sum,
    irrep_dimension,
    quantum_numbers,
)


class UnresolvedDegeneracyError(RuntimeError):
    """Isotypic blocks could not be separated by the available Casimirs."""


@dataclass(frozen=True)
class CasimirSet:
    """The Casimir operators materialized on (C^d)^(x)n; C3 only for d = 3."""

    d: int
    n: int
    C2: np.ndarray
    C3: np.ndarray | None = None

    def check(self, tol: float = 1e-9) -> None:
        ops = [self.C2] + ([self.C3] if self.C3 is not None else [])
        swaps = [permutation_operator(p, self.d) for p in adjacent_transpositions(self.n)]
        collectives = [hat_f(k, self.d, self.n) for k in range(1, self.d**2)]
        for c in ops:
            assert np.linalg.norm(c - c.conj().T) <= tol * max(1.0, np.linalg.norm(c))
            for u in swaps + collectives:
                assert np.linalg.norm(c @ u - u @ c) <= tol * max(1.0, np.linalg.norm(c))


def casimir_set(d: int, n: int) -> CasimirSet:
    """C2 (and, for d = 3, C3) on the n-fold tensor power."""
    return CasimirSet(d, n, build_C2(d, n), build_C3(d, n) if d == 3 else None)


def build_C2(d: int, n: int) -> np.ndarray:
    """Quadratic Casimir: sum over the d^2-1 traceless slots of hat(F_k)^2."""
    dim = d**n
    out = np.zeros((dim, dim), dtype=complex)
    for k in range(1, d * d):
        fk = hat_f(k, d, n)
        out += fk @ fk
    return out


def build_C3(d: int, n: int) -> np.ndarray:
    """Cubic Casimir sum_{l,m,q} d_{lm}^q hat(F_l) hat(F_m) hat(F_q) (d = 3 only)."""
    if d != 3:
        raise ValueError("build_C3 supports d = 3 only")
    sc = structure_constants(gell_mann_basis(d))
    hats = [hat_f(k, d, n) for k in range(1, d * d)]
    dim = d**n
    out = np.zeros((dim, dim), dtype=complex)
    m = d * d - 1
    for l in range(m):
        for mm in range(m):
            prod_lm = hats[l] @ hats[mm]
            for q in range(m):
                c = sc.dsym[l, mm, q]
                if c != 0.0:
                    out += c * (prod_lm @ hats[q])
    return out


def c2_eigenvalue(p: int, q: int) -> int:
    """Quadratic Casimir eigenvalue of the su(3) irrep (p, q), fixed scaling.

    c2(p,q) = p^2 + q^2 + 3(p+q) + pq; symmetric under swapping p and q.
    """
    p, q = int(p), int(q)
    if p < 0 or q < 0:
        raise ValueError("quantum numbers must be nonnegative")
    return p * p + q * q + 3 * (p + q) + p * q


# ---------------------------------------------------------------------------
# Degenerate c2 search
# ---------------------------------------------------------------------------

def _triangle_candidates(p0: int, q0: int):
    """Candidate lattice points below the p=q line that could share c2(p0,q0).

    c2 strictly increases along +p, +q and along (1,-1) inside q <= p, and
    strictly decreases along (1,-2); points outside the two cones bounded by
    the lines p+q = p0+q0 and 2p+q = 2p0+q0 therefore differ strictly.
    """
    s1 = p0 + q0       # line of direction (1,-1)
    s2 = 2 * p0 + q0   # line of direction (1,-2)
    for q in range(q0):  # triangle below q0
        lo = max(q, -(-(s2 - q) // 2))  # ceil((s2-q)/2)
        hi = s1 - q
        for p in range(lo, hi + 1):
            yield p, q
    q = q0 + 1  # triangle above q0, capped by q <= p
    while 3 * q <= s2:
        lo = max(q, s1 - q)
        hi = (s2 - q) // 2
        for p in range(lo, hi + 1):
            yield p, q
        q += 1


def _disc_hits(target: int):
    """All (p, q) with q <= p and c2 = target inside the rigorous disc bound.

    Outside (p+3/2)^2 + (q+3/2)^2 <= target + 9/2 the value strictly
    exceeds the target.
    """
    hits = []
    p = 0
    while (p + 1.5) ** 2 + 2.25 <= target + 4.5 or p == 0:
        for q in range(p + 1):
            if (p + 1.5) ** 2 + (q + 1.5) ** 2 <= target + 4.5 and c2_eigenvalue(p, q) == target:
                hits.append((p, q))
        p += 1
    return hits


def degeneracy_search(p0: int, q0: int) -> list[tuple[int, int]]:
    """All lattice pairs sharing the quadratic eigenvalue of (p0, q0).

    Runs the triangle-pruned search seeded at the representative with
    q <= p, iterating the pruning from every hit until nothing new appears,
    then verifies the result against the disc bound (which wins on any
    disagreement).  The full answer is mirrored across p = q and sorted.
    """
    target = c2_eigenvalue(p0, q0)
    seed = (max(p0, q0), min(p0, q0))
    hits = {seed}
    frontier = [seed]
    while frontier:
        base = frontier.pop(0)
        for cand in _triangle_candidates(*base):
            if cand not in hits and c2_eigenvalue(*cand) == target:
                hits.add(cand)
                frontier.append(cand)
    safety = set(_disc_hits(target))
    if hits != safety:
        hits = safety
    full = set(hits) | {(q, p) for p, q in hits}
    return sorted(full)


# ---------------------------------------------------------------------------
# Isotypic blocks from Casimir spectra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IsotypicBlock:
    """One isotypic component: all copies of one irrep, with an orthonormal basis.

    ``basis`` has shape (d^n, block_dim) with orthonormal columns spanning
    the block; ``block_dim = irrep_dim * multiplicity``.
    """

    label: tuple[int, ...]
    basis: np.ndarray
    block_dim: int
    irrep_dim: int
    multiplicity: int
    c2_cluster_index: int
    c3_refined: bool = False

    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.conj().T


def _label_key(label, d: int):
    # Exact integer key whose equality/order pattern matches the raw C2
    # spectrum at fixed (n, d).
    if d == 3:
        p, q = quantum_numbers(label)
        return c2_eigenvalue(p, q)
    return content_sum(label)


def isotypic_blocks(
    d: int, n: int, cluster_tol: float = CLUSTER_TOL, tol: float = RANK_TOL
) -> list[IsotypicBlock]:
    """Isotypic decomposition of (C^d)^(x)n from Casimir spectra.

    Clusters the C2 eigenvalues, matches clusters to the expected labels by
    equality pattern and block dimension, and refines any cluster shared by
    two labels with C3 (d = 3).  Blocks are returned by ascending C2
    eigenvalue, sub-ordered by ascending C3 eigenvalue inside a refined
    cluster.

    Raises :class:`UnresolvedDegeneracyError` when labels cannot be
    separated or attached unambiguously.
    """
    labels = cg_decompose(n, d)
    groups: dict[object, list[tuple[int, ...]]] = {}
    for m in labels:
        groups.setdefault(_label_key(m, d), []).append(m)
    if d == 3:
        # Cross-check: the content-sum pattern must agree with the c2(p,q)
        # pattern (both are the quadratic Casimir in fixed scalings).
        alt: dict[int, set] = {}
        for m in labels:
            alt.setdefault(content_sum(m), set()).add(m)
        if sorted(map(sorted, alt.values())) != sorted(map(sorted, groups.values())):
            raise UnresolvedDegeneracyError("c2 equality patterns disagree")
    ordered_keys = sorted(groups)
    if any(len(groups[k]) > 1 for k in ordered_keys) and d != 3:
        raise UnresolvedDegeneracyError(
            f"labels share a C2 eigenvalue and no cubic Casimir is available for d={d}"
        )

    c2 = build_C2(d, n)
    evals, evecs = hermitian_eig(c2, tol)
    clustering = cluster_eigenvalues(evals, cluster_tol)
    clustering.check()
    if len(clustering.clusters) != len(ordered_keys):
        raise UnresolvedDegeneracyError(
            f"found {len(clustering.clusters)} C2 clusters, expected {len(ordered_keys)}"
        )

    c3 = None
    blocks: list[IsotypicBlock] = []
    for ci, (key, idx) in enumerate(zip(ordered_keys, clustering.clusters)):
        members = groups[key]
        vecs = evecs[:, list(idx)]
        expected = sum(labels[m] * irrep_dimension(m) for m in members)
        if len(idx) != expected:
            raise UnresolvedDegeneracyError(
                f"cluster {ci} has dimension {len(idx)}, labels {members} need {expected}"
            )
        if len(members) == 1:
            m = members[0]
            blocks.append(
                IsotypicBlock(m, vecs, len(idx), irrep_dimension(m), labels[m], ci)
            )
            continue
        # C2-degenerate: split the cluster along the C3 spectrum and attach
        # labels by block dimension.
        dims = {labels[m] * irrep_dimension(m): m for m in members}
        if len(dims) != len(members):
            raise UnresolvedDegeneracyError(
                f"labels {members} share both C2 value and block dimension"
            )
        if c3 is None:
            c3 = build_C3(d, n)
        sub = vecs.conj().T @ c3 @ vecs
        w3, u3 = hermitian_eig(sub, 1e-7)
        subcl = cluster_eigenvalues(w3, cluster_tol)
        if len(subcl.clusters) != len(members):
            raise UnresolvedDegeneracyError(
                f"C3 splits cluster {ci} into {len(subcl.clusters)} parts, expected {len(members)}"
            )
        for part in subcl.clusters:
            bd = len(part)
            if bd not in dims:
                raise UnresolvedDegeneracyError(
                    f"C3 sub-block of dimension {bd} matches no label in {members}"
                )
            m = dims[bd]
            blocks.append(
                IsotypicBlock(
                    m, vecs @ u3[:, list(part)], bd, irrep_dimension(m), labels[m], ci, True
                )
            )
    return blocks


# ---------------------------------------------------------------------------
# Center of the invariant algebra
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CenterBasis:
    """Block-scalar operators: the orthogonal projector of each isotypic block.

    i times their real span is the center of the invariant Lie algebra; its
    dimension equals the number of non-isomorphic irreps.
    """

    labels: tuple[tuple[int, ...], ...]
    elements: tuple[np.ndarray, ...]
    block_dims: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.elements)


def center_basis_from_blocks(blocks) -> CenterBasis:
    return CenterBasis(
        tuple(b.label for b in blocks),
        tuple(b.projector() for b in blocks),
        tuple(b.block_dim for b in blocks),
    )


def center_basis(d: int, n: int, blocks=None) -> CenterBasis:
    """Projector basis of the center, built from the isotypic blocks."""
    if blocks is None:
        blocks = isotypic_blocks(d, n)
    return center_basis_from_blocks(blocks)


def center_coefficients(x, cb: CenterBasis) -> np.ndarray:
    """Complex block coefficients Tr(X P_j) / dim(P_j) of the center component."""
    x = _as_square(x)
    if cb.elements and x.shape != cb.elements[0].shape:
        raise DimensionMismatchError("operator and center basis dimensions differ")
    return np.array(
        [np.trace(x @ p) / bd for p, bd in zip(cb.elements, cb.block_dims)]
    )


def center_project(x, cb: CenterBasis) -> tuple[np.ndarray, np.ndarray]:
    """Orthogonal split X = C + S with C in the (complex) span of the projectors.

    The split is orthogonal under Re<.,.>_F; for X in the invariant algebra,
    C is the block-trace part and S is traceless on every block.
    """
    x = _as_square(x)
    coeffs = center_coefficients(x, cb)
    c = np.zeros_like(x)
    for coeff, p in zip(coeffs, cb.elements):
        c = c + coeff * p
    return c, x - c


def qubit_center_element(n: int, k: int) -> np.ndarray:
    """Closed-form center element of the n-qubit invariant algebra.

    sum_{a+b+c=k} (2a)!(2b)!(2c)!/(a!b!c!) F_(n-2k, 2a, 2b, 2c); k = 0 gives
    the identity, k = 1 gives twice the sum of the three two-body terms.
    """
    if not 0 <= k <= n // 2:
        raise ValueError(f"k must lie in 0..floor(n/2) = {n // 2}")
    dim = 2**n
    out = np.zeros((dim, dim), dtype=complex)
    for a in range(k + 1):
        for b in range(k - a + 1):
            c = k - a - b
            coeff = (
                factorial(2 * a) * factorial(2 * b) * factorial(2 * c)
                // (factorial(a) * factorial(b) * factorial(c))
            )
            out += coeff * symmetric_sum((n - 2 * k, 2 * a, 2 * b, 2 * c), 2, n)
    return out
