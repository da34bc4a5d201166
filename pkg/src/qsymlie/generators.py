"""Concrete operators on (C^d)^(x)n.

Single-site Hermitian bases (Pauli, Gell-Mann, generalized Gell-Mann),
structure constants, symmetrized operator-basis elements F_(j0,...),
collective operators, ladder operators, permutation operators, the
two-row Young projector, and Dicke states.

Basis convention: unnormalized matrices with Tr(F_a F_b) = 2 delta_ab for
the traceless elements, and the plain identity at index 0.  All symmetric
multi-index semantics refer to this ordering, which is frozen:

* d = 2: [I, sigma_x, sigma_y, sigma_z]
* d = 3: [I, E_1, ..., E_8] in the standard Gell-Mann order
* d >= 4: identity, all symmetric off-diagonal pairs (row-major), all
  antisymmetric pairs (same order), diagonal matrices in increasing support
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, sqrt
from typing import NamedTuple

import numpy as np

from .linalg import _as_square, kron_all


def _sym_pair(d: int, j: int, k: int) -> np.ndarray:
    m = np.zeros((d, d), dtype=complex)
    m[j, k] = m[k, j] = 1.0
    return m


def _antisym_pair(d: int, j: int, k: int) -> np.ndarray:
    m = np.zeros((d, d), dtype=complex)
    m[j, k] = -1.0j
    m[k, j] = 1.0j
    return m


def _diag_elem(d: int, k: int) -> np.ndarray:
    # diag(1,...,1,-k,0,...,0) with k ones, scaled to Tr = 2.
    v = np.zeros(d)
    v[:k] = 1.0
    v[k] = -k
    return np.diag(v).astype(complex) * sqrt(2.0 / (k * (k + 1)))


@dataclass(frozen=True)
class HermitianBasis:
    """Identity plus d^2 - 1 traceless Hermitian matrices, Tr(F_a F_b) = 2 delta_ab."""

    d: int
    elements: tuple[np.ndarray, ...]

    def check(self, tol: float = 1e-12) -> None:
        assert len(self.elements) == self.d**2
        assert np.allclose(self.elements[0], np.eye(self.d))
        for a in range(1, self.d**2):
            assert abs(np.trace(self.elements[a])) <= tol
            for b in range(a, self.d**2):
                got = np.trace(self.elements[a] @ self.elements[b].conj().T)
                want = 2.0 if a == b else 0.0
                assert abs(got - want) <= tol


@lru_cache(maxsize=None)
def gell_mann_basis(d: int) -> HermitianBasis:
    """Hermitian single-site basis in the frozen ordering described above."""
    if d < 2:
        raise ValueError("need d >= 2")
    elems: list[np.ndarray] = [np.eye(d, dtype=complex)]
    if d == 3:
        # Standard Gell-Mann order E_1..E_8; the usual su(3) structure
        # constant tables are indexed against exactly this order.
        elems += [
            _sym_pair(3, 0, 1),
            _antisym_pair(3, 0, 1),
            _diag_elem(3, 1),
            _sym_pair(3, 0, 2),
            _antisym_pair(3, 0, 2),
            _sym_pair(3, 1, 2),
            _antisym_pair(3, 1, 2),
            _diag_elem(3, 2),
        ]
    else:
        pairs = [(j, k) for j in range(d) for k in range(j + 1, d)]
        elems += [_sym_pair(d, j, k) for j, k in pairs]
        elems += [_antisym_pair(d, j, k) for j, k in pairs]
        elems += [_diag_elem(d, k) for k in range(1, d)]
    for e in elems:
        e.flags.writeable = False
    basis = HermitianBasis(d, tuple(elems))
    basis.check()
    return basis


def pauli_matrices() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(sigma_x, sigma_y, sigma_z)."""
    b = gell_mann_basis(2).elements
    return b[1], b[2], b[3]


# ---------------------------------------------------------------------------
# Structure constants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureConstants:
    """Tensors from [E_j,E_k] = i sum_l f_{jk}^l E_l and
    {E_j,E_k} = gamma delta_jk 1 + sum_l d_{jk}^l E_l.

    ``f`` and ``dsym`` have shape (m, m, m) with m = d^2 - 1 and 0-based
    indices standing for E_1..E_m; ``gamma``= 4/d.
    """

    d: int
    f: np.ndarray
    dsym: np.ndarray
    gamma: float

    def f_entry(self, j: int, k: int, l: int) -> float:
        """1-based accessor matching the su(3) literature tables."""
        return float(self.f[j - 1, k - 1, l - 1])

    def d_entry(self, j: int, k: int, l: int) -> float:
        return float(self.dsym[j - 1, k - 1, l - 1])


def structure_constants(basis: HermitianBasis) -> StructureConstants:
    """Compute f and d tensors by Frobenius projection onto the basis."""
    d = basis.d
    m = d * d - 1
    es = basis.elements[1:]
    f = np.zeros((m, m, m))
    ds = np.zeros((m, m, m))
    for j in range(m):
        for k in range(j, m):
            comm = es[j] @ es[k] - es[k] @ es[j]
            anti = es[j] @ es[k] + es[k] @ es[j]
            for l in range(m):
                # Tr(E_l^2) = 2, so the projection coefficient is Tr(. E_l)/2.
                f[j, k, l] = (np.trace(comm @ es[l]) / 2j).real
                ds[j, k, l] = np.trace(anti @ es[l]).real / 2.0
            f[k, j, :] = -f[j, k, :]
            ds[k, j, :] = ds[j, k, :]
    return StructureConstants(d, f, ds, 4.0 / d)


# ---------------------------------------------------------------------------
# Symmetrized operator basis of the S_n-invariant algebra
# ---------------------------------------------------------------------------

def multiset_permutations(word):
    """Distinct permutations of a sorted multiset, lexicographic order."""
    word = sorted(word)
    n = len(word)

    def rec(remaining):
        if not remaining:
            yield ()
            return
        seen = None
        for i, x in enumerate(remaining):
            if x == seen:
                continue
            seen = x
            for tail in rec(remaining[:i] + remaining[i + 1 :]):
                yield (x,) + tail

    yield from rec(word)


def multi_indices(d: int, n: int) -> list[tuple[int, ...]]:
    """All d^2-tuples (j_0,...,j_{d^2-1}) of naturals summing to n.

    Deterministic order: descending lexicographic, so (n,0,...,0) comes
    first.  Count is C(n + d^2 - 1, d^2 - 1).
    """
    slots = d * d

    def rec(remaining, k):
        if k == 1:
            yield (remaining,)
            return
        for first in range(remaining, -1, -1):
            for rest in rec(remaining - first, k - 1):
                yield (first,) + rest

    out = list(rec(n, slots))
    assert len(out) == comb(n + slots - 1, slots - 1)
    return out


def symmetric_sum(counts, d: int, n: int) -> np.ndarray:
    """F_(j0,j1,...): sum over all distinct placements of the indicated multiset.

    ``counts[a]`` is how many tensor factors carry basis element ``a`` (0 is
    the identity).  The sum has n!/(j0! j1! ...) terms.
    """
    counts = tuple(int(c) for c in counts)
    if len(counts) != d * d:
        raise ValueError(f"need d^2 = {d * d} counts, got {len(counts)}")
    if any(c < 0 for c in counts) or sum(counts) != n:
        raise ValueError(f"counts must be naturals summing to n={n}: {counts}")
    basis = gell_mann_basis(d).elements
    word = [a for a, c in enumerate(counts) for _ in range(c)]
    dim = d**n
    out = np.zeros((dim, dim), dtype=complex)
    for arrangement in multiset_permutations(word):
        out += kron_all(basis[a] for a in arrangement)
    return out


def symmetric_term_count(counts) -> int:
    n = sum(counts)
    out = factorial(n)
    for c in counts:
        out //= factorial(c)
    return out


def collective(op, n: int) -> np.ndarray:
    """sum_j 1 (x) ... (x) op (x) ... (x) 1 over the n factor positions."""
    op = _as_square(op)
    d = op.shape[0]
    eye = np.eye(d, dtype=complex)
    dim = d**n
    out = np.zeros((dim, dim), dtype=complex)
    for j in range(n):
        out += kron_all([eye] * j + [op] + [eye] * (n - 1 - j))
    return out


def hat_f(k: int, d: int, n: int) -> np.ndarray:
    """Collective lift of basis element k: F with one k and n-1 identities."""
    return collective(gell_mann_basis(d).elements[k], n)


# ---------------------------------------------------------------------------
# Ladder operators and named Hamiltonians
# ---------------------------------------------------------------------------

class SpinOps(NamedTuple):
    z: np.ndarray
    plus: np.ndarray
    minus: np.ndarray
    x: np.ndarray
    y: np.ndarray


def standard_spin_ops(d: int, l: int) -> SpinOps:
    """Single-site ladder triple acting on levels l-1 and l of C^d.

    S_z = (|l-1><l-1| - |l><l|)/2, S_+ = |l-1><l|, S_- = S_+^T,
    S_x = S_+ + S_-, S_y = i(S_+ - S_-).  Note the unnormalized x/y
    convention: for d=3, l=1 this gives S_x = E_1, S_y = -E_2 and
    S_z = E_3 / 2.
    """
    if not 1 <= l <= d - 1:
        raise ValueError(f"l must lie in 1..{d - 1}")
    sz = np.zeros((d, d), dtype=complex)
    sz[l - 1, l - 1] = 0.5
    sz[l, l] = -0.5
    sp = np.zeros((d, d), dtype=complex)
    sp[l - 1, l] = 1.0
    sm = sp.T.copy()
    return SpinOps(sz, sp, sm, sp + sm, 1j * (sp - sm))


def two_body_hamiltonian(d: int = 3, n: int = 3) -> np.ndarray:
    """Symmetric two-body coupling of the z-type diagonal element.

    F with n-2 identities and two copies of basis element 3 (sigma_z for
    d=2, E_3 for d=3); for d=3, n=3 this is
    E3 x E3 x 1 + E3 x 1 x E3 + 1 x E3 x E3.
    """
    if d not in (2, 3):
        raise ValueError("two_body_hamiltonian is defined for d in {2, 3}")
    if n < 2:
        raise ValueError("need n >= 2")
    counts = [0] * (d * d)
    counts[0] = n - 2
    counts[3] = 2
    return symmetric_sum(counts, d, n)


# ---------------------------------------------------------------------------
# Permutations of tensor factors
# ---------------------------------------------------------------------------

def permutation_operator(perm, d: int) -> np.ndarray:
    """Unitary permuting the tensor factors of (C^d)^(x)n.

    ``perm`` is a 0-based tuple of images: the state on factor i moves to
    factor perm[i].  Satisfies U_pi U_rho = U_{pi o rho}.
    """
    perm = tuple(int(x) for x in perm)
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm}")
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    dim = d**n
    cols = np.arange(dim)
    digits = np.empty((dim, n), dtype=np.int64)
    rem = cols.copy()
    for i in range(n - 1, -1, -1):
        digits[:, i] = rem % d
        rem //= d
    # U e_b = e_c with c_j = b_{perm^{-1}(j)}
    new_digits = digits[:, inv]
    rows = np.zeros(dim, dtype=np.int64)
    for i in range(n):
        rows = rows * d + new_digits[:, i]
    u = np.zeros((dim, dim), dtype=complex)
    u[rows, cols] = 1.0
    return u


def perm_from_cycles(n: int, *cycles) -> tuple[int, ...]:
    """Permutation from 1-based cycles: (2,1,3) maps 2->1, 1->3, 3->2."""
    images = list(range(n))
    for cycle in cycles:
        c = [x - 1 for x in cycle]
        if len(set(c)) != len(c) or any(not 0 <= x < n for x in c):
            raise ValueError(f"bad cycle {cycle} for n={n}")
        for i, x in enumerate(c):
            images[x] = c[(i + 1) % len(c)]
    return tuple(images)


def adjacent_transpositions(n: int) -> list[tuple[int, ...]]:
    """Generators (i, i+1) of S_n; commuting with these means commuting with S_n."""
    return [perm_from_cycles(n, (i, i + 1)) for i in range(1, n)]


def young_projector_21(d: int) -> np.ndarray:
    """Young symmetrizer 1 + (12) - (13) - (213) on (C^d)^(x)3.

    Belongs to the standard tableau with rows {1,2},{3} of the two-row
    diagram; its image on each weight space selects mixed-symmetry vectors.
    """
    terms = [
        (1.0, perm_from_cycles(3)),
        (1.0, perm_from_cycles(3, (1, 2))),
        (-1.0, perm_from_cycles(3, (1, 3))),
        (-1.0, perm_from_cycles(3, (2, 1, 3))),
    ]
    return sum(c * permutation_operator(p, d) for c, p in terms)


# ---------------------------------------------------------------------------
# Dicke states
# ---------------------------------------------------------------------------

def occupation_vectors(d: int, n: int) -> list[tuple[int, ...]]:
    """All (w_1,...,w_d) with sum n, ordered ascending by (w_d,...,w_1).

    For d = 3, n = 3 this reproduces the usual grouping by the number of
    |2>'s, with w_1 descending inside each group.
    """
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for w in range(remaining + 1):
            rec(prefix + (w,), remaining - w, slots - 1)

    rec((), n, d)
    return sorted(out, key=lambda w: tuple(reversed(w)))


def dicke_state(w, d: int) -> np.ndarray:
    """Normalized symmetric sum of product states with occupation counts w."""
    w = tuple(int(x) for x in w)
    n = sum(w)
    word = [sym for sym, c in enumerate(w) for _ in range(c)]
    vec = np.zeros(d**n, dtype=complex)
    for arrangement in multiset_permutations(word):
        idx = 0
        for b in arrangement:
            idx = idx * d + b
        vec[idx] += 1.0
    norm = 1.0
    for c in w:
        norm *= factorial(c)
    return vec * sqrt(norm / factorial(n))


def dicke_basis(d: int, n: int) -> tuple[list[tuple[int, ...]], np.ndarray]:
    """Occupations and the matrix whose columns are the Dicke states.

    The columns span the symmetric sector, the module of the i-weight
    (n, 0, ..., 0).
    """
    occs = occupation_vectors(d, n)
    cols = np.column_stack([dicke_state(w, d) for w in occs])
    return occs, cols


# ---------------------------------------------------------------------------
# Generator-spec input format
# ---------------------------------------------------------------------------

def hamiltonian_from_terms(terms, d: int, n: int) -> np.ndarray:
    """Sum of coeff * F_(multi_index) from exchange-format term dicts.

    Each term is {"multi_index": [...], "coeff_re": x, "coeff_im": y}.
    """
    dim = d**n
    out = np.zeros((dim, dim), dtype=complex)
    for t in terms:
        coeff = float(t.get("coeff_re", 0.0)) + 1j * float(t.get("coeff_im", 0.0))
        out += coeff * symmetric_sum(t["multi_index"], d, n)
    return out
