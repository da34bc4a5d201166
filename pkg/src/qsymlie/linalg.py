"""Dense complex linear algebra primitives.

Everything in this package lives on the real vector space of complex square
matrices equipped with the real part of the Frobenius inner product
Re<A,B> = Re Tr(A B^dag).  Spans of skew-Hermitian matrices (real Lie
algebras) are handled by :class:`OrthonormalSpan`, whose only "mutation" is
the fresh span returned by :func:`orthonormal_extend`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

# Default tolerances.  Matrix entries here are small integers and surds and
# spectra are well separated, so these are generous at desk scale.
RANK_TOL = 1e-9       # relative rank / linear-independence decisions
CLUSTER_TOL = 1e-8    # eigenvalue clustering, relative to spectral radius


class DimensionMismatchError(ValueError):
    """Operands do not share the required square shape."""


class NonHermitianError(ValueError):
    """A Hermitian (or skew-Hermitian) matrix was required."""


class NonFiniteError(ValueError):
    """Matrix contains NaN or infinite entries."""


def _as_square(a, name: str = "matrix") -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatchError(f"{name} must be square, got shape {a.shape}")
    return a


def _as_pair(a, b) -> tuple[np.ndarray, np.ndarray]:
    a = _as_square(a, "first operand")
    b = _as_square(b, "second operand")
    if a.shape != b.shape:
        raise DimensionMismatchError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a, b


def commutator(a, b) -> np.ndarray:
    """[A, B] = AB - BA."""
    a, b = _as_pair(a, b)
    return a @ b - b @ a


def anticommutator(a, b) -> np.ndarray:
    """{A, B} = AB + BA."""
    a, b = _as_pair(a, b)
    return a @ b + b @ a


def dagger(a) -> np.ndarray:
    return np.asarray(a).conj().T


def frobenius_inner(a, b) -> complex:
    """Tr(A B^dag)."""
    a, b = _as_pair(a, b)
    return complex(np.vdot(b, a))  # vdot conjugates its first argument


def frobenius_norm(a) -> float:
    return float(np.linalg.norm(np.asarray(a)))


def kron(a, b) -> np.ndarray:
    """Kronecker product; result dimension is the product of the factors'."""
    return np.kron(_as_square(a), _as_square(b))


def kron_all(mats) -> np.ndarray:
    """Left-to-right Kronecker chain of a non-empty sequence."""
    mats = list(mats)
    out = _as_square(mats[0])
    for m in mats[1:]:
        out = np.kron(out, _as_square(m))
    return out


def is_hermitian(a, tol: float = RANK_TOL) -> bool:
    a = _as_square(a)
    return np.linalg.norm(a - a.conj().T) <= tol * max(1.0, np.linalg.norm(a))


def is_skew_hermitian(a, tol: float = RANK_TOL) -> bool:
    a = _as_square(a)
    return np.linalg.norm(a + a.conj().T) <= tol * max(1.0, np.linalg.norm(a))


def hermitian_eig(h, tol: float = RANK_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues ascending, orthonormal eigenvectors as columns).
    Raises :class:`NonHermitianError` if the input fails the Hermiticity
    check at relative tolerance ``tol``.
    """
    h = _as_square(h)
    if not is_hermitian(h, tol):
        raise NonHermitianError("hermitian_eig requires a Hermitian matrix")
    w, v = np.linalg.eigh(h)
    return w, v


# ---------------------------------------------------------------------------
# Eigenvalue clustering
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EigenClustering:
    """Sorted eigenvalues partitioned into groups of near-equal values.

    ``clusters`` holds index tuples into ``eigenvalues`` (which is ascending).
    """

    eigenvalues: tuple[float, ...]
    clusters: tuple[tuple[int, ...], ...]
    cluster_tol: float

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.clusters)

    def representatives(self) -> tuple[float, ...]:
        """Mean value of each cluster, in ascending order."""
        ev = np.asarray(self.eigenvalues)
        return tuple(float(np.mean(ev[list(c)])) for c in self.clusters)

    def check(self) -> None:
        """Validate the within-spread and between-gap invariants."""
        ev = self.eigenvalues
        scale = max(1.0, max((abs(x) for x in ev), default=0.0))
        bound = self.cluster_tol * scale
        for c in self.clusters:
            vals = [ev[i] for i in c]
            if max(vals) - min(vals) > bound:
                raise ValueError(f"cluster spread {max(vals) - min(vals):g} exceeds {bound:g}")
        for left, right in zip(self.clusters, self.clusters[1:]):
            gap = ev[right[0]] - ev[left[-1]]
            if gap <= bound:
                raise ValueError(f"adjacent clusters separated by only {gap:g}")


def cluster_eigenvalues(values, cluster_tol: float = CLUSTER_TOL) -> EigenClustering:
    """Partition real values into maximal groups split at relative gaps.

    Values are sorted ascending first; a new cluster starts wherever the gap
    to the previous value exceeds ``cluster_tol * max(1, spectral radius)``.
    Empty input yields an empty clustering.
    """
    vals = sorted(float(x) for x in np.asarray(values, dtype=float).ravel())
    if not vals:
        return EigenClustering((), (), cluster_tol)
    scale = max(1.0, max(abs(vals[0]), abs(vals[-1])))
    bound = cluster_tol * scale
    clusters: list[list[int]] = [[0]]
    for i in range(1, len(vals)):
        if vals[i] - vals[i - 1] > bound:
            clusters.append([i])
        else:
            clusters[-1].append(i)
    return EigenClustering(tuple(vals), tuple(tuple(c) for c in clusters), cluster_tol)


# ---------------------------------------------------------------------------
# Orthonormal spans under Re<.,.>_F
# ---------------------------------------------------------------------------

def _realvec(a: np.ndarray) -> np.ndarray:
    # Re<A,B>_F equals the Euclidean dot product of these stacked vectors.
    return np.concatenate([a.real.ravel(), a.imag.ravel()])


def _mat_from_realvec(v: np.ndarray, dim: int) -> np.ndarray:
    half = dim * dim
    return (v[:half] + 1j * v[half:]).reshape(dim, dim)


class OrthonormalSpan:
    """Orthonormal basis of a real span of complex ``dim x dim`` matrices.

    Basis elements are pairwise orthonormal under Re<A,B>_F.  Instances are
    immutable; :func:`orthonormal_extend` returns a new span.
    """

    __slots__ = ("ambient_dim", "basis", "tol", "_rows")

    def __init__(self, ambient_dim: int, basis=(), tol: float = RANK_TOL, _rows=None):
        self.ambient_dim = int(ambient_dim)
        self.basis = tuple(basis)
        self.tol = float(tol)
        if _rows is None:
            if self.basis:
                _rows = np.vstack([_realvec(b) for b in self.basis])
            else:
                _rows = np.zeros((0, 2 * self.ambient_dim**2))
        self._rows = _rows

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _validate(self, x) -> np.ndarray:
        x = _as_square(x, "candidate")
        if x.shape[0] != self.ambient_dim:
            raise DimensionMismatchError(
                f"candidate dimension {x.shape[0]} != ambient {self.ambient_dim}"
            )
        if not np.all(np.isfinite(x)):
            raise NonFiniteError("candidate has non-finite entries")
        return x

    def coefficients(self, x) -> np.ndarray:
        """Real projection coefficients of ``x`` onto the basis."""
        x = self._validate(x)
        return self._rows @ _realvec(x)

    def project(self, x) -> np.ndarray:
        """Orthogonal projection of ``x`` onto the span."""
        x = self._validate(x)
        if not self.basis:
            return np.zeros_like(x)
        v = self._rows.T @ (self._rows @ _realvec(x))
        return _mat_from_realvec(v, self.ambient_dim)

    def residual(self, x) -> float:
        """Relative distance of ``x`` from the span: ||x - Px|| / max(1, ||x||)."""
        x = self._validate(x)
        v = _realvec(x)
        nrm = np.linalg.norm(v)
        if self._rows.shape[0]:
            v = v - self._rows.T @ (self._rows @ v)
            v = v - self._rows.T @ (self._rows @ v)
        return float(np.linalg.norm(v) / max(1.0, nrm))

    def contains(self, x, tol: float | None = None) -> bool:
        return self.residual(x) <= (self.tol if tol is None else tol)

    def check(self) -> None:
        """Validate pairwise orthonormality at the span's tolerance."""
        g = self._rows @ self._rows.T
        if self.dim and np.max(np.abs(g - np.eye(self.dim))) > self.tol:
            raise ValueError("basis is not orthonormal at the span tolerance")


def orthonormal_extend(span: OrthonormalSpan, candidate) -> tuple[bool, OrthonormalSpan]:
    """Try to grow a span by one direction.

    Subtracts the projection onto the existing basis (one modified
    Gram-Schmidt pass plus one re-orthogonalization pass).  If the residual
    norm exceeds ``tol * max(1, ||candidate||_F)`` the normalized residual is
    appended and ``(True, new_span)`` is returned; otherwise the span is
    returned unchanged with ``False``.
    """
    x = span._validate(candidate)
    v = _realvec(x)
    norm_x = np.linalg.norm(v)
    if span._rows.shape[0]:
        v = v - span._rows.T @ (span._rows @ v)
        v = v - span._rows.T @ (span._rows @ v)
    r = np.linalg.norm(v)
    if r <= span.tol * max(1.0, norm_x):
        return False, span
    v = v / r
    new_mat = _mat_from_realvec(v, span.ambient_dim)
    new_rows = np.vstack([span._rows, v])
    return True, OrthonormalSpan(span.ambient_dim, span.basis + (new_mat,), span.tol, _rows=new_rows)


def span_of(matrices, ambient_dim: int | None = None, tol: float = RANK_TOL) -> OrthonormalSpan:
    """Orthonormal span of a sequence of matrices (order-dependent basis)."""
    mats = [np.asarray(m, dtype=complex) for m in matrices]
    if ambient_dim is None:
        if not mats:
            raise DimensionMismatchError("ambient_dim required for an empty span")
        ambient_dim = mats[0].shape[0]
    span = OrthonormalSpan(ambient_dim, tol=tol)
    for m in mats:
        _, span = orthonormal_extend(span, m)
    return span


def real_span_dim(matrices, tol: float = RANK_TOL, scale: float | None = None) -> int:
    """Dimension of the real span of matrices under Re<.,.>_F.

    Rank of the stacked real vectors, counting singular values above
    ``tol * max(scale, s_max)``.  Pass ``scale`` when the inputs carry a
    known reference size (e.g. restrictions of unit-norm matrices, which may
    all be numerically zero); otherwise the threshold is purely relative.
    """
    mats = list(matrices)
    if not mats:
        return 0
    rows = np.vstack([_realvec(np.asarray(m, dtype=complex)) for m in mats])
    s = np.linalg.svd(rows, compute_uv=False)
    if s.size == 0:
        return 0
    ref = s[0] if scale is None else max(scale, s[0])
    if ref == 0.0:
        return 0
    return int(np.sum(s > tol * ref))


# ---------------------------------------------------------------------------
# Matrix exchange format
# ---------------------------------------------------------------------------

def matrix_to_json(a) -> dict:
    """Encode a square complex matrix as {"dim", "re", "im"}, row-major."""
    a = _as_square(a)
    return {
        "dim": int(a.shape[0]),
        "re": [float(x) for x in a.real.ravel()],
        "im": [float(x) for x in a.imag.ravel()],
    }


def matrix_from_json(obj) -> np.ndarray:
    """Decode the {"dim", "re", "im"} exchange format."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    dim = int(obj["dim"])
    re = np.asarray(obj["re"], dtype=float)
    im = np.asarray(obj["im"], dtype=float)
    if re.size != dim * dim or im.size != dim * dim:
        raise DimensionMismatchError("re/im length must equal dim^2")
    return (re + 1j * im).reshape(dim, dim)
