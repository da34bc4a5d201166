"""Exact combinatorics of su(d) irreducible representations.

Irreps are labeled by i-weights: non-increasing tuples of naturals.  Tuples
differing by a constant shift label the same irrep, so maps are keyed by
tuples of fixed entry sum (as produced by the tensor-power decomposition) or
by their normalized form (last entry zero).  Everything here is integer
arithmetic; no floating point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

IWeight = tuple[int, ...]


def is_iweight(m) -> bool:
    """Non-increasing tuple of nonnegative integers."""
    return (
        len(m) > 0
        and all(isinstance(x, int) and x >= 0 for x in m)
        and all(m[i] >= m[i + 1] for i in range(len(m) - 1))
    )


def check_iweight(m) -> IWeight:
    m = tuple(int(x) for x in m)
    if not is_iweight(m):
        raise ValueError(f"not a valid i-weight: {m!r}")
    return m


def normalize_iweight(m) -> IWeight:
    """Canonical representative with last entry zero."""
    m = check_iweight(m)
    return tuple(x - m[-1] for x in m)


def quantum_numbers(m) -> tuple[int, ...]:
    """Successive differences p_j = m_j - m_{j+1} (shift-invariant label)."""
    m = check_iweight(m)
    return tuple(m[i] - m[i + 1] for i in range(len(m) - 1))


def irrep_dimension(m) -> int:
    """Dimension of the irrep with i-weight m.

    prod_{r<s} (1 + (m_r - m_s)/(s - r)), evaluated exactly.
    """
    m = check_iweight(m)
    d = len(m)
    out = Fraction(1)
    for r in range(d):
        for s in range(r + 1, d):
            out *= Fraction(s - r + m[r] - m[s], s - r)
    assert out.denominator == 1
    return int(out)


# ---------------------------------------------------------------------------
# Gelfand-Tsetlin patterns and semistandard Young tableaux
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GTPattern:
    """Triangular array; rows[0] has length d (the i-weight), last has length 1.

    Consecutive rows satisfy betweenness: upper[k] >= lower[k] >= upper[k+1].
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        d = len(rows)
        if [len(r) for r in rows] != list(range(d, 0, -1)):
            raise ValueError("rows must have lengths d, d-1, ..., 1")
        for upper, lower in zip(rows, rows[1:]):
            for k in range(len(lower)):
                if not (upper[k] >= lower[k] >= upper[k + 1]):
                    raise ValueError(f"betweenness violated between {upper} and {lower}")
        if any(x < 0 for x in rows[0]):
            raise ValueError("entries must be nonnegative")

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def top(self) -> IWeight:
        return self.rows[0]

    def entry(self, k: int, l: int) -> int:
        """m_{k,l}: the k-th entry (1-based) of the row of length l."""
        return self.rows[self.d - l][k - 1]


@dataclass(frozen=True)
class SSYT:
    """Semistandard Young tableau over symbols 0..d-1.

    Rows non-decreasing, columns strictly increasing.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for r in rows:
            if any(a > b for a, b in zip(r, r[1:])):
                raise ValueError("rows must be non-decreasing")
            if any(x < 0 for x in r):
                raise ValueError("symbols must be nonnegative")
        for upper, lower in zip(rows, rows[1:]):
            if len(lower) > len(upper):
                raise ValueError("row lengths must be non-increasing")
            if any(lower[j] <= upper[j] for j in range(len(lower))):
                raise ValueError("columns must be strictly increasing")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)


def enumerate_gt_patterns(m) -> list[GTPattern]:
    """All GT patterns with top row m, highest-weight pattern first.

    Ordered lexicographically descending on the concatenation of the rows
    below the top, matching the A_1..A_8 listing convention for (2,1,0).
    """
    m = check_iweight(m)

    def descend(row: tuple[int, ...]):
        if len(row) == 1:
            yield (row,)
            return
        spans = [range(row[k], row[k + 1] - 1, -1) for k in range(len(row) - 1)]
        for nxt in itertools.product(*spans):
            for tail in descend(nxt):
                yield (row,) + tail

    return [GTPattern(rows) for rows in descend(m)]


def gt_to_ssyt(p: GTPattern) -> SSYT:
    """Bijection: diagonals of the pattern become rows of the tableau.

    Row k of the tableau holds m_{k,l} - m_{k,l-1} copies of symbol l-1
    (0-based), with m_{k,k-1} taken as 0.
    """
    d = p.d
    rows = []
    for k in range(1, d + 1):
        row: list[int] = []
        prev = 0
        for l in range(k, d + 1):
            cur = p.entry(k, l)
            row.extend([l - 1] * (cur - prev))
            prev = cur
        if row:
            rows.append(tuple(row))
    return SSYT(tuple(rows))


def ssyt_to_gt(t: SSYT, d: int) -> GTPattern:
    """Inverse bijection: m_{k,l} counts symbols < l in tableau row k."""
    if len(t.rows) > d:
        raise ValueError(f"tableau has more than d={d} rows")
    if any(x > d - 1 for r in t.rows for x in r):
        raise ValueError(f"symbols must lie in 0..{d - 1}")
    rows = []
    for l in range(d, 0, -1):
        row = []
        for k in range(1, l + 1):
            fill = t.rows[k - 1] if k <= len(t.rows) else ()
            row.append(sum(1 for x in fill if x < l))
        rows.append(tuple(row))
    return GTPattern(tuple(rows))


def weight_vector(p: GTPattern) -> tuple[int, ...]:
    """w_l = sigma_l - sigma_{l-1} where sigma_l is the sum of the length-l row."""
    sums = [0] + [sum(p.rows[p.d - l]) for l in range(1, p.d + 1)]
    return tuple(sums[l] - sums[l - 1] for l in range(1, p.d + 1))


def sz_eigenvalue(p: GTPattern, l: int) -> Fraction:
    """Eigenvalue (w_l - w_{l+1})/2 of S_z^l on the pattern's state."""
    if not 1 <= l <= p.d - 1:
        raise ValueError(f"l must lie in 1..{p.d - 1}")
    w = weight_vector(p)
    return Fraction(w[l - 1] - w[l], 2)


# ---------------------------------------------------------------------------
# Tensor products and the Clebsch-Gordan decomposition of the n-fold power
# ---------------------------------------------------------------------------

def tensor_with_standard(m, d: int | None = None) -> list[IWeight]:
    """Irreps of m (x) standard rep: add 1 to any entry keeping non-increase.

    Each result appears with multiplicity one.
    """
    m = check_iweight(m)
    if d is not None and len(m) != d:
        raise ValueError(f"i-weight length {len(m)} != d={d}")
    out = []
    for i in range(len(m)):
        if i == 0 or m[i - 1] >= m[i] + 1:
            out.append(m[:i] + (m[i] + 1,) + m[i + 1 :])
    return out


def b_pattern(p: GTPattern) -> tuple[tuple[int, ...], ...]:
    """B-pattern of a GT pattern: b_{k,l} = m_{k,l} - m_{k,l-1}, m_{k,l-1}:=0 for l-1<k.

    Same triangular layout as the pattern itself.  B-patterns need not
    satisfy betweenness.
    """
    d = p.d
    rows = []
    for l in range(d, 0, -1):
        row = []
        for k in range(1, l + 1):
            below = p.entry(k, l - 1) if l - 1 >= k else 0
            row.append(p.entry(k, l) - below)
        rows.append(tuple(row))
    return tuple(rows)


def b_pattern_walk(s, b_rows) -> IWeight | None:
    """Diagonal walk of one B-pattern over the i-weight ``s``.

    Follows each diagonal k = 1..d, adding b_{k,l} to entry l for
    l = d, d-1, ..., k, aborting (returns None) as soon as an intermediate
    tuple fails to be non-increasing.
    """
    cur = list(check_iweight(s))
    d = len(cur)
    for k in range(1, d + 1):
        for l in range(d, k - 1, -1):
            cur[l - 1] += b_rows[d - l][k - 1]
            if any(cur[i] < cur[i + 1] for i in range(d - 1)):
                return None
    return tuple(cur)


def algorithm1_decompose(s, sprime) -> dict[IWeight, int]:
    """Decompose the tensor product s (x) sprime into irreps with multiplicity.

    Enumerates the GT basis of the second factor, walks each associated
    B-pattern over s, and counts surviving walks per resulting i-weight.
    Keys are raw tuples with entry sum = sum(s) + sum(sprime).
    """
    s = check_iweight(s)
    sprime = check_iweight(sprime)
    if len(s) != len(sprime):
        raise ValueError("factors must be i-weights for the same d")
    out: dict[IWeight, int] = {}
    for p in enumerate_gt_patterns(sprime):
        res = b_pattern_walk(s, b_pattern(p))
        if res is not None:
            out[res] = out.get(res, 0) + 1
    return dict(sorted(out.items(), reverse=True))


def _partitions_into(n: int, parts: int, cap: int | None = None):
    """Non-increasing tuples of ``parts`` nonnegative ints summing to n."""
    if cap is None:
        cap = n
    if parts == 1:
        if n <= cap:
            yield (n,)
        return
    for first in range(min(n, cap), (n + parts - 1) // parts - 1, -1):
        for rest in _partitions_into(n - first, parts - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _cg_multiplicity(m: IWeight) -> int:
    # Recursion k_m = sum_i k_{m with m_i - 1}; base case the standard rep.
    d = len(m)
    if sum(m) == 1:
        return 1  # (1,0,...,0) is the only admissible weight of sum 1
    total = 0
    for i in range(d):
        if m[i] == 0:
            continue
        child = m[:i] + (m[i] - 1,) + m[i + 1 :]
        if all(child[j] >= child[j + 1] for j in range(d - 1)):
            total += _cg_multiplicity(child)
    return total


def cg_decompose(n: int, d: int) -> dict[IWeight, int]:
    """Clebsch-Gordan content of the n-fold tensor power of the standard rep.

    Returns {i-weight (entry sum n): multiplicity} for every non-increasing
    d-tuple summing to n; completeness means sum(mult * dim) = d**n.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return {m: _cg_multiplicity(m) for m in _partitions_into(n, d)}


def ambient_commutant_dim(n: int, d: int) -> int:
    """Dimension of the algebra of S_n-invariant operators: C(n+d^2-1, d^2-1)."""
    return comb(n + d * d - 1, d * d - 1)


@lru_cache(maxsize=None)
def center_dimension(n: int, d: int) -> int:
    """Number of non-isomorphic irreps in the tensor-power decomposition.

    f(n,1) = 1;  f(n,d) = sum_{j=0}^{floor(n/d)} f(n - j*d, d-1).
    """
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    if d == 1:
        return 1
    return sum(center_dimension(n - j * d, d - 1) for j in range(n // d + 1))


def admissible_reps(n: int, d: int):
    """Quantum-number labels of the irreps occurring in the n-fold power.

    d=2: single label p = n, n-2, ...;  d=3: pairs (m-2j, j) for
    m = n, n-3, ... and j = 0..floor(m/2).
    """
    if d == 2:
        return [p for p in range(n, -1, -2)]
    if d == 3:
        out = []
        for m in range(n, -1, -3):
            for j in range(m // 2 + 1):
                out.append((m - 2 * j, j))
        return out
    raise ValueError("admissible_reps supports d in {2, 3} only")


def content_sum(m) -> int:
    """Sum of box contents (column - row) of the Young diagram of m.

    Exact order/equality key for the quadratic Casimir spectrum at fixed
    (n, d): the built operator acts on the block of m as
    2n(d^2-1)/d - 2n(n-1)/d + 4 * content_sum(m).
    """
    m = check_iweight(m)
    total = 0
    for r, length in enumerate(m, start=1):
        total += length * (length + 1) // 2 - r * length
    return total
