"""Subset-average upper bounds for permanents and hafnians, plus baselines.

The central quantities are averages of squared normalized minors:

* ``f_set(Z, K)``: mean over row subsets J of |per(Z[J, K]) / k!|^2,
* ``F_level(Z, k)``: mean of f_set over all column subsets of size k,
* ``G_level(Z, k)``: mean over principal subsets J of the squared
  normalized sub-hafnian |haf(Z[J, J]) k! 2^k / (2k)!|^2,

together with their tensor versions. Products of these averages over a
partition of the columns (or a composition of the level) dominate the
normalized permanent or hafnian; the ``*_bound`` functions return the
corresponding absolute bounds.

Unit-modulus matrices admit closed trigonometric forms; the
``unit_circle_*`` functions evaluate those directly from a phase matrix and
return bounds on |per| / n!.

Baselines (operator-norm powers, singular-value means, column-norm
products, the rank bound for sign matrices) are included for comparison
tables. Spectral quantities are computed by in-package iterative routines
(power iteration, cyclic Jacobi) with fixed tolerances.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence

import numpy as np

from .combinatorics import (
    as_composition,
    as_index_set,
    enumerate_subsets,
    subset_count,
    validate_partition,
)
from .errors import DomainError, NumericError
from .exact import hafnian, hyperhafnian, multidim_permanent, permanent, permanent_D

_POWER_SEED = 20260815


def _as_matrix(z) -> np.ndarray:
    a = np.asarray(z, dtype=complex)
    if a.ndim != 2:
        raise DomainError(f"expected a matrix, got shape {a.shape}")
    if a.shape[1] > a.shape[0]:
        raise DomainError(
            f"need at least as many rows as columns, got shape {a.shape}"
        )
    return a


def _as_square(z) -> np.ndarray:
    a = np.asarray(z, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    return a


# ---------------------------------------------------------------------------
# subset averages for permanents


def f_set(z, cols: Sequence[int]) -> float:
    """Mean over row subsets J of |per(z[J, K]) / k!|^2 for K = cols.

    The empty column set gives 1. Requires len(cols) <= number of rows.
    """
    a = _as_matrix(z)
    n, m = a.shape
    K = as_index_set(cols, m)
    k = len(K)
    if k == 0:
        return 1.0
    fact = math.factorial(k)
    total = 0.0
    for J in enumerate_subsets(n, k):
        total += abs(permanent(a[np.ix_(J, K)]) / fact) ** 2
    return total / subset_count(n, k)


def f_tilde(z, cols: Sequence[int]) -> float:
    """Row-wise relaxation of :func:`f_set`.

    Mean over row subsets J of prod_{j in J} ((1/k) sum_{r in K} |z[j,r]|^2);
    always >= f_set(z, cols). Computed through the elementary symmetric
    polynomial of the row means, so no subset enumeration is needed.
    """
    a = _as_matrix(z)
    n, m = a.shape
    K = as_index_set(cols, m)
    k = len(K)
    if k == 0:
        return 1.0
    row_means = (np.abs(a[:, K]) ** 2).sum(axis=1) / k
    # e_k(row_means) via the standard DP recurrence
    e = np.zeros(k + 1)
    e[0] = 1.0
    for w in row_means:
        top = min(k, n)
        e[1 : top + 1] = e[1 : top + 1] + w * e[0:top]
    return float(e[k] / subset_count(n, k))


def F_level(z, k: int) -> float:
    """Mean of f_set(z, K) over all column subsets K of size k."""
    a = _as_matrix(z)
    m = a.shape[1]
    if not 0 <= k <= m:
        raise DomainError(f"level k={k} outside [0, {m}]")
    if k == 0:
        return 1.0
    total = 0.0
    for K in enumerate_subsets(m, k):
        total += f_set(a, K)
    return total / subset_count(m, k)


def partition_bound_f(z, cols: Sequence[int], blocks: Sequence[Sequence[int]]) -> float:
    """Product of f_set over an ordered partition of the column set.

    Dominates f_set(z, cols); refining the partition can only increase the
    product.
    """
    a = _as_matrix(z)
    K = as_index_set(cols, a.shape[1])
    parts = validate_partition(blocks, K)
    out = 1.0
    for w in parts:
        out *= f_set(a, w)
    return out


def permanent_bound_partition(z, blocks: Sequence[Sequence[int]]) -> float:
    """Absolute bound n! * prod_r sqrt(f_set(z, W_r)) >= |per(z)|.

    ``blocks`` must be an ordered partition of all columns of the square
    matrix z.
    """
    a = _as_square(z)
    n = a.shape[0]
    parts = validate_partition(blocks, range(n))
    out = float(math.factorial(n))
    for w in parts:
        out *= math.sqrt(f_set(a, w))
    return out


def composition_bound_F(z, k: int, parts: Sequence[int]) -> float:
    """Product of F_level over a weak composition of the level k.

    Dominates F_level(z, k); zero parts contribute the factor F(z, 0) = 1.
    """
    w = as_composition(parts, total=k)
    out = 1.0
    for p in w:
        out *= F_level(z, p)
    return out


def permanent_bound_composition(z, parts: Sequence[int]) -> float:
    """Absolute bound n! * prod_r sqrt(F_level(z, w_r)) >= |per(z)|.

    ``parts`` must be a weak composition of n for the square matrix z.
    """
    a = _as_square(z)
    n = a.shape[0]
    w = as_composition(parts, total=n)
    out = float(math.factorial(n))
    for p in w:
        out *= math.sqrt(F_level(a, p))
    return out


# ---------------------------------------------------------------------------
# tensor versions


def _as_row_tensor(t) -> tuple[np.ndarray, int, int, int]:
    """Validate a tensor with l equal row axes and a final column axis."""
    a = np.asarray(t, dtype=complex)
    if a.ndim < 2:
        raise DomainError("tensor must have at least 2 axes")
    ell = a.ndim - 1
    n = a.shape[0]
    if any(s != n for s in a.shape[:-1]):
        raise DomainError(f"row axes must have equal size, got shape {a.shape}")
    m = a.shape[-1]
    if m > n:
        raise DomainError(f"column axis larger than row axes: shape {a.shape}")
    return a, ell, n, m


def f_ell_set(t, cols: Sequence[int]) -> float:
    """Tensor version of :func:`f_set`.

    For a tensor with l row axes of size n and a column axis, the mean over
    l-tuples of row subsets (J_1, ..., J_l) of
    |per(t[J_1, ..., J_l, K]) / (k!)^l|^2.
    """
    a, ell, n, m = _as_row_tensor(t)
    K = as_index_set(cols, m)
    k = len(K)
    if k == 0:
        return 1.0
    norm = float(math.factorial(k) ** ell)
    subsets = list(enumerate_subsets(n, k))
    total = 0.0
    for rows in itertools.product(subsets, repeat=ell):
        minor = a[np.ix_(*rows, K)]
        total += abs(multidim_permanent(minor) / norm) ** 2
    return total / len(subsets) ** ell


def F_ell_level(t, k: int) -> float:
    """Mean of f_ell_set over all column subsets of size k."""
    a, _, _, m = _as_row_tensor(t)
    if not 0 <= k <= m:
        raise DomainError(f"level k={k} outside [0, {m}]")
    if k == 0:
        return 1.0
    total = 0.0
    for K in enumerate_subsets(m, k):
        total += f_ell_set(a, K)
    return total / subset_count(m, k)


def partition_bound_f_ell(
    t, cols: Sequence[int], blocks: Sequence[Sequence[int]]
) -> float:
    """Product of f_ell_set over an ordered partition of the column set."""
    a, _, _, m = _as_row_tensor(t)
    K = as_index_set(cols, m)
    parts = validate_partition(blocks, K)
    out = 1.0
    for w in parts:
        out *= f_ell_set(a, w)
    return out


def composition_bound_F_ell(t, k: int, parts: Sequence[int]) -> float:
    """Product of F_ell_level over a weak composition of the level k."""
    w = as_composition(parts, total=k)
    out = 1.0
    for p in w:
        out *= F_ell_level(t, p)
    return out


def multidim_permanent_bound(t, blocks_or_parts, *, by_level: bool = False) -> float:
    """Absolute bound (n!)^l * prod_r sqrt(...) >= |per_l(t)| for square t.

    With ``by_level=False`` interprets the second argument as an ordered
    partition of the columns and uses f_ell_set; with ``by_level=True`` as a
    weak composition of n and uses F_ell_level.
    """
    a, ell, n, m = _as_row_tensor(t)
    if m != n:
        raise DomainError("bound needs equal row and column sizes")
    out = float(math.factorial(n)) ** ell
    if by_level:
        w = as_composition(blocks_or_parts, total=n)
        for p in w:
            out *= math.sqrt(F_ell_level(a, p))
    else:
        parts = validate_partition(blocks_or_parts, range(n))
        for wr in parts:
            out *= math.sqrt(f_ell_set(a, wr))
    return out


# ---------------------------------------------------------------------------
# hafnian side


def G_level(z, k: int) -> float:
    """Mean over index subsets J of size 2k of the squared normalized
    sub-hafnian |haf(z[J, J]) * k! 2^k / (2k)!|^2.

    z must be symmetric; diagonal entries are never read. G_level(z, 0) = 1.
    """
    a = _as_square(z)
    n = a.shape[0]
    if k < 0 or 2 * k > n:
        raise DomainError(f"level k={k} needs 0 <= 2k <= {n}")
    if k == 0:
        return 1.0
    scale = math.factorial(k) * 2**k / math.factorial(2 * k)
    total = 0.0
    for J in enumerate_subsets(n, 2 * k):
        total += abs(scale * hafnian(a[np.ix_(J, J)])) ** 2
    return total / subset_count(n, 2 * k)


def hafnian_bound(z, parts: Sequence[int]) -> float:
    """Absolute bound (n!/(m! 2^m)) * prod_r sqrt(G_level(z, w_r)) >= |haf(z)|.

    ``parts`` must be a weak composition of m = n/2.
    """
    a = _as_square(z)
    n = a.shape[0]
    if n % 2:
        raise DomainError(f"hafnian bound needs an even dimension, got {n}")
    m = n // 2
    w = as_composition(parts, total=m)
    out = math.factorial(n) / (math.factorial(m) * 2**m)
    for p in w:
        out *= math.sqrt(G_level(a, p))
    return out


def G_ell_level(t, k: int) -> float:
    """Tensor version of :func:`G_level` for a symmetric order-l tensor.

    Mean over index subsets J of size l*k of
    |hyperhafnian(t[J, ..., J]) * k! (l!)^k / (lk)!|^2.
    """
    a = np.asarray(t, dtype=complex)
    ell = a.ndim
    if ell < 1:
        raise DomainError("tensor must have at least 1 axis")
    n = a.shape[0]
    if any(s != n for s in a.shape):
        raise DomainError(f"all axes must have equal size, got shape {a.shape}")
    if k < 0 or ell * k > n:
        raise DomainError(f"level k={k} needs 0 <= {ell}k <= {n}")
    if k == 0:
        return 1.0
    scale = (
        math.factorial(k) * math.factorial(ell) ** k / math.factorial(ell * k)
    )
    total = 0.0
    for J in enumerate_subsets(n, ell * k):
        total += abs(scale * hyperhafnian(a[np.ix_(*([J] * ell))])) ** 2
    return total / subset_count(n, ell * k)


def hyperhafnian_bound(t, parts: Sequence[int]) -> float:
    """Absolute bound (n!/(m! (l!)^m)) * prod_r sqrt(G_ell_level(t, w_r)).

    For a symmetric order-l tensor over n = l*m indices and a weak
    composition ``parts`` of m; dominates |hyperhafnian(t)|.
    """
    a = np.asarray(t, dtype=complex)
    ell = a.ndim
    n = a.shape[0] if ell else 0
    if ell < 1 or any(s != n for s in a.shape):
        raise DomainError(f"expected a symmetric hypercube tensor, got {a.shape}")
    if n % ell:
        raise DomainError(f"axis size {n} is not a multiple of the order {ell}")
    m = n // ell
    w = as_composition(parts, total=m)
    out = math.factorial(n) / (math.factorial(m) * math.factorial(ell) ** m)
    for p in w:
        out *= math.sqrt(G_ell_level(a, p))
    return out


# ---------------------------------------------------------------------------
# unit-modulus closed forms


def _as_phase_matrix(x) -> np.ndarray:
    a = np.asarray(x, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square phase matrix, got shape {a.shape}")
    if a.shape[0] < 2:
        raise DomainError("unit-circle bounds need dimension >= 2")
    return a


def _validate_perm(s, n: int) -> tuple[int, ...]:
    if s is None:
        return tuple(range(n))
    perm = tuple(int(e) for e in s)
    if sorted(perm) != list(range(n)):
        raise DomainError(f"not a permutation of range({n}): {perm}")
    return perm


def _mean_cos_sq(x: np.ndarray, t: float, u: int, v: int) -> float:
    """Mean over ordered index pairs (j, k), j != k, of
    cos(t * (x[j,u] - x[k,u] - x[j,v] + x[k,v]) / 2) ** 2."""
    n = x.shape[0]
    d = x[:, u] - x[:, v]
    y = d[:, None] - d[None, :]
    c = np.cos(0.5 * t * y) ** 2
    return float((c.sum() - n) / (n * (n - 1)))


def unit_circle_pair_bound(x, t: float, s: Sequence[int] | None = None) -> float:
    """Pairing bound on |per(exp(i t x))| / n! for a unit-modulus matrix.

    Columns are paired by the permutation s (default identity): block r is
    (s[2r], s[2r+1]). The bound is the product over the floor(n/2) pairs of
    the square roots of the pair cosine averages; for odd n the unpaired
    column contributes the factor 1.
    """
    a = _as_phase_matrix(x)
    n = a.shape[0]
    perm = _validate_perm(s, n)
    out = 1.0
    for r in range(n // 2):
        out *= math.sqrt(_mean_cos_sq(a, t, perm[2 * r], perm[2 * r + 1]))
    return out


def unit_circle_avg_bound(x, t: float) -> float:
    """Permutation-free averaged bound on |per(exp(i t x))| / n!.

    Averages the pair cosine mean over all ordered column pairs and raises
    it to the power floor(n/2) / 2.
    """
    a = _as_phase_matrix(x)
    n = a.shape[0]
    total = 0.0
    for u in range(n):
        for v in range(n):
            if u != v:
                total += _mean_cos_sq(a, t, u, v)
    avg = total / (n * (n - 1))
    return avg ** (0.5 * (n // 2))


def unit_circle_theta_bound(x, t: float) -> float:
    """Polynomial refinement (1 - theta)^(floor(n/2)/2) of the averaged bound.

    Uses the majorant cos(v)^2 <= 1 - v^2 + v^2 * min(1, v^2 / 3); theta is
    the resulting average of (t y / 2)^2 * max(0, 1 - (t y)^2 / 12) and lies
    in [0, 3/4].
    """
    a = _as_phase_matrix(x)
    n = a.shape[0]
    total = 0.0
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            d = a[:, u] - a[:, v]
            y = d[:, None] - d[None, :]
            term = (t * y / 2.0) ** 2 * np.maximum(0.0, 1.0 - (t * y) ** 2 / 12.0)
            total += float(term.sum())
    theta = total / (n * (n - 1)) ** 2
    return (1.0 - theta) ** (0.5 * (n // 2))


# ---------------------------------------------------------------------------
# baselines


def baseline_hadamard(z) -> float:
    """Column-norm bound n! * prod_r sqrt((1/n) sum_j |z[j,r]|^2) >= |per(z)|."""
    a = _as_square(z)
    n = a.shape[0]
    if n == 0:
        return 1.0
    means = (np.abs(a) ** 2).mean(axis=0)
    return float(math.factorial(n) * np.sqrt(means).prod())


def baseline_ckp_minor(z, cols: Sequence[int] | None = None) -> float:
    """Product of column mean squares prod_{r in cols} ((1/n) sum_j |z[j,r]|^2).

    Dominates f_set(z, cols) (the averaged squared normalized minors of the
    selected columns). ``cols`` defaults to all columns.
    """
    a = _as_matrix(z)
    K = (
        tuple(range(a.shape[1]))
        if cols is None
        else as_index_set(cols, a.shape[1])
    )
    if not K:
        return 1.0
    means = (np.abs(a[:, K]) ** 2).mean(axis=0)
    return float(means.prod())


def spectral_norm(z, *, tol: float = 1e-12, maxiter: int = 10000) -> float:
    """Largest singular value via power iteration on z^H z.

    Deterministic seeded start vector; stops when the Rayleigh quotient
    changes by at most tol * max(1, value). Raises NumericError with the
    final iterates if maxiter is exceeded.
    """
    a = np.asarray(z, dtype=complex)
    if a.ndim != 2:
        raise DomainError(f"expected a matrix, got shape {a.shape}")
    m = a.shape[1]
    if m == 0 or a.shape[0] == 0:
        return 0.0
    h = a.conj().T @ a
    rng = np.random.default_rng(_POWER_SEED)
    v = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    v /= math.sqrt(float((np.abs(v) ** 2).sum()))
    lam = 0.0
    for _ in range(maxiter):
        w = h @ v
        norm = math.sqrt(float((np.abs(w) ** 2).sum()))
        if norm == 0.0:
            return 0.0
        v = w / norm
        new = float((v.conj() @ (h @ v)).real)
        if abs(new - lam) <= tol * max(1.0, abs(new)):
            return math.sqrt(max(new, 0.0))
        lam = new
    raise NumericError(
        f"power iteration did not converge in {maxiter} iterations "
        f"(last value {lam!r})"
    )


def singular_values(z, *, tol: float = 1e-12, max_sweeps: int = 60) -> np.ndarray:
    """All singular values via cyclic Jacobi diagonalization of z^H z.

    Returns the values in descending order. Convergence is declared when the
    off-diagonal Frobenius norm drops below tol times the matrix norm;
    exceeding ``max_sweeps`` raises NumericError.
    """
    a = np.asarray(z, dtype=complex)
    if a.ndim != 2:
        raise DomainError(f"expected a matrix, got shape {a.shape}")
    m = a.shape[1]
    if m == 0:
        return np.zeros(0)
    h = (a.conj().T @ a).astype(complex)
    h = (h + h.conj().T) / 2.0
    scale = math.sqrt(float((np.abs(h) ** 2).sum()))
    if scale == 0.0:
        return np.zeros(m)

    def offdiag() -> float:
        off = h - np.diag(np.diag(h))
        return math.sqrt(float((np.abs(off) ** 2).sum()))

    for _ in range(max_sweeps):
        if offdiag() <= tol * scale:
            break
        for p in range(m - 1):
            for q in range(p + 1, m):
                apq = h[p, q]
                if abs(apq) <= tol * scale / m:
                    continue
                phase = apq / abs(apq)
                tau = (h[q, q].real - h[p, p].real) / (2.0 * abs(apq))
                sign = 1.0 if tau >= 0 else -1.0
                tt = sign / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + tt * tt)
                s = tt * c
                col_p = h[:, p].copy()
                col_q = h[:, q].copy()
                h[:, p] = c * col_p - s * np.conj(phase) * col_q
                h[:, q] = s * phase * col_p + c * col_q
                row_p = h[p, :].copy()
                row_q = h[q, :].copy()
                h[p, :] = c * row_p - s * phase * row_q
                h[q, :] = s * np.conj(phase) * row_p + c * row_q
                h[p, q] = 0.0
                h[q, p] = 0.0
    else:
        raise NumericError(
            f"Jacobi sweeps did not converge in {max_sweeps} sweeps "
            f"(off-diagonal norm {offdiag()!r})"
        )
    eig = np.sort(np.diag(h).real)[::-1]
    return np.sqrt(np.clip(eig, 0.0, None))


def baseline_opnorm(z, p) -> float:
    """Operator-norm bound ||z||_p ** n >= |per(z)| for p in {1, 2, inf}.

    p = 1 is the maximum column absolute sum, p = inf the maximum row
    absolute sum, p = 2 the largest singular value (power iteration).
    """
    a = _as_square(z)
    n = a.shape[0]
    if n == 0:
        return 1.0
    key = str(p).lower()
    if key == "1":
        norm = float(np.abs(a).sum(axis=0).max())
    elif key in ("inf", "infinity"):
        norm = float(np.abs(a).sum(axis=1).max())
    elif key == "2":
        norm = spectral_norm(a)
    else:
        raise DomainError(f"unsupported operator norm p={p!r}")
    return norm**n


def baseline_singular(z) -> float:
    """Singular-value bound sqrt((1/n) sum_j alpha_j^(2n)) >= |per(z)|."""
    a = _as_square(z)
    n = a.shape[0]
    if n == 0:
        return 1.0
    sv = singular_values(a)
    return float(math.sqrt((sv ** (2 * n)).sum() / n))


def real_rank(a, *, pivot_tol: float = 1e-9) -> int:
    """Rank of a real matrix by Gaussian elimination with partial pivoting.

    A pivot below ``pivot_tol`` in absolute value ends the elimination.
    """
    m = np.asarray(a, dtype=float).copy()
    if m.ndim != 2:
        raise DomainError(f"expected a matrix, got shape {m.shape}")
    rows, cols = m.shape
    rank = 0
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        pivot = row + int(np.argmax(np.abs(m[row:, col])))
        if abs(m[pivot, col]) <= pivot_tol:
            continue
        m[[row, pivot]] = m[[pivot, row]]
        m[row + 1 :] -= np.outer(m[row + 1 :, col] / m[row, col], m[row])
        row += 1
        rank += 1
    return rank


def baseline_krauter(z, *, atol: float = 1e-12) -> int | None:
    """Rank-based bound for sign matrices, or None when not applicable.

    For an n x n matrix with entries +-1 (within ``atol``) and n >= 5,
    returns the exact integer permanent_D(n, rank - 1) dominating |per(z)|,
    where the rank is computed by real Gaussian elimination. Any other input
    returns None (the not-applicable signal, not an error).
    """
    a = np.asarray(z, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return None
    n = a.shape[0]
    if n < 5:
        return None
    if np.max(np.abs(np.abs(a.real) - 1.0)) > atol or np.max(np.abs(a.imag)) > atol:
        return None
    signs = np.where(a.real > 0, 1.0, -1.0)
    rank = real_rank(signs)
    return permanent_D(n, rank - 1)


def baseline_haf_per(z) -> float:
    """Bound sqrt(per(|z|)) >= |haf(z)| for a symmetric even-dimension matrix."""
    a = _as_square(z)
    n = a.shape[0]
    if n % 2:
        raise DomainError(f"hafnian baseline needs an even dimension, got {n}")
    value = permanent(np.abs(a)).real
    return math.sqrt(max(value, 0.0))


# ---------------------------------------------------------------------------
# minor sums


def minor_sum_phi(z, k: int) -> complex:
    """Sum of per(z[J, K]) over all row and column subsets of size k."""
    a = _as_matrix(z)
    n, m = a.shape
    if not 0 <= k <= min(n, m):
        raise DomainError(f"level k={k} outside [0, {min(n, m)}]")
    total = 0.0 + 0.0j
    for K in enumerate_subsets(m, k):
        for J in enumerate_subsets(n, k):
            total += permanent(a[np.ix_(J, K)])
    return complex(total)


def phi_bound(z, k: int) -> float:
    """Bound C(m,k) C(n,k) k! sqrt(F_level(z, k)) >= |minor_sum_phi(z, k)|."""
    a = _as_matrix(z)
    n, m = a.shape
    if not 0 <= k <= min(n, m):
        raise DomainError(f"level k={k} outside [0, {min(n, m)}]")
    return (
        subset_count(m, k)
        * subset_count(n, k)
        * math.factorial(k)
        * math.sqrt(F_level(a, k))
    )


def subhafnian_sum_psi(z, k: int) -> complex:
    """Sum of haf(z[J, J]) over all index subsets of size 2k."""
    a = _as_square(z)
    n = a.shape[0]
    if k < 0 or 2 * k > n:
        raise DomainError(f"level k={k} needs 0 <= 2k <= {n}")
    total = 0.0 + 0.0j
    for J in enumerate_subsets(n, 2 * k):
        total += hafnian(a[np.ix_(J, J)])
    return complex(total)


def psi_bounds(z, k: int) -> tuple[float, float]:
    """Two bounds on |subhafnian_sum_psi(z, k)|.

    Returns (level bound, entry bound): the first uses sqrt(G_level(z, k)),
    the second the k/2 power of G_level(z, 1) (the mean squared off-diagonal
    entry). Both are multiplied by C(n, 2k) (2k)! / (k! 2^k).
    """
    a = _as_square(z)
    n = a.shape[0]
    if k < 0 or 2 * k > n:
        raise DomainError(f"level k={k} needs 0 <= 2k <= {n}")
    count = subset_count(n, 2 * k) * math.factorial(2 * k) / (
        math.factorial(k) * 2**k
    )
    g1 = G_level(a, 1) if n >= 2 else 0.0
    return (
        float(count * math.sqrt(G_level(a, k))),
        float(count * g1 ** (k / 2.0)),
    )
