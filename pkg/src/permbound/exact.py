"""Exact evaluation of permanents, hafnians and their tensor generalizations.

The permanent kernel is a Gray-code inclusion-exclusion sum with O(2^n * n)
cost; a direct n! enumeration is kept behind a flag as an oracle. Hafnians
use the "match the smallest unpaired index" recursion with (n-1)!! products,
hyperhafnians its block generalization. Expansion identities (developing a
permanent or hafnian along a fixed block structure) are implemented as
independent routes so tests can cross-check them against the kernels.

Conventions: the permanent of an empty matrix is 1, the hafnian of an empty
matrix is 1, hafnian-type functions never read diagonal blocks, and all
index sets are 0-based.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence

import numpy as np

from .combinatorics import (
    as_composition,
    enumerate_partitions,
    validate_partition,
)
from .errors import DomainError

SYMMETRY_ATOL = 1e-12


def _as_square(z) -> np.ndarray:
    a = np.asarray(z, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {a.shape}")
    return a


def permanent(z, *, method: str = "gray") -> complex:
    """Permanent of a square complex matrix.

    Parameters
    ----------
    z : array_like
        Square matrix; the empty matrix gives 1.
    method : {"gray", "direct"}
        "gray" runs the Gray-code inclusion-exclusion kernel (O(2^n * n)),
        "direct" sums all n! diagonal products and is retained as a
        brute-force oracle for small n.

    Returns
    -------
    complex
        sum over bijections s of prod_j z[j, s(j)].
    """
    a = _as_square(z)
    if method == "gray":
        return _permanent_gray(a)
    if method == "direct":
        return _permanent_direct(a)
    raise DomainError(f"unknown permanent method {method!r}")


def _permanent_direct(a: np.ndarray) -> complex:
    n = a.shape[0]
    if n == 0:
        return 1.0 + 0.0j
    total = 0.0 + 0.0j
    rows = range(n)
    for cols in itertools.permutations(rows):
        p = 1.0 + 0.0j
        for i in rows:
            p *= a[i, cols[i]]
        total += p
    return total


def _permanent_gray(a: np.ndarray) -> complex:
    # Glynn's formula: per(a) = 2^(1-n) * sum over sign vectors d with
    # d[0] = +1 of (prod_i d[i]) * prod_j (sum_i d[i] a[i, j]); the sign
    # vectors are walked in Gray-code order so each step updates the column
    # sums with one row.
    n = a.shape[0]
    if n == 0:
        return 1.0 + 0.0j
    col = a.sum(axis=0)
    delta = np.ones(n)
    sign = 1.0
    total = col.prod()
    for counter in range(1, 1 << (n - 1)):
        i = (counter & -counter).bit_length()  # flip rows 1..n-1
        delta[i] = -delta[i]
        col = col + (2.0 * delta[i]) * a[i]
        sign = -sign
        total += sign * col.prod()
    return complex(total / 2.0 ** (n - 1))


def permanent_minor(z, rows: Sequence[int], cols: Sequence[int]) -> complex:
    """Permanent of the submatrix z[rows, cols] (rows and cols same length)."""
    a = np.asarray(z, dtype=complex)
    if a.ndim != 2:
        raise DomainError(f"expected a matrix, got shape {a.shape}")
    if len(rows) != len(cols):
        raise DomainError("row and column selections must have equal size")
    if len(rows) == 0:
        return 1.0 + 0.0j
    return permanent(a[np.ix_(tuple(rows), tuple(cols))])


def multidim_permanent(t, *, method: str = "direct") -> complex:
    """Permanent of an order-(l+1) tensor with all axes of equal size k.

    Generalizes the matrix permanent: the value is the sum over l-tuples of
    bijections (s1, ..., sl) of range(k) of prod_j t[s1(j), ..., sl(j), j].
    For l = 1 this is the matrix permanent. Direct enumeration costs
    (k!)^l * k products and is intended for small k.
    """
    a = np.asarray(t, dtype=complex)
    if a.ndim < 2:
        raise DomainError("tensor must have at least 2 axes")
    k = a.shape[0]
    if any(s != k for s in a.shape):
        raise DomainError(f"all axes must have equal size, got shape {a.shape}")
    if method != "direct":
        raise DomainError(f"unknown multidim permanent method {method!r}")
    ell = a.ndim - 1
    if k == 0:
        return 1.0 + 0.0j
    last = np.arange(k)
    perms = [np.asarray(p) for p in itertools.permutations(range(k))]
    total = 0.0 + 0.0j
    for combo in itertools.product(perms, repeat=ell):
        total += a[combo + (last,)].prod()
    return complex(total)


def _check_symmetric_matrix(a: np.ndarray, atol: float) -> None:
    if a.shape[0] and np.max(np.abs(a - a.T)) > atol:
        raise DomainError(f"matrix is not symmetric within {atol:g}")


def hafnian(z, *, atol: float = SYMMETRY_ATOL) -> complex:
    """Hafnian of a symmetric complex matrix of even dimension.

    Sums, over all perfect matchings of the index set, the product of the
    matched entries ((n-1)!! products via the smallest-unpaired-index
    recursion). Diagonal entries are never read, the empty matrix gives 1,
    odd dimension or asymmetry beyond ``atol`` (absolute) raises DomainError.
    """
    a = _as_square(z)
    n = a.shape[0]
    if n % 2:
        raise DomainError(f"hafnian needs an even dimension, got {n}")
    _check_symmetric_matrix(a, atol)

    def rec(active: tuple[int, ...]) -> complex:
        if not active:
            return 1.0 + 0.0j
        j0 = active[0]
        rest = active[1:]
        total = 0.0 + 0.0j
        for i, p in enumerate(rest):
            total += a[j0, p] * rec(rest[:i] + rest[i + 1 :])
        return total

    return complex(rec(tuple(range(n))))


def _check_symmetric_tensor(a: np.ndarray, atol: float) -> None:
    ell = a.ndim
    if ell < 2 or a.size == 0:
        return
    # transpositions generating the symmetric group: adjacent swap + cycle
    swap = (1, 0) + tuple(range(2, ell))
    cycle = tuple(range(1, ell)) + (0,)
    for axes in (swap, cycle):
        if np.max(np.abs(a - a.transpose(axes))) > atol:
            raise DomainError(f"tensor is not symmetric within {atol:g}")


def hyperhafnian(
    t, *, method: str = "recursive", atol: float = SYMMETRY_ATOL
) -> complex:
    """Hafnian generalization for a fully symmetric order-l tensor.

    For an l-dimensional tensor over n = l*m indices the value is
    1/(m! (l!)^m) times the sum over all n! orderings j of the products
    prod_r t[j(r*l), ..., j(r*l + l - 1)]; equivalently the sum over all
    unordered partitions of the index set into m blocks of size l of the
    block-entry products. For l = 2 this is the hafnian. The empty tensor
    gives 1.

    method "recursive" matches the smallest unused index with every
    (l-1)-subset of the remaining indices (n!/(m! (l!)^m) products);
    "direct" evaluates the normalized n!-term sum and serves as an oracle.
    """
    a = np.asarray(t, dtype=complex)
    ell = a.ndim
    if ell < 1:
        raise DomainError("tensor must have at least 1 axis")
    n = a.shape[0] if ell else 0
    if any(s != n for s in a.shape):
        raise DomainError(f"all axes must have equal size, got shape {a.shape}")
    if n % ell:
        raise DomainError(f"axis size {n} is not a multiple of the order {ell}")
    _check_symmetric_tensor(a, atol)
    if n == 0:
        return 1.0 + 0.0j
    if method == "direct":
        m = n // ell
        total = 0.0 + 0.0j
        for j in itertools.permutations(range(n)):
            p = 1.0 + 0.0j
            for r in range(m):
                p *= a[j[r * ell : (r + 1) * ell]]
            total += p
        return complex(total / (math.factorial(m) * math.factorial(ell) ** m))
    if method != "recursive":
        raise DomainError(f"unknown hyperhafnian method {method!r}")

    def rec(active: tuple[int, ...]) -> complex:
        if not active:
            return 1.0 + 0.0j
        j0 = active[0]
        rest = active[1:]
        total = 0.0 + 0.0j
        for partners in itertools.combinations(rest, ell - 1):
            chosen = set(partners)
            left = tuple(e for e in rest if e not in chosen)
            total += a[(j0,) + partners] * rec(left)
        return total

    return complex(rec(tuple(range(n))))


def permanent_via_laplace(z, column_blocks: Sequence[Sequence[int]]) -> complex:
    """Permanent via expansion along an ordered partition of the columns.

    For any ordered partition (W_1, ..., W_d) of the column set, the
    permanent equals the sum over ordered partitions (V_1, ..., V_d) of the
    row set with |V_r| = |W_r| of prod_r per(z[V_r, W_r]). Independent route
    to :func:`permanent` used for cross-checks.
    """
    a = _as_square(z)
    n = a.shape[0]
    blocks = validate_partition(column_blocks, range(n))
    sizes = tuple(len(b) for b in blocks)
    total = 0.0 + 0.0j
    for vs in enumerate_partitions(range(n), sizes):
        prod = 1.0 + 0.0j
        for v, w in zip(vs, blocks):
            prod *= permanent_minor(a, v, w)
        total += prod
    return complex(total)


def multidim_permanent_via_laplace(
    t,
    sizes: Sequence[int],
    column_blocks: Sequence[Sequence[int]] | None = None,
    *,
    symmetrized: bool = False,
) -> complex:
    """Tensor permanent via expansion along blocks of the last axis.

    With ``column_blocks`` given (an ordered partition of the last axis with
    block sizes ``sizes``), sums over all choices of ordered partitions of
    each of the first l axes the products of block tensor permanents.

    With ``symmetrized=True`` the expansion instead averages over every
    ordered partition W of the last axis with block sizes ``sizes``; the sum
    acquires the prefactor prod_r sizes[r]! / k!.
    """
    a = np.asarray(t, dtype=complex)
    if a.ndim < 2:
        raise DomainError("tensor must have at least 2 axes")
    k = a.shape[0]
    if any(s != k for s in a.shape):
        raise DomainError(f"all axes must have equal size, got shape {a.shape}")
    ell = a.ndim - 1
    w = as_composition(sizes, total=k)

    def expand(blocks: tuple[tuple[int, ...], ...]) -> complex:
        total = 0.0 + 0.0j
        for vs in itertools.product(
            *(enumerate_partitions(range(k), w) for _ in range(ell))
        ):
            prod = 1.0 + 0.0j
            for r, wr in enumerate(blocks):
                selector = tuple(vs[s][r] for s in range(ell)) + (wr,)
                prod *= multidim_permanent(a[np.ix_(*selector)])
            total += prod
        return total

    if symmetrized:
        if column_blocks is not None:
            raise DomainError("symmetrized expansion chooses its own column blocks")
        factor = 1.0
        for p in w:
            factor *= math.factorial(p)
        factor /= math.factorial(k)
        total = 0.0 + 0.0j
        for blocks in enumerate_partitions(range(k), w):
            total += expand(blocks)
        return complex(factor * total)

    if column_blocks is None:
        raise DomainError("column_blocks is required unless symmetrized=True")
    blocks = validate_partition(column_blocks, range(k))
    if tuple(len(b) for b in blocks) != w:
        raise DomainError("column block sizes do not match the given sizes")
    return complex(expand(blocks))


def hyperhafnian_via_expansion(t, sizes: Sequence[int]) -> complex:
    """Tensor hafnian via expansion into diagonal blocks.

    For an l-dimensional symmetric tensor over n = l*k indices and a weak
    composition ``sizes`` of k, the value equals
    prod_r sizes[r]! / k! times the sum over ordered partitions
    (V_1, ..., V_d) of the index set with |V_r| = l * sizes[r] of
    prod_r hyperhafnian(t[V_r, ..., V_r]). Independent route used to
    cross-check :func:`hyperhafnian` (and :func:`hafnian` at l = 2).
    """
    a = np.asarray(t, dtype=complex)
    ell = a.ndim
    if ell < 1:
        raise DomainError("tensor must have at least 1 axis")
    n = a.shape[0] if ell else 0
    if any(s != n for s in a.shape):
        raise DomainError(f"all axes must have equal size, got shape {a.shape}")
    if n % ell:
        raise DomainError(f"axis size {n} is not a multiple of the order {ell}")
    k = n // ell
    w = as_composition(sizes, total=k)
    factor = 1.0
    for p in w:
        factor *= math.factorial(p)
    factor /= math.factorial(k)
    block_sizes = tuple(ell * p for p in w)
    total = 0.0 + 0.0j
    for vs in enumerate_partitions(range(n), block_sizes):
        prod = 1.0 + 0.0j
        for v in vs:
            prod *= hyperhafnian(a[np.ix_(*([v] * ell))])
        total += prod
    return complex(factor * total)


def permanent_D(n: int, neg: int) -> int:
    """Permanent of the n x n all-ones matrix with the first ``neg``
    diagonal entries replaced by -1.

    Closed form: sum_{j=0}^{neg} (-2)^j C(neg, j) (n-j)!. Exact integer
    arithmetic; permanent_D(n, 0) = n!.
    """
    if not 0 <= neg <= n:
        raise DomainError(f"need 0 <= neg <= n, got neg={neg}, n={n}")
    return sum(
        (-2) ** j * math.comb(neg, j) * math.factorial(n - j) for j in range(neg + 1)
    )


def block_embed_per_as_haf(z) -> np.ndarray:
    """Symmetric 2n x 2n block matrix [[0, z], [z^T, 0]].

    Its hafnian equals the permanent of z, turning the hafnian kernel into
    an independent oracle for the permanent.
    """
    a = _as_square(z)
    n = a.shape[0]
    out = np.zeros((2 * n, 2 * n), dtype=complex)
    out[:n, n:] = a
    out[n:, :n] = a.T
    return out
