"""Set functions on subset lattices, their convolution, and inequality checks.

A :class:`SetFunction` stores one value per l-tuple of fixed-size subsets of
l ground sets, densely indexed by lexicographic subset rank. The central
operation is the size-restricted subset convolution

    p(J) = sum over I <= J with |I| = j of g(I) * h(J \\ I)

(componentwise over the l axes), whose mean-square is dominated by the
product of the factor mean-squares after dividing by the number of terms.
:func:`verify_convolution_inequality` checks that inequality on explicit
tables, :func:`classify_equality` reports which structural equality
conditions an instance satisfies, and :func:`generalized_R` with
:func:`verify_master_inequality` handle the block-product generalization
(sums over partition tuples of products of factor functions).
"""

from __future__ import annotations

import functools
import itertools
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .combinatorics import (
    IndexSet,
    as_index_set,
    enumerate_partitions,
    subset_count,
    subset_rank,
)
from .errors import DomainError

HOLD_RTOL = 1e-12
EQ_RTOL = 1e-10


@functools.lru_cache(maxsize=None)
def _subsets(n: int, k: int) -> tuple[IndexSet, ...]:
    return tuple(itertools.combinations(range(n), k))


def _normalize_arg(subsets, arity: int):
    """Accept a bare subset for arity 1, else a tuple of subsets."""
    if arity == 1 and subsets and all(isinstance(e, int) for e in subsets):
        return (tuple(subsets),)
    if arity == 1 and not subsets:
        return ((),)
    out = tuple(tuple(s) for s in subsets)
    if len(out) != arity:
        raise DomainError(f"expected {arity} subsets, got {len(out)}")
    return out


class SetFunction:
    """Dense table over products of fixed-size subset levels.

    sizes[s] is the ground set size of axis s and levels[s] the subset size;
    the table has shape (C(sizes[s], levels[s]))_s with cells addressed by
    lexicographic subset rank per axis.
    """

    def __init__(self, sizes, levels, table):
        self.sizes = (sizes,) if isinstance(sizes, int) else tuple(sizes)
        self.levels = (levels,) if isinstance(levels, int) else tuple(levels)
        if len(self.sizes) != len(self.levels) or not self.sizes:
            raise DomainError("sizes and levels must be equal-length, nonempty")
        for n, j in zip(self.sizes, self.levels):
            if not 0 <= j <= n:
                raise DomainError(f"level {j} outside [0, {n}]")
        shape = tuple(
            subset_count(n, j) for n, j in zip(self.sizes, self.levels)
        )
        self.table = np.asarray(table)
        if self.table.shape != shape:
            raise DomainError(
                f"table shape {self.table.shape} does not match {shape}"
            )

    @property
    def arity(self) -> int:
        return len(self.sizes)

    @classmethod
    def from_callable(cls, sizes, levels, fn: Callable) -> "SetFunction":
        """Tabulate ``fn`` over the subset lattice.

        ``fn`` receives one subset per axis (a bare subset for arity 1).
        """
        sizes_t = (sizes,) if isinstance(sizes, int) else tuple(sizes)
        levels_t = (levels,) if isinstance(levels, int) else tuple(levels)
        streams = [_subsets(n, j) for n, j in zip(sizes_t, levels_t)]
        table = np.zeros(tuple(len(s) for s in streams), dtype=complex)
        for cell in itertools.product(*(range(len(s)) for s in streams)):
            table[cell] = fn(*(streams[s][cell[s]] for s in range(len(streams))))
        if table.size == 0 or not np.max(np.abs(table.imag)) > 0:
            table = np.ascontiguousarray(table.real)
        return cls(sizes_t, levels_t, table)

    def value(self, subsets):
        """Value at an l-tuple of subsets (bare subset allowed for arity 1)."""
        args = _normalize_arg(subsets, self.arity)
        cell = tuple(
            subset_rank(as_index_set(sub, n), n)
            for sub, n in zip(args, self.sizes)
        )
        return self.table[cell]

    def mean_square(self) -> float:
        """Mean of |value|^2 over all cells."""
        return float((np.abs(self.table) ** 2).mean())

    def is_nonnegative(self) -> bool:
        if np.iscomplexobj(self.table) and np.max(np.abs(self.table.imag)) > 0:
            return False
        return bool(np.min(self.table.real) >= 0)


def subset_convolution(g: SetFunction, h: SetFunction) -> SetFunction:
    """Size-restricted subset convolution of two set functions.

    Both factors must share ground sets; the result lives at the
    componentwise level sum: p(J) = sum over I <= J with |I_s| = g.levels[s]
    of g(I) * h(J \\ I).
    """
    if g.sizes != h.sizes:
        raise DomainError("factors must share ground sets")
    out_levels = tuple(a + b for a, b in zip(g.levels, h.levels))
    for n, k in zip(g.sizes, out_levels):
        if k > n:
            raise DomainError(f"combined level {k} exceeds ground size {n}")
    dtype = np.result_type(g.table.dtype, h.table.dtype, float)
    shape = tuple(subset_count(n, k) for n, k in zip(g.sizes, out_levels))
    table = np.zeros(shape, dtype=dtype)
    streams = [_subsets(n, k) for n, k in zip(g.sizes, out_levels)]
    for cell in itertools.product(*(range(len(s)) for s in streams)):
        js = [streams[s][cell[s]] for s in range(len(streams))]
        total = 0
        for parts in itertools.product(
            *(
                itertools.combinations(j, lev)
                for j, lev in zip(js, g.levels)
            )
        ):
            rest = tuple(
                tuple(e for e in j if e not in set(i))
                for j, i in zip(js, parts)
            )
            total += g.value(parts) * h.value(rest)
        table[cell] = total
    return SetFunction(g.sizes, out_levels, table)


@dataclass(frozen=True)
class ConvolutionCheck:
    """Outcome of one convolution inequality evaluation."""

    lhs: float
    rhs: float
    holds: bool
    equal: bool


def verify_multi_inequality(
    g: SetFunction, h: SetFunction, *, rtol: float = HOLD_RTOL
) -> ConvolutionCheck:
    """Check the convolution mean-square inequality on product lattices.

    For non-negative g, h the mean over J of
    (p(J) / prod_s C(k_s, j_s))^2 is at most the product of the factor
    mean squares; ``holds`` allows the slack rtol * rhs.
    """
    if not (g.is_nonnegative() and h.is_nonnegative()):
        raise DomainError("inequality requires non-negative set functions")
    p = subset_convolution(g, h)
    scale = 1.0
    for k, j in zip(p.levels, g.levels):
        scale *= math.comb(k, j)
    lhs = float((np.abs(p.table.real / scale) ** 2).mean())
    rhs = g.mean_square() * h.mean_square()
    return ConvolutionCheck(
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs + rtol * rhs,
        equal=abs(lhs - rhs) <= EQ_RTOL * max(lhs, rhs, 1e-300),
    )


def verify_convolution_inequality(
    g: SetFunction, h: SetFunction, *, rtol: float = HOLD_RTOL
) -> ConvolutionCheck:
    """Single-axis (arity 1) version of :func:`verify_multi_inequality`."""
    if g.arity != 1 or h.arity != 1:
        raise DomainError("expected arity-1 set functions")
    return verify_multi_inequality(g, h, rtol=rtol)


def classify_equality(
    g: SetFunction, h: SetFunction, *, rtol: float = EQ_RTOL
) -> tuple[str, ...]:
    """Structural conditions under which the convolution inequality is tight.

    Returns the satisfied condition names among:

    * "degenerate_level": one factor sits at level 0 or at the full
      combined level (the convolution is then a plain product),
    * "g_zero" / "h_zero": a factor vanishes identically,
    * "complement_proportional": the combined level equals the ground size
      and g(I) = x * h(complement of I) for some x >= 0,
    * "both_constant": both factors are constant.

    Arity 1 only; tolerances are relative with parameter ``rtol``.
    """
    if g.arity != 1 or h.arity != 1:
        raise DomainError("expected arity-1 set functions")
    if g.sizes != h.sizes:
        raise DomainError("factors must share ground sets")
    n = g.sizes[0]
    j = g.levels[0]
    k = j + h.levels[0]
    if k > n:
        raise DomainError(f"combined level {k} exceeds ground size {n}")
    gt = g.table.real.astype(float)
    ht = h.table.real.astype(float)
    out: list[str] = []
    if j == 0 or j == k:
        out.append("degenerate_level")
    g_scale = float(np.max(np.abs(gt))) if gt.size else 0.0
    h_scale = float(np.max(np.abs(ht))) if ht.size else 0.0
    if g_scale == 0.0:
        out.append("g_zero")
    if h_scale == 0.0:
        out.append("h_zero")
    if k == n:
        # complement pairing: subset ranks of I and of its complement
        comp = np.zeros_like(gt)
        for idx, sub in enumerate(_subsets(n, j)):
            chosen = set(sub)
            rest = tuple(e for e in range(n) if e not in chosen)
            comp[idx] = ht[subset_rank(rest, n)]
        denom = float((comp**2).sum())
        if denom == 0.0:
            x = 0.0
        else:
            x = max(float((gt * comp).sum() / denom), 0.0)
        resid = float(np.max(np.abs(gt - x * comp))) if gt.size else 0.0
        if resid <= rtol * max(g_scale, h_scale, 1e-300):
            out.append("complement_proportional")
    g_spread = float(np.max(gt) - np.min(gt)) if gt.size else 0.0
    h_spread = float(np.max(ht) - np.min(ht)) if ht.size else 0.0
    if g_spread <= rtol * max(g_scale, 1e-300) and h_spread <= rtol * max(
        h_scale, 1e-300
    ):
        out.append("both_constant")
    return tuple(out)


@dataclass(frozen=True)
class ExpansionSystem:
    """A family of factor set functions sharing ground sets.

    Factor r consumes one subset per axis with sizes given by its levels;
    the per-axis level sums k_s = sum_r levels_r[s] must not exceed the
    ground sizes.
    """

    factors: tuple[SetFunction, ...]
    sizes: tuple[int, ...] = field(init=False)
    levels: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if not self.factors:
            raise DomainError("need at least one factor")
        sizes = self.factors[0].sizes
        for f in self.factors:
            if f.sizes != sizes:
                raise DomainError("factors must share ground sets")
        levels = tuple(
            sum(f.levels[s] for f in self.factors) for s in range(len(sizes))
        )
        for n, k in zip(sizes, levels):
            if k > n:
                raise DomainError(f"combined level {k} exceeds ground size {n}")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "levels", levels)

    @property
    def arity(self) -> int:
        return len(self.sizes)

    def weight(self, axis: int) -> tuple[int, ...]:
        """Block sizes consumed on one axis, ordered by factor."""
        return tuple(f.levels[axis] for f in self.factors)


def _as_system(factors) -> ExpansionSystem:
    if isinstance(factors, ExpansionSystem):
        return factors
    return ExpansionSystem(tuple(factors))


def generalized_R(factors, subsets) -> complex:
    """Sum over per-axis ordered partitions of products of factor values.

    ``subsets`` carries one index set J_s per axis with |J_s| equal to the
    per-axis level sum; the value is
    sum over (V_1s, ..., V_ds) in Part(J_s, weight(s)) for every axis s of
    prod_r factor_r(V_r1, ..., V_rl).
    """
    system = _as_system(factors)
    args = _normalize_arg(subsets, system.arity)
    js = tuple(
        as_index_set(sub, n) for sub, n in zip(args, system.sizes)
    )
    for j, k in zip(js, system.levels):
        if len(j) != k:
            raise DomainError(
                f"index set size {len(j)} does not match level sum {k}"
            )
    axis_parts = [
        tuple(enumerate_partitions(j, system.weight(s)))
        for s, j in enumerate(js)
    ]
    total = 0
    for combo in itertools.product(*axis_parts):
        prod = 1
        for r, f in enumerate(system.factors):
            prod *= f.value(tuple(combo[s][r] for s in range(system.arity)))
        total += prod
    return complex(total)


@dataclass(frozen=True)
class MasterCheck:
    """Outcome of one master inequality evaluation."""

    lhs: float
    rhs: float
    holds: bool


def verify_master_inequality(
    factors, *, rtol: float = HOLD_RTOL
) -> MasterCheck:
    """Check the mean-square bound for block-product expansions.

    The mean over J-tuples of |prefactor * R(J)|^2, with prefactor
    prod_s (prod_r w_rs!) / k_s!, is at most the product over factors of
    their mean squares. Factors may be complex valued.
    """
    system = _as_system(factors)
    prefactor = 1.0
    for s, (n, k) in enumerate(zip(system.sizes, system.levels)):
        w = system.weight(s)
        num = 1.0
        for p in w:
            num *= math.factorial(p)
        prefactor *= num / math.factorial(k)
    streams = [
        _subsets(n, k) for n, k in zip(system.sizes, system.levels)
    ]
    total = 0.0
    cells = 0
    for js in itertools.product(*streams):
        total += abs(prefactor * generalized_R(system, js)) ** 2
        cells += 1
    lhs = total / cells
    rhs = 1.0
    for f in system.factors:
        rhs *= f.mean_square()
    return MasterCheck(lhs=lhs, rhs=rhs, holds=lhs <= rhs + rtol * rhs)
