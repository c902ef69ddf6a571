import itertools
import math

import numpy as np
import pytest

from permbound import bounds
from permbound.combinatorics import enumerate_subsets
from permbound.errors import DomainError
from permbound.exact import hafnian, hyperhafnian, multidim_permanent, permanent


def cmat(rng, n, m=None):
    m = n if m is None else m
    return rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))


def csym(rng, n):
    a = cmat(rng, n)
    return a + a.T


def test_f_set_brute_force():
    rng = np.random.default_rng(31)
    z = cmat(rng, 5)
    for K in [(0,), (1, 3), (0, 2, 4), (0, 1, 2, 3, 4)]:
        k = len(K)
        total = sum(
            abs(permanent(z[np.ix_(J, K)]) / math.factorial(k)) ** 2
            for J in enumerate_subsets(5, k)
        )
        expected = total / math.comb(5, k)
        assert bounds.f_set(z, K) == pytest.approx(expected, rel=1e-12)
    assert bounds.f_set(z, ()) == 1.0


def test_f_set_single_column_is_mean_square():
    rng = np.random.default_rng(32)
    z = cmat(rng, 6)
    for r in range(6):
        expected = float((np.abs(z[:, r]) ** 2).mean())
        assert bounds.f_set(z, (r,)) == pytest.approx(expected, rel=1e-12)


def test_f_tilde_dominates_f_and_matches_brute_force():
    rng = np.random.default_rng(33)
    z = cmat(rng, 6)
    for K in [(0, 1), (2, 3, 5), (0, 1, 2, 3)]:
        k = len(K)
        row_means = (np.abs(z[:, K]) ** 2).sum(axis=1) / k
        total = 0.0
        for J in enumerate_subsets(6, k):
            p = 1.0
            for j in J:
                p *= row_means[j]
            total += p
        expected = total / math.comb(6, k)
        got = bounds.f_tilde(z, K)
        assert got == pytest.approx(expected, rel=1e-12)
        assert got >= bounds.f_set(z, K) - 1e-12 * got


def test_F_level_is_mean_of_f_set():
    rng = np.random.default_rng(34)
    z = cmat(rng, 5)
    for k in range(6):
        expected = (
            sum(bounds.f_set(z, K) for K in enumerate_subsets(5, k))
            / math.comb(5, k)
            if k
            else 1.0
        )
        assert bounds.F_level(z, k) == pytest.approx(expected, rel=1e-12)


def test_partition_bound_dominates_and_refines():
    rng = np.random.default_rng(35)
    z = cmat(rng, 6)
    cols = (0, 1, 2, 4)
    f = bounds.f_set(z, cols)
    coarse = bounds.partition_bound_f(z, cols, ((0, 1, 2), (4,)))
    fine = bounds.partition_bound_f(z, cols, ((0, 1), (2,), (4,)))
    assert f <= coarse * (1 + 1e-12)
    assert coarse <= fine * (1 + 1e-12)


def test_permanent_bound_partition_dominates():
    rng = np.random.default_rng(36)
    for n in (3, 4, 5, 6):
        z = cmat(rng, n)
        target = abs(permanent(z))
        for blocks in [
            tuple((j,) for j in range(n)),
            (tuple(range(n)),),
        ]:
            assert bounds.permanent_bound_partition(z, blocks) >= target * (
                1 - 1e-12
            )


def test_composition_bound_dominates_and_subadditivity():
    rng = np.random.default_rng(37)
    z = cmat(rng, 5)
    for k in range(6):
        F = bounds.F_level(z, k)
        for parts in [(k,), (1, k - 1) if k >= 1 else (0, k)]:
            if any(p < 0 for p in parts):
                continue
            assert F <= bounds.composition_bound_F(z, k, parts) * (1 + 1e-12)
    target = abs(permanent(z))
    assert bounds.permanent_bound_composition(z, (1, 1, 1, 1, 1)) >= target * (
        1 - 1e-12
    )
    assert bounds.permanent_bound_composition(z, (2, 3)) >= target * (1 - 1e-12)


def test_constant_columns_partition_equality():
    c = np.array([0.8 - 0.1j, -0.4 + 0.9j, 0.3 + 0.3j, 1.1 + 0.0j])
    z = np.tile(c, (4, 1))
    cols = (0, 1, 2, 3)
    f = bounds.f_set(z, cols)
    prod = bounds.partition_bound_f(z, cols, ((0, 2), (1,), (3,)))
    assert f == pytest.approx(prod, rel=1e-12)
    assert bounds.permanent_bound_partition(z, ((0, 1), (2, 3))) == pytest.approx(
        abs(permanent(z)), rel=1e-12
    )


def test_constant_matrix_composition_equality():
    z = np.full((5, 5), 0.6 - 0.7j)
    for k, parts in [(3, (1, 2)), (4, (2, 2)), (5, (1, 1, 3))]:
        assert bounds.F_level(z, k) == pytest.approx(
            bounds.composition_bound_F(z, k, parts), rel=1e-12
        )
    assert bounds.permanent_bound_composition(z, (2, 3)) == pytest.approx(
        abs(permanent(z)), rel=1e-12
    )


def test_zero_column_kills_f():
    rng = np.random.default_rng(38)
    z = cmat(rng, 4)
    z[:, 2] = 0.0
    assert bounds.f_set(z, (1, 2)) == 0.0
    assert bounds.partition_bound_f(z, (1, 2), ((1,), (2,))) == 0.0


def test_f_ell_set_matrix_case_reduces_to_f_set():
    rng = np.random.default_rng(39)
    z = cmat(rng, 4)
    for K in [(0,), (1, 2), (0, 1, 3)]:
        assert bounds.f_ell_set(z, K) == pytest.approx(
            bounds.f_set(z, K), rel=1e-12
        )
    for k in range(4):
        assert bounds.F_ell_level(z, k) == pytest.approx(
            bounds.F_level(z, k), rel=1e-12
        )


def test_f_ell_set_brute_force_order_three():
    rng = np.random.default_rng(40)
    n = 3
    t = rng.standard_normal((n, n, n)) + 1j * rng.standard_normal((n, n, n))
    K = (0, 2)
    k = len(K)
    subs = list(enumerate_subsets(n, k))
    total = 0.0
    for J1 in subs:
        for J2 in subs:
            minor = t[np.ix_(J1, J2, K)]
            total += abs(multidim_permanent(minor) / math.factorial(k) ** 2) ** 2
    expected = total / len(subs) ** 2
    assert bounds.f_ell_set(t, K) == pytest.approx(expected, rel=1e-12)


def test_multidim_permanent_bound_dominates():
    rng = np.random.default_rng(41)
    n = 3
    t = rng.standard_normal((n, n, n)) + 1j * rng.standard_normal((n, n, n))
    target = abs(multidim_permanent(t))
    assert bounds.multidim_permanent_bound(t, ((0,), (1,), (2,))) >= target * (
        1 - 1e-12
    )
    assert bounds.multidim_permanent_bound(t, (1, 2), by_level=True) >= target * (
        1 - 1e-12
    )


def test_G_level_closed_forms():
    rng = np.random.default_rng(42)
    z = csym(rng, 6)
    # k = 1: scale 1!*2/2! = 1, mean over pairs of |z_jk|^2
    pairs = [abs(z[j, k]) ** 2 for j, k in itertools.combinations(range(6), 2)]
    assert bounds.G_level(z, 1) == pytest.approx(float(np.mean(pairs)), rel=1e-12)
    # brute force for k = 2
    scale = math.factorial(2) * 4 / math.factorial(4)
    vals = [
        abs(scale * hafnian(z[np.ix_(J, J)])) ** 2
        for J in enumerate_subsets(6, 4)
    ]
    assert bounds.G_level(z, 2) == pytest.approx(float(np.mean(vals)), rel=1e-12)
    assert bounds.G_level(z, 0) == 1.0


def test_hafnian_bound_dominates():
    rng = np.random.default_rng(43)
    for n in (4, 6, 8):
        z = csym(rng, n)
        target = abs(hafnian(z))
        m = n // 2
        for parts in [(m,), tuple(1 for _ in range(m))]:
            assert bounds.hafnian_bound(z, parts) >= target * (1 - 1e-12)


def test_constant_offdiagonal_hafnian_equality():
    y = 0.4 + 0.2j
    n, m = 6, 3
    z = np.full((n, n), y)
    np.fill_diagonal(z, 0.0)
    assert bounds.G_level(z, 2) == pytest.approx(
        bounds.G_level(z, 1) ** 2, rel=1e-12
    )
    assert bounds.hafnian_bound(z, (1, 2)) == pytest.approx(
        abs(hafnian(z)), rel=1e-12
    )


def test_G_ell_level_and_hyperhafnian_bound():
    rng = np.random.default_rng(44)
    a = rng.standard_normal((6, 6, 6))
    t = np.zeros_like(a)
    for axes in itertools.permutations(range(3)):
        t += a.transpose(axes)
    t /= 6.0
    g1 = bounds.G_ell_level(t, 1)
    # scale for k=1 is l!/l! = 1: mean over triples of |t[i,j,k]|^2
    vals = [
        abs(t[i, j, k]) ** 2
        for i, j, k in itertools.combinations(range(6), 3)
    ]
    assert g1 == pytest.approx(float(np.mean(vals)), rel=1e-12)
    assert bounds.G_ell_level(t, 2) <= g1**2 * (1 + 1e-12)
    target = abs(hyperhafnian(t))
    for parts in [(2,), (1, 1)]:
        assert bounds.hyperhafnian_bound(t, parts) >= target * (1 - 1e-12)


def test_unit_circle_pair_bound_matches_f_products():
    rng = np.random.default_rng(45)
    x = rng.standard_normal((6, 6))
    t = 1.3
    z = np.exp(1j * t * x)
    blocks = ((0, 1), (2, 3), (4, 5))
    expected = bounds.permanent_bound_partition(z, blocks) / math.factorial(6)
    assert bounds.unit_circle_pair_bound(x, t) == pytest.approx(
        expected, rel=1e-10
    )
    # permuted pairing
    s = (3, 0, 5, 1, 2, 4)
    blocks_s = ((0, 3), (1, 5), (2, 4))
    expected_s = bounds.permanent_bound_partition(z, blocks_s) / math.factorial(6)
    assert bounds.unit_circle_pair_bound(x, t, s) == pytest.approx(
        expected_s, rel=1e-10
    )


def test_unit_circle_bounds_dominate_exact():
    rng = np.random.default_rng(46)
    for n in (4, 5, 6):
        x = rng.standard_normal((n, n))
        for t in (0.3, 1.0, 2.2):
            z = np.exp(1j * t * x)
            target = abs(permanent(z)) / math.factorial(n)
            assert bounds.unit_circle_pair_bound(x, t) >= target - 1e-12
            assert bounds.unit_circle_avg_bound(x, t) >= target - 1e-12
            assert bounds.unit_circle_theta_bound(x, t) >= target - 1e-12


def test_unit_circle_theta_majorizes_avg():
    rng = np.random.default_rng(47)
    x = rng.standard_normal((6, 6))
    for t in (0.2, 0.9, 1.7, 3.0):
        avg = bounds.unit_circle_avg_bound(x, t)
        theta = bounds.unit_circle_theta_bound(x, t)
        assert theta >= avg - 1e-12
        # theta bound never drops below (1/4)^(d/2)
        assert theta >= 0.25 ** (x.shape[0] // 2 / 2) - 1e-12


def test_unit_circle_rejects_bad_input():
    with pytest.raises(DomainError):
        bounds.unit_circle_pair_bound(np.zeros((1, 1)), 1.0)
    with pytest.raises(DomainError):
        bounds.unit_circle_pair_bound(np.zeros((2, 3)), 1.0)
    with pytest.raises(DomainError):
        bounds.unit_circle_pair_bound(np.zeros((4, 4)), 1.0, s=(0, 1, 2, 2))


def test_spectral_norm_and_singular_values_against_numpy():
    rng = np.random.default_rng(48)
    for shape in [(4, 4), (6, 3), (5, 5), (7, 7)]:
        z = cmat(rng, *shape)
        ref = np.linalg.svd(z, compute_uv=False)
        assert bounds.spectral_norm(z) == pytest.approx(ref[0], rel=1e-10)
        got = bounds.singular_values(z)
        assert np.allclose(got, ref, rtol=1e-9, atol=1e-9)


def test_singular_values_zero_matrix():
    assert bounds.spectral_norm(np.zeros((3, 3))) == 0.0
    assert np.all(bounds.singular_values(np.zeros((3, 3))) == 0.0)


def test_baseline_opnorm():
    rng = np.random.default_rng(49)
    z = cmat(rng, 5)
    n = 5
    col = float(np.abs(z).sum(axis=0).max())
    row = float(np.abs(z).sum(axis=1).max())
    assert bounds.baseline_opnorm(z, 1) == pytest.approx(col**n, rel=1e-12)
    assert bounds.baseline_opnorm(z, "inf") == pytest.approx(row**n, rel=1e-12)
    s1 = np.linalg.svd(z, compute_uv=False)[0]
    assert bounds.baseline_opnorm(z, 2) == pytest.approx(s1**n, rel=1e-9)
    with pytest.raises(DomainError):
        bounds.baseline_opnorm(z, 3)
    for p in (1, 2, "inf"):
        assert bounds.baseline_opnorm(z, p) >= abs(permanent(z)) * (1 - 1e-10)


def test_baseline_singular():
    rng = np.random.default_rng(50)
    z = cmat(rng, 5)
    sv = np.linalg.svd(z, compute_uv=False)
    expected = math.sqrt(float((sv ** 10).sum() / 5))
    assert bounds.baseline_singular(z) == pytest.approx(expected, rel=1e-9)
    assert bounds.baseline_singular(z) >= abs(permanent(z)) * (1 - 1e-10)


def test_baseline_hadamard():
    rng = np.random.default_rng(51)
    z = cmat(rng, 5)
    assert bounds.baseline_hadamard(z) >= abs(permanent(z)) * (1 - 1e-12)
    phases = np.exp(1j * rng.standard_normal((6, 6)))
    assert bounds.baseline_hadamard(phases) == pytest.approx(
        math.factorial(6), rel=1e-12
    )


def test_baseline_ckp_dominates_f():
    rng = np.random.default_rng(52)
    z = cmat(rng, 5)
    for cols in [(0, 1), (2, 3, 4), None]:
        K = tuple(range(5)) if cols is None else cols
        assert bounds.baseline_ckp_minor(z, cols) >= bounds.f_set(z, K) * (
            1 - 1e-12
        )


def test_baseline_krauter_applicability():
    rng = np.random.default_rng(53)
    assert bounds.baseline_krauter(np.ones((4, 4))) is None  # n < 5
    assert bounds.baseline_krauter(cmat(rng, 6)) is None  # not a sign matrix
    z = np.ones((5, 5))
    z[0, 0] = -1.0
    got = bounds.baseline_krauter(z)
    assert got is not None
    assert got >= abs(permanent(z))
    # full rank sign matrix: rank 5 gives permanent_D(5, 4)
    signs = np.where(np.eye(5) > 0, -1.0, 1.0)
    rank = bounds.real_rank(signs)
    assert rank == np.linalg.matrix_rank(signs)
    assert bounds.baseline_krauter(signs) >= abs(permanent(signs))


def test_real_rank_against_numpy():
    rng = np.random.default_rng(54)
    for _ in range(10):
        a = rng.standard_normal((5, 5))
        if rng.random() < 0.5:
            a[:, 2] = a[:, 0] + a[:, 1]  # force a rank drop
        assert bounds.real_rank(a) == np.linalg.matrix_rank(a)


def test_baseline_haf_per():
    rng = np.random.default_rng(55)
    z = csym(rng, 6)
    assert bounds.baseline_haf_per(z) >= abs(hafnian(z)) * (1 - 1e-12)
    with pytest.raises(DomainError):
        bounds.baseline_haf_per(np.zeros((3, 3)))


def test_minor_sum_phi_and_bound():
    rng = np.random.default_rng(56)
    z = cmat(rng, 4)
    for k in range(5):
        total = 0.0 + 0.0j
        for K in enumerate_subsets(4, k):
            for J in enumerate_subsets(4, k):
                total += permanent(z[np.ix_(J, K)])
        phi = bounds.minor_sum_phi(z, k)
        assert phi == pytest.approx(total, rel=1e-12)
        assert abs(phi) <= bounds.phi_bound(z, k) * (1 + 1e-12)


def test_subhafnian_sum_psi_and_bounds():
    rng = np.random.default_rng(57)
    z = csym(rng, 6)
    for k in range(4):
        total = 0.0 + 0.0j
        for J in enumerate_subsets(6, 2 * k):
            total += hafnian(z[np.ix_(J, J)])
        psi = bounds.subhafnian_sum_psi(z, k)
        assert psi == pytest.approx(total, rel=1e-12)
        level, entry = bounds.psi_bounds(z, k)
        assert abs(psi) <= level * (1 + 1e-12)
        assert abs(psi) <= entry * (1 + 1e-12)
