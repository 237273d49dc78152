import numpy as np
import pytest

import oracles
from helpers import random_bc, random_complex, random_disk
from bicomplex import (
    BCMatrix,
    BicomplexNumber,
    CoefficientFunction,
    RealizationMatrix,
    SchurFunction,
    backward_shift_realization,
    blaschke,
    blaschke_divide,
    hardy_dnorm,
    hardy_inner,
    kernel_positivity_check,
    mat_is_star_unitary,
    multiplier_contraction_check,
    realization_eval,
    schur_algorithm,
    schur_kernel_ks,
    series_multiply,
)
from bicomplex.errors import DegenerateParameter, NonVanishing, NotSchur, ZeroDivisorDenominator
from bicomplex.scalar import E, E_DAG, ONE, ZERO, HyperbolicNumber, hleq
from bicomplex.schur import (
    blaschke_chain,
    blaschke_modulus,
    blaschke_series,
    blaschke_value,
    multiplier_contraction_ratios,
    pointwise_contraction,
    realization_kernel_residual,
    sample_points,
    szego_kernel_value,
    taylor_from_realization,
    torus_point,
)


def disk_bc(rng, radius=0.9) -> BicomplexNumber:
    return BicomplexNumber.from_idempotent(random_disk(rng, radius), random_disk(rng, radius))


def random_zeros(rng, k, radius=0.8):
    return [random_disk(rng, radius) for _ in range(k)]


class TestBlaschke:
    def test_origin_is_identity(self, rng):
        s, r = blaschke(0)
        z = disk_bc(rng)
        assert s(z).isclose(z, 1e-14)
        assert r.A[0, 0].isclose(ZERO) and r.D[0, 0].isclose(ZERO)
        assert r.B[0, 0].isclose(ONE) and r.C[0, 0].isclose(ONE)

    def test_vanishes_at_parameter(self, rng):
        a = disk_bc(rng)
        s, r = blaschke(a)
        assert s(a).isclose(ZERO, 1e-14)
        assert realization_eval(r, a)[0, 0].isclose(ZERO, 1e-14)

    def test_torus_modulus_one(self, rng):
        a = disk_bc(rng, 0.7)
        for _ in range(20):
            z = torus_point(*rng.uniform(0, 2 * np.pi, 2))
            assert blaschke_modulus(a, z).isclose(HyperbolicNumber(1), 1e-12)

    def test_interior_contracts(self, rng):
        a = disk_bc(rng, 0.7)
        for _ in range(20):
            assert hleq(blaschke_modulus(a, disk_bc(rng, 0.99)), 1)

    def test_degenerate_parameter(self):
        with pytest.raises(DegenerateParameter):
            blaschke(BicomplexNumber.from_idempotent(1, 0))
        with pytest.raises(DegenerateParameter):
            blaschke(E)

    def test_series_matches_oracle(self, rng):
        a = disk_bc(rng, 0.7)
        f = blaschke_series(a, 20)
        assert np.allclose(f.c1, oracles.blaschke_factor_series(a.b1, 20), atol=1e-14)
        assert np.allclose(f.c2, oracles.blaschke_factor_series(a.b2, 20), atol=1e-14)

    def test_direct_formula_matches_components(self, rng):
        a = disk_bc(rng, 0.7)
        s, _ = blaschke(a)
        for _ in range(10):
            z = disk_bc(rng)
            assert blaschke_value(a, z).isclose(s(z), 1e-12)
            want = BicomplexNumber.from_idempotent(
                oracles.blaschke_product_value([a.b1], 1, z.b1),
                oracles.blaschke_product_value([a.b2], 1, z.b2),
            )
            assert s(z).isclose(want, 1e-12)


class TestRealization:
    def test_unitary(self, rng):
        for _ in range(10):
            _, r = blaschke(disk_bc(rng, 0.9))
            assert mat_is_star_unitary(r.block())

    def test_matches_direct_formula(self, rng):
        a = disk_bc(rng, 0.7)
        _, r = blaschke(a)
        for _ in range(10):
            z = disk_bc(rng)
            assert realization_eval(r, z)[0, 0].isclose(blaschke_value(a, z), 1e-12)

    def test_zero_state_operator(self, rng):
        b, c, d = (BCMatrix.from_entries([[random_bc(rng)]]) for _ in range(3))
        r = RealizationMatrix(BCMatrix.zeros(1, 1), b, c, d)
        z = disk_bc(rng)
        want = d[0, 0] + z * c[0, 0] * b[0, 0]
        assert realization_eval(r, z)[0, 0].isclose(want, 1e-12)

    def test_kernel_identity(self, rng):
        _, r = blaschke(disk_bc(rng, 0.7))
        for _ in range(25):
            assert realization_kernel_residual(r, disk_bc(rng), disk_bc(rng)) <= 1e-9

    def test_kernel_identity_without_adjoint_fails(self, rng):
        _, r = blaschke(disk_bc(rng, 0.7))
        worst = max(
            realization_kernel_residual(r, disk_bc(rng), disk_bc(rng), printed_form=True)
            for _ in range(25)
        )
        assert worst > 1e-3

    def test_kernel_identity_denominator(self):
        _, r = blaschke(0.3 * E)
        z = BicomplexNumber.from_idempotent(0.5, 1.0)
        with pytest.raises(ZeroDivisorDenominator):
            realization_kernel_residual(r, z, BicomplexNumber.from_idempotent(0.1, 1.0))

    def test_chain(self, rng):
        zeros = [disk_bc(rng, 0.8) for _ in range(3)]
        r = blaschke_chain(zeros)
        assert mat_is_star_unitary(r.block())
        z = disk_bc(rng)
        want = BicomplexNumber.from_idempotent(
            oracles.blaschke_product_value([a.b1 for a in zeros], 1, z.b1),
            oracles.blaschke_product_value([a.b2 for a in zeros], 1, z.b2),
        )
        assert realization_eval(r, z)[0, 0].isclose(want, 1e-12)
        for _ in range(5):
            assert realization_kernel_residual(r, disk_bc(rng), disk_bc(rng)) <= 1e-9


class TestTaylor:
    def test_constant(self):
        s = SchurFunction.constant(0.3 * E + 0.2j * E_DAG)
        f = taylor_from_realization(backward_shift_realization(s, 8), 8)
        assert f.coeffs[0].isclose(0.3 * E + 0.2j * E_DAG)
        assert all(c.isclose(ZERO) for c in f.coeffs[1:])

    def test_identity_function(self):
        s, _ = blaschke(0)
        f = taylor_from_realization(backward_shift_realization(s, 6), 6)
        assert np.allclose(f.c1, [0, 1, 0, 0, 0, 0]) and np.allclose(f.c2, [0, 1, 0, 0, 0, 0])

    @pytest.mark.parametrize("n", [4, 16, 31])
    def test_random_products(self, rng, n):
        z1, z2 = random_zeros(rng, 3), random_zeros(rng, 2)
        c1, c2 = np.exp(1j * rng.uniform(0, 6.3, 2))
        s = SchurFunction.from_blaschke(z1, z2, c1, c2)
        want1 = oracles.blaschke_product_series(z1, c1, n)
        want2 = oracles.blaschke_product_series(z2, c2, n)
        assert np.allclose(s.coefficients(n).c1, want1, atol=1e-12)
        r = backward_shift_realization(s, n)
        f = taylor_from_realization(r, n)
        assert np.max(np.abs(f.c1 - want1)) <= 1e-10
        assert np.max(np.abs(f.c2 - want2)) <= 1e-10

    def test_realization_evaluates_polynomial(self, rng):
        f = CoefficientFunction(random_complex(rng, 5), random_complex(rng, 5))
        r = backward_shift_realization(f, 5)
        z = disk_bc(rng)
        assert realization_eval(r, z)[0, 0].isclose(f(z), 1e-11)


class TestSchurAlgorithm:
    def test_constant(self):
        r1, r2 = schur_algorithm(SchurFunction.constant(0.3 * E + 0.5 * E_DAG), max_steps=4)
        assert np.allclose(r1, [0.3, 0, 0, 0]) and np.allclose(r2, [0.5, 0, 0, 0])

    def test_identity(self):
        r1, r2 = schur_algorithm(SchurFunction.from_blaschke([0], [0]))
        assert np.allclose(r1, [0, 1]) and np.allclose(r2, [0, 1])

    def test_two_factors_against_exact_recursion(self):
        s = SchurFunction.from_blaschke([0.5, -0.3], [0.5, -0.3])
        r1, _ = schur_algorithm(s)
        want = oracles.sympy_schur([0.5, -0.3])
        assert len(r1) == 3
        assert np.allclose(r1, want, atol=1e-12)
        assert abs(1 - abs(r1[-1])) <= 1e-9

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_complex_zeros_against_exact_recursion(self, rng, k):
        zeros = [complex(round(w.real, 2), round(w.imag, 2)) for w in random_zeros(rng, k, 0.7)]
        r1, r2 = schur_algorithm(SchurFunction.from_blaschke(zeros, zeros[:1]))
        assert np.allclose(r1, oracles.sympy_schur(zeros), atol=1e-9)
        assert len(r1) == k + 1 and len(r2) == 2

    def test_not_schur(self):
        s = SchurFunction.from_blaschke([0.2], [0.1], 1.5, 1)
        with pytest.raises(NotSchur) as info:
            schur_algorithm(s)
        assert info.value.component == 1


class TestKernels:
    def test_szego_positive(self):
        assert kernel_positivity_check(szego_kernel_value, sample_points(8, seed=1)).positive

    def test_constant_kernel(self):
        pts = sample_points(8, seed=2)
        assert kernel_positivity_check(lambda z, w: ONE, pts).positive
        assert not kernel_positivity_check(lambda z, w: -szego_kernel_value(z, w), pts).positive

    def test_ks_reduces_to_szego(self, rng):
        s = SchurFunction.constant(0)
        z, w = disk_bc(rng), disk_bc(rng)
        assert schur_kernel_ks(s, z, w)[0, 0].isclose(szego_kernel_value(z, w), 1e-12)

    def test_blaschke_kernel_positive(self, rng):
        s, _ = blaschke(disk_bc(rng, 0.7))
        assert kernel_positivity_check(lambda z, w: schur_kernel_ks(s, z, w), sample_points(8)).positive

    def test_inflated_kernel_indefinite(self):
        s = SchurFunction.from_blaschke([0.3], [0.2 + 0.1j], 1.2, 1)
        sample = kernel_positivity_check(lambda z, w: schur_kernel_ks(s, z, w), sample_points(8))
        assert not sample.positive
        assert sample.min_eigenvalues[0] < 0 <= sample.min_eigenvalues[1] + 1e-10

    def test_gram_is_hermitian(self):
        sample = kernel_positivity_check(szego_kernel_value, sample_points(6, seed=4))
        g = sample.gram
        assert g.star_t().isclose(g, 1e-12) and sample.hermitian

    def test_sample_points_deterministic(self):
        a = [p.z for p in sample_points(8, seed=3)]
        b = [p.z for p in sample_points(8, seed=3)]
        assert a == b and all(max(abs(z.b1), abs(z.b2)) < 0.95 for z in a)


class TestMultipliers:
    def test_constant_one(self):
        r1, r2 = multiplier_contraction_ratios(SchurFunction.constant(1), n=16)
        assert r1 == pytest.approx(1) and r2 == pytest.approx(1)

    def test_blaschke_is_isometric(self, rng):
        a = disk_bc(rng, 0.7)
        s, _ = blaschke(a)
        r1, r2 = multiplier_contraction_ratios(s, n=32)
        assert r1 == pytest.approx(1, abs=1e-12) and r2 == pytest.approx(1, abs=1e-12)

    def test_inflated_violates(self):
        assert not multiplier_contraction_check(SchurFunction.constant(1.5))

    def test_monomial_ledger(self, rng):
        a = disk_bc(rng, 0.7)
        n = 256
        b = blaschke_series(a, n)
        for big_n in range(9):
            for big_m in range(9):
                f = series_multiply(b, CoefficientFunction.monomial(big_n), n)
                g = series_multiply(b, CoefficientFunction.monomial(big_m), n)
                want = ONE if big_n == big_m else ZERO
                assert hardy_inner(f, g).isclose(want, 1e-12)

    def test_conditions_agree(self, rng):
        pts = sample_points(8)
        for k in range(30):
            zeros1 = random_zeros(rng, 1 + k % 3, 0.5)
            zeros2 = random_zeros(rng, 1 + (k + 1) % 3, 0.5)
            factor = 1.5 if k % 2 else 1.0
            s = SchurFunction.from_blaschke(zeros1, zeros2, factor, 1)
            schur = not k % 2
            pointwise = pointwise_contraction(s, pts)
            kernel = kernel_positivity_check(lambda z, w: schur_kernel_ks(s, z, w), pts).positive
            multiplier = multiplier_contraction_check(s, n=32, trials=5)
            assert pointwise == kernel == multiplier == schur, k


class TestDivision:
    def test_blaschke_over_itself(self, rng):
        a = disk_bc(rng, 0.7)
        # truncation at 64 terms leaves a remainder of order 0.7**64
        g = blaschke_divide(blaschke_series(a, 64), a)
        one = np.zeros(64)
        one[0] = 1
        assert np.max(np.abs(g.c1 - one)) < 1e-9 and np.max(np.abs(g.c2 - one)) < 1e-9

    def test_square_over_identity(self):
        g = blaschke_divide(CoefficientFunction.monomial(2), 0)
        assert np.allclose(g.c1, [0, 1, 0]) and np.allclose(g.c2, [0, 1, 0])

    def test_roundtrip(self, rng):
        a = disk_bc(rng, 0.7)
        g = CoefficientFunction(random_complex(rng, 6), random_complex(rng, 6))
        # f = (Z - a) g has an exact factor; divide out b_a and multiply the denominator back
        lin = CoefficientFunction.from_coeffs([-a, 1])
        f = lin * g
        h = blaschke_divide(f, a)
        back = series_multiply(blaschke_series(a, 40), h, 40)
        assert np.max(np.abs(back.padded(f.N).c1 - f.c1)) < 1e-9
        assert np.max(np.abs(back.c1[f.N + 5 :])) < 1e-9

    def test_non_vanishing(self):
        with pytest.raises(NonVanishing):
            blaschke_divide(CoefficientFunction.constant(1), 0.2)

    def test_norm_preserved_for_inner_factor(self, rng):
        a = disk_bc(rng, 0.5)
        g = CoefficientFunction(random_complex(rng, 8), random_complex(rng, 8))
        f = series_multiply(blaschke_series(a, 200), g, 200)
        nf, ng = hardy_dnorm(f), hardy_dnorm(g)
        assert nf.isclose(ng, 1e-10)
