from hypothesis import given, strategies as st

import oracles
from helpers import bicomplex
from bicomplex import BicomplexNumber, Biquaternion, hc_inner
from bicomplex.biquat import I2, conj_odot, self_inner_parts
from bicomplex.scalar import J, ONE, dplus_contains

biquats = st.builds(Biquaternion, bicomplex, bicomplex)


def coords(q: Biquaternion):
    return (q.q1.z1, q.q1.z2, q.q2.z1, q.q2.z2)


def from_coords(c):
    return Biquaternion(BicomplexNumber(c[0], c[1]), BicomplexNumber(c[2], c[3]))


def tol(*qs):
    scale = 1.0
    for q in qs:
        scale *= max(1.0, q.norm())
    return 1e-12 * scale


def test_odot_examples():
    assert conj_odot(Biquaternion(ONE)) == Biquaternion(ONE)
    assert conj_odot(I2).isclose(-I2)


def test_unit_relations():
    i1 = Biquaternion(J)
    i3 = i1 * I2
    assert (I2 * I2).isclose(-Biquaternion(ONE))
    assert (i3 * i3).isclose(-Biquaternion(ONE))
    assert (I2 * i1).isclose(-i3)


def test_self_inner_examples():
    assert hc_inner(Biquaternion(ONE), Biquaternion(ONE)).isclose(Biquaternion(ONE))
    assert hc_inner(I2, I2).isclose(Biquaternion(ONE))


@given(biquats, biquats)
def test_product_matches_hamilton(z, w):
    want = from_coords(oracles.hamilton(coords(z), coords(w)))
    assert (z * w).isclose(want, tol(z, w))


@given(biquats)
def test_odot_matches_hermitian_conjugate(z):
    assert z.odot() == from_coords(oracles.quaternion_hermitian_conj(coords(z)))


@given(biquats, biquats)
def test_odot_antimultiplicative(z, w):
    assert (z * w).odot().isclose(w.odot() * z.odot(), tol(z, w))


@given(biquats, biquats)
def test_inner_is_product_with_odot(z, w):
    assert hc_inner(z, w).isclose(z * w.odot(), tol(z, w))


@given(bicomplex, biquats, biquats)
def test_left_linearity(lam, z, w):
    scale = tol(z, w) * max(1.0, abs(lam))
    assert hc_inner(lam * z, w).isclose(lam * hc_inner(z, w), scale)


@given(biquats, biquats)
def test_first_component_is_bc2_inner(z, w):
    want = oracles.inner([(z.q1.z1, z.q1.z2), (z.q2.z1, z.q2.z2)], [(w.q1.z1, w.q1.z2), (w.q2.z1, w.q2.z2)])
    assert hc_inner(z, w).q1.isclose(BicomplexNumber(*want), tol(z, w))


@given(biquats)
def test_self_inner_structure(z):
    inner = hc_inner(z, z)
    eta, r, s = self_inner_parts(z)
    assert inner.q1.is_hyperbolic(tol(z, z))
    assert dplus_contains(eta)
    # second component is i r + k s: no real part in either cartesian slot
    x = inner.q2
    assert abs(x.z1.real) <= tol(z, z) and abs(x.z2.real) <= tol(z, z)
    assert x.isclose(BicomplexNumber(1j * r, 1j * s), tol(z, z))
    direct = z.q1 * z.q1.star() + z.q2 * z.q2.star()
    assert inner.q1.isclose(direct, tol(z, z))


def test_self_inner_zero_only_at_zero():
    eta, r, s = self_inner_parts(Biquaternion(BicomplexNumber(0j)))
    assert (eta.a, eta.b, r, s) == (0, 0, 0, 0)


@given(biquats)
def test_eta_positive_for_nonzero(z):
    eta, _, _ = self_inner_parts(z)
    if z.norm() > 1e-6:
        assert eta.nu > 0 or eta.mu > 0


@given(biquats)
def test_conjugations_are_involutions(z):
    for name in ("odot", "bar", "dagger1", "star", "dagger2", "dagger3", "diamond"):
        assert getattr(getattr(z, name)(), name)() == z
