from fractions import Fraction

from hypothesis import given, strategies as st

from mwsextic.qbar import CONJUGATIONS, conjugate_elem
from mwsextic.tower import SQRT_M3, W, Z, ZETA6, QzwElem, TowerRing

RING = TowerRing(5, 7)
small = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))
qzw = st.dictionaries(st.tuples(st.integers(0, 1), st.integers(0, 2)), small, max_size=3) \
    .map(QzwElem.from_parts)


@st.composite
def tower_elems(draw):
    e = RING.zero()
    for _ in range(draw(st.integers(0, 3))):
        e = e + RING.elem(draw(qzw), draw(st.integers(0, 5)), draw(st.integers(0, 5)))
    return e


@given(tower_elems(), tower_elems(), tower_elems())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == RING.zero()


@given(tower_elems(), tower_elems())
def test_complex_embedding_is_a_homomorphism(a, b):
    # independent oracle: floating point values under u -> 5^(1/6), v -> 7^(1/6), w -> 2^(1/3)
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-6 * (1 + abs(a.to_complex() * b.to_complex()))


@given(qzw.filter(bool))
def test_qzw_inverse(x):
    assert x * x.inverse() == QzwElem.rational(1)


def test_defining_relations():
    z, u, v, w = RING.z, RING.u, RING.v, RING.w
    assert z * z + z + 1 == RING.zero()
    assert u ** 6 == RING.elem(5) and v ** 6 == RING.elem(7) and w ** 3 == RING.elem(2)
    assert RING.elem(SQRT_M3) ** 2 == RING.elem(-3)
    assert RING.elem(ZETA6) ** 6 == RING.one()


def test_inverses():
    assert RING.one().inverse() == RING.one()
    assert RING.z.inverse() == RING.z * RING.z
    assert RING.u.inverse() * RING.u == RING.one()
    x = RING.u + RING.elem(W, 0, 1)
    assert x * x.inverse() == RING.one()


def _conj(name, e):
    return conjugate_elem(name, e)


def test_conjugation_fixed_elements():
    u, v, z, w = RING.u, RING.v, RING.z, RING.w
    s = RING.elem(W * W, 2, 2)
    for e in (u, z, v ** 3):
        assert _conj("sigma_K", e) == e
    assert _conj("sigma_K", v ** 2) == z * v ** 2
    for e in (v, z, u ** 3):
        assert _conj("sigma_K'", e) == e
    for e in (u, v, z):
        assert _conj("sigma_L", e) == e
    assert _conj("sigma_L", s) == z * s
    for e in (u, z, v ** 2, s):
        assert _conj("tau_L", e) == e
    assert _conj("tau_L", v ** 3) == -(v ** 3)
    assert _conj("kappa", z) == z * z


@given(tower_elems(), tower_elems())
def test_conjugations_are_ring_maps(a, b):
    for name in CONJUGATIONS:
        assert _conj(name, a * b) == _conj(name, a) * _conj(name, b)
        assert _conj(name, a + b) == _conj(name, a) + _conj(name, b)


def test_z_constant():
    assert Z * Z * Z == QzwElem.rational(1)
