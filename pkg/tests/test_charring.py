import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import freudenthal, lr_tensor, s_entry, verlinde
from sl3fusion.charring import (
    character,
    decompose,
    fold_to_alcove,
    integrable_fusion,
    integrable_fusion_row,
    modular_s,
    q_character_eval,
    r_eval,
    shifted_dominant,
    tensor_multiplicity,
    tensor_product,
    weight_multiplicity,
    weyl_dimension,
)
from sl3fusion.weyl import WBAR, Weight, dominant_weights

small_dominant = st.builds(Weight, st.integers(0, 5), st.integers(0, 5))
any_weight = st.builds(Weight, st.integers(-9, 9), st.integers(-9, 9))


def test_weight_multiplicity_values():
    assert weight_multiplicity(Weight(1, 1), Weight(0, 0)) == 2
    assert weight_multiplicity(Weight(1, 0), Weight(1, 0)) == 1
    assert weight_multiplicity(Weight(2, 2), Weight(0, 0)) == 3
    assert weight_multiplicity(Weight(1, 0), Weight(0, 0)) == 0


def test_weyl_dimensions():
    assert weyl_dimension(Weight(1, 1)) == 8
    assert weyl_dimension(Weight(3, 0)) == 10
    assert weyl_dimension(Weight(0, 0)) == 1


def test_non_dominant_rejected():
    with pytest.raises(ValueError):
        character(Weight(-1, 2))
    with pytest.raises(ValueError):
        weyl_dimension(Weight(0, -1))


@pytest.mark.parametrize("lam", dominant_weights(8))
def test_character_matches_freudenthal(lam):
    ch = character(lam)
    assert {tuple(k): v for k, v in ch.items()} == freudenthal(tuple(lam))
    assert sum(ch.values()) == weyl_dimension(lam)
    for mu, m in ch.items():
        for w in WBAR:
            assert ch[w.act(mu)] == m


def test_tensor_multiplicity_values():
    assert tensor_multiplicity(Weight(1, 0), Weight(0, 1), Weight(0, 0)) == 1
    assert tensor_multiplicity(Weight(1, 1), Weight(1, 1), Weight(1, 1)) == 2
    assert tensor_multiplicity(Weight(1, 1), Weight(1, 1), Weight(2, 2)) == 1


def test_tensor_product_matches_brute_force():
    for lam in dominant_weights(5):
        for mu in dominant_weights(5):
            expected = lr_tensor(tuple(lam), tuple(mu))
            got = {tuple(k): v for k, v in tensor_product(lam, mu).items()}
            assert got == expected
            for nu, n in expected.items():
                assert tensor_multiplicity(lam, mu, Weight(*nu)) == n


def test_decompose_strips_highest_weights():
    prod = {}
    for k1, m1 in character(Weight(1, 0)).items():
        for k2, m2 in character(Weight(1, 0)).items():
            k = k1 + k2
            prod[k] = prod.get(k, 0) + m1 * m2
    assert decompose(prod) == {Weight(0, 1): 1, Weight(2, 0): 1}
    with pytest.raises(ValueError):
        decompose({Weight(-1, 0): 1})


@given(any_weight)
def test_shifted_dominant(nu):
    sign, dom = shifted_dominant(nu)
    if sign == 0:
        assert (nu.c1 + 1) * (nu.c2 + 1) * (nu.c1 + nu.c2 + 2) == 0 or any(
            w.dot(nu) == nu for w in WBAR if w.det == -1
        )
    else:
        assert dom.is_dominant()
        assert any(w.dot(nu) == dom and w.det == sign for w in WBAR)


# --- folding and integrable fusion ---------------------------------------------


def test_fold_examples():
    f = fold_to_alcove(Weight(1, 1), 6)
    assert (f.weight, f.sign) == (Weight(1, 1), 1)
    assert fold_to_alcove(Weight(2, 2), 6).sign == 0
    f = fold_to_alcove(Weight(4, 1), 6)
    assert (f.weight, f.sign) == (Weight(3, 0), -1)


@given(any_weight, st.integers(3, 12))
def test_fold_lands_in_alcove(nu, h):
    f = fold_to_alcove(nu, h)
    if f.sign:
        assert f.weight.is_dominant() and f.weight.level() <= h - 3


def test_integrable_fusion_values():
    assert integrable_fusion(Weight(1, 1), Weight(1, 1), Weight(0, 0), 6) == 1
    assert integrable_fusion(Weight(1, 1), Weight(1, 1), Weight(1, 1), 6) == 2
    assert integrable_fusion(Weight(1, 1), Weight(1, 1), Weight(2, 2), 7) == 1
    with pytest.raises(ValueError):
        integrable_fusion(Weight(2, 2), Weight(1, 1), Weight(1, 1), 6)


@pytest.mark.parametrize("h", [4, 5, 6, 7, 8])
def test_integrable_fusion_matches_verlinde(h):
    alc = dominant_weights(h - 3)
    for lam in alc:
        for mu in alc:
            row = integrable_fusion_row(lam, mu, h)
            assert row == integrable_fusion_row(mu, lam, h)
            for nu in alc:
                assert row.get(nu, 0) == verlinde(lam, mu, nu, h)


@pytest.mark.parametrize("h", [6, 9])
def test_integrable_fusion_identity_and_duality(h):
    alc = dominant_weights(h - 3)
    zero = Weight(0, 0)
    for lam in alc:
        assert integrable_fusion_row(zero, lam, h) == {lam: 1}
        for mu in alc:
            assert integrable_fusion(lam, mu, zero, h) == (1 if mu == lam.conj() else 0)


# --- modular S and q-characters ----------------------------------------------


def test_s_matrix_matches_independent_formula():
    for h in (5, 6, 8):
        for lam in dominant_weights(h - 3):
            for mu in dominant_weights(h - 3):
                assert abs(modular_s(lam, mu, h) - s_entry(lam, mu, h)) < 1e-12


@settings(max_examples=50)
@given(small_dominant, small_dominant, st.integers(4, 15))
def test_s_matrix_symmetric(lam, mu, h):
    assert abs(modular_s(lam, mu, h) - modular_s(mu, lam, h)) < 1e-12


def test_s_matrix_unitary():
    h = 6
    alc = dominant_weights(h - 3)
    s = np.array([[modular_s(a, b, h) for b in alc] for a in alc])
    assert np.abs(s @ s.conj().T - np.eye(len(alc))).max() < 1e-9


@pytest.mark.parametrize("p", [4, 5, 7])
def test_s_zero_row_equals_r_difference(p):
    for a in range(p):
        for b in range(p):
            mu = Weight(a, b)
            r = r_eval(mu, p)
            lhs = 1j * 3 * p * math.sqrt(3) * modular_s(Weight(0, 0), mu, 3 * p)
            assert abs(lhs - (r - r.conjugate())) < 1e-10


@pytest.mark.parametrize("p", [4, 5])
def test_r_cubed_relation(p):
    for a in range(p):
        for b in range(p):
            mu = Weight(a, b)
            r = r_eval(mu, p)
            lhs = r**3 - r.conjugate() ** 3
            rhs = 1j * p * math.sqrt(3) * modular_s(Weight(0, 0), mu, p)
            assert abs(lhs - rhs) < 1e-10


def test_r_at_origin():
    r = r_eval(Weight(0, 0), 5)
    expected = cmath.exp(-4j * math.pi / 15) + 2 * cmath.exp(2j * math.pi / 15)
    assert abs(r - expected) < 1e-12


@given(any_weight, st.integers(2, 12))
def test_trivial_q_character(mu, h):
    assert abs(q_character_eval(Weight(0, 0), mu, h) - 1) < 1e-12


def test_q_character_is_s_ratio_off_walls():
    h = 6
    for lam in dominant_weights(3):
        for mu in dominant_weights(3):
            ratio = modular_s(lam, mu, h) / modular_s(Weight(0, 0), mu, h)
            assert abs(q_character_eval(lam, mu, h) - ratio) < 1e-10


def test_q_character_skew_extension():
    mu, h = Weight(1, 2), 7
    lam = Weight(2, 1)
    for w in WBAR:
        assert abs(q_character_eval(w.dot(lam), mu, h) - w.det * q_character_eval(lam, mu, h)) < 1e-12
    assert q_character_eval(Weight(-1, 3), mu, h) == 0


def _sigma(k, lam):
    return Weight(k - lam.c1 - lam.c2, lam.c1)


@pytest.mark.parametrize("h", [5, 6, 7, 8])
def test_simple_current_phase(h):
    k = h - 3
    for lam in dominant_weights(k):
        for mu in dominant_weights(k):
            lhs = q_character_eval(_sigma(k, lam), mu, h)
            rhs = cmath.exp(2j * math.pi * mu.triality / 3) * q_character_eval(lam, mu, h)
            assert abs(lhs - rhs) < 1e-10
            # same symmetry in the evaluation point
            lhs2 = q_character_eval(lam, _sigma(k, mu), h)
            rhs2 = cmath.exp(2j * math.pi * lam.triality / 3) * q_character_eval(lam, mu, h)
            assert abs(lhs2 - rhs2) < 1e-10
