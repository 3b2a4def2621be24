"""Tensor-field modules over the Witt algebra: action, brackets, de Rham."""

import random
from fractions import Fraction
from itertools import product

import pytest

from wittmod.glmod import CuspidalGl2, exterior_power
from wittmod.scalars import B, C, L
from wittmod.tensor import (
    ModuleElement,
    WittGenerator,
    act_witt,
    de_rham_differential,
    element_from_json,
    element_to_json,
    jacobi_residual,
    verify_d_intertwines,
    witt_bracket_check,
    witt_bracket_residual,
)

ALPHA = (Fraction(1, 17), Fraction(1, 19))
CUSP = CuspidalGl2(Fraction(1, 7), Fraction(1, 11), Fraction(1, 13))


def test_generator_shape_mismatch():
    with pytest.raises(ValueError):
        WittGenerator((1, 0), (0,))


def test_act_dimension_mismatch():
    x = ModuleElement.basis(ALPHA, 0, (0, 0))
    with pytest.raises(ValueError):
        act_witt(WittGenerator((1,), (0,)), x, CUSP)


def test_cartan_part_is_weight():
    # r = 0 leaves the lattice point fixed and multiplies by (u|m+alpha)
    x = ModuleElement.basis(ALPHA, 0, (2, 3))
    out = act_witt(WittGenerator((1, 0), (0, 0)), x, CUSP)
    assert out == x.scale(Fraction(2) + Fraction(1, 17))
    assert out.coefficient(0, (2, 3)) == Fraction(35, 17)


def test_shift_part_uses_gl_action():
    # u = e2, r = e1 carries weight (m2+alpha2) and matrix part E12
    x = ModuleElement.basis(ALPHA, 0, (0, 0))
    out = act_witt(WittGenerator((0, 1), (1, 0)), x, CUSP)
    assert out.support_points() == {(1, 0)}
    assert out.coefficient(0, (1, 0)) == Fraction(1, 19)
    assert out.coefficient(1, (1, 0)) == Fraction(20, 91)  # c + lam


def test_action_is_linear():
    x = ModuleElement.basis(ALPHA, 0, (1, -1), Fraction(2, 3))
    y = ModuleElement.basis(ALPHA, 1, (0, 2), Fraction(-5))
    D = WittGenerator((1, 2), (-1, 1))
    lhs = act_witt(D, x + y, CUSP)
    assert lhs == act_witt(D, x, CUSP) + act_witt(D, y, CUSP)


def test_element_algebra():
    x = ModuleElement.basis(ALPHA, 0, (0, 0), Fraction(1, 2))
    y = ModuleElement.basis(ALPHA, 0, (0, 0), Fraction(-1, 2))
    assert (x + y).is_zero()
    assert x - x == ModuleElement.zero(ALPHA)
    assert (-x).coefficient(0, (0, 0)) == Fraction(-1, 2)
    assert x.scale(0).is_zero()
    assert x.coefficient(3, (9, 9)) == 0


def _random_vector(rnd, n, bound):
    return tuple(Fraction(rnd.randint(-bound, bound)) for _ in range(n))


def _random_point(rnd, n, bound):
    return tuple(rnd.randint(-bound, bound) for _ in range(n))


@pytest.mark.parametrize("module", [CUSP, exterior_power(2, 1), exterior_power(2, 0)])
def test_bracket_law_random(module):
    rnd = random.Random(11)
    for _ in range(25):
        u = _random_vector(rnd, 2, 2)
        v = _random_vector(rnd, 2, 2)
        r = _random_point(rnd, 2, 2)
        s = _random_point(rnd, 2, 2)
        idx = rnd.choice(range(module.dim)) if module.kind == "findim" else rnd.randint(-2, 2)
        x = ModuleElement.basis(ALPHA, idx, _random_point(rnd, 2, 2))
        res = witt_bracket_residual(u, r, v, s, x, module)
        assert res.is_zero(), (u, r, v, s, idx)


def test_bracket_law_symbolic_cuspidal():
    mod = CuspidalGl2(L, B, C)
    x = ModuleElement.basis(ALPHA, 0, (0, 0))
    rep = witt_bracket_check((1, 0), (2, -1), (0, 1), (-1, 1), x, mod)
    assert rep["ok"] and rep["residual"] is None


def test_jacobi_identity_random():
    rnd = random.Random(7)
    for _ in range(8):
        gens = [
            WittGenerator(_random_vector(rnd, 2, 2), _random_point(rnd, 2, 1))
            for _ in range(3)
        ]
        x = ModuleElement.basis(ALPHA, rnd.randint(-1, 1), _random_point(rnd, 2, 2))
        assert jacobi_residual(gens, x, CUSP).is_zero()


# -- de Rham complex -----------------------------------------------------

WEDGES2 = tuple(exterior_power(2, k) for k in range(3))


def test_derham_degree_zero_formula():
    x = ModuleElement.basis(ALPHA, 0, (2, -1))
    out = de_rham_differential(x, 2, 0, WEDGES2[0], WEDGES2[1])
    # labels in wedge degree 1 are (1,) then (2,)
    assert out.coefficient(0, (2, -1)) == Fraction(2) + Fraction(1, 17)
    assert out.coefficient(1, (2, -1)) == Fraction(-1) + Fraction(1, 19)


def test_derham_degree_one_sign():
    # d(e_1 t^m) = -(m_2+alpha_2) e_{12} t^m: e_2 crosses e_1 once
    x = ModuleElement.basis(ALPHA, 0, (0, 1))
    out = de_rham_differential(x, 2, 1, WEDGES2[1], WEDGES2[2])
    assert out.coefficient(0, (0, 1)) == -(Fraction(1) + Fraction(1, 19))
    y = ModuleElement.basis(ALPHA, 1, (1, 0))  # e_2 t^m picks up + sign
    dy = de_rham_differential(y, 2, 1, WEDGES2[1], WEDGES2[2])
    assert dy.coefficient(0, (1, 0)) == Fraction(1) + Fraction(1, 17)


def test_derham_squares_to_zero():
    rnd = random.Random(3)
    for _ in range(10):
        x = ModuleElement.basis(ALPHA, 0, _random_point(rnd, 2, 3), Fraction(rnd.randint(1, 5)))
        once = de_rham_differential(x, 2, 0, WEDGES2[0], WEDGES2[1])
        twice = de_rham_differential(once, 2, 1, WEDGES2[1], WEDGES2[2])
        assert twice.is_zero()


def test_derham_top_degree_rejected():
    x = ModuleElement.basis(ALPHA, 0, (0, 0))
    with pytest.raises(ValueError):
        de_rham_differential(x, 2, 2, WEDGES2[2], WEDGES2[2])


def test_derham_intertwines_witt():
    box = list(product(range(-1, 2), repeat=2))
    for k in (0, 1):
        rep = verify_d_intertwines((1, 2), (1, -1), ALPHA, box, 2, k, WEDGES2)
        assert rep["ok"], rep["failures"][:2]
        assert rep["checked"] == len(box) * WEDGES2[k].dim


def test_derham_three_variables():
    wedges3 = tuple(exterior_power(3, k) for k in range(4))
    alpha3 = (Fraction(1, 17), Fraction(1, 19), Fraction(1, 23))
    x = ModuleElement.basis(alpha3, 0, (1, 1, 1))
    d1 = de_rham_differential(x, 3, 0, wedges3[0], wedges3[1])
    d2 = de_rham_differential(d1, 3, 1, wedges3[1], wedges3[2])
    assert d2.is_zero()
    rep = verify_d_intertwines((1, 0, -1), (0, 1, 0), alpha3, [(0, 0, 0)], 3, 1, wedges3)
    assert rep["ok"]


# -- serialization -------------------------------------------------------


def test_element_json_roundtrip_numeric():
    x = ModuleElement.basis(ALPHA, 0, (1, -2), Fraction(2, 3)) + ModuleElement.basis(
        ALPHA, 1, (0, 0), Fraction(-1, 7)
    )
    doc = element_to_json(x)
    assert doc["alpha"] == ["1/17", "1/19"]
    back = element_from_json(doc)
    assert back == x
    assert all(isinstance(a, Fraction) for a in back.alpha)


def test_element_json_roundtrip_symbolic_coeff():
    x = ModuleElement.basis(ALPHA, 0, (0, 0), C + L)
    back = element_from_json(element_to_json(x))
    assert back == x


def test_element_json_labeled_module():
    mod = exterior_power(2, 1)
    x = ModuleElement.basis(ALPHA, 1, (0, 0), Fraction(3))
    doc = element_to_json(x, mod)
    assert doc["terms"][0]["index"] == [2]
    assert element_from_json(doc, mod) == x
    with pytest.raises(ValueError):
        element_from_json(doc)  # subset labels need the module back
