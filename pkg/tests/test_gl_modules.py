"""Finite and cuspidal gl_n inputs: actions, bracket laws, serialization."""

from fractions import Fraction
from itertools import combinations

import pytest

from wittmod.glmod import (
    CuspidalGl2,
    FinDimGlModule,
    GlVector,
    bracket_residual,
    central_charge,
    exterior_power,
    glvector_to_json,
    verify_gl_brackets,
)
from wittmod.scalars import B, C, L, Scalar

LAM = Fraction(1, 7)
BB = Fraction(1, 11)
CC = Fraction(1, 13)


def test_cuspidal_raising_symbolic():
    mod = CuspidalGl2(L, B, C)
    out = mod.act(1, 2, GlVector.basis(0))
    assert out == GlVector.basis(1, C + L)


def test_cuspidal_raising_numeric():
    mod = CuspidalGl2(LAM, BB, CC)
    out = mod.act(1, 2, GlVector.basis(0))
    assert out == GlVector.basis(1, Fraction(20, 91))


def test_cuspidal_cartan_eigenvalues():
    mod = CuspidalGl2(LAM, BB, CC)
    for i in range(-3, 4):
        v = GlVector.basis(i)
        assert mod.act(1, 1, v) == v.scale(BB + LAM + i)
        assert mod.act(2, 2, v) == v.scale(BB - LAM - i)


def test_cuspidal_identity_acts_as_2b():
    sym = CuspidalGl2(L, B, C)
    v = GlVector.basis(2)
    total = sym.act(1, 1, v) + sym.act(2, 2, v)
    assert total == v.scale(2 * B)


def test_cuspidal_rejects_integral_parameters():
    # c + lam and c - lam must both avoid the integers
    with pytest.raises(ValueError):
        CuspidalGl2(Fraction(1, 2), BB, Fraction(1, 2))
    with pytest.raises(ValueError):
        CuspidalGl2(Fraction(1, 2), BB, Fraction(-1, 2))
    CuspidalGl2(LAM, BB, CC)  # generic point is fine


def test_cuspidal_brackets_exhaustive_window():
    for mod in (CuspidalGl2(L, B, C), CuspidalGl2(LAM, BB, CC)):
        rep = verify_gl_brackets(mod)
        assert rep["ok"], rep["failures"][:3]
        assert rep["checked_indices"] > 0


@pytest.mark.parametrize("n,k", [(2, 0), (2, 1), (2, 2), (3, 1), (3, 2), (4, 2)])
def test_exterior_power_brackets(n, k):
    mod = exterior_power(n, k)
    from math import comb

    assert mod.dim == comb(n, k)
    rep = verify_gl_brackets(mod)
    assert rep["ok"], rep["failures"][:3]


@pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (3, 2), (4, 3)])
def test_exterior_power_central_charge(n, k):
    assert central_charge(exterior_power(n, k)) == k


def test_exterior_power_wedge_sign():
    # E21 maps e1^e2 wedge-component by replacing e1 with e2: zero, and
    # E12 on e2 in degree 1 lands on e1 with coefficient +1
    mod = exterior_power(2, 2)
    assert mod.act(1, 2, GlVector.basis(0)).is_zero()
    deg1 = exterior_power(2, 1)
    assert deg1.act(1, 2, GlVector.basis(1)) == GlVector.basis(0)


def test_exterior_power_labels_are_subsets():
    mod = exterior_power(3, 2)
    labels = [mod.label(i) for i in mod.indices()]
    assert labels == [list(s) for s in sorted(combinations(range(1, 4), 2))]


def test_exterior_power_degree_out_of_range():
    with pytest.raises(ValueError):
        exterior_power(2, 3)


def test_corrupted_module_fails_brackets():
    mod = exterior_power(3, 1)
    doc = mod.to_json()
    doc["matrices"]["E12"][2] = "5"  # poison one matrix entry
    bad = FinDimGlModule.from_json(doc)
    rep = verify_gl_brackets(bad)
    assert not rep["ok"]
    assert rep["failures"]


def test_bracket_residual_is_zero_on_cuspidal():
    mod = CuspidalGl2(L, B, C)
    v = GlVector.basis(0)
    for (i, j, k, l) in ((1, 2, 2, 1), (1, 1, 1, 2), (2, 1, 1, 2)):
        assert bracket_residual(mod, i, j, k, l, v).is_zero()


def test_findim_json_roundtrip():
    mod = exterior_power(3, 2)
    doc = mod.to_json()
    back = FinDimGlModule.from_json(doc)
    assert back.n == mod.n and back.dim == mod.dim
    assert back.to_json() == doc


def test_findim_json_rejects_bad_matrix():
    doc = exterior_power(2, 1).to_json()
    doc["matrices"]["E12"] = ["0"]
    with pytest.raises(ValueError):
        FinDimGlModule.from_json(doc)


def test_glvector_json_uses_labels():
    mod = exterior_power(3, 2)
    v = GlVector.basis(0, Fraction(2, 3)) + GlVector.basis(2, Fraction(-1))
    doc = glvector_to_json(mod, v)
    assert doc == [
        {"index": [1, 2], "coeff": "2/3"},
        {"index": [2, 3], "coeff": "-1"},
    ]


def test_glvector_arithmetic_prunes_zeros():
    v = GlVector.basis(0) + GlVector.basis(0, -1)
    assert v.is_zero()
    assert v.sorted_terms() == []
    w = GlVector.basis(1, Scalar.from_rational(1)) - GlVector.basis(1, 1)
    assert w.is_zero()
