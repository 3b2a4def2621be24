"""Restriction to sl3: the nine generator formulas and their cross-checks."""

from fractions import Fraction

import pytest

from wittmod.sl3 import (
    CONDITION_NAMES,
    DEGENERATE_VALUES,
    GEN_NAMES,
    SPANNING_CONDITIONS,
    Params,
    act_embedded,
    act_gen,
    act_word,
    basis_element,
    bracket_residual_sl3,
    check_generic,
    parse_param_line,
    parse_word,
    proof_identity_report,
    verify_embedding,
    verify_sl3_brackets,
    weight_of,
    word_name,
    word_shift,
)

NUM = Params.numeric()
SYM = Params.symbolic()


# -- pinned generator values ----------------------------------------------


def test_cartan_eigenvalue():
    x = basis_element(NUM, 3, (2, -1))
    assert act_gen(NUM, 1, 1, x) == x.scale(Fraction(35, 17))


def test_trace_acts_as_zero():
    x = basis_element(NUM, 2, (1, 1))
    total = act_gen(NUM, 1, 1, x) + act_gen(NUM, 2, 2, x) + act_gen(NUM, 3, 3, x)
    assert total.is_zero()


def test_raising_generator_components():
    out = act_gen(NUM, 1, 2, basis_element(NUM, 0, (0, 0)))
    assert out.support_points() == {(1, -1)}
    # l - b + a2 and c + l at the desk parameters
    assert out.coefficient(0, (1, -1)) == Fraction(153, 1463)
    assert out.coefficient(1, (1, -1)) == Fraction(20, 91)


def test_word_action_pinned():
    y = act_word(NUM, parse_word("E13*E32"), basis_element(NUM, 0, (0, 0)))
    assert y.coefficient(0, (1, -1)) == Fraction(146565, 2140369)
    assert y.coefficient(1, (1, -1)) == Fraction(-3060, 133133)


def test_weights():
    assert weight_of(NUM, (1, -1)) == (
        Fraction(18, 17),
        Fraction(-18, 19),
        Fraction(-36, 323),
    )
    w = weight_of(NUM, (0, 0))
    assert w[0] + w[1] + w[2] == 0


def test_alpha_mismatch_rejected():
    from wittmod.tensor import ModuleElement

    x = ModuleElement.basis((Fraction(1), Fraction(2)), 0, (0, 0))
    with pytest.raises(ValueError):
        act_gen(NUM, 1, 1, x)


# -- words ----------------------------------------------------------------


def test_parse_word():
    assert parse_word("E13*E32") == ((1, 3), (3, 2))
    assert word_name(((1, 3), (3, 2))) == "E13*E32"
    assert word_shift(((1, 3), (3, 2))) == (1, -1)
    with pytest.raises(ValueError):
        parse_word("E14")
    with pytest.raises(ValueError):
        parse_word("")


def test_word_order_rightmost_first():
    x = basis_element(NUM, 0, (0, 0))
    composed = act_gen(NUM, 1, 2, act_gen(NUM, 2, 1, x))
    assert act_word(NUM, parse_word("E12*E21"), x) == composed


# -- bracket relations ----------------------------------------------------


@pytest.mark.parametrize("params", [NUM, SYM], ids=["numeric", "symbolic"])
def test_bracket_sample(params):
    x = basis_element(params, 1, (1, -2))
    for g1, g2 in (((1, 2), (2, 1)), ((1, 3), (3, 2)), ((2, 3), (3, 3))):
        assert bracket_residual_sl3(params, g1, g2, x).is_zero()


def test_bracket_window_sweep():
    points = [(0, 0), (1, -1), (-2, 1)]
    rep = verify_sl3_brackets(NUM, points, range(-2, 3))
    assert rep["ok"], rep["failures"][:3]
    assert rep["checked"] == 81 * len(points) * 5


def test_wrong_bracket_is_nonzero():
    # [E12, E21] equals E11 - E22; the + sign is a corruption and must fail
    x = basis_element(NUM, 0, (0, 0))
    lhs = act_word(NUM, parse_word("E12*E21"), x) - act_word(
        NUM, parse_word("E21*E12"), x
    )
    wrong = act_gen(NUM, 1, 1, x) + act_gen(NUM, 2, 2, x)
    assert not (lhs - wrong).is_zero()
    right = act_gen(NUM, 1, 1, x) - act_gen(NUM, 2, 2, x)
    assert (lhs - right).is_zero()


# -- dual route through the Witt action ------------------------------------


@pytest.mark.parametrize("name", sorted(GEN_NAMES))
def test_embedding_agrees_per_generator(name):
    i, j = GEN_NAMES[name]
    for idx, r in ((0, (0, 0)), (2, (1, -1)), (-1, (-2, 1))):
        x = basis_element(NUM, idx, r)
        assert act_gen(NUM, i, j, x) == act_embedded(NUM, i, j, x), name


def test_embedding_sweep_symbolic():
    rep = verify_embedding(SYM, [(0, 0), (2, -1)], range(-1, 2))
    assert rep["ok"], rep["failures"][:3]


# -- genericity -------------------------------------------------------------


def test_generic_at_desk_point():
    rep = check_generic(NUM)
    assert rep.decidable
    assert rep.spanning_ok and rep.irreducibility_ok
    assert rep.first_violation() is None
    assert [c["name"] for c in rep.conditions] == list(CONDITION_NAMES)


def test_generic_irreducibility_only_violation():
    p = Params.numeric({"c": Fraction(3, 11)})  # c = 3b kills one extra condition
    rep = check_generic(p)
    assert rep.spanning_ok
    assert not rep.irreducibility_ok
    assert rep.first_violation() == "c-3b"
    assert rep.first_violation(SPANNING_CONDITIONS) is None


def test_generic_degenerate_preset():
    rep = check_generic(Params.numeric(DEGENERATE_VALUES))
    assert not rep.spanning_ok and not rep.irreducibility_ok
    assert rep.first_violation() == "a1-b-l"


def test_generic_symbolic_undecidable():
    rep = check_generic(SYM)
    assert not rep.decidable
    assert rep.spanning_ok is None and rep.irreducibility_ok is None


def test_params_numeric_rejects_unknown_key():
    with pytest.raises(ValueError):
        Params.numeric({"q": Fraction(1)})


def test_parse_param_line():
    assert parse_param_line(" b = 1/11 ") == ("b", Fraction(1, 11))
    with pytest.raises(ValueError):
        parse_param_line("q=1")
    with pytest.raises(ValueError):
        parse_param_line("b: 1/11")
    with pytest.raises(ValueError):
        parse_param_line("b=x")


# -- truncation identity suite ----------------------------------------------


def test_truncation_identity_direct():
    # (r2p - b + ii + s) E12 + E13*E32 kills the index above the top of
    # a window of s+1 indices; perturbing the multiplier must not
    p, s = NUM, 1
    top = basis_element(p, s, (0, 0))
    mult = p.a2 - p.b + p.lam + s
    good = act_gen(p, 1, 2, top).scale(mult) + act_word(p, parse_word("E13*E32"), top)
    assert good.coefficient(s + 1, (1, -1)) == 0
    bad = act_gen(p, 1, 2, top).scale(mult + 1) + act_word(p, parse_word("E13*E32"), top)
    assert bad.coefficient(s + 1, (1, -1)) != 0


def test_proof_identity_report():
    rep = proof_identity_report((1, 2), grid_bound=1)
    assert rep["ok"]
    assert all(d["ok"] for d in rep["displays"])
    assert {d["name"] for d in rep["displays"]} >= {"E13*E32", "E23*E31"}
    for row in rep["truncations"]:
        assert row["ok"]
        assert row["raising_kills_top"] and row["raising_control_nonzero"]
        assert row["lowering_kills_bottom"] and row["lowering_control_nonzero"]
