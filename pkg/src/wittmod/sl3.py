"""The rank-two tensor-field module restricted to sl3.

For n = 2 the Witt algebra contains a copy of sl3 spanned by nine
first-order generators, written Ebar_ij below and named E11 .. E33 in
text form.  On a tensor-field module built from the two-parameter
cuspidal gl2 family, each generator acts on basis symbols v_i(r1, r2)
by an explicit closed formula; act_gen codes those nine formulas
directly, and act_embedded recomputes the same action through the
Witt-algebra route so the two can be compared term by term.

Throughout, for a basis symbol v_i(r1, r2):

    ii  = lam + i          (shifted index)
    r1p = r1 + a1          (shifted first exponent)
    r2p = r2 + a2          (shifted second exponent)

The identity of the bottom gl2 acts as 2*b.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .glmod import CuspidalGl2
from .scalars import (
    A1,
    A2,
    B,
    C,
    IOTA,
    L,
    coeff_is_zero,
    coeff_to_text,
    parse_rational,
)
from .tensor import ModuleElement, WittGenerator, act_witt

GEN_NAMES = {
    "E11": (1, 1), "E12": (1, 2), "E13": (1, 3),
    "E21": (2, 1), "E22": (2, 2), "E23": (2, 3),
    "E31": (3, 1), "E32": (3, 2), "E33": (3, 3),
}
NAME_OF = {v: k for k, v in GEN_NAMES.items()}

# lattice shift of each generator: e_i - e_j projected to the first two axes
GEN_SHIFTS = {
    (1, 1): (0, 0), (1, 2): (1, -1), (1, 3): (1, 0),
    (2, 1): (-1, 1), (2, 2): (0, 0), (2, 3): (0, 1),
    (3, 1): (-1, 0), (3, 2): (0, -1), (3, 3): (0, 0),
}

PARAM_KEYS = ("l", "b", "c", "a1", "a2")

DEFAULT_VALUES = {
    "l": Fraction(1, 7),
    "b": Fraction(1, 11),
    "c": Fraction(1, 13),
    "a1": Fraction(1, 17),
    "a2": Fraction(1, 19),
}

# a1 = b + l and a2 = b - l: both integrality parameters vanish, so the
# module carries singular vectors along an antidiagonal
DEGENERATE_VALUES = {
    "l": Fraction(1, 7),
    "b": Fraction(1, 11),
    "c": Fraction(1, 13),
    "a1": Fraction(18, 77),
    "a2": Fraction(-4, 77),
}


class Params:
    """Module parameters (lam, b, c) for the gl2 input and (a1, a2) twists.

    Fields are either all exact rationals (numeric mode) or Scalars in the
    ambient symbols (symbolic mode).  ``with_iota_index`` replaces lam by
    l + iota, which realizes a symbolic basis index: formulas depend on i
    only through lam + i, so basis index 0 then stands for a generic index.
    """

    __slots__ = ("lam", "b", "c", "a1", "a2")

    def __init__(self, lam, b, c, a1, a2):
        self.lam = lam
        self.b = b
        self.c = c
        self.a1 = a1
        self.a2 = a2

    @classmethod
    def symbolic(cls, with_iota_index: bool = False) -> "Params":
        lam = L + IOTA if with_iota_index else L
        return cls(lam, B, C, A1, A2)

    @classmethod
    def numeric(cls, values: Optional[dict] = None) -> "Params":
        merged = dict(DEFAULT_VALUES)
        if values:
            for key, val in values.items():
                if key not in PARAM_KEYS:
                    raise ValueError(f"unknown parameter key {key!r}")
                merged[key] = Fraction(val)
        return cls(merged["l"], merged["b"], merged["c"], merged["a1"], merged["a2"])

    def is_numeric(self) -> bool:
        return all(
            isinstance(getattr(self, f), (Fraction, int))
            for f in ("lam", "b", "c", "a1", "a2")
        )

    def alpha(self):
        return (self.a1, self.a2)

    def values(self) -> dict:
        return {
            "l": self.lam, "b": self.b, "c": self.c,
            "a1": self.a1, "a2": self.a2,
        }

    def to_json(self) -> dict:
        return {k: coeff_to_text(v) for k, v in self.values().items()}

    def __repr__(self):
        body = ", ".join(f"{k}={coeff_to_text(v)}" for k, v in self.values().items())
        return f"Params({body})"


def basis_element(params: Params, idx: int, r) -> ModuleElement:
    return ModuleElement.basis(params.alpha(), idx, tuple(r))


def _check_alpha(params: Params, x: ModuleElement):
    if tuple(x.alpha) != tuple(params.alpha()):
        raise ValueError("element twist does not match the given parameters")


def act_gen(params: Params, i: int, j: int, x: ModuleElement) -> ModuleElement:
    """Apply Ebar_ij by its closed formula; exact, no truncation."""
    _check_alpha(params, x)
    lam, b, c = params.lam, params.b, params.c
    a1, a2 = params.a1, params.a2
    out = {}

    def put(idx, pt, val):
        if coeff_is_zero(val):
            return
        key = (idx, pt)
        s = out[key] + val if key in out else val
        if coeff_is_zero(s):
            out.pop(key, None)
        else:
            out[key] = s

    for (idx, (r1, r2)), coeff in x.terms.items():
        ii = lam + idx
        r1p = a1 + r1
        r2p = a2 + r2
        if (i, j) == (1, 1):
            put(idx, (r1, r2), coeff * r1p)
        elif (i, j) == (2, 2):
            put(idx, (r1, r2), coeff * r2p)
        elif (i, j) == (3, 3):
            put(idx, (r1, r2), -coeff * (r1p + r2p))
        elif (i, j) == (1, 2):
            pt = (r1 + 1, r2 - 1)
            put(idx, pt, coeff * (ii - b + r2p))
            put(idx + 1, pt, coeff * (c + ii))
        elif (i, j) == (2, 1):
            pt = (r1 - 1, r2 + 1)
            put(idx - 1, pt, coeff * (c - ii))
            put(idx, pt, coeff * (r1p - b - ii))
        elif (i, j) == (1, 3):
            pt = (r1 + 1, r2)
            put(idx, pt, -coeff * (r1p + r2p + b + ii))
            put(idx + 1, pt, -coeff * (c + ii))
        elif (i, j) == (2, 3):
            pt = (r1, r2 + 1)
            put(idx - 1, pt, -coeff * (c - ii))
            put(idx, pt, -coeff * (r1p + r2p + b - ii))
        elif (i, j) == (3, 1):
            put(idx, (r1 - 1, r2), coeff * (r1p - b - ii))
        elif (i, j) == (3, 2):
            put(idx, (r1, r2 - 1), coeff * (r2p - b + ii))
        else:
            raise ValueError(f"no generator E{i}{j}")
    return ModuleElement(x.alpha, out)


# Witt-algebra preimages: (i, j) -> (sign, direction u, shift r), meaning
# Ebar_ij acts as sign * D(u, r) on the tensor-field module
EMBED = {
    (1, 1): (1, (1, 0), (0, 0)),
    (1, 2): (1, (0, 1), (1, -1)),
    (2, 1): (1, (1, 0), (-1, 1)),
    (2, 2): (1, (0, 1), (0, 0)),
    (1, 3): (-1, (1, 1), (1, 0)),
    (2, 3): (-1, (1, 1), (0, 1)),
    (3, 1): (1, (1, 0), (-1, 0)),
    (3, 2): (1, (0, 1), (0, -1)),
    (3, 3): (-1, (1, 1), (0, 0)),
}


def act_embedded(params: Params, i: int, j: int, x: ModuleElement) -> ModuleElement:
    """Apply Ebar_ij through its Witt-algebra preimage; dual route to act_gen."""
    _check_alpha(params, x)
    sign, u, r = EMBED[(i, j)]
    module = CuspidalGl2(params.lam, params.b, params.c)
    y = act_witt(WittGenerator(u, r), x, module)
    return y if sign == 1 else y.scale(-1)


def parse_word(text: str):
    letters = []
    for part in text.split("*"):
        name = part.strip()
        if name not in GEN_NAMES:
            raise ValueError(f"unknown generator {name!r} in word {text!r}")
        letters.append(GEN_NAMES[name])
    if not letters:
        raise ValueError("empty word")
    return tuple(letters)


def word_name(letters) -> str:
    return "*".join(NAME_OF[lt] for lt in letters)


def act_word(params: Params, letters, x: ModuleElement) -> ModuleElement:
    """Apply a product of generators; the rightmost letter acts first."""
    y = x
    for (i, j) in reversed(letters):
        y = act_gen(params, i, j, y)
    return y


def act_word_stepwise(params: Params, letters, x: ModuleElement):
    """Like act_word but also returns the support after each letter."""
    y = x
    supports = []
    for (i, j) in reversed(letters):
        y = act_gen(params, i, j, y)
        supports.append(set(y.terms.keys()))
    return y, supports


def word_shift(letters):
    s1 = sum(GEN_SHIFTS[lt][0] for lt in letters)
    s2 = sum(GEN_SHIFTS[lt][1] for lt in letters)
    return (s1, s2)


def weight_of(params: Params, r) -> tuple:
    """Eigenvalues of (E11, E22, E33) on the lattice point r."""
    r1p = params.a1 + r[0]
    r2p = params.a2 + r[1]
    return (r1p, r2p, -(r1p + r2p))


def bracket_residual_sl3(params: Params, g1, g2, x: ModuleElement) -> ModuleElement:
    i, j = g1
    k, l = g2
    lhs = act_gen(params, i, j, act_gen(params, k, l, x)) - act_gen(
        params, k, l, act_gen(params, i, j, x)
    )
    rhs = ModuleElement.zero(x.alpha)
    if j == k:
        rhs = rhs + act_gen(params, i, l, x)
    if l == i:
        rhs = rhs - act_gen(params, k, j, x)
    return lhs - rhs


def verify_sl3_brackets(params: Params, points, indices) -> dict:
    """All 81 generator pairs against the gl3 bracket law on a basis window."""
    from .tensor import element_to_json

    pairs = sorted(GEN_NAMES.values())
    failures = []
    checked = 0
    for g1 in pairs:
        for g2 in pairs:
            for r in points:
                for idx in indices:
                    x = basis_element(params, idx, r)
                    res = bracket_residual_sl3(params, g1, g2, x)
                    checked += 1
                    if not res.is_zero():
                        failures.append(
                            {
                                "pair": [NAME_OF[g1], NAME_OF[g2]],
                                "basis": {"index": idx, "r": list(r)},
                                "residual": element_to_json(res),
                            }
                        )
    return {"ok": not failures, "checked": checked, "failures": failures}


def verify_embedding(params: Params, points, indices) -> dict:
    """act_gen and act_embedded must agree generator by generator."""
    from .tensor import element_to_json

    failures = []
    checked = 0
    for (i, j) in sorted(GEN_NAMES.values()):
        for r in points:
            for idx in indices:
                x = basis_element(params, idx, r)
                res = act_gen(params, i, j, x) - act_embedded(params, i, j, x)
                checked += 1
                if not res.is_zero():
                    failures.append(
                        {
                            "generator": NAME_OF[(i, j)],
                            "basis": {"index": idx, "r": list(r)},
                            "residual": element_to_json(res),
                        }
                    )
    return {"ok": not failures, "checked": checked, "failures": failures}


# -- genericity ----------------------------------------------------------

CONDITION_NAMES = (
    "c+l", "c-l",
    "a1-b-l", "a2-b+l",
    "a1+2b", "a2+2b",
    "a1+a2+b+c", "a1+a2+b-c",
    "c+3b", "c-3b",
)
SPANNING_CONDITIONS = CONDITION_NAMES[:8]


def condition_value(name: str, vals: dict):
    l, b, c = vals["l"], vals["b"], vals["c"]
    a1, a2 = vals["a1"], vals["a2"]
    table = {
        "c+l": c + l,
        "c-l": c - l,
        "a1-b-l": a1 - b - l,
        "a2-b+l": a2 - b + l,
        "a1+2b": a1 + 2 * b,
        "a2+2b": a2 + 2 * b,
        "a1+a2+b+c": a1 + a2 + b + c,
        "a1+a2+b-c": a1 + a2 + b - c,
        "c+3b": c + 3 * b,
        "c-3b": c - 3 * b,
    }
    return table[name]


class GenericityReport:
    """Evaluation of the ten non-integrality conditions at given parameters.

    Each condition holds when its value is a non-integer rational.  For
    symbolic parameters nothing is decidable and ``decidable`` is False.
    """

    def __init__(self, conditions, decidable: bool):
        self.conditions = conditions
        self.decidable = decidable

    @property
    def spanning_ok(self):
        if not self.decidable:
            return None
        return all(c["holds"] for c in self.conditions if c["name"] in SPANNING_CONDITIONS)

    @property
    def irreducibility_ok(self):
        if not self.decidable:
            return None
        return all(c["holds"] for c in self.conditions)

    def first_violation(self, names=None):
        pool = names if names is not None else CONDITION_NAMES
        for c in self.conditions:
            if c["name"] in pool and c["holds"] is False:
                return c["name"]
        return None

    def to_json(self) -> dict:
        return {
            "decidable": self.decidable,
            "conditions": [dict(c) for c in self.conditions],
            "spanning_ok": self.spanning_ok,
            "irreducibility_ok": self.irreducibility_ok,
        }


def check_generic(params: Params) -> GenericityReport:
    if not params.is_numeric():
        conds = [
            {"name": name, "value": None, "holds": None} for name in CONDITION_NAMES
        ]
        return GenericityReport(conds, decidable=False)
    vals = {k: Fraction(v) for k, v in params.values().items()}
    conds = []
    for name in CONDITION_NAMES:
        value = condition_value(name, vals)
        conds.append(
            {"name": name, "value": str(value), "holds": value.denominator != 1}
        )
    return GenericityReport(conds, decidable=True)


def parse_param_line(line: str):
    if "=" not in line:
        raise ValueError(f"expected key=value, got {line!r}")
    key, _, raw = line.partition("=")
    key = key.strip()
    if key not in PARAM_KEYS:
        raise ValueError(f"unknown parameter key {key!r}")
    return key, parse_rational(raw.strip())


# -- identity suite for the two truncation operators ---------------------
#
# T_A = (r2p - b + ii + s) E12 + E13*E32 raises the lattice point by
# (1, -1) and, on the span of v_i .. v_{i+s}, produces nothing at index
# i+s+1; mirror-wise T_B = (r1p - b - ii) E21 + E23*E31 produces nothing
# at index i-1.  Both checks run with a symbolic index (iota) and over a
# small grid of integer lattice points; since every compared coefficient
# is polynomial of low degree in (r1, r2), grid agreement is equivalence.


def _display_expected(params: Params, which: str, r) -> ModuleElement:
    lam, b, c = params.lam, params.b, params.c
    a1, a2 = params.a1, params.a2
    r1, r2 = r
    ii = lam  # base index is 0; a symbolic index enters through lam = l + iota
    r1p = a1 + r1
    r2p = a2 + r2
    alpha = params.alpha()
    if which == "E13*E32":
        f = -(r2p - b + ii)
        return ModuleElement(
            alpha,
            {
                (0, (r1 + 1, r2 - 1)): f * (r1p + r2p - 1 + b + ii),
                (1, (r1 + 1, r2 - 1)): f * (c + ii),
            },
        )
    if which == "E23*E31":
        f = -(r1p - b - ii)
        return ModuleElement(
            alpha,
            {
                (-1, (r1 - 1, r2 + 1)): f * (c - ii),
                (0, (r1 - 1, r2 + 1)): f * (r1p + r2p + b - ii - 1),
            },
        )
    if which == "E13":
        return ModuleElement(
            alpha,
            {
                (0, (r1 + 1, r2)): -(r1p + r2p + b + ii),
                (1, (r1 + 1, r2)): -(c + ii),
            },
        )
    if which == "E23-raised":
        # E23 applied to v_{i+1}(r1+1, r2-1), landing at (r1+1, r2)
        return ModuleElement(
            alpha,
            {
                (0, (r1 + 1, r2)): -(c - ii - 1),
                (1, (r1 + 1, r2)): -(r1p + r2p + b - ii - 1),
            },
        )
    raise ValueError(which)


def _grid(bound: int):
    rng = range(-bound, bound + 1)
    return [(r1, r2) for r1 in rng for r2 in rng]


def proof_identity_report(s_values: Sequence[int], grid_bound: int = 2) -> dict:
    """Exact identities used by the truncation construction, dual-routed.

    Four composite-action expansions are checked against hand-coded
    expected forms through both the direct formulas and the Witt-algebra
    route; then the index-raising operator T_A and index-lowering T_B are
    shown to keep the truncated index window, with shifted multipliers as
    negative controls.
    """
    params = Params.symbolic(with_iota_index=True)
    grid = _grid(grid_bound)

    displays = []
    display_specs = [
        ("E13*E32", parse_word("E13*E32"), 0, (0, 0)),
        ("E23*E31", parse_word("E23*E31"), 0, (0, 0)),
        ("E13", parse_word("E13"), 0, (0, 0)),
        ("E23-raised", parse_word("E23"), 1, (1, -1)),
    ]
    for name, letters, idx0, off in display_specs:
        ok = True
        for r in grid:
            src = basis_element(params, idx0, (r[0] + off[0], r[1] + off[1]))
            expected = _display_expected(params, name, r)
            got_direct = act_word(params, letters, src)
            got_embedded = src
            for (i, j) in reversed(letters):
                got_embedded = act_embedded(params, i, j, got_embedded)
            if got_direct != expected or got_embedded != expected:
                ok = False
                break
        displays.append({"name": name, "ok": ok, "points": len(grid)})

    def top_coeff_A(s: int, j: int, r, shift: int = 0):
        # coefficient at index s+1 of T_A v_{i+j}(r), base index symbolic
        mult = (params.a2 + r[1]) - params.b + params.lam + s + shift
        src = basis_element(params, j, r)
        y = act_word(params, parse_word("E13*E32"), src) + act_gen(
            params, 1, 2, src
        ).scale(mult)
        return y.coefficient(s + 1, (r[0] + 1, r[1] - 1))

    def bottom_coeff_B(s: int, j: int, r, shift: int = 0):
        mult = (params.a1 + r[0]) - params.b - params.lam + shift
        src = basis_element(params, j, r)
        y = act_word(params, parse_word("E23*E31"), src) + act_gen(
            params, 2, 1, src
        ).scale(mult)
        return y.coefficient(-1, (r[0] - 1, r[1] + 1))

    truncations = []
    small_grid = _grid(1)
    for s in s_values:
        a_ok = all(
            coeff_is_zero(top_coeff_A(s, j, r))
            for j in range(s + 1)
            for r in small_grid
        )
        a_control = any(
            not coeff_is_zero(top_coeff_A(s, s, r, shift=1)) for r in small_grid
        )
        b_ok = all(
            coeff_is_zero(bottom_coeff_B(s, j, r))
            for j in range(s + 1)
            for r in small_grid
        )
        b_control = any(
            not coeff_is_zero(bottom_coeff_B(s, 0, r, shift=1)) for r in small_grid
        )
        truncations.append(
            {
                "s": s,
                "raising_kills_top": a_ok,
                "raising_control_nonzero": a_control,
                "lowering_kills_bottom": b_ok,
                "lowering_control_nonzero": b_control,
                "ok": a_ok and a_control and b_ok and b_control,
            }
        )

    ok = all(d["ok"] for d in displays) and all(t["ok"] for t in truncations)
    return {
        "ok": ok,
        "displays": displays,
        "truncations": truncations,
        "note": (
            "checks run on basis vectors; both operators are linear, so a "
            "general element of the index window is covered by linearity"
        ),
    }
