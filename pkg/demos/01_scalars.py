"""A tour of the exact scalar layer.

Every coefficient in this package is either a plain Fraction or a ratio
of multivariate polynomials in the six symbols l, b, c, a1, a2, iota.
Nothing is ever floated; equality of scalars is equality of canonical
forms, so a zero residual really is zero.
"""

from fractions import Fraction

from wittmod.scalars import (
    A1, B, C, IOTA, L,
    factor_linear_in_iota,
    factor_polynomial,
    parse_scalar,
    scalar_to_text,
)

x = (C + L) / (A1 - B - L)
print("a quotient:", scalar_to_text(x))
print("times its inverse:", scalar_to_text(x * x.inv()))

# the denominator is kept monic and coprime to the numerator
y = (C + L) * (C - L) / ((2 * C + 2 * L))
print("after cancellation:", scalar_to_text(y))

# text round-trips exactly
text = "c^2 - 9*b^2 - c + 15*b - 6"
z = parse_scalar(text)
assert scalar_to_text(z) == text
unit, factors = factor_polynomial(z)
print(f"{text}  =  {scalar_to_text(unit)} *",
      " * ".join(f"({scalar_to_text(f)})^{m}" for f, m in factors))

# iota tracks a symbolic basis index; products of index-linear forms
# split into (zeta, sign) pairs used by the obstruction analysis
w = (C + IOTA) * (A1 - B - IOTA)
fac = factor_linear_in_iota(w)
print("iota-linear factors:",
      [(scalar_to_text(zeta), sign) for zeta, sign in fac.factors])

# specialization is a ring homomorphism wherever it is defined
desk = {"l": Fraction(1, 7), "b": Fraction(1, 11), "c": Fraction(1, 13),
        "a1": Fraction(1, 17), "a2": Fraction(1, 19), "iota": Fraction(0)}
print("c + l at the desk point:", (C + L).evaluate(desk))
