"""The rank-two cuspidal input module and its bracket law.

The infinite-dimensional input V has basis v_i (i in Z) with the four
gl2 generators acting through shift operators.  All weight spaces are
one-dimensional and E12, E21 act injectively as long as c+l and c-l
stay away from the integers; the constructor enforces that at numeric
parameters.
"""

from fractions import Fraction

from wittmod.glmod import CuspidalGl2, GlVector, verify_gl_brackets
from wittmod.scalars import B, C, L, scalar_to_text

sym = CuspidalGl2(L, B, C)
for name, (i, j) in (("E11", (1, 1)), ("E12", (1, 2)), ("E21", (2, 1)), ("E22", (2, 2))):
    out = sym.act(i, j, GlVector.basis(0))
    body = " + ".join(f"({scalar_to_text(cf)})*v_{k}" for k, cf in out.sorted_terms())
    print(f"{name} v_0 = {body}")

rep = verify_gl_brackets(sym, window=range(-4, 5))
print("symbolic bracket law over |i| <= 4:", "ok" if rep["ok"] else rep["failures"][:1])

num = CuspidalGl2(Fraction(1, 7), Fraction(1, 11), Fraction(1, 13))
print("numeric E12 v_0 coefficient:", num.act(1, 2, GlVector.basis(0)).sorted_terms())

try:
    CuspidalGl2(Fraction(1, 2), Fraction(1, 11), Fraction(1, 2))
except ValueError as exc:
    print("rejected degenerate input:", exc)
