"""Window closures: generation, irreducibility evidence, and a submodule.

The closure engine repeatedly applies generator words to a seed set and
row-reduces per lattice point, inside a finite outer window whose margin
shields the inner window from truncation effects.  At generic desk
parameters every inner basis vector regenerates the whole inner window;
at the integral preset the singular vectors generate a proper submodule.
"""

from wittmod.engine import (
    Window,
    check_degenerate_reducibility,
    check_generation,
    closure,
    find_singular_vectors,
)
from wittmod.sl3 import DEGENERATE_VALUES, Params, basis_element, parse_word

p = Params.numeric()
window = Window.symmetric(4, 4, 4, margin=2)

doc = check_generation(p, window)
print("staged generation from v_0(0,0):", doc["verdict"])
for stage in doc["subchecks"]:
    print(f"   {stage['stage']:13s} words={stage['words']}"
          f" reached {stage['reached']}/{stage['targets']}")

# a single word walks a single direction until the window cuts it off
basis, stats = closure(p, [basis_element(p, 0, (0, 0))], [parse_word("E31")],
                       Window.symmetric(2, 2, 2, margin=1))
print("E31-only orbit:", sorted(basis.points()), stats)

deg = Params.numeric(DEGENERATE_VALUES)
sing = find_singular_vectors(deg, Window.symmetric(2, 2, 2))
print("\nintegral preset: singular vectors at",
      sorted(pt for x in sing for (_, pt) in x.terms))

doc = check_degenerate_reducibility(deg, window)
print("reducibility:", doc["verdict"],
      f"(reached {doc['reached']}/{doc['targets']} inner basis vectors,",
      f"witness index {doc['witness']['index']} at {tuple(doc['witness']['r'])})")
