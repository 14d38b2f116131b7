"""The twisted product and the t-deformed algorithm.

Run: python demos/03_t_deformation.py
"""

from qtchar import AVector, Monomial, TCharacter, build_cartan, fundamental_qt, star_t, \
    star_t_exponent
from qtchar.laurent import TPoly
from qtchar.qt import bar_view, normalized

sl2 = build_cartan("A", 1)
y = Monomial.Y(1, 0)
v = AVector({(1, 1): 1})
print("D values:", star_t_exponent(sl2, (y, AVector.zero()), (y, v)),
      star_t_exponent(sl2, (y, v), (y, AVector.zero())))

f = TCharacter(sl2, y, {AVector.zero(): TPoly.const(1), v: TPoly.const(1)})
for w, p in star_t(f, f).items():
    print(f"  {p}  v={dict(w.items())}")

# Raw coefficients of type B carry powers of t; the normalized view removes them.
b3 = fundamental_qt(build_cartan("B", 3), 2, 0)
print("B3 node 2 raw coefficients:", sorted({str(p) for _, p in b3.items()}))
print("normalized:", sorted({str(p) for _, p in normalized(b3).items()}))

# In F4 some coefficients are genuinely two-term.
f4 = build_cartan("F", 4)
for i in f4.nodes:
    view = bar_view(fundamental_qt(f4, i, 0))
    odd = {str(p) for p in view.values() if p != TPoly.const(1)}
    print(f"F4 node {i}: {sum(p != TPoly.const(1) for p in view.values())} non-unit terms {odd or ''}")
