"""Windowed runs in affine type A and what they show about multiplicities.

Run: python demos/04_affine_window.py
"""

from qtchar import build_cartan, format_monomial, fundamental_qcharacter
from qtchar.serialize import emit_character

for rank in (2, 3):
    cd = build_cartan("AffineA", rank)
    ch = fundamental_qcharacter(cd, 0, 0, max_height=8)
    print(f"{cd.name} node 0, height <= 8: {len(ch)} monomials (truncated={ch.truncated})")
    high = [(m, c) for m, c in ch.items() if c > 1 or max(e for _, e in m.items()) > 1]
    print(f"  {len(high)} terms with a coefficient > 1 or a squared variable, e.g.")
    for m, c in high[:4]:
        print("    ", c, format_monomial(m), "height", ch.meta["v"][m].height())

print(emit_character(fundamental_qcharacter(build_cartan("AffineA", 2), 1, 0, max_height=3)).decode())
