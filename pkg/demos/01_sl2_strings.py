"""Strings, 2-segments and the single-node kernel elements.

Run: python demos/01_sl2_strings.py
"""

from qtchar import F_i, L_i, Monomial, build_cartan, format_monomial, segment_decompose, \
    string_character

sl2 = build_cartan("A", 1)

# A shift multiset splits uniquely into pairwise non-special 2-segments.
for ms in ({0: 1, 2: 1, 4: 1}, {0: 1, 2: 2, 4: 1}, {0: 2}):
    segs = segment_decompose(1, ms)
    print(ms, "->", [(s.shifts, s.multiplicity) for s in segs])

# Each segment contributes a string: length k+1 gives k+2 terms.
for seg in segment_decompose(1, {0: 1, 2: 1}):
    print("string", seg.shifts)
    for m, c in string_character(sl2, 1, seg).items():
        print("   ", c, format_monomial(m))

# Beyond multiplicity one the string product picks up a second dominant term;
# the kernel element F_1 subtracts it.
m = Monomial({(1, 6): 2, (1, 8): 1})
print("\nL_1 vs F_1 for", format_monomial(m))
for name, ch in (("L_1", L_i(sl2, 1, m)), ("F_1", F_i(sl2, 1, m))):
    print(f"  {name}: {len(ch)} terms, sum {ch.coefficient_sum()}")
    for x, c in ch.items():
        print("     ", c, format_monomial(x))
