"""The four fundamental q-characters of F4 against the shipped golden data.

Run: python demos/02_f4_fundamentals.py
"""

import time

from qtchar import build_cartan, fundamental_qcharacter, fundamental_qt, load_appendix
from qtchar.checks import check_f4_appendix, check_multiplicity_one, format_table
from qtchar.fixtures import load_dimensions

f4 = build_cartan("F", 4)
print("Cartan matrix", f4.matrix, "symmetrizer", f4.symmetrizer)

classical = {}
for i in f4.nodes:
    t0 = time.perf_counter()
    classical[i] = ch = fundamental_qcharacter(f4, i, 0)
    print(f"node {i}: {len(ch):5d} monomials, dimension {ch.coefficient_sum():5d}"
          f"  ({time.perf_counter() - t0:.2f}s)")
print("expected (dimension, monomials):", load_dimensions())

# Terms with a coefficient other than 1 in the q,t-characters are listed in the
# golden file with printed heads Y_{i,1}; the check shifts by one to compare.
qt = {i: fundamental_qt(f4, i, 0) for i in f4.nodes}
print(format_table(check_f4_appendix(classical, qt)))
print("listed non-unit terms per node:", {k: len(v) for k, v in load_appendix().items()})

# F4 is outside the multiplicity-one statement; the general check shows why.
print(format_table([check_multiplicity_one(classical[3], scope="any")]))
