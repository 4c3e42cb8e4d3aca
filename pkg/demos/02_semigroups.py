"""Transition semigroups: the largest bifix-free semigroup and who reaches it."""
import numpy as np

from bifixlab import (classify_wbf, is_sub_wbf, syntactic_complexity, ternary_witness,
                      transition_semigroup, wbf_elements, wbf_size_formula, wstream_witness)
from bifixlab.semigroup import type_counts

# three example transformations of 6 states, one per type
for t in ([5, 1, 2, 3, 5, 5], [4, 5, 5, 5, 5, 5], [2, 4, 5, 4, 5, 5]):
    print(t, classify_wbf(t))

# the direct enumeration matches the counting formula
for n in (6, 7, 8):
    print(n, len(wbf_elements(n)), wbf_size_formula(n))

# the large-alphabet stream generates all of it
d = wstream_witness(6)
sg = transition_semigroup(d)
print("letters:", d.symbol_count, "semigroup:", sg.size, type_counts(sg))
print("same set as the enumeration:", sg.as_set() == set(wbf_elements(6)))

# ternary witness: a proper subsemigroup, far smaller
t9 = transition_semigroup(ternary_witness(9))
print("ternary(9):", t9.size, "inside W_bf:", is_sub_wbf(t9))

# elements are rows of an int array, handy for numpy statistics
images = np.array([len(set(row)) for row in t9.elements.tolist()])
print("image sizes:", np.bincount(images))

print("syntactic complexity wstream(7):", syntactic_complexity(wstream_witness(7)))
