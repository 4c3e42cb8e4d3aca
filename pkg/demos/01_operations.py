"""Operations on bifix-free languages and how far they push state complexity."""
from bifixlab import (bounds, concat, difference, intersection, reverse, star, state_complexity,
                      symmetric_difference, ternary_dialect, ternary_witness, union)

# the ternary stream and its b/c-swapped dialect, 9 states each
m, n = 9, 9
L = ternary_witness(m)
K = ternary_dialect(n)
print("L:", L)
print("K:", K)

# every operation next to its closed-form maximum
limit = bounds(m, n)
results = {
    "union": union(L, K),
    "symdiff": symmetric_difference(L, K),
    "intersection": intersection(L, K),
    "difference": difference(L, K),
    "concat": concat(L, L),
    "star": star(L),
    "reverse": reverse(L),
}
for name, d in results.items():
    print(f"{name:>12}: {state_complexity(d):4d}  (max {limit[name]})")

# reversal grows exponentially along the stream
for size in range(9, 13):
    print(size, state_complexity(reverse(ternary_witness(size))), 2 ** (size - 3) + 2)
