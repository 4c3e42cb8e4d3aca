"""Atoms of a bifix-free language, plus the text and DOT formats."""
from bifixlab import atom_bound, atom_complexity, atom_witness, atoms
from bifixlab.experiments import atom_order
from bifixlab.io import export_dot, parse_dfa, serialize_dfa

n = 6
d = atom_witness(n)
found = atom_order(n, atoms(d))
print(len(found), "atoms")
for s in found:
    name = "{" + ",".join(map(str, sorted(s))) + "}"
    print(f"A{name:<8} complexity {atom_complexity(d, s):3d}  bound {atom_bound(n, s):3d}")

# text round trip
text = serialize_dfa(d)
print(text)
assert parse_dfa(text) == d

# Graphviz: pipe into `dot -Tsvg` to render
print(export_dot(d))
