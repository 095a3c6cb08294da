"""
0-Hecke actions on tableaux
===========================

Build the Kim--Yoo module on gapless tableaux and the Searles module on
standard tableaux, check the defining relations and read off characteristics.
"""

import json

from genomic_schur import g_module, x_module, check_relations, characteristic_by_descents
from genomic_schur.hecke import ZERO

G = g_module((3, 2), 4)
for i in G.generators:
    for T in G.basis:
        out = G.act(i, T)
        print(f"pi_{i} . {T} = {'0' if out is ZERO else out}")

print(check_relations(G), check_relations(x_module((2, 1, 1))))
print(characteristic_by_descents(G))

# machine-readable form
print(json.dumps(G.to_json())[:200], "...")
