"""
Gapless tableaux and Pechenik's bijection
=========================================

Enumerate increasing gapless tableaux of a two-row shape and send them to
standard tableaux.
"""

from genomic_schur import Tableau, enumerate_iglt, descent_set, phi, phi_inverse

# The five gapless tableaux of shape (3,2) with largest entry 4
for T in enumerate_iglt((3, 2), 4):
    trace = phi(T)
    print(f"{str(T):14} -> {str(trace.output):16} A={sorted(trace.A)} B={sorted(trace.B)}")

# A larger example: the two repeated values 2 and 5 leave the first row,
# 3 and 6 drop into the first column
T = Tableau.from_string("1 2 4 5 / 2 3 5 6")
S = phi(T).output
print(S, sorted(descent_set(T)), sorted(descent_set(S)))

# ... and the inverse puts them back
print(phi_inverse(S, (4, 4), 6))
