"""
Genomic Schur functions in the fundamental basis
================================================

Each graded piece of U_lambda is a sum of at most two Schur functions.
"""

from genomic_schur import genomic_schur, schur_via_syt, par_candidates, expand_monomials
from genomic_schur.qsym import swap_variables

lam = (4, 2)
for m, piece in genomic_schur(lam):
    shapes = sorted(par_candidates(lam, m))
    rhs = sum((schur_via_syt(mu) for mu in shapes), piece - piece)
    print(f"m={m}: {len(piece)} terms, Par = {shapes}, equal: {piece == rhs}")

# The pieces are symmetric even though each F_alpha is not
m, piece = genomic_schur((3, 2))[0]
poly = expand_monomials(piece, m + 1)
print(all(swap_variables(poly, j) == poly for j in range(1, m + 1)))
