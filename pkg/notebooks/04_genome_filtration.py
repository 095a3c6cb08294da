"""
The genome filtration of Searles modules
========================================

Group gapless tableaux into genome classes, order them, and check that the
images of the first j classes span a submodule with the right quotients.
"""

from genomic_schur import equivalence_classes, linear_extension, verify_theorem, sweep

for x in (1, 2):
    fam = [E for E in equivalence_classes((4, 2), 5) if E.family == x]
    for j, E in enumerate(linear_extension(fam), 1):
        print(f"family {x} E{j}: bottom cols {E.bottom_columns} top cols {E.top_columns}:",
              ", ".join(map(str, E.members)))

# Ordering only by bottom columns leaves ties; most tie-breaks break the filtration
report = verify_theorem((4, 2), 5, all_extensions=True)
for f in report.families:
    print(f"family {f.x}: ties {f.printed_ties}, extensions passing {f.extensions}")

reports = sweep(8)
print(sum(r.verified for r in reports), "of", len(reports), "cases verified up to n = 8")
