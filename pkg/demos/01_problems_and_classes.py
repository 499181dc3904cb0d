"""
Citation matrices, domain classes and the extremal rewrite
==========================================================

A problem is a square matrix of citation counts: entry (i, j) is how often
journal i was cited by journal j.
"""

from journal_axioms import Problem, aggregate, classify, extremal_transform, matches_matrix
from journal_axioms.instances import example_3_1, example_4_1

p = example_3_1()
print(p)
print(classify(p))

# %%
# Matches count citations in both directions.
for row in matches_matrix(example_4_1()):
    print(" ".join(str(x) for x in row))

# %%
# Raw counts collapse onto absent / tied / decisive comparisons.  A pair
# cited 3:1 is decisive, 2:1 is close enough to call a tie.
raw = Problem.from_rows([
    [0, 3, 2, 0],
    [1, 4, 0, 0],
    [1, 0, 0, 7],
    [0, 0, 0, 0],
], ["Econometrica", "AER", "JET", "GEB"])
hat = extremal_transform(raw)
print(hat)
print(classify(hat))

# %%
# Aggregation unites two journals and forgets their mutual citations.
print(aggregate(example_4_1(), "J3", "J4"))
