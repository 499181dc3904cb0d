"""
Self-consistent rankings
========================

Self-consistency refers to the ranking it is applied to, so a candidate
weak order either survives every dominance witness or it does not.
Enumerating all weak orders shows which rankings the axiom allows.
"""

from journal_axioms import WeakOrder, sc_admissible, sc_admissible_set, sc_dominates
from journal_axioms.instances import example_3_1, example_4_1

p = example_3_1()
for order in sc_admissible_set(p):
    print("admissible:", order.format(p.journals))

# %%
# A total tie fails: J1 and J4 face the same opponents, and J1 does better.
tie = WeakOrder(((0, 1, 2, 3),))
v = sc_admissible(p, tie)
print(v.describe(p.journals), v.witness.bijections)

# %%
# Witnesses may map competitors to different journals; then the ranking
# itself decides whether the witness applies.
q = example_4_1()
order = WeakOrder(((1,), (0,), (2,), (3,)))  # J2 above J1
w = sc_dominates(q, "J1", "J2", order)
print("J1 over J2 under", order.format(q.journals), "->", w.bijections, "strict" if w.strict else "weak")
print(len(sc_admissible_set(q)), "admissible orders for Example 4.1")
