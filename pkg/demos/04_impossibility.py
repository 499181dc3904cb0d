"""
Aggregation versus self-consistency
===================================

Every self-consistent ranking of Example 4.1 puts J1 above J2.  After
uniting J3 and J4 the only self-consistent ranking ties them.  No method
can be self-consistent and keep the J1/J2 relation through the merge.
"""

from journal_axioms import (
    FamilySpec,
    certify_impossibility,
    check_ia,
    least_squares,
    sweep_impossibility,
    validate_certificate,
)
from journal_axioms.instances import example_4_1

p = example_4_1()
cert = certify_impossibility(p, ("J1", "J2"), ("J3", "J4"))
print(cert.describe())
print("re-validates:", validate_certificate(cert))

# %%
# Least squares is self-consistent, so it must give up invariance here.
for v in check_ia(least_squares, p, "strict"):
    print(v.describe())
print("weak-mode violations:", len(check_ia(least_squares, p, "weak")))

# %%
# The same clash across every tournament-like problem on four journals
# (takes about half a minute).
certs = sweep_impossibility(FamilySpec(4, frozenset({"unweighted", "loopless", "extremal"})))
print(len(certs), "certificates;", len({c.problem for c in certs}), "distinct problems")
