"""
Least squares, flat and net-sum scores
======================================
"""

import numpy as np

from journal_axioms import flat, induced_order, least_squares, net_sum
from journal_axioms.instances import example_3_1, example_4_1

for p in (example_3_1(), example_4_1()):
    for method in (least_squares, net_sum, flat):
        s = method(p)
        print(f"{s.method:>13}: {np.round(s.as_array(), 6)}  ->  {induced_order(s).format(p.journals)}")
    print()
