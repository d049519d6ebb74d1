"""
The geometric Bockstein coproduct cannot work
==============================================

Give b the coproduct b|P0 + P0|b that its action on products dictates.  Since
b b = 0, the square of that image must vanish.  It does not, whatever parities
the first degrees of b and P0 are given: the two surviving tensors b P0 | P0 b
and P0 b | b P0 are distinct basis tensors and cannot cancel.
"""

from bpengine import geometric_obstruction, obstruction_report
from bpengine.coalgebra import expected_obstruction

for p in (3, 5):
    for r in (0, 1):
        for t in (0, 1):
            res = geometric_obstruction(p, r, t)
            assert res == expected_obstruction(p, r, t)
            print(f"p={p} parities (b,P0)=({r},{t}):  {res}")

rep = obstruction_report(3)
for line in rep.trace:
    print(line)
