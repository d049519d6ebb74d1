"""
Two subalgebras
===============

Without b, only the P^a P^b relations remain, and the power coproduct respects
them.  In the subalgebra generated by P^i and b P^i (with |b P^s| =
(2s(p-1)+1, 2)) the square of b P0 | P0 P0 + P0 P0 | b P0 vanishes: diagonal
terms die through P0 b P0 -> b P0 P0 and b b = 0, the cross terms cancel by
the Koszul sign.  This is finite evidence only.
"""

from bpengine import check_relations, cp_square_check, singer_scheme

rep = check_relations(singer_scheme(3), 3, 8, 8, families=("pp",))
print("pure powers:", rep.verdict, f"({rep.checked} instances)")

for p in (3, 5, 7):
    rep = cp_square_check(p)
    print(f"p={p}:", "vanishes" if rep.passed else "does NOT vanish")
    for line in rep.trace:
        print("   ", line)
