"""
Bigraded bases and the primitive-Bockstein coproduct
=====================================================

With |P^k| = (2k(p-1), 1) and |b| = (1, 0), the admissible words give a basis
of each bigraded piece.  The coproduct b -> b|1 + 1|b, P^s -> sum P^i|P^j is
checked against every relation in a bounded range, then against the counit
and coassociativity axioms.
"""

from bpengine import (
    Element,
    admissible_basis,
    check_coassociativity,
    check_counit,
    check_relations,
    coproduct,
    singer_scheme,
)
from bpengine.terms import word_str

p = 3

for s in range(3):
    for n in range(0, 10):
        words = admissible_basis(p, n, s)
        if words:
            print(f"({n},{s}):", ", ".join(word_str(w) for w in words))

scheme = singer_scheme(p)
print("psi(b P1) =", coproduct(Element.word(p, -1, 1), scheme))

rep = check_relations(scheme, p, 8, 8)
print(rep.verdict, "-", rep.checked, "relation instances")

print("counit:", all(check_counit(scheme, p, 12, s).passed for s in range(3)))
print("coassociativity:", check_coassociativity(scheme, p, 12, 2).passed)
