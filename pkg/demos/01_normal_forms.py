"""
Admissible normal forms
=======================

Words in b and the powers P^k reduce to combinations of admissible words.
P^0 is an ordinary letter here, not the unit.
"""

from bpengine import BETA as b, Element, normalize, multiply, rewrite_step
from bpengine.parse import parse_expression

p = 3

# A single relation step: P1 P1 is inadmissible since 1 < 3 * 1
print("P1 P1 ->", rewrite_step((1, 1), p))

# Moving P0 past b: P0 b P0 -> b P0 P0
print("P0 b P0 ->", rewrite_step((0, b, 0), p))

# so b P0 b P0 b dies, by way of b b = 0
print("b P0 b P0 b =", normalize(Element.word(p, b, 0, b, 0, b)))

# Expressions can be typed in the ASCII syntax the CLI uses
x = parse_expression("P2 P1 + 2 P1 b P1", p)
print(x, "=", normalize(x))

# The product is concatenation followed by reduction
print("P1 * P1 P0 =", multiply(Element.word(p, 1), Element.word(p, 1, 0)))

# Same thing at p = 5, where the relation range is wider
print("p=5: P3 P1 =", normalize(Element.word(5, 3, 1)))
